//! Resolution of `<file|name>` command-line inputs: construction names
//! win, anything else is treated as a path.

use anyhow::Context;

use hyperdom::constructions::{generate, ConstructionName};
use hyperdom::Hypergraph;

use crate::fileio;

/// Load a hypergraph from a construction name (`F`, `F-`, `F1`, `F1-`,
/// `F2`, `F3`) or from a file in the standard format.
pub fn load(token: &str) -> anyhow::Result<(String, Hypergraph)> {
    if let Ok(name) = token.parse::<ConstructionName>() {
        return Ok((name.to_string(), generate(name).hypergraph));
    }
    let text = std::fs::read_to_string(token)
        .with_context(|| format!("reading hypergraph file `{token}`"))?;
    let h = fileio::parse(&text).with_context(|| format!("parsing `{token}`"))?;
    Ok((token.to_string(), h))
}
