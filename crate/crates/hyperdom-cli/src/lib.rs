//! Library side of the `hyperdom` command-line tool: the hypergraph
//! file format, verification report types, input resolution, and the
//! verification harnesses the subcommands dispatch to. Kept as a
//! library so the integration and acceptance tests can drive the same
//! code paths the binary uses.

pub mod fileio;
pub mod harness;
pub mod input;
pub mod report;
