//! Deterministic generators for the Fano plane, its derived extremal
//! hypergraphs, and seeded random instances for property tests.
//!
//! `F` is the Fano plane (7 points, 7 three-point lines, any two points
//! on exactly one line) under a fixed labeling; correctness rests on the
//! invariant suite in the tests, not on any particular drawing. `F-`
//! removes the canonically least line. `F1`/`F1-` extend every edge of
//! `F`/`F-` by a fresh degree-1 vertex. `F2` shrinks the canonically
//! least edge of `F1` back to a 3-edge by removing its degree-1 vertex.
//! `F3` adds one new 4-edge to `F1-` through two degree-2 and two
//! degree-1 vertices chosen so the result stays linear and intersecting.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::hypergraph::{Hypergraph, VertexId};

const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
];

/// Stable identifiers for the named constructions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ConstructionName {
    Fano,
    FanoMinus,
    F1,
    F1Minus,
    F2,
    F3,
}

impl ConstructionName {
    pub const ALL: [ConstructionName; 6] = [
        ConstructionName::Fano,
        ConstructionName::FanoMinus,
        ConstructionName::F1,
        ConstructionName::F1Minus,
        ConstructionName::F2,
        ConstructionName::F3,
    ];
}

impl fmt::Display for ConstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConstructionName::Fano => "F",
            ConstructionName::FanoMinus => "F-",
            ConstructionName::F1 => "F1",
            ConstructionName::F1Minus => "F1-",
            ConstructionName::F2 => "F2",
            ConstructionName::F3 => "F3",
        };
        f.write_str(s)
    }
}

impl FromStr for ConstructionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "F" => Ok(ConstructionName::Fano),
            "F-" => Ok(ConstructionName::FanoMinus),
            "F1" => Ok(ConstructionName::F1),
            "F1-" => Ok(ConstructionName::F1Minus),
            "F2" => Ok(ConstructionName::F2),
            "F3" => Ok(ConstructionName::F3),
            other => Err(Error::UnknownName {
                name: other.to_string(),
            }),
        }
    }
}

/// A generated instance together with its vertex degree classes.
#[derive(Clone, Debug, Serialize)]
pub struct NamedConstruction {
    pub name: ConstructionName,
    pub hypergraph: Hypergraph,
    /// Vertices grouped by degree (for `F1-` this is the partition into
    /// the six degree-1, three degree-2 and four degree-3 vertices).
    pub degree_classes: BTreeMap<usize, Vec<VertexId>>,
}

/// Build the fixed canonical instance for a construction name.
pub fn generate(name: ConstructionName) -> NamedConstruction {
    let hypergraph = match name {
        ConstructionName::Fano => fano(),
        ConstructionName::FanoMinus => fano_minus(),
        ConstructionName::F1 => extend_with_pendants(&fano()),
        ConstructionName::F1Minus => extend_with_pendants(&fano_minus()),
        ConstructionName::F2 => f2(),
        ConstructionName::F3 => f3(),
    };
    let degree_classes = hypergraph.degree_profile().classes();
    NamedConstruction {
        name,
        hypergraph,
        degree_classes,
    }
}

fn fano() -> Hypergraph {
    Hypergraph::new(7, FANO_LINES.iter().map(|l| l.to_vec()))
        .expect("the fixed line set is valid")
}

fn fano_minus() -> Hypergraph {
    let f = fano();
    let least = f.edges()[0].clone();
    let (h, _) = f.delete_edges(&[least]).expect("line exists");
    h
}

/// Add one fresh vertex to each edge, in canonical edge order.
fn extend_with_pendants(h: &Hypergraph) -> Hypergraph {
    let n = h.vertex_count();
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut ids: Vec<usize> = e.iter().map(VertexId::get).collect();
            ids.push(n + 1 + i);
            ids
        })
        .collect();
    Hypergraph::new(n + h.edge_count(), edges).expect("pendant extension is valid")
}

fn f2() -> Hypergraph {
    let f1 = extend_with_pendants(&fano());
    let least = f1.edges()[0].clone();
    let pendant = least
        .iter()
        .find(|v| f1.degree(*v).unwrap() == 1)
        .expect("every extended edge has a degree-1 vertex");
    let (h, _) = f1
        .shrink_edge(&least, pendant)
        .expect("pendant shrink of the least edge is valid");
    h
}

fn f3() -> Hypergraph {
    f3_candidates()
        .into_iter()
        .next()
        .expect("at least one admissible quadruple exists")
        .1
}

/// All quadruples (x1, x2, x3, x4) over the pendant-extended 6-line
/// hypergraph with degrees (2, 2, 1, 1) whose added edge keeps the
/// result linear and intersecting, in lexicographic quadruple order.
fn f3_candidates() -> Vec<([VertexId; 4], Hypergraph)> {
    let base = extend_with_pendants(&fano_minus());
    let classes = base.degree_profile().classes();
    let deg1 = classes.get(&1).cloned().unwrap_or_default();
    let deg2 = classes.get(&2).cloned().unwrap_or_default();
    let mut out = Vec::new();
    for (i, &x1) in deg2.iter().enumerate() {
        for &x2 in &deg2[i + 1..] {
            for (j, &x3) in deg1.iter().enumerate() {
                for &x4 in &deg1[j + 1..] {
                    let ids = vec![x1.get(), x2.get(), x3.get(), x4.get()];
                    let mut edges: Vec<Vec<usize>> = base
                        .edges()
                        .iter()
                        .map(|e| e.iter().map(VertexId::get).collect())
                        .collect();
                    edges.push(ids);
                    let Ok(candidate) = Hypergraph::new(base.vertex_count(), edges) else {
                        continue;
                    };
                    if candidate.is_linear() && candidate.is_intersecting() {
                        out.push(([x1, x2, x3, x4], candidate));
                    }
                }
            }
        }
    }
    out
}

/// All hypergraphs realizable as the `F3` construction; the audit that
/// the under-determined choice of quadruple does not matter (the tests
/// check all results are pairwise isomorphic).
pub fn enumerate_f3_candidates() -> Vec<Hypergraph> {
    f3_candidates().into_iter().map(|(_, h)| h).collect()
}

/// The four extremal constructions, in a fixed order.
pub fn family_l() -> Vec<NamedConstruction> {
    [
        ConstructionName::F1,
        ConstructionName::F1Minus,
        ConstructionName::F2,
        ConstructionName::F3,
    ]
    .into_iter()
    .map(generate)
    .collect()
}

/// Seeded deterministic random hypergraph: `m` distinct edges with sizes
/// in `[2, r]` over `n` vertices, rank exactly `r`, no isolated
/// vertices. The whole instance is resampled (up to 1000 attempts) until
/// no vertex is isolated.
pub fn random_hypergraph(
    r: usize,
    n: usize,
    m: usize,
    seed: u64,
) -> Result<Hypergraph, Error> {
    if r < 2 {
        return Err(Error::Infeasible {
            reason: format!("rank {r} below 2"),
        });
    }
    if n < r {
        return Err(Error::Infeasible {
            reason: format!("{n} vertices cannot carry a {r}-edge"),
        });
    }
    if m < 1 {
        return Err(Error::Infeasible {
            reason: "need at least one edge".to_string(),
        });
    }
    let available: usize = (2..=r).map(|k| binomial(n, k)).sum();
    if m > available {
        return Err(Error::Infeasible {
            reason: format!("only {available} distinct edges of size 2..={r} exist on {n} vertices"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..1000 {
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
        for i in 0..m {
            // the first edge has size exactly r so the rank is pinned
            let size = if i == 0 { r } else { rng.random_range(2..=r) };
            let mut tries = 0;
            loop {
                let edge = sample_subset(&mut rng, n, size);
                if !edges.contains(&edge) {
                    edges.push(edge);
                    break;
                }
                tries += 1;
                if tries > 500 {
                    continue 'attempt;
                }
            }
        }
        let mut covered = vec![false; n];
        for e in &edges {
            for &v in e {
                covered[v - 1] = true;
            }
        }
        if covered.iter().all(|c| *c) {
            return Hypergraph::new(n, edges);
        }
    }
    Err(Error::Infeasible {
        reason: format!("no isolated-vertex-free instance found for n={n}, m={m}, r={r}"),
    })
}

fn sample_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut picked = Vec::with_capacity(k);
    for _ in 0..k {
        let i = rng.random_range(0..pool.len());
        picked.push(pool.swap_remove(i));
    }
    picked.sort_unstable();
    picked
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
