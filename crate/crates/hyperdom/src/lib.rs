//! Exact combinatorics on small hypergraphs: domination, transversal,
//! matching and quasidegree solvers with certifying witnesses, the
//! peel/shrink reduction pipeline for intersecting hypergraphs, the
//! Fano-plane construction family, and isomorphism machinery for
//! "up to relabeling" claims.
//!
//! Everything is exact search over instances of at most a few dozen
//! vertices; there is no approximation anywhere. Hypergraph values are
//! immutable and all operations are pure functions, so values can be
//! shared freely across threads.
//!
//! ```
//! use hyperdom::constructions::{generate, ConstructionName};
//! use hyperdom::solvers;
//!
//! let f1 = generate(ConstructionName::F1).hypergraph;
//! assert_eq!(solvers::domination_number(&f1).unwrap().value, 3);
//! assert_eq!(solvers::matching_number(&f1).unwrap().value, 1);
//! ```

pub mod constructions;
pub mod error;
pub mod hypergraph;
pub mod iso;
pub mod reductions;
pub mod solvers;

pub use error::Error;
pub use hypergraph::{DegreeProfile, Edge, Hypergraph, RelabelMap, VertexId};
pub use solvers::{Certificate, InvariantKind, InvariantWitness};
