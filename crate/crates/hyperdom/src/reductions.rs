//! The two-stage reduction pipeline: peel a hypergraph down to a
//! spanning partial hypergraph in which every edge carries a degree-1
//! vertex, then shrink each edge by its unique degree-1 vertex and
//! deduplicate — plus a report evaluating the structural properties the
//! pipeline is expected to satisfy on extremal instances.
//!
//! Peeling repeatedly deletes an edge all of whose vertices currently
//! have degree at least two. Unlike [`Hypergraph::delete_edges`], the
//! peel never drops vertices: the result is spanning by construction
//! (and in fact no vertex can lose its last edge, because that edge
//! would have contained a degree-1 vertex).

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::hypergraph::{Edge, Hypergraph, RelabelMap, VertexId};
use crate::iso;
use crate::solvers;

/// How the peel chooses among eligible edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeelPolicy {
    /// Delete the canonically least eligible edge each round.
    Deterministic,
    /// Replay a caller-supplied deletion order; it must consist of
    /// eligible edges and reach a terminal state.
    GivenOrder(Vec<Edge>),
}

/// Everything the pipeline produced for one input.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionTrace {
    pub input: Hypergraph,
    /// Deleted edges, in deletion order.
    pub deleted_edges: Vec<Edge>,
    /// Spanning partial hypergraph where every edge has a degree-1 vertex.
    pub hstar: Hypergraph,
    /// Populated by [`shrink_to_hprime`].
    pub shrink: Option<ShrinkOutcome>,
}

impl ReductionTrace {
    pub fn hprime(&self) -> Option<&Hypergraph> {
        self.shrink.as_ref().map(|s| &s.hprime)
    }
}

/// Result of shrinking every edge of `hstar` by its unique degree-1
/// vertex, merging duplicate edges, and dropping isolated vertices.
#[derive(Clone, Debug, Serialize)]
pub struct ShrinkOutcome {
    /// Each `hstar` edge with its unique degree-1 vertex, canonical order.
    pub pendants: Vec<(Edge, VertexId)>,
    pub hprime: Hypergraph,
    /// Number of duplicate copies merged away while shrinking.
    pub dedup_count: usize,
    /// Old (input/hstar) ids to new `hprime` ids.
    pub relabeling: RelabelMap,
}

/// Run the peel. The result is spanning: same vertex count as the input.
pub fn peel_to_hstar(h: &Hypergraph, policy: &PeelPolicy) -> Result<ReductionTrace, Error> {
    if h.edge_count() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    let mut alive: Vec<bool> = vec![true; h.edge_count()];
    let mut degrees: Vec<usize> = h.degree_profile().degrees().to_vec();
    let mut deleted: Vec<Edge> = Vec::new();

    let eligible = |alive: &[bool], degrees: &[usize]| -> Vec<usize> {
        h.edges()
            .iter()
            .enumerate()
            .filter(|(i, e)| alive[*i] && e.iter().all(|v| degrees[v.index()] >= 2))
            .map(|(i, _)| i)
            .collect()
    };

    match policy {
        PeelPolicy::Deterministic => {
            // edges are stored in canonical order, so the first eligible
            // index is the canonically least eligible edge
            while let Some(&i) = eligible(&alive, &degrees).first() {
                alive[i] = false;
                for v in h.edges()[i].iter() {
                    degrees[v.index()] -= 1;
                }
                deleted.push(h.edges()[i].clone());
            }
        }
        PeelPolicy::GivenOrder(order) => {
            for e in order {
                let ok = eligible(&alive, &degrees)
                    .into_iter()
                    .find(|i| &h.edges()[*i] == e);
                let Some(i) = ok else {
                    return Err(Error::IneligibleEdge { edge: e.clone() });
                };
                alive[i] = false;
                for v in h.edges()[i].iter() {
                    degrees[v.index()] -= 1;
                }
                deleted.push(e.clone());
            }
            if !eligible(&alive, &degrees).is_empty() {
                return Err(Error::IncompletePeel);
            }
        }
    }

    let remaining: Vec<Edge> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| alive[*i])
        .map(|(_, e)| e.clone())
        .collect();
    let hstar = Hypergraph::from_edge_list(h.vertex_count(), remaining)
        .expect("peel result is a sub-list of validated edges");
    Ok(ReductionTrace {
        input: h.clone(),
        deleted_edges: deleted,
        hstar,
        shrink: None,
    })
}

/// Shrink every `hstar` edge by its unique degree-1 vertex. Fails when
/// an edge has no degree-1 vertex or more than one: for extremal inputs
/// uniqueness is guaranteed, so a violation signals the input is not
/// extremal, and picking a pendant silently would mask that.
pub fn shrink_to_hprime(mut trace: ReductionTrace) -> Result<ReductionTrace, Error> {
    let hstar = &trace.hstar;
    let degrees = hstar.degree_profile();
    let mut pendants: Vec<(Edge, VertexId)> = Vec::new();
    let mut shrunk: Vec<Edge> = Vec::new();
    for e in hstar.edges() {
        let ones: Vec<VertexId> = e.iter().filter(|v| degrees.degree(*v) == 1).collect();
        match ones.as_slice() {
            [] => return Err(Error::NoPendant { edge: e.clone() }),
            [v] => {
                if e.len() < 3 {
                    return Err(Error::EdgeTooSmallAfterShrink { edge: e.clone() });
                }
                pendants.push((e.clone(), *v));
                shrunk.push(Edge::from_sorted(e.iter().filter(|u| u != v).collect()));
            }
            many => {
                return Err(Error::MultiplePendants {
                    edge: e.clone(),
                    count: many.len(),
                })
            }
        }
    }
    shrunk.sort();
    let before = shrunk.len();
    shrunk.dedup();
    let dedup_count = before - shrunk.len();

    // drop every vertex isolated after the shrink (the removed pendants,
    // plus any vertex that was already isolated in hstar)
    let mut covered = vec![false; hstar.vertex_count()];
    for e in &shrunk {
        for v in e.iter() {
            covered[v.index()] = true;
        }
    }
    let kept: Vec<VertexId> = hstar.vertices().filter(|v| covered[v.index()]).collect();
    let entries: Vec<(VertexId, VertexId)> = kept
        .iter()
        .enumerate()
        .map(|(i, old)| (*old, VertexId::new(i + 1)))
        .collect();
    let relabeling = RelabelMap::from_entries(entries);
    let edges: Vec<Edge> = shrunk
        .iter()
        .map(|e| {
            Edge::from_sorted(
                e.iter()
                    .map(|v| relabeling.get(v).expect("covered vertex kept"))
                    .collect(),
            )
        })
        .collect();
    let hprime = Hypergraph::from_edge_list(kept.len(), edges)
        .expect("deduplicated shrunk edges form a valid hypergraph");
    trace.shrink = Some(ShrinkOutcome {
        pendants,
        hprime,
        dedup_count,
        relabeling,
    });
    Ok(trace)
}

/// Exhaustively explore every admissible deletion order and return one
/// trace per distinct terminal state. Distinct orders reaching the same
/// remaining-edge set are collapsed, which is sound for checking
/// properties of the resulting spanning partial hypergraph.
pub fn peel_all_orders(h: &Hypergraph) -> Result<Vec<ReductionTrace>, Error> {
    if h.edge_count() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    if h.edge_count() > 63 {
        return Err(Error::TooLarge {
            vertices: h.vertex_count(),
            edges: h.edge_count(),
        });
    }
    let m = h.edge_count();
    let start: u64 = (1u64 << m) - 1;

    let eligible = |mask: u64| -> Vec<usize> {
        let mut degrees = vec![0usize; h.vertex_count()];
        for (i, e) in h.edges().iter().enumerate() {
            if mask & (1 << i) != 0 {
                for v in e.iter() {
                    degrees[v.index()] += 1;
                }
            }
        }
        (0..m)
            .filter(|i| {
                mask & (1 << i) != 0
                    && h.edges()[*i].iter().all(|v| degrees[v.index()] >= 2)
            })
            .collect()
    };

    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut terminals: Vec<u64> = Vec::new();
    let mut stack = vec![start];
    seen.insert(start);
    while let Some(mask) = stack.pop() {
        let elig = eligible(mask);
        if elig.is_empty() {
            terminals.push(mask);
            continue;
        }
        for i in elig {
            let child = mask & !(1 << i);
            if seen.insert(child) {
                parent.insert(child, (mask, i));
                stack.push(child);
            }
        }
    }
    terminals.sort();

    let mut traces = Vec::new();
    for terminal in terminals {
        // reconstruct one deletion order reaching this terminal state
        let mut order_rev: Vec<Edge> = Vec::new();
        let mut cur = terminal;
        while cur != start {
            let (prev, i) = parent[&cur];
            order_rev.push(h.edges()[i].clone());
            cur = prev;
        }
        order_rev.reverse();
        traces.push(peel_to_hstar(h, &PeelPolicy::GivenOrder(order_rev))?);
    }
    Ok(traces)
}

/// One evaluated property clause.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// Every edge of the peeled hypergraph has exactly one degree-1 vertex.
    PendantUniqueness,
    /// The peeled hypergraph is r-uniform.
    ReducedUniformity,
    /// Domination and transversal numbers agree along the pipeline at r-1.
    EqualityChain,
    /// Every shrunk-hypergraph vertex has quasidegree between 2 and r-1.
    QuasidegreeBounds,
    /// Every shrunk-hypergraph edge has at most one degree-2 vertex.
    DegreeTwoPerEdge,
    /// The shrunk hypergraph has maximum degree r-1.
    MaxDegree,
    /// The shrunk edge count lies in [3(r-2), (r-1)^2-(r-1)+1].
    EdgeCountBounds,
    /// Edge count equals the degree sum over any single edge minus (r-2).
    EdgeCountIdentity,
    /// The shrunk vertex count equals (r-1)^2-(r-1)+1.
    VertexCount,
    /// The shrunk hypergraph has domination number 1.
    ShrunkDomination,
    /// Rank 4 only: the shrunk hypergraph is a Fano plane or a Fano plane
    /// minus one line.
    FanoIdentification,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::PendantUniqueness => "pendant-uniqueness",
            Clause::ReducedUniformity => "reduced-uniformity",
            Clause::EqualityChain => "equality-chain",
            Clause::QuasidegreeBounds => "quasidegree-bounds",
            Clause::DegreeTwoPerEdge => "degree2-per-edge",
            Clause::MaxDegree => "max-degree",
            Clause::EdgeCountBounds => "edge-count-bounds",
            Clause::EdgeCountIdentity => "edge-count-identity",
            Clause::VertexCount => "vertex-count",
            Clause::ShrunkDomination => "shrunk-domination",
            Clause::FanoIdentification => "fano-identification",
        };
        f.write_str(s)
    }
}

/// Verdict for one clause, with the concrete numbers that were checked.
#[derive(Clone, Debug, Serialize)]
pub struct ClauseRecord {
    pub clause: Clause,
    pub holds: bool,
    pub details: String,
}

/// Clause-by-clause record of a full pipeline run. Inputs that are not
/// extremal legitimately fail clauses; the report states facts, it does
/// not assume membership.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub clauses: Vec<ClauseRecord>,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn failing(&self) -> Vec<&ClauseRecord> {
        self.clauses.iter().filter(|c| !c.holds).collect()
    }
}

/// Run the full pipeline on `h` (treated as rank `r`) and evaluate every
/// clause against it.
pub fn reduction_report(h: &Hypergraph, r: usize) -> Result<LemmaReport, Error> {
    let trace = peel_to_hstar(h, &PeelPolicy::Deterministic)?;
    let mut clauses = Vec::new();

    let star_degrees = trace.hstar.degree_profile();
    let mut pendant_ok = true;
    let mut pendant_detail = String::new();
    for e in trace.hstar.edges() {
        let ones = e.iter().filter(|v| star_degrees.degree(*v) == 1).count();
        if ones != 1 {
            pendant_ok = false;
            pendant_detail = format!("edge {e} has {ones} degree-1 vertices");
            break;
        }
    }
    if pendant_ok {
        pendant_detail = format!(
            "all {} peeled edges have exactly one degree-1 vertex",
            trace.hstar.edge_count()
        );
    }
    clauses.push(ClauseRecord {
        clause: Clause::PendantUniqueness,
        holds: pendant_ok,
        details: pendant_detail,
    });

    let uniform = trace.hstar.is_uniform(r)?;
    clauses.push(ClauseRecord {
        clause: Clause::ReducedUniformity,
        holds: uniform,
        details: format!(
            "peeled edge sizes: {:?}, expected all {r}",
            trace
                .hstar
                .edges()
                .iter()
                .map(Edge::len)
                .collect::<Vec<_>>()
        ),
    });

    let gamma_input = solvers::domination_number(h)?.value;
    let gamma_star = solvers::domination_number(&trace.hstar)?.value;
    let tau_star = solvers::transversal_number(&trace.hstar)?.value;

    let shrink_result = shrink_to_hprime(trace);
    match shrink_result {
        Ok(trace) => {
            let outcome = trace.shrink.as_ref().expect("shrink succeeded");
            let hp = &outcome.hprime;
            let tau_prime = solvers::transversal_number(hp)?.value;

            let chain_ok = gamma_input == r - 1
                && gamma_star == r - 1
                && tau_star == r - 1
                && tau_prime == r - 1;
            clauses.push(ClauseRecord {
                clause: Clause::EqualityChain,
                holds: chain_ok,
                details: format!(
                    "domination(H)={gamma_input}, domination(H*)={gamma_star}, \
                     transversal(H*)={tau_star}, transversal(H')={tau_prime}, expected {}",
                    r - 1
                ),
            });

            let mut qd_ok = true;
            let mut qd_values = Vec::new();
            for v in hp.vertices() {
                let qd = solvers::quasidegree(hp, v)?.value;
                qd_values.push(qd);
                if qd < 2 || qd > r - 1 {
                    qd_ok = false;
                }
            }
            clauses.push(ClauseRecord {
                clause: Clause::QuasidegreeBounds,
                holds: qd_ok,
                details: format!("quasidegrees {qd_values:?}, expected within [2, {}]", r - 1),
            });

            let hp_degrees = hp.degree_profile();
            let mut deg2_ok = true;
            let mut deg2_detail = String::new();
            for e in hp.edges() {
                let twos = e.iter().filter(|v| hp_degrees.degree(*v) == 2).count();
                if twos > 1 {
                    deg2_ok = false;
                    deg2_detail = format!("edge {e} has {twos} degree-2 vertices");
                    break;
                }
            }
            if deg2_ok {
                deg2_detail = "every shrunk edge has at most one degree-2 vertex".to_string();
            }
            clauses.push(ClauseRecord {
                clause: Clause::DegreeTwoPerEdge,
                holds: deg2_ok,
                details: deg2_detail,
            });

            let max_deg = hp_degrees.max().unwrap_or(0);
            clauses.push(ClauseRecord {
                clause: Clause::MaxDegree,
                holds: max_deg == r - 1,
                details: format!("max degree {max_deg}, expected {}", r - 1),
            });

            let lo = 3 * (r - 2);
            let hi = (r - 1) * (r - 1) - (r - 1) + 1;
            let m_prime = hp.edge_count();
            clauses.push(ClauseRecord {
                clause: Clause::EdgeCountBounds,
                holds: lo <= m_prime && m_prime <= hi,
                details: format!("shrunk edge count {m_prime}, expected within [{lo}, {hi}]"),
            });

            let mut identity_ok = true;
            let mut identity_detail = String::new();
            for e in hp.edges() {
                let sum: usize = e.iter().map(|v| hp_degrees.degree(v)).sum();
                if sum < r - 2 || sum - (r - 2) != m_prime {
                    identity_ok = false;
                    identity_detail = format!(
                        "edge {e}: degree sum {sum} - {} != {m_prime}",
                        r - 2
                    );
                    break;
                }
            }
            if identity_ok {
                identity_detail = format!(
                    "degree sum over each edge minus {} equals {m_prime}",
                    r - 2
                );
            }
            clauses.push(ClauseRecord {
                clause: Clause::EdgeCountIdentity,
                holds: identity_ok,
                details: identity_detail,
            });

            clauses.push(ClauseRecord {
                clause: Clause::VertexCount,
                holds: hp.vertex_count() == hi,
                details: format!("shrunk vertex count {}, expected {hi}", hp.vertex_count()),
            });

            let gamma_prime = solvers::domination_number(hp)?.value;
            clauses.push(ClauseRecord {
                clause: Clause::ShrunkDomination,
                holds: gamma_prime == 1,
                details: format!("domination(H')={gamma_prime}, expected 1"),
            });

            if r == 4 {
                let fano = crate::constructions::generate(
                    crate::constructions::ConstructionName::Fano,
                )
                .hypergraph;
                let fano_minus = crate::constructions::generate(
                    crate::constructions::ConstructionName::FanoMinus,
                )
                .hypergraph;
                let is_f = iso::is_isomorphic(hp, &fano)?.is_some();
                let is_fm = iso::is_isomorphic(hp, &fano_minus)?.is_some();
                clauses.push(ClauseRecord {
                    clause: Clause::FanoIdentification,
                    holds: is_f || is_fm,
                    details: if is_f {
                        "shrunk hypergraph isomorphic to F".to_string()
                    } else if is_fm {
                        "shrunk hypergraph isomorphic to F-".to_string()
                    } else {
                        format!(
                            "shrunk hypergraph (n={}, m={}) matches neither F nor F-",
                            hp.vertex_count(),
                            hp.edge_count()
                        )
                    },
                });
            }
        }
        Err(shrink_err) => {
            clauses.push(ClauseRecord {
                clause: Clause::EqualityChain,
                holds: false,
                details: format!(
                    "domination(H)={gamma_input}, domination(H*)={gamma_star}, \
                     transversal(H*)={tau_star}, shrunk hypergraph unavailable ({shrink_err})"
                ),
            });
            for clause in [
                Clause::QuasidegreeBounds,
                Clause::DegreeTwoPerEdge,
                Clause::MaxDegree,
                Clause::EdgeCountBounds,
                Clause::EdgeCountIdentity,
                Clause::VertexCount,
                Clause::ShrunkDomination,
            ] {
                clauses.push(ClauseRecord {
                    clause,
                    holds: false,
                    details: format!("shrunk hypergraph unavailable ({shrink_err})"),
                });
            }
            if r == 4 {
                clauses.push(ClauseRecord {
                    clause: Clause::FanoIdentification,
                    holds: false,
                    details: format!("shrunk hypergraph unavailable ({shrink_err})"),
                });
            }
        }
    }

    Ok(LemmaReport { clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate, ConstructionName};

    fn named(name: ConstructionName) -> Hypergraph {
        generate(name).hypergraph
    }

    #[test]
    fn peel_is_identity_on_f1() {
        let f1 = named(ConstructionName::F1);
        let trace = peel_to_hstar(&f1, &PeelPolicy::Deterministic).unwrap();
        assert!(trace.deleted_edges.is_empty());
        assert_eq!(trace.hstar, f1);
    }

    #[test]
    fn peel_deletes_the_short_edge_of_f2() {
        let f2 = named(ConstructionName::F2);
        let trace = peel_to_hstar(&f2, &PeelPolicy::Deterministic).unwrap();
        assert_eq!(trace.deleted_edges.len(), 1);
        assert_eq!(trace.deleted_edges[0].len(), 3);
        // the leftover equals the pendant-extended 6-line hypergraph, label for label
        assert_eq!(trace.hstar, named(ConstructionName::F1Minus));
        assert_eq!(trace.hstar.vertex_count(), f2.vertex_count()); // spanning
    }

    #[test]
    fn peel_terminates_on_fano() {
        let f = named(ConstructionName::Fano);
        let trace = peel_to_hstar(&f, &PeelPolicy::Deterministic).unwrap();
        let degrees = trace.hstar.degree_profile();
        for e in trace.hstar.edges() {
            assert!(e.iter().any(|v| degrees.degree(v) == 1));
        }
        assert_eq!(trace.hstar.vertex_count(), 7);
    }

    #[test]
    fn shrink_recovers_the_plane_from_f1() {
        let trace = peel_to_hstar(&named(ConstructionName::F1), &PeelPolicy::Deterministic)
            .unwrap();
        let trace = shrink_to_hprime(trace).unwrap();
        let outcome = trace.shrink.as_ref().unwrap();
        assert_eq!(outcome.hprime, named(ConstructionName::Fano));
        assert_eq!(outcome.dedup_count, 0);
        // every pendant was one of the added vertices 8..=14
        for (_, v) in &outcome.pendants {
            assert!(v.get() >= 8);
        }
    }

    #[test]
    fn shrink_recovers_the_deleted_line_plane_from_f2() {
        let trace = peel_to_hstar(&named(ConstructionName::F2), &PeelPolicy::Deterministic)
            .unwrap();
        let trace = shrink_to_hprime(trace).unwrap();
        assert_eq!(
            trace.hprime().unwrap(),
            &named(ConstructionName::FanoMinus)
        );
    }

    #[test]
    fn shrink_rejects_multiple_pendants() {
        let single = Hypergraph::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        let trace = peel_to_hstar(&single, &PeelPolicy::Deterministic).unwrap();
        assert!(matches!(
            shrink_to_hprime(trace).unwrap_err(),
            Error::MultiplePendants { count: 4, .. }
        ));
    }

    #[test]
    fn given_order_validates_eligibility() {
        let f2 = named(ConstructionName::F2);
        let with_pendant = f2.edges().iter().find(|e| e.len() == 4).unwrap().clone();
        assert!(matches!(
            peel_to_hstar(&f2, &PeelPolicy::GivenOrder(vec![with_pendant])).unwrap_err(),
            Error::IneligibleEdge { .. }
        ));
        let three_edge = f2.edges().iter().find(|e| e.len() == 3).unwrap().clone();
        let trace =
            peel_to_hstar(&f2, &PeelPolicy::GivenOrder(vec![three_edge])).unwrap();
        assert_eq!(trace.hstar, named(ConstructionName::F1Minus));
        assert!(matches!(
            peel_to_hstar(&f2, &PeelPolicy::GivenOrder(vec![])).unwrap_err(),
            Error::IncompletePeel
        ));
    }

    #[test]
    fn all_orders_on_f3_reach_valid_states() {
        let f3 = named(ConstructionName::F3);
        let traces = peel_all_orders(&f3).unwrap();
        assert!(!traces.is_empty());
        for trace in &traces {
            assert_eq!(trace.hstar.vertex_count(), 13); // spanning
            let degrees = trace.hstar.degree_profile();
            for e in trace.hstar.edges() {
                assert_eq!(
                    e.iter().filter(|v| degrees.degree(*v) == 1).count(),
                    1,
                    "hstar edge without unique pendant after order {:?}",
                    trace.deleted_edges
                );
            }
            assert!(trace.hstar.is_uniform(4).unwrap());
        }
    }

    #[test]
    fn report_holds_on_f1() {
        let report = reduction_report(&named(ConstructionName::F1), 4).unwrap();
        assert!(report.all_hold(), "failing: {:?}", report.failing());
        let bounds = report
            .clauses
            .iter()
            .find(|c| c.clause == Clause::EdgeCountBounds)
            .unwrap();
        assert!(bounds.details.contains("7"));
    }

    #[test]
    fn report_identifies_residue_for_f3() {
        let report = reduction_report(&named(ConstructionName::F3), 4).unwrap();
        assert!(report.all_hold(), "failing: {:?}", report.failing());
        let fano_clause = report
            .clauses
            .iter()
            .find(|c| c.clause == Clause::FanoIdentification)
            .unwrap();
        assert!(fano_clause.details.contains("F-"));
    }

    #[test]
    fn report_records_failures_for_non_members() {
        let single = Hypergraph::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        let report = reduction_report(&single, 4).unwrap();
        assert!(!report.all_hold());
        let chain = report
            .clauses
            .iter()
            .find(|c| c.clause == Clause::EqualityChain)
            .unwrap();
        assert!(!chain.holds);
        assert!(chain.details.contains("domination(H)=1"));
    }
}
