//! Hypergraph isomorphism testing and canonical forms, used to
//! deduplicate search results and to state "up to relabeling" facts.
//!
//! The canonical form is computed by iterated partition refinement
//! (vertices split by degree and incident-edge-size data, then by the
//! classes of their co-members) followed by backtracking over the
//! remaining symmetry: each non-singleton cell of non-isolated vertices
//! is individualized in turn and the minimum encoding over all resulting
//! discrete labelings wins. Instances here are tiny, so no further
//! pruning is needed; a hard size guard keeps the search honest.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::hypergraph::{Edge, Hypergraph, VertexId};

/// Total-order key identifying a hypergraph up to isomorphism: the
/// encoded vertex count plus the canonical edge list under the canonical
/// labeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalCode(Vec<u32>);

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // [n;m|edge|edge|...] with ids dot-separated
        let n = self.0[0];
        let m = self.0[1];
        write!(f, "[{n};{m}")?;
        let mut i = 2;
        while i < self.0.len() {
            let len = self.0[i] as usize;
            let ids: Vec<String> = self.0[i + 1..i + 1 + len]
                .iter()
                .map(|v| v.to_string())
                .collect();
            write!(f, "|{}", ids.join("."))?;
            i += 1 + len;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical code plus the relabeling witness that produces it.
#[derive(Clone, Debug, Serialize)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// New id of each vertex, indexed by old 0-based position.
    pub relabeling: Vec<VertexId>,
}

const MAX_VERTICES: usize = 20;

/// Compute the canonical form. Two hypergraphs get equal codes exactly
/// when they are isomorphic.
pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm, Error> {
    let n = h.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            edges: h.edge_count(),
        });
    }
    if n == 0 {
        return Ok(CanonicalForm {
            code: CanonicalCode(vec![0, 0]),
            relabeling: Vec::new(),
        });
    }
    let incidence = h.incidence();
    let mut search = Search {
        h,
        incidence: &incidence,
        best: None,
    };
    let initial: Vec<Vec<usize>> = vec![(0..n).collect()];
    search.descend(initial);
    let (code, relabeling) = search.best.expect("search visits at least one labeling");
    Ok(CanonicalForm { code, relabeling })
}

struct Search<'a> {
    h: &'a Hypergraph,
    incidence: &'a [Vec<usize>],
    best: Option<(CanonicalCode, Vec<VertexId>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut partition: Vec<Vec<usize>>) {
        refine(self.h, self.incidence, &mut partition);
        // cells of isolated vertices never influence the code; only
        // cells with edge-incident vertices need individualization
        let target = partition
            .iter()
            .position(|cell| cell.len() > 1 && !self.incidence[cell[0]].is_empty());
        match target {
            None => self.record_leaf(&partition),
            Some(pos) => {
                let cell = partition[pos].clone();
                for &v in &cell {
                    let mut next = partition.clone();
                    let rest: Vec<usize> =
                        cell.iter().copied().filter(|u| *u != v).collect();
                    next[pos] = vec![v];
                    next.insert(pos + 1, rest);
                    self.descend(next);
                }
            }
        }
    }

    fn record_leaf(&mut self, partition: &[Vec<usize>]) {
        let n = self.h.vertex_count();
        let mut new_id = vec![0usize; n]; // 1-based new ids
        let mut next = 1;
        for cell in partition {
            // non-singleton cells here hold only isolated vertices, whose
            // relative order cannot affect the code; old-id order is fixed
            let mut members = cell.clone();
            members.sort_unstable();
            for v in members {
                new_id[v] = next;
                next += 1;
            }
        }
        let mut edges: Vec<Vec<u32>> = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut ids: Vec<u32> =
                    e.iter().map(|v| new_id[v.index()] as u32).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        edges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut code = Vec::with_capacity(2 + edges.iter().map(|e| e.len() + 1).sum::<usize>());
        code.push(n as u32);
        code.push(edges.len() as u32);
        for e in &edges {
            code.push(e.len() as u32);
            code.extend_from_slice(e);
        }
        let code = CanonicalCode(code);
        let better = match &self.best {
            None => true,
            Some((best_code, _)) => code < *best_code,
        };
        if better {
            let relabeling = new_id.iter().map(|id| VertexId::new(*id)).collect();
            self.best = Some((code, relabeling));
        }
    }
}

/// Split every cell by vertex signatures until stable. A signature
/// collects, per incident edge, the edge size and the sorted cell
/// indices of the edge's members; cells are replaced by their signature
/// groups in signature order, preserving outer cell positions.
fn refine(h: &Hypergraph, incidence: &[Vec<usize>], partition: &mut Vec<Vec<usize>>) {
    let n = h.vertex_count();
    loop {
        let mut cell_of = vec![0usize; n];
        for (ci, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let signature = |v: usize| -> Vec<Vec<usize>> {
            let mut sig: Vec<Vec<usize>> = incidence[v]
                .iter()
                .map(|&ei| {
                    let e = &h.edges()[ei];
                    let mut s: Vec<usize> = vec![e.len()];
                    let mut classes: Vec<usize> =
                        e.iter().map(|u| cell_of[u.index()]).collect();
                    classes.sort_unstable();
                    s.extend(classes);
                    s
                })
                .collect();
            sig.sort();
            sig
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(partition.len());
        let mut split = false;
        for cell in partition.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<Vec<usize>>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut groups: Vec<(Vec<Vec<usize>>, Vec<usize>)> = Vec::new();
            for (key, v) in keyed {
                match groups.last_mut() {
                    Some((k, g)) if *k == key => g.push(v),
                    _ => groups.push((key, vec![v])),
                }
            }
            if groups.len() > 1 {
                split = true;
            }
            next.extend(groups.into_iter().map(|(_, g)| g));
        }
        *partition = next;
        if !split {
            return;
        }
    }
}

/// Test isomorphism; on success return the vertex mapping (new id of
/// each `a` vertex, indexed by its 0-based position), already verified
/// by a direct edge-image check.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<Option<Vec<VertexId>>, Error> {
    if quick_reject(a, b) {
        return Ok(None);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if ca.code != cb.code {
        return Ok(None);
    }
    // map a through its canonical labeling, then back through b's
    let mut b_from_canonical = vec![VertexId::new(1); b.vertex_count()];
    for (old, new) in cb.relabeling.iter().enumerate() {
        b_from_canonical[new.index()] = VertexId::new(old + 1);
    }
    let mapping: Vec<VertexId> = ca
        .relabeling
        .iter()
        .map(|new| b_from_canonical[new.index()])
        .collect();
    debug_assert!(mapping_matches(a, b, &mapping));
    if !mapping_matches(a, b, &mapping) {
        return Ok(None);
    }
    Ok(Some(mapping))
}

/// Cheap invariant screen: vertex/edge counts, edge-size multiset,
/// degree sequence.
fn quick_reject(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return true;
    }
    let sizes = |h: &Hypergraph| {
        let mut s: Vec<usize> = h.edges().iter().map(Edge::len).collect();
        s.sort_unstable();
        s
    };
    if sizes(a) != sizes(b) {
        return true;
    }
    let degs = |h: &Hypergraph| {
        let mut d = h.degree_profile().degrees().to_vec();
        d.sort_unstable();
        d
    };
    degs(a) != degs(b)
}

/// Apply `mapping` to every edge of `a` and compare the result with
/// `b`'s edge set.
pub fn mapping_matches(a: &Hypergraph, b: &Hypergraph, mapping: &[VertexId]) -> bool {
    if mapping.len() != a.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut seen = vec![false; mapping.len()];
    for v in mapping {
        if v.get() > mapping.len() || seen[v.index()] {
            return false;
        }
        seen[v.index()] = true;
    }
    let mut images: Vec<Edge> = a
        .edges()
        .iter()
        .map(|e| {
            let mut ids: Vec<VertexId> =
                e.iter().map(|v| mapping[v.index()]).collect();
            ids.sort_unstable();
            Edge::from_sorted(ids)
        })
        .collect();
    images.sort();
    images.as_slice() == b.edges()
}
