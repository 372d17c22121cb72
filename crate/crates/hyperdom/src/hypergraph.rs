//! Immutable hypergraph representation and the polynomial-time structural
//! queries and editing operations everything else is built on.
//!
//! A [`Hypergraph`] is a vertex count `n` (vertices are the ids `1..=n`)
//! plus a duplicate-free list of [`Edge`]s, each of size at least two.
//! The edge list is kept sorted under a fixed canonical order (shorter
//! edges first, ties broken lexicographically on the sorted member ids),
//! so two equal hypergraphs always have identical representations and
//! `==` is structural equality.
//!
//! Values are immutable after construction; every operation that "edits"
//! a hypergraph returns a fresh value, together with a [`RelabelMap`]
//! whenever vertices were removed and the survivors re-numbered.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::Error;

/// 1-based vertex identifier, contiguous within its hypergraph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexId(usize);

impl VertexId {
    /// Wrap a 1-based index. Panics on 0; range checks against a concrete
    /// hypergraph happen at the operation boundary.
    pub fn new(index: usize) -> VertexId {
        assert!(index >= 1, "vertex ids are 1-based");
        VertexId(index)
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// 0-based position, for indexing per-vertex arrays.
    pub(crate) fn index(self) -> usize {
        self.0 - 1
    }

    pub(crate) fn from_index(i: usize) -> VertexId {
        VertexId(i + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// An edge: a set of at least two vertices, stored sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Edge {
    members: Vec<VertexId>,
}

impl Edge {
    /// Build an edge from raw 1-based ids, rejecting repeats and sets of
    /// size below two.
    pub fn new<I: IntoIterator<Item = usize>>(ids: I) -> Result<Edge, Error> {
        let mut raw: Vec<usize> = ids.into_iter().collect();
        raw.sort_unstable();
        for pair in raw.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::RepeatedVertex { vertex: pair[0] });
            }
        }
        if raw.len() < 2 {
            return Err(Error::EdgeTooSmall { edge: raw });
        }
        if raw[0] == 0 {
            return Err(Error::BadVertexId { vertex: 0, n: 0 });
        }
        Ok(Edge {
            members: raw.into_iter().map(VertexId).collect(),
        })
    }

    /// Internal constructor for members already known to be sorted,
    /// distinct, and at least two.
    pub(crate) fn from_sorted(members: Vec<VertexId>) -> Edge {
        debug_assert!(members.len() >= 2);
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Edge { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    /// Number of vertices shared with another edge.
    pub fn intersection_size(&self, other: &Edge) -> usize {
        self.members.iter().filter(|v| other.contains(**v)).count()
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.intersection_size(other) == 0
    }

    /// Bitmask over 0-based vertex indices; only valid for n <= 64.
    pub(crate) fn mask(&self) -> u64 {
        self.members.iter().fold(0u64, |m, v| m | (1 << v.index()))
    }
}

impl Ord for Edge {
    /// Canonical edge order: shorter edges first, then lexicographic on
    /// the sorted id sequences.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Map from old vertex ids to new ones after vertices were removed and
/// the survivors compressed back to `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelabelMap {
    entries: Vec<(VertexId, VertexId)>,
}

impl RelabelMap {
    pub(crate) fn from_entries(entries: Vec<(VertexId, VertexId)>) -> RelabelMap {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        RelabelMap { entries }
    }

    pub fn identity(n: usize) -> RelabelMap {
        RelabelMap {
            entries: (1..=n).map(|i| (VertexId(i), VertexId(i))).collect(),
        }
    }

    /// New id of `old`, or `None` if the vertex was removed.
    pub fn get(&self, old: VertexId) -> Option<VertexId> {
        self.entries
            .binary_search_by_key(&old, |(o, _)| *o)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn entries(&self) -> &[(VertexId, VertexId)] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|(o, n)| o == n)
    }
}

/// Per-vertex degrees of a hypergraph, with the usual aggregates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
}

impl DegreeProfile {
    fn new(h: &Hypergraph) -> DegreeProfile {
        let mut degrees = vec![0usize; h.n];
        for e in &h.edges {
            for v in e.iter() {
                degrees[v.index()] += 1;
            }
        }
        DegreeProfile { degrees }
    }

    /// Degrees indexed by 0-based vertex position.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degrees[v.index()]
    }

    /// Minimum degree, `None` on a vertex-free hypergraph.
    pub fn min(&self) -> Option<usize> {
        self.degrees.iter().copied().min()
    }

    /// Maximum degree, `None` on a vertex-free hypergraph.
    pub fn max(&self) -> Option<usize> {
        self.degrees.iter().copied().max()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Vertices grouped by degree, each group sorted ascending.
    pub fn classes(&self) -> BTreeMap<usize, Vec<VertexId>> {
        let mut classes: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (i, d) in self.degrees.iter().enumerate() {
            classes.entry(*d).or_default().push(VertexId::from_index(i));
        }
        classes
    }
}

/// A finite hypergraph without multiple edges, all edges of size >= 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Validating constructor. Duplicate edges in the input are rejected,
    /// not silently merged.
    pub fn new<I, J>(n: usize, raw_edges: I) -> Result<Hypergraph, Error>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let edges = raw_edges
            .into_iter()
            .map(Edge::new)
            .collect::<Result<Vec<_>, _>>()?;
        Hypergraph::from_edge_list(n, edges)
    }

    /// Same validation, starting from already-built edges.
    pub fn from_edge_list(n: usize, mut edges: Vec<Edge>) -> Result<Hypergraph, Error> {
        for e in &edges {
            for v in e.iter() {
                if v.get() > n {
                    return Err(Error::BadVertexId { vertex: v.get(), n });
                }
            }
        }
        edges.sort();
        for pair in edges.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateEdge {
                    edge: pair[0].clone(),
                });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (1..=self.n).map(VertexId)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), Error> {
        if v.get() > self.n {
            Err(Error::BadVertexId {
                vertex: v.get(),
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Number of edges containing `v`; 0 identifies an isolated vertex.
    pub fn degree(&self, v: VertexId) -> Result<usize, Error> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self)
    }

    /// All vertices different from `v` sharing an edge with `v`, sorted.
    pub fn neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>, Error> {
        self.check_vertex(v)?;
        let mut nb: BTreeSet<VertexId> = BTreeSet::new();
        for e in self.edges.iter().filter(|e| e.contains(v)) {
            nb.extend(e.iter().filter(|u| *u != v));
        }
        Ok(nb.into_iter().collect())
    }

    /// Maximum edge size.
    pub fn rank(&self) -> Result<usize, Error> {
        self.edges
            .iter()
            .map(Edge::len)
            .max()
            .ok_or(Error::EmptyHypergraph)
    }

    /// True iff every edge has size exactly `k`.
    pub fn is_uniform(&self, k: usize) -> Result<bool, Error> {
        if self.edges.is_empty() {
            return Err(Error::EmptyHypergraph);
        }
        Ok(self.edges.iter().all(|e| e.len() == k))
    }

    /// Some pair of distinct edges sharing at least two vertices, if any.
    pub fn overlapping_pair(&self) -> Option<(&Edge, &Edge)> {
        for (i, e) in self.edges.iter().enumerate() {
            for f in &self.edges[i + 1..] {
                if e.intersection_size(f) >= 2 {
                    return Some((e, f));
                }
            }
        }
        None
    }

    /// True iff every two distinct edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.overlapping_pair().is_none()
    }

    /// Some pair of disjoint edges, if any.
    pub fn disjoint_pair(&self) -> Option<(&Edge, &Edge)> {
        for (i, e) in self.edges.iter().enumerate() {
            for f in &self.edges[i + 1..] {
                if e.is_disjoint(f) {
                    return Some((e, f));
                }
            }
        }
        None
    }

    /// True iff every two edges share at least one vertex.
    pub fn is_intersecting(&self) -> bool {
        self.disjoint_pair().is_none()
    }

    /// Remove the vertices in `xs` together with every edge meeting them.
    /// All remaining vertices survive (possibly isolated) and are
    /// compressed back to `1..`, preserving relative order.
    pub fn delete_vertices(&self, xs: &[VertexId]) -> Result<(Hypergraph, RelabelMap), Error> {
        for v in xs {
            self.check_vertex(*v)?;
        }
        let removed: BTreeSet<VertexId> = xs.iter().copied().collect();
        let kept: Vec<VertexId> = self.vertices().filter(|v| !removed.contains(v)).collect();
        let map = compress(&kept);
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| !removed.contains(&v)))
            .map(|e| relabel_edge(e, &map))
            .collect();
        let h = Hypergraph {
            n: kept.len(),
            edges,
        };
        debug_assert!(h.edges.windows(2).all(|w| w[0] < w[1]));
        Ok((h, map))
    }

    /// Remove the given edges; any vertex whose degree thereby drops to
    /// zero is removed as well (pre-existing isolated vertices stay).
    pub fn delete_edges(&self, es: &[Edge]) -> Result<(Hypergraph, RelabelMap), Error> {
        for e in es {
            if !self.contains_edge(e) {
                return Err(Error::UnknownEdge { edge: e.clone() });
            }
        }
        let removed: BTreeSet<&Edge> = es.iter().collect();
        let remaining: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| !removed.contains(e))
            .cloned()
            .collect();
        let old_deg = self.degree_profile();
        let mut new_deg = vec![0usize; self.n];
        for e in &remaining {
            for v in e.iter() {
                new_deg[v.index()] += 1;
            }
        }
        let kept: Vec<VertexId> = self
            .vertices()
            .filter(|v| new_deg[v.index()] > 0 || old_deg.degree(*v) == 0)
            .collect();
        let map = compress(&kept);
        let edges = remaining.iter().map(|e| relabel_edge(e, &map)).collect();
        let h = Hypergraph {
            n: kept.len(),
            edges,
        };
        Ok((h, map))
    }

    /// Replace `e` by `e \ {v}`. Refuses to merge with an existing equal
    /// edge; if `v` becomes isolated it is dropped and ids compressed.
    pub fn shrink_edge(&self, e: &Edge, v: VertexId) -> Result<(Hypergraph, RelabelMap), Error> {
        let pos = self
            .edges
            .binary_search(e)
            .map_err(|_| Error::UnknownEdge { edge: e.clone() })?;
        if !e.contains(v) {
            return Err(Error::VertexNotInEdge {
                vertex: v,
                edge: e.clone(),
            });
        }
        if e.len() < 3 {
            return Err(Error::EdgeTooSmallAfterShrink { edge: e.clone() });
        }
        let shrunk = Edge::from_sorted(e.iter().filter(|u| *u != v).collect());
        if self.contains_edge(&shrunk) {
            return Err(Error::DuplicateEdgeAfterShrink { edge: e.clone() });
        }
        let mut edges = self.edges.clone();
        edges[pos] = shrunk;
        edges.sort();
        let v_isolated = self.degree(v)? == 1;
        let kept: Vec<VertexId> = self
            .vertices()
            .filter(|u| !(v_isolated && *u == v))
            .collect();
        let map = compress(&kept);
        let edges = edges.iter().map(|e| relabel_edge(e, &map)).collect();
        Ok((
            Hypergraph {
                n: kept.len(),
                edges,
            },
            map,
        ))
    }

    /// Per-vertex lists of incident edge positions (0-based into `edges()`).
    pub(crate) fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.iter() {
                inc[v.index()].push(i);
            }
        }
        inc
    }
}

fn compress(kept: &[VertexId]) -> RelabelMap {
    RelabelMap::from_entries(
        kept.iter()
            .enumerate()
            .map(|(i, old)| (*old, VertexId::from_index(i)))
            .collect(),
    )
}

fn relabel_edge(e: &Edge, map: &RelabelMap) -> Edge {
    Edge::from_sorted(
        e.iter()
            .map(|v| map.get(v).expect("surviving edge references removed vertex"))
            .collect(),
    )
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={}:", self.n, self.edges.len())?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate, ConstructionName};

    fn fano() -> Hypergraph {
        generate(ConstructionName::Fano).hypergraph
    }

    #[test]
    fn smallest_legal_instance() {
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);
        assert!(h.is_uniform(2).unwrap());
    }

    #[test]
    fn constructor_rejects_small_edges() {
        let err = Hypergraph::new(3, vec![vec![1]]).unwrap_err();
        assert_eq!(err, Error::EdgeTooSmall { edge: vec![1] });
    }

    #[test]
    fn constructor_rejects_duplicates_and_bad_ids() {
        let err = Hypergraph::new(3, vec![vec![1, 2], vec![2, 1]]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { .. }));
        let err = Hypergraph::new(3, vec![vec![1, 4]]).unwrap_err();
        assert_eq!(err, Error::BadVertexId { vertex: 4, n: 3 });
        let err = Hypergraph::new(3, vec![vec![1, 1, 2]]).unwrap_err();
        assert_eq!(err, Error::RepeatedVertex { vertex: 1 });
    }

    #[test]
    fn canonical_edge_order_is_shortlex() {
        let h = Hypergraph::new(4, vec![vec![1, 2, 3], vec![3, 4], vec![1, 2, 4]]).unwrap();
        let shown: Vec<String> = h.edges().iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, vec!["{3,4}", "{1,2,3}", "{1,2,4}"]);
    }

    #[test]
    fn fano_degrees_and_neighborhoods() {
        let f = fano();
        for v in f.vertices() {
            assert_eq!(f.degree(v).unwrap(), 3);
            // three lines through v, two fresh points each
            assert_eq!(f.neighborhood(v).unwrap().len(), 6);
        }
    }

    #[test]
    fn pendant_degrees_in_f1() {
        let f1 = generate(ConstructionName::F1).hypergraph;
        for v in 8..=14 {
            assert_eq!(f1.degree(VertexId::new(v)).unwrap(), 1);
        }
        let fm = generate(ConstructionName::FanoMinus).hypergraph;
        // vertices of the deleted line keep two of their three lines
        for v in [1, 2, 3] {
            assert_eq!(fm.degree(VertexId::new(v)).unwrap(), 2);
        }
    }

    #[test]
    fn neighborhood_of_single_edge() {
        let h = Hypergraph::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        let nb = h.neighborhood(VertexId::new(2)).unwrap();
        assert_eq!(nb, vec![VertexId::new(1), VertexId::new(3), VertexId::new(4)]);
    }

    #[test]
    fn pendant_neighborhood_in_f1() {
        let f1 = generate(ConstructionName::F1).hypergraph;
        // pendant 8 was added to line {1,2,3}
        let nb = f1.neighborhood(VertexId::new(8)).unwrap();
        assert_eq!(nb, vec![VertexId::new(1), VertexId::new(2), VertexId::new(3)]);
    }

    #[test]
    fn rank_and_uniformity() {
        let f = fano();
        assert_eq!(f.rank().unwrap(), 3);
        assert!(f.is_uniform(3).unwrap());
        let f2 = generate(ConstructionName::F2).hypergraph;
        assert_eq!(f2.rank().unwrap(), 4);
        assert!(!f2.is_uniform(4).unwrap());
        let f1 = generate(ConstructionName::F1).hypergraph;
        assert_eq!(f1.rank().unwrap(), 4);
        assert!(f1.is_uniform(4).unwrap());
        let empty = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(empty.rank().unwrap_err(), Error::EmptyHypergraph);
    }

    #[test]
    fn linearity_witness() {
        let f = fano();
        assert!(f.is_linear());
        let h = Hypergraph::new(4, vec![vec![1, 2, 3], vec![1, 2, 4]]).unwrap();
        assert!(!h.is_linear());
        let (a, b) = h.overlapping_pair().unwrap();
        assert_eq!(a.intersection_size(b), 2);
    }

    #[test]
    fn intersecting_check() {
        assert!(fano().is_intersecting());
        let h = Hypergraph::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(!h.is_intersecting());
        assert!(h.disjoint_pair().is_some());
        let f3 = generate(ConstructionName::F3).hypergraph;
        assert!(f3.is_intersecting());
    }

    #[test]
    fn delete_vertices_identity_on_empty_set() {
        let f = fano();
        let (g, map) = f.delete_vertices(&[]).unwrap();
        assert_eq!(g, f);
        assert!(map.is_identity());
    }

    #[test]
    fn delete_vertex_from_fano() {
        let f = fano();
        let (g, map) = f.delete_vertices(&[VertexId::new(1)]).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 4); // 3 of the 7 lines pass through any point
        // frozen expectation: lines avoiding 1, relabelled by 2..7 -> 1..6
        let expect = Hypergraph::new(
            6,
            vec![vec![1, 3, 5], vec![1, 4, 6], vec![2, 3, 6], vec![2, 4, 5]],
        )
        .unwrap();
        assert_eq!(g, expect);
        assert_eq!(map.get(VertexId::new(1)), None);
        assert_eq!(map.get(VertexId::new(7)), Some(VertexId::new(6)));
    }

    #[test]
    fn delete_vertices_can_remove_every_edge() {
        let f1m = generate(ConstructionName::F1Minus).hypergraph;
        let v3: Vec<VertexId> = [4, 5, 6, 7].iter().map(|v| VertexId::new(*v)).collect();
        let (g, _) = f1m.delete_vertices(&v3).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 9);
    }

    #[test]
    fn delete_edge_from_fano_keeps_vertices() {
        let f = fano();
        let least = f.edges()[0].clone();
        let (g, map) = f.delete_edges(&[least]).unwrap();
        assert_eq!(g.vertex_count(), 7); // all degrees were 3, nobody isolated
        assert_eq!(g.edge_count(), 6);
        assert!(map.is_identity());
        let (same, _) = f.delete_edges(&[]).unwrap();
        assert_eq!(same, f);
    }

    #[test]
    fn delete_edges_drops_resulting_isolated_vertices() {
        let f1 = generate(ConstructionName::F1).hypergraph;
        let e = f1.edges()[0].clone();
        let (g, map) = f1.delete_edges(&[e]).unwrap();
        // the pendant of the deleted edge had degree 1 and disappears
        assert_eq!(g.vertex_count(), 13);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(map.get(VertexId::new(8)), None);
    }

    #[test]
    fn delete_edges_keeps_preexisting_isolated_vertices() {
        let h = Hypergraph::new(4, vec![vec![1, 2], vec![2, 3]]).unwrap(); // vertex 4 isolated
        let e = h.edges()[0].clone();
        let (g, _) = h.delete_edges(&[e]).unwrap();
        // 1 became isolated and is dropped; 4 was already isolated and stays
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn delete_edges_unknown_edge() {
        let h = Hypergraph::new(4, vec![vec![1, 2]]).unwrap();
        let alien = Edge::new(vec![3, 4]).unwrap();
        assert!(matches!(
            h.delete_edges(&[alien]).unwrap_err(),
            Error::UnknownEdge { .. }
        ));
    }

    #[test]
    fn shrink_edge_basics() {
        let h = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
        let e = h.edges()[0].clone();
        let (g, map) = h.shrink_edge(&e, VertexId::new(3)).unwrap();
        assert_eq!(g, Hypergraph::new(2, vec![vec![1, 2]]).unwrap());
        assert_eq!(map.get(VertexId::new(3)), None);

        let h = Hypergraph::new(3, vec![vec![1, 2], vec![1, 2, 3]]).unwrap();
        let e = Edge::new(vec![1, 2, 3]).unwrap();
        assert!(matches!(
            h.shrink_edge(&e, VertexId::new(3)).unwrap_err(),
            Error::DuplicateEdgeAfterShrink { .. }
        ));

        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let e = Edge::new(vec![1, 2]).unwrap();
        assert!(matches!(
            h.shrink_edge(&e, VertexId::new(1)).unwrap_err(),
            Error::EdgeTooSmallAfterShrink { .. }
        ));
        assert!(matches!(
            h.shrink_edge(&e, VertexId::new(3)).unwrap_err(),
            Error::VertexNotInEdge { .. }
        ));
    }

    #[test]
    fn degree_sum_equals_size_sum() {
        for h in [
            fano(),
            generate(ConstructionName::F1).hypergraph,
            generate(ConstructionName::F3).hypergraph,
        ] {
            let sizes: usize = h.edges().iter().map(Edge::len).sum();
            assert_eq!(h.degree_profile().sum(), sizes);
        }
    }

    #[test]
    fn edits_never_produce_bad_edges() {
        let f1 = generate(ConstructionName::F1).hypergraph;
        let (g, _) = f1.delete_vertices(&[VertexId::new(1), VertexId::new(9)]).unwrap();
        for e in g.edges() {
            assert!(e.len() >= 2);
        }
        assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
    }
}
