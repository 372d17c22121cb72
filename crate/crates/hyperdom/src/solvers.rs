//! Exact computation of the four hypergraph invariants — domination
//! number, transversal number, matching number and per-vertex
//! quasidegree — each with a certifying witness, plus a deliberately
//! dumb brute-force oracle used to cross-validate the solvers.
//!
//! The dedicated solvers find the optimal value by iterative deepening
//! with branch-and-bound over bitmask state, then extract the
//! lexicographically least optimal certificate. The oracle enumerates
//! plain subsets in increasing size with no shared machinery, so the
//! two paths are structurally independent.

use serde::Serialize;

use crate::error::Error;
use crate::hypergraph::{Edge, Hypergraph, VertexId};

/// Which invariant a witness certifies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvariantKind {
    Domination,
    Transversal,
    Matching,
    Quasidegree(VertexId),
}

/// The certifying object: a vertex set for domination/transversal, an
/// edge set for matching/quasidegree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Certificate {
    Vertices(Vec<VertexId>),
    Edges(Vec<Edge>),
}

/// An optimal invariant value together with a certificate attaining it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InvariantWitness {
    pub kind: InvariantKind,
    pub value: usize,
    pub certificate: Certificate,
}

impl InvariantWitness {
    pub fn certificate_vertices(&self) -> Option<&[VertexId]> {
        match &self.certificate {
            Certificate::Vertices(vs) => Some(vs),
            Certificate::Edges(_) => None,
        }
    }

    pub fn certificate_edges(&self) -> Option<&[Edge]> {
        match &self.certificate {
            Certificate::Edges(es) => Some(es),
            Certificate::Vertices(_) => None,
        }
    }
}

/// Bitmask view of an instance shared by the dedicated solvers.
struct Masks {
    n: usize,
    full_vertices: u64,
    all_edges: u64,
    /// per edge: mask of its vertices
    edge_vertices: Vec<u64>,
    /// per vertex: mask of edge positions containing it
    vertex_edges: Vec<u64>,
    /// per vertex: {v} union N(v) as a vertex mask
    closed_nb: Vec<u64>,
}

impl Masks {
    fn build(h: &Hypergraph) -> Result<Masks, Error> {
        let n = h.vertex_count();
        let m = h.edge_count();
        if n > 64 || m > 64 {
            return Err(Error::TooLarge {
                vertices: n,
                edges: m,
            });
        }
        let edge_vertices: Vec<u64> = h.edges().iter().map(Edge::mask).collect();
        let mut vertex_edges = vec![0u64; n];
        let mut closed_nb: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for (j, e) in h.edges().iter().enumerate() {
            for v in e.iter() {
                vertex_edges[v.index()] |= 1 << j;
                closed_nb[v.index()] |= edge_vertices[j];
            }
        }
        Ok(Masks {
            n,
            full_vertices: full_mask(n),
            all_edges: full_mask(m),
            edge_vertices,
            vertex_edges,
            closed_nb,
        })
    }
}

fn full_mask(bits: usize) -> u64 {
    if bits == 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Minimum dominating set. Isolated vertices cannot be dominated, so
/// every dominating set contains them; the solver forces them in rather
/// than rejecting the instance.
pub fn domination_number(h: &Hypergraph) -> Result<InvariantWitness, Error> {
    if h.vertex_count() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    let masks = Masks::build(h)?;
    let mut value = None;
    for k in 0..=masks.n {
        if dominating_exists(&masks, 0, k) {
            value = Some(k);
            break;
        }
    }
    let value = value.expect("the full vertex set always dominates");
    let cert = lex_least_vertex_set(masks.n, value, |set| {
        let covered = set
            .iter()
            .fold(0u64, |acc, i| acc | masks.closed_nb[*i]);
        covered == masks.full_vertices
    })
    .expect("a dominating set of the optimal size exists");
    let witness = InvariantWitness {
        kind: InvariantKind::Domination,
        value,
        certificate: Certificate::Vertices(to_vertices(&cert)),
    };
    confirm(h, &witness);
    Ok(witness)
}

fn dominating_exists(masks: &Masks, covered: u64, picks_left: usize) -> bool {
    if covered == masks.full_vertices {
        return true;
    }
    if picks_left == 0 {
        return false;
    }
    // branch on the undominated vertex with the fewest potential dominators
    let target = bits(masks.full_vertices & !covered)
        .min_by_key(|i| masks.closed_nb[*i].count_ones())
        .expect("some vertex is uncovered");
    for c in bits(masks.closed_nb[target]) {
        if dominating_exists(masks, covered | masks.closed_nb[c], picks_left - 1) {
            return true;
        }
    }
    false
}

/// Minimum transversal (vertex set meeting every edge).
pub fn transversal_number(h: &Hypergraph) -> Result<InvariantWitness, Error> {
    if h.edge_count() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    let masks = Masks::build(h)?;
    let mut value = None;
    for k in 0..=masks.n {
        if transversal_exists(&masks, masks.all_edges, k) {
            value = Some(k);
            break;
        }
    }
    let value = value.expect("the full vertex set hits every edge");
    let cert = lex_least_vertex_set(masks.n, value, |set| {
        let hit = set
            .iter()
            .fold(0u64, |acc, i| acc | masks.vertex_edges[*i]);
        hit == masks.all_edges
    })
    .expect("a transversal of the optimal size exists");
    let witness = InvariantWitness {
        kind: InvariantKind::Transversal,
        value,
        certificate: Certificate::Vertices(to_vertices(&cert)),
    };
    confirm(h, &witness);
    Ok(witness)
}

fn transversal_exists(masks: &Masks, uncovered: u64, picks_left: usize) -> bool {
    if uncovered == 0 {
        return true;
    }
    if picks_left == 0 || disjoint_lower_bound(masks, uncovered) > picks_left {
        return false;
    }
    // branch on the vertices of an uncovered edge of minimum size
    let e = bits(uncovered)
        .min_by_key(|j| masks.edge_vertices[*j].count_ones())
        .expect("some edge is uncovered");
    for v in bits(masks.edge_vertices[e]) {
        if transversal_exists(masks, uncovered & !masks.vertex_edges[v], picks_left - 1) {
            return true;
        }
    }
    false
}

/// Greedy packing of pairwise disjoint uncovered edges; each needs its
/// own transversal vertex.
fn disjoint_lower_bound(masks: &Masks, uncovered: u64) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for j in bits(uncovered) {
        if masks.edge_vertices[j] & used == 0 {
            used |= masks.edge_vertices[j];
            count += 1;
        }
    }
    count
}

/// Maximum matching (set of pairwise disjoint edges).
pub fn matching_number(h: &Hypergraph) -> Result<InvariantWitness, Error> {
    if h.edge_count() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    let masks = Masks::build(h)?;
    let m = h.edge_count();
    let mut best = 0usize;
    matching_max(&masks, 0, 0, 0, &mut best);
    let cert = lex_least_edge_set(m, best, |set| {
        let mut used = 0u64;
        for j in set {
            if masks.edge_vertices[*j] & used != 0 {
                return false;
            }
            used |= masks.edge_vertices[*j];
        }
        true
    })
    .expect("a matching of the optimal size exists");
    let witness = InvariantWitness {
        kind: InvariantKind::Matching,
        value: best,
        certificate: Certificate::Edges(to_edges(h, &cert)),
    };
    confirm(h, &witness);
    Ok(witness)
}

fn matching_max(masks: &Masks, next: usize, used: u64, count: usize, best: &mut usize) {
    if count > *best {
        *best = count;
    }
    let m = masks.edge_vertices.len();
    if count + (m - next) <= *best {
        return;
    }
    for j in next..m {
        if masks.edge_vertices[j] & used == 0 {
            matching_max(masks, j + 1, used | masks.edge_vertices[j], count + 1, best);
        }
    }
}

/// Quasidegree of `v`: the largest family of edges through `v` whose
/// pairwise intersections all equal exactly `{v}`. A single edge
/// qualifies on its own, so `qd(v) = 1` whenever `d(v) = 1`, and
/// `qd(v) = 0` exactly when `v` is isolated.
pub fn quasidegree(h: &Hypergraph, v: VertexId) -> Result<InvariantWitness, Error> {
    if v.get() > h.vertex_count() {
        return Err(Error::BadVertexId {
            vertex: v.get(),
            n: h.vertex_count(),
        });
    }
    let masks = Masks::build(h)?;
    let incident: Vec<usize> = bits(masks.vertex_edges[v.index()]).collect();
    let k = incident.len();
    let vbit = 1u64 << v.index();
    // compatibility graph on the incident edges: adjacent iff the two
    // edges meet exactly in {v}; quasidegree is its maximum clique
    let mut compat = vec![0u64; k];
    for a in 0..k {
        for b in a + 1..k {
            if masks.edge_vertices[incident[a]] & masks.edge_vertices[incident[b]] == vbit {
                compat[a] |= 1 << b;
                compat[b] |= 1 << a;
            }
        }
    }
    let mut best = 0usize;
    clique_max(&compat, full_mask(k), 0, &mut best);
    let cert = lex_least_edge_set(k, best, |set| {
        set.iter().enumerate().all(|(i, a)| {
            set[i + 1..]
                .iter()
                .all(|b| compat[*a] & (1 << *b) != 0)
        })
    })
    .expect("a compatible family of the optimal size exists");
    let witness = InvariantWitness {
        kind: InvariantKind::Quasidegree(v),
        value: best,
        certificate: Certificate::Edges(to_edges_from(h, &incident, &cert)),
    };
    confirm(h, &witness);
    Ok(witness)
}

fn clique_max(compat: &[u64], candidates: u64, count: usize, best: &mut usize) {
    if count > *best {
        *best = count;
    }
    if count + candidates.count_ones() as usize <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        let a = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        clique_max(compat, rest & compat[a], count + 1, best);
    }
}

/// Lexicographically least `k`-subset of `0..n` satisfying `feasible`,
/// found by depth-first search in ascending order.
fn lex_least_vertex_set(
    n: usize,
    k: usize,
    feasible: impl Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    fn go(
        n: usize,
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        feasible: &impl Fn(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return feasible(chosen);
        }
        for v in start..n {
            if n - v < k - chosen.len() {
                break;
            }
            chosen.push(v);
            if go(n, k, v + 1, chosen, feasible) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    go(n, k, 0, &mut chosen, &feasible).then_some(chosen)
}

/// Same search over edge positions; feasibility may also prune prefixes
/// because all our edge-set predicates are downward closed.
fn lex_least_edge_set(
    m: usize,
    k: usize,
    feasible: impl Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    fn go(
        m: usize,
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        feasible: &impl Fn(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for j in start..m {
            if m - j < k - chosen.len() {
                break;
            }
            chosen.push(j);
            if feasible(chosen) && go(m, k, j + 1, chosen, feasible) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    go(m, k, 0, &mut chosen, &feasible).then_some(chosen)
}

fn to_vertices(indices: &[usize]) -> Vec<VertexId> {
    indices.iter().map(|i| VertexId::new(i + 1)).collect()
}

fn to_edges(h: &Hypergraph, positions: &[usize]) -> Vec<Edge> {
    positions.iter().map(|j| h.edges()[*j].clone()).collect()
}

fn to_edges_from(h: &Hypergraph, incident: &[usize], positions: &[usize]) -> Vec<Edge> {
    positions
        .iter()
        .map(|i| h.edges()[incident[*i]].clone())
        .collect()
}

fn confirm(h: &Hypergraph, w: &InvariantWitness) {
    if let Err(msg) = verify_witness(h, w) {
        panic!("solver returned an invalid certificate: {msg}");
    }
}

/// Re-check a witness directly against the definitions, independently of
/// any search code. Validates feasibility and cardinality, not optimality
/// (optimality is cross-checked against the brute-force oracle in tests).
pub fn verify_witness(h: &Hypergraph, w: &InvariantWitness) -> Result<(), String> {
    match (&w.kind, &w.certificate) {
        (InvariantKind::Domination, Certificate::Vertices(d)) => {
            check_vertex_set(h, d, w.value)?;
            for v in h.vertices() {
                if d.contains(&v) {
                    continue;
                }
                let dominated = h
                    .edges()
                    .iter()
                    .any(|e| e.contains(v) && d.iter().any(|u| e.contains(*u)));
                if !dominated {
                    return Err(format!("vertex {v} is not dominated"));
                }
            }
            Ok(())
        }
        (InvariantKind::Transversal, Certificate::Vertices(t)) => {
            check_vertex_set(h, t, w.value)?;
            for e in h.edges() {
                if !t.iter().any(|u| e.contains(*u)) {
                    return Err(format!("edge {e} is not hit"));
                }
            }
            Ok(())
        }
        (InvariantKind::Matching, Certificate::Edges(es)) => {
            check_edge_set(h, es, w.value)?;
            for (i, e) in es.iter().enumerate() {
                for f in &es[i + 1..] {
                    if !e.is_disjoint(f) {
                        return Err(format!("edges {e} and {f} intersect"));
                    }
                }
            }
            Ok(())
        }
        (InvariantKind::Quasidegree(v), Certificate::Edges(es)) => {
            check_edge_set(h, es, w.value)?;
            for e in es {
                if !e.contains(*v) {
                    return Err(format!("edge {e} misses vertex {v}"));
                }
            }
            for (i, e) in es.iter().enumerate() {
                for f in &es[i + 1..] {
                    let shared: Vec<VertexId> =
                        e.iter().filter(|u| f.contains(*u)).collect();
                    if shared != vec![*v] {
                        return Err(format!(
                            "edges {e} and {f} meet in more than just {v}"
                        ));
                    }
                }
            }
            Ok(())
        }
        _ => Err("certificate shape does not match invariant kind".into()),
    }
}

fn check_vertex_set(h: &Hypergraph, vs: &[VertexId], value: usize) -> Result<(), String> {
    if vs.len() != value {
        return Err(format!("certificate size {} != value {}", vs.len(), value));
    }
    for (i, v) in vs.iter().enumerate() {
        if v.get() > h.vertex_count() {
            return Err(format!("vertex {v} out of range"));
        }
        if vs[i + 1..].contains(v) {
            return Err(format!("vertex {v} listed twice"));
        }
    }
    Ok(())
}

fn check_edge_set(h: &Hypergraph, es: &[Edge], value: usize) -> Result<(), String> {
    if es.len() != value {
        return Err(format!("certificate size {} != value {}", es.len(), value));
    }
    for (i, e) in es.iter().enumerate() {
        if !h.contains_edge(e) {
            return Err(format!("edge {e} is not in the hypergraph"));
        }
        if es[i + 1..].contains(e) {
            return Err(format!("edge {e} listed twice"));
        }
    }
    Ok(())
}

/// Exhaustive-enumeration oracle with the same contracts as the
/// dedicated solvers. Intentionally dumb: plain subset enumeration in
/// increasing size with nothing but feasibility checks, guarded against
/// blowup.
pub fn brute_force_invariant(
    h: &Hypergraph,
    kind: InvariantKind,
) -> Result<InvariantWitness, Error> {
    if h.vertex_count() > 20 || h.edge_count() > 12 {
        return Err(Error::TooLarge {
            vertices: h.vertex_count(),
            edges: h.edge_count(),
        });
    }
    match kind {
        InvariantKind::Domination => {
            if h.vertex_count() == 0 {
                return Err(Error::EmptyHypergraph);
            }
            let vs: Vec<VertexId> = h.vertices().collect();
            let w = first_feasible_by_size(&vs, |d| dominates(h, d));
            Ok(InvariantWitness {
                kind,
                value: w.len(),
                certificate: Certificate::Vertices(w),
            })
        }
        InvariantKind::Transversal => {
            if h.edge_count() == 0 {
                return Err(Error::EmptyHypergraph);
            }
            let vs: Vec<VertexId> = h.vertices().collect();
            let w = first_feasible_by_size(&vs, |t| {
                h.edges().iter().all(|e| t.iter().any(|u| e.contains(*u)))
            });
            Ok(InvariantWitness {
                kind,
                value: w.len(),
                certificate: Certificate::Vertices(w),
            })
        }
        InvariantKind::Matching => {
            if h.edge_count() == 0 {
                return Err(Error::EmptyHypergraph);
            }
            let es: Vec<Edge> = h.edges().to_vec();
            let w = largest_feasible_by_size(&es, |set| {
                set.iter().enumerate().all(|(i, e)| {
                    set[i + 1..].iter().all(|f| e.is_disjoint(f))
                })
            });
            Ok(InvariantWitness {
                kind,
                value: w.len(),
                certificate: Certificate::Edges(w),
            })
        }
        InvariantKind::Quasidegree(v) => {
            if v.get() > h.vertex_count() {
                return Err(Error::BadVertexId {
                    vertex: v.get(),
                    n: h.vertex_count(),
                });
            }
            let es: Vec<Edge> = h.edges().to_vec();
            let w = largest_feasible_by_size(&es, |set| {
                set.iter().all(|e| e.contains(v))
                    && set.iter().enumerate().all(|(i, e)| {
                        set[i + 1..].iter().all(|f| {
                            let shared: Vec<VertexId> =
                                e.iter().filter(|u| f.contains(*u)).collect();
                            shared == vec![v]
                        })
                    })
            });
            Ok(InvariantWitness {
                kind,
                value: w.len(),
                certificate: Certificate::Edges(w),
            })
        }
    }
}

fn dominates(h: &Hypergraph, d: &[VertexId]) -> bool {
    h.vertices().all(|v| {
        d.contains(&v)
            || h.edges()
                .iter()
                .any(|e| e.contains(v) && d.iter().any(|u| e.contains(*u)))
    })
}

/// Smallest feasible subset, scanning sizes 0,1,2,... and subsets of each
/// size in lexicographic order.
fn first_feasible_by_size<T: Clone>(items: &[T], feasible: impl Fn(&[T]) -> bool) -> Vec<T> {
    for size in 0..=items.len() {
        let mut found = None;
        each_subset_of_size(items, size, &mut |set| {
            if found.is_none() && feasible(set) {
                found = Some(set.to_vec());
            }
        });
        if let Some(set) = found {
            return set;
        }
    }
    unreachable!("the full item set is feasible for every minimisation oracle use");
}

/// Largest feasible subset; among those, the lexicographically least
/// (the first one encountered at the winning size).
fn largest_feasible_by_size<T: Clone>(items: &[T], feasible: impl Fn(&[T]) -> bool) -> Vec<T> {
    let mut best: Vec<T> = Vec::new();
    for size in 0..=items.len() {
        let mut found = None;
        each_subset_of_size(items, size, &mut |set| {
            if found.is_none() && feasible(set) {
                found = Some(set.to_vec());
            }
        });
        if let Some(set) = found {
            best = set;
        }
    }
    best
}

fn each_subset_of_size<T: Clone>(items: &[T], size: usize, visit: &mut impl FnMut(&[T])) {
    fn go<T: Clone>(
        items: &[T],
        size: usize,
        start: usize,
        current: &mut Vec<T>,
        visit: &mut impl FnMut(&[T]),
    ) {
        if current.len() == size {
            visit(current);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - current.len() {
                break;
            }
            current.push(items[i].clone());
            go(items, size, i + 1, current, visit);
            current.pop();
        }
    }
    let mut current = Vec::with_capacity(size);
    go(items, size, 0, &mut current, visit);
}
