//! Property tests: solver/oracle agreement, the invariant inequalities,
//! canonical-form invariance, and the structural identities that must
//! hold on every instance.

use proptest::prelude::*;

use hyperdom::constructions::random_hypergraph;
use hyperdom::hypergraph::{Edge, Hypergraph, VertexId};
use hyperdom::solvers::{
    brute_force_invariant, domination_number, matching_number, quasidegree,
    transversal_number, verify_witness, InvariantKind,
};
use hyperdom::{iso, Certificate};

/// All subsets of {1..n} with sizes 2..=4, used as an edge pool.
fn edge_pool(n: usize) -> Vec<Vec<usize>> {
    let mut pool = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(1, Vec::new())];
    while let Some((start, current)) = stack.pop() {
        if current.len() >= 2 {
            pool.push(current.clone());
        }
        if current.len() == 4 {
            continue;
        }
        for v in start..=n {
            let mut next = current.clone();
            next.push(v);
            stack.push((v + 1, next));
        }
    }
    pool.sort();
    pool
}

prop_compose! {
    fn arb_hypergraph()(n in 2usize..=8)(
        n in Just(n),
        picks in prop::collection::btree_set(0usize..edge_pool(n).len(), 1..=8),
    ) -> Hypergraph {
        let pool = edge_pool(n);
        Hypergraph::new(n, picks.iter().map(|i| pool[*i].clone())).unwrap()
    }
}

proptest! {
    #[test]
    fn degree_sum_equals_edge_size_sum(h in arb_hypergraph()) {
        let sizes: usize = h.edges().iter().map(Edge::len).sum();
        prop_assert_eq!(h.degree_profile().sum(), sizes);
    }

    #[test]
    fn deleting_nothing_is_identity(h in arb_hypergraph()) {
        let (gv, mv) = h.delete_vertices(&[]).unwrap();
        prop_assert_eq!(&gv, &h);
        prop_assert!(mv.is_identity());
        let (ge, me) = h.delete_edges(&[]).unwrap();
        prop_assert_eq!(&ge, &h);
        prop_assert!(me.is_identity());
    }

    #[test]
    fn intersecting_iff_matching_number_one(h in arb_hypergraph()) {
        let alpha = matching_number(&h).unwrap().value;
        prop_assert_eq!(h.is_intersecting(), alpha == 1);
    }

    #[test]
    fn solvers_agree_with_oracle(h in arb_hypergraph()) {
        for (fast, kind) in [
            (domination_number(&h), InvariantKind::Domination),
            (transversal_number(&h), InvariantKind::Transversal),
            (matching_number(&h), InvariantKind::Matching),
        ] {
            let fast = fast.unwrap();
            let slow = brute_force_invariant(&h, kind).unwrap();
            prop_assert_eq!(fast.value, slow.value);
            prop_assert!(verify_witness(&h, &fast).is_ok());
            prop_assert!(verify_witness(&h, &slow).is_ok());
        }
        for v in h.vertices() {
            let fast = quasidegree(&h, v).unwrap();
            let slow = brute_force_invariant(&h, InvariantKind::Quasidegree(v)).unwrap();
            prop_assert_eq!(fast.value, slow.value);
        }
    }

    /// Both paths pick the lexicographically least optimal certificate,
    /// so they must coincide exactly, not merely in value.
    #[test]
    fn tie_breaking_matches_the_oracle(h in arb_hypergraph()) {
        for kind in [
            InvariantKind::Domination,
            InvariantKind::Transversal,
            InvariantKind::Matching,
        ] {
            let fast = match kind {
                InvariantKind::Domination => domination_number(&h).unwrap(),
                InvariantKind::Transversal => transversal_number(&h).unwrap(),
                InvariantKind::Matching => matching_number(&h).unwrap(),
                InvariantKind::Quasidegree(_) => unreachable!(),
            };
            let slow = brute_force_invariant(&h, kind).unwrap();
            prop_assert_eq!(fast.certificate, slow.certificate);
        }
    }

    #[test]
    fn invariant_inequalities(h in arb_hypergraph()) {
        let gamma = domination_number(&h).unwrap().value;
        let tau = transversal_number(&h).unwrap().value;
        let alpha = matching_number(&h).unwrap().value;
        let r = h.rank().unwrap();
        prop_assert!(alpha <= tau);
        let isolated_free = h.degree_profile().min().unwrap() >= 1;
        if isolated_free {
            prop_assert!(gamma <= tau);
            prop_assert!(gamma <= (r - 1) * alpha);
            if h.is_intersecting() {
                prop_assert!(gamma < r);
            }
        }
    }

    #[test]
    fn quasidegree_below_degree(h in arb_hypergraph()) {
        for v in h.vertices() {
            let d = h.degree(v).unwrap();
            let qd = quasidegree(&h, v).unwrap().value;
            prop_assert!(qd <= d);
            prop_assert_eq!(qd == 0, d == 0);
        }
    }

    #[test]
    fn canonical_code_is_relabeling_invariant(
        h in arb_hypergraph(),
        salt in any::<u64>(),
    ) {
        // derive a permutation of 1..=n from the salt
        let n = h.vertex_count();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut state = salt;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let edges: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| e.iter().map(|v| perm[v.get() - 1]).collect())
            .collect();
        let g = Hypergraph::new(n, edges).unwrap();
        prop_assert_eq!(
            iso::canonical_form(&h).unwrap().code,
            iso::canonical_form(&g).unwrap().code
        );
        let mapping = iso::is_isomorphic(&h, &g).unwrap().expect("relabeling");
        prop_assert!(iso::mapping_matches(&h, &g, &mapping));
    }

    #[test]
    fn isomorphism_agrees_with_canonical_codes(
        a in arb_hypergraph(),
        b in arb_hypergraph(),
    ) {
        let code_a = iso::canonical_form(&a).unwrap().code;
        let code_b = iso::canonical_form(&b).unwrap().code;
        let mapping = iso::is_isomorphic(&a, &b).unwrap();
        prop_assert_eq!(mapping.is_some(), code_a == code_b);
        if let Some(mapping) = mapping {
            prop_assert!(iso::mapping_matches(&a, &b, &mapping));
        }
    }

    #[test]
    fn edits_preserve_representation_invariants(
        h in arb_hypergraph(),
        pick in any::<u64>(),
    ) {
        let v = VertexId::new(1 + (pick as usize) % h.vertex_count());
        let (g, _) = h.delete_vertices(&[v]).unwrap();
        for e in g.edges() {
            prop_assert!(e.len() >= 2);
            for u in e.iter() {
                prop_assert!(u.get() <= g.vertex_count());
            }
        }
        prop_assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Random generator honors its whole contract, and generated
    /// instances satisfy the rank-bound inequality.
    #[test]
    fn random_instances_satisfy_the_bound(seed in any::<u64>(), r in 2usize..=4) {
        let n = 5 + (seed % 6) as usize; // 5..=10
        let m = 3 + (seed % 5) as usize; // 3..=7
        if n < r || m * r < n {
            // m edges of size <= r cannot cover n vertices
            return Ok(());
        }
        let h = match random_hypergraph(r, n, m, seed) {
            Ok(h) => h,
            // near-tight coverage can exhaust the resampling budget
            Err(_) => return Ok(()),
        };
        prop_assert_eq!(h.rank().unwrap(), r);
        prop_assert_eq!(h.edge_count(), m);
        prop_assert!(h.degree_profile().min().unwrap() >= 1);
        let again = random_hypergraph(r, n, m, seed).unwrap();
        prop_assert_eq!(&again, &h);
        let gamma = domination_number(&h).unwrap().value;
        let alpha = matching_number(&h).unwrap().value;
        prop_assert!(gamma <= (r - 1) * alpha);
        if r == 2 {
            prop_assert!(gamma <= alpha);
        }
    }
}

#[test]
fn quasidegree_certificates_verify() {
    let h = random_hypergraph(4, 9, 6, 99).unwrap();
    for v in h.vertices() {
        let w = quasidegree(&h, v).unwrap();
        assert!(verify_witness(&h, &w).is_ok());
        match &w.certificate {
            Certificate::Edges(es) => assert_eq!(es.len(), w.value),
            Certificate::Vertices(_) => panic!("quasidegree certifies edges"),
        }
    }
}
