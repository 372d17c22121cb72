//! The verification harnesses: the lemma-suite wrapper, the forward
//! check on the extremal family, the exhaustive extension search behind
//! the converse (characterization) direction, and the randomized
//! rank-bound check.

use std::collections::BTreeMap;

use anyhow::Result;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use hyperdom::constructions::{
    enumerate_f3_candidates, family_l, generate, random_hypergraph, ConstructionName,
};
use hyperdom::hypergraph::{Edge, Hypergraph, VertexId};
use hyperdom::iso::{self, CanonicalCode};
use hyperdom::reductions::reduction_report;
use hyperdom::solvers::{
    domination_number, matching_number, transversal_number, verify_witness, Certificate,
    InvariantKind, InvariantWitness,
};

use crate::report::{ReportBuilder, VerificationReport};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("extension search budget exceeded ({examined} candidates > cap {budget})")]
    BudgetExceeded { examined: u64, budget: u64 },
}

/// Run `f` inside a worker pool sized by `HYPERDOM_THREADS` (0 or unset
/// means automatic).
pub fn with_thread_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let requested = std::env::var("HYPERDOM_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(0);
    if requested == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(requested)
        .build()
        .expect("worker pool")
        .install(f)
}

/// Lemma-suite wrapper: linearity/intersecting preconditions plus the
/// full reduction pipeline report.
pub fn check_lemmas_report(label: &str, h: &Hypergraph) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new("check-lemmas", vec![label.to_string()]);
    let r = h.rank()?;
    b.check(
        "linear",
        h.is_linear(),
        match h.overlapping_pair() {
            None => "no two edges share more than one vertex".to_string(),
            Some((e, f)) => format!("edges {e} and {f} overlap"),
        },
    );
    b.check(
        "intersecting",
        h.is_intersecting(),
        match h.disjoint_pair() {
            None => "every two edges intersect".to_string(),
            Some((e, f)) => format!("edges {e} and {f} are disjoint"),
        },
    );
    b.check("rank", true, format!("rank {r}"));
    let lemma_report = reduction_report(h, r)?;
    for clause in &lemma_report.clauses {
        b.check(clause.clause.to_string(), clause.holds, clause.details.clone());
    }
    Ok(b.finish())
}

/// Forward direction: every member of the extremal family is linear,
/// intersecting, rank 4, has domination number exactly 3 and matching
/// number 1, and each 4-edge with a degree-1 vertex yields a dominating
/// 3-set by removing that vertex.
pub fn forward_report() -> VerificationReport {
    let mut b = ReportBuilder::new("verify-forward", vec![]);
    for member in family_l() {
        let h = &member.hypergraph;
        let name = member.name;
        b.check(
            format!("{name}.linear"),
            h.is_linear(),
            "pairwise overlaps at most one vertex",
        );
        b.check(
            format!("{name}.intersecting"),
            h.is_intersecting(),
            "pairwise intersections nonempty",
        );
        let rank = h.rank().expect("members have edges");
        b.check(format!("{name}.rank"), rank == 4, format!("rank {rank}"));
        let gamma = domination_number(h).expect("solvable");
        b.check(
            format!("{name}.domination"),
            gamma.value == 3,
            format!(
                "domination number {} with certificate {}",
                gamma.value,
                fmt_vertices(gamma.certificate_vertices().unwrap_or(&[]))
            ),
        );
        let alpha = matching_number(h).expect("solvable");
        b.check(
            format!("{name}.matching"),
            alpha.value == 1,
            format!("matching number {}", alpha.value),
        );

        let degrees = h.degree_profile();
        let mut checked = 0;
        let mut all_dominate = true;
        let mut detail = String::new();
        for e in h.edges().iter().filter(|e| e.len() == 4) {
            let Some(pendant) = e.iter().find(|v| degrees.degree(*v) == 1) else {
                continue;
            };
            checked += 1;
            let rest: Vec<VertexId> = e.iter().filter(|v| *v != pendant).collect();
            let witness = InvariantWitness {
                kind: InvariantKind::Domination,
                value: rest.len(),
                certificate: Certificate::Vertices(rest.clone()),
            };
            if let Err(msg) = verify_witness(h, &witness) {
                all_dominate = false;
                detail = format!("{e} minus {pendant} fails to dominate: {msg}");
                break;
            }
        }
        if all_dominate {
            detail = format!("{checked} pendant-bearing 4-edges each dominate minus their pendant");
        }
        b.check(format!("{name}.pendant-complements-dominate"), all_dominate, detail);
    }
    b.finish()
}

/// Base hypergraph for the extension search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtensionBase {
    F1,
    F1Minus,
}

impl ExtensionBase {
    fn name(self) -> ConstructionName {
        match self {
            ExtensionBase::F1 => ConstructionName::F1,
            ExtensionBase::F1Minus => ConstructionName::F1Minus,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExtensionConfig {
    pub max_added_edges: usize,
    pub budget: u64,
}

impl Default for ExtensionConfig {
    fn default() -> Self {
        ExtensionConfig {
            max_added_edges: 2,
            budget: 10_000_000,
        }
    }
}

struct Budget {
    examined: u64,
    cap: u64,
}

impl Budget {
    fn spend(&mut self, amount: u64) -> Result<(), HarnessError> {
        self.examined += amount;
        if self.examined > self.cap {
            Err(HarnessError::BudgetExceeded {
                examined: self.examined,
                budget: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

struct Finding {
    added: Vec<Edge>,
    domination: usize,
    code: CanonicalCode,
}

/// Exhaustive search over supersets of the base: all ways to add up to
/// `max_added_edges` new edges of size 2..=4 over the base's vertex set
/// such that the result stays linear, intersecting, rank at most 4, and
/// duplicate-free. Every admissible candidate is evaluated (domination
/// number and canonical form) and classified.
pub fn extension_search(
    base: ExtensionBase,
    cfg: &ExtensionConfig,
) -> Result<VerificationReport> {
    let base_h = generate(base.name()).hypergraph;
    let mut b = ReportBuilder::new(
        "extension-search",
        vec![
            format!("base={}", base.name()),
            format!("max-added={}", cfg.max_added_edges),
            format!("budget={}", cfg.budget),
        ],
    );
    let mut budget = Budget {
        examined: 0,
        cap: cfg.budget,
    };

    let gamma_base = domination_number(&base_h)?.value;
    b.check(
        "base-domination",
        gamma_base == 3,
        format!("domination number of {} is {gamma_base}", base.name()),
    );

    let singles = admissible_single_edges(&base_h, &mut budget)?;
    let mut edge_sets: Vec<Vec<Edge>> = singles.iter().map(|e| vec![e.clone()]).collect();
    for k in 2..=cfg.max_added_edges {
        edge_sets.extend(admissible_edge_sets(&singles, k, &mut budget)?);
    }

    let findings: Vec<Finding> = with_thread_pool(|| {
        edge_sets
            .par_iter()
            .map(|added| evaluate_candidate(&base_h, added))
            .collect()
    });

    if base == ExtensionBase::F1 {
        b.check(
            "no-admissible-extension",
            findings.is_empty(),
            format!(
                "{} admissible extensions over the 14 base vertices (every candidate edge \
                 would need to meet all 7 edges once, forcing size above 4)",
                findings.len()
            ),
        );
    } else {
        let family_codes: Vec<(ConstructionName, CanonicalCode)> = family_l()
            .iter()
            .map(|m| {
                (
                    m.name,
                    iso::canonical_form(&m.hypergraph).expect("family is small").code,
                )
            })
            .collect();
        let f2_code = &family_codes
            .iter()
            .find(|(n, _)| *n == ConstructionName::F2)
            .unwrap()
            .1;
        let f3_code = &family_codes
            .iter()
            .find(|(n, _)| *n == ConstructionName::F3)
            .unwrap()
            .1;

        let single_findings: Vec<&Finding> =
            findings.iter().filter(|f| f.added.len() == 1).collect();
        let extremal_singles: Vec<&&Finding> = single_findings
            .iter()
            .filter(|f| f.domination == 3)
            .collect();
        let mut classes: BTreeMap<&CanonicalCode, usize> = BTreeMap::new();
        for f in &extremal_singles {
            *classes.entry(&f.code).or_insert(0) += 1;
        }
        let classes_match = classes.len() == 2
            && classes.contains_key(f2_code)
            && classes.contains_key(f3_code);
        b.check(
            "single-extensions-two-classes",
            classes_match,
            format!(
                "{} extremal single-edge candidates in {} isomorphism class(es): {}",
                extremal_singles.len(),
                classes.len(),
                classes
                    .iter()
                    .map(|(code, count)| {
                        let tag = if *code == f2_code {
                            " = F2"
                        } else if *code == f3_code {
                            " = F3"
                        } else {
                            ""
                        };
                        format!("{code}{tag} x{count}")
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );

        let mut gamma_histogram: BTreeMap<usize, usize> = BTreeMap::new();
        for f in &single_findings {
            *gamma_histogram.entry(f.domination).or_insert(0) += 1;
        }
        let others_low = single_findings
            .iter()
            .filter(|f| f.domination != 3)
            .all(|f| f.domination <= 2);
        b.check(
            "non-extremal-singles-low",
            others_low,
            format!(
                "domination histogram over {} admissible single-edge extensions: {}",
                single_findings.len(),
                gamma_histogram
                    .iter()
                    .map(|(g, c)| format!("gamma={g} x{c}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );
    }

    // every extremal candidate, at any number of added edges, must be a
    // copy of a family member
    let family_codes: Vec<(ConstructionName, CanonicalCode)> = family_l()
        .iter()
        .map(|m| {
            (
                m.name,
                iso::canonical_form(&m.hypergraph).expect("family is small").code,
            )
        })
        .collect();
    let mut stray = None;
    let mut extremal_total = 0usize;
    for f in &findings {
        if f.domination == 3 {
            extremal_total += 1;
            if !family_codes.iter().any(|(_, code)| *code == f.code) {
                stray = Some(f);
            }
        }
    }
    b.check(
        "extremal-candidates-in-family",
        stray.is_none(),
        match stray {
            None => format!(
                "all {extremal_total} candidates with domination number 3 are copies of family members"
            ),
            Some(f) => format!(
                "candidate adding {} has domination number 3 but code {}",
                f.added
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join("+"),
                f.code
            ),
        },
    );

    b.check(
        "budget",
        true,
        format!("{} candidates examined (cap {})", budget.examined, cfg.budget),
    );
    Ok(b.finish())
}

fn evaluate_candidate(base: &Hypergraph, added: &[Edge]) -> Finding {
    let mut edges: Vec<Edge> = base.edges().to_vec();
    edges.extend(added.iter().cloned());
    let h = Hypergraph::from_edge_list(base.vertex_count(), edges)
        .expect("admissible candidates are duplicate-free");
    let domination = domination_number(&h).expect("candidate is solvable").value;
    let code = iso::canonical_form(&h).expect("candidate is small").code;
    Finding {
        added: added.to_vec(),
        domination,
        code,
    }
}

/// All single edges of size 2..=4 over the base's vertices whose
/// addition keeps the hypergraph linear and intersecting: the new edge
/// must meet every base edge in exactly one vertex. Enumeration prunes
/// prefixes that already overlap some base edge twice.
fn admissible_single_edges(
    base: &Hypergraph,
    budget: &mut Budget,
) -> Result<Vec<Edge>, HarnessError> {
    fn extend(
        base: &Hypergraph,
        start: usize,
        current: &mut Vec<usize>,
        found: &mut Vec<Edge>,
        budget: &mut Budget,
    ) -> Result<(), HarnessError> {
        for v in start..=base.vertex_count() {
            current.push(v);
            let linear_prefix = base.edges().iter().all(|f| {
                current
                    .iter()
                    .filter(|u| f.contains(VertexId::new(**u)))
                    .count()
                    <= 1
            });
            if linear_prefix {
                if current.len() >= 2 {
                    budget.spend(1)?;
                    let e = Edge::new(current.iter().copied()).expect("ascending distinct ids");
                    if base.edges().iter().all(|f| e.intersection_size(f) == 1) {
                        found.push(e);
                    }
                }
                if current.len() < 4 {
                    extend(base, v + 1, current, found, budget)?;
                }
            }
            current.pop();
        }
        Ok(())
    }
    let mut found = Vec::new();
    let mut current = Vec::new();
    extend(base, 1, &mut current, &mut found, budget)?;
    found.sort();
    Ok(found)
}

/// All `k`-subsets of the admissible single edges that remain pairwise
/// compatible (every two added edges share exactly one vertex, keeping
/// the whole candidate linear and intersecting).
fn admissible_edge_sets(
    singles: &[Edge],
    k: usize,
    budget: &mut Budget,
) -> Result<Vec<Vec<Edge>>, HarnessError> {
    fn extend(
        singles: &[Edge],
        k: usize,
        start: usize,
        current: &mut Vec<Edge>,
        found: &mut Vec<Vec<Edge>>,
        budget: &mut Budget,
    ) -> Result<(), HarnessError> {
        if current.len() == k {
            found.push(current.clone());
            return Ok(());
        }
        for i in start..singles.len() {
            budget.spend(1)?;
            let e = &singles[i];
            if current.iter().all(|f| e.intersection_size(f) == 1) {
                current.push(e.clone());
                extend(singles, k, i + 1, current, found, budget)?;
                current.pop();
            }
        }
        Ok(())
    }
    let mut found = Vec::new();
    let mut current = Vec::new();
    extend(singles, k, 0, &mut current, &mut found, budget)?;
    Ok(found)
}

/// Audit that the one under-determined construction is well defined:
/// every admissible choice of its added edge yields the same hypergraph
/// up to isomorphism.
pub fn f3_audit_report() -> VerificationReport {
    let mut b = ReportBuilder::new("f3-audit", vec![]);
    let candidates = enumerate_f3_candidates();
    b.check(
        "candidates-exist",
        !candidates.is_empty(),
        format!("{} admissible added-edge choices", candidates.len()),
    );
    let codes: Vec<CanonicalCode> = candidates
        .iter()
        .map(|c| iso::canonical_form(c).expect("candidates are small").code)
        .collect();
    let all_equal = codes.windows(2).all(|w| w[0] == w[1]);
    b.check(
        "candidates-isomorphic",
        all_equal,
        if let Some(first) = codes.first() {
            format!("all candidates share canonical code {first}")
        } else {
            "no candidates".to_string()
        },
    );
    b.finish()
}

/// Randomized check of the rank bound: on seeded instances of rank `r`
/// without isolated vertices, the domination number never exceeds
/// (r-1) times the matching number; rank-2 instances additionally obey
/// the graph chain domination <= matching <= transversal. The sharpness
/// witness is re-asserted every run.
pub fn bound_report(r: usize, trials: usize, seed: u64) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(
        "verify-bound",
        vec![
            format!("rank={r}"),
            format!("trials={trials}"),
            format!("seed={seed}"),
        ],
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0usize;
    let mut chain_violations = 0usize;
    let mut tight = 0usize;
    let mut done = 0usize;
    let mut draws = 0usize;
    while done < trials {
        draws += 1;
        if draws > trials * 1000 {
            anyhow::bail!("unable to draw enough feasible instances for rank {r}");
        }
        let n = rng.random_range(r.max(3)..=12);
        let m = rng.random_range(2..=8);
        if m * r < n {
            continue;
        }
        let instance_seed = rng.next_u64();
        let Ok(h) = random_hypergraph(r, n, m, instance_seed) else {
            continue;
        };
        let gamma = domination_number(&h)?.value;
        let alpha = matching_number(&h)?.value;
        if gamma > (r - 1) * alpha {
            violations += 1;
        }
        if gamma == (r - 1) * alpha {
            tight += 1;
        }
        if r == 2 {
            let tau = transversal_number(&h)?.value;
            if !(gamma <= alpha && alpha <= tau) {
                chain_violations += 1;
            }
        }
        done += 1;
    }
    b.check(
        "bound-holds",
        violations == 0,
        format!(
            "{done} instances of rank {r}: {violations} violations of domination <= {}*matching \
             ({tight} tight)",
            r - 1
        ),
    );
    if r == 2 {
        b.check(
            "graph-chain-holds",
            chain_violations == 0,
            format!("{done} rank-2 instances: {chain_violations} violations of the chain"),
        );
    }
    let f1 = generate(ConstructionName::F1).hypergraph;
    let gamma = domination_number(&f1)?.value;
    let alpha = matching_number(&f1)?.value;
    b.check(
        "sharpness-witness",
        gamma == 3 && alpha == 1 && gamma == 3 * alpha,
        format!("F1: domination {gamma} = 3 x matching {alpha}"),
    );
    Ok(b.finish())
}

/// Configuration for the all-in-one run.
#[derive(Clone, Copy, Debug)]
pub struct VerifyAllConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_added_edges: usize,
    pub budget: u64,
}

impl Default for VerifyAllConfig {
    fn default() -> Self {
        VerifyAllConfig {
            trials: 500,
            seed: 42,
            max_added_edges: 2,
            budget: 10_000_000,
        }
    }
}

/// The full suite: lemma checks on every family member, the forward
/// check, both extension searches, the construction audit, and the
/// randomized bound at ranks 2..4.
pub fn verify_all(cfg: &VerifyAllConfig) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(
        "verify-all",
        vec![
            format!("trials={}", cfg.trials),
            format!("seed={}", cfg.seed),
            format!("max-added={}", cfg.max_added_edges),
            format!("budget={}", cfg.budget),
        ],
    );
    for member in family_l() {
        let label = member.name.to_string();
        let report = check_lemmas_report(&label, &member.hypergraph)?;
        b.merge(&format!("lemmas[{label}]"), &report);
    }
    b.merge("forward", &forward_report());
    let ext_cfg = ExtensionConfig {
        max_added_edges: cfg.max_added_edges,
        budget: cfg.budget,
    };
    b.merge("extend[F1]", &extension_search(ExtensionBase::F1, &ext_cfg)?);
    b.merge(
        "extend[F1-]",
        &extension_search(ExtensionBase::F1Minus, &ext_cfg)?,
    );
    b.merge("f3-audit", &f3_audit_report());
    for r in 2..=4 {
        let report = bound_report(r, cfg.trials, cfg.seed)?;
        b.merge(&format!("bound[r={r}]"), &report);
    }
    Ok(b.finish())
}

fn fmt_vertices(vs: &[VertexId]) -> String {
    let ids: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_passes() {
        let report = forward_report();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn lemma_suite_passes_on_f1() {
        let f1 = generate(ConstructionName::F1).hypergraph;
        let report = check_lemmas_report("F1", &f1).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn lemma_suite_fails_on_a_single_edge() {
        let h = Hypergraph::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        let report = check_lemmas_report("file", &h).unwrap();
        assert!(!report.passed());
        let chain = report
            .checks
            .iter()
            .find(|c| c.name == "equality-chain")
            .unwrap();
        assert!(chain.details.contains("domination(H)=1"));
    }

    #[test]
    fn extension_search_finds_nothing_over_f1() {
        let report =
            extension_search(ExtensionBase::F1, &ExtensionConfig::default()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let none = report
            .checks
            .iter()
            .find(|c| c.name == "no-admissible-extension")
            .unwrap();
        assert!(none.holds);
    }

    #[test]
    fn extension_search_classifies_f1_minus_singles() {
        let report =
            extension_search(ExtensionBase::F1Minus, &ExtensionConfig::default()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let classes = report
            .checks
            .iter()
            .find(|c| c.name == "single-extensions-two-classes")
            .unwrap();
        assert!(classes.details.contains("= F2"));
        assert!(classes.details.contains("= F3"));
    }

    #[test]
    fn tiny_budget_trips() {
        let cfg = ExtensionConfig {
            max_added_edges: 1,
            budget: 10,
        };
        let err = extension_search(ExtensionBase::F1Minus, &cfg).unwrap_err();
        assert!(err.to_string().contains("budget exceeded"));
    }

    #[test]
    fn bound_report_small_run() {
        let report = bound_report(3, 25, 7).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let report = bound_report(2, 25, 7).unwrap();
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "graph-chain-holds"));
    }

    #[test]
    fn f3_audit_passes() {
        let report = f3_audit_report();
        assert!(report.passed(), "{}", report.render_text());
    }
}
