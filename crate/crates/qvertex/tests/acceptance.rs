//! One test per acceptance criterion. Each prints a PASS/FAIL line with its
//! wall time against the budget; comparisons are exact. Lines go straight to
//! the stdout handle so they show without `--nocapture`.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use qvertex::expansions::{
    coeff, expand, verify_grid_against_solve, verify_sign_laws, CoeffGridSpec, GridKind,
};
use qvertex::identities::{
    fusion_normalization, verify_brute_force, verify_cauchy_g, verify_cauchy_j, verify_cauchy_mixed,
    verify_degenerations, verify_fusion, verify_gauge, verify_reductions, verify_stability,
    verify_stochasticity, verify_symmetry, verify_ybe, CauchyConfig, VerificationReport, YbeTriple,
};
use qvertex::partitions::Partition;
use qvertex::RingElem;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

type Expected<'a> = (GridKind, &'a str, Vec<(&'a str, RingElem)>);

fn criterion(number: u32, title: &str, budget: Duration, run: impl FnOnce() -> VerificationReport) {
    let start = Instant::now();
    let report = run();
    let elapsed = start.elapsed();
    let ok = report.passed && elapsed <= budget;
    let mut text = format!(
        "criterion {number} [{title}]: {} ({} instances, {:.2} s of {} s)\n",
        if ok { "PASS" } else { "FAIL" },
        report.instances_checked,
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for f in report.failures.iter().take(5) {
        text.push_str(&format!("  {}: {} != {}\n", f.instance, f.lhs, f.rhs));
    }
    for n in report.notes.iter().take(5) {
        text.push_str(&format!("  {n}\n"));
    }
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).expect("stdout");
    assert!(report.passed, "criterion {number} failed");
    assert!(elapsed <= budget, "criterion {number} exceeded its time budget");
}

fn merged(id: &str, parts: impl IntoIterator<Item = VerificationReport>) -> VerificationReport {
    let mut r = VerificationReport::new(id);
    for part in parts {
        r.merge(part);
    }
    r
}

#[test]
fn criterion_1_golden_expansions() {
    criterion(1, "worked expansions", Duration::from_secs(1), || {
        let one = RingElem::one();
        let q = RingElem::q();
        let q1 = one.add(&q);
        let mut r = VerificationReport::new("golden");
        let cases: [Expected; 3] = [
            (GridKind::A, "2", vec![("2", one.clone()), ("2,1", q1.clone()), ("2,2", one.clone())]),
            (GridKind::B, "2", vec![("2", one.clone()), ("2,1", q1.neg()), ("2,2", q.clone())]),
            (GridKind::C, "2,2", vec![("2,2", one.clone()), ("2,1", q1.clone()), ("2", one.clone())]),
        ];
        for (kind, lam, want) in cases {
            let want: BTreeMap<Partition, RingElem> = want.into_iter().map(|(m, c)| (p(m), c)).collect();
            let (source, target) = kind.bases();
            let table = expand(&source, &target, &p(lam), 2, (2, 2)).unwrap();
            for (mu, c) in &want {
                let got = table.entries.get(mu).cloned().unwrap_or_else(RingElem::zero);
                r.check(format!("{kind:?} solve {lam} {mu}"), got, c.clone());
                let grid = coeff(&CoeffGridSpec::new(kind.clone(), 2, p(lam), mu.clone())).unwrap();
                r.check(format!("{kind:?} grid {lam} {mu}"), grid, c.clone());
            }
            r.claim(format!("{kind:?} support {lam}"), table.entries.len() == want.len(), || {
                format!("unexpected entries {:?}", table.entries.keys().collect::<Vec<_>>())
            });
        }
        r
    });
}

#[test]
fn criterion_2_grid_equals_solve() {
    criterion(2, "grid equals triangular solve, 3x3 box, n=3", Duration::from_secs(60), || {
        merged("grid-vs-solve", [GridKind::A, GridKind::B, GridKind::C].iter().map(|k| verify_grid_against_solve(k, 3, 3)))
    });
}

#[test]
fn criterion_3_sign_laws() {
    criterion(3, "positivity of A and C, alternation of B, 3x3 box", Duration::from_secs(60), || {
        merged("sign-laws", [GridKind::A, GridKind::B, GridKind::C].iter().map(|k| verify_sign_laws(k, 3, 3)))
    });
}

#[test]
fn criterion_4_ybe() {
    criterion(4, "Yang-Baxter equations", Duration::from_secs(300), || {
        merged(
            "ybe",
            [
                verify_ybe(YbeTriple::General { l: 1, m: 1, n: 1 }, 1),
                verify_ybe(YbeTriple::Spin1, 3),
                verify_ybe(YbeTriple::Dual, 3),
                verify_ybe(YbeTriple::Fused, 3),
                verify_ybe(YbeTriple::Mixed, 3),
            ],
        )
    });
}

#[test]
fn criterion_5_stochasticity_and_gauge() {
    criterion(5, "stochasticity L,M<=3 and gauge labels<=4", Duration::from_secs(30), || {
        merged("vertex", [verify_stochasticity(3), verify_gauge(4), verify_reductions(3)])
    });
}

#[test]
fn criterion_6_cauchy() {
    criterion(6, "Cauchy identities to degree 3", Duration::from_secs(600), || {
        let shapes = [p("0"), p("1"), p("2"), p("1,1")];
        let mut parts = Vec::new();
        for n in [1, 2] {
            let cfg = CauchyConfig::new(n, n, 3);
            for lam in &shapes {
                for mu in &shapes {
                    parts.push(verify_cauchy_j(lam, mu, &cfg));
                    parts.push(verify_cauchy_g(lam, mu, &cfg));
                    parts.push(verify_cauchy_mixed(lam, mu, &cfg));
                }
            }
        }
        merged("cauchy", parts)
    });
}

#[test]
fn criterion_7_degenerations() {
    criterion(7, "nine families against their branching oracles", Duration::from_secs(300), || {
        verify_degenerations(5, 3)
    });
}

#[test]
fn criterion_8_fusion() {
    criterion(8, "fusion at (2,2) and (2,3)", Duration::from_secs(120), || {
        let mut r = merged(
            "fusion",
            [verify_fusion(2, 2, 1), verify_fusion(2, 2, 2), verify_fusion(2, 3, 1), verify_fusion(2, 3, 2)],
        );
        r.check("Z_1(2)", fusion_normalization(1, 2), RingElem::one().add(&RingElem::q()));
        r
    });
}

#[test]
fn criterion_9_structure() {
    criterion(9, "symmetry, stability and brute force", Duration::from_secs(300), || {
        merged("structure", [verify_symmetry(5, &[2, 3]), verify_stability(5, &[2, 3]), verify_brute_force(4, 2)])
    });
}
