//! Transition coefficients between families as partition functions of an
//! `n × n` grid, and basis expansion by triangular elimination.
//!
//! The grid has bottom boundary `m_i(λ')` in column `i` (column 1 on the
//! right), right boundary `m_j(μ')` on row `j` (row 1 at the bottom), and
//! empty top and left boundaries.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{AlgebraError, Monomial, VarKind};
use crate::families::{degeneration_of_lattice, Family, FamilyTag};
use crate::identities::VerificationReport;
use crate::lattice::{apply_rule, LatticeError, RowRule, StateVector};
use crate::partitions::{partitions_in_box, Partition};
use crate::weights::{expansion_a, expansion_b, expansion_c, expansion_d, EdgeLabels};
use crate::{Poly, RingElem, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("grid of size {have} is too small, need {need}")]
    GridTooSmall { need: usize, have: usize },
    #[error("elimination stalled at {0}")]
    NotTriangular(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Vertex rule of the grid.
#[derive(Debug, Clone, PartialEq)]
pub enum GridKind {
    /// `(u_i, v_i)` per column, `y_j` per row.
    D { u: Vec<RingElem>, v: Vec<RingElem>, y: Vec<RingElem> },
    A,
    B,
    C,
}

impl GridKind {
    /// The D rule with `u_i, v_i, y_j` free.
    pub fn symbolic_d(n: usize) -> GridKind {
        let seq = |f: fn(u32) -> Var| (1..=n as u32).map(|i| RingElem::var(f(i))).collect();
        GridKind::D { u: seq(Var::u), v: seq(Var::v), y: seq(Var::y) }
    }

    /// Bases related by this rule: `source_λ = Σ_μ coeff · target_μ`.
    pub fn bases(&self) -> (Family, Family) {
        let ones = |n| vec![RingElem::one(); n];
        match self {
            GridKind::A => (Family::new(FamilyTag::QWhittaker), Family::new(FamilyTag::InhomQWhittakerF).with_sequence(ones(64))),
            GridKind::B => (Family::new(FamilyTag::InhomQWhittakerF).with_sequence(ones(64)), Family::new(FamilyTag::QWhittaker)),
            GridKind::C => (Family::new(FamilyTag::DualInhomG).with_sequence(ones(64)), Family::new(FamilyTag::QWhittaker)),
            GridKind::D { y, .. } => {
                // the source carries both sequences, so it is not a single named family
                (Family::new(FamilyTag::InhomQWhittakerF), Family::new(FamilyTag::InhomQWhittakerF).with_sequence(y.clone()))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoeffGridSpec {
    pub kind: GridKind,
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
}

impl CoeffGridSpec {
    pub fn new(kind: GridKind, n: usize, lambda: Partition, mu: Partition) -> CoeffGridSpec {
        CoeffGridSpec { kind, n, lambda, mu }
    }

    /// Smallest admissible grid.
    pub fn min_size(lambda: &Partition, mu: &Partition) -> usize {
        [lambda.length(), lambda.largest() as usize, mu.length(), mu.largest() as usize].into_iter().max().unwrap_or(0)
    }
}

fn padded_mults(p: &Partition, n: usize) -> Vec<u32> {
    p.conjugate().multiplicities(n).expect("grid size checked")
}

/// Partition function of the grid.
pub fn coeff(spec: &CoeffGridSpec) -> Result<RingElem, ExpansionError> {
    let n = spec.n;
    let need = CoeffGridSpec::min_size(&spec.lambda, &spec.mu);
    if n < need {
        return Err(ExpansionError::GridTooSmall { need, have: n });
    }
    if let GridKind::D { u, v, y } = &spec.kind {
        let have = u.len().min(v.len()).min(y.len());
        if have < n {
            return Err(ExpansionError::GridTooSmall { need: n, have });
        }
    }
    let bottom = padded_mults(&spec.lambda, n);
    let right = padded_mults(&spec.mu, n);
    let mut state = StateVector::basis(bottom);
    for (j, &exit) in right.iter().enumerate() {
        let weight = |col: usize, e: EdgeLabels| -> Result<RingElem, AlgebraError> {
            Ok(match &spec.kind {
                GridKind::A => expansion_a(e),
                GridKind::B => expansion_b(e),
                GridKind::C => expansion_c(e),
                GridKind::D { u, v, y } => expansion_d(&y[j], &u[col - 1], &v[col - 1], e)?,
            })
        };
        let rule = RowRule {
            weight: &weight,
            reversed: false,
            horizontal_bound: None,
            left: 0,
            right: Some(exit),
            particle_cap: None,
        };
        state = apply_rule(&rule, &state)?;
        if state.is_empty() {
            return Ok(RingElem::zero());
        }
    }
    Ok(state.coefficient(&vec![0; n]))
}

/// `source_λ = Σ_μ entries[μ] · target_μ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionTable {
    pub source: String,
    pub target: String,
    pub lambda: Partition,
    pub entries: BTreeMap<Partition, RingElem>,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    partition: &'a Partition,
    coefficient: &'a RingElem,
}

#[derive(Serialize)]
struct TableJson<'a> {
    source: &'a str,
    target: &'a str,
    lambda: &'a Partition,
    entries: Vec<EntryJson<'a>>,
}

impl Serialize for ExpansionTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableJson {
            source: &self.source,
            target: &self.target,
            lambda: &self.lambda,
            entries: self.entries.iter().map(|(partition, coefficient)| EntryJson { partition, coefficient }).collect(),
        }
        .serialize(s)
    }
}

fn is_x(v: Var) -> bool {
    v.kind() == VarKind::X
}

/// Coefficients of the `x`-monomials; the denominator must be free of `x`.
fn x_components(r: &RingElem) -> Result<BTreeMap<Monomial, RingElem>, ExpansionError> {
    let den = r.denominator();
    if den.vars().into_iter().any(is_x) {
        return Err(ExpansionError::NotTriangular(format!("not a polynomial in x: {r}")));
    }
    let den: RingElem = den.into();
    let mut grouped: BTreeMap<Monomial, Vec<(Monomial, crate::Rational)>> = BTreeMap::new();
    for (m, c) in r.numerator().terms() {
        let (xm, rest) = m.split(is_x);
        grouped.entry(xm).or_default().push((rest, c.clone()));
    }
    grouped
        .into_iter()
        .map(|(xm, terms)| Ok((xm, RingElem::from(Poly::from_terms(terms)).checked_div(&den)?)))
        .collect()
}

/// Lowest-degree component's lex-leading monomial, as an exponent vector.
fn leading(comps: &BTreeMap<Monomial, RingElem>, n: usize) -> Option<(Vec<u32>, RingElem)> {
    let low = comps.keys().map(Monomial::degree).min()?;
    comps
        .iter()
        .filter(|(m, _)| m.degree() == low)
        .map(|(m, c)| ((1..=n as u32).map(|i| m.exponent(Var::x(i))).collect::<Vec<u32>>(), c.clone()))
        .max_by(|a, b| a.0.cmp(&b.0))
}

/// Expands `source` in the target basis by repeatedly cancelling the
/// lowest-degree lex-leading term; `target(α)` must have `x^α` as the
/// leading term of its lowest-degree part.
pub fn expand_with(
    source: &RingElem,
    target: impl Fn(&Partition) -> Result<RingElem, ExpansionError>,
    n: usize,
    allowed: impl Fn(&Partition) -> bool,
) -> Result<BTreeMap<Partition, RingElem>, ExpansionError> {
    let mut rem = source.clone();
    let mut entries: BTreeMap<Partition, RingElem> = BTreeMap::new();
    let mut cache: BTreeMap<Partition, (RingElem, RingElem)> = BTreeMap::new();
    loop {
        let comps = x_components(&rem)?;
        let Some((expo, coef)) = leading(&comps, n) else { break };
        let alpha = Partition::new(expo.clone())
            .map_err(|_| ExpansionError::NotTriangular(format!("leading exponent {expo:?} is not a partition")))?;
        if !allowed(&alpha) {
            return Err(ExpansionError::NotTriangular(format!("leading term {alpha:?} outside the allowed shapes")));
        }
        if !cache.contains_key(&alpha) {
            let t = target(&alpha)?;
            let lead = leading(&x_components(&t)?, n);
            match lead {
                Some((e, c)) if e == expo => {
                    cache.insert(alpha.clone(), (t, c));
                }
                _ => {
                    return Err(ExpansionError::NotTriangular(format!("target {alpha:?} does not lead with its own monomial")))
                }
            }
        }
        let (t, tc) = &cache[&alpha];
        let c = coef.checked_div(tc)?;
        rem = rem.sub(&c.mul(t));
        let slot = entries.entry(alpha).or_insert_with(RingElem::zero);
        *slot = slot.add(&c);
    }
    entries.retain(|_, c| !c.is_zero());
    Ok(entries)
}

/// Lattice value of a family member in `n` variables.
pub fn basis_polynomial(family: &Family, lambda: &Partition, n: usize) -> Result<RingElem, ExpansionError> {
    let xs: Vec<RingElem> = (1..=n as u32).map(|i| RingElem::var(Var::x(i))).collect();
    Ok(degeneration_of_lattice(family, lambda, &Partition::empty(), &xs)?)
}

/// `source_λ` in the target basis, over shapes in the `width × height` box
/// with at most `n` parts.
pub fn expand(
    source: &Family,
    target: &Family,
    lambda: &Partition,
    n: usize,
    (width, height): (u32, usize),
) -> Result<ExpansionTable, ExpansionError> {
    let src = basis_polynomial(source, lambda, n)?;
    let entries = expand_with(&src, |a| basis_polynomial(target, a, n), n, |a| {
        a.length() <= n.min(height) && a.largest() <= width
    })?;
    Ok(ExpansionTable {
        source: source.tag.name().to_string(),
        target: target.tag.name().to_string(),
        lambda: lambda.clone(),
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignLaw {
    Positive,
    SignAlternating,
}

impl FromStr for SignLaw {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "positive" => Ok(SignLaw::Positive),
            "alternating" | "sign-alternating" => Ok(SignLaw::SignAlternating),
            _ => Err(format!("unknown sign law `{s}`")),
        }
    }
}

impl fmt::Display for SignLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignLaw::Positive => "positive",
            SignLaw::SignAlternating => "alternating",
        })
    }
}

/// Whether `r` lies in `ℕ[q]`.
pub fn in_nat_q(r: &RingElem) -> bool {
    let Some(p) = r.as_polynomial() else { return false };
    p.vars().iter().all(|v| v.kind() == VarKind::Q)
        && p.terms().iter().all(|(_, c)| c.is_integer() && !c.is_negative())
}

pub fn certify(table: &ExpansionTable, law: SignLaw) -> VerificationReport {
    let mut report = VerificationReport::new(format!("certify/{law}"));
    for (mu, c) in &table.entries {
        let signed = match law {
            SignLaw::Positive => c.clone(),
            SignLaw::SignAlternating => {
                let dist = (table.lambda.size() as i64 - mu.size() as i64).abs();
                if dist % 2 == 1 {
                    c.neg()
                } else {
                    c.clone()
                }
            }
        };
        report.claim(format!("{}→{} {:?}: {mu:?}", table.source, table.target, table.lambda), in_nat_q(&signed), || {
            format!("{signed} is not in N[q]")
        });
    }
    report
}

fn box_shapes(width: u32, n: usize) -> Vec<Partition> {
    partitions_in_box(width, n)
}

/// Grid coefficients against elimination for every `λ` in the
/// `width × n` box.
pub fn verify_grid_against_solve(kind: &GridKind, n: usize, width: u32) -> VerificationReport {
    let mut report = VerificationReport::new(format!("grid-vs-solve/{}", kind_name(kind)));
    let (source, target) = kind.bases();
    let shapes = box_shapes(width, n);
    let results: Vec<_> = shapes.par_iter().map(|lam| {
        let table = expand(&source, &target, lam, n, (width, n))?;
        let mut rows = Vec::new();
        for mu in &shapes {
            let g = coeff(&CoeffGridSpec::new(kind.clone(), n, lam.clone(), mu.clone()))?;
            let s = table.entries.get(mu).cloned().unwrap_or_else(RingElem::zero);
            rows.push((mu.clone(), g, s));
        }
        Ok::<_, ExpansionError>(rows)
    }).collect();
    for (lam, res) in shapes.iter().zip(results) {
        match res {
            Ok(rows) => {
                for (mu, g, s) in rows {
                    report.check(format!("{lam:?} {mu:?}"), g, s);
                }
            }
            Err(e) => report.error(format!("{lam:?}"), e),
        }
    }
    report
}

fn kind_name(kind: &GridKind) -> &'static str {
    match kind {
        GridKind::A => "A",
        GridKind::B => "B",
        GridKind::C => "C",
        GridKind::D { .. } => "D",
    }
}

/// Coefficient matrix of `kind` over the `width × n` box.
pub fn grid_matrix(kind: &GridKind, n: usize, width: u32) -> Result<BTreeMap<(Partition, Partition), RingElem>, ExpansionError> {
    let shapes = box_shapes(width, n);
    let mut out = BTreeMap::new();
    for lam in &shapes {
        for mu in &shapes {
            out.insert((lam.clone(), mu.clone()), coeff(&CoeffGridSpec::new(kind.clone(), n, lam.clone(), mu.clone()))?);
        }
    }
    Ok(out)
}

/// The A and B matrices are mutually inverse.
pub fn verify_inverse(n: usize, width: u32) -> VerificationReport {
    let mut report = VerificationReport::new("grid-inverse");
    let shapes = box_shapes(width, n);
    let (a, b) = match (grid_matrix(&GridKind::A, n, width), grid_matrix(&GridKind::B, n, width)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            report.error("matrices", e);
            return report;
        }
    };
    for lam in &shapes {
        for mu in &shapes {
            let mut sum = RingElem::zero();
            for k in &shapes {
                sum = sum.add(&a[&(lam.clone(), k.clone())].mul(&b[&(k.clone(), mu.clone())]));
            }
            let want = if lam == mu { RingElem::one() } else { RingElem::zero() };
            report.check(format!("{lam:?} {mu:?}"), sum, want);
        }
    }
    report
}

/// Sign law of every table of `kind` over the box: A and C positive, B
/// alternating.
pub fn verify_sign_laws(kind: &GridKind, n: usize, width: u32) -> VerificationReport {
    let law = match kind {
        GridKind::B => SignLaw::SignAlternating,
        _ => SignLaw::Positive,
    };
    let mut report = VerificationReport::new(format!("sign-law/{}", kind_name(kind)));
    let (source, target) = kind.bases();
    let shapes = box_shapes(width, n);
    let results: Vec<_> = shapes.par_iter().map(|lam| expand(&source, &target, lam, n, (width, n))).collect();
    for (lam, res) in shapes.iter().zip(results) {
        match res {
            Ok(t) => report.merge(certify(&t, law)),
            Err(e) => report.error(format!("{lam:?}"), e),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_in_box;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn spec(kind: GridKind, l: &str, m: &str) -> CoeffGridSpec {
        CoeffGridSpec::new(kind, 2, p(l), p(m))
    }

    #[test]
    fn grid_examples() {
        let q = RingElem::q();
        let q1 = RingElem::one().add(&q);
        assert_eq!(coeff(&spec(GridKind::A, "2,0", "2,1")).unwrap(), q1);
        assert_eq!(coeff(&spec(GridKind::B, "2,0", "2,2")).unwrap(), q);
        assert_eq!(coeff(&spec(GridKind::B, "2,0", "2,1")).unwrap(), q1.neg());
        assert_eq!(coeff(&spec(GridKind::C, "2,2", "2,0")).unwrap(), RingElem::one());
        for kind in [GridKind::A, GridKind::B, GridKind::C, GridKind::symbolic_d(0)] {
            let s = CoeffGridSpec::new(kind, 0, Partition::empty(), Partition::empty());
            assert_eq!(coeff(&s).unwrap(), RingElem::one());
        }
    }

    #[test]
    fn larger_grids_agree() {
        for kind in [GridKind::A, GridKind::B, GridKind::C] {
            for lam in partitions_in_box(2, 2) {
                for mu in partitions_in_box(2, 2) {
                    let at = |n| coeff(&CoeffGridSpec::new(kind.clone(), n, lam.clone(), mu.clone())).unwrap();
                    assert_eq!(at(2), at(3), "{kind:?} {lam:?} {mu:?}");
                }
            }
        }
    }

    #[test]
    fn grid_size_is_checked() {
        let err = coeff(&CoeffGridSpec::new(GridKind::A, 1, p("2"), p("2"))).unwrap_err();
        assert_eq!(err, ExpansionError::GridTooSmall { need: 2, have: 1 });
    }

    #[test]
    fn expansion_examples() {
        let q = RingElem::q();
        let q1 = RingElem::one().add(&q);
        let (w, f) = GridKind::A.bases();
        let t = expand(&w, &f, &p("2"), 2, (2, 2)).unwrap();
        let want: BTreeMap<Partition, RingElem> =
            [(p("2"), RingElem::one()), (p("2,1"), q1.clone()), (p("2,2"), RingElem::one())].into();
        assert_eq!(t.entries, want);
        assert!(certify(&t, SignLaw::Positive).passed);

        let t = expand(&f, &w, &p("2"), 2, (2, 2)).unwrap();
        let want: BTreeMap<Partition, RingElem> = [(p("2"), RingElem::one()), (p("2,1"), q1.neg()), (p("2,2"), q)].into();
        assert_eq!(t.entries, want);
        assert!(certify(&t, SignLaw::SignAlternating).passed);
        assert!(!certify(&t, SignLaw::Positive).passed);

        let s = Family::new(FamilyTag::Schur);
        let t = expand(&s, &s, &p("1"), 1, (1, 1)).unwrap();
        assert_eq!(t.entries, [(p("1"), RingElem::one())].into());
    }

    #[test]
    fn empty_table_certifies() {
        let t = ExpansionTable { source: "a".into(), target: "b".into(), lambda: Partition::empty(), entries: BTreeMap::new() };
        assert!(certify(&t, SignLaw::Positive).passed);
    }

    #[test]
    fn d_kind_specialises() {
        let one = RingElem::one();
        let zero = RingElem::zero();
        let n = 2;
        let fill = |r: &RingElem| vec![r.clone(); n];
        for lam in partitions_in_box(2, 2) {
            for mu in partitions_in_box(2, 2) {
                let d = |u: &RingElem, v: &RingElem, y: &RingElem| {
                    coeff(&CoeffGridSpec::new(GridKind::D { u: fill(u), v: fill(v), y: fill(y) }, n, lam.clone(), mu.clone()))
                        .unwrap()
                };
                let at = |k: GridKind| coeff(&CoeffGridSpec::new(k, n, lam.clone(), mu.clone())).unwrap();
                assert_eq!(d(&zero, &zero, &one), at(GridKind::A));
                assert_eq!(d(&one, &zero, &zero), at(GridKind::B));
                assert_eq!(d(&zero, &one, &zero), at(GridKind::C));
            }
        }
    }

    #[test]
    fn d_kind_grid_matches_solve() {
        let n = 2;
        let kind = GridKind::symbolic_d(n);
        let GridKind::D { u, v, .. } = &kind else { unreachable!() };
        let (_, target) = kind.bases();
        for lam in [p("1"), p("2"), p("1,1"), p("2,1")] {
            let cols = crate::lattice::ColumnParams::new(u.iter().cloned().zip(v.iter().cloned()).collect());
            let xs: Vec<RingElem> = (1..=n as u32).map(|i| RingElem::var(Var::x(i))).collect();
            let src = crate::lattice::skew_g(&lam, &Partition::empty(), &xs, &cols).unwrap();
            let solved = expand_with(&src, |a| basis_polynomial(&target, a, n), n, |a| a.length() <= n).unwrap();
            for mu in partitions_in_box(lam.largest(), n) {
                let g = coeff(&CoeffGridSpec::new(kind.clone(), n, lam.clone(), mu.clone())).unwrap();
                let s = solved.get(&mu).cloned().unwrap_or_else(RingElem::zero);
                assert_eq!(g, s, "{lam:?} {mu:?}");
            }
        }
    }

    #[test]
    fn box_checks_small() {
        for kind in [GridKind::A, GridKind::B, GridKind::C] {
            let r = verify_grid_against_solve(&kind, 2, 2);
            assert!(r.passed, "{r:?}");
            let r = verify_sign_laws(&kind, 2, 2);
            assert!(r.passed, "{r:?}");
        }
        assert!(verify_inverse(2, 2).passed);
    }

    #[test]
    fn table_json_shape() {
        let (w, f) = GridKind::A.bases();
        let t = expand(&w, &f, &p("1"), 1, (1, 1)).unwrap();
        let j = serde_json::to_value(&t).unwrap();
        assert_eq!(j["source"], "qwhittaker");
        assert_eq!(j["entries"][0]["partition"], serde_json::json!([1]));
        assert!(j["entries"][0]["coefficient"]["num"].is_array());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn c(k: i64) -> RingElem {
            RingElem::from_int(k)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]

            /// Numeric parameters: grid coefficients against elimination.
            #[test]
            fn d_kind_at_points(us in proptest::collection::vec(-2i64..=2, 2), vs in proptest::collection::vec(-2i64..=2, 2),
                                ys in proptest::collection::vec(-2i64..=2, 2), i in 0usize..16) {
                let n = 2;
                let shapes = partitions_in_box(2, n);
                let lam = shapes[i % shapes.len()].clone();
                let kind = GridKind::D { u: us.iter().map(|&k| c(k)).collect(), v: vs.iter().map(|&k| c(k)).collect(), y: ys.iter().map(|&k| c(k)).collect() };
                let (_, target) = kind.bases();
                let cols = crate::lattice::ColumnParams::new(us.iter().zip(&vs).map(|(&a, &b)| (c(a), c(b))).collect());
                let xs: Vec<RingElem> = (1..=n as u32).map(|k| RingElem::var(Var::x(k))).collect();
                let src = crate::lattice::skew_g(&lam, &Partition::empty(), &xs, &cols).unwrap();
                let solved = expand_with(&src, |a| basis_polynomial(&target, a, n), n, |a| a.length() <= n).unwrap();
                for mu in &shapes {
                    let g = coeff(&CoeffGridSpec::new(kind.clone(), n, lam.clone(), mu.clone())).unwrap();
                    prop_assert_eq!(g, solved.get(mu).cloned().unwrap_or_else(RingElem::zero));
                }
            }
        }
    }
}
