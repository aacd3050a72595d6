//! Closed-form branching rules of the named specialisations, used as an
//! independent check on the lattice engine.
//!
//! Every one-variable formula here is written directly in terms of the parts
//! of `λ` and `μ`; no vertex weights are involved except for the dual
//! inhomogeneous family, whose rule is a product of the printed site weight.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{q_binomial, q_factorial, q_pochhammer, q_power, AlgebraError, MAX_INDEX};
use crate::lattice::{skew_g, skew_j, ColumnParams, LatticeError};
use crate::partitions::{skew_columns, sub_partitions, Partition};
use crate::{Rational, RingElem, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    Schur,
    HallLittlewoodQ,
    QWhittaker,
    InhomQWhittakerF,
    DualInhomG,
    GrothendieckG,
    DualGrothendieckG,
    WeakGrothendieckJ,
    WeakDualJ,
}

/// Which lattice a family is a specialisation of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    J,
    G,
}

/// Which skew shapes a single-variable step may add.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    HorizontalStrip,
    Containment,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 9] = [
        FamilyTag::Schur,
        FamilyTag::HallLittlewoodQ,
        FamilyTag::QWhittaker,
        FamilyTag::InhomQWhittakerF,
        FamilyTag::DualInhomG,
        FamilyTag::GrothendieckG,
        FamilyTag::DualGrothendieckG,
        FamilyTag::WeakGrothendieckJ,
        FamilyTag::WeakDualJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Schur => "schur",
            FamilyTag::HallLittlewoodQ => "hall-littlewood",
            FamilyTag::QWhittaker => "qwhittaker",
            FamilyTag::InhomQWhittakerF => "inhom-f",
            FamilyTag::DualInhomG => "dual-inhom-g",
            FamilyTag::GrothendieckG => "grothendieck",
            FamilyTag::DualGrothendieckG => "dual-grothendieck",
            FamilyTag::WeakGrothendieckJ => "weak-grothendieck",
            FamilyTag::WeakDualJ => "weak-dual",
        }
    }

    pub fn lattice(self) -> LatticeKind {
        match self {
            FamilyTag::Schur | FamilyTag::HallLittlewoodQ | FamilyTag::WeakGrothendieckJ | FamilyTag::WeakDualJ => {
                LatticeKind::J
            }
            _ => LatticeKind::G,
        }
    }

    pub fn support(self) -> Support {
        match self {
            FamilyTag::DualGrothendieckG | FamilyTag::DualInhomG => Support::Containment,
            _ => Support::HorizontalStrip,
        }
    }

    /// Whether the family is taken at `q = 0`.
    pub fn at_q_zero(self) -> bool {
        matches!(
            self,
            FamilyTag::Schur
                | FamilyTag::GrothendieckG
                | FamilyTag::DualGrothendieckG
                | FamilyTag::WeakGrothendieckJ
                | FamilyTag::WeakDualJ
        )
    }

    /// Whether the single `α`/`β` deformation enters.
    pub fn uses_deform(self) -> bool {
        matches!(
            self,
            FamilyTag::GrothendieckG | FamilyTag::DualGrothendieckG | FamilyTag::WeakGrothendieckJ | FamilyTag::WeakDualJ
        )
    }

    /// Whether a per-index sequence enters (`u_i` for F, `v_i` for the dual
    /// inhomogeneous family).
    pub fn uses_sequence(self) -> bool {
        matches!(self, FamilyTag::InhomQWhittakerF | FamilyTag::DualInhomG)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// A tag together with its parameters.
///
/// `deform` is `α` for the weak families and `β` for the Grothendieck ones;
/// it defaults to the symbolic `w_1`. The sequence holds `u_i` (for F) or
/// `v_i` (for the dual inhomogeneous family); indices past its end stay
/// symbolic.
#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    pub tag: FamilyTag,
    pub deform: RingElem,
    pub sequence: Vec<RingElem>,
}

impl Family {
    pub fn new(tag: FamilyTag) -> Family {
        Family { tag, deform: RingElem::var(Var::w(1)), sequence: Vec::new() }
    }

    pub fn with_deform(mut self, deform: RingElem) -> Family {
        self.deform = deform;
        self
    }

    pub fn with_sequence(mut self, sequence: Vec<RingElem>) -> Family {
        self.sequence = sequence;
        self
    }

    /// The `i`-th sequence parameter, 1-based.
    pub fn seq(&self, i: usize) -> RingElem {
        if let Some(s) = self.sequence.get(i - 1) {
            return s.clone();
        }
        let var = match self.tag {
            FamilyTag::DualInhomG => Var::v(i as u32),
            _ => Var::u(i as u32),
        };
        RingElem::var(var)
    }

    fn column_params(&self, width: usize) -> ColumnParams {
        let zero = RingElem::zero();
        let pairs = (1..=width)
            .map(|i| match self.tag {
                FamilyTag::Schur | FamilyTag::HallLittlewoodQ | FamilyTag::QWhittaker => (zero.clone(), zero.clone()),
                FamilyTag::InhomQWhittakerF => (self.seq(i), zero.clone()),
                FamilyTag::DualInhomG => (zero.clone(), self.seq(i)),
                FamilyTag::GrothendieckG | FamilyTag::WeakGrothendieckJ => (self.deform.clone(), zero.clone()),
                FamilyTag::DualGrothendieckG | FamilyTag::WeakDualJ => (zero.clone(), self.deform.clone()),
            })
            .collect();
        ColumnParams::new(pairs)
    }
}

fn q_fact(k: u32) -> RingElem {
    q_factorial(k).into()
}

/// `r(μ/λ̃)`: the rows `i` with `μ_i > λ_{i+1}`.
fn rows_over_tail(lambda: &Partition, mu: &Partition) -> u32 {
    (1..=mu.length()).filter(|&i| mu.part(i) > lambda.part(i + 1)).count() as u32
}

fn skew_row_count(lambda: &Partition, mu: &Partition) -> u32 {
    (1..=lambda.length()).filter(|&i| lambda.part(i) > mu.part(i)).count() as u32
}

/// `∏_i (q;q)_{λ_i-λ_{i+1}} / ((q;q)_{λ_i-μ_i} (q;q)_{μ_i-λ_{i+1}})` on a strip.
fn whittaker_product(lambda: &Partition, mu: &Partition) -> Result<RingElem, AlgebraError> {
    let mut out = RingElem::one();
    for i in 1..=lambda.length() {
        let (li, ln, mi) = (lambda.part(i), lambda.part(i + 1), mu.part(i));
        out = out.mul(&q_fact(li - ln)).checked_div(&q_fact(li - mi).mul(&q_fact(mi - ln)))?;
    }
    Ok(out)
}

/// The printed site weight of the `u = 0` fused lattice,
/// `x^d Σ_p (v/x;q)_p (x/v)^{p-b} [c+d-p, c-p]_q [b, p]_q`.
fn dual_inhom_site(x: &RingElem, v: &RingElem, a: u32, b: u32, c: u32, d: u32) -> Result<RingElem, AlgebraError> {
    debug_assert_eq!(a + b, c + d);
    let mut sum = RingElem::zero();
    for p in 0..=b.min(c) {
        let ratio = x.checked_div(v)?;
        let term = q_pochhammer(&v.checked_div(x)?, p)
            .mul(&ratio.powi(p as i64 - b as i64)?)
            .mul(&q_binomial(c + d - p, (c - p) as i64).into())
            .mul(&q_binomial(b, p as i64).into());
        sum = sum.add(&term);
    }
    Ok(x.pow(d).mul(&sum))
}

/// One-variable skew function of the family, `λ` being the larger shape;
/// zero outside the family's support.
pub fn branching_one_var(
    family: &Family,
    lambda: &Partition,
    mu: &Partition,
    x: &RingElem,
) -> Result<RingElem, AlgebraError> {
    let tag = family.tag;
    let supported = match tag.support() {
        Support::HorizontalStrip => lambda.interlaces(mu),
        Support::Containment => lambda.contains(mu),
    };
    if !supported {
        return Ok(RingElem::zero());
    }
    let size = lambda.size() - mu.size();
    let xs = x.pow(size);
    let one = RingElem::one();
    let beta = &family.deform;
    Ok(match tag {
        FamilyTag::Schur => xs,
        FamilyTag::HallLittlewoodQ => {
            let mut phi = one;
            for i in 1..=lambda.largest() {
                let m = lambda.multiplicity(i);
                if m == mu.multiplicity(i) + 1 {
                    phi = phi.mul(&RingElem::one().sub(&q_power(m as i64)));
                }
            }
            phi.mul(&xs)
        }
        FamilyTag::QWhittaker => whittaker_product(lambda, mu)?.mul(&xs),
        FamilyTag::InhomQWhittakerF => {
            let mut out = whittaker_product(lambda, mu)?.mul(&xs);
            for i in 1..=lambda.length() {
                let k = mu.part(i) - lambda.part(i + 1);
                out = out.mul(&q_pochhammer(&family.seq(i).mul(x), k));
            }
            out
        }
        FamilyTag::DualInhomG => {
            // evaluate with free placeholders, then bind: the site weight is
            // polynomial but its printed form divides by both x and v
            let (px, pv) = (Var::w(MAX_INDEX), Var::w(MAX_INDEX - 1));
            let (gx, gv) = (RingElem::var(px), RingElem::var(pv));
            let mut out = one;
            for i in 1..=lambda.length() {
                let a = lambda.part(i) - lambda.part(i + 1);
                let b = lambda.part(i + 1) - mu.part(i + 1);
                let c = mu.part(i) - mu.part(i + 1);
                let d = lambda.part(i) - mu.part(i);
                let site = dual_inhom_site(&gx, &gv, a, b, c, d)?;
                out = out.mul(&site.subs(&[(pv, family.seq(i))])?);
            }
            out.subs(&[(px, x.clone())])?
        }
        FamilyTag::GrothendieckG => {
            let r = rows_over_tail(lambda, mu);
            xs.mul(&one.sub(&beta.mul(x)).pow(r))
        }
        FamilyTag::DualGrothendieckG => {
            let c = skew_columns(lambda, mu);
            beta.pow(size - c).mul(&x.pow(c))
        }
        FamilyTag::WeakGrothendieckJ => {
            let r = rows_over_tail(lambda, mu);
            let den = one.add(&beta.mul(x));
            xs.checked_div(&den.pow(r + size))?
        }
        FamilyTag::WeakDualJ => {
            let r = skew_row_count(lambda, mu);
            x.pow(r).mul(&x.add(beta).pow(size - r))
        }
    })
}

/// Sum over chains `μ = ν⁰ ⊆ ν¹ ⊆ … ⊆ νⁿ = λ` of
/// `∏_k branching_one_var(νᵏ/νᵏ⁻¹, x_k)`.
pub fn multivar_oracle_skew(
    family: &Family,
    lambda: &Partition,
    mu: &Partition,
    xs: &[RingElem],
) -> Result<RingElem, AlgebraError> {
    if !lambda.contains(mu) {
        return Ok(RingElem::zero());
    }
    let Some((x_last, rest)) = xs.split_last() else {
        return Ok(if lambda == mu { RingElem::one() } else { RingElem::zero() });
    };
    let mut total = RingElem::zero();
    for nu in sub_partitions(lambda) {
        if !nu.contains(mu) {
            continue;
        }
        let step = branching_one_var(family, lambda, &nu, x_last)?;
        if step.is_zero() {
            continue;
        }
        let inner = multivar_oracle_skew(family, &nu, mu, rest)?;
        total = total.add(&step.mul(&inner));
    }
    Ok(total)
}

pub fn multivar_oracle(family: &Family, lambda: &Partition, xs: &[RingElem]) -> Result<RingElem, AlgebraError> {
    multivar_oracle_skew(family, lambda, &Partition::empty(), xs)
}

/// The lattice function the family specialises, evaluated with the family's
/// parameter recipe.
pub fn degeneration_of_lattice(
    family: &Family,
    lambda: &Partition,
    mu: &Partition,
    xs: &[RingElem],
) -> Result<RingElem, LatticeError> {
    let value = match family.tag.lattice() {
        LatticeKind::J => {
            let width = lambda.largest().max(mu.largest()).max(1) as usize;
            skew_j(lambda, mu, xs, &family.column_params(width))?
        }
        LatticeKind::G => {
            let width = lambda.length().max(mu.length()).max(1);
            skew_g(lambda, mu, xs, &family.column_params(width))?
        }
    };
    if family.tag.at_q_zero() {
        Ok(value.subs(&[(Var::q(), RingElem::zero())])?)
    } else {
        Ok(value)
    }
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            let (top, rest) = m.split_at_mut(r);
            for (dst, src) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= src * &f;
            }
        }
    }
    det
}

/// `s_λ(x_1, ..., x_n)` as the ratio `det(x_i^{λ_j+n-j}) / det(x_i^{n-j})`;
/// `None` when the points collide or `λ` has more than `n` parts.
pub fn schur_bialternant(lambda: &Partition, point: &[Rational]) -> Option<Rational> {
    let n = point.len();
    let padded = lambda.padded(n)?;
    let alt = |shift: &dyn Fn(usize) -> u32| {
        let rows = point
            .iter()
            .map(|xi| (0..n).map(|j| num_traits::pow(xi.clone(), shift(j) as usize)).collect())
            .collect();
        determinant(rows)
    };
    let den = alt(&|j| (n - 1 - j) as u32);
    if den.is_zero() {
        return None;
    }
    let num = alt(&|j| padded[j] + (n - 1 - j) as u32);
    Some(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_in_box, partitions_of};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(i: u32) -> RingElem {
        RingElem::var(Var::x(i))
    }

    fn xs(n: u32) -> Vec<RingElem> {
        (1..=n).map(x).collect()
    }

    fn one_var(tag: FamilyTag, l: &str, m: &str) -> RingElem {
        branching_one_var(&Family::new(tag), &p(l), &p(m), &x(1)).unwrap()
    }

    #[test]
    fn single_variable_examples() {
        let q = RingElem::q();
        let one = RingElem::one();
        assert_eq!(one_var(FamilyTag::HallLittlewoodQ, "1", "0"), one.sub(&q).mul(&x(1)));
        assert_eq!(one_var(FamilyTag::QWhittaker, "2", "1"), one.add(&q).mul(&x(1)));
        assert_eq!(one_var(FamilyTag::GrothendieckG, "1", "0"), x(1));
        assert_eq!(one_var(FamilyTag::Schur, "2,1", "2,1"), one);
        assert!(one_var(FamilyTag::Schur, "2,2", "1").is_zero());
        assert!(!one_var(FamilyTag::DualGrothendieckG, "2,2", "1").is_zero());
    }

    #[test]
    fn tag_names_round_trip() {
        for t in FamilyTag::ALL {
            assert_eq!(t.name().parse::<FamilyTag>().unwrap(), t);
        }
        assert!("macdonald".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn chain_examples() {
        let q1 = RingElem::one().add(&RingElem::q());
        let (a, b) = (x(1), x(2));
        let schur = multivar_oracle(&Family::new(FamilyTag::Schur), &p("1"), &xs(2)).unwrap();
        assert_eq!(schur, a.add(&b));

        let w = multivar_oracle(&Family::new(FamilyTag::QWhittaker), &p("2,0"), &xs(2)).unwrap();
        assert_eq!(w, a.pow(2).add(&q1.mul(&a).mul(&b)).add(&b.pow(2)));

        let ones = vec![RingElem::one(); 3];
        let f = Family::new(FamilyTag::InhomQWhittakerF).with_sequence(ones);
        let got = multivar_oracle(&f, &p("2,0"), &xs(2)).unwrap();
        let one = RingElem::one();
        let want = a
            .pow(2)
            .add(&q1.mul(&a).mul(&b).mul(&one.sub(&a)))
            .add(&b.pow(2).mul(&one.sub(&a)).mul(&one.sub(&RingElem::q().mul(&a))));
        assert_eq!(got, want);
    }

    #[test]
    fn schur_matches_bialternant() {
        let points: [Vec<i64>; 3] = [vec![2, 3, 5], vec![-1, 4, 7], vec![3, -2, 1]];
        for lam in partitions_in_box(3, 3).into_iter().filter(|l| l.size() <= 5) {
            let poly = multivar_oracle(&Family::new(FamilyTag::Schur), &lam, &xs(3)).unwrap();
            for pt in &points {
                let binds: Vec<(Var, RingElem)> =
                    pt.iter().enumerate().map(|(i, &c)| (Var::x(i as u32 + 1), RingElem::from_int(c))).collect();
                let val = poly.subs(&binds).unwrap().as_constant().unwrap();
                let rat: Vec<Rational> = pt.iter().map(|&c| Rational::from_integer(c.into())).collect();
                assert_eq!(Some(val), schur_bialternant(&lam, &rat), "{lam:?} at {pt:?}");
            }
        }
    }

    #[test]
    fn lattice_matches_oracle_small() {
        for tag in FamilyTag::ALL {
            let fam = Family::new(tag);
            for k in 0..=3 {
                for lam in partitions_of(k) {
                    let want = multivar_oracle(&fam, &lam, &xs(2)).unwrap();
                    let got = degeneration_of_lattice(&fam, &lam, &Partition::empty(), &xs(2)).unwrap();
                    assert_eq!(got, want, "{tag} {lam:?}");
                }
            }
        }
    }

    #[test]
    fn one_variable_skew_agrees_with_lattice() {
        for tag in FamilyTag::ALL {
            let fam = Family::new(tag);
            for lam in partitions_in_box(3, 3) {
                for mu in sub_partitions(&lam) {
                    let want = branching_one_var(&fam, &lam, &mu, &x(1)).unwrap();
                    let got = degeneration_of_lattice(&fam, &lam, &mu, &xs(1)).unwrap();
                    assert_eq!(got, want, "{tag} {lam:?}/{mu:?}");
                }
            }
        }
    }

    #[test]
    fn schur_also_from_the_fused_lattice() {
        let zero = RingElem::zero();
        for lam in partitions_of(4) {
            let cols = ColumnParams::uniform(zero.clone(), zero.clone(), lam.length());
            let g = skew_g(&lam, &Partition::empty(), &xs(2), &cols).unwrap().subs(&[(Var::q(), zero.clone())]).unwrap();
            let s = multivar_oracle(&Family::new(FamilyTag::Schur), &lam, &xs(2)).unwrap();
            assert_eq!(g, s);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_point() -> impl Strategy<Value = Vec<Rational>> {
            proptest::collection::vec((-6i64..=6, 1i64..=4), 3)
                .prop_map(|v| v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect::<Vec<_>>())
                .prop_filter("distinct", |v| v[0] != v[1] && v[1] != v[2] && v[0] != v[2])
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn schur_oracle_matches_alternants(i in 0usize..64, pt in arb_point()) {
                let shapes: Vec<Partition> = partitions_in_box(3, 3).into_iter().filter(|l| l.size() <= 5).collect();
                let lam = &shapes[i % shapes.len()];
                let poly = multivar_oracle(&Family::new(FamilyTag::Schur), lam, &xs(3)).unwrap();
                let binds: Vec<(Var, RingElem)> =
                    pt.iter().enumerate().map(|(k, c)| (Var::x(k as u32 + 1), RingElem::constant(c.clone()))).collect();
                let val = poly.subs(&binds).unwrap().as_constant();
                prop_assert_eq!(val, schur_bialternant(lam, &pt));
            }
        }
    }
}
