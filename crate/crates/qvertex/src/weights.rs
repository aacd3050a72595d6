//! Vertex weights.
//!
//! Every rule maps four edge labels `(a, b, c, d)` = (bottom, left, top, right)
//! to a [`RingElem`]. Rules for lines carrying particles to the right vanish
//! unless `a + b = c + d`; rules for reversed (dual) lines vanish unless
//! `a + d = b + c`.

use serde::{Deserialize, Serialize};

use crate::algebra::{q_binomial, q_factorial, q_pochhammer, q_power, AlgebraError, Var, MAX_INDEX};
use crate::RingElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeLabels {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl EdgeLabels {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> EdgeLabels {
        EdgeLabels { a, b, c, d }
    }

    /// `a + b = c + d`
    pub fn conserves(&self) -> bool {
        self.a + self.b == self.c + self.d
    }

    /// `a + d = b + c`
    pub fn conserves_reversed(&self) -> bool {
        self.a + self.d == self.b + self.c
    }
}

fn int(n: i64) -> RingElem {
    RingElem::from_int(n)
}

fn qbin(a: u32, b: i64) -> RingElem {
    q_binomial(a, b).into()
}

fn qfact(k: u32) -> RingElem {
    q_factorial(k).into()
}

fn poch(a: &RingElem, k: u32) -> RingElem {
    q_pochhammer(a, k)
}

/// `Φ(λ, μ; x, y) = (x;q)_λ (y/x;q)_{μ-λ} / (y;q)_μ · (y/x)^λ · [μ choose λ]_q`, zero when `λ > μ`.
pub fn phi(lam: u32, mu: u32, x: &RingElem, y: &RingElem) -> Result<RingElem, AlgebraError> {
    if lam > mu {
        return Ok(RingElem::zero());
    }
    let ratio = y.checked_div(x)?;
    let den = poch(y, mu);
    let num = poch(x, lam).mul(&poch(&ratio, mu - lam)).mul(&ratio.pow(lam)).mul(&qbin(mu, lam as i64));
    num.checked_div(&den)
}

/// Parameters of the general two-spin weights.
///
/// `q_neg_l` and `q_neg_m` stand for `q^{-L}` and `q^{-M}`; they are usually
/// the honest powers of `q`, but may be free indeterminates so that limits in
/// them can be taken exactly.
#[derive(Clone, Debug)]
pub struct GeneralParams {
    pub z: RingElem,
    pub q_neg_l: RingElem,
    pub q_neg_m: RingElem,
    /// Horizontal spin `L`; labels `b, d` above it give weight zero.
    pub spin_l: Option<u32>,
    /// Vertical spin `M`; labels `a, c` above it give weight zero.
    pub spin_m: Option<u32>,
}

impl GeneralParams {
    pub fn new(z: RingElem, l: u32, m: u32) -> GeneralParams {
        GeneralParams {
            z,
            q_neg_l: q_power(-(l as i64)),
            q_neg_m: q_power(-(m as i64)),
            spin_l: Some(l),
            spin_m: Some(m),
        }
    }
}

/// `W_{L,M}(z; q; a, b, c, d)`.
pub fn general_weight(p: &GeneralParams, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    let EdgeLabels { a, b, c, d } = e;
    if !e.conserves() {
        return Ok(RingElem::zero());
    }
    if p.spin_l.is_some_and(|l| b > l || d > l) || p.spin_m.is_some_and(|m| a > m || c > m) {
        return Ok(RingElem::zero());
    }
    let (t, s, z) = (&p.q_neg_l, &p.q_neg_m, &p.z);
    let x1 = s.checked_div(t)?.mul(z);
    let y1 = s.mul(z);
    let x2 = t.checked_div(z)?;
    let mut sum = RingElem::zero();
    for k in 0..=b.min(c) {
        let f1 = phi(c - k, c + d - k, &x1, &y1)?;
        if f1.is_zero() {
            continue;
        }
        sum = sum.add(&f1.mul(&phi(k, b, &x2, t)?));
    }
    let pre = z.powi(d as i64 - b as i64)?.mul(&t.powi(-(a as i64))?).mul(&s.pow(d));
    Ok(pre.mul(&sum))
}

/// Spin-1 row weight `W_{x;(u,v)}`.
pub fn spin1_weight(x: &RingElem, u: &RingElem, v: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    let EdgeLabels { a, b, d, .. } = e;
    if !e.conserves() || b > 1 || d > 1 {
        return Ok(RingElem::zero());
    }
    let qm = q_power(a as i64);
    let one = RingElem::one();
    let den = one.add(&u.mul(x));
    let num = match (b, d) {
        (0, 0) => one.add(&u.mul(x).mul(&qm)),
        (0, 1) => one.sub(&qm).mul(x),
        (1, 0) => one.sub(&u.mul(v).mul(&qm)),
        _ => x.add(&v.mul(&qm)),
    };
    num.checked_div(&den)
}

/// Dual spin-1 row weight `W*_{x;(u,v)}`; the horizontal line runs right to left.
pub fn spin1_dual_weight(x: &RingElem, u: &RingElem, v: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    let EdgeLabels { a, b, d, .. } = e;
    if !e.conserves_reversed() || b > 1 || d > 1 {
        return Ok(RingElem::zero());
    }
    let qm = q_power(a as i64);
    let one = RingElem::one();
    let den = one.add(&v.mul(x));
    let num = match (b, d) {
        (1, 1) => x.add(&u.mul(&qm)),
        (1, 0) => one.sub(&qm),
        (0, 1) => one.sub(&u.mul(v).mul(&qm)).mul(x),
        _ => one.add(&v.mul(x).mul(&qm)),
    };
    num.checked_div(&den)
}

fn placeholder() -> Var {
    Var::w(MAX_INDEX)
}

/// Fused row weight `𝕎_{x;(u,v)}`, a polynomial in `x, u, v, q`.
pub fn fused_weight(x: &RingElem, u: &RingElem, v: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    if !e.conserves() {
        return Ok(RingElem::zero());
    }
    if x.is_zero() {
        // termwise powers x^{d-b} can be negative; evaluate generically first
        let t = placeholder();
        return fused_weight(&RingElem::var(t), u, v, e)?.subs(&[(t, RingElem::zero())]);
    }
    let EdgeLabels { b, c, d, .. } = e;
    let mut sum = RingElem::zero();
    for p in 0..=b.min(c) {
        let mut term = qbin(c + d - p, (c - p) as i64).mul(&qbin(b, p as i64));
        if term.is_zero() {
            continue;
        }
        term = term.mul(&poch(&u.mul(x), c - p)).mul(&v.pow(b - p));
        for j in 0..p {
            term = term.mul(&x.sub(&v.mul(&q_power(j as i64))));
        }
        sum = sum.add(&term);
    }
    Ok(sum.mul(&x.powi(d as i64 - b as i64)?))
}

/// `(uv;q)_c / (uv;q)_a · (q;q)_a / (q;q)_c`, the gauge factor relating a weight to its dual.
fn gauge_factor(u: &RingElem, v: &RingElem, a: u32, c: u32) -> Result<RingElem, AlgebraError> {
    let uv = u.mul(v);
    poch(&uv, c).mul(&qfact(a)).checked_div(&poch(&uv, a).mul(&qfact(c)))
}

/// Dual fused weight `𝕎*_{x;(u,v)}(a,b,c,d) = gauge · 𝕎_{x;(v,u)}(c,b,a,d)`.
pub fn fused_dual_weight(x: &RingElem, u: &RingElem, v: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    if !e.conserves_reversed() {
        return Ok(RingElem::zero());
    }
    let w = fused_weight(x, v, u, EdgeLabels::new(e.c, e.b, e.a, e.d))?;
    if w.is_zero() {
        return Ok(w);
    }
    Ok(gauge_factor(u, v, e.a, e.c)?.mul(&w))
}

/// The spin-1 weight rebuilt from the dual table:
/// `(uv;q)_c/(uv;q)_a · (q;q)_a/(q;q)_c · W*_{x;(v,u)}(c,b,a,d)`.
pub fn gauge_related_dual(x: &RingElem, u: &RingElem, v: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    let w = spin1_dual_weight(x, v, u, EdgeLabels::new(e.c, e.b, e.a, e.d))?;
    if w.is_zero() {
        return Ok(w);
    }
    Ok(gauge_factor(u, v, e.a, e.c)?.mul(&w))
}

fn r_table(r: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    let one = RingElem::one();
    let q = RingElem::q();
    let den = one.sub(&q.mul(r));
    let num = match (e.a, e.b, e.c, e.d) {
        (0, 0, 0, 0) | (1, 1, 1, 1) => return Ok(one),
        (1, 0, 1, 0) => q.mul(&one.sub(r)),
        (1, 0, 0, 1) => one.sub(&q),
        (0, 1, 0, 1) => one.sub(r),
        (0, 1, 1, 0) => one.sub(&q).mul(r),
        _ => return Ok(RingElem::zero()),
    };
    num.checked_div(&den)
}

/// Spin-1 cross weight `R_{x/y}` between two thin rows.
pub fn r_spin1(x: &RingElem, y: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    r_table(&y.checked_div(x)?, e)
}

/// Cross weight between a thin row at `y` and a reversed thin row at `x`.
///
/// Same table as [`r_spin1`] with `y/x` replaced by `xy` and the labels of
/// the reversed line complemented, so it vanishes unless `a + d = b + c`.
pub fn r_spin1_dual(x: &RingElem, y: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    if e.b > 1 || e.d > 1 {
        return Ok(RingElem::zero());
    }
    r_table(&x.mul(y), EdgeLabels::new(e.a, 1 - e.b, e.c, 1 - e.d))
}

/// Fused cross weight `ℝ_{x/y}(a,b,c,d) = (x/y)^d (x/y;q)_{c-b} [a choose c-b]_q`.
pub fn r_fused(x: &RingElem, y: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    if !e.conserves() || e.c < e.b {
        return Ok(RingElem::zero());
    }
    let z = x.checked_div(y)?;
    Ok(z.pow(e.d).mul(&poch(&z, e.c - e.b)).mul(&qbin(e.a, (e.c - e.b) as i64)))
}

/// Cross weight between a fused row at `y` (vertical labels `a, c`) and a
/// reversed thin row at `x` (horizontal labels `b, d`); vanishes unless `a + d = b + c`.
pub fn mixed_cross(x: &RingElem, y: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    let EdgeLabels { a, b, d, .. } = e;
    if !e.conserves_reversed() || b > 1 || d > 1 {
        return Ok(RingElem::zero());
    }
    let one = RingElem::one();
    let xy = x.mul(y);
    let qm = q_power(a as i64);
    let num = match (b, d) {
        (1, 1) => xy.add(&qm),
        (1, 0) => one.sub(&qm),
        (0, 1) => xy.clone(),
        _ => one.clone(),
    };
    num.checked_div(&one.add(&xy))
}

/// Weight of the coefficient grid of the general expansion, row spectral `y`,
/// column pair `(u, v)`:
/// `Σ_p v^{b-p} ∏_{j<c-p}(y - u q^j) (vy;q)_p [c+d-p choose c-p]_q [b choose p]_q`.
pub fn expansion_d(y: &RingElem, u: &RingElem, v: &RingElem, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
    if !e.conserves() {
        return Ok(RingElem::zero());
    }
    let EdgeLabels { b, c, d, .. } = e;
    let vy = v.mul(y);
    let mut sum = RingElem::zero();
    for p in 0..=b.min(c) {
        let mut term = qbin(c + d - p, (c - p) as i64).mul(&qbin(b, p as i64));
        if term.is_zero() {
            continue;
        }
        term = term.mul(&v.pow(b - p)).mul(&poch(&vy, p));
        for j in 0..c - p {
            term = term.mul(&y.sub(&u.mul(&q_power(j as i64))));
        }
        sum = sum.add(&term);
    }
    Ok(sum)
}

/// `1_{b ≤ c} [a choose c-b]_q`
pub fn expansion_a(e: EdgeLabels) -> RingElem {
    if !e.conserves() || e.b > e.c {
        return RingElem::zero();
    }
    qbin(e.a, (e.c - e.b) as i64)
}

/// `1_{b ≤ c} (-1)^{c-b} q^{(c-b)(c-b-1)/2} [a choose c-b]_q`
pub fn expansion_b(e: EdgeLabels) -> RingElem {
    if !e.conserves() || e.b > e.c {
        return RingElem::zero();
    }
    let k = e.c - e.b;
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    int(sign).mul(&q_power((k as i64) * (k as i64 - 1) / 2)).mul(&qbin(e.a, k as i64))
}

/// `1_{c ≤ b} [b choose c]_q`
pub fn expansion_c(e: EdgeLabels) -> RingElem {
    if !e.conserves() || e.c > e.b {
        return RingElem::zero();
    }
    qbin(e.b, e.c as i64)
}

/// A weight rule together with its parameters.
#[derive(Clone, Debug)]
pub enum WeightFamily {
    General(GeneralParams),
    Spin1 { x: RingElem, u: RingElem, v: RingElem },
    Spin1Dual { x: RingElem, u: RingElem, v: RingElem },
    Fused { x: RingElem, u: RingElem, v: RingElem },
    FusedDual { x: RingElem, u: RingElem, v: RingElem },
    RSpin1 { x: RingElem, y: RingElem },
    RSpin1Dual { x: RingElem, y: RingElem },
    RFused { x: RingElem, y: RingElem },
    MixedCross { x: RingElem, y: RingElem },
    ExpansionD { y: RingElem, u: RingElem, v: RingElem },
    ExpansionA,
    ExpansionB,
    ExpansionC,
}

impl WeightFamily {
    pub fn eval(&self, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
        use WeightFamily::*;
        match self {
            General(p) => general_weight(p, e),
            Spin1 { x, u, v } => spin1_weight(x, u, v, e),
            Spin1Dual { x, u, v } => spin1_dual_weight(x, u, v, e),
            Fused { x, u, v } => fused_weight(x, u, v, e),
            FusedDual { x, u, v } => fused_dual_weight(x, u, v, e),
            RSpin1 { x, y } => r_spin1(x, y, e),
            RSpin1Dual { x, y } => r_spin1_dual(x, y, e),
            RFused { x, y } => r_fused(x, y, e),
            MixedCross { x, y } => mixed_cross(x, y, e),
            ExpansionD { y, u, v } => expansion_d(y, u, v, e),
            ExpansionA => Ok(expansion_a(e)),
            ExpansionB => Ok(expansion_b(e)),
            ExpansionC => Ok(expansion_c(e)),
        }
    }

    /// Whether the rule conserves `a + d = b + c` instead of `a + b = c + d`.
    pub fn is_reversed(&self) -> bool {
        matches!(
            self,
            WeightFamily::Spin1Dual { .. }
                | WeightFamily::FusedDual { .. }
                | WeightFamily::RSpin1Dual { .. }
                | WeightFamily::MixedCross { .. }
        )
    }

    pub fn conserves(&self, e: EdgeLabels) -> bool {
        if self.is_reversed() {
            e.conserves_reversed()
        } else {
            e.conserves()
        }
    }

    /// Capacity of the horizontal line, if finite.
    pub fn horizontal_bound(&self) -> Option<u32> {
        use WeightFamily::*;
        match self {
            General(p) => p.spin_l,
            Spin1 { .. } | Spin1Dual { .. } | RSpin1 { .. } | RSpin1Dual { .. } | MixedCross { .. } => Some(1),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32, c: u32, d: u32) -> EdgeLabels {
        EdgeLabels::new(a, b, c, d)
    }

    fn sym(s: &str) -> RingElem {
        RingElem::var(s.parse().unwrap())
    }

    fn q() -> RingElem {
        RingElem::q()
    }

    fn one() -> RingElem {
        RingElem::one()
    }

    #[test]
    fn phi_examples() {
        let (x, y) = (sym("x1"), sym("y1"));
        assert_eq!(phi(0, 0, &x, &y).unwrap(), one());
        assert_eq!(phi(2, 1, &x, &y).unwrap(), RingElem::zero());
        let want = poch(&y.checked_div(&x).unwrap(), 3).checked_div(&poch(&y, 3)).unwrap();
        assert_eq!(phi(0, 3, &x, &y).unwrap(), want);
    }

    #[test]
    fn table_examples() {
        let (x, u, v) = (sym("x1"), sym("u1"), sym("v1"));
        let m = 2;
        let got = spin1_weight(&x, &u, &v, e(m, 1, m, 1)).unwrap();
        let want = x.add(&v.mul(&q().pow(m))).checked_div(&one().add(&u.mul(&x))).unwrap();
        assert_eq!(got, want);
        assert_eq!(fused_weight(&x, &u, &v, e(1, 0, 0, 1)).unwrap(), x);
        assert_eq!(fused_weight(&x, &u, &v, e(1, 0, 1, 0)).unwrap(), one().sub(&u.mul(&x)));
        let y = sym("y1");
        let z = x.checked_div(&y).unwrap();
        assert_eq!(r_fused(&x, &y, e(1, 0, 1, 0)).unwrap(), one().sub(&z));
        assert_eq!(r_fused(&x, &y, e(1, 0, 0, 1)).unwrap(), z);
        assert_eq!(expansion_a(e(2, 0, 1, 1)), one().add(&q()));
        assert!(spin1_weight(&x, &u, &v, e(1, 0, 0, 0)).unwrap().is_zero());
        assert!(fused_weight(&x, &u, &v, e(2, 1, 0, 0)).unwrap().is_zero());
        assert!(expansion_c(e(0, 1, 0, 0)).is_zero());
    }

    #[test]
    fn specialising_the_spin1_table() {
        // m = 1 bottom-right entry at u = v = 0 is x
        let (x, u, v) = (sym("x1"), sym("u1"), sym("v1"));
        let w = spin1_weight(&x, &u, &v, e(1, 1, 1, 1)).unwrap();
        let w0 = w.subs(&[(Var::u(1), RingElem::zero()), (Var::v(1), RingElem::zero())]).unwrap();
        assert_eq!(w0, x);
    }

    #[test]
    fn fused_weight_at_zero_spectral() {
        let (u, v) = (sym("u1"), sym("v1"));
        for a in 0..3 {
            // with an empty left edge nothing turns
            for c in 0..5 {
                for d in 0..3 {
                    let w = fused_weight(&RingElem::zero(), &u, &v, e(a, 0, c, d)).unwrap();
                    let want = if d == 0 && a == c { one() } else { RingElem::zero() };
                    assert_eq!(w, want, "labels {a} 0 {c} {d}");
                }
            }
        }
    }
}
