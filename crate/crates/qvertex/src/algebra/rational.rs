use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{AlgebraError, Coefficient, Monomial, Polynomial, Var};

/// Element of the field of fractions of `C[vars]`.
///
/// The denominator is kept as a sorted list of monic factors with positive
/// multiplicities. Factors are split off the way the weight tables produce
/// them (monomials, binomials `t^k ± 1` into cyclotomic factors, everything
/// else as one monic block), and a factor is cancelled whenever it divides the
/// numerator exactly. Two elements are compared by cross-multiplication, so
/// equality never depends on the factor list being fully reduced.
#[derive(Clone)]
pub struct RationalFunction<C> {
    num: Polynomial<C>,
    den: Vec<(Polynomial<C>, u32)>,
}

type Factors<C> = Vec<(Polynomial<C>, u32)>;

impl<C: Coefficient> Default for RationalFunction<C> {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

impl<C: Coefficient> From<Polynomial<C>> for RationalFunction<C> {
    fn from(p: Polynomial<C>) -> Self {
        RationalFunction { num: p, den: Vec::new() }
    }
}

impl<C: Coefficient> RationalFunction<C> {
    pub fn zero() -> Self {
        Polynomial::zero().into()
    }

    pub fn one() -> Self {
        Polynomial::one().into()
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::from_int(n).into()
    }

    pub fn constant(c: C) -> Self {
        Polynomial::constant(c).into()
    }

    pub fn var(v: Var) -> Self {
        Polynomial::var(v).into()
    }

    pub fn q() -> Self {
        Self::var(Var::q())
    }

    /// `num / den`; fails when `den` is the zero polynomial.
    pub fn new(num: Polynomial<C>, den: Polynomial<C>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let (unit, factors) = split_factors(&den);
        let num = num.scale(&C::one().div_ref(&unit));
        Ok(Self::assemble(num, factors))
    }

    fn assemble(num: Polynomial<C>, den: Factors<C>) -> Self {
        let mut r = RationalFunction { num, den };
        r.cancel_all();
        r
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.num
    }

    /// Denominator factors with multiplicities, sorted.
    pub fn denominator_factors(&self) -> &[(Polynomial<C>, u32)] {
        &self.den
    }

    /// The denominator as one expanded polynomial (monic).
    pub fn denominator(&self) -> Polynomial<C> {
        expand_factors(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial<C>> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Sorted variables occurring in numerator or denominator.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        for (f, _) in &self.den {
            vs.extend(f.vars());
        }
        vs.sort();
        vs.dedup();
        vs
    }

    fn cancel_all(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|t| t.1 > 0);
    }

    fn cancel_some(&mut self, which: &[Polynomial<C>]) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, e) in self.den.iter_mut() {
            if which.binary_search(f).is_err() {
                continue;
            }
            while *e > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|t| t.1 > 0);
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let other_num = if negate { other.num.neg() } else { other.num.clone() };
        if self.is_zero() {
            return RationalFunction { num: other_num, den: other.den.clone() };
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_empty() && other.den.is_empty() {
            return self.num.add(&other_num).into();
        }
        if self.den == other.den {
            let mut r = RationalFunction { num: self.num.add(&other_num), den: self.den.clone() };
            let shared: Vec<Polynomial<C>> = self.den.iter().map(|t| t.0.clone()).collect();
            r.cancel_some(&shared);
            return r;
        }
        let (mut lcm, mut fa, mut fb, mut shared) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        let (a, b) = (&self.den, &other.den);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    lcm.push(a[i].clone());
                    fb.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    lcm.push(b[j].clone());
                    fa.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (ea, eb) = (a[i].1, b[j].1);
                    let m = ea.max(eb);
                    lcm.push((a[i].0.clone(), m));
                    if m > ea {
                        fa.push((a[i].0.clone(), m - ea));
                    }
                    if m > eb {
                        fb.push((a[i].0.clone(), m - eb));
                    }
                    shared.push(a[i].0.clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        let num = self.num.mul(&expand_factors(&fa)).add(&other_num.mul(&expand_factors(&fb)));
        let mut r = RationalFunction { num, den: lcm };
        r.cancel_some(&shared);
        r
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_empty() && other.den.is_empty() {
            return self.num.mul(&other.num).into();
        }
        let mut an = self.num.clone();
        let mut bn = other.num.clone();
        let mut ad = self.den.clone();
        let mut bd = other.den.clone();
        cancel_against(&mut an, &mut bd);
        cancel_against(&mut bn, &mut ad);
        RationalFunction { num: an.mul(&bn), den: merge_factors(&ad, &bd) }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let (unit, factors) = split_factors(&self.num);
        let num = expand_factors(&self.den).scale(&C::one().div_ref(&unit));
        Ok(RationalFunction { num, den: factors })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        match e {
            0 => Self::one(),
            1 => self.clone(),
            _ => RationalFunction {
                num: self.num.pow(e),
                den: self.den.iter().map(|(f, k)| (f.clone(), k * e)).collect(),
            },
        }
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow(e.unsigned_abs() as u32))
    }

    /// Simultaneous substitution of the bound variables.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RationalFunction<C>>) -> Result<Self, AlgebraError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let touched = self.vars().iter().any(|v| bindings.contains_key(v));
        if !touched {
            return Ok(self.clone());
        }
        if bindings.values().all(|b| b.den.is_empty()) {
            let bind = |v: Var| bindings.get(&v).map(|b| b.num.clone());
            let num = self.num.substitute(&bind);
            let mut unit = C::one();
            let mut den: Factors<C> = Vec::new();
            for (f, e) in &self.den {
                let g = f.substitute(&bind);
                if g.is_zero() {
                    return Err(AlgebraError::ZeroDenominator);
                }
                let (u, fs) = split_factors(&g);
                for _ in 0..*e {
                    unit = unit.mul_ref(&u);
                }
                let fs: Factors<C> = fs.into_iter().map(|(p, k)| (p, k * e)).collect();
                den = merge_factors(&den, &fs);
            }
            return Ok(Self::assemble(num.scale(&C::one().div_ref(&unit)), den));
        }
        let num = eval_general(&self.num, bindings);
        let mut den = Self::one();
        for (f, e) in &self.den {
            let g = eval_general(f, bindings);
            if g.is_zero() {
                return Err(AlgebraError::ZeroDenominator);
            }
            den = den.mul(&g.pow(*e));
        }
        num.checked_div(&den)
    }

    /// Convenience wrapper around [`substitute`](Self::substitute) for a list of bindings.
    pub fn subs(&self, bindings: &[(Var, RationalFunction<C>)]) -> Result<Self, AlgebraError> {
        let map: BTreeMap<Var, RationalFunction<C>> = bindings.iter().cloned().collect();
        self.substitute(&map)
    }

    /// Renames variables (injective maps only).
    pub fn rename(&self, map: impl Fn(Var) -> Var + Copy) -> Self {
        let num = self.num.rename(map);
        let mut unit = C::one();
        let mut den: Factors<C> = Vec::new();
        for (f, e) in &self.den {
            let (u, fs) = split_factors(&f.rename(map));
            for _ in 0..*e {
                unit = unit.mul_ref(&u);
            }
            let fs: Factors<C> = fs.into_iter().map(|(p, k)| (p, k * e)).collect();
            den = merge_factors(&den, &fs);
        }
        RationalFunction { num: num.scale(&C::one().div_ref(&unit)), den }
    }

    /// Power-series truncation: expands in the variables accepted by `graded`
    /// and keeps every term of total graded degree at most `degree`.
    pub fn truncate(&self, graded: impl Fn(Var) -> bool + Copy, degree: u32) -> Result<Self, AlgebraError> {
        let mut num = self.num.truncate(graded, degree);
        let mut unit = C::one();
        let mut den: Factors<C> = Vec::new();
        for (f, e) in &self.den {
            let f0 = f.at_zero(graded);
            if f0.is_zero() {
                return Err(AlgebraError::NotSeriesExpandable);
            }
            let g = f.sub(&f0);
            if g.is_zero() {
                let (u, fs) = split_factors(&f0);
                for _ in 0..*e {
                    unit = unit.mul_ref(&u);
                }
                let fs: Factors<C> = fs.into_iter().map(|(p, k)| (p, k * e)).collect();
                den = merge_factors(&den, &fs);
                continue;
            }
            // 1/f = Σ_k (-g)^k / f0^(k+1); bring to the common denominator f0^(degree+1)
            let neg_g = g.neg();
            let mut series = Polynomial::zero();
            let mut gk = Polynomial::one();
            for k in 0..=degree {
                series = series.add(&gk.mul(&f0.pow(degree - k)));
                gk = gk.mul_truncated(&neg_g, graded, degree);
                if gk.is_zero() {
                    break;
                }
            }
            for _ in 0..*e {
                num = num.mul_truncated(&series, graded, degree);
            }
            let (u, fs) = split_factors(&f0);
            let k = (degree + 1) * e;
            for _ in 0..k {
                unit = unit.mul_ref(&u);
            }
            let fs: Factors<C> = fs.into_iter().map(|(p, m)| (p, m * k)).collect();
            den = merge_factors(&den, &fs);
        }
        Ok(Self::assemble(num.scale(&C::one().div_ref(&unit)), den))
    }

    /// Value at `v = 0` after cancelling common powers of `v`; fails on a pole.
    pub fn limit_at_zero(&self, v: Var) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Ok(Self::zero());
        }
        let den = self.denominator();
        let (kn, kd) = (self.num.min_degree_in(v), den.min_degree_in(v));
        match kn.cmp(&kd) {
            std::cmp::Ordering::Less => Err(AlgebraError::ZeroDenominator),
            std::cmp::Ordering::Greater => Ok(Self::zero()),
            std::cmp::Ordering::Equal => {
                let n0 = self.num.coefficients_in(v).swap_remove(kn as usize);
                let d0 = den.coefficients_in(v).swap_remove(kd as usize);
                Self::new(n0, d0)
            }
        }
    }

    /// Cross-multiplied equality test.
    pub fn equals(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let mut fa: Factors<C> = Vec::new();
        let mut fb: Factors<C> = Vec::new();
        let mut bmap: BTreeMap<&Polynomial<C>, u32> = other.den.iter().map(|(f, e)| (f, *e)).collect();
        for (f, ea) in &self.den {
            let eb = bmap.remove(f).unwrap_or(0);
            if eb > *ea {
                fa.push((f.clone(), eb - ea));
            } else if ea > &eb {
                fb.push((f.clone(), ea - eb));
            }
        }
        for (f, eb) in bmap {
            fa.push((f.clone(), eb));
        }
        self.num.mul(&expand_factors(&fa)) == other.num.mul(&expand_factors(&fb))
    }
}

fn eval_general<C: Coefficient>(
    p: &Polynomial<C>,
    bindings: &BTreeMap<Var, RationalFunction<C>>,
) -> RationalFunction<C> {
    let mut cache: BTreeMap<(Var, u32), RationalFunction<C>> = BTreeMap::new();
    let mut acc = RationalFunction::zero();
    for (m, c) in p.terms() {
        let mut keep = Vec::new();
        let mut t = RationalFunction::constant(c.clone());
        for (v, e) in m.iter() {
            match bindings.get(&v) {
                None => keep.push((v, e)),
                Some(b) => {
                    let pw = cache.entry((v, e)).or_insert_with(|| b.pow(e)).clone();
                    t = t.mul(&pw);
                }
            }
        }
        let rest: RationalFunction<C> = Polynomial::term(Monomial::from_pairs(keep), C::one()).into();
        acc = acc.add(&t.mul(&rest));
    }
    acc
}

fn cancel_against<C: Coefficient>(num: &mut Polynomial<C>, den: &mut Factors<C>) {
    for (f, e) in den.iter_mut() {
        while *e > 0 {
            match num.div_exact(f) {
                Some(q) => {
                    *num = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    den.retain(|t| t.1 > 0);
}

fn merge_factors<C: Coefficient>(a: &Factors<C>, b: &Factors<C>) -> Factors<C> {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let mut map: BTreeMap<Polynomial<C>, u32> = a.iter().cloned().collect();
    for (f, e) in b {
        *map.entry(f.clone()).or_insert(0) += e;
    }
    map.into_iter().collect()
}

fn expand_factors<C: Coefficient>(fs: &Factors<C>) -> Polynomial<C> {
    let mut p = Polynomial::one();
    for (f, e) in fs {
        p = p.mul(&f.pow(*e));
    }
    p
}

/// Splits a nonzero polynomial into a unit and monic factors.
fn split_factors<C: Coefficient>(p: &Polynomial<C>) -> (C, Factors<C>) {
    let content = p.monomial_content();
    let mut factors: Factors<C> = content.iter().map(|(v, e)| (Polynomial::var(v), e)).collect();
    let rest = if content.is_one() {
        p.clone()
    } else {
        p.div_exact(&Polynomial::term(content, C::one())).expect("content divides")
    };
    if let Some(c) = rest.as_constant() {
        return (c, sorted(factors));
    }
    let lc = rest.leading_coefficient();
    let monic = rest.scale(&C::one().div_ref(&lc));
    match cyclotomic_split(&monic) {
        Some(parts) => factors.extend(parts.into_iter().map(|f| (f, 1))),
        None => factors.push((monic, 1)),
    }
    (lc, sorted(factors))
}

fn sorted<C: Coefficient>(fs: Factors<C>) -> Factors<C> {
    let mut map: BTreeMap<Polynomial<C>, u32> = BTreeMap::new();
    for (f, e) in fs {
        *map.entry(f).or_insert(0) += e;
    }
    map.into_iter().collect()
}

/// Factors a monic binomial `t^k - 1` or `t^k + 1` in a single variable into
/// cyclotomic polynomials.
fn cyclotomic_split<C: Coefficient>(p: &Polynomial<C>) -> Option<Vec<Polynomial<C>>> {
    let terms = p.terms();
    if terms.len() != 2 || !terms[0].0.is_one() {
        return None;
    }
    let lead: Vec<(Var, u32)> = terms[1].0.iter().collect();
    if lead.len() != 1 || !terms[1].1.is_one() {
        return None;
    }
    let (t, k) = lead[0];
    let c0 = &terms[0].1;
    let minus_one = C::one().neg_ref();
    let orders: Vec<u32> = if *c0 == minus_one {
        (1..=k).filter(|d| k % d == 0).collect()
    } else if c0.is_one() {
        (1..=2 * k).filter(|d| (2 * k) % d == 0 && k % d != 0).collect()
    } else {
        return None;
    };
    if orders.len() == 1 {
        return None;
    }
    Some(orders.into_iter().map(|n| cyclotomic(n, t)).collect())
}

/// The `n`-th cyclotomic polynomial in `t`.
pub fn cyclotomic<C: Coefficient>(n: u32, t: Var) -> Polynomial<C> {
    let mut p = Polynomial::var(t).pow(n).sub(&Polynomial::one());
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.div_exact(&cyclotomic(d, t)).expect("cyclotomic divisor");
    }
    p
}

impl<C: Coefficient> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<C: Coefficient> Eq for RationalFunction<C> {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl<C: Coefficient> $tr<&RationalFunction<C>> for &RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
                RationalFunction::$imp(self, rhs)
            }
        }
        impl<C: Coefficient> $tr<RationalFunction<C>> for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: RationalFunction<C>) -> RationalFunction<C> {
                RationalFunction::$imp(&self, &rhs)
            }
        }
        impl<C: Coefficient> $tr<&RationalFunction<C>> for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
                RationalFunction::$imp(&self, rhs)
            }
        }
        impl<C: Coefficient> $tr<RationalFunction<C>> for &RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: RationalFunction<C>) -> RationalFunction<C> {
                RationalFunction::$imp(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

fn div_or_panic<C: Coefficient>(a: &RationalFunction<C>, b: &RationalFunction<C>) -> RationalFunction<C> {
    a.checked_div(b).expect("division by zero rational function")
}

impl<C: Coefficient> Div<&RationalFunction<C>> for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
        div_or_panic(self, rhs)
    }
}

impl<C: Coefficient> Div<RationalFunction<C>> for RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn div(self, rhs: RationalFunction<C>) -> RationalFunction<C> {
        div_or_panic(&self, &rhs)
    }
}

impl<C: Coefficient> Div<&RationalFunction<C>> for RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn div(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
        div_or_panic(&self, rhs)
    }
}

impl<C: Coefficient> Neg for RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> RationalFunction<C> {
        RationalFunction::neg(&self)
    }
}

impl<C: Coefficient> Neg for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> RationalFunction<C> {
        RationalFunction::neg(self)
    }
}

impl<C: Coefficient> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        write!(f, "/")?;
        let single = self.den.len() == 1 && self.den[0].1 == 1;
        if !single {
            write!(f, "(")?;
        }
        for (k, (p, e)) in self.den.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if p.len() == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "({p})")?;
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if !single {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type R = RationalFunction<Rational64>;

    fn x(i: u32) -> R {
        R::var(Var::x(i))
    }

    fn q() -> R {
        R::q()
    }

    fn one() -> R {
        R::one()
    }

    #[test]
    fn cancellation_on_multiplication() {
        let a = (one() + x(1)) / (one() - q());
        let b = (one() - q()) / (one() + x(1));
        assert!((&a * &b).is_one());
        let c = (one() - q() * q()) / (one() - q());
        assert_eq!(c.as_polynomial().unwrap().to_string(), "q + 1");
    }

    #[test]
    fn addition_over_common_denominator() {
        let a = one() / (one() - x(1));
        let b = x(1) / (one() - x(1));
        assert!((&a - &b).is_one());
        let c = one() / x(1) + one() / x(2);
        assert_eq!(c, (x(1) + x(2)) / (x(1) * x(2)));
    }

    #[test]
    fn cyclotomic_splitting() {
        let p: Polynomial<Rational64> = cyclotomic(6, Var::q());
        assert_eq!(p.to_string(), "q^2 - q + 1");
        let f = one() / (one() - q().pow(6));
        assert_eq!(f.denominator_factors().len(), 4);
        assert_eq!(f.denominator(), (q().pow(6) - one()).as_polynomial().unwrap().clone());
    }

    #[test]
    fn substitution_detects_poles() {
        let f = one() / (one() - x(1));
        assert_eq!(f.subs(&[(Var::x(1), one())]), Err(AlgebraError::ZeroDenominator));
        let g = f.subs(&[(Var::x(1), q() / x(2))]).unwrap();
        assert_eq!(g, x(2) / (x(2) - q()));
    }

    #[test]
    fn geometric_series_truncation() {
        let xy = x(1) * R::var(Var::y(1));
        let f = one() / (one() - &xy);
        let t = f.truncate(|v| matches!(v.kind(), crate::algebra::VarKind::X | crate::algebra::VarKind::Y), 4).unwrap();
        assert_eq!(t, one() + &xy + xy.pow(2));
        let g = one() / (one() - q() - x(1));
        let tg = g.truncate(|v| v == Var::x(1), 1).unwrap();
        assert_eq!(tg, one() / (one() - q()) + x(1) / (one() - q()).pow(2));
    }
}

#[cfg(test)]
mod props {
    use crate::algebra::{q_binomial, q_pochhammer, q_power, Monomial, Polynomial, RationalFunction, Var, VarKind};
    use num_rational::BigRational;
    use proptest::prelude::*;

    type R = RationalFunction<BigRational>;
    type P = Polynomial<BigRational>;

    const VARS: [fn() -> Var; 3] = [Var::q, || Var::x(1), || Var::u(1)];

    fn poly(terms: Vec<([u32; 3], i64)>) -> P {
        Polynomial::from_terms(terms.into_iter().map(|(e, c)| {
            let m = Monomial::from_pairs(VARS.iter().zip(e).map(|(v, k)| (v(), k)));
            (m, BigRational::from_integer(c.into()))
        }))
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec(([0u32..3, 0..3, 0..3], -3i64..=3), 0..4).prop_map(poly)
    }

    fn arb_elem() -> impl Strategy<Value = R> {
        (arb_poly(), arb_poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| R::new(n, d).unwrap())
    }

    /// Denominator with constant term 1, so the element expands in `x1`.
    fn arb_series() -> impl Strategy<Value = R> {
        (arb_poly(), arb_poly()).prop_map(|(n, d)| {
            let d = P::one().add(&d.mul(&P::var(Var::x(1))));
            R::new(n, d).unwrap()
        })
    }

    fn is_x(v: Var) -> bool {
        v.kind() == VarKind::X
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert!(a.sub(&a).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inverse().unwrap()), R::one());
            }
        }

        #[test]
        fn truncation_is_multiplicative(f in arb_series(), g in arb_series(), d in 0u32..4) {
            let lhs = f.mul(&g).truncate(is_x, d).unwrap();
            let rhs = f.truncate(is_x, d).unwrap().mul(&g.truncate(is_x, d).unwrap()).truncate(is_x, d).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_recurrence(a in arb_elem(), k in 0u32..5) {
            let next = q_pochhammer(&a, k).mul(&R::one().sub(&a.mul(&q_power(k as i64))));
            prop_assert_eq!(q_pochhammer(&a, k + 1), next);
        }

        #[test]
        fn pascal_recurrence(a in 2u32..9, b in 1i64..8) {
            prop_assume!(b < a as i64);
            let lhs: P = q_binomial(a, b);
            let shifted = P::var(Var::q()).pow(b as u32).mul(&q_binomial(a - 1, b));
            prop_assert_eq!(lhs, q_binomial::<BigRational>(a - 1, b - 1).add(&shifted));
        }
    }
}
