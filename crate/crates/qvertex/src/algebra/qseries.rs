use super::{Coefficient, Monomial, Polynomial, RationalFunction, Var};

/// `q^k` for any integer `k`.
pub fn q_power<C: Coefficient>(k: i64) -> RationalFunction<C> {
    let p: RationalFunction<C> = Polynomial::term(Monomial::pow(Var::q(), k.unsigned_abs() as u32), C::one()).into();
    if k >= 0 {
        p
    } else {
        p.inverse().expect("q is nonzero")
    }
}

/// `(a; q)_k = ∏_{j<k} (1 - a q^j)`.
pub fn q_pochhammer<C: Coefficient>(a: &RationalFunction<C>, k: u32) -> RationalFunction<C> {
    let one = RationalFunction::one();
    let mut result = RationalFunction::one();
    for j in 0..k {
        result = result.mul(&one.sub(&a.mul(&q_power(j as i64))));
        if result.is_zero() {
            break;
        }
    }
    result
}

/// `(q; q)_k` as a polynomial.
pub fn q_factorial<C: Coefficient>(k: u32) -> Polynomial<C> {
    let one = Polynomial::one();
    let mut p = Polynomial::one();
    for j in 1..=k {
        p = p.mul(&one.sub(&Polynomial::var(Var::q()).pow(j)));
    }
    p
}

/// Gaussian binomial coefficient, zero outside `0 <= b <= a`.
///
/// Built row by row with `[a,b] = [a-1,b-1] + q^b [a-1,b]`.
pub fn q_binomial<C: Coefficient>(a: u32, b: i64) -> Polynomial<C> {
    if b < 0 || b > a as i64 {
        return Polynomial::zero();
    }
    let b = b as u32;
    let b = b.min(a - b);
    let mut row: Vec<Polynomial<C>> = vec![Polynomial::one()];
    for n in 1..=a {
        let width = (n.min(b) + 1) as usize;
        let mut next = Vec::with_capacity(width);
        for k in 0..width {
            let left = if k >= 1 { row.get(k - 1).cloned().unwrap_or_default() } else { Polynomial::zero() };
            let up = row.get(k).cloned().unwrap_or_default();
            let shifted = up.mul_term(&Monomial::pow(Var::q(), k as u32), &C::one());
            next.push(left.add(&shifted));
        }
        row = next;
    }
    row[b as usize].clone()
}
