use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Coefficient, Monomial, Var};

/// Sparse multivariate polynomial: terms sorted by increasing monomial, no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::constant(C::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms, merging repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut v: Vec<(Monomial, C)> = terms.into_iter().collect();
        Polynomial::normalize(&mut v);
        Polynomial { terms: v }
    }

    fn normalize(v: &mut Vec<(Monomial, C)>) {
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(v.len());
        for (m, c) in v.drain(..) {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1.add_assign_ref(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        *v = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    pub fn trailing_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> C {
        self.terms.last().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).min().unwrap_or(0)
    }

    /// Sorted list of the variables that occur.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|t| t.0.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // multiplying by a monomial preserves the order
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a.mul_ref(c)))
                .collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { b[j].1.neg_ref() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { t.1.neg_ref() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() <= 8 {
            // repeated merging keeps everything sorted without a global sort
            let mut acc = Polynomial::zero();
            for (m, c) in &small.terms {
                acc = acc.add(&big.mul_term(m, c));
            }
            return acc;
        }
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(e) => e.add_assign_ref(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|t| !t.1.is_zero()).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((m.div(dm)?, c.div_ref(dc)));
            }
            return Some(Polynomial { terms: out });
        }
        // cheap necessary conditions: leading and trailing monomials divide,
        // and no variable degree of d exceeds that of self
        let (dlm, dlc) = d.leading_term().unwrap();
        let (dtm, _) = d.trailing_term().unwrap();
        if !dlm.divides(&self.leading_term().unwrap().0) || !dtm.divides(&self.trailing_term().unwrap().0) {
            return None;
        }
        for v in d.vars() {
            if d.degree_in(v) > self.degree_in(v) || d.min_degree_in(v) > self.min_degree_in(v) {
                return None;
            }
        }
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, C)> = Vec::new();
        while let Some((lm, lc)) = rem.pop_last() {
            let qm = lm.div(dlm)?;
            let qc = lc.div_ref(dlc);
            for (m, c) in d.terms.iter().rev().skip(1) {
                let pm = m.mul(&qm);
                let pc = c.mul_ref(&qc);
                match rem.get_mut(&pm) {
                    Some(e) => {
                        *e = e.sub_ref(&pc);
                        if e.is_zero() {
                            rem.remove(&pm);
                        }
                    }
                    None => {
                        rem.insert(pm, pc.neg_ref());
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(Polynomial { terms: quot })
    }

    /// Greatest common monomial divisor of all terms (one for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some(t) => t.0.clone(),
            None => return Monomial::one(),
        };
        it.fold(first, |g, t| if g.is_one() { g } else { g.gcd(&t.0) })
    }

    /// Keeps only the terms whose degree in the variables accepted by `pred`
    /// is at most `max`.
    pub fn truncate(&self, pred: impl Fn(Var) -> bool, max: u32) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.degree_in(&pred) <= max)
                .cloned()
                .collect(),
        }
    }

    /// Product truncated to degree `max` in the variables accepted by `pred`.
    pub fn mul_truncated(&self, other: &Self, pred: impl Fn(Var) -> bool + Copy, max: u32) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        let db: Vec<u32> = other.terms.iter().map(|t| t.0.degree_in(pred)).collect();
        for (ma, ca) in &self.terms {
            let da = ma.degree_in(pred);
            if da > max {
                continue;
            }
            for ((mb, cb), &d) in other.terms.iter().zip(&db) {
                if da + d > max {
                    continue;
                }
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(e) => e.add_assign_ref(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|t| !t.1.is_zero()).collect(),
        }
    }

    /// Lowest degree in the selected variables among the terms (`None` for zero).
    pub fn min_degree_among(&self, pred: impl Fn(Var) -> bool) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree_in(&pred)).min()
    }

    /// The part of degree exactly `deg` in the selected variables.
    pub fn homogeneous_part(&self, pred: impl Fn(Var) -> bool, deg: u32) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.degree_in(&pred) == deg)
                .cloned()
                .collect(),
        }
    }

    /// Sets the variables accepted by `pred` to zero.
    pub fn at_zero(&self, pred: impl Fn(Var) -> bool) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.vars().all(|v| !pred(v)))
                .cloned()
                .collect(),
        }
    }

    /// Simultaneous substitution of polynomial values; unbound variables stay.
    pub fn substitute(&self, bind: &impl Fn(Var) -> Option<Polynomial<C>>) -> Self {
        let mut cache: BTreeMap<(Var, u32), Polynomial<C>> = BTreeMap::new();
        let mut terms: Vec<(Monomial, C)> = Vec::new();
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut keep: Vec<(Var, u32)> = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                match bind(v) {
                    None => keep.push((v, e)),
                    Some(val) => {
                        let p = cache.entry((v, e)).or_insert_with(|| val.pow(e)).clone();
                        factor = factor.mul(&p);
                        if factor.is_zero() {
                            break;
                        }
                    }
                }
            }
            if factor.is_zero() {
                continue;
            }
            let rest = Monomial::from_pairs(keep);
            if let Some(k) = factor.as_constant() {
                terms.push((rest, k));
            } else {
                acc = acc.add(&factor.mul_term(&rest, &C::one()));
            }
        }
        acc.add(&Polynomial::from_terms(terms))
    }

    /// Renames variables; `map` must be injective on the variables present.
    pub fn rename(&self, map: impl Fn(Var) -> Var) -> Self {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_pairs(m.iter().map(|(v, e)| (map(v), e))), c.clone())),
        )
    }

    /// Coefficients with respect to a single variable: `self = Σ_k coeffs[k] v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Self> {
        let deg = self.degree_in(v) as usize;
        let mut parts: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            parts[e as usize].push((rest, c.clone()));
        }
        parts.into_iter().map(Polynomial::from_terms).collect()
    }

    /// Evaluates all variables at constants; `None` if some variable is unbound.
    pub fn eval(&self, value: &impl Fn(Var) -> Option<C>) -> Option<C> {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = value(v)?;
                for _ in 0..e {
                    t = t.mul_ref(&x);
                }
            }
            total.add_assign_ref(&t);
        }
        Some(total)
    }
}

impl<C: Coefficient> Ord for Polynomial<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(x), Some(y)) => {
                    let o = x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl<C: Coefficient> PartialOrd for Polynomial<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    /// Terms from the leading one downwards, e.g. `x1^2 + (1/2)*q*x1 - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coef = if abs.is_integer() { abs.to_string() } else { format!("({abs})") };
            if m.is_one() {
                write!(f, "{coef}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coef}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
