//! `--set` parameter bindings.

use std::collections::BTreeMap;
use std::fmt;

use qvertex::{AlgebraError, Rational, RingElem, Var, VarKind};

/// `u=0` binds every `u_i`; `u3=1/2` binds `u_3` alone and wins over a
/// whole-sequence binding.
#[derive(Debug, Clone, Default)]
pub struct Bindings {
    whole: BTreeMap<VarKind, (String, RingElem)>,
    single: BTreeMap<Var, (String, RingElem)>,
}

fn kind_of(letter: &str) -> Option<VarKind> {
    Some(match letter {
        "x" => VarKind::X,
        "y" => VarKind::Y,
        "u" => VarKind::U,
        "v" => VarKind::V,
        "w" => VarKind::W,
        _ => return None,
    })
}

impl Bindings {
    pub fn parse(items: &[String]) -> Result<Bindings, String> {
        let mut out = Bindings::default();
        for item in items {
            let (name, value) = item.split_once('=').ok_or_else(|| format!("binding `{item}` is not of the form name=value"))?;
            let (name, value) = (name.trim(), value.trim());
            let value: Rational = value.parse().map_err(|_| format!("binding `{item}`: `{value}` is not a rational number"))?;
            let value = RingElem::constant(value);
            if let Some(kind) = kind_of(name) {
                out.whole.insert(kind, (item.clone(), value));
            } else {
                let var: Var = name.parse().map_err(|e: AlgebraError| format!("binding `{item}`: {e}"))?;
                out.single.insert(var, (item.clone(), value));
            }
        }
        Ok(out)
    }

    fn lookup(&self, var: Var) -> Option<&(String, RingElem)> {
        self.single.get(&var).or_else(|| self.whole.get(&var.kind()))
    }

    pub fn get(&self, var: Var) -> Option<RingElem> {
        self.lookup(var).map(|(_, r)| r.clone())
    }

    pub fn value_or_symbol(&self, var: Var) -> RingElem {
        self.get(var).unwrap_or_else(|| RingElem::var(var))
    }

    /// Substitutes all bound variables at once.
    pub fn apply(&self, r: &RingElem) -> Result<RingElem, AlgebraError> {
        let subs: Vec<(Var, RingElem)> = r.vars().into_iter().filter_map(|v| self.get(v).map(|val| (v, val))).collect();
        if subs.is_empty() {
            return Ok(r.clone());
        }
        r.subs(&subs)
    }

    /// Substitutes one variable at a time and names the binding at which a
    /// pole is hit.
    pub fn apply_stepwise(&self, r: &RingElem) -> Result<RingElem, String> {
        let mut cur = r.clone();
        for v in r.vars() {
            if let Some((src, val)) = self.lookup(v) {
                cur = cur.subs(&[(v, val.clone())]).map_err(|e| format!("{e} under binding `{src}` (at {v})"))?;
            }
        }
        Ok(cur)
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all: Vec<&str> = self.whole.values().chain(self.single.values()).map(|(s, _)| s.as_str()).collect();
        write!(f, "{}", all.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_overrides_whole() {
        let b = Bindings::parse(&["u=0".into(), "u3=1/2".into()]).unwrap();
        assert_eq!(b.get(Var::u(1)), Some(RingElem::zero()));
        assert_eq!(b.get(Var::u(3)), Some(RingElem::constant(Rational::new(1.into(), 2.into()))));
        assert_eq!(b.get(Var::v(1)), None);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Bindings::parse(&["u".into()]).is_err());
        assert!(Bindings::parse(&["z=1".into()]).is_err());
        assert!(Bindings::parse(&["u=abc".into()]).is_err());
    }

    #[test]
    fn stepwise_names_the_pole() {
        let q = RingElem::q();
        let r = RingElem::one().checked_div(&RingElem::one().sub(&q)).unwrap();
        let b = Bindings::parse(&["q=1".into()]).unwrap();
        let err = b.apply_stepwise(&r).unwrap_err();
        assert!(err.contains("q=1"), "{err}");
    }
}
