//! Lossless JSON form of [`RingElem`]:
//! `{"vars": [..], "num": [{"exp": {"x1": 2}, "coef": "3/2"}], "den": [..]}`.
//!
//! `den` holds the expanded denominator. Coefficients are decimal strings
//! of arbitrary size.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Monomial, Polynomial};
use crate::{AlgebraError, Poly, Rational, RingElem, Var};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: BTreeMap<String, u32>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingElemJson {
    pub vars: Vec<String>,
    pub num: Vec<TermJson>,
    pub den: Vec<TermJson>,
}

fn terms(p: &Poly) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|(m, c)| TermJson {
            exp: m.iter().map(|(v, e)| (v.to_string(), e)).collect(),
            coef: c.to_string(),
        })
        .collect()
}

fn poly(ts: &[TermJson]) -> Result<Poly, AlgebraError> {
    let mut out = Vec::with_capacity(ts.len());
    for t in ts {
        let mut pairs = Vec::with_capacity(t.exp.len());
        for (name, &e) in &t.exp {
            pairs.push((name.parse::<Var>()?, e));
        }
        let c: Rational = t
            .coef
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("bad coefficient {:?}", t.coef)))?;
        out.push((Monomial::from_pairs(pairs), c));
    }
    Ok(Polynomial::from_terms(out))
}

impl From<&RingElem> for RingElemJson {
    fn from(r: &RingElem) -> RingElemJson {
        RingElemJson {
            vars: r.vars().iter().map(|v| v.to_string()).collect(),
            num: terms(r.numerator()),
            den: terms(&r.denominator()),
        }
    }
}

impl TryFrom<&RingElemJson> for RingElem {
    type Error = AlgebraError;

    fn try_from(j: &RingElemJson) -> Result<RingElem, AlgebraError> {
        RingElem::new(poly(&j.num)?, poly(&j.den)?)
    }
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RingElemJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<RingElem, D::Error> {
        let j = RingElemJson::deserialize(d)?;
        RingElem::try_from(&j).map_err(serde::de::Error::custom)
    }
}
