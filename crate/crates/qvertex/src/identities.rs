//! Executable checks of the identities satisfied by the weights and the
//! lattice functions.
//!
//! Every check compares two exact [`RingElem`]s and records the instance on
//! mismatch. Instances are independent and run on the rayon pool; results
//! are merged in a fixed order so reports are reproducible.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{q_factorial, q_power, AlgebraError, VarKind, MAX_INDEX};
use crate::families::{degeneration_of_lattice, multivar_oracle, Family, FamilyTag};
use crate::lattice::{
    brute_force_z, normalization, partition_function, skew_g, skew_g_dual, skew_j, skew_j_dual, ColumnParams,
    LatticeError, RowKind, RowSpec,
};
use crate::partitions::{partitions_in_box, sub_partitions, super_partitions, Partition};
use crate::weights::{
    fused_weight, gauge_related_dual, general_weight, r_fused, spin1_weight, EdgeLabels, GeneralParams, WeightFamily,
};
use crate::{RingElem, Var};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub lhs: RingElem,
    pub rhs: RingElem,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub identity_id: String,
    pub passed: bool,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall time; left out of the JSON so that output is reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(identity_id: impl Into<String>) -> VerificationReport {
        VerificationReport {
            identity_id: identity_id.into(),
            passed: true,
            instances_checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn check(&mut self, instance: impl fmt::Display, lhs: RingElem, rhs: RingElem) {
        self.instances_checked += 1;
        if lhs != rhs {
            self.passed = false;
            self.failures.push(Failure { instance: instance.to_string(), lhs, rhs });
        }
    }

    /// Records an instance that could not be evaluated.
    pub fn error(&mut self, instance: impl fmt::Display, err: impl fmt::Display) {
        self.instances_checked += 1;
        self.passed = false;
        self.notes.push(format!("{instance}: {err}"));
    }

    /// Records a property check; `detail` explains a violation.
    pub fn claim(&mut self, instance: impl fmt::Display, ok: bool, detail: impl FnOnce() -> String) {
        self.instances_checked += 1;
        if !ok {
            self.passed = false;
            self.notes.push(format!("{instance}: {}", detail()));
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.instances_checked += other.instances_checked;
        self.passed &= other.passed;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self.elapsed += other.elapsed;
    }

    fn timed(mut self, start: Instant) -> VerificationReport {
        self.elapsed = start.elapsed();
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

/// Runs `f` on every instance in parallel and folds the outcomes in order.
fn run_instances<I, F>(id: &str, instances: Vec<I>, f: F) -> VerificationReport
where
    I: Send + Sync + fmt::Display,
    F: Fn(&I) -> Result<(RingElem, RingElem), String> + Send + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<_> = instances.par_iter().map(|i| (i.to_string(), f(i))).collect();
    let mut report = VerificationReport::new(id);
    for (name, out) in outcomes {
        match out {
            Ok((l, r)) => report.check(name, l, r),
            Err(e) => report.error(name, e),
        }
    }
    report.timed(start)
}

fn sym(v: Var) -> RingElem {
    RingElem::var(v)
}

fn xvars(n: usize) -> Vec<RingElem> {
    (1..=n as u32).map(|i| sym(Var::x(i))).collect()
}

fn yvars(n: usize) -> Vec<RingElem> {
    (1..=n as u32).map(|i| sym(Var::y(i))).collect()
}

// ---------------------------------------------------------------------------
// Yang–Baxter equations

/// Which weights meet in the Yang–Baxter equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YbeTriple {
    /// `W_{L,M}(x/y)`, `W_{L,N}(x/z)`, `W_{M,N}(y/z)`
    General { l: u32, m: u32, n: u32 },
    /// spin-1 cross weight with two thin rows
    Spin1,
    /// thin reversed row at `x` against a thin row at `y`
    Dual,
    /// fused cross weight with two fused rows
    Fused,
    /// thin reversed row at `x` against a fused row at `y`
    Mixed,
}

impl fmt::Display for YbeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YbeTriple::General { l, m, n } => write!(f, "general({l},{m},{n})"),
            YbeTriple::Spin1 => f.write_str("spin1"),
            YbeTriple::Dual => f.write_str("dual"),
            YbeTriple::Fused => f.write_str("fused"),
            YbeTriple::Mixed => f.write_str("mixed"),
        }
    }
}

/// The vertex of the equation a mutation applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YbeVertex {
    Cross,
    X,
    Y,
}

/// Adds one to a single table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mutation<T> {
    pub target: T,
    pub labels: EdgeLabels,
}

struct Table {
    family: WeightFamily,
    bump: Option<EdgeLabels>,
    cache: Mutex<HashMap<EdgeLabels, RingElem>>,
}

impl Table {
    fn new(family: WeightFamily, bump: Option<EdgeLabels>) -> Table {
        Table { family, bump, cache: Mutex::new(HashMap::new()) }
    }

    fn get(&self, e: EdgeLabels) -> Result<RingElem, AlgebraError> {
        let bumped = self.bump == Some(e);
        if !bumped && !self.family.conserves(e) {
            return Ok(RingElem::zero());
        }
        if let Some(w) = self.cache.lock().expect("weight cache").get(&e) {
            return Ok(w.clone());
        }
        let mut w = self.family.eval(e)?;
        if bumped {
            w = w.add(&RingElem::one());
        }
        self.cache.lock().expect("weight cache").insert(e, w.clone());
        Ok(w)
    }
}

/// Weights of one equation with the label bounds of the y-line, the x-line
/// and the column.
struct YbeSetup {
    cross: Table,
    wx: Table,
    wy: Table,
    bounds: [Option<u32>; 3],
}

fn ybe_setup(triple: YbeTriple, mutation: Option<Mutation<YbeVertex>>) -> YbeSetup {
    let (x, y) = (sym(Var::x(1)), sym(Var::x(2)));
    let (u, v) = (sym(Var::u(1)), sym(Var::v(1)));
    let (r, wx, wy, bounds) = match triple {
        YbeTriple::General { l, m, n } => {
            let z = sym(Var::x(3));
            let ratio = |a: &RingElem, b: &RingElem| a.checked_div(b).expect("free variable");
            (
                WeightFamily::General(GeneralParams::new(ratio(&x, &y), l, m)),
                WeightFamily::General(GeneralParams::new(ratio(&x, &z), l, n)),
                WeightFamily::General(GeneralParams::new(ratio(&y, &z), m, n)),
                [Some(m), Some(l), Some(n)],
            )
        }
        YbeTriple::Spin1 => (
            WeightFamily::RSpin1 { x: x.clone(), y: y.clone() },
            WeightFamily::Spin1 { x, u: u.clone(), v: v.clone() },
            WeightFamily::Spin1 { x: y, u, v },
            [Some(1), Some(1), None],
        ),
        YbeTriple::Dual => (
            WeightFamily::RSpin1Dual { x: x.clone(), y: y.clone() },
            WeightFamily::Spin1Dual { x, u: u.clone(), v: v.clone() },
            WeightFamily::Spin1 { x: y, u, v },
            [Some(1), Some(1), None],
        ),
        YbeTriple::Fused => (
            WeightFamily::RFused { x: x.clone(), y: y.clone() },
            WeightFamily::Fused { x, u: u.clone(), v: v.clone() },
            WeightFamily::Fused { x: y, u, v },
            [None, None, None],
        ),
        YbeTriple::Mixed => (
            WeightFamily::MixedCross { x: x.clone(), y: y.clone() },
            WeightFamily::Spin1Dual { x, u: u.clone(), v: v.clone() },
            WeightFamily::Fused { x: y, u, v },
            [None, Some(1), None],
        ),
    };
    let bump = |t: YbeVertex| mutation.filter(|m| m.target == t).map(|m| m.labels);
    YbeSetup {
        cross: Table::new(r, bump(YbeVertex::Cross)),
        wx: Table::new(wx, bump(YbeVertex::X)),
        wy: Table::new(wy, bump(YbeVertex::Y)),
        bounds,
    }
}

/// Boundary of the equation: `a = (a1, a2, a3)` enter on the y-line, the
/// x-line and the column, `b = (b1, b2, b3)` leave on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YbeBoundary {
    pub a: [u32; 3],
    pub b: [u32; 3],
}

impl fmt::Display for YbeBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={:?} b={:?}", self.a, self.b)
    }
}

fn ybe_sides(s: &YbeSetup, bd: &YbeBoundary) -> Result<(RingElem, RingElem), AlgebraError> {
    let [a1, a2, a3] = bd.a;
    let [b1, b2, b3] = bd.b;
    let total: u32 = bd.a.iter().chain(&bd.b).sum();
    let bound = |k: usize| s.bounds[k].unwrap_or(total);
    let mut lhs = RingElem::zero();
    let mut rhs = RingElem::zero();
    for c1 in 0..=bound(0) {
        for c2 in 0..=bound(1) {
            let r_left = s.cross.get(EdgeLabels::new(a1, a2, c1, c2))?;
            let r_right = s.cross.get(EdgeLabels::new(c1, c2, b1, b2))?;
            if r_left.is_zero() && r_right.is_zero() {
                continue;
            }
            for c3 in 0..=bound(2) {
                if !r_left.is_zero() {
                    let w = s.wx.get(EdgeLabels::new(a3, c2, c3, b2))?;
                    if !w.is_zero() {
                        let w2 = s.wy.get(EdgeLabels::new(c3, c1, b3, b1))?;
                        lhs = lhs.add(&r_left.mul(&w).mul(&w2));
                    }
                }
                if !r_right.is_zero() {
                    let w = s.wy.get(EdgeLabels::new(a3, a1, c3, c1))?;
                    if !w.is_zero() {
                        let w2 = s.wx.get(EdgeLabels::new(c3, a2, b3, c2))?;
                        rhs = rhs.add(&w.mul(&w2).mul(&r_right));
                    }
                }
            }
        }
    }
    Ok((lhs, rhs))
}

/// Both sides of one instance of the Yang–Baxter equation.
pub fn ybe_instance(triple: YbeTriple, boundary: YbeBoundary) -> Result<(RingElem, RingElem), AlgebraError> {
    ybe_sides(&ybe_setup(triple, None), &boundary)
}

/// Every boundary with labels inside the spin bounds, unbounded lines
/// capped at `max_label`.
pub fn verify_ybe(triple: YbeTriple, max_label: u32) -> VerificationReport {
    verify_ybe_mutated(triple, max_label, None)
}

pub fn verify_ybe_mutated(triple: YbeTriple, max_label: u32, mutation: Option<Mutation<YbeVertex>>) -> VerificationReport {
    let setup = ybe_setup(triple, mutation);
    let cap: Vec<u32> = setup.bounds.iter().map(|b| b.unwrap_or(max_label)).collect();
    let mut boundaries = Vec::new();
    for a1 in 0..=cap[0] {
        for a2 in 0..=cap[1] {
            for a3 in 0..=cap[2] {
                for b1 in 0..=cap[0] {
                    for b2 in 0..=cap[1] {
                        for b3 in 0..=cap[2] {
                            boundaries.push(YbeBoundary { a: [a1, a2, a3], b: [b1, b2, b3] });
                        }
                    }
                }
            }
        }
    }
    run_instances(&format!("ybe/{triple}"), boundaries, |bd| ybe_sides(&setup, bd).map_err(|e| e.to_string()))
}

// ---------------------------------------------------------------------------
// Vertex-level identities

struct Labeled<T>(String, T);

impl<T> fmt::Display for Labeled<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `Σ_{c,d} W_{L,M}(a,b,c,d) = 1` for all `L, M ≤ max_spin`.
pub fn verify_stochasticity(max_spin: u32) -> VerificationReport {
    verify_stochasticity_mutated(max_spin, None)
}

/// As [`verify_stochasticity`], with the `(L, M)` table bumped at one entry.
pub fn verify_stochasticity_mutated(max_spin: u32, mutation: Option<Mutation<(u32, u32)>>) -> VerificationReport {
    let z = sym(Var::x(1));
    let mut cases = Vec::new();
    for l in 1..=max_spin {
        for m in 1..=max_spin {
            for a in 0..=m {
                for b in 0..=l {
                    cases.push(Labeled(format!("L={l} M={m} a={a} b={b}"), (l, m, a, b)));
                }
            }
        }
    }
    run_instances("stochasticity", cases, |Labeled(_, (l, m, a, b))| {
        let p = GeneralParams::new(z.clone(), *l, *m);
        let mut sum = RingElem::zero();
        for c in 0..=*m {
            let Some(d) = (a + b).checked_sub(c) else { continue };
            if d > *l {
                continue;
            }
            let e = EdgeLabels::new(*a, *b, c, d);
            let mut w = general_weight(&p, e).map_err(|e| e.to_string())?;
            if mutation.is_some_and(|mu| mu.target == (*l, *m) && mu.labels == e) {
                w = w.add(&RingElem::one());
            }
            sum = sum.add(&w);
        }
        Ok((sum, RingElem::one()))
    })
}

/// `Σ_{c,d} ℝ_{x/y}(a,b,c,d) = 1` for `a, b ≤ max_label`.
pub fn verify_fused_r_unity(max_label: u32) -> VerificationReport {
    let (x, y) = (sym(Var::x(1)), sym(Var::x(2)));
    let mut cases = Vec::new();
    for a in 0..=max_label {
        for b in 0..=max_label {
            cases.push(Labeled(format!("a={a} b={b}"), (a, b)));
        }
    }
    run_instances("fused-r-unity", cases, |Labeled(_, (a, b))| {
        let mut sum = RingElem::zero();
        for c in 0..=a + b {
            let e = EdgeLabels::new(*a, *b, c, a + b - c);
            sum = sum.add(&r_fused(&x, &y, e).map_err(|e| e.to_string())?);
        }
        Ok((sum, RingElem::one()))
    })
}

/// The thin weight against the one rebuilt from the reversed table.
pub fn verify_gauge(max_label: u32) -> VerificationReport {
    let (x, u, v) = (sym(Var::x(1)), sym(Var::u(1)), sym(Var::v(1)));
    let mut cases = Vec::new();
    for a in 0..=max_label {
        for c in 0..=max_label {
            for b in 0..=1u32 {
                for d in 0..=1u32 {
                    if a + b == c + d {
                        let e = EdgeLabels::new(a, b, c, d);
                        cases.push(Labeled(format!("{e:?}"), e));
                    }
                }
            }
        }
    }
    run_instances("gauge", cases, |Labeled(_, e)| {
        let w = spin1_weight(&x, &u, &v, *e).map_err(|e| e.to_string())?;
        let g = gauge_related_dual(&x, &u, &v, *e).map_err(|e| e.to_string())?;
        Ok((w, g))
    })
}

/// Reversed rows against `c`-ratios times the plain function with `u, v`
/// exchanged, for both lattices.
pub fn verify_lattice_gauge(max_size: u32, max_n: usize) -> VerificationReport {
    let mut cases = Vec::new();
    for lam in partitions_in_box(max_size, max_size as usize).into_iter().filter(|l| l.size() <= max_size) {
        for mu in sub_partitions(&lam) {
            for n in 1..=max_n {
                for kind in [RowKind::Spin1, RowKind::Fused] {
                    cases.push(Labeled(format!("{kind:?} {lam:?}/{mu:?} n={n}"), (kind, lam.clone(), mu.clone(), n)));
                }
            }
        }
    }
    run_instances("lattice-gauge", cases, |Labeled(_, (kind, lam, mu, n))| {
        let width = (max_size as usize).max(1);
        let cols = ColumnParams::symbolic(width);
        let xs = xvars(*n);
        let err = |e: LatticeError| e.to_string();
        let (dual, plain, cl, cm) = if *kind == RowKind::Spin1 {
            (
                skew_j_dual(mu, lam, &xs, &cols).map_err(err)?,
                skew_j(lam, mu, &xs, &cols.swapped()).map_err(err)?,
                c_norm(&mults(lam, width), &cols, NormConvention::PerColumn).map_err(err)?,
                c_norm(&mults(mu, width), &cols, NormConvention::PerColumn).map_err(err)?,
            )
        } else {
            (
                skew_g_dual(mu, lam, &xs, &cols).map_err(err)?,
                skew_g(lam, mu, &xs, &cols.swapped()).map_err(err)?,
                c_norm(&mults(&lam.conjugate(), width), &cols, NormConvention::PerColumn).map_err(err)?,
                c_norm(&mults(&mu.conjugate(), width), &cols, NormConvention::PerColumn).map_err(err)?,
            )
        };
        let rhs = cl.checked_div(&cm).map_err(|e| e.to_string())?.mul(&plain);
        Ok((dual, rhs))
    })
}

/// The general weights specialised to the thin and fused tables, and the
/// fused cross weight as a fused row weight:
/// * `L = 1`, `q^{-M} = uv`, `z = -x/v`, divided by `u^d`, is the thin weight;
/// * `z = x q^{-L}/v`, `q^{-M} = uv`, divided by `u^d`, at `q^{-L} → 0` is the fused weight;
/// * `W_{1,1}(x/y)` is the spin-1 cross weight;
/// * `ℝ_{x/y} = y^{-d} 𝕎_{x;(1/y, 0)}`.
pub fn verify_reductions(max_label: u32) -> VerificationReport {
    let (x, y) = (sym(Var::x(1)), sym(Var::x(2)));
    let (u, v) = (sym(Var::u(1)), sym(Var::v(1)));
    let t_var = Var::w(MAX_INDEX - 2);
    let t = sym(t_var);
    let mut cases = Vec::new();
    for a in 0..=max_label {
        for b in 0..=max_label {
            for c in 0..=(a + b).min(max_label) {
                let e = EdgeLabels::new(a, b, c, a + b - c);
                if e.d > max_label {
                    continue;
                }
                if b <= 1 && e.d <= 1 {
                    cases.push(Labeled(format!("thin {e:?}"), (0u8, e)));
                }
                cases.push(Labeled(format!("fused-limit {e:?}"), (1, e)));
                if a <= 1 && b <= 1 && c <= 1 && e.d <= 1 {
                    cases.push(Labeled(format!("cross {e:?}"), (2, e)));
                }
                cases.push(Labeled(format!("fused-cross {e:?}"), (3, e)));
            }
        }
    }
    run_instances("reductions", cases, |Labeled(_, (which, e))| {
        let s = |r: Result<RingElem, AlgebraError>| r.map_err(|e| e.to_string());
        let uv = u.mul(&v);
        let ud = u.pow(e.d);
        match which {
            0 => {
                let z = s(x.neg().checked_div(&v))?;
                let p = GeneralParams { z, q_neg_l: q_power(-1), q_neg_m: uv, spin_l: Some(1), spin_m: None };
                let g = s(s(general_weight(&p, *e))?.checked_div(&ud))?;
                Ok((g, s(spin1_weight(&x, &u, &v, *e))?))
            }
            1 => {
                let z = s(x.mul(&t).checked_div(&v))?;
                let p = GeneralParams { z, q_neg_l: t.clone(), q_neg_m: uv, spin_l: None, spin_m: None };
                let g = s(s(general_weight(&p, *e))?.checked_div(&ud))?;
                Ok((s(g.limit_at_zero(t_var))?, s(fused_weight(&x, &u, &v, *e))?))
            }
            2 => {
                let p = GeneralParams::new(s(x.checked_div(&y))?, 1, 1);
                Ok((s(general_weight(&p, *e))?, s(WeightFamily::RSpin1 { x: x.clone(), y: y.clone() }.eval(*e))?))
            }
            _ => {
                let w = s(fused_weight(&x, &s(y.inverse())?, &RingElem::zero(), *e))?;
                let rhs = s(s(y.powi(-(e.d as i64)))?.mul(&w).checked_div(&RingElem::one()))?;
                Ok((s(r_fused(&x, &y, *e))?, rhs))
            }
        }
    })
}

// ---------------------------------------------------------------------------
// Cauchy identities

/// How the normalisation constants pick up column parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormConvention {
    /// `(u_i, v_i)` attached to the `i`-th multiplicity
    PerColumn,
    /// `(u_1, v_1)` for every multiplicity
    Uniform,
}

impl FromStr for NormConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "per-column" => Ok(NormConvention::PerColumn),
            "uniform" => Ok(NormConvention::Uniform),
            _ => Err(format!("unknown normalisation convention `{s}`")),
        }
    }
}

fn c_norm(multiplicities: &[u32], cols: &ColumnParams, conv: NormConvention) -> Result<RingElem, LatticeError> {
    match conv {
        NormConvention::PerColumn => normalization(multiplicities, cols),
        NormConvention::Uniform => {
            let (u, v) = cols.pair(1).clone();
            normalization(multiplicities, &ColumnParams::uniform(u, v, multiplicities.len()))
        }
    }
}

fn mults(p: &Partition, width: usize) -> Vec<u32> {
    p.multiplicities(width).expect("width covers the partition")
}

#[derive(Debug, Clone)]
pub struct CauchyConfig {
    pub n: usize,
    pub m: usize,
    /// total degree kept in the expansion variables
    pub degree: u32,
    /// Column parameters; `None` means the uniform free pair `(u_1, v_1)`.
    pub columns: Option<ColumnParams>,
    pub convention: NormConvention,
    /// Perturbs the non-reversed rows; negative control.
    pub perturbation: Option<(EdgeLabels, RingElem)>,
}

impl CauchyConfig {
    pub fn new(n: usize, m: usize, degree: u32) -> CauchyConfig {
        CauchyConfig { n, m, degree, columns: None, convention: NormConvention::PerColumn, perturbation: None }
    }

    fn cols(&self, width: usize) -> Result<ColumnParams, LatticeError> {
        let width = width.max(1);
        match &self.columns {
            None => Ok(ColumnParams::uniform(sym(Var::u(1)), sym(Var::v(1)), width)),
            Some(c) if c.width() >= width => Ok(c.truncated(width)),
            Some(c) => Err(LatticeError::WidthTooSmall { need: width, have: c.width() }),
        }
    }
}

/// Variables expanded in the Cauchy series.
fn graded(v: Var) -> bool {
    matches!(v.kind(), VarKind::X | VarKind::Y | VarKind::U | VarKind::V)
}

/// Partition function of plain rows with the given row kind, optionally perturbed.
fn plain_rows(
    kind: RowKind,
    outer: &Partition,
    inner: &Partition,
    xs: &[RingElem],
    cols: &ColumnParams,
    perturbation: &Option<(EdgeLabels, RingElem)>,
) -> Result<RingElem, LatticeError> {
    let (bottom, top) = match kind {
        RowKind::Spin1 => (outer.clone(), inner.clone()),
        _ => (outer.conjugate(), inner.conjugate()),
    };
    let need = bottom.largest().max(top.largest()) as usize;
    if cols.width() < need {
        return Err(LatticeError::WidthTooSmall { need, have: cols.width() });
    }
    let rows: Vec<RowSpec> = xs
        .iter()
        .rev()
        .map(|x| {
            let r = RowSpec::new(kind, x.clone());
            match perturbation {
                Some((e, d)) => r.perturbed(*e, d.clone()),
                None => r,
            }
        })
        .collect();
    let w = cols.width();
    partition_function(&rows, cols, &mults(&bottom, w), &mults(&top, w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CauchyKind {
    J,
    G,
    Mixed,
}

/// Which lattice and which multiplicities a `c` constant reads.
fn normalised_dual(
    kind: RowKind,
    outer: &Partition,
    inner: &Partition,
    xs: &[RingElem],
    cols: &ColumnParams,
    conv: NormConvention,
) -> Result<RingElem, LatticeError> {
    // (c_outer / c_inner) · f^{(v,u)}_{outer/inner}
    let w = cols.width();
    let (mo, mi) = match kind {
        RowKind::Spin1 => (mults(outer, w), mults(inner, w)),
        _ => (mults(&outer.conjugate(), w), mults(&inner.conjugate(), w)),
    };
    let plain = plain_rows(kind, outer, inner, xs, &cols.swapped(), &None)?;
    if plain.is_zero() {
        return Ok(plain);
    }
    let ratio = c_norm(&mo, cols, conv)?.checked_div(&c_norm(&mi, cols, conv)?)?;
    Ok(ratio.mul(&plain))
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let len = a.length().max(b.length());
    Partition::new((1..=len).map(|i| a.part(i).max(b.part(i))).collect()).expect("union of partitions")
}

fn intersection(a: &Partition, b: &Partition) -> Partition {
    let len = a.length().min(b.length());
    Partition::new((1..=len).map(|i| a.part(i).min(b.part(i))).collect()).expect("intersection of partitions")
}

/// `κ ⊇ λ ∪ μ` with `|κ/λ| + |κ/μ| ≤ degree`.
fn cauchy_outer(lambda: &Partition, mu: &Partition, degree: u32) -> Vec<Partition> {
    let base = union(lambda, mu);
    let budget = lambda.size() + mu.size() + degree;
    let extra = (budget / 2).saturating_sub(base.size());
    super_partitions(&base, extra, base.largest() + extra, base.length() + extra as usize)
        .into_iter()
        .filter(|k| 2 * k.size() <= budget)
        .collect()
}

fn cauchy_kernel(kind: CauchyKind, xs: &[RingElem], ys: &[RingElem], degree: u32) -> Result<RingElem, AlgebraError> {
    let one = RingElem::one();
    let q = RingElem::q();
    let mut k = one.clone();
    for x in xs {
        for y in ys {
            let xy = x.mul(y);
            let f = match kind {
                CauchyKind::J => one.sub(&q.mul(&xy)).checked_div(&one.sub(&xy))?,
                CauchyKind::G => {
                    let mut s = RingElem::zero();
                    for j in 0..=degree {
                        s = s.add(&xy.pow(j).checked_div(&q_factorial(j).into())?);
                    }
                    s
                }
                CauchyKind::Mixed => one.add(&xy),
            };
            k = k.mul(&f);
        }
    }
    k.truncate(graded, degree)
}

/// Width needed by every lattice function of the identity.
fn cauchy_width(kind: CauchyKind, lambda: &Partition, mu: &Partition, degree: u32) -> usize {
    let mut shapes = cauchy_outer(lambda, mu, degree);
    shapes.extend([lambda.clone(), mu.clone()]);
    shapes
        .iter()
        .map(|k| match kind {
            CauchyKind::J => k.largest() as usize,
            _ => k.length(),
        })
        .max()
        .unwrap_or(0)
}

/// One summand of either side, truncated.
fn cauchy_term(
    kind: CauchyKind,
    cfg: &CauchyConfig,
    cols: &ColumnParams,
    left: bool,
    lambda: &Partition,
    mu: &Partition,
    kappa: &Partition,
) -> Result<RingElem, LatticeError> {
    let (xs, ys) = (xvars(cfg.n), yvars(cfg.m));
    let conv = cfg.convention;
    let pert = &cfg.perturbation;
    let (f, g) = match (kind, left) {
        // Σ_κ (c_κ/c_λ) J^{(v,u)}_{κ/λ}(x) J_{κ/μ}(y)
        (CauchyKind::J, true) => (
            normalised_dual(RowKind::Spin1, kappa, lambda, &xs, cols, conv)?,
            plain_rows(RowKind::Spin1, kappa, mu, &ys, cols, pert)?,
        ),
        // Σ_κ (c_μ/c_κ) J^{(v,u)}_{μ/κ}(x) J_{λ/κ}(y)
        (CauchyKind::J, false) => (
            normalised_dual(RowKind::Spin1, mu, kappa, &xs, cols, conv)?,
            plain_rows(RowKind::Spin1, lambda, kappa, &ys, cols, pert)?,
        ),
        (CauchyKind::G, true) => (
            normalised_dual(RowKind::Fused, kappa, lambda, &xs, cols, conv)?,
            plain_rows(RowKind::Fused, kappa, mu, &ys, cols, pert)?,
        ),
        (CauchyKind::G, false) => (
            normalised_dual(RowKind::Fused, mu, kappa, &xs, cols, conv)?,
            plain_rows(RowKind::Fused, lambda, kappa, &ys, cols, pert)?,
        ),
        // Σ_κ (c_{κ'}/c_{μ'}) G_{κ/λ}(x) J^{(v,u)}_{κ'/μ'}(y)
        (CauchyKind::Mixed, true) => (
            plain_rows(RowKind::Fused, kappa, lambda, &xs, cols, pert)?,
            normalised_dual(RowKind::Spin1, &kappa.conjugate(), &mu.conjugate(), &ys, cols, conv)?,
        ),
        // Σ_κ (c_{λ'}/c_{κ'}) G_{μ/κ}(x) J^{(v,u)}_{λ'/κ'}(y)
        (CauchyKind::Mixed, false) => (
            plain_rows(RowKind::Fused, mu, kappa, &xs, cols, pert)?,
            normalised_dual(RowKind::Spin1, &lambda.conjugate(), &kappa.conjugate(), &ys, cols, conv)?,
        ),
    };
    if f.is_zero() || g.is_zero() {
        return Ok(RingElem::zero());
    }
    let d = cfg.degree;
    let tf = f.truncate(graded, d)?;
    let tg = g.truncate(graded, d)?;
    Ok(tf.mul(&tg).truncate(graded, d)?)
}

fn cauchy_sides(
    kind: CauchyKind,
    lambda: &Partition,
    mu: &Partition,
    cfg: &CauchyConfig,
) -> Result<(RingElem, RingElem), LatticeError> {
    let cols = cfg.cols(cauchy_width(kind, lambda, mu, cfg.degree))?;
    let outer = cauchy_outer(lambda, mu, cfg.degree);
    let inner: Vec<Partition> = sub_partitions(&intersection(lambda, mu));
    let left: Vec<RingElem> = outer
        .par_iter()
        .map(|k| cauchy_term(kind, cfg, &cols, true, lambda, mu, k))
        .collect::<Result<_, _>>()?;
    let right: Vec<RingElem> = inner
        .par_iter()
        .map(|k| cauchy_term(kind, cfg, &cols, false, lambda, mu, k))
        .collect::<Result<_, _>>()?;
    let lhs = left.iter().fold(RingElem::zero(), |s, t| s.add(t));
    let sum = right.iter().fold(RingElem::zero(), |s, t| s.add(t));
    let kernel = cauchy_kernel(kind, &xvars(cfg.n), &yvars(cfg.m), cfg.degree)?;
    let rhs = kernel.mul(&sum).truncate(graded, cfg.degree)?;
    Ok((lhs, rhs))
}

fn verify_cauchy(kind: CauchyKind, id: &str, lambda: &Partition, mu: &Partition, cfg: &CauchyConfig) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(id);
    let name = format!("λ={lambda:?} μ={mu:?} n={} m={} D={} c={:?}", cfg.n, cfg.m, cfg.degree, cfg.convention);
    match cauchy_sides(kind, lambda, mu, cfg) {
        Ok((l, r)) => report.check(name, l, r),
        Err(e) => report.error(name, e),
    }
    report.timed(start)
}

/// The thin-row Cauchy identity with kernel `∏ (1 - q x_i y_j)/(1 - x_i y_j)`,
/// compared as power series up to `cfg.degree`.
pub fn verify_cauchy_j(lambda: &Partition, mu: &Partition, cfg: &CauchyConfig) -> VerificationReport {
    verify_cauchy(CauchyKind::J, "cauchy-j", lambda, mu, cfg)
}

/// The fused-row Cauchy identity with kernel `∏ 1/(x_i y_j; q)_∞`.
pub fn verify_cauchy_g(lambda: &Partition, mu: &Partition, cfg: &CauchyConfig) -> VerificationReport {
    verify_cauchy(CauchyKind::G, "cauchy-g", lambda, mu, cfg)
}

/// The mixed fused/thin identity with kernel `∏ (1 + x_i y_j)`.
pub fn verify_cauchy_mixed(lambda: &Partition, mu: &Partition, cfg: &CauchyConfig) -> VerificationReport {
    verify_cauchy(CauchyKind::Mixed, "cauchy-mixed", lambda, mu, cfg)
}

// ---------------------------------------------------------------------------
// Fusion

/// `Z_j(L) = q^{j(j-1)/2} (q;q)_L / ((q;q)_j (q;q)_{L-j})`.
pub fn fusion_normalization(j: u32, l: u32) -> RingElem {
    assert!(j <= l, "j exceeds L");
    let qf = |k: u32| -> RingElem { q_factorial(k).into() };
    q_power((j * j.saturating_sub(1) / 2) as i64)
        .mul(&qf(l))
        .checked_div(&qf(j).mul(&qf(l - j)))
        .expect("q-factorials are nonzero")
}

fn tuples(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=max).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// Values indexed by (top labels, right label).
type RowValues = BTreeMap<(Vec<u32>, u32), RingElem>;

fn accumulate(map: &mut RowValues, key: (Vec<u32>, u32), w: RingElem) {
    let e = map.entry(key).or_insert_with(RingElem::zero);
    *e = e.add(&w);
}

/// A fused row of `W_{L,M}` across the columns against `L` stacked thin
/// rows at `x, xq, …, xq^{L-1}`, summed over left labels in `{0,1}^L` with
/// `q^{Σ(m-1)a_m}/Z_j(L)` and over all right labels.
///
/// Columns are numbered left to right with spectral `y_k`.
pub fn verify_fusion(l: u32, m: u32, columns: usize) -> VerificationReport {
    let start = Instant::now();
    let x = sym(Var::x(1));
    let ys: Vec<RingElem> = (1..=columns as u32).map(|k| sym(Var::y(k))).collect();
    let general = |z: RingElem, spin| Table::new(WeightFamily::General(GeneralParams::new(z, spin, m)), None);
    let fused: Vec<Table> = ys.iter().map(|y| general(x.checked_div(y).expect("free"), l)).collect();
    // thin[row][column]
    let thin: Vec<Vec<Table>> = (0..l)
        .map(|r| {
            let xr = x.mul(&q_power(r as i64));
            ys.iter().map(|y| general(xr.checked_div(y).expect("free"), 1)).collect()
        })
        .collect();
    let groups: Vec<(Vec<u32>, u32)> =
        tuples(columns, m).into_iter().flat_map(|b| (0..=l).map(move |j| (b.clone(), j))).collect();
    let outcomes: Vec<_> = groups
        .par_iter()
        .map(|(bottom, left)| -> Result<(RowValues, RowValues), AlgebraError> {
            Ok((fused_row(&fused, bottom, *left)?, fused_by_stacking(&thin, l, bottom, *left)?))
        })
        .collect();
    let mut report = VerificationReport::new(format!("fusion/L={l},M={m},N={columns}"));
    let zero = RingElem::zero();
    for ((bottom, left), out) in groups.iter().zip(outcomes) {
        match out {
            Ok((lhs, rhs)) => {
                for top in tuples(columns, m) {
                    for right in 0..=l {
                        let key = (top.clone(), right);
                        let name = format!("bottom={bottom:?} top={top:?} left={left} right={right}");
                        report.check(name, lhs.get(&key).unwrap_or(&zero).clone(), rhs.get(&key).unwrap_or(&zero).clone());
                    }
                }
            }
            Err(e) => report.error(format!("bottom={bottom:?} left={left}"), e),
        }
    }
    report.timed(start)
}

fn fused_row(tables: &[Table], bottom: &[u32], left: u32) -> Result<RowValues, AlgebraError> {
    let mut partial: RowValues = BTreeMap::from([((Vec::new(), left), RingElem::one())]);
    for (k, t) in tables.iter().enumerate() {
        let a = bottom[k];
        let mut next = RowValues::new();
        for ((tops, h), w) in &partial {
            for d in 0..=a + h {
                let c = a + h - d;
                let wt = t.get(EdgeLabels::new(a, *h, c, d))?;
                if wt.is_zero() {
                    continue;
                }
                let mut t2 = tops.clone();
                t2.push(c);
                accumulate(&mut next, (t2, d), w.mul(&wt));
            }
        }
        partial = next;
    }
    Ok(partial)
}

/// One thin row swept left to right from the given vertical labels.
fn thin_row(row: &[Table], verts: &[u32], left: u32, w: &RingElem) -> Result<Vec<(Vec<u32>, u32, RingElem)>, AlgebraError> {
    let mut partial: Vec<(Vec<u32>, u32, RingElem)> = vec![(Vec::new(), left, w.clone())];
    for (k, t) in row.iter().enumerate() {
        let mut np = Vec::new();
        for (tops, h, pw) in partial {
            for d in 0..=1u32 {
                let Some(c) = (verts[k] + h).checked_sub(d) else { continue };
                let wt = t.get(EdgeLabels::new(verts[k], h, c, d))?;
                if wt.is_zero() {
                    continue;
                }
                let mut t2 = tops.clone();
                t2.push(c);
                np.push((t2, d, pw.mul(&wt)));
            }
        }
        partial = np;
    }
    Ok(partial)
}

fn fused_by_stacking(thin: &[Vec<Table>], l: u32, bottom: &[u32], left_total: u32) -> Result<RowValues, AlgebraError> {
    let mut total = RowValues::new();
    for left in tuples(l as usize, 1) {
        if left.iter().sum::<u32>() != left_total {
            continue;
        }
        let shift: u32 = left.iter().enumerate().map(|(r, &a)| r as u32 * a).sum();
        // (vertical labels, sum of right labels so far)
        let mut states: RowValues = BTreeMap::from([((bottom.to_vec(), 0), q_power(shift as i64))]);
        for (r, row) in thin.iter().enumerate() {
            let mut next = RowValues::new();
            for ((verts, rsum), w) in &states {
                for (tops, d, pw) in thin_row(row, verts, left[r], w)? {
                    accumulate(&mut next, (tops, rsum + d), pw);
                }
            }
            states = next;
        }
        for (key, w) in states {
            accumulate(&mut total, key, w);
        }
    }
    let z = fusion_normalization(left_total, l);
    total.into_iter().map(|(k, w)| Ok((k, w.checked_div(&z)?))).collect()
}

// ---------------------------------------------------------------------------
// Lattice functions

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeFn {
    J,
    G,
}

impl fmt::Display for LatticeFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeFn::J => "J",
            LatticeFn::G => "G",
        })
    }
}

fn lattice_fn(which: LatticeFn, lam: &Partition, mu: &Partition, xs: &[RingElem]) -> Result<RingElem, LatticeError> {
    match which {
        LatticeFn::J => skew_j(lam, mu, xs, &ColumnParams::symbolic((lam.largest() as usize).max(1))),
        LatticeFn::G => skew_g(lam, mu, xs, &ColumnParams::symbolic(lam.length().max(1))),
    }
}

fn shapes_up_to(max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(crate::partitions::partitions_of).collect()
}

/// Skew shapes `λ/μ` with `|λ| ≤ max_size` and `|μ| ≤ 1`.
fn skew_shapes(max_size: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for lam in shapes_up_to(max_size) {
        for mu in [Partition::empty(), Partition::new(vec![1]).expect("partition")] {
            if lam.contains(&mu) {
                out.push((lam.clone(), mu));
            }
        }
    }
    out
}

/// Invariance under every adjacent transposition of the variables.
pub fn verify_symmetry(max_size: u32, ns: &[usize]) -> VerificationReport {
    let mut cases = Vec::new();
    for which in [LatticeFn::J, LatticeFn::G] {
        for (lam, mu) in skew_shapes(max_size) {
            for &n in ns {
                for i in 1..n {
                    cases.push(Labeled(format!("{which} {lam:?}/{mu:?} n={n} swap x{i},x{}", i + 1), (which, lam.clone(), mu.clone(), n, i)));
                }
            }
        }
    }
    run_instances("symmetry", cases, |Labeled(_, (which, lam, mu, n, i))| {
        let xs = xvars(*n);
        let f = lattice_fn(*which, lam, mu, &xs).map_err(|e| e.to_string())?;
        let (a, b) = (Var::x(*i as u32), Var::x(*i as u32 + 1));
        let swapped = f.rename(move |v| if v == a { b } else if v == b { a } else { v });
        Ok((f, swapped))
    })
}

/// Adding a variable equal to zero changes nothing.
pub fn verify_stability(max_size: u32, ns: &[usize]) -> VerificationReport {
    let mut cases = Vec::new();
    for which in [LatticeFn::J, LatticeFn::G] {
        for (lam, mu) in skew_shapes(max_size) {
            for &n in ns {
                cases.push(Labeled(format!("{which} {lam:?}/{mu:?} n={n}"), (which, lam.clone(), mu.clone(), n)));
            }
        }
    }
    run_instances("stability", cases, |Labeled(_, (which, lam, mu, n))| {
        let xs = xvars(*n);
        let mut more = xs.clone();
        more.push(RingElem::zero());
        let f = lattice_fn(*which, lam, mu, &xs).map_err(|e| e.to_string())?;
        let g = lattice_fn(*which, lam, mu, &more).map_err(|e| e.to_string())?;
        Ok((g, f))
    })
}

/// Transfer-row partition functions against exhaustive enumeration, for
/// plain and reversed rows of both lattices.
pub fn verify_brute_force(max_size: u32, max_n: usize) -> VerificationReport {
    let mut cases = Vec::new();
    for lam in shapes_up_to(max_size) {
        for mu in sub_partitions(&lam) {
            for n in 1..=max_n {
                for kind in [RowKind::Spin1, RowKind::Spin1Dual, RowKind::Fused, RowKind::FusedDual] {
                    cases.push(Labeled(format!("{kind:?} {lam:?}/{mu:?} n={n}"), (kind, lam.clone(), mu.clone(), n)));
                }
            }
        }
    }
    run_instances("brute-force", cases, |Labeled(_, (kind, lam, mu, n))| {
        let (outer, inner) = match kind {
            RowKind::Spin1 | RowKind::Spin1Dual => (lam.clone(), mu.clone()),
            _ => (lam.conjugate(), mu.conjugate()),
        };
        let width = (outer.largest() as usize).max(1);
        let cols = ColumnParams::symbolic(width);
        let (bottom, top) = if kind.is_dual() {
            (mults(&inner, width), mults(&outer, width))
        } else {
            (mults(&outer, width), mults(&inner, width))
        };
        let rows: Vec<RowSpec> = xvars(*n).into_iter().rev().map(|x| RowSpec::new(*kind, x)).collect();
        let transfer = partition_function(&rows, &cols, &bottom, &top).map_err(|e| e.to_string())?;
        let brute = brute_force_z(&rows, &cols, &bottom, &top).map_err(|e| e.to_string())?;
        Ok((brute, transfer))
    })
}

/// Lattice specialisations against the closed-form chain sums, `μ = ∅`.
pub fn verify_degenerations(max_size: u32, max_n: usize) -> VerificationReport {
    let mut cases = Vec::new();
    for tag in FamilyTag::ALL {
        for lam in shapes_up_to(max_size) {
            for n in 1..=max_n {
                cases.push(Labeled(format!("{tag} {lam:?} n={n}"), (tag, lam.clone(), n)));
            }
        }
    }
    run_instances("degenerations", cases, |Labeled(_, (tag, lam, n))| {
        let fam = Family::new(*tag);
        let xs = xvars(*n);
        let lattice = degeneration_of_lattice(&fam, lam, &Partition::empty(), &xs).map_err(|e| e.to_string())?;
        let oracle = multivar_oracle(&fam, lam, &xs).map_err(|e| e.to_string())?;
        Ok((lattice, oracle))
    })
}

// ---------------------------------------------------------------------------
// Suites

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ybe,
    Stochastic,
    Gauge,
    CauchyJ,
    CauchyG,
    CauchyMixed,
    Fusion,
    Degenerations,
    Symmetry,
    Stability,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Ybe,
        Suite::Stochastic,
        Suite::Gauge,
        Suite::CauchyJ,
        Suite::CauchyG,
        Suite::CauchyMixed,
        Suite::Fusion,
        Suite::Degenerations,
        Suite::Symmetry,
        Suite::Stability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ybe => "ybe",
            Suite::Stochastic => "stochastic",
            Suite::Gauge => "gauge",
            Suite::CauchyJ => "cauchy-j",
            Suite::CauchyG => "cauchy-g",
            Suite::CauchyMixed => "cauchy-mixed",
            Suite::Fusion => "fusion",
            Suite::Degenerations => "degenerations",
            Suite::Symmetry => "symmetry",
            Suite::Stability => "stability",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Size flags shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub l: u32,
    pub m: u32,
    pub n: u32,
    /// cap on unbounded labels
    pub max_label: u32,
    pub degree: u32,
    /// shapes for the Cauchy suites fit in this `width × height` box
    pub cauchy_box: (u32, usize),
    pub variables: usize,
    pub max_size: u32,
    pub convention: NormConvention,
}

impl Default for SuiteParams {
    fn default() -> SuiteParams {
        SuiteParams {
            l: 1,
            m: 1,
            n: 1,
            max_label: 3,
            degree: 3,
            cauchy_box: (1, 1),
            variables: 1,
            max_size: 3,
            convention: NormConvention::PerColumn,
        }
    }
}

pub fn run_suite(suite: Suite, p: &SuiteParams) -> VerificationReport {
    let mut report = VerificationReport::new(suite.name());
    let start = Instant::now();
    let parts: Vec<VerificationReport> = match suite {
        Suite::Ybe => vec![
            verify_ybe(YbeTriple::General { l: p.l, m: p.m, n: p.n }, p.max_label),
            verify_ybe(YbeTriple::Spin1, p.max_label),
            verify_ybe(YbeTriple::Dual, p.max_label),
            verify_ybe(YbeTriple::Fused, p.max_label),
            verify_ybe(YbeTriple::Mixed, p.max_label),
        ],
        Suite::Stochastic => vec![verify_stochasticity(p.l.max(p.m)), verify_fused_r_unity(p.max_label)],
        Suite::Gauge => vec![
            verify_gauge(p.max_label),
            verify_reductions(p.max_label),
            verify_lattice_gauge(p.max_size.min(3), p.variables.min(2)),
        ],
        Suite::CauchyJ | Suite::CauchyG | Suite::CauchyMixed => {
            let (w, h) = p.cauchy_box;
            let shapes = partitions_in_box(w, h);
            let mut out = Vec::new();
            for lam in &shapes {
                for mu in &shapes {
                    let mut cfg = CauchyConfig::new(p.variables, p.variables, p.degree);
                    cfg.convention = p.convention;
                    out.push(match suite {
                        Suite::CauchyJ => verify_cauchy_j(lam, mu, &cfg),
                        Suite::CauchyG => verify_cauchy_g(lam, mu, &cfg),
                        _ => verify_cauchy_mixed(lam, mu, &cfg),
                    });
                }
            }
            out
        }
        Suite::Fusion => vec![verify_fusion(p.l, p.m, 1), verify_fusion(p.l, p.m, 2)],
        Suite::Degenerations => vec![verify_degenerations(p.max_size, p.variables)],
        Suite::Symmetry => vec![verify_symmetry(p.max_size, &[2, p.variables.max(2)])],
        Suite::Stability => vec![verify_stability(p.max_size, &[p.variables.max(1)])],
        Suite::All => Suite::EACH.iter().map(|s| run_suite(*s, p)).collect(),
    };
    for part in parts {
        report.merge(part);
    }
    report.elapsed = start.elapsed();
    report
}
