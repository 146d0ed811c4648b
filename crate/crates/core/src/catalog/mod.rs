//! Registry of hypergeometric transformation and summation formulas, each
//! with a parameter sampler and builders for both sides, and a harness
//! that checks them exactly or in multiprecision.

mod binding;
mod expr;
mod ids;
mod oracle;
mod verify;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::hypseries::{parametric_excess, termination_index};
use crate::mparith::{MathResult, MpComplex, PrecisionContext, Rational};

pub use binding::{q, qi, Binding, Draw, Value};
pub use expr::{pole_guard, Expr};
pub use ids::{finite_remark_sum, gessel_stanton_sum, LAMBDA_SIGN};
pub use oracle::{lambda_sign_probe, side_excess, transform, SignResolution, PROBE_TRIALS};
pub use verify::{verify, verify_case, TrialRecord, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Summation,
    Transformation,
    Pointwise,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

/// Which bindings a case can be checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Support {
    Terminating,
    NonTerminating,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    RationalVec,
    Ints(i64, i64),
    IntVec(u64, u64),
    /// Argument taken from the case's grid.
    Grid,
}

/// Arguments used by pointwise cases, as `(num, den)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub terminating: &'static [(i64, i64)],
    pub nonterminating: &'static [(i64, i64)],
}

/// What the sampler is asked for on one trial.
#[derive(Clone, Debug, PartialEq)]
pub struct Plan {
    pub terminating: bool,
    /// Index of the trial among trials of the same kind.
    pub slot: usize,
    pub x: Option<Rational>,
}

pub type Builder<S> = fn(&Binding, &PrecisionContext) -> MathResult<(Expr<S>, Expr<S>)>;
pub type Sampler = fn(&mut Draw, &Plan) -> Binding;

#[derive(Clone, Copy)]
pub struct Constraint {
    pub reason: &'static str,
    pub holds: fn(&Binding) -> bool,
}

/// One catalog entry.
#[derive(Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub kind: Kind,
    /// Name of the formula, as reported in machine-readable output.
    pub reference: &'static str,
    pub params: &'static [(&'static str, Domain)],
    pub constraints: Vec<Constraint>,
    pub exact_capable: bool,
    pub support: Support,
    pub grid: Option<Grid>,
    draw: Sampler,
    exact: Builder<Rational>,
    float: Builder<MpComplex>,
}

impl core::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IdentityCase").field("id", &self.id).field("kind", &self.kind).finish_non_exhaustive()
    }
}

impl IdentityCase {
    pub(crate) fn new(
        id: &'static str,
        kind: Kind,
        reference: &'static str,
        params: &'static [(&'static str, Domain)],
        builders: (Builder<Rational>, Builder<MpComplex>),
        draw: Sampler,
    ) -> Self {
        IdentityCase {
            id,
            kind,
            reference,
            params,
            constraints: Vec::new(),
            exact_capable: true,
            support: Support::Terminating,
            grid: None,
            draw,
            exact: builders.0,
            float: builders.1,
        }
    }

    pub(crate) fn float_only(mut self) -> Self {
        self.exact_capable = false;
        self
    }

    pub(crate) fn support(mut self, s: Support) -> Self {
        self.support = s;
        self
    }

    pub(crate) fn grid(mut self, g: Grid) -> Self {
        self.grid = Some(g);
        self
    }

    pub(crate) fn constraint(mut self, reason: &'static str, holds: fn(&Binding) -> bool) -> Self {
        self.constraints.push(Constraint { reason, holds });
        self
    }

    pub fn build_exact(&self, b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<Rational>, Expr<Rational>)> {
        (self.exact)(b, ctx)
    }

    pub fn build_float(&self, b: &Binding, ctx: &PrecisionContext) -> MathResult<(Expr<MpComplex>, Expr<MpComplex>)> {
        (self.float)(b, ctx)
    }

    /// Reason of the first violated constraint.
    pub fn violated(&self, b: &Binding) -> Option<&'static str> {
        self.constraints.iter().find(|c| !(c.holds)(b)).map(|c| c.reason)
    }

    /// Plan for trial `trial` in `mode`: float runs alternate between
    /// terminating and non-terminating draws when both are supported.
    pub fn plan(&self, trial: u64, mode: Mode) -> Plan {
        let t = trial as usize;
        let (terminating, slot) = match (mode, self.support) {
            (Mode::Exact, _) | (_, Support::Terminating) => (true, t),
            (Mode::Float, Support::NonTerminating) => (false, t),
            (Mode::Float, Support::Both) => (t.is_multiple_of(2), t / 2),
        };
        let x = self.grid.map(|g| {
            let pts = if terminating { g.terminating } else { g.nonterminating };
            let (n, d) = pts[slot % pts.len()];
            q(n, d)
        });
        Plan { terminating, slot, x }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown identity {0}")]
    UnknownId(String),
    #[error("identity {0} has no exact formulation")]
    NotExactCapable(String),
    #[error("sampler for {id} exhausted after {tries} rejections (last: {last})")]
    SamplerExhausted { id: String, tries: usize, last: String },
    #[error("lambda sign for {id} unresolved: +1 held on {plus}, -1 on {minus} probe bindings")]
    SignUnresolved { id: String, plus: usize, minus: usize },
}

/// All catalog entries, in a fixed order.
pub fn registry() -> Vec<IdentityCase> {
    ids::all()
}

pub fn find(id: &str) -> Option<IdentityCase> {
    registry().into_iter().find(|c| c.id == id)
}

pub const MAX_REJECTIONS: usize = 10_000;

/// Smallest effective excess accepted for a non-terminating series at
/// unit argument.
pub const MIN_UNIT_EXCESS: i64 = 20;

/// Reason a non-terminating series of `e` would diverge or converge too
/// slowly to sum.
fn slow_series(e: &Expr<Rational>, ctx: &PrecisionContext) -> Option<String> {
    for s in e.series_nodes() {
        if termination_index(s).is_some() {
            continue;
        }
        let (p, q) = (s.upper.len(), s.lower.len());
        let ax = s.argument.abs();
        if p > q + 1 && !ax.is_zero() {
            return Some(format!("divergent {}F{}", p, q));
        }
        if p == q + 1 && ax > Rational::one() {
            return Some(format!("argument {} outside the unit disc", s.argument));
        }
        if p == q + 1 && ax.is_one() {
            let deg = s.characteristic.as_ref().map_or(0, |c| c.degree());
            let excess = parametric_excess(&s.upper, &s.lower, ctx) - Rational::from_integer((deg as i64).into());
            if excess < Rational::from_integer(MIN_UNIT_EXCESS.into()) {
                return Some(format!("excess {} at unit argument", excess));
            }
        }
    }
    None
}

/// Deterministic binding for `(seed, trial)` that satisfies every
/// constraint, builds without error, keeps lower parameters and Gamma
/// arguments at least 1/100 away from the non-positive integers, and has
/// only series that converge fast enough to sum.
pub fn sample(case: &IdentityCase, seed: u64, trial: u64, mode: Mode) -> Result<Binding, CatalogError> {
    let plan = case.plan(trial, mode);
    let mut draw = Draw::new(seed, case.id, trial);
    let ctx = PrecisionContext::default();
    let mut last = String::new();
    for _ in 0..MAX_REJECTIONS {
        let b = (case.draw)(&mut draw, &plan);
        if let Some(r) = case.violated(&b) {
            last = String::from(r);
            continue;
        }
        match case.build_exact(&b, &ctx) {
            Err(e) => last = format!("{}", e),
            Ok((l, r)) => match pole_guard(&l).or_else(|| pole_guard(&r)) {
                Some(p) => last = format!("parameter {} too close to a pole", p),
                None => match slow_series(&l, &ctx).or_else(|| slow_series(&r, &ctx)) {
                    Some(why) => last = why,
                    None => return Ok(b),
                },
            },
        }
    }
    Err(CatalogError::SamplerExhausted { id: String::from(case.id), tries: MAX_REJECTIONS, last })
}
