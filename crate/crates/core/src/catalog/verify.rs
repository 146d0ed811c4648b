//! Seeded verification runs over catalog entries.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::expr::Expr;
use super::{find, sample, CatalogError, IdentityCase, Mode};
use crate::mparith::{MathResult, PrecisionContext, Scalar};

/// Outcome of one sampled binding.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub trial: u64,
    pub binding: String,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub mode: Mode,
    pub pass: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub reference: String,
    pub mode: Mode,
    pub trials: u64,
    pub failures: u64,
    /// Largest relative error among trials that produced both sides.
    pub max_rel_err: f64,
    pub records: Vec<TrialRecord>,
    /// Index into `records` of the first failure, or else of the trial
    /// with the largest error.
    pub worst: Option<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn worst_record(&self) -> Option<&TrialRecord> {
        self.worst.map(|i| &self.records[i])
    }
}

/// `(|l-r|, |l-r| / scale)`, both zero when `l = r`. `scale` is `log2` of
/// the larger side, or of the largest intermediate when that is bigger.
fn errors<S: Scalar>(l: &S, r: &S, scale: f64) -> (f64, f64) {
    let diff = (l.clone() - r.clone()).log2_abs();
    if diff == f64::NEG_INFINITY {
        return (0.0, 0.0);
    }
    let scale = scale.max(l.log2_abs()).max(r.log2_abs());
    (libm::exp2(diff), libm::exp2(diff - scale))
}

fn sides<S: Scalar>(built: MathResult<(Expr<S>, Expr<S>)>, ctx: &PrecisionContext) -> MathResult<(S, S, f64)> {
    let (l, r) = built?;
    let ((lv, ls), (rv, rs)) = (l.eval_scaled(ctx)?, r.eval_scaled(ctx)?);
    Ok((lv, rv, ls.max(rs)))
}

fn run_trial(case: &IdentityCase, trial: u64, ctx: &PrecisionContext, mode: Mode, seed: u64) -> TrialRecord {
    let mut rec = TrialRecord {
        trial,
        binding: String::new(),
        lhs: None,
        rhs: None,
        abs_err: None,
        rel_err: None,
        mode,
        pass: false,
        reason: None,
    };
    let b = match sample(case, seed, trial, mode) {
        Ok(b) => b,
        Err(e) => {
            rec.reason = Some(e.to_string());
            return rec;
        }
    };
    rec.binding = b.to_string();
    let digits = ctx.target_digits as usize;
    let outcome = match mode {
        Mode::Exact => sides(case.build_exact(&b, ctx), ctx).map(|(l, r, _)| {
            let (abs, rel) = errors(&l, &r, f64::NEG_INFINITY);
            (l.to_decimal(digits), r.to_decimal(digits), abs, rel, l == r)
        }),
        Mode::Float => sides(case.build_float(&b, ctx), ctx).map(|(l, r, scale)| {
            let (abs, rel) = errors(&l, &r, scale);
            let ok = rel <= libm::pow(10.0, ctx.tolerance_log10());
            (l.to_decimal(digits), r.to_decimal(digits), abs, rel, ok)
        }),
    };
    match outcome {
        Ok((l, r, abs, rel, ok)) => {
            rec.lhs = Some(l);
            rec.rhs = Some(r);
            rec.abs_err = Some(abs);
            rec.rel_err = Some(rel);
            rec.pass = ok;
            if !ok {
                rec.reason = Some(format!("relative error {:.3e} above tolerance", rel));
            }
        }
        Err(e) => rec.reason = Some(e.to_string()),
    }
    rec
}

/// Checks `case` on `trials` seeded bindings.
pub fn verify_case(
    case: &IdentityCase,
    trials: u64,
    ctx: &PrecisionContext,
    mode: Mode,
    seed: u64,
) -> Result<VerificationReport, CatalogError> {
    if mode == Mode::Exact && !case.exact_capable {
        return Err(CatalogError::NotExactCapable(String::from(case.id)));
    }
    let records: Vec<TrialRecord> = (0..trials).map(|t| run_trial(case, t, ctx, mode, seed)).collect();
    let failures = records.iter().filter(|r| !r.pass).count() as u64;
    let max_rel_err = records.iter().filter_map(|r| r.rel_err).fold(0.0, f64::max);
    let worst = records.iter().position(|r| !r.pass).or_else(|| {
        records
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.rel_err.map(|e| (i, e)))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(i, _)| i)
    });
    Ok(VerificationReport {
        id: String::from(case.id),
        reference: String::from(case.reference),
        mode,
        trials,
        failures,
        max_rel_err,
        records,
        worst,
    })
}

/// Looks up `id` and checks it on `trials` seeded bindings.
pub fn verify(id: &str, trials: u64, ctx: &PrecisionContext, mode: Mode, seed: u64) -> Result<VerificationReport, CatalogError> {
    let case = find(id).ok_or_else(|| CatalogError::UnknownId(String::from(id)))?;
    verify_case(&case, trials, ctx, mode, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_run_of_a_summation() {
        let r = verify("L3-GS", 5, &PrecisionContext::default(), Mode::Exact, 3).unwrap();
        assert!(r.passed(), "{:?}", r.worst_record());
        assert_eq!(r.records.len(), 5);
        assert_eq!(r.max_rel_err, 0.0);
    }

    #[test]
    fn unknown_and_float_only_ids_are_refused() {
        let ctx = PrecisionContext::default();
        assert!(matches!(verify("nope", 1, &ctx, Mode::Exact, 0), Err(CatalogError::UnknownId(_))));
        assert!(matches!(verify("T14", 1, &ctx, Mode::Exact, 0), Err(CatalogError::NotExactCapable(_))));
    }

    #[test]
    fn float_errors_are_relative() {
        let ctx = PrecisionContext::default();
        let one = crate::mparith::MpComplex::from_i64(1_000, ctx.bits());
        let two = crate::mparith::MpComplex::from_i64(1_001, ctx.bits());
        let (_, rel) = errors(&one, &two, f64::NEG_INFINITY);
        assert!((rel - 1.0 / 1001.0).abs() < 1e-12);
        let (_, rel) = errors(&one, &two, 20.0);
        assert!((rel - libm::exp2(-20.0)).abs() < 1e-12);
        let (abs, rel) = errors(&one, &two, 0.0);
        assert!((abs - 1.0).abs() < 1e-12);
        assert!((rel - 1.0 / 1001.0).abs() < 1e-12);
    }
}
