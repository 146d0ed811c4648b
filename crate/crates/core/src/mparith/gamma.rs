use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{bernoulli_even, pochhammer, MathError, MathResult, MpComplex, MpReal, PrecisionContext, Scalar};

/// Gamma function at working precision.
///
/// Shifts the argument right until its real part clears a threshold
/// proportional to the working digits, evaluates Stirling's series there
/// and divides the shift back out.
pub fn gamma(z: &MpComplex, ctx: &PrecisionContext) -> MathResult<MpComplex> {
    let bits = ctx.bits();
    if let Some(n) = z.integer() {
        if n <= 0 {
            return Err(MathError::Pole(z.to_sci_string(12)));
        }
        if z.is_real() && n < 4000 && z.re == MpReal::from_i64(n, bits) {
            let mut f = BigInt::one();
            for k in 2..n {
                f *= BigInt::from(k);
            }
            return Ok(MpComplex::from_real(MpReal::from_bigint(&f, bits)));
        }
    }
    let digits = ctx.working_digits() as f64;
    let threshold = 0.5 * digits + 10.0;
    let re = z.re.to_f64();
    let shift = if re < threshold { libm::ceil(threshold - re) as i64 } else { 0 };
    let extra = 32 + 64 - (shift as u64 | 1).leading_zeros();
    let wp = bits + extra;
    let zw = z.with_prec(wp);
    let w = zw.clone() + MpComplex::from_i64(shift, wp);
    let lg = ln_gamma_stirling(&w, wp, (2.0 * digits) as usize)?;
    let mut g = lg.exp();
    if shift > 0 {
        let den = pochhammer(&zw, shift as u64);
        if den.is_zero() {
            return Err(MathError::Pole(z.to_sci_string(12)));
        }
        g = g / den;
    }
    Ok(g.with_prec(bits))
}

fn ln_gamma_stirling(w: &MpComplex, prec: u32, max_terms: usize) -> MathResult<MpComplex> {
    let half = MpComplex::from_real(MpReal::one(prec).ldexp(-1));
    let ln_w = w.ln()?;
    let ln_2pi = MpReal::pi(prec).ldexp(1).ln().ldexp(-1);
    let mut acc = (w.clone() - half) * ln_w - w.clone() + MpComplex::from_real(ln_2pi);
    let inv = MpComplex::one(prec) / w.clone();
    let inv2 = inv.clone() * inv.clone();
    let cutoff = -(prec as f64) - 10.0 + acc.log2_abs().max(0.0);
    let bern: Vec<_> = bernoulli_even(max_terms.max(4));
    let mut pw = inv;
    let mut converged = false;
    for (i, b) in bern.iter().enumerate() {
        let k = (i + 1) as i64;
        let coef = b / super::Rational::from_integer(BigInt::from(2 * k * (2 * k - 1)));
        let term = MpComplex::from_rational(&coef, prec) * pw.clone();
        acc = acc + term.clone();
        if term.log2_abs() < cutoff {
            converged = true;
            break;
        }
        pw = pw * inv2.clone();
    }
    if !converged {
        return Err(MathError::NoConvergence(bern.len()));
    }
    Ok(acc)
}

/// Quotient `prod Gamma(num) / prod Gamma(den)`.
///
/// Arguments whose difference is an integer are paired and reduced to
/// Pochhammer symbols, which is exact over rationals and gives the limiting
/// value when both members of a pair sit on poles.
pub fn gamma_ratio<S: Scalar>(num: &[S], den: &[S], ctx: &PrecisionContext) -> MathResult<S> {
    let mut used = alloc::vec![false; den.len()];
    let mut acc = S::one(ctx);
    let mut rest_num = Vec::new();
    for a in num {
        let hit = den.iter().enumerate().find_map(|(j, b)| {
            if used[j] {
                return None;
            }
            let k = (a.clone() - b.clone()).integer()?;
            (k.unsigned_abs() <= 100_000).then_some((j, k))
        });
        match hit {
            Some((j, k)) => {
                used[j] = true;
                if k >= 0 {
                    acc = acc * pochhammer(&den[j], k as u64);
                } else {
                    acc = acc.checked_div(pochhammer(a, k.unsigned_abs()))?;
                }
            }
            None => rest_num.push(a.clone()),
        }
    }
    for a in &rest_num {
        acc = acc * a.gamma(ctx)?;
    }
    for (j, b) in den.iter().enumerate() {
        if !used[j] {
            acc = acc.checked_div(b.gamma(ctx)?)?;
        }
    }
    Ok(acc)
}
