//! Zeros of polynomials and the shift pairs they induce.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Polynomial;
use crate::mparith::{MathError, MathResult, MpComplex, MpReal, PrecisionContext, Rational, Scalar};

/// Distinct zeros with multiplicities, sorted by real then imaginary part.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub distinct: Vec<(MpComplex, usize)>,
}

impl RootSet {
    /// Every zero repeated according to multiplicity.
    pub fn all(&self) -> Vec<MpComplex> {
        self.distinct.iter().flat_map(|(z, m)| core::iter::repeat_n(z.clone(), *m)).collect()
    }

    pub fn len(&self) -> usize {
        self.distinct.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.distinct.is_empty()
    }
}

fn seeds(p: &Polynomial<MpComplex>) -> MathResult<Vec<Complex<f64>>> {
    let c = p.coeffs();
    let n = c.len() - 1;
    let lead = c[n].clone();
    let norm: Vec<Complex<f64>> = c[..n]
        .iter()
        .map(|x| {
            let q = x.clone() / lead.clone();
            Complex::new(q.re.to_f64(), q.im.to_f64())
        })
        .collect();
    if norm.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(MathError::Domain(format!("coefficients of {} overflow double precision", p)));
    }
    if n == 1 {
        return Ok(alloc::vec![-norm[0]]);
    }
    if norm.iter().all(|z| z.im == 0.0) {
        let mut m = DMatrix::<f64>::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = 1.0;
        }
        for (i, z) in norm.iter().enumerate() {
            m[(i, n - 1)] = -z.re;
        }
        return Ok(m.complex_eigenvalues().iter().copied().collect());
    }
    let mut m = DMatrix::<Complex<f64>>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex::new(1.0, 0.0);
    }
    for (i, z) in norm.iter().enumerate() {
        m[(i, n - 1)] = -z;
    }
    let schur = m.schur();
    let (_, t) = schur.unpack();
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

fn newton(p: &Polynomial<MpComplex>, dp: &Polynomial<MpComplex>, mut z: MpComplex, prec: u32, cap: usize) -> MpComplex {
    for _ in 0..cap {
        let f = p.eval(&z);
        if f.is_zero() {
            break;
        }
        let d = dp.eval(&z);
        if d.is_zero() {
            break;
        }
        let step = f / d;
        z = z - step.clone();
        if step.log2_abs() < z.log2_abs().max(-(prec as f64)) - prec as f64 + 4.0 {
            break;
        }
    }
    z
}

fn cmp_complex(a: &MpComplex, b: &MpComplex) -> core::cmp::Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

/// All zeros of `p` at the working precision of `ctx`.
///
/// Companion-matrix eigenvalues in double precision seed a Newton iteration
/// carried out at full precision. Zeros closer than `10^(-target/2)` are
/// merged and refined on the appropriate derivative.
pub fn roots<S: Scalar>(p: &Polynomial<S>, ctx: &PrecisionContext) -> MathResult<RootSet> {
    let wp = ctx.bits() + 32;
    let pc: Polynomial<MpComplex> = p.map(|c| c.to_complex(ctx).with_prec(wp));
    if pc.is_zero() {
        return Err(MathError::DegenerateLeadingCoefficient);
    }
    if pc.degree() == 0 {
        return Err(MathError::DegenerateDegree(0));
    }
    let real_coeffs = pc.coeffs().iter().all(|c| c.is_real());
    let dp = pc.derivative();
    let mut polished: Vec<MpComplex> = seeds(&pc)?
        .into_iter()
        .map(|s| {
            let z0 = MpComplex::new(MpReal::from_f64(s.re, wp), MpReal::from_f64(s.im, wp));
            newton(&pc, &dp, z0, wp, 400)
        })
        .collect();
    polished.sort_by(cmp_complex);

    let tol = -(ctx.target_digits as f64) / 2.0 * core::f64::consts::LOG2_10;
    let mut clusters: Vec<Vec<MpComplex>> = Vec::new();
    for z in polished {
        let scale = z.log2_abs().max(0.0);
        let hit = clusters.iter_mut().find(|cl| (cl[0].clone() - z.clone()).log2_abs() < tol + scale);
        match hit {
            Some(cl) => cl.push(z),
            None => clusters.push(alloc::vec![z]),
        }
    }

    let mut distinct = Vec::with_capacity(clusters.len());
    for cl in clusters {
        let m = cl.len();
        let mut mean = cl.iter().skip(1).fold(cl[0].clone(), |a, b| a + b.clone());
        mean = mean / MpComplex::from_i64(m as i64, wp);
        let mut q = pc.clone();
        for _ in 1..m {
            q = q.derivative();
        }
        let dq = q.derivative();
        let mut z = newton(&q, &dq, mean, wp, 200).with_prec(ctx.bits());
        if real_coeffs && z.im.log2_abs() < tol + z.log2_abs().max(0.0) {
            z.im = MpReal::zero(ctx.bits());
        }
        distinct.push((z, m));
    }
    distinct.sort_by(|a, b| cmp_complex(&a.0, &b.0));
    Ok(RootSet { distinct })
}

/// Largest `|p(z)|` over the zeros in `set`, relative to the largest coefficient.
pub fn relative_residual<S: Scalar>(p: &Polynomial<S>, set: &RootSet, ctx: &PrecisionContext) -> f64 {
    let wp = ctx.bits() + 32;
    let pc: Polynomial<MpComplex> = p.map(|c| c.to_complex(ctx).with_prec(wp));
    let scale = pc.coeffs().iter().map(|c| c.log2_abs()).fold(f64::NEG_INFINITY, f64::max);
    set.distinct
        .iter()
        .map(|(z, _)| pc.eval(&z.with_prec(wp)).log2_abs() - scale)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Scalars whose polynomials can be split into linear factors.
pub trait RootField: Scalar {
    fn zeros(p: &Polynomial<Self>, ctx: &PrecisionContext) -> MathResult<Vec<Self>>;
}

impl RootField for MpComplex {
    fn zeros(p: &Polynomial<Self>, ctx: &PrecisionContext) -> MathResult<Vec<Self>> {
        Ok(roots(p, ctx)?.all())
    }
}

impl RootField for Rational {
    /// Rational zeros only; anything else is `NotExact`.
    fn zeros(p: &Polynomial<Self>, ctx: &PrecisionContext) -> MathResult<Vec<Self>> {
        let set = roots(p, ctx)?;
        let lead = p.leading().cloned().unwrap_or_else(<Rational as One>::one);
        let bound = integer_lead(p);
        let mut out = Vec::new();
        for (z, m) in &set.distinct {
            let r = (z.is_real())
                .then(|| identify(&z.re, &bound))
                .flatten()
                .filter(|r| Zero::is_zero(&p.eval(r)))
                .ok_or_else(|| MathError::NotExact(format!("irrational zero {} of {}", z.to_sci_string(12), p)))?;
            out.extend(core::iter::repeat_n(r, *m));
        }
        let rebuilt = Polynomial::from_roots(&out, &<Rational as One>::one()).scale(&lead);
        if &rebuilt != p {
            return Err(MathError::NotExact(format!("zeros of {} are not all rational", p)));
        }
        Ok(out)
    }
}

/// Leading coefficient after clearing denominators; bounds root denominators.
fn integer_lead(p: &Polynomial<Rational>) -> BigInt {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.leading().map(|c| (c * Rational::from_integer(l)).to_integer().abs()).unwrap_or_else(BigInt::one)
}

/// Best rational approximation of `x` with denominator at most `bound`.
fn identify(x: &MpReal, bound: &BigInt) -> Option<Rational> {
    let target = x.to_rational();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    let mut best = None;
    for _ in 0..200 {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if &k2 > bound {
            break;
        }
        best = Some(Rational::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = rest.clone() - Rational::from_integer(a);
        if Zero::is_zero(&frac) {
            break;
        }
        rest = frac.recip();
    }
    best
}

/// `P(n)/P(0) = prod (1-x_i)_n / (-x_i)_n` over the zeros `x_i` of `P`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftPairs<S> {
    pub upper: Vec<S>,
    pub lower: Vec<S>,
    /// `P(0)`.
    pub scale: S,
}

pub fn to_shift_pairs<S: RootField>(p: &Polynomial<S>, ctx: &PrecisionContext) -> MathResult<ShiftPairs<S>> {
    let scale = p.eval(&S::zero(ctx));
    if scale.is_zero() {
        return Err(MathError::ZeroConstantTerm);
    }
    if p.degree() == 0 {
        return Ok(ShiftPairs { upper: Vec::new(), lower: Vec::new(), scale });
    }
    let zs = S::zeros(p, ctx)?;
    if let Some(z) = zs.iter().find(|z| z.integer().is_some_and(|n| n >= 0)) {
        return Err(MathError::IntegerRoot(format!("{}", z)));
    }
    let one = S::one(ctx);
    let upper = zs.iter().map(|z| one.clone() - z.clone()).collect();
    let lower = zs.iter().map(|z| -z.clone()).collect();
    Ok(ShiftPairs { upper, lower, scale })
}

/// Number of decimal digits to which two root sets agree, pairing zeros greedily.
pub fn agreement_digits(a: &[MpComplex], b: &[MpComplex]) -> f64 {
    if a.len() != b.len() {
        return 0.0;
    }
    let mut used = alloc::vec![false; b.len()];
    let mut worst = f64::INFINITY;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x.clone() - y.clone()).log2_abs() - x.log2_abs().max(0.0)))
            .fold((usize::MAX, f64::INFINITY), |acc, c| if c.1 < acc.1 { c } else { acc });
        if j == usize::MAX {
            return 0.0;
        }
        used[j] = true;
        worst = worst.min(-d / core::f64::consts::LOG2_10);
    }
    worst.to_f64().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    #[test]
    fn linear_shift_pair() {
        let p = Polynomial::new(vec![r(2, 1), r(1, 1)]);
        let s = to_shift_pairs(&p, &ctx()).unwrap();
        assert_eq!(s.upper, vec![r(3, 1)]);
        assert_eq!(s.lower, vec![r(2, 1)]);
        assert_eq!(s.scale, r(2, 1));
    }

    #[test]
    fn constant_polynomials() {
        let c = ctx();
        let p = Polynomial::constant(r(5, 1));
        assert_eq!(roots(&p, &c), Err(MathError::DegenerateDegree(0)));
        let s = to_shift_pairs(&p, &c).unwrap();
        assert!(s.upper.is_empty() && s.lower.is_empty());
        assert_eq!(s.scale, r(5, 1));
    }

    #[test]
    fn shift_pair_errors() {
        let c = ctx();
        let zero_const = Polynomial::new(vec![r(0, 1), r(1, 1)]);
        assert_eq!(to_shift_pairs(&zero_const, &c), Err(MathError::ZeroConstantTerm));
        let int_root = Polynomial::from_roots(&[r(3, 1), r(-1, 2)], &r(1, 1));
        assert!(matches!(to_shift_pairs(&int_root, &c), Err(MathError::IntegerRoot(_))));
        let irr = Polynomial::new(vec![r(-2, 1), r(0, 1), r(1, 1)]);
        assert!(matches!(to_shift_pairs(&irr, &c), Err(MathError::NotExact(_))));
    }

    #[test]
    fn rational_zeros_with_multiplicity() {
        let c = ctx();
        let want = vec![r(-7, 3), r(-7, 3), r(1, 5), r(5, 2)];
        let p = Polynomial::from_roots(&want, &r(1, 1)).scale(&r(6, 1));
        assert_eq!(Rational::zeros(&p, &c).unwrap(), want);
        let set = roots(&p, &c).unwrap();
        assert_eq!(set.distinct.len(), 3);
        assert_eq!(set.distinct[0].1, 2);
        assert!(relative_residual(&p, &set, &c) < -100.0);
    }

    #[test]
    fn complex_pair() {
        // t^2 + 1
        let c = ctx();
        let p = Polynomial::new(vec![r(1, 1), r(0, 1), r(1, 1)]);
        let set = roots(&p, &c).unwrap();
        assert_eq!(set.len(), 2);
        let i = MpComplex::new(MpReal::zero(c.bits()), MpReal::one(c.bits()));
        assert!(agreement_digits(&set.all(), &[-i.clone(), i]) > 30.0);
    }

    #[test]
    fn complex_coefficients() {
        let c = ctx();
        let b = c.bits();
        let z1 = MpComplex::new(MpReal::from_i64(1, b), MpReal::from_i64(2, b));
        let z2 = MpComplex::new(MpReal::from_i64(-3, b), MpReal::one(b).ldexp(-1));
        let p = Polynomial::from_roots(&[z1.clone(), z2.clone()], &MpComplex::one(b));
        let set = roots(&p, &c).unwrap();
        assert!(agreement_digits(&set.all(), &[z1, z2]) > 30.0);
    }

    #[test]
    fn triple_root_is_merged() {
        let c = ctx();
        let p = Polynomial::from_roots(&[r(1, 3), r(1, 3), r(1, 3), r(-2, 1)], &r(1, 1));
        let set = roots(&p, &c).unwrap();
        assert_eq!(set.distinct.iter().map(|d| d.1).collect::<Vec<_>>(), vec![1, 3]);
        let third = MpComplex::from_rational(&r(1, 3), c.bits());
        assert!(agreement_digits(&[set.distinct[1].0.clone()], &[third]) > 30.0);
    }
}
