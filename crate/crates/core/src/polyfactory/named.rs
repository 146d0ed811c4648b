//! The named polynomial families, expanded coefficientwise.

use alloc::format;
use alloc::vec::Vec;

use super::Polynomial;
use crate::hypseries::{eval_phf, SeriesSpec};
use crate::mparith::{pochhammer, pochhammer_vec, MathError, MathResult, PrecisionContext, Scalar};

fn q<S: Scalar>(n: i64, d: i64, ctx: &PrecisionContext) -> S {
    S::from_i64(n, ctx) / S::from_i64(d, ctx)
}

fn factorial<S: Scalar>(n: u64, ctx: &PrecisionContext) -> S {
    pochhammer(&S::one(ctx), n)
}

fn sign<S: Scalar>(k: u64, ctx: &PrecisionContext) -> S {
    if k.is_multiple_of(2) {
        S::one(ctx)
    } else {
        -S::one(ctx)
    }
}

fn pole<S: Scalar>(what: &str, at: &S) -> MathError {
    MathError::Pole(format!("{} at {}", what, at))
}

fn unit_sum<S: Scalar>(upper: Vec<S>, lower: Vec<S>, ctx: &PrecisionContext) -> MathResult<S> {
    Ok(eval_phf(&SeriesSpec::new(upper, lower, S::one(ctx)), ctx)?.value)
}

fn pairwise<S: Scalar>(a: &[S], b: &[u64], ctx: &PrecisionContext) -> MathResult<Vec<S>> {
    if a.len() != b.len() {
        return Err(MathError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, &n)| x.clone() + S::from_i64(n as i64, ctx)).collect())
}

/// `Y_p(u, v; t)` without its `1/Gamma(e-d)` normalisation.
#[allow(clippy::too_many_arguments)]
pub fn y_poly_core<S: Scalar>(
    u: i64,
    v: i64,
    d: &S,
    e: &S,
    lambda: &S,
    h: &[S],
    p: &[u64],
    ctx: &PrecisionContext,
) -> MathResult<Polynomial<S>> {
    if h.len() != p.len() {
        return Err(MathError::LengthMismatch(h.len(), p.len()));
    }
    let one = S::one(ctx);
    let total: u64 = p.iter().sum();
    // (h-d)_p times the inner (-j, 1-h+d; 1-h+d-p) sum, with the
    // (1-h+d-p)_p denominators cancelled so integral h-d stays finite.
    let inner_lo: Vec<S> = h.iter().zip(p).map(|(x, &n)| one.clone() - x.clone() + d.clone() - S::from_i64(n as i64, ctx)).collect();
    let inner = |j: u64| -> S {
        let mut sum = S::zero(ctx);
        let mut w = one.clone();
        for n in 0..=j {
            let nn = S::from_i64(n as i64, ctx);
            let prod = inner_lo.iter().zip(p).fold(one.clone(), |acc, (x, &m)| acc * pochhammer(&(x.clone() + nn.clone()), m));
            sum = sum + w.clone() * prod;
            w = w * S::from_i64(n as i64 - j as i64, ctx) / S::from_i64(n as i64 + 1, ctx);
        }
        sign::<S>(total, ctx) * sum
    };
    let us = S::from_i64(u, ctx);
    let vs = S::from_i64(v, ctx);
    let base = d.clone() - e.clone() - lambda.clone() + one.clone();
    let mut acc = Polynomial::zero();
    for j in 0..=total {
        let c = pochhammer(&(d.clone() - e.clone() + one.clone()), j) / factorial::<S>(j, ctx) * inner(j);
        if c.is_zero() {
            continue;
        }
        let jj = S::from_i64(j as i64, ctx);
        let term = Polynomial::rising(&us, d, j) * Polynomial::rising(&vs, &(base.clone() + jj), total - j);
        acc = acc + term.scale(&c);
    }
    Ok(acc)
}

/// `Y_p(u, v; t)`.
#[allow(clippy::too_many_arguments)]
pub fn y_poly<S: Scalar>(
    u: i64,
    v: i64,
    d: &S,
    e: &S,
    lambda: &S,
    h: &[S],
    p: &[u64],
    ctx: &PrecisionContext,
) -> MathResult<Polynomial<S>> {
    let g = (e.clone() - d.clone()).gamma(ctx)?;
    let core = y_poly_core(u, v, d, e, lambda, h, p, ctx)?;
    Ok(core.scale(&(S::one(ctx) / g)))
}

/// Closed degree-one form of `Y_1` times `Gamma(e-d)`, and its root.
pub fn y1_closed_core<S: Scalar>(
    u: i64,
    v: i64,
    d: &S,
    e: &S,
    lambda: &S,
    h: &S,
    ctx: &PrecisionContext,
) -> MathResult<(Polynomial<S>, S)> {
    let one = S::one(ctx);
    let hd = h.clone() - d.clone();
    let edm = e.clone() - d.clone() - one;
    let lead = S::from_i64(v, ctx) * hd.clone() - S::from_i64(u, ctx) * edm.clone();
    let cst = hd * lambda.clone() + edm * h.clone();
    if lead.is_zero() {
        return Err(MathError::DegenerateLeadingCoefficient);
    }
    let root = cst.clone() / lead.clone();
    Ok((Polynomial::linear(lead, -cst), root))
}

/// `Y_1(u, v; t)` and its root `xi`.
pub fn y1_closed<S: Scalar>(
    u: i64,
    v: i64,
    d: &S,
    e: &S,
    lambda: &S,
    h: &S,
    ctx: &PrecisionContext,
) -> MathResult<(Polynomial<S>, S)> {
    let g = (e.clone() - d.clone()).gamma(ctx)?;
    let (p, root) = y1_closed_core(u, v, d, e, lambda, h, ctx)?;
    Ok((p.scale(&(S::one(ctx) / g)), root))
}

/// Maier's `Q^(3)_r(x)`, of degree `2r`.
pub fn q3r_poly<S: Scalar>(r: u64, alpha: &S, beta: &S, ctx: &PrecisionContext) -> MathResult<Polynomial<S>> {
    let half = q::<S>(1, 2, ctx);
    let norm = pochhammer(&(half.clone() + beta.clone()), r) * pochhammer(&(half.clone() - beta.clone()), r);
    if norm.is_zero() {
        return Err(pole("(1/2+beta)_r (1/2-beta)_r", beta));
    }
    let four_r = S::from_i64(4, ctx).powi(r as i64)?;
    let rr = S::from_i64(r as i64, ctx);
    let a0 = (half.clone() - rr.clone() + beta.clone()) * half.clone();
    let b0 = (half.clone() - rr - beta.clone()) * half.clone();
    let minus_half = -half.clone();
    let mut acc = Polynomial::zero();
    for j in 0..=r {
        let c = pochhammer(&-S::from_i64(r as i64, ctx), j) / factorial::<S>(j, ctx);
        let jj = S::from_i64(j as i64, ctx);
        let term = Polynomial::rising(&-S::one(ctx), &S::zero(ctx), j)
            * Polynomial::rising(&half, &(alpha.clone() * half.clone()), j)
            * Polynomial::rising(&minus_half, &(a0.clone() + jj.clone()), r - j)
            * Polynomial::rising(&minus_half, &(b0.clone() + jj), r - j);
        acc = acc + term.scale(&c);
    }
    Ok(acc.scale(&(four_r / norm)))
}

/// `beta_l = (-1)^l/l! F(-l, b, f+m; b+1, f) - (-1)^l (f-b)_m / ((b+1)_l (f)_m)`.
pub fn beta_l<S: Scalar>(l: u64, b: &S, f: &[S], m: &[u64], ctx: &PrecisionContext) -> MathResult<S> {
    let one = S::one(ctx);
    let fm = pairwise(f, m, ctx)?;
    let mut up = alloc::vec![-S::from_i64(l as i64, ctx), b.clone()];
    up.extend(fm);
    let mut lo = alloc::vec![b.clone() + one.clone()];
    lo.extend(f.iter().cloned());
    let sgn = sign::<S>(l, ctx);
    let first = sgn.clone() * unit_sum(up, lo, ctx)? / factorial::<S>(l, ctx);
    let fb: Vec<S> = f.iter().map(|x| x.clone() - b.clone()).collect();
    let den = pochhammer(&(b.clone() + one.clone()), l) * pochhammer_vec(f, m, &one)?;
    if den.is_zero() {
        return Err(pole("beta_l denominator", b));
    }
    Ok(first - sgn * pochhammer_vec(&fb, m, &one)? / den)
}

/// `sigma_ql`, which is `beta_l` with `b` replaced by `b + q - 1`.
pub fn sigma_ql<S: Scalar>(q: u64, l: u64, b: &S, f: &[S], m: &[u64], ctx: &PrecisionContext) -> MathResult<S> {
    assert!(q >= 1, "sigma_ql needs q >= 1");
    beta_l(l, &(b.clone() + S::from_i64(q as i64 - 1, ctx)), f, m, ctx)
}

/// `T_{k-1}(z)`, Gamma factors included.
pub fn t_poly<S: Scalar>(k: u64, a: &S, b: &S, f: &[S], m: &[u64], ctx: &PrecisionContext) -> MathResult<Polynomial<S>> {
    let scaled = t_poly_scaled(k, a, b, f, m, ctx)?;
    let one = S::one(ctx);
    let g = b.gamma(ctx)? / (b.clone() - a.clone() + one).gamma(ctx)?;
    Ok(scaled.scale(&g))
}

/// `T_{k-1}(z) * Gamma(b-a+1) / Gamma(b)`, which is free of Gamma functions.
pub fn t_poly_scaled<S: Scalar>(
    k: u64,
    a: &S,
    b: &S,
    f: &[S],
    m: &[u64],
    ctx: &PrecisionContext,
) -> MathResult<Polynomial<S>> {
    assert!(k >= 1, "t_poly needs k >= 1");
    let one = S::one(ctx);
    let bma1 = b.clone() - a.clone() + one.clone();
    let mut acc = Polynomial::zero();
    for qq in 1..=k {
        let qs = S::from_i64(qq as i64, ctx);
        let fb: Vec<S> = f.iter().map(|x| x.clone() - b.clone() - qs.clone() + one.clone()).collect();
        let num = sign::<S>(qq - 1, ctx) * pochhammer_vec(&fb, m, &one)? * pochhammer(b, qq - 1);
        let den = pochhammer(&bma1, qq - 1) * factorial::<S>(qq - 1, ctx) * factorial::<S>(k - qq, ctx);
        if den.is_zero() {
            return Err(pole("Gamma(b+q-a)", &bma1));
        }
        let term = Polynomial::rising(&one, &(b.clone() + qs), k - qq) * Polynomial::rising(&one, &bma1, qq - 1);
        acc = acc + term.scale(&(num / den));
    }
    Ok(acc)
}

/// `L^_{m-1}(t)`, whose zeros give the shift pairs of the degenerate
/// Miller-Paris transformation.
pub fn lhat_poly<S: Scalar>(
    a: &S,
    g: &S,
    c: &S,
    b: &S,
    f: &[S],
    m: &[u64],
    ctx: &PrecisionContext,
) -> MathResult<Polynomial<S>> {
    let one = S::one(ctx);
    let mm: u64 = m.iter().sum();
    let mms = S::from_i64(mm as i64, ctx);
    let ca = c.clone() - a.clone() - mms.clone() + one.clone();
    let cg = c.clone() - g.clone() - mms.clone() + one.clone();
    let cag = c.clone() - a.clone() - g.clone() - mms + one.clone();
    for (x, name) in [(&ca, "(c-a-m+1)_{m-1}"), (&cg, "(c-g-m+1)_{m-1}")] {
        if pochhammer(x, mm.saturating_sub(1)).is_zero() {
            return Err(pole(name, x));
        }
    }
    let mut acc = Polynomial::zero();
    for l in 0..mm {
        let bl = beta_l(l, b, f, m, ctx)?;
        let outer = sign::<S>(l, ctx) * bl * pochhammer(a, l) * pochhammer(g, l)
            / (pochhammer(&ca, l) * pochhammer(&cg, l));
        if outer.is_zero() {
            continue;
        }
        let ls = S::from_i64(l as i64, ctx);
        let top = mm - 1 - l;
        for i in 0..=top {
            let c_i = pochhammer(&-S::from_i64(top as i64, ctx), i) * pochhammer(&cag, i)
                / (pochhammer(&(ca.clone() + ls.clone()), i)
                    * pochhammer(&(cg.clone() + ls.clone()), i)
                    * factorial::<S>(i, ctx));
            let term = Polynomial::rising(&one, &S::zero(ctx), l + i);
            acc = acc + term.scale(&(outer.clone() * c_i));
        }
    }
    if mm > 0 && (acc.is_zero() || acc.degree() + 1 < mm as usize) {
        return Err(MathError::DegenerateDegree(acc.degree()));
    }
    Ok(acc)
}

/// `P_M(x) = (b+x)_q F(-q, gamma-beta, a+x; gamma, b+x)`, degree `qp`.
pub fn p_big_m<S: Scalar>(
    qn: u64,
    gamma: &S,
    beta: &S,
    a: &[S],
    b: &[S],
    ctx: &PrecisionContext,
) -> MathResult<Polynomial<S>> {
    if gamma.nonpositive_integer().is_some_and(|n| n < qn) {
        return Err(pole("gamma", gamma));
    }
    let one = S::one(ctx);
    let gb = gamma.clone() - beta.clone();
    let mut acc = Polynomial::zero();
    for j in 0..=qn {
        let c = pochhammer(&-S::from_i64(qn as i64, ctx), j) * pochhammer(&gb, j)
            / (pochhammer(gamma, j) * factorial::<S>(j, ctx));
        let term = ipd_block(a, b, j, qn, &one, ctx);
        acc = acc + term.scale(&c);
    }
    Ok(acc)
}

/// `prod (a_i + x)_j prod (b_i + j + x)_{q-j}`.
fn ipd_block<S: Scalar>(a: &[S], b: &[S], j: u64, qn: u64, one: &S, ctx: &PrecisionContext) -> Polynomial<S> {
    let jj = S::from_i64(j as i64, ctx);
    let mut t = Polynomial::constant(one.clone());
    for ai in a {
        t = t * Polynomial::rising(one, ai, j);
    }
    for bi in b {
        t = t * Polynomial::rising(one, &(bi.clone() + jj.clone()), qn - j);
    }
    t
}

/// `R_M(x) = (b+x)_q F(-q, alpha+x, a+x; gamma, b+x | -1)`, degree `q(p+1)`.
pub fn r_big_m<S: Scalar>(
    qn: u64,
    alpha: &S,
    gamma: &S,
    a: &[S],
    b: &[S],
    ctx: &PrecisionContext,
) -> MathResult<Polynomial<S>> {
    if gamma.nonpositive_integer().is_some_and(|n| n < qn) {
        return Err(pole("gamma", gamma));
    }
    let one = S::one(ctx);
    let mut acc = Polynomial::zero();
    for j in 0..=qn {
        let c = sign::<S>(j, ctx) * pochhammer(&-S::from_i64(qn as i64, ctx), j)
            / (pochhammer(gamma, j) * factorial::<S>(j, ctx));
        let term = Polynomial::rising(&one, alpha, j) * ipd_block(a, b, j, qn, &one, ctx);
        acc = acc + term.scale(&c);
    }
    Ok(acc)
}

/// `Q_M(x) = (b+x)_q F(-q, Δ(alpha'+x, 2), a+x; delta+r-q, beta+r-q, b+x | -4)`
/// with `alpha' = beta+delta+r-q-1`, degree `(p+2)q`.
pub fn q_big_m<S: Scalar>(
    qn: u64,
    r: u64,
    beta: &S,
    delta: &S,
    a: &[S],
    b: &[S],
    ctx: &PrecisionContext,
) -> MathResult<Polynomial<S>> {
    let one = S::one(ctx);
    let rq = S::from_i64(r as i64 - qn as i64, ctx);
    let alpha = beta.clone() + delta.clone() + rq.clone() - one.clone();
    let l1 = delta.clone() + rq.clone();
    let l2 = beta.clone() + rq;
    let mut acc = Polynomial::zero();
    for j in 0..=qn {
        let den = pochhammer(&l1, j) * pochhammer(&l2, j) * factorial::<S>(j, ctx);
        if den.is_zero() {
            return Err(pole("delta+r-q or beta+r-q", &l1));
        }
        let c = sign::<S>(j, ctx) * pochhammer(&-S::from_i64(qn as i64, ctx), j) / den;
        let term = Polynomial::rising(&one, &alpha, 2 * j) * ipd_block(a, b, j, qn, &one, ctx);
        acc = acc + term.scale(&c);
    }
    Ok(acc)
}

/// `P_{2r}(t) = 3F2(-r, -t, t+alpha; beta, delta)`, degree `2r`.
pub fn p2r_poly<S: Scalar>(r: u64, alpha: &S, beta: &S, delta: &S, ctx: &PrecisionContext) -> MathResult<Polynomial<S>> {
    let one = S::one(ctx);
    let mut acc = Polynomial::zero();
    for j in 0..=r {
        let den = pochhammer(beta, j) * pochhammer(delta, j) * factorial::<S>(j, ctx);
        if den.is_zero() {
            return Err(pole("beta or delta", beta));
        }
        let c = pochhammer(&-S::from_i64(r as i64, ctx), j) / den;
        let term = Polynomial::rising(&-one.clone(), &S::zero(ctx), j) * Polynomial::rising(&one, alpha, j);
        acc = acc + term.scale(&c);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mparith::Rational;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn poly(c: &[Rational]) -> Polynomial<Rational> {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn y1_example() {
        let c = ctx();
        let (d, e, l, h) = (r(1, 1), r(3, 1), r(0, 1), r(2, 1));
        let y = y_poly(1, 3, &d, &e, &l, core::slice::from_ref(&h), &[1], &c).unwrap();
        assert_eq!(y, poly(&[r(-2, 1), r(2, 1)]));
        let (p, root) = y1_closed(1, 3, &d, &e, &l, &h, &c).unwrap();
        assert_eq!(p, y);
        assert_eq!(root, r(1, 1));
        assert_eq!(p.eval(&root), r(0, 1));
    }

    #[test]
    fn y0_is_constant() {
        let c = ctx();
        let y = y_poly_core::<Rational>(1, 3, &r(-2, 1), &r(5, 3), &r(1, 2), &[], &[], &c).unwrap();
        assert_eq!(y, poly(&[r(1, 1)]));
    }

    #[test]
    fn y_is_independent_of_how_ipd_pairs_are_split() {
        // (h)_2 = (h)_1 (h+1)_1; h - d = 2 puts a pole in the printed inner sum
        let c = ctx();
        let (d, e, l) = (r(-1, 2), r(290, 9), r(1, 6));
        for h in [r(3, 2), r(2, 5)] {
            let joined = y_poly_core(2, 3, &d, &e, &l, core::slice::from_ref(&h), &[2], &c).unwrap();
            let split = y_poly_core(2, 3, &d, &e, &l, &[h.clone(), h + r(1, 1)], &[1, 1], &c).unwrap();
            assert_eq!(joined, split);
        }
    }

    #[test]
    fn y1_degenerate_leading() {
        // v(h-d) = u(e-d-1)
        let c = ctx();
        let err = y1_closed_core(1, 1, &r(0, 1), &r(3, 1), &r(1, 1), &r(2, 1), &c);
        assert_eq!(err, Err(MathError::DegenerateLeadingCoefficient));
    }

    #[test]
    fn q3r_small() {
        let c = ctx();
        assert_eq!(q3r_poly(0, &r(2, 3), &r(1, 5), &c).unwrap(), poly(&[r(1, 1)]));
        let q1 = q3r_poly(1, &r(2, 3), &r(1, 5), &c).unwrap();
        assert_eq!(q1.degree(), 2);
        // at x = 0 only j = 0 survives: 4 (A)_1 (B)_1 / ((1/2+b)(1/2-b)) with A, B at x = 0
        let (b, half) = (r(1, 5), r(1, 2));
        let a0 = (half.clone() - r(1, 1) + b.clone()) / r(2, 1);
        let b0 = (half.clone() - r(1, 1) - b.clone()) / r(2, 1);
        let expect = r(4, 1) * a0 * b0 / ((half.clone() + b.clone()) * (half - b));
        assert_eq!(q1.eval(&r(0, 1)), expect);
    }

    #[test]
    fn beta_and_sigma() {
        let c = ctx();
        assert_eq!(beta_l(0, &r(1, 1), &[r(2, 1)], &[1], &c).unwrap(), r(1, 2));
        let (b, f) = (r(2, 7), vec![r(5, 3), r(-1, 4)]);
        let m = [2u64, 1];
        for l in 0..3 {
            assert_eq!(sigma_ql(1, l, &b, &f, &m, &c).unwrap(), beta_l(l, &b, &f, &m, &c).unwrap());
        }
        let s0 = sigma_ql(3, 0, &b, &f, &m, &c).unwrap();
        let one = r(1, 1);
        let fb: Vec<_> = f.iter().map(|x| x - &b - r(2, 1)).collect();
        let expect = one.clone() - pochhammer_vec(&fb, &m, &one).unwrap() / pochhammer_vec(&f, &m, &one).unwrap();
        assert_eq!(s0, expect);
    }

    #[test]
    fn named_degrees() {
        let c = ctx();
        let (a, b) = (vec![r(1, 3), r(2, 7)], vec![r(5, 4), r(9, 5)]);
        assert_eq!(p_big_m(2, &r(3, 7), &r(2, 9), &a, &b, &c).unwrap().degree(), 4);
        assert_eq!(r_big_m(2, &r(1, 6), &r(3, 7), &a[..1], &b[..1], &c).unwrap().degree(), 4);
        assert_eq!(q_big_m(1, 2, &r(1, 6), &r(3, 7), &a[..1], &b[..1], &c).unwrap().degree(), 3);
        assert_eq!(p2r_poly(3, &r(1, 6), &r(3, 7), &r(2, 9), &c).unwrap().degree(), 6);
        assert_eq!(t_poly_scaled(3, &r(1, 6), &r(3, 7), &[r(2, 9)], &[2], &c).unwrap().degree(), 2);
        assert_eq!(lhat_poly(&r(1, 6), &r(3, 7), &r(2, 9), &r(5, 2), &[r(4, 3)], &[3], &c).unwrap().degree(), 2);
        assert_eq!(r_big_m(0, &r(1, 6), &r(3, 7), &a, &b, &c).unwrap(), poly(&[r(1, 1)]));
        assert_eq!(q_big_m(0, 2, &r(1, 6), &r(3, 7), &a, &b, &c).unwrap(), poly(&[r(1, 1)]));
    }

    #[test]
    fn p2r_closed_forms() {
        let c = ctx();
        let (al, be, de) = (r(1, 6), r(3, 7), r(2, 9));
        let p = p2r_poly(1, &al, &be, &de, &c).unwrap();
        // 1 + t(t+alpha)/(beta delta)
        let bd = be.clone() * de.clone();
        assert_eq!(p, poly(&[r(1, 1), al / bd.clone(), r(1, 1) / bd]));
        assert_eq!(p2r_poly(2, &r(1, 6), &be, &de, &c).unwrap().eval(&r(0, 1)), r(1, 1));
        assert_eq!(p2r_poly(0, &r(1, 6), &be, &de, &c).unwrap(), poly(&[r(1, 1)]));
    }

    #[test]
    fn p_big_m_collapses_when_gamma_equals_beta() {
        let c = ctx();
        let (a, b) = (vec![r(1, 3)], vec![r(5, 4)]);
        let p = p_big_m(2, &r(3, 7), &r(3, 7), &a, &b, &c).unwrap();
        assert_eq!(p, Polynomial::rising(&r(1, 1), &r(5, 4), 2));
    }
}
