use alloc::vec::Vec;

use super::{MathError, MathResult, Scalar};

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer<S: Scalar>(a: &S, n: u64) -> S {
    let one = a.unit();
    let mut acc = one.clone();
    let mut x = a.clone();
    for _ in 0..n {
        acc = acc * x.clone();
        x = x + one.clone();
    }
    acc
}

/// `(a + shift)_n`, a convenience for shifted parameters.
pub fn rising_shifted<S: Scalar>(a: &S, shift: i64, n: u64) -> S {
    let s = a.clone() + scaled_unit(a, shift);
    pochhammer(&s, n)
}

fn scaled_unit<S: Scalar>(a: &S, k: i64) -> S {
    let one = a.unit();
    let mut acc = one.clone() - one.clone();
    let step = if k < 0 { -one } else { one };
    for _ in 0..k.unsigned_abs() {
        acc = acc + step.clone();
    }
    acc
}

/// Product of `(h_i)_{p_i}` over paired entries.
pub fn pochhammer_vec<S: Scalar>(h: &[S], p: &[u64], one: &S) -> MathResult<S> {
    if h.len() != p.len() {
        return Err(MathError::LengthMismatch(h.len(), p.len()));
    }
    Ok(h.iter().zip(p).fold(one.clone(), |acc, (a, &n)| acc * pochhammer(a, n)))
}

/// `(z/m, (z+1)/m, ..., (z+m-1)/m)`, so that `(z)_{mk} = m^{mk} prod (Δ_j)_k`.
pub fn delta_split<S: Scalar>(z: &S, m: u32) -> Vec<S> {
    assert!(m >= 1, "delta_split needs m >= 1");
    let one = z.unit();
    let mm = scaled_unit(z, m as i64);
    let mut out = Vec::with_capacity(m as usize);
    let mut x = z.clone();
    for _ in 0..m {
        out.push(x.clone() / mm.clone());
        x = x + one.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mparith::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_products() {
        assert_eq!(pochhammer(&q(2, 1), 3), q(24, 1));
        assert_eq!(pochhammer(&q(7, 3), 0), q(1, 1));
        assert_eq!(pochhammer(&q(-2, 1), 3), q(0, 1));
    }

    #[test]
    fn vector_products() {
        let one = q(1, 1);
        assert_eq!(pochhammer_vec(&[q(2, 1), q(3, 1)], &[1, 2], &one).unwrap(), q(24, 1));
        assert_eq!(pochhammer_vec::<Rational>(&[], &[], &one).unwrap(), one);
        assert_eq!(pochhammer_vec(&[q(1, 2)], &[2], &one).unwrap(), q(3, 4));
        assert!(matches!(pochhammer_vec(&[q(1, 2)], &[], &one), Err(MathError::LengthMismatch(1, 0))));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_split(&q(5, 7), 1), [q(5, 7)]);
        assert_eq!(delta_split(&q(3, 1), 2), [q(3, 2), q(2, 1)]);
        let one = q(1, 1);
        let lhs = pochhammer(&one, 4);
        let rhs = q(16, 1) * pochhammer_vec(&delta_split(&one, 2), &[2, 2], &one).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(rising_shifted(&q(1, 2), -1, 2), q(-1, 4));
    }
}
