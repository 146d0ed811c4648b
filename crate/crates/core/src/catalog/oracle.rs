//! Independent routes to catalog values: the master double sum behind the
//! cubic-transformation entries, the probe fixing the sign of `lambda`, and
//! parametric excess of sampled sides.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::ids::{gs_ab, ipd_ab, signed_builder};
use super::{find, sample, Binding, CatalogError, IdentityCase, Mode};
use crate::hypseries::TransformSpec;
use crate::mparith::{delta_split, MathResult, PrecisionContext, Rational, Scalar};
use crate::polyfactory::q3r_poly;

fn k<S: Scalar>(n: i64, d: i64, ctx: &PrecisionContext) -> S {
    S::from_rational(&Rational::new(n.into(), d.into()), ctx)
}

fn ki<S: Scalar>(n: i64, ctx: &PrecisionContext) -> S {
    S::from_i64(n, ctx)
}

#[allow(clippy::too_many_arguments)]
fn spec<S>(alpha: Vec<S>, beta: Vec<S>, delta: Vec<S>, gamma: Vec<S>, lambda: S, u: u32, v: i32, m: S, d: S) -> TransformSpec<S> {
    TransformSpec { alpha, beta, delta, gamma, lambda, w: 1, u, v, m, d, characteristic: None }
}

/// The summation transformation underlying a cubic entry, together with
/// the `a`, `b` vectors it is applied to. `None` for other entries.
#[allow(clippy::type_complexity)]
pub fn transform<S: Scalar>(
    id: &str,
    b: &Binding,
    ctx: &PrecisionContext,
) -> MathResult<Option<(TransformSpec<S>, Vec<S>, Vec<S>)>> {
    if !matches!(id, "T1" | "T2" | "T3" | "T4" | "T5" | "T6" | "T7" | "T7M") {
        return Ok(None);
    }
    let al: S = b.s("alpha", ctx);
    let (one, two, half) = (ki::<S>(1, ctx), ki::<S>(2, ctx), k::<S>(1, 2, ctx));
    let beta = || b.s::<S>("beta", ctx);
    let (a, bv) = match id {
        "T1" | "T3" | "T7M" => gs_ab(&al, b.int("n"), ctx),
        _ => ipd_ab(b, ctx),
    };
    let t = match id {
        "T1" | "T2" => {
            let be = beta();
            let low = vec![be.clone(), al.clone() - be.clone() + k(3, 2, ctx)];
            spec(
                vec![al.clone(), two.clone() * be.clone() - al.clone() - one.clone(), al.clone() + two.clone() - two * be],
                low.clone(),
                delta_split(&al, 3),
                low,
                -al,
                1,
                3,
                k(1, 4, ctx),
                k(-27, 4, ctx),
            )
        }
        "T3" | "T4" => {
            let be = beta();
            spec(
                vec![one.clone(), al.clone() - two * be.clone()],
                vec![be.clone() + one.clone()],
                [delta_split(&al, 3), vec![be.clone()]].concat(),
                [delta_split(&al, 2), vec![be + one.clone()]].concat(),
                -al,
                1,
                3,
                one,
                k(-27, 4, ctx),
            )
        }
        "T5" => {
            let be = beta();
            spec(
                vec![al.clone(), be.clone() - half, al.clone() - be.clone() + one.clone()],
                vec![two.clone() * be.clone() - one, two.clone() * (al.clone() - be.clone()) + two],
                delta_split(&al, 3),
                vec![be.clone(), al.clone() - be + k(3, 2, ctx)],
                -al,
                2,
                3,
                ki(4, ctx),
                k(27, 4, ctx),
            )
        }
        "T6" => {
            let a3 = ki::<S>(3, ctx) * al.clone();
            let a2 = two.clone() * al.clone();
            spec(
                vec![a3.clone(), a3 + half.clone()],
                vec![ki::<S>(6, ctx) * al.clone() + one.clone()],
                vec![al.clone(), al + half],
                vec![a2.clone() + one],
                -a2,
                3,
                2,
                k(4, 3, ctx),
                k(4, 27, ctx),
            )
        }
        "T7" => {
            let a3 = ki::<S>(3, ctx) * al.clone();
            spec(vec![a3.clone(), -a3], vec![half.clone()], vec![al.clone(), -al], vec![half], S::zero(ctx), 1, -2, k(3, 4, ctx), k(27, 4, ctx))
        }
        _ => {
            let be = beta();
            let r = b.int("r");
            let rs = ki::<S>(r, ctx);
            let low = vec![
                (al.clone() + be.clone() + rs.clone()) / two.clone() + k(3, 4, ctx),
                (al.clone() - be.clone() + rs.clone()) / two + k(3, 4, ctx),
            ];
            let mut t = spec(
                vec![al.clone(), half.clone() - rs.clone() - be.clone(), half - rs + be.clone()],
                low.clone(),
                delta_split(&al, 3),
                low,
                -al.clone(),
                1,
                3,
                k(1, 4, ctx),
                k(-27, 4, ctx),
            );
            t.characteristic = Some(q3r_poly(r as u64, &al, &be, ctx)?);
            t
        }
    };
    Ok(Some((t, a, bv)))
}

/// Tally of the two candidate signs over the probe bindings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignResolution {
    pub id: String,
    pub trials: usize,
    pub plus: usize,
    pub minus: usize,
    pub resolved: i64,
}

pub const PROBE_TRIALS: usize = 10;

/// Evaluates an entry whose `lambda` is `±alpha` under both signs on
/// [`PROBE_TRIALS`] exact bindings; exactly one sign has to hold throughout.
pub fn lambda_sign_probe(id: &str, seed: u64) -> Result<SignResolution, CatalogError> {
    let build = signed_builder(id).ok_or_else(|| CatalogError::UnknownId(String::from(id)))?;
    let case = find(id).ok_or_else(|| CatalogError::UnknownId(String::from(id)))?;
    let ctx = PrecisionContext::default();
    let (mut plus, mut minus) = (0, 0);
    for trial in 0..PROBE_TRIALS {
        let b = sample(&case, seed, trial as u64, Mode::Exact)?;
        for (sgn, count) in [(1, &mut plus), (-1, &mut minus)] {
            let holds = build(&b, sgn, &ctx)
                .and_then(|(l, r)| Ok(l.eval(&ctx)? == r.eval(&ctx)?))
                .unwrap_or(false);
            *count += usize::from(holds);
        }
    }
    let resolved = match (plus == PROBE_TRIALS, minus == PROBE_TRIALS) {
        (true, false) => 1,
        (false, true) => -1,
        _ => return Err(CatalogError::SignUnresolved { id: String::from(id), plus, minus }),
    };
    Ok(SignResolution { id: String::from(id), trials: PROBE_TRIALS, plus, minus, resolved })
}

/// Parametric excess of the leading series on each side, in exact
/// arithmetic.
pub fn side_excess(case: &IdentityCase, b: &Binding) -> MathResult<(Option<Rational>, Option<Rational>)> {
    let ctx = PrecisionContext::default();
    let (l, r) = case.build_exact(b, &ctx)?;
    Ok((l.leading_excess(&ctx), r.leading_excess(&ctx)))
}
