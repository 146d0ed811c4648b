//! One line per acceptance criterion. Exits non-zero only when the set of
//! failing criteria or entries differs from the known failures below.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::{c, dist_to_pole, q, rel_log10, within_target};
use hypid_core::catalog::{
    find, lambda_sign_probe, registry, sample, side_excess, transform, verify_case, Kind, Mode, LAMBDA_SIGN, PROBE_TRIALS,
};
use hypid_core::hypseries::{eval_phf, master_lhs, master_rhs, SeriesSpec};
use hypid_core::mparith::{gamma, gamma_ratio};
use hypid_core::polyfactory::{
    agreement_digits, lhat_poly, p2r_poly, p_big_m, q3r_poly, q_big_m, r_big_m, roots, t_poly_scaled, y_poly_core,
};
use hypid_core::{MpComplex, MpReal, PrecisionContext, Rational};
use rand::{Rng, SeedableRng};

const SEED: u64 = 2024;

/// Entries that do not hold as stated for part of their domain.
const KNOWN_FAILING: &[&str] = &["T18"];

struct Outcome {
    pass: bool,
    detail: String,
    /// Entries responsible for a failure.
    culprits: BTreeSet<String>,
}

impl Outcome {
    fn check(failing: BTreeSet<String>, detail: String) -> Self {
        Outcome { pass: failing.is_empty(), detail, culprits: failing }
    }
}

const CUBIC: &[&str] = &["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T7M"];

fn exact_suite() -> Outcome {
    let ctx = PrecisionContext::default();
    let start = Instant::now();
    let mut failing = BTreeSet::new();
    let mut counts = Vec::new();
    let mut ids = 0;
    for case in registry().into_iter().filter(|c| c.exact_capable) {
        ids += 1;
        let r = verify_case(&case, 25, &ctx, Mode::Exact, SEED).unwrap();
        if !r.passed() {
            counts.push(format!("{} {}/25", case.id, r.failures));
            failing.insert(case.id.to_string());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let detail = format!("{} exact-capable ids x 25 trials in {:.1}s; failing: [{}]", ids, secs, counts.join(", "));
    Outcome::check(failing, detail)
}

fn float_suite() -> Outcome {
    let start = Instant::now();
    let mut failing = BTreeSet::new();
    let mut counts = Vec::new();
    let mut max = [0.0f64; 2];
    for (slot, digits) in [30, 50].into_iter().enumerate() {
        let ctx = PrecisionContext::new(digits);
        for case in registry() {
            let r = verify_case(&case, 50, &ctx, Mode::Float, SEED).unwrap();
            max[slot] = max[slot].max(r.max_rel_err);
            if digits == 30 && !r.passed() {
                counts.push(format!("{} {}/50", case.id, r.failures));
                failing.insert(case.id.to_string());
            }
        }
    }
    let orders = max[0].log10() - max[1].log10();
    if orders < 10.0 {
        failing.insert("precision scaling".into());
    }
    let detail = format!(
        "{} ids x 50 trials; max rel err {:.2e} at 30 digits, {:.2e} at 50 digits ({:.1} orders) in {:.1}s; failing: [{}]",
        registry().len(),
        max[0],
        max[1],
        orders,
        start.elapsed().as_secs_f64(),
        counts.join(", ")
    );
    Outcome::check(failing, detail)
}

fn oracle_triangle() -> Outcome {
    let ctx = PrecisionContext::default();
    let mut failing = BTreeSet::new();
    for id in CUBIC {
        let case = find(id).unwrap();
        for trial in 0..20 {
            let b = sample(&case, SEED, trial, Mode::Exact).unwrap();
            let (t, a, bv) = transform::<Rational>(id, &b, &ctx).unwrap().unwrap();
            let (l, r) = case.build_exact(&b, &ctx).unwrap();
            let m = master_rhs(&t, &a, &bv, &ctx).unwrap();
            let ok = m == r.eval(&ctx).unwrap() && m == l.eval(&ctx).unwrap() && m == master_lhs(&t, &a, &bv, &ctx).unwrap();
            if !ok {
                failing.insert(id.to_string());
            }
        }
    }
    Outcome::check(failing, format!("{} cubic entries x 20 terminating bindings, exact", CUBIC.len()))
}

fn pointwise() -> Outcome {
    let ctx = PrecisionContext::default();
    let mut failing = BTreeSet::new();
    let mut n = 0;
    let mut worst = 0.0f64;
    for case in registry().into_iter().filter(|c| c.kind == Kind::Pointwise) {
        n += 1;
        let grid = case.grid.unwrap();
        let trials = 24;
        let r = verify_case(&case, trials, &ctx, Mode::Float, SEED).unwrap();
        worst = worst.max(r.max_rel_err);
        let seen: BTreeSet<(bool, Rational)> = (0..trials)
            .map(|t| case.plan(t, Mode::Float))
            .map(|p| (p.terminating, p.x.unwrap()))
            .collect();
        let want: BTreeSet<(bool, Rational)> = seen
            .iter()
            .map(|(t, _)| *t)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .flat_map(|t| {
                let pts = if t { grid.terminating } else { grid.nonterminating };
                pts.iter().map(move |&(a, b)| (t, q(a, b)))
            })
            .collect();
        if !r.passed() || seen != want {
            failing.insert(case.id.to_string());
        }
    }
    Outcome::check(failing, format!("{} pointwise entries over their grids, max rel err {:.2e}", n, worst))
}

fn quadratic_roots(b: &MpComplex, c: &MpComplex, bits: u32) -> Vec<MpComplex> {
    let two = MpComplex::from_i64(2, bits);
    let disc = (b.clone() * b.clone() - MpComplex::from_i64(4, bits) * c.clone()).sqrt();
    vec![(-b.clone() + disc.clone()) / two.clone(), (-b.clone() - disc) / two]
}

fn polynomial_contracts() -> Outcome {
    let ctx = PrecisionContext::default();
    let r = q;
    let mut failing = BTreeSet::new();
    let mut fail = |name: &str, ok: bool| {
        if !ok {
            failing.insert(name.to_string());
        }
    };
    let pool = [r(1, 3), r(2, 7), r(-5, 4), r(9, 5), r(7, 11), r(-3, 8)];
    for size in 1..=3u64 {
        let s = size as usize;
        let (a, b) = (&pool[..s], &pool[3..3 + s]);
        let p2: Vec<u64> = (0..s).map(|i| 1 + (i as u64 % 2)).collect();
        let ptot: u64 = p2.iter().sum();
        fail("Y_p", y_poly_core(2, 3, &r(-4, 1), &r(13, 6), &r(5, 7), a, &p2, &ctx).unwrap().degree() as u64 == ptot);
        fail("Q3_r", q3r_poly(size, &r(1, 6), &r(3, 7), &ctx).unwrap().degree() as u64 == 2 * size);
        fail("T_k-1", t_poly_scaled(size + 1, &r(1, 6), &r(3, 7), &[r(2, 9)], &[2], &ctx).unwrap().degree() as u64 == size);
        fail("Lhat_m-1", lhat_poly(&r(1, 6), &r(3, 7), &r(2, 9), &r(5, 2), &[r(4, 3)], &[size + 1], &ctx).unwrap().degree() as u64 == size);
        let qn = 1 + size % 2;
        fail("P_M", p_big_m(qn, &r(3, 7), &r(2, 9), a, b, &ctx).unwrap().degree() as u64 == qn * size);
        fail("R_M", r_big_m(qn, &r(1, 6), &r(3, 7), a, b, &ctx).unwrap().degree() as u64 == qn * (size + 1));
        fail("Q_M", q_big_m(qn, 2, &r(1, 6), &r(3, 7), a, b, &ctx).unwrap().degree() as u64 == qn * (size + 2));
        fail("P_2r", p2r_poly(size, &r(1, 6), &r(3, 7), &r(2, 9), &ctx).unwrap().degree() as u64 == 2 * size);
    }
    let mut digits = f64::INFINITY;
    for (g, be, a, b) in [(r(5, 2), r(1, 3), r(-3, 1), r(7, 4)), (r(-2, 9), r(4, 5), r(3, 8), r(11, 6)), (r(7, 3), r(-1, 7), r(5, 2), r(-9, 4))] {
        let lam = ((g.clone() - be.clone()) * a.clone() - g.clone() * b.clone()) / be.clone();
        let found = roots(&p_big_m(1, &g, &be, &[a], &[b], &ctx).unwrap(), &ctx).unwrap().all();
        digits = digits.min(agreement_digits(&found, &[c(&lam, &ctx)]));
    }
    for (al, g, m, b) in [(r(2, 3), r(5, 4), 2, r(3, 7)), (r(-1, 5), r(9, 2), 3, r(7, 3)), (r(4, 1), r(1, 6), 1, r(-5, 2))] {
        let found = roots(&r_big_m(1, &al, &g, &[r(-m, 1)], std::slice::from_ref(&b), &ctx).unwrap(), &ctx).unwrap().all();
        let mm = r(m, 1);
        let lin = al.clone() - mm.clone() + g.clone();
        let cst = g * b - al * mm;
        digits = digits.min(agreement_digits(&found, &quadratic_roots(&c(&lin, &ctx), &c(&cst, &ctx), ctx.bits())));
    }
    fail("closed-form roots", digits >= 25.0);
    Outcome::check(failing, format!("8 families x 3 sizes; closed-form roots agree to {:.1} digits", digits))
}

fn balancedness() -> Outcome {
    let mut failing = BTreeSet::new();
    let mut checked = 0;
    let half = q(1, 2);
    let one = q(1, 1);
    for (id, want_l, want_r) in [("T3", None, Some(one.clone())), ("C7.2", Some(half), Some(one))] {
        let case = find(id).unwrap();
        for (mode, n) in [(Mode::Exact, 25), (Mode::Float, 50)] {
            for trial in 0..n {
                let b = sample(&case, SEED, trial, mode).unwrap();
                let (l, r) = side_excess(&case, &b).unwrap();
                checked += 1;
                if want_l.as_ref().is_some_and(|w| l.as_ref() != Some(w)) || r != want_r {
                    failing.insert(id.to_string());
                }
            }
        }
    }
    Outcome::check(failing, format!("T3 right side excess 1, C7.2 excesses 1/2 and 1, on {} bindings", checked))
}

fn sanity() -> Outcome {
    let ctx = PrecisionContext::default();
    let mut failing = BTreeSet::new();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(SEED);
    let mut done = 0;
    while done < 200 {
        let mut r = |lo: i64, hi: i64| q(rng.gen_range(lo..=hi), rng.gen_range(1..=12));
        let (a, b, s) = (r(-36, 36), r(-36, 36), r(240, 480));
        let cc = a.clone() + b.clone() + s.clone();
        if [&cc, &(cc.clone() - a.clone()), &(cc.clone() - b.clone())].iter().any(|v| dist_to_pole(v) < q(1, 100)) {
            continue;
        }
        let lhs = eval_phf(&SeriesSpec::new(vec![c(&a, &ctx), c(&b, &ctx)], vec![c(&cc, &ctx)], MpComplex::one(ctx.bits())), &ctx)
            .unwrap()
            .value;
        let num = [c(&cc, &ctx), c(&s, &ctx)];
        let den = [c(&(cc.clone() - a), &ctx), c(&(cc - b), &ctx)];
        let rhs = gamma_ratio(&num, &den, &ctx).unwrap();
        if !within_target(&lhs, &rhs, &ctx) {
            failing.insert(format!("Gauss rel {:.1}", rel_log10(&lhs, &rhs)));
        }
        done += 1;
    }
    let bits = ctx.bits();
    let pi = MpReal::pi(bits);
    let checks = [
        (q(1, 2), MpComplex::from_real(pi.sqrt())),
        (q(6, 1), MpComplex::from_i64(120, bits)),
        (q(-1, 2), MpComplex::from_real(pi.sqrt()) * MpComplex::from_i64(-2, bits)),
    ];
    for (z, want) in checks {
        if !within_target(&gamma(&c(&z, &ctx), &ctx).unwrap(), &want, &ctx) {
            failing.insert(format!("Gamma({})", z));
        }
    }
    for z in [q(7, 3), q(-13, 4), q(29, 2)] {
        let zc = c(&z, &ctx);
        let up = gamma(&(zc.clone() + MpComplex::one(bits)), &ctx).unwrap();
        if !within_target(&up, &(zc.clone() * gamma(&zc, &ctx).unwrap()), &ctx) {
            failing.insert(format!("Gamma recurrence at {}", z));
        }
    }
    Outcome::check(failing, "Gauss sum on 200 draws, Gamma known values and recurrence".into())
}

fn sign_probe(earlier: &[&Outcome]) -> Outcome {
    let mut failing = BTreeSet::new();
    let mut parts = Vec::new();
    for id in ["T2", "T4", "T5", "T6"] {
        match lambda_sign_probe(id, SEED) {
            Ok(s) => {
                parts.push(format!("{} {:+} ({}/{} vs {}/{})", id, s.resolved, s.plus, PROBE_TRIALS, s.minus, PROBE_TRIALS));
                let clean = earlier.iter().all(|o| !o.culprits.contains(id));
                if s.resolved != LAMBDA_SIGN || !clean {
                    failing.insert(id.to_string());
                }
            }
            Err(e) => {
                parts.push(format!("{} {}", id, e));
                failing.insert(id.to_string());
            }
        }
    }
    Outcome::check(failing, format!("pinned sign {:+}; {}", LAMBDA_SIGN, parts.join(", ")))
}

fn main() -> ExitCode {
    let exact = exact_suite();
    let float = float_suite();
    let triangle = oracle_triangle();
    let results = [("exact suite", exact),
        ("float suite", float),
        ("oracle triangle", triangle),
        ("pointwise transformations", pointwise()),
        ("polynomial contracts", polynomial_contracts()),
        ("balancedness", balancedness()),
        ("sanity", sanity())];
    let probe = sign_probe(&results.iter().take(3).map(|(_, o)| o).collect::<Vec<_>>());
    let mut unexpected = false;
    for (i, (name, o)) in results.iter().chain(std::iter::once(&("lambda sign probe", probe))).enumerate() {
        let known = !o.pass && o.culprits.iter().all(|c| KNOWN_FAILING.contains(&c.as_str()));
        let tag = match (o.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        unexpected |= !o.pass && !known;
        println!("criterion {} {}: {} | {}", i + 1, name, tag, o.detail);
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
