mod cli;
mod report;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use hypid_core::catalog::{find, lambda_sign_probe, registry, verify_case, IdentityCase, Mode};
use hypid_core::hypseries::{eval_phf, termination_index, SeriesSpec};
use hypid_core::{MpComplex, PrecisionContext, Rational, Scalar};

use cli::{Cli, Command, EvalArgs, ModeArg, PrecisionArgs, ProbeArgs, RunArgs};

const SIGNED: &[&str] = &["T2", "T4", "T5", "T6"];

/// Identities checked and all of them held, or not.
enum Verdict {
    Pass,
    Fail,
}

fn context(p: &PrecisionArgs) -> Result<PrecisionContext> {
    if p.digits < 15 {
        bail!("--digits must be at least 15, got {}", p.digits);
    }
    Ok(PrecisionContext::new(p.digits))
}

fn parse_rationals(xs: &[String]) -> Result<Vec<Rational>> {
    xs.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<Rational>().ok().with_context(|| format!("not a rational number: {:?}", s)))
        .collect()
}

fn eval(args: &EvalArgs) -> Result<Verdict> {
    let ctx = context(&args.precision)?;
    let upper = parse_rationals(&args.upper)?;
    let lower = parse_rationals(&args.lower)?;
    let x = parse_rationals(std::slice::from_ref(&args.arg))?.pop().context("--arg is empty")?;
    let spec = SeriesSpec::new(upper, lower, x);
    let exact = match args.precision.mode {
        ModeArg::Exact => true,
        ModeArg::Float => false,
        ModeArg::Auto => termination_index(&spec).is_some(),
    };
    let value = if exact {
        eval_phf(&spec, &ctx).map(|r| r.value.to_string())
    } else {
        let lift = |v: &[Rational]| v.iter().map(|q| MpComplex::from_rational(q, ctx.bits())).collect::<Vec<_>>();
        let fs = SeriesSpec::new(lift(&spec.upper), lift(&spec.lower), MpComplex::from_rational(&spec.argument, ctx.bits()));
        eval_phf(&fs, &ctx).map(|r| r.value.to_decimal(ctx.target_digits as usize))
    };
    match value {
        Ok(v) => {
            println!("{}", v);
            Ok(Verdict::Pass)
        }
        Err(e) => {
            eprintln!("evaluation failed: {}", e);
            Ok(Verdict::Fail)
        }
    }
}

fn resolve_mode(case: &IdentityCase, m: ModeArg) -> Result<Mode> {
    Ok(match m {
        ModeArg::Exact if !case.exact_capable => bail!("{} has no exact formulation; use --mode float or auto", case.id),
        ModeArg::Exact => Mode::Exact,
        ModeArg::Float => Mode::Float,
        ModeArg::Auto if case.exact_capable => Mode::Exact,
        ModeArg::Auto => Mode::Float,
    })
}

fn run(cases: Vec<IdentityCase>, args: &RunArgs) -> Result<Verdict> {
    if args.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let ctx = context(&args.precision)?;
    let modes = cases.iter().map(|c| resolve_mode(c, args.precision.mode)).collect::<Result<Vec<_>>>()?;
    let reports = cases
        .iter()
        .zip(modes)
        .map(|(c, m)| verify_case(c, args.trials, &ctx, m, args.seed))
        .collect::<Result<Vec<_>, _>>()?;
    let fmt = args.output.format();
    report::emit_verification(&reports, &ctx, args.seed, fmt, args.output.out.as_deref())?;
    Ok(if reports.iter().all(|r| r.passed()) { Verdict::Pass } else { Verdict::Fail })
}

fn lookup(ids: &[String]) -> Result<Vec<IdentityCase>> {
    ids.iter().map(|id| find(id).with_context(|| format!("unknown identity {:?}; see `hypid list`", id))).collect()
}

fn probe(args: &ProbeArgs) -> Result<Verdict> {
    let ids: Vec<String> = if args.ids.is_empty() { SIGNED.iter().map(|s| s.to_string()).collect() } else { args.ids.clone() };
    if let Some(bad) = ids.iter().find(|id| !SIGNED.contains(&id.as_str())) {
        bail!("{} has no lambda sign to probe; choose from {}", bad, SIGNED.join(", "));
    }
    let results: Vec<report::ProbeOutcome> = ids.iter().map(|id| (id.clone(), lambda_sign_probe(id, args.seed))).collect();
    report::emit_probe(&results, args.seed, args.output.format(), args.output.out.as_deref())?;
    let ok = results.iter().all(|(_, r)| matches!(r, Ok(s) if s.resolved == hypid_core::catalog::LAMBDA_SIGN));
    Ok(if ok { Verdict::Pass } else { Verdict::Fail })
}

fn dispatch(cli: &Cli) -> Result<Verdict> {
    match &cli.command {
        Command::Eval(a) => eval(a),
        Command::List(o) => {
            report::emit_list(&registry(), o.format(), o.out.as_deref())?;
            Ok(Verdict::Pass)
        }
        Command::Verify(a) => run(lookup(&a.ids)?, &a.run),
        Command::VerifyAll(a) => run(registry(), a),
        Command::Probe(a) => probe(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
