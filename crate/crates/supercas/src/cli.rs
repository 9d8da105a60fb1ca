//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use supercas_core::casimir_engine::{unitarity, verify_ybe, OperatorBundle};
use supercas_core::vogel_universal::{casimir_series_direct, casimir_series_universal, describe, Family};
use supercas_core::{Rational, StorageKind, SuperMatrix};

use crate::instance::Instance;
use crate::report::{MatrixDump, Report, Status};
use crate::suites::{acceptance_matrix, run_instance, Context, Suite};

#[derive(Parser, Debug)]
#[command(name = "supercas", version, about = "Exact split Casimir checks for osp(M|N) and sl(M|N)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Print the dimension table of the adjoint projectors.
    Dims(InstanceArgs),
    /// Print the Casimir series from both routes.
    Series(SeriesArgs),
    /// Dump R(u), or check the YBE at (u, v).
    Rmatrix(RmatrixArgs),
    /// Dump a named operator as JSON.
    Dump(DumpArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Osp,
    Sl,
}

impl From<AlgebraArg> for Family {
    fn from(a: AlgebraArg) -> Family {
        match a {
            AlgebraArg::Osp => Family::Osp,
            AlgebraArg::Sl => Family::Sl,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Defining,
    Adjoint,
    Projectors,
    Ybe,
    Brauer,
    Vogel,
    Series,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Defining => vec![Suite::Defining],
            SuiteArg::Adjoint => vec![Suite::Adjoint],
            SuiteArg::Projectors => vec![Suite::Projectors],
            SuiteArg::Ybe => vec![Suite::Ybe],
            SuiteArg::Brauer => vec![Suite::Brauer],
            SuiteArg::Vogel => vec![Suite::Vogel],
            SuiteArg::Series => vec![Suite::Series],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Args, Debug)]
pub struct InstanceArgs {
    #[arg(long, value_enum)]
    pub algebra: AlgebraArg,
    #[arg(long = "M")]
    pub m: usize,
    #[arg(long = "N")]
    pub n: usize,
    /// Write a JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

impl InstanceArgs {
    fn instance(&self) -> Instance {
        Instance { family: self.algebra.into(), m: self.m, n: self.n }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Restrict the default instance set to one family.
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraArg>,
    #[arg(long = "M", requires = "n")]
    pub m: Option<usize>,
    #[arg(long = "N", requires = "m")]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 8)]
    pub order: u32,
    /// Write the JSON report here; an array when several instances run.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Print every check, not only failures.
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, default_value_t = 8)]
    pub order: u32,
}

#[derive(Args, Debug)]
pub struct RmatrixArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, value_parser = parse_rational)]
    pub u: Rational,
    #[arg(long, value_parser = parse_rational)]
    pub v: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Picture {
    Defining,
    Restricted,
    Embedded,
}

#[derive(Args, Debug)]
pub struct DumpArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// I, P, K, Cf (defining); I, P, K, C, C+, C-, Ct, P+, P- (adjoint).
    #[arg(long)]
    pub operator: String,
    #[arg(long, value_enum, default_value = "restricted")]
    pub picture: Picture,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    init_threads();
    let out = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Dims(a) => dims(a),
        Command::Series(a) => series(a),
        Command::Rmatrix(a) => rmatrix(a),
        Command::Dump(a) => dump(a),
    };
    match out {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn init_threads() {
    if let Some(n) = std::env::var("SUPERCAS_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

type CmdResult = Result<i32, String>;

fn write_json<T: serde::Serialize>(path: &PathBuf, value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))
}

fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(Report::ok) {
        0
    } else {
        1
    }
}

fn print_report(r: &Report, verbose: bool) {
    let skipped = r.checks.iter().filter(|c| c.status == Status::Skipped).count();
    println!(
        "{} (omega={}): {} passed, {} failed, {} skipped",
        r.algebra,
        r.omega,
        r.passed(),
        r.failed(),
        skipped
    );
    for c in &r.checks {
        let show = verbose || c.status == Status::Fail;
        if !show {
            continue;
        }
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let mut line = format!("  {tag} [{}] {}", c.suite, c.check);
        if let Some(reason) = &c.reason {
            line += &format!(" ({reason})");
        }
        if c.status == Status::Fail {
            line += &format!(
                ": expected {}, computed {}",
                c.expected.as_deref().unwrap_or("-"),
                c.computed.as_deref().unwrap_or("-")
            );
        }
        println!("{line}");
    }
}

fn verify(a: VerifyArgs) -> CmdResult {
    let wanted = a.suite.suites();
    let jobs: Vec<(Instance, Vec<Suite>)> = match (a.m, a.n) {
        (Some(m), Some(n)) => {
            let family = a.algebra.ok_or("--algebra is required with --M/--N")?.into();
            vec![(Instance { family, m, n }, wanted)]
        }
        _ => acceptance_matrix()
            .into_iter()
            .filter(|(i, _)| a.algebra.is_none_or(|f| i.family == f.into()))
            .map(|(i, s)| (i, s.into_iter().filter(|x| wanted.contains(x)).collect::<Vec<_>>()))
            .filter(|(_, s)| !s.is_empty())
            .collect(),
    };
    let results: Vec<_> = jobs.par_iter().map(|(i, s)| run_instance(*i, s, a.order)).collect();
    let mut reports = Vec::new();
    for (r, (i, _)) in results.into_iter().zip(&jobs) {
        match r {
            Ok(r) => reports.push(r),
            Err(e) if jobs.len() == 1 => return Err(e.to_string()),
            Err(e) => return Err(format!("{i}: {e}")),
        }
    }
    for r in &reports {
        print_report(r, a.verbose);
    }
    if let Some(path) = &a.json {
        if reports.len() == 1 {
            write_json(path, &reports[0])?;
        } else {
            write_json(path, &reports)?;
        }
    }
    Ok(exit_code(&reports))
}

fn dims(a: InstanceArgs) -> CmdResult {
    let report = run_instance(a.instance(), &[Suite::Projectors], 0).map_err(|e| e.to_string())?;
    println!("{}: adjoint projectors (dim_even, dim_odd)", report.algebra);
    let mut total = 0;
    // system order, not map order
    for c in report.checks.iter().filter(|c| c.check.starts_with("dims ")) {
        let name = c.check.trim_start_matches("dims ").trim_end_matches(" integral");
        if let Some(d) = report.dims.get(name) {
            println!("  {name} = ({}, {})", d[0], d[1]);
            total += d[0] + d[1];
        }
    }
    println!("  total = {total}");
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        println!("  FAIL {}", c.check);
    }
    if let Some(path) = &a.json {
        write_json(path, &report)?;
    }
    Ok(exit_code(std::slice::from_ref(&report)))
}

fn series(a: SeriesArgs) -> CmdResult {
    let ctx = Context::new(a.instance.instance(), a.order).map_err(|e| e.to_string())?;
    let p = ctx.params().map_err(|e| e.to_string())?;
    println!("{}", describe(&p));
    let direct = casimir_series_direct(&ctx.bundle().c_ad, a.order).map_err(|e| e.to_string())?;
    let universal = casimir_series_universal(&p, a.order).map_err(|e| e.to_string())?;
    let mut ok = true;
    for (k, (d, u)) in direct.iter().zip(&universal).enumerate() {
        let mark = if d == u { "ok" } else { "MISMATCH" };
        ok &= d == u;
        println!("  c_{k} = {d}  universal {u}  {mark}");
    }
    if let Some(path) = &a.instance.json {
        let mut report = ctx.new_report();
        crate::suites::run_suite(&ctx, Suite::Series, &mut report);
        write_json(path, &report)?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn rmatrix(a: RmatrixArgs) -> CmdResult {
    let model = a.instance.instance().build().map_err(|e| e.to_string())?;
    let Some(v) = a.v else {
        let r = model.r_matrix(&a.u).map_err(|e| e.to_string())?;
        return emit_matrix(&r, a.instance.json.as_ref()).map(|_| 0);
    };
    let space = model.space();
    let mut ok = true;
    for s in verify_ybe(space, |x| model.r_matrix(x), &[(a.u.clone(), v.clone())]) {
        match s.outcome {
            Ok(b) => {
                println!("YBE at u={}, v={}: {}", s.u, s.v, if b { "holds" } else { "FAILS" });
                ok &= b;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    match unitarity(space, |x| model.r_matrix(x), &a.u) {
        Ok(b) => {
            println!("R({0})R(-{0}) = 1: {1}", a.u, if b { "holds" } else { "FAILS" });
            ok &= b;
        }
        Err(e) => println!("unitarity at u={}: {e}", a.u),
    }
    Ok(if ok { 0 } else { 1 })
}

fn emit_matrix(m: &SuperMatrix, path: Option<&PathBuf>) -> Result<(), String> {
    let dump = MatrixDump::new(m);
    match path {
        Some(p) => write_json(p, &dump),
        None => {
            println!("{}", serde_json::to_string(&dump).map_err(|e| e.to_string())?);
            Ok(())
        }
    }
}

fn bundle_operator(b: &OperatorBundle, name: &str) -> Option<SuperMatrix> {
    Some(match name {
        "I" => b.identity.clone(),
        "P" => b.perm.clone(),
        "K" => b.k.clone(),
        "C" => b.c_ad.clone(),
        "C+" => b.c_plus.clone(),
        "C-" => b.c_minus.clone(),
        "Ct" => b.c_tilde_minus.clone()?,
        "P+" => b.p_plus(),
        "P-" => b.p_minus(),
        _ => return None,
    })
}

fn dump(a: DumpArgs) -> CmdResult {
    let model = a.instance.instance().build().map_err(|e| e.to_string())?;
    let unknown = || format!("no operator {:?} in the {:?} picture", a.operator, a.picture);
    let m = match a.picture {
        Picture::Defining => match a.operator.as_str() {
            "I" => SuperMatrix::identity(model.space().tensor(model.space())),
            "P" => model.perm(),
            "K" => model.k_def(),
            "Cf" => model.casimir_defining_closed(),
            _ => return Err(unknown()),
        },
        Picture::Restricted => {
            bundle_operator(&model.adjoint_bundle(StorageKind::Sparse), &a.operator).ok_or_else(unknown)?
        }
        Picture::Embedded => {
            if !model.embedded_feasible() {
                return Err(format!("dim V^4 = {} is too large", model.space().dim().pow(4)));
            }
            bundle_operator(&model.embedded_bundle(), &a.operator).ok_or_else(unknown)?
        }
    };
    emit_matrix(&m, a.instance.json.as_ref()).map(|_| 0)
}
