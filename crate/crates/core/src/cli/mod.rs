//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the process exit code: 0 when everything passes, 1 when a mathematical
//! check fails, 2 for usage or configuration errors.

pub mod cache;
pub mod suites;

use crate::analysis::{self, AberthOptions};
use crate::error::Error;
use crate::recurrences::{FamilyTag, MuMode, PolyFamily, PolySequence};
use cache::{Cache, CacheKey};
use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::PathBuf;
use suites::Suite;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "umemura", version, about = "Exact Umemura and Yablonskii-Vorob'ev polynomial toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a family up to index n, cache it, and print a degree table.
    Generate {
        /// umemura, yv, tau or bessel
        #[arg(long)]
        family: FamilyTag,
        #[arg(long)]
        n: u32,
        /// `symbolic`, an integer, or `p/q`
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        mu: MuMode,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numerically locate the roots of S_n(z; mu) and write them as CSV.
    Roots {
        #[arg(long, default_value = "umemura")]
        family: FamilyTag,
        #[arg(long)]
        n: u32,
        /// integer, `p/q`, decimal, or complex `a+bi`
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factor the discriminant of S_n and compare with the closed form.
    Discriminant {
        #[arg(long)]
        n: u32,
        /// Also print the JSON record.
        #[arg(long)]
        json: bool,
    },
}

/// Classifies a library error into an exit code.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NotDivisible { .. }
        | Error::NoConvergence { .. }
        | Error::ZeroConstantTerm { .. }
        | Error::DivisionByZero
        | Error::ZeroPolynomial
        | Error::ZeroArgument
        | Error::ZeroFunction => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::NotDivisible { context, remainder } => {
            let digest = hex::encode(Sha256::digest(remainder.to_json().as_bytes()));
            format!(
                "{context}: not exactly divisible; remainder has {} terms, sha256 {}",
                remainder.num_terms(),
                &digest[..16]
            )
        }
        other => other.to_string(),
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            exit_code_for(&e)
        }
    }
}

fn dispatch(cmd: Command) -> crate::Result<i32> {
    match cmd {
        Command::Generate { family, n, mu } => generate(family, n, mu),
        Command::Verify { suite, max_n, out } => verify(suite, max_n, out),
        Command::Roots { family, n, mu, out } => roots(family, n, &mu, out),
        Command::Discriminant { n, json } => discriminant(n, json),
    }
}

fn generate(family: FamilyTag, n: u32, mu: MuMode) -> crate::Result<i32> {
    if family == FamilyTag::UmemuraT {
        return Err(Error::InvalidArgument(
            "umemura-t members are rational functions and are not cached".into(),
        ));
    }
    let seq = PolySequence::generate(PolyFamily::new(family, mu), n)?;
    let cache = Cache::from_env();
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    writeln!(w, "family {} mu {}", family.short_name(), seq.family.mu)?;
    writeln!(w, "{:>4} {:>6} {:>6} {:>7}  cache", "n", "deg_z", "deg_mu", "terms")?;
    for (k, p) in seq.members() {
        let key = CacheKey::new(family, k, &seq.family.mu);
        let outcome = cache.store(key, p.clone())?;
        let status = match outcome {
            cache::StoreOutcome::Written => "written",
            cache::StoreOutcome::Unchanged => "hit",
        };
        writeln!(
            w,
            "{:>4} {:>6} {:>6} {:>7}  {status}",
            k,
            p.deg_z().unwrap_or(0),
            p.deg_mu().unwrap_or(0),
            p.num_terms()
        )?;
    }
    if family == FamilyTag::UmemuraS {
        if let Some(k) = seq.family.mu.as_integer() {
            let failed = integer_mu_checks(&seq, k, &mut w)?;
            if failed > 0 {
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(EXIT_PASS)
}

/// Valuation at the origin and cofactor coefficient relations, run
/// whenever `mu` is an integer. Returns the number of failures.
fn integer_mu_checks(seq: &PolySequence, k: i64, w: &mut impl Write) -> crate::Result<usize> {
    let mut failed = 0;
    for (n, p) in seq.members().filter(|&(n, _)| n >= 1) {
        let n = n as u32;
        let order_ok = analysis::valuation_check(p, n, k)?;
        let mut line = format!(
            "n {n}: origin order {} (expected {})",
            p.valuation_z()?.order,
            analysis::expected_valuation(n, k)
        );
        let mut ok = order_ok;
        if k != 0 && i64::from(n) > k.abs() {
            let rel = analysis::coefficient_relations(p, n, k)?;
            line.push_str(&format!(", a1 relation {}, a2 relation {}", rel.first_holds, rel.second_holds));
            ok &= rel.holds();
        }
        if !ok {
            failed += 1;
        }
        writeln!(w, "{line}  {}", if ok { "ok" } else { "FAIL" })?;
    }
    Ok(failed)
}

fn verify(suite: Suite, max_n: Option<u32>, out: Option<PathBuf>) -> crate::Result<i32> {
    let report = suites::run(suite, max_n)?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    match out {
        Some(path) => {
            std::fs::write(&path, &text)?;
            let failed = report.failures().count();
            println!(
                "{}: {} checks, {} failed -> {}",
                report.suite,
                report.checks.len(),
                failed,
                path.display()
            );
        }
        None => print!("{text}"),
    }
    for c in report.failures() {
        eprintln!("FAIL {} n={:?}: {}", c.name, c.n, c.detail);
    }
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn roots(family: FamilyTag, n: u32, mu: &str, out: Option<PathBuf>) -> crate::Result<i32> {
    if family != FamilyTag::UmemuraS {
        return Err(Error::InvalidArgument(format!(
            "roots supports the umemura family only, got {}",
            family.short_name()
        )));
    }
    let mu0 = analysis::parse_mu_value(mu)?;
    let rs = analysis::roots_for(n, &mu0, &AberthOptions::default())?;
    let csv = analysis::format_roots_csv(&rs);
    match &out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    let summary = format!(
        "n {n} mu {} degree {} zero_multiplicity {} nonzero_roots {} residual_bound {:e} sweeps {}",
        rs.mu0,
        rs.degree,
        rs.zero_multiplicity,
        rs.roots.len(),
        rs.residual_bound,
        rs.sweeps
    );
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(EXIT_PASS)
}

fn discriminant(n: u32, json: bool) -> crate::Result<i32> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "discriminant needs n >= 2, got {n}"
        )));
    }
    let s = PolySequence::umemura(MuMode::Symbolic, n)?;
    let record = analysis::discriminant_record(n, s.get(i64::from(n))?)?;
    let prediction = analysis::discriminant_closed_form(n);
    let ok = prediction.matches(&record) && record.product() == record.dis;
    println!("n         {n}");
    println!("computed  {}", record.pretty());
    println!("predicted {}", prediction.pretty());
    println!("{}", if ok { "MATCH" } else { "MISMATCH" });
    if json {
        println!("{}", record.to_json());
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}
