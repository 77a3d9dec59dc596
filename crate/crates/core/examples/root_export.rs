//! Numerical roots of S_n(z; mu0) written as CSV.
//!
//! cargo run --example root_export -- 6 -3.7 roots.csv

use std::path::PathBuf;
use umemura::analysis::{export_roots, parse_mu_value, roots_for, AberthOptions};

fn main() -> umemura::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let mu = parse_mu_value(&args.next().unwrap_or_else(|| "-3.7".into()))?;
    let out = PathBuf::from(args.next().unwrap_or_else(|| "roots.csv".into()));

    let rs = roots_for(n, &mu, &AberthOptions::default())?;
    export_roots(&rs, &out)?;
    let sum: num_complex::Complex64 = rs.all_roots().iter().sum();
    println!(
        "S_{n}(z; {mu}): degree {}, zero multiplicity {}, {} sweeps, root sum {sum:.6}, max |p(r)|/|p|_1 = {:e}",
        rs.degree, rs.zero_multiplicity, rs.sweeps, rs.residual_bound
    );
    println!("wrote {}", out.display());
    Ok(())
}
