//! Named verification suites. Each returns an ordered list of checks; the
//! ordering does not depend on thread scheduling.

use crate::analysis::{self, root_multiplicity_exponent, discriminant_closed_form};
use crate::error::{Error, Result};
use crate::exactpoly::{self, int, BiPoly};
use crate::recurrences::{
    bessel_three_term, phi_closed_form, phi_next_recurrence, phi_sequence, reverse_bessel,
    triangular, MuMode, PolySequence,
};
use crate::tables;
use crate::verify::{self, Check, PIIIParams};
use crate::wronskian;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Table2,
    ClosedForm,
    Wronskian,
    Piii,
    FourthOrder,
    PhiSecondOrder,
    Phi,
    Bessel,
    Valuation,
    Coefficients,
    Divisibility,
    Coprime,
    YvIdentity,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 14] = [
        Suite::Table1,
        Suite::Table2,
        Suite::ClosedForm,
        Suite::Wronskian,
        Suite::Piii,
        Suite::FourthOrder,
        Suite::PhiSecondOrder,
        Suite::Phi,
        Suite::Bessel,
        Suite::Valuation,
        Suite::Coefficients,
        Suite::Divisibility,
        Suite::Coprime,
        Suite::YvIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::ClosedForm => "amdeberhan",
            Suite::Wronskian => "wronskian",
            Suite::Piii => "piii",
            Suite::FourthOrder => "eq35",
            Suite::PhiSecondOrder => "eq313",
            Suite::Phi => "phi",
            Suite::Bessel => "bessel",
            Suite::Valuation => "valuation",
            Suite::Coefficients => "coefficients",
            Suite::Divisibility => "taneda",
            Suite::Coprime => "coprime",
            Suite::YvIdentity => "yv-identity",
            Suite::All => "all",
        }
    }

    /// Depth used when `--max-n` is not given.
    pub fn default_max_n(self) -> u32 {
        match self {
            Suite::Table1 | Suite::Piii | Suite::Divisibility => 5,
            Suite::PhiSecondOrder | Suite::Phi => 8,
            Suite::Valuation | Suite::Coefficients => 7,
            _ => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Report {
            suite: suite.to_string(),
            checks,
            pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Runs one suite, or all of them in order with check names prefixed by the
/// suite name. `max_n = None` uses each suite's default depth.
pub fn run(suite: Suite, max_n: Option<u32>) -> Result<Report> {
    if suite == Suite::All {
        let reports: Vec<Result<Report>> = Suite::INDIVIDUAL
            .par_iter()
            .map(|&s| run(s, max_n))
            .collect();
        let mut checks = Vec::new();
        for r in reports {
            let r = r?;
            for mut c in r.checks {
                c.name = format!("{}:{}", r.suite, c.name);
                checks.push(c);
            }
        }
        return Ok(Report::new("all", checks));
    }
    let n = max_n.unwrap_or(suite.default_max_n());
    let checks = match suite {
        Suite::Table1 => table1(n)?,
        Suite::Table2 => table2(n)?,
        Suite::ClosedForm => closed_form(n)?,
        Suite::Wronskian => wronskian_suite(n)?,
        Suite::Piii => piii(n)?,
        Suite::FourthOrder => fourth_order(n)?,
        Suite::PhiSecondOrder => phi_second_order(n)?,
        Suite::Phi => phi(n)?,
        Suite::Bessel => bessel(n)?,
        Suite::Valuation => valuation(n)?,
        Suite::Coefficients => coefficients(n)?,
        Suite::Divisibility => divisibility(n)?,
        Suite::Coprime => coprime(n)?,
        Suite::YvIdentity => yv_identity(n)?,
        Suite::All => unreachable!(),
    };
    Ok(Report::new(suite.name(), checks))
}

fn symbolic(n: u32) -> Result<PolySequence> {
    PolySequence::umemura(MuMode::Symbolic, n)
}

fn table1(max_n: u32) -> Result<Vec<Check>> {
    let s = symbolic(max_n.min(5))?;
    (1..=max_n.min(5))
        .map(|n| {
            let listed = tables::umemura_listed(n).expect("rows 1..5 are listed");
            let got = s.get(i64::from(n))?;
            Ok(Check::new(
                "listed_polynomial",
                Some(i64::from(n)),
                got == &listed,
                format!("deg_z = {:?}, terms = {}", got.deg_z(), got.num_terms()),
            ))
        })
        .collect()
}

fn table2(max_n: u32) -> Result<Vec<Check>> {
    if max_n < 2 {
        return Ok(Vec::new());
    }
    let records = analysis::discriminant_table(max_n.min(6))?;
    Ok(records
        .iter()
        .map(|r| {
            let (sign, prefactor, mu_factors) =
                tables::discriminant_listed(r.n).expect("rows 2..6 are listed");
            let pass = r.is_fully_factored()
                && r.sign == sign
                && r.prefactor == prefactor
                && r.mu_factors == mu_factors
                && r.product() == r.dis;
            Check::new("listed_discriminant", Some(i64::from(r.n)), pass, r.pretty())
        })
        .collect())
}

fn closed_form(max_n: u32) -> Result<Vec<Check>> {
    if max_n < 2 {
        return Ok(Vec::new());
    }
    let records = analysis::discriminant_table(max_n)?;
    let mut out = Vec::new();
    for r in &records {
        let p = discriminant_closed_form(r.n);
        let n = Some(i64::from(r.n));
        out.push(Check::new(
            "closed_form",
            n,
            p.matches(r) && p.as_poly() == r.dis,
            format!("computed {} / predicted {}", r.pretty(), p.pretty()),
        ));
        out.push(Check::new(
            "sign_rule",
            n,
            (r.sign < 0) == (r.n % 4 == 2),
            format!("sign {}", r.sign),
        ));
        // Vanishing exactly at mu in {0, ±1, ..., ±(n-2)}.
        let vanish: Vec<u32> = r.mu_factors.iter().map(|&(k, _)| k).collect();
        let expected: Vec<u32> = (0..=r.n.saturating_sub(2)).collect();
        let exps_positive = (0..=r.n).all(|k| (root_multiplicity_exponent(r.n - k) > 0) == (k + 2 <= r.n));
        out.push(Check::new(
            "multiple_root_locations",
            n,
            vanish == expected && exps_positive,
            format!("|mu| in {vanish:?}"),
        ));
    }
    Ok(out)
}

fn wronskian_suite(max_n: u32) -> Result<Vec<Check>> {
    let s = symbolic(max_n)?;
    let taus = wronskian::tau_sequence(max_n);
    let mut out: Vec<Check> = (1..=max_n)
        .map(|n| {
            let tau = &taus[&n];
            let c = wronskian::normalization(n);
            let scaled = tau.scale(&num_rational::BigRational::from_integer(c.clone()));
            let s_n = s.get(i64::from(n)).expect("generated");
            let deg_ok = tau.deg_z() == Some(triangular(n))
                && tau.lc_z() == BiPoly::constant(num_rational::BigRational::new(1.into(), c.clone()));
            Check::new(
                "s_equals_c_tau",
                Some(i64::from(n)),
                &scaled == s_n && deg_ok,
                format!("c_n = {c}"),
            )
        })
        .collect();
    for n in 1..=max_n.min(3) {
        out.push(Check::new(
            "bareiss_equals_cofactor",
            Some(i64::from(n)),
            wronskian::tau_n_cofactor(n) == taus[&n],
            "",
        ));
    }
    let k_max = (2 * max_n).saturating_sub(1).max(11);
    out.extend((0..=k_max).into_par_iter().map(|k| {
        Check::new(
            "laguerre_generating_coefficient",
            Some(i64::from(k)),
            wronskian::laguerre_crosscheck(k),
            "",
        )
    }).collect::<Vec<_>>());
    let shifted = verify::shift_sequence(&s, -1);
    for n in 1..=max_n.min(5) {
        let w_tau = wronskian::w_from_tau(n, &taus)?;
        let w_s = verify::build_w(&s, &shifted, i64::from(n))?;
        out.push(Check::new(
            "w_from_tau_equals_w_from_s",
            Some(i64::from(n)),
            w_tau == w_s.quotient,
            "",
        ));
    }
    Ok(out)
}

fn piii(max_n: u32) -> Result<Vec<Check>> {
    let s = symbolic(max_n)?;
    let shifted = verify::shift_sequence(&s, -1);
    (1..=i64::from(max_n))
        .into_par_iter()
        .map(|n| {
            let w = verify::build_w(&s, &shifted, n)?;
            let params = PIIIParams::for_index(n);
            let r = verify::piii_residual(&w.quotient, &params)?;
            Ok(vec![
                Check::new("w_forms_agree", Some(n), w.agree(), ""),
                Check::new(
                    "residual_zero",
                    Some(n),
                    r.is_zero,
                    format!("cleared numerator has {} terms", r.cleared_numerator.num_terms()),
                ),
                Check::new("alpha_plus_beta", Some(n), params.on_line(), "alpha + beta = 4n"),
            ])
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn fourth_order(max_n: u32) -> Result<Vec<Check>> {
    let s = symbolic(max_n)?;
    Ok((1..=i64::from(max_n))
        .into_par_iter()
        .map(|n| {
            let r = verify::fourth_order_identity(s.get(n).expect("generated"), n, &MuMode::Symbolic);
            Check::new(
                "fourth_order_residual",
                Some(n),
                r.is_zero,
                format!("{} terms", r.cleared_numerator.num_terms()),
            )
        })
        .collect())
}

fn phi_second_order(max_n: u32) -> Result<Vec<Check>> {
    let s = symbolic(max_n)?;
    let phi = phi_sequence(&s)?;
    Ok((1..=i64::from(max_n))
        .map(|n| Check::new("phi_second_order", Some(n), verify::phi_second_order_check(&phi[&n], n), ""))
        .collect())
}

fn phi(max_n: u32) -> Result<Vec<Check>> {
    let s = symbolic(max_n)?;
    let phi = phi_sequence(&s)?;
    let mut out = Vec::new();
    for n in 1..=i64::from(max_n) {
        let direct = &phi[&n].value;
        let closed = phi_closed_form(n as u32);
        let mut pass = direct == &closed;
        let mut detail = String::from("direct = closed form");
        if n >= 4 {
            let rec = phi_next_recurrence(
                [&phi[&(n - 1)].value, &phi[&(n - 2)].value, &phi[&(n - 3)].value, &phi[&(n - 4)].value],
                n - 1,
            )?;
            pass &= &rec == direct;
            detail.push_str(" = recurrence");
        }
        out.push(Check::new("phi_values_agree", Some(n), pass, detail));
    }
    for n in 0..=i64::from(max_n) - 2 {
        out.push(Check::new(
            "phi_slope_relation",
            Some(n + 1),
            verify::phi_slope_check(&phi[&n], &phi[&(n + 1)], &phi[&(n + 2)]),
            "phi'_{n} phi_{n} = -phi_{n-1} phi_{n+1} + mu phi_{n}^2",
        ));
    }
    for n in 1..=i64::from(max_n) {
        let slope = &phi[&n].slope;
        let lower = &phi[&(n - 1)].value;
        match exactpoly::exact_div(slope, lower) {
            Ok(g) => {
                let got = g.deg_mu().unwrap_or(0) as i64;
                let claimed = if n % 2 == 0 { n } else { n - 2 };
                out.push(Check::new("phi_slope_divisible", Some(n), true, format!("quotient {g}")));
                out.push(Check::new(
                    "phi_slope_quotient_degree",
                    Some(n),
                    got == claimed,
                    format!("quotient degree {got}, stated {claimed}"),
                ));
            }
            Err(_) => out.push(Check::new("phi_slope_divisible", Some(n), false, "not divisible")),
        }
    }
    Ok(out)
}

fn bessel(max_n: u32) -> Result<Vec<Check>> {
    let s = PolySequence::umemura(MuMode::integer(1), max_n)?;
    let three_term = bessel_three_term(max_n);
    Ok((0..=max_n)
        .map(|n| {
            let theta = reverse_bessel(n);
            let lhs = s.get(i64::from(n)).expect("generated");
            let rhs = theta.mul_z_pow(n * n.saturating_sub(1) / 2);
            let pass = lhs == &rhs && theta == three_term[n as usize];
            Check::new("s_at_one_is_scaled_bessel", Some(i64::from(n)), pass, format!("theta = {theta}"))
        })
        .collect())
}

/// Integer `mu` with `1 <= |mu| <= 4` and `|mu| < n <= max_n`.
fn integer_cases(max_n: u32) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    for mu in [-4i64, -3, -2, -1, 1, 2, 3, 4] {
        for n in (mu.unsigned_abs() as u32 + 1)..=max_n {
            out.push((mu, n));
        }
    }
    out
}

fn integer_sequences(max_n: u32) -> Result<std::collections::BTreeMap<i64, PolySequence>> {
    [-4i64, -3, -2, -1, 0, 1, 2, 3, 4]
        .par_iter()
        .map(|&mu| Ok((mu, PolySequence::umemura(MuMode::integer(mu), max_n)?)))
        .collect()
}

fn valuation(max_n: u32) -> Result<Vec<Check>> {
    let seqs = integer_sequences(max_n)?;
    let sym = symbolic(max_n)?;
    let mut out = Vec::new();
    for (mu, n) in integer_cases(max_n) {
        let p = seqs[&mu].get(i64::from(n))?;
        let got = p.valuation_z()?.order;
        let want = analysis::expected_valuation(n, mu);
        out.push(Check::new(
            "zero_root_order",
            Some(i64::from(n)),
            got == want,
            format!("mu = {mu}: order {got}, expected {want}"),
        ));
        let direct_matches = &sym.get(i64::from(n))?.eval_mu(&int(mu)) == p;
        out.push(Check::new(
            "direct_equals_specialized",
            Some(i64::from(n)),
            direct_matches,
            format!("mu = {mu}"),
        ));
    }
    for n in 0..=max_n {
        let p = seqs[&0].get(i64::from(n))?;
        out.push(Check::new(
            "mu_zero_pure_power",
            Some(i64::from(n)),
            p == &BiPoly::z().pow(triangular(n)),
            "",
        ));
    }
    Ok(out)
}

fn coefficients(max_n: u32) -> Result<Vec<Check>> {
    let seqs = integer_sequences(max_n)?;
    let mut out = Vec::new();
    for (mu, n) in integer_cases(max_n) {
        let p = seqs[&mu].get(i64::from(n))?;
        let rel = analysis::coefficient_relations(p, n, mu)?;
        let detail = format!("mu = {mu}: a0 = {}, a1 = {}, a2 = {}", rel.a0, rel.a1, rel.a2);
        out.push(Check::new("first_coefficient", Some(i64::from(n)), rel.first_holds, detail.clone()));
        out.push(Check::new("second_coefficient", Some(i64::from(n)), rel.second_holds, detail));
        let sigma = analysis::expected_valuation(n, mu);
        let g = p.div_z_pow(sigma).ok_or(Error::ZeroConstantTerm { sigma })?;
        let sf = g.deg_z().unwrap_or(0) == 0 || exactpoly::gcd(&g, &g.derivative_z())?.is_one();
        out.push(Check::new("cofactor_squarefree", Some(i64::from(n)), sf, format!("mu = {mu}")));
    }
    Ok(out)
}

fn divisibility(max_n: u32) -> Result<Vec<Check>> {
    let q = PolySequence::yv(max_n)?;
    let s = symbolic(max_n)?;
    let mut out = Vec::new();
    for n in 1..=i64::from(max_n) {
        out.push(Check::new("pii_divisibility", Some(n), verify::pii_divisibility_holds(q.get(n)?)?, "f = Q_n"));
    }
    let piii: Vec<Check> = (1..=i64::from(max_n))
        .into_par_iter()
        .flat_map(|n| {
            let f = s.get(n).expect("generated");
            [(1, "piii_divisibility"), (2, "piii_divisibility_k2"), (-1, "piii_divisibility_k_neg1")]
                .into_iter()
                .map(|(k, name)| {
                    let pass = verify::piii_divisibility_holds(f, &int(k), &MuMode::Symbolic).unwrap_or(false);
                    Check::new(name, Some(n), pass, format!("f = S_n, k = {k}"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.extend(piii);
    Ok(out)
}

fn coprime(max_n: u32) -> Result<Vec<Check>> {
    let modes = [
        MuMode::Symbolic,
        MuMode::integer(0),
        MuMode::integer(1),
        MuMode::integer(-1),
        MuMode::integer(2),
        MuMode::integer(-2),
        MuMode::integer(3),
        MuMode::Value(crate::exactpoly::rat(1, 2)),
        MuMode::Value(crate::exactpoly::rat(-37, 10)),
    ];
    let results: Vec<Result<Vec<Check>>> = modes
        .par_iter()
        .map(|m| {
            let s = PolySequence::umemura(m.clone(), max_n)?;
            let mut checks = verify::coprime_and_squarefree_suite(&s)?;
            for c in &mut checks {
                c.detail = format!("mu = {m}; {}", c.detail);
            }
            Ok(checks)
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    let s = symbolic(max_n)?;
    for n in 1..=max_n {
        let p = s.get(i64::from(n))?;
        out.push(Check::new(
            "reflection_symmetry",
            Some(i64::from(n)),
            verify::reflection_check(p, n),
            format!("S_n(-z; -mu) = {:+} S_n(z; mu)", verify::reflection_parity(p).unwrap_or(0)),
        ));
    }
    Ok(out)
}

fn yv_identity(max_n: u32) -> Result<Vec<Check>> {
    let top = max_n + 2;
    let q = PolySequence::yv(top)?;
    let mut out = Vec::new();
    for n in 0..=i64::from(top) {
        let p = q.get(n)?;
        let deg = p.deg_z().unwrap_or(0);
        out.push(Check::new(
            "degree",
            Some(n),
            deg == triangular(n as u32),
            format!("deg = {deg}"),
        ));
    }
    for m in 1..=i64::from(max_n) {
        let pass = verify::yv_wronskian_identity(q.get(m + 1)?, q.get(m)?, q.get(m - 1)?, m);
        out.push(Check::new("wronskian_identity", Some(m), pass, ""));
    }
    Ok(out)
}
