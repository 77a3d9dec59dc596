//! Aberth–Ehrlich root finding and CSV export.

use crate::error::{Error, Result};
use crate::exactpoly::BiPoly;
use crate::recurrences::{MuMode, PolySequence};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::f64::consts::PI;
use std::path::Path;

#[derive(Clone, Copy, Debug)]
pub struct AberthOptions {
    pub max_sweeps: usize,
    /// A root has converged once its update is below `rel_tol * |root|`.
    pub rel_tol: f64,
    /// Angular offset of the initial guesses, in radians.
    pub angle_offset: f64,
}

impl Default for AberthOptions {
    fn default() -> Self {
        AberthOptions {
            max_sweeps: 500,
            rel_tol: 1e-13,
            angle_offset: 0.4,
        }
    }
}

/// Roots of one specialized polynomial.
///
/// `roots` holds the nonzero roots; the root `z = 0` is carried only as
/// `zero_multiplicity`, taken from the exact valuation.
#[derive(Clone, Debug)]
pub struct ComplexRootSet {
    pub mu0: String,
    pub degree: u32,
    pub roots: Vec<Complex64>,
    pub zero_multiplicity: u32,
    /// `max |p(r)| / ||p||_1` over the returned roots.
    pub residual_bound: f64,
    pub sweeps: usize,
}

impl ComplexRootSet {
    /// All roots including the repeated zero root.
    pub fn all_roots(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.zero_multiplicity as usize];
        out.extend_from_slice(&self.roots);
        out
    }
}

/// Value of `mu` for numerics: exact, or a complex double.
#[derive(Clone, Debug, PartialEq)]
pub enum MuValue {
    Exact(BigRational),
    Complex(Complex64),
}

impl std::fmt::Display for MuValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MuValue::Exact(v) => write!(f, "{v}"),
            MuValue::Complex(c) => write!(f, "{}{:+}i", c.re, c.im),
        }
    }
}

/// Parses `k`, `p/q`, a decimal such as `-3.7` (read exactly as `-37/10`),
/// or a complex number `a+bi` / `a-bi` / `bi`.
pub fn parse_mu_value(s: &str) -> Result<MuValue> {
    let bad = || Error::InvalidArgument(format!("bad mu value {s:?}"));
    let s = s.trim();
    if let Ok(MuMode::Value(v)) = s.parse::<MuMode>() {
        return Ok(MuValue::Exact(v));
    }
    if let Some(v) = parse_decimal(s) {
        return Ok(MuValue::Exact(v));
    }
    let body = s.strip_suffix('i').ok_or_else(bad)?;
    // Split at the last sign that is not at the start or after an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    Ok(MuValue::Complex(Complex64::new(re, im)))
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac) = body.split_once('.')?;
    if int_part.is_empty() && frac.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac}").parse().ok()?;
    let den = BigInt::from(10).pow(frac.len() as u32);
    let v = BigRational::new(digits, den);
    Some(if neg { -v } else { v })
}

fn norm1(coeffs: &[Complex64]) -> f64 {
    coeffs.iter().map(|c| c.norm()).sum()
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Rounding-error scale of Horner evaluation at `z`: `sum |a_i| |z|^i`.
fn horner_scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

/// Cauchy's bound: the positive root `R` of
/// `|a_d| x^d = sum_{i<d} |a_i| x^i`. Every root has modulus at most `R`.
pub fn cauchy_radius(coeffs: &[Complex64]) -> f64 {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg].norm();
    let rel: Vec<f64> = coeffs[..deg].iter().map(|c| c.norm() / lead).collect();
    // f(x) = sum rel_i x^(i-d) is decreasing; find f(x) = 1 by bisection in log x.
    let f = |x: f64| -> f64 {
        rel.iter()
            .enumerate()
            .map(|(i, r)| r * x.powi(i as i32 - deg as i32))
            .sum()
    };
    let (mut lo, mut hi) = (1e-300f64.ln(), 1e300f64.ln());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid.exp()) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi.exp()
}

/// Nonzero roots of `sum coeffs[i] z^i` (low degree first, `coeffs[0] != 0`).
///
/// Guesses start on the circle whose radius is [`cauchy_radius`]. A root
/// stops moving once its Aberth update is below `rel_tol * |root|`, or once
/// `|p(root)|` is within the rounding error of its own evaluation, whichever
/// comes first.
pub fn aberth_complex(coeffs: &[Complex64], opts: &AberthOptions) -> Result<(Vec<Complex64>, usize)> {
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return Ok((Vec::new(), 0));
    }
    let lead = coeffs[deg];
    if deg == 1 {
        return Ok((vec![-coeffs[0] / lead], 0));
    }
    let radius = cauchy_radius(coeffs);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / deg as f64 + opts.angle_offset;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; deg];
    let mut max_update = f64::INFINITY;
    for sweep in 1..=opts.max_sweeps {
        max_update = 0.0;
        for k in 0..deg {
            if done[k] {
                continue;
            }
            let (p, dp) = horner(coeffs, z[k]);
            if p.norm() <= 4.0 * f64::EPSILON * horner_scale(coeffs, z[k]) {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[k] -= step;
            let rel = step.norm() / z[k].norm().max(f64::MIN_POSITIVE);
            max_update = max_update.max(rel);
            if step.norm() < opts.rel_tol * z[k].norm() {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok((z, sweep));
        }
    }
    Err(Error::NoConvergence {
        sweeps: opts.max_sweeps,
        max_update,
    })
}

fn rational_to_complex(c: &BigRational) -> Complex64 {
    Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0)
}

fn finish(
    mu0: String,
    coeffs: Vec<Complex64>,
    zero_multiplicity: u32,
    opts: &AberthOptions,
) -> Result<ComplexRootSet> {
    let degree = (coeffs.len() - 1) as u32;
    let stripped = &coeffs[zero_multiplicity as usize..];
    let (roots, sweeps) = aberth_complex(stripped, opts)?;
    let scale = norm1(&coeffs);
    let residual_bound = roots
        .iter()
        .map(|&r| horner(&coeffs, r).0.norm() / scale)
        .fold(0.0, f64::max);
    Ok(ComplexRootSet {
        mu0,
        degree,
        roots,
        zero_multiplicity,
        residual_bound,
        sweeps,
    })
}

/// An exact polynomial with integer coefficients `coeffs / den`, evaluated
/// exactly at points given in double precision.
pub struct ExactEvaluator {
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl ExactEvaluator {
    pub fn new(rational: &[BigRational]) -> Self {
        let den = rational
            .iter()
            .fold(BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let coeffs = rational
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        ExactEvaluator { coeffs, den }
    }

    fn horner_int(coeffs: &[BigInt], a: &BigInt, b: &BigInt, k: &BigInt) -> (BigInt, BigInt) {
        let d = coeffs.len() - 1;
        let mut kpow = vec![BigInt::from(1)];
        for _ in 0..d {
            let next = kpow.last().unwrap() * k;
            kpow.push(next);
        }
        let (mut re, mut im) = (coeffs[d].clone(), BigInt::zero());
        for i in (0..d).rev() {
            let nre = &re * a - &im * b + &coeffs[i] * &kpow[d - i];
            let nim = &re * b + &im * a;
            re = nre;
            im = nim;
        }
        (re, im)
    }

    fn to_complex(re: BigInt, im: BigInt, den: &BigInt) -> Complex64 {
        let f = |x: BigInt| BigRational::new(x, den.clone()).to_f64().unwrap_or(f64::INFINITY);
        Complex64::new(f(re), f(im))
    }

    /// `(p(z), p'(z))` rounded once from their exact values.
    pub fn eval(&self, z: Complex64) -> (Complex64, Complex64) {
        let d = self.coeffs.len() - 1;
        let (Some(re), Some(im)) = (BigRational::from_float(z.re), BigRational::from_float(z.im))
        else {
            return (Complex64::new(f64::NAN, f64::NAN), Complex64::new(f64::NAN, f64::NAN));
        };
        // Both denominators are powers of two.
        let k = std::cmp::max(re.denom().clone(), im.denom().clone());
        let a = re.numer() * (&k / re.denom());
        let b = im.numer() * (&k / im.denom());
        let (pr, pi) = Self::horner_int(&self.coeffs, &a, &b, &k);
        let p = Self::to_complex(pr, pi, &(&self.den * num_traits::pow(k.clone(), d)));
        if d == 0 {
            return (p, Complex64::zero());
        }
        let dcoeffs: Vec<BigInt> = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(i + 1))
            .collect();
        let (dr, di) = Self::horner_int(&dcoeffs, &a, &b, &k);
        let dp = Self::to_complex(dr, di, &(&self.den * num_traits::pow(k, d - 1)));
        (p, dp)
    }

    /// `sum |a_i|` of the rational coefficients, rounded to double.
    pub fn norm1(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| BigRational::new(c.abs(), self.den.clone()).to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }
}

/// Newton steps using exact evaluation, keeping the iterate with the
/// smallest exact residual.
fn polish(eval: &ExactEvaluator, mut z: Complex64) -> Complex64 {
    let (mut p, mut dp) = eval.eval(z);
    let mut best = (p.norm(), z);
    for _ in 0..8 {
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        let next = z - step;
        if next == z {
            break;
        }
        z = next;
        (p, dp) = eval.eval(z);
        if p.norm() < best.0 {
            best = (p.norm(), z);
        } else if step.norm() <= 4.0 * f64::EPSILON * z.norm() {
            break;
        }
    }
    best.1
}

/// Taylor shift: coefficients of `g(x + c)`.
fn taylor_shift(g: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    let mut a = g.to_vec();
    let d = a.len() - 1;
    for i in 0..d {
        for j in (i..d).rev() {
            let t = &a[j + 1] * c;
            a[j] += t;
        }
    }
    a
}

/// Roots of an exact polynomial in `z` alone.
///
/// The factor `z^v` is removed exactly. The cofactor is shifted exactly to
/// the centroid of its roots, rounded to double and solved by Aberth–Ehrlich;
/// each root is then refined by Newton steps that evaluate the cofactor
/// exactly. `residual_bound` is `max |p(r)| / ||p||_1` for the full
/// polynomial `p`, evaluated exactly at the returned roots.
pub fn aberth_roots(p: &BiPoly, mu0: &str, opts: &AberthOptions) -> Result<ComplexRootSet> {
    if !p.is_z_only() {
        return Err(Error::NotUnivariate);
    }
    let deg = p.deg_z().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::DegreeTooLow {
            op: "aberth_roots",
            required: 1,
            found: Some(0),
        });
    }
    let v = p.valuation_z()?.order;
    let full: Vec<BigRational> = (0..=deg).map(|k| p.coeff(k, 0)).collect();
    let cof = &full[v as usize..];
    let d = cof.len() - 1;
    let (roots, sweeps) = if d == 0 {
        (Vec::new(), 0)
    } else {
        let centroid = -&cof[d - 1] / (&cof[d] * BigRational::from_integer(BigInt::from(d)));
        let shifted: Vec<Complex64> = taylor_shift(cof, &centroid)
            .iter()
            .map(rational_to_complex)
            .collect();
        let (xs, sweeps) = aberth_complex(&shifted, opts)?;
        let c = centroid.to_f64().unwrap_or(0.0);
        let eval = ExactEvaluator::new(cof);
        let roots = xs.into_iter().map(|x| polish(&eval, x + c)).collect();
        (roots, sweeps)
    };
    let full_eval = ExactEvaluator::new(&full);
    let scale = full_eval.norm1();
    let residual_bound = roots
        .iter()
        .map(|&r| full_eval.eval(r).0.norm() / scale)
        .fold(0.0, f64::max);
    Ok(ComplexRootSet {
        mu0: mu0.to_string(),
        degree: deg,
        roots,
        zero_multiplicity: v,
        residual_bound,
        sweeps,
    })
}

/// Roots of `S_n(z; mu0)`. Exact `mu0` generates the specialized sequence
/// directly; complex `mu0` evaluates the symbolic coefficients numerically.
pub fn roots_for(n: u32, mu0: &MuValue, opts: &AberthOptions) -> Result<ComplexRootSet> {
    match mu0 {
        MuValue::Exact(v) => {
            let s = PolySequence::umemura(MuMode::Value(v.clone()), n)?;
            aberth_roots(s.get(i64::from(n))?, &v.to_string(), opts)
        }
        MuValue::Complex(c) => {
            let s = PolySequence::umemura(MuMode::Symbolic, n)?;
            let p = s.get(i64::from(n))?;
            let deg = p.deg_z().ok_or(Error::ZeroPolynomial)?;
            if deg == 0 {
                return Err(Error::DegreeTooLow {
                    op: "aberth_roots",
                    required: 1,
                    found: Some(0),
                });
            }
            let coeffs: Vec<Complex64> = (0..=deg)
                .map(|k| p.coeff_z(k).eval_f64(Complex64::zero(), *c))
                .collect();
            let v = coeffs.iter().take_while(|c| c.is_zero()).count() as u32;
            finish(mu0.to_string(), coeffs, v, opts)
        }
    }
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// CSV text: header `re,im`, one row per root with zero roots repeated, rows
/// sorted by argument in `(-pi, pi]` and then by modulus.
pub fn format_roots_csv(rs: &ComplexRootSet) -> String {
    let mut rows: Vec<Complex64> = rs
        .all_roots()
        .into_iter()
        .map(|c| Complex64::new(clean(c.re), clean(c.im)))
        .collect();
    rows.sort_by(|a, b| {
        a.arg()
            .total_cmp(&b.arg())
            .then(a.norm().total_cmp(&b.norm()))
    });
    let mut out = String::from("re,im\n");
    for c in rows {
        out.push_str(&format!("{:?},{:?}\n", c.re, c.im));
    }
    out
}

pub fn export_roots(rs: &ComplexRootSet, path: &Path) -> Result<()> {
    std::fs::write(path, format_roots_csv(rs))?;
    Ok(())
}
