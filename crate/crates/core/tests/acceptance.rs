//! Acceptance criteria 1-11. Each criterion is one test that prints a single
//! `PASS`/`FAIL` line straight to stderr (bypassing output capture) and then
//! asserts. Tolerances and runtime limits are fixed below.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};
use umemura::analysis::{self, AberthOptions, MuValue};
use umemura::cli::cache::{Cache, CacheKey};
use umemura::exactpoly::{self, int, rat, BiPoly};
use umemura::ratfun::RationalFunction;
use umemura::recurrences::{phi_next_recurrence, phi_sequence, FamilyTag, MuMode, PolySequence};
use umemura::verify::{self, PIIIParams};
use umemura::{tables, wronskian};

const TABLE1_LIMIT: Duration = Duration::from_secs(1);
const TABLE2_LIMIT: Duration = Duration::from_secs(30);
const DETERMINANT_LIMIT: Duration = Duration::from_secs(60);
const ROOTS_LIMIT: Duration = Duration::from_secs(10);
const VIETA_REL_TOL: f64 = 1e-8;
const RESIDUAL_REL_TOL: f64 = 1e-9;

/// Prints the verdict line and fails the test on any failure or overrun.
fn verdict(id: u32, title: &str, elapsed: Duration, limit: Option<Duration>, mut failures: Vec<String>) {
    if let Some(limit) = limit {
        if elapsed > limit {
            failures.push(format!("runtime {elapsed:.2?} exceeds {limit:?}"));
        }
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {id:>2} {status} ({elapsed:.2?}) {title}");
    for f in failures.iter().take(12) {
        line.push_str(&format!("\n    - {f}"));
    }
    if failures.len() > 12 {
        line.push_str(&format!("\n    - ... {} more", failures.len() - 12));
    }
    let _ = writeln!(std::io::stderr().lock(), "{line}");
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn mu() -> BiPoly {
    BiPoly::mu()
}

fn c(v: i64) -> BiPoly {
    BiPoly::from_int(v)
}

fn big_pow(base: u64, e: u32) -> BiPoly {
    BiPoly::constant(BigRational::from_integer(BigInt::from(base).pow(e)))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

#[test]
fn criterion_01_table1_via_generate() {
    let dir = tempfile::tempdir().unwrap();
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_umemura"))
        .args(["generate", "--family", "umemura", "--n", "5", "--mu", "symbolic"])
        .env("UMEMURA_CACHE", dir.path())
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    check(&mut failures, out.status.code() == Some(0), || format!("exit status {:?}", out.status));
    let cache = Cache::new(dir.path());
    for n in 1..=5u32 {
        let key = CacheKey::new(FamilyTag::UmemuraS, i64::from(n), &MuMode::Symbolic);
        match cache.load(&key) {
            Ok(Some(entry)) => {
                let listed = tables::umemura_listed(n).unwrap();
                check(&mut failures, entry.payload == listed, || format!("S_{n} differs from the table"));
            }
            other => failures.push(format!("S_{n} missing from cache: {other:?}")),
        }
    }
    verdict(1, "Listed S_1..S_5 reproduced by `generate`", elapsed, Some(TABLE1_LIMIT), failures);
}

#[test]
fn criterion_02_table2_discriminants() {
    let start = Instant::now();
    let s = PolySequence::umemura(MuMode::Symbolic, 6).unwrap();
    let mut failures = Vec::new();
    let mut results = Vec::new();
    for n in 2..=6u32 {
        results.push((n, exactpoly::discriminant_z(s.get(i64::from(n)).unwrap()).unwrap()));
    }
    let elapsed = start.elapsed();
    for (n, dis) in results {
        let (sign, primes, mu_factors) = tables::discriminant_listed(n).unwrap();
        let mut expected = c(i64::from(sign));
        for (p, e) in primes {
            expected = &expected * &big_pow(p, e);
        }
        for (k, e) in mu_factors {
            let base = if k == 0 { mu() } else { &mu().pow(2) - &c(i64::from(k * k)) };
            expected = &expected * &base.pow(e);
        }
        check(&mut failures, dis == expected, || format!("Dis(S_{n}) differs from the listed factorization"));
        let lead = dis.coeff(0, dis.deg_mu().unwrap_or(0));
        check(&mut failures, (lead.is_negative()) == (sign < 0), || format!("sign of Dis(S_{n})"));
    }
    verdict(2, "Listed discriminants of S_2..S_6 reproduced, signs included", elapsed, Some(TABLE2_LIMIT), failures);
}

/// `c_m = m^3/6 + m^2/4 - m/6 - [1 - (-1)^m]/8`.
fn multiplicity(m: i64) -> BigRational {
    let m3 = rat(m * m * m, 6);
    let m2 = rat(m * m, 4);
    let m1 = rat(m, 6);
    let parity = rat(1 - if m % 2 == 0 { 1 } else { -1 }, 8);
    m3 + m2 - m1 - parity
}

#[test]
fn criterion_03_discriminant_closed_form() {
    let start = Instant::now();
    let s = PolySequence::umemura(MuMode::Symbolic, 6).unwrap();
    let mut failures = Vec::new();
    for n in 2..=6i64 {
        let dis = exactpoly::discriminant_z(s.get(n).unwrap()).unwrap();
        let mut expected = BiPoly::one();
        for j in 1..=n {
            let e = ((2 * j + 1) * (n - j) * (n - j)) as u32;
            expected = &expected * &big_pow((2 * j + 1) as u64, e);
        }
        for k in -(n - 1)..=(n - 1) {
            let e = multiplicity(n - k.abs());
            check(&mut failures, e.is_integer() && !e.is_negative(), || format!("c_{} = {e}", n - k.abs()));
            let e = e.to_integer().to_u32().unwrap();
            expected = &expected * &(&mu() - &c(k)).pow(e);
        }
        let sign = if n % 4 == 2 { -1 } else { 1 };
        check(&mut failures, dis == expected.scale(&int(sign)), || format!("n = {n}: Dis(S_n) != closed form"));
        let record = analysis::discriminant_record(n as u32, s.get(n).unwrap()).unwrap();
        check(&mut failures, analysis::discriminant_closed_form(n as u32).matches(&record), || {
            format!("n = {n}: factored record disagrees with the prediction")
        });
    }
    verdict(3, "Discriminant closed form: factored |Dis(S_n)| and sign rule for n = 2..6", start.elapsed(), None, failures);
}

/// `binom(mu, m)` as a polynomial in `mu`.
fn binom_mu(m: u32) -> BiPoly {
    let mut out = BiPoly::one();
    for t in 0..m {
        out = &out * &(&mu() - &c(i64::from(t)));
    }
    out.scale(&BigRational::new(BigInt::one(), factorial(m)))
}

/// `L_k^{(mu - k)}(-z) = sum_i binom(mu, k - i) z^i / i!`.
fn laguerre_at_minus_z(k: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for i in 0..=k {
        let zi = BiPoly::z().pow(i).scale(&BigRational::new(BigInt::one(), factorial(i)));
        out = &out + &(&binom_mu(k - i) * &zi);
    }
    out
}

#[test]
fn criterion_04_determinant_crosscheck() {
    let start = Instant::now();
    let s = PolySequence::umemura(MuMode::Symbolic, 6).unwrap();
    let taus = wronskian::tau_sequence(6);
    let mut failures = Vec::new();
    for n in 1..=6u32 {
        let c_n = (1..=n).fold(BigInt::one(), |a, j| a * BigInt::from(2 * j + 1).pow(n - j));
        let scaled = taus[&n].scale(&BigRational::from_integer(c_n));
        check(&mut failures, &scaled == s.get(i64::from(n)).unwrap(), || format!("S_{n} != c_n tau_n"));
    }
    for k in 0..=11u32 {
        check(&mut failures, wronskian::gen_p(k) == laguerre_at_minus_z(k), || format!("p_{k} != L_k(-z)"));
        check(&mut failures, wronskian::laguerre_crosscheck(k), || format!("p_{k}: three-term route disagrees"));
    }
    verdict(4, "Determinant: S_n = c_n tau_n (n <= 6) and p_k = L_k^(mu-k)(-z) (k <= 11)", start.elapsed(), Some(DETERMINANT_LIMIT), failures);
}

fn at(p: &BiPoly, z0: &BigRational, mu0: &BigRational) -> BigRational {
    p.eval_mu(mu0).eval_z(z0).as_constant().expect("fully evaluated")
}

/// `w'' - w'^2/w + w'/z - (alpha w^2 + beta)/z - w^3 + 1/w` at a point, with
/// `w = num/den` differentiated by the quotient rule.
fn piii_at_point(num: &BiPoly, den: &BiPoly, n: i64, z0: &BigRational, mu0: &BigRational) -> BigRational {
    let (f, f1, f2) = (at(num, z0, mu0), at(&num.derivative_z(), z0, mu0), at(&num.derivative_z_n(2), z0, mu0));
    let (g, g1, g2) = (at(den, z0, mu0), at(&den.derivative_z(), z0, mu0), at(&den.derivative_z_n(2), z0, mu0));
    let w = &f / &g;
    let w1 = (&f1 * &g - &f * &g1) / (&g * &g);
    let w2 = (&f2 - int(2) * &w1 * &g1 - &w * &g2) / &g;
    let alpha = int(2 * n - 1) + int(2) * mu0;
    let beta = int(2 * n + 1) - int(2) * mu0;
    &w2 - &w1 * &w1 / &w + &w1 / z0 - (alpha * &w * &w + beta) / z0 - &w * &w * &w + int(1) / &w
}

#[test]
fn criterion_05_piii_residual() {
    let start = Instant::now();
    let s = PolySequence::umemura(MuMode::Symbolic, 5).unwrap();
    let shifted = verify::shift_sequence(&s, -1);
    let mut failures = Vec::new();
    for n in 1..=5i64 {
        let num = s.get(n).unwrap().shift_mu(&int(-1)) * s.get(n - 1).unwrap().clone();
        let den = s.get(n).unwrap() * &s.get(n - 1).unwrap().shift_mu(&int(-1));
        for (z0, mu0) in [(rat(3, 7), rat(2, 5)), (rat(-5, 3), rat(11, 4)), (rat(2, 1), rat(-7, 9)), (rat(13, 5), rat(1, 3))] {
            let r = piii_at_point(&num, &den, n, &z0, &mu0);
            check(&mut failures, r.is_zero(), || format!("n = {n}: residual {r} at z = {z0}, mu = {mu0}"));
        }
        let w = RationalFunction::new(num, den).unwrap();
        let pair = verify::build_w(&s, &shifted, n).unwrap();
        check(&mut failures, pair.quotient == w && pair.agree(), || format!("n = {n}: w forms disagree"));
        let r = verify::piii_residual(&w, &PIIIParams::for_index(n)).unwrap();
        check(&mut failures, r.is_zero, || format!("n = {n}: cleared residual nonzero"));
    }
    verdict(5, "P_III: cleared residual at w_n is zero for n = 1..5", start.elapsed(), None, failures);
}

#[test]
fn criterion_06_fourth_order_and_phi_relation() {
    let start = Instant::now();
    let s = PolySequence::umemura(MuMode::Symbolic, 8).unwrap();
    let mut failures = Vec::new();
    for n in 1..=6i64 {
        let r = verify::fourth_order_identity(s.get(n).unwrap(), n, &MuMode::Symbolic);
        check(&mut failures, r.is_zero, || format!("n = {n}: fourth-order residual nonzero"));
    }
    for n in 1..=8i64 {
        let p = s.get(n).unwrap();
        let value = p.coeff_z(0);
        let slope = p.coeff_z(1);
        let curvature = p.coeff_z(2).scale(&int(2));
        let lhs = (&mu() * &slope).scale(&int(2)) - curvature;
        check(&mut failures, lhs == value.scale(&int(n * (n + 1))), || format!("n = {n}: 2 mu phi' - phi'' != n(n+1) phi"));
    }
    verdict(6, "Fourth-order identity (n <= 6) and phi second-order relation (n <= 8)", start.elapsed(), None, failures);
}

#[test]
fn criterion_07_phi_suite() {
    let start = Instant::now();
    let s = PolySequence::umemura(MuMode::Symbolic, 8).unwrap();
    let phi = phi_sequence(&s).unwrap();
    let mut failures = Vec::new();
    for n in 1..=8i64 {
        // mu^{ceil(n/2) - j} (mu^2 - (2j)^2)^{...}, written out independently.
        let mut closed = BiPoly::one();
        for i in 0..n {
            let e = if i % 2 == 0 { (n + 1) / 2 - i / 2 } else { n / 2 - i / 2 };
            if e <= 0 {
                continue;
            }
            let base = if i == 0 { mu() } else { &mu().pow(2) - &c(i * i) };
            closed = &closed * &base.pow(e as u32);
        }
        check(&mut failures, phi[&n].value == closed, || format!("n = {n}: phi_n != product form"));
        if n >= 4 {
            let rec = phi_next_recurrence(
                [&phi[&(n - 1)].value, &phi[&(n - 2)].value, &phi[&(n - 3)].value, &phi[&(n - 4)].value],
                n - 1,
            )
            .unwrap();
            check(&mut failures, rec == phi[&n].value, || format!("n = {n}: recurrence disagrees"));
        }
    }
    for n in 0..=6i64 {
        let ok = verify::phi_slope_check(&phi[&n], &phi[&(n + 1)], &phi[&(n + 2)]);
        check(&mut failures, ok, || format!("n = {}: slope relation fails", n + 1));
    }
    for n in 1..=8i64 {
        match exactpoly::exact_div(&phi[&n].slope, &phi[&(n - 1)].value) {
            Ok(g) => {
                let want = if n % 2 == 0 { n } else { n - 2 };
                let got = g.deg_mu().unwrap_or(0) as i64;
                check(&mut failures, got == want, || format!("n = {n}: quotient degree {got}, stated {want}"));
            }
            Err(_) => failures.push(format!("n = {n}: phi_(n-1) does not divide phi'_n")),
        }
    }
    verdict(7, "phi: direct = closed form = recurrence, slope relation, divisibility with stated quotient degree", start.elapsed(), None, failures);
}

#[test]
fn criterion_08_yablonskii_vorobev() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let q = PolySequence::yv(8).unwrap();
    for n in 0..=8i64 {
        let p = q.get(n).unwrap();
        check(&mut failures, p.is_z_only() && p.deg_z() == Some((n * (n + 1) / 2) as u32), || format!("deg Q_{n}"));
    }
    for m in 1..=6i64 {
        let (next, cur, prev) = (q.get(m + 1).unwrap(), q.get(m).unwrap(), q.get(m - 1).unwrap());
        let lhs = &next.derivative_z() * prev - next * &prev.derivative_z();
        check(&mut failures, lhs == cur.pow(2).scale(&int(2 * m + 1)), || format!("m = {m}: Wronskian identity"));
    }
    for n in 1..=5i64 {
        check(&mut failures, verify::pii_divisibility_holds(q.get(n).unwrap()).unwrap(), || format!("Q_{n}: divisibility"));
    }
    verdict(8, "Yablonskii-Vorob'ev: degrees (n <= 8), Wronskian identity (m <= 6), P_II divisibility (Q_1..Q_5)", start.elapsed(), None, failures);
}

#[test]
fn criterion_09_integer_mu_structure() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for mu0 in [-4i64, -3, -2, -1, 1, 2, 3, 4] {
        let s = PolySequence::umemura(MuMode::integer(mu0), 7).unwrap();
        let k = mu0.abs();
        for n in (k + 1)..=7 {
            let p = s.get(n).unwrap();
            let m = n - k;
            let sigma = (m * (m + 1) / 2) as u32;
            let order = p.valuation_z().unwrap().order;
            check(&mut failures, order == sigma, || format!("mu = {mu0}, n = {n}: order {order}, want {sigma}"));
            let g = p.div_z_pow(sigma).unwrap();
            let (a0, a1, a2) = (g.coeff(0, 0), g.coeff(1, 0), g.coeff(2, 0));
            check(&mut failures, !a0.is_zero() && a1 == int(mu0) * &a0, || format!("mu = {mu0}, n = {n}: a1"));
            let want = (int(mu0 * mu0) - rat(k, 2 * m + 1)) * &a0 / int(2);
            check(&mut failures, a2 == want, || format!("mu = {mu0}, n = {n}: a2"));
            let sf = exactpoly::gcd(&g, &g.derivative_z()).unwrap().is_one();
            check(&mut failures, sf, || format!("mu = {mu0}, n = {n}: cofactor not square-free"));
        }
    }
    verdict(9, "Integer mu: valuation, a1/a2 relations, square-free cofactor for 1 <= |mu| <= 4, |mu| < n <= 7", start.elapsed(), None, failures);
}

/// `theta_n(z) = sum_k (n + k)! / ((n - k)! k! 2^k) z^(n - k)`.
fn theta_explicit(n: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for k in 0..=n {
        let c = BigRational::new(factorial(n + k), factorial(n - k) * factorial(k) * BigInt::from(2).pow(k));
        out = &out + &BiPoly::monomial(c, n - k, 0);
    }
    out
}

#[test]
fn criterion_10_bessel_case() {
    let start = Instant::now();
    let s = PolySequence::umemura(MuMode::integer(1), 6).unwrap();
    let mut failures = Vec::new();
    for n in 0..=6u32 {
        let theta = umemura::recurrences::reverse_bessel(n);
        check(&mut failures, theta == theta_explicit(n), || format!("theta_{n} from the Laguerre identity"));
        let expected = theta.mul_z_pow(n * n.saturating_sub(1) / 2);
        check(&mut failures, s.get(i64::from(n)).unwrap() == &expected, || format!("S_{n}(z; 1) != z^k theta_{n}"));
    }
    verdict(10, "Bessel case: S_n(z; 1) = z^(n(n-1)/2) theta_n for n <= 6", start.elapsed(), None, failures);
}

/// `log2 |x|` for a big integer, without overflow.
fn log2_abs(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top = (x.abs() >> shift).to_f64().unwrap();
    top.log2() + shift as f64
}

/// `|p(r)| / ||p||_1` for the exact specialization `p` and the double `r`,
/// evaluated with exact dyadic arithmetic.
fn exact_relative_residual(coeffs: &[BigRational], r: Complex64) -> f64 {
    let lcm = coeffs.iter().fold(BigInt::one(), |a, c| num_integer::Integer::lcm(&a, c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let to_dyadic = |x: f64| -> (BigInt, i64) {
        if x == 0.0 {
            return (BigInt::zero(), 0);
        }
        let q = BigRational::from_float(x).unwrap();
        let e = q.denom().bits() as i64 - 1;
        (q.numer().clone(), e)
    };
    let (re, er) = to_dyadic(r.re);
    let (im, ei) = to_dyadic(r.im);
    let e = er.max(ei);
    let re = re << (e - er) as usize;
    let im = im << (e - ei) as usize;
    // 2^(e d) p(r) = A_0 with A_d = a_d, A_k = A_(k+1) x + a_k 2^(e (d - k)).
    let d = ints.len() - 1;
    let (mut acc_re, mut acc_im) = (ints[d].clone(), BigInt::zero());
    for k in (0..d).rev() {
        let nr = &acc_re * &re - &acc_im * &im;
        let ni = &acc_re * &im + &acc_im * &re;
        acc_re = nr + (&ints[k] << (e as usize * (d - k)));
        acc_im = ni;
    }
    let norm: BigInt = ints.iter().map(|a| a.abs()).sum();
    let mag2 = &acc_re * &acc_re + &acc_im * &acc_im;
    let log_ratio = 0.5 * log2_abs(&mag2) - e as f64 * d as f64 - log2_abs(&norm);
    log_ratio.exp2()
}

#[test]
fn criterion_11_numeric_roots() {
    let samples = ["-3.7", "-1", "0.5", "1", "6"];
    let opts = AberthOptions::default();
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    let start = Instant::now();
    let mut sets = Vec::new();
    for mu_str in samples {
        let mu0 = analysis::parse_mu_value(mu_str).unwrap();
        for n in 1..=10u32 {
            match analysis::roots_for(n, &mu0, &opts) {
                Ok(rs) => sets.push((mu_str, mu0.clone(), n, rs)),
                Err(e) => failures.push(format!("mu = {mu_str}, n = {n}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    for (mu_str, mu0, n, rs) in sets {
        let MuValue::Exact(v) = &mu0 else { unreachable!() };
        let p = PolySequence::umemura(MuMode::Symbolic, n).unwrap().get(i64::from(n)).unwrap().eval_mu(v);
        let deg = p.deg_z().unwrap();
        let coeffs: Vec<BigRational> = (0..=deg).map(|k| p.coeff(k, 0)).collect();
        let roots = rs.all_roots();
        check(&mut failures, roots.len() == deg as usize, || format!("mu = {mu_str}, n = {n}: {} roots for degree {deg}", roots.len()));
        let expected = -(&coeffs[deg as usize - 1] / &coeffs[deg as usize]).to_f64().unwrap();
        let sum: Complex64 = roots.iter().sum();
        let scale = expected.abs().max(roots.iter().map(|r| r.norm()).sum());
        let vieta = (sum - expected).norm() / scale;
        check(&mut failures, vieta <= VIETA_REL_TOL, || format!("mu = {mu_str}, n = {n}: Vieta error {vieta:e}"));
        let res = roots
            .iter()
            .map(|&r| exact_relative_residual(&coeffs, r))
            .fold(0.0f64, f64::max);
        worst = worst.max(res);
        check(&mut failures, res <= RESIDUAL_REL_TOL, || format!("mu = {mu_str}, n = {n}: max |p(r)|/||p||_1 = {res:.2e}"));
    }
    let title = format!("Numeric roots: count, Vieta within {VIETA_REL_TOL:e}, residual within {RESIDUAL_REL_TOL:e} (worst {worst:.2e})");
    verdict(11, &title, elapsed, Some(ROOTS_LIMIT), failures);
}
