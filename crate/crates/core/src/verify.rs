//! Exact residual and divisibility checks.
//!
//! Each check returns either a cleared numerator ([`ResidualReport`]) or a
//! boolean. Nothing here is numeric: a check passes only when a polynomial
//! is exactly zero or a division is exact.

use crate::error::{Error, Result};
use crate::exactpoly::{self, int, BiPoly};
use crate::ratfun::{self, RationalFunction};
use crate::recurrences::{triangular, MuMode, PhiTriple, PolySequence};
use serde::Serialize;

/// Parameters of a rational solution: `alpha = 2n + 2mu - 1`,
/// `beta = 2n - 2mu + 1`. `epsilon` records which of the lines
/// `alpha + epsilon beta = 4n` the pair lies on.
#[derive(Clone, Debug, PartialEq)]
pub struct PIIIParams {
    pub alpha: BiPoly,
    pub beta: BiPoly,
    pub n: i64,
    pub epsilon: i8,
}

impl PIIIParams {
    pub fn for_index(n: i64) -> Self {
        let mu2 = BiPoly::mu().scale(&int(2));
        PIIIParams {
            alpha: BiPoly::from_int(2 * n - 1) + &mu2,
            beta: BiPoly::from_int(2 * n + 1) - &mu2,
            n,
            epsilon: 1,
        }
    }

    /// `alpha + epsilon beta == 4n` exactly.
    pub fn on_line(&self) -> bool {
        let lhs = &self.alpha + &self.beta.scale(&int(i64::from(self.epsilon)));
        lhs == BiPoly::from_int(4 * self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualReport {
    pub name: String,
    pub n: i64,
    pub mu_mode: String,
    pub cleared_numerator: BiPoly,
    pub is_zero: bool,
}

impl ResidualReport {
    fn new(name: &str, n: i64, mu: &MuMode, numerator: BiPoly) -> Self {
        ResidualReport {
            name: name.to_string(),
            n,
            mu_mode: mu.to_string(),
            is_zero: numerator.is_zero(),
            cleared_numerator: numerator,
        }
    }
}

/// `S_n(z; mu - 1)` for every index of a symbolic sequence.
pub fn shift_sequence(s: &PolySequence, c: i64) -> PolySequence {
    let mut out = s.clone();
    for p in out.entries.values_mut() {
        *p = p.shift_mu(&int(c));
    }
    out.family.mu = s.family.mu.shifted(c);
    out
}

/// Both forms of `w_n`:
/// the quotient `S_n(mu-1) S_{n-1}(mu) / (S_n(mu) S_{n-1}(mu-1))` and
/// `1 + d/dz ln(S_{n-1}(mu-1) / S_n(mu))`.
#[derive(Clone, Debug)]
pub struct WPair {
    pub quotient: RationalFunction,
    pub logderiv: RationalFunction,
}

impl WPair {
    pub fn agree(&self) -> bool {
        self.quotient == self.logderiv
    }
}

pub fn build_w(at_mu: &PolySequence, at_mu_minus_1: &PolySequence, n: i64) -> Result<WPair> {
    let s_n = at_mu.get(n)?;
    let s_nm1 = at_mu.get(n - 1)?;
    let t_n = at_mu_minus_1.get(n)?;
    let t_nm1 = at_mu_minus_1.get(n - 1)?;
    let quotient = RationalFunction::new(t_n * s_nm1, s_n * t_nm1)?;
    let logderiv = RationalFunction::one().add(&ratfun::logderiv_ratio(t_nm1, s_n)?);
    Ok(WPair { quotient, logderiv })
}

/// Residual of `w'' = w'^2/w - w'/z + (alpha w^2 + beta)/z + w^3 - 1/w`.
///
/// The equation is multiplied by `z`, then by `w`, then by `den^4`, giving
/// with `w = N/D` and `A = N'D - ND'`:
/// `zN(A'D - 2AD') - zA^2 + NAD - alpha N^3 D - beta N D^3 - z N^4 + z D^4`.
pub fn piii_residual(w: &RationalFunction, params: &PIIIParams) -> Result<ResidualReport> {
    if w.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let z = BiPoly::z();
    let n = w.num();
    let d = w.den();
    let a = &n.derivative_z() * d - n * &d.derivative_z();
    let d_prime = d.derivative_z();
    let a_prime = a.derivative_z();
    let n2 = n.pow(2);
    let d2 = d.pow(2);
    let numerator = &z * &(n * &(&a_prime * d - &(&a * &d_prime).scale(&int(2))))
        - &z * &a.pow(2)
        + &(n * &a) * d
        - &(&params.alpha * &(&n2 * n)) * d
        - &(&params.beta * n) * &(&d2 * d)
        - &z * &n2.pow(2)
        + &z * &d2.pow(2);
    Ok(ResidualReport::new(
        "piii",
        params.n,
        &MuMode::Symbolic,
        numerator,
    ))
}

/// Fourth-order identity with the right-hand constant `c` in place of
/// `2n(n+1)`. [`fourth_order_identity`] uses the correct constant.
pub fn fourth_order_residual(s: &BiPoly, mu: &BiPoly, constant: &BiPoly) -> BiPoly {
    let z = BiPoly::z();
    let d1 = s.derivative_z();
    let d2 = d1.derivative_z();
    let d3 = d2.derivative_z();
    let d4 = d3.derivative_z();
    let ell = s * &d2 - &d1 * &d1;
    let bracket4 = s * &d4 - (&d1 * &d3).scale(&int(4)) + (&d2 * &d2).scale(&int(3));
    let bracket3 = s * &d3 - &d1 * &d2;
    &z.pow(2) * &bracket4 + (&z * &bracket3).scale(&int(2))
        - &(&z * &(&z + mu)).scale(&int(4)) * &ell
        - (s * &d2).scale(&int(2))
        + &(mu * s).scale(&int(4)) * &d1
        - constant * &s.pow(2)
}

pub fn fourth_order_identity(s_n: &BiPoly, n: i64, mu: &MuMode) -> ResidualReport {
    let c = BiPoly::from_int(2 * n * (n + 1));
    ResidualReport::new("fourth_order", n, mu, fourth_order_residual(s_n, &mu.as_poly(), &c))
}

/// `2 mu phi' - phi'' == k phi` with `k = n(n+1)`.
pub fn phi_second_order_check(t: &PhiTriple, n: i64) -> bool {
    phi_second_order_with_factor(t, n * (n + 1))
}

pub fn phi_second_order_with_factor(t: &PhiTriple, k: i64) -> bool {
    let lhs = (&BiPoly::mu() * &t.slope).scale(&int(2)) - t.curvature.clone();
    lhs == t.value.scale(&int(k))
}

/// `phi'_{n+1} phi_{n+1} == -phi_n phi_{n+2} + mu phi_{n+1}^2`.
pub fn phi_slope_check(p_n: &PhiTriple, p_n1: &PhiTriple, p_n2: &PhiTriple) -> bool {
    let lhs = &p_n1.slope * &p_n1.value;
    let rhs = -(&p_n.value * &p_n2.value) + &BiPoly::mu() * &p_n1.value.pow(2);
    lhs == rhs
}

/// `Q_{m+1}' Q_{m-1} - Q_{m+1} Q_{m-1}' == (2m+1) Q_m^2`.
pub fn yv_wronskian_identity(q_next: &BiPoly, q_m: &BiPoly, q_prev: &BiPoly, m: i64) -> bool {
    yv_identity_with_factor(q_next, q_m, q_prev, 2 * m + 1)
}

pub fn yv_identity_with_factor(q_next: &BiPoly, q_m: &BiPoly, q_prev: &BiPoly, k: i64) -> bool {
    let lhs = &q_next.derivative_z() * q_prev - q_next * &q_prev.derivative_z();
    lhs == q_m.pow(2).scale(&int(k))
}

fn divides(f: &BiPoly, g: &BiPoly) -> bool {
    exactpoly::exact_div(g, f).is_ok()
}

/// With `g = z f^2 - 4 l(f)`, `f` divides `2 z g^2 - 4 l(g)`.
pub fn pii_divisibility_holds(f: &BiPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = &BiPoly::z() * &f.pow(2) - ratfun::op_ell(f).scale(&int(4));
    let target = (&BiPoly::z() * &g.pow(2)).scale(&int(2)) - ratfun::op_ell(&g).scale(&int(4));
    Ok(divides(f, &target))
}

/// With `h = -z L_z(f) + k (z + mu) f^2`, `f` divides
/// `z L_z(h) - 2k (z + mu) h^2`.
pub fn piii_divisibility_holds(f: &BiPoly, k: &num_rational::BigRational, mu: &MuMode) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let shift = &BiPoly::z() + &mu.as_poly();
    let h = ratfun::neg_z_lz_poly(f) + (&shift * &f.pow(2)).scale(k);
    let target = ratfun::z_lz_poly(&h) - (&shift * &h.pow(2)).scale(&(k * int(2)));
    Ok(divides(f, &target))
}

/// `+1` if `p(-z, -mu) = p(z, mu)`, `-1` if it equals `-p`, else `None`.
pub fn reflection_parity(p: &BiPoly) -> Option<i8> {
    let r = p.reflect();
    if &r == p {
        Some(1)
    } else if r == -p {
        Some(-1)
    } else {
        None
    }
}

/// `S_n(-z; -mu) = (-1)^(n(n+1)/2) S_n(z; mu)`.
pub fn reflection_check(s_n: &BiPoly, n: u32) -> bool {
    let expected = if (n * (n + 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    reflection_parity(s_n) == Some(expected)
}

/// One named pass/fail result.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub n: Option<i64>,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, n: Option<i64>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            n,
            pass,
            detail: detail.into(),
        }
    }
}

/// True when `p` is `c z^v` for a constant `c`.
fn is_z_power(p: &BiPoly) -> bool {
    p.num_terms() == 1 && p.terms().all(|(&(_, dm), _)| dm == 0)
}

fn squarefree(p: &BiPoly) -> Result<bool> {
    if p.deg_z().unwrap_or(0) == 0 {
        return Ok(true);
    }
    Ok(exactpoly::gcd(p, &p.derivative_z())?.is_one())
}

/// Coprimality of neighbours and simplicity of roots away from `z = 0`.
///
/// Symbolic `mu`: `gcd(S_{n+1}, S_n) = 1` and `gcd(S_n, S_n')` is a power of
/// `z`. Integer `mu = ±m`: `S_k` square-free for `k <= m`, and `S_n / z^sigma`
/// square-free for `n > m` with `sigma` the valuation. `mu = 0`: `S_n` is a
/// pure power of `z` of degree `n(n+1)/2`.
pub fn coprime_and_squarefree_suite(s: &PolySequence) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let last = s.max_index();
    match s.family.mu.as_integer() {
        _ if s.family.mu == MuMode::Symbolic => {
            for n in 1..=last {
                let p = s.get(n)?;
                if n < last {
                    let g = exactpoly::gcd(s.get(n + 1)?, p)?;
                    out.push(Check::new("coprime_neighbours", Some(n), g.is_one(), format!("gcd = {g}")));
                }
                let g = exactpoly::gcd(p, &p.derivative_z())?;
                out.push(Check::new(
                    "squarefree_off_origin",
                    Some(n),
                    is_z_power(&g),
                    format!("gcd(S, S') = {g}"),
                ));
            }
        }
        Some(0) => {
            for n in 0..=last {
                let expected = BiPoly::z().pow(triangular(n as u32));
                let pass = s.get(n)? == &expected;
                out.push(Check::new("mu_zero_power", Some(n), pass, format!("S_{n} = {}", s.get(n)?)));
            }
        }
        Some(mu) => {
            let m = mu.unsigned_abs() as i64;
            for n in 1..=last {
                let p = s.get(n)?;
                let (name, q) = if n <= m {
                    ("squarefree", p.clone())
                } else {
                    let v = p.valuation_z()?.order;
                    ("cofactor_squarefree", p.div_z_pow(v).expect("valuation divides"))
                };
                out.push(Check::new(name, Some(n), squarefree(&q)?, format!("mu = {mu}")));
            }
        }
        None => {
            for n in 1..=last {
                let p = s.get(n)?;
                out.push(Check::new("squarefree", Some(n), squarefree(p)?, format!("mu = {}", s.family.mu)));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrences::{phi_sequence, PolySequence};

    #[test]
    fn reflection_carries_a_sign() {
        let s = PolySequence::umemura(MuMode::Symbolic, 6).unwrap();
        for n in 1..=6u32 {
            assert!(reflection_check(s.get(i64::from(n)).unwrap(), n), "n = {n}");
        }
        // The unsigned form holds only when n(n+1)/2 is even.
        let unsigned: Vec<bool> = (1..=6)
            .map(|n| reflection_parity(s.get(n).unwrap()) == Some(1))
            .collect();
        assert_eq!(unsigned, [false, false, true, true, false, false]);
    }


    fn sym(n: u32) -> PolySequence {
        PolySequence::umemura(MuMode::Symbolic, n).unwrap()
    }

    #[test]
    fn w_forms_agree_and_solve() {
        let s = sym(3);
        let t = shift_sequence(&s, -1);
        let w0 = build_w(&s, &t, 0).unwrap();
        assert!(w0.quotient.is_one_value() && w0.agree());
        let w1 = build_w(&s, &t, 1).unwrap();
        let xi = BiPoly::z() + BiPoly::mu();
        assert_eq!(
            w1.quotient,
            RationalFunction::new(&xi - &BiPoly::one(), xi).unwrap()
        );
        for n in 1..=3 {
            let w = build_w(&s, &t, n).unwrap();
            assert!(w.agree());
            let r = piii_residual(&w.quotient, &PIIIParams::for_index(n)).unwrap();
            assert!(r.is_zero, "n = {n}");
        }
    }

    #[test]
    fn piii_slices() {
        let one = RationalFunction::one();
        let mut p = PIIIParams::for_index(1);
        p.beta = -p.alpha.clone();
        assert!(piii_residual(&one, &p).unwrap().is_zero);
        let r = piii_residual(&RationalFunction::z(), &PIIIParams::for_index(1)).unwrap();
        assert!(!r.is_zero);
        assert!(matches!(
            piii_residual(&RationalFunction::zero(), &p),
            Err(Error::ZeroFunction)
        ));
        assert!(PIIIParams::for_index(1).on_line());
    }

    #[test]
    fn fourth_order_identity_vanishes() {
        let s = sym(3);
        for n in 1..=3 {
            assert!(fourth_order_identity(s.get(n).unwrap(), n, &MuMode::Symbolic).is_zero);
        }
        let bad = fourth_order_residual(s.get(1).unwrap(), &BiPoly::mu(), &BiPoly::from_int(5));
        assert!(!bad.is_zero());
    }

    #[test]
    fn phi_relations() {
        let s = sym(5);
        let phi = phi_sequence(&s).unwrap();
        for n in 1..=5 {
            assert!(phi_second_order_check(&phi[&n], n));
            assert!(!phi_second_order_with_factor(&phi[&n], n * (n + 1) + 1));
        }
        for n in 0..=3 {
            assert!(phi_slope_check(&phi[&n], &phi[&(n + 1)], &phi[&(n + 2)]));
        }
    }

    #[test]
    fn yv_identity_and_taneda() {
        let q = PolySequence::yv(4).unwrap();
        for m in 1..=3 {
            let (a, b, c) = (q.get(m + 1).unwrap(), q.get(m).unwrap(), q.get(m - 1).unwrap());
            assert!(yv_wronskian_identity(a, b, c, m));
            assert!(!yv_identity_with_factor(a, b, c, 2 * m + 2));
        }
        for n in 0..=3 {
            assert!(pii_divisibility_holds(q.get(n).unwrap()).unwrap());
        }
        let s = sym(3);
        for n in 0..=2 {
            for k in [1, 2, -1] {
                assert!(piii_divisibility_holds(s.get(n).unwrap(), &int(k), &MuMode::Symbolic).unwrap());
            }
        }
    }

    #[test]
    fn coprimality_suites() {
        let checks = coprime_and_squarefree_suite(&sym(4)).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        let s0 = PolySequence::umemura(MuMode::integer(0), 4).unwrap();
        assert!(coprime_and_squarefree_suite(&s0).unwrap().iter().all(|c| c.pass));
        let s1 = PolySequence::umemura(MuMode::integer(1), 4).unwrap();
        let checks = coprime_and_squarefree_suite(&s1).unwrap();
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(|c| c.pass));
    }
}
