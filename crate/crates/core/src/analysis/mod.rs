//! Discriminants, the structure of `S_n` at `z = 0` for integer `mu`, and
//! numeric roots.

mod roots;

pub use roots::{
    aberth_complex, aberth_roots, cauchy_radius, export_roots, ExactEvaluator, format_roots_csv, parse_mu_value, roots_for,
    AberthOptions, ComplexRootSet, MuValue,
};

use crate::error::{Error, Result};
use crate::exactpoly::{self, dense::ZPoly, int, BiPoly};
use crate::recurrences::{triangular, MuMode, PolySequence};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// `Dis(S_n)` split as `sign * prod p^e * mu^{e_0} * prod_k (mu^2 - k^2)^{e_k}`.
///
/// `mu_factors` holds `(k, e_k)` with `k = 0` standing for `mu` itself.
/// `unfactored` is whatever trial division left behind; it is `1` whenever
/// the discriminant has the expected shape.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantRecord {
    pub n: u32,
    pub dis: BiPoly,
    pub sign: i8,
    pub prefactor: Vec<(u64, u32)>,
    pub mu_factors: Vec<(u32, u32)>,
    pub unfactored: BiPoly,
}

#[derive(Serialize, Deserialize)]
struct DiscriminantJson {
    n: u32,
    sign: i8,
    prefactor: Vec<(u64, u32)>,
    mu_factors: Vec<(u32, u32)>,
}

impl DiscriminantRecord {
    pub fn is_fully_factored(&self) -> bool {
        self.unfactored.is_one()
    }

    /// Bases and exponents, constant first.
    pub fn factored_form(&self) -> Vec<(BiPoly, u32)> {
        let mut out = Vec::new();
        for &(p, e) in &self.prefactor {
            out.push((BiPoly::from_int(p as i64), e));
        }
        for &(k, e) in &self.mu_factors {
            out.push((mu_factor_base(k), e));
        }
        if !self.unfactored.is_one() {
            out.push((self.unfactored.clone(), 1));
        }
        out
    }

    /// `sign * prod base^e`; equals `dis` by construction.
    pub fn product(&self) -> BiPoly {
        let p = self
            .factored_form()
            .iter()
            .fold(BiPoly::one(), |acc, (b, e)| &acc * &b.pow(*e));
        if self.sign < 0 {
            -p
        } else {
            p
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiscriminantJson {
            n: self.n,
            sign: self.sign,
            prefactor: self.prefactor.clone(),
            mu_factors: self.mu_factors.clone(),
        })
        .expect("plain data")
    }

    /// Factor string in the style `-3^3 mu^2 (mu^2-1)^2`.
    pub fn pretty(&self) -> String {
        pretty_factored(self.sign, &self.prefactor, &self.mu_factors)
    }
}

pub fn pretty_factored(sign: i8, prefactor: &[(u64, u32)], mu_factors: &[(u32, u32)]) -> String {
    let mut parts = Vec::new();
    for &(p, e) in prefactor {
        parts.push(if e == 1 { p.to_string() } else { format!("{p}^{e}") });
    }
    for &(k, e) in mu_factors {
        let base = if k == 0 {
            "mu".to_string()
        } else {
            format!("(mu^2-{})", k * k)
        };
        parts.push(if e == 1 { base } else { format!("{base}^{e}") });
    }
    let body = if parts.is_empty() { "1".to_string() } else { parts.join(" ") };
    if sign < 0 {
        format!("-{body}")
    } else {
        body
    }
}

fn mu_factor_base(k: u32) -> BiPoly {
    if k == 0 {
        BiPoly::mu()
    } else {
        BiPoly::mu().pow(2) - BiPoly::from_int(i64::from(k) * i64::from(k))
    }
}

fn small_primes(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

/// Trial division of a polynomial in `mu` by `mu` and by `mu^2 - k^2`,
/// `k = 1..=k_max`, then of the remaining integer content by primes
/// `<= prime_limit`.
pub fn factor_mu_polynomial(
    n: u32,
    dis: &BiPoly,
    k_max: u32,
    prime_limit: u64,
) -> Result<DiscriminantRecord> {
    if !dis.is_mu_only() {
        return Err(Error::InvalidArgument("expected a polynomial in mu only".into()));
    }
    if dis.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (den, mut rest) = dis.to_mu_integer_form();
    let mut mu_factors = Vec::new();
    // Powers of mu: leading zero coefficients.
    let e0 = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if e0 > 0 {
        rest = ZPoly::from_coeffs(rest.coeffs()[e0..].to_vec());
        mu_factors.push((0, e0 as u32));
    }
    for k in 1..=k_max {
        let kk = BigInt::from(k) * BigInt::from(k);
        let base = ZPoly::from_coeffs(vec![-kk, BigInt::zero(), BigInt::one()]);
        let mut e = 0;
        while let Some(q) = rest.exact_div_poly(&base) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            mu_factors.push((k, e));
        }
    }
    // Split off the integer content and its sign.
    let mut content = rest.content();
    let mut lead_negative = rest.lc().is_some_and(|c| c.is_negative());
    if rest.degree() == Some(0) {
        lead_negative = rest.coeff(0).is_negative();
        content = rest.coeff(0).abs();
    }
    let prim = rest.exact_div_scalar(&content).expect("content divides");
    let prim = if lead_negative { prim.scale(&BigInt::from(-1)) } else { prim };
    let (mut num_part, mut den_part) = (content, den);
    let g = num_part.gcd(&den_part);
    num_part /= &g;
    den_part /= &g;
    let mut prefactor = Vec::new();
    for p in small_primes(prime_limit) {
        let pb = BigInt::from(p);
        let mut e = 0u32;
        while (&num_part % &pb).is_zero() {
            num_part /= &pb;
            e += 1;
        }
        if e > 0 {
            prefactor.push((p, e));
        }
    }
    let leftover = BiPoly::from_mu_integer_form(&prim, &BigInt::one())
        .scale(&BigRational::new(num_part, den_part));
    Ok(DiscriminantRecord {
        n,
        dis: dis.clone(),
        sign: if lead_negative { -1 } else { 1 },
        prefactor,
        mu_factors,
        unfactored: leftover,
    })
}

/// `Dis(S_n)` in `z`, factored into the expected shape.
pub fn discriminant_record(n: u32, s_n: &BiPoly) -> Result<DiscriminantRecord> {
    let dis = exactpoly::discriminant_z(s_n)?;
    factor_mu_polynomial(n, &dis, n, u64::from(2 * n + 1))
}

/// Records for `2 <= n <= n_max`, computed in parallel, ordered by `n`.
pub fn discriminant_table(n_max: u32) -> Result<Vec<DiscriminantRecord>> {
    use rayon::prelude::*;
    if n_max < 2 {
        return Err(Error::InvalidArgument("discriminant table needs N >= 2".into()));
    }
    let s = PolySequence::umemura(MuMode::Symbolic, n_max)?;
    (2..=n_max)
        .into_par_iter()
        .map(|n| discriminant_record(n, s.get(i64::from(n))?))
        .collect()
}

/// `c_m = m^3/6 + m^2/4 - m/6 - (1 - (-1)^m)/8`.
pub fn root_multiplicity_exponent(m: u32) -> u32 {
    let m = i64::from(m);
    let parity = if m % 2 == 0 { 0 } else { 2 };
    let twenty_four_c = 4 * m * m * m + 6 * m * m - 4 * m - 3 * parity;
    debug_assert_eq!(twenty_four_c % 24, 0);
    (twenty_four_c / 24) as u32
}

/// Closed-form prediction for `Dis(S_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantPrediction {
    pub n: u32,
    pub sign: i8,
    pub prefactor: Vec<(u64, u32)>,
    pub mu_factors: Vec<(u32, u32)>,
}

impl DiscriminantPrediction {
    pub fn pretty(&self) -> String {
        pretty_factored(self.sign, &self.prefactor, &self.mu_factors)
    }

    pub fn matches(&self, r: &DiscriminantRecord) -> bool {
        r.is_fully_factored()
            && r.sign == self.sign
            && r.prefactor == self.prefactor
            && r.mu_factors == self.mu_factors
    }

    pub fn as_poly(&self) -> BiPoly {
        let rec = DiscriminantRecord {
            n: self.n,
            dis: BiPoly::zero(),
            sign: self.sign,
            prefactor: self.prefactor.clone(),
            mu_factors: self.mu_factors.clone(),
            unfactored: BiPoly::one(),
        };
        rec.product()
    }
}

/// `|Dis(S_n)| = prod_j (2j+1)^{(2j+1)(n-j)^2} prod_{k=-n}^{n} (mu-k)^{c_{n-|k|}}`,
/// negative exactly when `n = 2 mod 4`. Pairs `(mu-k)(mu+k)` are merged into
/// `mu^2 - k^2` and the constant is split into primes.
pub fn discriminant_closed_form(n: u32) -> DiscriminantPrediction {
    let mut primes: std::collections::BTreeMap<u64, u32> = Default::default();
    for j in 1..=n {
        let base = u64::from(2 * j + 1);
        let e = (2 * j + 1) * (n - j) * (n - j);
        if e == 0 {
            continue;
        }
        let mut b = base;
        for p in small_primes(base) {
            while b % p == 0 {
                b /= p;
                *primes.entry(p).or_default() += e;
            }
        }
    }
    let mu_factors = (0..=n)
        .map(|k| (k, root_multiplicity_exponent(n - k)))
        .filter(|&(_, e)| e > 0)
        .collect();
    DiscriminantPrediction {
        n,
        sign: if n % 4 == 2 { -1 } else { 1 },
        prefactor: primes.into_iter().collect(),
        mu_factors,
    }
}

/// `sigma = (n - |mu|)(n - |mu| + 1)/2`, the expected order of `z = 0`.
pub fn expected_valuation(n: u32, mu0: i64) -> u32 {
    triangular(n.saturating_sub(mu0.unsigned_abs() as u32))
}

/// Order of the root `z = 0` of `S_n(z; mu0)` equals `sigma`.
pub fn valuation_check(s_n_at_mu: &BiPoly, n: u32, mu0: i64) -> Result<bool> {
    if !s_n_at_mu.is_z_only() {
        return Err(Error::NotUnivariate);
    }
    Ok(s_n_at_mu.valuation_z()?.order == expected_valuation(n, mu0))
}

/// Low coefficients of the cofactor `g = S_n / z^sigma`, and whether
/// `a1 = mu a0` and `a2 = (mu^2 - |mu|/(2m+1)) a0 / 2` hold with `m = n - |mu|`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientRelations {
    pub a0: BigRational,
    pub a1: BigRational,
    pub a2: BigRational,
    pub first_holds: bool,
    pub second_holds: bool,
}

impl CoefficientRelations {
    pub fn holds(&self) -> bool {
        self.first_holds && self.second_holds
    }
}

pub fn coefficient_relations(s_n_at_mu: &BiPoly, n: u32, mu0: i64) -> Result<CoefficientRelations> {
    if !s_n_at_mu.is_z_only() {
        return Err(Error::NotUnivariate);
    }
    if mu0 == 0 || i64::from(n) <= mu0.abs() {
        return Err(Error::InvalidArgument(format!(
            "coefficient relations need 0 < |mu| < n, got n = {n}, mu = {mu0}"
        )));
    }
    let sigma = expected_valuation(n, mu0);
    let g = s_n_at_mu.div_z_pow(sigma).ok_or(Error::ZeroConstantTerm { sigma })?;
    let a0 = g.coeff(0, 0);
    if a0.is_zero() {
        return Err(Error::ZeroConstantTerm { sigma });
    }
    let a1 = g.coeff(1, 0);
    let a2 = g.coeff(2, 0);
    let mu = int(mu0);
    let m = i64::from(n) - mu0.abs();
    let second = (&mu * &mu - BigRational::new(BigInt::from(mu0.abs()), BigInt::from(2 * m + 1)))
        * &a0
        / int(2);
    Ok(CoefficientRelations {
        first_holds: a1 == &mu * &a0,
        second_holds: a2 == second,
        a0,
        a1,
        a2,
    })
}

pub fn coefficient_relations_check(s_n_at_mu: &BiPoly, n: u32, mu0: i64) -> Result<bool> {
    Ok(coefficient_relations(s_n_at_mu, n, mu0)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents() {
        let c: Vec<u32> = (0..=4).map(root_multiplicity_exponent).collect();
        assert_eq!(c, vec![0, 0, 2, 6, 14]);
    }

    #[test]
    fn small_discriminants() {
        let table = discriminant_table(4).unwrap();
        assert_eq!(table[0].pretty(), "-3^3 mu^2");
        assert_eq!(table[1].pretty(), "3^12 5^5 mu^6 (mu^2-1)^2");
        assert_eq!(
            table[2].pretty(),
            "3^27 5^20 7^7 mu^14 (mu^2-1)^6 (mu^2-4)^2"
        );
        for r in &table {
            assert_eq!(r.product(), r.dis);
            let p = discriminant_closed_form(r.n);
            assert!(p.matches(r), "n = {}", r.n);
            assert_eq!(p.as_poly(), r.dis);
        }
        assert_eq!(
            table[0].to_json(),
            r#"{"n":2,"sign":-1,"prefactor":[[3,3]],"mu_factors":[[0,2]]}"#
        );
    }

    #[test]
    fn prediction_for_six() {
        let p = discriminant_closed_form(6);
        assert_eq!(p.sign, -1);
        assert_eq!(p.prefactor, vec![(3, 147), (5, 80), (7, 63), (11, 11)]);
        assert_eq!(p.mu_factors, vec![(0, 44), (1, 26), (2, 14), (3, 6), (4, 2)]);
    }

    #[test]
    fn integer_mu_structure() {
        let s = PolySequence::umemura(MuMode::integer(1), 3).unwrap();
        assert!(valuation_check(s.get(2).unwrap(), 2, 1).unwrap());
        assert!(valuation_check(s.get(3).unwrap(), 3, 1).unwrap());
        let rel = coefficient_relations(s.get(2).unwrap(), 2, 1).unwrap();
        assert_eq!((rel.a0.clone(), rel.a1.clone(), rel.a2.clone()), (int(3), int(3), int(1)));
        assert!(rel.holds());
        let s0 = PolySequence::umemura(MuMode::integer(0), 5).unwrap();
        assert!(valuation_check(s0.get(5).unwrap(), 5, 0).unwrap());
        let s2 = PolySequence::umemura(MuMode::integer(2), 4).unwrap();
        assert!(coefficient_relations_check(s2.get(4).unwrap(), 4, 2).unwrap());
        assert!(coefficient_relations(s2.get(2).unwrap(), 2, 2).is_err());
    }
}
