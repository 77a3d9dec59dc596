//! Exact sparse bivariate polynomials in `z` and `mu` over the rationals.
//!
//! [`BiPoly`] is the value type for every special polynomial in the crate.
//! Terms are kept in a `BTreeMap` keyed by `(deg_z, deg_mu)`, so iteration
//! order is the canonical z-major lexicographic order and structural equality
//! is mathematical equality.
//!
//! Divisions, gcds and resultants treat a `BiPoly` as a polynomial in `z`
//! whose coefficients are polynomials in `mu`. Those algorithms run on
//! integer images (see [`dense`]) obtained by clearing denominators.

pub mod dense;
mod json;

use crate::error::{Error, Result};
use dense::{Ring, UPoly, ZPoly, ZZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Term key: `(deg_z, deg_mu)`.
pub type Monomial = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

/// Multiplicity of the root `z = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation {
    pub order: u32,
}

/// Result of [`pseudo_divmod`]: `lc_z(den)^exponent * num = quotient * den + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudoDivision {
    pub quotient: BiPoly,
    pub remainder: BiPoly,
    pub exponent: u32,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn z() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn mu() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn monomial(c: BigRational, deg_z: u32, deg_mu: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_z, deg_mu), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from arbitrary terms; duplicates are summed and
    /// zero coefficients dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        BiPoly { terms: map }
    }

    /// Univariate polynomial in `z` from integer coefficients, low degree first.
    pub fn from_z_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| ((k as u32, 0), int(c))),
        )
    }

    /// Univariate polynomial in `mu` from integer coefficients, low degree first.
    pub fn from_mu_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| ((0, k as u32), int(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_z: u32, deg_mu: u32) -> BigRational {
        self.terms
            .get(&(deg_z, deg_mu))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn deg_z(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|&(dz, _)| dz)
    }

    pub fn deg_mu(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, dm)| dm).max()
    }

    /// True when no term involves `z` (this includes the zero polynomial).
    pub fn is_mu_only(&self) -> bool {
        self.terms.keys().all(|&(dz, _)| dz == 0)
    }

    /// True when no term involves `mu`.
    pub fn is_z_only(&self) -> bool {
        self.terms.keys().all(|&(_, dm)| dm == 0)
    }

    /// The constant value, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Coefficient of `z^k` as a polynomial in `mu`.
    pub fn coeff_z(&self, k: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .range((k, 0)..=(k, u32::MAX))
                .map(|(&(_, dm), c)| ((0, dm), c.clone()))
                .collect(),
        }
    }

    /// Leading coefficient in `z`, as a polynomial in `mu`.
    pub fn lc_z(&self) -> BiPoly {
        match self.deg_z() {
            Some(d) => self.coeff_z(d),
            None => BiPoly::zero(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `z^k`.
    pub fn mul_z_pow(&self, k: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(dz, dm), c)| ((dz + k, dm), c.clone()))
                .collect(),
        }
    }

    /// Divides by `z^k`; `None` unless every term has `deg_z >= k`.
    pub fn div_z_pow(&self, k: u32) -> Option<BiPoly> {
        if self.terms.keys().any(|&(dz, _)| dz < k) {
            return None;
        }
        Some(BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(dz, dm), c)| ((dz - k, dm), c.clone()))
                .collect(),
        })
    }

    pub fn derivative_z(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((dz, _), _)| *dz > 0)
                .map(|(&(dz, dm), c)| ((dz - 1, dm), c * int(dz as i64)))
                .collect(),
        }
    }

    /// `k`-th derivative in `z`.
    pub fn derivative_z_n(&self, k: u32) -> BiPoly {
        (0..k).fold(self.clone(), |acc, _| acc.derivative_z())
    }

    /// Substitutes `mu = mu0`.
    pub fn eval_mu(&self, mu0: &BigRational) -> BiPoly {
        let mut powers: Vec<BigRational> = vec![BigRational::one()];
        BiPoly::from_terms(self.terms.iter().map(|(&(dz, dm), c)| {
            while powers.len() <= dm as usize {
                let next = powers.last().unwrap() * mu0;
                powers.push(next);
            }
            ((dz, 0), c * &powers[dm as usize])
        }))
    }

    /// Substitutes `z = z0`.
    pub fn eval_z(&self, z0: &BigRational) -> BiPoly {
        if z0.is_zero() {
            return self.coeff_z(0);
        }
        let mut powers: Vec<BigRational> = vec![BigRational::one()];
        BiPoly::from_terms(self.terms.iter().map(|(&(dz, dm), c)| {
            while powers.len() <= dz as usize {
                let next = powers.last().unwrap() * z0;
                powers.push(next);
            }
            ((0, dm), c * &powers[dz as usize])
        }))
    }

    /// Substitutes `mu -> mu + c`.
    pub fn shift_mu(&self, c: &BigRational) -> BiPoly {
        if c.is_zero() {
            return self.clone();
        }
        let mut out: Vec<(Monomial, BigRational)> = Vec::new();
        for (&(dz, dm), a) in &self.terms {
            // (mu + c)^dm = sum_k binom(dm, k) c^(dm-k) mu^k
            let mut binom = BigInt::from(1);
            for k in (0..=dm).rev() {
                let j = dm - k; // power of c
                let coef = a * BigRational::from_integer(binom.clone()) * pow_rat(c, j);
                out.push(((dz, k), coef));
                // binom(dm, j+1) = binom(dm, j) * (dm - j) / (j + 1)
                binom = binom * BigInt::from(dm - j) / BigInt::from(j + 1);
            }
        }
        BiPoly::from_terms(out)
    }

    /// Substitutes `z -> -z, mu -> -mu`.
    pub fn reflect(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(dz, dm), c)| {
                    let v = if (dz + dm) % 2 == 1 { -c } else { c.clone() };
                    ((dz, dm), v)
                })
                .collect(),
        }
    }

    /// Smallest `z`-degree present.
    pub fn valuation_z(&self) -> Result<Valuation> {
        self.terms
            .keys()
            .map(|&(dz, _)| dz)
            .min()
            .map(|order| Valuation { order })
            .ok_or(Error::ZeroPolynomial)
    }

    /// Lcm of the coefficient denominators and the integer polynomial
    /// `denominator * self` as an element of ℤ[mu][z].
    pub(crate) fn to_integer_form(&self) -> (BigInt, ZZPoly) {
        let d = self
            .terms
            .values()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let Some(dz_max) = self.deg_z() else {
            return (d, ZZPoly::zero());
        };
        let mut slices: Vec<Vec<BigInt>> = vec![Vec::new(); dz_max as usize + 1];
        for (&(dz, dm), c) in &self.terms {
            let v = c.numer() * (&d / c.denom());
            let slice = &mut slices[dz as usize];
            if slice.len() <= dm as usize {
                slice.resize(dm as usize + 1, BigInt::from(0));
            }
            slice[dm as usize] = v;
        }
        let zz = UPoly::from_coeffs(slices.into_iter().map(UPoly::from_coeffs).collect());
        (d, zz)
    }

    /// Inverse of [`BiPoly::to_integer_form`]: `p / denominator`.
    pub(crate) fn from_integer_form(p: &ZZPoly, denominator: &BigInt) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (dz, slice) in p.coeffs().iter().enumerate() {
            for (dm, c) in slice.coeffs().iter().enumerate() {
                if !Zero::is_zero(c) {
                    terms.insert(
                        (dz as u32, dm as u32),
                        BigRational::new(c.clone(), denominator.clone()),
                    );
                }
            }
        }
        BiPoly { terms }
    }

    /// Integer image of a polynomial in `mu` only.
    pub(crate) fn to_mu_integer_form(&self) -> (BigInt, ZPoly) {
        debug_assert!(self.is_mu_only());
        let (d, zz) = self.to_integer_form();
        (d, zz.coeff(0))
    }

    pub(crate) fn from_mu_integer_form(p: &ZPoly, denominator: &BigInt) -> BiPoly {
        Self::from_integer_form(&UPoly::constant(p.clone()), denominator)
    }

    /// Evaluates at a point, in floating point. Intended for numerics only.
    pub fn eval_f64(&self, z0: num_complex::Complex64, mu0: num_complex::Complex64) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(&(dz, dm), c)| {
                let cf = c.to_f64().unwrap_or(f64::NAN);
                z0.powu(dz) * mu0.powu(dm) * cf
            })
            .sum()
    }
}

fn pow_rat(c: &BigRational, e: u32) -> BigRational {
    num_traits::pow(c.clone(), e as usize)
}

/// Pseudo-division in `z`: `lc_z(den)^e * num = q * den + r` with
/// `e = deg_z(num) - deg_z(den) + 1` (or `e = 0` when `deg_z(num) < deg_z(den)`,
/// in which case `q = 0` and `r = num`).
pub fn pseudo_divmod(num: &BiPoly, den: &BiPoly) -> Result<PseudoDivision> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    // num = N / a, den = G / b with N, G integral.
    let (a, n_int) = num.to_integer_form();
    let (b, g_int) = den.to_integer_form();
    let (q, r, e) = n_int.pseudo_divmod(&g_int);
    // lc(den)^e num = (lc(G)/b)^e N / a, and lc(G)^e N = q G + r, so
    // quotient = q / (a b^(e-1)) and remainder = r / (a b^e).
    let b_pow_e = num_traits::pow(b.clone(), e as usize);
    let quotient = if e == 0 {
        BiPoly::zero()
    } else {
        let denom = &a * num_traits::pow(b, e as usize - 1);
        BiPoly::from_integer_form(&q, &denom)
    };
    let remainder = BiPoly::from_integer_form(&r, &(&a * &b_pow_e));
    Ok(PseudoDivision {
        quotient,
        remainder,
        exponent: e,
    })
}

/// Exact quotient `num / den` in ℚ[z, mu].
///
/// Division is carried out in `z` over the fraction field of ℚ[mu]: the
/// pseudo-remainder must vanish, and the pseudo-quotient must then be
/// divisible by `lc_z(den)^e` coefficientwise in ℚ[mu].
pub fn exact_div(num: &BiPoly, den: &BiPoly) -> Result<BiPoly> {
    exact_div_ctx(num, den, "exact_div")
}

pub(crate) fn exact_div_ctx(num: &BiPoly, den: &BiPoly, context: &str) -> Result<BiPoly> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(BiPoly::zero());
    }
    if let Some(c) = den.as_constant() {
        return Ok(num.scale(&c.recip()));
    }
    let (a, n_int) = num.to_integer_form();
    let (b, g_int) = den.to_integer_form();
    let (q, r, e) = n_int.pseudo_divmod(&g_int);
    if !r.is_zero() || e == 0 {
        let pd = pseudo_divmod(num, den)?;
        return Err(Error::not_divisible(context, pd.remainder));
    }
    // N / G = q / lc(G)^e. Split lc(G) into integer content and primitive part;
    // the primitive part must divide exactly over ℤ[mu] (Gauss).
    let lc = g_int.lc().unwrap().clone();
    let lc_content = lc.content();
    let lc_pp = lc.exact_div_scalar(&lc_content).unwrap();
    let mut q = q;
    if !lc_pp.is_one() {
        let divisor = lc_pp.pow(e);
        let coeffs = q
            .coeffs()
            .iter()
            .map(|c| c.exact_div(&divisor))
            .collect::<Option<Vec<_>>>();
        match coeffs {
            Some(cs) => q = UPoly::from_coeffs(cs),
            None => {
                // Divisible over ℚ(mu) but the quotient has a denominator in mu.
                let pd = pseudo_divmod(num, den)?;
                return Err(Error::not_divisible(
                    format!("{context}: quotient is not polynomial in mu"),
                    pd.remainder,
                ));
            }
        }
    }
    // num / den = (b / a) * q / lc_content^e
    let denom = &a * num_traits::pow(lc_content, e as usize);
    let quotient = BiPoly::from_integer_form(&q, &denom);
    Ok(quotient.scale(&BigRational::from_integer(b)))
}

/// Gcd in `z` over ℚ(mu), returned primitive in ℤ[mu][z] with the leading
/// `z`-coefficient having a positive leading `mu`-coefficient. Coprime inputs
/// give `1`. Factors depending on `mu` only are content and are not reported.
pub fn gcd(a: &BiPoly, b: &BiPoly) -> Result<BiPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (_, ai) = a.to_integer_form();
    let (_, bi) = b.to_integer_form();
    let g = ai.gcd_poly(&bi).primitive_part();
    if g.degree() == Some(0) {
        return Ok(BiPoly::one());
    }
    Ok(BiPoly::from_integer_form(&g, &BigInt::from(1)))
}

/// Resultant with respect to `z` (Sylvester-matrix sign convention). The
/// result is a polynomial in `mu` only.
pub fn resultant_z(a: &BiPoly, b: &BiPoly) -> Result<BiPoly> {
    let da = a.deg_z().filter(|&d| d >= 1);
    let db = b.deg_z().filter(|&d| d >= 1);
    let (Some(da), Some(db)) = (da, db) else {
        return Err(Error::DegreeTooLow {
            op: "resultant_z",
            required: 1,
            found: if a.deg_z().unwrap_or(0) < 1 { a.deg_z() } else { b.deg_z() },
        });
    };
    let (alpha, ai) = a.to_integer_form();
    let (beta, bi) = b.to_integer_form();
    let r = ai.resultant(&bi);
    // res(A/alpha, B/beta) = res(A, B) / (alpha^deg b * beta^deg a)
    let denom = num_traits::pow(alpha, db as usize) * num_traits::pow(beta, da as usize);
    Ok(BiPoly::from_mu_integer_form(&r, &denom))
}

/// Discriminant in `z`: `(-1)^(m(m-1)/2) res_z(f, f_z) / lc_z(f)`, which is the
/// product of squared root differences when `f` is monic.
pub fn discriminant_z(f: &BiPoly) -> Result<BiPoly> {
    let m = match f.deg_z() {
        Some(m) if m >= 2 => m,
        found => {
            return Err(Error::DegreeTooLow {
                op: "discriminant_z",
                required: 2,
                found,
            })
        }
    };
    let res = resultant_z(f, &f.derivative_z())?;
    let q = exact_div_ctx(&res, &f.lc_z(), "discriminant_z")?;
    Ok(if (m as u64 * (m as u64 - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    })
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            match terms.get_mut(k) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(k);
                    }
                }
                None => {
                    terms.insert(*k, c.clone());
                }
            }
        }
        BiPoly { terms }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let (da, a) = self.to_integer_form();
        let (db, b) = rhs.to_integer_form();
        BiPoly::from_integer_form(&a.mul(&b), &(da * db))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::from_int(c)
    }
}

impl From<BigRational> for BiPoly {
    fn from(c: BigRational) -> Self {
        BiPoly::constant(c)
    }
}

/// Human-readable form, highest `z` power first, e.g. `z^3 + 3*mu*z^2 - mu`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dz, dm), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (dz == 0 && dm == 0) {
                if abs.is_integer() {
                    factors.push(abs.to_string());
                } else {
                    factors.push(format!("({abs})"));
                }
            }
            match dm {
                0 => {}
                1 => factors.push("mu".into()),
                _ => factors.push(format!("mu^{dm}")),
            }
            match dz {
                0 => {}
                1 => factors.push("z".into()),
                _ => factors.push(format!("z^{dz}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> BiPoly {
        BiPoly::z()
    }
    fn mu() -> BiPoly {
        BiPoly::mu()
    }
    fn c(v: i64) -> BiPoly {
        BiPoly::from_int(v)
    }

    #[test]
    fn add_examples() {
        assert_eq!((z() + mu()) + (z() - mu()), c(2) * z());
        let p = z().pow(3) + mu();
        assert_eq!(&p + &BiPoly::zero(), p);
        assert_eq!((z().pow(3) + c(4)) + (-z().pow(3)), c(4));
    }

    #[test]
    fn mul_examples() {
        assert_eq!((z() + mu()) * (z() - mu()), z().pow(2) - mu().pow(2));
        let p = z().pow(2) + c(3) * mu();
        assert_eq!(&p * &BiPoly::one(), p);
        let expected = z().pow(3)
            + c(3) * mu() * z().pow(2)
            + c(3) * mu().pow(2) * z()
            + mu().pow(3);
        assert_eq!((z() + mu()).pow(3), expected);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!((z() + mu()).derivative_z(), BiPoly::one());
        assert_eq!(mu().pow(3).derivative_z(), BiPoly::zero());
        let p = z().pow(3) + c(3) * mu() * z().pow(2);
        assert_eq!(p.derivative_z(), c(3) * z().pow(2) + c(6) * mu() * z());
    }

    #[test]
    fn exact_div_examples() {
        let q = exact_div(&(z().pow(2) - mu().pow(2)), &(z() - mu())).unwrap();
        assert_eq!(q, z() + mu());
        match exact_div(&(z().pow(2) + c(1)), &z()) {
            Err(Error::NotDivisible { remainder, .. }) => assert_eq!(*remainder, c(1)),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
        let p = (z() + mu()).pow(3) - mu();
        assert_eq!(exact_div(&p, &BiPoly::one()).unwrap(), p);
        assert!(matches!(exact_div(&p, &BiPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn exact_div_rejects_mu_denominators() {
        // z / (mu z) = 1/mu is not a polynomial.
        let r = exact_div(&z(), &(mu() * z()));
        assert!(matches!(r, Err(Error::NotDivisible { .. })));
        // (mu^2 z + mu) / (mu z + 1) = mu
        let q = exact_div(&(mu().pow(2) * z() + mu()), &(mu() * z() + c(1))).unwrap();
        assert_eq!(q, mu());
        // Rational coefficients on both sides.
        let half = BiPoly::constant(rat(1, 2));
        let num = &half * &(z().pow(2) - c(1));
        let den = BiPoly::constant(rat(2, 3)) * (z() + c(1));
        assert_eq!(exact_div(&num, &den).unwrap(), BiPoly::constant(rat(3, 4)) * (z() - c(1)));
    }

    #[test]
    fn exact_div_by_mu_polynomial() {
        let num = (mu().pow(2) - c(1)) * (z().pow(2) + mu());
        let q = exact_div(&num, &(mu() - c(1))).unwrap();
        assert_eq!(q, (mu() + c(1)) * (z().pow(2) + mu()));
    }

    #[test]
    fn pseudo_division_round_trip() {
        let f = c(3) * mu() * z().pow(4) + z().pow(2) - mu();
        let g = (mu() + c(2)) * z().pow(2) + z();
        let pd = pseudo_divmod(&f, &g).unwrap();
        assert_eq!(pd.exponent, 3);
        let lhs = g.lc_z().pow(pd.exponent) * &f;
        assert_eq!(lhs, &pd.quotient * &g + &pd.remainder);
        assert!(pd.remainder.deg_z() < g.deg_z());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&(z().pow(2) - mu().pow(2)), &(z() - mu())).unwrap(), z() - mu());
        let s1 = z() + mu();
        let s2 = (z() + mu()).pow(3) - mu();
        assert_eq!(gcd(&s2, &s1).unwrap(), BiPoly::one());
        let p = c(-2) * (z().pow(2) + mu() * z() + c(1));
        assert_eq!(gcd(&p, &p).unwrap(), z().pow(2) + mu() * z() + c(1));
        assert!(matches!(gcd(&BiPoly::zero(), &BiPoly::zero()), Err(Error::BothZero)));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant_z(&(z() - mu()), &(z() + mu())).unwrap(), c(2) * mu());
        assert_eq!(resultant_z(&(z() - c(1)), &(z() - c(1))).unwrap(), BiPoly::zero());
        assert_eq!(resultant_z(&(z().pow(2) - mu()), &z()).unwrap(), -mu());
        assert!(matches!(
            resultant_z(&mu(), &z()),
            Err(Error::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn discriminant_examples() {
        let s2 = (z() + mu()).pow(3) - mu();
        assert_eq!(discriminant_z(&s2).unwrap(), c(-27) * mu().pow(2));
        assert_eq!(discriminant_z(&(z().pow(2) - mu())).unwrap(), c(4) * mu());
        assert_eq!(discriminant_z(&(z() - c(1)).pow(2)).unwrap(), BiPoly::zero());
        assert!(discriminant_z(&z()).is_err());
    }

    #[test]
    fn discriminant_vanishes_only_at_repeated_root() {
        // (z - mu)(z - 1): repeated root exactly when mu = 1.
        let f = (z() - mu()) * (z() - c(1));
        let d = discriminant_z(&f).unwrap();
        assert_eq!(d, (mu() - c(1)).pow(2));
        for m in -3..=3 {
            let at = d.eval_mu(&int(m));
            assert_eq!(at.is_zero(), m == 1);
        }
    }

    #[test]
    fn valuation_examples() {
        let s21 = z().pow(3) + c(3) * z().pow(2) + c(3) * z();
        assert_eq!(s21.valuation_z().unwrap().order, 1);
        assert_eq!((z() + mu()).valuation_z().unwrap().order, 0);
        assert_eq!(z().pow(5).valuation_z().unwrap().order, 5);
        assert!(matches!(BiPoly::zero().valuation_z(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn eval_mu_examples() {
        assert_eq!((z() + mu()).eval_mu(&int(2)), z() + c(2));
        let s2 = (z() + mu()).pow(3) - mu();
        assert_eq!(s2.eval_mu(&int(1)), z().pow(3) + c(3) * z().pow(2) + c(3) * z());
        assert_eq!((mu().pow(2) - c(1)).eval_mu(&int(1)), BiPoly::zero());
    }

    #[test]
    fn shift_and_reflect() {
        let p = (z() + mu()).pow(3) - mu();
        let shifted = p.shift_mu(&int(-1));
        assert_eq!(shifted, (z() + mu() - c(1)).pow(3) - mu() + c(1));
        assert_eq!(p.reflect(), (-z() - mu()).pow(3) + mu());
    }

    #[test]
    fn display_is_readable() {
        let p = (z() + mu()).pow(2) - BiPoly::constant(rat(1, 2));
        assert_eq!(p.to_string(), "z^2 + 2*mu*z + mu^2 - (1/2)");
    }
}
