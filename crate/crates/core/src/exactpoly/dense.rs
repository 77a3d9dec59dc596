//! Dense univariate polynomials over an exact integral domain.
//!
//! `UPoly<BigInt>` is ℤ[μ] and `UPoly<UPoly<BigInt>>` is ℤ[μ][z]. Every
//! expensive algorithm on [`BiPoly`](super::BiPoly) (products, pseudo-division,
//! subresultant sequences) runs on these integer forms after the rational
//! denominators have been cleared.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Operand length (in coefficients) from which products switch from schoolbook
/// to Karatsuba splitting. Results do not depend on it.
pub const KARATSUBA_THRESHOLD: usize = 24;

/// An exact integral domain with a gcd, enough for subresultant sequences.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `self = q * other`, `None` if no such `q` exists.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// A gcd normalized so that [`Ring::lead_is_negative`] is false.
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the "leading" part, used to fix gcd normalization.
    fn lead_is_negative(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn lead_is_negative(&self) -> bool {
        self.is_negative()
    }
}

/// Coefficients are stored low degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> fmt::Debug for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<C: Ring> UPoly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::from_coeffs(Vec::new());
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return <Self as Ring>::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Divides every coefficient by `c`; `None` unless all divisions are exact.
    pub fn exact_div_scalar(&self, c: &C) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_coeffs(coeffs))
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&C::from_i64(k as i64)))
                .collect(),
        )
    }

    /// Gcd of the coefficients, sign-normalized; zero for the zero polynomial.
    pub fn content(&self) -> C {
        let mut g = C::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let pp = self.exact_div_scalar(&c).expect("content divides every coefficient");
        pp.sign_normalized()
    }

    fn sign_normalized(self) -> Self {
        if self.lead_is_negative() {
            Ring::neg(&self)
        } else {
            self
        }
    }

    /// Pseudo-division: `lc(b)^(deg a - deg b + 1) * a = q * b + r` with
    /// `deg r < deg b`. When `deg a < deg b` the multiplier exponent is 0 and
    /// `(q, r) = (0, a)`.
    pub fn pseudo_divmod(&self, b: &Self) -> (Self, Self, u32) {
        let db = b.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return (self.clone(), self.clone(), 0);
        };
        if da < db {
            return (<Self as Ring>::zero(), self.clone(), 0);
        }
        let lcb = b.lc().unwrap().clone();
        let exponent = (da - db + 1) as u32;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); da - db + 1];
        let mut steps = 0u32;
        let mut top = da;
        loop {
            if top < db || rem.is_empty() {
                break;
            }
            let lead = rem[top].clone();
            let k = top - db;
            if !lead.is_zero() {
                // rem = lcb * rem - lead * x^k * b ; quot = lcb * quot + lead * x^k
                if !lcb.is_one() {
                    for c in rem.iter_mut() {
                        *c = c.mul(&lcb);
                    }
                    for c in quot.iter_mut() {
                        *c = c.mul(&lcb);
                    }
                }
                for (i, bc) in b.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&lead.mul(bc));
                }
                quot[k] = quot[k].add(&lead);
                steps += 1;
            }
            debug_assert!(rem[top].is_zero());
            if top == 0 {
                break;
            }
            top -= 1;
        }
        // Zero leading terms skipped a multiplication; catch up so the
        // multiplier is exactly lc(b)^exponent.
        let missing = exponent - steps;
        let mut q = Self::from_coeffs(quot);
        let mut r = Self::from_coeffs(rem);
        if missing > 0 && !lcb.is_one() {
            let f = lcb.pow(missing);
            q = q.scale(&f);
            r = r.scale(&f);
        }
        (q, r, exponent)
    }

    /// Pseudo-remainder only.
    pub fn prem(&self, b: &Self) -> Self {
        self.pseudo_divmod(b).1
    }

    /// Long division that requires each leading-coefficient quotient to be exact.
    pub fn exact_div_poly(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let Some(da) = self.degree() else {
            return Some(self.clone());
        };
        if da < db {
            return None;
        }
        let lcb = b.lc().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); da - db + 1];
        for top in (db..=da).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let q = rem[top].exact_div(lcb)?;
            let k = top - db;
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&q.mul(bc));
            }
            quot[k] = q;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Self::from_coeffs(quot))
    }

    /// Resultant by the subresultant remainder sequence. The sign follows the
    /// Sylvester determinant of `(self, b)`.
    pub fn resultant(&self, b: &Self) -> C {
        let (Some(_), Some(_)) = (self.degree(), b.degree()) else {
            return C::zero();
        };
        let mut a = self.clone();
        let mut b = b.clone();
        let ca = a.content();
        let cb = b.content();
        a = a.exact_div_scalar(&ca).unwrap();
        b = b.exact_div_scalar(&cb).unwrap();
        let da0 = a.degree().unwrap() as u32;
        let db0 = b.degree().unwrap() as u32;
        let t = ca.pow(db0).mul(&cb.pow(da0));
        let mut s_neg = false;
        if da0 < db0 {
            std::mem::swap(&mut a, &mut b);
            if da0 % 2 == 1 && db0 % 2 == 1 {
                s_neg = true;
            }
        }
        let mut g = C::one();
        let mut h = C::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                // res(a, c) = c^deg a, with the running scale folded in.
                let lb = b.lc().unwrap();
                let hh = if da == 0 {
                    C::one()
                } else {
                    lb.pow(da as u32)
                        .exact_div(&h.pow(da as u32 - 1))
                        .expect("subresultant division is exact")
                };
                let res = t.mul(&hh);
                return if s_neg { res.neg() } else { res };
            }
            let delta = (da - db) as u32;
            if da % 2 == 1 && db % 2 == 1 {
                s_neg = !s_neg;
            }
            let r = a.prem(&b);
            if r.degree().is_none() {
                return C::zero();
            }
            let divisor = g.mul(&h.pow(delta));
            let r = r
                .exact_div_scalar(&divisor)
                .expect("subresultant division is exact");
            a = b;
            b = r;
            g = a.lc().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                g.pow(delta)
                    .exact_div(&h.pow(delta - 1))
                    .expect("subresultant division is exact")
            };
        }
    }

    /// The full gcd in `C[x]` (content gcd times the primitive gcd),
    /// sign-normalized.
    pub fn gcd_poly(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.degree().is_none() {
            return a.sign_normalized_with_content();
        }
        let d = a.content().gcd(&b.content());
        let pg = primitive_gcd(a.primitive_part(), b.primitive_part());
        pg.scale(&d).sign_normalized()
    }

    fn sign_normalized_with_content(self) -> Self {
        self.sign_normalized()
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

/// Subresultant gcd of two primitive polynomials; returns a primitive result.
fn primitive_gcd<C: Ring>(mut a: UPoly<C>, mut b: UPoly<C>) -> UPoly<C> {
    let mut g = C::one();
    let mut h = C::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        let r = a.prem(&b);
        match r.degree() {
            None => return b.primitive_part(),
            Some(0) => return UPoly::constant(C::one()),
            Some(_) => {}
        }
        let divisor = g.mul(&h.pow(delta));
        let r = r
            .exact_div_scalar(&divisor)
            .expect("subresultant division is exact");
        a = b;
        b = r;
        g = a.lc().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
}

fn schoolbook<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn add_slices<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

fn karatsuba<C: Ring>(a: &[C], b: &[C], threshold: usize) -> Vec<C> {
    if a.len() < threshold || b.len() < threshold {
        return schoolbook(a, b);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = karatsuba(a0, b0, threshold);
    let z2 = karatsuba(a1, b1, threshold);
    let mid = karatsuba(&add_slices(a0, a1), &add_slices(b0, b1), threshold);
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    for (i, c) in z2.iter().enumerate() {
        out[i + 2 * half] = out[i + 2 * half].add(c);
    }
    for (i, c) in mid.iter().enumerate() {
        let mut m = c.clone();
        if let Some(x) = z0.get(i) {
            m = m.sub(x);
        }
        if let Some(x) = z2.get(i) {
            m = m.sub(x);
        }
        out[i + half] = out[i + half].add(&m);
    }
    out
}

/// Product with an explicit Karatsuba threshold; exposed for tests.
pub fn mul_with_threshold<C: Ring>(a: &UPoly<C>, b: &UPoly<C>, threshold: usize) -> UPoly<C> {
    UPoly::from_coeffs(karatsuba(&a.coeffs, &b.coeffs, threshold.max(2)))
}

impl<C: Ring> Ring for UPoly<C> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        UPoly::constant(C::one())
    }
    fn from_i64(v: i64) -> Self {
        UPoly::constant(C::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        Self::from_coeffs(add_slices(&self.coeffs, &other.coeffs))
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                    (Some(x), Some(y)) => x.sub(y),
                    (Some(x), None) => x.clone(),
                    (None, Some(y)) => y.neg(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        mul_with_threshold(self, other, KARATSUBA_THRESHOLD)
    }
    fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if other.coeffs.len() == 1 {
            return self.exact_div_scalar(&other.coeffs[0]);
        }
        self.exact_div_poly(other)
    }
    fn gcd(&self, other: &Self) -> Self {
        self.gcd_poly(other)
    }
    fn lead_is_negative(&self) -> bool {
        self.lc().is_some_and(|c| c.lead_is_negative())
    }
}

pub type ZPoly = UPoly<BigInt>;
pub type ZZPoly = UPoly<UPoly<BigInt>>;
