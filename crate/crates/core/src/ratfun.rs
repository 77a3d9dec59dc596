//! Quotients of [`BiPoly`] and the Hirota-like operators.

use crate::error::{Error, Result};
use crate::exactpoly::{self, BiPoly};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// `num / den` with `den != 0`.
///
/// Arithmetic never reduces; call [`RationalFunction::normalize`] when a
/// reduced form is wanted. Equality is by cross-multiplication and so does
/// not depend on the reduction state.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalFunction {
    num: BiPoly,
    den: BiPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RationalFunction {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (BiPoly, BiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn as_polynomial(&self) -> Option<BiPoly> {
        exactpoly::exact_div(&self.num, &self.den).ok()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFunction {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction {
            num: &self.num * &other.den,
            den: &self.den * &other.num,
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        RationalFunction {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &BiPoly) -> Self {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
            ArithOp::Div => self.div(other)?,
        })
    }

    /// Quotient rule.
    pub fn derivative(&self) -> Self {
        let num = &self.num.derivative_z() * &self.den - &self.num * &self.den.derivative_z();
        RationalFunction {
            num,
            den: self.den.pow(2),
        }
    }

    /// Substitutes `mu -> mu + c` in numerator and denominator.
    pub fn shift_mu(&self, c: &BigRational) -> Self {
        RationalFunction {
            num: self.num.shift_mu(c),
            den: self.den.shift_mu(c),
        }
    }

    /// Cancels the gcd of numerator and denominator (including any common
    /// factor in `mu` alone) and scales so that the denominator's leading
    /// term, in canonical order, has coefficient 1.
    pub fn normalize(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = exactpoly::gcd(&self.num, &self.den).expect("denominator is nonzero");
        let mut num = exactpoly::exact_div(&self.num, &g).expect("gcd divides numerator");
        let mut den = exactpoly::exact_div(&self.den, &g).expect("gcd divides denominator");
        // Content in mu: the gcd above works over ℚ(mu) and leaves it alone.
        let c = mu_content_gcd(&num, &den);
        if !c.is_one() {
            num = exactpoly::exact_div(&num, &c).expect("content divides numerator");
            den = exactpoly::exact_div(&den, &c).expect("content divides denominator");
        }
        let (_, lead) = den.terms().next_back().expect("nonzero denominator");
        let inv = lead.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

/// Gcd in ℚ[mu] of all z-coefficients of both polynomials, monic in mu.
fn mu_content_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut g: Option<BiPoly> = None;
    for p in [a, b] {
        let Some(d) = p.deg_z() else { continue };
        for k in 0..=d {
            let c = p.coeff_z(k);
            if c.is_zero() {
                continue;
            }
            // Treat the mu-polynomial as univariate by swapping roles.
            let c = swap_vars(&c);
            g = Some(match g {
                None => c,
                Some(prev) => exactpoly::gcd(&prev, &c).expect("nonzero"),
            });
            if g.as_ref().is_some_and(|g| g.deg_z() == Some(0)) {
                return BiPoly::one();
            }
        }
    }
    match g {
        Some(g) => {
            let g = swap_vars(&g);
            let lead = g.terms().next_back().map(|(_, c)| c.clone()).unwrap();
            g.scale(&lead.recip())
        }
        None => BiPoly::one(),
    }
}

fn swap_vars(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(p.terms().map(|(&(dz, dm), c)| ((dm, dz), c.clone())))
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<BiPoly> for RationalFunction {
    fn from(p: BiPoly) -> Self {
        Self::from_poly(p)
    }
}

/// `d/dz ln(p/q) = p'/p - q'/q`, returned over the denominator `p q`.
pub fn logderiv_ratio(p: &BiPoly, q: &BiPoly) -> Result<RationalFunction> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let num = &p.derivative_z() * q - p * &q.derivative_z();
    Ok(RationalFunction { num, den: p * q })
}

/// `L_z(f) = f f'' - (f')^2 + (f/z) f'`, the operator for Painlevé III.
pub fn op_lz(f: &RationalFunction) -> RationalFunction {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let by_z = RationalFunction {
        num: f.num.clone(),
        den: &f.den * &BiPoly::z(),
    };
    f.mul(&d2).sub(&d1.mul(&d1)).add(&by_z.mul(&d1))
}

/// Same operator with the opposite sign on the `(f/z) f'` term. This variant
/// does not reproduce the Umemura recurrence numerator; it is kept only so
/// that the difference can be demonstrated.
pub fn op_lz_negative_variant(f: &RationalFunction) -> RationalFunction {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let by_z = RationalFunction {
        num: f.num.clone(),
        den: &f.den * &BiPoly::z(),
    };
    f.mul(&d2).sub(&d1.mul(&d1)).sub(&by_z.mul(&d1))
}

/// `-z L_z(f)` for a polynomial `f`, computed without leaving ℚ[z, mu]:
/// `-z (f f'' - f'^2) - f f'`.
pub fn neg_z_lz_poly(f: &BiPoly) -> BiPoly {
    let d1 = f.derivative_z();
    let d2 = d1.derivative_z();
    -(&BiPoly::z() * &(f * &d2 - &d1 * &d1)) - f * &d1
}

/// `z L_z(f) = z (f f'' - f'^2) + f f'` for a polynomial `f`.
pub fn z_lz_poly(f: &BiPoly) -> BiPoly {
    -neg_z_lz_poly(f)
}

/// Taneda's operator `l(f) = f f'' - (f')^2`.
pub fn op_ell(f: &BiPoly) -> BiPoly {
    let d1 = f.derivative_z();
    f * &d1.derivative_z() - &d1 * &d1
}

impl RationalFunction {
    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn is_one_value(&self) -> bool {
        self.num == self.den
    }

    pub fn z() -> Self {
        Self::from_poly(BiPoly::z())
    }
}
