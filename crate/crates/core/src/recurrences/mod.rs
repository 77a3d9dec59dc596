//! Generators for the polynomial families: Yablonskii–Vorob'ev `Q_n`,
//! Umemura `S_n` and `T_n`, the values `phi_n = S_n(0; mu)`, and the reverse
//! Bessel polynomials.
//!
//! Every recurrence step ends in an exact division. A nonzero remainder is
//! reported as [`Error::NotDivisible`] and never truncated.

use crate::error::{Error, Result};
use crate::exactpoly::{self, int, BiPoly};
use crate::ratfun::{self, RationalFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

mod phi;
pub use phi::{
    phi_closed_form, phi_direct, phi_next_recurrence, phi_sequence, PhiSequence, PhiTriple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    YablonskiiVorobev,
    UmemuraS,
    UmemuraT,
    Tau,
    ReverseBessel,
}

impl FamilyTag {
    /// Short name used on the command line and in cache file names.
    pub fn short_name(self) -> &'static str {
        match self {
            FamilyTag::YablonskiiVorobev => "yv",
            FamilyTag::UmemuraS => "umemura",
            FamilyTag::UmemuraT => "umemura-t",
            FamilyTag::Tau => "tau",
            FamilyTag::ReverseBessel => "bessel",
        }
    }

    pub fn depends_on_mu(self) -> bool {
        matches!(self, FamilyTag::UmemuraS | FamilyTag::UmemuraT | FamilyTag::Tau)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "yv" => FamilyTag::YablonskiiVorobev,
            "umemura" => FamilyTag::UmemuraS,
            "umemura-t" => FamilyTag::UmemuraT,
            "tau" => FamilyTag::Tau,
            "bessel" => FamilyTag::ReverseBessel,
            other => return Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        })
    }
}

/// Whether `mu` stays an indeterminate or is fixed to a rational value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MuMode {
    Symbolic,
    Value(BigRational),
}

impl MuMode {
    pub fn integer(k: i64) -> Self {
        MuMode::Value(int(k))
    }

    /// `mu` as a polynomial: the indeterminate, or a constant.
    pub fn as_poly(&self) -> BiPoly {
        match self {
            MuMode::Symbolic => BiPoly::mu(),
            MuMode::Value(v) => BiPoly::constant(v.clone()),
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self {
            MuMode::Value(v) if v.is_integer() => i64::try_from(v.to_integer()).ok(),
            _ => None,
        }
    }

    /// The same mode with `mu` replaced by `mu + c`.
    pub fn shifted(&self, c: i64) -> Self {
        match self {
            MuMode::Symbolic => MuMode::Symbolic,
            MuMode::Value(v) => MuMode::Value(v + int(c)),
        }
    }
}

impl fmt::Display for MuMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuMode::Symbolic => f.write_str("symbolic"),
            MuMode::Value(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for MuMode {
    type Err = Error;

    /// Accepts `symbolic`, an integer `k`, or a rational `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "symbolic" {
            return Ok(MuMode::Symbolic);
        }
        let v: BigRational = s
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad mu value {s:?}")))?;
        Ok(MuMode::Value(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyFamily {
    pub tag: FamilyTag,
    pub mu: MuMode,
}

impl PolyFamily {
    pub fn new(tag: FamilyTag, mu: MuMode) -> Self {
        let mu = if tag.depends_on_mu() { mu } else { MuMode::Symbolic };
        PolyFamily { tag, mu }
    }

    pub fn umemura(mu: MuMode) -> Self {
        Self::new(FamilyTag::UmemuraS, mu)
    }

    pub fn yv() -> Self {
        Self::new(FamilyTag::YablonskiiVorobev, MuMode::Symbolic)
    }

    pub fn bessel() -> Self {
        Self::new(FamilyTag::ReverseBessel, MuMode::Symbolic)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Recurrence,
    Wronskian,
    Laguerre,
    File,
}

/// Consecutive members of one family, indexed from the first seed.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySequence {
    pub family: PolyFamily,
    pub entries: BTreeMap<i64, BiPoly>,
    pub provenance: Provenance,
}

impl PolySequence {
    /// Seeds only: `S_{-1} = S_0 = 1`, `Q_0 = 1, Q_1 = z`, `theta_0 = 1`.
    pub fn seeded(family: PolyFamily) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let provenance = match family.tag {
            FamilyTag::UmemuraS => {
                entries.insert(-1, BiPoly::one());
                entries.insert(0, BiPoly::one());
                Provenance::Recurrence
            }
            FamilyTag::YablonskiiVorobev => {
                entries.insert(0, BiPoly::one());
                entries.insert(1, BiPoly::z());
                Provenance::Recurrence
            }
            FamilyTag::ReverseBessel => {
                entries.insert(0, BiPoly::one());
                Provenance::Laguerre
            }
            FamilyTag::Tau => {
                if family.mu != MuMode::Symbolic {
                    return Err(Error::InvalidArgument(
                        "tau sequences are generated with symbolic mu".into(),
                    ));
                }
                entries.insert(0, BiPoly::one());
                Provenance::Wronskian
            }
            FamilyTag::UmemuraT => {
                return Err(Error::InvalidArgument(
                    "T_n are rational functions; use t_sequence".into(),
                ))
            }
        };
        Ok(PolySequence {
            family,
            entries,
            provenance,
        })
    }

    /// Generates members `0..=n_max`.
    pub fn generate(family: PolyFamily, n_max: u32) -> Result<Self> {
        let mut seq = Self::seeded(family)?;
        seq.extend_to(n_max)?;
        Ok(seq)
    }

    pub fn umemura(mu: MuMode, n_max: u32) -> Result<Self> {
        Self::generate(PolyFamily::umemura(mu), n_max)
    }

    pub fn yv(n_max: u32) -> Result<Self> {
        Self::generate(PolyFamily::yv(), n_max)
    }

    pub fn max_index(&self) -> i64 {
        *self.entries.keys().next_back().expect("sequences are never empty")
    }

    pub fn get(&self, n: i64) -> Result<&BiPoly> {
        self.entries.get(&n).ok_or(Error::IndexMissing(n))
    }

    pub fn extend_to(&mut self, n_max: u32) -> Result<()> {
        let target = i64::from(n_max);
        while self.max_index() < target {
            let n = self.max_index();
            let next = match self.family.tag {
                FamilyTag::UmemuraS => umemura_s_next(
                    self.get(n)?,
                    self.get(n - 1)?,
                    &self.family.mu.as_poly(),
                    n,
                )?,
                FamilyTag::YablonskiiVorobev => yv_next(self.get(n)?, self.get(n - 1)?, n)?,
                FamilyTag::ReverseBessel => reverse_bessel((n + 1) as u32),
                FamilyTag::Tau => crate::wronskian::tau_n((n + 1) as u32),
                FamilyTag::UmemuraT => unreachable!("rejected in seeded"),
            };
            self.entries.insert(n + 1, next);
        }
        Ok(())
    }

    /// Members with nonnegative index, in order.
    pub fn members(&self) -> impl Iterator<Item = (i64, &BiPoly)> {
        self.entries.range(0..).map(|(&n, p)| (n, p))
    }
}

/// `Q_{n+1} = [z Q_n^2 - 4 l(Q_n)] / Q_{n-1}`.
pub fn yv_next(q_n: &BiPoly, q_nm1: &BiPoly, n: i64) -> Result<BiPoly> {
    if q_nm1.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let num = &BiPoly::z() * &q_n.pow(2) - ratfun::op_ell(q_n).scale(&int(4));
    exactpoly::exact_div_ctx(&num, q_nm1, &format!("Q_{}", n + 1))
}

/// Numerator of the Umemura step:
/// `-z (S S'' - S'^2) - S S' + (z + mu) S^2`, with `mu` given as a polynomial
/// (the indeterminate, or a constant for a specialized sequence).
pub fn umemura_numerator(s_n: &BiPoly, mu: &BiPoly) -> BiPoly {
    ratfun::neg_z_lz_poly(s_n) + &(&BiPoly::z() + mu) * &s_n.pow(2)
}

/// `S_{n+1}` from `S_n` and `S_{n-1}`.
pub fn umemura_s_next(s_n: &BiPoly, s_nm1: &BiPoly, mu: &BiPoly, n: i64) -> Result<BiPoly> {
    if s_nm1.is_zero() {
        return Err(Error::DivisionByZero);
    }
    exactpoly::exact_div_ctx(&umemura_numerator(s_n, mu), s_nm1, &format!("S_{}", n + 1))
}

/// Degree of `S_n` in `z`, also the power of `z` relating `S_n` and `T_n`.
pub fn triangular(n: u32) -> u32 {
    n * (n + 1) / 2
}

/// `T_n = S_n / z^{n(n+1)/2}`.
pub fn umemura_t_from_s(s_n: &BiPoly, n: u32) -> RationalFunction {
    RationalFunction::new(s_n.clone(), BiPoly::z().pow(triangular(n))).expect("nonzero power")
}

/// `T_0..=T_{n_max}` from their own recurrence
/// `z T_{n+1} T_{n-1} = -z l(T_n) - T_n T_n' + (z + mu) T_n^2`, computed in
/// rational functions. Used to cross-check [`umemura_t_from_s`].
pub fn t_sequence(mu: &MuMode, n_max: u32) -> Result<BTreeMap<i64, RationalFunction>> {
    let mut out = BTreeMap::new();
    out.insert(-1, RationalFunction::one());
    out.insert(0, RationalFunction::one());
    let z = RationalFunction::z();
    let shift = RationalFunction::from_poly(&BiPoly::z() + &mu.as_poly());
    for n in 0..i64::from(n_max) {
        let t = &out[&n];
        let prev = &out[&(n - 1)];
        let d1 = t.derivative();
        let ell = t.mul(&d1.derivative()).sub(&d1.mul(&d1));
        let rhs = z.mul(&ell).neg().sub(&t.mul(&d1)).add(&shift.mul(&t.mul(t)));
        let next = rhs.div(&z.mul(prev))?.normalize();
        out.insert(n + 1, next);
    }
    Ok(out)
}

/// Generalized binomial `binom(x, k)` for integer `x`.
fn binom_int(x: i64, k: u32) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(x - i64::from(i));
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Reverse Bessel polynomial `theta_n(z) = n!/(-2)^n * L_n^{(-2n-1)}(2z)`,
/// with the associated Laguerre polynomial expanded by its finite sum
/// `L_n^{(a)}(x) = sum_i (-1)^i binom(n + a, n - i) x^i / i!`.
pub fn reverse_bessel(n: u32) -> BiPoly {
    let a = -2 * i64::from(n) - 1;
    let upper = i64::from(n) + a;
    let prefactor = BigRational::new(factorial(n), BigInt::from(-2).pow(n));
    let mut terms = Vec::new();
    for i in 0..=n {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        let c = sign
            * binom_int(upper, n - i)
            * BigRational::new(BigInt::from(2).pow(i), factorial(i))
            * &prefactor;
        if !c.is_zero() {
            terms.push(((i, 0), c));
        }
    }
    BiPoly::from_terms(terms)
}

/// `theta_{n+1} = (2n+1) theta_n + z^2 theta_{n-1}`, seeded with
/// `theta_0 = 1, theta_1 = z + 1`. An independent check on [`reverse_bessel`].
pub fn bessel_three_term(n_max: u32) -> Vec<BiPoly> {
    let mut out = vec![BiPoly::one(), &BiPoly::z() + &BiPoly::one()];
    let z2 = BiPoly::z().pow(2);
    for n in 1..n_max as i64 {
        let next = out[n as usize].scale(&int(2 * n + 1)) + &z2 * &out[n as usize - 1];
        out.push(next);
    }
    out.truncate(n_max as usize + 1);
    out
}
