//! Canonical JSON form:
//! `{"vars":["z","mu"],"terms":[[deg_z,deg_mu,"num/den"],...]}`.
//!
//! Terms appear in canonical order and coefficients are reduced rationals
//! written as `"num"` or `"num/den"`. Parsing is strict so that a parsed
//! document re-serializes to the same bytes.

use super::{BiPoly, Monomial};
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

const VARS: [&str; 2] = ["z", "mu"];

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(u32, u32, String)> = self
            .terms
            .iter()
            .map(|(&(dz, dm), c)| (dz, dm, c.to_string()))
            .collect();
        let mut s = serializer.serialize_struct("BiPoly", 2)?;
        s.serialize_field("vars", &VARS)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBiPoly {
    vars: Vec<String>,
    terms: Vec<(u32, u32, String)>,
}

fn parse_coefficient(s: &str) -> Result<BigRational> {
    let c: BigRational = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational coefficient {s:?}")))?;
    // BigRational parsing reduces; insist on the reduced spelling.
    if c.to_string() != s {
        return Err(Error::Parse(format!("coefficient {s:?} is not in lowest terms")));
    }
    if c.is_zero() {
        return Err(Error::Parse("zero coefficient stored".into()));
    }
    Ok(c)
}

impl TryFrom<RawBiPoly> for BiPoly {
    type Error = Error;

    fn try_from(raw: RawBiPoly) -> Result<Self> {
        if raw.vars != VARS {
            return Err(Error::Parse(format!("unexpected vars {:?}", raw.vars)));
        }
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        let mut prev: Option<Monomial> = None;
        for (dz, dm, c) in raw.terms {
            let key = (dz, dm);
            if prev.is_some_and(|p| p >= key) {
                return Err(Error::Parse(format!(
                    "terms not strictly increasing at ({dz},{dm})"
                )));
            }
            prev = Some(key);
            terms.insert(key, parse_coefficient(&c)?);
        }
        Ok(BiPoly { terms })
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawBiPoly::deserialize(deserializer)?;
        BiPoly::try_from(raw).map_err(D::Error::custom)
    }
}

impl BiPoly {
    /// Compact canonical JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("BiPoly serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<BiPoly> {
        Ok(serde_json::from_str(s)?)
    }
}
