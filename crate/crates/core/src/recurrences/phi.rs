//! `phi_n(mu) = S_n(0; mu)` and its first two z-derivatives at the origin.

use super::PolySequence;
use crate::error::{Error, Result};
use crate::exactpoly::{self, int, BiPoly};
use serde::Serialize;
use std::collections::BTreeMap;

/// `(S_n, dS_n/dz, d^2S_n/dz^2)` at `z = 0`, each a polynomial in `mu`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhiTriple {
    pub value: BiPoly,
    pub slope: BiPoly,
    pub curvature: BiPoly,
}

pub type PhiSequence = BTreeMap<i64, PhiTriple>;

pub fn phi_direct(s: &PolySequence, n: i64) -> Result<PhiTriple> {
    let p = s.get(n)?;
    Ok(PhiTriple {
        value: p.coeff_z(0),
        slope: p.coeff_z(1),
        curvature: p.coeff_z(2).scale(&int(2)),
    })
}

/// Triples for every nonnegative index present in `s`.
pub fn phi_sequence(s: &PolySequence) -> Result<PhiSequence> {
    s.members().map(|(n, _)| Ok((n, phi_direct(s, n)?))).collect()
}

/// `phi_{n+1}` from the four previous values, valid for `n >= 3`:
/// `phi_{n+1} phi_{n-2}^2 = phi_n phi_{n-1} phi_{n-2} (2mu^2 - 2n^2 + 2n - 1) - phi_n^2 phi_{n-3}`.
///
/// `prev` is `[phi_n, phi_{n-1}, phi_{n-2}, phi_{n-3}]`.
pub fn phi_next_recurrence(prev: [&BiPoly; 4], n: i64) -> Result<BiPoly> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "phi recurrence needs n >= 3, got {n}"
        )));
    }
    let [p0, p1, p2, p3] = prev;
    if p2.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let factor = BiPoly::mu().pow(2).scale(&int(2)) + BiPoly::from_int(-2 * n * n + 2 * n - 1);
    let rhs = p0 * p1 * p2 * &factor - &p0.pow(2) * p3;
    exactpoly::exact_div_ctx(&rhs, &p2.pow(2), &format!("phi_{}", n + 1))
}

/// Exponent of `mu^2 - j^2` (of `mu` when `j = 0`) in `phi_n`.
pub fn phi_exponent(n: u32, j: u32) -> u32 {
    let half = j / 2;
    let base = if j.is_multiple_of(2) { n.div_ceil(2) } else { n / 2 };
    base.saturating_sub(half)
}

/// Product form of `phi_n`.
pub fn phi_closed_form(n: u32) -> BiPoly {
    let mu = BiPoly::mu();
    let mut out = BiPoly::one();
    for j in 0..n {
        let e = phi_exponent(n, j);
        if e == 0 {
            continue;
        }
        let base = if j == 0 {
            mu.clone()
        } else {
            &mu.pow(2) - &BiPoly::from_int(i64::from(j * j))
        };
        out = &out * &base.pow(e);
    }
    out
}
