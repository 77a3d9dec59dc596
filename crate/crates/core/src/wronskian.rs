//! Determinant construction of the Umemura polynomials.
//!
//! With `sum_j p_j lambda^j = (1 + lambda)^mu exp(z lambda)`, the Wronskian
//! `tau_n = W(p_1, p_3, ..., p_{2n-1})` satisfies `S_n = c_n tau_n` where
//! `c_n = prod_{j=1}^{n} (2j+1)^{n-j}`. This is a second route to `S_n`,
//! independent of the recurrence.

use crate::exactpoly::{self, int, BiPoly};
use crate::ratfun::{self, RationalFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;

/// `binom(mu, k) = mu (mu - 1) ... (mu - k + 1) / k!` as a polynomial in `mu`.
pub fn binom_mu(k: u32) -> BiPoly {
    let mut out = BiPoly::one();
    let mut kfact = BigInt::one();
    for i in 0..k {
        out = &out * &(BiPoly::mu() - BiPoly::from_int(i64::from(i)));
        kfact *= BigInt::from(i + 1);
    }
    out.scale(&BigRational::new(BigInt::one(), kfact))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Coefficient of `lambda^j` in `(1 + lambda)^mu exp(z lambda)`:
/// `sum_{k=0}^{j} binom(mu, k) z^{j-k} / (j-k)!`.
pub fn gen_p(j: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for k in 0..=j {
        let zpart = BiPoly::monomial(BigRational::new(BigInt::one(), factorial(j - k)), j - k, 0);
        out = out + &binom_mu(k) * &zpart;
    }
    out
}

/// `L_j^{(mu - j)}(-z)` by the three-term recurrence in the degree,
/// `(k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}`, at `a = mu - j`
/// and `x = -z`.
pub fn laguerre_shifted(j: u32) -> BiPoly {
    let a = BiPoly::mu() - BiPoly::from_int(i64::from(j));
    let x = -BiPoly::z();
    let mut prev = BiPoly::one();
    if j == 0 {
        return prev;
    }
    let mut cur = BiPoly::one() + &a - &x;
    for k in 1..j {
        let k_i = i64::from(k);
        let lin = BiPoly::from_int(2 * k_i + 1) + &a - &x;
        let next = (&lin * &cur - &(BiPoly::from_int(k_i) + &a) * &prev)
            .scale(&BigRational::new(BigInt::one(), BigInt::from(k_i + 1)));
        prev = cur;
        cur = next;
    }
    cur
}

pub fn laguerre_crosscheck(j: u32) -> bool {
    laguerre_shifted(j) == gen_p(j)
}

/// `c_n = prod_{j=1}^{n} (2j+1)^{n-j}`, with `c_0 = 1`.
pub fn normalization(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(2 * j + 1).pow(n - j))
}

/// The `n x n` Wronskian matrix: row `i`, column `k` holds
/// `d^i/dz^i p_{2k+1}` (zero-based).
pub fn wronskian_matrix(n: u32) -> Vec<Vec<BiPoly>> {
    let cols: Vec<BiPoly> = (0..n).map(|k| gen_p(2 * k + 1)).collect();
    (0..n)
        .map(|i| cols.iter().map(|p| p.derivative_z_n(i)).collect())
        .collect()
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn det_bareiss(mut m: Vec<Vec<BiPoly>>) -> BiPoly {
    let n = m.len();
    if n == 0 {
        return BiPoly::one();
    }
    let mut sign_flip = false;
    let mut prev = BiPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BiPoly::zero(),
            }
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = exactpoly::exact_div(&t, &prev)
                    .expect("Bareiss step divides exactly by the previous pivot");
            }
            m[i][k] = BiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// Laplace expansion along the first row. Exponential cost; used only for
/// small matrices as an independent check on [`det_bareiss`].
pub fn det_cofactor(m: &[Vec<BiPoly>]) -> BiPoly {
    let n = m.len();
    match n {
        0 => BiPoly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut out = BiPoly::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BiPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * &det_cofactor(&minor);
                out = if c % 2 == 0 { out + term } else { out - term };
            }
            out
        }
    }
}

/// `tau_n`, with `tau_0 = 1`.
pub fn tau_n(n: u32) -> BiPoly {
    det_bareiss(wronskian_matrix(n))
}

/// `tau_n` by cofactor expansion.
pub fn tau_n_cofactor(n: u32) -> BiPoly {
    det_cofactor(&wronskian_matrix(n))
}

/// `S_n` obtained as `c_n tau_n`.
pub fn s_from_tau(n: u32) -> BiPoly {
    tau_n(n).scale(&BigRational::from_integer(normalization(n)))
}

/// `tau_0..=tau_{n_max}`, computed in parallel over `n`.
pub fn tau_sequence(n_max: u32) -> BTreeMap<u32, BiPoly> {
    use rayon::prelude::*;
    (0..=n_max).into_par_iter().map(|n| (n, tau_n(n))).collect()
}

/// `w_n = 1 + d/dz ln(tau_{n-1}(z; mu - 1) / tau_n(z; mu))`.
pub fn w_from_tau(n: u32, taus: &BTreeMap<u32, BiPoly>) -> crate::Result<RationalFunction> {
    if n == 0 {
        return Err(crate::Error::InvalidArgument("w_from_tau needs n >= 1".into()));
    }
    let lower = taus.get(&(n - 1)).ok_or(crate::Error::IndexMissing(i64::from(n) - 1))?;
    let upper = taus.get(&n).ok_or(crate::Error::IndexMissing(i64::from(n)))?;
    let ld = ratfun::logderiv_ratio(&lower.shift_mu(&int(-1)), upper)?;
    Ok(RationalFunction::one().add(&ld))
}
