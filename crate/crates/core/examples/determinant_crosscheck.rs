//! S_n recovered as a scaled Wronskian of generalized Laguerre polynomials.

use num_rational::BigRational;
use umemura::recurrences::{MuMode, PolySequence};
use umemura::wronskian::{laguerre_crosscheck, normalization, tau_sequence};

fn main() -> umemura::Result<()> {
    let n_max = 6;
    let s = PolySequence::umemura(MuMode::Symbolic, n_max)?;
    let taus = tau_sequence(n_max);
    for (n, tau) in &taus {
        let c = normalization(*n);
        let scaled = tau.scale(&BigRational::from_integer(c.clone()));
        let same = &scaled == s.get(i64::from(*n))?;
        println!("n = {n}: c_n = {c:>14}  c_n * tau_n == S_n: {same}");
    }
    let ok = (0..=11).all(laguerre_crosscheck);
    println!("generating-function entries agree with Laguerre polynomials for k <= 11: {ok}");
    Ok(())
}
