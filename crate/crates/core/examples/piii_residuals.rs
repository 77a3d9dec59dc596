//! Rational solutions of P_III built from consecutive S_n, checked exactly.

use umemura::recurrences::{MuMode, PolySequence};
use umemura::verify::{build_w, fourth_order_identity, piii_residual, shift_sequence, PIIIParams};

fn main() -> umemura::Result<()> {
    let s = PolySequence::umemura(MuMode::Symbolic, 5)?;
    let shifted = shift_sequence(&s, -1);
    for n in 1..=5 {
        let w = build_w(&s, &shifted, n)?;
        let params = PIIIParams::for_index(n);
        let report = piii_residual(&w.quotient, &params)?;
        let fourth = fourth_order_identity(s.get(n)?, n, &MuMode::Symbolic);
        println!(
            "n = {n}: alpha = {}, beta = {}, residual zero: {}, forms agree: {}, fourth-order zero: {}",
            params.alpha,
            params.beta,
            report.is_zero,
            w.agree(),
            fourth.is_zero
        );
    }
    println!("w_1 = {}", build_w(&s, &shifted, 1)?.quotient);
    Ok(())
}
