//! Values of S_n at z = 0 as polynomials in mu, three ways.

use umemura::exactpoly::exact_div;
use umemura::recurrences::{phi_closed_form, phi_sequence, MuMode, PolySequence};
use umemura::verify::phi_second_order_check;

fn main() -> umemura::Result<()> {
    let s = PolySequence::umemura(MuMode::Symbolic, 8)?;
    let phi = phi_sequence(&s)?;
    for n in 1..=8i64 {
        let t = &phi[&n];
        let closed = phi_closed_form(n as u32) == t.value;
        let quotient = exact_div(&t.slope, &phi[&(n - 1)].value)?;
        println!(
            "n = {n}: closed form {closed}, second-order relation {}, slope / phi_(n-1) has mu-degree {}",
            phi_second_order_check(t, n),
            quotient.deg_mu().unwrap_or(0)
        );
    }
    println!("phi_4 = {}", phi[&4].value);
    Ok(())
}
