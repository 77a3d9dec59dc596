//! At mu = 1 the Umemura polynomials reduce to reverse Bessel polynomials.

use umemura::recurrences::{bessel_three_term, reverse_bessel, MuMode, PolySequence};

fn main() -> umemura::Result<()> {
    let n_max = 6;
    let s = PolySequence::umemura(MuMode::integer(1), n_max)?;
    let recurrence = bessel_three_term(n_max);
    for n in 0..=n_max {
        let theta = reverse_bessel(n);
        let expected = theta.mul_z_pow(n * n.saturating_sub(1) / 2);
        println!(
            "n = {n}: S_n(z; 1) == z^{} theta_n: {}, three-term recurrence agrees: {}",
            n * n.saturating_sub(1) / 2,
            s.get(i64::from(n))? == &expected,
            theta == recurrence[n as usize]
        );
    }
    println!("theta_4 = {}", reverse_bessel(4));
    Ok(())
}
