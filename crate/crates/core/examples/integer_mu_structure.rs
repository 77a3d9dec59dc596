//! At integer mu the origin becomes a multiple root of predictable order.

use umemura::analysis::{coefficient_relations, expected_valuation};
use umemura::recurrences::{MuMode, PolySequence};

fn main() -> umemura::Result<()> {
    let n_max = 7;
    for mu in [-3i64, -1, 1, 2, 4] {
        let s = PolySequence::umemura(MuMode::integer(mu), n_max)?;
        for n in (mu.unsigned_abs() as u32 + 1)..=n_max {
            let p = s.get(i64::from(n))?;
            let order = p.valuation_z()?.order;
            let rel = coefficient_relations(p, n, mu)?;
            println!(
                "mu = {mu:>2}, n = {n}: order {order:>2} (expected {:>2}), a1 relation {}, a2 relation {}",
                expected_valuation(n, mu),
                rel.first_holds,
                rel.second_holds
            );
        }
    }
    Ok(())
}
