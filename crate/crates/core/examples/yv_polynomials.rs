//! Yablonskii-Vorob'ev polynomials and the identities they satisfy.

use umemura::recurrences::{triangular, PolySequence};
use umemura::verify::{pii_divisibility_holds, yv_wronskian_identity};

fn main() -> umemura::Result<()> {
    let q = PolySequence::yv(8)?;
    for (n, p) in q.members() {
        let deg = p.deg_z().unwrap_or(0);
        println!("Q_{n}: degree {deg:>2} (expected {:>2})", triangular(n as u32));
    }
    for m in 1..=6 {
        let ok = yv_wronskian_identity(q.get(m + 1)?, q.get(m)?, q.get(m - 1)?, m);
        println!("Wronskian identity at m = {m}: {ok}");
    }
    for n in 1..=5 {
        println!("divisibility for Q_{n}: {}", pii_divisibility_holds(q.get(n)?)?);
    }
    println!("Q_3 = {}", q.get(3)?);
    Ok(())
}
