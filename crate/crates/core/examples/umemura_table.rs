//! Generate S_0..S_5 with symbolic mu and compare against the published table.

use umemura::recurrences::{MuMode, PolySequence};
use umemura::tables::umemura_listed;

fn main() -> umemura::Result<()> {
    let s = PolySequence::umemura(MuMode::Symbolic, 5)?;
    for (n, p) in s.members() {
        let listed = match umemura_listed(n as u32) {
            Some(q) if &q == p => "matches table",
            Some(_) => "DIFFERS from table",
            None => "",
        };
        println!("S_{n}: deg_z {:>2}, {:>3} terms  {listed}", p.deg_z().unwrap_or(0), p.num_terms());
    }
    println!("S_2 = {}", s.get(2)?);
    Ok(())
}
