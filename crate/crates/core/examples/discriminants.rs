//! Factored discriminants of S_2..S_6 next to the closed-form prediction.

use umemura::analysis::{discriminant_closed_form, discriminant_table};

fn main() -> umemura::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for record in discriminant_table(max_n)? {
        let predicted = discriminant_closed_form(record.n);
        let verdict = if predicted.matches(&record) { "MATCH" } else { "MISMATCH" };
        println!("n = {}: {}  [{verdict}]", record.n, record.pretty());
        println!("        {}", record.to_json());
    }
    Ok(())
}
