//! Checks every bundled corpus graph: finds the vertex pair carrying the
//! listed polynomials and confirms the engine certifies PGST there.

use pgst::corpus::{bundled_corpus, check_corpus};

fn main() -> pgst::Result<()> {
    let outcomes = check_corpus(&bundled_corpus())?;
    for o in &outcomes {
        let pairs: Vec<String> = o
            .matching_pairs
            .iter()
            .map(|(x, y)| format!("({},{})", x + 1, y + 1))
            .collect();
        println!(
            "{:<26} n={} P+ = {:<28} P- = {:<28} pairs {:<18} {}",
            o.name,
            o.n,
            o.expected_plus.to_string(),
            o.expected_minus.to_string(),
            pairs.join(" "),
            if o.passed { "PGST_CERTIFIED" } else { "MISMATCH" }
        );
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} of {} entries reproduced", outcomes.len() - failed, outcomes.len());
    Ok(())
}
