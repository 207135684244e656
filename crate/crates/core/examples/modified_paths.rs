//! Modified paths P_N^(M,w): the closed-form quotient polynomials, the
//! classification for transcendental w, and the kernel witness for even M.

use pgst::algebra::frac;
use pgst::paths::{classify_modified_path, even_m_witness, modified_path_quotients};

fn main() -> pgst::Result<()> {
    for (n, m) in [(4, 1), (6, 1), (6, 2), (8, 4), (10, 3), (12, 5), (14, 3), (5, 1)] {
        let c = classify_modified_path(n, m)?;
        println!(
            "N = {n:>2}, M = {m}: {:?} ({})",
            c.verdict,
            pgst::cli::describe_modified_clause(&c.clause)
        );
    }
    let (plus, minus) = modified_path_quotients(6, 2)?;
    println!("\nP_6^(2,w): Pi+ = {plus}\n           Pi- = {minus}");
    let w = even_m_witness(8, 2, &frac(3, 1))?;
    let z: Vec<String> = w.z.iter().map(|v| v.to_string()).collect();
    println!(
        "\nN = 8, M = 2, w = 3: z = [{}], A w+- = 0: {}, breaks strong cospectrality: {}",
        z.join(", "),
        w.in_kernel,
        w.breaks_strong_cospectrality
    );
    Ok(())
}
