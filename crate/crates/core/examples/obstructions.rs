//! Certified obstructions: odd-degree factors on P_8 and the wheel, the
//! three-factor rule on a double star, and strong cospectrality on K_3.

use pgst::engine::{decide_pgst, enumerate_three_factor, DecideOptions, PairFactors};
use pgst::graph::families::{complete, double_star, path, wheel};
use pgst::graph::Graph;

fn show(name: &str, g: &Graph, x: usize, y: usize) -> pgst::Result<()> {
    let v = decide_pgst(g, x, y, &DecideOptions::exact_only())?;
    v.verify()?;
    println!("{name}, pair ({}, {}): {}", x + 1, y + 1, v.status);
    println!(
        "  P+ = {}\n  P- = {}",
        pgst::cli::factored(&v.pair.plus),
        pgst::cli::factored(&v.pair.minus)
    );
    if let Some(c) = &v.certificate {
        println!("  {}", pgst::cli::describe_certificate(c));
    }
    Ok(())
}

fn main() -> pgst::Result<()> {
    show("P_8", &path(8), 0, 7)?;
    // rim 0..4, hub 4
    show("wheel", &wheel(4), 0, 2)?;
    let h = double_star(2);
    show("double star", &h, 2, 3)?;
    show("K_3", &complete(3), 0, 1)?;

    let pair = pgst::spectra::relative_pair(&h, 2, 3)?;
    let (all, truncated) = enumerate_three_factor(&PairFactors::new(&pair)?, 1 << 20);
    println!(
        "\ndouble star: {} three-factor certificates (truncated: {truncated})",
        all.len()
    );
    Ok(())
}
