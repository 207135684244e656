//! Connected unweighted graphs on at most 6 vertices with a pair whose
//! P+ and P- are irreducible with unequal trace/degree ratios.

use pgst::census::{census, connected_graphs, hit_counts};

fn main() -> pgst::Result<()> {
    for n in 1..=6 {
        println!("n = {n}: {} connected graphs", connected_graphs(n).len());
    }
    let hits = census(6)?;
    for (n, k) in hit_counts(&hits) {
        println!("n = {n}: {k} graphs with a certified pair");
    }
    for h in hits.iter().filter(|h| h.n <= 4) {
        let edges: Vec<String> = h.edges.iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        let p = &h.pairs[0];
        println!(
            "  {}  pair ({}, {}): P+ = {}, P- = {}",
            edges.join(" "),
            p.x + 1,
            p.y + 1,
            p.p_plus,
            p.p_minus
        );
    }
    Ok(())
}
