//! Quotients of K_{2,2} and K_3 by their involutions, and the
//! decomposition of a quotient polynomial in a symbolic edge weight.

use pgst::algebra::rat;
use pgst::graph::families::{complete, complete_bipartite};
use pgst::graph::Graph;
use pgst::involution::{
    check_factorization, find_involutions, quotient_pair, weighted_edge_decomposition, EdgeDecomposition,
};

fn show(name: &str, g: &Graph) -> pgst::Result<()> {
    let all = find_involutions(g);
    println!("{name}: {} involutions, phi = {}", all.len(), g.adjacency().char_poly());
    for sigma in &all {
        let q = quotient_pair(g, sigma)?;
        let swaps: Vec<String> = sigma
            .swaps()
            .iter()
            .map(|(a, b)| format!("({} {})", a + 1, b + 1))
            .collect();
        println!(
            "  {:<12} Pi+ = {:<14} Pi- = {:<10} product ok: {}",
            swaps.join(""),
            q.pi_plus.to_string(),
            q.pi_minus.to_string(),
            check_factorization(g, &q)
        );
    }
    Ok(())
}

fn main() -> pgst::Result<()> {
    show("K_{2,2}", &complete_bipartite(2, 2))?;
    show("K_3", &complete(3))?;

    // two swapped edges of weight 3 and a loop on the fixed vertex
    let mut g = Graph::new(5);
    g.add_edge(0, 1, rat(3))?;
    g.add_edge(2, 3, rat(3))?;
    g.add_loop(4, rat(1))?;
    g.add_edge(1, 4, rat(1))?;
    g.add_edge(3, 4, rat(1))?;
    let sigma = pgst::involution::Involution::from_swaps(5, &[(0, 2), (1, 3)])?;
    let d = weighted_edge_decomposition(&g, &sigma, (0, 1))?;
    println!("\nweighted edge 1-2 as w:");
    println!("  Pi+ = {}", d.pi_plus);
    println!("  Pi- = {}", d.pi_minus);
    match d.decomposition {
        EdgeDecomposition::Quadratic { plus, minus } => {
            for (s, parts) in [("+", plus), ("-", minus)] {
                println!(
                    "  Pi{s} = ({}) * (({}) - w^2 ({})), squares: {}",
                    parts.g, parts.p, parts.q, parts.perfect_squares
                );
            }
        }
        EdgeDecomposition::Linear { product } => {
            println!("  product = ({}) * (({}) - w^2 ({}))", product.g, product.p, product.q);
        }
    }
    Ok(())
}
