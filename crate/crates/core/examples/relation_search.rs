//! The numeric integer-relation search among roots of P+ and P-: an odd
//! relation on P_8 and only even ones on K_{2,2}.

use num_bigint::BigInt;
use pgst::engine::heuristic_relation_search;
use pgst::graph::families::{complete_bipartite, path};
use pgst::spectra::relative_pair;

fn main() -> pgst::Result<()> {
    let bound = BigInt::from(1_000_000);
    for (name, g, x, y) in [("P_8", path(8), 0, 7), ("K_{2,2}", complete_bipartite(2, 2), 0, 1)] {
        let pair = relative_pair(&g, x, y)?;
        match heuristic_relation_search(&pair, 60, &bound)? {
            Some(r) => {
                println!("{name}: roots of P+ {:?}", r.plus_roots);
                println!("{name}: roots of P- {:?}", r.minus_roots);
                println!(
                    "  l = {:?}, m = {:?}, sum of m is {:?}, residual {:e}",
                    r.ell.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    r.m.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    r.sum_m_parity,
                    r.residual
                );
            }
            None => println!("{name}: no relation within the bound"),
        }
    }
    Ok(())
}
