//! Numeric walk fidelities next to exact verdicts: P4 ends (certified
//! PGST), P8 ends (certified obstruction) and the same-part pair of K_{2,2}
//! (perfect transfer at t = pi/2).

use pgst::engine::{decide_pgst, DecideOptions};
use pgst::graph::families::{complete_bipartite, path};
use pgst::graph::Graph;
use pgst::simulator::{numeric_eigen, search_max_fidelity, SearchOptions};

fn report(name: &str, g: &Graph, x: usize, y: usize, t_max: f64) -> pgst::Result<()> {
    let verdict = decide_pgst(g, x, y, &DecideOptions::default())?;
    let spec = numeric_eigen(&g.adjacency())?;
    let trace = search_max_fidelity(&spec, x, y, &SearchOptions::new(t_max))?;
    println!(
        "{name:<8} pair ({}, {})  {:<24} max |U(t)| = {:.9} at t = {:.6} (t <= {t_max:e})",
        x + 1,
        y + 1,
        verdict.status.as_str(),
        trace.best_fidelity,
        trace.best_t
    );
    Ok(())
}

fn main() -> pgst::Result<()> {
    report("P4", &path(4), 0, 3, 1e5)?;
    report("P8", &path(8), 0, 7, 1e6)?;
    report("K22", &complete_bipartite(2, 2), 0, 1, 10.0)?;
    Ok(())
}
