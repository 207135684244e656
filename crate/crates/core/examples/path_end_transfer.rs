//! PGST on unweighted paths: the closed-form classification next to the
//! exact engine, for every mirror pair of P_n with n <= 12.

use pgst::engine::{decide_with_context, DecideOptions};
use pgst::graph::families::path;
use pgst::paths::{classify_path, PathVerdict};
use pgst::spectra::SpectralContext;

fn main() -> pgst::Result<()> {
    let opts = DecideOptions::exact_only();
    for n in 2..=12 {
        let g = path(n);
        let ctx = SpectralContext::new(&g);
        for a in 1..=n / 2 {
            let b = n + 1 - a;
            let c = classify_path(n, a, b)?;
            let v = decide_with_context(&ctx, a - 1, b - 1, &opts)?;
            let closed = match c.verdict {
                PathVerdict::Pgst => "PGST",
                PathVerdict::NoPgst => "NO_PGST",
            };
            println!(
                "P_{n:<3} ({a:>2},{b:>2})  {closed:<8} {:<44} engine: {}",
                pgst::cli::describe_path_reason(&c.reason),
                v.status
            );
        }
    }
    Ok(())
}
