//! Reading, analysing and writing JSON graph documents with exact weights.

use pgst::document::GraphDocument;
use pgst::engine::{decide_pgst, DecideOptions};

fn main() -> pgst::Result<()> {
    let text = r#"{"name": "weighted P3", "n": 3, "pair": [1, 3],
                   "edges": [[1, 2, "1"], [2, 3, "1"]], "loops": [[2, "1/2"]]}"#;
    let doc = GraphDocument::parse(text)?;
    print!("canonical form: {}", doc.to_json());
    let (x, y) = doc.pair.expect("the document marks a pair");
    let v = decide_pgst(&doc.graph, x, y, &DecideOptions::default())?;
    println!("pair ({}, {}): {}", x + 1, y + 1, v.status);
    println!("  P+ = {}, P- = {}", v.pair.plus, v.pair.minus);
    if let Err(e) = GraphDocument::parse(r#"{"n": 2, "edges": [[1, 2, 0.5]]}"#) {
        println!("rejected: {e}");
    }
    Ok(())
}
