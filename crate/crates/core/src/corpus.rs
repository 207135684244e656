//! A bundled set of unweighted graphs whose pair polynomials `P+`, `P-`
//! are irreducible with different trace-to-degree ratios, together with
//! the polynomials themselves.
//!
//! The marked pair is not recorded: the checker searches every pair for
//! the expected polynomials.

use serde::{Deserialize, Serialize};

use crate::algebra::UniPoly;
use crate::document::GraphDocument;
use crate::engine::{decide_with_context, DecideOptions, Rule, Status};
use crate::error::{Error, Result};
use crate::spectra::SpectralContext;

const BUNDLED: &str = include_str!("../data/corpus.json");

#[derive(Deserialize)]
struct RawEntry {
    graph: serde_json::Value,
    p_plus: String,
    p_minus: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub document: GraphDocument,
    pub p_plus: UniPoly,
    pub p_minus: UniPoly,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let raw: Vec<RawEntry> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.into_iter()
        .map(|r| {
            Ok(CorpusEntry {
                document: GraphDocument::parse(&r.graph.to_string())?,
                p_plus: UniPoly::parse(&r.p_plus)?,
                p_minus: UniPoly::parse(&r.p_minus)?,
            })
        })
        .collect()
}

pub fn bundled_corpus() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED).expect("bundled corpus is well formed")
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusOutcome {
    pub name: String,
    pub n: usize,
    pub expected_plus: UniPoly,
    pub expected_minus: UniPoly,
    /// 0-indexed pairs `x < y` whose `(P+, P-)` equal the expected pair.
    pub matching_pairs: Vec<(usize, usize)>,
    pub status: Option<Status>,
    pub rule: Option<Rule>,
    /// When nothing matched: the computed polynomials of the pair agreeing
    /// on most polynomials, strongly cospectral pairs preferred.
    pub mismatch: Option<(UniPoly, UniPoly)>,
    pub passed: bool,
}

/// Finds the pairs carrying the expected polynomials and runs the engine
/// on the first one; the entry passes when that verdict is certified PGST
/// by the irreducible-sufficient rule.
pub fn check_entry(entry: &CorpusEntry) -> Result<CorpusOutcome> {
    let g = &entry.document.graph;
    let ctx = SpectralContext::new(g);
    let mut matching = Vec::new();
    let mut closest: Option<(usize, (UniPoly, UniPoly))> = None;
    for x in 0..g.vertex_count() {
        for y in x + 1..g.vertex_count() {
            let pair = ctx.relative_pair(x, y)?;
            if pair.plus == entry.p_plus && pair.minus == entry.p_minus {
                matching.push((x, y));
            } else {
                let strong = ctx.strong_cospectrality(x, y)?.strongly_cospectral;
                let score = 2 * (usize::from(pair.plus == entry.p_plus) + usize::from(pair.minus == entry.p_minus))
                    + usize::from(strong);
                if closest.as_ref().map_or(true, |(s, _)| score > *s) {
                    closest = Some((score, (pair.plus, pair.minus)));
                }
            }
        }
    }
    let (status, rule) = match matching.first() {
        Some(&(x, y)) => {
            let v = decide_with_context(&ctx, x, y, &DecideOptions::exact_only())?;
            (Some(v.status), v.rule)
        }
        None => (None, None),
    };
    let passed = status == Some(Status::PgstCertified) && rule == Some(Rule::IrreducibleSufficient);
    Ok(CorpusOutcome {
        name: entry.document.name.clone(),
        n: g.vertex_count(),
        expected_plus: entry.p_plus.clone(),
        expected_minus: entry.p_minus.clone(),
        mismatch: if matching.is_empty() {
            closest.map(|c| c.1)
        } else {
            None
        },
        matching_pairs: matching,
        status,
        rule,
        passed,
    })
}

pub fn check_corpus(entries: &[CorpusEntry]) -> Result<Vec<CorpusOutcome>> {
    entries.iter().map(check_entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_has_ten_entries() {
        let c = bundled_corpus();
        assert_eq!(c.len(), 10);
        assert_eq!(c[0].document.graph.vertex_count(), 2);
        assert!(c
            .iter()
            .all(|e| e.document.graph.is_unweighted() && e.document.graph.is_connected()));
    }

    #[test]
    fn small_entries_pass() {
        let c = bundled_corpus();
        for e in &c[..4] {
            let out = check_entry(e).unwrap();
            assert!(out.passed, "{}: {:?}", out.name, out);
        }
        // P4 carries its polynomials on the end pair
        let p4 = check_entry(&c[1]).unwrap();
        assert!(p4.matching_pairs.contains(&(1, 3)));
    }

    #[test]
    fn wrong_polynomials_are_reported() {
        let mut e = bundled_corpus().remove(1);
        e.p_minus = UniPoly::parse("x^2 + x + 1").unwrap();
        let out = check_entry(&e).unwrap();
        assert!(!out.passed && out.matching_pairs.is_empty());
        assert!(out.mismatch.is_some());
    }
}
