//! The PGST decision pipeline.
//!
//! Steps, first hit wins: strong cospectrality, the irreducible sufficient
//! condition, the odd-degree obstruction, the three-factor obstruction, an
//! exact search for odd relations constant on factors, and finally the
//! numeric lattice search, which only ever yields evidence. Every emitted
//! certificate is re-verified before it is returned.

pub mod certificate;
pub mod lll;
pub mod relation;
pub mod roots;
pub mod search;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

pub use certificate::{Certificate, FactorRelation, RelationTerm, Side};
pub use relation::{heuristic_relation_search, IntegerRelation, Parity};
pub use search::{
    enumerate_three_factor, factor_relation_search, obstruction_odd_degree, obstruction_three_factor, pgst_sufficient,
    PairFactors, SearchOutcome, SideFactors,
};

use crate::error::Result;
use crate::graph::Graph;
use crate::spectra::{CospectralityReport, RelativeMinPolyPair, SpectralContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    PgstCertified,
    NoPgstCertified,
    NotStronglyCospectral,
    UndecidedEvidenceFor,
    UndecidedEvidenceAgainst,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::PgstCertified => "PGST_CERTIFIED",
            Status::NoPgstCertified => "NO_PGST_CERTIFIED",
            Status::NotStronglyCospectral => "NOT_STRONGLY_COSPECTRAL",
            Status::UndecidedEvidenceFor => "UNDECIDED_EVIDENCE_FOR",
            Status::UndecidedEvidenceAgainst => "UNDECIDED_EVIDENCE_AGAINST",
            Status::Undecided => "UNDECIDED",
        }
    }

    pub fn is_certified(self) -> bool {
        matches!(
            self,
            Status::PgstCertified | Status::NoPgstCertified | Status::NotStronglyCospectral
        )
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The step of the pipeline that produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    StrongCospectrality,
    IrreducibleSufficient,
    OddDegreeFactors,
    ThreeFactor,
    FactorRelation,
    RootRelation,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::StrongCospectrality => "strong-cospectrality",
            Rule::IrreducibleSufficient => "irreducible-sufficient",
            Rule::OddDegreeFactors => "odd-degree-factors",
            Rule::ThreeFactor => "three-factor",
            Rule::FactorRelation => "factor-relation",
            Rule::RootRelation => "root-relation",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Rule::StrongCospectrality => "x and y are not strongly cospectral",
            Rule::IrreducibleSufficient => {
                "P+ and P- are irreducible with different trace/degree ratios"
            }
            Rule::OddDegreeFactors => {
                "odd-degree factors of P+ and P- share a trace/degree ratio"
            }
            Rule::ThreeFactor => {
                "f g divides one side with odd tr(f) and odd tr(f)deg(g) - tr(g)deg(f); h is an odd-degree factor of the other"
            }
            Rule::FactorRelation => "an odd integer relation constant on irreducible factors",
            Rule::RootRelation => "lattice search over numerically computed roots",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct DecideOptions {
    /// Run the numeric lattice search when the exact steps are silent.
    pub heuristic: bool,
    /// Decimal digits for the lattice search, at least 30.
    pub precision: u32,
    pub coeff_bound: BigInt,
    /// Cap on sub-product combinations per obstruction search.
    pub max_combinations: u64,
    /// The lattice search is skipped when `deg P+ + deg P-` exceeds this.
    pub max_relation_dim: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        Self {
            heuristic: true,
            precision: 60,
            coeff_bound: BigInt::from(1_000_000),
            max_combinations: 1 << 20,
            max_relation_dim: 24,
        }
    }
}

impl DecideOptions {
    pub fn exact_only() -> Self {
        Self {
            heuristic: false,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PgstVerdict {
    pub x: usize,
    pub y: usize,
    pub status: Status,
    pub rule: Option<Rule>,
    pub certificate: Option<Certificate>,
    pub evidence: Option<IntegerRelation>,
    pub pair: RelativeMinPolyPair,
    pub cospectrality: CospectralityReport,
    pub search_truncated: bool,
    pub notes: Vec<String>,
}

impl PgstVerdict {
    /// Re-verifies the certificate, if any, against the stored `P+`, `P-`.
    pub fn verify(&self) -> Result<()> {
        match &self.certificate {
            Some(c) => c.verify(&self.pair.plus, &self.pair.minus),
            None => Ok(()),
        }
    }
}

pub fn decide_pgst(g: &Graph, x: usize, y: usize, options: &DecideOptions) -> Result<PgstVerdict> {
    decide_with_context(&SpectralContext::new(g), x, y, options)
}

/// As [`decide_pgst`], reusing the cached polynomials of `ctx`.
pub fn decide_with_context(
    ctx: &SpectralContext<'_>,
    x: usize,
    y: usize,
    options: &DecideOptions,
) -> Result<PgstVerdict> {
    let (pair, cospectrality) = ctx.pair_and_report(x, y)?;
    let mut verdict = PgstVerdict {
        x,
        y,
        status: Status::Undecided,
        rule: None,
        certificate: None,
        evidence: None,
        pair,
        cospectrality,
        search_truncated: false,
        notes: Vec::new(),
    };
    if !verdict.cospectrality.strongly_cospectral {
        verdict.status = Status::NotStronglyCospectral;
        verdict.rule = Some(Rule::StrongCospectrality);
        return Ok(verdict);
    }
    let factors = PairFactors::new(&verdict.pair)?;

    let certify = |mut v: PgstVerdict, status, rule, cert: Certificate| -> Result<PgstVerdict> {
        cert.verify(&v.pair.plus, &v.pair.minus)?;
        v.status = status;
        v.rule = Some(rule);
        v.certificate = Some(cert);
        Ok(v)
    };

    if let Some(c) = pgst_sufficient(&factors) {
        return certify(verdict, Status::PgstCertified, Rule::IrreducibleSufficient, c);
    }
    let odd = obstruction_odd_degree(&factors, options.max_combinations);
    verdict.search_truncated |= odd.truncated;
    if let Some(c) = odd.certificate {
        return certify(verdict, Status::NoPgstCertified, Rule::OddDegreeFactors, c);
    }
    let three = obstruction_three_factor(&factors, options.max_combinations);
    verdict.search_truncated |= three.truncated;
    if let Some(c) = three.certificate {
        return certify(verdict, Status::NoPgstCertified, Rule::ThreeFactor, c);
    }
    if let Some(c) = factor_relation_search(&factors) {
        return certify(verdict, Status::NoPgstCertified, Rule::FactorRelation, c);
    }

    let dim = verdict.pair.plus.deg() + verdict.pair.minus.deg();
    if !options.heuristic {
        verdict.notes.push("numeric relation search disabled".into());
        return Ok(verdict);
    }
    if dim > options.max_relation_dim {
        verdict.notes.push(format!(
            "numeric relation search skipped: {dim} roots exceed the limit of {}",
            options.max_relation_dim
        ));
        return Ok(verdict);
    }
    let found = relation::search_relations(&factors, options.precision, &options.coeff_bound)?;
    verdict.rule = Some(Rule::RootRelation);
    match found.best().cloned() {
        Some(rel) if rel.sum_m_parity == Parity::Odd => {
            if let Some(fr) = rel.to_factor_relation(&factors) {
                let cert = Certificate::FactorRelation(fr);
                if cert.verify(&verdict.pair.plus, &verdict.pair.minus).is_ok() {
                    verdict.evidence = Some(rel);
                    return certify(verdict, Status::NoPgstCertified, Rule::FactorRelation, cert);
                }
            }
            verdict.status = Status::UndecidedEvidenceAgainst;
            verdict.evidence = Some(rel);
        }
        other => {
            verdict.status = Status::UndecidedEvidenceFor;
            verdict.notes.push(format!(
                "{} relation(s) recovered at {} digits, none with odd sum over P- roots",
                found.relations.len(),
                options.precision
            ));
            verdict.evidence = other;
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UniPoly;
    use crate::graph::families::*;

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    fn decide(g: &Graph, x: usize, y: usize) -> PgstVerdict {
        let v = decide_pgst(g, x, y, &DecideOptions::default()).unwrap();
        v.verify().unwrap();
        v
    }

    #[test]
    fn worked_examples() {
        let v = decide(&path(8), 0, 7);
        assert_eq!(
            (v.status, v.rule),
            (Status::NoPgstCertified, Some(Rule::OddDegreeFactors))
        );
        let v = decide(&path(4), 0, 3);
        assert_eq!(
            (v.status, v.rule),
            (Status::PgstCertified, Some(Rule::IrreducibleSufficient))
        );
        let v = decide(&complete_bipartite(2, 2), 0, 1);
        assert_eq!(v.status, Status::UndecidedEvidenceFor);
        let v = decide(&complete(3), 0, 1);
        assert_eq!(v.status, Status::NotStronglyCospectral);
        let v = decide(&wheel(4), 0, 2);
        assert_eq!(
            v.certificate,
            Some(Certificate::OddDegree {
                f_plus: p("x^3 - 8x - 8"),
                f_minus: p("x")
            })
        );
    }

    #[test]
    fn double_star_uses_three_factors() {
        let v = decide(&double_star(2), 2, 3);
        assert_eq!((v.status, v.rule), (Status::NoPgstCertified, Some(Rule::ThreeFactor)));
        assert_eq!(v.pair.plus, p("x - 2") * p("x - 1") * p("x + 1") * p("x + 2"));
        assert_eq!(v.pair.minus, p("x"));
    }

    #[test]
    fn exact_only_stops_before_the_lattice() {
        let v = decide_pgst(&complete_bipartite(2, 2), 0, 1, &DecideOptions::exact_only()).unwrap();
        assert_eq!(v.status, Status::Undecided);
        assert!(v.evidence.is_none());
    }
}
