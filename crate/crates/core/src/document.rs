//! JSON graph documents.
//!
//! ```json
//! {"edges":[[1,2,"1"],[2,3,"3/2"]],"loops":[[3,"-1"]],"n":3,"name":"demo","pair":[1,3]}
//! ```
//!
//! Vertices are 1-indexed. Weights are strings holding an integer or `p/q`;
//! bare JSON integers are accepted on input, floats never are. Canonical
//! output has sorted keys, sorted edges with `u < v`, lowest-terms weights
//! and no whitespace.

use serde::{Deserialize, Serialize};

use crate::algebra::rational::format_rational;
use crate::algebra::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;

enum WeightRepr {
    Text(String),
    Integer(i64),
}

impl<'de> Deserialize<'de> for WeightRepr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = WeightRepr;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a weight written as an integer or a \"p/q\" string")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<WeightRepr, E> {
                Ok(WeightRepr::Text(v.to_owned()))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<WeightRepr, E> {
                Ok(WeightRepr::Integer(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<WeightRepr, E> {
                i64::try_from(v)
                    .map(WeightRepr::Integer)
                    .map_err(|_| E::custom("integer weight too large; write it as a string"))
            }
            fn visit_f64<E: serde::de::Error>(self, v: f64) -> std::result::Result<WeightRepr, E> {
                Err(E::custom(format!(
                    "floating-point weight {v}; write it exactly as a \"p/q\" string"
                )))
            }
        }
        d.deserialize_any(Visitor)
    }
}

impl WeightRepr {
    fn value(&self) -> Result<Rational> {
        match self {
            WeightRepr::Text(s) => parse_rational(s),
            WeightRepr::Integer(v) => Ok(Rational::from_integer((*v).into())),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    #[serde(default)]
    edges: Vec<(usize, usize, WeightRepr)>,
    #[serde(default)]
    loops: Vec<(usize, WeightRepr)>,
    n: usize,
    #[serde(default)]
    name: String,
    #[serde(default)]
    pair: Option<(usize, usize)>,
}

// field order is the canonical key order
#[derive(Serialize)]
struct RawOutput<'a> {
    edges: Vec<(usize, usize, String)>,
    loops: Vec<(usize, String)>,
    n: usize,
    name: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<(usize, usize)>,
}

/// A named graph with an optional marked pair, held 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    pub graph: Graph,
    pub pair: Option<(usize, usize)>,
}

fn one_based(v: usize, n: usize, what: &str) -> Result<usize> {
    if v == 0 || v > n {
        Err(Error::Parse(format!("{what}: vertex {v} is outside 1..={n}")))
    } else {
        Ok(v - 1)
    }
}

impl GraphDocument {
    pub fn new(name: impl Into<String>, graph: Graph, pair: Option<(usize, usize)>) -> Result<Self> {
        if let Some((x, y)) = pair {
            graph.check_vertex(x)?;
            graph.check_vertex(y)?;
        }
        Ok(GraphDocument {
            name: name.into(),
            graph,
            pair,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawInput = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = raw.n;
        let mut graph = Graph::new(n);
        for (i, (u, v, w)) in raw.edges.iter().enumerate() {
            let what = format!("edge {}", i + 1);
            let (a, b) = (one_based(*u, n, &what)?, one_based(*v, n, &what)?);
            let w = w.value().map_err(|e| Error::Parse(format!("{what}: {e}")))?;
            graph
                .add_edge(a, b, w)
                .map_err(|e| Error::Parse(format!("{what}: {e}")))?;
        }
        for (i, (v, w)) in raw.loops.iter().enumerate() {
            let what = format!("loop {}", i + 1);
            let a = one_based(*v, n, &what)?;
            let w = w.value().map_err(|e| Error::Parse(format!("{what}: {e}")))?;
            graph.add_loop(a, w).map_err(|e| Error::Parse(format!("{what}: {e}")))?;
        }
        let pair = match raw.pair {
            Some((x, y)) => Some((one_based(x, n, "pair")?, one_based(y, n, "pair")?)),
            None => None,
        };
        Ok(GraphDocument {
            name: raw.name,
            graph,
            pair,
        })
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Canonical single-line JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let raw = RawOutput {
            edges: self
                .graph
                .edges()
                .map(|(u, v, w)| (u + 1, v + 1, format_rational(w)))
                .collect(),
            loops: self.graph.loops().map(|(v, w)| (v + 1, format_rational(w))).collect(),
            n: self.graph.vertex_count(),
            name: &self.name,
            pair: self.pair.map(|(x, y)| (x + 1, y + 1)),
        };
        let mut out = serde_json::to_string(&raw).expect("document serialization cannot fail");
        out.push('\n');
        out
    }
}
