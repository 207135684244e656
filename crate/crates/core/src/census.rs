//! Census of small connected unweighted loopless graphs, up to
//! isomorphism, for vertex pairs certified by the irreducible-sufficient
//! rule.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a
//! vertex joined to a nonempty subset; every connected graph has a vertex
//! whose removal keeps it connected, so nothing is missed. Duplicates are
//! removed by canonical code.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::UniPoly;
use crate::engine::{pgst_sufficient, PairFactors};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::SpectralContext;

pub const MAX_CENSUS_N: usize = 8;
pub const DEFAULT_CENSUS_N: usize = 7;

/// Unweighted graph on at most 11 vertices as adjacency bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: usize,
    adj: [u16; 11],
}

impl SmallGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 11, "SmallGraph holds at most 11 vertices");
        SmallGraph { n, adj: [0; 11] }
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        if g.vertex_count() > 11 || !g.is_unweighted() {
            return Err(Error::Precondition(
                "need an unweighted loopless graph on at most 11 vertices".into(),
            ));
        }
        let mut s = SmallGraph::new(g.vertex_count());
        for (u, v, _) in g.edges() {
            s.add_edge(u, v);
        }
        Ok(s)
    }

    /// Inverse of [`SmallGraph::code`].
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut s = SmallGraph::new(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if code >> bit & 1 == 1 {
                    s.add_edge(i, j);
                }
                bit += 1;
            }
        }
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Upper-triangle adjacency bits in row order.
    pub fn code(&self) -> u64 {
        self.code_in(&(0..self.n).collect::<Vec<_>>())
    }

    /// The code after relabelling vertex `order[k]` as `k`.
    fn code_in(&self, order: &[usize]) -> u64 {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(order[i], order[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect();
        Graph::from_edges(self.n, &edges).expect("edges are in range")
    }

    /// Colour refinement to a stable colouring. Colours are ranks of
    /// sorted signatures, so the result is isomorphism invariant.
    fn refine(&self, colours: &mut Vec<usize>) {
        loop {
            let classes = colours.iter().max().map_or(0, |m| m + 1);
            let sigs: Vec<(usize, Vec<usize>)> = (0..self.n)
                .map(|v| {
                    let mut counts = vec![0; classes];
                    for u in 0..self.n {
                        if self.has_edge(v, u) {
                            counts[colours[u]] += 1;
                        }
                    }
                    (colours[v], counts)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
            let done = distinct.len() == classes;
            *colours = next;
            if done {
                return;
            }
        }
    }

    fn search(&self, colours: Vec<usize>, best: &mut (u64, Vec<usize>)) {
        let mut colours = colours;
        self.refine(&mut colours);
        let mut size = vec![0usize; self.n];
        for &c in &colours {
            size[c] += 1;
        }
        // first colour class with more than one vertex
        match (0..self.n).find(|&c| size[c] > 1) {
            None => {
                let mut order = vec![0; self.n];
                for (v, &c) in colours.iter().enumerate() {
                    order[c] = v;
                }
                let code = self.code_in(&order);
                if code < best.0 || best.1.is_empty() {
                    *best = (code, order);
                }
            }
            Some(target) => {
                for v in (0..self.n).filter(|&v| colours[v] == target) {
                    // v comes first within its class
                    let next: Vec<usize> = colours
                        .iter()
                        .enumerate()
                        .map(|(u, &c)| {
                            if c > target || (c == target && u != v) {
                                c + 1
                            } else {
                                c
                            }
                        })
                        .collect();
                    self.search(next, best);
                }
            }
        }
    }

    /// Minimum code over the leaves of the individualization-refinement
    /// tree, with the labelling that attains it: `order[k]` becomes `k`.
    pub fn canonical_form(&self) -> (u64, Vec<usize>) {
        let mut best = (u64::MAX, Vec::new());
        if self.n == 0 {
            return (0, Vec::new());
        }
        self.search(vec![0; self.n], &mut best);
        best
    }

    pub fn canonical_code(&self) -> u64 {
        self.canonical_form().0
    }
}

/// All connected graphs on `n` vertices up to isomorphism, as canonical
/// codes, ascending.
pub fn connected_graphs(n: usize) -> Vec<u64> {
    let mut level: Vec<u64> = vec![0];
    for k in 2..=n {
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let parent = SmallGraph::from_code(k - 1, code);
                (1u32..1 << (k - 1)).map(move |subset| {
                    let mut child = parent;
                    child.n = k;
                    for u in 0..k - 1 {
                        if subset >> u & 1 == 1 {
                            child.add_edge(u, k - 1);
                        }
                    }
                    child.canonical_code()
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        level
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifiedPair {
    /// Vertices in the canonical labelling, 0-indexed.
    pub x: usize,
    pub y: usize,
    pub p_plus: UniPoly,
    pub p_minus: UniPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusHit {
    pub n: usize,
    pub edge_count: usize,
    pub code: u64,
    /// Canonically labelled edges, 0-indexed.
    pub edges: Vec<(usize, usize)>,
    pub pairs: Vec<CertifiedPair>,
}

impl CensusHit {
    pub fn graph(&self) -> Graph {
        SmallGraph::from_code(self.n, self.code).to_graph()
    }
}

/// Pairs `x < y` of `g` where `P+`, `P-` are irreducible with unequal
/// trace-to-degree ratios and the pair is strongly cospectral.
pub fn certified_pairs(g: &Graph) -> Result<Vec<CertifiedPair>> {
    let ctx = SpectralContext::new(g);
    let mut out = Vec::new();
    for x in 0..g.vertex_count() {
        for y in x + 1..g.vertex_count() {
            if !ctx.is_cospectral(x, y)? {
                continue;
            }
            let (pair, report) = ctx.pair_and_report(x, y)?;
            if !report.strongly_cospectral {
                continue;
            }
            if pgst_sufficient(&PairFactors::new(&pair)?).is_some() {
                out.push(CertifiedPair {
                    x,
                    y,
                    p_plus: pair.plus,
                    p_minus: pair.minus,
                });
            }
        }
    }
    Ok(out)
}

/// Hits for `2 <= n <= max_n`, sorted by `(n, edge count, code)`.
pub fn census(max_n: usize) -> Result<Vec<CensusHit>> {
    if !(2..=MAX_CENSUS_N).contains(&max_n) {
        return Err(Error::Precondition(format!(
            "census size must lie in 2..={MAX_CENSUS_N}, got {max_n}"
        )));
    }
    let mut hits: Vec<CensusHit> = Vec::new();
    for n in 2..=max_n {
        let found: Result<Vec<Option<CensusHit>>> = connected_graphs(n)
            .par_iter()
            .map(|&code| {
                let s = SmallGraph::from_code(n, code);
                let g = s.to_graph();
                let pairs = certified_pairs(&g)?;
                Ok((!pairs.is_empty()).then(|| CensusHit {
                    n,
                    edge_count: s.edge_count(),
                    code,
                    edges: g.edges().map(|(u, v, _)| (u, v)).collect(),
                    pairs,
                }))
            })
            .collect();
        hits.extend(found?.into_iter().flatten());
    }
    hits.sort_by_key(|h| (h.n, h.edge_count, h.code));
    Ok(hits)
}

/// Counts of hits per vertex count.
pub fn hit_counts(hits: &[CensusHit]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for h in hits {
        *m.entry(h.n).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete_bipartite, cycle, path};

    #[test]
    fn canonical_code_ignores_labelling() {
        let g = SmallGraph::from_graph(&cycle(6)).unwrap();
        let h = SmallGraph::from_graph(&cycle(6).permute(&[3, 0, 5, 1, 4, 2])).unwrap();
        assert_eq!(g.canonical_code(), h.canonical_code());
        let (code, order) = g.canonical_form();
        let mut relabelled = SmallGraph::new(6);
        for i in 0..6 {
            for j in i + 1..6 {
                if g.has_edge(order[i], order[j]) {
                    relabelled.add_edge(i, j);
                }
            }
        }
        assert_eq!(relabelled.code(), code);
        let p = SmallGraph::from_graph(&path(6)).unwrap();
        assert_ne!(p.canonical_code(), g.canonical_code());
        let k = SmallGraph::from_graph(&complete_bipartite(3, 3)).unwrap();
        let prism = SmallGraph::from_graph(
            &Graph::from_edges(
                6,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
            )
            .unwrap(),
        )
        .unwrap();
        // both cubic on six vertices
        assert_ne!(k.canonical_code(), prism.canonical_code());
    }

    #[test]
    fn connected_graph_counts() {
        // number of connected graphs on n unlabelled vertices
        let want = [1, 1, 2, 6, 21, 112];
        for (n, &w) in (1..=6).zip(&want) {
            assert_eq!(connected_graphs(n).len(), w, "n = {n}");
        }
    }

    #[test]
    fn small_census() {
        let hits = census(4).unwrap();
        assert_eq!(hits.iter().filter(|h| h.n == 2).count(), 1);
        assert!(hits.iter().any(|h| h.n == 4 && h.edge_count == 3 && {
            let g = h.graph();
            (0..4).all(|v| g.degree(v) <= 2)
        }));
        assert!(census(9).is_err() && census(1).is_err());
    }
}
