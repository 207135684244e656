//! Rationally weighted simple graphs with optional weighted loops.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Vertices are `0..n`. At most one edge per unordered pair and one loop
/// per vertex; stored weights are never zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeMap<(usize, usize), Rational>,
    loops: BTreeMap<usize, Rational>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            ..Default::default()
        }
    }

    /// Unweighted graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v, Rational::one())?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v, self.n))
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: Rational) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("edge ({u}, {u}) is a loop; use add_loop")));
        }
        if weight.is_zero() {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has zero weight")));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
        }
        self.edges.insert(key, weight);
        Ok(())
    }

    pub fn add_loop(&mut self, v: usize, weight: Rational) -> Result<()> {
        self.check_vertex(v)?;
        if weight.is_zero() {
            return Err(Error::InvalidGraph(format!("loop at {v} has zero weight")));
        }
        if self.loops.contains_key(&v) {
            return Err(Error::InvalidGraph(format!("duplicate loop at {v}")));
        }
        self.loops.insert(v, weight);
        Ok(())
    }

    /// Edge weight, zero when absent. `weight(v, v)` is the loop weight.
    pub fn weight(&self, u: usize, v: usize) -> Rational {
        if u == v {
            return self.loops.get(&u).cloned().unwrap_or_else(Rational::zero);
        }
        self.edges
            .get(&(u.min(v), u.max(v)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains_key(&(u.min(v), u.max(v)))
    }

    /// Edges as `(u, v, weight)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.edges.iter().map(|(&(u, v), w)| (u, v, w))
    }

    pub fn loops(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.loops.iter().map(|(&v, w)| (v, w))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.keys().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_unweighted(&self) -> bool {
        self.loops.is_empty() && self.edges.values().all(One::is_one)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn adjacency(&self) -> RationalMatrix {
        let mut a = RationalMatrix::zeros(self.n);
        for (&(u, v), w) in &self.edges {
            a[(u, v)] = w.clone();
            a[(v, u)] = w.clone();
        }
        for (&v, w) in &self.loops {
            a[(v, v)] = w.clone();
        }
        a
    }

    /// Graph whose adjacency matrix is `a`; fails unless `a` is symmetric.
    pub fn from_adjacency(a: &RationalMatrix) -> Result<Self> {
        if !a.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut g = Self::new(a.dim());
        for i in 0..a.dim() {
            if !a[(i, i)].is_zero() {
                g.add_loop(i, a[(i, i)].clone())?;
            }
            for j in i + 1..a.dim() {
                if !a[(i, j)].is_zero() {
                    g.add_edge(i, j, a[(i, j)].clone())?;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut g = Self::new(self.n);
        for (u, v, w) in self.edges() {
            g.add_edge(perm[u], perm[v], w.clone())
                .expect("permutation is a bijection");
        }
        for (v, w) in self.loops() {
            g.add_loop(perm[v], w.clone()).expect("permutation is a bijection");
        }
        g
    }
}

/// Standard unweighted families, vertices numbered from 0.
pub mod families {
    use super::Graph;

    /// `P_n`: `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n > 2 {
            edges.push((0, n - 1));
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        Graph::from_edges(a + b, &edges).unwrap()
    }

    /// `C_n` joined to a hub; rim `0..n`, hub `n`.
    pub fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (0..rim).map(|v| (v, rim)).collect();
        edges.extend(cycle(rim).edges().map(|(u, v, _)| (u, v)));
        Graph::from_edges(rim + 1, &edges).unwrap()
    }

    /// Two adjacent centres `0` and `1`, each carrying `leaves` pendant
    /// vertices: centre 0 gets `2..2+leaves`, centre 1 the rest.
    pub fn double_star(leaves: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        for k in 0..leaves {
            edges.push((0, 2 + k));
            edges.push((1, 2 + leaves + k));
        }
        Graph::from_edges(2 + 2 * leaves, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frac, rat};

    #[test]
    fn rejects_invalid_edges() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 0, rat(1)).is_err());
        assert!(g.add_edge(0, 1, rat(0)).is_err());
        assert!(g.add_edge(0, 5, rat(1)).is_err());
        g.add_edge(0, 1, frac(1, 2)).unwrap();
        assert!(g.add_edge(1, 0, rat(1)).is_err());
        assert!(g.add_loop(2, rat(0)).is_err());
        g.add_loop(2, rat(3)).unwrap();
        assert!(g.add_loop(2, rat(1)).is_err());
        assert_eq!(g.weight(1, 0), frac(1, 2));
        assert_eq!(g.weight(2, 2), rat(3));
        assert!(!g.is_unweighted());
    }

    #[test]
    fn adjacency_round_trip() {
        let mut g = families::wheel(4);
        g.add_loop(4, frac(-2, 3)).unwrap();
        let a = g.adjacency();
        assert!(a.is_symmetric());
        assert_eq!(Graph::from_adjacency(&a).unwrap(), g);
        assert_eq!(g.degree(4), 4);
        assert!(g.is_connected());
        assert!(!Graph::new(2).is_connected());
    }

    #[test]
    fn families_have_expected_sizes() {
        assert_eq!(families::path(5).edge_count(), 4);
        assert_eq!(families::cycle(4).edge_count(), 4);
        assert_eq!(families::complete(4).edge_count(), 6);
        assert_eq!(families::complete_bipartite(2, 2).edge_count(), 4);
        assert_eq!(families::wheel(4).edge_count(), 8);
        let h = families::double_star(2);
        assert_eq!((h.vertex_count(), h.edge_count()), (6, 5));
    }
}
