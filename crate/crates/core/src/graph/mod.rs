//! Simple undirected graphs on at most 64 vertices.
//!
//! Row `i` of the adjacency array is the neighbor set of vertex `i` packed
//! into a `u64`, so every vertex-set operation is a single word operation.

pub mod canon;
mod clique;
mod coloring;
mod construct;
mod io;

use std::fmt;

use crate::error::{Error, Result};

pub use clique::{clique_number, independence_number, ExactInvariantResult, Witness};
pub use coloring::{
    chromatic_bounds, chromatic_number, greedy_erdos_coloring, is_proper_coloring, ChromaticBounds,
    ColoringCertificate, GreedyColoringStats,
};
pub use io::EdgeList;

pub(crate) use clique::has_clique_within;

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A set of vertices of a [`Graph`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn from_vertices(vs: &[usize]) -> Self {
        VertexSet(vs.iter().fold(0, |acc, &v| acc | bit(v)))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 64`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::input(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor rows; rows must be symmetric and loop-free.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::new(rows.len())?;
        let n = rows.len();
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::input(format!("row {i} has bits outside 0..{n}")));
            }
            if row & bit(i) != 0 {
                return Err(Error::input(format!("self-loop at vertex {i}")));
            }
            for j in Bits(row) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::input(format!(
                        "adjacency not symmetric at ({i},{j})"
                    )));
                }
            }
            g.adj[i] = row;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn all(&self) -> VertexSet {
        VertexSet(low_mask(self.n))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u},{v})");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.adj[u] ^= bit(v);
        self.adj[v] ^= bit(u);
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(i, j)` with `i < j`, ordered by `i` then `j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in Bits(self.adj[i] & !low_mask(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let mut adj = [0; MAX_VERTICES];
        for (i, row) in adj.iter_mut().enumerate().take(self.n) {
            *row = !self.adj[i] & mask & !bit(i);
        }
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `set`, relabeled in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph> {
        let verts: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut h = Graph::new(verts.len())?;
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(a, b);
                }
            }
        }
        Ok(h)
    }

    /// Whether `set` spans a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| v < self.n && (set.0 & !bit(v)) & !self.adj[v] == 0)
    }

    /// Whether `set` spans no edge.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| v < self.n && set.0 & self.adj[v] == 0)
    }

    /// The graph with `count` isolated vertices appended.
    pub fn with_isolated(&self, count: usize) -> Result<Graph> {
        let mut g = Graph::new(self.n + count)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        Ok(g)
    }

    pub(crate) fn raw_adj(&self) -> &[u64; MAX_VERTICES] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {})", self.n, self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_vertex_set() {
        assert!(Graph::new(0).is_err());
        assert!(Graph::new(65).is_err());
        assert!(Graph::new(64).is_ok());
    }

    #[test]
    fn from_rows_validates() {
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b100, 0b00]).is_err());
    }

    #[test]
    fn complement_and_induced() {
        let c5 = Graph::cycle(5).unwrap();
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        assert!(co.has_edge(0, 2) && !co.has_edge(0, 1));
        let h = c5.induced(VertexSet::from_vertices(&[0, 1, 2])).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn vertex_set_helpers() {
        let s = VertexSet::from_vertices(&[3, 0, 5]);
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(5) && !s.contains(4) && !s.contains(99));
    }
}
