//! Dense simple undirected graphs with bitset adjacency rows.

mod canon;
mod graph6;
mod surgery;

pub(crate) use canon::refine_cells;
pub use canon::{canonical_form, canonical_labeling, CanonicalLabeling};
pub use graph6::{from_graph6, to_graph6};
pub use surgery::{coalesce, rewire, subdivide_edge};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 512;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterates the set bit positions of a word slice in increasing order.
pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// A simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParams("graph order must be positive".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let twice: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        twice / 2
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a bitset over vertex indices.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Sets or clears an edge without validation. Callers guarantee `u != v`
    /// and both indices in range.
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (wu, bu) = (u * self.words + v / 64, 1u64 << (v % 64));
        let (wv, bv) = (v * self.words + u / 64, 1u64 << (u % 64));
        if on {
            self.bits[wu] |= bu;
            self.bits[wv] |= bv;
        } else {
            self.bits[wu] &= !bu;
            self.bits[wv] &= !bv;
        }
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.set_edge(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        self.set_edge(u, v, false);
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Adjacency lists, used by the numeric kernels.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices at distance exactly `d` from `u` (`N^d(u)`); `d = 0` gives `{u}`.
    pub fn neighborhood(&self, u: usize, d: usize) -> Result<VertexSet> {
        self.check(u)?;
        Ok(VertexSet::new(
            self.distances(u)
                .iter()
                .enumerate()
                .filter(|(_, dv)| **dv == Some(d))
                .map(|(v, _)| v),
        ))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `m - n + c`, the number of independent cycles.
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + self.components().len() - self.n
    }

    pub fn is_forest(&self) -> bool {
        self.cyclomatic_number() == 0
    }

    /// Subgraph induced by `set`; vertex `i` of the result is `set[i]`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        for &v in set.iter() {
            self.check(v)?;
        }
        let members = set.as_slice();
        let mut h = Graph::new(members.len().max(1))?;
        if members.is_empty() {
            return Err(Error::BadParams("induced subgraph of an empty set".into()));
        }
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.set_edge(i, j, true);
                }
            }
        }
        Ok(h)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut h = Graph::new(self.n).expect("order already validated");
        for (u, v) in self.edges() {
            h.set_edge(perm[u], perm[v], true);
        }
        h
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let mut h = Graph::new(self.n).expect("order already validated");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.set_edge(u, v, true);
                }
            }
        }
        h
    }

    /// Copy with `extra` isolated vertices appended.
    pub fn with_order(&self, n: usize) -> Result<Graph> {
        if n < self.n {
            return Err(Error::BadParams(format!(
                "cannot shrink order {} to {n}",
                self.n
            )));
        }
        let mut h = Graph::new(n)?;
        for (u, v) in self.edges() {
            h.set_edge(u, v, true);
        }
        Ok(h)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

/// A set of vertex indices, kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sum_is_twice_size() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        assert_eq!(g.size(), 5);
    }

    #[test]
    fn rejects_loops_and_bad_indices() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::LoopEdge(1)));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(Graph::new(513), Err(Error::OrderTooLarge(513))));
        assert!(Graph::new(0).is_err());
    }

    #[test]
    fn neighborhoods_by_distance() {
        let p = Graph::path(5).unwrap();
        assert_eq!(p.neighborhood(0, 0).unwrap().as_slice(), &[0]);
        assert_eq!(p.neighborhood(2, 1).unwrap().as_slice(), &[1, 3]);
        assert_eq!(p.neighborhood(2, 2).unwrap().as_slice(), &[0, 4]);
        assert!(p.neighborhood(0, 7).unwrap().is_empty());
    }

    #[test]
    fn components_and_forest() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
        assert!(!g.is_connected());
        assert_eq!(g.cyclomatic_number(), 1);
        assert!(Graph::path(7).unwrap().is_forest());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let k4 = Graph::complete(4).unwrap();
        let h = k4.induced_subgraph(&VertexSet::new([3, 1, 2])).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 3);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut g = Graph::new(130).unwrap();
        g.add_edge(0, 129).unwrap();
        g.add_edge(63, 64).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(63).collect::<Vec<_>>(), vec![64]);
        assert_eq!(g.edge_list(), vec![(0, 129), (63, 64)]);
    }
}
