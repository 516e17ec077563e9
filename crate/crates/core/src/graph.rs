//! Immutable simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Each adjacency row is a single `u64`, so neighbourhood intersection and
//! clique search are word operations. Vertices are `0..order`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Distance value used for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {order} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("edge mask needs {needed} bits, more than the 64 available")]
    MaskTooWide { needed: usize },
}

/// Which auxiliary graph [`Graph::derived`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DerivedKind {
    /// `uv` is an edge iff `d(u, v) = 2`.
    DistanceExactlyTwo,
    /// `uv` is an edge iff `u != v` and they share a neighbour.
    CommonNeighbor,
    /// `uv` is an edge iff `1 <= d(u, v) <= 2`; this is the square `G²`.
    DistanceAtMostTwo,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Number of unordered vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order });
        }
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    /// Complete graph on `order` vertices.
    pub fn complete(order: usize) -> Result<Self, GraphError> {
        Ok(Graph::empty(order)?.complement())
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// collapsed.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds the graph whose edge set is encoded by `mask`, bit `i` standing
    /// for the `i`-th pair in [`Graph::pairs`] order (column-major upper
    /// triangle, the same order graph6 uses). Bits beyond the pair count are
    /// ignored.
    pub fn from_edge_mask(order: usize, mask: u64) -> Result<Self, GraphError> {
        let needed = pair_count(order);
        if needed > 64 {
            return Err(GraphError::MaskTooWide { needed });
        }
        let mut g = Graph::empty(order)?;
        let mut idx = 0;
        for v in 1..order {
            for u in 0..v {
                if mask & bit(idx) != 0 {
                    g.rows[u] |= bit(v);
                    g.rows[v] |= bit(u);
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when the order has more
    /// than 64 vertex pairs.
    pub fn edge_mask(&self) -> Option<u64> {
        if pair_count(self.order) > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (idx, (u, v)) in Graph::pairs(self.order).enumerate() {
            if self.has_edge(u, v) {
                mask |= bit(idx);
            }
        }
        Some(mask)
    }

    /// All unordered pairs `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn pairs(order: usize) -> impl Iterator<Item = (usize, usize)> {
        (1..order).flat_map(|v| (0..v).map(move |u| (u, v)))
    }

    pub(crate) fn from_rows_unchecked(order: usize, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), order);
        Graph { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Adjacency row of `v` as a bit set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Iterator over the neighbours of `v` in increasing order.
    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> {
        BitIter(self.rows[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| BitIter(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.order);
        let rows = (0..self.order)
            .map(|v| !self.rows[v] & all & !bit(v))
            .collect();
        Graph::from_rows_unchecked(self.order, rows)
    }

    /// Breadth-first distances between all pairs.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.order;
        let mut dist = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let mut seen = bit(s);
            let mut frontier = bit(s);
            let mut level = 0u32;
            while frontier != 0 {
                for v in BitIter(frontier) {
                    dist[s * n + v] = level;
                }
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.rows[v];
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                level += 1;
            }
        }
        DistanceMatrix { order: n, dist }
    }

    /// The auxiliary graph on the same vertex set selected by `kind`.
    pub fn derived(&self, kind: DerivedKind) -> Graph {
        let n = self.order;
        let rows = (0..n)
            .map(|u| {
                let mut row = 0u64;
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    let common = self.rows[u] & self.rows[v] != 0;
                    let adjacent = self.has_edge(u, v);
                    let keep = match kind {
                        DerivedKind::DistanceExactlyTwo => common && !adjacent,
                        DerivedKind::CommonNeighbor => common,
                        DerivedKind::DistanceAtMostTwo => common || adjacent,
                    };
                    if keep {
                        row |= bit(v);
                    }
                }
                row
            })
            .collect();
        Graph::from_rows_unchecked(n, rows)
    }

    /// The square graph `G²`.
    pub fn square(&self) -> Graph {
        self.derived(DerivedKind::DistanceAtMostTwo)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        DegreeStats {
            max_degree,
            min_degree,
            is_regular: max_degree == min_degree,
            degrees,
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.rows[u] & self.rows[v] == 0)
    }

    /// True when every vertex of `set` is pairwise adjacent.
    pub fn is_clique(&self, set: u64) -> bool {
        BitIter(set).all(|v| self.rows[v] & set == set & !bit(v))
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: u64) -> bool {
        BitIter(set).all(|v| self.rows[v] & set == 0)
    }
}

/// All-pairs shortest path lengths; [`UNREACHABLE`] across components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Raw entry, [`UNREACHABLE`] for disconnected pairs.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.raw(u, v) {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Largest finite distance, `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if self.dist.contains(&UNREACHABLE) {
            None
        } else {
            Some(self.dist.iter().copied().max().unwrap_or(0))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub degrees: Vec<usize>,
    pub is_regular: bool,
}

/// Iterates over the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}
