//! Immutable finite simple graphs.
//!
//! Vertices are the dense integers `0..vertex_count`. Adjacency is kept as one
//! bit row per vertex, so a closed neighborhood `N[v]` is a single row lookup
//! with the diagonal bit switched on.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count supported by the single-word search routines.
pub const MASK_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut graph = Graph::edgeless(vertex_count);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            graph.set_edge(u, v);
        }
        Ok(graph)
    }

    pub fn edgeless(vertex_count: usize) -> Graph {
        let words = vertex_count.div_ceil(64).max(1);
        Graph {
            vertex_count,
            words,
            rows: vec![0; words * vertex_count],
        }
    }

    /// Builds from a symmetric predicate evaluated on every pair `u < v`.
    pub(crate) fn from_fn(vertex_count: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut graph = Graph::edgeless(vertex_count);
        for v in 1..vertex_count {
            for u in 0..v {
                if adjacent(u, v) {
                    graph.set_edge(u, v);
                }
            }
        }
        graph
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Open neighborhood of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &word)| Bits(word).map(move |b| i * 64 + b))
    }

    /// `N[v] = {v} ∪ {u : uv ∈ E}` in ascending order.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.neighbors(v).collect();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        out
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Closed-neighborhood bit masks, one per vertex. Only available for
    /// graphs that fit in a single machine word.
    pub fn closed_masks(&self) -> Result<Vec<u64>> {
        let open = self.open_masks("bitset search")?;
        Ok(open.iter().enumerate().map(|(v, m)| m | (1 << v)).collect())
    }

    pub fn open_masks(&self, what: &'static str) -> Result<Vec<u64>> {
        if self.vertex_count > MASK_BITS {
            return Err(Error::TooLarge {
                what,
                vertex_count: self.vertex_count,
                cap: MASK_BITS,
            });
        }
        Ok((0..self.vertex_count).map(|v| self.rows[v * self.words]).collect())
    }

    /// The subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
        }
        let mut seen = vec![false; self.vertex_count];
        for &v in vertices {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter(format!("vertex {v} repeated")));
            }
        }
        Ok(Graph::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        }))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

/// Mask with the low `n` bits set.
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}
