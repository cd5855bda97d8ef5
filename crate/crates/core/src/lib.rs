//! Nested complexity length, obstruction detectors and curve-graph verdicts
//! for finite simple graphs.
//!
//! The crate answers one question about a finite graph `G` and a surface of
//! genus `g` with `p` punctures: is there a certified reason why `G` cannot
//! be an induced subgraph of the curve graph of that surface? An
//! `obstructed` verdict is always backed by a checkable certificate; the
//! absence of an obstruction proves nothing.

pub mod edgelist;
pub mod error;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod ncl;
pub mod obstruction;
pub mod surface;
pub mod witness;

pub use error::{Error, Result};
pub use graph::Graph;

/// Vertex caps for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Clique, colouring, multipartite and half-graph searches.
    pub detector_cap: usize,
    /// Exact NCL (dense `2^n` memo table).
    pub ncl_cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            detector_cap: 32,
            ncl_cap: ncl::DEFAULT_VERTEX_CAP,
        }
    }
}

impl SearchLimits {
    pub fn detectors_allow(&self, graph: &Graph) -> bool {
        graph.vertex_count() <= self.detector_cap.min(graph::MASK_BITS)
    }

    pub fn ncl_allows(&self, graph: &Graph) -> bool {
        graph.vertex_count() <= self.ncl_cap.min(ncl::MAX_VERTEX_CAP)
    }
}
