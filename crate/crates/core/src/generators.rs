//! Generators for the witness families: half-graphs, complete multipartite
//! graphs, the abstract marking graph and a seeded random model.

use num_rational::Ratio;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Adjacency among the transversals of a marking graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EtaAdjacency {
    /// No two transversals adjacent.
    None,
    /// Every pair of transversals adjacent.
    #[default]
    All,
    /// `η_i ~ η_j` iff `|i - j| >= 2`.
    Path,
}

impl EtaAdjacency {
    pub const ALL_OPTIONS: [EtaAdjacency; 3] = [EtaAdjacency::None, EtaAdjacency::All, EtaAdjacency::Path];
}

/// A generator family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphFamily {
    HalfGraph {
        n: usize,
    },
    BipartiteHalfGraph {
        n: usize,
    },
    Multipartite {
        r: usize,
        t: usize,
    },
    Marking {
        g: u32,
        p: u32,
        eta: EtaAdjacency,
    },
    Complete {
        n: usize,
    },
    Edgeless {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Random {
        n: usize,
        edge_probability: Ratio<u64>,
        seed: u64,
    },
}

impl GraphFamily {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphFamily::HalfGraph { n } => half_graph(n, false),
            GraphFamily::BipartiteHalfGraph { n } => half_graph(n, true),
            GraphFamily::Multipartite { r, t } => multipartite(r, t),
            GraphFamily::Marking { g, p, eta } => marking_graph(g, p, eta),
            GraphFamily::Complete { n } => Ok(complete(n)),
            GraphFamily::Edgeless { n } => Ok(Graph::edgeless(n)),
            GraphFamily::Cycle { n } => cycle(n),
            GraphFamily::Random {
                n,
                edge_probability,
                seed,
            } => random(n, edge_probability, seed),
        }
    }
}

/// Half-graph of height `n`: vertices `0..n` are `a_1..a_n`, `n..2n` are
/// `b_1..b_n`, and `a_i ~ b_j` iff `i >= j`.
///
/// With `bipartite` set both sides are independent (this is `H_n`).
/// Otherwise the a-side is a clique and the b-side stays independent.
pub fn half_graph(n: usize, bipartite: bool) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("half-graph height must be at least 1".into()));
    }
    Ok(Graph::from_fn(2 * n, |u, v| {
        // u < v always
        match (u < n, v < n) {
            (true, true) => !bipartite,
            (false, false) => false,
            (true, false) => u >= v - n,
            (false, true) => unreachable!(),
        }
    }))
}

/// Complete `r`-partite graph with parts of size `t`. Vertex `v` lies in
/// part `v / t`.
pub fn multipartite(r: usize, t: usize) -> Result<Graph> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!(
            "multipartite needs r >= 1 and t >= 1, got r={r}, t={t}"
        )));
    }
    Ok(Graph::from_fn(r * t, |u, v| u / t != v / t))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_fn(n, |u, v| v - u == 1 || (u == 0 && v == n - 1)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v - u == 1)
}

/// Abstract model of a maximal multicurve `γ_1..γ_ξ` with transversals
/// `η_1..η_ξ`, where `ξ = 3g - 3 + p`.
///
/// Vertices `0..ξ` are the `γ_i`, `ξ..2ξ` the `η_i`. The γ's form a clique,
/// `γ_i ~ η_j` iff `i != j`, and η–η edges follow `eta`.
pub fn marking_graph(g: u32, p: u32, eta: EtaAdjacency) -> Result<Graph> {
    let (g64, p64) = (u64::from(g), u64::from(p));
    if 2 * g64 + p64 <= 2 || 3 * g64 + p64 < 5 {
        return Err(Error::InvalidParameter(format!(
            "marking graph needs 2g+p > 2 and 3g+p >= 5, got g={g}, p={p}"
        )));
    }
    let xi = (3 * g64 + p64 - 3) as usize;
    Ok(Graph::from_fn(2 * xi, |u, v| match (u < xi, v < xi) {
        (true, true) => true,
        (true, false) => u != v - xi,
        (false, false) => match eta {
            EtaAdjacency::None => false,
            EtaAdjacency::All => true,
            EtaAdjacency::Path => v - u >= 2,
        },
        (false, true) => unreachable!(),
    }))
}

/// Seeded Erdős–Rényi graph.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Pairs `(u, v)`
/// with `u < v` are visited with `v` ascending in the outer loop and `u`
/// ascending in the inner loop (the graph6 bit order). Each pair consumes one
/// `next_u64()` word `x`, and the edge is present iff
/// `(x * den) >> 64 < num` computed in 128-bit arithmetic, where
/// `edge_probability = num/den`. Probabilities 0 and 1 are exact.
pub fn random(n: usize, edge_probability: Ratio<u64>, seed: u64) -> Result<Graph> {
    let (num, den) = (*edge_probability.numer(), *edge_probability.denom());
    if num > den {
        return Err(Error::InvalidParameter(format!(
            "edge probability {num}/{den} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Graph::from_fn(n, |_, _| {
        let x = rng.next_u64();
        (((x as u128) * (den as u128)) >> 64) < num as u128
    }))
}
