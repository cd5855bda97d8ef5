//! Nested complexity length.
//!
//! A sequence `(b_1, …, b_n)` is a nested complexity sequence when every
//! prefix `b_1..b_k` (`k < n`) has a witness `a_k` with
//! `b_1, …, b_k ∈ N[a_k]` and `b_{k+1} ∉ N[a_k]`. `NCL(G)` is the longest
//! such sequence.
//!
//! The `b_i` are automatically distinct: `b_{k+1} ∉ N[a_k]` while every
//! earlier `b_i` lies in `N[a_k]`, so `b_{k+1}` cannot repeat one of them.
//!
//! # Exact algorithm
//!
//! For a vertex set `S` let `D(S) = ⋂_{b ∈ S} N[b]`, the vertices whose
//! closed neighborhood contains all of `S`. A prefix with vertex set `S` can
//! be extended by `v` iff some `a ∈ D(S)` misses `v`, i.e. `D(S) ⊄ N[v]`.
//! This depends on `S` alone, not on the order of the prefix, so the number
//! of further extensions `f(S)` is memoized over subsets:
//!
//! ```text
//! f(S) = max over valid v of 1 + f(S ∪ {v})      (0 if none)
//! NCL  = max over v of 1 + f({v})
//! ```
//!
//! `D` is carried down the recursion as `D(S ∪ {v}) = D(S) ∩ N[v]`. The memo
//! is a dense byte table with `2^n` entries, so `n` is capped
//! ([`DEFAULT_VERTEX_CAP`] unless overridden).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{low_bits, Bits, Graph};
use crate::invariants::has_kmn_subgraph;

pub const DEFAULT_VERTEX_CAP: usize = 24;
/// Hard limit for the dense memo table (a 4 GiB table at 32 vertices).
pub const MAX_VERTEX_CAP: usize = 32;
pub const NAIVE_VERTEX_CAP: usize = 8;

/// A nested complexity sequence with explicit witnesses. Serializes as
/// `{"b": [...], "a": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedComplexitySequence {
    #[serde(rename = "b")]
    pub b_sequence: Vec<usize>,
    #[serde(rename = "a")]
    pub a_witnesses: Vec<usize>,
}

impl NestedComplexitySequence {
    pub fn len(&self) -> usize {
        self.b_sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b_sequence.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NclOutcome {
    pub value: usize,
    pub certificate: Option<NestedComplexitySequence>,
}

/// Bytes used by the memo table for a graph on `n` vertices.
pub fn memo_bytes(n: usize) -> u64 {
    1u64 << n
}

/// Exact NCL with the default vertex cap.
pub fn ncl_exact(graph: &Graph, want_certificate: bool) -> Result<NclOutcome> {
    ncl_exact_with_cap(graph, want_certificate, DEFAULT_VERTEX_CAP)
}

/// Exact NCL. The empty graph has NCL 0 (supremum of the empty set) and no
/// certificate.
///
/// The certificate is the lexicographically least optimal b-sequence, each
/// witness being the smallest valid vertex.
pub fn ncl_exact_with_cap(graph: &Graph, want_certificate: bool, cap: usize) -> Result<NclOutcome> {
    let n = graph.vertex_count();
    let cap = cap.min(MAX_VERTEX_CAP);
    if n > cap {
        return Err(Error::TooLarge {
            what: "exact NCL",
            vertex_count: n,
            cap,
        });
    }
    if n == 0 {
        return Ok(NclOutcome {
            value: 0,
            certificate: None,
        });
    }
    let closed = graph.closed_masks()?;
    let mut table = NclTable {
        closed: &closed,
        all: low_bits(n),
        memo: vec![UNKNOWN; 1 << n],
    };
    let value = (0..n)
        .map(|v| 1 + table.extensions(1 << v, closed[v]) as usize)
        .max()
        .expect("n >= 1");
    let certificate = want_certificate.then(|| table.certificate(value));
    Ok(NclOutcome { value, certificate })
}

const UNKNOWN: u8 = u8::MAX;

struct NclTable<'a> {
    closed: &'a [u64],
    all: u64,
    memo: Vec<u8>,
}

impl NclTable<'_> {
    /// `f(set)`, where `dom = D(set)`.
    fn extensions(&mut self, set: u64, dom: u64) -> u8 {
        if dom == 0 {
            return 0;
        }
        let cached = self.memo[set as usize];
        if cached != UNKNOWN {
            return cached;
        }
        let room = (self.all & !set).count_ones() as u8;
        let mut best = 0;
        for v in Bits(self.all & !set) {
            if dom & !self.closed[v] == 0 {
                continue;
            }
            best = best.max(1 + self.extensions(set | 1 << v, dom & self.closed[v]));
            if best == room {
                break;
            }
        }
        self.memo[set as usize] = best;
        best
    }

    fn certificate(&mut self, value: usize) -> NestedComplexitySequence {
        let n = self.closed.len();
        let start = (0..n)
            .find(|&v| 1 + self.extensions(1 << v, self.closed[v]) as usize == value)
            .expect("some start attains the maximum");
        let mut b = vec![start];
        let mut a = Vec::new();
        let (mut set, mut dom) = (1u64 << start, self.closed[start]);
        let mut left = self.extensions(set, dom);
        while left > 0 {
            let v = Bits(self.all & !set)
                .find(|&v| {
                    dom & !self.closed[v] != 0 && 1 + self.extensions(set | 1 << v, dom & self.closed[v]) == left
                })
                .expect("memo is consistent");
            a.push((dom & !self.closed[v]).trailing_zeros() as usize);
            b.push(v);
            set |= 1 << v;
            dom &= self.closed[v];
            left -= 1;
        }
        NestedComplexitySequence {
            b_sequence: b,
            a_witnesses: a,
        }
    }
}

/// NCL by enumerating every vertex sequence directly from the definition.
///
/// Extensions range over all vertices (repeats included) and each step scans
/// every vertex for a witness. No state is shared with [`ncl_exact`].
pub fn ncl_naive(graph: &Graph) -> Result<usize> {
    let n = graph.vertex_count();
    if n > NAIVE_VERTEX_CAP {
        return Err(Error::TooLarge {
            what: "naive NCL",
            vertex_count: n,
            cap: NAIVE_VERTEX_CAP,
        });
    }
    fn in_closed(graph: &Graph, center: usize, v: usize) -> bool {
        center == v || graph.has_edge(center, v)
    }
    fn grow(graph: &Graph, seq: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(seq.len());
        for next in 0..graph.vertex_count() {
            let witnessed = (0..graph.vertex_count())
                .any(|a| seq.iter().all(|&b| in_closed(graph, a, b)) && !in_closed(graph, a, next));
            if witnessed {
                seq.push(next);
                grow(graph, seq, best);
                seq.pop();
            }
        }
    }
    let mut best = 0;
    for start in 0..n {
        grow(graph, &mut vec![start], &mut best);
    }
    Ok(best)
}

/// Checks a certificate clause by clause. `Ok(None)` means valid,
/// `Ok(Some(reason))` names the first failing clause, and `Err` is returned
/// for vertices outside the graph.
pub fn certificate_violation(graph: &Graph, cert: &NestedComplexitySequence) -> Result<Option<String>> {
    for &v in cert.b_sequence.iter().chain(&cert.a_witnesses) {
        graph.check_vertex(v)?;
    }
    let b = &cert.b_sequence;
    let a = &cert.a_witnesses;
    if b.is_empty() {
        return Ok(Some("b-sequence is empty".into()));
    }
    if a.len() + 1 != b.len() {
        return Ok(Some(format!(
            "{} b-vertices need {} witnesses, found {}",
            b.len(),
            b.len() - 1,
            a.len()
        )));
    }
    let in_closed = |center: usize, v: usize| center == v || graph.has_edge(center, v);
    for k in 0..a.len() {
        let witness = a[k];
        for (i, &bi) in b[..=k].iter().enumerate() {
            if !in_closed(witness, bi) {
                return Ok(Some(format!(
                    "clause {}: b_{} = {bi} is not in N[a_{}] = N[{witness}]",
                    k + 1,
                    i + 1,
                    k + 1
                )));
            }
        }
        if in_closed(witness, b[k + 1]) {
            return Ok(Some(format!(
                "clause {}: b_{} = {} lies in N[a_{}] = N[{witness}]",
                k + 1,
                k + 2,
                b[k + 1],
                k + 1
            )));
        }
    }
    Ok(None)
}

pub fn verify_certificate(graph: &Graph, cert: &NestedComplexitySequence) -> Result<bool> {
    Ok(certificate_violation(graph, cert)?.is_none())
}

/// The chain `γ_1..γ_ξ, η_1..η_ξ` with witnesses `η_2..η_ξ, γ_1..γ_ξ` on
/// [`marking_graph`](crate::generators::marking_graph) labels. It is valid for
/// every η–η adjacency option.
pub fn marking_chain(g: u32, p: u32) -> Result<NestedComplexitySequence> {
    let xi = crate::generators::marking_graph(g, p, Default::default())?.vertex_count() / 2;
    let gamma = |i: usize| i - 1;
    let eta = |i: usize| xi + i - 1;
    Ok(NestedComplexitySequence {
        b_sequence: (1..=xi).map(gamma).chain((1..=xi).map(eta)).collect(),
        a_witnesses: (2..=xi).map(eta).chain((1..=xi).map(gamma)).collect(),
    })
}

/// An excluded complete bipartite subgraph and the NCL bound
/// `2^(m+n+1) - 2` it implies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteBoundResult {
    pub m: usize,
    pub n: usize,
    pub bound: u64,
}

/// Smallest bound `2^(m+n+1) - 2` over pairs with `m + n <= search_limit` for
/// which the graph has no `K_{m,n}` subgraph (ties go to the smaller `m`).
pub fn ncl_upper_bound_bipartite(graph: &Graph, search_limit: usize) -> Result<Option<BipartiteBoundResult>> {
    if search_limit < 2 {
        return Err(Error::InvalidParameter(format!(
            "search limit must be at least 2, got {search_limit}"
        )));
    }
    for total in 2..=search_limit.min(62) {
        for m in 1..total {
            let n = total - m;
            if !has_kmn_subgraph(graph, m, n)? {
                return Ok(Some(BipartiteBoundResult {
                    m,
                    n,
                    bound: (1u64 << (total + 1)) - 2,
                }));
            }
        }
    }
    Ok(None)
}
