//! Exact classical invariants and induced-pattern detectors.
//!
//! Every search here works on single-word bitsets, so graphs are limited to
//! 64 vertices. The exponential detectors are meant for graphs of at most
//! a few dozen vertices; callers enforce tighter caps through
//! [`SearchLimits`](crate::SearchLimits).
//!
//! All searches visit vertices in ascending index order, so returned
//! witnesses are reproducible.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{low_bits, mask_to_vec, Bits, Graph};
use crate::witness::{HalfGraphWitness, MultipartiteWitness};

/// A maximum clique, found by Bron–Kerbosch with Tomita pivoting and a size
/// bound.
pub fn maximum_clique(graph: &Graph) -> Result<Vec<usize>> {
    let open = graph.open_masks("clique search")?;
    let mut best = 0u64;
    clique_expand(&open, 0, low_bits(graph.vertex_count()), 0, &mut best);
    Ok(mask_to_vec(best))
}

pub fn clique_number(graph: &Graph) -> Result<usize> {
    Ok(maximum_clique(graph)?.len())
}

fn clique_expand(open: &[u64], clique: u64, mut cand: u64, mut excluded: u64, best: &mut u64) {
    if cand == 0 {
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
        return;
    }
    if clique.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    let pivot = Bits(cand | excluded)
        .max_by_key(|&u| ((cand & open[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("cand is non-empty");
    for v in Bits(cand & !open[pivot]) {
        clique_expand(open, clique | 1 << v, cand & open[v], excluded & open[v], best);
        cand &= !(1 << v);
        excluded |= 1 << v;
    }
}

/// Exact chromatic number by DSATUR branch and bound.
///
/// The bound starts from a greedy DSATUR colouring and the search stops as
/// soon as it meets the clique number.
pub fn chromatic_number(graph: &Graph) -> Result<usize> {
    let open = graph.open_masks("colouring search")?;
    let n = graph.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let lower = clique_number(graph)?;
    let mut search = Dsatur {
        open: &open,
        colour: vec![None; n],
        best: n,
        lower,
    };
    search.best = search.greedy();
    search.colour.iter_mut().for_each(|c| *c = None);
    if search.best > lower {
        search.branch(0);
    }
    Ok(search.best)
}

struct Dsatur<'a> {
    open: &'a [u64],
    colour: Vec<Option<usize>>,
    best: usize,
    lower: usize,
}

impl Dsatur<'_> {
    fn forbidden(&self, v: usize) -> u64 {
        Bits(self.open[v])
            .filter_map(|u| self.colour[u])
            .fold(0, |acc, c| acc | 1 << c)
    }

    /// Uncoloured vertex of maximum saturation, then maximum uncoloured
    /// degree, then smallest index.
    fn select(&self) -> Option<usize> {
        let uncoloured: u64 = (0..self.colour.len())
            .filter(|&v| self.colour[v].is_none())
            .fold(0, |acc, v| acc | 1 << v);
        Bits(uncoloured).max_by_key(|&v| {
            (
                self.forbidden(v).count_ones(),
                (self.open[v] & uncoloured).count_ones(),
                std::cmp::Reverse(v),
            )
        })
    }

    fn greedy(&mut self) -> usize {
        let mut used = 0;
        while let Some(v) = self.select() {
            let c = (!self.forbidden(v)).trailing_zeros() as usize;
            self.colour[v] = Some(c);
            used = used.max(c + 1);
        }
        used
    }

    fn branch(&mut self, used: usize) {
        if used >= self.best {
            return;
        }
        let Some(v) = self.select() else {
            self.best = used;
            return;
        };
        let forbidden = self.forbidden(v);
        for c in 0..=used.min(self.best.saturating_sub(2)) {
            if forbidden & (1 << c) != 0 {
                continue;
            }
            self.colour[v] = Some(c);
            self.branch(used.max(c + 1));
            self.colour[v] = None;
            if self.best == self.lower {
                return;
            }
        }
    }
}

/// `|E| / C(n, 2)` as an exact fraction.
pub fn density(graph: &Graph) -> Result<Ratio<u64>> {
    let n = graph.vertex_count() as u64;
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "density needs at least 2 vertices, graph has {n}"
        )));
    }
    Ok(Ratio::new(graph.edge_count() as u64, n * (n - 1) / 2))
}

/// Whether the graph contains `K_{m,n}` as a (not necessarily induced)
/// subgraph: disjoint `A`, `B` with `|A| = m`, `|B| = n` and every cross pair
/// adjacent.
pub fn has_kmn_subgraph(graph: &Graph, m: usize, n: usize) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "K_{{m,n}} needs m, n >= 1, got m={m}, n={n}"
        )));
    }
    let open = graph.open_masks("K_{m,n} search")?;
    let (small, large) = (m.min(n), m.max(n));
    if small + large > graph.vertex_count() {
        return Ok(false);
    }
    Ok(kmn_extend(&open, small, large, low_bits(open.len()), 0, 0))
}

/// Picks the smaller side `A` vertex by vertex, keeping the common
/// neighborhood; `A`'s own vertices never lie in it.
fn kmn_extend(open: &[u64], small: usize, large: usize, common: u64, chosen: usize, from: usize) -> bool {
    if chosen == small {
        return common.count_ones() as usize >= large;
    }
    for v in from..open.len() {
        if (open[v].count_ones() as usize) < large {
            continue;
        }
        let next = common & open[v];
        if (next.count_ones() as usize) < large {
            continue;
        }
        if kmn_extend(open, small, large, next, chosen + 1, v + 1) {
            return true;
        }
    }
    false
}

/// An induced `K_r(t)`, if present.
///
/// Parts are listed by increasing smallest vertex and each part is sorted,
/// which makes every copy of the pattern have exactly one representation.
pub fn induced_multipartite(graph: &Graph, r: usize, t: usize) -> Result<Option<MultipartiteWitness>> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!(
            "K_r(t) needs r, t >= 1, got r={r}, t={t}"
        )));
    }
    let open = graph.open_masks("multipartite search")?;
    let mut search = MultipartiteSearch {
        open: &open,
        r,
        t,
        parts: Vec::with_capacity(r),
    };
    let all = low_bits(open.len());
    Ok(search
        .next_part(all, 0)
        .then_some(MultipartiteWitness { parts: search.parts }))
}

struct MultipartiteSearch<'a> {
    open: &'a [u64],
    r: usize,
    t: usize,
    parts: Vec<Vec<usize>>,
}

impl MultipartiteSearch<'_> {
    /// `cand` holds the vertices adjacent to everything chosen so far; the
    /// next part must start at or above `start`.
    fn next_part(&mut self, cand: u64, start: usize) -> bool {
        if self.parts.len() == self.r {
            return true;
        }
        if (cand.count_ones() as usize) < (self.r - self.parts.len()) * self.t {
            return false;
        }
        for v in Bits(cand & !low_bits(start)) {
            let mut part = vec![v];
            let pool = cand & !self.open[v] & !low_bits(v + 1);
            if self.grow_part(&mut part, pool, cand & self.open[v]) {
                return true;
            }
        }
        false
    }

    fn grow_part(&mut self, part: &mut Vec<usize>, pool: u64, common: u64) -> bool {
        if part.len() == self.t {
            self.parts.push(part.clone());
            if self.next_part(common, part[0] + 1) {
                return true;
            }
            self.parts.pop();
            return false;
        }
        for u in Bits(pool) {
            part.push(u);
            let next_pool = pool & !self.open[u] & !low_bits(u + 1);
            if self.grow_part(part, next_pool, common & self.open[u]) {
                return true;
            }
            part.pop();
        }
        false
    }
}

/// Largest height `n` of an induced half-graph assignment, with a witness.
///
/// A height-`n` assignment is `2n` distinct vertices `a_1..a_n`, `b_1..b_n`
/// with `a_i ~ b_j` exactly when `i >= j`. Edges inside each side are ignored
/// unless `bipartite_only` is set, in which case both sides must be
/// independent (induced `H_n`). With `cap` the search stops once height `cap`
/// is reached and returns `min(height, cap)`.
///
/// Every prefix `(a_1..a_k, b_1..b_k)` of a witness is itself a witness of
/// height `k`, so the search extends one `(a, b)` pair at a time.
pub fn half_graph_height(
    graph: &Graph,
    bipartite_only: bool,
    cap: Option<usize>,
) -> Result<(usize, Option<HalfGraphWitness>)> {
    let open = graph.open_masks("half-graph search")?;
    let mut search = HalfGraphSearch {
        open: &open,
        bipartite: bipartite_only,
        cap: cap.unwrap_or(usize::MAX),
        a: Vec::new(),
        b: Vec::new(),
        best: None,
    };
    if search.cap > 0 {
        let all = low_bits(open.len());
        search.extend(all, all);
    }
    let witness = search.best;
    Ok((witness.as_ref().map_or(0, |w| w.height), witness))
}

struct HalfGraphSearch<'a> {
    open: &'a [u64],
    bipartite: bool,
    cap: usize,
    a: Vec<usize>,
    b: Vec<usize>,
    best: Option<HalfGraphWitness>,
}

impl HalfGraphSearch<'_> {
    fn best_height(&self) -> usize {
        self.best.as_ref().map_or(0, |w| w.height)
    }

    fn done(&self) -> bool {
        self.best_height() >= self.cap
    }

    /// `a_cand`: vertices adjacent to every chosen b (and, in bipartite mode,
    /// to no chosen a). `b_cand`: vertices adjacent to no chosen a (and, in
    /// bipartite mode, to no chosen b).
    fn extend(&mut self, a_cand: u64, b_cand: u64) {
        let k = self.a.len();
        if k > self.best_height() {
            self.best = Some(HalfGraphWitness {
                height: k,
                a_vertices: self.a.clone(),
                b_vertices: self.b.clone(),
            });
        }
        if self.done() {
            return;
        }
        let room = (a_cand.count_ones())
            .min(b_cand.count_ones())
            .min((a_cand | b_cand).count_ones() / 2) as usize;
        if k + room <= self.best_height() {
            return;
        }
        for a in Bits(a_cand) {
            for b in Bits(b_cand & self.open[a]) {
                let used = !(1u64 << a | 1 << b);
                let mut next_a = a_cand & self.open[b] & used;
                let mut next_b = b_cand & !self.open[a] & used;
                if self.bipartite {
                    next_a &= !self.open[a];
                    next_b &= !self.open[b];
                }
                self.a.push(a);
                self.b.push(b);
                self.extend(next_a, next_b);
                self.a.pop();
                self.b.pop();
                if self.done() {
                    return;
                }
            }
        }
    }
}

/// True iff no induced half-graph of height `k` or more exists.
pub fn is_edge_stable(graph: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter("edge stability needs k >= 1".into()));
    }
    let (height, _) = half_graph_height(graph, false, Some(k))?;
    Ok(height < k)
}
