//! Witness types and their validators.
//!
//! The validators only use `Graph::has_edge` and plain loops. They share no
//! code with the searches that produce the witnesses.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// An induced half-graph assignment. `a_vertices[i]` is `a_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfGraphWitness {
    pub height: usize,
    pub a_vertices: Vec<usize>,
    pub b_vertices: Vec<usize>,
}

/// The parts of an induced `K_r(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteWitness {
    pub parts: Vec<Vec<usize>>,
}

impl HalfGraphWitness {
    /// Checks the cross-edge rule `a_i ~ b_j iff i >= j`, distinctness, and in
    /// bipartite mode that both sides are independent.
    pub fn validate(&self, graph: &Graph, bipartite: bool) -> Result<(), String> {
        let n = self.height;
        if self.a_vertices.len() != n || self.b_vertices.len() != n {
            return Err(format!(
                "height {n} but {} a-vertices and {} b-vertices",
                self.a_vertices.len(),
                self.b_vertices.len()
            ));
        }
        let all: Vec<usize> = self.a_vertices.iter().chain(&self.b_vertices).copied().collect();
        check_distinct_in_range(graph, &all)?;
        for (i, &a) in self.a_vertices.iter().enumerate() {
            for (j, &b) in self.b_vertices.iter().enumerate() {
                if graph.has_edge(a, b) != (i >= j) {
                    return Err(format!(
                        "a_{} = {a} and b_{} = {b}: edge {} but pattern requires {}",
                        i + 1,
                        j + 1,
                        if graph.has_edge(a, b) { "present" } else { "absent" },
                        if i >= j { "an edge" } else { "no edge" },
                    ));
                }
            }
        }
        if bipartite {
            for side in [&self.a_vertices, &self.b_vertices] {
                check_independent(graph, side)?;
            }
        }
        Ok(())
    }
}

impl MultipartiteWitness {
    /// Checks `r` disjoint parts of size `t`, each independent, with every
    /// cross pair adjacent.
    pub fn validate(&self, graph: &Graph, r: usize, t: usize) -> Result<(), String> {
        if self.parts.len() != r {
            return Err(format!("expected {r} parts, found {}", self.parts.len()));
        }
        if let Some(part) = self.parts.iter().find(|p| p.len() != t) {
            return Err(format!("part {part:?} does not have size {t}"));
        }
        let all: Vec<usize> = self.parts.iter().flatten().copied().collect();
        check_distinct_in_range(graph, &all)?;
        for part in &self.parts {
            check_independent(graph, part)?;
        }
        for (i, p) in self.parts.iter().enumerate() {
            for q in &self.parts[i + 1..] {
                for &u in p {
                    for &v in q {
                        if !graph.has_edge(u, v) {
                            return Err(format!("missing cross edge {u}-{v}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Checks that `vertices` are distinct and pairwise adjacent.
pub fn validate_clique(graph: &Graph, vertices: &[usize]) -> Result<(), String> {
    check_distinct_in_range(graph, vertices)?;
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if !graph.has_edge(u, v) {
                return Err(format!("{u} and {v} are not adjacent"));
            }
        }
    }
    Ok(())
}

fn check_distinct_in_range(graph: &Graph, vertices: &[usize]) -> Result<(), String> {
    for (i, &v) in vertices.iter().enumerate() {
        if v >= graph.vertex_count() {
            return Err(format!("vertex {v} out of range"));
        }
        if vertices[..i].contains(&v) {
            return Err(format!("vertex {v} used twice"));
        }
    }
    Ok(())
}

fn check_independent(graph: &Graph, vertices: &[usize]) -> Result<(), String> {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if graph.has_edge(u, v) {
                return Err(format!("{u} and {v} are adjacent inside one side"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn half_graph_self_witness() {
        let h = generators::half_graph(3, true).unwrap();
        let w = HalfGraphWitness {
            height: 3,
            a_vertices: vec![0, 1, 2],
            b_vertices: vec![3, 4, 5],
        };
        assert_eq!(w.validate(&h, true), Ok(()));
        let swapped = HalfGraphWitness {
            a_vertices: vec![1, 0, 2],
            ..w.clone()
        };
        assert!(swapped.validate(&h, false).is_err());
        let g = generators::half_graph(3, false).unwrap();
        assert_eq!(w.validate(&g, false), Ok(()));
        assert!(w.validate(&g, true).is_err());
    }

    #[test]
    fn multipartite_checks() {
        let c4 = generators::cycle(4).unwrap();
        let ok = MultipartiteWitness {
            parts: vec![vec![0, 2], vec![1, 3]],
        };
        assert_eq!(ok.validate(&c4, 2, 2), Ok(()));
        let bad = MultipartiteWitness {
            parts: vec![vec![0, 1], vec![2, 3]],
        };
        assert!(bad.validate(&c4, 2, 2).is_err());
        assert!(ok.validate(&c4, 3, 2).is_err());
    }

    #[test]
    fn clique_checks() {
        let k4 = generators::complete(4);
        assert_eq!(validate_clique(&k4, &[0, 1, 3]), Ok(()));
        assert!(validate_clique(&k4, &[0, 0]).is_err());
        assert!(validate_clique(&generators::cycle(4).unwrap(), &[0, 2]).is_err());
    }
}
