//! Finite Jaco-type digraphs.
//!
//! `J_n({a_i})` has vertices `v1..vn` and an arc `(v_i, v_j)` exactly when
//! `i < j <= i + a_i`, truncated at `n`. The out-neighbourhood of every vertex
//! is therefore the index interval `[i+1, out_hi(i)]`, and that interval end
//! is the only adjacency data stored.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde_json::json;

use crate::error::{JacoError, Result};
use crate::seqgen::SequenceSpec;

/// Read-only view of a simple undirected graph.
///
/// Vertex arguments here are 0-based positions (`v1` is position 0). Every
/// algorithm in this crate reports vertices back as 1-based labels.
pub trait UndirectedGraph {
    fn order(&self) -> usize;

    fn adjacent(&self, u: usize, v: usize) -> bool;

    /// Neighbourhood bitsets, one per vertex.
    fn neighbor_sets(&self) -> Vec<FixedBitSet> {
        let n = self.order();
        (0..n)
            .map(|u| {
                let mut s = FixedBitSet::with_capacity(n);
                for v in 0..n {
                    if u != v && self.adjacent(u, v) {
                        s.insert(v);
                    }
                }
                s
            })
            .collect()
    }

    fn edge_count(&self) -> usize {
        let n = self.order();
        (0..n)
            .map(|u| (u + 1..n).filter(|&v| self.adjacent(u, v)).count())
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexDegree {
    pub vertex: usize,
    pub in_degree: usize,
    pub out_degree: usize,
}

impl VertexDegree {
    pub fn total(&self) -> usize {
        self.in_degree + self.out_degree
    }
}

#[derive(Debug, Clone)]
pub struct JacoTypeGraph {
    spec: SequenceSpec,
    terms: Vec<u64>,
    // out_hi[i - 1] = min(i + a_i, n)
    out_hi: Vec<usize>,
    in_lists: OnceLock<Vec<Vec<usize>>>,
}

impl JacoTypeGraph {
    /// Builds `J_n` over the given sequence.
    pub fn build(spec: &SequenceSpec, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(JacoError::invalid("graph order must be at least 1"));
        }
        spec.validate()?;
        let terms = spec.terms(n)?;
        Ok(Self::from_parts(spec.clone(), terms))
    }

    fn from_parts(spec: SequenceSpec, terms: Vec<u64>) -> Self {
        let n = terms.len();
        let out_hi = terms
            .iter()
            .enumerate()
            .map(|(pos, &a)| {
                let i = pos + 1;
                let reach = (n - i) as u64;
                i + a.min(reach) as usize
            })
            .collect();
        JacoTypeGraph {
            spec,
            terms,
            out_hi,
            in_lists: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    /// Sequence terms a_1..a_n (Fibonacci terms saturate at `u64::MAX`).
    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Last out-neighbour index of `v_i` (equals `i` when it has none).
    pub fn out_hi(&self, i: usize) -> usize {
        self.out_hi[i - 1]
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(JacoError::invalid(format!(
                "vertex v{i} not in 1..={}",
                self.n()
            )));
        }
        Ok(())
    }

    pub fn has_arc(&self, i: usize, j: usize) -> Result<bool> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(i < j && j <= self.out_hi[i - 1])
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out_hi[i - 1] - i
    }

    fn in_lists(&self) -> &Vec<Vec<usize>> {
        self.in_lists.get_or_init(|| {
            let mut lists = vec![Vec::new(); self.n()];
            for (pos, &hi) in self.out_hi.iter().enumerate() {
                for j in pos + 2..=hi {
                    lists[j - 1].push(pos + 1);
                }
            }
            lists
        })
    }

    /// In-neighbours of `v_j` in ascending order.
    pub fn in_neighbors(&self, j: usize) -> &[usize] {
        &self.in_lists()[j - 1]
    }

    pub fn in_degree(&self, j: usize) -> usize {
        self.in_neighbors(j).len()
    }

    pub fn degrees(&self) -> Vec<VertexDegree> {
        (1..=self.n())
            .map(|i| VertexDegree {
                vertex: i,
                in_degree: self.in_degree(i),
                out_degree: self.out_degree(i),
            })
            .collect()
    }

    /// Arcs in ascending `(i, j)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_hi
            .iter()
            .enumerate()
            .flat_map(|(pos, &hi)| (pos + 2..=hi).map(move |j| (pos + 1, j)))
    }

    pub fn arc_count(&self) -> usize {
        self.out_hi
            .iter()
            .enumerate()
            .map(|(pos, &hi)| hi - (pos + 1))
            .sum()
    }

    /// `J_{n+1}` over the same sequence; `self` is left untouched.
    pub fn extend(&self) -> Result<Self> {
        let next = self.n() as u64 + 1;
        let mut terms = self.terms.clone();
        terms.push(self.spec.term_saturating(next)?);
        Ok(Self::from_parts(self.spec.clone(), terms))
    }

    /// Maximum total degree and the vertices attaining it.
    pub fn jaconian_set(&self) -> (usize, Vec<usize>) {
        let degrees = self.degrees();
        let max = degrees.iter().map(VertexDegree::total).max().unwrap_or(0);
        let set = degrees
            .iter()
            .filter(|d| d.total() == max)
            .map(|d| d.vertex)
            .collect();
        (max, set)
    }

    /// Smallest index with an arc to `v_n`, if any.
    pub fn prime_jaconian_vertex(&self) -> Option<usize> {
        self.in_neighbors(self.n()).first().copied()
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.terms.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::EdgeList => self.to_edge_list(),
            ExportFormat::Json => self.to_json(),
        }
    }

    fn to_dot(&self) -> String {
        let mut out = String::from("digraph J {\n");
        for i in 1..=self.n() {
            out.push_str(&format!("  v{i};\n"));
        }
        for (i, j) in self.arcs() {
            out.push_str(&format!("  v{i} -> v{j};\n"));
        }
        out.push_str("}\n");
        out
    }

    fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, j) in self.arcs() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    fn to_json(&self) -> String {
        let terms: Vec<serde_json::Value> = (1..=self.n())
            .map(|i| match self.spec.term_big(i as u64) {
                // arbitrary_precision keeps Fibonacci terms past 64 bits exact
                Ok(big) => serde_json::from_str(&big.to_string())
                    .unwrap_or_else(|_| json!(self.terms[i - 1])),
                Err(_) => json!(self.terms[i - 1]),
            })
            .collect();
        let arcs: Vec<[usize; 2]> = self.arcs().map(|(i, j)| [i, j]).collect();
        let doc = json!({
            "n": self.n(),
            "terms": terms,
            "arc_count": arcs.len(),
            "arcs": arcs,
            "spec": self.spec,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("graph json");
        s.push('\n');
        s
    }
}

impl UndirectedGraph for JacoTypeGraph {
    fn order(&self) -> usize {
        self.n()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        lo != hi && hi < self.out_hi[lo]
    }

    fn neighbor_sets(&self) -> Vec<FixedBitSet> {
        let n = self.n();
        let mut sets = vec![FixedBitSet::with_capacity(n); n];
        for (pos, &hi) in self.out_hi.iter().enumerate() {
            // out-interval is positions pos+1 .. hi-1
            sets[pos].insert_range(pos + 1..hi);
            for q in pos + 1..hi {
                sets[q].insert(pos);
            }
        }
        sets
    }

    fn edge_count(&self) -> usize {
        self.arc_count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
    Json,
}

impl FromStr for ExportFormat {
    type Err = JacoError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "edge-list" => Ok(ExportFormat::EdgeList),
            "json" => Ok(ExportFormat::Json),
            other => Err(JacoError::invalid(format!(
                "unknown export format `{other}`"
            ))),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Dot => "dot",
            ExportFormat::EdgeList => "edge-list",
            ExportFormat::Json => "json",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1(n: usize) -> JacoTypeGraph {
        JacoTypeGraph::build(&SequenceSpec::PositiveIntegers, n).unwrap()
    }

    fn s2(n: usize) -> JacoTypeGraph {
        JacoTypeGraph::build(&SequenceSpec::Fibonacci, n).unwrap()
    }

    #[test]
    fn edge_counts_from_tables() {
        assert_eq!(s1(8).edge_count(), 16);
        assert_eq!(s2(5).edge_count(), 5);
        let s3 = JacoTypeGraph::build(&SequenceSpec::modulo(5), 4).unwrap();
        assert_eq!(s3.edge_count(), 4);
        let single = JacoTypeGraph::build(&SequenceSpec::Fibonacci, 1).unwrap();
        assert_eq!(single.arc_count(), 0);
        assert!(JacoTypeGraph::build(&SequenceSpec::Fibonacci, 0).is_err());
    }

    #[test]
    fn arc_queries() {
        let g = s1(8);
        assert!(g.has_arc(3, 6).unwrap());
        assert!(!g.has_arc(3, 7).unwrap());
        assert!(!g.has_arc(6, 3).unwrap());
        assert!(s2(12).has_arc(4, 7).unwrap());
        assert!(g.has_arc(0, 1).is_err());
        assert!(g.has_arc(1, 9).is_err());
    }

    #[test]
    fn degree_examples() {
        let g = s1(8);
        let d = g.degrees();
        assert_eq!(d[3].total(), 6);
        // in-neighbours of v9 in J_9(s2): j + f_j >= 9 for j in {5,6,7,8}
        assert_eq!(s2(9).in_neighbors(9), &[5, 6, 7, 8]);
        let s3 = JacoTypeGraph::build(&SequenceSpec::modulo(5), 13).unwrap();
        assert_eq!(s3.in_neighbors(13), &[9, 12]);
    }

    #[test]
    fn extension() {
        let g8 = s1(8);
        let g9 = g8.extend().unwrap();
        assert_eq!(g9.n(), 9);
        for i in 1..=8 {
            assert_eq!(g8.in_degree(i), g9.in_degree(i));
        }
        assert_eq!(g8.n(), 8);

        let lone = JacoTypeGraph::build(&SequenceSpec::explicit(vec![0, 5]), 1).unwrap();
        assert!(!lone.extend().unwrap().has_arc(1, 2).unwrap());
        let lone = JacoTypeGraph::build(&SequenceSpec::explicit(vec![1, 5]), 1).unwrap();
        assert!(lone.extend().unwrap().has_arc(1, 2).unwrap());
        assert!(matches!(
            JacoTypeGraph::build(&SequenceSpec::explicit(vec![1]), 1)
                .unwrap()
                .extend(),
            Err(JacoError::IndexOutOfRange { .. })
        ));

        let g12 = s2(11).extend().unwrap();
        assert_eq!(g12.in_degree(12), 6);
    }

    #[test]
    fn jaconian_examples() {
        assert_eq!(s1(8).jaconian_set(), (6, vec![4]));
        assert_eq!(s2(12).jaconian_set(), (8, vec![6, 7]));
        assert_eq!(s2(1).jaconian_set(), (0, vec![1]));
    }

    #[test]
    fn exports() {
        assert_eq!(s1(2).export(ExportFormat::EdgeList).trim(), "1 2");
        let dot = s1(3).export(ExportFormat::Dot);
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(edges, vec!["  v1 -> v2;", "  v2 -> v3;"]);
        assert!(dot.starts_with("digraph J {"));
        let js: serde_json::Value =
            serde_json::from_str(&s1(8).export(ExportFormat::Json)).unwrap();
        assert_eq!(js["arc_count"], 16);
        assert_eq!(js["arcs"].as_array().unwrap().len(), 16);
        assert_eq!(js["n"], 8);
        assert_eq!(js["spec"]["family"], "positive-integers");
        assert!("svg".parse::<ExportFormat>().is_err());
    }

    #[test]
    fn json_keeps_big_fibonacci_terms() {
        let g = s2(95);
        let js = g.export(ExportFormat::Json);
        assert!(js.contains("19740274219868223167"));
    }

    #[test]
    fn neighbor_sets_agree_with_adjacency() {
        for spec in [
            SequenceSpec::PositiveIntegers,
            SequenceSpec::modulo(4),
            SequenceSpec::explicit(vec![3, 0, 2, 1, 0, 4, 1, 1]),
        ] {
            let g = JacoTypeGraph::build(&spec, 8).unwrap();
            let sets = g.neighbor_sets();
            for u in 0..8 {
                for v in 0..8 {
                    assert_eq!(sets[u].contains(v), g.adjacent(u, v), "{spec} {u} {v}");
                    let arc = g.has_arc(u + 1, v + 1).unwrap() || g.has_arc(v + 1, u + 1).unwrap();
                    assert_eq!(arc, g.adjacent(u, v));
                }
            }
        }
    }
}
