use fixedbitset::FixedBitSet;
use serde::Serialize;
use serde_json::json;

use super::bits_is_clique;
use crate::error::{JacoError, Result};
use crate::graph::UndirectedGraph;
use crate::pascal::binomial;

/// Number of l-cliques for l = 1..omega.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCensus {
    order: usize,
    counts: Vec<u64>,
    include_empty: bool,
}

impl CliqueCensus {
    /// Builds a census from counts for sizes 1, 2, ...; trailing zeros are dropped.
    pub fn from_counts(order: usize, mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        CliqueCensus {
            order,
            counts,
            include_empty: false,
        }
    }

    /// Marks the census to report the empty clique (eta of size 0 = 1) on output.
    pub fn with_empty(mut self) -> Self {
        self.include_empty = true;
        self
    }

    pub fn include_empty(&self) -> bool {
        self.include_empty
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Counts for sizes 1..=omega.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of l-cliques; size 0 is the empty clique and always counts 1.
    pub fn eta(&self, l: usize) -> u64 {
        if l == 0 {
            1
        } else {
            self.counts.get(l - 1).copied().unwrap_or(0)
        }
    }

    /// Largest size with a non-zero count.
    pub fn clique_number(&self) -> usize {
        self.counts.len()
    }

    fn rows(&self) -> Vec<(usize, u64)> {
        let start = if self.include_empty { 0 } else { 1 };
        (start..=self.counts.len())
            .map(|l| (l, self.eta(l)))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,count\n");
        for (l, c) in self.rows() {
            out.push_str(&format!("{l},{c}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let counts: Vec<u64> = self.rows().into_iter().map(|(_, c)| c).collect();
        json!({
            "order": self.order,
            "include_empty": self.include_empty,
            "counts": counts,
        })
    }
}

/// d^{K_l}(v): per-vertex clique participation counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDegreeTable {
    // degrees[v - 1][l - 1]
    degrees: Vec<Vec<u64>>,
}

impl CliqueDegreeTable {
    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    /// Largest clique size present.
    pub fn max_size(&self) -> usize {
        self.degrees.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of l-cliques containing `v` (1-based).
    pub fn get(&self, v: usize, l: usize) -> u64 {
        if l == 0 {
            return 0;
        }
        self.degrees[v - 1].get(l - 1).copied().unwrap_or(0)
    }

    pub fn row(&self, v: usize) -> Vec<u64> {
        (1..=self.max_size()).map(|l| self.get(v, l)).collect()
    }

    pub fn column_sum(&self, l: usize) -> u128 {
        (1..=self.order()).map(|v| self.get(v, l) as u128).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,l,count\n");
        for v in 1..=self.order() {
            for l in 1..=self.max_size() {
                out.push_str(&format!("{v},{l},{}\n", self.get(v, l)));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<u64>> = (1..=self.order()).map(|v| self.row(v)).collect();
        json!({ "order": self.order(), "degrees": rows })
    }
}

fn bump(slot: &mut Vec<u64>, l: usize, by: u64) -> Result<()> {
    if by == 0 {
        return Ok(());
    }
    if slot.len() < l {
        slot.resize(l, 0);
    }
    slot[l - 1] = slot[l - 1]
        .checked_add(by)
        .ok_or_else(|| JacoError::overflow(format!("clique count for size {l}")))?;
    Ok(())
}

struct Extender {
    nbrs: Vec<FixedBitSet>,
    higher: Vec<FixedBitSet>,
    cap: usize,
}

impl Extender {
    fn new<G: UndirectedGraph + ?Sized>(g: &G, cap: Option<usize>) -> Self {
        let nbrs = g.neighbor_sets();
        let n = nbrs.len();
        let higher = nbrs
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let mut h = s.clone();
                h.remove_range(..v + 1);
                h
            })
            .collect::<Vec<_>>();
        debug_assert!(higher.iter().all(|h| h.len() == n));
        Extender {
            nbrs,
            higher,
            cap: cap.unwrap_or(usize::MAX),
        }
    }

    // Cliques are grown as increasing index sequences, so each one is reached
    // from exactly one path. When the remaining candidates are pairwise
    // adjacent, every subset of them extends the current clique and the
    // counts follow in closed form.
    fn count(&self, size: usize, cand: &FixedBitSet, counts: &mut Vec<u64>) -> Result<()> {
        if size > self.cap {
            return Ok(());
        }
        if bits_is_clique(cand, &self.nbrs) {
            let m = cand.count_ones(..) as u64;
            for extra in 0..=m {
                let l = size + extra as usize;
                if l > self.cap {
                    break;
                }
                bump(counts, l, binomial(m, extra)?)?;
            }
            return Ok(());
        }
        bump(counts, size, 1)?;
        for v in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(&self.higher[v]);
            self.count(size + 1, &next, counts)?;
        }
        Ok(())
    }

    fn degrees(
        &self,
        members: &mut Vec<usize>,
        cand: &FixedBitSet,
        table: &mut [Vec<u64>],
    ) -> Result<()> {
        let size = members.len();
        if bits_is_clique(cand, &self.nbrs) {
            let m = cand.count_ones(..) as u64;
            for extra in 0..=m {
                let l = size + extra as usize;
                let with_member = binomial(m, extra)?;
                for &u in members.iter() {
                    bump(&mut table[u], l, with_member)?;
                }
                if extra >= 1 {
                    let with_cand = binomial(m - 1, extra - 1)?;
                    for c in cand.ones() {
                        bump(&mut table[c], l, with_cand)?;
                    }
                }
            }
            return Ok(());
        }
        for &u in members.iter() {
            bump(&mut table[u], size, 1)?;
        }
        for v in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(&self.higher[v]);
            members.push(v);
            self.degrees(members, &next, table)?;
            members.pop();
        }
        Ok(())
    }
}

/// Counts cliques of every size up to `max_size` (all sizes when `None`).
pub fn clique_census<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_size: Option<usize>,
) -> Result<CliqueCensus> {
    let ext = Extender::new(g, max_size);
    let mut counts = Vec::new();
    for v in 0..g.order() {
        ext.count(1, &ext.higher[v], &mut counts)?;
    }
    Ok(CliqueCensus::from_counts(g.order(), counts))
}

/// Per-vertex clique counts for every size.
pub fn vertex_clique_degrees<G: UndirectedGraph + ?Sized>(g: &G) -> Result<CliqueDegreeTable> {
    let ext = Extender::new(g, None);
    let mut table = vec![Vec::new(); g.order()];
    let mut members = Vec::new();
    for v in 0..g.order() {
        members.push(v);
        ext.degrees(&mut members, &ext.higher[v], &mut table)?;
        members.pop();
    }
    Ok(CliqueDegreeTable { degrees: table })
}
