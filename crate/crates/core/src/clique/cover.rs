use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::maximal_cliques;
use crate::budget;
use crate::error::{JacoError, Result};
use crate::graph::{JacoTypeGraph, UndirectedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverMethod {
    Canonical,
    BruteForceMinimum,
}

/// A family of cliques whose union is the whole vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub cliques: Vec<Vec<usize>>,
    pub method: CoverMethod,
}

impl CoverResult {
    pub fn size(&self) -> usize {
        self.cliques.len()
    }
}

/// The suffix-clique cover {v_j .. v_{j + a_j}} for j = i, i-1, .., 1, where
/// i is the smallest index with i + a_i >= n. Needs non-decreasing terms.
pub fn canonical_cover(g: &JacoTypeGraph) -> Result<CoverResult> {
    if !g.is_non_decreasing() {
        return Err(JacoError::PreconditionViolation(format!(
            "canonical cover needs a non-decreasing sequence, {} is not",
            g.spec()
        )));
    }
    let n = g.n();
    let i = (1..=n)
        .find(|&i| g.out_hi(i) == n)
        .expect("v_n always reaches n");
    let cliques = (1..=i).rev().map(|j| (j..=g.out_hi(j)).collect()).collect();
    Ok(CoverResult {
        cliques,
        method: CoverMethod::Canonical,
    })
}

/// Exact minimum clique cover by set-cover search over the maximal cliques.
pub fn min_clique_cover<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
) -> Result<CoverResult> {
    let n = g.order();
    budget::check("minimum clique cover", n, max_order, force)?;
    let cliques = maximal_cliques(g);
    let sets: Vec<FixedBitSet> = cliques
        .iter()
        .map(|c| {
            let mut s = FixedBitSet::with_capacity(n);
            for &v in c {
                s.insert(v - 1);
            }
            s
        })
        .collect();
    let largest = cliques.iter().map(Vec::len).max().unwrap_or(1);

    let mut search = CoverSearch {
        sets: &sets,
        largest,
        best: (0..sets.len()).collect(),
        chosen: Vec::new(),
    };
    let mut uncovered = FixedBitSet::with_capacity(n);
    uncovered.insert_range(..);
    search.run(&uncovered);

    let mut picked = search.best;
    picked.sort();
    Ok(CoverResult {
        cliques: picked.into_iter().map(|k| cliques[k].clone()).collect(),
        method: CoverMethod::BruteForceMinimum,
    })
}

struct CoverSearch<'a> {
    sets: &'a [FixedBitSet],
    largest: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl CoverSearch<'_> {
    fn run(&mut self, uncovered: &FixedBitSet) {
        let left = uncovered.count_ones(..);
        if left == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + left.div_ceil(self.largest) >= self.best.len() {
            return;
        }
        // branch on the uncovered vertex with the fewest covering cliques
        let (vertex, _) = uncovered
            .ones()
            .map(|v| (v, self.sets.iter().filter(|s| s.contains(v)).count()))
            .min_by_key(|&(v, c)| (c, v))
            .expect("uncovered is non-empty");
        let mut options: Vec<usize> = (0..self.sets.len())
            .filter(|&k| self.sets[k].contains(vertex))
            .collect();
        options.sort_by_key(|&k| std::cmp::Reverse(self.sets[k].intersection(uncovered).count()));
        for k in options {
            let mut rest = uncovered.clone();
            rest.difference_with(&self.sets[k]);
            self.chosen.push(k);
            self.run(&rest);
            self.chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DEFAULT_SUBSET_BUDGET;
    use crate::clique::is_clique;
    use crate::seqgen::SequenceSpec;

    fn build(spec: SequenceSpec, n: usize) -> JacoTypeGraph {
        JacoTypeGraph::build(&spec, n).unwrap()
    }

    fn covers(g: &JacoTypeGraph, c: &CoverResult) -> bool {
        (1..=g.n()).all(|v| c.cliques.iter().any(|k| k.contains(&v)))
            && c.cliques.iter().all(|k| is_clique(g, k))
    }

    #[test]
    fn canonical_sizes() {
        let g = build(SequenceSpec::PositiveIntegers, 8);
        let c = canonical_cover(&g).unwrap();
        assert_eq!(c.size(), 4);
        assert_eq!(c.cliques[0], vec![4, 5, 6, 7, 8]);
        assert!(covers(&g, &c));
        assert_eq!(
            canonical_cover(&build(SequenceSpec::PositiveIntegers, 9))
                .unwrap()
                .size(),
            5
        );
        assert_eq!(
            canonical_cover(&build(SequenceSpec::Fibonacci, 12))
                .unwrap()
                .size(),
            6
        );
        assert_eq!(
            canonical_cover(&build(SequenceSpec::Fibonacci, 1))
                .unwrap()
                .size(),
            1
        );
        assert!(matches!(
            canonical_cover(&build(SequenceSpec::modulo(5), 8)),
            Err(JacoError::PreconditionViolation(_))
        ));
    }

    #[test]
    fn minimum_covers() {
        let g = build(SequenceSpec::PositiveIntegers, 8);
        let c = min_clique_cover(&g, DEFAULT_SUBSET_BUDGET, false).unwrap();
        assert_eq!(c.size(), 3);
        assert!(covers(&g, &c));

        let p4 = build(SequenceSpec::explicit(vec![1, 1, 1, 0]), 4);
        assert_eq!(
            min_clique_cover(&p4, DEFAULT_SUBSET_BUDGET, false)
                .unwrap()
                .size(),
            2
        );
        let k5 = build(SequenceSpec::explicit(vec![4, 3, 2, 1, 0]), 5);
        assert_eq!(
            min_clique_cover(&k5, DEFAULT_SUBSET_BUDGET, false)
                .unwrap()
                .size(),
            1
        );
    }

    #[test]
    fn minimum_cover_budget() {
        let g = build(SequenceSpec::PositiveIntegers, 15);
        assert!(matches!(
            min_clique_cover(&g, DEFAULT_SUBSET_BUDGET, false),
            Err(JacoError::BudgetExceeded {
                n: 15,
                budget: 14,
                ..
            })
        ));
        assert!(min_clique_cover(&g, DEFAULT_SUBSET_BUDGET, true).is_ok());
    }
}
