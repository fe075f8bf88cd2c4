//! Clique enumeration and counting on undirected graphs.

mod census;
mod cover;
mod maximal;

pub use census::{clique_census, vertex_clique_degrees, CliqueCensus, CliqueDegreeTable};
pub use cover::{canonical_cover, min_clique_cover, CoverMethod, CoverResult};
pub use maximal::{clique_number, maximal_cliques};

use fixedbitset::FixedBitSet;

use crate::graph::UndirectedGraph;

/// Predicted maximal-clique sizes of `J_n(s1)`, smallest first.
///
/// Even n gives 2, 3, ..., n/2 + 1; odd n >= 3 gives 2, ..., (n+1)/2 with the
/// largest size appearing twice; n = 1 is the lone vertex.
pub fn s1_decomposition_sizes(n: usize) -> Vec<usize> {
    match n {
        0 => Vec::new(),
        1 => vec![1],
        n if n % 2 == 0 => (2..=n / 2 + 1).collect(),
        n => {
            let top = n.div_ceil(2);
            let mut sizes: Vec<usize> = (2..=top).collect();
            sizes.push(top);
            sizes
        }
    }
}

/// True when the 1-based vertex set induces a complete subgraph.
pub fn is_clique<G: UndirectedGraph + ?Sized>(g: &G, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(k, &u)| {
        vertices[k + 1..]
            .iter()
            .all(|&v| u != v && g.adjacent(u - 1, v - 1))
    })
}

pub(crate) fn bits_is_clique(set: &FixedBitSet, nbrs: &[FixedBitSet]) -> bool {
    set.ones().all(|c| {
        let mut rest = set.clone();
        rest.set(c, false);
        rest.is_subset(&nbrs[c])
    })
}

pub(crate) fn to_labels(set: &FixedBitSet) -> Vec<usize> {
    set.ones().map(|p| p + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_size_examples() {
        assert_eq!(s1_decomposition_sizes(8), vec![2, 3, 4, 5]);
        assert_eq!(s1_decomposition_sizes(5), vec![2, 3, 3]);
        assert_eq!(s1_decomposition_sizes(7), vec![2, 3, 4, 4]);
        assert_eq!(s1_decomposition_sizes(3), vec![2, 2]);
        assert_eq!(s1_decomposition_sizes(2), vec![2]);
        assert_eq!(s1_decomposition_sizes(1), vec![1]);
        for n in 1..40 {
            assert_eq!(s1_decomposition_sizes(n).len(), n.div_ceil(2));
        }
    }
}
