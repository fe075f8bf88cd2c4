use fixedbitset::FixedBitSet;

use super::to_labels;
use crate::graph::UndirectedGraph;

/// All maximal cliques, each sorted ascending, the list sorted lexicographically.
///
/// Bron-Kerbosch with pivoting. The pivot is the candidate with the most
/// candidates in its neighbourhood, ties to the smallest index.
pub fn maximal_cliques<G: UndirectedGraph + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let n = g.order();
    let nbrs = g.neighbor_sets();
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = FixedBitSet::with_capacity(n);
    expand(&nbrs, &mut r, p, x, &mut out);
    out.sort();
    out
}

fn expand(
    nbrs: &[FixedBitSet],
    r: &mut FixedBitSet,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() && !r.is_clear() {
            out.push(to_labels(r));
        }
        return;
    }
    let pivot = p
        .ones()
        .map(|u| (nbrs[u].intersection(&p).count(), u))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(_, u)| u)
        .expect("p is non-empty");
    let mut todo = p.clone();
    todo.difference_with(&nbrs[pivot]);
    for v in todo.ones() {
        let mut next_p = p.clone();
        next_p.intersect_with(&nbrs[v]);
        let mut next_x = x.clone();
        next_x.intersect_with(&nbrs[v]);
        r.insert(v);
        expand(nbrs, r, next_p, next_x, out);
        r.set(v, false);
        p.set(v, false);
        x.insert(v);
    }
}

/// Size of a largest clique (0 for the empty graph).
pub fn clique_number<G: UndirectedGraph + ?Sized>(g: &G) -> usize {
    maximal_cliques(g).iter().map(Vec::len).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::JacoTypeGraph;
    use crate::seqgen::SequenceSpec;

    #[test]
    fn s1_examples() {
        let g = JacoTypeGraph::build(&SequenceSpec::PositiveIntegers, 8).unwrap();
        assert_eq!(
            maximal_cliques(&g),
            vec![
                vec![1, 2],
                vec![2, 3, 4],
                vec![3, 4, 5, 6],
                vec![4, 5, 6, 7, 8]
            ]
        );
        let g = JacoTypeGraph::build(&SequenceSpec::PositiveIntegers, 5).unwrap();
        let sizes: Vec<usize> = maximal_cliques(&g).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 3, 3]);
    }

    #[test]
    fn single_vertex_and_isolated() {
        let g = JacoTypeGraph::build(&SequenceSpec::PositiveIntegers, 1).unwrap();
        assert_eq!(maximal_cliques(&g), vec![vec![1]]);
        let g = JacoTypeGraph::build(&SequenceSpec::explicit(vec![0, 1, 0]), 3).unwrap();
        assert_eq!(maximal_cliques(&g), vec![vec![1], vec![2, 3]]);
    }

    #[test]
    fn clique_numbers() {
        let num = |spec, n| clique_number(&JacoTypeGraph::build(&spec, n).unwrap());
        assert_eq!(num(SequenceSpec::PositiveIntegers, 8), 5);
        assert_eq!(num(SequenceSpec::Fibonacci, 12), 7);
        assert_eq!(num(SequenceSpec::modulo(5), 18), 3);
    }
}
