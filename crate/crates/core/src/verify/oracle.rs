//! Brute-force oracles. None of these share code paths with the clique
//! engine in `crate::clique`: they work on plain bitmasks and enumerate.

use std::collections::VecDeque;

use crate::budget;
use crate::clique::CliqueCensus;
use crate::error::{JacoError, Result};
use crate::graph::UndirectedGraph;
use crate::seqgen::SequenceSpec;

/// Hard ceiling for the bitmask oracles, independent of any budget.
pub const MASK_LIMIT: usize = 30;

fn masks<G: UndirectedGraph + ?Sized>(g: &G) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && g.adjacent(u, v))
                .fold(0u64, |m, v| m | (1 << v))
        })
        .collect()
}

fn check_mask_order(what: &str, n: usize, max_order: usize, force: bool) -> Result<()> {
    budget::check(what, n, max_order, force)?;
    if n > MASK_LIMIT {
        return Err(JacoError::invalid(format!(
            "{what}: order {n} exceeds the oracle ceiling {MASK_LIMIT}"
        )));
    }
    Ok(())
}

fn mask_is_clique(mask: u64, nbr: &[u64]) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask & !(1 << u) & !nbr[u] != 0 {
            return false;
        }
    }
    true
}

/// Census by testing all 2^n vertex subsets.
pub fn subset_census<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
) -> Result<CliqueCensus> {
    let n = g.order();
    check_mask_order("subset census", n, max_order, force)?;
    let nbr = masks(g);
    let mut counts = vec![0u64; n];
    for mask in 1u64..(1u64 << n) {
        if mask_is_clique(mask, &nbr) {
            counts[mask.count_ones() as usize - 1] += 1;
        }
    }
    Ok(CliqueCensus::from_counts(n, counts))
}

/// `table[v][l - 1]` = number of l-cliques containing vertex v (0-based v).
pub fn subset_vertex_degrees<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
) -> Result<Vec<Vec<u64>>> {
    let n = g.order();
    check_mask_order("subset vertex degrees", n, max_order, force)?;
    let nbr = masks(g);
    let mut table = vec![vec![0u64; n]; n];
    for mask in 1u64..(1u64 << n) {
        if mask_is_clique(mask, &nbr) {
            let l = mask.count_ones() as usize;
            for (v, row) in table.iter_mut().enumerate() {
                if mask & (1 << v) != 0 {
                    row[l - 1] += 1;
                }
            }
        }
    }
    Ok(table)
}

/// Maximal cliques by subset enumeration, sorted like `clique::maximal_cliques`.
pub fn subset_maximal_cliques<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    check_mask_order("subset maximal cliques", n, max_order, force)?;
    let nbr = masks(g);
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if !mask_is_clique(mask, &nbr) {
            continue;
        }
        let extendable = (0..n).any(|v| mask & (1 << v) == 0 && mask & !nbr[v] == 0);
        if !extendable {
            out.push(
                (0..n)
                    .filter(|&v| mask & (1 << v) != 0)
                    .map(|v| v + 1)
                    .collect(),
            );
        }
    }
    out.sort();
    Ok(out)
}

/// Shortest cycle length by BFS from every vertex; `None` for forests.
pub fn brute_girth<G: UndirectedGraph + ?Sized>(g: &G) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in 0..n {
                if w == u || !g.adjacent(u, w) {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// True when consecutive vertices (cyclically) are adjacent and distinct.
pub fn validate_cycle<G: UndirectedGraph + ?Sized>(g: &G, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = cycle.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k || seen.iter().any(|&v| v == 0 || v > g.order()) {
        return false;
    }
    (0..k).all(|p| g.adjacent(cycle[p] - 1, cycle[(p + 1) % k] - 1))
}

/// Cores up to this size use the subset DP; larger ones (only reachable with
/// `force`) fall back to depth-first search.
const CYCLE_DP_LIMIT: usize = 24;

/// Longest simple cycle, exhaustively. Vertices of degree < 2 are peeled
/// first. Small cores run a DP over vertex subsets recording which endpoints
/// a path from the subset's smallest vertex can reach; larger cores use a
/// DFS rooted at each cycle's smallest vertex with a reachability cut. The
/// returned cycle (1-based) has been re-checked edge by edge.
pub fn brute_circumference<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
) -> Result<Option<Vec<usize>>> {
    longest_cycle(g, max_order, force, CYCLE_DP_LIMIT)
}

/// [`brute_circumference`] forced onto the depth-first search; used to
/// cross-check the two strategies.
pub fn brute_circumference_dfs<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
) -> Result<Option<Vec<usize>>> {
    longest_cycle(g, max_order, force, 0)
}

fn longest_cycle<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
    dp_limit: usize,
) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    check_mask_order("longest cycle search", n, max_order, force)?;
    let nbr = masks(g);
    let mut core = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    // peel vertices of degree < 2; they lie on no cycle
    loop {
        let drop = (0..n)
            .filter(|&v| core & (1 << v) != 0 && (nbr[v] & core).count_ones() < 2)
            .fold(0u64, |m, v| m | (1 << v));
        if drop == 0 {
            break;
        }
        core &= !drop;
    }
    let best = if core.count_ones() as usize <= dp_limit {
        let vertices: Vec<usize> = (0..n).filter(|&v| core & (1 << v) != 0).collect();
        longest_cycle_dp(&nbr, &vertices)
    } else {
        longest_cycle_dfs(&nbr, n, core)
    };
    if best.is_empty() {
        return Ok(None);
    }
    let cycle: Vec<usize> = best.iter().map(|&v| v + 1).collect();
    assert!(
        validate_cycle(g, &cycle),
        "longest-cycle witness failed revalidation"
    );
    Ok(Some(cycle))
}

fn longest_cycle_dfs(nbr: &[u64], n: usize, core: u64) -> Vec<usize> {
    let mut search = CycleSearch {
        nbr,
        best: Vec::new(),
        path: Vec::new(),
        ceiling: core.count_ones() as usize,
    };
    for start in 0..n {
        if core & (1 << start) == 0 {
            continue;
        }
        if search.best.len() == search.ceiling {
            break;
        }
        let allowed = core & !((1u64 << (start + 1)) - 1);
        if (allowed.count_ones() as usize + 1) <= search.best.len() {
            break;
        }
        search.path.clear();
        search.path.push(start);
        search.extend(start, start, 1 << start, allowed);
    }
    search.best
}

/// `ends[mask]` holds the vertices at which a path starting from the smallest
/// vertex of `mask` and covering exactly `mask` can end.
fn longest_cycle_dp(nbr: &[u64], vertices: &[usize]) -> Vec<usize> {
    let k = vertices.len();
    let adj: Vec<u32> = vertices
        .iter()
        .map(|&v| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &u)| nbr[v] & (1 << u) != 0)
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    let full: u32 = ((1u64 << k) - 1) as u32;
    let mut ends = vec![0u32; 1 << k];
    for s in 0..k {
        ends[1 << s] = 1 << s;
    }
    let (mut best_mask, mut best_len) = (0u32, 0u32);
    for mask in 1..=full {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let low = mask.trailing_zeros();
        let len = mask.count_ones();
        if len >= 3 && len > best_len && e & adj[low as usize] != 0 {
            best_len = len;
            best_mask = mask;
        }
        let mut cand = full & !mask & !((1u32 << (low + 1)) - 1);
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            if e & adj[w as usize] != 0 {
                ends[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    if best_len == 0 {
        return Vec::new();
    }
    // walk back from an end adjacent to the start
    let low = best_mask.trailing_zeros() as usize;
    let mut mask = best_mask;
    let mut v = (ends[mask as usize] & adj[low]).trailing_zeros() as usize;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        v = (ends[mask as usize] & adj[v]).trailing_zeros() as usize;
        path.push(v);
    }
    path.reverse();
    path.into_iter().map(|j| vertices[j]).collect()
}

struct CycleSearch<'a> {
    nbr: &'a [u64],
    best: Vec<usize>,
    path: Vec<usize>,
    ceiling: usize,
}

impl CycleSearch<'_> {
    fn reachable(&self, from: usize, open: u64) -> u64 {
        let mut seen = 0u64;
        let mut frontier = self.nbr[from] & open;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.nbr[u];
            }
            frontier = next & open & !seen;
        }
        seen
    }

    fn extend(&mut self, start: usize, v: usize, visited: u64, allowed: u64) {
        if self.best.len() == self.ceiling {
            return;
        }
        let len = self.path.len();
        if len >= 3 && self.nbr[v] & (1 << start) != 0 && len > self.best.len() {
            self.best = self.path.clone();
        }
        let open = allowed & !visited;
        let reach = self.reachable(v, open);
        if len + reach.count_ones() as usize <= self.best.len() {
            return;
        }
        let mut next = self.nbr[v] & open;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path.push(w);
            self.extend(start, w, visited | (1 << w), allowed);
            self.path.pop();
        }
    }
}

/// Census built by adding one vertex at a time: the in-neighbourhood of each
/// new vertex is a clique of size l (non-decreasing terms), contributing
/// C(l, i - 1) new i-cliques.
pub fn recurrence_census(spec: &SequenceSpec, n: usize) -> Result<CliqueCensus> {
    if n == 0 {
        return Err(JacoError::invalid("order must be at least 1"));
    }
    let terms = spec.terms(n)?;
    if terms.windows(2).any(|w| w[0] > w[1]) {
        return Err(JacoError::PreconditionViolation(format!(
            "recurrence census needs non-decreasing terms, {spec} is not"
        )));
    }
    let mut counts: Vec<u64> = Vec::new();
    for m in 1..=n {
        let l = in_degree_by_scan(&terms, m);
        let row = pascal_row(l);
        if counts.len() < l + 1 {
            counts.resize(l + 1, 0);
        }
        for (i, add) in row.into_iter().enumerate() {
            // row[i] = C(l, i) new cliques of size i + 1
            counts[i] = counts[i]
                .checked_add(add)
                .ok_or_else(|| JacoError::overflow("recurrence census"))?;
        }
    }
    Ok(CliqueCensus::from_counts(n, counts))
}

/// d^-(v_m) as |{j < m : j + a_j >= m}|, read straight off the terms.
pub fn in_degree_by_scan(terms: &[u64], m: usize) -> usize {
    (1..m)
        .filter(|&j| (j as u64).saturating_add(terms[j - 1]) >= m as u64)
        .count()
}

/// Row l of Pascal's triangle by repeated addition.
pub fn pascal_row(l: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..l {
        let mut next = vec![1u64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1].saturating_add(row[k]);
        }
        row = next;
    }
    row
}

/// True when every vertex is covered and every set is a clique.
pub fn validate_cover<G: UndirectedGraph + ?Sized>(g: &G, cliques: &[Vec<usize>]) -> bool {
    let covered = (1..=g.order()).all(|v| cliques.iter().any(|c| c.contains(&v)));
    let complete = cliques.iter().all(|c| {
        c.iter().all(|&v| v >= 1 && v <= g.order())
            && c.iter().enumerate().all(|(k, &u)| {
                c[k + 1..]
                    .iter()
                    .all(|&w| u != w && g.adjacent(u - 1, w - 1))
            })
    });
    covered && complete
}

/// Minimum clique cover size by trying every k-subset of maximal cliques
/// (from the subset oracle) in increasing k.
pub fn brute_min_cover<G: UndirectedGraph + ?Sized>(
    g: &G,
    max_order: usize,
    force: bool,
) -> Result<Vec<Vec<usize>>> {
    let maximal = subset_maximal_cliques(g, max_order, force)?;
    let n = g.order();
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let sets: Vec<u64> = maximal
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << (v - 1))))
        .collect();
    for k in 0..=sets.len() {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let union = pick.iter().fold(0u64, |m, &i| m | sets[i]);
            if union == full {
                return Ok(pick.iter().map(|&i| maximal[i].clone()).collect());
            }
            // next k-combination in lexicographic order
            let Some(pos) = (0..k).rev().find(|&p| pick[p] < sets.len() - k + p) else {
                break;
            };
            pick[pos] += 1;
            for q in pos + 1..k {
                pick[q] = pick[q - 1] + 1;
            }
        }
    }
    unreachable!("the maximal cliques together cover every vertex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DEFAULT_SUBSET_BUDGET as B;
    use crate::graph::JacoTypeGraph;
    use crate::verify::DenseGraph;

    fn build(spec: SequenceSpec, n: usize) -> JacoTypeGraph {
        JacoTypeGraph::build(&spec, n).unwrap()
    }

    #[test]
    fn subset_census_small() {
        let c = subset_census(&build(SequenceSpec::PositiveIntegers, 8), B, false).unwrap();
        assert_eq!(c.counts(), &[8, 16, 14, 6, 1]);
        let c = subset_census(&DenseGraph::complete(5), B, false).unwrap();
        assert_eq!(c.counts(), &[5, 10, 10, 5, 1]);
        assert!(subset_census(&DenseGraph::complete(15), B, false).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(
            brute_girth(&build(SequenceSpec::PositiveIntegers, 8)),
            Some(3)
        );
        assert_eq!(brute_girth(&build(SequenceSpec::PositiveIntegers, 3)), None);
        assert_eq!(brute_girth(&build(SequenceSpec::Fibonacci, 12)), Some(3));
        let mut c5 = DenseGraph::empty(5);
        for v in 0..5 {
            c5.add_edge(v, (v + 1) % 5);
        }
        assert_eq!(brute_girth(&c5), Some(5));
        let mut c4 = DenseGraph::empty(4);
        for v in 0..4 {
            c4.add_edge(v, (v + 1) % 4);
        }
        assert_eq!(brute_girth(&c4), Some(4));
    }

    #[test]
    fn circumference_examples() {
        let k5 = DenseGraph::complete(5);
        assert_eq!(
            brute_circumference(&k5, 20, false).unwrap().unwrap().len(),
            5
        );

        let j8 = build(SequenceSpec::PositiveIntegers, 8);
        assert!(validate_cycle(&j8, &[2, 3, 5, 7, 8, 6, 4]));
        let c = brute_circumference(&j8, 20, false).unwrap().unwrap();
        assert_eq!(c.len(), 7);
        assert!(validate_cycle(&j8, &c));

        let path = build(SequenceSpec::PositiveIntegers, 3);
        assert_eq!(brute_circumference(&path, 20, false).unwrap(), None);
        assert_eq!(
            brute_circumference(&build(SequenceSpec::Fibonacci, 12), 20, false)
                .unwrap()
                .unwrap()
                .len(),
            10
        );
        assert!(matches!(
            brute_circumference(&DenseGraph::complete(21), 20, false),
            Err(JacoError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn circumference_of_petersen_graph() {
        // Petersen graph: circumference 9 (not Hamiltonian)
        let mut g = DenseGraph::empty(10);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
            g.add_edge(v, v + 5);
            g.add_edge(5 + v, 5 + (v + 2) % 5);
        }
        assert_eq!(
            brute_circumference(&g, 20, false).unwrap().unwrap().len(),
            9
        );
        assert_eq!(brute_girth(&g), Some(5));
    }

    #[test]
    fn recurrence_examples() {
        let r = |n| recurrence_census(&SequenceSpec::Fibonacci, n).unwrap();
        assert_eq!(r(7).counts(), &[7, 10, 5, 1]);
        assert_eq!(r(8).counts(), &[8, 13, 8, 2]);
        assert_eq!(r(9).counts(), &[9, 17, 14, 6, 1]);
        assert!(matches!(
            recurrence_census(&SequenceSpec::modulo(5), 6),
            Err(JacoError::PreconditionViolation(_))
        ));
    }

    #[test]
    fn minimum_cover_oracle() {
        let j8 = build(SequenceSpec::PositiveIntegers, 8);
        let c = brute_min_cover(&j8, B, false).unwrap();
        assert_eq!(c.len(), 3);
        assert!(validate_cover(&j8, &c));
        assert!(!validate_cover(&j8, &[vec![1, 2], vec![3, 4, 5, 6]]));
        assert!(!validate_cover(
            &j8,
            &[vec![1, 2, 3], vec![3, 4, 5, 6, 7, 8]]
        ));
    }

    #[test]
    fn maximal_clique_oracle() {
        let j8 = build(SequenceSpec::PositiveIntegers, 8);
        assert_eq!(
            subset_maximal_cliques(&j8, B, false).unwrap(),
            vec![
                vec![1, 2],
                vec![2, 3, 4],
                vec![3, 4, 5, 6],
                vec![4, 5, 6, 7, 8]
            ]
        );
    }
}
