use rand::Rng;

use crate::graph::UndirectedGraph;

/// Adjacency-matrix graph used as oracle substrate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    order: usize,
    adj: Vec<bool>,
}

impl DenseGraph {
    pub fn empty(order: usize) -> Self {
        DenseGraph {
            order,
            adj: vec![false; order * order],
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Copies any graph; edges are read pairwise through `adjacent`.
    pub fn from_graph<G: UndirectedGraph + ?Sized>(g: &G) -> Self {
        let mut d = Self::empty(g.order());
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if g.adjacent(u, v) {
                    d.add_edge(u, v);
                }
            }
        }
        d
    }

    /// G(n, p) random graph.
    pub fn random<R: Rng + ?Sized>(order: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Adds the undirected edge {u, v} (0-based); loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.adj[u * self.order + v] = true;
        self.adj[v * self.order + u] = true;
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.order).filter(|&v| self.adjacent(u, v)).count()
    }

    pub fn is_symmetric_irreflexive(&self) -> bool {
        (0..self.order).all(|u| {
            !self.adj[u * self.order + u]
                && (0..self.order)
                    .all(|v| self.adj[u * self.order + v] == self.adj[v * self.order + u])
        })
    }

    /// G + K_1: a new last vertex adjacent to every existing vertex.
    pub fn join_with_universal_vertex(&self) -> DenseGraph {
        let n = self.order;
        let mut g = Self::empty(n + 1);
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
            g.add_edge(u, n);
        }
        g
    }
}

impl UndirectedGraph for DenseGraph {
    fn order(&self) -> usize {
        self.order
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v]
    }
}
