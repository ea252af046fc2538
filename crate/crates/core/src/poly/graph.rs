use super::multiaffine::MultiAffinePoly;
use super::subset::{k_subset_indices, MAX_VARS};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Simple undirected graph on vertices `0..m`. Edge order fixes the variable
/// order of [`Graph::spanning_tree_poly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are 0-based vertex pairs; each is stored with the smaller end first.
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= m || v >= m {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) with {m} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            let e = (u.min(v), u.max(v));
            if out.contains(&e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e:?}")));
            }
            out.push(e);
        }
        Ok(Self { m, edges: out })
    }

    /// `K_m` with edges in lexicographic order `12, 13, …, 1m, 23, …`.
    pub fn complete(m: usize) -> Self {
        let edges = k_subset_indices(m, 2).into_iter().map(|e| (e[0], e[1]));
        Self::new(m, edges).expect("complete graph is simple")
    }

    pub fn path(m: usize) -> Self {
        Self::new(m, (1..m).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs 3 vertices, got {m}")));
        }
        Self::new(m, (0..m).map(|i| (i, (i + 1) % m)))
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.m == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.m);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        (1..self.m).all(|v| uf.find(v) == uf.find(0))
    }

    /// Whether the edges with the given positions form a spanning tree.
    pub fn is_spanning_tree(&self, edge_ids: &[usize]) -> bool {
        if edge_ids.len() + 1 != self.m {
            return false;
        }
        let mut uf = UnionFind::new(self.m);
        edge_ids.iter().all(|&e| {
            let (u, v) = self.edges[e];
            uf.union(u, v)
        })
    }

    /// `Σ_τ ∏_{e∈τ} x_e` over spanning trees `τ`, one variable per edge.
    pub fn spanning_tree_poly<T: Scalar>(&self) -> Result<MultiAffinePoly<T>> {
        let e = self.edges.len();
        if e == 0 || e > MAX_VARS {
            return Err(Error::VariableCount(e));
        }
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let trees = k_subset_indices(e, self.m - 1)
            .into_iter()
            .filter(|ids| self.is_spanning_tree(ids))
            .map(|ids| (ids.iter().fold(0u32, |b, &i| b | (1 << i)), T::one()));
        Ok(MultiAffinePoly::from_bits(e, trees))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
