//! Finite undirected multigraphs with loops, stored as an exact integer
//! adjacency matrix.
//!
//! A loop of multiplicity `m` at `v` is stored as `adj[v][v] = m` and adds
//! `m` to the row sum of `v`. Regularity is a statement about row sums, so
//! `d`-regular here means the all-ones vector is an eigenvector of the
//! adjacency matrix with eigenvalue `d`.

pub mod families;
pub mod file;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a set from arbitrary members, sorting and deduplicating.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        v.sort_unstable();
        v.dedup();
        Ok(VertexSet(v))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|v| !self.contains(*v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Image of the set under a permutation.
    pub fn map(&self, p: &Permutation) -> VertexSet {
        let mut v: Vec<usize> = self.iter().map(|x| p.apply(x)).collect();
        v.sort_unstable();
        VertexSet(v)
    }
}

/// Finite undirected multigraph with loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    adj: Vec<u32>,
}

impl Multigraph {
    /// Builds the symmetric adjacency matrix from `(u, v, multiplicity)`
    /// triples. `(u, v)` and `(v, u)` denote the same edge; repeated pairs
    /// accumulate.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![0u32; n * n];
        for &(u, v, m) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity { u, v });
            }
            adj[u * n + v] += m;
            if u != v {
                adj[v * n + u] += m;
            }
        }
        Ok(Multigraph { n, adj })
    }

    pub fn from_matrix(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Format(format!("row of length {} in a {n}x{n} matrix", row.len())));
            }
            adj.extend_from_slice(row);
        }
        for u in 0..n {
            for v in u + 1..n {
                if adj[u * n + v] != adj[v * n + u] {
                    return Err(Error::NotSymmetric { u, v });
                }
            }
        }
        Ok(Multigraph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.adj[u * self.n..(u + 1) * self.n]
    }

    /// Edge list with `u <= v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u..self.n {
                let m = self.multiplicity(u, v);
                if m > 0 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.row(v).iter().map(|&m| m as u64).sum()
    }

    /// Sum of loop multiplicities, i.e. the trace of the adjacency matrix.
    pub fn loop_units(&self) -> u64 {
        (0..self.n).map(|v| self.multiplicity(v, v) as u64).sum()
    }

    /// Returns the common row sum, or the first pair of vertices whose row
    /// sums differ.
    pub fn validate_regular(&self) -> Result<u64> {
        let d = self.degree(0);
        for v in 1..self.n {
            let dv = self.degree(v);
            if dv != d {
                return Err(Error::NotRegular { u: 0, du: d, v, dv });
            }
        }
        Ok(d)
    }

    /// Support neighbours of `v` in ascending order; includes `v` itself
    /// when there is a loop at `v`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().filter(|(_, &m)| m > 0).map(|(u, _)| u)
    }

    /// Connectivity of the support graph; loops are irrelevant.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet(members));
        }
        out
    }

    /// Proper 2-colourability of the support. Any loop makes the graph
    /// non-bipartite.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-colouring (colour of each vertex), if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// `N(S)`: every vertex adjacent to some member of `S`. May intersect `S`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(bad) = s.iter().find(|&v| v >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.n });
        }
        let mut hit = vec![false; self.n];
        for v in s.iter() {
            for u in self.neighbors(v) {
                hit[u] = true;
            }
        }
        Ok(VertexSet((0..self.n).filter(|&u| hit[u]).collect()))
    }

    /// The graph with vertex `v` renamed to `sigma(v)`.
    pub fn relabel(&self, sigma: &Permutation) -> Multigraph {
        assert_eq!(sigma.degree(), self.n, "relabeling permutation has wrong degree");
        let n = self.n;
        let mut adj = vec![0u32; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[sigma.apply(u) * n + sigma.apply(v)] = self.multiplicity(u, v);
            }
        }
        Multigraph { n, adj }
    }

    /// `A[σ(u)][σ(v)] = A[u][v]` for all `u, v`.
    pub fn is_automorphism(&self, sigma: &Permutation) -> bool {
        sigma.degree() == self.n
            && (0..self.n).all(|u| {
                (0..self.n).all(|v| self.multiplicity(sigma.apply(u), sigma.apply(v)) == self.multiplicity(u, v))
            })
    }

    /// Adjacency matrix as `f64`, row-major.
    pub fn to_dense_f64(&self) -> Vec<f64> {
        self.adj.iter().map(|&m| m as f64).collect()
    }
}
