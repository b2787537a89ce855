//! Decomposition of a `d`-regular multigraph into `d` permutations
//! `θ_0 … θ_{d−1}` whose graphs exactly cover the edge multiset, and the
//! quasi-automorphism index built on top of such a cover.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::par::{self, Exec};
use crate::perm::Permutation;

/// `d` permutations with `|{i : θ_i(u) = v}| = adj[u][v]` for all `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PermutationCover {
    pub thetas: Vec<Permutation>,
}

impl PermutationCover {
    pub fn degree(&self) -> usize {
        self.thetas.len()
    }

    /// Cover of the graph relabeled by `sigma`: each `θ_i` becomes `σθ_iσ⁻¹`.
    pub fn relabel(&self, sigma: &Permutation) -> PermutationCover {
        PermutationCover { thetas: self.thetas.iter().map(|t| t.conjugate_by(sigma)).collect() }
    }
}

/// Kuhn augmenting path from left vertex `u` over remaining capacities,
/// trying right vertices in ascending order.
fn augment(u: usize, n: usize, remaining: &[u32], visited: &mut [bool], match_right: &mut [usize]) -> bool {
    for v in 0..n {
        if remaining[u * n + v] == 0 || visited[v] {
            continue;
        }
        visited[v] = true;
        if match_right[v] == usize::MAX || augment(match_right[v], n, remaining, visited, match_right) {
            match_right[v] = u;
            return true;
        }
    }
    false
}

/// Peels `d` perfect matchings off the bipartite double of `g`. Each round
/// leaves a regular bipartite multigraph, so by Hall's theorem the next
/// perfect matching exists.
pub fn bvn_decompose(g: &Multigraph, d: u64) -> Result<PermutationCover> {
    let actual = g.validate_regular()?;
    if actual != d {
        return Err(Error::NotRegular { u: 0, du: actual, v: 0, dv: d });
    }
    let n = g.n();
    let mut remaining: Vec<u32> = (0..n).flat_map(|u| g.row(u).to_vec()).collect();
    let mut thetas = Vec::with_capacity(d as usize);
    for round in 0..d as usize {
        let mut match_right = vec![usize::MAX; n];
        for u in 0..n {
            let mut visited = vec![false; n];
            if !augment(u, n, &remaining, &mut visited, &mut match_right) {
                return Err(Error::MatchingFailure { round });
            }
        }
        let mut images = vec![0; n];
        for (v, &u) in match_right.iter().enumerate() {
            images[u] = v;
            remaining[u * n + v] -= 1;
        }
        thetas.push(Permutation::from_images(images).map_err(|_| Error::MatchingFailure { round })?);
    }
    Ok(PermutationCover { thetas })
}

/// First way in which a candidate cover fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    WrongDegree { index: usize, degree: usize, n: usize },
    NotAnEdge { index: usize, v: usize, image: usize },
    CountMismatch { u: usize, v: usize, count: u32, multiplicity: u32 },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::WrongDegree { index, degree, n } => {
                write!(f, "theta_{index} acts on {degree} points, graph has {n}")
            }
            CoverViolation::NotAnEdge { index, v, image } => {
                write!(f, "theta_{index} maps {v} to {image}, which is not adjacent")
            }
            CoverViolation::CountMismatch { u, v, count, multiplicity } => {
                write!(f, "pair ({u}, {v}) is hit {count} times but has multiplicity {multiplicity}")
            }
        }
    }
}

/// Exact integer check of both cover invariants.
pub fn verify_cover(g: &Multigraph, cover: &PermutationCover) -> std::result::Result<(), CoverViolation> {
    let n = g.n();
    let mut count = vec![0u32; n * n];
    for (index, theta) in cover.thetas.iter().enumerate() {
        if theta.degree() != n {
            return Err(CoverViolation::WrongDegree { index, degree: theta.degree(), n });
        }
        for v in 0..n {
            let image = theta.apply(v);
            if g.multiplicity(v, image) == 0 {
                return Err(CoverViolation::NotAnEdge { index, v, image });
            }
            count[v * n + image] += 1;
        }
    }
    for u in 0..n {
        for v in 0..n {
            let (c, m) = (count[u * n + v], g.multiplicity(u, v));
            if c != m {
                return Err(CoverViolation::CountMismatch { u, v, count: c, multiplicity: m });
            }
        }
    }
    Ok(())
}

fn check_theta_index(cover: &PermutationCover, j: usize) -> Result<()> {
    if j >= cover.degree() {
        return Err(Error::IndexOutOfRange { index: j, n: cover.degree() });
    }
    Ok(())
}

/// Least `i` with `θ_i(g⁻¹(v)) = g⁻¹(θ_j(v))`, assuming `aut` has already
/// been verified as an automorphism.
fn index_unchecked(cover: &PermutationCover, aut_inv: &Permutation, v: usize, j: usize) -> Result<usize> {
    let source = aut_inv.apply(v);
    let target = aut_inv.apply(cover.thetas[j].apply(v));
    cover.thetas.iter().position(|t| t.apply(source) == target).ok_or(Error::NoIndex { v, j })
}

/// The quasi-automorphism index `i_{g,v,j}`: the least `i` with
/// `θ_i(g⁻¹(v)) = g⁻¹(θ_j(v))`. It exists because `g⁻¹` sends the neighbour
/// `θ_j(v)` of `v` to a neighbour of `g⁻¹(v)`, and the cover lists every
/// neighbour.
pub fn quasi_auto_index(g: &Multigraph, cover: &PermutationCover, aut: &Permutation, v: usize, j: usize) -> Result<usize> {
    if !g.is_automorphism(aut) {
        return Err(Error::NotAutomorphism);
    }
    if v >= g.n() {
        return Err(Error::IndexOutOfRange { index: v, n: g.n() });
    }
    check_theta_index(cover, j)?;
    index_unchecked(cover, &aut.inverse(), v, j)
}

/// Histogram of `g ↦ i_{g,v,j}` over a set of automorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCensus {
    pub v: usize,
    pub j: usize,
    pub counts: Vec<usize>,
    pub subset_size: usize,
}

impl FiberCensus {
    /// Index of a largest fibre (least index on ties).
    pub fn largest_fiber(&self) -> usize {
        let max = self.counts.iter().copied().max().unwrap_or(0);
        self.counts.iter().position(|&c| c == max).unwrap_or(0)
    }

    /// The pigeonhole bound `max(counts) ≥ ⌈|subset|/d⌉`.
    pub fn pigeonhole_holds(&self) -> bool {
        let d = self.counts.len().max(1);
        self.counts.iter().copied().max().unwrap_or(0) >= self.subset_size.div_ceil(d)
    }
}

pub fn fiber_census(
    g: &Multigraph,
    cover: &PermutationCover,
    subset: &[Permutation],
    v: usize,
    j: usize,
) -> Result<FiberCensus> {
    fiber_census_with(g, cover, subset, v, j, Exec::default())
}

pub fn fiber_census_with(
    g: &Multigraph,
    cover: &PermutationCover,
    subset: &[Permutation],
    v: usize,
    j: usize,
    exec: Exec,
) -> Result<FiberCensus> {
    if v >= g.n() {
        return Err(Error::IndexOutOfRange { index: v, n: g.n() });
    }
    check_theta_index(cover, j)?;
    let indices = par::map(exec, subset, |aut| {
        if !g.is_automorphism(aut) {
            return Err(Error::NotAutomorphism);
        }
        index_unchecked(cover, &aut.inverse(), v, j)
    });
    let mut counts = vec![0usize; cover.degree()];
    for i in indices {
        counts[i?] += 1;
    }
    Ok(FiberCensus { v, j, counts, subset_size: subset.len() })
}
