//! Exact edge and vertex isoperimetric constants by exhaustive subset
//! search, and the spectral Cheeger sandwich used as a cross-check.
//!
//! Subsets are walked in Gray-code order so each step toggles one vertex
//! and the cut weight and exterior boundary are updated in `O(deg)`. The
//! mask space is split on its top bits into independent chunks, which is
//! where the parallelism comes from. Chunk results are merged by exact
//! rational minimum with a lexicographic tie-break on the sorted witness,
//! so the outcome does not depend on chunk scheduling.

use std::cmp::Ordering;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::par::{self, Exec};
use crate::spectrum::SpectralSummary;

pub type Rational = Ratio<u64>;

pub const DEFAULT_SUBSET_BUDGET: usize = 24;
/// Hard ceiling imposed by the 64-bit masks.
const MASK_BITS: usize = 63;
/// Chunks are only split off once the low part has at least this many bits.
const MIN_CHUNK_BITS: usize = 10;
const MAX_SPLIT_BITS: usize = 8;

pub const SANDWICH_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionProfile {
    #[serde(serialize_with = "ser_ratio")]
    pub h_edge: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub h_vertex: Rational,
    pub witness_edge: VertexSet,
    pub witness_vertex: VertexSet,
}

/// `"p/q"`, always with an explicit denominator.
pub fn ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ratio_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_vertices: usize,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_vertices: DEFAULT_SUBSET_BUDGET, exec: Exec::default() }
    }
}

/// Is the sorted member list of `a` lexicographically smaller than that of `b`?
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let p = (a ^ b).trailing_zeros();
    // below p both agree; whoever holds p has p as its next element, and the
    // other is smaller only if it has no elements left
    if a >> p & 1 == 1 {
        b >> p != 0
    } else {
        a >> p == 0
    }
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    num: u64,
    den: u64,
    mask: u64,
}

impl Candidate {
    fn cmp(&self, other: &Candidate) -> Ordering {
        (self.num as u128 * other.den as u128)
            .cmp(&(other.num as u128 * self.den as u128))
            .then_with(|| {
                if self.mask == other.mask {
                    Ordering::Equal
                } else if lex_less(self.mask, other.mask) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }

    fn min(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if y.cmp(&x) == Ordering::Less { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct Best {
    edge: Option<Candidate>,
    vertex: Option<Candidate>,
}

impl Best {
    fn merge(self, other: Best) -> Best {
        Best { edge: Candidate::min(self.edge, other.edge), vertex: Candidate::min(self.vertex, other.vertex) }
    }
}

/// Loop-free weighted adjacency lists.
struct Adjacency {
    nbrs: Vec<Vec<(usize, u64)>>,
    out_degree: Vec<u64>,
}

impl Adjacency {
    fn new(g: &Multigraph) -> Self {
        let nbrs: Vec<Vec<(usize, u64)>> = (0..g.n())
            .map(|v| g.neighbors(v).filter(|&u| u != v).map(|u| (u, g.multiplicity(v, u) as u64)).collect())
            .collect();
        let out_degree = nbrs.iter().map(|l| l.iter().map(|&(_, m)| m).sum()).collect();
        Adjacency { nbrs, out_degree }
    }
}

/// Incrementally maintained cut weight and exterior boundary of `S`.
struct SubsetState<'a> {
    adj: &'a Adjacency,
    mask: u64,
    size: u64,
    cut: u64,
    exterior: u64,
    /// Weight of edges from each vertex into `S` (self excluded).
    into_s: Vec<u64>,
    /// Number of distinct members of `S` adjacent to each vertex (self excluded).
    support: Vec<u32>,
}

impl<'a> SubsetState<'a> {
    fn new(adj: &'a Adjacency) -> Self {
        let n = adj.nbrs.len();
        SubsetState { adj, mask: 0, size: 0, cut: 0, exterior: 0, into_s: vec![0; n], support: vec![0; n] }
    }

    fn add(&mut self, v: usize) {
        self.cut = self.cut + self.adj.out_degree[v] - 2 * self.into_s[v];
        for &(u, m) in &self.adj.nbrs[v] {
            self.into_s[u] += m;
            self.support[u] += 1;
            if self.support[u] == 1 && self.mask >> u & 1 == 0 {
                self.exterior += 1;
            }
        }
        if self.support[v] > 0 {
            self.exterior -= 1;
        }
        self.mask |= 1 << v;
        self.size += 1;
    }

    fn remove(&mut self, v: usize) {
        self.mask &= !(1 << v);
        self.size -= 1;
        self.cut = self.cut + 2 * self.into_s[v] - self.adj.out_degree[v];
        for &(u, m) in &self.adj.nbrs[v] {
            self.into_s[u] -= m;
            self.support[u] -= 1;
            if self.support[u] == 0 && self.mask >> u & 1 == 0 {
                self.exterior -= 1;
            }
        }
        if self.support[v] > 0 {
            self.exterior += 1;
        }
    }

    fn toggle(&mut self, v: usize) {
        if self.mask >> v & 1 == 1 {
            self.remove(v)
        } else {
            self.add(v)
        }
    }
}

fn scan_chunk(adj: &Adjacency, high: u64, low_bits: usize, half: u64) -> Best {
    let mut st = SubsetState::new(adj);
    let mut h = high;
    while h != 0 {
        let v = h.trailing_zeros() as usize;
        st.add(v);
        h &= h - 1;
    }
    let mut best = Best::default();
    let mut consider = |st: &SubsetState| {
        if st.size == 0 || st.size > half {
            return;
        }
        let e = Candidate { num: st.cut, den: st.size, mask: st.mask };
        let x = Candidate { num: st.exterior, den: st.size, mask: st.mask };
        best.edge = Candidate::min(best.edge, Some(e));
        best.vertex = Candidate::min(best.vertex, Some(x));
    };
    consider(&st);
    for i in 1u64..(1u64 << low_bits) {
        st.toggle(i.trailing_zeros() as usize);
        consider(&st);
    }
    best
}

fn search(g: &Multigraph, opts: SearchOptions) -> Result<Best> {
    let n = g.n();
    let budget = opts.max_vertices.min(MASK_BITS);
    if n > budget {
        return Err(Error::TooLarge { what: "exhaustive subset search", size: n, budget });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n < 2 {
        return Err(Error::NotApplicable("isoperimetric constants need at least two vertices".into()));
    }
    let adj = Adjacency::new(g);
    let split = n.saturating_sub(MIN_CHUNK_BITS).min(MAX_SPLIT_BITS);
    let low_bits = n - split;
    let half = (n / 2) as u64;
    Ok(par::map_reduce(
        opts.exec,
        1usize << split,
        Best::default(),
        |chunk| scan_chunk(&adj, (chunk as u64) << low_bits, low_bits, half),
        Best::merge,
    ))
}

fn finish(c: Candidate) -> (Rational, VertexSet) {
    (Rational::new(c.num, c.den), VertexSet::from_mask(c.mask))
}

pub fn expansion_profile(g: &Multigraph, opts: SearchOptions) -> Result<ExpansionProfile> {
    let best = search(g, opts)?;
    let (h_edge, witness_edge) = finish(best.edge.expect("nonempty search space"));
    let (h_vertex, witness_vertex) = finish(best.vertex.expect("nonempty search space"));
    Ok(ExpansionProfile { h_edge, h_vertex, witness_edge, witness_vertex })
}

/// `min e(S, Sᶜ)/|S|` over nonempty `S` with `|S| ≤ ⌊n/2⌋`, with the
/// lexicographically least witness.
pub fn edge_cheeger_exact(g: &Multigraph) -> Result<(Rational, VertexSet)> {
    Ok(finish(search(g, SearchOptions::default())?.edge.expect("nonempty search space")))
}

/// `min |N(S) \ S|/|S|` over the same range.
pub fn vertex_expansion_exact(g: &Multigraph) -> Result<(Rational, VertexSet)> {
    Ok(finish(search(g, SearchOptions::default())?.vertex.expect("nonempty search space")))
}

/// The three sides of `(1 − λ₂)/2 ≤ h_edge/d ≤ √(2(1 − λ₂))`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SandwichCheck {
    pub lower: f64,
    pub middle: f64,
    pub upper: f64,
    pub holds: bool,
}

impl SandwichCheck {
    pub fn diagnostic(&self) -> Option<String> {
        if self.holds {
            return None;
        }
        Some(format!(
            "Cheeger sandwich violated: {:.12} <= {:.12} <= {:.12} fails",
            self.lower, self.middle, self.upper
        ))
    }
}

pub fn cheeger_sandwich_check(profile: &ExpansionProfile, summary: &SpectralSummary, d: u64) -> SandwichCheck {
    let gap = 1.0 - summary.lambda2;
    let lower = gap / 2.0;
    let middle = ratio_f64(&profile.h_edge) / d as f64;
    let upper = (2.0 * gap.max(0.0)).sqrt();
    let holds = lower <= middle + SANDWICH_SLACK && middle <= upper + SANDWICH_SLACK;
    SandwichCheck { lower, middle, upper, holds }
}
