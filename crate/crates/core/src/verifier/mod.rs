//! Assembles every measured quantity into a verdict on the two-sided
//! interval `(−1 + h⁴/(2⁹d¹⁰), 1 − h²/(2d²)]` for the nontrivial spectrum.
//!
//! The lower endpoint is instantiated with the vertex isoperimetric
//! constant. The same endpoint with the edge constant is reported next to
//! it, and the upper endpoint uses the edge constant.

pub mod bounds;
pub mod corpus;
pub mod output;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cover::PermutationCover;
use crate::error::{Error, Result};
use crate::expansion::{self, ratio_f64, ExpansionProfile, Rational, SearchOptions, DEFAULT_SUBSET_BUDGET};
use crate::graph::{Multigraph, VertexSet};
use crate::par::Exec;
use crate::spectrum::{self, SpectralSummary};
use crate::symmetry::{vertex_orbits, PermGroup, DEFAULT_ORBIT_BUDGET};

pub use bounds::{ell, ell_exact, gamma, gamma_argument, gamma_squared_exact, intersection_ceiling, BoundVariant};

/// Slack on the closed upper endpoint, for exact-equality instances.
pub const UPPER_SLACK: f64 = 1e-12;
/// The bounds assume at least this many vertices.
pub const MIN_VERTICES: usize = 4;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub subset_budget: usize,
    pub orbit_budget: usize,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { subset_budget: DEFAULT_SUBSET_BUDGET, orbit_budget: DEFAULT_ORBIT_BUDGET, exec: Exec::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub n: usize,
    pub d: u64,
    pub connected: bool,
    pub bipartite: bool,
    /// `None` when the orbit search exceeded its budget.
    pub vertex_transitive: Option<bool>,
    #[serde(serialize_with = "output::ser_opt_ratio")]
    pub h_edge: Option<Rational>,
    #[serde(serialize_with = "output::ser_opt_ratio")]
    pub h_vertex: Option<Rational>,
    #[serde(serialize_with = "output::ser_opt_f64")]
    pub h_edge_decimal: Option<f64>,
    #[serde(serialize_with = "output::ser_opt_f64")]
    pub h_vertex_decimal: Option<f64>,
    pub witness_edge: Option<VertexSet>,
    pub witness_vertex: Option<VertexSet>,
    #[serde(serialize_with = "output::ser_f64_vec")]
    pub eigenvalues: Vec<f64>,
    #[serde(serialize_with = "output::ser_f64")]
    pub lambda2: f64,
    #[serde(serialize_with = "output::ser_f64")]
    pub lambda_min: f64,
    #[serde(serialize_with = "output::ser_f64")]
    pub max_residual: f64,
    #[serde(serialize_with = "output::ser_opt_f64")]
    pub lower_bound: Option<f64>,
    #[serde(serialize_with = "output::ser_opt_f64")]
    pub lower_bound_edge_variant: Option<f64>,
    #[serde(serialize_with = "output::ser_opt_f64")]
    pub upper_bound: Option<f64>,
    pub applicable: bool,
    pub pass_lower: Option<bool>,
    pub pass_lower_edge_variant: Option<bool>,
    pub pass_upper: Option<bool>,
    pub complete: bool,
    pub incomplete_reason: Option<String>,
}

impl BoundReport {
    /// An applicable graph whose spectrum escapes the interval.
    pub fn is_failure(&self) -> bool {
        self.applicable
            && [self.pass_lower, self.pass_lower_edge_variant, self.pass_upper].contains(&Some(false))
    }
}

fn to_big(r: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn lower_endpoint(h: &Rational, d: u64) -> f64 {
    let offset = if *h.numer() == 0 {
        0.0
    } else {
        bounds::rational_to_f64(&ell_exact(&to_big(h), d, BoundVariant::VertexTransitive).expect("h > 0, d > 0"))
    };
    -1.0 + offset
}

fn upper_endpoint(h: &Rational, d: u64) -> f64 {
    let (_, offset) = bounds::interval_offsets(&to_big(h), &to_big(h), d).expect("d > 0");
    1.0 - bounds::rational_to_f64(&offset)
}

/// Measures `g` and decides whether its nontrivial spectrum lies in the
/// interval. Graphs outside the hypotheses get full measurements with
/// `applicable = false`; budget overruns give `complete = false`.
pub fn verify_spectral_bound(graph_id: &str, g: &Multigraph, opts: &VerifyOptions) -> Result<BoundReport> {
    let n = g.n();
    let d = g.validate_regular()?;
    if d == 0 {
        return Err(Error::InvalidDegree(d));
    }
    let connected = g.is_connected();
    let bipartite = g.is_bipartite();
    let summary: SpectralSummary = spectrum::normalized_spectrum(g, d)?;

    let mut reasons = Vec::new();
    let vertex_transitive = match vertex_orbits(g, opts.orbit_budget) {
        Ok(orbits) => Some(orbits.len() == 1),
        Err(e @ Error::TooLarge { .. }) => {
            reasons.push(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };

    let search = SearchOptions { max_vertices: opts.subset_budget, exec: opts.exec };
    let profile: Option<ExpansionProfile> = if connected && n >= 2 {
        match expansion::expansion_profile(g, search) {
            Ok(p) => Some(p),
            Err(e @ Error::TooLarge { .. }) => {
                reasons.push(e.to_string());
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    let lower_bound = profile.as_ref().map(|p| lower_endpoint(&p.h_vertex, d));
    let lower_bound_edge_variant = profile.as_ref().map(|p| lower_endpoint(&p.h_edge, d));
    let upper_bound = profile.as_ref().map(|p| upper_endpoint(&p.h_edge, d));

    let complete = reasons.is_empty();
    let applicable = connected && !bipartite && vertex_transitive == Some(true) && n >= MIN_VERTICES && complete;

    let (mut pass_lower, mut pass_lower_edge_variant, mut pass_upper) = (None, None, None);
    if applicable {
        let nontrivial = spectrum::nontrivial_spectrum(&summary)?;
        let lambda2 = nontrivial.first().copied().unwrap_or(summary.lambda2);
        let lambda_min = nontrivial.last().copied().unwrap_or(summary.lambda_min);
        pass_lower = lower_bound.map(|b| lambda_min > b);
        pass_lower_edge_variant = lower_bound_edge_variant.map(|b| lambda_min > b);
        pass_upper = upper_bound.map(|b| lambda2 <= b + UPPER_SLACK);
    }

    Ok(BoundReport {
        graph_id: graph_id.to_string(),
        n,
        d,
        connected,
        bipartite,
        vertex_transitive,
        h_edge: profile.as_ref().map(|p| p.h_edge),
        h_vertex: profile.as_ref().map(|p| p.h_vertex),
        h_edge_decimal: profile.as_ref().map(|p| ratio_f64(&p.h_edge)),
        h_vertex_decimal: profile.as_ref().map(|p| ratio_f64(&p.h_vertex)),
        witness_edge: profile.as_ref().map(|p| p.witness_edge.clone()),
        witness_vertex: profile.as_ref().map(|p| p.witness_vertex.clone()),
        lambda2: summary.lambda2,
        lambda_min: summary.lambda_min,
        max_residual: summary.max_residual,
        eigenvalues: summary.eigenvalues,
        lower_bound,
        lower_bound_edge_variant,
        upper_bound,
        applicable,
        pass_lower,
        pass_lower_edge_variant,
        pass_upper,
        complete,
        incomplete_reason: (!complete).then(|| reasons.join("; ")),
    })
}

/// The literal lower-bound instance `λ_min > −1 + ℓ(h_vertex, d)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Margin {
    pub lambda_min: f64,
    pub bound: f64,
    pub margin: f64,
}

pub fn vertex_transitive_margin(g: &Multigraph, opts: &VerifyOptions) -> Result<Margin> {
    let report = verify_spectral_bound("", g, opts)?;
    if !report.applicable {
        return Err(Error::NotApplicable(
            "need a connected, non-bipartite, vertex-transitive graph on at least 4 vertices".into(),
        ));
    }
    let bound = report.lower_bound.expect("applicable reports carry bounds");
    Ok(Margin { lambda_min: report.lambda_min, bound, margin: report.lambda_min - bound })
}

/// `|θ_i(O) ∩ O|` for every cover index, together with the thresholds
/// `|H|/(d·t)` and `|H|/(2t)` when `O` is a single `H`-orbit, where
/// `t = |H|/|O|` is the number of `h ∈ H` with `h·u = v` for `u, v ∈ O`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionStats {
    pub counts: Vec<usize>,
    pub orbit_order: Option<usize>,
    #[serde(serialize_with = "output::ser_opt_ratio")]
    pub threshold_dt: Option<Rational>,
    #[serde(serialize_with = "output::ser_opt_ratio")]
    pub threshold_2t: Option<Rational>,
}

pub fn orbit_intersection_stats(cover: &PermutationCover, h: &PermGroup, o: &VertexSet) -> IntersectionStats {
    let counts = cover.thetas.iter().map(|theta| o.iter().filter(|&v| o.contains(theta.apply(v))).count()).collect();
    let d = cover.degree() as u64;
    let orbit_order = (!o.is_empty() && h.is_transitive_on(o)).then(|| h.order() / o.len());
    let threshold = |k: u64| orbit_order.filter(|_| k > 0).map(|t| Rational::new(h.order() as u64, k * t as u64));
    IntersectionStats { counts, orbit_order, threshold_dt: threshold(d), threshold_2t: threshold(2) }
}
