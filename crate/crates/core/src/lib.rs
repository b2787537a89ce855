//! Measurements behind a two-sided spectral bound for vertex-transitive
//! graphs: normalized adjacency spectra, exact isoperimetric constants,
//! automorphism groups and their index-two subgroups, permutation covers of
//! regular multigraphs, and a verifier that checks the interval
//! `(−1 + h⁴/(2⁹d¹⁰), 1 − h²/(2d²)]` on concrete graphs.

pub mod cover;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod par;
pub mod perm;
pub mod spectrum;
pub mod symmetry;
pub mod verifier;

pub use cover::{bvn_decompose, fiber_census, quasi_auto_index, verify_cover, FiberCensus, PermutationCover};
pub use error::{Error, Result};
pub use expansion::{
    cheeger_sandwich_check, edge_cheeger_exact, expansion_profile, vertex_expansion_exact, ExpansionProfile, Rational,
    SearchOptions,
};
pub use graph::{Multigraph, VertexSet};
pub use par::Exec;
pub use perm::Permutation;
pub use spectrum::{nontrivial_spectrum, normalized_spectrum, SpectralSummary};
pub use symmetry::{automorphism_group, PermGroup};
pub use verifier::{verify_spectral_bound, BoundReport, VerifyOptions};
