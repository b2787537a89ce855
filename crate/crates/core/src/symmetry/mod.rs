//! Automorphism groups, transitivity, the index-two obstruction, and
//! Cayley-graph construction.

pub mod automorphism;
pub mod cayley;
pub mod group;

pub use automorphism::{
    automorphism_group, automorphism_group_with, find_automorphism, is_graph_vertex_transitive, vertex_orbits,
    DEFAULT_AUT_BUDGET, DEFAULT_ORBIT_BUDGET,
};
pub use cayley::{cayley_graph, parse_connection, translation_group, GroupSpec};
pub use group::{PermGroup, DEFAULT_GROUP_BUDGET};

use crate::graph::{Multigraph, VertexSet};
use crate::perm::Permutation;

/// Orbit partition of `G` and whether it is a single orbit.
pub fn is_vertex_transitive(group: &PermGroup) -> (bool, Vec<VertexSet>) {
    let orbits = group.orbits();
    (orbits.len() == 1, orbits)
}

/// First `(τ, v)` with `N(N(τ v)) ⊄ τ(N(N(v)))`. Checking singletons is
/// enough because `N` distributes over unions.
pub fn condition4_violation(group: &PermGroup, g: &Multigraph) -> Option<(Permutation, usize)> {
    let n = g.n();
    let second: Vec<VertexSet> = (0..n)
        .map(|v| {
            let first = g.neighborhood(&VertexSet::new(n, [v]).expect("in range")).ok();
            first.and_then(|s| g.neighborhood(&s).ok()).unwrap_or_default()
        })
        .collect();
    for tau in group.elements() {
        for v in 0..n {
            if !second[tau.apply(v)].is_subset(&second[v].map(tau)) {
                return Some((tau.clone(), v));
            }
        }
    }
    None
}

/// `N(N(τ(A))) ⊆ τ(N(N(A)))` for every `τ ∈ G` and every `A`.
pub fn condition4_check(group: &PermGroup, g: &Multigraph) -> bool {
    condition4_violation(group, g).is_none()
}
