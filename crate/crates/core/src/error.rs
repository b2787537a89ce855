use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("edge ({u}, {v}) has zero multiplicity")]
    ZeroMultiplicity { u: usize, v: usize },
    #[error("adjacency matrix is not symmetric at ({u}, {v})")]
    NotSymmetric { u: usize, v: usize },
    #[error("graph is not regular: vertex {u} has degree {du} but vertex {v} has degree {dv}")]
    NotRegular { u: usize, du: u64, v: usize, dv: u64 },
    #[error("degree {0} is not usable here (need d >= 1)")]
    InvalidDegree(u64),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what}: size {size} exceeds budget {budget}")]
    TooLarge { what: &'static str, size: usize, budget: usize },
    #[error("group does not act transitively")]
    NotTransitive,
    #[error("pair ({u}, {v}) has {count} solutions, expected {expected}")]
    InconsistentOrder { u: usize, v: usize, count: usize, expected: usize },
    #[error("connection set is not closed under inversion")]
    NotSymmetricSet,
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("no cover index i with theta_i(g^-1 v) = g^-1 theta_j(v) for v = {v}, j = {j}")]
    NoIndex { v: usize, j: usize },
    #[error("perfect matching extraction failed in round {round}")]
    MatchingFailure { round: usize },
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),
    #[error("value {0} outside the admissible range")]
    OutOfRange(f64),
    #[error("graph is outside the bound's hypotheses: {0}")]
    NotApplicable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid group spec: {0}")]
    GroupSpec(String),
    #[error("invalid graph file: {0}")]
    Format(String),
}
