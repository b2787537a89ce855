//! The built-in graph corpus and a deterministic corpus runner.

use crate::error::Result;
use crate::graph::families::*;
use crate::graph::Multigraph;
use crate::par;
use crate::symmetry::cayley::{cayley_graph, parse_connection, GroupSpec};

use super::{verify_spectral_bound, BoundReport, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    /// Connected, non-bipartite, vertex-transitive, `n ≥ 4`.
    Transitive,
    /// Expected to be flagged inapplicable.
    Control,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Multigraph,
    pub kind: CorpusKind,
}

const CIRCULANTS: &[(usize, &[usize])] = &[
    (6, &[1, 2]),
    (7, &[1, 2]),
    (8, &[1, 2]),
    (8, &[1, 4]),
    (9, &[1, 3]),
    (10, &[1, 2]),
    (11, &[1, 3]),
    (12, &[1, 4]),
    (13, &[1, 3, 4]),
    (13, &[1, 5]),
    (14, &[1, 4]),
    (15, &[1, 4]),
    (16, &[1, 6]),
    (16, &[1, 2, 5]),
];

const CAYLEY: &[(&str, &str, &str)] = &[
    ("cayley-c12-1-4", "cyclic:12", "1,-1,4,-4"),
    ("cayley-d4", "dihedral:4", "1,-1,s0,s1"),
    ("cayley-d5", "dihedral:5", "1,-1,s0"),
    ("cayley-d6", "dihedral:6", "2,-2,s0,s1"),
    ("cayley-s3", "symmetric:3", "[1 0 2],[1 2 0],[2 0 1]"),
    ("cayley-c3xc3", "product:(cyclic:3,cyclic:3)", "[1 2 0 3 4 5],[2 0 1 3 4 5],[0 1 2 4 5 3],[0 1 2 5 3 4]"),
    ("cayley-c2xd3", "product:(cyclic:2,dihedral:3)", "[1 0 2 3 4],[0 1 3 4 2],[0 1 4 2 3],[0 1 2 4 3]"),
    ("cayley-s4", "symmetric:4", "[1 2 0 3],[2 0 1 3],[0 2 3 1],[0 3 1 2],[1 0 2 3]"),
];

fn cayley(spec: &str, connection: &str) -> Multigraph {
    let spec = GroupSpec::parse(spec).expect("built-in group spec");
    let group = spec.build().expect("built-in group");
    let conn = parse_connection(&spec, &group, connection).expect("built-in connection");
    cayley_graph(&group, &conn).expect("built-in Cayley graph")
}

/// Odd cycles, complete graphs, the Petersen graph, circulants and Cayley
/// graphs, followed by bipartite and non-transitive controls.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut push = |id: String, graph: Multigraph, kind| out.push(CorpusEntry { id, graph, kind });
    for n in (5..=15).step_by(2) {
        push(format!("cycle-{n}"), cycle(n), CorpusKind::Transitive);
    }
    for n in 4..=8 {
        push(format!("complete-{n}"), complete(n), CorpusKind::Transitive);
    }
    push("petersen".into(), petersen(), CorpusKind::Transitive);
    for &(n, jumps) in CIRCULANTS {
        let tag: Vec<String> = jumps.iter().map(|j| j.to_string()).collect();
        push(format!("circulant-{n}-{}", tag.join("-")), circulant(n, jumps), CorpusKind::Transitive);
    }
    for &(id, spec, conn) in CAYLEY {
        push(id.into(), cayley(spec, conn), CorpusKind::Transitive);
    }
    push("cycle-4".into(), cycle(4), CorpusKind::Control);
    push("cycle-6".into(), cycle(6), CorpusKind::Control);
    push("complete-bipartite-3-3".into(), complete_bipartite(3, 3), CorpusKind::Control);
    push("frucht".into(), frucht(), CorpusKind::Control);
    out
}

/// Verifies every graph; results come back in input order whatever the
/// execution mode.
pub fn run_corpus(entries: &[(String, Multigraph)], opts: &VerifyOptions) -> Vec<Result<BoundReport>> {
    par::map(opts.exec, entries, |(id, g)| verify_spectral_bound(id, g, opts))
}
