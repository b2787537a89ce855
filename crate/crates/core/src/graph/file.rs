//! JSON graph file: `{"n": <int>, "edges": [[u, v, m], ...]}` with 0-based
//! vertices, `u <= v` on output and loops written as `u = v`.

use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[u64; 3]>,
}

impl GraphFile {
    pub fn from_graph(g: &Multigraph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v, m)| [u as u64, v as u64, m as u64]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Multigraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[u, v, m] in &self.edges {
            let m = u32::try_from(m).map_err(|_| Error::Format(format!("multiplicity {m} too large")))?;
            edges.push((u as usize, v as usize, m));
        }
        Multigraph::from_edge_list(self.n, &edges)
    }
}

pub fn to_json(g: &Multigraph) -> String {
    serde_json::to_string(&GraphFile::from_graph(g)).expect("graph file serializes")
}

pub fn from_json(text: &str) -> Result<Multigraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.to_graph()
}
