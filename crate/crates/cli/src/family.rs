//! `--family` strings for `vtgap gen`.

use anyhow::{bail, Context, Result};
use vtgap::graph::families;
use vtgap::symmetry::cayley::{cayley_graph, parse_connection, GroupSpec};
use vtgap::Multigraph;

fn number(text: &str, what: &str) -> Result<usize> {
    text.trim().parse().with_context(|| format!("{what} must be a non-negative integer, got {text:?}"))
}

fn list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(|s| number(s, what)).collect()
}

/// Builds a graph from a named family (`cycle:n`, `path:n`, `complete:n`,
/// `complete-bipartite:a,b`, `circulant:n:j1,j2,..`, `petersen`, `frucht`)
/// or from a group spec together with a connection set.
pub fn build(family: &str, connection: Option<&str>) -> Result<Multigraph> {
    let (head, rest) = family.split_once(':').unwrap_or((family, ""));
    let graph = match head {
        "cyclic" | "dihedral" | "symmetric" | "product" => {
            let Some(connection) = connection else {
                bail!("group family {family:?} needs --connection");
            };
            let spec = GroupSpec::parse(family)?;
            let group = spec.build()?;
            let set = parse_connection(&spec, &group, connection)?;
            return Ok(cayley_graph(&group, &set)?);
        }
        "cycle" => {
            let n = number(rest, "cycle length")?;
            if n < 3 {
                bail!("cycle needs at least 3 vertices");
            }
            families::cycle(n)
        }
        "path" => match number(rest, "path length")? {
            0 => bail!("path needs at least 1 vertex"),
            n => families::path(n),
        },
        "complete" => match number(rest, "vertex count")? {
            0 => bail!("complete graph needs at least 1 vertex"),
            n => families::complete(n),
        },
        "complete-bipartite" => match list(rest, "part size")?[..] {
            [a, b] if a > 0 && b > 0 => families::complete_bipartite(a, b),
            _ => bail!("expected complete-bipartite:a,b with positive parts"),
        },
        "circulant" => {
            let (n, jumps) = rest.split_once(':').context("expected circulant:n:j1,j2,...")?;
            let n = number(n, "vertex count")?;
            let jumps = list(jumps, "jump")?;
            if n < 2 || jumps.is_empty() || jumps.iter().any(|&j| j == 0 || j > n / 2) {
                bail!("circulant jumps must lie in 1..={}", n / 2);
            }
            families::circulant(n, &jumps)
        }
        "petersen" if rest.is_empty() => families::petersen(),
        "frucht" if rest.is_empty() => families::frucht(),
        _ => bail!("unknown family {family:?}"),
    };
    if connection.is_some() {
        bail!("--connection only applies to group families");
    }
    Ok(graph)
}
