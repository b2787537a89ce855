//! Standard graph families used by the corpus and in tests.

use super::Multigraph;

pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    Multigraph::from_edge_list(n, &edges).expect("valid cycle")
}

pub fn path(n: usize) -> Multigraph {
    assert!(n >= 1);
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1)).collect();
    Multigraph::from_edge_list(n, &edges).expect("valid path")
}

pub fn complete(n: usize) -> Multigraph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, 1));
        }
    }
    Multigraph::from_edge_list(n, &edges).expect("valid complete graph")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    assert!(a + b >= 1);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v, 1));
        }
    }
    Multigraph::from_edge_list(a + b, &edges).expect("valid complete bipartite graph")
}

/// Circulant graph on `Z_n`: `x ~ x ± s` for every jump `s`. A jump equal
/// to `n/2` contributes a single edge per vertex.
pub fn circulant(n: usize, jumps: &[usize]) -> Multigraph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for &s in jumps {
        let s = s % n;
        assert!(s != 0, "jump must be nonzero mod n");
        for x in 0..n {
            let y = (x + s) % n;
            // x + s and x - s coincide when 2s = n; emit that chord once
            if 2 * s == n && y < x {
                continue;
            }
            edges.push((x, y, 1));
        }
    }
    Multigraph::from_edge_list(n, &edges).expect("valid circulant")
}

/// Kneser graph `K(5, 2)`: vertices are the 2-subsets of `{0..4}` in
/// lexicographic order, adjacent when disjoint.
pub fn petersen() -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, e)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != e && b != c && b != e {
                edges.push((i, j, 1));
            }
        }
    }
    Multigraph::from_edge_list(10, &edges).expect("valid Petersen graph")
}

/// Hamiltonian cubic graph from LCF notation: the cycle `0..n` plus a chord
/// from `i` to `i + pattern[i mod len]`.
pub fn lcf(n: usize, pattern: &[i64]) -> Multigraph {
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    for i in 0..n {
        let j = (i as i64 + pattern[i % pattern.len()]).rem_euclid(n as i64) as usize;
        if i < j {
            edges.push((i, j, 1));
        }
    }
    Multigraph::from_edge_list(n, &edges).expect("valid LCF graph")
}

/// The Frucht graph: cubic, 12 vertices, trivial automorphism group.
pub fn frucht() -> Multigraph {
    lcf(12, &[-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2])
}

pub fn disjoint_union(a: &Multigraph, b: &Multigraph) -> Multigraph {
    let off = a.n();
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v, m)| (u + off, v + off, m)));
    Multigraph::from_edge_list(a.n() + b.n(), &edges).expect("valid union")
}
