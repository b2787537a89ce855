//! Backtracking automorphism search.
//!
//! Vertices are assigned in BFS order so that every non-root vertex has an
//! already-mapped parent; its image must then be a neighbour of the
//! parent's image. Each candidate is checked against all previously mapped
//! vertices (partial-row consistency), so every completed assignment is an
//! automorphism.

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::perm::Permutation;
use crate::symmetry::group::PermGroup;

/// Vertex cap for full enumeration of the automorphism group.
pub const DEFAULT_AUT_BUDGET: usize = 16;
/// Vertex cap for orbit computation, which only needs one witness per orbit
/// pair and never enumerates the group.
pub const DEFAULT_ORBIT_BUDGET: usize = 64;

const UNSET: usize = usize::MAX;

struct Search<'g> {
    g: &'g Multigraph,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    signature: Vec<Vec<u32>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Multigraph, root: usize) -> Self {
        let n = g.n();
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        for start in std::iter::once(root).chain(0..n) {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut head = order.len();
            order.push(start);
            while head < order.len() {
                let v = order[head];
                head += 1;
                for u in g.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        parent[u] = Some(v);
                        order.push(u);
                    }
                }
            }
        }
        let signature = (0..n)
            .map(|v| {
                let mut row = g.row(v).to_vec();
                row.sort_unstable();
                row.push(g.multiplicity(v, v));
                row
            })
            .collect();
        Search { g, order, parent, signature, image: vec![UNSET; n], used: vec![false; n] }
    }

    fn consistent(&self, depth: usize, w: usize, u: usize) -> bool {
        if self.used[u] || self.signature[u] != self.signature[w] {
            return false;
        }
        self.order[..depth].iter().all(|&x| self.g.multiplicity(w, x) == self.g.multiplicity(u, self.image[x]))
    }

    /// Depth-first extension. `visit` returns `false` to stop the search;
    /// the return value is `false` iff the search was stopped.
    fn extend(&mut self, depth: usize, pinned: Option<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.n();
        if depth == n {
            return visit(&self.image);
        }
        let w = self.order[depth];
        let candidates: Vec<usize> = match (depth, pinned, self.parent[w]) {
            (0, Some(t), _) => vec![t],
            (_, _, Some(p)) => self.g.neighbors(self.image[p]).collect(),
            _ => (0..n).collect(),
        };
        for u in candidates {
            if !self.consistent(depth, w, u) {
                continue;
            }
            self.image[w] = u;
            self.used[u] = true;
            let go_on = self.extend(depth + 1, pinned, visit);
            self.used[u] = false;
            self.image[w] = UNSET;
            if !go_on {
                return false;
            }
        }
        true
    }
}

pub fn automorphism_group(g: &Multigraph) -> Result<PermGroup> {
    automorphism_group_with(g, DEFAULT_AUT_BUDGET)
}

/// The full automorphism group, elements enumerated explicitly.
pub fn automorphism_group_with(g: &Multigraph, max_vertices: usize) -> Result<PermGroup> {
    if g.n() > max_vertices {
        return Err(Error::TooLarge { what: "automorphism enumeration", size: g.n(), budget: max_vertices });
    }
    let mut found = Vec::new();
    let mut search = Search::new(g, 0);
    search.extend(0, None, &mut |img| {
        found.push(Permutation::from_images(img.to_vec()).expect("search yields bijections"));
        true
    });
    PermGroup::from_elements(g.n(), found)
}

/// Some automorphism mapping `from` to `to`, if one exists.
pub fn find_automorphism(g: &Multigraph, from: usize, to: usize) -> Option<Permutation> {
    let mut result = None;
    let mut search = Search::new(g, from);
    search.extend(0, Some(to), &mut |img| {
        result = Some(Permutation::from_images(img.to_vec()).expect("search yields bijections"));
        false
    });
    result
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Orbits of `Aut(g)` on the vertices, ordered by least member, computed
/// from witness automorphisms without enumerating the group.
pub fn vertex_orbits(g: &Multigraph, max_vertices: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > max_vertices {
        return Err(Error::TooLarge { what: "automorphism orbit search", size: n, budget: max_vertices });
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        for &r in &reps {
            if find(&mut parent, r) == find(&mut parent, v) {
                break;
            }
            if let Some(sigma) = find_automorphism(g, r, v) {
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, sigma.apply(x)));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                break;
            }
        }
        if find(&mut parent, v) == v {
            reps.push(v);
        }
    }
    Ok(reps
        .iter()
        .map(|&r| {
            let root = find(&mut parent, r);
            VertexSet::new(n, (0..n).filter(|&x| find(&mut parent, x) == root)).expect("in range")
        })
        .collect())
}

pub fn is_graph_vertex_transitive(g: &Multigraph, max_vertices: usize) -> Result<bool> {
    Ok(vertex_orbits(g, max_vertices)?.len() == 1)
}
