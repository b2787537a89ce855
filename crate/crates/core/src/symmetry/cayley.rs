//! Concrete groups as permutation groups, and Cayley graphs over them.
//!
//! Vertex `i` of a Cayley graph is the `i`-th group element in canonical
//! order, and `x ~ y` with multiplicity equal to the number of copies of
//! `y·x⁻¹` in the connection multiset.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::perm::Permutation;
use crate::symmetry::group::PermGroup;

const MAX_SYMMETRIC: usize = 5;
const MAX_CAYLEY_ORDER: usize = 5040;

/// Parsed group description: `cyclic:n`, `dihedral:n`, `symmetric:k` or
/// `product:(a,b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Symmetries of the `n`-gon, order `2n`, acting on `n` points.
    Dihedral(usize),
    Symmetric(usize),
    /// Direct product acting on the disjoint union of the factors' points.
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(k) => write!(f, "symmetric:{k}"),
            GroupSpec::Product(a, b) => write!(f, "product:({a},{b})"),
        }
    }
}

/// Splits on commas that are not nested inside brackets or parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let err = || Error::GroupSpec(text.to_string());
        let (kind, arg) = text.split_once(':').ok_or_else(err)?;
        let num = || arg.trim().parse::<usize>().map_err(|_| err());
        let spec = match kind.trim() {
            "cyclic" => GroupSpec::Cyclic(num()?),
            "dihedral" => GroupSpec::Dihedral(num()?),
            "symmetric" => GroupSpec::Symmetric(num()?),
            "product" => {
                let inner = arg.trim().strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(err)?;
                match split_top_level(inner).as_slice() {
                    [a, b] => GroupSpec::Product(Box::new(Self::parse(a)?), Box::new(Self::parse(b)?)),
                    _ => return Err(err()),
                }
            }
            _ => return Err(err()),
        };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<()> {
        match *self {
            GroupSpec::Cyclic(n) if n >= 1 => Ok(()),
            GroupSpec::Dihedral(n) if n >= 3 => Ok(()),
            GroupSpec::Symmetric(k) if (1..=MAX_SYMMETRIC).contains(&k) => Ok(()),
            GroupSpec::Product(ref a, ref b) => a.check().and(b.check()),
            _ => Err(Error::GroupSpec(format!("{self} is out of the supported range"))),
        }
    }

    /// Number of points the group acts on.
    pub fn points(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Symmetric(n) => *n,
            GroupSpec::Product(a, b) => a.points() + b.points(),
        }
    }

    fn generators(&self) -> Vec<Permutation> {
        match *self {
            GroupSpec::Cyclic(n) => vec![rotation(n, 1)],
            GroupSpec::Dihedral(n) => vec![rotation(n, 1), reflection(n, 0)],
            GroupSpec::Symmetric(k) => {
                if k < 2 {
                    return Vec::new();
                }
                let mut swap: Vec<usize> = (0..k).collect();
                swap.swap(0, 1);
                let cyc: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
                vec![Permutation::from_images(swap).unwrap(), Permutation::from_images(cyc).unwrap()]
            }
            GroupSpec::Product(ref a, ref b) => {
                let (na, nb) = (a.points(), b.points());
                let mut gens: Vec<Permutation> =
                    a.generators().iter().map(|g| embed(g, &Permutation::identity(nb))).collect();
                gens.extend(b.generators().iter().map(|g| embed(&Permutation::identity(na), g)));
                gens
            }
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        PermGroup::generate(self.points(), &self.generators(), MAX_CAYLEY_ORDER)
    }
}

/// Rotation `i ↦ i + k (mod n)`.
pub fn rotation(n: usize, k: i64) -> Permutation {
    let k = k.rem_euclid(n as i64) as usize;
    Permutation::from_images((0..n).map(|i| (i + k) % n).collect()).expect("rotation")
}

/// Reflection `i ↦ k − i (mod n)`.
pub fn reflection(n: usize, k: i64) -> Permutation {
    let k = k.rem_euclid(n as i64) as usize;
    Permutation::from_images((0..n).map(|i| (k + n - i) % n).collect()).expect("reflection")
}

/// `(a, b)` acting on the disjoint union of their point sets.
pub fn embed(a: &Permutation, b: &Permutation) -> Permutation {
    let na = a.degree();
    let images = a.images().iter().copied().chain(b.images().iter().map(|&x| x + na)).collect();
    Permutation::from_images(images).expect("embedding")
}

/// Parses a comma-separated connection multiset for `spec`.
///
/// Tokens: a signed integer `k` (rotation by `k` in cyclic and dihedral
/// groups), `s<k>` (dihedral reflection `i ↦ k − i`), `#i` (the `i`-th
/// element in canonical order), or an explicit image array such as
/// `[1 0 2]`.
pub fn parse_connection(spec: &GroupSpec, group: &PermGroup, text: &str) -> Result<Vec<Permutation>> {
    let n = group.n();
    split_top_level(text)
        .into_iter()
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let bad = || Error::GroupSpec(format!("cannot read connection element {tok:?} for {spec}"));
            let p = if let Some(idx) = tok.strip_prefix('#') {
                let i: usize = idx.parse().map_err(|_| bad())?;
                group.elements().get(i).cloned().ok_or_else(bad)?
            } else if let Some(body) = tok.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                let images = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_images(images)?
            } else if let (Some(k), GroupSpec::Dihedral(m)) = (tok.strip_prefix('s'), spec) {
                reflection(*m, k.parse().map_err(|_| bad())?)
            } else {
                let k: i64 = tok.parse().map_err(|_| bad())?;
                match spec {
                    GroupSpec::Cyclic(m) | GroupSpec::Dihedral(m) => rotation(*m, k),
                    _ => return Err(bad()),
                }
            };
            if p.degree() != n || !group.contains(&p) {
                return Err(Error::GroupSpec(format!("connection element {tok:?} is not in {spec}")));
            }
            Ok(p)
        })
        .collect()
}

/// Cayley graph of `group` with respect to an inverse-closed multiset.
pub fn cayley_graph(group: &PermGroup, connection: &[Permutation]) -> Result<Multigraph> {
    let mut counts: BTreeMap<&Permutation, i64> = BTreeMap::new();
    for s in connection {
        if !group.contains(s) {
            return Err(Error::NotAGroup(format!("connection element {:?} not in group", s.images())));
        }
        *counts.entry(s).or_default() += 1;
    }
    for (s, &c) in &counts {
        let inv = s.inverse();
        if counts.get(&inv).copied().unwrap_or(0) != c {
            return Err(Error::NotSymmetricSet);
        }
    }
    let mut edges = Vec::new();
    for (xi, x) in group.elements().iter().enumerate() {
        for s in connection {
            let yi = group.index_of(&s.compose(x)).expect("group is closed");
            // each unordered pair is produced from both ends; keep one
            if xi <= yi {
                edges.push((xi, yi, 1));
            }
        }
    }
    let g = Multigraph::from_edge_list(group.order(), &edges)?;
    // loops (s = identity) are produced once per copy, other edges once per direction
    debug_assert!(g.validate_regular().map(|d| d as usize == connection.len()).unwrap_or(false));
    Ok(g)
}

/// Right translations `x ↦ x·g` as a group acting on the Cayley graph's
/// vertices. These preserve `y·x⁻¹` and so act by automorphisms, regularly.
pub fn translation_group(group: &PermGroup) -> Result<PermGroup> {
    let perm_for = |g: &Permutation| {
        let images = group.elements().iter().map(|x| group.index_of(&x.compose(g)).expect("closed")).collect();
        Permutation::from_images(images).expect("translation is a bijection")
    };
    let gens: Vec<Permutation> = group.generators().iter().map(perm_for).collect();
    PermGroup::generate(group.order(), &gens, group.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn cayley(spec: &str, conn: &str) -> Multigraph {
        let spec = GroupSpec::parse(spec).unwrap();
        let group = spec.build().unwrap();
        let c = parse_connection(&spec, &group, conn).unwrap();
        cayley_graph(&group, &c).unwrap()
    }

    #[test]
    fn parse_specs() {
        assert_eq!(GroupSpec::parse("cyclic:5").unwrap(), GroupSpec::Cyclic(5));
        let p = GroupSpec::parse("product:(cyclic:2,product:(cyclic:3,dihedral:3))").unwrap();
        assert_eq!(p.to_string(), "product:(cyclic:2,product:(cyclic:3,dihedral:3))");
        assert_eq!(p.build().unwrap().order(), 36);
        assert!(GroupSpec::parse("symmetric:6").is_err());
        assert!(GroupSpec::parse("dihedral:2").is_err());
        assert!(GroupSpec::parse("klein").is_err());
        assert_eq!(GroupSpec::parse("symmetric:4").unwrap().build().unwrap().order(), 24);
    }

    #[test]
    fn cyclic_cycle() {
        assert_eq!(cayley("cyclic:5", "+1,-1"), cycle(5));
    }

    #[test]
    fn cyclic_four_with_involution() {
        let g = cayley("cyclic:4", "+1,-1,+2");
        assert_eq!(g.validate_regular(), Ok(3));
        assert_eq!(g, complete(4));
    }

    #[test]
    fn dihedral_reflections_give_k33() {
        let g = cayley("dihedral:3", "s0,s1,s2");
        assert_eq!(g.validate_regular(), Ok(3));
        assert!(g.is_bipartite());
        assert_eq!(g.edges().len(), 9);
    }

    #[test]
    fn inverse_closure_is_enforced() {
        let spec = GroupSpec::parse("cyclic:5").unwrap();
        let group = spec.build().unwrap();
        let c = parse_connection(&spec, &group, "1,1,-1").unwrap();
        assert_eq!(cayley_graph(&group, &c), Err(Error::NotSymmetricSet));
        let c = parse_connection(&spec, &group, "1,1,-1,-1").unwrap();
        assert_eq!(cayley_graph(&group, &c).unwrap().multiplicity(0, 1), 2);
    }

    #[test]
    fn identity_in_connection_is_a_loop() {
        let g = cayley("cyclic:3", "0,1,-1");
        assert_eq!(g.multiplicity(0, 0), 1);
        assert_eq!(g.validate_regular(), Ok(3));
    }

    #[test]
    fn translations_are_automorphisms() {
        let spec = GroupSpec::parse("symmetric:3").unwrap();
        let group = spec.build().unwrap();
        let conn = parse_connection(&spec, &group, "[1 0 2],[1 2 0],[2 0 1]").unwrap();
        let g = cayley_graph(&group, &conn).unwrap();
        let t = translation_group(&group).unwrap();
        assert_eq!(t.order(), 6);
        assert!(t.is_transitive());
        assert!(t.elements().iter().all(|p| g.is_automorphism(p)));
    }
}
