//! Explicitly enumerated permutation groups.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::perm::Permutation;

/// Largest group order the index-two analysis will enumerate.
pub const DEFAULT_GROUP_BUDGET: usize = 5040;

/// A finite group of permutations of `0..n`, with every element listed in
/// canonical (lexicographic image-array) order.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    generators: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

fn closure(n: usize, gens: &[Permutation], max_order: usize, allowed: Option<&HashSet<&Permutation>>) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = s.compose(&x);
            if seen.contains(&y) {
                continue;
            }
            if let Some(allowed) = allowed {
                if !allowed.contains(&y) {
                    return Err(Error::NotAGroup(format!("product {:?} escapes the element list", y.images())));
                }
            }
            if out.len() == max_order {
                return Err(Error::TooLarge { what: "group order", size: max_order + 1, budget: max_order });
            }
            seen.insert(y.clone());
            out.push(y.clone());
            queue.push_back(y);
        }
    }
    Ok(out)
}

impl PermGroup {
    fn assemble(n: usize, mut elements: Vec<Permutation>, generators: Vec<Permutation>) -> Self {
        elements.sort();
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PermGroup { n, elements, index, generators }
    }

    pub fn trivial(n: usize) -> Self {
        Self::assemble(n, vec![Permutation::identity(n)], Vec::new())
    }

    /// The group generated by `gens`, failing once it exceeds `max_order`.
    pub fn generate(n: usize, gens: &[Permutation], max_order: usize) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != n) {
            return Err(Error::InvalidPermutation(format!("degree {} in a group on {n} points", bad.degree())));
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let elements = closure(n, &gens, max_order, None)?;
        Ok(Self::assemble(n, elements, gens))
    }

    /// Validates that `elements` form a group and picks generators greedily
    /// in canonical order.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        if let Some(bad) = elements.iter().find(|g| g.degree() != n) {
            return Err(Error::InvalidPermutation(format!("degree {} in a group on {n} points", bad.degree())));
        }
        elements.sort();
        elements.dedup();
        if elements.binary_search(&Permutation::identity(n)).is_err() {
            return Err(Error::NotAGroup("identity missing".into()));
        }
        let allowed: HashSet<&Permutation> = elements.iter().collect();
        let mut current: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
        let mut gens = Vec::new();
        for x in &elements {
            if current.contains(x) {
                continue;
            }
            gens.push(x.clone());
            current = closure(n, &gens, elements.len(), Some(&allowed))?.into_iter().collect();
        }
        Ok(Self::assemble(n, elements, gens))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Position of `p` in canonical order.
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Identity present, closed under inverses and under right
    /// multiplication by the generators (which, for a finite set, implies
    /// closure under composition).
    pub fn validate(&self) -> Result<()> {
        if !self.contains(&Permutation::identity(self.n)) {
            return Err(Error::NotAGroup("identity missing".into()));
        }
        for g in &self.elements {
            if !self.contains(&g.inverse()) {
                return Err(Error::NotAGroup(format!("inverse of {:?} missing", g.images())));
            }
            for s in &self.generators {
                if !self.contains(&g.compose(s)) {
                    return Err(Error::NotAGroup(format!("product with generator {:?} missing", s.images())));
                }
            }
        }
        let regenerated = closure(self.n, &self.generators, self.order(), None)?;
        if regenerated.len() != self.order() {
            return Err(Error::NotAGroup("generators do not span the element list".into()));
        }
        Ok(())
    }

    /// Orbit partition of `0..n`, ordered by least member.
    pub fn orbits(&self) -> Vec<VertexSet> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let mut members = vec![s];
            label[s] = out.len();
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = out.len();
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(VertexSet::new(self.n, members).expect("in range"));
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn is_transitive_on(&self, set: &VertexSet) -> bool {
        self.orbits().iter().any(|o| o == set)
    }

    pub fn stabilizer(&self, v: usize) -> Vec<&Permutation> {
        self.elements.iter().filter(|g| g.apply(v) == v).collect()
    }

    /// For a transitive action, the number `t = |G|/n` of solutions of
    /// `g·u = v`, verified over every ordered pair.
    pub fn transitivity_order(&self) -> Result<usize> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = self.n;
        let t = self.order() / n;
        let mut count = vec![0usize; n * n];
        for g in &self.elements {
            for u in 0..n {
                count[u * n + g.apply(u)] += 1;
            }
        }
        for u in 0..n {
            for v in 0..n {
                let c = count[u * n + v];
                if c != t || t * n != self.order() {
                    return Err(Error::InconsistentOrder { u, v, count: c, expected: t });
                }
            }
        }
        Ok(t)
    }

    pub fn is_normal_subgroup(&self, sub: &PermGroup) -> bool {
        sub.elements.iter().all(|h| self.contains(h))
            && self.generators.iter().all(|g| {
                let gi = g.inverse();
                sub.generators.iter().all(|h| sub.contains(&g.compose(h).compose(&gi)))
            })
    }

    pub fn index_two_subgroups(&self) -> Result<Vec<PermGroup>> {
        self.index_two_subgroups_with(DEFAULT_GROUP_BUDGET)
    }

    /// Every subgroup of index two.
    ///
    /// Each such subgroup contains `K = ⟨g², [a, b]⟩`, and `G/K` is an
    /// elementary abelian 2-group `F₂^r`. The index-two subgroups are the
    /// preimages of the `2^r − 1` hyperplanes `{x : f·x = 0}`, listed by
    /// ascending functional `f` over a basis chosen in canonical order.
    pub fn index_two_subgroups_with(&self, budget: usize) -> Result<Vec<PermGroup>> {
        if self.order() > budget {
            return Err(Error::TooLarge { what: "index-two enumeration group order", size: self.order(), budget });
        }
        if self.order() % 2 == 1 {
            return Ok(Vec::new());
        }
        let mut kgens: Vec<Permutation> = self.elements.iter().map(|g| g.compose(g)).collect();
        for a in &self.generators {
            for b in &self.generators {
                kgens.push(a.compose(b).compose(&a.inverse()).compose(&b.inverse()));
            }
        }
        kgens.sort();
        kgens.dedup();
        let kernel = PermGroup::generate(self.n, &kgens, self.order())?;

        let mut label: Vec<Option<u64>> = vec![None; self.order()];
        let mut labeled: Vec<usize> = Vec::with_capacity(self.order());
        for k in kernel.elements() {
            let i = self.index_of(k).ok_or_else(|| Error::NotAGroup("square outside group".into()))?;
            label[i] = Some(0);
            labeled.push(i);
        }
        let mut rank = 0u32;
        for (xi, x) in self.elements.iter().enumerate() {
            if label[xi].is_some() {
                continue;
            }
            let snapshot = labeled.clone();
            for yi in snapshot {
                let z = x.compose(&self.elements[yi]);
                let zi = self.index_of(&z).ok_or_else(|| Error::NotAGroup("product outside group".into()))?;
                label[zi] = Some(label[yi].expect("labeled") | 1 << rank);
                labeled.push(zi);
            }
            rank += 1;
        }
        let label: Vec<u64> = label.into_iter().map(|l| l.expect("every coset labeled")).collect();

        (1u64..1 << rank)
            .map(|f| {
                let members: Vec<Permutation> = self
                    .elements
                    .iter()
                    .zip(&label)
                    .filter(|(_, &l)| (l & f).count_ones() % 2 == 0)
                    .map(|(g, _)| g.clone())
                    .collect();
                PermGroup::from_elements(self.n, members)
            })
            .collect()
    }

    pub fn condition1_holds(&self) -> Result<bool> {
        self.condition1_holds_with(DEFAULT_GROUP_BUDGET)
    }

    /// No index-two subgroup of a transitive group is itself transitive.
    pub fn condition1_holds_with(&self, budget: usize) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(!self.index_two_subgroups_with(budget)?.iter().any(PermGroup::is_transitive))
    }

    pub fn descend_to_condition1(&self) -> Result<PermGroup> {
        self.descend_to_condition1_with(DEFAULT_GROUP_BUDGET)
    }

    /// Repeatedly passes to the first transitive index-two subgroup until
    /// none is left. The order halves at every step.
    pub fn descend_to_condition1_with(&self, budget: usize) -> Result<PermGroup> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let mut current = self.clone();
        loop {
            let next = current.index_two_subgroups_with(budget)?.into_iter().find(PermGroup::is_transitive);
            match next {
                Some(h) => current = h,
                None => return Ok(current),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(n: usize, k: usize) -> Permutation {
        Permutation::from_images((0..n).map(|i| (i + k) % n).collect()).unwrap()
    }

    fn refl(n: usize) -> Permutation {
        Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap()
    }

    fn dihedral(n: usize) -> PermGroup {
        PermGroup::generate(n, &[rot(n, 1), refl(n)], 1000).unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        PermGroup::generate(n, &[rot(n, 1)], 1000).unwrap()
    }

    #[test]
    fn generation_and_validation() {
        let d5 = dihedral(5);
        assert_eq!(d5.order(), 10);
        d5.validate().unwrap();
        let rebuilt = PermGroup::from_elements(5, d5.elements().to_vec()).unwrap();
        assert_eq!(rebuilt, d5);
        rebuilt.validate().unwrap();
    }

    #[test]
    fn from_elements_rejects_non_groups() {
        let els = vec![Permutation::identity(3), Permutation::from_images(vec![1, 2, 0]).unwrap()];
        assert!(matches!(PermGroup::from_elements(3, els), Err(Error::NotAGroup(_))));
        let els = vec![Permutation::from_images(vec![1, 0]).unwrap()];
        assert!(matches!(PermGroup::from_elements(2, els), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn generation_budget() {
        assert!(matches!(PermGroup::generate(5, &[rot(5, 1), refl(5)], 9), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn transitivity_orders() {
        assert_eq!(cyclic(5).transitivity_order(), Ok(1));
        assert_eq!(dihedral(5).transitivity_order(), Ok(2));
        let fix = PermGroup::generate(3, &[Permutation::from_images(vec![0, 2, 1]).unwrap()], 10).unwrap();
        assert_eq!(fix.transitivity_order(), Err(Error::NotTransitive));
    }

    #[test]
    fn index_two() {
        assert!(cyclic(5).index_two_subgroups().unwrap().is_empty());
        let subs = dihedral(5).index_two_subgroups().unwrap();
        assert_eq!(subs, vec![cyclic(5)]);
        let c4 = cyclic(4).index_two_subgroups().unwrap();
        assert_eq!(c4.len(), 1);
        assert_eq!(c4[0], PermGroup::generate(4, &[rot(4, 2)], 10).unwrap());
        // D4 has three index-two subgroups
        let d4 = dihedral(4);
        let subs = d4.index_two_subgroups().unwrap();
        assert_eq!(subs.len(), 3);
        for h in &subs {
            assert_eq!(h.order(), 4);
            assert!(d4.is_normal_subgroup(h));
        }
        assert!(matches!(dihedral(5).index_two_subgroups_with(5), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn condition1_and_descent() {
        assert_eq!(cyclic(5).condition1_holds(), Ok(true));
        assert_eq!(dihedral(5).condition1_holds(), Ok(false));
        assert_eq!(dihedral(6).condition1_holds(), Ok(false));
        assert_eq!(dihedral(5).descend_to_condition1().unwrap(), cyclic(5));
        assert_eq!(cyclic(5).descend_to_condition1().unwrap(), cyclic(5));
        assert_eq!(dihedral(9).descend_to_condition1().unwrap(), cyclic(9));
        let h = dihedral(8).descend_to_condition1().unwrap();
        assert!(h.is_transitive());
        assert_eq!(h.condition1_holds(), Ok(true));
    }
}
