//! Finite groups given by multiplication tables.
//!
//! Elements are plain indices `0..order`. Index 0 is always the identity;
//! tables built with [`FiniteGroup::from_generators`] list the remaining
//! elements breadth-first by word length in the generators.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table (`mul[a * order + b]`
    /// is the index of `a·b`) and checks every group axiom exhaustively.
    pub fn from_table(
        order: usize,
        mul: Vec<usize>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("empty element set".into()));
        }
        if mul.len() != order * order || mul.iter().any(|&x| x >= order) {
            return Err(Error::NotAGroup("table has wrong shape or out-of-range entries".into()));
        }
        if let Some(labels) = &labels {
            if labels.len() != order {
                return Err(Error::NotAGroup("label count differs from order".into()));
            }
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::NotAGroup(format!("element 0 is not an identity for {a}")));
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| at(a, b) == 0)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            if at(b, a) != 0 {
                return Err(Error::NotAGroup(format!("left and right inverse of {a} differ")));
            }
            inv[a] = b;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(format!("not associative on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        if generators.iter().any(|&g| g >= order) {
            return Err(Error::NotAGroup("generator out of range".into()));
        }
        let group = FiniteGroup { order, mul, inv, generators, labels };
        let span = group.generated_set(&group.generators);
        if span.len() != order {
            return Err(Error::NotAGroup(format!(
                "generators span {} of {} elements",
                span.len(),
                order
            )));
        }
        Ok(group)
    }

    /// Closes `gens` under `compose` (where `compose(a, b)` means "`a` after
    /// `b`") and returns the resulting table together with the element
    /// objects in canonical order: identity first, then breadth-first by
    /// word length with ties broken by discovery order.
    pub fn from_generators<T, F>(identity: T, gens: &[T], compose: F) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in gens {
                let h = compose(s, &elems[i]);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(h);
                }
            }
        }
        let order = elems.len();
        let mut mul = Vec::with_capacity(order * order);
        for a in &elems {
            for b in &elems {
                let c = compose(a, b);
                mul.push(*index.get(&c).ok_or_else(|| {
                    Error::NotAGroup("composition leaves the generated set".into())
                })?);
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let group = FiniteGroup::from_table(order, mul, generators, None)?;
        Ok((group, elems))
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(labels) => labels[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let mut acc = 0;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(g, x);
            k += 1;
        }
        k
    }

    /// `h·g·h⁻¹`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted closure of `gens` under multiplication.
    pub fn generated_set(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(s, x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }
}

/// A subgroup, stored as the sorted list of its member indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: Vec<usize> = members.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if members.first() != Some(&0) {
            return Err(Error::InvalidSubgroup("identity missing".into()));
        }
        if members.iter().any(|&m| m >= group.order()) {
            return Err(Error::InvalidSubgroup("member out of range".into()));
        }
        let sub = Subgroup { members };
        for &a in &sub.members {
            if !sub.contains(group.inv(a)) {
                return Err(Error::InvalidSubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in &sub.members {
                if !sub.contains(group.mul(a, b)) {
                    return Err(Error::InvalidSubgroup(format!("not closed under product ({a}, {b})")));
                }
            }
        }
        Ok(sub)
    }

    pub fn generated_by(group: &FiniteGroup, gens: &[usize]) -> Self {
        Subgroup { members: group.generated_set(gens) }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { members: group.elements().collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Smallest-index element generating the subgroup, if it is cyclic.
    pub fn cyclic_generator(&self, group: &FiniteGroup) -> Option<usize> {
        self.members
            .iter()
            .copied()
            .find(|&g| group.element_order(g) == self.order())
    }

    /// A minimal generating list, greedy in index order.
    pub fn generators(&self, group: &FiniteGroup) -> Vec<usize> {
        if let Some(g) = self.cyclic_generator(group) {
            return if g == 0 { vec![] } else { vec![g] };
        }
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for &m in &self.members {
            if span.binary_search(&m).is_err() {
                gens.push(m);
                span = group.generated_set(&gens);
            }
        }
        gens
    }

    /// `h·H·h⁻¹`
    pub fn conjugate_by(&self, group: &FiniteGroup, h: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&m| group.conjugate(m, h)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn is_conjugate_to(&self, group: &FiniteGroup, other: &Subgroup) -> bool {
        self.order() == other.order()
            && group.elements().any(|h| &self.conjugate_by(group, h) == other)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes ordered by their minimal member, which is also the
/// stored representative.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<ConjugacyClass> {
    let mut assigned = vec![false; group.order()];
    let mut classes = Vec::new();
    for g in group.elements() {
        if assigned[g] {
            continue;
        }
        let members: BTreeSet<usize> = group.elements().map(|h| group.conjugate(g, h)).collect();
        for &m in &members {
            assigned[m] = true;
        }
        classes.push(ConjugacyClass { representative: g, members: members.into_iter().collect() });
    }
    classes
}

/// Index of the class containing each element.
pub fn class_index(classes: &[ConjugacyClass], order: usize) -> Vec<usize> {
    let mut idx = vec![0; order];
    for (i, c) in classes.iter().enumerate() {
        for &m in &c.members {
            idx[m] = i;
        }
    }
    idx
}

pub fn elements_of_order_dividing(group: &FiniteGroup, k: u64) -> Vec<usize> {
    group.elements().filter(|&g| group.pow(g, k) == 0).collect()
}

pub fn centralizer(group: &FiniteGroup, set: &[usize]) -> Subgroup {
    let members = group
        .elements()
        .filter(|&h| set.iter().all(|&s| group.mul(h, s) == group.mul(s, h)))
        .collect();
    Subgroup { members }
}

/// Double cosets `H1·g·H2` partitioning the whole group, ordered by minimal
/// representative.
pub fn double_cosets(group: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> Vec<Vec<usize>> {
    double_cosets_in(group, &Subgroup::whole(group), h1, h2)
}

/// Double cosets `H1·g·H2` partitioning `ambient`; both `h1` and `h2` must
/// lie inside `ambient`.
pub fn double_cosets_in(
    group: &FiniteGroup,
    ambient: &Subgroup,
    h1: &Subgroup,
    h2: &Subgroup,
) -> Vec<Vec<usize>> {
    debug_assert!(h1.is_subset_of(ambient) && h2.is_subset_of(ambient));
    let mut seen = vec![false; group.order()];
    let mut cosets = Vec::new();
    for &g in ambient.members() {
        if seen[g] {
            continue;
        }
        let mut set = BTreeSet::new();
        for &a in h1.members() {
            let ag = group.mul(a, g);
            for &b in h2.members() {
                set.insert(group.mul(ag, b));
            }
        }
        for &m in &set {
            seen[m] = true;
        }
        cosets.push(set.into_iter().collect());
    }
    cosets
}
