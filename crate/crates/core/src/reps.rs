//! Conjugacy classes of homomorphisms from cyclic groups into a target, and
//! the product spaces of isotropy representations they assemble into.
//!
//! Compact targets are described by eigenvalue data only. A homomorphism
//! `C_k → U(n)` is determined up to conjugacy by the multiset of exponents
//! `j` of the eigenvalues `e^{2πij/k}` of the image of the generator; for
//! SU(2) the eigenvalues come in a pair `{j, −j}`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::conjugacy_classes;
use crate::isotropy::IsotropyGroupoid;
use crate::target::TargetGroup;

/// Largest class list materialized by [`RepSpace::classes`].
pub const MATERIALIZE_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum HomEncoding {
    /// Minimal element of the conjugacy class of the generator's image.
    Element(usize),
    /// Circle weight `j mod k`.
    Residue(u64),
    /// SU(2) eigenvalue pair `{±j}` with `0 ≤ j ≤ ⌊k/2⌋`.
    Pair(u64),
    /// U(n) eigenvalue exponents, sorted.
    Multiset(Vec<u64>),
}

/// A conjugacy class of homomorphisms `C_k → G`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HomClass {
    pub k: u64,
    pub encoding: HomEncoding,
}

impl HomClass {
    pub fn is_trivial(&self) -> bool {
        match &self.encoding {
            HomEncoding::Element(g) => *g == 0,
            HomEncoding::Residue(j) | HomEncoding::Pair(j) => *j == 0,
            HomEncoding::Multiset(js) => js.iter().all(|&j| j == 0),
        }
    }
}

impl fmt::Display for HomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.encoding {
            HomEncoding::Element(g) => write!(f, "[{g}]"),
            HomEncoding::Residue(j) => write!(f, "{j}/{}", self.k),
            HomEncoding::Pair(j) => write!(f, "±{j}/{}", self.k),
            HomEncoding::Multiset(js) => write!(f, "({})/{}", js.iter().join(","), self.k),
        }
    }
}

/// All classes of homomorphisms `C_k → target`, in canonical order.
pub fn hom_classes(k: u64, target: &TargetGroup) -> Vec<HomClass> {
    assert!(k >= 1, "source order must be positive");
    let class = |encoding| HomClass { k, encoding };
    match target {
        TargetGroup::Circle => (0..k).map(|j| class(HomEncoding::Residue(j))).collect(),
        TargetGroup::SpecialUnitary2 => (0..=k / 2).map(|j| class(HomEncoding::Pair(j))).collect(),
        TargetGroup::Unitary(n) => (0..k)
            .combinations_with_replacement(*n as usize)
            .map(|js| class(HomEncoding::Multiset(js)))
            .collect(),
        TargetGroup::Finite { group, .. } => conjugacy_classes(group)
            .into_iter()
            .filter(|c| group.pow(c.representative, k) == group.identity())
            .map(|c| class(HomEncoding::Element(c.representative)))
            .collect(),
    }
}

fn binomial(n: u128, r: u128) -> Option<u128> {
    let r = r.min(n - r);
    (0..r).try_fold(1u128, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}

/// `|hom_classes(k, target)|` without listing the classes.
pub fn hom_class_count(k: u64, target: &TargetGroup) -> Result<u128> {
    Ok(match target {
        TargetGroup::Circle => k as u128,
        TargetGroup::SpecialUnitary2 => (k / 2 + 1) as u128,
        TargetGroup::Unitary(n) => {
            binomial(*n as u128 + k as u128 - 1, *n as u128).ok_or(Error::Overflow)?
        }
        TargetGroup::Finite { .. } => hom_classes(k, target).len() as u128,
    })
}

/// An isotropy representation up to conjugacy: one class per vertex orbit.
/// Edge groups are trivial and carry the trivial class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RepClass {
    pub assignment: Vec<HomClass>,
}

impl fmt::Display for RepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.assignment.iter().join(", "))
    }
}

#[derive(Debug, Clone)]
pub struct RepSpace {
    pub target: TargetGroup,
    pub signature: Vec<usize>,
    pub factors: Vec<Vec<HomClass>>,
    pub count: u128,
    /// The orbit graph has a cycle and the target is disconnected, so the
    /// product describes split bundles only.
    pub split_only: bool,
}

/// The product of per-vertex class lists for a groupoid with trivial edge
/// groups.
pub fn enumerate_reps(groupoid: &IsotropyGroupoid, target: &TargetGroup) -> Result<RepSpace> {
    let signature = groupoid.signature();
    let factors: Vec<Vec<HomClass>> = signature.iter().map(|&k| hom_classes(k as u64, target)).collect();
    let count = factors
        .iter()
        .try_fold(1u128, |acc, f| acc.checked_mul(f.len() as u128))
        .ok_or(Error::Overflow)?;
    let split_only = !target.is_connected() && !groupoid.is_tree();
    Ok(RepSpace { target: target.clone(), signature, factors, count, split_only })
}

impl RepSpace {
    /// Classes in lexicographic order over the factors.
    pub fn iter(&self) -> Box<dyn Iterator<Item = RepClass> + '_> {
        if self.factors.is_empty() {
            return Box::new(std::iter::once(RepClass { assignment: vec![] }));
        }
        Box::new(
            self.factors
                .iter()
                .map(|f| f.iter().cloned())
                .multi_cartesian_product()
                .map(|assignment| RepClass { assignment }),
        )
    }

    pub fn classes(&self) -> Result<Vec<RepClass>> {
        if self.count > MATERIALIZE_LIMIT {
            return Err(Error::TooManyClasses { count: self.count, limit: MATERIALIZE_LIMIT });
        }
        Ok(self.iter().collect())
    }

    pub fn export(&self) -> RepSpaceExport {
        RepSpaceExport {
            target: self.target.clone(),
            factors: self
                .factors
                .iter()
                .zip(&self.signature)
                .enumerate()
                .map(|(cell, (classes, &k))| FactorExport {
                    cell,
                    k,
                    classes: classes.iter().map(|c| c.encoding.clone()).collect(),
                })
                .collect(),
            count: self.count,
            split_only: self.split_only,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorExport {
    pub cell: usize,
    pub k: usize,
    pub classes: Vec<HomEncoding>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepSpaceExport {
    pub target: TargetGroup,
    pub factors: Vec<FactorExport>,
    pub count: u128,
    pub split_only: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::group::{elements_of_order_dividing, FiniteGroup};
    use crate::isotropy::isotropy_groupoid;
    use crate::orbit::orbit_graph;
    use crate::skeleton::build_skeleton;
    use proptest::prelude::*;
    use std::collections::BTreeSet;
    use std::sync::Arc;

    fn groupoid(f: Family) -> IsotropyGroupoid {
        isotropy_groupoid(Arc::new(orbit_graph(Arc::new(build_skeleton(f))).unwrap())).unwrap()
    }

    fn d6() -> TargetGroup {
        TargetGroup::from_family(Family::Dihedral(3))
    }

    #[test]
    fn spot_values() {
        for t in [TargetGroup::Circle, TargetGroup::SpecialUnitary2, TargetGroup::Unitary(3), d6()] {
            let c = hom_classes(1, &t);
            assert_eq!(c.len(), 1);
            assert!(c[0].is_trivial());
        }
        let su = hom_classes(3, &TargetGroup::SpecialUnitary2);
        assert_eq!(su.iter().map(|c| c.encoding.clone()).collect::<Vec<_>>(), [HomEncoding::Pair(0), HomEncoding::Pair(1)]);
        assert_eq!(hom_classes(2, &d6()).len(), 2);
        assert_eq!(hom_classes(3, &d6()).len(), 2);
        assert_eq!(hom_classes(6, &d6()).len(), 3);
    }

    /// Brute-force SU(2) count: unordered eigenvalue pairs `{j, −j mod k}`.
    fn su2_pairs(k: u64) -> usize {
        (0..k).map(|j| j.min((k - j) % k)).collect::<BTreeSet<_>>().len()
    }

    /// Brute-force U(n) count: orbits of `S_n` on exponent tuples.
    fn unitary_orbits(k: u64, n: usize) -> usize {
        (0..n)
            .map(|_| 0..k)
            .multi_cartesian_product()
            .map(|mut v| {
                v.sort_unstable();
                v
            })
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Conjugacy classes counted by orbit enumeration, not by class lists.
    fn finite_count(g: &FiniteGroup, k: u64) -> usize {
        let elems = elements_of_order_dividing(g, k);
        elems
            .iter()
            .map(|&x| g.elements().map(|h| g.conjugate(x, h)).min().unwrap())
            .collect::<BTreeSet<_>>()
            .len()
    }

    proptest! {
        #[test]
        fn counts_match_brute_force(k in 1u64..=12, n in 1usize..=3) {
            prop_assert_eq!(hom_classes(k, &TargetGroup::Circle).len() as u64, k);
            prop_assert_eq!(hom_classes(k, &TargetGroup::SpecialUnitary2).len(), su2_pairs(k));
            let u = TargetGroup::Unitary(n as u32);
            prop_assert_eq!(hom_classes(k, &u).len(), unitary_orbits(k, n));
            prop_assert_eq!(hom_class_count(k, &u).unwrap(), unitary_orbits(k, n) as u128);
            for f in [Family::Dihedral(3), Family::Dihedral(4), Family::Tetrahedral] {
                let t = TargetGroup::from_family(f);
                prop_assert_eq!(hom_classes(k, &t).len(), finite_count(t.finite_group().unwrap(), k));
            }
        }

        #[test]
        fn rep_counts_are_multiplicative(n in 1u32..=8) {
            let g = groupoid(Family::Cyclic(n));
            let space = enumerate_reps(&g, &TargetGroup::SpecialUnitary2).unwrap();
            let per = (n / 2 + 1) as u128;
            prop_assert_eq!(space.count, per * per);
            prop_assert_eq!(space.classes().unwrap().len() as u128, space.count);
        }
    }

    #[test]
    fn rep_space_examples() {
        let s = enumerate_reps(&groupoid(Family::Cyclic(3)), &TargetGroup::Circle).unwrap();
        assert_eq!(s.count, 9);
        let classes = s.classes().unwrap();
        assert!(classes.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_reps(&groupoid(Family::Cyclic(1)), &TargetGroup::Circle).unwrap().count, 1);
        assert_eq!(enumerate_reps(&groupoid(Family::Tetrahedral), &TargetGroup::Circle).unwrap().count, 18);
        let ico = enumerate_reps(&groupoid(Family::Icosahedral), &TargetGroup::Unitary(12)).unwrap();
        assert!(ico.count > MATERIALIZE_LIMIT);
        assert!(matches!(ico.classes(), Err(Error::TooManyClasses { .. })));
        assert_eq!(ico.iter().take(3).count(), 3);
    }

    #[test]
    fn dihedral_finite_target_is_split_only() {
        assert!(enumerate_reps(&groupoid(Family::Dihedral(3)), &d6()).unwrap().split_only);
        assert!(!enumerate_reps(&groupoid(Family::Dihedral(3)), &TargetGroup::Circle).unwrap().split_only);
        assert!(!enumerate_reps(&groupoid(Family::Cyclic(3)), &d6()).unwrap().split_only);
    }
}
