//! The five families of finite rotation groups of the 2-sphere.
//!
//! Cyclic and dihedral groups are built from their normal forms
//! `ρᵏ` and `ρᵏσ`; the polyhedral groups are closed from two permutation
//! generators `R` (rotation about a polyhedron vertex) and `S` (half-turn
//! about an adjacent edge midpoint). In every case the product `R·S` is a
//! rotation about a face center, so `T = (R·S)⁻¹` completes the rotation
//! triangle used by the skeleton construction.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Cyclic,
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Cyclic,
        FamilyKind::Dihedral,
        FamilyKind::Tetrahedral,
        FamilyKind::Octahedral,
        FamilyKind::Icosahedral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::Dihedral => "dihedral",
            FamilyKind::Tetrahedral => "tetrahedral",
            FamilyKind::Octahedral => "octahedral",
            FamilyKind::Icosahedral => "icosahedral",
        }
    }

    pub fn takes_n(self) -> bool {
        matches!(self, FamilyKind::Cyclic | FamilyKind::Dihedral)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cyclic" | "c" => Ok(FamilyKind::Cyclic),
            "dihedral" | "d" => Ok(FamilyKind::Dihedral),
            "tetrahedral" | "t" => Ok(FamilyKind::Tetrahedral),
            "octahedral" | "o" => Ok(FamilyKind::Octahedral),
            "icosahedral" | "i" => Ok(FamilyKind::Icosahedral),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A validated family together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic(u32),
    /// `Dihedral(n)` has order `2n`.
    Dihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl Family {
    pub fn new(kind: FamilyKind, n: Option<u32>) -> Result<Self> {
        match (kind, n) {
            (FamilyKind::Cyclic, Some(n)) if n >= 1 => Ok(Family::Cyclic(n)),
            (FamilyKind::Dihedral, Some(n)) if n >= 2 => Ok(Family::Dihedral(n)),
            (FamilyKind::Cyclic, Some(n)) => {
                Err(Error::InvalidParameter(format!("cyclic needs n >= 1, got {n}")))
            }
            (FamilyKind::Dihedral, Some(n)) => {
                Err(Error::InvalidParameter(format!("dihedral needs n >= 2, got {n}")))
            }
            (FamilyKind::Cyclic | FamilyKind::Dihedral, None) => {
                Err(Error::InvalidParameter(format!("{kind} requires n")))
            }
            (_, Some(_)) => Err(Error::InvalidParameter(format!("{kind} takes no n"))),
            (FamilyKind::Tetrahedral, None) => Ok(Family::Tetrahedral),
            (FamilyKind::Octahedral, None) => Ok(Family::Octahedral),
            (FamilyKind::Icosahedral, None) => Ok(Family::Icosahedral),
        }
    }

    pub fn kind(self) -> FamilyKind {
        match self {
            Family::Cyclic(_) => FamilyKind::Cyclic,
            Family::Dihedral(_) => FamilyKind::Dihedral,
            Family::Tetrahedral => FamilyKind::Tetrahedral,
            Family::Octahedral => FamilyKind::Octahedral,
            Family::Icosahedral => FamilyKind::Icosahedral,
        }
    }

    pub fn n(self) -> Option<u32> {
        match self {
            Family::Cyclic(n) | Family::Dihedral(n) => Some(n),
            _ => None,
        }
    }

    pub fn order(self) -> usize {
        match self {
            Family::Cyclic(n) => n as usize,
            Family::Dihedral(n) => 2 * n as usize,
            Family::Tetrahedral => 12,
            Family::Octahedral => 24,
            Family::Icosahedral => 60,
        }
    }

    /// The polyhedral rotation triangle `(p, q)`: orders of the vertex and
    /// face rotations of the underlying solid.
    pub(crate) fn polyhedral_orders(self) -> Option<(usize, usize)> {
        match self {
            Family::Tetrahedral => Some((3, 3)),
            Family::Octahedral => Some((3, 4)),
            Family::Icosahedral => Some((5, 3)),
            _ => None,
        }
    }

    pub fn group(self) -> FiniteGroup {
        match self {
            Family::Cyclic(n) => cyclic(n),
            Family::Dihedral(n) => dihedral(n),
            Family::Tetrahedral => polyhedral(self, &[0, 2, 3, 1], &[1, 0, 3, 2]),
            Family::Octahedral => polyhedral(self, &[0, 2, 3, 1], &[1, 0, 2, 3]),
            Family::Icosahedral => polyhedral(self, &[1, 2, 3, 4, 0], &[0, 2, 1, 4, 3]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n() {
            Some(n) => write!(f, "{}({n})", self.kind()),
            None => write!(f, "{}", self.kind()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyInfo {
    pub family: FamilyKind,
    pub n: Option<u32>,
    pub order: usize,
}

impl From<Family> for FamilyInfo {
    fn from(f: Family) -> Self {
        FamilyInfo { family: f.kind(), n: f.n(), order: f.order() }
    }
}

/// Serialized as its [`FamilyInfo`].
impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyInfo::from(*self).serialize(s)
    }
}

pub fn make_group(kind: FamilyKind, n: Option<u32>) -> Result<FiniteGroup> {
    Ok(Family::new(kind, n)?.group())
}

fn cyclic(n: u32) -> FiniteGroup {
    let n = n as u64;
    let (group, elems) = FiniteGroup::from_generators(0u64, &[1 % n], |a, b| (a + b) % n)
        .expect("cyclic table is a group");
    let labels = elems
        .iter()
        .map(|&k| if k == 0 { "identity".to_string() } else { format!("polar rotation {k}/{n}") })
        .collect();
    group.with_labels(labels)
}

fn dihedral(n: u32) -> FiniteGroup {
    let n = n as i64;
    // (k, f) stands for ρᵏσᶠ; σρ = ρ⁻¹σ
    let compose = |a: &(i64, bool), b: &(i64, bool)| {
        let k = if a.1 { a.0 - b.0 } else { a.0 + b.0 };
        (k.rem_euclid(n), a.1 ^ b.1)
    };
    let (group, elems) = FiniteGroup::from_generators((0, false), &[(1, false), (0, true)], compose)
        .expect("dihedral table is a group");
    let labels = elems
        .iter()
        .map(|&(k, f)| match (k, f) {
            (0, false) => "identity".to_string(),
            (k, false) => format!("polar rotation {k}/{n}"),
            (k, true) => format!("equatorial flip {k}"),
        })
        .collect();
    group.with_labels(labels)
}

fn polyhedral(family: Family, r: &[usize], s: &[usize]) -> FiniteGroup {
    let id: Vec<usize> = (0..r.len()).collect();
    let compose = |a: &Vec<usize>, b: &Vec<usize>| b.iter().map(|&i| a[i]).collect::<Vec<_>>();
    let (group, _) = FiniteGroup::from_generators(id, &[r.to_vec(), s.to_vec()], compose)
        .expect("permutation closure is a group");
    debug_assert_eq!(group.order(), family.order());
    let (p, q) = family.polyhedral_orders().unwrap();
    let (rr, ss) = (group.generators()[0], group.generators()[1]);
    let t = group.inv(group.mul(rr, ss));
    debug_assert_eq!(group.element_order(rr), p);
    debug_assert_eq!(group.element_order(ss), 2);
    debug_assert_eq!(group.element_order(t), q);

    let in_conjugate = |gen: usize, g: usize| {
        let h = Subgroup::generated_by(&group, &[gen]);
        group.elements().any(|c| h.contains(group.conjugate(g, c)))
    };
    let labels = group
        .elements()
        .map(|g| {
            if g == 0 {
                return "identity".to_string();
            }
            let k = group.element_order(g);
            match (in_conjugate(rr, g), in_conjugate(ss, g), in_conjugate(t, g)) {
                (true, _, true) => format!("vertex/face rotation, order {k}"),
                (true, _, _) => format!("vertex rotation, order {k}"),
                (_, true, _) => "edge rotation, order 2".to_string(),
                (_, _, true) => format!("face rotation, order {k}"),
                _ => unreachable!("every rotation fixes a vertex, edge midpoint or face center"),
            }
        })
        .collect();
    group.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::conjugacy_classes;

    #[test]
    fn orders() {
        assert_eq!(make_group(FamilyKind::Cyclic, Some(1)).unwrap().order(), 1);
        assert_eq!(make_group(FamilyKind::Dihedral, Some(3)).unwrap().order(), 6);
        assert_eq!(make_group(FamilyKind::Tetrahedral, None).unwrap().order(), 12);
        assert_eq!(make_group(FamilyKind::Octahedral, None).unwrap().order(), 24);
        assert_eq!(make_group(FamilyKind::Icosahedral, None).unwrap().order(), 60);
    }

    #[test]
    fn parameter_errors() {
        assert!(make_group(FamilyKind::Cyclic, Some(0)).is_err());
        assert!(make_group(FamilyKind::Dihedral, Some(1)).is_err());
        assert!(make_group(FamilyKind::Cyclic, None).is_err());
        assert!(make_group(FamilyKind::Tetrahedral, Some(3)).is_err());
        assert!("dodecahedral".parse::<FamilyKind>().is_err());
        assert_eq!("Octahedral".parse::<FamilyKind>().unwrap(), FamilyKind::Octahedral);
    }

    #[test]
    fn icosahedral_order_census() {
        let g = Family::Icosahedral.group();
        let mut census = [0usize; 6];
        for x in g.elements() {
            census[g.element_order(x)] += 1;
        }
        assert_eq!(census, [0, 1, 15, 20, 0, 24]);
        // six rotation axes of order 5, each class closed under inversion
        let fives: Vec<Subgroup> = g
            .elements()
            .filter(|&x| g.element_order(x) == 5)
            .map(|x| Subgroup::generated_by(&g, &[x]))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(fives.len(), 6);
        for class in conjugacy_classes(&g) {
            if g.element_order(class.representative) == 5 {
                assert!(class.members.contains(&g.inv(class.representative)));
            }
        }
    }

    #[test]
    fn canonical_element_order_starts_with_generators() {
        for family in [Family::Dihedral(4), Family::Octahedral, Family::Cyclic(3)] {
            let g = family.group();
            assert_eq!(g.label(0), "identity");
            for (i, &gen) in g.generators().iter().enumerate() {
                assert_eq!(gen, i + 1);
            }
        }
    }

    #[test]
    fn labels_name_rotation_types() {
        let d = Family::Dihedral(3).group();
        let flips = d.elements().filter(|&g| d.label(g).starts_with("equatorial flip")).count();
        assert_eq!(flips, 3);
        let o = Family::Octahedral.group();
        let count = |p: &str| o.elements().filter(|&g| o.label(g).starts_with(p)).count();
        assert_eq!(count("vertex rotation"), 8);
        assert_eq!(count("edge rotation"), 6);
        assert_eq!(count("face rotation"), 9);
        let t = Family::Tetrahedral.group();
        assert_eq!(t.elements().filter(|&g| t.label(g).starts_with("vertex/face")).count(), 8);
    }
}
