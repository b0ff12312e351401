//! Classification of equivariant bundles over the sphere by an isotropy
//! representation and a Chern number, and a clutching-map oracle for
//! rotations about a single axis.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{Family, FamilyInfo};
use crate::isotropy::isotropy_groupoid;
use crate::lattice::gcd;
use crate::orbit::orbit_graph;
use crate::reps::{enumerate_reps, HomEncoding, RepClass};
use crate::skeleton::build_skeleton;
use crate::target::TargetGroup;

/// A residue class `base + modulus·ℤ`; the base is known only when it has
/// been derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChernCoset {
    pub modulus: u64,
    pub known_base: Option<i64>,
}

impl ChernCoset {
    pub fn contains(&self, c: i64) -> Option<bool> {
        self.known_base.map(|b| match self.modulus {
            0 => c == b,
            m => (c - b).rem_euclid(m as i64) == 0,
        })
    }
}

impl fmt::Display for ChernCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.known_base {
            Some(b) => write!(f, "coset(mod {}, base {b})", self.modulus),
            None => write!(f, "coset(mod {})", self.modulus),
        }
    }
}

impl Serialize for ChernCoset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChernValue {
    Integer(i64),
    Coset(ChernCoset),
    /// The structural group is simply connected.
    Absent,
}

impl Serialize for ChernValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ChernValue::Integer(c) => s.serialize_i64(*c),
            ChernValue::Coset(c) => c.serialize(s),
            ChernValue::Absent => s.serialize_none(),
        }
    }
}

impl fmt::Display for ChernValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChernValue::Integer(c) => write!(f, "{c}"),
            ChernValue::Coset(c) => write!(f, "{c}"),
            ChernValue::Absent => f.write_str("-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BundleClass {
    pub rep: RepClass,
    pub chern: ChernValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub gamma: FamilyInfo,
    pub target: TargetGroup,
    pub window: [i64; 2],
    pub rep_count: u128,
    /// Chern values are cosets with an undetermined base.
    pub symbolic: bool,
    pub classes: Vec<BundleClass>,
}

pub fn default_window(gamma_order: usize) -> (i64, i64) {
    let w = 2 * gamma_order as i64;
    (-w, w)
}

/// Lists bundle classes as (representation, Chern value) pairs, in
/// representation order and then by Chern value.
pub fn classify(family: Family, target: &TargetGroup, window: Option<(i64, i64)>) -> Result<Classification> {
    if !target.is_connected() {
        return Err(Error::DisconnectedTarget(target.to_string()));
    }
    let order = family.order();
    let (lo, hi) = window.unwrap_or_else(|| default_window(order));
    if lo > hi {
        return Err(Error::InvalidWindow { lo, hi });
    }
    let og = orbit_graph(Arc::new(build_skeleton(family)))?;
    let groupoid = isotropy_groupoid(Arc::new(og))?;
    let space = enumerate_reps(&groupoid, target)?;
    let reps = space.classes()?;

    let pi1_rank = target.pi1().rank;
    let explicit = matches!((family, target), (Family::Cyclic(_), TargetGroup::Circle));
    let mut classes = Vec::new();
    for rep in reps {
        if pi1_rank == 0 {
            classes.push(BundleClass { rep, chern: ChernValue::Absent });
        } else if explicit {
            let (a, b) = polar_weights(&rep);
            let coset = ChernCoset { modulus: order as u64, known_base: Some((a - b).rem_euclid(order as i64)) };
            for c in lo..=hi {
                if coset.contains(c) == Some(true) {
                    classes.push(BundleClass { rep: rep.clone(), chern: ChernValue::Integer(c) });
                }
            }
        } else {
            let coset = ChernCoset { modulus: order as u64, known_base: None };
            classes.push(BundleClass { rep, chern: ChernValue::Coset(coset) });
        }
    }
    Ok(Classification {
        gamma: family.into(),
        target: target.clone(),
        window: [lo, hi],
        rep_count: space.count,
        symbolic: pi1_rank > 0 && !explicit,
        classes,
    })
}

/// Circle weights at the north and south poles.
fn polar_weights(rep: &RepClass) -> (i64, i64) {
    let weight = |i: usize| match rep.assignment[i].encoding {
        HomEncoding::Residue(j) => j as i64,
        _ => unreachable!("circle targets carry residues"),
    };
    (weight(0), weight(1))
}

/// True unless the two classes share a representation and have Chern
/// values that are not congruent modulo `gamma_order`.
pub fn congruence_check(b1: &BundleClass, b2: &BundleClass, gamma_order: u64) -> bool {
    if b1.rep != b2.rep {
        return true;
    }
    match (b1.chern, b2.chern) {
        (ChernValue::Integer(c1), ChernValue::Integer(c2)) => (c1 - c2).rem_euclid(gamma_order as i64) == 0,
        (c1, c2) => c1 == c2,
    }
}

/// Degrees of the monomial clutching maps `z ↦ z^d`, `|d| ≤ window`, that
/// intertwine rotation by `2π/n` with the weights `a` (north) and `b`
/// (south): `f(ζz) = ζ^{a−b} f(z)`.
///
/// Points of the equator are sampled at the `N`-th roots of unity and
/// stored as exponents mod `N`, so equivariance is tested exactly. The
/// degree is then read off as a winding number from the sampled loop.
pub fn clutching_degrees(n: u64, a: u64, b: u64, window: i64) -> Vec<i64> {
    assert!(n >= 1 && window >= 0);
    let big_n = n as i64 * (2 * window + 2);
    let step = big_n / n as i64; // ζ = ω^step
    let weight = (a as i64 - b as i64) * step;
    let f = |d: i64, j: i64| (d * j).rem_euclid(big_n);
    let mut out = Vec::new();
    for d in -window..=window {
        let equivariant = (0..big_n).all(|j| f(d, j + step) == (weight + f(d, j)).rem_euclid(big_n));
        if !equivariant {
            continue;
        }
        let winding: i64 = (0..big_n)
            .map(|j| {
                let delta = (f(d, j + 1) - f(d, j)).rem_euclid(big_n);
                if 2 * delta > big_n { delta - big_n } else { delta }
            })
            .sum::<i64>()
            / big_n;
        out.push(winding);
    }
    out
}

/// The residue class of realizable clutching degrees for weights `(a, b)`.
pub fn clutching_oracle(n: u64, a: u64, b: u64) -> ChernCoset {
    let degrees = clutching_degrees(n, a, b, 3 * n as i64);
    let first = degrees[0];
    let modulus = degrees.iter().fold(0, |g, &d| gcd(g, d - first)) as u64;
    let base = if modulus == 0 { first } else { first.rem_euclid(modulus as i64) };
    ChernCoset { modulus, known_base: Some(base) }
}
