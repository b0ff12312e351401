//! Structural groups: finite groups, the circle, SU(2) and U(n).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{Family, FamilyKind};
use crate::group::FiniteGroup;
use crate::lattice::FGAbelianGroup;

#[derive(Debug, Clone)]
pub enum TargetGroup {
    /// A finite group, with the family it was built from when known.
    Finite { group: Arc<FiniteGroup>, family: Option<Family> },
    Circle,
    SpecialUnitary2,
    Unitary(u32),
}

impl TargetGroup {
    pub fn finite(group: FiniteGroup) -> Self {
        TargetGroup::Finite { group: Arc::new(group), family: None }
    }

    pub fn from_family(family: Family) -> Self {
        TargetGroup::Finite { group: Arc::new(family.group()), family: Some(family) }
    }

    pub fn unitary(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnknownTarget("u0".into()));
        }
        Ok(TargetGroup::Unitary(n))
    }

    pub fn is_connected(&self) -> bool {
        match self {
            TargetGroup::Finite { group, .. } => group.order() == 1,
            _ => true,
        }
    }

    pub fn pi1(&self) -> FGAbelianGroup {
        match self {
            TargetGroup::Circle | TargetGroup::Unitary(_) => FGAbelianGroup::free(1),
            TargetGroup::SpecialUnitary2 | TargetGroup::Finite { .. } => FGAbelianGroup::trivial(),
        }
    }

    pub fn finite_group(&self) -> Option<&FiniteGroup> {
        match self {
            TargetGroup::Finite { group, .. } => Some(group),
            _ => None,
        }
    }
}

impl fmt::Display for TargetGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetGroup::Finite { family: Some(fam), .. } => match fam.n() {
                Some(n) => write!(f, "finite:{}:{n}", fam.kind()),
                None => write!(f, "finite:{}", fam.kind()),
            },
            TargetGroup::Finite { group, family: None } => write!(f, "finite(order {})", group.order()),
            TargetGroup::Circle => f.write_str("circle"),
            TargetGroup::SpecialUnitary2 => f.write_str("su2"),
            TargetGroup::Unitary(n) => write!(f, "u{n}"),
        }
    }
}

/// Accepts `circle`, `su2`, `u<n>`, `unitary:<n>` and `finite:<family>[:<n>]`.
impl FromStr for TargetGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownTarget(s.to_string());
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "circle" | "s1" => return Ok(TargetGroup::Circle),
            "su2" | "su(2)" => return Ok(TargetGroup::SpecialUnitary2),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("unitary:").or_else(|| lower.strip_prefix('u')) {
            return TargetGroup::unitary(rest.parse().map_err(|_| bad())?);
        }
        if let Some(rest) = lower.strip_prefix("finite:") {
            let mut parts = rest.splitn(2, ':');
            let kind: FamilyKind = parts.next().unwrap_or_default().parse().map_err(|_| bad())?;
            let n = parts.next().map(|p| p.parse::<u32>().map_err(|_| bad())).transpose()?;
            return Ok(TargetGroup::from_family(Family::new(kind, n)?));
        }
        Err(bad())
    }
}

#[derive(Serialize)]
struct TargetSummary {
    name: String,
    kind: &'static str,
    order: Option<usize>,
    connected: bool,
    pi1: FGAbelianGroup,
}

impl Serialize for TargetGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, order) = match self {
            TargetGroup::Finite { group, .. } => ("finite", Some(group.order())),
            TargetGroup::Circle => ("circle", None),
            TargetGroup::SpecialUnitary2 => ("special-unitary-2", None),
            TargetGroup::Unitary(_) => ("unitary", None),
        };
        TargetSummary { name: self.to_string(), kind, order, connected: self.is_connected(), pi1: self.pi1() }
            .serialize(s)
    }
}
