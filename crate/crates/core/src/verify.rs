//! End-to-end verification suite over the built-in families.

use std::sync::Arc;

use serde::Serialize;

use crate::beta::{check_beta_tau, DEFAULT_BOUND};
use crate::classify::{classify, clutching_degrees, congruence_check, ChernValue};
use crate::error::Result;
use crate::export::{standard_families, table1};
use crate::families::Family;
use crate::isotropy::{isotropy_groupoid, validate_groupoid, IsotropyGroupoid};
use crate::lattice::FGAbelianGroup;
use crate::orbit::{orbit_graph, riemann_hurwitz_check};
use crate::reps::{enumerate_reps, HomEncoding};
use crate::skeleton::build_skeleton;
use crate::target::TargetGroup;
use crate::zmodule::{build_module, fixed_points, fixed_sequence_check, table1_reference, ModuleKind};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

fn groupoid(family: Family) -> Result<IsotropyGroupoid> {
    isotropy_groupoid(Arc::new(orbit_graph(Arc::new(build_skeleton(family)))?))
}

/// Collects failures as human-readable lines.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn into_result(self, name: &str, summary: String) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            passed: self.0.is_empty(),
            detail: if self.0.is_empty() { summary } else { self.0.join("; ") },
        }
    }
}

fn rank_table(max_n: u32) -> Result<CheckResult> {
    let rows = table1(2, max_n)?;
    let mut f = Failures::default();
    for r in &rows {
        f.check(r.matches_reference, || format!("{} n={:?}: ({}, {})", r.family, r.n, r.one_minus_chi, r.big_n));
    }
    Ok(f.into_result("rank table", format!("{} rows agree", rows.len())))
}

fn riemann_hurwitz(families: &[Family]) -> Result<CheckResult> {
    let mut f = Failures::default();
    for &family in families {
        let r = riemann_hurwitz_check(&build_skeleton(family))?;
        f.check(r.holds, || format!("{family}: {r:?}"));
    }
    Ok(f.into_result("riemann-hurwitz", format!("holds for {} skeletons", families.len())))
}

fn euler(families: &[Family]) -> CheckResult {
    let mut f = Failures::default();
    for &family in families {
        let chi = build_skeleton(family).euler_char();
        let expected = 1 - table1_reference(family).0;
        f.check(chi == expected, || format!("{family}: chi {chi}, expected {expected}"));
    }
    f.into_result("euler characteristic", format!("{} skeletons", families.len()))
}

fn group_ring(families: &[Family]) -> Result<CheckResult> {
    let z = FGAbelianGroup::free(1);
    let mut f = Failures::default();
    for &family in families {
        let gamma = Arc::new(family.group());
        let regular = fixed_points(&build_module(&ModuleKind::Regular, gamma.clone(), &z)?)?;
        let ideal = fixed_points(&build_module(&ModuleKind::AugmentationIdeal, gamma.clone(), &z)?)?;
        let ones = vec![vec![1; gamma.order()]];
        f.check(regular.basis.to_rows() == ones, || format!("{family}: Fix(ZG) = {:?}", regular.basis));
        f.check(ideal.is_zero(), || format!("{family}: Fix(I) has rank {}", ideal.rank()));
        let seq = fixed_sequence_check(&build_skeleton(family), &TargetGroup::Circle)?;
        f.check(seq.summand_count_holds, || format!("{family}: {seq:?}"));
    }
    Ok(f.into_result("group-ring fixed points", format!("{} groups", families.len())))
}

fn norm_index(families: &[Family]) -> Result<CheckResult> {
    let mut f = Failures::default();
    for &family in families {
        let seq = fixed_sequence_check(&build_skeleton(family), &TargetGroup::Circle)?;
        f.check(seq.norm_index == family.order() as u128 && seq.holds, || {
            format!("{family}: index {}, cokernel {}", seq.norm_index, seq.k_cokernel)
        });
    }
    Ok(f.into_result("norm index", "index equals the group order".into()))
}

fn rep_counts(families: &[Family]) -> Result<CheckResult> {
    let mut f = Failures::default();
    for &family in families {
        let g = groupoid(family)?;
        let report = validate_groupoid(&g);
        f.check(report.passed(), || format!("{family}: groupoid {report:?}"));
        let space = enumerate_reps(&g, &TargetGroup::Circle)?;
        let product: u128 = g.signature().iter().map(|&k| k as u128).product();
        let expected = match family {
            Family::Cyclic(n) => (n as u128).pow(2),
            Family::Dihedral(n) => 4 * n as u128,
            _ => product,
        };
        f.check(space.count == expected && space.count == product, || {
            format!("{family}: count {}, expected {expected}", space.count)
        });
        if space.count <= 10_000 {
            let n = space.classes()?.len() as u128;
            f.check(n == space.count, || format!("{family}: materialized {n}"));
        }
    }
    Ok(f.into_result("representation counts", "circle counts equal stabilizer products".into()))
}

fn beta_tau() -> Result<CheckResult> {
    let d6 = TargetGroup::from_family(Family::Dihedral(3));
    let mut f = Failures::default();
    let mut two_point_fiber = false;
    for family in [Family::Cyclic(2), Family::Cyclic(3), Family::Tetrahedral, Family::Octahedral] {
        let r = check_beta_tau(&groupoid(family)?, &d6, DEFAULT_BOUND)?;
        f.check(r.passed, || format!("{family}: {r:?}"));
        two_point_fiber |= r.fibers.iter().any(|x| x.fiber_size == 2 && x.double_cosets == 2);
    }
    f.check(two_point_fiber, || "no fiber of size 2 found".into());
    Ok(f.into_result("beta/tau brute force", "no counterexample".into()))
}

fn oracle(max_n: u32, window: i64) -> Result<CheckResult> {
    let mut f = Failures::default();
    for n in 1..=max_n {
        let c = classify(Family::Cyclic(n), &TargetGroup::Circle, Some((-window, window)))?;
        let space = enumerate_reps(&groupoid(Family::Cyclic(n))?, &TargetGroup::Circle)?;
        for rep in space.iter() {
            let w: Vec<u64> = rep
                .assignment
                .iter()
                .map(|h| match h.encoding {
                    HomEncoding::Residue(j) => j,
                    _ => unreachable!(),
                })
                .collect();
            let listed: Vec<i64> = c
                .classes
                .iter()
                .filter(|b| b.rep == rep)
                .filter_map(|b| match b.chern {
                    ChernValue::Integer(x) => Some(x),
                    _ => None,
                })
                .collect();
            let predicted = clutching_degrees(n as u64, w[0], w[1], window);
            f.check(listed == predicted, || format!("C{n} {rep}: listed {listed:?}, oracle {predicted:?}"));
        }
        for (i, a) in c.classes.iter().enumerate() {
            for b in &c.classes[i + 1..] {
                f.check(congruence_check(a, b, n as u64), || format!("C{n}: {a:?} vs {b:?}"));
            }
        }
    }
    Ok(f.into_result("clutching oracle", format!("n = 1..{max_n}, window ±{window}")))
}

pub fn run_suite() -> Result<VerifyReport> {
    let families = standard_families(2, 12);
    let checks = vec![
        rank_table(12)?,
        riemann_hurwitz(&families)?,
        euler(&families),
        group_ring(&families)?,
        norm_index(&families)?,
        rep_counts(&families)?,
        beta_tau()?,
        oracle(6, 12)?,
    ];
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { checks, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = run_suite().unwrap();
        for c in &r.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert!(r.passed);
    }
}
