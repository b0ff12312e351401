//! Brute-force checks of the passage from cellular representations to class
//! tuples, for finite targets small enough to enumerate.
//!
//! A raw cellular representation assigns to each vertex cell `v` an element
//! `x_v` with `x_v^{k_v} = e` (the image of the generator of the vertex
//! group), subject to agreement of the restrictions to each edge group.
//! Classes are orbits under simultaneous conjugation.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{centralizer, class_index, conjugacy_classes, double_cosets_in, FiniteGroup};
use crate::isotropy::IsotropyGroupoid;
use crate::target::TargetGroup;

pub const DEFAULT_BOUND: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberCheck {
    /// Class representatives at the two ends of the edge.
    pub classes: [usize; 2],
    pub fiber_size: usize,
    pub double_cosets: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaTauReport {
    pub target_order: usize,
    pub signature: Vec<usize>,
    pub raw_representations: usize,
    pub cellular_classes: usize,
    pub class_tuples: usize,
    pub compatible_tuples: usize,
    pub lifted_tuples: usize,
    pub beta_surjective: bool,
    /// Compatible class tuples (as class representatives) without a lift.
    pub counterexamples: Vec<Vec<usize>>,
    /// Present only for orbit graphs with a single edge.
    pub fibers: Vec<FiberCheck>,
    pub fibers_agree: bool,
    pub passed: bool,
}

struct Setup<'a> {
    g: &'a FiniteGroup,
    groupoid: &'a IsotropyGroupoid,
    /// Exponents `(m_u, m_w)` of the edge generator in each endpoint.
    exps: Vec<[usize; 2]>,
}

impl Setup<'_> {
    fn restriction(&self, e: usize, side: usize, x: usize) -> usize {
        self.g.pow(x, self.exps[e][side] as u64)
    }

    fn compatible_on(&self, e: usize, tuple: &[usize]) -> bool {
        let [u, w] = self.groupoid.edge_ends(e);
        self.restriction(e, 0, tuple[u]) == self.restriction(e, 1, tuple[w])
    }

    fn compatible(&self, tuple: &[usize]) -> bool {
        (0..self.groupoid.edge_count()).all(|e| self.compatible_on(e, tuple))
    }
}

/// Exhaustive search for a compatible tuple with `x_v` in the given classes.
fn lift(setup: &Setup, choices: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(setup: &Setup, choices: &[Vec<usize>], tuple: &mut Vec<usize>) -> bool {
        let v = tuple.len();
        if v == choices.len() {
            return true;
        }
        for &x in &choices[v] {
            tuple.push(x);
            let ok = (0..setup.groupoid.edge_count()).all(|e| {
                let [a, b] = setup.groupoid.edge_ends(e);
                a.max(b) != v || setup.compatible_on(e, tuple)
            });
            if ok && go(setup, choices, tuple) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    let mut tuple = Vec::new();
    go(setup, choices, &mut tuple).then_some(tuple)
}

pub fn check_beta_tau(groupoid: &IsotropyGroupoid, target: &TargetGroup, bound: usize) -> Result<BetaTauReport> {
    let g = target
        .finite_group()
        .ok_or_else(|| Error::InvalidParameter(format!("brute-force check needs a finite target, got {target}")))?;
    if g.order() > bound {
        return Err(Error::TargetTooLarge { order: g.order(), bound });
    }
    let exps = (0..groupoid.edge_count())
        .map(|e| {
            let [u, w] = groupoid.edge_ends(e);
            let exp = |v| {
                groupoid
                    .faces()
                    .iter()
                    .find(|f| f.edge == e && f.vertex == v)
                    .map(|f| f.exponent)
                    .expect("face recorded for each endpoint")
            };
            [exp(u), exp(w)]
        })
        .collect();
    let setup = Setup { g, groupoid, exps };
    let classes = conjugacy_classes(g);
    let cls = class_index(&classes, g.order());
    let signature = groupoid.signature();

    // raw homomorphisms per vertex, then raw cellular representations
    let raw_per_vertex: Vec<Vec<usize>> = signature
        .iter()
        .map(|&k| g.elements().filter(|&x| g.pow(x, k as u64) == g.identity()).collect())
        .collect();
    let raw: Vec<Vec<usize>> = if signature.is_empty() {
        vec![vec![]]
    } else {
        raw_per_vertex.iter().map(|v| v.iter().copied()).multi_cartesian_product().collect()
    };
    let raw: Vec<Vec<usize>> = raw.into_iter().filter(|t| setup.compatible(t)).collect();

    // orbits under simultaneous conjugation, grouped by class tuple
    let canonical = |t: &Vec<usize>| {
        g.elements()
            .map(|h| t.iter().map(|&x| g.conjugate(x, h)).collect::<Vec<_>>())
            .min()
            .expect("group is nonempty")
    };
    let mut fiber_of: BTreeMap<Vec<usize>, std::collections::BTreeSet<Vec<usize>>> = BTreeMap::new();
    for t in &raw {
        let key: Vec<usize> = t.iter().map(|&x| classes[cls[x]].representative).collect();
        fiber_of.entry(key).or_default().insert(canonical(t));
    }
    let cellular_classes = fiber_of.values().map(|s| s.len()).sum();

    // class tuples and their compatibility, decided on representatives
    let per_vertex_classes: Vec<Vec<usize>> = raw_per_vertex
        .iter()
        .map(|xs| xs.iter().map(|&x| classes[cls[x]].representative).sorted().dedup().collect())
        .collect();
    let tuples: Vec<Vec<usize>> = if signature.is_empty() {
        vec![vec![]]
    } else {
        per_vertex_classes.iter().map(|v| v.iter().copied()).multi_cartesian_product().collect()
    };
    let class_compatible = |t: &[usize]| {
        (0..groupoid.edge_count()).all(|e| {
            let [u, w] = groupoid.edge_ends(e);
            cls[setup.restriction(e, 0, t[u])] == cls[setup.restriction(e, 1, t[w])]
        })
    };
    let compatible: Vec<&Vec<usize>> = tuples.iter().filter(|t| class_compatible(t)).collect();
    let mut counterexamples = Vec::new();
    let mut lifted = 0;
    for t in &compatible {
        let choices: Vec<Vec<usize>> = t.iter().map(|&r| classes[cls[r]].members.clone()).collect();
        match lift(&setup, &choices) {
            Some(_) => lifted += 1,
            None => counterexamples.push((*t).clone()),
        }
    }
    // a lift found by search must also appear among the enumerated orbits
    let enumerated_agree = compatible.iter().all(|t| fiber_of.contains_key(*t)) && fiber_of.len() == lifted;

    let mut fibers = Vec::new();
    if groupoid.vertex_count() == 2 && groupoid.edge_count() == 1 {
        let [u, w] = groupoid.edge_ends(0);
        for t in &compatible {
            let x1 = t[u];
            let kappa = setup.restriction(0, 0, x1);
            let x2 = classes[cls[t[w]]]
                .members
                .iter()
                .copied()
                .find(|&y| setup.restriction(0, 1, y) == kappa)
                .expect("compatible classes admit aligned representatives");
            let z = centralizer(g, &[kappa]);
            let z1 = centralizer(g, &[x1]);
            let z2 = centralizer(g, &[x2]);
            let dc = double_cosets_in(g, &z, &z1, &z2).len();
            fibers.push(FiberCheck {
                classes: [t[u], t[w]],
                fiber_size: fiber_of.get(*t).map_or(0, |s| s.len()),
                double_cosets: dc,
            });
        }
    }
    let fibers_agree = fibers.iter().all(|f| f.fiber_size == f.double_cosets);
    let beta_surjective = counterexamples.is_empty() && enumerated_agree;
    Ok(BetaTauReport {
        target_order: g.order(),
        signature,
        raw_representations: raw.len(),
        cellular_classes,
        class_tuples: tuples.len(),
        compatible_tuples: compatible.len(),
        lifted_tuples: lifted,
        beta_surjective,
        counterexamples,
        fibers,
        fibers_agree,
        passed: beta_surjective && fibers_agree,
    })
}
