use std::sync::Arc;

use eqbundle::classify::{classify, congruence_check, ChernValue};
use eqbundle::complex::check_regular;
use eqbundle::families::Family;
use eqbundle::group::{conjugacy_classes, double_cosets, FiniteGroup, Subgroup};
use eqbundle::isotropy::isotropy_groupoid;
use eqbundle::orbit::{orbit_graph, riemann_hurwitz_check};
use eqbundle::reps::{enumerate_reps, HomEncoding};
use eqbundle::skeleton::build_skeleton;
use eqbundle::target::TargetGroup;
use eqbundle::zmodule::fixed_sequence_check;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1u32..=30).prop_map(Family::Cyclic),
        (2u32..=20).prop_map(Family::Dihedral),
        Just(Family::Tetrahedral),
        Just(Family::Octahedral),
        Just(Family::Icosahedral),
    ]
}

/// Class count by Burnside: the number of commuting pairs over |G|.
fn burnside_class_count(g: &FiniteGroup) -> usize {
    let commuting = g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).filter(|&(a, b)| g.mul(a, b) == g.mul(b, a)).count();
    assert_eq!(commuting % g.order(), 0);
    commuting / g.order()
}

/// `|H1\G/H2|` by Burnside for the action `(a, b)·x = a x b⁻¹`.
fn burnside_double_coset_count(g: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> usize {
    let mut fixed = 0;
    for &a in h1.members() {
        for &b in h2.members() {
            fixed += g.elements().filter(|&x| g.mul(g.mul(a, x), g.inv(b)) == x).count();
        }
    }
    let acting = h1.order() * h2.order();
    assert_eq!(fixed % acting, 0);
    fixed / acting
}

#[test]
fn class_counts_match_burnside_and_closed_forms() {
    for n in 2..=12u32 {
        let g = Family::Dihedral(n).group();
        let expected = if n % 2 == 1 { (n as usize + 3) / 2 } else { n as usize / 2 + 3 };
        assert_eq!(conjugacy_classes(&g).len(), expected, "D{n}");
        assert_eq!(burnside_class_count(&g), expected);
    }
    for (family, count) in [(Family::Tetrahedral, 4), (Family::Octahedral, 5), (Family::Icosahedral, 5)] {
        let g = family.group();
        assert_eq!(conjugacy_classes(&g).len(), count, "{family}");
        assert_eq!(burnside_class_count(&g), count);
    }
}

#[test]
fn double_coset_counts_match_burnside() {
    for family in [Family::Dihedral(3), Family::Dihedral(4), Family::Tetrahedral, Family::Octahedral] {
        let g = family.group();
        let cyclic: Vec<Subgroup> = g.elements().map(|x| Subgroup::generated_by(&g, &[x])).collect();
        for h1 in cyclic.iter().step_by(3) {
            for h2 in cyclic.iter().step_by(2) {
                let cosets = double_cosets(&g, h1, h2);
                assert_eq!(cosets.len(), burnside_double_coset_count(&g, h1, h2), "{family}");
                assert_eq!(cosets.iter().map(Vec::len).sum::<usize>(), g.order());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skeletons_are_regular_and_satisfy_riemann_hurwitz(f in family()) {
        let x = build_skeleton(f);
        prop_assert!(check_regular(&x).is_empty());
        prop_assert!(x.is_connected());
        let r = riemann_hurwitz_check(&x).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.chi_x, r.group_order as i64 * r.chi_a - r.singular_sum);
        prop_assert_eq!((2 - x.euler_char()) % f.order() as i64, 0);
    }

    #[test]
    fn action_is_a_homomorphism(f in family(), seed in any::<u64>()) {
        let x = build_skeleton(f);
        let g = x.group();
        let a = (seed % g.order() as u64) as usize;
        let b = ((seed / 7) % g.order() as u64) as usize;
        for v in 0..x.vertex_count() {
            prop_assert_eq!(x.act_vertex(a, x.act_vertex(b, v)), x.act_vertex(g.mul(a, b), v));
        }
        for e in 0..x.edge_count() {
            prop_assert_eq!(x.act_edge(a, x.act_edge(b, e)), x.act_edge(g.mul(a, b), e));
        }
    }

    #[test]
    fn orbit_graph_counts_follow_orbit_stabilizer(f in family()) {
        let og = orbit_graph(Arc::new(build_skeleton(f))).unwrap();
        prop_assert_eq!(og.is_tree(), og.euler_char() == 1);
        prop_assert_eq!(og.euler_char(), og.vertex_orbit_count() as i64 - og.edge_orbit_count() as i64);
        for i in 0..og.vertex_orbit_count() {
            prop_assert_eq!(og.vertex_orbits()[i].len() * og.vertex_stabilizer(i).order(), f.order());
        }
        for i in 0..og.edge_orbit_count() {
            prop_assert_eq!(og.edge_orbits()[i].len(), f.order());
        }
    }

    #[test]
    fn fixed_sequence_holds(f in family()) {
        let r = fixed_sequence_check(&build_skeleton(f), &TargetGroup::Circle).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.norm_index, f.order() as u128);
        prop_assert_eq!(r.two_cell_fixed_rank, r.two_cell_orbits * r.pi1_rank);
    }

    #[test]
    fn cyclic_chern_numbers_lie_in_one_coset(n in 1u32..=8, lo in -20i64..=0, width in 0i64..=20) {
        let hi = lo + width;
        let c = classify(Family::Cyclic(n), &TargetGroup::Circle, Some((lo, hi))).unwrap();
        let g = isotropy_groupoid(Arc::new(orbit_graph(Arc::new(build_skeleton(Family::Cyclic(n)))).unwrap())).unwrap();
        let mut expected = 0;
        for rep in enumerate_reps(&g, &TargetGroup::Circle).unwrap().iter() {
            let [a, b] = [0, 1].map(|i| match rep.assignment[i].encoding {
                HomEncoding::Residue(j) => j as i64,
                _ => unreachable!(),
            });
            expected += (lo..=hi).filter(|d| (d - (a - b)).rem_euclid(n as i64) == 0).count();
        }
        prop_assert_eq!(c.classes.len(), expected);
        for (i, x) in c.classes.iter().enumerate() {
            prop_assert!(matches!(x.chern, ChernValue::Integer(v) if (lo..=hi).contains(&v)));
            for y in &c.classes[i + 1..] {
                prop_assert!(congruence_check(x, y, n as u64));
            }
        }
    }
}
