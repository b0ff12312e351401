//! Regular invariant 1-skeletons of the sphere for each rotation family.
//!
//! Every skeleton is assembled from cosets. A vertex type is a rotation
//! `a` fixing a base point; its vertices are the left cosets `g⟨a⟩`. An
//! edge type joins the base points of two vertex types; its edges are
//! indexed by group elements, edge `g` running from `g⟨a⟩` to `g⟨b⟩`.
//! Each edge type is therefore a free orbit, which makes the action
//! regular, and the group acts by left multiplication.
//!
//! | family      | vertex types (stabilizer order)         | edge types                 |
//! |-------------|-----------------------------------------|----------------------------|
//! | cyclic      | north pole (n), south pole (n)          | meridian                   |
//! | dihedral    | polygon vertex (2), midpoint (2), pole (n) | equator, pole–vertex, pole–midpoint |
//! | polyhedral  | edge midpoint (2), vertex (p), face (q) | vertex–midpoint, face–vertex |
//!
//! Counts: cyclic 2 vertices / n edges; dihedral 2n+2 / 6n; tetrahedral
//! 14 / 24; octahedral 26 / 48; icosahedral 62 / 120.

use std::sync::Arc;

use crate::complex::{CellLayout, GammaComplex};
use crate::error::Result;
use crate::families::{Family, FamilyKind};
use crate::group::{FiniteGroup, Subgroup};

/// A vertex type of a coset skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexType {
    pub name: &'static str,
    /// Element generating the stabilizer of the base vertex.
    pub rotation: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonRecipe {
    pub vertex_types: Vec<VertexType>,
    pub edge_types: Vec<(usize, usize)>,
}

/// The construction data for a family, in terms of elements of
/// `family.group()`.
pub fn recipe(family: Family, group: &FiniteGroup) -> SkeletonRecipe {
    let gens = group.generators();
    match family {
        Family::Cyclic(_) => SkeletonRecipe {
            vertex_types: vec![
                VertexType { name: "north pole", rotation: gens[0] },
                VertexType { name: "south pole", rotation: gens[0] },
            ],
            edge_types: vec![(0, 1)],
        },
        Family::Dihedral(_) => {
            let (rho, sigma) = (gens[0], gens[1]);
            SkeletonRecipe {
                vertex_types: vec![
                    VertexType { name: "polygon vertex", rotation: sigma },
                    VertexType { name: "polygon midpoint", rotation: group.mul(rho, sigma) },
                    VertexType { name: "pole", rotation: rho },
                ],
                edge_types: vec![(0, 1), (2, 0), (2, 1)],
            }
        }
        Family::Tetrahedral | Family::Octahedral | Family::Icosahedral => {
            let (r, s) = (gens[0], gens[1]);
            let t = group.inv(group.mul(r, s));
            let mid = VertexType { name: "edge midpoint", rotation: s };
            let vertex = VertexType { name: "vertex", rotation: r };
            let face = VertexType { name: "face center", rotation: t };
            if family == Family::Icosahedral {
                // order by stabilizer size: 2, 3, 5
                SkeletonRecipe { vertex_types: vec![mid, face, vertex], edge_types: vec![(2, 0), (1, 2)] }
            } else {
                SkeletonRecipe { vertex_types: vec![mid, vertex, face], edge_types: vec![(1, 0), (2, 1)] }
            }
        }
    }
}

/// Builds the skeleton for a validated family.
pub fn build_skeleton(family: Family) -> GammaComplex {
    let group = Arc::new(family.group());
    let recipe = recipe(family, &group);
    coset_skeleton(group, Some(family), &recipe).expect("built-in skeletons are valid")
}

/// Validating front end for `(kind, n)` pairs.
pub fn build_skeleton_for(kind: FamilyKind, n: Option<u32>) -> Result<GammaComplex> {
    Ok(build_skeleton(Family::new(kind, n)?))
}

/// Assembles the coset complex described by `recipe`.
pub fn coset_skeleton(
    group: Arc<FiniteGroup>,
    family: Option<Family>,
    recipe: &SkeletonRecipe,
) -> Result<GammaComplex> {
    let order = group.order();

    // vertex index of the coset g⟨a⟩, per vertex type
    let mut coset_of: Vec<Vec<usize>> = Vec::new();
    let mut vertex_kinds = Vec::new();
    let mut vertex_type = Vec::new();
    let mut vertex_anchor = Vec::new();
    for (t, vt) in recipe.vertex_types.iter().enumerate() {
        let sub = Subgroup::generated_by(&group, &[vt.rotation]);
        let mut assignment = vec![usize::MAX; order];
        for g in group.elements() {
            if assignment[g] != usize::MAX {
                continue;
            }
            let index = vertex_kinds.len();
            vertex_kinds.push(vt.name.to_string());
            vertex_type.push(t);
            vertex_anchor.push(g);
            for &h in sub.members() {
                assignment[group.mul(g, h)] = index;
            }
        }
        coset_of.push(assignment);
    }

    let mut edges = Vec::new();
    let mut edge_type = Vec::new();
    let mut edge_anchor = Vec::new();
    for (t, &(a, b)) in recipe.edge_types.iter().enumerate() {
        for g in group.elements() {
            edges.push([coset_of[a][g], coset_of[b][g]]);
            edge_type.push(t);
            edge_anchor.push(g);
        }
    }

    let vertex_action = group
        .elements()
        .map(|h| {
            vertex_anchor
                .iter()
                .zip(&vertex_type)
                .map(|(&g, &t)| coset_of[t][group.mul(h, g)])
                .collect()
        })
        .collect();
    let edge_action = group
        .elements()
        .map(|h| {
            edge_anchor
                .iter()
                .zip(&edge_type)
                .map(|(&g, &t)| t * order + group.mul(h, g))
                .collect()
        })
        .collect();

    let layout = CellLayout { vertex_type, vertex_anchor, edge_type, edge_anchor };
    GammaComplex::from_full_action(group, family, vertex_kinds, edges, vertex_action, edge_action, Some(layout))
}
