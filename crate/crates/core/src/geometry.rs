//! Unit-sphere coordinates for the built-in skeletons, for plotting only.
//! Nothing in the exact checks reads these values.

use serde::Serialize;

use crate::complex::GammaComplex;
use crate::families::Family;
use crate::group::FiniteGroup;

pub type Vec3 = [f64; 3];
type Mat3 = [[f64; 3]; 3];

fn norm(v: Vec3) -> Vec3 {
    let l = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / l, v[1] / l, v[2] / l]
}

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn apply(m: &Mat3, v: Vec3) -> Vec3 {
    [dot(m[0], v), dot(m[1], v), dot(m[2], v)]
}

fn matmul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[0.0; 3]; 3];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

const IDENTITY: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

/// Rotation by `theta` about the unit axis `u` (Rodrigues).
fn rotation(u: Vec3, theta: f64) -> Mat3 {
    let (s, c) = theta.sin_cos();
    let t = 1.0 - c;
    let [x, y, z] = u;
    [
        [c + x * x * t, x * y * t - z * s, x * z * t + y * s],
        [y * x * t + z * s, c + y * y * t, y * z * t - x * s],
        [z * x * t - y * s, z * y * t + x * s, c + z * z * t],
    ]
}

fn close(a: &Mat3, b: &Mat3) -> bool {
    (0..3).all(|i| (0..3).all(|j| (a[i][j] - b[i][j]).abs() < 1e-9))
}

fn power(m: &Mat3, k: usize) -> Mat3 {
    (0..k).fold(IDENTITY, |acc, _| matmul(&acc, m))
}

/// Unit axis of a nontrivial rotation matrix.
fn axis(m: &Mat3) -> Vec3 {
    let v = [m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]];
    if dot(v, v) > 1e-12 {
        return norm(v);
    }
    // half-turn: columns of M + I are multiples of the axis
    let cols = (0..3).map(|j| [m[0][j] + IDENTITY[0][j], m[1][j] + IDENTITY[1][j], m[2][j] + IDENTITY[2][j]]);
    norm(cols.max_by(|a, b| dot(*a, *a).total_cmp(&dot(*b, *b))).expect("three columns"))
}

struct Frame {
    generators: Vec<Mat3>,
    vertex_bases: Vec<Vec3>,
    edge_bases: Vec<Vec3>,
}

fn frame(family: Family) -> Frame {
    use std::f64::consts::PI;
    match family {
        Family::Cyclic(n) => Frame {
            generators: vec![rotation([0.0, 0.0, 1.0], 2.0 * PI / n as f64)],
            vertex_bases: vec![[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]],
            edge_bases: vec![[1.0, 0.0, 0.0]],
        },
        Family::Dihedral(n) => {
            let a = PI / n as f64;
            let vertex = [1.0, 0.0, 0.0];
            let mid = [a.cos(), a.sin(), 0.0];
            let pole = [0.0, 0.0, 1.0];
            Frame {
                generators: vec![rotation(pole, 2.0 * a), rotation(vertex, PI)],
                vertex_bases: vec![vertex, mid, pole],
                edge_bases: vec![norm(add(vertex, mid)), norm(add(pole, vertex)), norm(add(pole, mid))],
            }
        }
        Family::Tetrahedral | Family::Octahedral | Family::Icosahedral => {
            let (p, q) = family.polyhedral_orders().expect("polyhedral");
            let phi = (1.0 + 5f64.sqrt()) / 2.0;
            let (v0, m0) = match family {
                Family::Tetrahedral => (norm([1.0, 1.0, 1.0]), [1.0, 0.0, 0.0]),
                Family::Octahedral => (norm([1.0, 1.0, 1.0]), norm([1.0, 1.0, 0.0])),
                _ => (norm([0.0, 1.0, phi]), [0.0, 0.0, 1.0]),
            };
            let s = rotation(m0, PI);
            let r = [1.0, -1.0]
                .into_iter()
                .map(|sign| rotation(v0, sign * 2.0 * PI / p as f64))
                .find(|r| close(&power(&matmul(r, &s), q), &IDENTITY))
                .expect("one orientation satisfies the triangle relation");
            let mut f0 = axis(&matmul(&r, &s));
            if dot(f0, v0) < 0.0 {
                f0 = [-f0[0], -f0[1], -f0[2]];
            }
            let (bases, edges) = if family == Family::Icosahedral {
                (vec![m0, f0, v0], vec![(2, 0), (1, 2)])
            } else {
                (vec![m0, v0, f0], vec![(1, 0), (2, 1)])
            };
            let edge_bases = edges.iter().map(|&(a, b)| norm(add(bases[a], bases[b]))).collect();
            Frame { generators: vec![r, s], vertex_bases: bases, edge_bases }
        }
    }
}

/// Rotation matrix of every element, following words in the generators.
fn element_matrices(group: &FiniteGroup, generators: &[Mat3]) -> Vec<Mat3> {
    let mut mats: Vec<Option<Mat3>> = vec![None; group.order()];
    mats[0] = Some(IDENTITY);
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(g) = queue.pop_front() {
        for (&s, m) in group.generators().iter().zip(generators) {
            let sg = group.mul(s, g);
            if mats[sg].is_none() {
                mats[sg] = Some(matmul(m, &mats[g].expect("visited")));
                queue.push_back(sg);
            }
        }
    }
    mats.into_iter().map(|m| m.expect("generators span the group")).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Coordinates {
    pub vertices: Vec<Vec3>,
    /// A point on each edge's arc, used to draw it as a great-circle path
    /// through both endpoints.
    pub edge_waypoints: Vec<Vec3>,
}

/// Positions of a built-in skeleton's cells; `None` for complexes without
/// a construction layout.
pub fn coordinates(complex: &GammaComplex) -> Option<Coordinates> {
    let family = complex.family()?;
    let layout = complex.layout()?;
    let frame = frame(family);
    let mats = element_matrices(complex.group(), &frame.generators);
    let place = |anchor: usize, base: Vec3| apply(&mats[anchor], base);
    Some(Coordinates {
        vertices: layout
            .vertex_anchor
            .iter()
            .zip(&layout.vertex_type)
            .map(|(&g, &t)| place(g, frame.vertex_bases[t]))
            .collect(),
        edge_waypoints: layout
            .edge_anchor
            .iter()
            .zip(&layout.edge_type)
            .map(|(&g, &t)| place(g, frame.edge_bases[t]))
            .collect(),
    })
}

/// Rotation matrices of all group elements for a family, in element order.
pub fn rotation_matrices(family: Family) -> Vec<[[f64; 3]; 3]> {
    element_matrices(&family.group(), &frame(family).generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::build_skeleton;

    fn near(a: Vec3, b: Vec3) -> bool {
        (0..3).all(|i| (a[i] - b[i]).abs() < 1e-9)
    }

    #[test]
    fn coordinates_are_equivariant_and_distinct() {
        for family in [
            Family::Cyclic(5),
            Family::Dihedral(2),
            Family::Dihedral(6),
            Family::Tetrahedral,
            Family::Octahedral,
            Family::Icosahedral,
        ] {
            let x = build_skeleton(family);
            let c = coordinates(&x).unwrap();
            let mats = rotation_matrices(family);
            for g in x.group().elements() {
                for v in 0..x.vertex_count() {
                    assert!(near(apply(&mats[g], c.vertices[v]), c.vertices[x.act_vertex(g, v)]), "{family}");
                }
                for e in 0..x.edge_count() {
                    assert!(near(apply(&mats[g], c.edge_waypoints[e]), c.edge_waypoints[x.act_edge(g, e)]));
                }
            }
            for (i, a) in c.vertices.iter().enumerate() {
                assert!((dot(*a, *a) - 1.0).abs() < 1e-9);
                assert!(c.vertices[..i].iter().all(|b| !near(*a, *b)), "{family}: coincident vertices");
            }
            for (i, a) in c.edge_waypoints.iter().enumerate() {
                assert!(c.edge_waypoints[..i].iter().all(|b| !near(*a, *b)), "{family}: coincident edges");
            }
        }
    }

    #[test]
    fn element_matrices_are_faithful() {
        let mats = rotation_matrices(Family::Icosahedral);
        for (i, a) in mats.iter().enumerate() {
            assert!(mats[..i].iter().all(|b| !close(a, b)));
        }
    }
}
