//! Orbit graphs, sections, singular sets and the Riemann–Hurwitz count.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::complex::{check_regular, Cell, GammaComplex};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// The quotient graph `A = X/Γ` together with the projection `X → A` and a
/// section `A → X` whose edge representatives end at vertex
/// representatives.
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    complex: Arc<GammaComplex>,
    vertex_orbit_of: Vec<usize>,
    edge_orbit_of: Vec<usize>,
    vertex_orbits: Vec<Vec<usize>>,
    edge_orbits: Vec<Vec<usize>>,
    vertex_section: Vec<usize>,
    edge_section: Vec<usize>,
    vertex_stabilizers: Vec<Subgroup>,
    edge_stabilizers: Vec<Subgroup>,
}

fn orbits(n: usize, order: usize, act: impl Fn(usize, usize) -> usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut orbit_of = vec![usize::MAX; n];
    let mut list = Vec::new();
    for c in 0..n {
        if orbit_of[c] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = (0..order).map(|g| act(g, c)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            orbit_of[m] = list.len();
        }
        list.push(members);
    }
    (orbit_of, list)
}

pub fn orbit_graph(complex: Arc<GammaComplex>) -> Result<OrbitGraph> {
    let order = complex.group().order();
    let (vertex_orbit_of, vertex_orbits) =
        orbits(complex.vertex_count(), order, |g, v| complex.act_vertex(g, v));
    let (edge_orbit_of, edge_orbits) = orbits(complex.edge_count(), order, |g, e| complex.act_edge(g, e));

    let min_reps: Vec<usize> = vertex_orbits.iter().map(|o| o[0]).collect();
    let (vertex_section, edge_section) = match edge_reps_for(&complex, &edge_orbits, &min_reps) {
        Some(edge_reps) => (min_reps, edge_reps),
        None => adjusted_section(&complex, &vertex_orbit_of, &vertex_orbits, &edge_orbit_of, &edge_orbits)?,
    };

    let group = complex.group();
    let vertex_stabilizers = vertex_section
        .iter()
        .map(|&v| Subgroup::new(group, complex.cell_stabilizer(Cell::Vertex(v))))
        .collect::<Result<Vec<_>>>()?;
    let edge_stabilizers = edge_section
        .iter()
        .map(|&e| Subgroup::new(group, complex.cell_stabilizer(Cell::Edge(e))))
        .collect::<Result<Vec<_>>>()?;

    Ok(OrbitGraph {
        complex,
        vertex_orbit_of,
        edge_orbit_of,
        vertex_orbits,
        edge_orbits,
        vertex_section,
        edge_section,
        vertex_stabilizers,
        edge_stabilizers,
    })
}

/// Minimal edge of each orbit whose endpoints are both in `vertex_reps`.
fn edge_reps_for(complex: &GammaComplex, edge_orbits: &[Vec<usize>], vertex_reps: &[usize]) -> Option<Vec<usize>> {
    edge_orbits
        .iter()
        .map(|orbit| {
            orbit.iter().copied().find(|&e| {
                let [u, v] = complex.edges()[e];
                vertex_reps.contains(&u) && vertex_reps.contains(&v)
            })
        })
        .collect()
}

/// Grows a section along a spanning tree of the orbit graph, starting from
/// the smallest vertex, then checks the remaining edge orbits.
fn adjusted_section(
    complex: &GammaComplex,
    vertex_orbit_of: &[usize],
    vertex_orbits: &[Vec<usize>],
    edge_orbit_of: &[usize],
    edge_orbits: &[Vec<usize>],
) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut vrep: Vec<Option<usize>> = vec![None; vertex_orbits.len()];
    let mut erep: Vec<Option<usize>> = vec![None; edge_orbits.len()];
    vrep[0] = Some(vertex_orbits[0][0]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(vo) = queue.pop_front() {
        let rep = vrep[vo].unwrap();
        for (e, &[u, v]) in complex.edges().iter().enumerate() {
            let eo = edge_orbit_of[e];
            if erep[eo].is_some() || (u != rep && v != rep) {
                continue;
            }
            let other = if u == rep { v } else { u };
            let oo = vertex_orbit_of[other];
            match vrep[oo] {
                None => {
                    vrep[oo] = Some(other);
                    erep[eo] = Some(e);
                    queue.push_back(oo);
                }
                Some(r) if r == other => erep[eo] = Some(e),
                Some(_) => {}
            }
        }
    }
    let vertex_reps: Vec<usize> = vrep
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NoSection("orbit graph is disconnected".into()))?;
    for (eo, slot) in erep.iter_mut().enumerate() {
        if slot.is_none() {
            *slot = edge_orbits[eo].iter().copied().find(|&e| {
                let [u, v] = complex.edges()[e];
                vertex_reps.contains(&u) && vertex_reps.contains(&v)
            });
        }
    }
    let edge_reps = erep.into_iter().enumerate().map(|(eo, r)| {
        r.ok_or_else(|| Error::NoSection(format!("edge orbit {eo} has no edge between representatives")))
    });
    Ok((vertex_reps, edge_reps.collect::<Result<_>>()?))
}

impl OrbitGraph {
    pub fn complex(&self) -> &GammaComplex {
        &self.complex
    }

    pub fn complex_arc(&self) -> Arc<GammaComplex> {
        Arc::clone(&self.complex)
    }

    pub fn vertex_orbit_count(&self) -> usize {
        self.vertex_orbits.len()
    }

    pub fn edge_orbit_count(&self) -> usize {
        self.edge_orbits.len()
    }

    pub fn vertex_orbits(&self) -> &[Vec<usize>] {
        &self.vertex_orbits
    }

    pub fn edge_orbits(&self) -> &[Vec<usize>] {
        &self.edge_orbits
    }

    pub fn project_vertex(&self, v: usize) -> usize {
        self.vertex_orbit_of[v]
    }

    pub fn project_edge(&self, e: usize) -> usize {
        self.edge_orbit_of[e]
    }

    pub fn vertex_section(&self, orbit: usize) -> usize {
        self.vertex_section[orbit]
    }

    pub fn edge_section(&self, orbit: usize) -> usize {
        self.edge_section[orbit]
    }

    pub fn vertex_stabilizer(&self, orbit: usize) -> &Subgroup {
        &self.vertex_stabilizers[orbit]
    }

    pub fn edge_stabilizer(&self, orbit: usize) -> &Subgroup {
        &self.edge_stabilizers[orbit]
    }

    /// Endpoint vertex orbits of an edge orbit, in the order stored on the
    /// representative edge.
    pub fn edge_ends(&self, orbit: usize) -> [usize; 2] {
        let [u, v] = self.complex.edges()[self.edge_section[orbit]];
        [self.vertex_orbit_of[u], self.vertex_orbit_of[v]]
    }

    pub fn euler_char(&self) -> i64 {
        self.vertex_orbit_count() as i64 - self.edge_orbit_count() as i64
    }

    /// True when the quotient graph has no cycles.
    pub fn is_tree(&self) -> bool {
        self.euler_char() == 1
    }

    pub fn summary(&self) -> OrbitGraphSummary {
        OrbitGraphSummary {
            vertex_orbits: (0..self.vertex_orbit_count())
                .map(|o| VertexOrbitSummary {
                    representative: self.vertex_section[o],
                    kind: self.complex.vertex_kind(self.vertex_section[o]).to_string(),
                    size: self.vertex_orbits[o].len(),
                    stabilizer_order: self.vertex_stabilizers[o].order(),
                })
                .collect(),
            edge_orbits: (0..self.edge_orbit_count())
                .map(|o| EdgeOrbitSummary {
                    representative: self.edge_section[o],
                    ends: self.edge_ends(o),
                    size: self.edge_orbits[o].len(),
                    stabilizer_order: self.edge_stabilizers[o].order(),
                })
                .collect(),
            chi_a: self.euler_char(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexOrbitSummary {
    pub representative: usize,
    pub kind: String,
    pub size: usize,
    pub stabilizer_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeOrbitSummary {
    pub representative: usize,
    pub ends: [usize; 2],
    pub size: usize,
    pub stabilizer_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitGraphSummary {
    pub vertex_orbits: Vec<VertexOrbitSummary>,
    pub edge_orbits: Vec<EdgeOrbitSummary>,
    pub chi_a: i64,
}

/// Cells with a nontrivial stabilizer, vertices first.
pub fn singular_set(complex: &GammaComplex) -> Vec<Cell> {
    let vertices = (0..complex.vertex_count()).map(Cell::Vertex);
    let edges = (0..complex.edge_count()).map(Cell::Edge);
    vertices
        .chain(edges)
        .filter(|&c| complex.cell_stabilizer(c).len() > 1)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RHReport {
    pub chi_x: i64,
    pub chi_a: i64,
    pub group_order: usize,
    /// Sum of `|stabilizer| − 1` over all singular cells.
    pub singular_sum: i64,
    pub holds: bool,
}

/// Evaluates `χ(X) = |Γ|·χ(A) − Σ(|Γ_x| − 1)`; refuses non-regular actions.
pub fn riemann_hurwitz_check(complex: &GammaComplex) -> Result<RHReport> {
    let violations = check_regular(complex);
    if let Some(first) = violations.first() {
        return Err(Error::NotRegular { count: violations.len(), first: first.detail.clone() });
    }
    let order = complex.group().order();
    let (_, vertex_orbits) = orbits(complex.vertex_count(), order, |g, v| complex.act_vertex(g, v));
    let (_, edge_orbits) = orbits(complex.edge_count(), order, |g, e| complex.act_edge(g, e));
    let chi_a = vertex_orbits.len() as i64 - edge_orbits.len() as i64;
    let singular_sum = singular_set(complex)
        .into_iter()
        .map(|c| complex.cell_stabilizer(c).len() as i64 - 1)
        .sum();
    let chi_x = complex.euler_char();
    Ok(RHReport {
        chi_x,
        chi_a,
        group_order: order,
        singular_sum,
        holds: chi_x == order as i64 * chi_a - singular_sum,
    })
}
