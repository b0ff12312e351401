//! Graphs on the sphere carrying a finite group action by cell permutations.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::group::FiniteGroup;

/// Where each cell sits relative to the construction: cell `c` is
/// `anchor[c] · base[type[c]]`. Only used for coordinate export.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellLayout {
    pub vertex_type: Vec<usize>,
    pub vertex_anchor: Vec<usize>,
    pub edge_type: Vec<usize>,
    pub edge_anchor: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct GammaComplex {
    group: Arc<FiniteGroup>,
    family: Option<Family>,
    edges: Vec<[usize; 2]>,
    vertex_kinds: Vec<String>,
    /// `vertex_action[g][v]` is the image of vertex `v` under element `g`.
    vertex_action: Vec<Vec<usize>>,
    edge_action: Vec<Vec<usize>>,
    layout: Option<CellLayout>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl GammaComplex {
    /// Validation entry point: builds a complex from the action of each
    /// group generator and checks that it extends to a homomorphism into
    /// the permutation groups of vertices and edges, preserves incidence,
    /// and that the graph is connected.
    pub fn from_generator_action(
        group: Arc<FiniteGroup>,
        vertex_kinds: Vec<String>,
        edges: Vec<[usize; 2]>,
        generator_vertex_perms: &[Vec<usize>],
        generator_edge_perms: &[Vec<usize>],
    ) -> Result<Self> {
        let nv = vertex_kinds.len();
        let ne = edges.len();
        let gens = group.generators();
        if generator_vertex_perms.len() != gens.len() || generator_edge_perms.len() != gens.len() {
            return Err(Error::InvalidComplex("need one vertex and edge permutation per generator".into()));
        }
        for (vp, ep) in generator_vertex_perms.iter().zip(generator_edge_perms) {
            if vp.len() != nv || ep.len() != ne || !is_permutation(vp) || !is_permutation(ep) {
                return Err(Error::InvalidComplex("generator action is not a permutation".into()));
            }
        }
        let vertex_action = extend_action(&group, nv, generator_vertex_perms)?;
        let edge_action = extend_action(&group, ne, generator_edge_perms)?;
        Self::from_full_action(group, None, vertex_kinds, edges, vertex_action, edge_action, None)
    }

    pub(crate) fn from_full_action(
        group: Arc<FiniteGroup>,
        family: Option<Family>,
        vertex_kinds: Vec<String>,
        edges: Vec<[usize; 2]>,
        vertex_action: Vec<Vec<usize>>,
        edge_action: Vec<Vec<usize>>,
        layout: Option<CellLayout>,
    ) -> Result<Self> {
        let nv = vertex_kinds.len();
        if nv == 0 {
            return Err(Error::InvalidComplex("no vertices".into()));
        }
        for &[u, v] in &edges {
            if u >= nv || v >= nv {
                return Err(Error::InvalidComplex("edge endpoint out of range".into()));
            }
            if u == v {
                return Err(Error::InvalidComplex(format!("loop at vertex {u}")));
            }
        }
        let complex = GammaComplex { group, family, edges, vertex_kinds, vertex_action, edge_action, layout };
        complex.check_homomorphism()?;
        complex.check_incidence()?;
        if !complex.is_connected() {
            return Err(Error::InvalidComplex("graph is not connected".into()));
        }
        Ok(complex)
    }

    fn check_homomorphism(&self) -> Result<()> {
        let g = &self.group;
        if self.vertex_action.len() != g.order() || self.edge_action.len() != g.order() {
            return Err(Error::InvalidComplex("action table size differs from group order".into()));
        }
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                if self.vertex_action[ab] != compose(&self.vertex_action[a], &self.vertex_action[b])
                    || self.edge_action[ab] != compose(&self.edge_action[a], &self.edge_action[b])
                {
                    return Err(Error::InvalidComplex(format!(
                        "action is not a homomorphism on ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_incidence(&self) -> Result<()> {
        for g in self.group.elements() {
            for (e, &[u, v]) in self.edges.iter().enumerate() {
                let [x, y] = self.edges[self.edge_action[g][e]];
                let (gu, gv) = (self.vertex_action[g][u], self.vertex_action[g][v]);
                if !((x == gu && y == gv) || (x == gv && y == gu)) {
                    return Err(Error::InvalidComplex(format!(
                        "element {g} maps edge {e} to an edge with different endpoints"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let nv = self.vertex_count();
        let mut adj = vec![Vec::new(); nv];
        for &[u, v] in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; nv];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == nv
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteGroup> {
        Arc::clone(&self.group)
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_kinds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn vertex_kind(&self, v: usize) -> &str {
        &self.vertex_kinds[v]
    }

    pub fn vertex_kinds(&self) -> &[String] {
        &self.vertex_kinds
    }

    pub fn act_vertex(&self, g: usize, v: usize) -> usize {
        self.vertex_action[g][v]
    }

    pub fn act_edge(&self, g: usize, e: usize) -> usize {
        self.edge_action[g][e]
    }

    pub fn vertex_permutation(&self, g: usize) -> &[usize] {
        &self.vertex_action[g]
    }

    pub fn edge_permutation(&self, g: usize) -> &[usize] {
        &self.edge_action[g]
    }

    pub fn layout(&self) -> Option<&CellLayout> {
        self.layout.as_ref()
    }

    /// Number of vertices minus number of edges.
    pub fn euler_char(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }

    pub fn cell_stabilizer(&self, cell: Cell) -> Vec<usize> {
        self.group
            .elements()
            .filter(|&g| match cell {
                Cell::Vertex(v) => self.vertex_action[g][v] == v,
                Cell::Edge(e) => self.edge_action[g][e] == e,
            })
            .collect()
    }
}

/// Extends generator permutations to every element following the group's
/// breadth-first word order, checking consistency with the table.
fn extend_action(group: &FiniteGroup, n: usize, gen_perms: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut action: Vec<Option<Vec<usize>>> = vec![None; group.order()];
    action[0] = Some((0..n).collect());
    let mut queue = VecDeque::from([0usize]);
    while let Some(g) = queue.pop_front() {
        let pg = action[g].clone().unwrap();
        for (&s, ps) in group.generators().iter().zip(gen_perms) {
            let h = group.mul(s, g);
            let ph = compose(ps, &pg);
            match &action[h] {
                Some(existing) if *existing != ph => {
                    return Err(Error::InvalidComplex(format!(
                        "generator action violates a group relation at element {h}"
                    )))
                }
                Some(_) => {}
                None => {
                    action[h] = Some(ph);
                    queue.push_back(h);
                }
            }
        }
    }
    Ok(action.into_iter().map(|p| p.expect("generators span the group")).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "dim", content = "index")]
pub enum Cell {
    #[serde(rename = "0")]
    Vertex(usize),
    #[serde(rename = "1")]
    Edge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// An element maps an edge to itself exchanging its endpoints.
    EdgeFlip,
    /// An edge stabilizer is not contained in an endpoint stabilizer.
    StabilizerMismatch,
    /// Two edges lie over the same pair of vertex orbits, but no single
    /// element carries one onto the other endpoint-wise.
    NotRegular,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub cell: Cell,
    pub element: usize,
    pub detail: String,
}

/// Lists every failure of the regularity condition. Empty iff the action
/// is regular.
pub fn check_regular(complex: &GammaComplex) -> Vec<Violation> {
    let g = complex.group();
    let mut out = Vec::new();
    for (e, &[u, v]) in complex.edges().iter().enumerate() {
        for x in g.elements() {
            if complex.act_edge(x, e) != e {
                continue;
            }
            let (xu, xv) = (complex.act_vertex(x, u), complex.act_vertex(x, v));
            if xu == v && xv == u {
                out.push(Violation {
                    kind: ViolationKind::EdgeFlip,
                    cell: Cell::Edge(e),
                    element: x,
                    detail: format!("{} swaps endpoints {u} and {v}", g.label(x)),
                });
            } else if xu != u || xv != v {
                out.push(Violation {
                    kind: ViolationKind::StabilizerMismatch,
                    cell: Cell::Edge(e),
                    element: x,
                    detail: format!("{} fixes edge {e} but moves an endpoint", g.label(x)),
                });
            }
        }
    }

    // For every ordered pair of edges (u, v), (u', v') with u' ∈ Γu and
    // v' ∈ Γv there must be a single element taking u ↦ u' and v ↦ v'.
    let edges = complex.edges();
    for (e, &[u, v]) in edges.iter().enumerate() {
        for (f, &[a, b]) in edges.iter().enumerate() {
            for (up, vp) in [(a, b), (b, a)] {
                let first = g.elements().find(|&x| complex.act_vertex(x, u) == up);
                let second = g.elements().find(|&x| complex.act_vertex(x, v) == vp);
                let (Some(x1), Some(_)) = (first, second) else { continue };
                let joint = g
                    .elements()
                    .any(|x| complex.act_vertex(x, u) == up && complex.act_vertex(x, v) == vp);
                if !joint {
                    out.push(Violation {
                        kind: ViolationKind::NotRegular,
                        cell: Cell::Edge(e),
                        element: x1,
                        detail: format!(
                            "edge {e} = ({u}, {v}) and edge {f} = ({up}, {vp}) are orbit-wise \
                             matched but not by one element"
                        ),
                    });
                }
            }
        }
    }
    out
}
