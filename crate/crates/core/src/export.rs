//! Serializable documents for complexes, orbit data and the rank table.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::complex::GammaComplex;
use crate::error::Result;
use crate::families::{Family, FamilyKind};
use crate::geometry::{coordinates, Coordinates};
use crate::isotropy::{isotropy_groupoid, validate_groupoid, GroupoidExport, GroupoidReport};
use crate::orbit::{orbit_graph, riemann_hurwitz_check, OrbitGraphSummary, RHReport};
use crate::skeleton::build_skeleton;
use crate::target::TargetGroup;
use crate::zmodule::{chain_model, table1_reference};

#[derive(Debug, Clone, Serialize)]
pub struct GroupExport {
    pub family: Option<FamilyKind>,
    pub n: Option<u32>,
    pub order: usize,
    pub generators: Vec<usize>,
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexExport {
    pub index: usize,
    pub kind: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexExport {
    pub group: GroupExport,
    pub vertices: Vec<VertexExport>,
    pub edges: Vec<[usize; 2]>,
    /// Generator index → `[vertex permutation, edge permutation]`.
    pub action: BTreeMap<String, [Vec<usize>; 2]>,
    pub euler_characteristic: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Coordinates>,
}

pub fn export_complex(complex: &GammaComplex, with_coordinates: bool) -> ComplexExport {
    let group = complex.group();
    ComplexExport {
        group: GroupExport {
            family: complex.family().map(Family::kind),
            n: complex.family().and_then(Family::n),
            order: group.order(),
            generators: group.generators().to_vec(),
            labels: group.labels().map(<[String]>::to_vec),
        },
        vertices: (0..complex.vertex_count())
            .map(|v| VertexExport { index: v, kind: complex.vertex_kind(v).to_string() })
            .collect(),
        edges: complex.edges().to_vec(),
        action: group
            .generators()
            .iter()
            .map(|&g| (g.to_string(), [complex.vertex_permutation(g).to_vec(), complex.edge_permutation(g).to_vec()]))
            .collect(),
        euler_characteristic: complex.euler_char(),
        coordinates: if with_coordinates { coordinates(complex) } else { None },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitDocument {
    pub family: Family,
    pub orbit_graph: OrbitGraphSummary,
    pub groupoid: GroupoidExport,
    pub report: GroupoidReport,
}

pub fn orbit_document(family: Family) -> Result<OrbitDocument> {
    let og = Arc::new(orbit_graph(Arc::new(build_skeleton(family)))?);
    let groupoid = isotropy_groupoid(og.clone())?;
    Ok(OrbitDocument {
        family,
        orbit_graph: og.summary(),
        groupoid: groupoid.export(),
        report: validate_groupoid(&groupoid),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub family: FamilyKind,
    pub n: Option<u32>,
    pub one_minus_chi: i64,
    #[serde(rename = "N")]
    pub big_n: i64,
    pub matches_reference: bool,
}

/// Families in table order: cyclic and dihedral for `n` in the range, then
/// the three polyhedral groups.
pub fn standard_families(min_n: u32, max_n: u32) -> Vec<Family> {
    let mut out: Vec<Family> = (min_n.max(1)..=max_n).map(Family::Cyclic).collect();
    out.extend((min_n.max(2)..=max_n).map(Family::Dihedral));
    out.extend([Family::Tetrahedral, Family::Octahedral, Family::Icosahedral]);
    out
}

/// Computes each row from the skeleton's module model.
pub fn table1(min_n: u32, max_n: u32) -> Result<Vec<Table1Row>> {
    standard_families(min_n, max_n)
        .into_iter()
        .map(|family| {
            let model = chain_model(&build_skeleton(family), &TargetGroup::Circle)?;
            let row = (model.ranks.sigma_x_per_copy as i64, model.ranks.two_cell_per_copy as i64);
            Ok(Table1Row {
                family: family.kind(),
                n: family.n(),
                one_minus_chi: row.0,
                big_n: row.1,
                matches_reference: row == table1_reference(family),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RHEntry {
    pub family: Family,
    pub report: RHReport,
}

pub fn rh_table(families: &[Family]) -> Result<Vec<RHEntry>> {
    families
        .iter()
        .map(|&family| Ok(RHEntry { family, report: riemann_hurwitz_check(&build_skeleton(family))? }))
        .collect()
}
