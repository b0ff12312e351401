//! Integral representations of Γ: the group ring, its augmentation ideal,
//! coefficient tensors, fixed sublattices and the two modules attached to a
//! skeleton and its complementary 2-cells.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::complex::GammaComplex;
use crate::error::{Error, Result};
use crate::families::Family;
use crate::group::FiniteGroup;
use crate::lattice::{FGAbelianGroup, IntMatrix};
use crate::target::TargetGroup;

/// A free ℤ-module of finite rank with Γ acting through integer matrices.
/// `action[i]` is the matrix of the `i`-th generator of Γ acting on column
/// vectors.
#[derive(Debug, Clone)]
pub struct ZGammaModule {
    gamma: Arc<FiniteGroup>,
    rank: usize,
    action: Vec<IntMatrix>,
    basis_labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    Regular,
    AugmentationIdeal,
    DirectSum(Vec<ModuleKind>),
}

fn free_rank(coeff: &FGAbelianGroup) -> Result<usize> {
    if coeff.is_free() {
        Ok(coeff.rank)
    } else {
        Err(Error::Torsion(coeff.invariant_factors.clone()))
    }
}

fn regular_matrix(gamma: &FiniteGroup, s: usize) -> IntMatrix {
    let n = gamma.order();
    let mut m = IntMatrix::zeros(n, n);
    for g in gamma.elements() {
        m.set(gamma.mul(s, g), g, 1);
    }
    m
}

/// Action on the basis `f_g = g − 1` (`g ≠ e`, stored at index `g − 1`):
/// `s·f_g = f_{sg} − f_s`.
fn augmentation_matrix(gamma: &FiniteGroup, s: usize) -> IntMatrix {
    let n = gamma.order() - 1;
    let mut m = IntMatrix::zeros(n, n);
    for g in 1..gamma.order() {
        let sg = gamma.mul(s, g);
        if sg != 0 {
            m.set(sg - 1, g - 1, m.get(sg - 1, g - 1) + 1);
        }
        if s != 0 {
            m.set(s - 1, g - 1, m.get(s - 1, g - 1) - 1);
        }
    }
    m
}

fn kind_matrix(kind: &ModuleKind, gamma: &FiniteGroup, s: usize) -> IntMatrix {
    match kind {
        ModuleKind::Regular => regular_matrix(gamma, s),
        ModuleKind::AugmentationIdeal => augmentation_matrix(gamma, s),
        ModuleKind::DirectSum(parts) => {
            IntMatrix::direct_sum(&parts.iter().map(|p| kind_matrix(p, gamma, s)).collect::<Vec<_>>())
        }
    }
}

fn kind_labels(kind: &ModuleKind, gamma: &FiniteGroup, prefix: &str) -> Vec<String> {
    match kind {
        ModuleKind::Regular => gamma.elements().map(|g| format!("{prefix}e[{g}]")).collect(),
        ModuleKind::AugmentationIdeal => (1..gamma.order()).map(|g| format!("{prefix}([{g}]-1)")).collect(),
        ModuleKind::DirectSum(parts) => parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| kind_labels(p, gamma, &format!("{prefix}{i}:")))
            .collect(),
    }
}

/// Builds `kind ⊗ coeff`; the coefficient group must be free.
pub fn build_module(kind: &ModuleKind, gamma: Arc<FiniteGroup>, coeff: &FGAbelianGroup) -> Result<ZGammaModule> {
    let r = free_rank(coeff)?;
    let base_labels = kind_labels(kind, &gamma, "");
    let labels = base_labels
        .iter()
        .flat_map(|l| (0..r).map(move |i| if r == 1 { l.clone() } else { format!("{l}⊗z{i}") }))
        .collect();
    let action = gamma
        .generators()
        .iter()
        .map(|&s| kind_matrix(kind, &gamma, s).kron_identity(r))
        .collect();
    let rank = base_labels.len() * r;
    ZGammaModule::new(gamma, rank, action, Some(labels))
}

impl ZGammaModule {
    /// Validates that each generator matrix is unimodular and that the
    /// generator matrices extend to a homomorphism `Γ → GL(rank, ℤ)`.
    pub fn new(
        gamma: Arc<FiniteGroup>,
        rank: usize,
        action: Vec<IntMatrix>,
        basis_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if action.len() != gamma.generators().len() {
            return Err(Error::BadAction(format!(
                "{} matrices for {} generators",
                action.len(),
                gamma.generators().len()
            )));
        }
        for (i, m) in action.iter().enumerate() {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::BadAction(format!("generator {i} matrix is not {rank}x{rank}")));
            }
            let inv = m.smith_invariants()?;
            if inv.len() != rank || inv.iter().any(|&d| d != 1) {
                return Err(Error::BadAction(format!("generator {i} matrix is not invertible over the integers")));
            }
        }
        if let Some(l) = &basis_labels {
            if l.len() != rank {
                return Err(Error::BadAction("label count differs from rank".into()));
            }
        }
        let module = ZGammaModule { gamma, rank, action, basis_labels };
        module.element_matrices()?;
        Ok(module)
    }

    /// Matrices of all elements, built along words in the generators and
    /// checked against `M(s)·M(g) = M(sg)` for every generator `s`.
    pub fn element_matrices(&self) -> Result<Vec<IntMatrix>> {
        let gamma = &self.gamma;
        let mut mats: Vec<Option<IntMatrix>> = vec![None; gamma.order()];
        mats[gamma.identity()] = Some(IntMatrix::identity(self.rank));
        let mut queue = std::collections::VecDeque::from([gamma.identity()]);
        while let Some(g) = queue.pop_front() {
            for (i, &s) in gamma.generators().iter().enumerate() {
                let sg = gamma.mul(s, g);
                let product = self.action[i].mul(mats[g].as_ref().expect("visited"))?;
                match &mats[sg] {
                    Some(existing) if *existing != product => {
                        return Err(Error::BadAction(format!(
                            "generator {i} times element {g} disagrees with element {sg}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        mats[sg] = Some(product);
                        queue.push_back(sg);
                    }
                }
            }
        }
        mats.into_iter()
            .enumerate()
            .map(|(g, m)| m.ok_or_else(|| Error::BadAction(format!("element {g} not reached from generators"))))
            .collect()
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self) -> &[IntMatrix] {
        &self.action
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.basis_labels.as_deref()
    }

    pub fn export(&self) -> ModuleExport {
        ModuleExport {
            rank: self.rank,
            generators: self
                .gamma
                .generators()
                .iter()
                .zip(&self.action)
                .map(|(g, m)| (g.to_string(), m.to_rows()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleExport {
    pub rank: usize,
    pub generators: BTreeMap<String, Vec<Vec<i64>>>,
}

/// A sublattice of `ℤ^ambient_rank`, stored by its Hermite basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sublattice {
    pub ambient_rank: usize,
    pub basis: IntMatrix,
}

impl Sublattice {
    pub fn new(ambient_rank: usize, spanning_rows: &IntMatrix) -> Result<Self> {
        assert_eq!(spanning_rows.cols(), ambient_rank);
        Ok(Sublattice { ambient_rank, basis: spanning_rows.hermite_normal_form()? })
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }
}

/// `{x : g·x = x for all g}`, as the integer kernel of the stacked
/// `M(s) − I` over the generators.
pub fn fixed_points(m: &ZGammaModule) -> Result<Sublattice> {
    let id = IntMatrix::identity(m.rank);
    let blocks = m.action.iter().map(|a| a.sub(&id)).collect::<Result<Vec<_>>>()?;
    let stacked = IntMatrix::vstack(m.rank, &blocks);
    Ok(Sublattice { ambient_rank: m.rank, basis: stacked.kernel()? })
}

/// Reference values `(1 − χ(X), N)` for each family.
pub fn table1_reference(family: Family) -> (i64, i64) {
    match family {
        Family::Cyclic(n) => (n as i64 - 1, n as i64),
        Family::Dihedral(n) => (4 * n as i64 - 1, 4 * n as i64),
        Family::Tetrahedral => (11, 12),
        Family::Octahedral => (23, 24),
        Family::Icosahedral => (59, 60),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainRanks {
    pub one_minus_chi: i64,
    /// Number of 2-cells of the sphere complementary to the skeleton.
    pub two_cells: i64,
    /// Free Γ-orbits among the 2-cells.
    pub two_cell_orbits: usize,
    /// Ranks of the two modules per copy of the coefficient group.
    pub sigma_x_per_copy: usize,
    pub two_cell_per_copy: usize,
}

#[derive(Debug, Clone)]
pub struct ChainModel {
    pub sigma_x: ZGammaModule,
    pub two_cell: ZGammaModule,
    pub sigma_x_kind: ModuleKind,
    pub two_cell_kind: ModuleKind,
    pub ranks: ChainRanks,
}

/// The module of the wedge of circles `ΣX` (`I ⊕ ℤΓ^{m−1}`) and of the
/// 2-cells (`ℤΓ^m`), tensored with `π₁` of the target, where `m` is the
/// number of free 2-cell orbits.
pub fn chain_model(complex: &GammaComplex, target: &TargetGroup) -> Result<ChainModel> {
    let gamma = complex.group_arc();
    let order = gamma.order() as i64;
    let chi = complex.euler_char();
    let two_cells = 2 - chi;
    if two_cells <= 0 || two_cells % order != 0 {
        return Err(Error::ChainModel(format!(
            "{two_cells} complementary 2-cells cannot form free orbits of size {order}"
        )));
    }
    let m = (two_cells / order) as usize;
    let mut sigma_parts = vec![ModuleKind::AugmentationIdeal];
    sigma_parts.extend(std::iter::repeat(ModuleKind::Regular).take(m - 1));
    let sigma_x_kind = if m == 1 { ModuleKind::AugmentationIdeal } else { ModuleKind::DirectSum(sigma_parts) };
    let two_cell_kind =
        if m == 1 { ModuleKind::Regular } else { ModuleKind::DirectSum(vec![ModuleKind::Regular; m]) };

    let per_copy = FGAbelianGroup::free(1);
    let sigma_x_per_copy = build_module(&sigma_x_kind, gamma.clone(), &per_copy)?.rank();
    let two_cell_per_copy = build_module(&two_cell_kind, gamma.clone(), &per_copy)?.rank();
    let ranks = ChainRanks { one_minus_chi: 1 - chi, two_cells, two_cell_orbits: m, sigma_x_per_copy, two_cell_per_copy };

    if sigma_x_per_copy as i64 != 1 - chi || two_cell_per_copy as i64 != two_cells {
        return Err(Error::ChainModel(format!("module ranks {ranks:?} disagree with the skeleton")));
    }
    if let Some(family) = complex.family() {
        let reference = table1_reference(family);
        if reference != (1 - chi, two_cells) {
            return Err(Error::ChainModel(format!(
                "{family}: computed ({}, {two_cells}), reference {reference:?}",
                1 - chi
            )));
        }
    }

    let pi1 = target.pi1();
    Ok(ChainModel {
        sigma_x: build_module(&sigma_x_kind, gamma.clone(), &pi1)?,
        two_cell: build_module(&two_cell_kind, gamma, &pi1)?,
        sigma_x_kind,
        two_cell_kind,
        ranks,
    })
}

/// Matrix of `k : (I ⊕ ℤΓ^{m−1}) ⊗ ℤ^r → ℤΓ^m ⊗ ℤ^r`, the inclusion of the
/// ideal into the first summand and the identity on the rest.
fn inclusion_k(order: usize, m: usize, r: usize) -> IntMatrix {
    let mut ideal = IntMatrix::zeros(order, order - 1);
    for g in 1..order {
        ideal.set(g, g - 1, 1);
        ideal.set(0, g - 1, -1);
    }
    let mut blocks = vec![ideal];
    blocks.extend(std::iter::repeat(IntMatrix::identity(order)).take(m - 1));
    IntMatrix::direct_sum(&blocks).kron_identity(r)
}

/// Augmentation `ℤΓ^m ⊗ ℤ^r → ℤ^r` summing all group coordinates.
fn augmentation(order: usize, m: usize, r: usize) -> IntMatrix {
    IntMatrix::from_rows(order * m, vec![vec![1; order * m]]).kron_identity(r)
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedSequenceReport {
    pub group_order: usize,
    pub pi1_rank: usize,
    pub two_cell_orbits: usize,
    /// Fixed ranks of `I ⊗ π₁` and `ℤΓ ⊗ π₁` on their own.
    pub ideal_fixed_rank: usize,
    pub regular_fixed_rank: usize,
    /// The regular fixed lattice is spanned by norm elements `Σγ ⊗ z`.
    pub regular_fixed_is_norm: bool,
    pub sigma_x_fixed_rank: usize,
    pub two_cell_fixed_rank: usize,
    /// `Fix(ΣX) = 0` and `Fix(2-cells) ≅ π₁`, read literally.
    pub literal_holds: bool,
    /// Fixed ranks equal (number of ℤΓ summands) × rank π₁.
    pub summand_count_holds: bool,
    pub norm_image_basis: Vec<Vec<i64>>,
    pub norm_index: u128,
    pub expected_index: u128,
    pub k_cokernel: FGAbelianGroup,
    pub holds: bool,
}

/// Fixed sublattices along `0 → ΣX-module → 2-cell module → ℤ ⊗ π₁`, the
/// index of the augmentation image of the fixed 2-cell lattice, and the
/// cokernel of the inclusion.
pub fn fixed_sequence_check(complex: &GammaComplex, target: &TargetGroup) -> Result<FixedSequenceReport> {
    let model = chain_model(complex, target)?;
    let gamma = complex.group_arc();
    let order = gamma.order();
    let pi1 = target.pi1();
    let r = free_rank(&pi1)?;
    let m = model.ranks.two_cell_orbits;

    let ideal = build_module(&ModuleKind::AugmentationIdeal, gamma.clone(), &pi1)?;
    let regular = build_module(&ModuleKind::Regular, gamma.clone(), &pi1)?;
    let ideal_fixed = fixed_points(&ideal)?;
    let regular_fixed = fixed_points(&regular)?;
    let norm = IntMatrix::from_rows(order, vec![vec![1; order]]).kron_identity(r);
    let regular_fixed_is_norm = regular_fixed.basis == norm.hermite_normal_form()?;

    let sigma_fixed = fixed_points(&model.sigma_x)?;
    let two_fixed = fixed_points(&model.two_cell)?;
    let literal_holds = sigma_fixed.is_zero() && two_fixed.rank() == r;
    let summand_count_holds = sigma_fixed.rank() == (m - 1) * r && two_fixed.rank() == m * r;

    // image of the fixed 2-cell lattice under augmentation, as rows in ℤ^r
    let aug = augmentation(order, m, r);
    let image = aug.mul(&two_fixed.basis.transpose())?.transpose();
    let norm_image = image.hermite_normal_form()?;
    let norm_index = if norm_image.rows() < r {
        0
    } else {
        norm_image.smith_invariants()?.iter().map(|&d| d as u128).product()
    };
    let expected_index = (order as u128).pow(r as u32);

    let k_cokernel = FGAbelianGroup::cokernel(&inclusion_k(order, m, r))?;

    let holds = ideal_fixed.is_zero()
        && regular_fixed.rank() == r
        && regular_fixed_is_norm
        && summand_count_holds
        && norm_index == expected_index
        && k_cokernel == pi1;
    Ok(FixedSequenceReport {
        group_order: order,
        pi1_rank: r,
        two_cell_orbits: m,
        ideal_fixed_rank: ideal_fixed.rank(),
        regular_fixed_rank: regular_fixed.rank(),
        regular_fixed_is_norm,
        sigma_x_fixed_rank: sigma_fixed.rank(),
        two_cell_fixed_rank: two_fixed.rank(),
        literal_holds,
        summand_count_holds,
        norm_image_basis: norm_image.to_rows(),
        norm_index,
        expected_index,
        k_cokernel,
        holds,
    })
}
