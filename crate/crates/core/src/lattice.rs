//! Exact integer matrices: Hermite normal form, integer kernels, Smith
//! invariants and finitely generated abelian groups.
//!
//! All arithmetic is checked; an overflow surfaces as [`Error::Overflow`]
//! instead of a wrong answer.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Serialized as a list of rows.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `(g, x, y)` with `x·a + y·b = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    (r0 as i64, s0 as i64, t0 as i64)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    ext_gcd(a, b).0
}

/// `row_i ← x·row_i + y·row_j`, `row_j ← u·row_i + v·row_j` (simultaneous).
fn combine_rows(m: &mut [Vec<i64>], i: usize, j: usize, x: i64, y: i64, u: i64, v: i64) -> Result<()> {
    for c in 0..m[i].len() {
        let (a, b) = (m[i][c], m[j][c]);
        m[i][c] = add(mul(x, a)?, mul(y, b)?)?;
        m[j][c] = add(mul(u, a)?, mul(v, b)?)?;
    }
    Ok(())
}

/// Row echelon form on the first `limit` columns using only unimodular row
/// operations. Returns the pivot columns; rows beyond the pivot count are
/// zero on those columns. Pivots are positive.
fn echelonize(m: &mut [Vec<i64>], limit: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let (g, x, y) = ext_gcd(a, b);
            combine_rows(m, r, i, x, y, -b / g, a / g)?;
        }
        if m[r][c] < 0 {
            for v in m[r].iter_mut() {
                *v = -*v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from rows; an empty row list gives a `0 × cols` matrix.
    pub fn from_rows(cols: usize, rows: Vec<Vec<i64>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = add(out.get(r, c), mul(a, other.get(k, c))?)?;
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).try_fold(0i64, |acc, (&a, &b)| add(acc, mul(a, b)?)))
            .collect()
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a.checked_sub(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn vstack(cols: usize, blocks: &[IntMatrix]) -> IntMatrix {
        let rows = blocks.iter().flat_map(|b| {
            assert_eq!(b.cols, cols);
            b.to_rows()
        });
        IntMatrix::from_rows(cols, rows.collect())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[IntMatrix]) -> IntMatrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `self ⊗ I_k` (each entry becomes a `k × k` scalar block).
    pub fn kron_identity(&self, k: usize) -> IntMatrix {
        let mut out = Self::zeros(self.rows * k, self.cols * k);
        for r in 0..self.rows {
            for c in 0..self.cols {
                for i in 0..k {
                    out.set(r * k + i, c * k + i, self.get(r, c));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.to_rows();
        Ok(echelonize(&mut m, self.cols)?.len())
    }

    /// Row-style Hermite normal form of the row lattice: positive pivots,
    /// entries above each pivot reduced into `[0, pivot)`, zero rows
    /// dropped. Two matrices span the same lattice iff their forms agree.
    pub fn hermite_normal_form(&self) -> Result<IntMatrix> {
        let mut m = self.to_rows();
        let pivots = echelonize(&mut m, self.cols)?;
        for (k, &c) in pivots.iter().enumerate() {
            let p = m[k][c];
            for j in 0..k {
                let q = m[j][c].div_euclid(p);
                if q != 0 {
                    for col in 0..self.cols {
                        m[j][col] = add(m[j][col], -mul(q, m[k][col])?)?;
                    }
                }
            }
        }
        m.truncate(pivots.len());
        Ok(IntMatrix::from_rows(self.cols, m))
    }

    /// Basis (as rows, in Hermite normal form) of `{x ∈ ℤⁿ : self·x = 0}`.
    pub fn kernel(&self) -> Result<IntMatrix> {
        let (m, n) = (self.rows, self.cols);
        let mut aug: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut row: Vec<i64> = (0..m).map(|r| self.get(r, i)).collect();
                row.extend((0..n).map(|j| i64::from(i == j)));
                row
            })
            .collect();
        let rank = echelonize(&mut aug, m)?.len();
        let basis: Vec<Vec<i64>> = aug[rank..].iter().map(|row| row[m..].to_vec()).collect();
        IntMatrix::from_rows(n, basis).hermite_normal_form()
    }

    /// Nonzero Smith invariants `d₁ | d₂ | …`, all positive.
    pub fn smith_invariants(&self) -> Result<Vec<i64>> {
        let mut m = self.to_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut diag = Vec::new();
        for t in 0..rows.min(cols) {
            loop {
                let Some((pr, pc)) = (t..rows)
                    .flat_map(|r| (t..cols).map(move |c| (r, c)))
                    .filter(|&(r, c)| m[r][c] != 0)
                    .min_by_key(|&(r, c)| m[r][c].unsigned_abs())
                else {
                    return Ok(finish_invariants(diag));
                };
                m.swap(t, pr);
                for row in m.iter_mut() {
                    row.swap(t, pc);
                }
                let p = m[t][t];
                let mut clean = true;
                for r in t + 1..rows {
                    let q = m[r][t] / p;
                    if q != 0 {
                        for c in t..cols {
                            m[r][c] = add(m[r][c], -mul(q, m[t][c])?)?;
                        }
                    }
                    clean &= m[r][t] == 0;
                }
                for c in t + 1..cols {
                    let q = m[t][c] / p;
                    if q != 0 {
                        for r in t..rows {
                            m[r][c] = add(m[r][c], -mul(q, m[r][t])?)?;
                        }
                    }
                    clean &= m[t][c] == 0;
                }
                if !clean {
                    continue;
                }
                // pivot must divide the rest; otherwise fold a row in and retry
                if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| m[r][c] % p != 0)) {
                    for c in t..cols {
                        m[t][c] = add(m[t][c], m[r][c])?;
                    }
                    continue;
                }
                diag.push(p.abs());
                break;
            }
        }
        Ok(finish_invariants(diag))
    }
}

fn finish_invariants(mut diag: Vec<i64>) -> Vec<i64> {
    diag.sort_unstable();
    diag
}

/// `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/dₖ` with `2 ≤ d₁ | d₂ | … | dₖ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FGAbelianGroup {
    pub rank: usize,
    pub invariant_factors: Vec<u64>,
}

impl FGAbelianGroup {
    pub fn free(rank: usize) -> Self {
        FGAbelianGroup { rank, invariant_factors: vec![] }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn new(rank: usize, invariant_factors: Vec<u64>) -> Result<Self> {
        let ok = invariant_factors.iter().all(|&d| d >= 2)
            && invariant_factors.windows(2).all(|w| w[1] % w[0] == 0);
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "invariant factors {invariant_factors:?} must be >= 2 and divide successively"
            )));
        }
        Ok(FGAbelianGroup { rank, invariant_factors })
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Cokernel of the map `ℤᵏ → ℤⁿ` whose columns are the images of the
    /// basis vectors.
    pub fn cokernel(map: &IntMatrix) -> Result<Self> {
        let inv = map.smith_invariants()?;
        let torsion = inv.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
        Self::new(map.rows() - inv.len(), torsion)
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(cols, rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(12, 18), (-4, 6), (0, 5), (7, 0), (0, 0), (-3, -9)] {
            let (g, x, y) = ext_gcd(a, b);
            assert_eq!(x * a + y * b, g);
            assert!(g >= 0);
        }
    }

    #[test]
    fn kernel_of_cyclic_shift_minus_identity() {
        // (P - I) for the 3-cycle has kernel spanned by (1, 1, 1)
        let a = mat(3, &[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]);
        assert_eq!(a.kernel().unwrap(), mat(3, &[&[1, 1, 1]]));
        assert_eq!(IntMatrix::identity(3).kernel().unwrap().rows(), 0);
        assert_eq!(IntMatrix::zeros(2, 3).kernel().unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn smith_examples() {
        assert_eq!(mat(2, &[&[2, 4], &[6, 8]]).smith_invariants().unwrap(), vec![2, 4]);
        assert_eq!(mat(3, &[&[2, 0, 0], &[0, 3, 0]]).smith_invariants().unwrap(), vec![1, 6]);
        let coker = FGAbelianGroup::cokernel(&mat(1, &[&[4], &[0]])).unwrap();
        assert_eq!(coker, FGAbelianGroup { rank: 1, invariant_factors: vec![4] });
        assert_eq!(coker.to_string(), "Z + Z/4");
    }

    #[test]
    fn fg_abelian_validation() {
        assert!(FGAbelianGroup::new(0, vec![2, 4]).is_ok());
        assert!(FGAbelianGroup::new(0, vec![4, 2]).is_err());
        assert!(FGAbelianGroup::new(0, vec![1]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..=4, r * c)
                .prop_map(move |d| IntMatrix::from_rows(c, d.chunks(c).map(<[i64]>::to_vec).collect()))
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated_and_rank_nullity_holds(a in small_matrix()) {
            let k = a.kernel().unwrap();
            for r in 0..k.rows() {
                prop_assert!(a.mul_vec(k.row(r)).unwrap().iter().all(|&x| x == 0));
            }
            prop_assert_eq!(k.rows() + a.rank().unwrap(), a.cols());
        }

        #[test]
        fn hnf_is_invariant_under_unimodular_row_operations(
            a in small_matrix(), i in 0usize..4, j in 0usize..4, q in -3i64..=3,
        ) {
            let mut rows = a.to_rows();
            let n = rows.len();
            let (i, j) = (i % n, j % n);
            if i != j {
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(src) {
                    *x += q * y;
                }
                rows.swap(i, j);
            }
            let b = IntMatrix::from_rows(a.cols(), rows);
            prop_assert_eq!(a.hermite_normal_form().unwrap(), b.hermite_normal_form().unwrap());
        }

        #[test]
        fn smith_invariants_divide_successively(a in small_matrix()) {
            let d = a.smith_invariants().unwrap();
            prop_assert_eq!(d.len(), a.rank().unwrap());
            prop_assert!(d.windows(2).all(|w| w[1] % w[0] == 0));
        }
    }
}
