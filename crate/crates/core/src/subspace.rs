//! Subspaces of GF(p)^n in canonical form, and their lattice operations.
//!
//! A subspace is stored as its reduced row echelon basis with no zero rows,
//! so two subspaces are equal as sets exactly when the structs compare
//! equal. Enumeration is by dimension ascending, then lexicographically on
//! the basis matrix, which makes every stream deterministic.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matrix::{fp_neg, fp_sub, FpMatrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    /// RREF basis, one vector per row; `basis.rows() == dim`.
    basis: FpMatrix,
}

impl Subspace {
    pub fn zero(p: u64, ambient: usize) -> Result<Self> {
        Ok(Subspace {
            ambient,
            basis: FpMatrix::zeros(p, 0, ambient)?,
        })
    }

    pub fn full(p: u64, ambient: usize) -> Result<Self> {
        Ok(Subspace {
            ambient,
            basis: FpMatrix::identity(p, ambient)?,
        })
    }

    /// Span of the rows of `mat`, canonicalized.
    pub fn from_spanning(mat: &FpMatrix) -> Subspace {
        let r = mat.rref();
        let basis = if r.rank == 0 {
            FpMatrix::zeros(mat.p(), 0, mat.cols()).expect("valid p")
        } else {
            let rows: Vec<Vec<u64>> = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
            FpMatrix::from_rows(mat.p(), &rows).expect("rectangular rows")
        };
        Subspace {
            ambient: mat.cols(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn p(&self) -> u64 {
        self.basis.p()
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.p() != other.p() {
            return Err(Error::Incompatible(format!(
                "moduli {} and {}",
                self.p(),
                other.p()
            )));
        }
        if self.ambient != other.ambient {
            return Err(Error::Shape(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Reduces `v` modulo the basis; returns the residue.
    fn reduce_vector(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p();
        let mut v = v.to_vec();
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let pivot = row
                .iter()
                .position(|&e| e != 0)
                .expect("basis has no zero rows");
            let c = v[pivot];
            if c != 0 {
                for (vj, &rj) in v.iter_mut().zip(row) {
                    *vj = fp_sub(*vj, crate::matrix::fp_mul(c, rj, p), p);
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce_vector(v).iter().all(|&e| e == 0)
    }

    /// True when `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        for i in 0..other.dim() {
            if !self.contains_vector(other.basis.row(i)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_spanning(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection via the kernel of the stacked coefficient system.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let p = self.p();
        let k = self.dim();
        let m = other.dim();
        if k == 0 || m == 0 {
            return Subspace::zero(p, self.ambient);
        }
        // columns of [U^t | -V^t] are the basis vectors; kernel elements
        // (a, b) satisfy a*U = b*V, an intersection vector.
        let ut = self.basis.transpose();
        let vt = other.basis.transpose().scale(p - 1);
        let system = ut.hstack(&vt)?;
        let kernel = system.kernel_matrix();
        let mut rows = Vec::new();
        for i in 0..kernel.rows() {
            let coeffs = &kernel.row(i)[..k];
            let mut vec = vec![0u64; self.ambient];
            for (ci, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (vj, &bj) in vec.iter_mut().zip(self.basis.row(ci)) {
                    *vj = crate::matrix::fp_add(*vj, crate::matrix::fp_mul(c, bj, p), p);
                }
            }
            rows.push(vec);
        }
        if rows.is_empty() {
            return Subspace::zero(p, self.ambient);
        }
        Ok(Subspace::from_spanning(&FpMatrix::from_rows(p, &rows)?))
    }

    /// Image of this subspace under `map` (acting on column vectors).
    pub fn image_under(&self, map: &FpMatrix) -> Result<Subspace> {
        if map.cols() != self.ambient {
            return Err(Error::Shape(format!(
                "map with {} columns applied to ambient {}",
                map.cols(),
                self.ambient
            )));
        }
        if self.dim() == 0 {
            return Subspace::zero(self.p(), map.rows());
        }
        Ok(Subspace::from_spanning(&self.basis.mul(&map.transpose())?))
    }

    /// Preimage `{v : map(v) in self}` of this subspace under `map`.
    pub fn preimage_under(&self, map: &FpMatrix) -> Result<Subspace> {
        if map.rows() != self.ambient {
            return Err(Error::Shape(format!(
                "map with {} rows against ambient {}",
                map.rows(),
                self.ambient
            )));
        }
        // v is in the preimage iff (Q . map) v = 0 where Q kills self.
        let q = self.cokernel_projection();
        Ok(Subspace::from_spanning(&q.mul(map)?.kernel_matrix()))
    }

    /// A matrix `(n-d) x n` whose kernel is exactly this subspace: the
    /// coordinates on the non-pivot columns after reduction.
    pub fn cokernel_projection(&self) -> FpMatrix {
        let p = self.p();
        let n = self.ambient;
        let pivots: Vec<usize> = (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|&e| e != 0)
                    .expect("no zero rows")
            })
            .collect();
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut proj = FpMatrix::zeros(p, free.len(), n).expect("valid p");
        for (t, &c) in free.iter().enumerate() {
            proj.set(t, c, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                proj.set(t, pc, fp_neg(self.basis.at(i, c), p));
            }
        }
        proj
    }

    /// Section of `cokernel_projection`: embeds quotient coordinates back
    /// along the non-pivot columns.
    pub fn complement_section(&self) -> FpMatrix {
        let p = self.p();
        let n = self.ambient;
        let pivots: Vec<usize> = (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|&e| e != 0)
                    .expect("no zero rows")
            })
            .collect();
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut sec = FpMatrix::zeros(p, n, free.len()).expect("valid p");
        for (t, &c) in free.iter().enumerate() {
            sec.set(c, t, 1);
        }
        sec
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// Canonical order: dimension first, then the basis entries
    /// lexicographically row-major.
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

/// The kernel `{v : A v = 0}` as a canonical subspace of GF(p)^cols.
pub fn kernel_basis(a: &FpMatrix) -> Subspace {
    Subspace::from_spanning(&a.kernel_matrix())
}

/// The column space of `A` as a canonical subspace of GF(p)^rows.
pub fn image_basis(a: &FpMatrix) -> Subspace {
    Subspace::from_spanning(&a.transpose())
}

/// Gaussian binomial coefficient `[n choose k]_p`, the number of
/// k-dimensional subspaces of GF(p)^n.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let p = p as u128;
    // prod_{i=0}^{k-1} (p^{n-i} - 1) / (p^{i+1} - 1); evaluate as an exact
    // integer by incremental division.
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= p.pow((n - i) as u32) - 1;
        den *= p.pow((i + 1) as u32) - 1;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    num
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Total number of subspaces of GF(p)^n, all dimensions.
pub fn subspace_count(n: usize, p: u64) -> u128 {
    (0..=n).map(|d| gaussian_binomial(n, d, p)).sum()
}

/// All subspaces of GF(p)^n, or only those of dimension `d` when given.
/// Each subspace appears exactly once, in canonical order.
pub fn enumerate_subspaces(p: u64, n: usize, d: Option<usize>) -> Result<Vec<Subspace>> {
    if !crate::matrix::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(d) = d {
        if d > n {
            return Err(Error::Precondition(format!(
                "dimension {d} exceeds ambient {n}"
            )));
        }
        return Ok(enumerate_dimension(p, n, d));
    }
    let mut all = Vec::new();
    for dd in 0..=n {
        all.extend(enumerate_dimension(p, n, dd));
    }
    Ok(all)
}

/// Subspaces of a fixed dimension: one RREF matrix per pivot-column choice
/// and per assignment of free entries.
fn enumerate_dimension(p: u64, n: usize, d: usize) -> Vec<Subspace> {
    if d == 0 {
        return vec![Subspace::zero(p, n).expect("valid p")];
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        emit_for_pivots(p, n, &pivots, &mut out);
        // next d-combination of {0..n-1}
        let mut i = d;
        loop {
            if i == 0 {
                // generate done
                out.sort();
                return out;
            }
            i -= 1;
            if pivots[i] != i + n - d {
                pivots[i] += 1;
                for j in i + 1..d {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn emit_for_pivots(p: u64, n: usize, pivots: &[usize], out: &mut Vec<Subspace>) {
    let d = pivots.len();
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    // free positions: (row i, col j) with j > pivots[i] and j not a pivot
    let mut free_pos = Vec::new();
    for (i, &pc) in pivots.iter().enumerate() {
        for j in pc + 1..n {
            if !is_pivot[j] {
                free_pos.push((i, j));
            }
        }
    }
    let mut values = vec![0u64; free_pos.len()];
    loop {
        let mut m = FpMatrix::zeros(p, d, n).expect("valid p");
        for (i, &pc) in pivots.iter().enumerate() {
            m.set(i, pc, 1);
        }
        for (&(i, j), &v) in free_pos.iter().zip(&values) {
            m.set(i, j, v);
        }
        out.push(Subspace {
            ambient: n,
            basis: m,
        });
        // odometer over the free values
        let mut k = 0;
        loop {
            if k == values.len() {
                return;
            }
            values[k] += 1;
            if values[k] < p {
                break;
            }
            values[k] = 0;
            k += 1;
        }
    }
}

/// All subspaces containing `base` with the given dimension, via subspaces
/// of the quotient space.
pub fn superspaces_with_dim(base: &Subspace, d: usize) -> Result<Vec<Subspace>> {
    let r = base.dim();
    let n = base.ambient_dim();
    if d < r || d > n {
        return Ok(Vec::new());
    }
    if d == r {
        return Ok(vec![base.clone()]);
    }
    let p = base.p();
    let section = base.complement_section();
    let lifted = section.transpose();
    let mut out = Vec::new();
    for q in enumerate_dimension(p, n - r, d - r) {
        // lift quotient basis along the section, then adjoin base
        let lifted_rows = q.basis().mul(&lifted).expect("shapes agree");
        let span = base.basis().vstack(&lifted_rows).expect("shapes agree");
        out.push(Subspace::from_spanning(&span));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(p: u64, v: Vec<u64>) -> Subspace {
        let n = v.len();
        Subspace::from_spanning(&FpMatrix::new(p, 1, n, v).unwrap())
    }

    #[test]
    fn sum_with_zero_and_intersect_with_full() {
        let u = line(2, vec![1, 0]);
        let zero = Subspace::zero(2, 2).unwrap();
        let full = Subspace::full(2, 2).unwrap();
        assert_eq!(u.sum(&zero).unwrap(), u);
        assert_eq!(u.intersect(&full).unwrap(), u);
    }

    #[test]
    fn complementary_lines_gf2() {
        let u = line(2, vec![1, 0]);
        let v = line(2, vec![0, 1]);
        assert!(u.intersect(&v).unwrap().is_zero());
    }

    #[test]
    fn two_distinct_lines_span_the_plane() {
        let u = line(2, vec![1, 0]);
        let v = line(2, vec![1, 1]);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        assert!(s.is_full());
        assert!(i.is_zero());
        assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
    }

    #[test]
    fn containment() {
        let u = Subspace::full(2, 2).unwrap();
        let v = line(2, vec![1, 1]);
        assert!(u.contains(&v).unwrap());
        assert!(!v.contains(&u).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = line(2, vec![1, 0]);
        let v = line(2, vec![1, 0, 0]);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
        assert!(u.contains(&v).is_err());
    }

    #[test]
    fn enumerate_gf2_plane() {
        let subs = enumerate_subspaces(2, 2, None).unwrap();
        assert_eq!(subs.len(), 5);
        assert_eq!(subs[0].dim(), 0);
        assert_eq!(subs[4].dim(), 2);
    }

    #[test]
    fn enumerate_zero_ambient() {
        let subs = enumerate_subspaces(3, 0, None).unwrap();
        assert_eq!(subs.len(), 1);
        assert!(subs[0].is_zero());
    }

    #[test]
    fn enumerate_preconditions() {
        assert!(enumerate_subspaces(4, 2, None).is_err()); // not prime
        assert!(enumerate_subspaces(2, 2, Some(3)).is_err()); // d > n
    }

    #[test]
    fn enumerate_lines_in_gf2_cubed() {
        let subs = enumerate_subspaces(2, 3, Some(1)).unwrap();
        assert_eq!(subs.len(), 7);
    }

    #[test]
    fn counts_match_gaussian_binomials() {
        for &p in &[2u64, 3, 5] {
            for n in 0..=4 {
                let subs = enumerate_subspaces(p, n, None).unwrap();
                assert_eq!(subs.len() as u128, subspace_count(n, p), "n={n} p={p}");
                for d in 0..=n {
                    let of_dim = subs.iter().filter(|s| s.dim() == d).count();
                    assert_eq!(of_dim as u128, gaussian_binomial(n, d, p));
                }
            }
        }
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let subs = enumerate_subspaces(3, 3, None).unwrap();
        for i in 1..subs.len() {
            assert!(subs[i - 1] < subs[i], "order is strict and canonical");
        }
    }

    #[test]
    fn superspace_enumeration() {
        let base = line(2, vec![1, 1, 0]);
        let sup = superspaces_with_dim(&base, 2).unwrap();
        assert_eq!(sup.len() as u128, gaussian_binomial(2, 1, 2));
        for s in &sup {
            assert!(s.contains(&base).unwrap());
            assert_eq!(s.dim(), 2);
        }
    }

    #[test]
    fn kernel_basis_examples() {
        let id = FpMatrix::identity(3, 3).unwrap();
        assert!(kernel_basis(&id).is_zero());
        let zero = FpMatrix::zeros(2, 2, 3).unwrap();
        let k = kernel_basis(&zero);
        assert!(k.is_full());
        assert_eq!(k.dim(), 3);
        let m = FpMatrix::from_rows(2, &[vec![1, 1]]).unwrap();
        assert_eq!(kernel_basis(&m), line(2, vec![1, 1]));
        // rank-nullity
        assert_eq!(m.rank() + kernel_basis(&m).dim(), m.cols());
    }

    #[test]
    fn image_basis_examples() {
        let id = FpMatrix::identity(3, 2).unwrap();
        assert!(image_basis(&id).is_full());
        let zero = FpMatrix::zeros(3, 2, 2).unwrap();
        assert!(image_basis(&zero).is_zero());
        let col = FpMatrix::new(3, 2, 1, vec![1, 2]).unwrap();
        assert_eq!(image_basis(&col), line(3, vec![1, 2]));
        assert_eq!(image_basis(&col).dim(), col.rank());
    }

    #[test]
    fn preimage_and_cokernel() {
        // map GF(2)^2 -> GF(2)^2 given by projection onto the first axis
        let m = FpMatrix::from_rows(2, &[vec![1, 0], vec![0, 0]]).unwrap();
        let target = line(2, vec![1, 0]);
        let pre = target.preimage_under(&m).unwrap();
        assert!(pre.is_full());
        let zero = Subspace::zero(2, 2).unwrap();
        let pre0 = zero.preimage_under(&m).unwrap();
        assert_eq!(pre0, line(2, vec![0, 1]));
    }
}
