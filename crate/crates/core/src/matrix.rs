//! Dense matrices over a prime field GF(p).
//!
//! Entries are residues in `[0, p)` stored row-major. The modulus must be a
//! machine-word prime; primality is checked at construction. Matrices act on
//! column vectors, so a map `V -> W` has shape `dim W x dim V`.

use std::fmt;

use crate::error::{Error, Result};

/// Bitmask of primes below 64, the fast path for the primality check.
const SMALL_PRIME_MASK: u64 = {
    let mut mask = 0u64;
    let mut n = 2u64;
    while n < 64 {
        let mut is_p = true;
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                is_p = false;
                break;
            }
            d += 1;
        }
        if is_p {
            mask |= 1 << n;
        }
        n += 1;
    }
    mask
};

pub fn is_prime(n: u64) -> bool {
    if n < 64 {
        return SMALL_PRIME_MASK >> n & 1 == 1;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[inline]
pub(crate) fn fp_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn fp_sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

#[inline]
pub(crate) fn fp_neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// Inverse of a nonzero residue, via Fermat.
pub(crate) fn fp_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    fp_pow(a, p - 2, p)
}

pub(crate) fn fp_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = fp_mul(acc, base, p);
        }
        base = fp_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Dense matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Result of reduced row echelon computation.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl FpMatrix {
    /// Builds a matrix, reducing the given entries modulo `p`.
    pub fn new(p: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| e % p).collect();
        Ok(FpMatrix {
            p,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        FpMatrix::new(p, rows.len(), cols, rows.concat())
    }

    pub fn zeros(p: u64, rows: usize, cols: usize) -> Result<Self> {
        FpMatrix::new(p, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(p: u64, n: usize) -> Result<Self> {
        let mut m = FpMatrix::zeros(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.at(i, j) == u64::from(i == j)))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same_shape(&self, other: &FpMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::Incompatible(format!(
                "moduli {} and {}",
                self.p, other.p
            )));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| fp_add(a, b, self.p))
            .collect();
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| fp_sub(a, b, self.p))
            .collect();
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: u64) -> FpMatrix {
        let c = c % self.p;
        let entries = self.entries.iter().map(|&a| fp_mul(a, c, self.p)).collect();
        FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p {
            return Err(Error::Incompatible(format!(
                "moduli {} and {}",
                self.p, other.p
            )));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p as u128;
        let mut entries = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                let a = a as u128;
                for j in 0..other.cols {
                    let cur = entries[i * other.cols + j] as u128;
                    entries[i * other.cols + j] = ((cur + a * other.at(k, j) as u128) % p) as u64;
                }
            }
        }
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut entries = vec![0u64; self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[j * self.rows + i] = self.at(i, j);
            }
        }
        FpMatrix {
            p: self.p,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p || self.cols != other.cols {
            return Err(Error::Shape("vstack with mismatched columns".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p || self.rows != other.rows {
            return Err(Error::Shape("hstack with mismatched rows".into()));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows,
            cols,
            entries,
        })
    }

    /// Reduced row echelon form with pivot columns, leaving `self` intact.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = m.p;
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // find a pivot at or below `row`
            let Some(pr) = (row..m.rows).find(|&r| m.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for j in 0..m.cols {
                    let a = m.at(row, j);
                    let b = m.at(pr, j);
                    m.set(row, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = fp_inv(m.at(row, col), p);
            if inv != 1 {
                for j in col..m.cols {
                    let v = fp_mul(m.at(row, j), inv, p);
                    m.set(row, j, v);
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.at(r, col);
                if factor == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let v = fp_sub(m.at(r, j), fp_mul(factor, m.at(row, j), p), p);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{v : A v = 0}`, one vector per row,
    /// one row per free column in ascending order. Not normalized; callers
    /// wanting a canonical form reduce the result again.
    pub fn kernel_matrix(&self) -> FpMatrix {
        let Rref { matrix, pivots, .. } = self.rref();
        let p = self.p;
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = fp_neg(matrix.at(i, f), p);
            }
            rows.push(v);
        }
        FpMatrix::from_rows(p, &rows).expect("kernel rows are rectangular")
    }

    /// Solves `self * x = rhs` for one solution, or `None` if inconsistent.
    pub fn solve(&self, rhs: &FpMatrix) -> Result<Option<FpMatrix>> {
        if self.p != rhs.p {
            return Err(Error::Incompatible("moduli differ".into()));
        }
        if self.rows != rhs.rows {
            return Err(Error::Shape("solve with mismatched row counts".into()));
        }
        let aug = self.hstack(rhs)?;
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = FpMatrix::zeros(self.p, self.cols, rhs.cols)?;
        for (i, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(c, j, matrix.at(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let id = FpMatrix::identity(self.p, self.rows).expect("p already validated");
        match self.solve(&id) {
            Ok(Some(inv)) => {
                // solve() returns a solution only when ranks allow; for a
                // square system a solution of A x = I is a two-sided inverse
                if self.rank() == self.rows {
                    Some(inv)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn has_full_column_rank(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn has_full_row_rank(&self) -> bool {
        self.rank() == self.rows
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix({}x{} mod {})", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(61));
        assert!(is_prime(4294967291));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91));
    }

    #[test]
    fn rejects_non_prime_modulus() {
        assert_eq!(FpMatrix::zeros(6, 1, 1).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = FpMatrix::identity(3, 2).unwrap();
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = FpMatrix::zeros(2, 2, 3).unwrap();
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_dependent_rows_mod_5() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.row(0), &[1, 2]);
        assert_eq!(r.matrix.row(1), &[0, 0]);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id = FpMatrix::identity(5, 3).unwrap();
        assert_eq!(id.kernel_matrix().rows(), 0);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let z = FpMatrix::zeros(2, 2, 3).unwrap();
        let k = z.kernel_matrix();
        assert_eq!(k.rows(), 3);
    }

    #[test]
    fn kernel_hand_example_gf2() {
        let m = FpMatrix::from_rows(2, &[vec![1, 1]]).unwrap();
        let k = m.kernel_matrix();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[1, 1]);
    }

    #[test]
    fn solve_and_inverse() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());

        let singular = FpMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn mul_shapes_checked() {
        let a = FpMatrix::zeros(3, 2, 3).unwrap();
        let b = FpMatrix::zeros(3, 2, 3).unwrap();
        assert!(a.mul(&b).is_err());
        assert!(a.mul(&a.transpose()).is_ok());
    }
}
