//! Endomorphism algebras, indecomposability, bricks, and isomorphism
//! testing.
//!
//! All verdicts are exact. Searches over End(M) or Hom(M,N) are exhaustive
//! below the configured caps and raise an explicit error above them; the
//! only randomized component is the isomorphism fast path, which is seeded
//! and always backed by an exhaustive or error outcome.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use crate::morphism::{combine_flat, hom_basis, Morphism};
use crate::rep::Representation;

/// End(M) with a distinguished basis (identity first) and its structure
/// constants.
pub struct EndAlgebra {
    pub basis: Vec<Morphism>,
    /// `mult_table[i][j]` holds the coordinates of `basis[i] . basis[j]`.
    pub mult_table: Vec<Vec<Vec<u64>>>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.dim();
        (0..k).all(|i| (0..k).all(|j| self.mult_table[i][j] == self.mult_table[j][i]))
    }
}

/// Basis of End(M) with the identity as first element.
pub fn end_basis(m: &Arc<Representation>) -> Result<Vec<Morphism>> {
    if m.is_zero() {
        return Err(Error::Precondition("End of the zero module".into()));
    }
    let raw = hom_basis(m, m)?;
    let id = Morphism::identity(m)?;
    let p = m.p();
    // re-span with the identity first: greedily keep raw vectors that
    // extend the span
    let id_flat = id.to_flat_vector();
    let mut rows = vec![id_flat];
    for f in &raw {
        rows.push(f.to_flat_vector());
        let mat = FpMatrix::from_rows(p, &rows)?;
        if mat.rank() < rows.len() {
            rows.pop();
        }
    }
    debug_assert_eq!(rows.len(), raw.len());
    rows.iter()
        .map(|flat| Morphism::from_flat_vector(m, m, flat))
        .collect()
}

/// End(M) as an algebra: basis plus multiplication table.
pub fn end_algebra(m: &Arc<Representation>) -> Result<EndAlgebra> {
    let basis = end_basis(m)?;
    let p = m.p();
    let k = basis.len();
    // coordinates with respect to the basis: solve B^t x = v
    let flat: Vec<Vec<u64>> = basis.iter().map(Morphism::to_flat_vector).collect();
    let bt = FpMatrix::from_rows(p, &flat)?.transpose();
    let coords_of = |v: &[u64]| -> Result<Vec<u64>> {
        let rhs = FpMatrix::new(p, v.len(), 1, v.to_vec())?;
        let x = bt
            .solve(&rhs)?
            .expect("product of endomorphisms stays in End");
        Ok((0..k).map(|i| x.at(i, 0)).collect())
    };
    let mut table = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let prod = basis[i].compose(&basis[j])?;
            row.push(coords_of(&prod.to_flat_vector())?);
        }
        table.push(row);
    }
    Ok(EndAlgebra {
        basis,
        mult_table: table,
    })
}

/// Iterates all coefficient vectors in GF(p)^k, invoking `f` on each until
/// it returns `Some`.
pub(crate) fn search_combinations<T>(
    p: u64,
    k: usize,
    mut f: impl FnMut(&[u64]) -> Option<T>,
) -> Option<T> {
    let mut coeffs = vec![0u64; k];
    loop {
        if let Some(t) = f(&coeffs) {
            return Some(t);
        }
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

pub(crate) fn pow_checked(p: u64, k: usize) -> u128 {
    let mut out: u128 = 1;
    for _ in 0..k {
        out = out.saturating_mul(p as u128);
    }
    out
}

/// Splits a flat endomorphism vector back into per-vertex square blocks.
fn flat_blocks(m: &Representation, flat: &[u64]) -> Vec<FpMatrix> {
    let p = m.p();
    let mut blocks = Vec::with_capacity(m.dims().len());
    let mut offset = 0;
    for &d in m.dims() {
        let entries = flat[offset..offset + d * d].to_vec();
        offset += d * d;
        blocks.push(FpMatrix::new(p, d, d, entries).expect("valid entries"));
    }
    blocks
}

fn blocks_mul(a: &[FpMatrix], b: &[FpMatrix]) -> Vec<FpMatrix> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.mul(y).expect("square blocks"))
        .collect()
}

fn blocks_eq(a: &[FpMatrix], b: &[FpMatrix]) -> bool {
    a == b
}

fn blocks_invertible(blocks: &[FpMatrix]) -> bool {
    blocks.iter().all(|b| b.rank() == b.rows())
}

/// Indecomposability via idempotent search in End(M).
///
/// Exception to brute force: a semisimple representation (all arrow maps
/// zero) of length >= 2 is decomposable outright, which keeps huge
/// semisimple End algebras out of the enumeration.
pub fn is_indecomposable(m: &Arc<Representation>, caps: &Caps) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::Precondition(
            "indecomposability of the zero module".into(),
        ));
    }
    if m.length() == 1 {
        return Ok(true);
    }
    if m.is_semisimple() {
        return Ok(false);
    }
    let basis = end_basis(m)?;
    let k = basis.len();
    if k == 1 {
        return Ok(true);
    }
    let space = pow_checked(m.p(), k);
    if space > caps.end_enum_cap as u128 {
        return Err(Error::CapExceeded {
            what: "End enumeration for idempotent search",
            needed: space,
            cap: caps.end_enum_cap,
        });
    }
    let flat: Vec<Vec<u64>> = basis.iter().map(Morphism::to_flat_vector).collect();
    let id_flat = flat[0].clone();
    let p = m.p();
    let nontrivial_idempotent = search_combinations(p, k, |coeffs| {
        let v = combine_flat(&flat, coeffs, p);
        if v.iter().all(|&e| e == 0) || v == id_flat {
            return None;
        }
        let blocks = flat_blocks(m, &v);
        let sq = blocks_mul(&blocks, &blocks);
        if blocks_eq(&sq, &blocks) {
            Some(())
        } else {
            None
        }
    });
    Ok(nontrivial_idempotent.is_none())
}

/// Brick test: every nonzero endomorphism is invertible.
pub fn is_brick(m: &Arc<Representation>, caps: &Caps) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::Precondition("brick test on the zero module".into()));
    }
    let basis = end_basis(m)?;
    let k = basis.len();
    if k == 1 {
        return Ok(true);
    }
    let space = pow_checked(m.p(), k);
    if space > caps.end_enum_cap as u128 {
        return Err(Error::CapExceeded {
            what: "End enumeration for brick test",
            needed: space,
            cap: caps.end_enum_cap,
        });
    }
    let flat: Vec<Vec<u64>> = basis.iter().map(Morphism::to_flat_vector).collect();
    let p = m.p();
    let singular = search_combinations(p, k, |coeffs| {
        let v = combine_flat(&flat, coeffs, p);
        if v.iter().all(|&e| e == 0) {
            return None;
        }
        let blocks = flat_blocks(m, &v);
        if blocks_invertible(&blocks) {
            None
        } else {
            Some(())
        }
    });
    Ok(singular.is_none())
}

/// Cheap isomorphism invariants: per-vertex top and socle dimensions.
///
/// For a path algebra of an acyclic quiver these equal dim Hom(M, S_v) and
/// dim Hom(S_v, M) respectively.
pub fn top_socle_dims(m: &Representation) -> (Vec<usize>, Vec<usize>) {
    let quiver = m.quiver();
    let mut top = Vec::with_capacity(quiver.vertex_count());
    let mut soc = Vec::with_capacity(quiver.vertex_count());
    for v in 0..quiver.vertex_count() {
        let d = m.dim_at(v);
        // top: quotient by the sum of incoming images
        let mut incoming: Option<FpMatrix> = None;
        for (ai, _) in quiver.arrows_into(v) {
            let t = m.map(ai).transpose();
            incoming = Some(match incoming {
                None => t,
                Some(acc) => acc.vstack(&t).expect("same ambient"),
            });
        }
        let rad_dim = incoming.map_or(0, |mat| mat.rank());
        top.push(d - rad_dim);
        // socle: joint kernel of the outgoing maps
        let mut outgoing: Option<FpMatrix> = None;
        for (ai, _) in quiver.arrows_from(v) {
            let map = m.map(ai).clone();
            outgoing = Some(match outgoing {
                None => map,
                Some(acc) => acc.vstack(&map).expect("same source"),
            });
        }
        let soc_dim = match outgoing {
            None => d,
            Some(mat) => d - mat.rank(),
        };
        soc.push(soc_dim);
    }
    (top, soc)
}

/// Isomorphism test returning a witness.
///
/// Strategy: dimension vectors, then cheap invariants, then a search of
/// Hom(M, N) for an invertible element. The search is exhaustive when
/// `p^dim Hom` fits under the cap; otherwise seeded random trials run
/// first and a failure to decide is reported as an explicit error.
pub fn is_iso(
    m: &Arc<Representation>,
    n: &Arc<Representation>,
    caps: &Caps,
) -> Result<Option<Morphism>> {
    m.check_compatible(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Morphism::zero(m, n)?));
    }
    if top_socle_dims(m) != top_socle_dims(n) {
        return Ok(None);
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let k = basis.len();
    let p = m.p();
    let flat: Vec<Vec<u64>> = basis.iter().map(Morphism::to_flat_vector).collect();
    let build = |coeffs: &[u64]| -> Option<Vec<u64>> {
        let v = combine_flat(&flat, coeffs, p);
        let blocks = flat_blocks_rect(m, n, &v);
        if blocks.iter().all(|b| b.rank() == b.rows() && b.is_square()) {
            Some(v)
        } else {
            None
        }
    };
    let space = pow_checked(p, k);
    if space <= caps.hom_enum_cap as u128 {
        let found = search_combinations(p, k, |coeffs| build(coeffs));
        return match found {
            Some(v) => Ok(Some(Morphism::from_flat_vector(m, n, &v)?)),
            None => Ok(None),
        };
    }
    // randomized trials; isomorphisms are dense in Hom(M, N) when one
    // exists, so absence after many trials still proves nothing
    let mut rng = ChaCha8Rng::seed_from_u64(caps.iso_seed);
    for _ in 0..caps.iso_trials {
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if let Some(v) = build(&coeffs) {
            return Ok(Some(Morphism::from_flat_vector(m, n, &v)?));
        }
    }
    Err(Error::Undecided(format!(
        "isomorphism search over {space} homomorphisms exceeds the cap and {} random trials failed",
        caps.iso_trials
    )))
}

pub(crate) fn flat_blocks_rect(
    m: &Representation,
    n: &Representation,
    flat: &[u64],
) -> Vec<FpMatrix> {
    let p = m.p();
    let mut blocks = Vec::with_capacity(m.dims().len());
    let mut offset = 0;
    for v in 0..m.dims().len() {
        let rows = n.dim_at(v);
        let cols = m.dim_at(v);
        let entries = flat[offset..offset + rows * cols].to_vec();
        offset += rows * cols;
        blocks.push(FpMatrix::new(p, rows, cols, entries).expect("valid entries"));
    }
    blocks
}
