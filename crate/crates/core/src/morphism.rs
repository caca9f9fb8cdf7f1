//! Morphisms of representations and homomorphism spaces.
//!
//! A morphism is a block per vertex satisfying every commuting square
//! exactly; `Morphism::new` rejects anything else. `hom_basis` solves the
//! commuting-square conditions as one linear system over GF(p).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{fp_add, fp_mul, fp_neg, FpMatrix};
use crate::rep::Representation;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    source: Arc<Representation>,
    target: Arc<Representation>,
    blocks: Vec<FpMatrix>,
}

impl Morphism {
    pub fn new(
        source: Arc<Representation>,
        target: Arc<Representation>,
        blocks: Vec<FpMatrix>,
    ) -> Result<Self> {
        source.check_compatible(&target)?;
        let quiver = source.quiver();
        if blocks.len() != quiver.vertex_count() {
            return Err(Error::Shape(format!(
                "{} blocks for {} vertices",
                blocks.len(),
                quiver.vertex_count()
            )));
        }
        for (v, block) in blocks.iter().enumerate() {
            if block.rows() != target.dim_at(v) || block.cols() != source.dim_at(v) {
                return Err(Error::Shape(format!(
                    "block at vertex {} needs shape {}x{}, got {}x{}",
                    quiver.vertex_label(v),
                    target.dim_at(v),
                    source.dim_at(v),
                    block.rows(),
                    block.cols()
                )));
            }
        }
        for (i, arrow) in quiver.arrows().iter().enumerate() {
            let lhs = blocks[arrow.target].mul(source.map(i))?;
            let rhs = target.map(i).mul(&blocks[arrow.source])?;
            if lhs != rhs {
                return Err(Error::Shape(format!(
                    "square at arrow {} does not commute",
                    arrow.name
                )));
            }
        }
        Ok(Morphism {
            source,
            target,
            blocks,
        })
    }

    pub fn identity(m: &Arc<Representation>) -> Result<Self> {
        let blocks = m
            .dims()
            .iter()
            .map(|&d| FpMatrix::identity(m.p(), d))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(m.clone(), m.clone(), blocks)
    }

    pub fn zero(m: &Arc<Representation>, n: &Arc<Representation>) -> Result<Self> {
        m.check_compatible(n)?;
        let blocks = (0..m.quiver().vertex_count())
            .map(|v| FpMatrix::zeros(m.p(), n.dim_at(v), m.dim_at(v)))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(m.clone(), n.clone(), blocks)
    }

    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn block(&self, v: usize) -> &FpMatrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    /// Composition `self . other`, applying `other` first.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if other.target != self.source {
            return Err(Error::Incompatible(
                "composition with mismatched middle object".into(),
            ));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(f, g)| f.mul(g))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(other.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Incompatible("adding maps of different type".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(f, g)| f.add(g))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: u64) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(FpMatrix::is_zero)
    }

    /// Monomorphism test: every block has full column rank.
    pub fn is_mono(&self) -> bool {
        self.blocks.iter().all(FpMatrix::has_full_column_rank)
    }

    /// Epimorphism test: every block has full row rank.
    pub fn is_epi(&self) -> bool {
        self.blocks.iter().all(FpMatrix::has_full_row_rank)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// Flattens the blocks into one coefficient vector, vertex by vertex,
    /// row-major within each block.
    pub fn to_flat_vector(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for b in &self.blocks {
            out.extend_from_slice(b.entries());
        }
        out
    }

    /// Rebuilds a morphism from a flat coefficient vector. The caller must
    /// guarantee the vector solves the commuting squares.
    pub fn from_flat_vector(
        source: &Arc<Representation>,
        target: &Arc<Representation>,
        flat: &[u64],
    ) -> Result<Morphism> {
        let mut blocks = Vec::with_capacity(source.quiver().vertex_count());
        let mut offset = 0;
        for v in 0..source.quiver().vertex_count() {
            let rows = target.dim_at(v);
            let cols = source.dim_at(v);
            let entries = flat[offset..offset + rows * cols].to_vec();
            offset += rows * cols;
            blocks.push(FpMatrix::new(source.p(), rows, cols, entries)?);
        }
        Morphism::new(source.clone(), target.clone(), blocks)
    }
}

/// A basis of Hom(M, N) as the kernel of the commuting-square system.
///
/// Unknowns are the block entries of a would-be morphism; each arrow
/// `u -> v` contributes the equations `f_v . M_alpha - N_alpha . f_u = 0`.
pub fn hom_basis(m: &Arc<Representation>, n: &Arc<Representation>) -> Result<Vec<Morphism>> {
    m.check_compatible(n)?;
    let p = m.p();
    let quiver = m.quiver();
    let nv = quiver.vertex_count();
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dim_at(v) * m.dim_at(v);
    }
    let unknowns = offsets[nv];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (ai, arrow) in quiver.arrows().iter().enumerate() {
        let (u, v) = (arrow.source, arrow.target);
        let ma = m.map(ai);
        let na = n.map(ai);
        // equation (r, c) for r < dim_n(v), c < dim_m(u)
        for r in 0..n.dim_at(v) {
            for c in 0..m.dim_at(u) {
                let mut eq = vec![0u64; unknowns];
                // (f_v . M_a)[r][c] = sum_k f_v[r][k] M_a[k][c]
                for k in 0..m.dim_at(v) {
                    let coeff = ma.at(k, c);
                    if coeff != 0 {
                        let idx = offsets[v] + r * m.dim_at(v) + k;
                        eq[idx] = fp_add(eq[idx], coeff, p);
                    }
                }
                // -(N_a . f_u)[r][c] = -sum_k N_a[r][k] f_u[k][c]
                for k in 0..n.dim_at(u) {
                    let coeff = na.at(r, k);
                    if coeff != 0 {
                        let idx = offsets[u] + k * m.dim_at(u) + c;
                        eq[idx] = fp_add(eq[idx], fp_neg(coeff, p), p);
                    }
                }
                if eq.iter().any(|&e| e != 0) {
                    rows.push(eq);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        FpMatrix::identity(p, unknowns)?
    } else {
        FpMatrix::from_rows(p, &rows)?.kernel_matrix()
    };
    let mut basis = Vec::with_capacity(kernel.rows());
    for i in 0..kernel.rows() {
        basis.push(Morphism::from_flat_vector(m, n, kernel.row(i))?);
    }
    Ok(basis)
}

pub fn hom_dim(m: &Arc<Representation>, n: &Arc<Representation>) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// Builds the linear combination `sum coeffs[i] basis[i]` directly on flat
/// vectors; cheaper than repeated Morphism::add inside hot enumeration
/// loops.
pub(crate) fn combine_flat(basis_flat: &[Vec<u64>], coeffs: &[u64], p: u64) -> Vec<u64> {
    let len = basis_flat.first().map_or(0, Vec::len);
    let mut out = vec![0u64; len];
    for (vec, &c) in basis_flat.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &e) in out.iter_mut().zip(vec) {
            *o = fp_add(*o, fp_mul(c, e, p), p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::kronecker_quiver;
    use crate::quiver::Quiver;

    fn kronecker() -> Arc<Quiver> {
        Arc::new(kronecker_quiver(2).unwrap())
    }

    #[test]
    fn identity_is_mono_and_epi() {
        let q = kronecker();
        let pa = Arc::new(Representation::projective_at(q, 2, 0).unwrap());
        let id = Morphism::identity(&pa).unwrap();
        assert!(id.is_mono());
        assert!(id.is_epi());
        assert!(id.is_isomorphism());
    }

    #[test]
    fn zero_map_is_neither() {
        let q = kronecker();
        let pa = Arc::new(Representation::projective_at(q, 2, 0).unwrap());
        let z = Morphism::zero(&pa, &pa).unwrap();
        assert!(!z.is_mono());
        assert!(!z.is_epi());
    }

    #[test]
    fn hom_between_disjoint_simples_vanishes() {
        let q = kronecker();
        let sa = Arc::new(Representation::simple_at(q.clone(), 2, 0).unwrap());
        let sb = Arc::new(Representation::simple_at(q.clone(), 2, 1).unwrap());
        assert_eq!(hom_dim(&sa, &sb).unwrap(), 0);
        // but Hom(S_a, S_a) contains the identity
        assert_eq!(hom_dim(&sa, &sa).unwrap(), 1);
    }

    #[test]
    fn hom_from_projective_counts_the_target_fiber() {
        let q = kronecker();
        let pa = Arc::new(Representation::projective_at(q.clone(), 2, 0).unwrap());
        let sb = Arc::new(Representation::simple_at(q.clone(), 2, 1).unwrap());
        // Hom(P(a), S_b) = (S_b)_a = 0, Hom(P(b), S_b) = 1
        assert_eq!(hom_dim(&pa, &sb).unwrap(), 0);
        let pb = Arc::new(Representation::projective_at(q, 2, 1).unwrap());
        assert_eq!(hom_dim(&pb, &sb).unwrap(), 1);
    }

    #[test]
    fn line_inclusion_is_mono_not_epi() {
        let q = kronecker();
        let sb = Arc::new(Representation::simple_at(q.clone(), 2, 1).unwrap());
        let pa = Arc::new(Representation::projective_at(q, 2, 0).unwrap());
        let blocks = vec![
            FpMatrix::zeros(2, 1, 0).unwrap(),
            FpMatrix::from_rows(2, &[vec![1], vec![0]]).unwrap(),
        ];
        let inc = Morphism::new(sb, pa, blocks).unwrap();
        assert!(inc.is_mono());
        assert!(!inc.is_epi());
    }

    #[test]
    fn commuting_square_enforced() {
        let q = kronecker();
        let pa = Arc::new(Representation::projective_at(q.clone(), 2, 0).unwrap());
        let sa = Arc::new(Representation::simple_at(q, 2, 0).unwrap());
        // no nonzero map S_a -> P(a): the top generator must land in the
        // kernel of both arrows, which is zero
        let blocks = vec![
            FpMatrix::identity(2, 1).unwrap(),
            FpMatrix::zeros(2, 2, 0).unwrap(),
        ];
        assert!(Morphism::new(sa.clone(), pa.clone(), blocks).is_err());
        assert_eq!(hom_dim(&sa, &pa).unwrap(), 0);
    }
}
