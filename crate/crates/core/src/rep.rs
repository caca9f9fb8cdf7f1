//! Finite-dimensional representations of an acyclic quiver over GF(p).
//!
//! A representation assigns GF(p)^{d_v} to each vertex and to each arrow
//! `u -> v` a matrix of shape `d_v x d_u` acting on column vectors. Length
//! means composition length, which equals total dimension here.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use crate::morphism::Morphism;
use crate::quiver::Quiver;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Representation {
    quiver: Arc<Quiver>,
    p: u64,
    dims: Vec<usize>,
    maps: Vec<FpMatrix>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, p: u64, dims: Vec<usize>, maps: Vec<FpMatrix>) -> Result<Self> {
        if !crate::matrix::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if dims.len() != quiver.vertex_count() {
            return Err(Error::Shape(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (i, arrow) in quiver.arrows().iter().enumerate() {
            let m = &maps[i];
            if m.p() != p {
                return Err(Error::Incompatible(format!(
                    "arrow {} has modulus {}, representation has {}",
                    arrow.name,
                    m.p(),
                    p
                )));
            }
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    arrow.name,
                    dims[arrow.target],
                    dims[arrow.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            quiver,
            p,
            dims,
            maps,
        })
    }

    /// Re-checks the construction invariants.
    pub fn validate(&self) -> bool {
        Representation::new(
            self.quiver.clone(),
            self.p,
            self.dims.clone(),
            self.maps.clone(),
        )
        .is_ok()
    }

    pub fn zero_rep(quiver: Arc<Quiver>, p: u64) -> Result<Self> {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| FpMatrix::zeros(p, 0, 0))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(quiver, p, dims, maps)
    }

    /// Simple representation concentrated at `v`.
    pub fn simple_at(quiver: Arc<Quiver>, p: u64, v: usize) -> Result<Self> {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| FpMatrix::zeros(p, dims[a.target], dims[a.source]))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(quiver, p, dims, maps)
    }

    /// Indecomposable projective at `v`: basis the paths starting at `v`,
    /// arrows act by path composition.
    pub fn projective_at(quiver: Arc<Quiver>, p: u64, v: usize) -> Result<Self> {
        let paths = quiver.paths_from(v);
        let n = quiver.vertex_count();
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, path) in paths.iter().enumerate() {
            by_vertex[path.end].push(i);
        }
        let dims: Vec<usize> = by_vertex.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        for (ai, arrow) in quiver.arrows().iter().enumerate() {
            let mut m = FpMatrix::zeros(p, dims[arrow.target], dims[arrow.source])?;
            for (col, &pi) in by_vertex[arrow.source].iter().enumerate() {
                let mut extended = paths[pi].arrows.clone();
                extended.push(ai);
                let row = by_vertex[arrow.target]
                    .iter()
                    .position(|&qi| paths[qi].arrows == extended)
                    .expect("extended path exists");
                m.set(row, col, 1);
            }
            maps.push(m);
        }
        Representation::new(quiver, p, dims, maps)
    }

    /// Indecomposable injective at `v`: dual of the projective over the
    /// opposite quiver, with basis the functionals on paths ending at `v`.
    pub fn injective_at(quiver: Arc<Quiver>, p: u64, v: usize) -> Result<Self> {
        let paths = quiver.paths_into(v);
        let n = quiver.vertex_count();
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, path) in paths.iter().enumerate() {
            by_vertex[path.start].push(i);
        }
        let dims: Vec<usize> = by_vertex.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        for (ai, arrow) in quiver.arrows().iter().enumerate() {
            // functional transport: (alpha . f)(q) = f(q after alpha)
            let mut m = FpMatrix::zeros(p, dims[arrow.target], dims[arrow.source])?;
            for (row, &qi) in by_vertex[arrow.target].iter().enumerate() {
                let mut extended = vec![ai];
                extended.extend(paths[qi].arrows.iter().copied());
                if let Some(col) = by_vertex[arrow.source]
                    .iter()
                    .position(|&pi| paths[pi].arrows == extended)
                {
                    m.set(row, col, 1);
                }
            }
            maps.push(m);
        }
        Representation::new(quiver, p, dims, maps)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn map(&self, arrow: usize) -> &FpMatrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[FpMatrix] {
        &self.maps
    }

    /// Composition length, the total dimension.
    pub fn length(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.length() == 0
    }

    /// True when every arrow acts by zero, i.e. the representation is
    /// semisimple.
    pub fn is_semisimple(&self) -> bool {
        self.maps.iter().all(FpMatrix::is_zero)
    }

    pub(crate) fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(Error::Incompatible("different quivers".into()));
        }
        if self.p != other.p {
            return Err(Error::Incompatible(format!(
                "moduli {} and {}",
                self.p, other.p
            )));
        }
        Ok(())
    }
}

/// A direct sum with its canonical inclusions and projections.
pub struct DirectSum {
    pub rep: Arc<Representation>,
    pub include_left: Morphism,
    pub include_right: Morphism,
    pub project_left: Morphism,
    pub project_right: Morphism,
}

/// Block-diagonal direct sum of two representations over the same quiver.
pub fn direct_sum(m: &Arc<Representation>, n: &Arc<Representation>) -> Result<DirectSum> {
    m.check_compatible(n)?;
    let p = m.p();
    let quiver = m.quiver().clone();
    let dims: Vec<usize> = m
        .dims()
        .iter()
        .zip(n.dims())
        .map(|(&a, &b)| a + b)
        .collect();
    let mut maps = Vec::with_capacity(quiver.arrows().len());
    for (i, arrow) in quiver.arrows().iter().enumerate() {
        let mut block = FpMatrix::zeros(p, dims[arrow.target], dims[arrow.source])?;
        let (a, b) = (m.map(i), n.map(i));
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                block.set(r, c, a.at(r, c));
            }
        }
        let (ro, co) = (a.rows(), a.cols());
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                block.set(ro + r, co + c, b.at(r, c));
            }
        }
        maps.push(block);
    }
    let sum = Arc::new(Representation::new(quiver.clone(), p, dims, maps)?);

    let mut inc_l = Vec::new();
    let mut inc_r = Vec::new();
    let mut prj_l = Vec::new();
    let mut prj_r = Vec::new();
    for v in 0..quiver.vertex_count() {
        let (dm, dn) = (m.dim_at(v), n.dim_at(v));
        let mut il = FpMatrix::zeros(p, dm + dn, dm)?;
        let mut ir = FpMatrix::zeros(p, dm + dn, dn)?;
        let mut pl = FpMatrix::zeros(p, dm, dm + dn)?;
        let mut pr = FpMatrix::zeros(p, dn, dm + dn)?;
        for i in 0..dm {
            il.set(i, i, 1);
            pl.set(i, i, 1);
        }
        for i in 0..dn {
            ir.set(dm + i, i, 1);
            pr.set(i, dm + i, 1);
        }
        inc_l.push(il);
        inc_r.push(ir);
        prj_l.push(pl);
        prj_r.push(pr);
    }
    Ok(DirectSum {
        include_left: Morphism::new(m.clone(), sum.clone(), inc_l)?,
        include_right: Morphism::new(n.clone(), sum.clone(), inc_r)?,
        project_left: Morphism::new(sum.clone(), m.clone(), prj_l)?,
        project_right: Morphism::new(sum.clone(), n.clone(), prj_r)?,
        rep: sum,
    })
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
    fn simple_reps() {
        let q = kronecker();
        let s = Representation::simple_at(q, 2, 0).unwrap();
        assert_eq!(s.length(), 1);
        assert!(s.validate());
    }

    #[test]
    fn kronecker_projectives() {
        let q = kronecker();
        let a = q.vertex_index("a").unwrap();
        let b = q.vertex_index("b").unwrap();
        let pb = Representation::projective_at(q.clone(), 2, b).unwrap();
        assert_eq!(pb.length(), 1); // sink projective is simple
        let pa = Representation::projective_at(q.clone(), 2, a).unwrap();
        assert_eq!(pa.length(), 3);
        assert_eq!(pa.dims(), &[1, 2]);
    }

    #[test]
    fn kronecker_injective_at_sink() {
        let q = kronecker();
        let b = q.vertex_index("b").unwrap();
        let ib = Representation::injective_at(q.clone(), 2, b).unwrap();
        assert_eq!(ib.length(), 3);
        assert_eq!(ib.dims(), &[2, 1]);
        assert!(ib.validate());
    }

    #[test]
    fn four_subspace_injective_at_sink() {
        let q = Arc::new(crate::families::subspace_quiver(4).unwrap());
        let sink = q.vertex_index("c").unwrap();
        let i = Representation::injective_at(q, 2, sink).unwrap();
        assert_eq!(i.length(), 5);
    }

    #[test]
    fn direct_sum_of_simples() {
        let q = kronecker();
        let sa = Arc::new(Representation::simple_at(q.clone(), 2, 0).unwrap());
        let sb = Arc::new(Representation::simple_at(q.clone(), 2, 1).unwrap());
        let ds = direct_sum(&sa, &sb).unwrap();
        assert_eq!(ds.rep.dims(), &[1, 1]);
        assert!(ds.rep.is_semisimple());
        assert_eq!(ds.rep.length(), 2);
        assert!(ds.include_left.is_mono());
        assert!(ds.project_right.is_epi());
    }

    #[test]
    fn direct_sum_with_zero() {
        let q = kronecker();
        let s = Arc::new(Representation::simple_at(q.clone(), 2, 0).unwrap());
        let z = Arc::new(Representation::zero_rep(q, 2).unwrap());
        let ds = direct_sum(&s, &z).unwrap();
        assert_eq!(ds.rep.as_ref(), s.as_ref());
    }
}
