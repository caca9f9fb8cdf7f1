//! A registry of pairwise non-isomorphic indecomposables with cached
//! invariants, the memoization backbone of the measure recursion.
//!
//! Class lookup goes through cheap invariants (dimension vector, top and
//! socle dimensions, dim End) before paying for an isomorphism search.
//! Exhaustive registration classifies every matrix tuple per dimension
//! vector; family registration installs a supplied inventory and verifies
//! it is honest.

use std::sync::Arc;

use crate::caps::Caps;
use crate::endo::{end_basis, is_indecomposable, is_iso, top_socle_dims};
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use crate::measure::GRMeasure;
use crate::quiver::Quiver;
use crate::rep::Representation;

#[derive(Clone)]
pub struct RegEntry {
    pub rep: Arc<Representation>,
    pub dim_vec: Vec<usize>,
    pub length: usize,
    pub top_dims: Vec<usize>,
    pub soc_dims: Vec<usize>,
    pub dim_end: usize,
    pub measure: Option<GRMeasure>,
}

#[derive(Clone)]
pub struct IndecRegistry {
    quiver: Arc<Quiver>,
    p: u64,
    caps: Caps,
    entries: Vec<RegEntry>,
    /// When set, every indecomposable of length up to this bound has a
    /// representative registered.
    complete_up_to: Option<usize>,
}

impl IndecRegistry {
    pub fn new(quiver: Arc<Quiver>, p: u64, caps: Caps) -> Result<Self> {
        if !crate::matrix::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(IndecRegistry {
            quiver,
            p,
            caps,
            entries: Vec::new(),
            complete_up_to: None,
        })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn entries(&self) -> &[RegEntry] {
        &self.entries
    }

    pub fn entry(&self, idx: usize) -> &RegEntry {
        &self.entries[idx]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn complete_up_to(&self) -> Option<usize> {
        self.complete_up_to
    }

    pub fn set_complete_up_to(&mut self, bound: usize) {
        self.complete_up_to = Some(bound);
    }

    pub fn measure(&self, idx: usize) -> Option<&GRMeasure> {
        self.entries[idx].measure.as_ref()
    }

    pub fn set_measure(&mut self, idx: usize, m: GRMeasure) {
        self.entries[idx].measure = Some(m);
    }

    /// Finds the iso class of `rep` among the registered entries.
    pub fn find_class(&self, rep: &Arc<Representation>) -> Result<Option<usize>> {
        rep.check_compatible_registry(&self.quiver, self.p)?;
        let (top, soc) = top_socle_dims(rep);
        let mut dim_end: Option<usize> = None;
        for (i, e) in self.entries.iter().enumerate() {
            if e.dim_vec != rep.dims() || e.top_dims != top || e.soc_dims != soc {
                continue;
            }
            let de = match dim_end {
                Some(d) => d,
                None => {
                    let d = end_basis(rep)?.len();
                    dim_end = Some(d);
                    d
                }
            };
            if e.dim_end != de {
                continue;
            }
            if is_iso(rep, &e.rep, &self.caps)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Inserts a representation assumed indecomposable and not yet present.
    pub fn insert(&mut self, rep: Arc<Representation>) -> Result<usize> {
        rep.check_compatible_registry(&self.quiver, self.p)?;
        let (top_dims, soc_dims) = top_socle_dims(&rep);
        let dim_end = end_basis(&rep)?.len();
        self.entries.push(RegEntry {
            dim_vec: rep.dims().to_vec(),
            length: rep.length(),
            top_dims,
            soc_dims,
            dim_end,
            measure: None,
            rep,
        });
        Ok(self.entries.len() - 1)
    }

    /// Class index of `rep`, inserting it when new. The boolean reports
    /// whether an insertion happened.
    pub fn find_or_insert(&mut self, rep: Arc<Representation>) -> Result<(usize, bool)> {
        if let Some(i) = self.find_class(&rep)? {
            return Ok((i, false));
        }
        Ok((self.insert(rep)?, true))
    }
}

impl Representation {
    fn check_compatible_registry(&self, quiver: &Arc<Quiver>, p: u64) -> Result<()> {
        if self.quiver() != quiver {
            return Err(Error::Incompatible("registry is for another quiver".into()));
        }
        if self.p() != p {
            return Err(Error::Incompatible(format!(
                "registry modulus {} vs representation modulus {}",
                p,
                self.p()
            )));
        }
        Ok(())
    }
}

/// Registration mode: classify everything by brute force, or install a
/// supplied complete inventory.
pub enum RegisterMode {
    Exhaustive,
    Family(Vec<Representation>),
}

/// Builds a registry of all indecomposables of length at most `max_length`.
///
/// Exhaustive mode enumerates every matrix tuple per dimension vector and
/// filters indecomposables, deduplicating by isomorphism. Family mode
/// verifies the supplied representatives are indecomposable, pairwise
/// non-isomorphic, and within the bound.
pub fn register_indecomposables(
    quiver: &Arc<Quiver>,
    p: u64,
    max_length: usize,
    mode: RegisterMode,
    caps: &Caps,
) -> Result<IndecRegistry> {
    let mut reg = IndecRegistry::new(quiver.clone(), p, *caps)?;
    match mode {
        RegisterMode::Exhaustive => {
            register_exhaustive(&mut reg, max_length)?;
        }
        RegisterMode::Family(inventory) => {
            for rep in inventory {
                let rep = Arc::new(rep);
                if rep.length() > max_length {
                    return Err(Error::Precondition(format!(
                        "inventory member of length {} exceeds bound {max_length}",
                        rep.length()
                    )));
                }
                if !is_indecomposable(&rep, caps)? {
                    return Err(Error::Precondition(
                        "inventory member is decomposable".into(),
                    ));
                }
                let (_, inserted) = reg.find_or_insert(rep)?;
                if !inserted {
                    return Err(Error::Precondition(
                        "inventory members must be pairwise non-isomorphic".into(),
                    ));
                }
            }
        }
    }
    reg.set_complete_up_to(max_length);
    Ok(reg)
}

fn register_exhaustive(reg: &mut IndecRegistry, max_length: usize) -> Result<()> {
    let quiver = reg.quiver().clone();
    let caps = *reg.caps();
    let nv = quiver.vertex_count();
    let mut dims = vec![0usize; nv];
    // iterate all dimension vectors with total in [1, max_length]
    loop {
        let total: usize = dims.iter().sum();
        if (1..=max_length).contains(&total) {
            register_dim_vector(reg, &dims, &caps)?;
        }
        // odometer with per-coordinate bound max_length
        let mut i = 0;
        loop {
            if i == nv {
                return Ok(());
            }
            dims[i] += 1;
            if dims[i] <= max_length && dims.iter().sum::<usize>() <= max_length {
                break;
            }
            dims[i] = 0;
            i += 1;
        }
    }
}

fn register_dim_vector(reg: &mut IndecRegistry, dims: &[usize], caps: &Caps) -> Result<()> {
    let quiver = reg.quiver().clone();
    let p = reg.p();
    let entry_count: usize = quiver
        .arrows()
        .iter()
        .map(|a| dims[a.target] * dims[a.source])
        .sum();
    let tuples: u128 = {
        let mut t: u128 = 1;
        for _ in 0..entry_count {
            t = t.saturating_mul(p as u128);
        }
        t
    };
    if tuples > caps.matrix_enum_budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "matrix tuple classification (switch to family mode)",
            needed: tuples,
            budget: caps.matrix_enum_budget,
        });
    }
    let mut flat = vec![0u64; entry_count];
    loop {
        // build the representation for this tuple
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        let mut offset = 0;
        for a in quiver.arrows() {
            let rows = dims[a.target];
            let cols = dims[a.source];
            let entries = flat[offset..offset + rows * cols].to_vec();
            offset += rows * cols;
            maps.push(FpMatrix::new(p, rows, cols, entries)?);
        }
        let rep = Arc::new(Representation::new(quiver.clone(), p, dims.to_vec(), maps)?);
        if is_indecomposable(&rep, caps)? {
            reg.find_or_insert(rep)?;
        }
        let mut i = 0;
        loop {
            if i == entry_count {
                return Ok(());
            }
            flat[i] += 1;
            if flat[i] < p {
                break;
            }
            flat[i] = 0;
            i += 1;
        }
    }
}
