//! The Gabriel-Roiter engine: measure computation, submodules,
//! filtrations, piling tests, length bounds and the take-off prefix.
//!
//! Two routes compute a measure. The definition route enumerates the
//! subrepresentation lattice and recurses over indecomposable proper
//! submodules, memoized by isomorphism class. The registry route, for a
//! registry known complete below the module's length, maximizes over the
//! cached measures of the classes that embed. The verification suites
//! check the two routes against each other.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::endo::{flat_blocks_rect, is_indecomposable, is_iso, pow_checked, search_combinations};
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use crate::measure::GRMeasure;
use crate::morphism::{combine_flat, hom_basis, Morphism};
use crate::quiver::Quiver;
use crate::registry::IndecRegistry;
use crate::rep::Representation;
use crate::subrep::{all_subreps, compose_subrep, sub_as_rep, subreps_with_length, Subrep};

fn dims_le(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Does some monomorphism `c -> m` exist? Exhaustive below the hom cap,
/// randomized above it; a negative answer above the cap is an error rather
/// than a guess.
pub fn embeds(c: &Arc<Representation>, m: &Arc<Representation>, caps: &Caps) -> Result<bool> {
    if c.is_zero() {
        return Ok(true);
    }
    if !dims_le(c.dims(), m.dims()) {
        return Ok(false);
    }
    let basis = hom_basis(c, m)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let k = basis.len();
    let p = c.p();
    let flat: Vec<Vec<u64>> = basis.iter().map(Morphism::to_flat_vector).collect();
    let is_mono_combo = |coeffs: &[u64]| -> bool {
        let v = combine_flat(&flat, coeffs, p);
        flat_blocks_rect(c, m, &v)
            .iter()
            .all(FpMatrix::has_full_column_rank)
    };
    let space = pow_checked(p, k);
    if space <= caps.hom_enum_cap as u128 {
        let found = search_combinations(p, k, |coeffs| {
            if is_mono_combo(coeffs) {
                Some(())
            } else {
                None
            }
        });
        return Ok(found.is_some());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(caps.iso_seed);
    for _ in 0..caps.iso_trials {
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if is_mono_combo(&coeffs) {
            return Ok(true);
        }
    }
    Err(Error::CapExceeded {
        what: "monomorphism search in Hom",
        needed: space,
        cap: caps.hom_enum_cap,
    })
}

/// Indecomposability resolved through the registry when possible.
fn indec_via_registry(m: &Arc<Representation>, reg: &mut IndecRegistry) -> Result<bool> {
    if reg.find_class(m)?.is_some() {
        return Ok(true);
    }
    let caps = *reg.caps();
    is_indecomposable(m, &caps)
}

/// The Gabriel-Roiter measure, by the defining recursion.
///
/// The zero module has the empty measure. A nonzero decomposable module
/// takes the maximum over its indecomposable proper submodules. An
/// indecomposable module extends that maximum by its own length. Measures
/// of indecomposables are memoized in the registry by isomorphism class,
/// so repeated calls against the same registry share all subcomputations.
pub fn gr_measure(m: &Arc<Representation>, reg: &mut IndecRegistry) -> Result<GRMeasure> {
    if m.is_zero() {
        return Ok(GRMeasure::empty());
    }
    let class = reg.find_class(m)?;
    if let Some(i) = class {
        if let Some(mu) = reg.measure(i) {
            return Ok(mu.clone());
        }
    }
    let caps = *reg.caps();
    let indec = match class {
        Some(_) => true,
        None => is_indecomposable(m, &caps)?,
    };
    // collect the iso classes of indecomposable proper submodules
    let mut class_indices: Vec<usize> = Vec::new();
    for s in all_subreps(m, &caps)? {
        if s.is_zero() || !s.is_proper() {
            continue;
        }
        let (srep, _) = sub_as_rep(&s)?;
        if srep.is_semisimple() && srep.length() > 1 {
            continue; // decomposable outright
        }
        match reg.find_class(&srep)? {
            Some(i) => {
                if !class_indices.contains(&i) {
                    class_indices.push(i);
                }
            }
            None => {
                if is_indecomposable(&srep, &caps)? {
                    class_indices.push(reg.insert(srep)?);
                }
            }
        }
    }
    let mut best: Option<GRMeasure> = None;
    for i in class_indices {
        let rep = reg.entry(i).rep.clone();
        let mu = gr_measure(&rep, reg)?;
        best = Some(match best {
            None => mu,
            Some(b) => {
                if mu > b {
                    mu
                } else {
                    b
                }
            }
        });
    }
    let result = if indec {
        match best {
            Some(b) => b.with_top(m.length())?,
            None => GRMeasure::new(vec![m.length()])?, // simple
        }
    } else {
        best.ok_or_else(|| {
            Error::Precondition("decomposable module without indecomposable submodules".into())
        })?
    };
    if indec {
        let idx = match class {
            Some(i) => i,
            None => reg.insert(m.clone())?,
        };
        reg.set_measure(idx, result.clone());
    }
    Ok(result)
}

/// Fills in the measure of every registered class, shortest first.
///
/// For a registry complete up to its declared bound, the measure of each
/// entry is the maximum cached measure among the shorter classes that
/// embed into it, extended by its own length. Candidates are visited in
/// descending measure order, so the first embedding ends the search.
pub fn compute_all_measures(reg: &mut IndecRegistry) -> Result<()> {
    if reg.complete_up_to().is_none() {
        return Err(Error::Precondition(
            "registry must declare a completeness bound".into(),
        ));
    }
    let caps = *reg.caps();
    let mut order: Vec<usize> = (0..reg.len()).collect();
    order.sort_by_key(|&i| reg.entry(i).length);
    for &i in &order {
        if reg.measure(i).is_some() {
            continue;
        }
        let m = reg.entry(i).rep.clone();
        if m.length() == 1 {
            reg.set_measure(i, GRMeasure::new(vec![1])?);
            continue;
        }
        let mut candidates: Vec<(GRMeasure, usize)> = (0..reg.len())
            .filter(|&j| reg.entry(j).length < m.length())
            .filter(|&j| dims_le(&reg.entry(j).dim_vec, m.dims()))
            .map(|j| {
                reg.measure(j)
                    .cloned()
                    .map(|mu| (mu, j))
                    .ok_or_else(|| Error::Precondition("shorter class without a measure".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        candidates.sort_by(|a, b| b.0.cmp(&a.0));
        let mut best: Option<GRMeasure> = None;
        for (mu, j) in candidates {
            let c = reg.entry(j).rep.clone();
            if embeds(&c, &m, &caps)? {
                best = Some(mu);
                break;
            }
        }
        let mu = best
            .ok_or_else(|| {
                Error::Precondition(
                    "no embedded submodule class found; registry is incomplete".into(),
                )
            })?
            .with_top(m.length())?;
        reg.set_measure(i, mu);
    }
    Ok(())
}

/// All Gabriel-Roiter submodules: the indecomposable proper
/// subrepresentations of maximal measure.
///
/// Uses the measure of `m` to target the known submodule length, so only
/// subrepresentations of that exact total dimension are materialized. The
/// registry must be the one that computed the measure of `m` (or be
/// complete below its length) so the attaining classes are present.
pub fn gr_submodules(m: &Arc<Representation>, reg: &mut IndecRegistry) -> Result<Vec<Subrep>> {
    if m.is_zero() {
        return Err(Error::Precondition("zero module".into()));
    }
    if !indec_via_registry(m, reg)? {
        return Err(Error::Precondition(
            "Gabriel-Roiter submodules need an indecomposable module".into(),
        ));
    }
    let mu = gr_measure(m, reg)?;
    if mu.len() == 1 {
        return Err(Error::NoGrSubmodule);
    }
    let target = mu.without_top();
    let lstar = target
        .max_element()
        .expect("non-simple measure has at least two elements");
    let attaining: Vec<usize> = (0..reg.len())
        .filter(|&i| reg.entry(i).length == lstar)
        .filter(|&i| reg.measure(i) == Some(&target))
        .filter(|&i| dims_le(&reg.entry(i).dim_vec, m.dims()))
        .collect();
    if attaining.is_empty() {
        return Err(Error::Precondition(
            "registry lacks the attaining class; recompute the measure with this registry".into(),
        ));
    }
    let caps = *reg.caps();
    let mut out = Vec::new();
    for s in subreps_with_length(m, lstar, &caps)? {
        let sdims = s.dims();
        for &ci in &attaining {
            if reg.entry(ci).dim_vec != sdims {
                continue;
            }
            let (srep, _) = sub_as_rep(&s)?;
            if is_iso(&srep, &reg.entry(ci).rep, &caps)?.is_some() {
                out.push(s);
                break;
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Precondition(
            "no Gabriel-Roiter submodule realized; registry and module disagree".into(),
        ));
    }
    Ok(out)
}

/// True when `u` is one of the Gabriel-Roiter submodules of its parent.
pub fn is_gr_inclusion(u: &Subrep, reg: &mut IndecRegistry) -> Result<bool> {
    if !u.is_proper() || u.is_zero() {
        return Ok(false);
    }
    let subs = gr_submodules(u.parent(), reg)?;
    Ok(subs.contains(u))
}

/// One Gabriel-Roiter filtration, from a simple submodule up to the module
/// itself, descending through the lexicographically least Gabriel-Roiter
/// submodule at every step.
pub fn gr_filtration(m: &Arc<Representation>, reg: &mut IndecRegistry) -> Result<Vec<Subrep>> {
    if !indec_via_registry(m, reg)? {
        return Err(Error::Precondition(
            "filtrations are defined for indecomposable modules".into(),
        ));
    }
    let full = Subrep::full_sub(m.clone())?;
    if m.length() == 1 {
        return Ok(vec![full]);
    }
    let mut subs = gr_submodules(m, reg)?;
    subs.sort();
    let u = subs.into_iter().next().expect("nonempty");
    let (urep, _) = sub_as_rep(&u)?;
    let inner = gr_filtration(&urep, reg)?;
    let mut chain = inner
        .iter()
        .map(|c| compose_subrep(&u, c))
        .collect::<Result<Vec<_>>>()?;
    chain.push(full);
    Ok(chain)
}

/// Every Gabriel-Roiter filtration, as chains of subrepresentations of the
/// common parent.
pub fn all_gr_filtrations(
    m: &Arc<Representation>,
    reg: &mut IndecRegistry,
) -> Result<Vec<Vec<Subrep>>> {
    if !indec_via_registry(m, reg)? {
        return Err(Error::Precondition(
            "filtrations are defined for indecomposable modules".into(),
        ));
    }
    let full = Subrep::full_sub(m.clone())?;
    if m.length() == 1 {
        return Ok(vec![vec![full]]);
    }
    let mut subs = gr_submodules(m, reg)?;
    subs.sort();
    let mut out = Vec::new();
    for u in subs {
        let (urep, _) = sub_as_rep(&u)?;
        for inner in all_gr_filtrations(&urep, reg)? {
            let mut chain = inner
                .iter()
                .map(|c| compose_subrep(&u, c))
                .collect::<Result<Vec<_>>>()?;
            chain.push(full.clone());
            out.push(chain);
        }
    }
    Ok(out)
}

/// Piling test by the prefix criterion: the measure of the parent starts
/// with the measure of the submodule.
pub fn is_piling(u: &Subrep, reg: &mut IndecRegistry) -> Result<bool> {
    let (urep, _) = sub_as_rep(u)?;
    if !indec_via_registry(&urep, reg)? {
        return Err(Error::Precondition(
            "piling submodules are indecomposable by definition".into(),
        ));
    }
    let mu_u = gr_measure(&urep, reg)?;
    let mu_y = gr_measure(u.parent(), reg)?;
    Ok(mu_u.restrict_to(u.length()) == mu_u && mu_y.restrict_to(u.length()) == mu_u)
}

/// Piling test by brute force over the definition: no indecomposable
/// submodule of smaller length has a larger measure.
pub fn is_piling_oracle(u: &Subrep, reg: &mut IndecRegistry) -> Result<bool> {
    let (urep, _) = sub_as_rep(u)?;
    if !indec_via_registry(&urep, reg)? {
        return Err(Error::Precondition(
            "piling submodules are indecomposable by definition".into(),
        ));
    }
    let mu_u = gr_measure(&urep, reg)?;
    let caps = *reg.caps();
    for v in all_subreps(u.parent(), &caps)? {
        if v.is_zero() || v.length() >= u.length() {
            continue;
        }
        let (vrep, _) = sub_as_rep(&v)?;
        if vrep.is_semisimple() && vrep.length() > 1 {
            continue;
        }
        let indec = match reg.find_class(&vrep)? {
            Some(_) => true,
            None => is_indecomposable(&vrep, &caps)?,
        };
        if !indec {
            continue;
        }
        if gr_measure(&vrep, reg)? > mu_u {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximal lengths of indecomposable projectives and injectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraBounds {
    pub p_bound: usize,
    pub q_bound: usize,
}

impl AlgebraBounds {
    pub fn product(&self) -> usize {
        self.p_bound * self.q_bound
    }
}

pub fn algebra_bounds(quiver: &Arc<Quiver>, p: u64) -> Result<AlgebraBounds> {
    let mut p_bound = 1;
    let mut q_bound = 1;
    for v in 0..quiver.vertex_count() {
        p_bound = p_bound.max(Representation::projective_at(quiver.clone(), p, v)?.length());
        q_bound = q_bound.max(Representation::injective_at(quiver.clone(), p, v)?.length());
    }
    Ok(AlgebraBounds { p_bound, q_bound })
}

/// Length bound for a Gabriel-Roiter inclusion: the parent is at most
/// `p_bound * q_bound` times as long as the submodule.
pub fn check_gr_bound(u: &Subrep, bounds: &AlgebraBounds) -> bool {
    u.parent().length() <= bounds.product() * u.length()
}

/// An indecomposable submodule with length in `[a+1, pq a]`, found along a
/// Gabriel-Roiter filtration.
pub fn submodule_interval_check(
    m: &Arc<Representation>,
    a: usize,
    reg: &mut IndecRegistry,
) -> Result<Subrep> {
    if a == 0 || a >= m.length() {
        return Err(Error::Precondition(format!(
            "need 1 <= a < length, got a={a}, length={}",
            m.length()
        )));
    }
    let chain = gr_filtration(m, reg)?;
    let i = chain
        .iter()
        .rposition(|s| s.length() <= a)
        .expect("the first chain term is simple, hence of length 1 <= a");
    let next = chain
        .get(i + 1)
        .expect("the last chain term has length > a")
        .clone();
    let bounds = algebra_bounds(m.quiver(), m.p())?;
    debug_assert!(next.length() > a && next.length() <= bounds.product() * a);
    Ok(next)
}

/// Verifies that the non-monomorphisms in Hom(X, Y) are closed under
/// addition, for the inclusion `u: X subset Y`.
pub fn sing_additivity_check(u: &Subrep, caps: &Caps) -> Result<bool> {
    let (x, _) = sub_as_rep(u)?;
    let y = u.parent().clone();
    let basis = hom_basis(&x, &y)?;
    let k = basis.len();
    let p = x.p();
    let space = pow_checked(p, k);
    if space > caps.hom_enum_cap as u128 {
        return Err(Error::CapExceeded {
            what: "Hom enumeration for the additivity check",
            needed: space,
            cap: caps.hom_enum_cap,
        });
    }
    let flat: Vec<Vec<u64>> = basis.iter().map(Morphism::to_flat_vector).collect();
    // mixed-radix code of each coefficient vector indexes its mono flag
    let total = space as usize;
    let mut mono = vec![false; total];
    let mut coords: Vec<Vec<u64>> = Vec::with_capacity(total);
    {
        let mut code = 0usize;
        search_combinations(p, k, |coeffs| -> Option<()> {
            let v = combine_flat(&flat, coeffs, p);
            mono[code] = flat_blocks_rect(&x, &y, &v)
                .iter()
                .all(FpMatrix::has_full_column_rank);
            coords.push(coeffs.to_vec());
            code += 1;
            None
        });
    }
    let code_of = |coeffs: &[u64]| -> usize {
        let mut c = 0usize;
        for &v in coeffs.iter().rev() {
            c = c * p as usize + v as usize;
        }
        c
    };
    let sing: Vec<usize> = (0..total).filter(|&i| !mono[i]).collect();
    for &i in &sing {
        for &j in &sing {
            let sum: Vec<u64> = coords[i]
                .iter()
                .zip(&coords[j])
                .map(|(&a, &b)| (a + b) % p)
                .collect();
            if mono[code_of(&sum)] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bounded irreducibility verdict. A map is certified reducible when it
/// factors through the radical squared over registered middle terms up to
/// the length cap; no positive verdict is ever produced because middle
/// terms are unbounded in general.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Reducible,
    Inconclusive,
}

pub fn is_irreducible_bounded(
    f: &Morphism,
    reg: &mut IndecRegistry,
    length_cap: usize,
) -> Result<IrreducibilityVerdict> {
    let x = f.source().clone();
    let y = f.target().clone();
    if f.is_isomorphism() {
        return Err(Error::Precondition(
            "irreducibility is about non-isomorphisms".into(),
        ));
    }
    let caps = *reg.caps();
    let mut span_rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..reg.len() {
        if reg.entry(i).length > length_cap {
            continue;
        }
        let z = reg.entry(i).rep.clone();
        let rad_xz = radical_hom_basis(&x, &z, &caps)?;
        if rad_xz.is_empty() {
            continue;
        }
        let rad_zy = radical_hom_basis(&z, &y, &caps)?;
        for a in &rad_xz {
            for b in &rad_zy {
                span_rows.push(b.compose(a)?.to_flat_vector());
            }
        }
    }
    let f_flat = f.to_flat_vector();
    if f_flat.is_empty() || f.is_zero() {
        return Ok(IrreducibilityVerdict::Reducible);
    }
    if span_rows.is_empty() {
        return Ok(IrreducibilityVerdict::Inconclusive);
    }
    let p = x.p();
    let span = FpMatrix::from_rows(p, &span_rows)?;
    let with_f = span.vstack(&FpMatrix::new(p, 1, f_flat.len(), f_flat)?)?;
    if with_f.rank() == span.rank() {
        Ok(IrreducibilityVerdict::Reducible)
    } else {
        Ok(IrreducibilityVerdict::Inconclusive)
    }
}

/// Basis of rad(X, Z): all of Hom when X and Z are non-isomorphic
/// indecomposables, the non-isomorphisms otherwise.
fn radical_hom_basis(
    x: &Arc<Representation>,
    z: &Arc<Representation>,
    caps: &Caps,
) -> Result<Vec<Morphism>> {
    let basis = hom_basis(x, z)?;
    if basis.is_empty() {
        return Ok(basis);
    }
    if x.dims() != z.dims() || is_iso(x, z, caps)?.is_none() {
        return Ok(basis);
    }
    // X and Z isomorphic indecomposables: the non-isomorphisms form a
    // subspace; enumerate and span.
    let k = basis.len();
    let p = x.p();
    let space = pow_checked(p, k);
    if space > caps.hom_enum_cap as u128 {
        return Err(Error::CapExceeded {
            what: "radical basis enumeration",
            needed: space,
            cap: caps.hom_enum_cap,
        });
    }
    let flat: Vec<Vec<u64>> = basis.iter().map(Morphism::to_flat_vector).collect();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    search_combinations(p, k, |coeffs| -> Option<()> {
        let v = combine_flat(&flat, coeffs, p);
        let iso = flat_blocks_rect(x, z, &v)
            .iter()
            .all(|b| b.rank() == b.rows());
        if !iso && v.iter().any(|&e| e != 0) {
            rows.push(v);
        }
        None
    });
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let span = FpMatrix::from_rows(p, &rows)?;
    let r = span.rref();
    let mut out = Vec::new();
    for i in 0..r.rank {
        out.push(Morphism::from_flat_vector(x, z, r.matrix.row(i))?);
    }
    Ok(out)
}

/// Checks that every subrepresentation `Y'` with `X + Y' = Y` is longer
/// than the quotient `Y/X`, for a Gabriel-Roiter inclusion `u: X in Y`.
pub fn complement_length_check(u: &Subrep, caps: &Caps) -> Result<bool> {
    let y = u.parent().clone();
    let full = Subrep::full_sub(y.clone())?;
    let quotient_length = y.length() - u.length();
    for yp in all_subreps(&y, caps)? {
        if u.sum(&yp)? == full && yp.length() <= quotient_length {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One step of the take-off sequence: a measure and the registered classes
/// attaining it.
#[derive(Clone, Debug)]
pub struct TakeoffStep {
    pub measure: GRMeasure,
    pub classes: Vec<usize>,
}

/// The `count` smallest measures among the registered classes, each with
/// all attaining classes, certified against the registry bound.
///
/// Certification margin: every reported measure must have its largest
/// element at most `bound - p_bound*q_bound`, the successor slack from the
/// length bound on Gabriel-Roiter inclusions; otherwise an explicit
/// insufficient-bound error names the required bound.
pub fn takeoff_prefix(reg: &mut IndecRegistry, count: usize) -> Result<Vec<TakeoffStep>> {
    let bound = reg.complete_up_to().ok_or_else(|| {
        Error::Precondition("take-off needs a registry with a completeness bound".into())
    })?;
    compute_all_measures(reg)?;
    let mut by_measure: BTreeMap<GRMeasure, Vec<usize>> = BTreeMap::new();
    for i in 0..reg.len() {
        let mu = reg.measure(i).expect("measures computed").clone();
        by_measure.entry(mu).or_default().push(i);
    }
    let steps: Vec<TakeoffStep> = by_measure
        .into_iter()
        .take(count)
        .map(|(measure, classes)| TakeoffStep { measure, classes })
        .collect();
    if steps.len() < count {
        return Err(Error::Precondition(format!(
            "registry only attains {} distinct measures",
            steps.len()
        )));
    }
    let pq = algebra_bounds(reg.quiver(), reg.p())?.product();
    let max_elt = steps
        .iter()
        .filter_map(|s| s.measure.max_element())
        .max()
        .unwrap_or(1);
    if max_elt + pq > bound {
        return Err(Error::InsufficientBound {
            required: max_elt + pq,
            available: bound,
        });
    }
    Ok(steps)
}
