//! Subrepresentations: closure, lattice enumeration, extraction, quotients.
//!
//! A subrepresentation is a per-vertex tuple of canonical subspaces closed
//! under the arrow maps. Enumeration walks vertices in topological order so
//! that the forced images at a vertex are known before its subspace is
//! chosen, pruning tuples long before they are completed.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use crate::morphism::Morphism;
use crate::rep::Representation;
use crate::subspace::{subspace_count, superspaces_with_dim, Subspace};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subrep {
    parent: Arc<Representation>,
    parts: Vec<Subspace>,
}

impl Subrep {
    /// Validates closure under every arrow map.
    pub fn new(parent: Arc<Representation>, parts: Vec<Subspace>) -> Result<Self> {
        let quiver = parent.quiver();
        if parts.len() != quiver.vertex_count() {
            return Err(Error::Shape(format!(
                "{} parts for {} vertices",
                parts.len(),
                quiver.vertex_count()
            )));
        }
        for (v, part) in parts.iter().enumerate() {
            if part.ambient_dim() != parent.dim_at(v) || part.p() != parent.p() {
                return Err(Error::Shape(format!(
                    "part at vertex {} does not match the parent fiber",
                    quiver.vertex_label(v)
                )));
            }
        }
        for (ai, arrow) in quiver.arrows().iter().enumerate() {
            let image = parts[arrow.source].image_under(parent.map(ai))?;
            if !parts[arrow.target].contains(&image)? {
                return Err(Error::InvalidSubrep(format!(
                    "not closed under arrow {}",
                    arrow.name
                )));
            }
        }
        Ok(Subrep { parent, parts })
    }

    pub fn zero_sub(parent: Arc<Representation>) -> Result<Self> {
        let p = parent.p();
        let parts = parent
            .dims()
            .iter()
            .map(|&d| Subspace::zero(p, d))
            .collect::<Result<Vec<_>>>()?;
        Subrep::new(parent, parts)
    }

    pub fn full_sub(parent: Arc<Representation>) -> Result<Self> {
        let p = parent.p();
        let parts = parent
            .dims()
            .iter()
            .map(|&d| Subspace::full(p, d))
            .collect::<Result<Vec<_>>>()?;
        Subrep::new(parent, parts)
    }

    pub fn parent(&self) -> &Arc<Representation> {
        &self.parent
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    pub fn part(&self, v: usize) -> &Subspace {
        &self.parts[v]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    pub fn length(&self) -> usize {
        self.parts.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.length() == 0
    }

    pub fn is_full(&self) -> bool {
        self.length() == self.parent.length()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_full()
    }

    /// Containment of subrepresentations of the same parent.
    pub fn contains(&self, other: &Subrep) -> Result<bool> {
        if self.parent != other.parent {
            return Err(Error::Incompatible("different parents".into()));
        }
        for (a, b) in self.parts.iter().zip(&other.parts) {
            if !a.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Componentwise sum of subrepresentations (again a subrepresentation).
    pub fn sum(&self, other: &Subrep) -> Result<Subrep> {
        if self.parent != other.parent {
            return Err(Error::Incompatible("different parents".into()));
        }
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.sum(b))
            .collect::<Result<Vec<_>>>()?;
        Subrep::new(self.parent.clone(), parts)
    }
}

impl PartialOrd for Subrep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subrep {
    /// Canonical order on the per-vertex subspace tuples.
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

/// Least subrepresentation containing the seed subspaces: one pass in
/// topological order suffices because arrows only point forward.
pub fn closure(parent: &Arc<Representation>, seed: Vec<Subspace>) -> Result<Subrep> {
    let quiver = parent.quiver();
    if seed.len() != quiver.vertex_count() {
        return Err(Error::Shape("one seed subspace per vertex".into()));
    }
    for (v, s) in seed.iter().enumerate() {
        if s.ambient_dim() != parent.dim_at(v) {
            return Err(Error::Shape(format!(
                "seed at vertex {} has ambient {}, fiber is {}",
                quiver.vertex_label(v),
                s.ambient_dim(),
                parent.dim_at(v)
            )));
        }
    }
    let mut parts = seed;
    for &v in quiver.topo_order() {
        let mut acc = parts[v].clone();
        for (ai, arrow) in quiver.arrows_into(v) {
            let img = parts[arrow.source].image_under(parent.map(ai))?;
            acc = acc.sum(&img)?;
        }
        parts[v] = acc;
    }
    Subrep::new(parent.clone(), parts)
}

/// Enumerates every subrepresentation exactly once.
///
/// The precondition bounds the raw product of per-vertex subspace counts by
/// the configured budget; the enumeration itself inspects far fewer tuples
/// thanks to closure pruning, and the inspected count is charged against
/// the same budget.
pub fn all_subreps(parent: &Arc<Representation>, caps: &Caps) -> Result<Vec<Subrep>> {
    let raw: u128 = parent
        .dims()
        .iter()
        .map(|&d| subspace_count(d, parent.p()))
        .product();
    if raw > caps.subrep_budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "subrepresentation lattice",
            needed: raw,
            budget: caps.subrep_budget,
        });
    }
    let mut out = Vec::new();
    let mut inspected: u64 = 0;
    visit_subreps(parent, None, caps, &mut inspected, &mut |s| {
        out.push(s);
        Ok(())
    })?;
    Ok(out)
}

/// Enumerates only the subrepresentations of total length `len`.
pub fn subreps_with_length(
    parent: &Arc<Representation>,
    len: usize,
    caps: &Caps,
) -> Result<Vec<Subrep>> {
    let mut out = Vec::new();
    let mut inspected: u64 = 0;
    visit_subreps(parent, Some(len), caps, &mut inspected, &mut |s| {
        out.push(s);
        Ok(())
    })?;
    Ok(out)
}

/// Core enumerator: choose a subspace at each vertex in topological order,
/// above the forced image of the earlier choices, optionally constrained to
/// a target total length.
fn visit_subreps(
    parent: &Arc<Representation>,
    target_len: Option<usize>,
    caps: &Caps,
    inspected: &mut u64,
    emit: &mut dyn FnMut(Subrep) -> Result<()>,
) -> Result<()> {
    let quiver = parent.quiver();
    let order = quiver.topo_order().to_vec();
    let p = parent.p();
    // remaining capacity after each position, for length pruning
    let mut remaining = vec![0usize; order.len() + 1];
    for i in (0..order.len()).rev() {
        remaining[i] = remaining[i + 1] + parent.dim_at(order[i]);
    }
    let mut chosen: Vec<Option<Subspace>> = vec![None; quiver.vertex_count()];

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        parent: &Arc<Representation>,
        order: &[usize],
        remaining: &[usize],
        pos: usize,
        p: u64,
        target_len: Option<usize>,
        partial_len: usize,
        chosen: &mut Vec<Option<Subspace>>,
        caps: &Caps,
        inspected: &mut u64,
        emit: &mut dyn FnMut(Subrep) -> Result<()>,
    ) -> Result<()> {
        if pos == order.len() {
            let parts: Vec<Subspace> = chosen
                .iter()
                .map(|c| c.clone().expect("all chosen"))
                .collect();
            let sub = Subrep {
                parent: parent.clone(),
                parts,
            };
            debug_assert!(
                Subrep::new(parent.clone(), sub.parts.clone()).is_ok(),
                "enumerated tuples are closed by construction"
            );
            return emit(sub);
        }
        let v = order[pos];
        let dim_v = parent.dim_at(v);
        // forced lower bound: images of already-chosen source subspaces
        let mut forced = Subspace::zero(p, dim_v)?;
        for (ai, arrow) in parent.quiver().arrows_into(v) {
            let src = chosen[arrow.source]
                .as_ref()
                .expect("topological order visits sources first");
            forced = forced.sum(&src.image_under(parent.map(ai))?)?;
        }
        let lo = forced.dim();
        for d in lo..=dim_v {
            if let Some(t) = target_len {
                let after = partial_len + d;
                if after > t || after + remaining[pos + 1] < t {
                    continue;
                }
            }
            for cand in superspaces_with_dim(&forced, d)? {
                *inspected += 1;
                if *inspected > caps.subrep_budget {
                    return Err(Error::BudgetExceeded {
                        what: "subrepresentation enumeration",
                        needed: *inspected as u128,
                        budget: caps.subrep_budget,
                    });
                }
                chosen[v] = Some(cand);
                recurse(
                    parent,
                    order,
                    remaining,
                    pos + 1,
                    p,
                    target_len,
                    partial_len + d,
                    chosen,
                    caps,
                    inspected,
                    emit,
                )?;
            }
        }
        chosen[v] = None;
        Ok(())
    }

    recurse(
        parent,
        &order,
        &remaining,
        0,
        p,
        target_len,
        0,
        &mut chosen,
        caps,
        inspected,
        emit,
    )
}

/// The subrepresentation as a representation in its own right, together
/// with the inclusion.
pub fn sub_as_rep(u: &Subrep) -> Result<(Arc<Representation>, Morphism)> {
    let parent = u.parent();
    let quiver = parent.quiver().clone();
    let p = parent.p();
    let dims = u.dims();
    let mut maps = Vec::with_capacity(quiver.arrows().len());
    for (ai, arrow) in quiver.arrows().iter().enumerate() {
        let bu = u.part(arrow.source).basis(); // k_u x n_u
        let bv = u.part(arrow.target).basis(); // k_v x n_v
                                               // solve B_v^t R = M B_u^t for the restricted matrix R
        let rhs = parent.map(ai).mul(&bu.transpose())?;
        let restricted = if bv.rows() == 0 {
            FpMatrix::zeros(p, 0, bu.rows())?
        } else {
            bv.transpose()
                .solve(&rhs)?
                .ok_or_else(|| Error::InvalidSubrep("image escapes the subspace".into()))?
        };
        maps.push(restricted);
    }
    let rep = Arc::new(Representation::new(quiver, p, dims, maps)?);
    let blocks: Vec<FpMatrix> = u.parts().iter().map(|s| s.basis().transpose()).collect();
    let inclusion = Morphism::new(rep.clone(), parent.clone(), blocks)?;
    Ok((rep, inclusion))
}

/// Proper nonzero subrepresentations whose extracted representation is
/// indecomposable.
pub fn indecomposable_proper_subreps(
    parent: &Arc<Representation>,
    caps: &Caps,
) -> Result<Vec<Subrep>> {
    let mut out = Vec::new();
    for s in all_subreps(parent, caps)? {
        if s.is_zero() || !s.is_proper() {
            continue;
        }
        let (rep, _) = sub_as_rep(&s)?;
        if crate::endo::is_indecomposable(&rep, caps)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Quotient of `m` by a subrepresentation, with the projection.
pub fn quotient(m: &Arc<Representation>, u: &Subrep) -> Result<(Arc<Representation>, Morphism)> {
    if u.parent() != m {
        return Err(Error::Incompatible("subrep of a different parent".into()));
    }
    let quiver = m.quiver().clone();
    let p = m.p();
    let projections: Vec<FpMatrix> = u
        .parts()
        .iter()
        .map(Subspace::cokernel_projection)
        .collect();
    let sections: Vec<FpMatrix> = u.parts().iter().map(Subspace::complement_section).collect();
    let dims: Vec<usize> = projections.iter().map(FpMatrix::rows).collect();
    let mut maps = Vec::with_capacity(quiver.arrows().len());
    for (ai, arrow) in quiver.arrows().iter().enumerate() {
        // induced map: project . arrow . section, well defined by closure
        let map = projections[arrow.target]
            .mul(m.map(ai))?
            .mul(&sections[arrow.source])?;
        maps.push(map);
    }
    let q = Arc::new(Representation::new(quiver, p, dims, maps)?);
    let projection = Morphism::new(m.clone(), q.clone(), projections)?;
    Ok((q, projection))
}

/// Pushes a subrepresentation of the extracted module `rep(u)` forward to a
/// subrepresentation of the original parent.
pub fn compose_subrep(outer: &Subrep, inner: &Subrep) -> Result<Subrep> {
    let (outer_rep, _) = sub_as_rep(outer)?;
    if inner.parent() != &outer_rep {
        return Err(Error::Incompatible(
            "inner subrep does not live in the extracted module".into(),
        ));
    }
    let p = outer.parent().p();
    let parts = outer
        .parts()
        .iter()
        .zip(inner.parts())
        .map(|(os, is)| -> Result<Subspace> {
            if is.dim() == 0 {
                return Subspace::zero(p, os.ambient_dim());
            }
            // rows of `is` are coordinates in the basis of `os`
            let rows = is.basis().mul(os.basis())?;
            Ok(Subspace::from_spanning(&rows))
        })
        .collect::<Result<Vec<_>>>()?;
    Subrep::new(outer.parent().clone(), parts)
}

/// Expresses `inner` (contained in `outer`, same parent) as a
/// subrepresentation of the extracted module of `outer`.
pub fn restrict_subrep(outer: &Subrep, inner: &Subrep) -> Result<Subrep> {
    if !outer.contains(inner)? {
        return Err(Error::Precondition("restriction needs containment".into()));
    }
    let (outer_rep, _) = sub_as_rep(outer)?;
    let p = outer.parent().p();
    let parts = outer
        .parts()
        .iter()
        .zip(inner.parts())
        .map(|(os, is)| -> Result<Subspace> {
            if is.dim() == 0 {
                return Subspace::zero(p, os.dim());
            }
            // coordinates of inner basis vectors in the outer basis
            let coords = os
                .basis()
                .transpose()
                .solve(&is.basis().transpose())?
                .ok_or_else(|| Error::Precondition("containment violated".into()))?;
            Ok(Subspace::from_spanning(&coords.transpose()))
        })
        .collect::<Result<Vec<_>>>()?;
    Subrep::new(outer_rep, parts)
}

/// Preimage of a subrepresentation of the target under a morphism.
pub fn preimage_subrep(f: &Morphism, w: &Subrep) -> Result<Subrep> {
    if w.parent() != f.target() {
        return Err(Error::Incompatible(
            "subrep does not live in the morphism target".into(),
        ));
    }
    let parts = (0..f.source().quiver().vertex_count())
        .map(|v| w.part(v).preimage_under(f.block(v)))
        .collect::<Result<Vec<_>>>()?;
    Subrep::new(f.source().clone(), parts)
}

/// Image of a subrepresentation of the source under a morphism.
pub fn image_subrep(f: &Morphism, u: &Subrep) -> Result<Subrep> {
    if u.parent() != f.source() {
        return Err(Error::Incompatible(
            "subrep does not live in the morphism source".into(),
        ));
    }
    let parts = (0..f.source().quiver().vertex_count())
        .map(|v| u.part(v).image_under(f.block(v)))
        .collect::<Result<Vec<_>>>()?;
    Subrep::new(f.target().clone(), parts)
}

/// Radical: at each vertex the sum of the images of all incoming arrows.
pub fn radical(m: &Arc<Representation>) -> Result<Subrep> {
    let quiver = m.quiver();
    let p = m.p();
    let mut parts = Vec::with_capacity(quiver.vertex_count());
    for v in 0..quiver.vertex_count() {
        let mut acc = Subspace::zero(p, m.dim_at(v))?;
        for (ai, arrow) in quiver.arrows_into(v) {
            let full_source = Subspace::full(p, m.dim_at(arrow.source))?;
            acc = acc.sum(&full_source.image_under(m.map(ai))?)?;
        }
        parts.push(acc);
    }
    Subrep::new(m.clone(), parts)
}

/// Number of radical steps until zero; the zero module reports 0.
pub fn loewy_length(m: &Arc<Representation>) -> Result<usize> {
    if m.is_zero() {
        return Ok(0);
    }
    let quiver = m.quiver();
    let p = m.p();
    let mut current: Vec<Subspace> = m
        .dims()
        .iter()
        .map(|&d| Subspace::full(p, d))
        .collect::<Result<Vec<_>>>()?;
    let mut steps = 0;
    while current.iter().any(|s| s.dim() > 0) {
        steps += 1;
        let mut next = Vec::with_capacity(quiver.vertex_count());
        for v in 0..quiver.vertex_count() {
            let mut acc = Subspace::zero(p, m.dim_at(v))?;
            for (ai, arrow) in quiver.arrows_into(v) {
                acc = acc.sum(&current[arrow.source].image_under(m.map(ai))?)?;
            }
            next.push(acc);
        }
        current = next;
        if steps > m.length() {
            return Err(Error::Precondition(
                "radical series does not terminate".into(),
            ));
        }
    }
    Ok(steps)
}

/// Local module test: the top is simple.
pub fn is_local(m: &Arc<Representation>) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let rad = radical(m)?;
    Ok(m.length() - rad.length() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{kronecker_quiver, kronecker_regular, TubeParam};
    use crate::poly::FpPoly;

    fn caps() -> Caps {
        Caps::default()
    }

    fn kronecker() -> Arc<crate::quiver::Quiver> {
        Arc::new(kronecker_quiver(2).unwrap())
    }

    fn pa(p: u64) -> Arc<Representation> {
        Arc::new(Representation::projective_at(kronecker(), p, 0).unwrap())
    }

    fn r_lambda_1() -> Arc<Representation> {
        let x = TubeParam::Poly(FpPoly::parse(2, "x").unwrap());
        Arc::new(kronecker_regular(2, &x, 1).unwrap())
    }

    #[test]
    fn closure_of_full_and_zero_seeds() {
        let m = pa(2);
        let full = Subrep::full_sub(m.clone()).unwrap();
        let zero = Subrep::zero_sub(m.clone()).unwrap();
        let seeded_full = closure(&m, full.parts().to_vec()).unwrap();
        assert_eq!(seeded_full, full);
        let seeded_zero = closure(&m, zero.parts().to_vec()).unwrap();
        assert_eq!(seeded_zero, zero);
    }

    #[test]
    fn closure_forces_arrow_images() {
        // seeding the source line of P(a) forces everything
        let m = pa(2);
        let seed = vec![Subspace::full(2, 1).unwrap(), Subspace::zero(2, 2).unwrap()];
        let c = closure(&m, seed).unwrap();
        assert!(c.is_full());
    }

    #[test]
    fn closure_is_monotone_and_idempotent() {
        let m = r_lambda_1();
        let seed = vec![Subspace::full(2, 1).unwrap(), Subspace::zero(2, 1).unwrap()];
        let c = closure(&m, seed.clone()).unwrap();
        for (s, c_part) in seed.iter().zip(c.parts()) {
            assert!(c_part.contains(s).unwrap());
        }
        let c2 = closure(&m, c.parts().to_vec()).unwrap();
        assert_eq!(c, c2);
    }

    #[test]
    fn simple_module_has_two_subreps() {
        let q = kronecker();
        let s = Arc::new(Representation::simple_at(q, 2, 0).unwrap());
        let subs = all_subreps(&s, &caps()).unwrap();
        assert_eq!(subs.len(), 2);
    }

    #[test]
    fn semisimple_square_has_the_subspace_lattice() {
        let q = kronecker();
        let sb = Arc::new(Representation::simple_at(q, 2, 1).unwrap());
        let ss = crate::rep::direct_sum(&sb, &sb).unwrap().rep;
        let subs = all_subreps(&ss, &caps()).unwrap();
        assert_eq!(subs.len(), 5);
    }

    #[test]
    fn regular_line_has_three_subreps() {
        // source line alone is not closed, so only 0, the sink line, all
        let m = r_lambda_1();
        let subs = all_subreps(&m, &caps()).unwrap();
        assert_eq!(subs.len(), 3);
    }

    #[test]
    fn indec_proper_subreps_of_projective() {
        let m = pa(2);
        let subs = indecomposable_proper_subreps(&m, &caps()).unwrap();
        // exactly the three sink lines
        assert_eq!(subs.len(), 3);
        for s in &subs {
            assert_eq!(s.dims(), vec![0, 1]);
            let (rep, inc) = sub_as_rep(s).unwrap();
            assert_eq!(rep.length(), 1);
            assert!(inc.is_mono());
        }
    }

    #[test]
    fn indec_proper_subreps_of_simple_is_empty() {
        let q = kronecker();
        let s = Arc::new(Representation::simple_at(q, 2, 0).unwrap());
        assert!(indecomposable_proper_subreps(&s, &caps())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn regular_line_unique_indec_proper() {
        let m = r_lambda_1();
        let subs = indecomposable_proper_subreps(&m, &caps()).unwrap();
        assert_eq!(subs.len(), 1);
        let (rep, _) = sub_as_rep(&subs[0]).unwrap();
        assert_eq!(rep.dims(), &[0, 1]); // the sink simple
    }

    #[test]
    fn extraction_of_full_is_isomorphic() {
        let m = pa(2);
        let full = Subrep::full_sub(m.clone()).unwrap();
        let (rep, inc) = sub_as_rep(&full).unwrap();
        assert!(inc.is_mono() && inc.is_epi());
        assert_eq!(rep.length(), m.length());
    }

    #[test]
    fn quotient_by_zero_and_by_full() {
        let m = pa(2);
        let zero = Subrep::zero_sub(m.clone()).unwrap();
        let (q0, proj0) = quotient(&m, &zero).unwrap();
        assert_eq!(q0.length(), m.length());
        assert!(proj0.is_mono() && proj0.is_epi());
        let full = Subrep::full_sub(m.clone()).unwrap();
        let (qf, projf) = quotient(&m, &full).unwrap();
        assert!(qf.is_zero());
        assert!(projf.is_epi());
    }

    #[test]
    fn quotient_of_projective_by_socle_line() {
        let m = pa(2);
        let parts = vec![
            Subspace::zero(2, 1).unwrap(),
            Subspace::from_spanning(&FpMatrix::from_rows(2, &[vec![1, 0]]).unwrap()),
        ];
        let u = Subrep::new(m.clone(), parts).unwrap();
        let (q, proj) = quotient(&m, &u).unwrap();
        assert_eq!(q.dims(), &[1, 1]);
        assert!(proj.is_epi());
        // length additivity
        assert_eq!(m.length(), u.length() + q.length());
    }

    #[test]
    fn subrep_lengths_bounded_by_parent() {
        let m = pa(3);
        for s in all_subreps(&m, &caps()).unwrap() {
            assert!(s.length() <= m.length());
            assert_eq!(s.length() == m.length(), s.is_full());
        }
    }

    #[test]
    fn budget_error_is_explicit() {
        let mut tight = caps();
        tight.subrep_budget = 2;
        let m = pa(2);
        match all_subreps(&m, &tight) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn targeted_enumeration_matches_filtering() {
        let x = TubeParam::Poly(FpPoly::parse(2, "x").unwrap());
        let m = Arc::new(kronecker_regular(2, &x, 2).unwrap());
        let every = all_subreps(&m, &caps()).unwrap();
        for len in 0..=m.length() {
            let direct = subreps_with_length(&m, len, &caps()).unwrap();
            let filtered: Vec<_> = every.iter().filter(|s| s.length() == len).collect();
            assert_eq!(direct.len(), filtered.len());
        }
    }

    #[test]
    fn radical_and_loewy_of_projective() {
        let m = pa(2);
        let rad = radical(&m).unwrap();
        assert_eq!(rad.dims(), vec![0, 2]);
        assert_eq!(loewy_length(&m).unwrap(), 2);
        assert!(is_local(&m).unwrap());
    }

    #[test]
    fn semisimple_has_loewy_length_one() {
        let q = kronecker();
        let sa = Arc::new(Representation::simple_at(q.clone(), 2, 0).unwrap());
        let ss = crate::rep::direct_sum(&sa, &sa).unwrap().rep;
        assert!(radical(&ss).unwrap().is_zero());
        assert_eq!(loewy_length(&ss).unwrap(), 1);
        assert_eq!(loewy_length(&sa).unwrap(), 1);
        assert!(is_local(&sa).unwrap());
        assert!(!is_local(&ss).unwrap());
    }

    #[test]
    fn compose_and_restrict_round_trip() {
        let x = TubeParam::Poly(FpPoly::parse(2, "x").unwrap());
        let m = Arc::new(kronecker_regular(2, &x, 2).unwrap());
        for outer in all_subreps(&m, &caps()).unwrap() {
            if outer.is_zero() {
                continue;
            }
            let (outer_rep, _) = sub_as_rep(&outer).unwrap();
            for inner in all_subreps(&outer_rep, &caps()).unwrap() {
                let pushed = compose_subrep(&outer, &inner).unwrap();
                assert!(outer.contains(&pushed).unwrap());
                assert_eq!(pushed.length(), inner.length());
                let back = restrict_subrep(&outer, &pushed).unwrap();
                assert_eq!(back, inner);
            }
        }
    }
}
