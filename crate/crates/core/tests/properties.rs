//! Cross-module structural properties: hom additivity, measure
//! monotonicity, piling behaviour under containment and direct sums, and
//! filtration validity, on generated module families and random instances.

use std::sync::Arc;

use proptest::prelude::*;

use quivergr::caps::Caps;
use quivergr::endo::{is_indecomposable, is_iso};
use quivergr::families::{
    kronecker_quiver, kronecker_regular, subspace_quiver, tube_params_up_to, TubeParam,
};
use quivergr::gr::{embeds, gr_filtration, gr_measure, gr_submodules, is_gr_inclusion, is_piling};
use quivergr::matrix::FpMatrix;
use quivergr::measure::{measure_compare, measure_to_rational, GRMeasure};
use quivergr::morphism::hom_dim;
use quivergr::poly::FpPoly;
use quivergr::registry::IndecRegistry;
use quivergr::rep::{direct_sum, Representation};
use quivergr::subrep::{
    all_subreps, image_subrep, indecomposable_proper_subreps, loewy_length, radical,
    restrict_subrep, sub_as_rep, Subrep,
};
use quivergr::subspace::Subspace;
use quivergr::Quiver;

fn caps() -> Caps {
    Caps::default()
}

fn kronecker() -> Arc<Quiver> {
    Arc::new(kronecker_quiver(2).unwrap())
}

fn fresh_reg(q: &Arc<Quiver>, p: u64) -> IndecRegistry {
    IndecRegistry::new(q.clone(), p, caps()).unwrap()
}

/// Strategy: a random Kronecker representation over GF(p) with fiber
/// dimensions at most 2.
fn arb_kronecker_rep(p: u64) -> impl Strategy<Value = Representation> {
    (0usize..=2, 0usize..=2)
        .prop_flat_map(move |(da, db)| {
            let entries = proptest::collection::vec(0u64..p, 2 * da * db);
            (Just(da), Just(db), entries)
        })
        .prop_map(move |(da, db, entries)| {
            let q = kronecker();
            let x = FpMatrix::new(p, db, da, entries[..da * db].to_vec()).unwrap();
            let y = FpMatrix::new(p, db, da, entries[da * db..].to_vec()).unwrap();
            Representation::new(q, p, vec![da, db], vec![x, y]).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(rows in 1usize..4, cols in 1usize..4, seed in proptest::collection::vec(0u64..5, 16)) {
        for p in [2u64, 3, 5] {
            let entries: Vec<u64> = seed.iter().take(rows * cols).map(|&e| e % p).collect();
            if entries.len() < rows * cols { return Ok(()); }
            let m = FpMatrix::new(p, rows, cols, entries).unwrap();
            let r1 = m.rref();
            let r2 = r1.matrix.rref();
            prop_assert_eq!(&r1.matrix, &r2.matrix);
            prop_assert_eq!(r1.pivots, r2.pivots);
            // rank-nullity
            prop_assert_eq!(m.rank() + m.kernel_matrix().rows(), cols);
        }
    }

    #[test]
    fn modular_law_for_dimensions(seed in proptest::collection::vec(0u64..3, 24)) {
        let p = 3u64;
        let n = 3usize;
        let mk = |chunk: &[u64]| {
            Subspace::from_spanning(&FpMatrix::new(p, 2, n, chunk.to_vec()).unwrap())
        };
        let u = mk(&seed[..6]);
        let v = mk(&seed[6..12]);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
        prop_assert!(s.contains(&u).unwrap() && s.contains(&v).unwrap());
        prop_assert!(u.contains(&i).unwrap() && v.contains(&i).unwrap());
    }

    #[test]
    fn measure_order_matches_rationals(xs in 0u32..4096, ys in 0u32..4096) {
        let to_measure = |mask: u32| {
            GRMeasure::new((0..12).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()).unwrap()
        };
        let (a, b) = (to_measure(xs), to_measure(ys));
        let comb = measure_compare(&a, &b);
        let rat = measure_to_rational(&a).cmp(&measure_to_rational(&b));
        prop_assert_eq!(comb, rat);
    }

    #[test]
    fn hom_dimension_is_additive(m in arb_kronecker_rep(2), n in arb_kronecker_rep(2), x in arb_kronecker_rep(2)) {
        let m = Arc::new(m);
        let n = Arc::new(n);
        let x = Arc::new(x);
        let sum = direct_sum(&m, &n).unwrap().rep;
        prop_assert_eq!(
            hom_dim(&sum, &x).unwrap(),
            hom_dim(&m, &x).unwrap() + hom_dim(&n, &x).unwrap()
        );
        prop_assert_eq!(
            hom_dim(&x, &sum).unwrap(),
            hom_dim(&x, &m).unwrap() + hom_dim(&x, &n).unwrap()
        );
    }

    #[test]
    fn direct_sums_are_decomposable(m in arb_kronecker_rep(2), n in arb_kronecker_rep(2)) {
        if m.is_zero() || n.is_zero() { return Ok(()); }
        let m = Arc::new(m);
        let n = Arc::new(n);
        let sum = direct_sum(&m, &n).unwrap().rep;
        prop_assert!(!is_indecomposable(&sum, &caps()).unwrap());
    }

    #[test]
    fn subrep_quotient_length_additivity(m in arb_kronecker_rep(3)) {
        let m = Arc::new(m);
        for s in all_subreps(&m, &caps()).unwrap() {
            let (q, _) = quivergr::subrep::quotient(&m, &s).unwrap();
            prop_assert_eq!(m.length(), s.length() + q.length());
        }
    }
}

#[test]
fn projectives_injectives_simples_are_indecomposable() {
    for quiver in [kronecker(), Arc::new(subspace_quiver(4).unwrap())] {
        for p in [2u64, 3] {
            for v in 0..quiver.vertex_count() {
                let pv = Arc::new(Representation::projective_at(quiver.clone(), p, v).unwrap());
                let iv = Arc::new(Representation::injective_at(quiver.clone(), p, v).unwrap());
                let sv = Arc::new(Representation::simple_at(quiver.clone(), p, v).unwrap());
                assert!(is_indecomposable(&pv, &caps()).unwrap());
                assert!(is_indecomposable(&iv, &caps()).unwrap());
                assert!(is_indecomposable(&sv, &caps()).unwrap());
            }
        }
    }
}

#[test]
fn radical_drops_loewy_length_by_one() {
    for quiver in [kronecker(), Arc::new(subspace_quiver(3).unwrap())] {
        for v in 0..quiver.vertex_count() {
            let pv = Arc::new(Representation::projective_at(quiver.clone(), 2, v).unwrap());
            if pv.length() == 1 {
                continue;
            }
            let rad = radical(&pv).unwrap();
            let (rad_rep, _) = sub_as_rep(&rad).unwrap();
            assert_eq!(
                loewy_length(&Arc::new(rad_rep.as_ref().clone())).unwrap(),
                loewy_length(&pv).unwrap() - 1
            );
        }
    }
}

#[test]
fn measure_monotone_over_submodules() {
    let checked = quivergr::verify::check_measure_monotonicity(2, 5, &caps()).unwrap();
    assert!(checked > 100, "checked only {checked} pairs");
}

#[test]
fn gr_submodules_share_measure_and_length() {
    let q = kronecker();
    let mut reg = fresh_reg(&q, 2);
    for y in [
        Arc::new(Representation::projective_at(q.clone(), 2, 0).unwrap()),
        Arc::new(kronecker_regular(2, &TubeParam::Infinity, 2).unwrap()),
        Arc::new(kronecker_preinjective(2)),
    ] {
        let mu_y = gr_measure(&y, &mut reg).unwrap();
        assert_eq!(mu_y.max_element(), Some(y.length()));
        let subs = gr_submodules(&y, &mut reg).unwrap();
        let expected = mu_y.without_top();
        for u in &subs {
            assert_eq!(u.length(), expected.max_element().unwrap());
            let (urep, _) = sub_as_rep(u).unwrap();
            assert_eq!(gr_measure(&urep, &mut reg).unwrap(), expected);
        }
    }
}

fn kronecker_preinjective(p: u64) -> Representation {
    quivergr::families::kronecker_preinjective(p, 2).unwrap()
}

#[test]
fn filtrations_validate() {
    let q = kronecker();
    let mut reg = fresh_reg(&q, 2);
    let modules = [
        Arc::new(Representation::projective_at(q.clone(), 2, 0).unwrap()),
        Arc::new(
            kronecker_regular(2, &TubeParam::Poly(FpPoly::parse(2, "x").unwrap()), 3).unwrap(),
        ),
    ];
    for m in modules {
        let chain = gr_filtration(&m, &mut reg).unwrap();
        assert_eq!(chain.first().unwrap().length(), 1, "first term simple");
        assert!(chain.last().unwrap().is_full());
        let lengths: Vec<usize> = chain.iter().map(Subrep::length).collect();
        let mu = gr_measure(&m, &mut reg).unwrap();
        assert_eq!(
            lengths,
            mu.elements().to_vec(),
            "chain lengths are the measure"
        );
        for w in chain.windows(2) {
            assert!(w[1].contains(&w[0]).unwrap());
            // each step is a Gabriel-Roiter inclusion of the extracted term
            let inner = restrict_subrep(&w[1], &w[0]).unwrap();
            assert!(is_gr_inclusion(&inner, &mut reg).unwrap());
        }
        // every term of a filtration is piling in the parent
        for term in chain.iter().filter(|t| !t.is_full()) {
            assert!(is_piling(term, &mut reg).unwrap());
        }
    }
    // a simple module has the one-term chain
    let s = Arc::new(Representation::simple_at(q, 2, 0).unwrap());
    let chain = gr_filtration(&s, &mut reg).unwrap();
    assert_eq!(chain.len(), 1);
    assert!(chain[0].is_full());
}

#[test]
fn interval_submodule_from_the_filtration() {
    // the third preprojective has measure {1,3,5}; for a = 3 the next
    // filtration term has length 5, inside [4, 27]
    let q = kronecker();
    let mut reg = fresh_reg(&q, 2);
    let p3 = Arc::new(quivergr::families::kronecker_preprojective(2, 3).unwrap());
    let mu = gr_measure(&p3, &mut reg).unwrap();
    assert_eq!(mu.elements(), &[1, 3, 5]);
    let found = quivergr::gr::submodule_interval_check(&p3, 3, &mut reg).unwrap();
    assert_eq!(found.length(), 5);
    let found = quivergr::gr::submodule_interval_check(&p3, 1, &mut reg).unwrap();
    assert!(found.length() > 1 && found.length() <= 9);
}

/// Containment behaviour of piling: piling persists down to intermediate
/// submodules, and composes up through them.
#[test]
fn piling_restriction_and_transitivity() {
    let q = kronecker();
    let mut reg = fresh_reg(&q, 2);
    let w = Arc::new(
        kronecker_regular(2, &TubeParam::Poly(FpPoly::parse(2, "x").unwrap()), 2).unwrap(),
    );
    let mut pairs = 0;
    for v in all_subreps(&w, &caps()).unwrap() {
        if v.is_zero() {
            continue;
        }
        let (vrep, _) = sub_as_rep(&v).unwrap();
        let v_indec = is_indecomposable(&vrep, &caps()).unwrap();
        for u in indecomposable_proper_subreps(&vrep, &caps()).unwrap() {
            // u lives in rep(v); push it into w
            let u_in_w = quivergr::subrep::compose_subrep(&v, &u).unwrap();
            if is_piling(&u_in_w, &mut reg).unwrap() {
                // restriction: piling in w implies piling in v
                assert!(
                    is_piling(&u, &mut reg).unwrap(),
                    "restriction fails for |U|={} inside |V|={}",
                    u.length(),
                    v.length()
                );
            }
            if v_indec && !v.is_full() {
                let v_piling = is_piling(&v, &mut reg).unwrap();
                if v_piling && is_piling(&u, &mut reg).unwrap() {
                    // transitivity: piling in v and v piling in w
                    assert!(
                        is_piling(&u_in_w, &mut reg).unwrap(),
                        "transitivity fails for |U|={} inside |V|={}",
                        u.length(),
                        v.length()
                    );
                }
            }
            pairs += 1;
        }
    }
    assert!(pairs > 0);
}

/// The strong direct-sum property: a piling submodule of X + Y projects
/// monomorphically onto at least one summand, with piling image.
#[test]
fn piling_in_direct_sums_projects() {
    let q = kronecker();
    let mut reg = fresh_reg(&q, 2);
    let x = Arc::new(
        kronecker_regular(2, &TubeParam::Poly(FpPoly::parse(2, "x").unwrap()), 1).unwrap(),
    );
    let y = Arc::new(Representation::projective_at(q.clone(), 2, 0).unwrap());
    let ds = direct_sum(&x, &y).unwrap();
    let sum = ds.rep.clone();
    let mut instances = 0;
    for u in indecomposable_proper_subreps(&sum, &caps()).unwrap() {
        if !is_piling(&u, &mut reg).unwrap() {
            continue;
        }
        let to_x = image_subrep(&ds.project_left, &u).unwrap();
        let to_y = image_subrep(&ds.project_right, &u).unwrap();
        let mono_x = to_x.length() == u.length();
        let mono_y = to_y.length() == u.length();
        let ok_x = mono_x && is_piling(&to_x, &mut reg).unwrap();
        let ok_y = mono_y && is_piling(&to_y, &mut reg).unwrap();
        assert!(
            ok_x || ok_y,
            "no piling projection for |U|={} in X+Y",
            u.length()
        );
        instances += 1;
    }
    assert!(instances > 0);
}

/// Short piling submodules of a tube module embed into the boundary.
#[test]
fn short_piling_submodules_embed_into_the_boundary() {
    for p in [2u64, 3] {
        for param in tube_params_up_to(p, 4).unwrap() {
            let s = 2 * param.degree();
            let boundary = Arc::new(kronecker_regular(p, &param, 1).unwrap());
            let m2 = Arc::new(kronecker_regular(p, &param, 2).unwrap());
            let q = m2.quiver().clone();
            let mut reg = fresh_reg(&q, p);
            for u in indecomposable_proper_subreps(&m2, &caps()).unwrap() {
                if u.length() > s || !is_piling(&u, &mut reg).unwrap() {
                    continue;
                }
                let (urep, _) = sub_as_rep(&u).unwrap();
                assert!(
                    embeds(&urep, &boundary, &caps()).unwrap(),
                    "piling |U|={} does not embed into the boundary (p={p}, {param})",
                    u.length()
                );
            }
        }
    }
}

/// The two measure routes agree: the defining subrepresentation recursion
/// computed against a fresh registry matches the embedding route computed
/// over the complete registry, for every class in the inventory.
#[test]
fn measure_routes_agree_on_complete_registries() {
    use quivergr::gr::compute_all_measures;
    use quivergr::registry::{register_indecomposables, RegisterMode};

    for (p, bound) in [(2u64, 6usize), (3, 4)] {
        let q = kronecker();
        let inventory = quivergr::families::kronecker_indec_inventory(p, bound).unwrap();
        let mut complete =
            register_indecomposables(&q, p, bound, RegisterMode::Family(inventory), &caps())
                .unwrap();
        compute_all_measures(&mut complete).unwrap();
        let mut scratch = fresh_reg(&q, p);
        for i in 0..complete.len() {
            let rep = complete.entry(i).rep.clone();
            let by_embedding = complete.measure(i).unwrap().clone();
            let by_recursion = gr_measure(&rep, &mut scratch).unwrap();
            assert_eq!(
                by_recursion,
                by_embedding,
                "routes disagree for dims {:?} over GF({p})",
                rep.dims()
            );
        }
    }
}

/// On the quiver `a -> b`, `b => c`, the canonical inclusion of the
/// (1,1,1)-module into its indecomposable self-extension is a
/// monomorphism that is certified reducible once the registry reaches
/// length 5, so the extension is not built from an irreducible embedding.
#[test]
fn self_extension_inclusion_is_reducible() {
    use quivergr::gr::{is_irreducible_bounded, IrreducibilityVerdict};
    use quivergr::morphism::Morphism;
    use quivergr::registry::{register_indecomposables, RegisterMode};

    let q = Arc::new(
        Quiver::new(
            vec!["a", "b", "c"],
            vec![("al", "a", "b"), ("be", "b", "c"), ("ga", "b", "c")],
        )
        .unwrap(),
    );
    let one = |v| FpMatrix::new(2, 1, 1, vec![v]).unwrap();
    let m = Arc::new(
        Representation::new(q.clone(), 2, vec![1, 1, 1], vec![one(1), one(1), one(0)]).unwrap(),
    );
    assert!(is_indecomposable(&m, &caps()).unwrap());
    let m2 = Arc::new(
        Representation::new(
            q.clone(),
            2,
            vec![2, 2, 2],
            vec![
                FpMatrix::from_rows(2, &[vec![1, 0], vec![0, 1]]).unwrap(),
                FpMatrix::from_rows(2, &[vec![1, 0], vec![0, 1]]).unwrap(),
                FpMatrix::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap(),
            ],
        )
        .unwrap(),
    );
    assert!(is_indecomposable(&m2, &caps()).unwrap());
    let block = FpMatrix::from_rows(2, &[vec![1], vec![0]]).unwrap();
    let inclusion = Morphism::new(
        m.clone(),
        m2.clone(),
        vec![block.clone(), block.clone(), block],
    )
    .unwrap();
    assert!(inclusion.is_mono());
    let mut reg = register_indecomposables(&q, 2, 5, RegisterMode::Exhaustive, &caps()).unwrap();
    assert_eq!(
        is_irreducible_bounded(&inclusion, &mut reg, 5).unwrap(),
        IrreducibilityVerdict::Reducible
    );
}

/// Both tube levels and shifted parameters give pairwise distinct classes.
#[test]
fn inventory_members_are_pairwise_distinct() {
    let inventory = quivergr::families::kronecker_indec_inventory(2, 5).unwrap();
    let reps: Vec<Arc<Representation>> = inventory.into_iter().map(Arc::new).collect();
    for (i, a) in reps.iter().enumerate() {
        for b in reps.iter().skip(i + 1) {
            assert!(is_iso(a, b, &caps()).unwrap().is_none());
        }
    }
}
