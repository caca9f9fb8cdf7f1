//! Verification suites: each suite checks one structural statement across
//! a whole family of computed instances and reports a machine-readable
//! result.
//!
//! The suites double as the acceptance battery of the command line tool.
//! Registries for the heavier suites are shared through a process-local
//! cache keyed by (prime, length bound), so independent suites do not
//! rebuild the same classification.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::BigRational;

use crate::caps::Caps;
use crate::endo::is_iso;
use crate::error::{Error, Result};
use crate::families::{
    bimodule_preprojective_dims_symbolic, four_subspace_tube_module, kronecker_indec_inventory,
    kronecker_quiver, kronecker_regular, preprojective_dim_sequence, subspace_quiver,
    tube_params_up_to, BimoduleCase, DimPoly, TubeParam,
};
use crate::gr::{
    algebra_bounds, all_gr_filtrations, check_gr_bound, complement_length_check,
    compute_all_measures, gr_measure, gr_submodules, is_piling, is_piling_oracle,
    sing_additivity_check, takeoff_prefix,
};
use crate::measure::{measure_compare, measure_to_rational, GRMeasure};
use crate::registry::{register_indecomposables, IndecRegistry, RegisterMode};
use crate::rep::Representation;
use crate::subrep::{all_subreps, sub_as_rep};

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub instances: usize,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub caps: Caps,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            caps: Caps::default(),
            seed: 0x5eed_c0de,
        }
    }
}

pub const SUITES: &[&str] = &[
    "measure-order",
    "piling",
    "gr-bound",
    "takeoff",
    "dim-tables",
    "tube-gr",
    "tube-filtration",
    "four-subspace",
    "pruefer",
    "coxeter",
    "preinjective-exclusion",
    "complement-bound",
    "classification",
    "sing-additivity",
];

pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<SuiteReport> {
    match name {
        "measure-order" => measure_order_suite(config),
        "piling" => piling_suite(config),
        "gr-bound" => gr_bound_suite(config),
        "takeoff" => takeoff_suite(config),
        "dim-tables" => dim_tables_suite(),
        "tube-gr" => tube_gr_suite(config),
        "tube-filtration" => tube_filtration_suite(config),
        "four-subspace" => four_subspace_suite(config),
        "pruefer" => pruefer_suite(config),
        "coxeter" => coxeter_suite(),
        "preinjective-exclusion" => preinjective_exclusion_suite(config),
        "complement-bound" => complement_bound_suite(config),
        "classification" => classification_suite(config),
        "sing-additivity" => sing_additivity_suite(config),
        other => Err(Error::InvalidParameter(format!("unknown suite {other}"))),
    }
}

fn report(name: &'static str, passed: bool, instances: usize, detail: String) -> SuiteReport {
    SuiteReport {
        name,
        passed,
        instances,
        detail,
    }
}

// ---------------------------------------------------------------------
// shared registries
// ---------------------------------------------------------------------

type RegistryCache = Mutex<HashMap<(u64, usize), IndecRegistry>>;

fn registry_cache() -> &'static RegistryCache {
    static CACHE: OnceLock<RegistryCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A Kronecker registry complete up to `max_length`, built from the family
/// inventory, with all measures computed. Cached per (p, bound) when the
/// caps are the defaults.
pub fn kronecker_registry(p: u64, max_length: usize, caps: &Caps) -> Result<IndecRegistry> {
    let cacheable = *caps == Caps::default();
    if cacheable {
        if let Some(reg) = registry_cache().lock().unwrap().get(&(p, max_length)) {
            return Ok(reg.clone());
        }
    }
    let quiver = Arc::new(kronecker_quiver(2)?);
    let inventory = kronecker_indec_inventory(p, max_length)?;
    let mut reg = register_indecomposables(
        &quiver,
        p,
        max_length,
        RegisterMode::Family(inventory),
        caps,
    )?;
    compute_all_measures(&mut reg)?;
    if cacheable {
        registry_cache()
            .lock()
            .unwrap()
            .insert((p, max_length), reg.clone());
    }
    Ok(reg)
}

// ---------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------

/// The combinatorial order on measures agrees with the exact rational
/// order, over every pair of subsets of {1..12}.
fn measure_order_suite(_config: &VerifyConfig) -> Result<SuiteReport> {
    let universe = 12usize;
    let subsets: Vec<GRMeasure> = (0u32..1 << universe)
        .map(|mask| {
            let elements: Vec<usize> = (0..universe)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            GRMeasure::new(elements)
        })
        .collect::<Result<Vec<_>>>()?;
    let rationals: Vec<BigRational> = subsets.iter().map(measure_to_rational).collect();
    let mut checked = 0usize;
    for i in 0..subsets.len() {
        for j in 0..subsets.len() {
            let comb = measure_compare(&subsets[i], &subsets[j]);
            let rat = rationals[i].cmp(&rationals[j]);
            if comb != rat {
                return Ok(report(
                    "measure-order",
                    false,
                    checked,
                    format!(
                        "disagreement at {} vs {}: combinatorial {comb:?}, rational {rat:?}",
                        subsets[i], subsets[j]
                    ),
                ));
            }
            checked += 1;
        }
    }
    Ok(report(
        "measure-order",
        true,
        checked,
        format!("all {checked} ordered pairs of subsets of {{1..{universe}}} agree"),
    ))
}

/// The prefix criterion for piling agrees with the brute-force definition
/// for every indecomposable subrepresentation over the GF(2) Kronecker
/// registry up to length 6.
fn piling_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut reg = kronecker_registry(2, 6, &config.caps)?;
    let parents: Vec<Arc<Representation>> = reg.entries().iter().map(|e| e.rep.clone()).collect();
    let mut pairs = 0usize;
    for y in parents {
        // every indecomposable subrepresentation, the module itself included
        let mut subs = crate::subrep::indecomposable_proper_subreps(&y, &config.caps)?;
        subs.push(crate::subrep::Subrep::full_sub(y.clone())?);
        for u in subs {
            let fast = is_piling(&u, &mut reg)?;
            let slow = is_piling_oracle(&u, &mut reg)?;
            if fast != slow {
                return Ok(report(
                    "piling",
                    false,
                    pairs,
                    format!(
                        "disagreement on a length-{} submodule of a length-{} module",
                        u.length(),
                        y.length()
                    ),
                ));
            }
            pairs += 1;
        }
    }
    Ok(report(
        "piling",
        true,
        pairs,
        format!("prefix test and oracle agree on {pairs} submodule pairs"),
    ))
}

/// Every Gabriel-Roiter inclusion found in the GF(2) Kronecker registry up
/// to length 7 satisfies the length bound |Y| <= pq |X| with pq = 9.
fn gr_bound_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut reg = kronecker_registry(2, 7, &config.caps)?;
    let bounds = algebra_bounds(reg.quiver(), 2)?;
    if bounds.product() != 9 {
        return Ok(report(
            "gr-bound",
            false,
            0,
            format!("expected pq = 9, computed {}", bounds.product()),
        ));
    }
    let parents: Vec<Arc<Representation>> = reg
        .entries()
        .iter()
        .filter(|e| e.length > 1)
        .map(|e| e.rep.clone())
        .collect();
    let mut inclusions = 0usize;
    for y in parents {
        for u in gr_submodules(&y, &mut reg)? {
            if !check_gr_bound(&u, &bounds) {
                return Ok(report(
                    "gr-bound",
                    false,
                    inclusions,
                    format!(
                        "violation: |Y| = {} > 9 * {} = |X| * pq",
                        y.length(),
                        u.length()
                    ),
                ));
            }
            inclusions += 1;
        }
    }
    Ok(report(
        "gr-bound",
        true,
        inclusions,
        format!("all {inclusions} Gabriel-Roiter inclusions satisfy |Y| <= 9 |X|"),
    ))
}

/// The certified take-off prefix of the GF(2) Kronecker algebra: {1} on
/// both simples, then {1,3} and {1,3,5} attained only by the second and
/// third preprojectives.
fn takeoff_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut reg = kronecker_registry(2, 14, &config.caps)?;
    let steps = takeoff_prefix(&mut reg, 3)?;
    let expect = [(vec![1], 2usize), (vec![1, 3], 1), (vec![1, 3, 5], 1)];
    let mut detail = String::new();
    for (step, (elements, count)) in steps.iter().zip(&expect) {
        if step.measure.elements() != elements.as_slice() || step.classes.len() != *count {
            return Ok(report(
                "takeoff",
                false,
                steps.len(),
                format!(
                    "expected measure {elements:?} with {count} classes, got {} with {}",
                    step.measure,
                    step.classes.len()
                ),
            ));
        }
        let _ = write!(
            detail,
            "{} ({} classes); ",
            step.measure,
            step.classes.len()
        );
    }
    // the first step consists of the simples; the later ones of the
    // preprojectives with quiver-order dimensions (1,2) and (2,3)
    for &i in &steps[0].classes {
        if reg.entry(i).length != 1 {
            return Ok(report(
                "takeoff",
                false,
                3,
                "a non-simple attains {1}".into(),
            ));
        }
    }
    let p2 = reg.entry(steps[1].classes[0]).dim_vec.clone();
    let p3 = reg.entry(steps[2].classes[0]).dim_vec.clone();
    if p2 != vec![1, 2] || p3 != vec![2, 3] {
        return Ok(report(
            "takeoff",
            false,
            3,
            format!("attaining classes have dimensions {p2:?} and {p3:?}"),
        ));
    }
    Ok(report(
        "takeoff",
        true,
        3,
        format!("certified take-off prefix: {detail}"),
    ))
}

/// The symbolic preprojective rows of all three bimodule cases.
fn dim_tables_suite() -> Result<SuiteReport> {
    let a = DimPoly::var_a;
    let b = DimPoly::var_b;
    let c = DimPoly::constant;
    let rows: Vec<(BimoduleCase, usize, DimPoly, DimPoly)> = vec![
        (BimoduleCase::General, 1, c(1), DimPoly::zero()),
        (BimoduleCase::General, 2, a(), c(1)),
        (BimoduleCase::General, 3, a().mul(&b()).sub(&c(1)), b()),
        (
            BimoduleCase::General,
            4,
            a().mul(&a()).mul(&b()).sub(&a().mul(&c(2))),
            a().mul(&b()).sub(&c(1)),
        ),
        (BimoduleCase::LeftExtension, 1, c(1), DimPoly::zero()),
        (BimoduleCase::LeftExtension, 2, a(), c(1)),
        (BimoduleCase::LeftExtension, 3, a().sub(&c(1)), c(1)),
        (
            BimoduleCase::LeftExtension,
            4,
            a().mul(&a()).sub(&a().mul(&c(2))),
            a().sub(&c(1)),
        ),
        (BimoduleCase::RightExtension, 1, c(1), DimPoly::zero()),
        (BimoduleCase::RightExtension, 2, c(1), c(1)),
        (BimoduleCase::RightExtension, 3, b().sub(&c(1)), b()),
        (
            BimoduleCase::RightExtension,
            4,
            b().sub(&c(2)),
            b().sub(&c(1)),
        ),
    ];
    let total = rows.len();
    for (case, k, want_x, want_y) in rows {
        let (x, y) = bimodule_preprojective_dims_symbolic(case, k)?;
        if x != want_x || y != want_y {
            return Ok(report(
                "dim-tables",
                false,
                total,
                format!("case {case:?} row {k}: got ({x}, {y}), want ({want_x}, {want_y})"),
            ));
        }
    }
    Ok(report(
        "dim-tables",
        true,
        total,
        format!("all {total} printed preprojective rows reproduced symbolically"),
    ))
}

/// Tube Gabriel-Roiter submodules: for p in {2,3}, every parameter with
/// boundary length at most 4 and t in {2,3}, the level-t module has a
/// unique Gabriel-Roiter submodule and it is isomorphic to level t-1.
fn tube_gr_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut instances = 0usize;
    for p in [2u64, 3] {
        for param in tube_params_up_to(p, 4)? {
            let s = 2 * param.degree();
            for t in [2usize, 3] {
                let level = Arc::new(kronecker_regular(p, &param, t)?);
                let below = Arc::new(kronecker_regular(p, &param, t - 1)?);
                let mut reg = kronecker_registry(p, s * t, &config.caps)?;
                let subs = gr_submodules(&level, &mut reg)?;
                if subs.len() != 1 {
                    return Ok(report(
                        "tube-gr",
                        false,
                        instances,
                        format!(
                            "p={p} param={param} t={t}: {} Gabriel-Roiter submodules",
                            subs.len()
                        ),
                    ));
                }
                let (srep, _) = sub_as_rep(&subs[0])?;
                if is_iso(&srep, &below, &config.caps)?.is_none() {
                    return Ok(report(
                        "tube-gr",
                        false,
                        instances,
                        format!("p={p} param={param} t={t}: submodule is not level t-1"),
                    ));
                }
                instances += 1;
            }
        }
    }
    Ok(report(
        "tube-gr",
        true,
        instances,
        format!("unique level-(t-1) Gabriel-Roiter submodule in all {instances} tube instances"),
    ))
}

/// Every Gabriel-Roiter filtration of a tube module of level t <= 3
/// contains a term isomorphic to the boundary.
fn tube_filtration_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut chains_checked = 0usize;
    for p in [2u64, 3] {
        for param in tube_params_up_to(p, 4)? {
            let s = 2 * param.degree();
            let boundary = Arc::new(kronecker_regular(p, &param, 1)?);
            for t in [1usize, 2, 3] {
                let level = Arc::new(kronecker_regular(p, &param, t)?);
                let mut reg = kronecker_registry(p, s * t, &config.caps)?;
                for chain in all_gr_filtrations(&level, &mut reg)? {
                    let mut found = false;
                    for term in &chain {
                        let (trep, _) = sub_as_rep(term)?;
                        if trep.dims() == boundary.dims()
                            && is_iso(&trep, &boundary, &config.caps)?.is_some()
                        {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Ok(report(
                            "tube-filtration",
                            false,
                            chains_checked,
                            format!("p={p} param={param} t={t}: a filtration avoids the boundary"),
                        ));
                    }
                    chains_checked += 1;
                }
            }
        }
    }
    Ok(report(
        "tube-filtration",
        true,
        chains_checked,
        format!("all {chains_checked} filtrations contain a boundary term"),
    ))
}

/// The four-subspace tube module of length 6 over GF(3) has exactly four
/// Gabriel-Roiter submodules, all of length 5.
fn four_subspace_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let m = Arc::new(four_subspace_tube_module(3)?);
    let quiver = m.quiver().clone();
    let mut reg = IndecRegistry::new(quiver, 3, config.caps)?;
    let subs = gr_submodules(&m, &mut reg)?;
    let all_len5 = subs.iter().all(|s| s.length() == 5);
    let passed = subs.len() == 4 && all_len5;
    Ok(report(
        "four-subspace",
        passed,
        subs.len(),
        if passed {
            "exactly 4 Gabriel-Roiter submodules, each of length 5".into()
        } else {
            format!(
                "got {} submodules with lengths {:?}",
                subs.len(),
                subs.iter()
                    .map(crate::subrep::Subrep::length)
                    .collect::<Vec<_>>()
            )
        },
    ))
}

/// The limit measure of the GF(2) tube at the parameter x is exactly 5/6.
fn pruefer_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let param = TubeParam::Poly(crate::poly::FpPoly::parse(2, "x")?);
    let boundary = Arc::new(kronecker_regular(2, &param, 1)?);
    let quiver = boundary.quiver().clone();
    let mut reg = IndecRegistry::new(quiver, 2, config.caps)?;
    let mu1 = gr_measure(&boundary, &mut reg)?;
    if mu1.elements() != [1, 2] {
        return Ok(report(
            "pruefer",
            false,
            1,
            format!("boundary measure is {mu1}, expected {{1,2}}"),
        ));
    }
    let value = crate::families::pruefer_measure(&mu1, 2)?;
    let expect = BigRational::new(BigInt::from(5), BigInt::from(6));
    let passed = value == expect;
    Ok(report(
        "pruefer",
        passed,
        1,
        format!("limit measure = {value}"),
    ))
}

/// Four-subspace preprojective lengths 6t+1 for t = 1..5 by the Coxeter
/// recursion.
fn coxeter_suite() -> Result<SuiteReport> {
    let quiver = Arc::new(subspace_quiver(4)?);
    let sink = quiver.vertex_index("c").expect("sink exists");
    let seq = preprojective_dim_sequence(&quiver, sink, 5, 2)?;
    if seq.len() != 6 {
        return Ok(report(
            "coxeter",
            false,
            seq.len(),
            "orbit left the preprojective range early".into(),
        ));
    }
    for (t, d) in seq.iter().enumerate() {
        let total: BigInt = d.iter().sum();
        if total != BigInt::from(6 * t + 1) {
            return Ok(report(
                "coxeter",
                false,
                t,
                format!("total length at t={t} is {total}, expected {}", 6 * t + 1),
            ));
        }
    }
    Ok(report(
        "coxeter",
        true,
        5,
        "preprojective totals 7, 13, 19, 25, 31 for t = 1..5".into(),
    ))
}

/// No preinjective Kronecker module occurs as a Gabriel-Roiter submodule
/// in the registry up to length 7.
fn preinjective_exclusion_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut reg = kronecker_registry(2, 7, &config.caps)?;
    // preinjectives have quiver-order dimensions (k, k-1)
    let preinjectives: Vec<Arc<Representation>> = (1..=4)
        .map(|k| crate::families::kronecker_preinjective(2, k).map(Arc::new))
        .collect::<Result<Vec<_>>>()?;
    let parents: Vec<Arc<Representation>> = reg
        .entries()
        .iter()
        .filter(|e| e.length > 1)
        .map(|e| e.rep.clone())
        .collect();
    let mut inclusions = 0usize;
    for y in parents {
        for u in gr_submodules(&y, &mut reg)? {
            let (urep, _) = sub_as_rep(&u)?;
            for pi in &preinjectives {
                if urep.dims() == pi.dims() && is_iso(&urep, pi, &config.caps)?.is_some() {
                    return Ok(report(
                        "preinjective-exclusion",
                        false,
                        inclusions,
                        format!(
                            "a preinjective of length {} is a Gabriel-Roiter submodule",
                            pi.length()
                        ),
                    ));
                }
            }
            inclusions += 1;
        }
    }
    Ok(report(
        "preinjective-exclusion",
        true,
        inclusions,
        format!("no preinjective among {inclusions} Gabriel-Roiter submodules"),
    ))
}

/// Every subrepresentation Y' with X + Y' = Y is longer than Y/X, for all
/// Gabriel-Roiter inclusions in the registry up to length 6.
fn complement_bound_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut reg = kronecker_registry(2, 6, &config.caps)?;
    let parents: Vec<Arc<Representation>> = reg
        .entries()
        .iter()
        .filter(|e| e.length > 1)
        .map(|e| e.rep.clone())
        .collect();
    let mut inclusions = 0usize;
    for y in parents {
        for u in gr_submodules(&y, &mut reg)? {
            if !complement_length_check(&u, &config.caps)? {
                return Ok(report(
                    "complement-bound",
                    false,
                    inclusions,
                    format!(
                        "violation for an inclusion of length {} in length {}",
                        u.length(),
                        y.length()
                    ),
                ));
            }
            inclusions += 1;
        }
    }
    Ok(report(
        "complement-bound",
        true,
        inclusions,
        format!("complement length bound holds for all {inclusions} inclusions"),
    ))
}

/// Exhaustive matrix-tuple classification over GF(2) up to length 4 agrees
/// with the family inventory, class by class.
fn classification_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let quiver = Arc::new(kronecker_quiver(2)?);
    let exhaustive =
        register_indecomposables(&quiver, 2, 4, RegisterMode::Exhaustive, &config.caps)?;
    let inventory = kronecker_indec_inventory(2, 4)?;
    if exhaustive.len() != inventory.len() {
        return Ok(report(
            "classification",
            false,
            exhaustive.len(),
            format!(
                "exhaustive found {} classes, inventory lists {}",
                exhaustive.len(),
                inventory.len()
            ),
        ));
    }
    // every inventory member matches exactly one exhaustive class
    let mut matched = vec![false; exhaustive.len()];
    for rep in inventory {
        let rep = Arc::new(rep);
        match exhaustive.find_class(&rep)? {
            Some(i) if !matched[i] => matched[i] = true,
            Some(_) => {
                return Ok(report(
                    "classification",
                    false,
                    exhaustive.len(),
                    "two inventory members hit the same class".into(),
                ))
            }
            None => {
                return Ok(report(
                    "classification",
                    false,
                    exhaustive.len(),
                    format!(
                        "inventory member with dimensions {:?} unmatched",
                        rep.dims()
                    ),
                ))
            }
        }
    }
    let count = exhaustive.len();
    Ok(report(
        "classification",
        true,
        count,
        format!("brute-force classification and inventory agree on {count} classes"),
    ))
}

/// The non-monomorphisms in Hom(X, Y) are closed under addition for every
/// Gabriel-Roiter inclusion in the GF(2) registry with dim Hom at most 12.
fn sing_additivity_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut reg = kronecker_registry(2, 7, &config.caps)?;
    let parents: Vec<Arc<Representation>> = reg
        .entries()
        .iter()
        .filter(|e| e.length > 1)
        .map(|e| e.rep.clone())
        .collect();
    let mut checked = 0usize;
    for y in parents {
        for u in gr_submodules(&y, &mut reg)? {
            let (x, _) = sub_as_rep(&u)?;
            let dim = crate::morphism::hom_dim(&x, &y)?;
            if dim > 12 {
                continue;
            }
            if !sing_additivity_check(&u, &config.caps)? {
                return Ok(report(
                    "sing-additivity",
                    false,
                    checked,
                    format!(
                        "non-monos not closed under addition for an inclusion into length {}",
                        y.length()
                    ),
                ));
            }
            checked += 1;
        }
    }
    Ok(report(
        "sing-additivity",
        true,
        checked,
        format!("closure under addition verified for {checked} inclusions"),
    ))
}

// ---------------------------------------------------------------------
// invariant helpers used by integration tests and the CLI
// ---------------------------------------------------------------------

/// Measure monotonicity over all subrepresentations of the registered
/// modules up to the given length.
pub fn check_measure_monotonicity(p: u64, max_length: usize, caps: &Caps) -> Result<usize> {
    let mut reg = kronecker_registry(p, max_length, caps)?;
    let parents: Vec<Arc<Representation>> = reg.entries().iter().map(|e| e.rep.clone()).collect();
    let mut checked = 0;
    for y in parents {
        let mu_y = gr_measure(&y, &mut reg)?;
        for s in all_subreps(&y, caps)? {
            let (srep, _) = sub_as_rep(&s)?;
            let mu_s = gr_measure(&srep, &mut reg)?;
            if mu_s > mu_y {
                return Err(Error::Precondition(format!(
                    "monotonicity violated: submodule measure {mu_s} exceeds {mu_y}"
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
