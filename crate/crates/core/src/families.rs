//! Constructed module families and dimension arithmetic: Kronecker
//! preprojectives, preinjectives and regular tubes, bimodule dimension
//! recursions, Coxeter transformation arithmetic, the four-subspace tube
//! example, homogeneous filtrations, and the limit measure of a tube.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::caps::Caps;
use crate::endo::is_indecomposable;
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use crate::measure::{measure_to_rational, ExactRational, GRMeasure};
use crate::poly::{monic_irreducibles, FpPoly};
use crate::quiver::Quiver;
use crate::rep::Representation;
use crate::subrep::{
    preimage_subrep, quotient, restrict_subrep, sub_as_rep, subreps_with_length, Subrep,
};

/// The quiver with two vertices `a`, `b` and `n` parallel arrows `a -> b`.
pub fn kronecker_quiver(n: usize) -> Result<Quiver> {
    if n < 1 {
        return Err(Error::Precondition("at least one arrow".into()));
    }
    let names: Vec<String> = if n == 2 {
        vec!["x".into(), "y".into()]
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    };
    let arrows: Vec<(String, String, String)> = names
        .into_iter()
        .map(|nm| (nm, "a".to_string(), "b".to_string()))
        .collect();
    Quiver::new(vec!["a".to_string(), "b".to_string()], arrows)
}

/// The n-subspace quiver: sources `s1..sn`, one sink `c`, one arrow from
/// each source to the sink.
pub fn subspace_quiver(n: usize) -> Result<Quiver> {
    if n < 1 {
        return Err(Error::Precondition("at least one source".into()));
    }
    let mut vertices: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    vertices.push("c".to_string());
    let arrows: Vec<(String, String, String)> = (1..=n)
        .map(|i| (format!("a{i}"), format!("s{i}"), "c".to_string()))
        .collect();
    Quiver::new(vertices, arrows)
}

// ---------------------------------------------------------------------
// bimodule dimension arithmetic
// ---------------------------------------------------------------------

/// The three bimodule shapes: a general bimodule with both dimensions at
/// least 2, or a one-sided field extension (where the other dimension
/// degenerates to 1).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BimoduleCase {
    General,
    LeftExtension,
    RightExtension,
}

/// Dimension data of a bimodule algebra with two simples.
#[derive(Clone, Copy, Debug)]
pub struct BimoduleSpec {
    pub case: BimoduleCase,
    pub a: u64,
    pub b: u64,
}

impl BimoduleSpec {
    pub fn general(a: u64, b: u64) -> Result<Self> {
        Self::check(a, b)?;
        Ok(BimoduleSpec {
            case: BimoduleCase::General,
            a,
            b,
        })
    }

    /// Field extension on the left: `a` is the extension degree, `b = 1`.
    pub fn left_extension(a: u64) -> Result<Self> {
        Self::check(a, 1)?;
        Ok(BimoduleSpec {
            case: BimoduleCase::LeftExtension,
            a,
            b: 1,
        })
    }

    /// Field extension on the right: `b` is the extension degree, `a = 1`.
    pub fn right_extension(b: u64) -> Result<Self> {
        Self::check(1, b)?;
        Ok(BimoduleSpec {
            case: BimoduleCase::RightExtension,
            a: 1,
            b,
        })
    }

    fn check(a: u64, b: u64) -> Result<()> {
        if a * b < 4 {
            return Err(Error::InvalidParameter(format!(
                "representation-infinite needs a*b >= 4, got {a}*{b}"
            )));
        }
        Ok(())
    }
}

/// Dimension vectors are exact integer tuples; for bimodule quivers they
/// are reported sink-first.
pub type DimVector = Vec<BigInt>;

/// Preprojective dimension vector `P_k` (sink-first) by the reflection
/// recursion `d_{k+1} = c_k d_k - d_{k-1}` with multipliers alternating
/// `b, a, b, ...` from the seeds `P_1 = (1,0)`, `P_2 = (a,1)`.
pub fn bimodule_preprojective_dims(spec: &BimoduleSpec, k: usize) -> Result<DimVector> {
    if k < 1 {
        return Err(Error::Precondition("k >= 1".into()));
    }
    let a = BigInt::from(spec.a);
    let b = BigInt::from(spec.b);
    let mut prev: (BigInt, BigInt) = (BigInt::one(), BigInt::zero()); // P_1
    if k == 1 {
        return Ok(vec![prev.0, prev.1]);
    }
    let mut cur: (BigInt, BigInt) = (a.clone(), BigInt::one()); // P_2
    for step in 2..k {
        let c = if step % 2 == 0 { &b } else { &a };
        let next = (c * &cur.0 - &prev.0, c * &cur.1 - &prev.1);
        if next.0.is_negative() || next.1.is_negative() || next.0.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "recursion left the preprojective regime at k={}",
                step + 1
            )));
        }
        prev = cur;
        cur = next;
    }
    Ok(vec![cur.0, cur.1])
}

/// Bivariate integer polynomial in the bimodule dimensions `a`, `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimPoly {
    /// (degree in a, degree in b) -> coefficient; no zero coefficients.
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl DimPoly {
    pub fn zero() -> Self {
        DimPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn var_a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn var_b() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i64, deg_a: u32, deg_b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((deg_a, deg_b), BigInt::from(c));
        }
        DimPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &DimPoly) -> DimPoly {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let e = terms.entry(*k).or_insert_with(BigInt::zero);
            *e += v;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        DimPoly { terms }
    }

    pub fn sub(&self, other: &DimPoly) -> DimPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DimPoly {
        DimPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    pub fn mul(&self, other: &DimPoly) -> DimPoly {
        let mut terms: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                let k = (i1 + i2, j1 + j2);
                let e = terms.entry(k).or_insert_with(BigInt::zero);
                *e += c1 * c2;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        DimPoly { terms }
    }

    pub fn eval(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for ((i, j), c) in &self.terms {
            acc += c * a.pow(*i) * b.pow(*j);
        }
        acc
    }
}

impl fmt::Display for DimPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms.iter().rev() {
            let positive = !c.is_negative();
            if first {
                if !positive {
                    write!(f, "-")?;
                }
            } else if positive {
                write!(f, "+")?;
            } else {
                write!(f, "-")?;
            }
            first = false;
            let abs = c.abs();
            let unit = abs.is_one() && (*i, *j) != (0, 0);
            if !unit {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "a")?,
                _ => write!(f, "a^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "b")?,
                _ => write!(f, "b^{j}")?,
            }
        }
        Ok(())
    }
}

/// Symbolic preprojective rows: the same recursion carried out in the
/// polynomial ring Z[a, b], with the degenerate cases substituting 1 for
/// the trivial side.
pub fn bimodule_preprojective_dims_symbolic(
    case: BimoduleCase,
    k: usize,
) -> Result<(DimPoly, DimPoly)> {
    if k < 1 {
        return Err(Error::Precondition("k >= 1".into()));
    }
    let (a, b) = match case {
        BimoduleCase::General => (DimPoly::var_a(), DimPoly::var_b()),
        BimoduleCase::LeftExtension => (DimPoly::var_a(), DimPoly::constant(1)),
        BimoduleCase::RightExtension => (DimPoly::constant(1), DimPoly::var_b()),
    };
    let mut prev = (DimPoly::constant(1), DimPoly::zero());
    if k == 1 {
        return Ok(prev);
    }
    let mut cur = (a.clone(), DimPoly::constant(1));
    for step in 2..k {
        let c = if step % 2 == 0 { &b } else { &a };
        let next = (c.mul(&cur.0).sub(&prev.0), c.mul(&cur.1).sub(&prev.1));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

// ---------------------------------------------------------------------
// explicit Kronecker modules
// ---------------------------------------------------------------------

/// The k-th preprojective over the 2-Kronecker quiver: quiver-order
/// dimensions `(k-1, k)`, arrow maps the two shift embeddings.
pub fn kronecker_preprojective(p: u64, k: usize) -> Result<Representation> {
    if k < 1 {
        return Err(Error::Precondition("k >= 1".into()));
    }
    let quiver = Arc::new(kronecker_quiver(2)?);
    let (da, db) = (k - 1, k);
    let mut x = FpMatrix::zeros(p, db, da)?;
    let mut y = FpMatrix::zeros(p, db, da)?;
    for i in 0..da {
        x.set(i, i, 1);
        y.set(i + 1, i, 1);
    }
    Representation::new(quiver, p, vec![da, db], vec![x, y])
}

/// The k-th preinjective: quiver-order dimensions `(k, k-1)`, the
/// transposed shift maps.
pub fn kronecker_preinjective(p: u64, k: usize) -> Result<Representation> {
    if k < 1 {
        return Err(Error::Precondition("k >= 1".into()));
    }
    let quiver = Arc::new(kronecker_quiver(2)?);
    let (da, db) = (k, k - 1);
    let mut x = FpMatrix::zeros(p, db, da)?;
    let mut y = FpMatrix::zeros(p, db, da)?;
    for i in 0..db {
        x.set(i, i, 1);
        y.set(i, i + 1, 1);
    }
    Representation::new(quiver, p, vec![da, db], vec![x, y])
}

/// Parameter of a homogeneous tube: a monic irreducible polynomial, or the
/// point at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TubeParam {
    Infinity,
    Poly(FpPoly),
}

impl TubeParam {
    pub fn degree(&self) -> usize {
        match self {
            TubeParam::Infinity => 1,
            TubeParam::Poly(f) => f.degree(),
        }
    }
}

impl fmt::Display for TubeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeParam::Infinity => write!(f, "inf"),
            TubeParam::Poly(g) => write!(f, "{g}"),
        }
    }
}

/// A homogeneous tube of the 2-Kronecker quiver over GF(p).
#[derive(Clone, Debug)]
pub struct TubeHandle {
    p: u64,
    param: TubeParam,
}

impl TubeHandle {
    pub fn new(p: u64, param: TubeParam) -> Result<Self> {
        if let TubeParam::Poly(f) = &param {
            if f.p() != p {
                return Err(Error::Incompatible(
                    "polynomial over the wrong field".into(),
                ));
            }
            if !f.is_monic() || f.degree() == 0 {
                return Err(Error::InvalidParameter(format!(
                    "tube parameter must be monic of positive degree, got {f}"
                )));
            }
            if !f.is_irreducible() {
                return Err(Error::InvalidParameter(format!("{f} is reducible")));
            }
        }
        Ok(TubeHandle { p, param })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn param(&self) -> &TubeParam {
        &self.param
    }

    /// Length of the boundary module.
    pub fn boundary_length(&self) -> usize {
        2 * self.param.degree()
    }

    pub fn module(&self, t: usize) -> Result<Representation> {
        kronecker_regular(self.p, &self.param, t)
    }
}

/// The regular module of level `t` in the homogeneous tube at `param`:
/// dimensions `(d t, d t)` with maps `(identity, companion(f^t))` for a
/// finite parameter of degree d, and `(companion(x^t), identity)` at
/// infinity.
pub fn kronecker_regular(p: u64, param: &TubeParam, t: usize) -> Result<Representation> {
    if t < 1 {
        return Err(Error::Precondition("t >= 1".into()));
    }
    let handle = TubeHandle::new(p, param.clone())?;
    let quiver = Arc::new(kronecker_quiver(2)?);
    match &handle.param {
        TubeParam::Infinity => {
            let n = t;
            let nil = FpPoly::x(p)?.pow(t as u32).companion_matrix()?;
            let id = FpMatrix::identity(p, n)?;
            Representation::new(quiver, p, vec![n, n], vec![nil, id])
        }
        TubeParam::Poly(f) => {
            let n = f.degree() * t;
            let comp = f.pow(t as u32).companion_matrix()?;
            let id = FpMatrix::identity(p, n)?;
            Representation::new(quiver, p, vec![n, n], vec![id, comp])
        }
    }
}

/// All tube parameters with boundary length at most `max_boundary`.
pub fn tube_params_up_to(p: u64, max_boundary: usize) -> Result<Vec<TubeParam>> {
    let mut out = Vec::new();
    if max_boundary >= 2 {
        out.push(TubeParam::Infinity);
    }
    for d in 1..=max_boundary / 2 {
        for f in monic_irreducibles(p, d)? {
            out.push(TubeParam::Poly(f));
        }
    }
    Ok(out)
}

/// One representative per isomorphism class of indecomposables of length
/// at most `max_length`: preprojectives, preinjectives, and the regular
/// modules of every tube.
pub fn kronecker_indec_inventory(p: u64, max_length: usize) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    let mut k = 1;
    while 2 * k - 1 <= max_length {
        out.push(kronecker_preprojective(p, k)?);
        k += 1;
    }
    k = 1;
    while 2 * k - 1 <= max_length {
        out.push(kronecker_preinjective(p, k)?);
        k += 1;
    }
    for param in tube_params_up_to(p, max_length)? {
        let s = 2 * param.degree();
        let mut t = 1;
        while s * t <= max_length {
            out.push(kronecker_regular(p, &param, t)?);
            t += 1;
        }
    }
    Ok(out)
}

/// The length-6 module on the four-subspace quiver whose arrow maps embed
/// four pairwise distinct lines (slopes 0, 1, 2 and infinity) into the
/// plane. Needs at least four distinct lines, hence p >= 3.
pub fn four_subspace_tube_module(p: u64) -> Result<Representation> {
    if p < 3 {
        return Err(Error::InvalidParameter(
            "the projective line over GF(2) has only 3 points; need p >= 3".into(),
        ));
    }
    let quiver = Arc::new(subspace_quiver(4)?);
    let dims = vec![1, 1, 1, 1, 2];
    let line = |a: u64, b: u64| FpMatrix::new(p, 2, 1, vec![a, b]);
    let maps = vec![line(1, 0)?, line(1, 1)?, line(1, 2)?, line(0, 1)?];
    Representation::new(quiver, p, dims, maps)
}

// ---------------------------------------------------------------------
// Coxeter arithmetic
// ---------------------------------------------------------------------

type IntMatrix = Vec<Vec<BigInt>>;

fn int_identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

fn int_add(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

fn int_neg(a: &IntMatrix) -> IntMatrix {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

fn int_transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = a[0].len();
    (0..m)
        .map(|j| (0..n).map(|i| a[i][j].clone()).collect())
        .collect()
}

fn is_zero_matrix(a: &IntMatrix) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Euler matrix `E = I - A` with `A[u][v]` the number of arrows `u -> v`.
fn euler_matrix(quiver: &Quiver) -> IntMatrix {
    let n = quiver.vertex_count();
    let mut e = int_identity(n);
    for a in quiver.arrows() {
        e[a.source][a.target] -= BigInt::one();
    }
    e
}

/// Inverse of the Euler matrix via the nilpotent geometric series
/// `E^{-1} = I + A + A^2 + ...`, exact over the integers.
fn euler_inverse(quiver: &Quiver) -> IntMatrix {
    let n = quiver.vertex_count();
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    for arr in quiver.arrows() {
        adj[arr.source][arr.target] += BigInt::one();
    }
    let mut acc = int_identity(n);
    let mut power = adj.clone();
    while !is_zero_matrix(&power) {
        acc = int_add(&acc, &power);
        power = int_mul(&power, &adj);
    }
    acc
}

/// Coxeter transformation `Phi = -E^{-1} E^t`, sending the dimension
/// vector of a non-projective indecomposable to that of its translate.
pub fn coxeter_matrix(quiver: &Quiver) -> IntMatrix {
    let e = euler_matrix(quiver);
    let einv = euler_inverse(quiver);
    int_neg(&int_mul(&einv, &int_transpose(&e)))
}

/// Inverse Coxeter transformation `Phi^{-1} = -E^{-t} E` applied to a
/// dimension vector.
pub fn tau_inverse_dim(quiver: &Quiver, d: &DimVector) -> DimVector {
    let e = euler_matrix(quiver);
    let einv_t = int_transpose(&euler_inverse(quiver));
    let phi_inv = int_neg(&int_mul(&einv_t, &e));
    phi_inv
        .iter()
        .map(|row| row.iter().zip(d).map(|(c, x)| c * x).sum())
        .collect()
}

/// Dimension vectors of `P(v), tau^{-1} P(v), ..., tau^{-t_max} P(v)`.
/// Stops early if a component leaves the nonnegative range.
pub fn preprojective_dim_sequence(
    quiver: &Arc<Quiver>,
    v: usize,
    t_max: usize,
    p: u64,
) -> Result<Vec<DimVector>> {
    let proj = Representation::projective_at(quiver.clone(), p, v)?;
    let mut cur: DimVector = proj.dims().iter().map(|&d| BigInt::from(d)).collect();
    let mut out = vec![cur.clone()];
    for _ in 0..t_max {
        cur = tau_inverse_dim(quiver, &cur);
        if cur.iter().any(Signed::is_negative) {
            break;
        }
        out.push(cur.clone());
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// homogeneous filtrations and the limit measure
// ---------------------------------------------------------------------

/// A chain of subrepresentations of `y` whose successive quotients are all
/// isomorphic to `m`, found by depth-first search; `None` when the search
/// exhausts without finding one.
pub fn m_filtration(
    y: &Arc<Representation>,
    m: &Arc<Representation>,
    caps: &Caps,
) -> Result<Option<Vec<Subrep>>> {
    y.check_compatible(m)?;
    if m.is_zero() || y.length() % m.length() != 0 {
        return Err(Error::Precondition(
            "the length of the filtered module must be a multiple of the factor length".into(),
        ));
    }
    let steps = y.length() / m.length();
    let mut chain: Vec<Subrep> = Vec::new();
    if dfs_m_filtration(y, m, caps, steps, &mut chain)? {
        Ok(Some(chain))
    } else {
        Ok(None)
    }
}

fn dfs_m_filtration(
    y: &Arc<Representation>,
    m: &Arc<Representation>,
    caps: &Caps,
    steps: usize,
    chain: &mut Vec<Subrep>,
) -> Result<bool> {
    if chain.len() == steps {
        return Ok(chain.last().is_some_and(Subrep::is_full));
    }
    let bottom = match chain.last() {
        Some(s) => s.clone(),
        None => Subrep::zero_sub(y.clone())?,
    };
    let (q, proj) = quotient(y, &bottom)?;
    for w in subreps_with_length(&q, m.length(), caps)? {
        let (wrep, _) = sub_as_rep(&w)?;
        if crate::endo::is_iso(&wrep, m, caps)?.is_none() {
            continue;
        }
        let lifted = preimage_subrep(&proj, &w)?;
        chain.push(lifted);
        if dfs_m_filtration(y, m, caps, steps, chain)? {
            return Ok(true);
        }
        chain.pop();
    }
    Ok(false)
}

/// Certificate for uniqueness of the filtration: all double-step quotients
/// are indecomposable.
pub fn unique_m_filtration_certificate(chain: &[Subrep], caps: &Caps) -> Result<bool> {
    for i in 1..chain.len() {
        let upper = &chain[i];
        let (upper_rep, _) = sub_as_rep(upper)?;
        let quotient_rep = if i >= 2 {
            let inner = restrict_subrep(upper, &chain[i - 2])?;
            quotient(&upper_rep, &inner)?.0
        } else {
            upper_rep
        };
        if !is_indecomposable(&quotient_rep, caps)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact measure of the limit module of a tube with boundary measure
/// `mu1` and boundary length `s`: the measure of the boundary's own
/// Gabriel-Roiter submodule plus the geometric tail `1/(2^s - 1)`.
pub fn pruefer_measure(mu1: &GRMeasure, s: usize) -> Result<ExactRational> {
    if mu1.max_element() != Some(s) {
        return Err(Error::InvalidParameter(format!(
            "boundary measure {mu1} does not end at the boundary length {s}"
        )));
    }
    let gamma_x = measure_to_rational(&mu1.without_top());
    let tail = ExactRational::new(BigInt::one(), (BigInt::one() << s) - BigInt::one());
    Ok(gamma_x + tail)
}
