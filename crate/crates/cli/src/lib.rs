//! Document formats, report rendering and command implementations behind
//! the `quivergr` binary.
//!
//! The representation file format is line-based and canonical: serializing
//! any representation and parsing it back is the identity, byte for byte.
//! All numeric output is exact; no floating point appears anywhere.

use std::fmt::Write as _;
use std::sync::Arc;

use quivergr::caps::Caps;
use quivergr::endo::{is_brick, is_iso};
use quivergr::error::Error as CoreError;
use quivergr::families::{
    kronecker_indec_inventory, kronecker_quiver, kronecker_regular, pruefer_measure,
    subspace_quiver, TubeParam,
};
use quivergr::gr::{
    all_gr_filtrations, compute_all_measures, gr_filtration, gr_measure, gr_submodules, is_piling,
    is_piling_oracle, takeoff_prefix,
};
use quivergr::measure::{measure_to_rational, GRMeasure};
use quivergr::poly::FpPoly;
use quivergr::registry::{register_indecomposables, IndecRegistry, RegisterMode};
use quivergr::subrep::{sub_as_rep, Subrep};
use quivergr::verify::{run_suite, VerifyConfig, SUITES};
use quivergr::{FpMatrix, Quiver, Representation, Subspace};

/// Stable exit codes, documented in the README.
pub mod exit_code {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const INVALID: i32 = 4;
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Core(CoreError),
    CheckFailed(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::CheckFailed(msg) => write!(f, "check failed: {msg}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit_code::PARSE,
            CliError::CheckFailed(_) => exit_code::CHECK_FAILED,
            CliError::Core(e) => match e {
                CoreError::CapExceeded { .. }
                | CoreError::BudgetExceeded { .. }
                | CoreError::Undecided(_) => exit_code::BUDGET,
                _ => exit_code::INVALID,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

// ---------------------------------------------------------------------
// representation documents
// ---------------------------------------------------------------------

/// Canonical textual form of a representation. Grammar (EBNF, one field
/// per line, `#` starts a comment line, blank lines ignored):
///
/// ```text
/// document := p-line vertices-line arrow-line* dims-line matrix-block*
/// p-line        := "p" INT
/// vertices-line := "vertices" LABEL+
/// arrow-line    := "arrow" NAME LABEL LABEL
/// dims-line     := "dims" (LABEL "=" INT)+
/// matrix-block  := "matrix" NAME row*
/// row           := INT+        (absent entirely when the matrix is empty)
/// ```
///
/// Matrices appear in arrow order with `dim(target)` rows of `dim(source)`
/// entries; blocks of matrices with zero rows or zero columns carry no row
/// lines at all.
pub fn serialize_rep(m: &Representation) -> String {
    let quiver = m.quiver();
    let mut out = String::new();
    let _ = writeln!(out, "p {}", m.p());
    let _ = writeln!(out, "vertices {}", quiver.vertex_labels().join(" "));
    for a in quiver.arrows() {
        let _ = writeln!(
            out,
            "arrow {} {} {}",
            a.name,
            quiver.vertex_label(a.source),
            quiver.vertex_label(a.target)
        );
    }
    let dims: Vec<String> = quiver
        .vertex_labels()
        .iter()
        .enumerate()
        .map(|(v, label)| format!("{label}={}", m.dim_at(v)))
        .collect();
    let _ = writeln!(out, "dims {}", dims.join(" "));
    for (ai, a) in quiver.arrows().iter().enumerate() {
        let _ = writeln!(out, "matrix {}", a.name);
        let mat = m.map(ai);
        if mat.rows() * mat.cols() > 0 {
            for i in 0..mat.rows() {
                let row: Vec<String> = mat.row(i).iter().map(u64::to_string).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
    }
    out
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_rep(text: &str) -> CliResult<Representation> {
    let mut lines = meaningful_lines(text).peekable();
    let p_line = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty document".into()))?;
    let p: u64 = p_line
        .strip_prefix("p ")
        .ok_or_else(|| CliError::Parse(format!("expected 'p <prime>', got '{p_line}'")))?
        .trim()
        .parse()
        .map_err(|_| CliError::Parse("bad prime".into()))?;

    let v_line = lines
        .next()
        .ok_or_else(|| CliError::Parse("missing vertices line".into()))?;
    let vertices: Vec<String> = v_line
        .strip_prefix("vertices ")
        .ok_or_else(|| CliError::Parse(format!("expected 'vertices ...', got '{v_line}'")))?
        .split_whitespace()
        .map(str::to_string)
        .collect();

    let mut arrows: Vec<(String, String, String)> = Vec::new();
    while let Some(line) = lines.peek() {
        let Some(rest) = line.strip_prefix("arrow ") else {
            break;
        };
        let parts: Vec<&str> = rest.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(CliError::Parse(format!("bad arrow line '{line}'")));
        }
        arrows.push((parts[0].into(), parts[1].into(), parts[2].into()));
        lines.next();
    }

    let d_line = lines
        .next()
        .ok_or_else(|| CliError::Parse("missing dims line".into()))?;
    let d_body = d_line
        .strip_prefix("dims ")
        .ok_or_else(|| CliError::Parse(format!("expected 'dims ...', got '{d_line}'")))?;
    let mut dims = vec![0usize; vertices.len()];
    let mut seen = vec![false; vertices.len()];
    for item in d_body.split_whitespace() {
        let (label, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("bad dims item '{item}'")))?;
        let v = vertices
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| CliError::Parse(format!("unknown vertex '{label}' in dims")))?;
        dims[v] = value
            .parse()
            .map_err(|_| CliError::Parse(format!("bad dimension '{value}'")))?;
        seen[v] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(CliError::Parse("dims line misses a vertex".into()));
    }

    let quiver = Arc::new(Quiver::new(vertices.clone(), arrows.clone()).map_err(CliError::Core)?);
    let mut maps: Vec<Option<FpMatrix>> = vec![None; arrows.len()];
    while let Some(line) = lines.next() {
        let name = line
            .strip_prefix("matrix ")
            .ok_or_else(|| CliError::Parse(format!("expected 'matrix <arrow>', got '{line}'")))?
            .trim();
        let ai = quiver
            .arrow_index(name)
            .ok_or_else(|| CliError::Parse(format!("unknown arrow '{name}'")))?;
        let arrow = &quiver.arrows()[ai];
        let rows = dims[arrow.target];
        let cols = dims[arrow.source];
        let mut entries = Vec::with_capacity(rows * cols);
        if rows * cols > 0 {
            for _ in 0..rows {
                let row_line = lines
                    .next()
                    .ok_or_else(|| CliError::Parse(format!("matrix {name}: missing row")))?;
                let row: Vec<u64> = row_line
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|_| CliError::Parse(format!("matrix {name}: bad entry")))?;
                if row.len() != cols {
                    return Err(CliError::Parse(format!(
                        "matrix {name}: row has {} entries, expected {cols}",
                        row.len()
                    )));
                }
                entries.extend(row);
            }
        }
        if maps[ai].is_some() {
            return Err(CliError::Parse(format!("matrix {name} given twice")));
        }
        maps[ai] = Some(FpMatrix::new(p, rows, cols, entries).map_err(CliError::Core)?);
    }
    let maps: Vec<FpMatrix> = maps
        .into_iter()
        .enumerate()
        .map(|(ai, m)| {
            m.ok_or_else(|| {
                CliError::Parse(format!(
                    "missing matrix for arrow {}",
                    quiver.arrows()[ai].name
                ))
            })
        })
        .collect::<CliResult<_>>()?;
    Representation::new(quiver, p, dims, maps).map_err(CliError::Core)
}

/// Subrepresentation document: a `subrep` header, then per-vertex `part`
/// blocks listing spanning rows; omitted vertices get the zero subspace.
///
/// ```text
/// subrep-document := "subrep" part-block*
/// part-block      := "part" LABEL row*
/// ```
pub fn parse_subrep(text: &str, parent: &Arc<Representation>) -> CliResult<Subrep> {
    let mut lines = meaningful_lines(text).peekable();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty subrep document".into()))?;
    if header != "subrep" {
        return Err(CliError::Parse(format!(
            "expected 'subrep' header, got '{header}'"
        )));
    }
    let quiver = parent.quiver();
    let p = parent.p();
    let mut parts: Vec<Subspace> = parent
        .dims()
        .iter()
        .map(|&d| Subspace::zero(p, d).map_err(CliError::Core))
        .collect::<CliResult<_>>()?;
    while let Some(line) = lines.next() {
        let label = line
            .strip_prefix("part ")
            .ok_or_else(|| CliError::Parse(format!("expected 'part <vertex>', got '{line}'")))?
            .trim();
        let v = quiver
            .vertex_index(label)
            .ok_or_else(|| CliError::Parse(format!("unknown vertex '{label}'")))?;
        let cols = parent.dim_at(v);
        let mut rows: Vec<Vec<u64>> = Vec::new();
        while let Some(next) = lines.peek() {
            if next.starts_with("part ") {
                break;
            }
            let row: Vec<u64> = next
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Parse(format!("part {label}: bad entry")))?;
            if row.len() != cols {
                return Err(CliError::Parse(format!(
                    "part {label}: row has {} entries, fiber dimension is {cols}",
                    row.len()
                )));
            }
            rows.push(row);
            lines.next();
        }
        if !rows.is_empty() {
            let mat = FpMatrix::from_rows(p, &rows).map_err(CliError::Core)?;
            parts[v] = Subspace::from_spanning(&mat);
        }
    }
    Subrep::new(parent.clone(), parts).map_err(CliError::Core)
}

pub fn serialize_subrep(s: &Subrep) -> String {
    let quiver = s.parent().quiver();
    let mut out = String::from("subrep\n");
    for (v, part) in s.parts().iter().enumerate() {
        if part.dim() == 0 {
            continue;
        }
        let _ = writeln!(out, "part {}", quiver.vertex_label(v));
        for i in 0..part.dim() {
            let row: Vec<String> = part.basis().row(i).iter().map(u64::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

// ---------------------------------------------------------------------
// formatting helpers
// ---------------------------------------------------------------------

/// Dimension vector rendering: sink-first for two-vertex quivers, matching
/// the usual bimodule tables; plain vertex order otherwise.
pub fn format_dims(m: &Representation) -> String {
    let quiver = m.quiver();
    let dims = m.dims();
    if quiver.vertex_count() == 2 && !quiver.sinks().is_empty() {
        let sink = quiver.sinks()[0];
        let other = 1 - sink;
        format!("({},{}) [sink-first]", dims[sink], dims[other])
    } else {
        let body: Vec<String> = dims.iter().map(usize::to_string).collect();
        format!("({})", body.join(","))
    }
}

pub fn format_measure(mu: &GRMeasure) -> String {
    format!("{} = {}", mu, measure_to_rational(mu))
}

pub fn format_subrep_inline(s: &Subrep) -> String {
    let quiver = s.parent().quiver();
    let mut pieces = Vec::new();
    for (v, part) in s.parts().iter().enumerate() {
        let label = quiver.vertex_label(v);
        if part.dim() == 0 {
            pieces.push(format!("{label}: 0"));
        } else {
            let rows: Vec<String> = (0..part.dim())
                .map(|i| {
                    let row: Vec<String> = part.basis().row(i).iter().map(u64::to_string).collect();
                    format!("[{}]", row.join(" "))
                })
                .collect();
            pieces.push(format!("{label}: {}", rows.join(" ")));
        }
    }
    pieces.join("; ")
}

// ---------------------------------------------------------------------
// command implementations (each returns the full report as a string)
// ---------------------------------------------------------------------

fn convention_header() -> &'static str {
    "convention: matrices act on column vectors; dimension vectors sink-first on two-vertex quivers, vertex order otherwise"
}

pub fn cmd_measure(text: &str, caps: &Caps) -> CliResult<String> {
    let rep = Arc::new(parse_rep(text)?);
    let mut reg = IndecRegistry::new(rep.quiver().clone(), rep.p(), *caps)?;
    let mu = gr_measure(&rep, &mut reg)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", convention_header());
    let _ = writeln!(out, "p: {}", rep.p());
    let _ = writeln!(out, "dim vector: {}", format_dims(&rep));
    let _ = writeln!(out, "length: {}", rep.length());
    let _ = writeln!(out, "measure: {}", format_measure(&mu));
    Ok(out)
}

pub fn cmd_submodules(text: &str, caps: &Caps) -> CliResult<String> {
    let rep = Arc::new(parse_rep(text)?);
    let mut reg = IndecRegistry::new(rep.quiver().clone(), rep.p(), *caps)?;
    let mu = gr_measure(&rep, &mut reg)?;
    let subs = gr_submodules(&rep, &mut reg)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", convention_header());
    let _ = writeln!(out, "measure: {}", format_measure(&mu));
    let _ = writeln!(out, "gr-submodules: {}", subs.len());
    for (i, s) in subs.iter().enumerate() {
        let _ = writeln!(
            out,
            "  [{}] length {}: {}",
            i + 1,
            s.length(),
            format_subrep_inline(s)
        );
    }
    Ok(out)
}

pub fn cmd_filtration(text: &str, all: bool, caps: &Caps) -> CliResult<String> {
    let rep = Arc::new(parse_rep(text)?);
    let mut reg = IndecRegistry::new(rep.quiver().clone(), rep.p(), *caps)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", convention_header());
    if all {
        let chains = all_gr_filtrations(&rep, &mut reg)?;
        let _ = writeln!(out, "filtrations: {}", chains.len());
        for (i, chain) in chains.iter().enumerate() {
            let _ = writeln!(out, "  chain {}:", i + 1);
            for term in chain {
                let _ = writeln!(
                    out,
                    "    length {}: {}",
                    term.length(),
                    format_subrep_inline(term)
                );
            }
        }
    } else {
        let chain = gr_filtration(&rep, &mut reg)?;
        let lengths: Vec<String> = chain.iter().map(|s| s.length().to_string()).collect();
        let _ = writeln!(out, "filtration lengths: {}", lengths.join(" < "));
        for term in &chain {
            let _ = writeln!(
                out,
                "  length {}: {}",
                term.length(),
                format_subrep_inline(term)
            );
        }
    }
    Ok(out)
}

pub fn cmd_piling(rep_text: &str, subrep_text: &str, caps: &Caps) -> CliResult<String> {
    let rep = Arc::new(parse_rep(rep_text)?);
    let sub = parse_subrep(subrep_text, &rep)?;
    let mut reg = IndecRegistry::new(rep.quiver().clone(), rep.p(), *caps)?;
    let fast = is_piling(&sub, &mut reg)?;
    let slow = is_piling_oracle(&sub, &mut reg)?;
    let mut out = String::new();
    let _ = writeln!(out, "submodule: {}", format_subrep_inline(&sub));
    let _ = writeln!(out, "piling (prefix test): {fast}");
    let _ = writeln!(out, "piling (definition oracle): {slow}");
    if fast != slow {
        return Err(CliError::CheckFailed(
            "prefix test and oracle disagree".into(),
        ));
    }
    Ok(out)
}

/// Recognized quiver names: `kroneckerN` and `subspaceN`.
pub fn parse_quiver_spec(spec: &str) -> CliResult<Quiver> {
    if let Some(n) = spec.strip_prefix("kronecker") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Parse(format!("bad quiver spec '{spec}'")))?;
        return kronecker_quiver(n).map_err(CliError::Core);
    }
    if let Some(n) = spec.strip_prefix("subspace") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Parse(format!("bad quiver spec '{spec}'")))?;
        return subspace_quiver(n).map_err(CliError::Core);
    }
    Err(CliError::Parse(format!(
        "unknown quiver spec '{spec}' (use kroneckerN or subspaceN)"
    )))
}

pub fn parse_tube_param(p: u64, s: &str) -> CliResult<TubeParam> {
    if s == "inf" || s == "infinity" {
        return Ok(TubeParam::Infinity);
    }
    Ok(TubeParam::Poly(
        FpPoly::parse(p, s).map_err(CliError::Core)?,
    ))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumerateMode {
    Exhaustive,
    Family,
}

pub fn cmd_enumerate(
    spec: &str,
    p: u64,
    max_length: usize,
    mode: EnumerateMode,
    caps: &Caps,
) -> CliResult<String> {
    let quiver = Arc::new(parse_quiver_spec(spec)?);
    let mode = match mode {
        EnumerateMode::Exhaustive => RegisterMode::Exhaustive,
        EnumerateMode::Family => {
            if spec != "kronecker2" {
                return Err(CliError::Parse(
                    "family mode has an inventory only for kronecker2".into(),
                ));
            }
            RegisterMode::Family(kronecker_indec_inventory(p, max_length)?)
        }
    };
    let mut reg = register_indecomposables(&quiver, p, max_length, mode, caps)?;
    compute_all_measures(&mut reg)?;
    let mut rows: Vec<(GRMeasure, usize)> = (0..reg.len())
        .map(|i| (reg.measure(i).expect("computed").clone(), i))
        .collect();
    rows.sort();
    let mut out = String::new();
    let _ = writeln!(out, "{}", convention_header());
    let _ = writeln!(
        out,
        "iso classes of indecomposables over GF({p}), length <= {max_length}: {}",
        reg.len()
    );
    let _ = writeln!(
        out,
        "{:<4} {:<18} {:<7} {:<6} measure",
        "#", "dims", "length", "brick"
    );
    for (rank, (mu, i)) in rows.iter().enumerate() {
        let rep = reg.entry(*i).rep.clone();
        let brick = is_brick(&rep, caps)?;
        let _ = writeln!(
            out,
            "{:<4} {:<18} {:<7} {:<6} {}",
            rank + 1,
            format_dims(&rep),
            rep.length(),
            brick,
            format_measure(mu)
        );
    }
    Ok(out)
}

pub fn cmd_takeoff(
    spec: &str,
    p: u64,
    count: usize,
    bound: usize,
    caps: &Caps,
) -> CliResult<String> {
    let quiver = Arc::new(parse_quiver_spec(spec)?);
    let mode = if spec == "kronecker2" {
        RegisterMode::Family(kronecker_indec_inventory(p, bound)?)
    } else {
        RegisterMode::Exhaustive
    };
    let mut reg = register_indecomposables(&quiver, p, bound, mode, caps)?;
    let steps = takeoff_prefix(&mut reg, count)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", convention_header());
    let _ = writeln!(
        out,
        "certified take-off prefix over GF({p}) (registry bound {bound}):"
    );
    for (i, step) in steps.iter().enumerate() {
        let classes: Vec<String> = step
            .classes
            .iter()
            .map(|&c| format_dims(&reg.entry(c).rep))
            .collect();
        let _ = writeln!(
            out,
            "I_{} = {} attained by {}",
            i + 1,
            format_measure(&step.measure),
            classes.join(", ")
        );
    }
    Ok(out)
}

pub fn cmd_tube(p: u64, param_str: &str, t: usize, caps: &Caps) -> CliResult<String> {
    let param = parse_tube_param(p, param_str)?;
    if t < 1 {
        return Err(CliError::Parse("tube level t >= 1".into()));
    }
    let level = Arc::new(kronecker_regular(p, &param, t)?);
    let quiver = level.quiver().clone();
    let bound = level.length().max(2);
    let inventory = kronecker_indec_inventory(p, bound)?;
    let mut reg =
        register_indecomposables(&quiver, p, bound, RegisterMode::Family(inventory), caps)?;
    compute_all_measures(&mut reg)?;
    let mu = gr_measure(&level, &mut reg)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", convention_header());
    let _ = writeln!(
        out,
        "tube parameter {param} over GF({p}), boundary length {}",
        2 * param.degree()
    );
    let _ = writeln!(
        out,
        "M[{t}]: dims {}, length {}",
        format_dims(&level),
        level.length()
    );
    let _ = writeln!(out, "measure: {}", format_measure(&mu));
    if t >= 2 {
        let below = Arc::new(kronecker_regular(p, &param, t - 1)?);
        let subs = gr_submodules(&level, &mut reg)?;
        let _ = writeln!(out, "gr-submodules: {}", subs.len());
        for (i, s) in subs.iter().enumerate() {
            let (srep, _) = sub_as_rep(&s.clone())?;
            let verdict = if is_iso(&srep, &below, caps)?.is_some() {
                format!("isomorphic to M[{}]", t - 1)
            } else {
                format!("NOT isomorphic to M[{}]", t - 1)
            };
            let _ = writeln!(
                out,
                "  [{}] length {}: {} ({verdict})",
                i + 1,
                s.length(),
                format_subrep_inline(s)
            );
        }
    }
    Ok(out)
}

pub fn cmd_pruefer(p: u64, param_str: &str, caps: &Caps) -> CliResult<String> {
    let param = parse_tube_param(p, param_str)?;
    let boundary = Arc::new(kronecker_regular(p, &param, 1)?);
    let mut reg = IndecRegistry::new(boundary.quiver().clone(), p, *caps)?;
    let mu1 = gr_measure(&boundary, &mut reg)?;
    let s = boundary.length();
    let gamma = pruefer_measure(&mu1, s)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "tube parameter {param} over GF({p}), boundary length {s}"
    );
    let _ = writeln!(out, "boundary measure: {}", format_measure(&mu1));
    let _ = writeln!(out, "limit measure: {gamma}");
    Ok(out)
}

pub fn cmd_check(suite: Option<&str>, config: &VerifyConfig) -> CliResult<String> {
    let names: Vec<&str> = match suite {
        Some(s) => {
            if !SUITES.contains(&s) {
                return Err(CliError::Parse(format!(
                    "unknown suite '{s}'; known: {}",
                    SUITES.join(", ")
                )));
            }
            vec![s]
        }
        None => SUITES.to_vec(),
    };
    let mut out = String::new();
    let mut failed = 0usize;
    for name in names {
        let report = run_suite(name, config)?;
        let _ = writeln!(
            out,
            "{} {} instances={} :: {}",
            if report.passed { "PASS" } else { "FAIL" },
            report.name,
            report.instances,
            report.detail
        );
        if !report.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        let _ = writeln!(out, "{failed} suite(s) failed");
        return Err(CliError::CheckFailed(out));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_doc() -> String {
        let pa =
            Representation::projective_at(Arc::new(kronecker_quiver(2).unwrap()), 2, 0).unwrap();
        serialize_rep(&pa)
    }

    #[test]
    fn parse_serialize_round_trip() {
        let doc = sample_doc();
        let rep = parse_rep(&doc).unwrap();
        assert_eq!(serialize_rep(&rep), doc);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let doc = format!("# header comment\n\n{}", sample_doc());
        assert!(parse_rep(&doc).is_ok());
    }

    #[test]
    fn missing_matrix_rejected() {
        let doc = "p 2\nvertices a b\narrow x a b\narrow y a b\ndims a=1 b=2\nmatrix x\n1\n0\n";
        assert!(matches!(parse_rep(doc), Err(CliError::Parse(_))));
    }

    #[test]
    fn measure_report_contains_exact_fraction() {
        let out = cmd_measure(&sample_doc(), &Caps::default()).unwrap();
        assert!(out.contains("measure: {1,3} = 5/8"));
        assert!(!out.contains("0."));
    }

    #[test]
    fn subrep_document() {
        let pa = Arc::new(parse_rep(&sample_doc()).unwrap());
        let sub = parse_subrep("subrep\npart b\n1 0\n", &pa).unwrap();
        assert_eq!(sub.length(), 1);
        let round = serialize_subrep(&sub);
        let again = parse_subrep(&round, &pa).unwrap();
        assert_eq!(sub, again);
        // a seed that is not closed is rejected
        let bad = parse_subrep("subrep\npart a\n1\n", &pa);
        assert!(matches!(
            bad,
            Err(CliError::Core(CoreError::InvalidSubrep(_)))
        ));
    }

    #[test]
    fn quiver_specs() {
        assert_eq!(parse_quiver_spec("kronecker2").unwrap().vertex_count(), 2);
        assert_eq!(parse_quiver_spec("subspace4").unwrap().vertex_count(), 5);
        assert!(parse_quiver_spec("pentagon").is_err());
    }
}
