//! End-to-end tests: document round-trips on random representations, and
//! the binary's output and exit codes on real invocations.

use std::io::Write;
use std::process::Command;
use std::sync::Arc;

use proptest::prelude::*;

use quivergr::families::{kronecker_quiver, subspace_quiver};
use quivergr::matrix::FpMatrix;
use quivergr::rep::Representation;
use quivergr_cli::{parse_rep, serialize_rep};

fn arb_rep() -> impl Strategy<Value = Representation> {
    let quivers = prop_oneof![Just(0usize), Just(1), Just(2)];
    (
        quivers,
        proptest::collection::vec(0usize..=2, 5),
        proptest::collection::vec(0u64..3, 48),
    )
        .prop_map(|(which, dims_seed, entries_seed)| {
            let (quiver, p) = match which {
                0 => (Arc::new(kronecker_quiver(2).unwrap()), 2u64),
                1 => (Arc::new(kronecker_quiver(3).unwrap()), 3u64),
                _ => (Arc::new(subspace_quiver(3).unwrap()), 3u64),
            };
            let nv = quiver.vertex_count();
            let dims: Vec<usize> = (0..nv).map(|v| dims_seed[v % dims_seed.len()]).collect();
            let mut cursor = 0usize;
            let maps: Vec<FpMatrix> = quiver
                .arrows()
                .iter()
                .map(|a| {
                    let rows = dims[a.target];
                    let cols = dims[a.source];
                    let entries: Vec<u64> = (0..rows * cols)
                        .map(|_| {
                            let e = entries_seed[cursor % entries_seed.len()] % p;
                            cursor += 1;
                            e
                        })
                        .collect();
                    FpMatrix::new(p, rows, cols, entries).unwrap()
                })
                .collect();
            Representation::new(quiver, p, dims, maps).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn serialization_round_trips_bit_exactly(rep in arb_rep()) {
        let doc = serialize_rep(&rep);
        let back = parse_rep(&doc).unwrap();
        prop_assert_eq!(&back, &rep);
        // and the serialized form is canonical
        prop_assert_eq!(serialize_rep(&back), doc);
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quivergr"))
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("quivergr-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

const P3_DOC: &str = "p 2\nvertices a b\narrow x a b\narrow y a b\ndims a=2 b=3\n\
matrix x\n1 0\n0 1\n0 0\nmatrix y\n0 0\n1 0\n0 1\n";

#[test]
fn measure_of_a_serialized_preprojective() {
    let path = write_temp("p3.rep", P3_DOC);
    let out = bin().arg("measure").arg(&path).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("{1,3,5} = 21/32"), "stdout: {stdout}");
    assert!(!stdout.contains("0."), "no floating point in reports");
}

#[test]
fn measure_of_a_simple() {
    let doc = "p 2\nvertices a b\narrow x a b\narrow y a b\ndims a=0 b=1\nmatrix x\nmatrix y\n";
    let path = write_temp("simple.rep", doc);
    let out = bin().arg("measure").arg(&path).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("{1} = 1/2"), "stdout: {stdout}");
}

#[test]
fn filtration_all_is_unique_for_the_tube_level_two() {
    // R[2] at the parameter x over GF(2)
    let doc = "p 2\nvertices a b\narrow x a b\narrow y a b\ndims a=2 b=2\n\
matrix x\n1 0\n0 1\nmatrix y\n0 0\n1 0\n";
    let path = write_temp("r2.rep", doc);
    let out = bin()
        .arg("filtration")
        .arg(&path)
        .arg("--all")
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("filtrations: 1"), "stdout: {stdout}");
}

#[test]
fn pruefer_prints_the_exact_fraction() {
    let out = bin()
        .args(["pruefer", "-p", "2", "--param", "x"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("5/6"), "stdout: {stdout}");
}

#[test]
fn exit_codes_are_stable() {
    // parse failure
    let path = write_temp("broken.rep", "p 2\n");
    let out = bin().arg("measure").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // budget exhaustion
    let path = write_temp("p3b.rep", P3_DOC);
    let out = bin()
        .args(["measure"])
        .arg(&path)
        .args(["--budget", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // invalid parameter
    let out = bin()
        .args(["pruefer", "-p", "2", "--param", "x^2+1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn budget_env_variable_is_honored() {
    let path = write_temp("p3c.rep", P3_DOC);
    let out = bin()
        .arg("measure")
        .arg(&path)
        .env("QUIVERGR_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // an explicit flag overrides the environment
    let out = bin()
        .arg("measure")
        .arg(&path)
        .env("QUIVERGR_BUDGET", "2")
        .args(["--budget", "1000000"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn enumerate_with_impossible_budget_fails_cleanly() {
    let out = bin()
        .args([
            "enumerate",
            "--quiver",
            "kronecker2",
            "-p",
            "2",
            "--max-length",
            "2",
            "--matrix-budget",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("family mode"), "stderr: {stderr}");
}

#[test]
fn check_subcommand_runs_a_suite() {
    let out = bin().args(["check", "dim-tables"]).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("PASS dim-tables"), "stdout: {stdout}");
}

#[test]
fn takeoff_with_too_small_a_bound_names_the_required_one() {
    let out = bin()
        .args([
            "takeoff",
            "--quiver",
            "kronecker2",
            "-p",
            "2",
            "--count",
            "3",
            "--bound",
            "6",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("14"), "stderr: {stderr}");
}

#[test]
fn enumerate_family_mode_matches_the_inventory() {
    let out = bin()
        .args([
            "enumerate",
            "--quiver",
            "kronecker2",
            "-p",
            "2",
            "--max-length",
            "4",
            "--mode",
            "family",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("length <= 4: 11"), "stdout: {stdout}");
}

#[test]
fn enumerate_exhaustive_counts_classes() {
    let out = bin()
        .args([
            "enumerate",
            "--quiver",
            "kronecker2",
            "-p",
            "2",
            "--max-length",
            "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("length <= 2: 5"), "stdout: {stdout}");
}
