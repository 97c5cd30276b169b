//! End-to-end checks of the command-line interface and the document
//! formats: exit codes, byte-identical reports, round trips, and the
//! falsifiability probe (a corrupted structure constant must be caught).

use pcsplit::docs::{AlgebraDoc, PointDoc, ProfileDoc, ReportDoc};
use pcsplit::generators::ScenarioContext;
use pcsplit::rootdata::{
    build_classical, principal_nilpotent_point, splitting_borel_opposite, Scenario, Series,
};
use pcsplit::verify::{run_checks, RunConfig};
use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pcsplit"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("pcsplit-it");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_writes_passing_report_and_exits_zero() {
    let out = tmp("a2-borel.json");
    let status = bin()
        .args([
            "verify",
            "--series",
            "A",
            "--rank",
            "2",
            "--scenario",
            "borel",
            "--seed",
            "42",
            "--samples",
            "16",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: ReportDoc = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.scenario, "borel");
    assert_eq!(report.seed, "42");
    assert!(report.checks.iter().all(|c| c.status == "pass"));
    // Round trip through serialization is the identity.
    let bytes = pcsplit::docs::to_json_pretty(&report).unwrap();
    let again: ReportDoc = serde_json::from_str(&bytes).unwrap();
    assert_eq!(report, again);
}

#[test]
fn identical_flags_give_byte_identical_reports() {
    let out1 = tmp("det-1.json");
    let out2 = tmp("det-2.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args([
                "verify",
                "--series",
                "A",
                "--rank",
                "1",
                "--scenario",
                "manin",
                "--seed",
                "7",
                "--samples",
                "8",
                "--out",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec![
            "verify",
            "--series",
            "A",
            "--rank",
            "2",
            "--scenario",
            "parabolic",
        ],
        vec![
            "verify",
            "--series",
            "A",
            "--rank",
            "2",
            "--scenario",
            "borel",
            "--samples",
            "0",
        ],
        vec![
            "verify",
            "--series",
            "Q",
            "--rank",
            "2",
            "--scenario",
            "borel",
        ],
        vec!["build", "--series", "A", "--rank", "17"],
        vec![
            "generators",
            "--series",
            "B",
            "--rank",
            "2",
            "--scenario",
            "involution",
        ],
    ] {
        let status = bin().args(&args).output().unwrap();
        assert_eq!(status.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn pencil_profile_at_the_principal_point() {
    let g = build_classical(Series::A, 1).unwrap();
    let y = principal_nilpotent_point(&g).y;
    let point_path = tmp("y-sl2.json");
    std::fs::write(
        &point_path,
        pcsplit::docs::to_json_pretty(&PointDoc::from_point(&y)).unwrap(),
    )
    .unwrap();
    let out = tmp("profile-sl2.json");
    let status = bin()
        .args(["pencil", "--series", "A", "--rank", "1", "--point"])
        .arg(&point_path)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let profile: ProfileDoc =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    // y is regular for the whole family: generic rank 2, kernel sum b(g).
    assert_eq!(profile.generic_rank, "2");
    assert_eq!(profile.kernel_sum_dim, "2");
    assert_eq!(profile.jordan_line_count, "0");
}

#[test]
fn corrupted_structure_constant_is_caught() {
    // Flip one structure constant in the serialized document and run the
    // full check suite on the reconstruction: at least one certificate
    // must fail.
    let g = build_classical(Series::A, 1).unwrap();
    let mut doc = AlgebraDoc::from_algebra(&g);
    let entry = doc
        .constants
        .iter_mut()
        .find(|e| e[3] != "0")
        .expect("some nonzero constant");
    let bumped: i64 = entry[3].parse::<i64>().unwrap() + 1;
    entry[3] = bumped.to_string();
    let doctored = doc.to_algebra().unwrap();
    assert!(!pcsplit::rootdata::validate_structure(&doctored).pass());

    let clean = ScenarioContext::new(Series::A, 1, Scenario::BorelOpposite).unwrap();
    let splitting = splitting_borel_opposite(&g);
    let ctx = ScenarioContext {
        scenario: Scenario::BorelOpposite,
        series: Series::A,
        base_rank: 1,
        base: g.clone(),
        standard: doctored.clone(),
        algebra: doctored,
        splitting,
        invariants: clean.invariants.clone(),
        cartan_indices: clean.cartan_indices.clone(),
    };
    let certs = run_checks(&ctx, &RunConfig::default());
    assert!(
        certs.iter().any(|c| !c.passed()),
        "the corrupted algebra slipped through"
    );
    assert!(certs
        .iter()
        .find(|c| c.name == "structure")
        .is_some_and(|c| !c.passed()));
}

#[test]
fn generators_and_invariants_documents() {
    let out = tmp("gens-a2.json");
    let status = bin()
        .args([
            "generators",
            "--series",
            "A",
            "--rank",
            "2",
            "--scenario",
            "manin",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let doc: pcsplit::docs::GeneratorSetDoc =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.expected_count, "10");
    assert_eq!(doc.items.len(), 10);
    for item in &doc.items {
        assert!(!item.poly.terms.is_empty());
    }

    let out = tmp("inv-c2.json");
    let status = bin()
        .args(["invariants", "--series", "C", "--rank", "2", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let doc: pcsplit::docs::InvariantSetDoc =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.degrees, vec!["2", "4"]);
}
