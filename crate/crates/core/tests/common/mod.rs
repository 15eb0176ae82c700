#![allow(dead_code)]

use std::path::{Path, PathBuf};

/// (golden name, arguments, expected exit code). Every command documented in the README.
pub const COMMANDS: &[(&str, &[&str], i32)] = &[
    ("check_2alg_z_z_id", &["check-2alg", "examples/z_z_id.json"], 0),
    ("check_2alg_z_z_id_text", &["check-2alg", "--format", "text", "examples/z_z_id.json"], 0),
    ("check_zinbiel_idempotent", &["check-zinbiel", "examples/dim1_idempotent.json"], 1),
    ("check_zinbiel_idempotent_text", &["check-zinbiel", "--format", "text", "examples/dim1_idempotent.json"], 1),
    ("check_zinbiel_e1e1", &["check-zinbiel", "examples/e1e1.json"], 0),
    ("check_datum", &["check-datum", "examples/datum.json"], 0),
    ("check_datum_zz", &["check-datum", "--list", "zz", "examples/datum.json"], 0),
    ("check_datum_direct", &["check-datum", "--list", "direct", "examples/datum.json"], 0),
    ("build_product", &["build-product", "examples/datum.json"], 0),
    ("build_crossed_product", &["build-product", "examples/crossed_system.json"], 0),
    ("build_bicrossed_product", &["build-product", "examples/matched_pair.json"], 0),
    ("extract_datum", &["extract-datum", "examples/complement_split.json"], 0),
    ("check_crossed", &["check-crossed", "examples/crossed_system.json"], 0),
    ("check_matched", &["check-matched", "examples/matched_pair.json"], 0),
    ("factorize", &["factorize", "examples/factorization.json"], 0),
    ("factorize_obstructed", &["factorize", "examples/factorization_obstructed.json"], 1),
    ("check_morphism", &["check-morphism", "examples/rs_morphism.json"], 0),
    ("classify_zero11", &["classify", "--field", "gf5", "--z", "examples/zero11.json", "--vdims", "0,1"], 0),
    (
        "classify_zero11_cohomologous",
        &["classify", "--field", "gf5", "--z", "examples/zero11.json", "--vdims", "0,1", "--relation", "cohomologous"],
        0,
    ),
    (
        "classify_zero11_text",
        &["classify", "--field", "gf5", "--z", "examples/zero11.json", "--vdims", "0,1", "--format", "text"],
        0,
    ),
    (
        "classify_over_budget",
        &["classify", "--field", "gf5", "--z", "examples/zero11.json", "--vdims", "0,1", "--budget", "1000"],
        3,
    ),
];

/// (fixture, command) for the malformed inputs; each must exit 2.
pub const MALFORMED: &[(&str, &str)] = &[
    ("01_truncated", "check-zinbiel"),
    ("02_top_level_array", "check-zinbiel"),
    ("03_missing_kind", "check-zinbiel"),
    ("04_unknown_kind", "check-zinbiel"),
    ("05_missing_field", "check-zinbiel"),
    ("06_not_a_prime", "check-zinbiel"),
    ("07_small_characteristic", "check-zinbiel"),
    ("08_unknown_key", "check-zinbiel"),
    ("09_missing_dim", "check-zinbiel"),
    ("10_dim_not_integer", "check-zinbiel"),
    ("11_scalar_not_string", "check-zinbiel"),
    ("12_zero_denominator", "check-zinbiel"),
    ("13_index_out_of_range", "check-zinbiel"),
    ("14_short_entry", "check-zinbiel"),
    ("15_duplicate_entry", "check-zinbiel"),
    ("16_mult_dims", "check-zinbiel"),
    ("17_phi_dims", "check-2alg"),
    ("18_datum_map_dims", "check-datum"),
    ("19_datum_unknown_map", "check-datum"),
    ("20_rs_different_z", "check-morphism"),
    ("21_split_not_complementary", "extract-datum"),
    ("22_wrong_kind_for_command", "check-2alg"),
];

pub fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zinbiel2").chain(args.iter().copied());
    let code = zinbiel2::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares against the golden file, or rewrites it when `UPDATE_GOLDEN` is set.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want == actual {
        Ok(())
    } else {
        Err(format!("{name} differs from {}\n--- got ---\n{actual}", path.display()))
    }
}

/// Runs one documented command and checks its exit code and output.
pub fn golden_command(name: &str, args: &[&str], code: i32, extra: &[&str]) -> Result<(), String> {
    let mut all: Vec<&str> = args.to_vec();
    all.extend_from_slice(extra);
    let (got, out, err) = run(&all);
    if got != code {
        return Err(format!("{name}: exit {got}, expected {code}; stderr: {err}"));
    }
    check_golden(&format!("{name}.out"), &out)?;
    if code >= 2 {
        check_golden(&format!("{name}.err"), &err)?;
    }
    Ok(())
}

pub fn malformed_case(fixture: &str, command: &str) -> Result<(), String> {
    let path = format!("tests/fixtures/malformed/{fixture}.json");
    let (code, out, err) = run(&[command, &path]);
    if code != 2 || !out.is_empty() {
        return Err(format!("{fixture}: exit {code}, stdout {out:?}"));
    }
    let located = err.starts_with(&format!("error: {path}:")) && err.contains(": at $");
    if !located {
        return Err(format!("{fixture}: message carries no location: {err}"));
    }
    check_golden(&format!("malformed/{fixture}.err"), &err)
}
