mod common;

use common::{golden_command, malformed_case, run, COMMANDS, MALFORMED};

#[test]
fn documented_commands_match_golden_files() {
    for (name, args, code) in COMMANDS {
        golden_command(name, args, *code, &[]).unwrap();
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for (name, args, code) in COMMANDS {
        for jobs in ["1", "4"] {
            golden_command(name, args, *code, &["--jobs", jobs]).unwrap();
        }
    }
}

#[test]
fn malformed_inputs_exit_2_with_a_location() {
    assert!(MALFORMED.len() >= 20);
    for (fixture, command) in MALFORMED {
        malformed_case(fixture, command).unwrap();
    }
}

#[test]
fn field_override_is_applied() {
    let (code, out, _) = run(&["check-zinbiel", "--field", "q", "examples/dim1_idempotent.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"witness\": [1, 1, 1]"));
    let (code, _, err) = run(&["check-zinbiel", "--field", "gf4", "examples/dim1_idempotent.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("--field"));
    let (code, _, _) = run(&["check-zinbiel", "--field", "gf3", "--allow-small-char", "examples/e1e1.json"]);
    assert_eq!(code, 0);
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, _, err) = run(&["check-2alg", "examples/nope.json"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: examples/nope.json"));
}
