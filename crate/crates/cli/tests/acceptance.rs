//! Acceptance criterion 9: any command repeated with identical flags and
//! seed emits byte-identical JSON.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postulatum"))
        .args(args)
        .env_remove("POSTULATUM_SEED")
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_9_byte_identical_json() {
    let commands: &[&[&str]] = &[
        &["classify", "--model", "square", "--line", "1,1:0,1/2", "--point", "1/2,1/4"],
        &["classify", "--model", "sphere", "--line", "1,2,3", "--point", "3,2,1"],
        &["classify", "--model", "euclidean-plane", "--line", "2,3,-1", "--point", "1/7,1/7"],
        &["zones", "--line", "1,1:0,1/2", "--mode", "exact"],
        &["zones", "--line", "1,1:0,1/2", "--mode", "mc", "--samples", "50000", "--seed", "11"],
        &["verify", "--json", "--seed", "3"],
        &["sdenied", "--model", "square", "--budget", "200", "--seed", "5"],
        &["sdenied", "--model", "sphere-plane", "--seed", "5"],
        &["explore-finite", "--instances", "5000", "--seed", "2"],
    ];
    for args in commands {
        let first = run(args);
        let second = run(args);
        assert!(
            first.status.success(),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert!(!first.stdout.is_empty(), "{args:?} wrote no JSON");
        assert_eq!(
            first.stdout, second.stdout,
            "{args:?} is not byte-identical across runs"
        );
        serde_json::from_slice::<serde_json::Value>(&first.stdout)
            .unwrap_or_else(|e| panic!("{args:?} emitted invalid JSON: {e}"));
    }
    println!(
        "criterion 9 PASS: {} commands re-run byte-identically",
        commands.len()
    );
}
