//! Acceptance suite: one line per criterion, with pinned bounds.

use std::process::Command;

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_esemig");

/// Wall-clock ceilings per criterion id, in milliseconds.
const TIME_BOUNDS_MS: &[(u64, u64)] = &[(1, 5_000), (2, 60_000), (3, 10_000), (6, 10_000)];

/// Exact operation counts the suite must report, by battery and leg label.
const PINNED_COUNTS: &[(&str, &str)] = &[
    ("Z1 identical set equality", "raw set has 1 operations"),
    ("Z2 identical set equality", "raw set has 3 operations"),
    ("Z3 identical set equality", "raw set has 4 operations"),
    (
        "Klein identical set equality",
        "generated set has 17 operations",
    ),
];

fn suite(timing: bool) -> (Vec<u8>, i32) {
    let mut cmd = Command::new(BIN);
    if timing {
        cmd.arg("--timing");
    }
    let out = cmd
        .args([
            "suite",
            "--order-max",
            "3",
            "--budget",
            "10000",
            "--seed",
            "0",
        ])
        .output()
        .expect("run esemig");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn passing(verdict: &str) -> bool {
    matches!(verdict, "proved-pass" | "sampled-pass")
}

fn leg_holds(report: &Value, battery: &str, label: &str) -> bool {
    report["criteria"]
        .as_array()
        .into_iter()
        .flatten()
        .flat_map(|c| c["batteries"].as_array().into_iter().flatten())
        .filter(|b| b["name"] == battery)
        .flat_map(|b| b["legs"].as_array().into_iter().flatten())
        .any(|l| l["label"] == label && l["holds"] == true)
}

#[test]
fn acceptance_criteria() {
    let (stdout, code) = suite(true);
    let report: Value = serde_json::from_slice(&stdout).expect("suite emits JSON");
    let mut failures = Vec::new();

    for c in report["criteria"].as_array().expect("criteria array") {
        let id = c["id"].as_u64().unwrap();
        let name = c["name"].as_str().unwrap();
        let verdict = c["verdict"].as_str().unwrap();
        let ms = c["timing_ms"].as_u64().unwrap_or(0);
        let bound = TIME_BOUNDS_MS
            .iter()
            .find(|(i, _)| *i == id)
            .map(|(_, b)| *b);
        let in_time = bound.is_none_or(|b| ms < b);
        let ok = passing(verdict) && in_time;
        let bound_note = bound.map(|b| format!(", bound {b} ms")).unwrap_or_default();
        println!(
            "criterion {id} {name}: {} ({verdict}, {ms} ms{bound_note})",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failures.push(format!("criterion {id}"));
        }
    }

    for (battery, label) in PINNED_COUNTS {
        let ok = leg_holds(&report, battery, label);
        println!(
            "count {battery} / {label}: {}",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failures.push(format!("{battery}: {label}"));
        }
    }

    let (first, _) = suite(false);
    let (second, _) = suite(false);
    let repeatable = first == second;
    println!(
        "byte-identical reruns without timing: {}",
        if repeatable { "PASS" } else { "FAIL" }
    );
    if !repeatable {
        failures.push("reruns differ".into());
    }

    assert_eq!(code, 0, "suite exit code");
    assert!(passing(report["verdict"].as_str().unwrap()));
    assert!(failures.is_empty(), "failed: {failures:?}");
}

#[test]
fn order_four_raw_scan_agrees_with_generation() {
    for group in ["cyclic(4)", "klein_group"] {
        let out = Command::new(BIN)
            .args([
                "enumerate",
                "--group",
                group,
                "--mode",
                "identical",
                "--method",
                "both",
                "--raw-limit",
                "4",
                "--long-run",
            ])
            .output()
            .expect("run esemig");
        let report: Value = serde_json::from_slice(&out.stdout).unwrap();
        let raw = &report["details"]["raw_count"];
        let generated = &report["details"]["generated_count"];
        let ok = out.status.success() && raw == generated;
        println!(
            "{group} identical raw = generated ({raw} / {generated}): {}",
            if ok { "PASS" } else { "FAIL" }
        );
        assert!(ok);
    }
}
