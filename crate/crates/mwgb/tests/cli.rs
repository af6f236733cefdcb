//! End-to-end tests of the `mwgb` binary: output shape, determinism across
//! thread counts, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mwgb"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("mwgb-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const SAMPLE: &str = "p 101\nvars 3\nweights 2\n1 1 1\n1 2 3\ngen 1 2 2 0; 1 3 0 1\ngen 1 2 2 0; 100 3 0 1\ndmax 12\n";

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn mwgb")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// The basis section: everything before the first blank line.
fn basis_section(text: &str) -> String {
    text.split("\n\n").next().unwrap_or("").to_string()
}

#[test]
fn gb_prints_a_reparseable_basis_and_stats() {
    let file = write_temp("sample.sys", SAMPLE);
    let out = run(&[
        "gb",
        file.to_str().unwrap(),
        "--strategy",
        "mwh-gcd",
        "--verify",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let basis = basis_section(&text);
    assert!(basis.starts_with("p 101"));
    assert!(basis.contains("gen "));
    assert!(text.contains("strategy"));
    assert!(text.contains("matrices_total="));
    // The printed basis parses back as a system file.
    mwgb::system::SystemFile::parse(&format!("{basis}\n")).unwrap();
}

#[test]
fn gb_is_byte_identical_across_strategies_and_threads() {
    let file = write_temp("identical.sys", SAMPLE);
    let path = file.to_str().unwrap();
    let a = run(&["gb", path, "--strategy", "mwh-gcd", "--threads", "1"]);
    let b = run(&["gb", path, "--strategy", "mwh-gcd", "--threads", "8"]);
    let c = run(&["gb", path, "--strategy", "mwh-nofilter"]);
    let d = run(&["gb", path, "--strategy", "default-w1"]);
    for out in [&a, &b, &c, &d] {
        assert!(out.status.success());
    }
    let base = basis_section(&stdout(&a));
    assert_eq!(base, basis_section(&stdout(&b)));
    assert_eq!(base, basis_section(&stdout(&c)));
    assert_eq!(base, basis_section(&stdout(&d)));
}

#[test]
fn gb_dmax_flag_overrides_the_file() {
    let file = write_temp("override.sys", SAMPLE);
    let out = run(&[
        "gb",
        file.to_str().unwrap(),
        "--strategy",
        "mwh-gcd",
        "--dmax",
        "6",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("d_max"));
    assert!(stdout(&out).contains("dmax 6"));
}

#[test]
fn gb_without_any_dmax_is_refused() {
    let no_dmax = SAMPLE.replace("dmax 12\n", "");
    let file = write_temp("nodmax.sys", &no_dmax);
    let out = run(&["gb", file.to_str().unwrap(), "--strategy", "mwh-gcd"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gb_writes_the_stats_file() {
    let file = write_temp("stats.sys", SAMPLE);
    let kv = std::env::temp_dir().join("mwgb-cli-tests").join("out.kv");
    let _ = std::fs::remove_file(&kv);
    let out = run(&[
        "gb",
        file.to_str().unwrap(),
        "--strategy",
        "mwh-gcd",
        "--stats",
        kv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&kv).unwrap();
    assert!(written.contains("strategy=mwh-gcd"));
    assert!(written.contains("reductions_to_zero="));
}

#[test]
fn stats_are_deterministic_apart_from_elapsed_time() {
    let file = write_temp("det.sys", SAMPLE);
    let dir = std::env::temp_dir().join("mwgb-cli-tests");
    let kv1 = dir.join("t1.kv");
    let kv8 = dir.join("t8.kv");
    let path = file.to_str().unwrap();
    for (threads, kv) in [("1", &kv1), ("8", &kv8)] {
        let out = run(&[
            "gb",
            path,
            "--strategy",
            "mwh-gcd",
            "--threads",
            threads,
            "--stats",
            kv.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let strip = |p: &PathBuf| -> String {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with("elapsed_seconds="))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&kv1), strip(&kv8));
}

#[test]
fn analyze_hilbert_and_classify_render_reports() {
    let file = write_temp("analyze.sys", SAMPLE);
    let path = file.to_str().unwrap();
    let out = run(&["analyze", path, "hilbert", "--bound", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ambient algebra"));
    assert!(text.contains("(4,6): 2"));

    let out = run(&["analyze", path, "classify", "--bound", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("verdict:"));
}

#[test]
fn random_is_deterministic_and_reparseable() {
    let file = write_temp("weights.sys", "p 101\nvars 3\nweights 2\n1 2 3\n2 1 1\n");
    let path = file.to_str().unwrap();
    let args = [
        "random",
        "--weights-file",
        path,
        "--degrees",
        "10,5;10,5",
        "--seed",
        "4",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let sys = mwgb::system::SystemFile::parse(&stdout(&a)).unwrap();
    assert_eq!(sys.generators.len(), 2);
}

#[test]
fn parse_errors_exit_1() {
    let file = write_temp("broken.sys", "p 101\nvars two\n");
    let out = run(&[
        "gb",
        file.to_str().unwrap(),
        "--strategy",
        "mwh-gcd",
        "--dmax",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["gb"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn validation_errors_exit_2() {
    let file = write_temp(
        "rankdef.sys",
        "p 101\nvars 2\nweights 2\n1 1\n2 2\ngen 1 1 0\ndmax 3\n",
    );
    let out = run(&["gb", file.to_str().unwrap(), "--strategy", "mwh-gcd"]);
    assert_eq!(out.status.code(), Some(2));

    // Inhomogeneous generator.
    let file = write_temp(
        "inhomog.sys",
        "p 101\nvars 2\nweights 2\n1 1\n1 2\ngen 1 1 0; 1 0 1\ndmax 3\n",
    );
    let out = run(&["gb", file.to_str().unwrap(), "--strategy", "mwh-gcd"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("gb"));
}
