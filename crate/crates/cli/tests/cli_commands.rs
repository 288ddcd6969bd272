use std::fs;
use std::path::Path;

use uquot_cli::{run, Outcome};

fn uquot(args: &[&str]) -> Outcome {
    run(std::iter::once("uquot").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = uquot(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    assert!(out.stderr.is_empty());
    assert!(out.stdout.ends_with('\n'));
    out.stdout.trim_end().to_string()
}

fn usage_error(args: &[&str]) -> String {
    let out = uquot(args);
    assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr.lines().count(), 1, "{:?}", out.stderr);
    out.stderr
}

#[test]
fn golden_outputs() {
    assert_eq!(
        ok(&["polytope", "--degrees", "3,1,1", "--dmax", "1"]),
        r#"{"degrees":[3,1,1],"dmax":1,"interval":["1","5"],"points":["1","3","5"]}"#
    );
    assert_eq!(
        ok(&["polytope", "--degrees", "1,1", "--dmax", "2"]),
        r#"{"degrees":[1,1],"dmax":2,"interval":["0","2"],"points":["0","1","2"]}"#
    );
    assert_eq!(
        ok(&["walls", "--degrees", "1,1,1,1"]),
        r#"{"degrees":[1,1,1,1],"walls":[0,2,4]}"#
    );
    assert_eq!(
        ok(&["uinv", "--degrees", "1,1"]),
        r#"{"m":[1,1],"weight":0,"dim":1,"multiplicity":1,"basis":[{"m":[1,1],"terms":[{"q":[0,1],"c":"-1"},{"q":[1,0],"c":"1"}]}]}"#
    );
    assert_eq!(
        ok(&["verify", "--degrees", "1", "--chi", "1", "--dmax", "1"]),
        r#"{"config":{"degrees":[1],"chi":1,"n":1,"dmax":1},"hilbert_uH":[1,1],"hilbert_flag":[1,1],"rho_ranks":[[1,1,1],[1,1,1]],"pass":true,"warning":"wall"}"#
    );
    assert_eq!(
        ok(&["hilbert", "--degrees", "1,1,1,1", "--chi", "2", "--dmax", "2"]),
        r#"{"config":{"degrees":[1,1,1,1],"chi":2,"n":1,"dmax":2},"hilbert_uH":[1,3,6],"hilbert_flag":[1,3,6]}"#
    );
    assert_eq!(
        ok(&["phi", "--degrees", "1,1,5", "--point", "2:1,5:1,7:1"]),
        r#"{"image":["-3:1","-2:1"]}"#
    );
    assert_eq!(
        ok(&[
            "sstest",
            "--mode",
            "U",
            "--degrees",
            "1,1,5",
            "--point",
            "2:1,3:1,1:1",
            "--dbound",
            "2"
        ]),
        r#"{"verdict":"Semistable","degree":1,"weight":7,"witness":{"m":[1,1,5],"terms":[{"q":[1,1,5],"c":"1"}]},"value":"1"}"#
    );
}

#[test]
fn uinv_accepts_zero_entries_and_negative_weights() {
    let out = ok(&["uinv", "--degrees", "0,2", "--weight", "-2"]);
    assert!(out.contains(r#""dim":0"#), "{out}");
    let out = ok(&["uinv", "--degrees", "2,2,2,2", "--weight", "0"]);
    assert!(out.contains(r#""dim":3,"multiplicity":3"#), "{out}");
}

#[test]
fn negative_verdicts_exit_one_only_when_strict() {
    let args = [
        "sstest",
        "--mode",
        "u",
        "--degrees",
        "1,1,5",
        "--point",
        "1:0,1:0,1:0",
        "--dbound",
        "3",
    ];
    assert_eq!(ok(&args), r#"{"verdict":"NoSectionUpTo","bound":3}"#);
    let mut strict = vec!["--strict"];
    strict.extend(args);
    let out = uquot(&strict);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "{\"verdict\":\"NoSectionUpTo\",\"bound\":3}\n");
}

#[test]
fn b_mode_reads_the_shifted_weight() {
    let out = ok(&[
        "sstest",
        "--mode",
        "B",
        "--degrees",
        "1,1",
        "--chi",
        "1",
        "--point",
        "0:1,1:1",
        "--dbound",
        "3",
    ]);
    assert!(out.contains(r#""verdict":"Semistable","degree":2,"weight":2"#), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    usage_error(&["bogus"]);
    usage_error(&["walls"]);
    usage_error(&["walls", "--degrees", "1,0"]);
    usage_error(&["walls", "--degrees", "1,x"]);
    usage_error(&["polytope", "--degrees", "1", "--dmax", "0"]);
    usage_error(&["phi", "--degrees", "1,1,5", "--point", "1:1,0:0,1:1"]);
    usage_error(&["phi", "--degrees", "1,1,5", "--point", "1:1,2:1"]);
    usage_error(&["phi", "--degrees", "1,1,1", "--point", "1:1,2:1,3:1"]);
    usage_error(&["phi", "--degrees", "1,1,5", "--point", "1:1,2:1,3:0"]);
    usage_error(&["verify", "--degrees", "1,1", "--chi", "9", "--dmax", "2"]);
    usage_error(&[
        "sstest",
        "--mode",
        "X",
        "--degrees",
        "1",
        "--point",
        "1:1",
        "--dbound",
        "1",
    ]);
    usage_error(&["suite", "/nonexistent/suite.conf"]);
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let out = uquot(&[flag]);
        assert_eq!(out.code, 0);
        assert!(!out.stdout.is_empty());
    }
}

fn write_suite(dir: &Path, text: &str) -> String {
    let path = dir.join("suite.conf");
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn suite_aggregates_in_declaration_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_suite(
        dir.path(),
        "[case b]\ndegrees=1,1\nchi=1\ndmax=2\n[case a]\ndegrees=1,1,1,1\nchi=2\ndmax=1\n[case c]\ndegrees=2,2,2\ndmax=2\n",
    );
    let out = ok(&["suite", &path]);
    assert!(
        out.starts_with(r#"{"pass":true,"cases":3,"results":[{"name":"b","#),
        "{out}"
    );
    let a = out.find(r#""name":"a""#).unwrap();
    let c = out.find(r#""name":"c""#).unwrap();
    assert!(a < c);
    // the (1,1,1,1), chi = 2 case sits on a wall
    assert!(out[a..c].contains(r#""warning":"wall""#));
    assert!(!out[c..].contains("warning"));
}

#[test]
fn empty_or_malformed_suites_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for text in ["", "# nothing here\n", "[case a]\ndegrees=1\n", "[case a]\nfoo=1\n"] {
        let path = write_suite(dir.path(), text);
        usage_error(&["suite", &path]);
    }
}

#[test]
fn shipped_suite_passes() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/suite.conf");
    let out = ok(&["suite", path.to_str().unwrap()]);
    assert!(out.starts_with(r#"{"pass":true,"cases":5,"#));
}

#[test]
fn cache_directory_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested/cache");
    let cache = cache.to_str().unwrap();
    let args = ["verify", "--degrees", "1,1,3", "--chi", "2", "--dmax", "3"];
    let plain = ok(&args);
    let mut cached = vec!["--cache-dir", cache];
    cached.extend(args);
    assert_eq!(ok(&cached), plain);
    let files: Vec<_> = fs::read_dir(cache).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!files.is_empty());
    // a corrupted entry is recomputed, not trusted
    fs::write(&files[0], "garbage").unwrap();
    assert_eq!(ok(&cached), plain);
    assert_ne!(fs::read_to_string(&files[0]).unwrap(), "garbage");
}

#[test]
fn binary_matches_library() {
    let args = ["walls", "--degrees", "3,1,1"];
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_uquot"))
        .args(args)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), uquot(&args).stdout);
    let bad = std::process::Command::new(env!("CARGO_BIN_EXE_uquot"))
        .args(["walls"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
