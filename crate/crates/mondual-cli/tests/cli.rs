//! End-to-end tests against the built binary: exit codes, pipelines, and
//! the determinism guarantees of the emitted files.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mondual"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn mondual");
    child
        .stdin
        .take()
        .expect("stdin handle")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait for mondual")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no exit code")
}

fn corpus(spec: &[&str]) -> String {
    let mut args = vec!["corpus"];
    args.extend_from_slice(spec);
    let out = run(&args, "");
    assert_eq!(exit_code(&out), 0, "corpus {spec:?} failed");
    stdout_of(&out)
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mondual-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).expect("create scratch dir");
    dir
}

#[test]
fn reflexive_pipeline_reports_three_three_three() {
    let file = corpus(&["dot_mu", "2"]);
    let out = run(&["reflexivity"], &file);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("monoid size: 3"), "{text}");
    assert!(text.contains("dual size: 3"), "{text}");
    assert!(text.contains("bidual size: 3"), "{text}");
    assert!(text.contains("verdict: reflexive"), "{text}");
    assert!(text.contains("machine: size=3 dual=3 bidual=3"), "{text}");
}

#[test]
fn truncated_add_reflexivity_names_the_uninvertible_element() {
    let file = corpus(&["truncated_add", "2"]);
    let out = run(&["reflexivity"], &file);
    // verdict and prediction agree, so the run itself succeeds
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("verdict: not reflexive"), "{text}");
    assert!(
        text.contains("reason: not inverse: element 1 has 0 inverses"),
        "{text}"
    );
    assert!(text.contains("delta injective: no"), "{text}");
}

#[test]
fn dual_of_c2_has_two_homs() {
    let file = corpus(&["cyclic_group", "2"]);
    let out = run(&["dual"], &file);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("elements: h0 h1\n"), "{text}");
    assert!(text.contains("homs:\nh0: 0/1 0/1\nh1: 0/1 1/2\n"), "{text}");
}

#[test]
fn dual_methods_emit_identical_bytes() {
    for spec in [
        vec!["dot_mu", "3"],
        vec!["strong_semilattice", "2"],
        vec!["direct_product", "cyclic_group", "2", "chain_semilattice", "2"],
    ] {
        let file = corpus(&spec);
        let brute = run(&["dual", "--method", "brute"], &file);
        let clifford = run(&["dual", "--method", "clifford"], &file);
        assert_eq!(exit_code(&brute), 0);
        assert_eq!(exit_code(&clifford), 0);
        assert_eq!(brute.stdout, clifford.stdout, "methods differ on {spec:?}");
    }
}

#[test]
fn clifford_method_rejects_non_abelian_input() {
    let file = corpus(&["symmetric_inverse_monoid", "2"]);
    let out = run(&["dual", "--method", "clifford"], &file);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn validate_reports_positioned_errors() {
    let good = corpus(&["boolean_semilattice", "2"]);
    let out = run(&["validate"], &good);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("valid: yes"));

    let out = run(&["validate"], "elements: 1 a\nunit: 1\ntable:\n1 a\na b\n");
    assert_eq!(exit_code(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("valid: no"), "{text}");
    assert!(text.contains("line 5"), "{text}");

    // shape is fine but the table is not associative
    let out = run(
        &["validate"],
        "elements: e a b\nunit: e\ntable:\ne a b\na e e\nb e a\n",
    );
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("valid: no"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(exit_code(&run(&["frobnicate"], "")), 64);
    assert_eq!(exit_code(&run(&["dual", "--bogus"], "")), 64);
    assert_eq!(exit_code(&run(&[], "")), 64);
    assert_eq!(exit_code(&run(&["--help"], "")), 0);
    assert_eq!(exit_code(&run(&["corpus", "--help"], "")), 0);
}

#[test]
fn corpus_spec_errors_exit_1() {
    assert_eq!(exit_code(&run(&["corpus", "nonsense", "3"], "")), 1);
    assert_eq!(exit_code(&run(&["corpus", "cyclic_group"], "")), 1);
    assert_eq!(exit_code(&run(&["corpus", "cyclic_group", "x"], "")), 1);
    assert_eq!(
        exit_code(&run(&["corpus", "cyclic_group", "2", "junk"], "")),
        1
    );
    assert_eq!(exit_code(&run(&["corpus", "strong_semilattice", "9"], "")), 1);
    // generators validate their own ranges
    assert_eq!(
        exit_code(&run(&["corpus", "symmetric_inverse_monoid", "5"], "")),
        1
    );
    assert_eq!(exit_code(&run(&["corpus", "cyclic_group", "0"], "")), 1);
}

#[test]
fn corpus_output_round_trips_through_validate() {
    for spec in [
        vec!["cyclic_group", "6"],
        vec!["boolean_semilattice", "3"],
        vec!["symmetric_inverse_monoid", "3"],
        vec!["adjoin_zero", "direct_product", "cyclic_group", "2", "cyclic_group", "3"],
    ] {
        let file = corpus(&spec);
        let out = run(&["validate"], &file);
        assert_eq!(exit_code(&out), 0, "corpus {spec:?} did not validate");
    }
}

#[test]
fn bidual_pipeline_prints_the_evaluation_map() {
    let file = corpus(&["cyclic_group", "3"]);
    let out = run(&["bidual"], &file);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("delta:\n"), "{text}");
    assert_eq!(text.matches(" -> ").count(), 3, "{text}");
    // bidual of a group is a group of the same size
    assert!(text.contains("elements: h0 h1 h2\n"), "{text}");
}

#[test]
fn analyze_prints_the_clifford_structure() {
    let file = corpus(&["strong_semilattice", "1"]);
    let out = run(&["analyze"], &file);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("clifford: yes"), "{text}");
    assert!(text.contains("hasse:\nc0_0 < c1_0\n"), "{text}");
    assert!(text.contains("H[c1_0]: c1_0 c1_1"), "{text}");
    assert!(text.contains("pi:\n"), "{text}");

    // non-inverse input still gets a classification, minus the structure
    let file = corpus(&["truncated_add", "2"]);
    let out = run(&["analyze"], &file);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("inverse: no (element 1 has 0 inverses)"), "{text}");
    assert!(text.contains("clifford: no"), "{text}");
    assert!(!text.contains("pi:"), "{text}");
}

#[test]
fn check_all_passes_a_directory_of_corpus_files() {
    let dir = scratch_dir("check-all-ok");
    for (name, spec) in [
        ("dot_mu_3", vec!["dot_mu", "3"]),
        ("i2", vec!["symmetric_inverse_monoid", "2"]),
        ("trunc", vec!["truncated_add", "3"]),
        ("tower", vec!["strong_semilattice", "3"]),
    ] {
        fs::write(dir.join(format!("{name}.monoid")), corpus(&spec)).unwrap();
    }
    // files with other extensions are not picked up
    fs::write(dir.join("notes.txt"), "not a monoid").unwrap();
    let out = run(&["check-all", dir.to_str().unwrap()], "");
    assert_eq!(exit_code(&out), 0, "{}", stdout_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("dot_mu_3.monoid: ok"), "{text}");
    assert!(text.contains("checked 4 files: 4 ok, 0 violated, 0 invalid"), "{text}");
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn check_all_flags_invalid_files() {
    let dir = scratch_dir("check-all-invalid");
    fs::write(dir.join("good.monoid"), corpus(&["cyclic_group", "2"])).unwrap();
    fs::write(dir.join("bad.monoid"), "elements: x\nunit: x\ntable:\nx x\n").unwrap();
    let out = run(&["check-all", dir.to_str().unwrap()], "");
    assert_eq!(exit_code(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("bad.monoid: invalid"), "{text}");
    assert!(text.contains("good.monoid: ok"), "{text}");
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn output_flag_writes_the_same_bytes_as_stdout() {
    let dir = scratch_dir("output-flag");
    let path = dir.join("c4.monoid");
    let out = run(&["corpus", "cyclic_group", "4", "-o", path.to_str().unwrap()], "");
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).is_empty());
    let via_file = fs::read_to_string(&path).unwrap();
    assert_eq!(via_file, corpus(&["cyclic_group", "4"]));

    let dual_path = dir.join("c4.dual.monoid");
    let out = run(
        &["dual", path.to_str().unwrap(), "-o", dual_path.to_str().unwrap()],
        "",
    );
    assert_eq!(exit_code(&out), 0);
    let dual_text = fs::read_to_string(&dual_path).unwrap();
    let piped = run(&["dual"], &via_file);
    assert_eq!(dual_text, stdout_of(&piped));
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn emitted_duals_reparse_and_validate() {
    let file = corpus(&["dot_mu", "4"]);
    let dual = stdout_of(&run(&["dual"], &file));
    let out = run(&["validate"], &dual);
    assert_eq!(exit_code(&out), 0, "{dual}");
    let bidual = stdout_of(&run(&["bidual"], &dual));
    let out = run(&["validate"], &bidual);
    assert_eq!(exit_code(&out), 0, "{bidual}");
}
