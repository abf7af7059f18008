use abacus_lab::classes::HookClassReport;
use abacus_lab::extremal::FamilyResult;
use abacus_lab::oracle::PropertyReport;
use abacus_lab::RunnerMatrix;
use abacus_lab_cli::{dispatch_with_input, Outcome};

fn run(args: &[&str]) -> Outcome {
    run_with(args, "")
}

fn run_with(args: &[&str], stdin: &str) -> Outcome {
    let mut argv = vec!["abacus-lab"];
    argv.extend_from_slice(args);
    dispatch_with_input(argv, &mut stdin.as_bytes())
}

#[test]
fn mullineux_with_and_without_prime() {
    let out = run(&["mullineux", "--e", "5", "--prime", "6,4,2"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "5,3,3,1\n"));
    let out = run(&["mullineux", "--e", "5", "6,4,2"]);
    assert_eq!(out.stdout, "4,3,3,1,1\n");
    let out = run(&["--json", "mullineux", "--e", "5", "--prime", "6,4,2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["image"], "5,3,3,1");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["mullineux", "--e", "5", "1,1,1,1,1"]).code, 3);
    assert_eq!(run(&["core", "--e", "5", "6,x,2"]).code, 2);
    assert_eq!(run(&["core", "6,4,2"]).code, 2);
    assert_eq!(run(&["core", "--e", "2", "6,4,2"]).code, 2);
    assert_eq!(run(&["classify", "--e", "6", "--d", "3", "6,4,2"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["minimize", "--e", "3", "--d", "2", "1,1,1"]).code, 3);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify"));
}

#[test]
fn json_outputs_follow_the_library_schemas() {
    let out = run(&["classify", "--e", "5", "--d", "3", "5,3,3,1"]);
    let report: HookClassReport = serde_json::from_str(&out.stdout).unwrap();
    assert!(report.shift_balanced && !report.balanced);
    assert_eq!(
        serde_json::to_string(&report).unwrap(),
        out.stdout.trim_end()
    );

    let out = run(&["--json", "runner-matrix", "--e", "5", "--d", "3", "6,4,2"]);
    let m: RunnerMatrix = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(m.to_string(), "[[0,0,1,0,0],[0,0,0,0,1]]");

    let out = run(&[
        "family",
        "--e",
        "5",
        "--d",
        "3",
        "--core",
        "1,1",
        "--matrix",
        "[[0,0,1,0,0],[0,0,0,0,1]]",
    ]);
    let fam: FamilyResult = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(serde_json::to_string(&fam).unwrap(), out.stdout.trim_end());
}

#[test]
fn bad_matrix_is_a_validation_error() {
    let out = run(&[
        "family",
        "--e",
        "5",
        "--d",
        "3",
        "--core",
        "1,1",
        "--matrix",
        "[[0,0,1]]",
    ]);
    assert_eq!(out.code, 2);
    let out = run(&[
        "family", "--e", "5", "--d", "3", "--core", "1,1", "--matrix", "nope",
    ]);
    assert_eq!(out.code, 2);
    let out = run(&[
        "family",
        "--e",
        "5",
        "--d",
        "3",
        "--core",
        "5",
        "--matrix",
        "[[0,0,0,0,0],[0,0,0,0,0]]",
    ]);
    assert_eq!(out.code, 3);
}

#[test]
fn batch_mode_keeps_input_order() {
    let out = run_with(
        &["mullineux", "--e", "5", "--prime"],
        "6,4,2\n\n5,3,3,1\n1\n",
    );
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "5,3,3,1\n3,2,2,2,1,1,1\n1\n");
    let out = run_with(&["core", "--e", "3"], "4\n2,x\n1\n");
    assert_eq!(out.code, 2);
    assert_eq!(out.stdout, "{\"core\":\"1\",\"weight\":1}\n");
    assert!(out.stderr.starts_with("2,x"));
}

#[test]
fn thread_cap_is_honoured() {
    std::env::set_var("ABACUS_LAB_THREADS", "1");
    let out = run_with(&["maximize", "--e", "5", "--d", "3"], "5,3,3,1\n6,3,2,1\n");
    std::env::remove_var("ABACUS_LAB_THREADS");
    assert_eq!(out.stdout, "6,4,2\n6,4,2\n");
}

#[test]
fn trace_and_render() {
    let out = run(&[
        "mullineux",
        "--e",
        "5",
        "--d",
        "3",
        "--trace",
        "--prime",
        "6,4,2",
    ]);
    assert_eq!(out.stdout.lines().count(), 6);
    assert!(out
        .stdout
        .lines()
        .all(|l| !l.contains("combined pair false")));
    let out = run(&["render", "--e", "5", "6,4,2"]);
    assert!(out.stdout.contains(" -5 | o o . . o"), "{}", out.stdout);
    let out = run(&["--render", "j", "--e", "5", "6,4,2"]);
    assert!(out.stdout.starts_with("4,3\n"));
    assert!(out.stdout.contains('|'));
}

#[test]
fn verify_small_config() {
    let out = run(&["verify", "--max-n", "5", "--pairs", "2:3,3:5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    for line in out.stdout.lines() {
        let r: PropertyReport = serde_json::from_str(line).unwrap();
        assert_eq!(r.failures, 0);
    }
    assert_eq!(run(&["verify", "--pairs", "3:6"]).code, 2);
}
