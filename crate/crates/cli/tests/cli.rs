use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn abhk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abhk"))
        .args(args)
        .env("ABHK_CORPUS_DIR", corpus())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn mul_prints_the_normal_form() {
    let o = abhk(&["mul", "usl2.abhk", "X-*X+"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "X+*X- - t\n");
}

#[test]
fn corad_of_ef_is_two() {
    let o = abhk(&["corad", "uqsl2.abhk", "E*F"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("2"));
    let o = abhk(&["corad", "laurent-pi", "X+^3 + X+^2", "--format", "machine"]);
    let out = stdout(&o);
    assert!(out.starts_with("degree\t2\n"), "{out}");
    assert!(out.contains("term\tm=3,n=0,base=0,degree=1"), "{out}");
}

#[test]
fn classify_heisenberg() {
    let o = abhk(&["classify", "heisenberg.abhk"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{i, ii}\n");
}

#[test]
fn check_reports_and_exit_codes() {
    let path = corpus().join("usl2.abhk");
    let o = abhk(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("overall: pass\n"));

    let o = abhk(&["check", "bad-xi.abhk"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("ξ mismatch"));

    let o = abhk(&["check", "uqsl2-case3.abhk", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("overall\tpass\n"), "{out}");
    assert!(out.lines().all(|l| l.contains('\t')), "{out}");
}

#[test]
fn input_errors_exit_with_two() {
    let o = abhk(&["mul", "usl2", "t^-1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("t not invertible"));
    assert_eq!(code(&abhk(&["mul", "usl2", "X+ *"])), 2);
    assert_eq!(code(&abhk(&["check", "no-such-entry"])), 2);
    assert_eq!(
        code(&abhk(&["mul", "usl2", "X+", "--field", "cyclotomic:0"])),
        2
    );
}

#[test]
fn hopf_only_commands_refuse_failed_checks() {
    for cmd in ["coprod", "antipode", "corad"] {
        let o = abhk(&[cmd, "bad-xi", "X+"]);
        assert_eq!(code(&o), 1, "{cmd}");
    }
    assert_eq!(code(&abhk(&["classify", "bad-xi"])), 1);
}

#[test]
fn coproduct_and_antipode() {
    let o = abhk(&["coprod", "usl2", "X+^2"]);
    assert_eq!(stdout(&o), "1 (x) X+^2 + 2*X+ (x) X+ + X+^2 (x) 1\n");
    let o = abhk(&["antipode", "laurent-pi", "X+"]);
    assert_eq!(stdout(&o), "-t^-1*X+\n");
}

#[test]
fn props_has_one_key_per_line() {
    let o = abhk(&["props", "laurent-pi", "--format", "machine"]);
    let out = stdout(&o);
    assert!(out.contains("gk_dim\t3\n"));
    assert!(out.contains("pi.degree\t18\n"));
    let o = abhk(&["props", "laurent-pi"]);
    assert!(stdout(&o).contains("gk_dim: 3\n"));
}

#[test]
fn relabel_recovers_hat_data() {
    let o = abhk(&["relabel", "uqsl2-standard"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("xi: q^-2\n"), "{out}");
    assert!(out.contains("y_plus: K\n"), "{out}");
}

#[test]
fn field_and_nmax_overrides() {
    let o = abhk(&[
        "check",
        "heisenberg",
        "--field",
        "cyclotomic:7",
        "--nmax",
        "5",
    ]);
    assert_eq!(code(&o), 0);
    let o = abhk(&["props", "usl2", "--nmax", "4", "--format", "machine"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn examples_run_the_whole_corpus() {
    let o = abhk(&["examples"]);
    let names: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert!(names.len() >= 9);
    assert!(names.contains(&"usl2".to_string()));
    let o = abhk(&["examples", "--run"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with(" failed\n"));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn examples_fail_on_a_wrong_expectation() {
    let dir = std::env::temp_dir().join(format!("abhk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = std::fs::read_to_string(corpus().join("usl2.abhk")).unwrap();
    std::fs::write(
        dir.join("usl2.abhk"),
        src.replace("classification: {ii}", "classification: {iii}"),
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_abhk"))
        .args(["examples", "--run"])
        .env("ABHK_CORPUS_DIR", &dir)
        .output()
        .unwrap();
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("mismatch"), "{}", stdout(&o));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["examples", "--run", "--format", "machine"],
        vec!["check", "uqsl2-standard"],
        vec!["coprod", "uqsl2", "E*F"],
        vec!["props", "uqsl2-root"],
    ] {
        let a = abhk(&args);
        let b = abhk(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status, b.status);
    }
}
