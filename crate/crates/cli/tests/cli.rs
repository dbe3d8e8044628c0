use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn oggkit(args: &[&str]) -> Run {
    oggkit_env(args, &[])
}

fn oggkit_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_oggkit"));
    cmd.args(args).env_remove("OGGKIT_MAX_N");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn oggkit");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn validate_fixture() {
    let r = oggkit(&["validate", &fixture("s1.ogg")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "VALID elements=2 gammas=1\n");
    let r = oggkit(&["--porcelain", "validate", &fixture("s1.ogg")]);
    assert_eq!(r.stdout, "VALID\t2\t1\n");
}

#[test]
fn verify_l13_and_t14_fail_with_witness() {
    for claim in ["L13", "T14"] {
        let r = oggkit(&["verify", "--claim", claim, &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz")]);
        assert_eq!(r.code, 1, "{claim}");
        assert_eq!(r.stdout, format!("FAIL {claim} witness=((a,b),g,(b,a))\n"));
    }
    let r = oggkit(&["--porcelain", "verify", "--claim", "L13", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz")]);
    assert_eq!(r.stdout, "FAIL\tL13\t((a,b),g,(b,a))\n");
}

#[test]
fn verify_passing_claim_exits_zero() {
    let r = oggkit(&["verify", "--claim", "T6", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.lines().all(|l| l.starts_with("PASS T6.")), "{}", r.stdout);
    let r = oggkit(&["verify", "--claim", "T6.converse", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz")]);
    assert_eq!(r.stdout, "PASS T6.converse\n");
}

#[test]
fn levels_at_threshold() {
    let r = oggkit(&["levels", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz"), "--t", "1/2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "{a}\n");
    let r = oggkit(&["levels", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz")]);
    assert_eq!(r.stdout, "t=0 {a,b}\nt=1 {a}\n");
}

#[test]
fn bad_thresholds_are_input_errors() {
    for t in ["3/2", "0.5", "-1"] {
        let r = oggkit(&["levels", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz"), "--t", t]);
        assert_eq!(r.code, 2, "{t}");
        assert!(r.stdout.is_empty());
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn check_kinds() {
    let r = oggkit(&["check", "--kind", "ideal", &fixture("s1.ogg"), "--subset", "a"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "PASS ideal\n"));
    let r = oggkit(&["check", "--kind", "fuzzy-ideal", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "PASS fuzzy-ideal\n"));
    let r = oggkit(&["check", "--kind", "gamma-semigroup", &fixture("s1.ogg")]);
    assert_eq!(r.code, 0);
    // the empty subset is rejected for ideal predicates
    let r = oggkit(&["check", "--kind", "left-ideal", &fixture("s1.ogg"), "--subset", ""]);
    assert_eq!(r.code, 2);
    let r = oggkit(&["check", "--kind", "ideal", &fixture("s1.ogg")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--kind ideal needs --subset"), "{}", r.stderr);
}

#[test]
fn carrier_mismatch_is_input_error() {
    let r = oggkit(&["verify", "--all", &fixture("s1.ogg"), "--fuzzy", &fixture("s3-antitone.fz")]);
    assert_eq!(r.code, 2);
}

#[test]
fn missing_row_reports_line() {
    let f = temp_file("ogg 1\nelements: a b\ngammas: g\ntable g:\na b\nend\n");
    let r = oggkit(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line "), "{}", r.stderr);
}

#[test]
fn cyclic_order() {
    let f = temp_file("ogg 1\nelements: a b\ngammas: g\ntable g:\na a\na a\norder:\na <= b\nb <= a\nend\n");
    let path = f.path().to_str().unwrap();
    // validate reports the structure as invalid; other commands refuse the input
    let r = oggkit(&["validate", path]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("INVALID "), "{}", r.stdout);
    let r = oggkit(&["check", "--kind", "gamma-semigroup", path]);
    assert_eq!(r.code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(oggkit(&[]).code, 2);
    assert_eq!(oggkit(&["frobnicate"]).code, 2);
    assert_eq!(oggkit(&["verify", "--claim", "T99", &fixture("s1.ogg"), "--fuzzy", &fixture("mu1.fz")]).code, 2);
    assert_eq!(oggkit(&["validate", "/nonexistent/file.ogg"]).code, 2);
}

#[test]
fn product_round_trips() {
    let r = oggkit(&["product", &fixture("s1.ogg")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("ogg 1\nelements: (a,a) (a,b) (b,a) (b,b)\n"), "{}", r.stdout);
    let f = temp_file(&r.stdout);
    let v = oggkit(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(v.stdout, "VALID elements=4 gammas=1\n");
}

#[test]
fn fixtures_validate() {
    for file in ["s1.ogg", "s2.ogg", "s3.ogg", "s4.ogg"] {
        let r = oggkit(&["--porcelain", "validate", &fixture(file)]);
        assert_eq!((r.code, r.stdout.as_str()), (0, "VALID\t2\t1\n"), "{file}");
    }
}

#[test]
fn enumerate_counts_and_caps() {
    let r = oggkit(&["enumerate", "--size", "2", "--gammas", "1", "--count-only"]);
    assert_eq!(r.stdout, "COUNT 28\n");
    let r = oggkit(&["enumerate", "--size", "2", "--gammas", "1", "--order", "trivial", "--count-only"]);
    assert_eq!(r.stdout, "COUNT 16\n");
    let r = oggkit(&["enumerate", "--size", "9", "--gammas", "1", "--count-only"]);
    assert_eq!(r.code, 2);
    let r = oggkit(&["enumerate", "--size", "1", "--gammas", "1"]);
    assert_eq!(r.stdout, "# structure 1\nogg 1\nelements: a\ngammas: g\ntable g:\na\norder:\nend\n");
}

#[test]
fn max_n_env_raises_cap() {
    let args = ["enumerate", "--size", "5", "--gammas", "9", "--count-only"];
    let r = oggkit(&args);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("size 5 above cap 4"), "{}", r.stderr);
    // with the size cap raised, the gamma cap is the next one hit
    let r = oggkit_env(&args, &[("OGGKIT_MAX_N", "5")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("gamma count 9 above cap 2"), "{}", r.stderr);
    let r = oggkit_env(&["enumerate", "--size", "2", "--gammas", "1", "--count-only"], &[("OGGKIT_MAX_N", "x")]);
    assert_eq!(r.code, 2);
}

#[test]
fn hunt_finds_and_misses() {
    let r = oggkit(&["hunt", "--claim", "L13", "--size", "2", "--gammas", "1", "--grid", "0,1"]);
    assert_eq!(r.code, 1);
    let mut lines = r.stdout.lines();
    assert!(lines.next().unwrap().starts_with("FAIL L13 witness="));
    assert!(r.stdout.contains("# structure\nogg 1\n"));
    assert!(r.stdout.contains("# mu\nfuzzy 1\n"));

    let r = oggkit(&["hunt", "--claim", "T11", "--size", "2", "--gammas", "1", "--grid", "0,1"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "NOTFOUND T11 instances=448\n"));
    let r = oggkit(&["--porcelain", "hunt", "--claim", "T11", "--size", "2", "--gammas", "1", "--grid", "0,1"]);
    assert_eq!(r.stdout, "NOTFOUND\tT11\t448\n");
}

#[test]
fn hunt_counterexample_reproduces() {
    let r = oggkit(&["hunt", "--claim", "L13", "--size", "2", "--gammas", "1", "--grid", "0,1"]);
    let doc = |header: &str| -> String {
        let start = r.stdout.find(header).unwrap() + header.len();
        let rest = &r.stdout[start..];
        let end = rest.find("end\n").unwrap() + 4;
        rest[..end].to_owned()
    };
    let s = temp_file(&doc("# structure\n"));
    let mu = temp_file(&doc("# mu\n"));
    let sigma = temp_file(&doc("# sigma\n"));
    let v = oggkit(&[
        "verify",
        "--claim",
        "L13",
        s.path().to_str().unwrap(),
        "--fuzzy",
        mu.path().to_str().unwrap(),
        "--fuzzy2",
        sigma.path().to_str().unwrap(),
    ]);
    assert_eq!(v.code, 1);
    assert_eq!(v.stdout.lines().next(), r.stdout.lines().next());
}

#[test]
fn verify_all_matches_golden() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (s, f, gold) in [
        ("s1.ogg", "mu1.fz", "verify_all_s1_mu1.txt"),
        ("s3.ogg", "s3-antitone.fz", "verify_all_s3_antitone.txt"),
    ] {
        let r = oggkit(&["verify", "--all", &fixture(s), "--fuzzy", &fixture(f)]);
        assert_eq!(r.stdout, std::fs::read_to_string(golden.join(gold)).unwrap(), "{gold}");
        assert_eq!(r.code, 1);
    }
}
