use std::path::Path;
use std::process::{Command, Output};

use cyclo::json::{parse_report, render_report};
use cyclo::Fixtures;
use cyclo_core::lehmer;
use cyclo_core::ntkernel::rat;
use cyclo_core::{Monomial, MultiPoly};

fn cyclo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclo")).args(args).env_remove("CYCLO_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok_line(args: &[&str]) -> String {
    let o = cyclo(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim_end().to_string()
}

#[test]
fn computation_examples() {
    assert_eq!(ok_line(&["poly", "12"]), "x^4 - x^2 + 1");
    assert_eq!(ok_line(&["poly", "5"]), "x^4 + x^3 + x^2 + x + 1");
    assert_eq!(ok_line(&["ratio", "5", "3"]), "6");
    assert_eq!(ok_line(&["ratio", "3", "2"]), "2/3");
    assert_eq!(ok_line(&["deriv", "5", "1"]), "10");
    assert_eq!(ok_line(&["deriv", "5", "3"]), "30");
    assert_eq!(ok_line(&["totient", "2", "5"]), "24");
    assert_eq!(ok_line(&["vn", "5"]), "x^4 + 5*x^2 + 5");
    assert_eq!(ok_line(&["fkn", "2", "3"]), "x^2 - x + 2/3\nintegral: false");
    assert_eq!(ok_line(&["sk", "2"]), "(1/3)*(3*x1 - x2)");

    let f3: MultiPoly = "(x1-1)(x1^2 - 2x1 + x2)".parse().unwrap();
    for route in ["partition", "series", "reconstruct"] {
        assert_eq!(ok_line(&["fk", "3", "--route", route]), f3.to_string());
    }
    let omega2: MultiPoly = "x4 - 5x2(x2-1)".parse().unwrap();
    assert_eq!(ok_line(&["omega", "2"]), omega2.to_string());
}

#[test]
fn usage_and_domain_errors_exit_2() {
    for args in [
        &[][..],
        &["bogus"],
        &["poly"],
        &["poly", "x"],
        &["ratio", "1", "2"],
        &["poly", "0"],
        &["sk", "0"],
        &["omega", "0"],
        &["fkn", "3", "2"],
        &["fk", "3", "--route", "nope"],
        &["verify", "nothing"],
        &["verify", "lehmer", "--jobs", "0"],
        &["verify", "lehmer", "--n-min", "50", "--n-max", "10"],
        &["verify", "lehmer", "--fk-table", "/nonexistent/fixtures.json"],
    ] {
        let o = cyclo(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(cyclo(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(cyclo(&["verify", "conjecture", "--k-max", "6"]).status.code(), Some(0));
    let o = cyclo(&["verify", "ak", "--n-max", "60", "--k-max", "6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_report(&stdout(&o)).unwrap().status().as_str(), "pass");
}

/// Writes the fixture tables with `F_k`'s coefficient at `m` shifted by one.
fn perturbed_fixtures(dir: &Path, k: usize, m: Monomial) -> std::path::PathBuf {
    let path = dir.join("fixtures.json");
    assert_eq!(cyclo(&["--emit-fixtures", path.to_str().unwrap()]).status.code(), Some(0));
    let mut fx = Fixtures::read(&path).unwrap();
    let f: MultiPoly = fx.f[k].poly.parse().unwrap();
    fx.f[k].poly = (&f + &MultiPoly::term(rat(1), m)).to_string();
    let out = dir.join(format!("perturbed-{k}.json"));
    fx.write(&out).unwrap();
    out
}

#[test]
fn emitted_fixtures_match_computation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fx.json");
    assert_eq!(cyclo(&["--emit-fixtures", path.to_str().unwrap()]).status.code(), Some(0));
    let fx = Fixtures::read(&path).unwrap();
    assert_eq!(fx.k_max, 12);
    let table = fx.f_table().unwrap();
    assert_eq!(table.len(), 13);
    for (k, f) in table.iter().enumerate() {
        assert_eq!(f, &lehmer::f_poly(k).unwrap());
    }
    assert_eq!(fx.s[0].poly, "-x1");
    assert_eq!(fx.omega[0].poly, "x2");
    let clean = cyclo(&["verify", "lehmer", "--n-max", "40", "--fk-table", path.to_str().unwrap()]);
    assert_eq!(clean.status.code(), Some(0));
}

#[test]
fn perturbed_table_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = perturbed_fixtures(dir.path(), 3, Monomial::from_pairs([(1, 1), (2, 1)]));
    let p = path.to_str().unwrap();
    for claim in ["lehmer", "routes", "conjecture"] {
        let o = cyclo(&["verify", claim, "--n-max", "30", "--k-max", "5", "--fk-table", p, "--json", "--no-timing"]);
        assert_eq!(o.status.code(), Some(1), "{claim}");
        let report = parse_report(&stdout(&o)).unwrap();
        assert!(!report.counterexamples().is_empty(), "{claim}");
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = perturbed_fixtures(dir.path(), 4, Monomial::var(4));
    for args in [
        vec!["verify", "integrality", "--n-max", "25", "--json"],
        vec!["verify", "lehmer", "--n-max", "25", "--json", "--fk-table", path.to_str().unwrap()],
    ] {
        let text = stdout(&cyclo(&args));
        let emitted = text.trim_end();
        let rendered = render_report(&parse_report(emitted).unwrap());
        assert_eq!(rendered, emitted);
    }
}

#[test]
fn parallel_matches_serial() {
    let dir = tempfile::tempdir().unwrap();
    let path = perturbed_fixtures(dir.path(), 6, Monomial::from_pairs([(2, 2)]));
    let p = path.to_str().unwrap();
    for base in [
        vec!["verify", "integrality", "--n-max", "40", "--k-max", "8", "--m-max", "4"],
        vec!["verify", "lehmer", "--n-max", "60", "--fk-table", p],
        vec!["verify", "wmodp"],
    ] {
        let run = |jobs: &str| {
            let mut args = base.clone();
            args.extend(["--json", "--no-timing", "--jobs", jobs]);
            let o = cyclo(&args);
            (o.status.code(), o.stdout)
        };
        let serial = run("1");
        assert_eq!(run("4"), serial, "{base:?}");
        assert_eq!(run("3"), serial, "{base:?}");
    }
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cyclo::run_with(["cyclo", "poly", "12"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "x^4 - x^2 + 1\n");
    let code = cyclo::run_with(["cyclo", "deriv"], &mut Vec::new(), &mut err);
    assert_eq!(code, 2);
}
