//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cyclo::parallel;
use cyclo::Fixtures;
use cyclo_core::fps::{arcsinh_series, exp_t_series, TruncSeries};
use cyclo_core::lehmer::{self, checks, integrality_value, LehmerTable, Route};
use cyclo_core::ntkernel::{factorial, rat, ratio};
use cyclo_core::sweep::{Claim, SweepBounds, Task, Verifier};
use cyclo_core::{MultiPoly, Rational, Status, VerificationReport};

type Outcome = Result<String, String>;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// LaTeX notation to the parser's grammar: `\frac{a}{b}` becomes `(a/b)`.
fn from_latex(src: &str) -> String {
    let mut s = src.trim().trim_end_matches([',', '.', '\\']).replace("\\left", "").replace("\\right", "");
    while let Some(i) = s.find("\\frac{") {
        let rest = &s[i + 6..];
        let num_end = rest.find('}').expect("numerator");
        let num = &rest[..num_end];
        let after = &rest[num_end + 1..];
        assert!(after.starts_with('{'), "denominator");
        let den_end = after.find('}').expect("denominator");
        let den = &after[1..den_end];
        let tail = &after[den_end + 1..];
        s = format!("{}({num}/{den}){tail}", &s[..i]);
    }
    s
}

fn from_tex(src: &str) -> MultiPoly {
    from_latex(src).parse().unwrap_or_else(|e| panic!("{src}: {e}"))
}

fn criterion_1() -> Outcome {
    let s_rows = [
        r"- x_1",
        r"\frac{1}{3}(3x_1 - x_2)",
        r"- \frac{1}{2}(2x_1 - x_2)",
        r"\frac{1}{90}(90x_1 - 55x_2 + x_4)",
        r"- \frac{1}{36}(36x_1 - 25x_2 + x_4)",
    ];
    let f_rows = [
        r"x_1",
        r"\frac{1}{3}(3x_1^2 - 3x_1 + x_2)",
        r"(x_1-1)(x_1^2 - 2x_1 + x_2)",
        r"\frac{1}{15} (15x_1^4 - 90x_1^3 + (30x_2 + 165) x_1^2 - (90x_2+90)x_1 + 5x_2^2 + 55x_2 - x_4)",
        r"\frac{1}{3}(x_1 - 2) (3x_1^4 - 24x_1^3 + (10x_2 + 57)x_1^2 - (40x_2+36)x_1 +5x_2^2 + 25x_2 - x_4)",
    ];
    let omega_rows = [
        r"x_2",
        r"x_4 - 5x_2(x_2-1)",
        r"x_6 - 7x_4(x_2-1) + \frac{35}{3} x_2(x_2 - 1)(x_2 - 2) + \frac{14}{3} x_2",
    ];
    let fx = Fixtures::compute(6).map_err(|e| e.to_string())?;
    let mut compared = 0;
    let mut compare = |name: String, expected: &str, got: &str| -> Result<(), String> {
        compared += 1;
        let want = from_tex(expected).to_string();
        if want == got {
            Ok(())
        } else {
            Err(format!("{name}: expected {want:?}, computed {got:?}"))
        }
    };
    for (j, row) in s_rows.iter().enumerate() {
        compare(format!("s_{}", j + 1), row, &fx.s[j].poly)?;
    }
    for (k, row) in f_rows.iter().enumerate() {
        compare(format!("F_{}", k + 1), row, &fx.f[k + 1].poly)?;
    }
    for (m, row) in omega_rows.iter().enumerate() {
        compare(format!("Omega_{}", m + 1), row, &fx.omega[m].poly)?;
    }
    Ok(format!("{compared} polynomials match character for character"))
}

fn criterion_2() -> Outcome {
    let tables: Vec<LehmerTable> =
        Route::ALL.iter().map(|&r| LehmerTable::build(12, r)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    for t in &tables[1..] {
        for k in 0..=12 {
            if t.f(k) != tables[0].f(k) {
                return Err(format!("F_{k}: {} route differs from {}", t.route().as_str(), tables[0].route().as_str()));
            }
        }
    }
    Ok("partition, series and reconstruction agree for k = 0..=12".into())
}

fn sweep_outcome(claim: Claim, bounds: SweepBounds) -> Outcome {
    let r = parallel::sweep(&Verifier::new(), claim, &bounds, jobs()).map_err(|e| e.to_string())?;
    report_outcome(&r)
}

fn report_outcome(r: &VerificationReport) -> Outcome {
    match r.status() {
        Status::Pass => Ok(format!("{} [{}] pass", r.claim_id(), r.range())),
        _ => Err(r.to_string()),
    }
}

fn criterion_3() -> Outcome {
    sweep_outcome(Claim::Lehmer, SweepBounds { n_min: 2, n_max: 200, k_max: 12, m_max: 1 })
}

fn criterion_4() -> Outcome {
    sweep_outcome(Claim::Conjecture, SweepBounds { n_min: 1, n_max: 1, k_max: 6, m_max: 1 })
}

fn criterion_5() -> Outcome {
    let main = sweep_outcome(Claim::Integrality, SweepBounds { n_min: 3, n_max: 200, k_max: 12, m_max: 8 })?;
    let boundary = checks::check_integrality(4, 1);
    if boundary.status() != Status::NotApplicable {
        return Err(format!("n=4, m=1 should be not_applicable: {boundary}"));
    }
    let value = integrality_value(4, 1).map_err(|e| e.to_string())?;
    if value != ratio(1, 2) {
        return Err(format!("n=4, m=1 value is {value}, expected 1/2"));
    }
    Ok(format!("{main}; n=4, m=1 not_applicable with value {value}"))
}

fn criterion_6() -> Outcome {
    sweep_outcome(Claim::Ak, SweepBounds { n_min: 3, n_max: 500, k_max: 6, m_max: 1 })
}

fn criterion_7() -> Outcome {
    let parts = [
        (Claim::WFactorization, SweepBounds { n_min: 1, n_max: 200, k_max: 1, m_max: 1 }),
        (Claim::WModP, SweepBounds { n_min: 3, n_max: 200, k_max: 1, m_max: 1 }),
        (Claim::WExpansion, SweepBounds { n_min: 3, n_max: 200, k_max: 1, m_max: 8 }),
    ];
    let lines = parts.into_iter().map(|(c, b)| sweep_outcome(c, b)).collect::<Result<Vec<_>, _>>()?;
    Ok(lines.join("; "))
}

fn inv_fact(n: usize) -> Rational {
    Rational::new(1.into(), factorial(n))
}

fn criterion_8() -> Outcome {
    const N: usize = 12;
    let err = |e: cyclo_core::Error| e.to_string();
    let t = TruncSeries::<Rational>::t(N);
    let one_plus_t = TruncSeries::one(N).add(&t).map_err(err)?;
    let sinh = TruncSeries::from_fn(N, |j| if j % 2 == 1 { inv_fact(j) } else { rat(0) });

    let mut failures = Vec::new();
    let mut expect = |name: &str, lhs: TruncSeries<Rational>, rhs: &TruncSeries<Rational>| {
        if &lhs != rhs {
            failures.push(name.to_string());
        }
    };
    let log1p_t = t.log1p().map_err(err)?;
    expect("exp(log(1+t)) = 1+t", log1p_t.exp().map_err(err)?, &one_plus_t);
    let e_minus_one = exp_t_series(N).sub(&TruncSeries::one(N)).map_err(err)?;
    expect("log(1+(e^t-1)) = t", e_minus_one.log1p().map_err(err)?, &t);
    expect("arcsinh(sinh t) = t", arcsinh_series(N).compose(&sinh).map_err(err)?, &t);
    let arg = t.mul(&t.binomial_pow(&ratio(-1, 2)).map_err(err)?).map_err(err)?.scale(&ratio(1, 2));
    let rhs = arcsinh_series(N).compose(&arg).map_err(err)?.scale(&rat(2));
    expect("log(1+t) = 2 arcsinh(t/(2 sqrt(1+t)))", rhs, &log1p_t);
    if failures.is_empty() {
        Ok(format!("4 identities hold through t^{N}"))
    } else {
        Err(failures.join(", "))
    }
}

/// Shifts each coefficient of each `F_k` (k ≤ 12) in turn and requires the
/// route, identity or conjecture check to notice; then confirms the CLI
/// exits 1 on a perturbed fixture file.
fn criterion_9() -> Outcome {
    let verifier_tasks = |k: usize| {
        let mut t = vec![Task::Routes { k }];
        t.extend((2..=40).map(|n| Task::Lehmer { n, k }));
        if k % 2 == 1 {
            t.push(Task::Conjecture { k: k / 2 });
        }
        t
    };
    let golden: Vec<MultiPoly> = (0..=12).map(lehmer::f_poly).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let mut mutants = 0;
    for k in 1..=12 {
        for (m, c) in golden[k].terms() {
            for delta in [rat(1), ratio(-1, 3)] {
                let mut table = golden.clone();
                table[k] = &golden[k] + &MultiPoly::term(delta.clone(), m.clone());
                let v = Verifier::with_f_table(table);
                let caught = if k <= 5 {
                    verifier_tasks(k).iter().any(|t| v.run(t).status() == Status::Fail)
                } else {
                    (2..=40).any(|n| v.run(&Task::Lehmer { n, k }).status() == Status::Fail)
                };
                if !caught {
                    return Err(format!("F_{k} with coefficient of {m} moved from {c} by {delta} went unnoticed"));
                }
                mutants += 1;
            }
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("fixtures.json");
    let mut fx = Fixtures::compute(12).map_err(|e| e.to_string())?;
    let f5: MultiPoly = fx.f[5].poly.parse().map_err(|e: cyclo_core::Error| e.to_string())?;
    let (m, _) = f5.terms().next().ok_or("F_5 is empty")?;
    fx.f[5].poly = (&f5 + &MultiPoly::term(rat(1), m.clone())).to_string();
    fx.write(&path).map_err(|e| e.to_string())?;
    for claim in ["routes", "lehmer", "conjecture"] {
        let out = Command::new(env!("CARGO_BIN_EXE_cyclo"))
            .args(["verify", claim, "--n-max", "30", "--k-max", "6", "--json", "--fk-table"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        let report = cyclo::json::parse_report(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
        if out.status.code() != Some(1) || report.counterexamples().is_empty() {
            return Err(format!("cyclo verify {claim} on a perturbed F_5 exited {:?}", out.status.code()));
        }
    }
    Ok(format!("{mutants} single-coefficient mutants caught; CLI exits 1 with counterexamples"))
}

struct Criterion {
    number: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, name: "golden tables", limit: Duration::from_secs(1), run: criterion_1 },
        Criterion { number: 2, name: "triple-route agreement", limit: Duration::from_secs(30), run: criterion_2 },
        Criterion { number: 3, name: "Lehmer identity", limit: Duration::from_secs(120), run: criterion_3 },
        Criterion { number: 4, name: "conjecture divisibility", limit: Duration::from_secs(10), run: criterion_4 },
        Criterion { number: 5, name: "integrality", limit: Duration::from_secs(120), run: criterion_5 },
        Criterion { number: 6, name: "Akiyama-Kaneko congruences", limit: Duration::from_secs(180), run: criterion_6 },
        Criterion { number: 7, name: "Chebyshev layer", limit: Duration::from_secs(60), run: criterion_7 },
        Criterion { number: 8, name: "series identities", limit: Duration::from_secs(5), run: criterion_8 },
        Criterion { number: 9, name: "mutation sensitivity", limit: Duration::MAX, run: criterion_9 },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > c.limit => Err(format!("{msg}; took {elapsed:?}, limit {:?}", c.limit)),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {} ({}): PASS in {} ms: {msg}", c.number, c.name, elapsed.as_millis()),
            Err(msg) => {
                failed += 1;
                println!("criterion {} ({}): FAIL in {} ms: {msg}", c.number, c.name, elapsed.as_millis());
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
