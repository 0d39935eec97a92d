//! Acceptance criteria 1-7. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Every comparison is exact; the only
//! tolerances are the wall-clock budgets below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::Value;

use grothlab::algebra::{Monomial, Polynomial};
use grothlab::polynomials::expand_in_pschur;
use grothlab_cli::suites::{self, Report, Scale};

const BUDGET_EXAMPLE: Duration = Duration::from_secs(1);
const BUDGET_ROUTES: Duration = Duration::from_secs(300);
const BUDGET_LEMMA: Duration = Duration::from_secs(60);
const BUDGET_BIJECTIONS: Duration = Duration::from_secs(120);
const BUDGET_OTHER: Duration = Duration::from_secs(300);

type Check = Box<dyn Fn() -> Outcome>;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[Report]) -> Outcome {
    let ok = reports.iter().all(Report::passed);
    let mut detail = reports
        .iter()
        .map(Report::summary)
        .collect::<Vec<_>>()
        .join("; ");
    for r in reports {
        for f in r.failures.iter().take(3) {
            detail.push_str(&format!("\n    {}", f.replace('\n', " / ")));
        }
    }
    Outcome { ok, detail }
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_grothlab"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{:?} exited with {:?}", args, out.status.code()));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

/// The degree-4 part of P_(2,1)(x1, x2; t1, t2) as printed in the worked
/// example: x1^3 x2 t1 + x1^3 x2 t2 + 2 x1^2 x2^2 t1 + 2 x1^2 x2^2 t2
/// + x1 x2^3 t1 + x1 x2^3 t2.
fn example_slice() -> Polynomial {
    let terms = [
        (1, [3, 1], [1, 0]),
        (1, [3, 1], [0, 1]),
        (2, [2, 2], [1, 0]),
        (2, [2, 2], [0, 1]),
        (1, [1, 3], [1, 0]),
        (1, [1, 3], [0, 1]),
    ];
    Polynomial::from_terms(
        2,
        2,
        terms
            .iter()
            .map(|(c, x, t)| (Monomial::new(x.to_vec(), t.to_vec()), BigInt::from(*c))),
    )
    .expect("two x and two t variables")
}

fn criterion_1() -> Outcome {
    let run = || -> Result<Vec<String>, String> {
        let mut problems = Vec::new();
        let v = cli_json(&[
            "compute", "P", "2,1", "--n", "2", "--tcap", "1", "--format", "json",
        ])?;
        if v["verdict"] != "AGREE" {
            problems.push("routes disagree".to_string());
        }
        for route in ["algebraic", "combinatorial"] {
            let lines: Vec<&str> = v[route]["terms"]
                .as_array()
                .ok_or("missing terms")?
                .iter()
                .filter_map(Value::as_str)
                .collect();
            let poly = Polynomial::from_lines(2, 2, lines).map_err(|e| e.to_string())?;
            let slice = poly.x_slice(4);
            if slice != example_slice() {
                problems.push(format!("{} degree-4 slice is {}", route, slice));
            }
            let expansion = expand_in_pschur(&slice).map_err(|e| e.to_string())?;
            if expansion.to_text() != "(3,1) : t1 + t2\n" {
                problems.push(format!(
                    "{} slice expands as {:?}",
                    route,
                    expansion.to_text()
                ));
            }
        }
        let e = cli_json(&[
            "expand", "P", "2,1", "--n", "2", "--tcap", "1", "--format", "json",
        ])?;
        let coefficient = e["coefficients"]
            .as_array()
            .ok_or("missing coefficients")?
            .iter()
            .find(|c| c["lambda"] == serde_json::json!([3, 1]))
            .map(|c| c["coefficient"].clone());
        if coefficient != Some(Value::from("t1 + t2")) {
            problems.push(format!(
                "cli expansion gives P_(3,1) coefficient {:?}",
                coefficient
            ));
        }
        Ok(problems)
    };
    match run() {
        Ok(p) if p.is_empty() => Outcome {
            ok: true,
            detail: "degree-4 slice and expansion t1*P_(3,1) + t2*P_(3,1) reproduced".into(),
        },
        Ok(p) => Outcome {
            ok: false,
            detail: p.join("; "),
        },
        Err(e) => Outcome {
            ok: false,
            detail: e,
        },
    }
}

fn criterion_4(scale: Scale) -> Outcome {
    from_reports(&[
        suites::psi_suite(scale),
        suites::phi_suite(scale),
        suites::maximal(scale),
    ])
}

fn main() -> ExitCode {
    let scale = Scale::from_env();
    println!("acceptance census scale={}", scale);
    let criteria: Vec<(u32, &str, Duration, Check)> = vec![
        (
            1,
            "worked example P_(2,1)",
            BUDGET_EXAMPLE,
            Box::new(criterion_1),
        ),
        (
            2,
            "route equivalence",
            BUDGET_ROUTES,
            Box::new(move || from_reports(&[suites::routes(scale)])),
        ),
        (
            3,
            "h-multiplication lemma",
            BUDGET_LEMMA,
            Box::new(move || from_reports(&[suites::lemma(scale)])),
        ),
        (
            4,
            "bijections",
            BUDGET_BIJECTIONS,
            Box::new(move || criterion_4(scale)),
        ),
        (
            5,
            "positivity",
            BUDGET_OTHER,
            Box::new(move || from_reports(&[suites::positivity(scale)])),
        ),
        (
            6,
            "t = 0 specialization",
            BUDGET_OTHER,
            Box::new(move || from_reports(&[suites::specialization(scale)])),
        ),
        (
            7,
            "signed/unsigned factor",
            BUDGET_OTHER,
            Box::new(move || from_reports(&[suites::signed_factor(scale)])),
        ),
    ];
    let mut all = true;
    for (n, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let ok = outcome.ok && in_time;
        all &= ok;
        println!(
            "{} criterion {}: {} ({:.2}s, budget {}s) {}",
            if ok { "PASS" } else { "FAIL" },
            n,
            name,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            outcome.detail
        );
        if !in_time {
            println!("    over the time budget");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
