//! Acceptance gate: runs every verification suite at the required ranks and
//! prints one PASS/FAIL line per criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use zigzag::verify::{run, SuiteReport, VerifyOptions};
use zigzag::AlgebraType;

struct Criterion {
    number: u8,
    title: &'static str,
    suite: &'static str,
    runs: &'static [(AlgebraType, usize)],
    samples: usize,
    budget: Duration,
}

const B2: (AlgebraType, usize) = (AlgebraType::B, 2);
const B3: (AlgebraType, usize) = (AlgebraType::B, 3);
const B4: (AlgebraType, usize) = (AlgebraType::B, 4);

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "algebra dimensions, relations, associativity",
        suite: "algebra",
        runs: &[B2, B3, B4],
        samples: 0,
        budget: secs(1),
    },
    Criterion {
        number: 2,
        title: "complexified type B algebra is isomorphic to type A",
        suite: "complexification",
        runs: &[B2, B3, B4],
        samples: 0,
        budget: secs(5),
    },
    Criterion {
        number: 3,
        title: "braid relations and inverses up to certified isomorphism",
        suite: "braid-relations",
        runs: &[B2, B3, (AlgebraType::A, 2), (AlgebraType::A, 3), (AlgebraType::A, 4), (AlgebraType::A, 5)],
        samples: 0,
        budget: secs(120),
    },
    Criterion {
        number: 4,
        title: "R2 R1 R2 (P1) is P1{1}<1> up to shift",
        suite: "type-b-relation",
        runs: &[B2, B3],
        samples: 0,
        budget: secs(5),
    },
    Criterion {
        number: 5,
        title: "extension of scalars is braid equivariant",
        suite: "tensor-equivariance",
        runs: &[B2, B3],
        samples: 50,
        budget: secs(300),
    },
    Criterion {
        number: 6,
        title: "extending curve complexes commutes with lifting",
        suite: "diagram-commutes",
        runs: &[B2, B3],
        samples: 0,
        budget: secs(300),
    },
    Criterion {
        number: 7,
        title: "curve complexes are braid equivariant",
        suite: "curve-complex-equivariance",
        runs: &[B2, B3],
        samples: 50,
        budget: secs(300),
    },
    Criterion {
        number: 8,
        title: "intersection numbers equal Poincare polynomials",
        suite: "poincare-intersection",
        runs: &[B2, B3],
        samples: 50,
        budget: secs(600),
    },
    Criterion {
        number: 9,
        title: "Grothendieck group matrices",
        suite: "k0",
        runs: &[B2, B3, B4],
        samples: 0,
        budget: secs(10),
    },
    Criterion {
        number: 10,
        title: "Temperley-Lieb relations in path-length grading",
        suite: "tl-relations",
        runs: &[B2, B3],
        samples: 0,
        budget: secs(30),
    },
    Criterion {
        number: 11,
        title: "short reduced words act nontrivially",
        suite: "faithfulness",
        runs: &[B2],
        samples: 0,
        budget: secs(120),
    },
    Criterion {
        number: 12,
        title: "curve calculus internal checks",
        suite: "curve-calculus",
        runs: &[B2, B3],
        samples: 50,
        budget: secs(60),
    },
];

fn run_criterion(c: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let mut reports: Vec<SuiteReport> = Vec::new();
    for &(side, rank) in c.runs {
        let opts = VerifyOptions { side, samples: c.samples.max(1), ..VerifyOptions::new(rank) };
        match run(c.suite, &opts) {
            Ok(r) => reports.push(r),
            Err(e) => return (false, format!("{} at rank {rank}: error: {e}", c.suite)),
        }
    }
    let elapsed = start.elapsed();
    let cases: usize = reports.iter().map(|r| r.cases.len()).sum();
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures())
        .map(|f| match &f.detail {
            Some(d) => format!("{} ({d})", f.name),
            None => f.name.clone(),
        })
        .collect();
    let in_budget = elapsed <= c.budget;
    let mut summary = format!("{cases} cases in {:.2}s", elapsed.as_secs_f64());
    if !in_budget {
        summary.push_str(&format!(", over the {}s budget", c.budget.as_secs()));
    }
    if !failures.is_empty() {
        summary.push_str(&format!("; failed: {}", failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ")));
    }
    (failures.is_empty() && cases > 0 && in_budget, summary)
}

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut all_ok = true;
    for c in CRITERIA {
        if !filter.is_empty() && !filter.iter().any(|f| c.suite.contains(f.as_str()) || f == &c.number.to_string()) {
            continue;
        }
        let (ok, summary) = run_criterion(c);
        all_ok &= ok;
        println!("{} criterion {}: {} [{}] {summary}", if ok { "PASS" } else { "FAIL" }, c.number, c.title, c.suite);
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
