//! Acceptance suite: ten criteria, each checked exactly over a seeded random
//! suite and the hand-made fixtures. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pmi_core::checks::{self, Analysis, CheckResult};
use pmi_core::format::{parse_instance, solution_file, SolutionFile};
use pmi_core::gen::{random_graphic, random_graphic_with, random_uniform, GenConfig};
use pmi_core::pwl::{int, pwl_equal, ratio, ExtRational, LinearFn, Rational};
use pmi_core::{
    find_candidates, fixtures, interdict_at, solve_bruteforce, solve_intervals, solve_naive,
    y_functions_sweep, ElementId, Instance, Solution,
};

const GRAPHIC: u64 = 500;
const UNIFORM: u64 = 100;

struct Case {
    inst: Instance,
    analysis: Analysis,
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn first_failure(
    cases: &[Case],
    f: impl Fn(&Case) -> CheckResult + Sync,
) -> Result<usize, (&Case, CheckResult)> {
    let results = pmi_core::par::map(cases, |c| f(c));
    match results.into_iter().enumerate().find(|(_, r)| !r.passed) {
        Some((i, r)) => Err((&cases[i], r)),
        None => Ok(cases.len()),
    }
}

fn over_suite(cases: &[Case], f: impl Fn(&Case) -> CheckResult + Sync) -> Outcome {
    match first_failure(cases, f) {
        Ok(n) => Outcome {
            ok: true,
            detail: format!("{n} instances"),
        },
        Err((c, r)) => Outcome {
            ok: false,
            detail: format!("{}: {r}", c.inst.name.as_deref().unwrap_or("?")),
        },
    }
}

fn suite() -> Vec<Case> {
    let cfg = GenConfig::default();
    let instances: Vec<Instance> = (0..GRAPHIC)
        .map(|s| random_graphic(s, &cfg))
        .chain((0..UNIFORM).map(|s| random_uniform(10_000 + s, 12, &cfg)))
        .collect();
    pmi_core::par::map(&instances, |inst| Case {
        analysis: Analysis::new(inst).expect("suite instances are interdictable"),
        inst: inst.clone(),
    })
}

fn random_lambdas(inst: &Instance, seed: u64, n: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = match (inst.interval().lo(), inst.interval().hi()) {
        (ExtRational::Finite(a), ExtRational::Finite(b)) => (a.clone(), b.clone()),
        _ => (int(-10), int(10)),
    };
    (0..n)
        .map(|_| {
            let den: i64 = rng.gen_range(1..=12);
            let t = Rational::new(rng.gen_range(0..=den).into(), den.into());
            &lo + (&hi - &lo) * t
        })
        .collect()
}

fn criterion_1(cases: &[Case]) -> Outcome {
    over_suite(cases, |c| {
        let a = &c.analysis;
        if !pwl_equal(&a.naive.y, &a.oracle.y) || !pwl_equal(&a.intervals.y, &a.oracle.y) {
            return CheckResult {
                name: "solver equivalence",
                passed: false,
                counterexample: None,
                detail: "y functions differ".into(),
            };
        }
        checks::solvers_agree(&c.inst, a, 16)
    })
}

fn criterion_2(cases: &[Case]) -> Outcome {
    over_suite(cases, |c| {
        let r = checks::candidate_soundness(&c.analysis);
        if r.passed {
            checks::candidate_bound(&c.inst, &c.analysis)
        } else {
            r
        }
    })
}

fn criterion_3(cases: &[Case]) -> Outcome {
    over_suite(cases, |c| {
        checks::per_interval_changepoints(&c.inst, &c.analysis)
    })
}

fn criterion_4(cases: &[Case]) -> Outcome {
    let seeded: Vec<(usize, &Case)> = cases.iter().enumerate().collect();
    let results = pmi_core::par::map(&seeded, |(i, c)| {
        checks::replacement_identity(&c.inst, &random_lambdas(&c.inst, *i as u64, 50))
    });
    match results.iter().position(|r| !r.passed) {
        None => Outcome {
            ok: true,
            detail: format!("{} instances x 50 points", cases.len()),
        },
        Some(i) => Outcome {
            ok: false,
            detail: format!(
                "{}: {}",
                cases[i].inst.name.as_deref().unwrap_or("?"),
                results[i]
            ),
        },
    }
}

fn criterion_5(cases: &[Case]) -> Outcome {
    over_suite(cases, |c| checks::containment(&c.inst, &c.analysis))
}

fn criterion_6(cases: &[Case]) -> Outcome {
    over_suite(cases, |c| checks::swap_equalities(&c.analysis))
}

fn criterion_7(cases: &[Case]) -> Outcome {
    over_suite(cases, |c| checks::doubled_identity(&c.inst, &c.analysis))
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

type SegmentRow = (ExtRational, ExtRational, LinearFn, ElementId);

fn rows(sol: &Solution) -> Vec<SegmentRow> {
    sol.segments
        .iter()
        .map(|s| {
            (
                s.window.lo().clone(),
                s.window.hi().clone(),
                s.value.clone(),
                s.most_vital,
            )
        })
        .collect()
}

fn criterion_8() -> Outcome {
    let e = ElementId;
    let fin = |r: Rational| ExtRational::Finite(r);
    let expected: Vec<(&str, Instance, Vec<SegmentRow>)> = vec![
        (
            "P2",
            fixtures::p2(),
            vec![
                (fin(int(-1)), fin(int(1)), LinearFn::from_ints(1, 0), e(0)),
                (fin(int(1)), fin(int(3)), LinearFn::from_ints(0, 1), e(1)),
            ],
        ),
        (
            "C4P",
            fixtures::c4p(),
            vec![
                (
                    fin(int(0)),
                    fin(ratio(1, 2)),
                    LinearFn::from_ints(6, 0),
                    e(3),
                ),
                (
                    fin(ratio(1, 2)),
                    fin(int(2)),
                    LinearFn::from_ints(5, 2),
                    e(0),
                ),
            ],
        ),
        (
            "C4",
            fixtures::c4_constant(),
            vec![(fin(int(0)), fin(int(2)), LinearFn::from_ints(9, 0), e(0))],
        ),
    ];
    for (name, inst, want) in expected {
        let from_file = std::fs::read_to_string(fixture_dir().join(format!("{name}.json")))
            .map_err(|e| e.to_string())
            .and_then(|t| parse_instance(&t).map_err(|e| e.to_string()));
        match from_file {
            Ok(parsed) if parsed == inst => {}
            Ok(_) => return fail(format!("{name}.json differs from the built-in fixture")),
            Err(err) => return fail(format!("{name}.json: {err}")),
        }
        let golden: SolutionFile = match std::fs::read_to_string(
            fixture_dir()
                .join("golden")
                .join(format!("{name}.solution.json")),
        )
        .map_err(|e| e.to_string())
        .and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string()))
        {
            Ok(g) => g,
            Err(err) => return fail(format!("golden {name}: {err}")),
        };
        let oracle = solve_bruteforce(&inst).expect("fixture solvable");
        if rows(&oracle) != want {
            return fail(format!("{name}: oracle disagrees with the stated segments"));
        }
        for (algo, sol) in [
            ("naive", solve_naive(&inst)),
            ("intervals", solve_intervals(&inst)),
            ("oracle", Ok(oracle.clone())),
        ] {
            let sol = sol.expect("fixture solvable");
            if rows(&sol) != want {
                return fail(format!("{name}/{algo}: segments differ"));
            }
            let file = solution_file(&inst, &sol, algo).expect("stats");
            if file.segments != golden.segments {
                return fail(format!("{name}/{algo}: differs from golden file"));
            }
        }
    }
    // values stated alongside the fixtures
    let c4p = fixtures::c4p();
    let ys: Vec<Vec<LinearFn>> = y_functions_sweep(&c4p)
        .expect("solvable")
        .iter()
        .map(|f| f.pieces().to_vec())
        .collect();
    let want_ys: Vec<Vec<LinearFn>> = [(5, 2), (4, 2), (3, 2), (6, 0)]
        .iter()
        .map(|&(a, b)| vec![LinearFn::from_ints(a, b)])
        .collect();
    if ys != want_ys {
        return fail("C4P: y_e functions differ".into());
    }
    if find_candidates(&c4p).lambdas() != vec![ratio(1, 2), int(1), ratio(3, 2)] {
        return fail("C4P: candidate set differs".into());
    }
    let point_checks = [
        (fixtures::p2(), int(0), (int(1), ElementId(0))),
        (fixtures::c4p(), int(0), (int(6), ElementId(3))),
        (fixtures::c4p(), int(1), (int(7), ElementId(0))),
    ];
    for (inst, l, want) in point_checks {
        if interdict_at(&inst, &l).ok() != Some(want.clone()) {
            return fail(format!("pointwise value at {l} differs"));
        }
    }
    Outcome {
        ok: true,
        detail: "P2, C4, C4P match stated and golden segments".into(),
    }
}

fn criterion_9(cases: &[Case]) -> Outcome {
    over_suite(cases, |c| checks::concavity(&c.analysis))
}

fn criterion_10() -> Outcome {
    let inst = random_graphic_with(2024, 100, 500, &GenConfig::default());
    let start = Instant::now();
    let sol = solve_naive(&inst);
    let took = start.elapsed();
    let limit = Duration::from_secs(300);
    match sol {
        Ok(s) if took <= limit => Outcome {
            ok: true,
            detail: format!("m = 500 in {:.1?}, {} segments", took, s.segments.len()),
        },
        Ok(_) => fail(format!("m = 500 took {took:.1?} > {limit:?}")),
        Err(e) => fail(e.to_string()),
    }
}

fn fail(detail: String) -> Outcome {
    Outcome { ok: false, detail }
}

fn main() -> ExitCode {
    // `cargo test -- --list` and filters come through here too
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }

    let start = Instant::now();
    let cases = suite();
    let built = start.elapsed();
    let runs: Vec<Criterion> = vec![
        (
            "solver triple-equivalence",
            Box::new(|| criterion_1(&cases)),
        ),
        (
            "candidate soundness and 2km bound",
            Box::new(|| criterion_2(&cases)),
        ),
        (
            "at most k-1 changepoints between candidates",
            Box::new(|| criterion_3(&cases)),
        ),
        ("replacement identity", Box::new(|| criterion_4(&cases))),
        (
            "most vital element lies in the basis",
            Box::new(|| criterion_5(&cases)),
        ),
        (
            "swap partners tie at breakpoints of w",
            Box::new(|| criterion_6(&cases)),
        ),
        (
            "doubled instance has y = w",
            Box::new(|| criterion_7(&cases)),
        ),
        ("fixture regression", Box::new(criterion_8)),
        ("concavity of w", Box::new(|| criterion_9(&cases))),
        ("scale smoke test", Box::new(criterion_10)),
    ];
    println!("suite: {GRAPHIC} graphic + {UNIFORM} uniform instances solved in {built:.1?}");
    let mut all = true;
    for (i, (name, run)) in runs.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        all &= out.ok;
        println!(
            "criterion {:>2} {} {name}: {} [{:.1?}]",
            i + 1,
            if out.ok { "PASS" } else { "FAIL" },
            out.detail,
            t.elapsed()
        );
    }
    println!("total {:.1?}", start.elapsed());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
