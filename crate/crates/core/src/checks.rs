//! Executable structural checks on an instance and its solutions. Each check
//! reports the first offending parameter value when it fails.

use std::fmt;

use crate::error::Error;
use crate::instance::Instance;
use crate::interdiction::{
    doubled_graphic, doubled_instance, find_candidates_with, solve_intervals, solve_naive, sweep,
    CandidateSet, SweepResult,
};
use crate::matroid::{min_basis_at, replacement_element};
use crate::oracle::{compare, interdict_at, solve_bruteforce};
use crate::parametric::{all_equality_points, EqualityPoints};
use crate::pwl::{format_rational, midpoint, pwl_equal, ExtRational, Pwl, Rational};
use crate::solution::Solution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<Rational>,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: true,
            counterexample: None,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, at: Option<Rational>, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: false,
            counterexample: at,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<5} {:<22} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )?;
        if let Some(l) = &self.counterexample {
            write!(f, " (at λ = {})", format_rational(l))?;
        }
        Ok(())
    }
}

/// Everything the checks need, computed once.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub equality: EqualityPoints,
    pub swept: SweepResult,
    pub candidates: CandidateSet,
    pub naive: Solution,
    pub intervals: Solution,
    pub oracle: Solution,
}

impl Analysis {
    pub fn new(inst: &Instance) -> Result<Self, Error> {
        inst.require_interdictable()?;
        let equality = all_equality_points(inst);
        let swept = sweep(inst, &equality);
        let candidates = find_candidates_with(inst, &equality);
        Ok(Analysis {
            naive: solve_naive(inst)?,
            intervals: solve_intervals(inst)?,
            oracle: solve_bruteforce(inst)?,
            equality,
            swept,
            candidates,
        })
    }

    pub fn w(&self) -> &Pwl {
        &self.swept.schedule.value
    }
}

pub fn solvers_agree(inst: &Instance, a: &Analysis, samples: usize) -> CheckResult {
    const NAME: &str = "solver equivalence";
    let pairs = [
        ("naive/intervals", &a.naive, &a.intervals),
        ("naive/oracle", &a.naive, &a.oracle),
        ("intervals/oracle", &a.intervals, &a.oracle),
    ];
    for (label, x, y) in pairs {
        let r = compare(inst, x, y, samples);
        if !r.value_equal {
            let at = r.first_divergence.map(|d| d.lambda);
            return CheckResult::fail(NAME, at, format!("{label}: values differ"));
        }
        if !r.argmax_consistent {
            return CheckResult::fail(NAME, None, format!("{label}: labels disagree in value"));
        }
    }
    CheckResult::pass(NAME, "naive = intervals = oracle")
}

pub fn candidate_bound(inst: &Instance, a: &Analysis) -> CheckResult {
    const NAME: &str = "candidates <= 2km";
    let bound = 2 * inst.rank() * inst.m();
    let n = a.candidates.len();
    if n <= bound {
        CheckResult::pass(NAME, format!("{n} <= {bound}"))
    } else {
        CheckResult::fail(NAME, None, format!("{n} > {bound}"))
    }
}

pub fn candidate_soundness(a: &Analysis) -> CheckResult {
    const NAME: &str = "candidate soundness";
    let cuts = a
        .w()
        .cuts()
        .iter()
        .chain(a.swept.y.iter().flat_map(|f| f.cuts()));
    for c in cuts {
        if !a.candidates.contains(c) {
            return CheckResult::fail(NAME, Some(c.clone()), "changepoint missing from candidates");
        }
    }
    CheckResult::pass(NAME, "all changepoints of w and every y_e covered")
}

pub fn per_interval_changepoints(inst: &Instance, a: &Analysis) -> CheckResult {
    const NAME: &str = "per-interval <= k-1";
    let limit = inst.rank() - 1;
    let cands = a.candidates.lambdas();
    let mut worst = 0;
    let mut start = 0;
    for (i, bound) in cands.iter().map(Some).chain([None]).enumerate() {
        let inside = a.naive.y.cuts()[start..]
            .iter()
            .take_while(|c| bound.is_none_or(|b| *c < b))
            .count();
        start += inside;
        if bound.is_some_and(|b| a.naive.y.cuts().get(start) == Some(b)) {
            start += 1;
        }
        if inside > limit {
            let at = if i == 0 {
                None
            } else {
                Some(cands[i - 1].clone())
            };
            return CheckResult::fail(NAME, at, format!("{inside} changepoints > {limit}"));
        }
        worst = worst.max(inside);
    }
    CheckResult::pass(NAME, format!("max {worst} <= {limit}"))
}

pub fn concavity(a: &Analysis) -> CheckResult {
    const NAME: &str = "concavity of w";
    let p = a.w().pieces();
    for (i, pair) in p.windows(2).enumerate() {
        if pair[1].b >= pair[0].b {
            return CheckResult::fail(
                NAME,
                Some(a.w().cuts()[i].clone()),
                "slope does not decrease",
            );
        }
    }
    CheckResult::pass(NAME, format!("{} strictly decreasing slopes", p.len()))
}

/// The most vital element lies in the basis of each segment, agrees in
/// value with a direct evaluation at the segment midpoint, and `y ≥ w`.
pub fn containment(inst: &Instance, a: &Analysis) -> CheckResult {
    const NAME: &str = "mve in basis";
    for s in &a.naive.segments {
        let p = s.window.representative();
        if !s.basis.contains(s.most_vital) {
            return CheckResult::fail(NAME, Some(p), format!("{} not in basis", s.most_vital));
        }
        match interdict_at(inst, &p) {
            Ok((v, _)) if v == s.value.eval(&p) => {}
            _ => return CheckResult::fail(NAME, Some(p), "value differs from direct evaluation"),
        }
        if a.naive.y.eval(&p) < a.w().eval(&p) {
            return CheckResult::fail(NAME, Some(p), "y below w");
        }
    }
    CheckResult::pass(NAME, format!("{} segments", a.naive.segments.len()))
}

/// At each cut of `w` with swap `e → f`, `y_e` and `y_f` agree.
pub fn swap_equalities(a: &Analysis) -> CheckResult {
    const NAME: &str = "y_e = y_f at swaps";
    let s = &a.swept.schedule;
    let mut n = 0;
    for (lambda, swaps) in s.cuts.iter().zip(&s.swaps) {
        for &(e, f) in swaps {
            n += 1;
            if a.swept.y[e.0].eval(lambda) != a.swept.y[f.0].eval(lambda) {
                return CheckResult::fail(NAME, Some(lambda.clone()), format!("{e} vs {f}"));
            }
        }
    }
    CheckResult::pass(NAME, format!("{n} swaps"))
}

pub fn doubled_identity(inst: &Instance, a: &Analysis) -> CheckResult {
    const NAME: &str = "doubled y = w";
    let mut variants = vec![doubled_instance(inst)];
    variants.extend(doubled_graphic(inst));
    for d in &variants {
        match solve_naive(d) {
            Ok(sol) if pwl_equal(&sol.y, a.w()) => {}
            Ok(sol) => {
                let at = first_difference(&sol.y, a.w());
                return CheckResult::fail(NAME, at, "doubled y differs from w");
            }
            Err(e) => return CheckResult::fail(NAME, None, e.to_string()),
        }
    }
    CheckResult::pass(NAME, format!("{} doubling(s)", variants.len()))
}

/// At each `λ` and each `e` of the minimum basis, the minimum basis of
/// `M_e` is the basis with `e` replaced by its replacement element.
pub fn replacement_identity(inst: &Instance, lambdas: &[Rational]) -> CheckResult {
    const NAME: &str = "replacement identity";
    let view = inst.view();
    let w = inst.weights();
    for l in lambdas {
        let basis = min_basis_at(&view, w, l);
        for e in basis.iter() {
            let Some(r) = replacement_element(&view, &basis, e, |g| w[g.0].eval(l)) else {
                return CheckResult::fail(NAME, Some(l.clone()), format!("{e} has no replacement"));
            };
            if min_basis_at(&view.without(e), w, l) != basis.swapped(e, r) {
                return CheckResult::fail(
                    NAME,
                    Some(l.clone()),
                    format!("{e} with replacement {r}"),
                );
            }
        }
    }
    CheckResult::pass(NAME, format!("{} points", lambdas.len()))
}

/// A parameter value where `f` and `g` differ, if any.
pub fn first_difference(f: &Pwl, g: &Pwl) -> Option<Rational> {
    let mut pts: Vec<Rational> = f.cuts().iter().chain(g.cuts()).cloned().collect();
    pts.sort();
    pts.dedup();
    let mut probes = pts.clone();
    probes.extend(pts.windows(2).map(|p| midpoint(&p[0], &p[1])));
    if let Some(x) = pts.first() {
        probes.push(x - Rational::from_integer(1.into()));
        probes.push(pts.last().expect("nonempty") + Rational::from_integer(1.into()));
    }
    probes.push(f.domain().representative());
    if let ExtRational::Finite(x) = f.domain().lo() {
        probes.push(x.clone());
    }
    if let ExtRational::Finite(x) = f.domain().hi() {
        probes.push(x.clone());
    }
    probes.sort();
    probes
        .into_iter()
        .find(|x| f.domain().contains(x) && f.eval(x) != g.eval(x))
}

/// Deterministic interior points for [`replacement_identity`].
pub fn spread_points(inst: &Instance, n: usize) -> Vec<Rational> {
    let interval = inst.interval();
    let (lo, hi) = match (interval.lo(), interval.hi()) {
        (ExtRational::Finite(a), ExtRational::Finite(b)) => (a.clone(), b.clone()),
        _ => {
            let c = interval.representative();
            (
                &c - Rational::from_integer(10.into()),
                c + Rational::from_integer(10.into()),
            )
        }
    };
    (0..n)
        .map(|i| &lo + (&hi - &lo) * Rational::new((2 * i + 1).into(), (2 * n).into()))
        .filter(|x| interval.contains(x))
        .collect()
}

/// Runs every check. Coloops or rank zero are reported as errors up front.
pub fn run_all(inst: &Instance, samples: usize) -> Result<Vec<CheckResult>, Error> {
    let a = Analysis::new(inst)?;
    Ok(vec![
        solvers_agree(inst, &a, samples),
        candidate_bound(inst, &a),
        candidate_soundness(&a),
        per_interval_changepoints(inst, &a),
        concavity(&a),
        containment(inst, &a),
        swap_equalities(&a),
        replacement_identity(inst, &spread_points(inst, 16)),
        doubled_identity(inst, &a),
    ])
}
