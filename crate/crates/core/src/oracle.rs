//! Brute-force reference solver. It recomputes every interdicted basis from
//! scratch and shares no sweep code with the interdiction solvers.

use crate::element::ElementId;
use crate::error::Error;
use crate::instance::Instance;
use crate::matroid::{greedy_min_basis, min_basis_at};
use crate::pwl::{
    envelope_of_lines, midpoint, pwl_equal, ExtRational, Interval, LinearFn, Rational,
};
use crate::solution::{assemble, Solution};

/// `y(λ)` and its smallest-id most vital element, by one greedy run per element.
pub fn interdict_at(inst: &Instance, lambda: &Rational) -> Result<(Rational, ElementId), Error> {
    inst.require_interdictable()?;
    let k = inst.rank();
    let view = inst.view();
    let mut best: Option<(Rational, ElementId)> = None;
    for e in inst.elements() {
        let basis = greedy_min_basis(&view.without(e), |g| inst.weight_at(g, lambda));
        if basis.len() < k {
            return Err(Error::Coloops(vec![e]));
        }
        let value: Rational = basis.iter().map(|g| inst.weight_at(g, lambda)).sum();
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, e));
        }
    }
    Ok(best.expect("nonempty ground set"))
}

/// Every parameter where two distinct weight lines meet strictly inside the interval.
fn crossings(inst: &Instance) -> Vec<Rational> {
    let w = inst.weights();
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in 0..i {
            if let Some(x) = w[i].crossing(&w[j]) {
                if inst.interval().contains_strictly(&x) {
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn window_point(window: &Interval) -> Rational {
    match (window.lo(), window.hi()) {
        (ExtRational::Finite(a), ExtRational::Finite(b)) => midpoint(a, b),
        _ => window.representative(),
    }
}

/// `y` by taking, between consecutive crossings, the envelope of all `m`
/// interdicted basis weights.
pub fn solve_bruteforce(inst: &Instance) -> Result<Solution, Error> {
    inst.require_interdictable()?;
    let k = inst.rank();
    let view = inst.view();
    let w = inst.weights();
    let xs = crossings(inst);
    let mut bounds: Vec<ExtRational> = vec![inst.interval().lo().clone()];
    bounds.extend(xs.iter().cloned().map(ExtRational::from));
    bounds.push(inst.interval().hi().clone());
    let windows: Vec<Interval> = bounds
        .windows(2)
        .map(|b| Interval::new(b[0].clone(), b[1].clone()).expect("sorted"))
        .collect();

    let per_window = crate::par::map(&windows, |window| {
        let p = window_point(window);
        let mut lines = Vec::with_capacity(inst.m());
        for e in inst.elements() {
            let basis = min_basis_at(&view.without(e), w, &p);
            if basis.len() < k {
                return Err(Error::Coloops(vec![e]));
            }
            lines.push((e, basis.weight(w)));
        }
        let basis = min_basis_at(&view, w, &p);
        let env = envelope_of_lines(&lines, window)?;
        Ok((0..env.num_pieces())
            .map(|i| {
                let line: &LinearFn = &env.pieces()[i];
                let label = basis
                    .iter()
                    .find(|e| &lines[e.0].1 == line)
                    .expect("some basis element is most vital");
                (env.piece_window(i), line.clone(), label)
            })
            .collect::<Vec<_>>())
    });
    let mut pieces = Vec::new();
    for part in per_window {
        pieces.extend(part?);
    }
    assemble(inst, &xs, pieces)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub lambda: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub value_equal: bool,
    pub first_divergence: Option<Divergence>,
    /// At every sample the two most vital elements have equal interdicted values.
    pub argmax_consistent: bool,
}

/// Deterministic sample points: endpoints, all cuts of both, midpoints
/// between them, and `samples` evenly spaced points.
pub fn sample_points(a: &Solution, b: &Solution, samples: usize) -> Vec<Rational> {
    let domain = a.y.domain();
    let mut pts: Vec<Rational> = a.y.cuts().iter().chain(b.y.cuts()).cloned().collect();
    match (domain.lo(), domain.hi()) {
        (ExtRational::Finite(lo), ExtRational::Finite(hi)) => {
            pts.push(lo.clone());
            pts.push(hi.clone());
            for i in 0..=samples {
                let t = Rational::new(i.into(), samples.max(1).into());
                pts.push(lo + (hi - lo) * t);
            }
        }
        (lo, hi) => {
            let anchor = pts
                .first()
                .cloned()
                .unwrap_or_else(|| domain.representative());
            for i in 0..=samples as i64 {
                let x = &anchor + Rational::from_integer((i - samples as i64 / 2).into());
                if domain.contains(&x) {
                    pts.push(x);
                }
            }
            if let ExtRational::Finite(l) = lo {
                pts.push(l.clone());
            }
            if let ExtRational::Finite(h) = hi {
                pts.push(h.clone());
            }
        }
    }
    pts.sort();
    pts.dedup();
    let mids: Vec<Rational> = pts.windows(2).map(|p| midpoint(&p[0], &p[1])).collect();
    pts.extend(mids);
    pts.sort();
    pts.dedup();
    pts
}

/// Compares two solutions of `inst` exactly.
pub fn compare(inst: &Instance, a: &Solution, b: &Solution, samples: usize) -> ComparisonReport {
    let mut first_divergence = None;
    let mut argmax_consistent = true;
    let view = inst.view();
    let removal = |e: ElementId, l: &Rational| -> Rational {
        greedy_min_basis(&view.without(e), |g| inst.weight_at(g, l))
            .iter()
            .map(|g| inst.weight_at(g, l))
            .sum()
    };
    for l in sample_points(a, b, samples) {
        let (lhs, rhs) = (a.y.eval(&l), b.y.eval(&l));
        if lhs != rhs && first_divergence.is_none() {
            first_divergence = Some(Divergence {
                lambda: l.clone(),
                lhs,
                rhs,
            });
        }
        let (ea, eb) = (a.segment_at(&l).most_vital, b.segment_at(&l).most_vital);
        if ea != eb && removal(ea, &l) != removal(eb, &l) {
            argmax_consistent = false;
        }
    }
    let value_equal = pwl_equal(&a.y, &b.y) && first_divergence.is_none();
    ComparisonReport {
        value_equal,
        first_divergence,
        argmax_consistent,
    }
}
