//! The envelope solver: `y` is the upper envelope of all `y_e`.

use crate::element::ElementId;
use crate::error::Error;
use crate::instance::Instance;
use crate::parametric::{all_equality_points, generic_point};
use crate::pwl::{envelope_of_pwl, Interval, Rational};
use crate::solution::{assemble, Solution};

use super::sweep::sweep;

pub fn solve_naive(inst: &Instance) -> Result<Solution, Error> {
    inst.require_interdictable()?;
    let eq = all_equality_points(inst);
    let swept = sweep(inst, &eq);
    let labelled: Vec<(ElementId, _)> = swept
        .y
        .iter()
        .enumerate()
        .map(|(i, f)| (ElementId(i), f.clone()))
        .collect();
    let envelope = envelope_of_pwl(&labelled, inst.interval())?;

    let mut points: Vec<Rational> = swept
        .y
        .iter()
        .flat_map(|f| f.cuts().iter().cloned())
        .chain(envelope.cuts().iter().cloned())
        .chain(swept.schedule.cuts.iter().cloned())
        .collect();
    points.sort();
    points.dedup();

    let windows = elementary_windows(inst.interval(), &points);
    let pieces = windows
        .into_iter()
        .map(|window| {
            let p = generic_point(&window, eq.lambdas());
            let line = envelope
                .line_on(&window)
                .expect("elementary window")
                .clone();
            let basis = swept.schedule.basis_at(&p);
            let label = basis
                .iter()
                .find(|e| swept.y[e.0].line_on(&window) == Some(&line))
                .expect("a basis element attains the envelope");
            (window, line, label)
        })
        .collect();
    assemble(inst, eq.lambdas(), pieces)
}

/// The windows between consecutive `points`, which must lie strictly inside `interval`.
pub(crate) fn elementary_windows(interval: &Interval, points: &[Rational]) -> Vec<Interval> {
    let mut bounds = Vec::with_capacity(points.len() + 2);
    bounds.push(interval.lo().clone());
    bounds.extend(points.iter().cloned().map(Into::into));
    bounds.push(interval.hi().clone());
    bounds
        .windows(2)
        .map(|w| Interval::new(w[0].clone(), w[1].clone()).expect("sorted bounds"))
        .collect()
}
