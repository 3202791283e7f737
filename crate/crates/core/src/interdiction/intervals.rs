//! The interval solver: between consecutive candidates every replacement
//! element is fixed, so `y` is the envelope of `k` lines there.

use crate::element::ElementId;
use crate::error::Error;
use crate::instance::Instance;
use crate::matroid::{min_basis_at, replacement_element, Basis};
use crate::parametric::{all_equality_points, generic_point};
use crate::pwl::{envelope_of_lines, Interval, LinearFn, Rational};
use crate::solution::{assemble, Solution};

use super::candidates::find_candidates_with;
use super::naive::elementary_windows;

pub fn solve_intervals(inst: &Instance) -> Result<Solution, Error> {
    inst.require_interdictable()?;
    let eq = all_equality_points(inst);
    let candidates = find_candidates_with(inst, &eq);
    let cuts = candidates.lambdas();
    let windows = elementary_windows(inst.interval(), &cuts);
    let view = inst.view();
    let w = inst.weights();

    let first = generic_point(&windows[0], eq.lambdas());
    let mut basis = min_basis_at(&view, w, &first);
    let mut bases: Vec<Basis> = vec![basis.clone()];
    let mut groups = eq.groups().peekable();
    for lambda in &cuts {
        while groups.peek().is_some_and(|g| g[0].lambda < *lambda) {
            groups.next();
        }
        if let Some(group) = groups.next_if(|g| g[0].lambda == *lambda) {
            for p in group {
                let (e, f) = (p.lighter_before, p.lighter_after);
                if basis.contains(e)
                    && !basis.contains(f)
                    && inst
                        .backend()
                        .exchange_is_independent(basis.elements(), Some(e), f)
                {
                    basis.swap(e, f);
                }
            }
        }
        bases.push(basis.clone());
    }

    let jobs: Vec<(Interval, Basis)> = windows.into_iter().zip(bases).collect();
    let per_window = crate::par::map(&jobs, |(window, basis)| {
        let p = generic_point(window, eq.lambdas());
        let total = basis.weight(w);
        // one sorted pass over the non-basis elements serves every e
        let mut outside: Vec<(Rational, ElementId)> = inst
            .elements()
            .filter(|&r| !basis.contains(r))
            .map(|r| (w[r.0].eval(&p), r))
            .collect();
        outside.sort();
        let lines: Vec<(ElementId, LinearFn)> = basis
            .iter()
            .map(|e| {
                let r = outside
                    .iter()
                    .map(|&(_, r)| r)
                    .find(|&r| {
                        inst.backend()
                            .exchange_is_independent(basis.elements(), Some(e), r)
                    })
                    .expect("no coloops");
                debug_assert_eq!(
                    Some(r),
                    replacement_element(&view, basis, e, |g| w[g.0].eval(&p))
                );
                (e, &(&total - &w[e.0]) + &w[r.0])
            })
            .collect();
        let env = envelope_of_lines(&lines, window)?;
        let labels = env.labels().expect("labelled envelope");
        Ok::<_, Error>(
            (0..env.num_pieces())
                .map(|i| (env.piece_window(i), env.pieces()[i].clone(), labels[i]))
                .collect::<Vec<_>>(),
        )
    });
    let mut pieces = Vec::new();
    for part in per_window {
        pieces.extend(part?);
    }
    assemble(inst, eq.lambdas(), pieces)
}
