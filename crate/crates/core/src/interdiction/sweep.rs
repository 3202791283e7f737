//! One sweep over all equality points that tracks the minimum basis `B` of
//! the matroid and, for each `g ∈ B`, the minimum basis `B^g` of `M_g`.
//! Every element outside `B` shares `B` as its interdicted basis, so an
//! equality point costs at most `k + 1` exchange tests.

use crate::element::ElementId;
use crate::error::Error;
use crate::instance::Instance;
use crate::matroid::{min_basis_at, Basis};
use crate::parametric::{
    all_equality_points, first_window, generic_point, BasisSchedule, EqualityPoints,
};
use crate::pwl::{LinearFn, Pwl, Rational};

#[derive(Debug, Clone)]
struct Tracked {
    basis: Basis,
    weight: LinearFn,
}

impl Tracked {
    fn new(basis: Basis, weights: &[LinearFn]) -> Self {
        let weight = basis.weight(weights);
        Tracked { basis, weight }
    }

    /// Applies `e → f` when it keeps the basis independent.
    fn try_swap(&mut self, inst: &Instance, e: ElementId, f: ElementId) -> bool {
        if self.basis.contains(e)
            && !self.basis.contains(f)
            && inst
                .backend()
                .exchange_is_independent(self.basis.elements(), Some(e), f)
        {
            self.basis.swap(e, f);
            self.weight -= inst.weight(e);
            self.weight += inst.weight(f);
            true
        } else {
            false
        }
    }
}

/// The interdicted value functions `y_e` for every element, plus the
/// schedule of `w` met along the way.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub y: Vec<Pwl>,
    pub schedule: BasisSchedule,
}

/// `y_e(λ)`: the weight of a minimum basis of `M_e`, for every element.
pub fn y_functions_sweep(inst: &Instance) -> Result<Vec<Pwl>, Error> {
    inst.require_interdictable()?;
    let eq = all_equality_points(inst);
    Ok(sweep(inst, &eq).y)
}

pub(crate) fn sweep(inst: &Instance, eq: &EqualityPoints) -> SweepResult {
    let m = inst.m();
    let weights = inst.weights();
    let view = inst.view();
    let start = generic_point(&first_window(inst.interval(), eq.lambdas()), eq.lambdas());

    let mut main = Tracked::new(min_basis_at(&view, weights, &start), weights);
    // own[g] is Some exactly for g ∈ B
    let mut own: Vec<Option<Tracked>> = vec![None; m];
    let members: Vec<ElementId> = main.basis.to_vec();
    let initial = crate::par::map(&members, |&g| {
        Tracked::new(min_basis_at(&view.without(g), weights, &start), weights)
    });
    for (g, t) in members.into_iter().zip(initial) {
        own[g.0] = Some(t);
    }

    let line_of = |own: &[Option<Tracked>], main: &Tracked, g: usize| -> LinearFn {
        own[g].as_ref().unwrap_or(main).weight.clone()
    };
    let mut cuts: Vec<Vec<Rational>> = vec![Vec::new(); m];
    let mut lines: Vec<Vec<LinearFn>> = (0..m).map(|g| vec![line_of(&own, &main, g)]).collect();

    let mut w_cuts = Vec::new();
    let mut w_lines = vec![main.weight.clone()];
    let mut w_bases = vec![main.basis.clone()];
    let mut w_swaps = Vec::new();

    let mut dirty: Vec<usize> = Vec::new();
    for group in eq.groups() {
        let lambda = &group[0].lambda;
        let mut applied = Vec::new();
        dirty.clear();
        for p in group {
            let (e, f) = (p.lighter_before, p.lighter_after);
            for g in main.basis.iter() {
                if g == e || g == f {
                    continue;
                }
                let tracked = own[g.0].as_mut().expect("tracked while in B");
                if tracked.try_swap(inst, e, f) {
                    dirty.push(g.0);
                }
            }
            let before = main.clone();
            if main.try_swap(inst, e, f) {
                applied.push((e, f));
                let left = own[e.0].take().expect("e was in B");
                debug_assert_eq!(left.basis, main.basis, "B^e must coincide with B - e + f");
                own[f.0] = Some(before);
            }
        }
        if !applied.is_empty() {
            dirty.clear();
            dirty.extend(0..m);
            w_cuts.push(lambda.clone());
            w_lines.push(main.weight.clone());
            w_bases.push(main.basis.clone());
            w_swaps.push(applied);
        }
        for &g in &dirty {
            let line = line_of(&own, &main, g);
            if lines[g].last() != Some(&line) {
                cuts[g].push(lambda.clone());
                lines[g].push(line);
            }
        }
    }

    let y = cuts
        .into_iter()
        .zip(lines)
        .map(|(c, l)| {
            Pwl::from_parts(inst.interval().clone(), c, l, None)
                .expect("interdicted weights are continuous")
        })
        .collect();
    let value = Pwl::from_parts(inst.interval().clone(), w_cuts.clone(), w_lines, None)
        .expect("basis weights are continuous");
    SweepResult {
        y,
        schedule: BasisSchedule {
            cuts: w_cuts,
            bases: w_bases,
            swaps: w_swaps,
            value,
        },
    }
}
