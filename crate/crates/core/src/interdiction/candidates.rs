//! Candidate generation: a superset of all changepoints of `w` and of every
//! `y_e` with at most `2km` members.
//!
//! For each element `e` the set `E_e` of elements lighter than `e` grows by
//! one element at every equality point `λ(e→f)`. The point is kept when the
//! rank of `E_e` grows (case 1) or when the component of `f` swallows a
//! former singleton (case 2).

use crate::element::ElementId;
use crate::instance::Instance;
use crate::matroid::{components, greedy_min_basis, GroundSubset, View};
use crate::parametric::{all_equality_points, first_window, generic_point, EqualityPoints};
use crate::pwl::{EqualityPoint, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CandidateCase {
    /// `f` raises the rank of `E_e`.
    RankIncrease,
    /// The component of `f` absorbs a singleton of `E_e`.
    AbsorbsSingleton,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub point: EqualityPoint,
    pub case: CandidateCase,
}

/// Flagged equality points in sweep order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CandidateSet {
    pub points: Vec<Candidate>,
}

impl CandidateSet {
    /// Number of flagged equality points; this is what the `2km` bound counts.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Distinct parameter values, ascending.
    pub fn lambdas(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.points.iter().map(|c| c.point.lambda.clone()).collect();
        out.dedup();
        out
    }

    pub fn contains(&self, lambda: &Rational) -> bool {
        self.points.iter().any(|c| &c.point.lambda == lambda)
    }
}

pub fn find_candidates(inst: &Instance) -> CandidateSet {
    let eq = all_equality_points(inst);
    find_candidates_with(inst, &eq)
}

pub(crate) fn find_candidates_with(inst: &Instance, eq: &EqualityPoints) -> CandidateSet {
    let m = inst.m();
    let w = inst.weights();
    let start = generic_point(&first_window(inst.interval(), eq.lambdas()), eq.lambdas());

    let mut events: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, p) in eq.points.iter().enumerate() {
        events[p.lighter_before.0].push(i);
    }

    let flagged = crate::par::map_range(m, |e| {
        let ee = ElementId(e);
        let at_start = w[e].eval(&start);
        // lighter than e now and never overtaken by e inside the interval
        let initial = (0..m).map(ElementId).filter(|&f| {
            if f == ee {
                return false;
            }
            if w[f.0] == w[e] {
                return f < ee;
            }
            let wf = w[f.0].eval(&start);
            w[f.0].b <= w[e].b && wf < at_start
        });
        let mut active = GroundSubset::from_elements(m, initial);
        let backend = inst.backend();
        let mut basis = greedy_min_basis(&View::restricted(backend, active.clone()), |g| {
            w[g.0].eval(&start)
        });
        let mut comps = components(&View::restricted(backend, active.clone()));
        let mut out = Vec::new();
        for &i in &events[e] {
            let f = eq.points[i].lighter_after;
            let grows = backend.exchange_is_independent(basis.elements(), None, f);
            if grows {
                out.push((i, CandidateCase::RankIncrease));
                let mut next = basis.elements().clone();
                next.insert(f);
                basis = crate::matroid::Basis::from_subset(next);
            }
            active.insert(f);
            let next = components(&View::restricted(backend, active.clone()));
            if !grows {
                let c = next.component_of(f).expect("f is active");
                let swallowed = next.members(c).any(|g| {
                    g != f
                        && comps
                            .component_of(g)
                            .is_some_and(|old| comps.is_singleton(old))
                });
                if swallowed {
                    out.push((i, CandidateCase::AbsorbsSingleton));
                }
            }
            comps = next;
        }
        out
    });

    let mut all: Vec<(usize, CandidateCase)> = flagged.into_iter().flatten().collect();
    all.sort_by_key(|(i, _)| *i);
    CandidateSet {
        points: all
            .into_iter()
            .map(|(i, case)| Candidate {
                point: eq.points[i].clone(),
                case,
            })
            .collect(),
    }
}
