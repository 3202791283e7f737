//! The non-interdicted parametric matroid problem: equality points and the
//! sweep producing the optimal value function `w` with its basis schedule.

use std::cmp::Reverse;

use crate::element::ElementId;
use crate::error::Error;
use crate::instance::Instance;
use crate::matroid::{min_basis_at, Basis};
use crate::pwl::{
    equality_point, midpoint, EqualityPoint, ExtRational, Interval, LinearFn, Pwl, Rational,
};

/// All pairwise equality points strictly inside the instance interval, in
/// sweep order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityPoints {
    pub points: Vec<EqualityPoint>,
    /// Parameter values shared by more than one crossing pair.
    pub coincident: Vec<Rational>,
    lambdas: Vec<Rational>,
}

impl EqualityPoints {
    /// Distinct crossing values, ascending.
    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    /// Runs of points sharing one parameter value.
    pub fn groups(&self) -> impl Iterator<Item = &[EqualityPoint]> {
        self.points.chunk_by(|p, q| p.lambda == q.lambda)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Enumerates every crossing `λ(e→f)` inside the interval.
///
/// Points are sorted by `λ`. Crossings that share a `λ` come out as a
/// sequence of adjacent transpositions turning the `(weight, id)` order just
/// left of `λ` into the order just right of it: grouped by common weight,
/// then by the incoming lighter element in left order, then by the element
/// it overtakes from the nearest outward. Processing swaps in this order
/// reproduces the greedy basis of the id-perturbed instance.
pub fn all_equality_points(inst: &Instance) -> EqualityPoints {
    let w = inst.weights();
    let mut points = Vec::new();
    for i in 0..inst.m() {
        for j in i + 1..inst.m() {
            if let Some(p) = equality_point(ElementId(i), &w[i], ElementId(j), &w[j]) {
                if inst.interval().contains_strictly(&p.lambda) {
                    points.push(p);
                }
            }
        }
    }
    points.sort_by_cached_key(|p| {
        let (e, f) = (p.lighter_before, p.lighter_after);
        (
            p.lambda.clone(),
            w[e.0].eval(&p.lambda),
            Reverse(w[f.0].b.clone()),
            f,
            Reverse(w[e.0].b.clone()),
            Reverse(e),
        )
    });
    let mut lambdas: Vec<Rational> = Vec::new();
    let mut coincident = Vec::new();
    for group in points.chunk_by(|p, q| p.lambda == q.lambda) {
        lambdas.push(group[0].lambda.clone());
        if group.len() > 1 {
            coincident.push(group[0].lambda.clone());
        }
    }
    EqualityPoints {
        points,
        coincident,
        lambdas,
    }
}

/// An interior point of `window` that is not one of `lambdas`.
pub fn generic_point(window: &Interval, lambdas: &[Rational]) -> Rational {
    let mid = window.representative();
    if lambdas.binary_search(&mid).is_err() {
        return mid;
    }
    let next = lambdas
        .get(lambdas.partition_point(|l| *l <= mid))
        .map(|l| ExtRational::Finite(l.clone()))
        .unwrap_or(ExtRational::PosInf)
        .min(window.hi().clone());
    match next {
        ExtRational::Finite(n) => midpoint(&mid, &n),
        _ => mid + crate::pwl::int(1),
    }
}

/// The part of `interval` left of its first crossing.
pub fn first_window(interval: &Interval, lambdas: &[Rational]) -> Interval {
    match lambdas.first() {
        Some(l) => Interval::new(interval.lo().clone(), l.clone().into()).expect("λ is interior"),
        None => interval.clone(),
    }
}

/// The optimal value function `w` together with the basis on each piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSchedule {
    pub cuts: Vec<Rational>,
    pub bases: Vec<Basis>,
    /// `(leaving, entering)` pairs applied at each cut.
    pub swaps: Vec<Vec<(ElementId, ElementId)>>,
    pub value: Pwl,
}

impl BasisSchedule {
    /// The basis on the piece owning `lambda` (cuts belong to the right).
    pub fn basis_at(&self, lambda: &Rational) -> &Basis {
        &self.bases[self.cuts.partition_point(|c| c <= lambda)]
    }
}

/// Sweeps the equality points, swapping `e` for `f` at `λ(e→f)` whenever
/// `e ∈ B`, `f ∉ B` and `B - e + f` stays independent.
pub fn parametric_min_basis(inst: &Instance) -> Result<BasisSchedule, Error> {
    inst.require_interdictable()?;
    let eq = all_equality_points(inst);
    Ok(sweep_schedule(inst, &eq))
}

pub(crate) fn sweep_schedule(inst: &Instance, eq: &EqualityPoints) -> BasisSchedule {
    let start = generic_point(&first_window(inst.interval(), eq.lambdas()), eq.lambdas());
    let mut basis = min_basis_at(&inst.view(), inst.weights(), &start);
    let mut cuts = Vec::new();
    let mut lines: Vec<LinearFn> = vec![basis.weight(inst.weights())];
    let mut bases = vec![basis.clone()];
    let mut swaps = Vec::new();
    for group in eq.groups() {
        let mut applied = Vec::new();
        for p in group {
            let (e, f) = (p.lighter_before, p.lighter_after);
            if basis.contains(e)
                && !basis.contains(f)
                && inst
                    .backend()
                    .exchange_is_independent(basis.elements(), Some(e), f)
            {
                basis.swap(e, f);
                applied.push((e, f));
            }
        }
        if !applied.is_empty() {
            cuts.push(group[0].lambda.clone());
            lines.push(basis.weight(inst.weights()));
            bases.push(basis.clone());
            swaps.push(applied);
        }
    }
    let value = Pwl::from_parts(inst.interval().clone(), cuts.clone(), lines, None)
        .expect("basis weights agree at swap points");
    debug_assert_eq!(value.cuts(), &cuts[..], "every swap changes the slope");
    BasisSchedule {
        cuts,
        bases,
        swaps,
        value,
    }
}
