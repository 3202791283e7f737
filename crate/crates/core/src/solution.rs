//! Segmented solutions shared by every solver.

use crate::element::ElementId;
use crate::error::Error;
use crate::instance::Instance;
use crate::matroid::{min_basis_at, replacement_element, Basis};
use crate::parametric::generic_point;
use crate::pwl::{Interval, LinearFn, Pwl, Rational};

/// A maximal window on which both the line of `y` and the most vital
/// element stay fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub window: Interval,
    /// The piece of `y` on the window.
    pub value: LinearFn,
    pub most_vital: ElementId,
    /// The minimum basis at the window's reference point.
    pub basis: Basis,
    /// Replacement of `most_vital` in `basis`.
    pub replacement: ElementId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub segments: Vec<Segment>,
    /// The optimal interdiction value function, normalized and unlabelled.
    pub y: Pwl,
}

impl Solution {
    /// The segment owning `lambda`; a shared endpoint belongs to the right segment.
    pub fn segment_at(&self, lambda: &Rational) -> &Segment {
        let i = self
            .segments
            .partition_point(|s| s.window.hi().cmp_finite(lambda).is_le());
        &self.segments[i.min(self.segments.len() - 1)]
    }

    /// Changepoints of `y` split into (breakpoints, interdiction points):
    /// a changepoint is an interdiction point when the most vital element
    /// differs on its two sides.
    pub fn classify_changepoints(&self) -> (Vec<Rational>, Vec<Rational>) {
        let mut breakpoints = Vec::new();
        let mut interdiction = Vec::new();
        for c in self.y.cuts() {
            let right = self.segment_at(c);
            let left_idx = self
                .segments
                .partition_point(|s| s.window.hi().cmp_finite(c).is_lt());
            let left = &self.segments[left_idx];
            if left.most_vital == right.most_vital {
                breakpoints.push(c.clone());
            } else {
                interdiction.push(c.clone());
            }
        }
        (breakpoints, interdiction)
    }
}

/// Merges labelled pieces into segments and fills in basis and replacement
/// at a reference point of each segment that avoids every crossing.
///
/// Each piece's label must belong to the minimum basis on that piece.
pub(crate) fn assemble(
    inst: &Instance,
    crossings: &[Rational],
    pieces: Vec<(Interval, LinearFn, ElementId)>,
) -> Result<Solution, Error> {
    let labelled = Pwl::from_windows(
        inst.interval().clone(),
        pieces
            .into_iter()
            .map(|(w, l, e)| (w, l, Some(e)))
            .collect(),
    )?;
    let labels = labelled.labels().expect("labelled");
    let view = inst.view();
    let weights = inst.weights();
    let segments = (0..labelled.num_pieces())
        .map(|i| {
            let window = labelled.piece_window(i);
            let most_vital = labels[i];
            let p = generic_point(&window, crossings);
            let basis = min_basis_at(&view, weights, &p);
            debug_assert!(
                basis.contains(most_vital),
                "{most_vital} not in basis on {window}"
            );
            let replacement =
                replacement_element(&view, &basis, most_vital, |e| weights[e.0].eval(&p))
                    .ok_or_else(|| Error::Coloops(vec![most_vital]))?;
            let value = labelled.pieces()[i].clone();
            debug_assert_eq!(
                value,
                &(&basis.weight(weights) - &weights[most_vital.0]) + &weights[replacement.0]
            );
            Ok(Segment {
                window,
                value,
                most_vital,
                basis,
                replacement,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Solution {
        segments,
        y: labelled.unlabeled(),
    })
}
