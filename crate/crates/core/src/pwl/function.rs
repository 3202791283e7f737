use super::linear::{Interval, LinearFn};
use super::rational::{ExtRational, Rational};
use crate::element::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PwlError {
    #[error("expected {expected} pieces for {cuts} cuts, got {got}")]
    PieceCount {
        cuts: usize,
        expected: usize,
        got: usize,
    },
    #[error("label count {got} does not match piece count {pieces}")]
    LabelCount { pieces: usize, got: usize },
    #[error("cut {0} is not strictly increasing or not interior to the domain")]
    BadCut(Rational),
    #[error("discontinuity at cut {0}")]
    Discontinuous(Rational),
    #[error("window {window} does not continue the previous window")]
    Gap { window: Interval },
}

/// A continuous piecewise-linear function on a closed interval, stored as
/// interior cuts and one line per piece, optionally labelled per piece.
///
/// Values are normalized: adjacent pieces never carry the same line (and,
/// when labelled, the same label), so unlabelled functions have strictly
/// different slopes across every cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pwl {
    domain: Interval,
    cuts: Vec<Rational>,
    pieces: Vec<LinearFn>,
    labels: Option<Vec<ElementId>>,
}

impl Pwl {
    pub fn linear(domain: Interval, line: LinearFn) -> Self {
        Pwl {
            domain,
            cuts: Vec::new(),
            pieces: vec![line],
            labels: None,
        }
    }

    pub fn linear_labeled(domain: Interval, line: LinearFn, label: ElementId) -> Self {
        Pwl {
            labels: Some(vec![label]),
            ..Pwl::linear(domain, line)
        }
    }

    /// Validates and normalizes raw parts.
    pub fn from_parts(
        domain: Interval,
        cuts: Vec<Rational>,
        pieces: Vec<LinearFn>,
        labels: Option<Vec<ElementId>>,
    ) -> Result<Self, PwlError> {
        if pieces.len() != cuts.len() + 1 {
            return Err(PwlError::PieceCount {
                cuts: cuts.len(),
                expected: cuts.len() + 1,
                got: pieces.len(),
            });
        }
        if let Some(l) = &labels {
            if l.len() != pieces.len() {
                return Err(PwlError::LabelCount {
                    pieces: pieces.len(),
                    got: l.len(),
                });
            }
        }
        for (i, c) in cuts.iter().enumerate() {
            let increasing = i == 0 || cuts[i - 1] < *c;
            if !increasing || !domain.contains_strictly(c) {
                return Err(PwlError::BadCut(c.clone()));
            }
            if pieces[i].eval(c) != pieces[i + 1].eval(c) {
                return Err(PwlError::Discontinuous(c.clone()));
            }
        }
        let mut f = Pwl {
            domain,
            cuts,
            pieces,
            labels,
        };
        f.normalize();
        Ok(f)
    }

    /// Builds a function from consecutive windows that tile `domain`.
    pub fn from_windows(
        domain: Interval,
        windows: Vec<(Interval, LinearFn, Option<ElementId>)>,
    ) -> Result<Self, PwlError> {
        let labelled = windows.iter().all(|w| w.2.is_some());
        let mut cuts = Vec::with_capacity(windows.len());
        let mut pieces = Vec::with_capacity(windows.len());
        let mut labels = Vec::with_capacity(windows.len());
        let mut expect = domain.lo().clone();
        for (window, line, label) in windows {
            if *window.lo() != expect || window.is_degenerate() {
                return Err(PwlError::Gap { window });
            }
            if let ExtRational::Finite(c) = window.lo() {
                if !pieces.is_empty() {
                    cuts.push(c.clone());
                }
            }
            expect = window.hi().clone();
            pieces.push(line);
            if let Some(l) = label {
                labels.push(l);
            }
        }
        if expect != *domain.hi() || pieces.is_empty() {
            return Err(PwlError::Gap { window: domain });
        }
        Pwl::from_parts(domain, cuts, pieces, labelled.then_some(labels))
    }

    fn normalize(&mut self) {
        let n = self.pieces.len();
        let mut keep_cut = vec![true; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            let same_line = self.pieces[i] == self.pieces[i + 1];
            let same_label = match &self.labels {
                Some(l) => l[i] == l[i + 1],
                None => true,
            };
            keep_cut[i] = !(same_line && same_label);
        }
        if keep_cut.iter().all(|&k| k) {
            return;
        }
        let mut cuts = Vec::new();
        let mut pieces = vec![self.pieces[0].clone()];
        let mut labels = self.labels.as_ref().map(|l| vec![l[0]]);
        for i in 0..n - 1 {
            if keep_cut[i] {
                cuts.push(self.cuts[i].clone());
                pieces.push(self.pieces[i + 1].clone());
                if let (Some(out), Some(src)) = (labels.as_mut(), self.labels.as_ref()) {
                    out.push(src[i + 1]);
                }
            }
        }
        self.cuts = cuts;
        self.pieces = pieces;
        self.labels = labels;
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn pieces(&self) -> &[LinearFn] {
        &self.pieces
    }

    pub fn labels(&self) -> Option<&[ElementId]> {
        self.labels.as_deref()
    }

    pub fn num_pieces(&self) -> usize {
        self.pieces.len()
    }

    /// Index of the piece owning `lambda`; a cut belongs to the piece on its right.
    pub fn piece_index_at(&self, lambda: &Rational) -> usize {
        self.cuts.partition_point(|c| c <= lambda)
    }

    pub fn eval(&self, lambda: &Rational) -> Rational {
        debug_assert!(
            self.domain.contains(lambda),
            "{lambda} outside {}",
            self.domain
        );
        self.pieces[self.piece_index_at(lambda)].eval(lambda)
    }

    pub fn label_at(&self, lambda: &Rational) -> Option<ElementId> {
        self.labels.as_ref().map(|l| l[self.piece_index_at(lambda)])
    }

    pub fn piece_window(&self, i: usize) -> Interval {
        let lo = if i == 0 {
            self.domain.lo().clone()
        } else {
            ExtRational::Finite(self.cuts[i - 1].clone())
        };
        let hi = if i == self.cuts.len() {
            self.domain.hi().clone()
        } else {
            ExtRational::Finite(self.cuts[i].clone())
        };
        Interval::new(lo, hi).expect("cuts are ordered")
    }

    /// The line of `self` on `window`, if `self` is linear there.
    pub fn line_on(&self, window: &Interval) -> Option<&LinearFn> {
        let first = match window.lo() {
            ExtRational::Finite(l) => self.piece_index_at(l),
            _ => 0,
        };
        let last = match window.hi() {
            ExtRational::Finite(h) => self.cuts.partition_point(|c| c < h),
            _ => self.cuts.len(),
        };
        (first == last).then(|| &self.pieces[first])
    }

    /// The restriction to a non-degenerate sub-window.
    pub fn restrict(&self, window: &Interval) -> Pwl {
        assert!(
            self.domain.contains_interval(window) && !window.is_degenerate(),
            "cannot restrict {} to {window}",
            self.domain
        );
        let first = match window.lo() {
            ExtRational::Finite(l) => self.piece_index_at(l),
            _ => 0,
        };
        let last = match window.hi() {
            ExtRational::Finite(h) => self.cuts.partition_point(|c| c < h),
            _ => self.cuts.len(),
        };
        Pwl {
            domain: window.clone(),
            cuts: self.cuts[first..last].to_vec(),
            pieces: self.pieces[first..=last].to_vec(),
            labels: self.labels.as_ref().map(|l| l[first..=last].to_vec()),
        }
    }

    /// Drops labels and re-normalizes, merging equal adjacent lines.
    pub fn unlabeled(&self) -> Pwl {
        let mut f = Pwl {
            domain: self.domain.clone(),
            cuts: self.cuts.clone(),
            pieces: self.pieces.clone(),
            labels: None,
        };
        f.normalize();
        f
    }

    pub fn with_label(mut self, label: ElementId) -> Pwl {
        self.labels = Some(vec![label; self.pieces.len()]);
        self
    }

    /// Strictly decreasing slopes across every cut.
    pub fn is_strictly_concave(&self) -> bool {
        self.pieces.windows(2).all(|w| w[0].b > w[1].b)
    }

    /// Continuity at every cut and no redundant cut.
    pub fn invariants_hold(&self) -> bool {
        let labels = self.labels.as_deref();
        self.pieces.len() == self.cuts.len() + 1
            && self.cuts.windows(2).all(|w| w[0] < w[1])
            && self.cuts.iter().all(|c| self.domain.contains_strictly(c))
            && self.cuts.iter().enumerate().all(|(i, c)| {
                let continuous = self.pieces[i].eval(c) == self.pieces[i + 1].eval(c);
                let distinct = match labels {
                    Some(l) => self.pieces[i] != self.pieces[i + 1] || l[i] != l[i + 1],
                    None => self.pieces[i].b != self.pieces[i + 1].b,
                };
                continuous && distinct
            })
    }
}

/// Equality of the normalized unlabelled forms.
pub fn pwl_equal(f: &Pwl, g: &Pwl) -> bool {
    if f.domain != g.domain {
        return false;
    }
    let (f, g) = (f.unlabeled(), g.unlabeled());
    f.cuts == g.cuts && f.pieces == g.pieces
}
