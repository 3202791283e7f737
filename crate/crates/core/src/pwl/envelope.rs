//! Upper envelopes of lines and of piecewise-linear functions.
//!
//! Labels resolve ties deterministically: wherever several inputs attain the
//! maximum on an open stretch, the smallest label wins.

use std::cmp::Ordering;

use super::function::Pwl;
use super::linear::{Interval, LinearFn};
use super::rational::{ExtRational, Rational};
use crate::element::ElementId;
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnvelopeError {
    #[error("envelope of an empty family")]
    Empty,
    #[error("window {0} has empty interior")]
    DegenerateWindow(Interval),
    #[error("input domain {domain} does not cover window {window}")]
    DomainTooSmall { domain: Interval, window: Interval },
}

fn check_window(window: &Interval) -> Result<(), EnvelopeError> {
    if window.is_degenerate() {
        Err(EnvelopeError::DegenerateWindow(window.clone()))
    } else {
        Ok(())
    }
}

/// Pointwise maximum of `lines` on `window`, labelled by the winning line.
pub fn envelope_of_lines(
    lines: &[(ElementId, LinearFn)],
    window: &Interval,
) -> Result<Pwl, EnvelopeError> {
    check_window(window)?;
    if lines.is_empty() {
        return Err(EnvelopeError::Empty);
    }
    // per slope keep the highest line, smallest label among identical ones
    let mut sorted: Vec<&(ElementId, LinearFn)> = lines.iter().collect();
    sorted.sort_by(|(i, l), (j, m)| {
        l.b.cmp(&m.b)
            .then_with(|| m.a.cmp(&l.a))
            .then_with(|| i.cmp(j))
    });
    sorted.dedup_by(|later, earlier| later.1.b == earlier.1.b);

    // hull[i] is maximal on [xs[i-1], xs[i]]
    let mut hull: Vec<&(ElementId, LinearFn)> = Vec::with_capacity(sorted.len());
    let mut xs: Vec<Rational> = Vec::with_capacity(sorted.len());
    for cand in sorted {
        while let Some(top) = hull.last() {
            let x = top.1.crossing(&cand.1).expect("slopes are distinct");
            match xs.last() {
                Some(prev) if x <= *prev => {
                    hull.pop();
                    xs.pop();
                }
                _ => {
                    xs.push(x);
                    break;
                }
            }
        }
        hull.push(cand);
    }

    let mut windows = Vec::new();
    for (i, (label, line)) in hull.iter().map(|h| (h.0, &h.1)).enumerate() {
        let lo = if i == 0 {
            ExtRational::NegInf
        } else {
            ExtRational::Finite(xs[i - 1].clone())
        };
        let hi = xs
            .get(i)
            .cloned()
            .map_or(ExtRational::PosInf, ExtRational::Finite);
        let lo = lo.max(window.lo().clone());
        let hi = hi.min(window.hi().clone());
        if lo < hi {
            let w = Interval::new(lo, hi).expect("clipped piece is ordered");
            windows.push((w, line.clone(), Some(label)));
        }
    }
    Ok(Pwl::from_windows(window.clone(), windows).expect("hull pieces tile the window"))
}

/// Pointwise maximum of labelled functions on `window`, by divide-and-conquer
/// pairwise merging.
pub fn envelope_of_pwl(fs: &[(ElementId, Pwl)], window: &Interval) -> Result<Pwl, EnvelopeError> {
    check_window(window)?;
    if fs.is_empty() {
        return Err(EnvelopeError::Empty);
    }
    for (_, f) in fs {
        if !f.domain().contains_interval(window) {
            return Err(EnvelopeError::DomainTooSmall {
                domain: f.domain().clone(),
                window: window.clone(),
            });
        }
    }
    let restricted: Vec<Pwl> = fs
        .iter()
        .map(|(label, f)| f.restrict(window).unlabeled().with_label(*label))
        .collect();
    Ok(merge_all(&restricted))
}

fn merge_all(fs: &[Pwl]) -> Pwl {
    match fs {
        [one] => one.clone(),
        _ => {
            let (left, right) = fs.split_at(fs.len() / 2);
            let (a, b) = par::join(|| merge_all(left), || merge_all(right));
            merge_max(&a, &b)
        }
    }
}

fn ext_at(cuts: &[Rational], i: usize, end: &ExtRational) -> ExtRational {
    cuts.get(i)
        .cloned()
        .map_or_else(|| end.clone(), ExtRational::Finite)
}

/// Maximum of two labelled functions over the same domain.
fn merge_max(f: &Pwl, g: &Pwl) -> Pwl {
    debug_assert_eq!(f.domain(), g.domain());
    let domain = f.domain();
    let (fl, gl) = (f.labels().expect("labelled"), g.labels().expect("labelled"));
    let mut out: Vec<(Interval, LinearFn, Option<ElementId>)> = Vec::new();
    let mut push = |lo: ExtRational, hi: ExtRational, line: &LinearFn, label: ElementId| {
        out.push((
            Interval::new(lo, hi).expect("ordered"),
            line.clone(),
            Some(label),
        ));
    };

    let (mut i, mut j) = (0, 0);
    let mut lo = domain.lo().clone();
    loop {
        let fi_hi = ext_at(f.cuts(), i, domain.hi());
        let gj_hi = ext_at(g.cuts(), j, domain.hi());
        let hi = fi_hi.clone().min(gj_hi.clone());
        let (lf, lg) = (&f.pieces()[i], &g.pieces()[j]);
        let (af, ag) = (fl[i], gl[j]);
        let span = Interval::new(lo.clone(), hi.clone()).expect("ordered");

        if lf == lg {
            push(lo, hi.clone(), lf, af.min(ag));
        } else {
            match lf.crossing(lg).filter(|x| span.contains_strictly(x)) {
                Some(x) => {
                    // left of the crossing the smaller slope is higher
                    let (left, right) = if lf.b < lg.b {
                        ((lf, af), (lg, ag))
                    } else {
                        ((lg, ag), (lf, af))
                    };
                    let xe = ExtRational::Finite(x);
                    push(lo, xe.clone(), left.0, left.1);
                    push(xe, hi.clone(), right.0, right.1);
                }
                None => {
                    let p = span.representative();
                    let (winner, label) = match lf.eval(&p).cmp(&lg.eval(&p)) {
                        Ordering::Greater => (lf, af),
                        Ordering::Less => (lg, ag),
                        Ordering::Equal => unreachable!("distinct lines meet at most once"),
                    };
                    push(lo, hi.clone(), winner, label);
                }
            }
        }

        if hi == *domain.hi() {
            break;
        }
        if fi_hi == hi {
            i += 1;
        }
        if gj_hi == hi {
            j += 1;
        }
        lo = hi;
    }
    Pwl::from_windows(domain.clone(), out).expect("merged pieces tile the domain")
}
