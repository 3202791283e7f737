use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Zero;

use super::rational::{int, midpoint, ExtRational, Rational};
use crate::element::ElementId;

/// The affine function `λ ↦ a + λ·b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFn {
    pub a: Rational,
    pub b: Rational,
}

impl LinearFn {
    pub fn new(a: Rational, b: Rational) -> Self {
        LinearFn { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        LinearFn::new(int(a), int(b))
    }

    pub fn zero() -> Self {
        LinearFn::new(Rational::zero(), Rational::zero())
    }

    pub fn constant(a: Rational) -> Self {
        LinearFn::new(a, Rational::zero())
    }

    pub fn eval(&self, lambda: &Rational) -> Rational {
        &self.a + lambda * &self.b
    }

    /// The abscissa where `self` and `other` meet, if their slopes differ.
    pub fn crossing(&self, other: &LinearFn) -> Option<Rational> {
        if self.b == other.b {
            None
        } else {
            Some((&other.a - &self.a) / (&self.b - &other.b))
        }
    }
}

impl<'a> Add<&'a LinearFn> for &'a LinearFn {
    type Output = LinearFn;
    fn add(self, rhs: &'a LinearFn) -> LinearFn {
        LinearFn::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a LinearFn> for &'a LinearFn {
    type Output = LinearFn;
    fn sub(self, rhs: &'a LinearFn) -> LinearFn {
        LinearFn::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl std::ops::AddAssign<&LinearFn> for LinearFn {
    fn add_assign(&mut self, rhs: &LinearFn) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl std::ops::SubAssign<&LinearFn> for LinearFn {
    fn sub_assign(&mut self, rhs: &LinearFn) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl std::iter::Sum for LinearFn {
    fn sum<I: Iterator<Item = LinearFn>>(iter: I) -> Self {
        iter.fold(LinearFn::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> std::iter::Sum<&'a LinearFn> for LinearFn {
    fn sum<I: Iterator<Item = &'a LinearFn>>(iter: I) -> Self {
        iter.fold(LinearFn::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl fmt::Display for LinearFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}λ", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid interval [{lo}, {hi}]")]
pub struct IntervalError {
    pub lo: ExtRational,
    pub hi: ExtRational,
}

/// A closed parameter interval; either end may be infinite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: ExtRational,
    hi: ExtRational,
}

impl Interval {
    /// Rejects `lo > hi` and ends of the wrong infinity (`lo = +inf` or `hi = -inf`).
    pub fn new(lo: ExtRational, hi: ExtRational) -> Result<Self, IntervalError> {
        let bad_ends = lo == ExtRational::PosInf || hi == ExtRational::NegInf;
        if bad_ends || lo > hi {
            return Err(IntervalError { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        Interval::new(lo.into(), hi.into())
    }

    pub fn real_line() -> Self {
        Interval {
            lo: ExtRational::NegInf,
            hi: ExtRational::PosInf,
        }
    }

    pub fn lo(&self) -> &ExtRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExtRational {
        &self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// True when the interval has empty interior.
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.cmp_finite(x).is_le() && self.hi.cmp_finite(x).is_ge()
    }

    pub fn contains_strictly(&self, x: &Rational) -> bool {
        self.lo.cmp_finite(x).is_lt() && self.hi.cmp_finite(x).is_gt()
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// A deterministic interior point: the midpoint when bounded, one unit
    /// inside the finite end when half-bounded, zero for the whole line.
    pub fn representative(&self) -> Rational {
        match (&self.lo, &self.hi) {
            (ExtRational::Finite(l), ExtRational::Finite(h)) => midpoint(l, h),
            (ExtRational::Finite(l), _) => l + int(1),
            (_, ExtRational::Finite(h)) => h - int(1),
            _ => Rational::zero(),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// `λ(e→f)`: `lighter_before` is strictly lighter left of `lambda` and
/// strictly heavier right of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EqualityPoint {
    pub lighter_before: ElementId,
    pub lighter_after: ElementId,
    pub lambda: Rational,
}

impl fmt::Display for EqualityPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "λ({}→{}) = {}",
            self.lighter_before, self.lighter_after, self.lambda
        )
    }
}

/// The oriented crossing of two weight lines; `None` when they are parallel.
pub fn equality_point(
    e: ElementId,
    we: &LinearFn,
    f: ElementId,
    wf: &LinearFn,
) -> Option<EqualityPoint> {
    let lambda = we.crossing(wf)?;
    // larger slope means lighter before the crossing
    let (lighter_before, lighter_after) = if we.b > wf.b { (e, f) } else { (f, e) };
    Some(EqualityPoint {
        lighter_before,
        lighter_after,
        lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pwl::rational::ratio;

    fn id(i: usize) -> ElementId {
        ElementId(i)
    }

    #[test]
    fn equality_point_examples() {
        let p = equality_point(
            id(0),
            &LinearFn::from_ints(0, 1),
            id(1),
            &LinearFn::from_ints(1, 0),
        )
        .unwrap();
        assert_eq!(
            (p.lighter_before, p.lighter_after, p.lambda),
            (id(0), id(1), int(1))
        );

        assert!(equality_point(
            id(0),
            &LinearFn::from_ints(0, 1),
            id(1),
            &LinearFn::from_ints(1, 1)
        )
        .is_none());

        let p = equality_point(
            id(0),
            &LinearFn::from_ints(0, 2),
            id(1),
            &LinearFn::from_ints(3, 0),
        )
        .unwrap();
        assert_eq!(
            (p.lighter_before, p.lighter_after, p.lambda),
            (id(0), id(1), ratio(3, 2))
        );
        // brute force: sign of w_e - w_f flips from negative to positive at 3/2
        let (we, wf) = (LinearFn::from_ints(0, 2), LinearFn::from_ints(3, 0));
        assert!(we.eval(&ratio(149, 100)) < wf.eval(&ratio(149, 100)));
        assert!(we.eval(&ratio(151, 100)) > wf.eval(&ratio(151, 100)));
    }

    #[test]
    fn orientation_flips_with_argument_order() {
        let (we, wf) = (LinearFn::from_ints(4, -3), LinearFn::from_ints(-1, 2));
        let p = equality_point(id(3), &we, id(5), &wf).unwrap();
        let q = equality_point(id(5), &wf, id(3), &we).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.lighter_before, id(5));
    }

    #[test]
    fn interval_validation_and_representative() {
        assert!(Interval::closed(int(1), int(0)).is_err());
        assert!(Interval::new(ExtRational::PosInf, ExtRational::PosInf).is_err());
        let i = Interval::closed(int(0), int(3)).unwrap();
        assert_eq!(i.representative(), ratio(3, 2));
        assert!(i.contains(&int(0)) && !i.contains_strictly(&int(0)));
        let half = Interval::new(ExtRational::NegInf, int(4).into()).unwrap();
        assert_eq!(half.representative(), int(3));
        assert_eq!(Interval::real_line().representative(), int(0));
        assert!(Interval::closed(int(2), int(2)).unwrap().is_degenerate());
    }
}
