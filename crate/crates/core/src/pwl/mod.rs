//! Exact rational arithmetic, linear weight functions, and continuous
//! piecewise-linear functions with their upper envelopes.

// errors carry the offending intervals, which are exact and therefore large
#![allow(clippy::result_large_err)]

mod envelope;
mod function;
mod linear;
mod rational;

pub use envelope::{envelope_of_lines, envelope_of_pwl, EnvelopeError};
pub use function::{pwl_equal, Pwl, PwlError};
pub use linear::{equality_point, EqualityPoint, Interval, IntervalError, LinearFn};
pub use rational::{
    format_rational, int, midpoint, parse_rational, ratio, to_decimal, ExtRational,
    ParseRationalError, Rational,
};
