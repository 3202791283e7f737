use crate::element::ElementId;
use crate::pwl::{EnvelopeError, IntervalError, PwlError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the matroid has {expected} elements but {got} weights were given")]
    WeightCount { expected: usize, got: usize },
    #[error("edge {edge} has an endpoint outside 0..{nodes}")]
    NodeOutOfRange { edge: usize, nodes: usize },
    #[error("uniform matroid rank {k} exceeds its size {m}")]
    UniformRank { m: usize, k: usize },
    #[error("coloops present (interdicting any of them gives an infinite value): {}", list(.0))]
    Coloops(Vec<ElementId>),
    #[error("the matroid has rank zero, so no element can be interdicted")]
    RankZero,
    #[error(transparent)]
    Interval(Box<IntervalError>),
    #[error(transparent)]
    Envelope(Box<EnvelopeError>),
    #[error(transparent)]
    Pwl(Box<PwlError>),
}

impl From<IntervalError> for Error {
    fn from(e: IntervalError) -> Self {
        Error::Interval(Box::new(e))
    }
}

impl From<EnvelopeError> for Error {
    fn from(e: EnvelopeError) -> Self {
        Error::Envelope(Box::new(e))
    }
}

impl From<PwlError> for Error {
    fn from(e: PwlError) -> Self {
        Error::Pwl(Box::new(e))
    }
}

fn list(es: &[ElementId]) -> String {
    es.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
