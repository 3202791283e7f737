use crate::element::ElementId;
use crate::error::Error;
use crate::matroid::{coloop_scan, MatroidBackend, View};
use crate::pwl::{Interval, LinearFn, Rational};

/// A matroid with one linear weight per element and a parameter interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: Option<String>,
    backend: MatroidBackend,
    weights: Vec<LinearFn>,
    interval: Interval,
}

impl Instance {
    pub fn new(
        backend: MatroidBackend,
        weights: Vec<LinearFn>,
        interval: Interval,
    ) -> Result<Self, Error> {
        if weights.len() != backend.ground_size() {
            return Err(Error::WeightCount {
                expected: backend.ground_size(),
                got: weights.len(),
            });
        }
        if let MatroidBackend::Graphic { nodes, edges } = &backend {
            if let Some((i, _)) = edges
                .iter()
                .enumerate()
                .find(|(_, (u, v))| u >= nodes || v >= nodes)
            {
                return Err(Error::NodeOutOfRange {
                    edge: i,
                    nodes: *nodes,
                });
            }
        }
        if let MatroidBackend::Uniform { m, k } = &backend {
            if k > m {
                return Err(Error::UniformRank { m: *m, k: *k });
            }
        }
        Ok(Instance {
            name: None,
            backend,
            weights,
            interval,
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn backend(&self) -> &MatroidBackend {
        &self.backend
    }

    pub fn weights(&self) -> &[LinearFn] {
        &self.weights
    }

    pub fn weight(&self, e: ElementId) -> &LinearFn {
        &self.weights[e.0]
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn m(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.backend.rank()
    }

    pub fn view(&self) -> View<'_> {
        View::full(&self.backend)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.m()).map(ElementId)
    }

    pub fn weight_at(&self, e: ElementId, lambda: &Rational) -> Rational {
        self.weights[e.0].eval(lambda)
    }

    /// Coloops make the interdiction value infinite and are rejected; a
    /// rank-zero matroid has nothing to interdict.
    pub fn require_interdictable(&self) -> Result<(), Error> {
        let coloops = coloop_scan(&self.view());
        if !coloops.is_empty() {
            return Err(Error::Coloops(coloops.to_vec()));
        }
        if self.rank() == 0 {
            return Err(Error::RankZero);
        }
        Ok(())
    }
}
