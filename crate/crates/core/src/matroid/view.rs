use super::backend::MatroidBackend;
use super::subset::GroundSubset;
use crate::element::ElementId;
use crate::pwl::{LinearFn, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("{0} is already in the basis")]
    InBasis(ElementId),
    #[error("basis plus {0} is independent, so it spans no circuit")]
    NoCircuit(ElementId),
}

/// A restriction `M|E'` of a backend to an active subset.
#[derive(Debug, Clone)]
pub struct View<'a> {
    backend: &'a MatroidBackend,
    active: GroundSubset,
}

impl<'a> View<'a> {
    pub fn full(backend: &'a MatroidBackend) -> Self {
        View {
            active: GroundSubset::full(backend.ground_size()),
            backend,
        }
    }

    pub fn restricted(backend: &'a MatroidBackend, active: GroundSubset) -> Self {
        debug_assert_eq!(active.universe(), backend.ground_size());
        View { backend, active }
    }

    /// `M_e`: this view with `e` deleted.
    pub fn without(&self, e: ElementId) -> Self {
        View {
            backend: self.backend,
            active: self.active.without(e),
        }
    }

    pub fn backend(&self) -> &'a MatroidBackend {
        self.backend
    }

    pub fn active(&self) -> &GroundSubset {
        &self.active
    }

    pub fn ground_size(&self) -> usize {
        self.backend.ground_size()
    }

    pub fn is_independent(&self, s: &GroundSubset) -> bool {
        debug_assert!(s.is_subset(&self.active), "{s:?} not inside the view");
        self.backend.is_independent(s)
    }

    pub fn rank(&self) -> usize {
        self.backend.greedy_in_order(self.active.iter()).len()
    }
}

/// An independent set that is maximal within its view.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Basis {
    elements: GroundSubset,
}

impl Basis {
    pub fn from_subset(elements: GroundSubset) -> Self {
        Basis { elements }
    }

    pub fn elements(&self) -> &GroundSubset {
        &self.elements
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.elements.contains(e)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.elements.iter()
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.elements.to_vec()
    }

    pub fn swap(&mut self, out: ElementId, inn: ElementId) {
        self.elements.remove(out);
        self.elements.insert(inn);
    }

    pub fn swapped(&self, out: ElementId, inn: ElementId) -> Basis {
        Basis {
            elements: self.elements.swapped(out, inn),
        }
    }

    pub fn weight(&self, weights: &[LinearFn]) -> LinearFn {
        self.iter().map(|e| &weights[e.0]).sum()
    }
}

/// Active elements ordered by `(weight, id)`, the comparator used everywhere.
pub fn canonical_order<W>(view: &View<'_>, weight_at: W) -> Vec<ElementId>
where
    W: Fn(ElementId) -> Rational,
{
    let mut keyed: Vec<(Rational, ElementId)> =
        view.active().iter().map(|e| (weight_at(e), e)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, e)| e).collect()
}

/// The unique minimum basis under the `(weight, id)` order.
pub fn greedy_min_basis<W>(view: &View<'_>, weight_at: W) -> Basis
where
    W: Fn(ElementId) -> Rational,
{
    let order = canonical_order(view, weight_at);
    Basis::from_subset(view.backend().greedy_in_order(order))
}

/// [`greedy_min_basis`] for linear weights evaluated at `lambda`.
pub fn min_basis_at(view: &View<'_>, weights: &[LinearFn], lambda: &Rational) -> Basis {
    greedy_min_basis(view, |e| weights[e.0].eval(lambda))
}

/// `C(B, f)`: the unique circuit inside `B + f`.
pub fn fundamental_circuit(
    view: &View<'_>,
    basis: &Basis,
    f: ElementId,
) -> Result<GroundSubset, MatroidError> {
    if basis.contains(f) {
        return Err(MatroidError::InBasis(f));
    }
    let backend = view.backend();
    if backend.exchange_is_independent(basis.elements(), None, f) {
        return Err(MatroidError::NoCircuit(f));
    }
    let mut circuit = GroundSubset::empty(view.ground_size());
    circuit.insert(f);
    for g in basis.iter() {
        if backend.exchange_is_independent(basis.elements(), Some(g), f) {
            circuit.insert(g);
        }
    }
    Ok(circuit)
}

/// The lightest `r` outside `basis` (ties by id) with `basis - e + r`
/// independent; `None` when `e` is a coloop of the view.
pub fn replacement_element<W>(
    view: &View<'_>,
    basis: &Basis,
    e: ElementId,
    weight_at: W,
) -> Option<ElementId>
where
    W: Fn(ElementId) -> Rational,
{
    debug_assert!(basis.contains(e));
    let mut candidates: Vec<(Rational, ElementId)> = view
        .active()
        .iter()
        .filter(|&r| !basis.contains(r))
        .map(|r| (weight_at(r), r))
        .collect();
    candidates.sort();
    candidates.into_iter().map(|(_, r)| r).find(|&r| {
        view.backend()
            .exchange_is_independent(basis.elements(), Some(e), r)
    })
}

/// Elements whose deletion lowers the rank (bridges, for graphs).
pub fn coloop_scan(view: &View<'_>) -> GroundSubset {
    let basis = Basis::from_subset(view.backend().greedy_in_order(view.active().iter()));
    let outside: Vec<ElementId> = view
        .active()
        .iter()
        .filter(|&r| !basis.contains(r))
        .collect();
    let mut coloops = GroundSubset::empty(view.ground_size());
    for e in basis.iter() {
        let replaceable = outside.iter().any(|&r| {
            view.backend()
                .exchange_is_independent(basis.elements(), Some(e), r)
        });
        if !replaceable {
            coloops.insert(e);
        }
    }
    coloops
}
