use fixedbitset::FixedBitSet;
use petgraph::unionfind::UnionFind;

use super::subset::GroundSubset;
use crate::element::ElementId;

/// The independence structure of a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidBackend {
    /// Cycle matroid of a multigraph; edge `i` joins `edges[i].0` and `edges[i].1`.
    /// Parallel edges and self-loops are allowed.
    Graphic {
        nodes: usize,
        edges: Vec<(usize, usize)>,
    },
    /// `U(k, m)`: every set of at most `k` elements is independent.
    Uniform { m: usize, k: usize },
    /// Every element `i` of `inner` gets a parallel twin `i + inner.m`; a set is
    /// independent iff it holds no twin pair and its projection onto `inner` is.
    Doubled(Box<MatroidBackend>),
}

impl MatroidBackend {
    pub fn graphic(nodes: usize, edges: Vec<(usize, usize)>) -> Self {
        MatroidBackend::Graphic { nodes, edges }
    }

    pub fn uniform(m: usize, k: usize) -> Self {
        MatroidBackend::Uniform { m, k }
    }

    pub fn doubled(inner: MatroidBackend) -> Self {
        MatroidBackend::Doubled(Box::new(inner))
    }

    pub fn ground_size(&self) -> usize {
        match self {
            MatroidBackend::Graphic { edges, .. } => edges.len(),
            MatroidBackend::Uniform { m, .. } => *m,
            MatroidBackend::Doubled(inner) => 2 * inner.ground_size(),
        }
    }

    /// The element of `inner` a doubled element stands for.
    pub fn twin_of(&self, e: ElementId) -> Option<ElementId> {
        match self {
            MatroidBackend::Doubled(inner) => {
                let m = inner.ground_size();
                Some(if e.0 < m {
                    ElementId(e.0 + m)
                } else {
                    ElementId(e.0 - m)
                })
            }
            _ => None,
        }
    }

    /// Independence of the elements yielded by `it` (which must be distinct).
    pub fn independent<I: Iterator<Item = ElementId>>(&self, it: I) -> bool {
        match self {
            MatroidBackend::Graphic { nodes, edges } => {
                let mut uf = UnionFind::<usize>::new(*nodes);
                for e in it {
                    let (u, v) = edges[e.0];
                    if !uf.union(u, v) {
                        return false;
                    }
                }
                true
            }
            MatroidBackend::Uniform { k, .. } => it.count() <= *k,
            MatroidBackend::Doubled(inner) => {
                let m = inner.ground_size();
                let mut seen = FixedBitSet::with_capacity(m);
                let mut proj = Vec::new();
                for e in it {
                    let p = e.0 % m;
                    if seen.put(p) {
                        return false;
                    }
                    proj.push(ElementId(p));
                }
                inner.independent(proj.into_iter())
            }
        }
    }

    pub fn is_independent(&self, s: &GroundSubset) -> bool {
        self.independent(s.iter())
    }

    /// Independence of `s - out + inn`.
    pub fn exchange_is_independent(
        &self,
        s: &GroundSubset,
        out: Option<ElementId>,
        inn: ElementId,
    ) -> bool {
        debug_assert!(!s.contains(inn) || out == Some(inn));
        self.independent(
            s.iter()
                .filter(|&x| Some(x) != out && x != inn)
                .chain(std::iter::once(inn)),
        )
    }

    /// Greedy over `order`: keep each element that preserves independence.
    pub fn greedy_in_order<I: IntoIterator<Item = ElementId>>(&self, order: I) -> GroundSubset {
        let m = self.ground_size();
        let mut chosen = GroundSubset::empty(m);
        match self {
            MatroidBackend::Graphic { nodes, edges } => {
                let mut uf = UnionFind::<usize>::new(*nodes);
                for e in order {
                    let (u, v) = edges[e.0];
                    if uf.union(u, v) {
                        chosen.insert(e);
                    }
                }
            }
            MatroidBackend::Uniform { k, .. } => {
                for e in order.into_iter().take(*k) {
                    chosen.insert(e);
                }
            }
            MatroidBackend::Doubled(_) => {
                for e in order {
                    if self.exchange_is_independent(&chosen, None, e) {
                        chosen.insert(e);
                    }
                }
            }
        }
        chosen
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        self.greedy_in_order((0..self.ground_size()).map(ElementId))
            .len()
    }
}
