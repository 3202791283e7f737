//! Matroid components: `e ~ f` iff `e = f` or some circuit holds both.

use petgraph::unionfind::UnionFind;

use super::backend::MatroidBackend;
use super::subset::GroundSubset;
use super::view::{fundamental_circuit, Basis, View};
use crate::element::ElementId;

/// Component id per active element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    comp: Vec<Option<usize>>,
    sizes: Vec<usize>,
}

impl ComponentPartition {
    fn from_labels(comp: Vec<Option<usize>>) -> Self {
        // relabel by first occurrence so equal partitions compare equal
        let mut remap = std::collections::HashMap::new();
        let mut sizes = Vec::new();
        let comp = comp
            .into_iter()
            .map(|c| {
                c.map(|c| {
                    let next = remap.len();
                    let id = *remap.entry(c).or_insert(next);
                    if id == sizes.len() {
                        sizes.push(0);
                    }
                    sizes[id] += 1;
                    id
                })
            })
            .collect();
        ComponentPartition { comp, sizes }
    }

    pub fn component_of(&self, e: ElementId) -> Option<usize> {
        self.comp[e.0]
    }

    pub fn is_singleton(&self, c: usize) -> bool {
        self.sizes[c] == 1
    }

    pub fn num_components(&self) -> usize {
        self.sizes.len()
    }

    pub fn members(&self, c: usize) -> impl Iterator<Item = ElementId> + '_ {
        self.comp
            .iter()
            .enumerate()
            .filter(move |(_, x)| **x == Some(c))
            .map(|(i, _)| ElementId(i))
    }
}

/// Components of `view`, using 2-connected components for graphic backends.
pub fn components(view: &View<'_>) -> ComponentPartition {
    match view.backend() {
        MatroidBackend::Graphic { nodes, edges } => {
            components_via_blocks(*nodes, edges, view.active())
        }
        _ => components_via_circuits(view),
    }
}

/// Unions the fundamental circuits of one basis.
pub fn components_via_circuits(view: &View<'_>) -> ComponentPartition {
    let m = view.ground_size();
    let basis = Basis::from_subset(view.backend().greedy_in_order(view.active().iter()));
    let mut uf = UnionFind::<usize>::new(m);
    for f in view.active().iter().filter(|&f| !basis.contains(f)) {
        let circuit =
            fundamental_circuit(view, &basis, f).expect("non-basis element spans a circuit");
        for g in circuit.iter() {
            uf.union(f.0, g.0);
        }
    }
    let labels = (0..m)
        .map(|i| view.active().contains(ElementId(i)).then(|| uf.find(i)))
        .collect();
    ComponentPartition::from_labels(labels)
}

/// Edge partition into blocks (2-connected components) by an iterative
/// Hopcroft–Tarjan search; each self-loop is its own block.
pub fn components_via_blocks(
    nodes: usize,
    edges: &[(usize, usize)],
    active: &GroundSubset,
) -> ComponentPartition {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes];
    let mut labels: Vec<Option<usize>> = vec![None; edges.len()];
    let mut next_block = 0;
    for e in active.iter() {
        let (u, v) = edges[e.0];
        if u == v {
            labels[e.0] = Some(next_block);
            next_block += 1;
        } else {
            adj[u].push((v, e.0));
            adj[v].push((u, e.0));
        }
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; nodes];
    let mut low = vec![0; nodes];
    let mut clock = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    // (node, edge to parent, next adjacency index)
    let mut frames: Vec<(usize, Option<usize>, usize)> = Vec::new();

    for root in 0..nodes {
        if disc[root] != UNSEEN || adj[root].is_empty() {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        frames.push((root, None, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent_edge, idx) = *frame;
            if idx < adj[v].len() {
                frame.2 += 1;
                let (w, e) = adj[v][idx];
                if Some(e) == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let (Some(&(p, _, _)), Some(tree_edge)) = (frames.last(), parent_edge) {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        while let Some(e) = edge_stack.pop() {
                            labels[e] = Some(next_block);
                            if e == tree_edge {
                                break;
                            }
                        }
                        next_block += 1;
                    }
                }
            }
        }
    }
    ComponentPartition::from_labels(labels)
}
