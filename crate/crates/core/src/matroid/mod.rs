//! Matroid oracles (graphic, uniform, doubled) and the greedy toolkit built
//! on independence tests.

mod backend;
mod components;
mod subset;
mod view;

pub use backend::MatroidBackend;
pub use components::{
    components, components_via_blocks, components_via_circuits, ComponentPartition,
};
pub use subset::GroundSubset;
pub use view::{
    canonical_order, coloop_scan, fundamental_circuit, greedy_min_basis, min_basis_at,
    replacement_element, Basis, MatroidError, View,
};
