//! Doubling every element with an identical twin. Interdicting the doubled
//! matroid never helps, so its `y` equals the original `w`.

use crate::instance::Instance;
use crate::matroid::MatroidBackend;

/// Twins via the generic doubled backend: element `i + m` mirrors `i`.
pub fn doubled_instance(inst: &Instance) -> Instance {
    let weights = inst
        .weights()
        .iter()
        .chain(inst.weights())
        .cloned()
        .collect();
    let mut out = Instance::new(
        MatroidBackend::doubled(inst.backend().clone()),
        weights,
        inst.interval().clone(),
    )
    .expect("doubling preserves validity");
    out.name = inst.name.as_ref().map(|n| format!("{n}-doubled"));
    out
}

/// For graphic instances: the same doubling as a multigraph with one
/// parallel copy per edge, numbered like [`doubled_instance`].
pub fn doubled_graphic(inst: &Instance) -> Option<Instance> {
    let MatroidBackend::Graphic { nodes, edges } = inst.backend() else {
        return None;
    };
    let weights = inst
        .weights()
        .iter()
        .chain(inst.weights())
        .cloned()
        .collect();
    let mut out = Instance::new(
        MatroidBackend::graphic(*nodes, edges.iter().chain(edges).copied().collect()),
        weights,
        inst.interval().clone(),
    )
    .expect("doubling preserves validity");
    out.name = inst.name.as_ref().map(|n| format!("{n}-doubled"));
    Some(out)
}
