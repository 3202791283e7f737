//! Small hand-checkable instances used by tests, docs and the CLI examples.

use crate::instance::Instance;
use crate::matroid::MatroidBackend;
use crate::pwl::{int, Interval, LinearFn};

/// Two parallel edges, `w(e0) = λ`, `w(e1) = 1` on `[-1, 3]`.
pub fn p2() -> Instance {
    Instance::new(
        MatroidBackend::graphic(2, vec![(0, 1), (0, 1)]),
        vec![LinearFn::from_ints(0, 1), LinearFn::from_ints(1, 0)],
        Interval::closed(int(-1), int(3)).expect("bounded"),
    )
    .expect("valid fixture")
    .named("P2")
}

fn four_cycle(weights: Vec<LinearFn>, name: &str) -> Instance {
    Instance::new(
        MatroidBackend::graphic(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
        weights,
        Interval::closed(int(0), int(2)).expect("bounded"),
    )
    .expect("valid fixture")
    .named(name)
}

/// The 4-cycle with weights `1, 2, 3, 2λ` on `[0, 2]`.
pub fn c4p() -> Instance {
    four_cycle(
        vec![
            LinearFn::from_ints(1, 0),
            LinearFn::from_ints(2, 0),
            LinearFn::from_ints(3, 0),
            LinearFn::from_ints(0, 2),
        ],
        "C4P",
    )
}

/// The 4-cycle with constant weights `1, 2, 3, 4` on `[0, 2]`.
pub fn c4_constant() -> Instance {
    four_cycle((1..=4).map(|a| LinearFn::from_ints(a, 0)).collect(), "C4")
}

/// A single edge: its only element is a coloop.
pub fn bridge() -> Instance {
    Instance::new(
        MatroidBackend::graphic(2, vec![(0, 1)]),
        vec![LinearFn::from_ints(2, 0)],
        Interval::closed(int(0), int(1)).expect("bounded"),
    )
    .expect("valid fixture")
    .named("bridge")
}
