use proptest::prelude::*;

use pmi_core::gen::{random_graphic, random_uniform, GenConfig};
use pmi_core::matroid::{fundamental_circuit, min_basis_at, GroundSubset, MatroidBackend, View};
use pmi_core::pwl::{
    envelope_of_lines, equality_point, int, pwl_equal, ratio, Interval, LinearFn, Rational,
};
use pmi_core::{
    doubled_graphic, doubled_instance, interdict_at, solve_bruteforce, solve_intervals,
    solve_naive, y_functions_sweep, ElementId, Instance,
};

fn line() -> impl Strategy<Value = LinearFn> {
    (-9i64..=9, -9i64..=9).prop_map(|(a, b)| LinearFn::from_ints(a, b))
}

fn point() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn small_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>, Vec<LinearFn>)> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 1..=9).prop_flat_map(move |edges| {
            let m = edges.len();
            (Just(n), Just(edges), prop::collection::vec(line(), m))
        })
    })
}

fn instance_from(seed: u64) -> Instance {
    let cfg = GenConfig {
        nodes: (3, 6),
        max_edges: 11,
        ..GenConfig::default()
    };
    if seed.is_multiple_of(3) {
        random_uniform(seed, 9, &cfg)
    } else {
        random_graphic(seed, &cfg)
    }
}

/// Minimum weight of an independent set of full rank, by enumeration.
fn exhaustive_min(backend: &MatroidBackend, weights: &[Rational]) -> Rational {
    let m = weights.len();
    let k = backend.rank();
    (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize == k)
        .filter(|mask| backend.independent((0..m).filter(|i| mask >> i & 1 == 1).map(ElementId)))
        .map(|mask| {
            (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| weights[i].clone())
                .sum()
        })
        .min()
        .expect("a basis exists")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn envelope_is_pointwise_max(lines in prop::collection::vec(line(), 1..8), xs in prop::collection::vec(point(), 1..10)) {
        let labelled: Vec<_> = lines.iter().cloned().enumerate().map(|(i, l)| (ElementId(i), l)).collect();
        let window = Interval::closed(int(-10), int(10)).unwrap();
        let env = envelope_of_lines(&labelled, &window).unwrap();
        prop_assert!(env.invariants_hold());
        for x in xs.iter().filter(|x| window.contains(x)) {
            let max = lines.iter().map(|l| l.eval(x)).max().unwrap();
            prop_assert_eq!(env.eval(x), max.clone());
            let label = env.label_at(x).unwrap();
            prop_assert_eq!(lines[label.0].eval(x), max);
        }
    }

    #[test]
    fn envelope_label_is_order_independent(lines in prop::collection::vec(line(), 1..8)) {
        let window = Interval::closed(int(-10), int(10)).unwrap();
        let labelled: Vec<_> = lines.iter().cloned().enumerate().map(|(i, l)| (ElementId(i), l)).collect();
        let mut reversed = labelled.clone();
        reversed.reverse();
        let a = envelope_of_lines(&labelled, &window).unwrap();
        let b = envelope_of_lines(&reversed, &window).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn equality_point_is_symmetric(w1 in line(), w2 in line()) {
        let p = equality_point(ElementId(0), &w1, ElementId(1), &w2);
        let q = equality_point(ElementId(1), &w2, ElementId(0), &w1);
        prop_assert_eq!(&p, &q);
        if let Some(p) = p {
            prop_assert_eq!(w1.eval(&p.lambda), w2.eval(&p.lambda));
            let before = &p.lambda - int(1);
            let (e, f) = (p.lighter_before, p.lighter_after);
            let ws = [&w1, &w2];
            prop_assert!(ws[e.0].eval(&before) < ws[f.0].eval(&before));
        }
    }

    #[test]
    fn greedy_matches_enumeration((n, edges, weights) in small_graph(), x in point()) {
        let backend = MatroidBackend::graphic(n, edges);
        let view = View::full(&backend);
        let basis = min_basis_at(&view, &weights, &x);
        let at: Vec<Rational> = weights.iter().map(|w| w.eval(&x)).collect();
        let greedy: Rational = basis.iter().map(|e| at[e.0].clone()).sum();
        prop_assert_eq!(basis.len(), backend.rank());
        prop_assert_eq!(greedy, exhaustive_min(&backend, &at));
    }

    #[test]
    fn uniform_greedy_matches_enumeration(weights in prop::collection::vec(line(), 2..9), k in 1usize..8, x in point()) {
        let k = k.min(weights.len());
        let backend = MatroidBackend::uniform(weights.len(), k);
        let basis = min_basis_at(&View::full(&backend), &weights, &x);
        let at: Vec<Rational> = weights.iter().map(|w| w.eval(&x)).collect();
        let greedy: Rational = basis.iter().map(|e| at[e.0].clone()).sum();
        prop_assert_eq!(greedy, exhaustive_min(&backend, &at));
    }

    #[test]
    fn fundamental_circuits_are_minimal((n, edges, weights) in small_graph(), x in point()) {
        let backend = MatroidBackend::graphic(n, edges);
        let view = View::full(&backend);
        let basis = min_basis_at(&view, &weights, &x);
        for f in (0..backend.ground_size()).map(ElementId).filter(|f| !basis.contains(*f)) {
            let c = fundamental_circuit(&view, &basis, f).unwrap();
            prop_assert!(!backend.is_independent(&c));
            for g in c.iter() {
                prop_assert!(backend.is_independent(&c.without(g)));
            }
        }
    }

    #[test]
    fn doubled_backend_matches_parallel_copies((n, edges, _w) in small_graph(), mask in any::<u32>()) {
        let generic = MatroidBackend::doubled(MatroidBackend::graphic(n, edges.clone()));
        let multi = MatroidBackend::graphic(n, edges.iter().chain(&edges).copied().collect());
        let m = generic.ground_size();
        let s = GroundSubset::from_elements(m, (0..m).filter(|i| mask >> (i % 32) & 1 == 1).map(ElementId));
        prop_assert_eq!(generic.is_independent(&s), multi.is_independent(&s));
        prop_assert_eq!(generic.rank(), multi.rank());
    }

    #[test]
    fn sweep_matches_direct_evaluation(seed in 0u64..10_000, x in point()) {
        let inst = instance_from(seed);
        let ys = y_functions_sweep(&inst).unwrap();
        let view = inst.view();
        let x = if inst.interval().contains(&x) { x } else { int(0) };
        for e in inst.elements() {
            let direct = min_basis_at(&view.without(e), inst.weights(), &x).weight(inst.weights()).eval(&x);
            prop_assert_eq!(ys[e.0].eval(&x), direct);
        }
        let (value, mve) = interdict_at(&inst, &x).unwrap();
        prop_assert_eq!(ys[mve.0].eval(&x), value);
    }

    #[test]
    fn solvers_agree(seed in 0u64..10_000) {
        let inst = instance_from(seed);
        let naive = solve_naive(&inst).unwrap();
        let brute = solve_bruteforce(&inst).unwrap();
        prop_assert!(pwl_equal(&naive.y, &brute.y));
        prop_assert_eq!(&naive, &solve_intervals(&inst).unwrap());
        prop_assert_eq!(&naive, &brute);
    }

    #[test]
    fn doubling_paths_agree(seed in 0u64..10_000) {
        let inst = instance_from(seed);
        let generic = solve_naive(&doubled_instance(&inst)).unwrap();
        if let Some(multi) = doubled_graphic(&inst) {
            prop_assert!(pwl_equal(&generic.y, &solve_naive(&multi).unwrap().y));
        }
        prop_assert_eq!(doubled_instance(&inst).rank(), inst.rank());
    }
}
