//! Property tests pitting the solver against the exhaustive cut oracle.

use flow_core::{
    brute_force_min_cut, read_dimacs, validate_flow, write_dimacs, BoundedValue, FlowNetwork,
};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct SmallNet {
    node_count: usize,
    edges: Vec<(usize, usize, u64)>,
}

fn small_net() -> impl Strategy<Value = SmallNet> {
    (2usize..=8).prop_flat_map(|node_count| {
        let edge = (0..node_count, 0..node_count, 1u64..=5)
            .prop_filter("no self loops", |(u, v, _)| u != v);
        proptest::collection::vec(edge, 0..=14)
            .prop_map(move |edges| SmallNet { node_count, edges })
    })
}

proptest! {
    // Strong duality, checked three ways: solver flow value, residual cut,
    // and the exhaustive bipartition minimum must all coincide.
    #[test]
    fn max_flow_equals_min_cut_equals_brute_force(net in small_net()) {
        let g = FlowNetwork::new(net.node_count, net.edges).unwrap();
        let s = 0;
        let t = net.node_count - 1;
        let flow = g.max_flow(s, t).unwrap();
        let cut = g.min_cut(s, t).unwrap();
        let oracle = brute_force_min_cut(&g, s, t).unwrap();
        prop_assert_eq!(flow.value, oracle);
        prop_assert_eq!(cut.capacity, oracle);
        prop_assert_eq!(g.cut_capacity(&cut.source_side), oracle);
        prop_assert!(cut.source_side.contains(&s));
        prop_assert!(!cut.source_side.contains(&t));
    }

    #[test]
    fn max_flow_witness_is_feasible(net in small_net()) {
        let g = FlowNetwork::new(net.node_count, net.edges).unwrap();
        let flow = g.max_flow(0, net.node_count - 1).unwrap();
        prop_assert_eq!(validate_flow(&g, 0, net.node_count - 1, &flow), Ok(()));
    }

    // max_flow_bounded must agree with the unbounded value's relation to k,
    // for k straddling the value and at the extremes.
    #[test]
    fn bounded_flow_is_consistent(net in small_net(), k in 0u64..=40) {
        let g = FlowNetwork::new(net.node_count, net.edges).unwrap();
        let s = 0;
        let t = net.node_count - 1;
        let value = g.max_flow(s, t).unwrap().value;
        let tries = [k, value.saturating_sub(1), value, value + 1, u64::MAX];
        for k in tries {
            let got = g.max_flow_bounded(s, t, k).unwrap();
            if value <= k {
                prop_assert_eq!(got, BoundedValue::Exact(value));
            } else {
                prop_assert_eq!(got, BoundedValue::ExceedsK);
            }
        }
    }

    #[test]
    fn dimacs_round_trip_is_exact(net in small_net()) {
        prop_assume!(!net.edges.is_empty());
        let g = FlowNetwork::new(net.node_count, net.edges).unwrap();
        let text = write_dimacs(&g);
        let back = read_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_dimacs(&back), text);
    }
}
