//! Structural properties of the gadget builders over randomized inputs:
//! closed-form sizes, role bijections, acyclicity, file round-trips, and
//! the decision behavior of the pairwise flow queries against brute force.

use gadgets::{
    build_cap_gadget, build_mlec_gadget, build_uncap_gadget, counts, plan_partition, read_gadget,
    subgadget, witness_flow_uncap, write_gadget, Clause, CnfFormula, GadgetGraph, Literal,
    Partition, Rational,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn formula_strategy(max_vars: u32, max_clauses: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_vars).prop_flat_map(move |n| {
        let clause = prop::collection::vec((1..=n, any::<bool>()), 0..=3).prop_map(|lits| {
            Clause::new(lits.into_iter().map(|(var, positive)| Literal {
                var,
                positive,
            }))
        });
        prop::collection::vec(clause, 1..=max_clauses)
            .prop_map(move |clauses| CnfFormula::new(n, clauses).unwrap())
    })
}

fn gadget_inputs() -> impl Strategy<Value = (CnfFormula, Partition, usize)> {
    formula_strategy(6, 5).prop_flat_map(|f| {
        let n = f.num_vars();
        let m = f.clause_count();
        let coeffs = prop::sample::select(vec![
            (Rational::new(1, 1), Rational::new(1, 1)),
            (Rational::new(1, 1), Rational::new(0, 1)),
            (Rational::new(0, 1), Rational::new(1, 1)),
            (Rational::new(1, 2), Rational::new(1, 2)),
            (Rational::new(0, 1), Rational::new(0, 1)),
        ]);
        (Just(f), coeffs, any::<u64>(), 1..=m).prop_map(move |(f, (c1, c2), seed, p)| {
            let plan = plan_partition(c1, c2, n).unwrap();
            let part = Partition::shuffled(n, &plan, seed).unwrap();
            (f, part, p)
        })
    })
}

fn check_structure(g: &GadgetGraph, nodes: u64, edges: u64) {
    assert_eq!(g.net.node_count() as u64, nodes);
    assert_eq!(g.net.edge_count() as u64, edges);
    assert_eq!(g.roles.len(), g.net.node_count());
    assert_eq!(g.colors.len(), g.net.edge_count());
    for (v, &role) in g.roles.iter().enumerate() {
        assert_eq!(g.node_id(role), v);
    }
    assert!(g.net.is_acyclic());
    let n = g.net.node_count() as u64;
    for edge in g.net.edges() {
        assert!(edge.capacity >= 1 && edge.capacity <= n);
    }
}

proptest! {
    #[test]
    fn builders_match_closed_form_sizes((f, part, p) in gadget_inputs()) {
        let uncap = build_uncap_gadget(&f, &part, p).unwrap();
        let (nodes, edges) = counts::uncap_counts(&f, &part, p);
        check_structure(&uncap, nodes, edges);
        prop_assert!(uncap.net.edges().iter().all(|e| e.capacity == 1));

        let cap = build_cap_gadget(&f, &part, p).unwrap();
        let (nodes, edges) = counts::cap_counts(&f, &part, p);
        check_structure(&cap, nodes, edges);

        let mlec = build_mlec_gadget(&f).unwrap();
        let (nodes, edges) = counts::mlec_counts(&f);
        check_structure(&mlec, nodes, edges);
        prop_assert!(mlec.net.edges().iter().all(|e| e.capacity == 1));
    }

    #[test]
    fn gadget_files_round_trip((f, part, p) in gadget_inputs()) {
        for g in [
            build_uncap_gadget(&f, &part, p).unwrap(),
            build_cap_gadget(&f, &part, p).unwrap(),
            build_mlec_gadget(&f).unwrap(),
        ] {
            let text = write_gadget(&g);
            let file = read_gadget(&text).unwrap();
            prop_assert!(file.matches(&g));
        }
    }
}

fn random_formula(rng: &mut ChaCha8Rng, max_vars: u32, max_clauses: usize) -> CnfFormula {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            let width = rng.gen_range(0..=3usize);
            Clause::new((0..width).map(|_| Literal {
                var: rng.gen_range(1..=n),
                positive: rng.gen(),
            }))
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

/// Whether some middle-block completion of (α, γ) satisfies ≥ p clauses,
/// checked by enumeration.
fn completion_reaches(f: &CnfFormula, part: &Partition, a: usize, c: usize, p: usize) -> bool {
    (0..part.assignment_count(1)).any(|b| f.satisfied_count(&part.compose([a, b, c])) >= p)
}

/// Both pairwise constructions answer every (α, γ) decision correctly:
/// the max flow stays at or below the threshold exactly when some
/// completion satisfies at least p clauses.
#[test]
fn pairwise_decisions_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9ad9e0);
    for _ in 0..25 {
        let f = random_formula(&mut rng, 4, 4);
        let n = f.num_vars();
        let plan = plan_partition(Rational::new(1, 1), Rational::new(1, 1), n).unwrap();
        let part = Partition::shuffled(n, &plan, rng.gen()).unwrap();
        for p in 1..=f.clause_count() {
            let uncap = build_uncap_gadget(&f, &part, p).unwrap();
            let cap = build_cap_gadget(&f, &part, p).unwrap();
            let threshold = uncap.threshold().unwrap();
            assert_eq!(cap.threshold(), Some(threshold));
            for a in 0..uncap.alpha_count() {
                for c in 0..uncap.gamma_count() {
                    let expected = completion_reaches(&f, &part, a, c, p);
                    let uncap_flow = uncap
                        .net
                        .max_flow(uncap.alpha_node(a), uncap.gamma_node(c))
                        .unwrap()
                        .value;
                    let cap_flow = cap
                        .net
                        .max_flow(cap.alpha_node(a), cap.gamma_node(c))
                        .unwrap()
                        .value;
                    assert_eq!(uncap_flow <= threshold, expected, "uncap p={p} a={a} c={c}");
                    assert_eq!(cap_flow <= threshold, expected, "cap p={p} a={a} c={c}");
                }
            }
        }
    }
}

/// The slice flow through one β family follows the closed form
/// min(m, (m − s) + (p − 1)), matching both the solver and the explicit
/// witness flow.
#[test]
fn slice_flows_follow_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51a3);
    for _ in 0..20 {
        let f = random_formula(&mut rng, 4, 4);
        let n = f.num_vars();
        let m = f.clause_count();
        let plan = plan_partition(Rational::new(1, 1), Rational::new(1, 1), n).unwrap();
        let part = Partition::shuffled(n, &plan, rng.gen()).unwrap();
        for p in 1..=m {
            let g = build_uncap_gadget(&f, &part, p).unwrap();
            for a in 0..g.alpha_count() {
                for b in 0..g.beta_count() {
                    for c in 0..g.gamma_count() {
                        let s = f.satisfied_count(&part.compose([a, b, c]));
                        let want = m.min(m - s + p - 1) as u64;
                        let sub = subgadget(&g, a, b, c).unwrap();
                        let solved = sub.net.max_flow(sub.source, sub.sink).unwrap();
                        assert_eq!(solved.value, want);
                        let witness = witness_flow_uncap(&g, a, b, c).unwrap();
                        assert_eq!(witness.value, want);
                        flow_core::validate_flow(&sub.net, sub.source, sub.sink, &witness)
                            .unwrap();
                    }
                }
            }
        }
    }
}

/// In the connectivity gadget the (α, β) max flow counts exactly the
/// clauses the combined assignment satisfies.
#[test]
fn connectivity_flow_counts_satisfied_clauses() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    for _ in 0..30 {
        let f = random_formula(&mut rng, 5, 5);
        let g = build_mlec_gadget(&f).unwrap();
        let part = &g.partition;
        for a in 0..g.alpha_count() {
            for b in 0..g.beta_count() {
                let s = f.satisfied_count(&part.compose([a, b, 0])) as u64;
                let flow = g.net.max_flow(g.alpha_node(a), g.beta_node(b)).unwrap();
                assert_eq!(flow.value, s, "a={a} b={b}");
            }
        }
    }
}
