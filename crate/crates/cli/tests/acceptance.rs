//! Acceptance suite: eight end-to-end checks covering lemma verification
//! (exhaustive and randomized), worked-example replication, witness objects,
//! multi-pair query equivalence, Gomory–Hu correctness, structural count
//! formulas, and flow/cut duality. Each check prints one pass/fail line.

use std::collections::BTreeSet;
use std::fs;

use flow_core::{brute_force_min_cut, validate_flow, FlowNetwork, NodeId};
use gadgets::{
    build_cap_gadget, build_mlec_gadget, build_uncap_gadget, counts, plan_partition, read_cnf,
    subgadget, witness_cut_cap, witness_flow_cap, Clause, CnfFormula, GadgetVariant, Literal,
    Partition, Rational,
};
use multipair::{
    all_pairs_max_flow, gh_query, global_max_flow, gomory_hu_tree, kpmf, single_source_max_flow,
    st_max_flow, UndirectedGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sat_driver::{
    brute_force_max_sat, max_sat_via_flow, mlec_max_sat, verify_lemma, DriverStats, SearchMode,
};

fn report(number: usize, name: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("acceptance {number} ({name}): pass"),
        Err(reason) => println!("acceptance {number} ({name}): FAIL — {reason}"),
    }
    if let Err(reason) = result {
        panic!("acceptance criterion {number} failed: {reason}");
    }
}

fn one() -> Rational {
    Rational::from_integer(1)
}

fn unit_partition(num_vars: u32) -> Partition {
    let plan = plan_partition(one(), one(), num_vars).expect("coefficients in range");
    Partition::contiguous(num_vars, &plan).expect("plan fits")
}

fn splits() -> Vec<(Rational, Rational)> {
    vec![
        (one(), one()),
        (one(), Rational::from_integer(0)),
        (Rational::from_integer(0), one()),
        (Rational::new(1, 2), Rational::new(1, 2)),
        (Rational::from_integer(0), Rational::from_integer(0)),
    ]
}

fn random_formula(rng: &mut ChaCha8Rng, max_vars: u32, max_clauses: usize) -> CnfFormula {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            let width = rng.gen_range(0..=3usize);
            let literals: Vec<Literal> = (0..width)
                .map(|_| {
                    let var = rng.gen_range(1..=n);
                    if rng.gen() {
                        Literal::positive(var)
                    } else {
                        Literal::negative(var)
                    }
                })
                .collect();
            Clause::new(literals)
        })
        .collect();
    CnfFormula::new(n, clauses).expect("variables in range")
}

fn random_network(rng: &mut ChaCha8Rng, max_nodes: usize) -> FlowNetwork {
    let n = rng.gen_range(2..=max_nodes);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(0.3) {
                edges.push((u, v, rng.gen_range(1..=10u64)));
            }
        }
    }
    FlowNetwork::new(n, edges).expect("edges in range")
}

fn example_formulas() -> Vec<CnfFormula> {
    ["unit_example.cnf", "block_example.cnf"]
        .iter()
        .map(|name| {
            let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
            read_cnf(&fs::read_to_string(path).expect("data file present"))
                .expect("data file parses")
        })
        .collect()
}

/// All distinct clauses over 3 variables with at most 3 literals: each
/// variable appears positively, negatively, both ways, or not at all.
fn clause_universe() -> Vec<Clause> {
    let mut out = Vec::new();
    for mask in 0..64u32 {
        let mut literals = Vec::new();
        let mut width = 0usize;
        for var in 1..=3u32 {
            match (mask >> (2 * (var - 1))) & 3 {
                0 => {}
                1 => {
                    literals.push(Literal::positive(var));
                    width += 1;
                }
                2 => {
                    literals.push(Literal::negative(var));
                    width += 1;
                }
                _ => {
                    literals.push(Literal::positive(var));
                    literals.push(Literal::negative(var));
                    width += 2;
                }
            }
        }
        if width <= 3 {
            out.push(Clause::new(literals));
        }
    }
    out
}

#[test]
fn criterion_1_exhaustive_lemma_verification() {
    report(1, "exhaustive lemma verification", (|| {
        let universe = clause_universe();
        if universe.len() != 42 {
            return Err(format!(
                "clause universe has {} entries, expected 42",
                universe.len()
            ));
        }
        let partition = unit_partition(3);
        let mut formulas: Vec<Vec<Clause>> = vec![Vec::new()];
        for i in 0..universe.len() {
            formulas.push(vec![universe[i].clone()]);
            for j in i..universe.len() {
                formulas.push(vec![universe[i].clone(), universe[j].clone()]);
                for k in j..universe.len() {
                    formulas.push(vec![
                        universe[i].clone(),
                        universe[j].clone(),
                        universe[k].clone(),
                    ]);
                }
            }
        }
        if formulas.len() != 14_190 {
            return Err(format!(
                "enumerated {} formulas, expected 14190",
                formulas.len()
            ));
        }
        for clauses in formulas {
            let formula = CnfFormula::new(3, clauses).map_err(|e| e.to_string())?;
            for variant in [GadgetVariant::Uncap, GadgetVariant::Cap] {
                let outcome =
                    verify_lemma(&formula, &partition, variant).map_err(|e| e.to_string())?;
                if !outcome.passed() {
                    return Err(format!("{variant:?} on {formula:?}:\n{outcome}"));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_2_randomized_lemma_and_solver_agreement() {
    report(2, "randomized lemma verification and solver agreement", (|| {
        let splits = splits();
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce97_02);
        for round in 0..200u64 {
            let formula = random_formula(&mut rng, 9, 12);
            let (c1, c2) = splits[round as usize % splits.len()];
            let plan =
                plan_partition(c1, c2, formula.num_vars()).map_err(|e| e.to_string())?;
            let partition = if round % 2 == 0 {
                Partition::contiguous(formula.num_vars(), &plan)
            } else {
                Partition::shuffled(formula.num_vars(), &plan, round)
            }
            .map_err(|e| e.to_string())?;
            let oracle = brute_force_max_sat(&formula).map_err(|e| e.to_string())?;
            for variant in [GadgetVariant::Uncap, GadgetVariant::Cap] {
                let outcome =
                    verify_lemma(&formula, &partition, variant).map_err(|e| e.to_string())?;
                if !outcome.passed() {
                    return Err(format!("round {round}, {variant:?}:\n{outcome}"));
                }
                for mode in [SearchMode::Binary, SearchMode::Linear] {
                    let mut stats = DriverStats::default();
                    let got = max_sat_via_flow(&formula, &partition, variant, mode, &mut stats)
                        .map_err(|e| e.to_string())?;
                    if got.best != oracle.best {
                        return Err(format!(
                            "round {round}: {variant:?}/{mode:?} found {} instead of {}",
                            got.best, oracle.best
                        ));
                    }
                    if formula.satisfied_count(&got.witness) != oracle.best {
                        return Err(format!("round {round}: recovered witness misses the optimum"));
                    }
                }
            }
            let mut stats = DriverStats::default();
            let got = mlec_max_sat(&formula, &mut stats).map_err(|e| e.to_string())?;
            if got.best != oracle.best {
                return Err(format!(
                    "round {round}: connectivity solver found {} instead of {}",
                    got.best, oracle.best
                ));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_3_worked_example_replication() {
    report(3, "worked example replication", (|| {
        let examples = example_formulas();
        let partition = unit_partition(3);

        // Unit-capacity construction: flow from the α with x₁ = false to the
        // γ with x₃ = true sits exactly on the threshold 2·3 − 1 = 5, split
        // 3 + 2 across the two β families.
        let g = build_uncap_gadget(&examples[0], &partition, 3).map_err(|e| e.to_string())?;
        let flow = g
            .net
            .max_flow(g.alpha_node(0), g.gamma_node(1))
            .map_err(|e| e.to_string())?;
        if flow.value != 5 {
            return Err(format!("unit-capacity example flow {}, expected 5", flow.value));
        }
        for (beta, want) in [(0usize, 3u64), (1, 2)] {
            let sub = subgadget(&g, 0, beta, 1).map_err(|e| e.to_string())?;
            let got = sub
                .net
                .max_flow(sub.source, sub.sink)
                .map_err(|e| e.to_string())?
                .value;
            if got != want {
                return Err(format!("family {beta} ships {got}, expected {want}"));
            }
        }

        // Block-capacity construction: flow from the α satisfying C₃ to the
        // γ satisfying C₂ is again exactly 2·3 − 1 = 5.
        let g = build_cap_gadget(&examples[1], &partition, 3).map_err(|e| e.to_string())?;
        let flow = g
            .net
            .max_flow(g.alpha_node(1), g.gamma_node(1))
            .map_err(|e| e.to_string())?;
        if flow.value != 5 {
            return Err(format!("block-capacity example flow {}, expected 5", flow.value));
        }
        Ok(())
    })());
}

#[test]
fn criterion_4_witness_objects() {
    report(4, "witness objects", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce97_04);
        let mut corpus = example_formulas();
        for _ in 0..30 {
            corpus.push(random_formula(&mut rng, 6, 5));
        }
        for formula in &corpus {
            let partition = unit_partition(formula.num_vars());
            let m = formula.clause_count();
            let oracle = brute_force_max_sat(formula).map_err(|e| e.to_string())?;
            for p in 1..=m {
                let cap = build_cap_gadget(formula, &partition, p).map_err(|e| e.to_string())?;
                let block = cap.beta_count() as u64;
                if oracle.best >= p {
                    // A cut certifying the satisfying assignment must fit
                    // under the threshold.
                    let side =
                        witness_cut_cap(&cap, &oracle.witness).map_err(|e| e.to_string())?;
                    let capacity = cap.net.cut_capacity(&side);
                    if capacity > block * m as u64 - 1 {
                        return Err(format!(
                            "witness cut capacity {capacity} above {} at p={p} on {formula:?}",
                            block * m as u64 - 1
                        ));
                    }
                } else {
                    // Every pair must admit a feasible flow that saturates
                    // the clause side completely.
                    for a in 0..cap.alpha_count() {
                        for c in 0..cap.gamma_count() {
                            let flow =
                                witness_flow_cap(&cap, a, c).map_err(|e| e.to_string())?;
                            validate_flow(&cap.net, cap.alpha_node(a), cap.gamma_node(c), &flow)
                                .map_err(|e| format!("pair ({a}, {c}): {e}"))?;
                            if flow.value != block * m as u64 {
                                return Err(format!(
                                    "witness flow {} instead of {} at p={p}",
                                    flow.value,
                                    block * m as u64
                                ));
                            }
                        }
                    }
                }

                // Sub-gadget flows hit m exactly on the triples that leave
                // at least m − p + 1 clauses unsatisfied.
                let uncap =
                    build_uncap_gadget(formula, &partition, p).map_err(|e| e.to_string())?;
                for a in 0..uncap.alpha_count() {
                    for b in 0..uncap.beta_count() {
                        for c in 0..uncap.gamma_count() {
                            let sub = subgadget(&uncap, a, b, c).map_err(|e| e.to_string())?;
                            let got = sub
                                .net
                                .max_flow(sub.source, sub.sink)
                                .map_err(|e| e.to_string())?
                                .value;
                            let satisfied =
                                formula.satisfied_count(&partition.compose([a, b, c]));
                            if (got == m as u64) != (satisfied <= p - 1) {
                                return Err(format!(
                                    "triple ({a}, {b}, {c}) ships {got} with {satisfied} satisfied at p={p}"
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_5_multi_pair_equivalence() {
    report(5, "multi-pair query equivalence", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce97_05);
        for round in 0..100 {
            let net = random_network(&mut rng, 12);
            let n = net.node_count();
            let mut direct = vec![vec![None; n]; n];
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        direct[u][v] =
                            Some(net.max_flow(u, v).map_err(|e| e.to_string())?.value);
                    }
                }
            }

            let matrix = all_pairs_max_flow(&net).map_err(|e| e.to_string())?;
            for u in 0..n {
                for v in 0..n {
                    if matrix.value_at(u, v) != direct[u][v] {
                        return Err(format!("round {round}: all_pairs differs at ({u}, {v})"));
                    }
                }
            }

            let sources: Vec<NodeId> =
                (0..n).filter(|_| rng.gen_bool(0.5)).chain([0]).collect();
            let sinks: Vec<NodeId> =
                (0..n).filter(|_| rng.gen_bool(0.5)).chain([n - 1]).collect();
            let st = st_max_flow(&net, &sources, &sinks).map_err(|e| e.to_string())?;
            for (i, &s) in sources.iter().enumerate() {
                for (j, &t) in sinks.iter().enumerate() {
                    let want = if s == t { None } else { direct[s][t] };
                    if st.value_at(i, j) != want {
                        return Err(format!("round {round}: st differs at ({s}, {t})"));
                    }
                }
            }

            let from_source = single_source_max_flow(&net, 0).map_err(|e| e.to_string())?;
            for t in 0..n {
                if from_source[t] != direct[0][t] {
                    return Err(format!("round {round}: single_source differs at {t}"));
                }
            }

            let (value, (gu, gv)) = global_max_flow(&net).map_err(|e| e.to_string())?;
            let mut best = 0;
            for u in 0..n {
                for v in 0..n {
                    if let Some(cell) = direct[u][v] {
                        best = best.max(cell);
                    }
                }
            }
            if value != best || direct[gu][gv] != Some(value) {
                return Err(format!("round {round}: global reported {value}, best is {best}"));
            }

            for k in [0, 1, 2, u64::MAX] {
                let got: BTreeSet<(NodeId, NodeId, u64)> =
                    kpmf(&net, k).into_iter().collect();
                let mut want = BTreeSet::new();
                for u in 0..n {
                    for v in 0..n {
                        if let Some(cell) = direct[u][v] {
                            if cell <= k {
                                want.insert((u, v, cell));
                            }
                        }
                    }
                }
                if got != want {
                    return Err(format!("round {round}: kpmf at k={k} differs"));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_6_gomory_hu() {
    report(6, "Gomory–Hu tree", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce97_06);
        for round in 0..50 {
            let n = rng.gen_range(2..=30);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.25) {
                        edges.push((u, v, rng.gen_range(1..=8u64)));
                    }
                }
            }
            let graph = UndirectedGraph::new(n, edges).map_err(|e| e.to_string())?;
            let tree = gomory_hu_tree(&graph);
            if tree.flow_computations() != n - 1 {
                return Err(format!(
                    "round {round}: tree used {} flow computations for {n} nodes",
                    tree.flow_computations()
                ));
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    let from_tree = gh_query(&tree, u, v).map_err(|e| e.to_string())?;
                    let from_flow = graph.max_flow(u, v).map_err(|e| e.to_string())?;
                    if from_tree != from_flow {
                        return Err(format!(
                            "round {round}: pair ({u}, {v}) tree {from_tree} vs flow {from_flow}"
                        ));
                    }
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_7_structural_formulas() {
    report(7, "structural count formulas", (|| {
        let splits = splits();
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce97_07);
        let mut corpus = example_formulas();
        for _ in 0..40 {
            corpus.push(random_formula(&mut rng, 8, 6));
        }
        for (index, formula) in corpus.iter().enumerate() {
            let (c1, c2) = splits[index % splits.len()];
            let plan =
                plan_partition(c1, c2, formula.num_vars()).map_err(|e| e.to_string())?;
            let partition = if index % 2 == 0 {
                Partition::contiguous(formula.num_vars(), &plan)
            } else {
                Partition::shuffled(formula.num_vars(), &plan, index as u64)
            }
            .map_err(|e| e.to_string())?;

            let mlec = build_mlec_gadget(formula).map_err(|e| e.to_string())?;
            let want = counts::mlec_counts(formula);
            let got = (mlec.net.node_count() as u64, mlec.net.edge_count() as u64);
            if got != want {
                return Err(format!("connectivity gadget counts {got:?}, formulas say {want:?}"));
            }
            if !mlec.net.is_acyclic() {
                return Err("connectivity gadget has a cycle".to_string());
            }
            if mlec.net.edges().iter().any(|e| e.capacity != 1) {
                return Err("connectivity gadget has a non-unit capacity".to_string());
            }

            for p in 1..=formula.clause_count() {
                let uncap =
                    build_uncap_gadget(formula, &partition, p).map_err(|e| e.to_string())?;
                let want = counts::uncap_counts(formula, &partition, p);
                let got = (uncap.net.node_count() as u64, uncap.net.edge_count() as u64);
                if got != want {
                    return Err(format!(
                        "unit gadget counts {got:?} at p={p}, formulas say {want:?}"
                    ));
                }
                if !uncap.net.is_acyclic() {
                    return Err(format!("unit gadget has a cycle at p={p}"));
                }
                if uncap.net.edges().iter().any(|e| e.capacity != 1) {
                    return Err(format!("unit gadget has a non-unit capacity at p={p}"));
                }

                let cap = build_cap_gadget(formula, &partition, p).map_err(|e| e.to_string())?;
                let want = counts::cap_counts(formula, &partition, p);
                let got = (cap.net.node_count() as u64, cap.net.edge_count() as u64);
                if got != want {
                    return Err(format!(
                        "block gadget counts {got:?} at p={p}, formulas say {want:?}"
                    ));
                }
                if !cap.net.is_acyclic() {
                    return Err(format!("block gadget has a cycle at p={p}"));
                }
                let node_count = cap.net.node_count() as u64;
                if cap
                    .net
                    .edges()
                    .iter()
                    .any(|e| e.capacity < 1 || e.capacity > node_count)
                {
                    return Err(format!("block gadget capacity out of [1, N] at p={p}"));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_8_duality_and_cut_oracle() {
    report(8, "flow/cut duality against the brute-force oracle", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce97_08);
        for round in 0..100 {
            let net = random_network(&mut rng, 8);
            let n = net.node_count();
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    let flow = net.max_flow(s, t).map_err(|e| e.to_string())?;
                    validate_flow(&net, s, t, &flow)
                        .map_err(|e| format!("round {round} ({s}, {t}): {e}"))?;
                    let cut = net.min_cut(s, t).map_err(|e| e.to_string())?;
                    let brute = brute_force_min_cut(&net, s, t).map_err(|e| e.to_string())?;
                    if flow.value != cut.capacity || cut.capacity != brute {
                        return Err(format!(
                            "round {round} ({s}, {t}): flow {} cut {} oracle {brute}",
                            flow.value, cut.capacity
                        ));
                    }
                    if net.cut_capacity(&cut.source_side) != cut.capacity {
                        return Err(format!(
                            "round {round} ({s}, {t}): cut side does not add up to {}",
                            cut.capacity
                        ));
                    }
                    if !cut.source_side.contains(&s) || cut.source_side.contains(&t) {
                        return Err(format!(
                            "round {round} ({s}, {t}): cut side misplaces an endpoint"
                        ));
                    }
                }
            }
        }
        Ok(())
    })());
}
