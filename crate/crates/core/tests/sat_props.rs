use proptest::prelude::*;
use ramseyforge::bridge::bridge_cnf;
use ramseyforge::sat::{
    count_models, encode_nae2, exhaustive_check, read_dimacs, solve, solve_dpll, write_dimacs, Cnf,
    Lit,
};

fn cnf_strategy(max_vars: u32, max_clauses: usize) -> impl Strategy<Value = Cnf> {
    (1..=max_vars).prop_flat_map(move |nv| {
        let lit = (1..=nv as i32, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        let clause = prop::collection::vec(lit, 0..=4);
        prop::collection::vec(clause, 0..=max_clauses).prop_map(move |cs| Cnf::new(nv, cs).unwrap())
    })
}

fn hypergraph_strategy() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    (2u32..=10).prop_flat_map(|nv| {
        let edge = prop::collection::btree_set(1..=nv, 2..=(nv as usize).min(4))
            .prop_map(|s| s.into_iter().collect::<Vec<u32>>());
        (Just(nv), prop::collection::vec(edge, 0..=12))
    })
}

fn direct_two_colorings(nv: u32, edges: &[Vec<u32>]) -> u64 {
    (0u64..1 << nv)
        .filter(|mask| {
            edges.iter().all(|e| {
                let ones = e.iter().filter(|&&v| mask >> (v - 1) & 1 == 1).count();
                ones != 0 && ones != e.len()
            })
        })
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solvers_agree_with_brute_force(cnf in cnf_strategy(20, 90)) {
        let brute = exhaustive_check(&cnf).unwrap();
        let cdcl = solve(&cnf).unwrap();
        let dpll = solve_dpll(&cnf).unwrap();
        prop_assert_eq!(cdcl.is_sat(), brute.is_sat());
        prop_assert_eq!(dpll.is_sat(), brute.is_sat());
        if let Some(model) = cdcl.assignment() {
            prop_assert!(cnf.is_satisfied_by(model));
        }
        if let Some(model) = dpll.assignment() {
            prop_assert!(cnf.is_satisfied_by(model));
        }
    }

    #[test]
    fn solving_is_deterministic(cnf in cnf_strategy(16, 70)) {
        prop_assert_eq!(solve(&cnf).unwrap(), solve(&cnf).unwrap());
    }

    #[test]
    fn dimacs_round_trip(cnf in cnf_strategy(20, 40)) {
        let text = write_dimacs(&cnf);
        let back = read_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &cnf);
        prop_assert_eq!(write_dimacs(&back), text);
    }

    #[test]
    fn canonical_form_ignores_clause_order(cnf in cnf_strategy(12, 30)) {
        let mut shuffled: Vec<Vec<Lit>> = cnf.clauses().iter().rev().map(|c| c.iter().rev().copied().collect()).collect();
        shuffled.extend(cnf.clauses().iter().take(2).cloned());
        let again = Cnf::new(cnf.variable_count(), shuffled).unwrap();
        prop_assert_eq!(again, cnf);
    }

    #[test]
    fn nae_models_are_two_colorings((nv, edges) in hypergraph_strategy()) {
        let cnf = encode_nae2(&edges, nv).unwrap();
        prop_assert_eq!(count_models(&cnf).unwrap(), direct_two_colorings(nv, &edges));
    }
}

#[test]
fn b2_encoding_matches_brute_force() {
    let cnf = bridge_cnf(2, 3).unwrap();
    assert_eq!(cnf.variable_count(), 9);
    assert!(!exhaustive_check(&cnf).unwrap().is_sat());
    assert!(!solve(&cnf).unwrap().is_sat());
    assert!(!solve_dpll(&cnf).unwrap().is_sat());
    assert_eq!(count_models(&cnf).unwrap(), 0);
}
