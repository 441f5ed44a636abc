mod common;

use common::arb_pathset;
use pathset::factorization::equals_envelope;
use pathset::{
    complete_factorization, equals, factor_set, factorization_exponent, interleave,
    interleaving_factors, is_leveled, is_n_factorizable, missing_configuration, psi,
    self_loop_criterion, FactorizationExponent, NodeStatus,
};
use proptest::prelude::*;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn infinite_factorizability_tests_agree(p in arb_pathset(6, 3)) {
        let leveled = is_leveled(&p).unwrap().is_some();
        prop_assert_eq!(leveled, equals_envelope(&p).unwrap());
        let all = (1..=5).all(|n| is_n_factorizable(&p, n));
        prop_assert_eq!(leveled, all);
    }

    #[test]
    fn missing_configuration_certifies(p in arb_pathset(5, 3)) {
        let leveled = is_leveled(&p).unwrap().is_some();
        let missing = missing_configuration(&p).unwrap();
        prop_assert_eq!(missing.is_none(), leveled);
        if let Some(m) = missing {
            prop_assert!(m.l >= 1);
            prop_assert_eq!(m.block.len(), m.l + 1);
            for n in (m.k + m.l + 1)..=8 {
                prop_assert!(!is_n_factorizable(&p, n), "n={} factorizable despite {:?}", n, m);
            }
        }
    }

    #[test]
    fn exponent_divisors_are_the_factorizable_levels(p in arb_pathset(6, 2)) {
        if let FactorizationExponent::Finite(f) = factorization_exponent(&p).unwrap() {
            let levels: Vec<usize> = (1..=8).filter(|&n| is_n_factorizable(&p, n)).collect();
            let divisors: Vec<usize> = (1..=f).filter(|n| f % n == 0).collect();
            prop_assert_eq!(levels, divisors);
        }
    }

    #[test]
    fn factors_shrink(p in arb_pathset(6, 3)) {
        let m = p.num_vertices();
        let leveled = is_leveled(&p).unwrap().is_some();
        for n in 2..=4 {
            if let Ok(factors) = interleaving_factors(&p, n) {
                for f in &factors {
                    prop_assert!(f.num_vertices() <= m);
                    if !leveled {
                        prop_assert!(f.num_vertices() < m);
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_tree_bounds(p in arb_pathset(6, 3)) {
        let tree = complete_factorization(&p).unwrap();
        let m = p.num_vertices();
        prop_assert!(tree.depth() <= m.saturating_sub(1));
        prop_assert!(tree.leaf_count() <= factorial(m.saturating_sub(1)));
        for node in tree.nodes() {
            if let NodeStatus::Factored { n, children } = node.status() {
                prop_assert!(*n >= 2);
                prop_assert_eq!(children.len(), *n);
                let values: Vec<_> = children.iter().map(|c| c.value().clone()).collect();
                prop_assert_eq!(&interleave(&values), node.value());
            }
        }
    }

    #[test]
    fn self_loop_forces_self_interleaving(p in arb_pathset(5, 3)) {
        if self_loop_criterion(&p).unwrap() {
            for n in 2..=4 {
                if let Ok(factors) = interleaving_factors(&p, n) {
                    prop_assert!(factors.windows(2).all(|w| w[0] == w[1]));
                }
            }
        }
    }

    #[test]
    fn leveled_sets_are_closed(parts in proptest::collection::vec(arb_pathset(3, 2), 1..=3)) {
        let leveled: Vec<_> = parts.into_iter().filter(|p| is_leveled(p).unwrap().is_some()).collect();
        prop_assume!(!leveled.is_empty());
        let product = interleave(&leveled);
        prop_assert!(is_leveled(&product).unwrap().is_some());
        for n in 1..=4 {
            for j in 0..6 {
                prop_assert!(is_leveled(&psi(&product, j, n)).unwrap().is_some());
            }
        }
    }

    #[test]
    fn factor_set_bounds(p in arb_pathset(4, 3)) {
        let m = p.num_vertices();
        let factors = factor_set(&p).unwrap();
        prop_assert!(factors.iter().any(|f| equals(f, &p)));
        if is_leveled(&p).unwrap().is_some() {
            prop_assert!(factors.len() <= m * m);
            // Levels past 2m - 1 add nothing new.
            for n in 2 * m..2 * m + 3 {
                for j in 0..n {
                    prop_assert!(factors.contains(&psi(&p, j, n)));
                }
            }
        }
    }
}
