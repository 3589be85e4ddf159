use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use wreathchar_core::oracle::straightened_rim_hooks;
use wreathchar_core::partitions::{enumerate_colored, enumerate_partitions, Partition};

/// Coefficient of q^n in prod_{m>=1} (1 - q^m)^{-k}, by repeated
/// multiplication with the geometric series in q^m.
fn generating_function_count(k: usize, n: usize) -> BigUint {
    let mut coeffs = vec![BigUint::from(0u32); n + 1];
    coeffs[0] = BigUint::from(1u32);
    for _ in 0..k {
        for m in 1..=n {
            for i in m..=n {
                let add = coeffs[i - m].clone();
                coeffs[i] += add;
            }
        }
    }
    coeffs[n].clone()
}

#[test]
fn colored_counts_match_generating_function() {
    for k in 1..=3 {
        for n in 0..=8 {
            assert_eq!(BigUint::from(enumerate_colored(k, n).len()), generating_function_count(k, n), "k={k} n={n}");
        }
    }
}

#[test]
fn enumerations_have_no_repeats() {
    for n in 0..=10 {
        let ps = enumerate_partitions(n);
        let set: BTreeSet<_> = ps.iter().cloned().collect();
        assert_eq!(set.len(), ps.len());
        assert!(ps.iter().all(|p| p.size() == n));
        assert!(ps.windows(2).all(|w| w[0] > w[1]), "reverse-lex order");
    }
    let cs = enumerate_colored(3, 4);
    let set: std::collections::HashSet<_> = cs.iter().cloned().collect();
    assert_eq!(set.len(), cs.len());
}

#[test]
fn scanning_matches_straightening() {
    for n in 0..=12 {
        for lam in enumerate_partitions(n) {
            for m in 1..=n {
                let scanned: BTreeSet<(Partition, usize)> = lam.rim_hooks(m).into_iter().map(|h| (h.remaining, h.height)).collect();
                let straightened: BTreeSet<(Partition, usize)> = straightened_rim_hooks(&lam, m).into_iter().collect();
                assert_eq!(scanned, straightened, "lam={lam} m={m}");
                for h in lam.rim_hooks(m) {
                    assert_eq!(h.remaining.size() + m, n);
                }
            }
        }
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..8, 0..7).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn rim_hooks_are_border_strips(lam in arb_partition(), m in 1usize..10) {
        for h in lam.rim_hooks(m) {
            let mu = &h.remaining;
            prop_assert_eq!(mu.size() + m, lam.size());
            // mu inside lam
            prop_assert!(mu.len() <= lam.len());
            for (i, &p) in mu.parts().iter().enumerate() {
                prop_assert!(p <= lam.parts()[i]);
            }
            let row = |p: &Partition, i: usize| p.parts().get(i).copied().unwrap_or(0);
            let rows: Vec<usize> = (0..lam.len()).filter(|&i| row(mu, i) < row(&lam, i)).collect();
            prop_assert_eq!(h.height, rows.len() - 1);
            // consecutive rows, overlapping in exactly one column: connected, no 2x2
            for w in rows.windows(2) {
                prop_assert_eq!(w[1], w[0] + 1);
                prop_assert_eq!(row(&lam, w[1]), row(mu, w[0]) + 1);
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution(lam in arb_partition()) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        prop_assert_eq!(lam.conjugate().hook_product(), lam.hook_product());
    }
}
