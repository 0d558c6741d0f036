//! Cross-checks the abacus core/weight computation against literal rim-hook
//! removal explored in *every* possible order, and the hook-length dimension
//! formula against the branching recursion.  Both oracles are exhaustive over
//! small sizes, so a disagreement anywhere would surface here.

use std::collections::{BTreeSet, HashMap};

use tameblock::num_bigint::BigUint;
use tameblock::partition::{
    alt_dihedral_block_exists, partitions_of, sym_blocks_of_weight, Partition,
};

type Outcome = (Vec<u32>, u64);

/// Every (core, weight) reachable by removing ℓ-hooks until none remain,
/// trying every removable hook at every step.
fn all_outcomes(
    lambda: &Partition,
    ell: u32,
    memo: &mut HashMap<Vec<u32>, BTreeSet<Outcome>>,
) -> BTreeSet<Outcome> {
    let key = lambda.parts().to_vec();
    if let Some(cached) = memo.get(&key) {
        return cached.clone();
    }
    let hooks = lambda.removable_hooks(ell);
    let mut out = BTreeSet::new();
    if hooks.is_empty() {
        out.insert((key.clone(), 0));
    } else {
        for (i, j) in hooks {
            let shrunk = lambda.remove_rim_hook(i, j).expect("cell is in diagram");
            assert_eq!(shrunk.size() + u64::from(ell), lambda.size());
            for (core, w) in all_outcomes(&shrunk, ell, memo) {
                out.insert((core, w + 1));
            }
        }
    }
    memo.insert(key, out.clone());
    out
}

#[test]
fn removal_order_never_matters_up_to_size_20() {
    for ell in [2u32, 3] {
        let mut memo = HashMap::new();
        for n in 0..=20u32 {
            for lambda in partitions_of(n) {
                let outcomes = all_outcomes(&lambda, ell, &mut memo);
                assert_eq!(
                    outcomes.len(),
                    1,
                    "several cores reachable from {} with ell={}",
                    lambda,
                    ell
                );
                let (core_parts, weight) = outcomes.into_iter().next().unwrap();
                let (core, w) = lambda.ell_core(ell);
                assert_eq!(core.parts(), &core_parts[..], "core of {}", lambda);
                assert_eq!(w, weight, "weight of {}", lambda);
                assert_eq!(lambda.size(), core.size() + u64::from(ell) * w);
            }
        }
    }
}

#[test]
fn two_cores_are_exactly_the_staircases() {
    for n in 0..=20u32 {
        for lambda in partitions_of(n) {
            let (core, w) = lambda.ell_core(2);
            let fixed = w == 0 && core == lambda;
            assert_eq!(
                fixed,
                lambda.is_triangular().is_some(),
                "2-core fixed point vs staircase disagree at {}",
                lambda
            );
        }
    }
}

#[test]
fn documented_core_values() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert_eq!(p("2,1").ell_core(2), (p("2,1"), 0));
    assert_eq!(p("1").ell_core(2), (p("1"), 0));
    assert_eq!(p("8,1").ell_core(2), (p("2,1"), 3));
    assert_eq!(p("-").ell_core(2), (Partition::empty(), 0));
    assert_eq!(p("-").ell_core(3), (Partition::empty(), 0));
}

/// Branching-rule recursion: dim λ = Σ dim (λ minus a corner cell).
fn branching_dim(lambda: &Partition, memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    if lambda.is_empty() {
        return BigUint::from(1u32);
    }
    let key = lambda.parts().to_vec();
    if let Some(cached) = memo.get(&key) {
        return cached.clone();
    }
    let mut total = BigUint::from(0u32);
    for i in 0..lambda.len() {
        let j = lambda.parts()[i] as usize - 1;
        if lambda.hook_at(i, j) == Some(1) {
            let shrunk = lambda.remove_rim_hook(i, j).unwrap();
            total += branching_dim(&shrunk, memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

#[test]
fn hook_length_dimension_agrees_with_branching_rule() {
    let mut memo = HashMap::new();
    for n in 0..=12u32 {
        for lambda in partitions_of(n) {
            assert_eq!(
                lambda.dimension(),
                branching_dim(&lambda, &mut memo),
                "dimension of {}",
                lambda
            );
            assert_eq!(lambda.dimension(), lambda.conjugate().dimension());
        }
    }
}

#[test]
fn weight_three_symmetric_blocks() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert_eq!(sym_blocks_of_weight(9, 3), vec![p("2,1")]);
    assert_eq!(sym_blocks_of_weight(6, 3), vec![Partition::empty()]);
    assert_eq!(sym_blocks_of_weight(8, 3), vec![]);
    // brute cross-check: n - 2w must be a triangular number, and the core is
    // the unique staircase of that size
    for n in 0..=60u64 {
        for w in 0..=6u64 {
            let blocks = sym_blocks_of_weight(n, w);
            let expect: Vec<Partition> = (0..=10u32)
                .map(|t| {
                    Partition::new((1..=t).rev().collect()).unwrap()
                })
                .filter(|c| c.size() + 2 * w == n)
                .collect();
            assert_eq!(blocks, expect, "n={} w={}", n, w);
        }
    }
}

#[test]
fn alternating_block_existence_matches_core_search() {
    let mut hits = Vec::new();
    for n in 5..=60u64 {
        let exists = alt_dihedral_block_exists(n);
        assert_eq!(
            exists,
            !sym_blocks_of_weight(n, 3).is_empty(),
            "mismatch at n={}",
            n
        );
        if exists {
            hits.push(n);
        }
    }
    // n = 6, plus n = t + 6 for triangular t ≥ 1
    let expected: Vec<u64> = (5..=60u64)
        .filter(|&n| n == 6 || (n > 6 && (1..=10).any(|k: u64| k * (k + 1) / 2 == n - 6)))
        .collect();
    assert_eq!(hits, expected);
    assert_eq!(&hits[..5], &[6, 7, 9, 12, 16]);
}
