//! Randomized property checks, shared by the property suite and the
//! acceptance harness. Each returns `Err` with the failing case.

use std::collections::HashSet;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use syncdfa::avoid::{avoidance_profile, shortest_avoiding_word};
use syncdfa::sync::{is_synchronizing, shortest_sync_word};
use syncdfa::{Dfa, StateSet, Word};

use super::{brute_shortest, full_image, is_singleton};

pub const CASES: u32 = 1000;

pub fn arb_dfa(max_n: usize, max_k: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        proptest::collection::vec(0..n, n * k)
            .prop_map(move |table| Dfa::from_table(n, k, &table).unwrap())
    })
}

/// Automata small enough that brute force over all words up to the
/// shortest reset length stays cheap.
pub fn arb_brute_dfa() -> impl Strategy<Value = Dfa> {
    prop_oneof![arb_dfa(4, 3), arb_dfa(5, 2)]
}

pub fn arb_word(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..k, 0..=max_len).prop_map(Word::new)
}

fn arb_set(n: usize) -> impl Strategy<Value = StateSet> {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    any::<u64>().prop_map(move |b| StateSet::from_bits(n, b & mask).unwrap())
}

fn run<S: Strategy>(
    name: &str,
    config: Config,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(config);
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn config(cases: u32) -> Config {
    Config {
        cases,
        max_local_rejects: 1_000_000,
        max_global_rejects: 1_000_000,
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn monoid_action(cases: u32) -> Result<(), String> {
    let strategy = arb_dfa(6, 3).prop_flat_map(|d| {
        let (n, k) = (d.n(), d.k());
        (Just(d), arb_set(n), arb_word(k, 8), arb_word(k, 8))
    });
    run("monoid action", config(cases), strategy, |(d, s, u, v)| {
        let joint = d.apply_word(&s, &u.concat(&v)).unwrap();
        let stepwise = d.apply_word(&d.apply_word(&s, &u).unwrap(), &v).unwrap();
        prop_assert_eq!(joint, stepwise);
        Ok(())
    })
}

pub fn monotonicity(cases: u32) -> Result<(), String> {
    let strategy = arb_dfa(6, 3).prop_flat_map(|d| {
        let (n, k) = (d.n(), d.k());
        (Just(d), arb_set(n), arb_set(n), arb_word(k, 10))
    });
    run(
        "monotonicity",
        config(cases),
        strategy,
        |(d, t, mask, w)| {
            let s = StateSet::from_bits(d.n(), t.bits() & mask.bits()).unwrap();
            prop_assert!(s.is_subset(&t));
            prop_assert!(d
                .apply_word(&s, &w)
                .unwrap()
                .is_subset(&d.apply_word(&t, &w).unwrap()));
            Ok(())
        },
    )
}

pub fn cardinality(cases: u32) -> Result<(), String> {
    let strategy = arb_dfa(6, 3).prop_flat_map(|d| {
        let (n, k) = (d.n(), d.k());
        (Just(d), arb_set(n), 0..k)
    });
    run("cardinality", config(cases), strategy, |(d, s, l)| {
        prop_assert!(d.apply_letter(&s, l).unwrap().len() <= s.len());
        Ok(())
    })
}

pub fn prepend_closure(cases: u32) -> Result<(), String> {
    let strategy = arb_dfa(6, 3).prop_flat_map(|d| {
        let (n, k) = (d.n(), d.k());
        (Just(d), 0..n, arb_word(k, 8), arb_word(k, 8))
    });
    run(
        "prepend closure",
        config(cases),
        strategy,
        |(d, q, u, v)| {
            if !d.image(&v).unwrap().contains(q) {
                prop_assert!(!d.image(&u.concat(&v)).unwrap().contains(q));
            }
            Ok(())
        },
    )
}

pub fn avoidance_within_sync_plus_one(cases: u32) -> Result<(), String> {
    let strategy = arb_dfa(6, 3).prop_filter("strongly connected, synchronizing, n >= 2", |d| {
        d.n() >= 2 && d.is_strongly_connected() && is_synchronizing(d)
    });
    run("avoidance <= sync + 1", config(cases), strategy, |d| {
        let sync = shortest_sync_word(&d).unwrap().length.unwrap();
        for rec in avoidance_profile(&d).unwrap() {
            let m = rec.length.expect("every state is avoidable");
            prop_assert!(m >= 1);
            prop_assert!(
                m <= sync + 1,
                "state {} needs {} > {} + 1",
                rec.state,
                m,
                sync
            );
        }
        Ok(())
    })
}

pub fn sync_minimality(cases: u32) -> Result<(), String> {
    run(
        "reset word minimality",
        config(cases),
        arb_brute_dfa(),
        |d| {
            let result = shortest_sync_word(&d).unwrap();
            match result.shortest_word {
                Some(w) => {
                    let brute = brute_shortest(&d, w.len(), is_singleton);
                    prop_assert_eq!(brute.as_deref(), Some(w.letters()));
                    let img = full_image(&d, w.letters());
                    prop_assert_eq!(img.iter().position(|&m| m), result.final_state);
                }
                None => prop_assert!(reachable_images(&d).iter().all(|img| img.len() > 1)),
            }
            Ok(())
        },
    )
}

pub fn avoidance_minimality(cases: u32) -> Result<(), String> {
    let strategy = arb_brute_dfa().prop_flat_map(|d| {
        let n = d.n();
        (Just(d), 0..n)
    });
    run(
        "avoiding word minimality",
        config(cases),
        strategy,
        |(d, q)| {
            let rec = shortest_avoiding_word(&d, q).unwrap();
            match rec.word {
                Some(w) => {
                    prop_assume!((d.k() as f64).powi(w.len() as i32) < 4e6);
                    let brute = brute_shortest(&d, w.len(), |img| !img[q]);
                    prop_assert_eq!(brute.as_deref(), Some(w.letters()));
                }
                None => prop_assert!(reachable_images(&d).iter().all(|img| img.contains(&q))),
            }
            Ok(())
        },
    )
}

/// Every image `Q·w`, by fixpoint iteration over sets of states.
pub fn reachable_images(d: &Dfa) -> HashSet<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![(0..d.n()).collect::<Vec<_>>()];
    while let Some(set) = frontier.pop() {
        if !seen.insert(set.clone()) {
            continue;
        }
        for l in 0..d.k() {
            let mut next: Vec<usize> = set.iter().map(|&q| d.target(q, l)).collect();
            next.sort_unstable();
            next.dedup();
            frontier.push(next);
        }
    }
    seen
}

/// The criterion-level property list, in order.
pub type Check = fn(u32) -> Result<(), String>;

pub fn all() -> Vec<(&'static str, Check)> {
    vec![
        ("monoid action law", monoid_action),
        ("image monotonicity", monotonicity),
        ("cardinality non-increase", cardinality),
        ("prepend closure of avoidance", prepend_closure),
        ("max avoidance <= sync + 1", avoidance_within_sync_plus_one),
        ("reset word minimality vs brute force", sync_minimality),
        (
            "avoiding word minimality vs brute force",
            avoidance_minimality,
        ),
    ]
}
