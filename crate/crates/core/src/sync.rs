//! Synchronization: deciding it, finding shortest reset words, and the
//! classical length bounds.

use std::collections::VecDeque;

use num_rational::Ratio;
use serde::Serialize;

use crate::bfs::{self, Visit, DEFAULT_MAX_STATES};
use crate::dfa::Dfa;
use crate::error::Result;
use crate::word::Word;

/// Outcome of a shortest-reset-word search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyncResult {
    pub synchronizing: bool,
    pub shortest_word: Option<Word>,
    pub length: Option<usize>,
    /// The single state of `Q·w`.
    pub final_state: Option<usize>,
}

impl SyncResult {
    fn not_synchronizing() -> Self {
        SyncResult {
            synchronizing: false,
            shortest_word: None,
            length: None,
            final_state: None,
        }
    }
}

/// Decides synchronization without building a word.
///
/// An automaton is synchronizing iff every pair of states can be merged
/// by some word. The mergeable pairs are found by a backward search over
/// the pair graph, starting from pairs that a single letter merges.
pub fn is_synchronizing(dfa: &Dfa) -> bool {
    let (n, k) = (dfa.n(), dfa.k());
    if n == 1 {
        return true;
    }
    let mut preimages = vec![vec![Vec::new(); n]; k];
    for q in 0..n {
        for (l, pre) in preimages.iter_mut().enumerate() {
            pre[dfa.target(q, l)].push(q);
        }
    }
    let mut mergeable = vec![false; n * n];
    let mut queue = VecDeque::new();
    for p in 0..n {
        for q in p + 1..n {
            if (0..k).any(|l| dfa.target(p, l) == dfa.target(q, l)) {
                mergeable[p * n + q] = true;
                queue.push_back((p, q));
            }
        }
    }
    while let Some((a, b)) = queue.pop_front() {
        for pre in &preimages {
            for &p in &pre[a] {
                for &q in &pre[b] {
                    let (x, y) = if p < q { (p, q) } else { (q, p) };
                    if x != y && !mergeable[x * n + y] {
                        mergeable[x * n + y] = true;
                        queue.push_back((x, y));
                    }
                }
            }
        }
    }
    (0..n).all(|p| (p + 1..n).all(|q| mergeable[p * n + q]))
}

/// Shortest reset word, lexicographically least among the shortest.
/// Fails for automata above [`DEFAULT_MAX_STATES`] states.
pub fn shortest_sync_word(dfa: &Dfa) -> Result<SyncResult> {
    shortest_sync_word_within(dfa, DEFAULT_MAX_STATES)
}

/// [`shortest_sync_word`] with an explicit state-count guard.
pub fn shortest_sync_word_within(dfa: &Dfa, max_states: usize) -> Result<SyncResult> {
    let mut found = None;
    let tree = bfs::explore(dfa, max_states, |bits, _| {
        if bits.count_ones() == 1 {
            found = Some(bits);
            Visit::Stop
        } else {
            Visit::Continue
        }
    })?;
    Ok(match found {
        Some(bits) => {
            let word = tree.word_to(bits);
            SyncResult {
                synchronizing: true,
                length: Some(word.len()),
                shortest_word: Some(word),
                final_state: Some(bits.trailing_zeros() as usize),
            }
        }
        None => SyncResult::not_synchronizing(),
    })
}

/// The three reset-word length bounds for `n` states: Černý's conjectured
/// `(n-1)^2`, the proven `(n^3-n)/6`, and the claimed `n(7n^2+6n-16)/48`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsTable {
    pub n: u64,
    pub cerny: u128,
    pub pin_frankl: u128,
    #[serde(serialize_with = "crate::ratio::serialize")]
    pub trahtman_claimed: Ratio<u128>,
}

pub fn bounds(n: u64) -> BoundsTable {
    let m = n as u128;
    BoundsTable {
        n,
        cerny: (m - 1).pow(2),
        pin_frankl: (m.pow(3) - m) / 6,
        // 7n^2 + 6n - 16 is negative only for n = 1
        trahtman_claimed: if n == 1 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(m * (7 * m * m + 6 * m - 16), 48)
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cex() -> Dfa {
        Dfa::new(&[vec![1, 0], vec![0, 2], vec![2, 3], vec![0, 1]]).unwrap()
    }

    #[test]
    fn counterexample_synchronizes() {
        let d = cex();
        assert!(is_synchronizing(&d));
        let r = shortest_sync_word(&d).unwrap();
        assert!(r.synchronizing);
        assert!(r.length.unwrap() <= 9);
        let w = r.shortest_word.unwrap();
        assert_eq!(d.image(&w).unwrap().single(), r.final_state);
    }

    #[test]
    fn one_state() {
        let d = Dfa::new(&[vec![0]]).unwrap();
        assert!(is_synchronizing(&d));
        let r = shortest_sync_word(&d).unwrap();
        assert_eq!(r.shortest_word, Some(Word::empty()));
        assert_eq!((r.length, r.final_state), (Some(0), Some(0)));
    }

    #[test]
    fn permutations_never_synchronize() {
        let d = Dfa::new(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!is_synchronizing(&d));
        assert_eq!(
            shortest_sync_word(&d).unwrap(),
            SyncResult::not_synchronizing()
        );
    }

    #[test]
    fn guard_is_an_error() {
        let d = Dfa::from_table(25, 1, &[0; 25]).unwrap();
        assert!(shortest_sync_word(&d).unwrap_err().is_guard());
        assert!(shortest_sync_word_within(&d, 25).unwrap().synchronizing);
        assert!(is_synchronizing(&d));
    }

    #[test]
    fn bound_values() {
        let b = bounds(4);
        assert_eq!((b.cerny, b.pin_frankl), (9, 10));
        // 4 * (112 + 24 - 16) / 48
        assert_eq!(b.trahtman_claimed, Ratio::from_integer(10));
        let b = bounds(1);
        assert_eq!((b.cerny, b.pin_frankl), (0, 0));
        let b = bounds(2);
        assert_eq!((b.cerny, b.pin_frankl), (1, 1));
        assert_eq!(bounds(5).trahtman_claimed, Ratio::new(315, 16));
    }

    #[test]
    fn claimed_bound_sits_between() {
        for n in 4..200u64 {
            let b = bounds(n);
            let cerny = Ratio::from_integer(b.cerny);
            let pf = Ratio::from_integer(b.pin_frankl);
            assert!(
                cerny <= b.trahtman_claimed && b.trahtman_claimed <= pf,
                "n = {n}"
            );
        }
    }
}
