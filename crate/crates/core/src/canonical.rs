//! Canonical representatives of isomorphism classes.
//!
//! Two automata are isomorphic when one becomes the other after renaming
//! its states and renaming its letters. The canonical form is the
//! lexicographically least row-major table over all such renamings, found
//! by trying every pair of permutations. That is `n! * k!` candidates, so
//! the sizes are capped.

use itertools::Itertools;

use crate::dfa::Dfa;
use crate::error::{Error, Result};

pub const MAX_CANONICAL_STATES: usize = 8;
pub const MAX_CANONICAL_LETTERS: usize = 3;

/// A renaming: `states[q]` is the new index of old state `q`, `letters[l]`
/// the new index of old letter `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub states: Vec<usize>,
    pub letters: Vec<usize>,
}

/// Applies a renaming: the result maps `states[q]` under `letters[l]` to
/// `states[target(q, l)]`. Display names are dropped.
pub fn relabel(dfa: &Dfa, relabeling: &Relabeling) -> Result<Dfa> {
    let (n, k) = (dfa.n(), dfa.k());
    if !is_permutation(&relabeling.states, n) || !is_permutation(&relabeling.letters, k) {
        return Err(Error::InvalidDfa(
            "relabeling is not a pair of permutations of the states and letters".into(),
        ));
    }
    let mut table = vec![0u8; n * k];
    for q in 0..n {
        for l in 0..k {
            table[relabeling.states[q] * k + relabeling.letters[l]] =
                relabeling.states[dfa.target(q, l)] as u8;
        }
    }
    Ok(Dfa::from_bytes_unchecked(n, k, table))
}

fn is_permutation(p: &[usize], len: usize) -> bool {
    let mut seen = vec![false; len];
    p.len() == len
        && p.iter()
            .all(|&i| i < len && !std::mem::replace(&mut seen[i], true))
}

/// The canonical representative of `dfa`'s isomorphism class.
pub fn canonical_form(dfa: &Dfa) -> Result<Dfa> {
    canonical_form_with_relabeling(dfa).map(|(d, _)| d)
}

/// Like [`canonical_form`], also returning a renaming that takes `dfa` to
/// its canonical form.
pub fn canonical_form_with_relabeling(dfa: &Dfa) -> Result<(Dfa, Relabeling)> {
    let (n, k) = (dfa.n(), dfa.k());
    if n > MAX_CANONICAL_STATES {
        return Err(Error::GuardExceeded {
            what: "canonical form state count",
            actual: n as u128,
            limit: MAX_CANONICAL_STATES as u128,
        });
    }
    if k > MAX_CANONICAL_LETTERS {
        return Err(Error::GuardExceeded {
            what: "canonical form alphabet size",
            actual: k as u128,
            limit: MAX_CANONICAL_LETTERS as u128,
        });
    }
    let old = dfa.raw_table();
    let letter_perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();

    let mut best = old.to_vec();
    let mut best_relabeling = Relabeling {
        states: (0..n).collect(),
        letters: (0..k).collect(),
    };
    let mut candidate = vec![0u8; n * k];
    for state_inv in (0..n).permutations(n) {
        // state_inv[new] = old
        let mut state_fwd = vec![0u8; n];
        for (new, &o) in state_inv.iter().enumerate() {
            state_fwd[o] = new as u8;
        }
        for letter_inv in &letter_perms {
            // Fill the candidate in row-major order, bailing out as soon as
            // it compares greater than the best so far.
            let mut smaller = false;
            let mut pruned = false;
            'fill: for (r, &oq) in state_inv.iter().enumerate() {
                for (j, &ol) in letter_inv.iter().enumerate() {
                    let i = r * k + j;
                    let v = state_fwd[old[oq * k + ol] as usize];
                    candidate[i] = v;
                    if !smaller {
                        if v > best[i] {
                            pruned = true;
                            break 'fill;
                        }
                        smaller = v < best[i];
                    }
                }
            }
            if !pruned && smaller {
                best.copy_from_slice(&candidate);
                let mut letters = vec![0; k];
                for (new, &o) in letter_inv.iter().enumerate() {
                    letters[o] = new;
                }
                best_relabeling = Relabeling {
                    states: state_fwd.iter().map(|&s| s as usize).collect(),
                    letters,
                };
            }
        }
    }
    Ok((Dfa::from_bytes_unchecked(n, k, best), best_relabeling))
}

/// Whether `a` and `b` are isomorphic, decided by comparing canonical forms.
pub fn is_isomorphic(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(a.n() == b.n() && a.k() == b.k() && canonical_form(a)? == canonical_form(b)?)
}
