//! Breadth-first search over the images `Q·w` of the full state set.
//!
//! Letters are expanded in ascending order from a FIFO queue, so the first
//! time a set is discovered it is reached by the lexicographically least of
//! its shortest words. Each visited set stores only its parent and the
//! letter used; words are rebuilt by walking the parents.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::word::Word;

/// Largest automaton the image searches accept unless told otherwise. The
/// search may visit up to `2^n` sets.
pub const DEFAULT_MAX_STATES: usize = 24;

pub(crate) enum Visit {
    Continue,
    Stop,
}

pub(crate) struct ImageTree {
    start: u64,
    parents: HashMap<u64, (u64, u32)>,
}

impl ImageTree {
    /// Word along the discovery path from `Q` to `bits`.
    pub(crate) fn word_to(&self, mut bits: u64) -> Word {
        let mut letters = Vec::new();
        while bits != self.start {
            let (parent, letter) = self.parents[&bits];
            letters.push(letter as usize);
            bits = parent;
        }
        letters.reverse();
        Word::new(letters)
    }
}

pub(crate) fn check_guard(dfa: &Dfa, max_states: usize) -> Result<()> {
    if dfa.n() > max_states {
        return Err(Error::GuardExceeded {
            what: "state count for image search",
            actual: dfa.n() as u128,
            limit: max_states as u128,
        });
    }
    Ok(())
}

/// Runs the search, calling `on_discover(image, depth)` for every newly
/// discovered image in discovery order, starting with `Q` at depth 0.
pub(crate) fn explore(
    dfa: &Dfa,
    max_states: usize,
    mut on_discover: impl FnMut(u64, usize) -> Visit,
) -> Result<ImageTree> {
    check_guard(dfa, max_states)?;
    let start = dfa.all_states().bits();
    let mut tree = ImageTree {
        start,
        parents: HashMap::new(),
    };
    if let Visit::Stop = on_discover(start, 0) {
        return Ok(tree);
    }
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((bits, depth)) = queue.pop_front() {
        for letter in 0..dfa.k() {
            let next = dfa.image_bits(bits, letter);
            if next == start {
                continue;
            }
            if let Entry::Vacant(slot) = tree.parents.entry(next) {
                slot.insert((bits, letter as u32));
                if let Visit::Stop = on_discover(next, depth + 1) {
                    return Ok(tree);
                }
                queue.push_back((next, depth + 1));
            }
        }
    }
    Ok(tree)
}
