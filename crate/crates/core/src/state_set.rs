use std::fmt;

use crate::error::{Error, Result};

/// A subset of the states `0..n` of an automaton, stored as a bitset.
///
/// The universe size is part of the value: two sets with the same members
/// over different universes are different sets. Iteration is always in
/// ascending state order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    universe: u8,
    bits: u64,
}

impl StateSet {
    /// Largest supported universe.
    pub const MAX_STATES: usize = 64;

    pub fn empty(universe: usize) -> Self {
        assert!(
            (1..=Self::MAX_STATES).contains(&universe),
            "state set universe must be in 1..={}",
            Self::MAX_STATES
        );
        StateSet {
            universe: universe as u8,
            bits: 0,
        }
    }

    /// The whole state set `Q`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits = full_mask(universe);
        s
    }

    pub fn singleton(universe: usize, state: usize) -> Result<Self> {
        let mut s = Self::empty(universe);
        s.insert(state)?;
        Ok(s)
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(universe: usize, states: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for q in states {
            s.insert(q)?;
        }
        Ok(s)
    }

    /// Builds a set from raw bits; bits at or above `universe` are rejected.
    pub fn from_bits(universe: usize, bits: u64) -> Result<Self> {
        let s = Self::empty(universe);
        if bits & !full_mask(universe) != 0 {
            let state = 63 - (bits & !full_mask(universe)).leading_zeros() as usize;
            return Err(Error::StateOutOfRange { state, n: universe });
        }
        Ok(StateSet { bits, ..s })
    }

    pub(crate) fn from_bits_unchecked(universe: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !full_mask(universe), 0);
        StateSet {
            universe: universe as u8,
            bits,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, state: usize) -> Result<()> {
        if state >= self.universe() {
            return Err(Error::StateOutOfRange {
                state,
                n: self.universe(),
            });
        }
        self.bits |= 1 << state;
        Ok(())
    }

    pub fn contains(&self, state: usize) -> bool {
        state < self.universe() && self.bits >> state & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// The sole member, if the set is a singleton.
    pub fn single(&self) -> Option<usize> {
        (self.len() == 1).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Subset test; sets over different universes are never comparable.
    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.universe == other.universe && self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }
}

fn full_mask(universe: usize) -> u64 {
    if universe >= 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

/// Ascending iterator over the members of a [`StateSet`].
pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let q = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(q)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for &StateSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "q{q}")?;
        }
        f.write_str("}")
    }
}
