use crate::canonical::canonical_form;
use crate::dfa::Dfa;

use super::generate::random_dfa;

/// Every `n`-state, `k`-letter table with index in `start..end`, where a
/// table's index reads its row-major entries as digits base `n`, first
/// entry most significant. Index order is therefore lexicographic order.
pub struct TableRange {
    n: usize,
    k: usize,
    digits: Vec<u8>,
    next: u128,
    end: u128,
}

impl TableRange {
    pub fn new(n: usize, k: usize, start: u128, end: u128) -> Self {
        let mut digits = vec![0u8; n * k];
        let mut rest = start;
        for d in digits.iter_mut().rev() {
            *d = (rest % n as u128) as u8;
            rest /= n as u128;
        }
        TableRange {
            n,
            k,
            digits,
            next: start,
            end,
        }
    }

    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if (*d as usize) < self.n {
                return;
            }
            *d = 0;
        }
    }
}

impl Iterator for TableRange {
    type Item = Dfa;

    fn next(&mut self) -> Option<Dfa> {
        if self.next >= self.end {
            return None;
        }
        let dfa = Dfa::from_bytes_unchecked(self.n, self.k, self.digits.clone());
        self.next += 1;
        if self.next < self.end {
            self.advance();
        }
        Some(dfa)
    }
}

/// Number of `n`-state `k`-letter tables, `n^(n·k)`, or `None` on overflow.
pub fn table_count(n: usize, k: usize) -> Option<u128> {
    (n as u128).checked_pow(u32::try_from(n * k).ok()?)
}

/// Keeps only automata equal to their own canonical form, one per
/// isomorphism class.
pub(crate) fn is_class_representative(dfa: &Dfa) -> bool {
    canonical_form(dfa).is_ok_and(|c| c.raw_table() == dfa.raw_table())
}

/// Samples `start..end` of a random run: sample `i` is
/// `random_dfa(n, k, seed + i)` (wrapping).
pub(crate) fn random_samples(
    n: usize,
    k: usize,
    seed: u64,
    start: u64,
    end: u64,
) -> impl Iterator<Item = Dfa> {
    (start..end)
        .map(move |i| random_dfa(n, k, seed.wrapping_add(i)).expect("parameters were validated"))
}
