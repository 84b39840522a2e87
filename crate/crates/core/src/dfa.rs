//! Complete deterministic automata and the action of words on state sets.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::DfaJson;
use crate::state_set::StateSet;
use crate::word::Word;

/// A complete deterministic finite automaton over states `0..n` and
/// letters `0..k`.
///
/// The transition table is stored row-major: the target of state `q` under
/// letter `l` is entry `q * k + l`. Every entry is in `0..n`, so the
/// automaton is total by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DfaJson", into = "DfaJson")]
pub struct Dfa {
    n: usize,
    k: usize,
    delta: Vec<u8>,
    state_names: Option<Vec<String>>,
    letter_names: Option<Vec<String>>,
}

impl Dfa {
    /// Builds an automaton from its transition rows, `rows[q][l]` being the
    /// target of `q` under `l`.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        let mut flat = Vec::with_capacity(n * k);
        for (q, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidDfa(format!(
                    "row {q} has {} entries, expected {k}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_table(n, k, &flat)
    }

    /// Builds an automaton from a flat row-major table of `n * k` entries.
    pub fn from_table(n: usize, k: usize, table: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDfa(
                "an automaton needs at least one state".into(),
            ));
        }
        if n > StateSet::MAX_STATES {
            return Err(Error::InvalidDfa(format!(
                "{n} states exceeds the supported maximum of {}",
                StateSet::MAX_STATES
            )));
        }
        if k == 0 {
            return Err(Error::InvalidDfa(
                "an automaton needs at least one letter".into(),
            ));
        }
        if table.len() != n * k {
            return Err(Error::InvalidDfa(format!(
                "expected {} table entries, found {}",
                n * k,
                table.len()
            )));
        }
        if let Some((i, &t)) = table.iter().enumerate().find(|(_, &t)| t >= n) {
            return Err(Error::InvalidDfa(format!(
                "entry out of range: state {} letter {} maps to {t}, but n = {n}",
                i / k,
                i % k
            )));
        }
        Ok(Dfa {
            n,
            k,
            delta: table.iter().map(|&t| t as u8).collect(),
            state_names: None,
            letter_names: None,
        })
    }

    pub(crate) fn from_bytes_unchecked(n: usize, k: usize, delta: Vec<u8>) -> Self {
        debug_assert_eq!(delta.len(), n * k);
        Dfa {
            n,
            k,
            delta,
            state_names: None,
            letter_names: None,
        }
    }

    pub fn with_state_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidDfa(format!(
                "{} state names for {} states",
                names.len(),
                self.n
            )));
        }
        self.state_names = Some(names);
        Ok(self)
    }

    pub fn with_letter_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.k {
            return Err(Error::InvalidDfa(format!(
                "{} letter names for {} letters",
                names.len(),
                self.k
            )));
        }
        self.letter_names = Some(names);
        Ok(self)
    }

    /// Number of states.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Alphabet size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Target of `state` under `letter`. Panics when either is out of range.
    pub fn target(&self, state: usize, letter: usize) -> usize {
        assert!(state < self.n && letter < self.k);
        self.delta[state * self.k + letter] as usize
    }

    /// The row-major transition table.
    pub fn table(&self) -> Vec<usize> {
        self.delta.iter().map(|&t| t as usize).collect()
    }

    pub(crate) fn raw_table(&self) -> &[u8] {
        &self.delta
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.delta
            .chunks(self.k)
            .map(|row| row.iter().map(|&t| t as usize).collect())
            .collect()
    }

    /// Orders automata by `(n, k, table)`, ignoring display names.
    pub fn table_cmp(&self, other: &Dfa) -> Ordering {
        (self.n, self.k, &self.delta).cmp(&(other.n, other.k, &other.delta))
    }

    /// Copy of the automaton without custom display names.
    pub fn without_names(&self) -> Dfa {
        Dfa::from_bytes_unchecked(self.n, self.k, self.delta.clone())
    }

    pub fn state_name(&self, state: usize) -> String {
        match &self.state_names {
            Some(names) => names[state].clone(),
            None => format!("q{state}"),
        }
    }

    pub fn letter_name(&self, letter: usize) -> String {
        match &self.letter_names {
            Some(names) => names[letter].clone(),
            None => default_letter_name(letter, self.k),
        }
    }

    pub fn state_names(&self) -> Option<&[String]> {
        self.state_names.as_deref()
    }

    pub fn letter_names(&self) -> Option<&[String]> {
        self.letter_names.as_deref()
    }

    /// Resolves a state given by name (`q3`, or a custom name) or by index.
    pub fn state_by_name(&self, name: &str) -> Option<usize> {
        (0..self.n)
            .find(|&q| self.state_name(q) == name)
            .or_else(|| name.parse().ok().filter(|&q| q < self.n))
    }

    fn letters_are_single_chars(&self) -> bool {
        (0..self.k).all(|l| self.letter_name(l).chars().count() == 1)
    }

    /// Renders a word with this automaton's letter names. Single-character
    /// names are concatenated, longer ones separated by spaces.
    pub fn render_word(&self, word: &Word) -> String {
        let sep = if self.letters_are_single_chars() {
            ""
        } else {
            " "
        };
        word.letters()
            .iter()
            .map(|&l| {
                if l < self.k {
                    self.letter_name(l)
                } else {
                    format!("?{l}")
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a word written with this automaton's letter names; the inverse
    /// of [`Dfa::render_word`].
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let lookup = |tok: &str, column: usize| {
            (0..self.k)
                .find(|&l| self.letter_name(l) == tok)
                .ok_or_else(|| Error::parse(1, column, format!("unknown letter `{tok}`")))
        };
        if self.letters_are_single_chars() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .enumerate()
                .map(|(i, c)| lookup(&c.to_string(), i + 1))
                .collect()
        } else {
            text.split_whitespace()
                .enumerate()
                .map(|(i, tok)| lookup(tok, i + 1))
                .collect()
        }
    }

    /// The full state set `Q`.
    pub fn all_states(&self) -> StateSet {
        StateSet::full(self.n)
    }

    /// Image of `set` under one letter.
    pub fn apply_letter(&self, set: &StateSet, letter: usize) -> Result<StateSet> {
        self.check_universe(set)?;
        self.check_letter(letter)?;
        Ok(StateSet::from_bits_unchecked(
            self.n,
            self.image_bits(set.bits(), letter),
        ))
    }

    /// Image of `set` under a word, letters applied left to right.
    pub fn apply_word(&self, set: &StateSet, word: &Word) -> Result<StateSet> {
        self.check_universe(set)?;
        if let Some(&l) = word.letters().iter().find(|&&l| l >= self.k) {
            return Err(Error::LetterOutOfRange {
                letter: l,
                k: self.k,
            });
        }
        let bits = word
            .letters()
            .iter()
            .fold(set.bits(), |bits, &l| self.image_bits(bits, l));
        Ok(StateSet::from_bits_unchecked(self.n, bits))
    }

    /// Image of the whole state set, `Q·w`.
    pub fn image(&self, word: &Word) -> Result<StateSet> {
        self.apply_word(&self.all_states(), word)
    }

    #[inline]
    pub(crate) fn image_bits(&self, mut bits: u64, letter: usize) -> u64 {
        let mut out = 0u64;
        while bits != 0 {
            let q = bits.trailing_zeros() as usize;
            out |= 1 << self.delta[q * self.k + letter];
            bits &= bits - 1;
        }
        out
    }

    fn check_universe(&self, set: &StateSet) -> Result<()> {
        if set.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: set.universe(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_letter(&self, letter: usize) -> Result<()> {
        if letter >= self.k {
            return Err(Error::LetterOutOfRange { letter, k: self.k });
        }
        Ok(())
    }

    pub(crate) fn check_state(&self, state: usize) -> Result<()> {
        if state >= self.n {
            return Err(Error::StateOutOfRange { state, n: self.n });
        }
        Ok(())
    }

    /// Whether the transition digraph is strongly connected: every state is
    /// reachable from state 0 along forward edges and along reversed edges.
    pub fn is_strongly_connected(&self) -> bool {
        let mut reverse = vec![Vec::new(); self.n];
        for q in 0..self.n {
            for l in 0..self.k {
                reverse[self.target(q, l)].push(q);
            }
        }
        let forward = |q: usize| {
            (0..self.k)
                .map(move |l| self.target(q, l))
                .collect::<Vec<_>>()
        };
        reaches_all(self.n, forward) && reaches_all(self.n, |q| reverse[q].clone())
    }
}

fn reaches_all(n: usize, successors: impl Fn(usize) -> Vec<usize>) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut count = 1;
    let mut queue = VecDeque::from([0]);
    while let Some(q) = queue.pop_front() {
        for p in successors(q) {
            if !seen[p] {
                seen[p] = true;
                count += 1;
                queue.push_back(p);
            }
        }
    }
    count == n
}

pub(crate) fn default_letter_name(letter: usize, k: usize) -> String {
    if k <= 26 {
        ((b'a' + letter as u8) as char).to_string()
    } else {
        format!("l{letter}")
    }
}

pub(crate) fn default_letter_names(k: usize) -> Vec<String> {
    (0..k).map(|l| default_letter_name(l, k)).collect()
}
