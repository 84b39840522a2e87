//! Shortest words whose image avoids a given state, and the check of the
//! two-part avoidance lemma used in an attempted improvement of the cubic
//! reset-word bound.
//!
//! For a state `q`, an avoiding word is a `w` with `q ∉ Q·w`. The lemma
//! claims, for strongly connected synchronizing automata on `n` states:
//!
//! 1. every state has an avoiding word of length at most `n`;
//! 2. for every `k < n`, at least `k` states have avoiding words of length
//!    at most `k`.
//!
//! [`check_lemma3`] evaluates both parts exactly from the avoidance profile.

use num_rational::Ratio;
use serde::Serialize;

use crate::bfs::{self, Visit, DEFAULT_MAX_STATES};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::sync::is_synchronizing;
use crate::word::Word;

/// Shortest avoiding word for one state, if any exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AvoidanceRecord {
    pub state: usize,
    pub word: Option<Word>,
    pub length: Option<usize>,
}

/// A `k < n` for which fewer than `k` states avoid within length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part2Failure {
    pub k: usize,
    /// How many states do have an avoiding word of length at most `k`.
    pub achieved: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub n: usize,
    pub part1_holds: bool,
    /// Records whose length exceeds `n` or is absent.
    pub part1_violators: Vec<AvoidanceRecord>,
    pub part2_holds: bool,
    pub part2_failures: Vec<Part2Failure>,
    pub profile: Vec<AvoidanceRecord>,
}

impl LemmaVerdict {
    pub fn holds(&self) -> bool {
        self.part1_holds && self.part2_holds
    }
}

pub fn shortest_avoiding_word(dfa: &Dfa, state: usize) -> Result<AvoidanceRecord> {
    shortest_avoiding_word_within(dfa, state, DEFAULT_MAX_STATES)
}

pub fn shortest_avoiding_word_within(
    dfa: &Dfa,
    state: usize,
    max_states: usize,
) -> Result<AvoidanceRecord> {
    dfa.check_state(state)?;
    let mut found = None;
    let tree = bfs::explore(dfa, max_states, |bits, _| {
        if bits >> state & 1 == 0 {
            found = Some(bits);
            Visit::Stop
        } else {
            Visit::Continue
        }
    })?;
    let word = found.map(|bits| tree.word_to(bits));
    Ok(AvoidanceRecord {
        state,
        length: word.as_ref().map(Word::len),
        word,
    })
}

/// Avoidance records for every state, in state order, from one search.
pub fn avoidance_profile(dfa: &Dfa) -> Result<Vec<AvoidanceRecord>> {
    avoidance_profile_within(dfa, DEFAULT_MAX_STATES)
}

pub fn avoidance_profile_within(dfa: &Dfa, max_states: usize) -> Result<Vec<AvoidanceRecord>> {
    let n = dfa.n();
    let mut first_image: Vec<Option<u64>> = vec![None; n];
    let mut pending = dfa.all_states().bits();
    let tree = bfs::explore(dfa, max_states, |bits, _| {
        let newly_avoided = pending & !bits;
        if newly_avoided != 0 {
            let mut m = newly_avoided;
            while m != 0 {
                first_image[m.trailing_zeros() as usize] = Some(bits);
                m &= m - 1;
            }
            pending &= bits;
        }
        if pending == 0 {
            Visit::Stop
        } else {
            Visit::Continue
        }
    })?;
    Ok(first_image
        .into_iter()
        .enumerate()
        .map(|(state, image)| {
            let word = image.map(|bits| tree.word_to(bits));
            AvoidanceRecord {
                state,
                length: word.as_ref().map(Word::len),
                word,
            }
        })
        .collect())
}

/// Fails unless `dfa` is strongly connected and synchronizing.
pub fn check_hypotheses(dfa: &Dfa) -> Result<()> {
    if !dfa.is_strongly_connected() {
        return Err(Error::Hypothesis(
            "automaton is not strongly connected".into(),
        ));
    }
    if !is_synchronizing(dfa) {
        return Err(Error::Hypothesis("automaton is not synchronizing".into()));
    }
    Ok(())
}

/// Evaluates both parts of the avoidance lemma. The automaton must satisfy
/// the lemma's hypotheses; otherwise an [`Error::Hypothesis`] is returned
/// instead of a verdict.
pub fn check_lemma3(dfa: &Dfa) -> Result<LemmaVerdict> {
    check_hypotheses(dfa)?;
    let profile = avoidance_profile(dfa)?;
    Ok(verdict_from_profile(dfa.n(), profile))
}

pub(crate) fn verdict_from_profile(n: usize, profile: Vec<AvoidanceRecord>) -> LemmaVerdict {
    let part1_violators: Vec<AvoidanceRecord> = profile
        .iter()
        .filter(|r| r.length.is_none_or(|m| m > n))
        .cloned()
        .collect();

    let mut lengths: Vec<usize> = profile.iter().filter_map(|r| r.length).collect();
    lengths.sort_unstable();
    let part2_failures: Vec<Part2Failure> = (1..n)
        .filter_map(|k| {
            let achieved = lengths.partition_point(|&m| m <= k);
            (achieved < k).then_some(Part2Failure { k, achieved })
        })
        .collect();

    LemmaVerdict {
        n,
        part1_holds: part1_violators.is_empty(),
        part1_violators,
        part2_holds: part2_failures.is_empty(),
        part2_failures,
        profile,
    }
}

/// The largest avoiding length divided by `n`: this automaton's lower
/// bound on a constant `c` such that every state is avoided within `c·n`.
pub fn max_avoidance_ratio(dfa: &Dfa) -> Result<Ratio<u64>> {
    check_hypotheses(dfa)?;
    if dfa.n() < 2 {
        return Err(Error::Hypothesis(
            "avoidance ratio needs at least 2 states".into(),
        ));
    }
    let profile = avoidance_profile(dfa)?;
    ratio_from_profile(dfa.n(), &profile)
}

pub(crate) fn ratio_from_profile(n: usize, profile: &[AvoidanceRecord]) -> Result<Ratio<u64>> {
    let mut longest = 0;
    for r in profile {
        match r.length {
            Some(m) => longest = longest.max(m),
            None => {
                return Err(Error::Hypothesis(format!(
                    "state {} has no avoiding word",
                    r.state
                )))
            }
        }
    }
    Ok(Ratio::new(longest as u64, n as u64))
}
