//! Generators, exhaustive enumeration of small automata, and the census
//! that aggregates reset-word and avoidance statistics over them.
//!
//! A run is deterministic in its [`SearchParams`]: the worker count only
//! decides how the table range is split, and partial reports are merged
//! with an order-independent [`Accumulator::merge`]. Ties between extremal
//! automata are broken towards the least row-major table.

mod enumerate;
mod generate;

use std::cmp::Ordering;
use std::collections::HashSet;

use num_rational::Ratio;
use serde::Serialize;

pub use enumerate::{table_count, TableRange};
pub use generate::{gen_cerny, random_dfa};

use crate::avoid::{
    avoidance_profile_within, ratio_from_profile, verdict_from_profile, AvoidanceRecord,
    Part2Failure,
};
use crate::bfs::DEFAULT_MAX_STATES;
use crate::canonical::{canonical_form, MAX_CANONICAL_LETTERS, MAX_CANONICAL_STATES};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::sync::{bounds, is_synchronizing, shortest_sync_word_within};

/// Largest number of tables an exhaustive run may visit by default:
/// `4^12`, which admits `n <= 5` for two letters and `n <= 4` for three.
pub const DEFAULT_MAX_TABLES: u128 = 1 << 24;

pub const DEFAULT_MAX_WITNESSES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchParams {
    pub n: usize,
    pub k: usize,
    #[serde(flatten)]
    pub mode: Mode,
    /// Exhaustive mode only: visit one automaton per isomorphism class.
    pub dedup: bool,
    /// Restrict reset-word statistics to strongly connected automata.
    /// Avoidance and lemma statistics always require it.
    pub strongly_connected_only: bool,
    pub max_witnesses: usize,
    #[serde(skip)]
    pub max_tables: u128,
    #[serde(skip)]
    pub max_states: usize,
}

impl SearchParams {
    pub fn exhaustive(n: usize, k: usize) -> Self {
        SearchParams {
            n,
            k,
            mode: Mode::Exhaustive,
            dedup: false,
            strongly_connected_only: true,
            max_witnesses: DEFAULT_MAX_WITNESSES,
            max_tables: DEFAULT_MAX_TABLES,
            max_states: DEFAULT_MAX_STATES,
        }
    }

    pub fn random(n: usize, k: usize, samples: u64, seed: u64) -> Self {
        SearchParams {
            mode: Mode::Random { samples, seed },
            ..Self::exhaustive(n, k)
        }
    }

    pub fn with_dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(Error::InvalidParams("n and k must be at least 1".into()));
        }
        if self.n > self.max_states {
            return Err(Error::GuardExceeded {
                what: "state count for image search",
                actual: self.n as u128,
                limit: self.max_states as u128,
            });
        }
        match self.mode {
            Mode::Exhaustive => {
                let count = table_count(self.n, self.k).unwrap_or(u128::MAX);
                if count > self.max_tables {
                    return Err(Error::GuardExceeded {
                        what: "exhaustive table count",
                        actual: count,
                        limit: self.max_tables,
                    });
                }
                if self.dedup && (self.n > MAX_CANONICAL_STATES || self.k > MAX_CANONICAL_LETTERS) {
                    return Err(Error::GuardExceeded {
                        what: "canonical form size for dedup",
                        actual: self.n.max(self.k) as u128,
                        limit: MAX_CANONICAL_STATES as u128,
                    });
                }
            }
            Mode::Random { .. } => {
                if self.dedup {
                    return Err(Error::InvalidParams(
                        "dedup applies to exhaustive mode only".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn work_size(&self) -> u128 {
        match self.mode {
            Mode::Exhaustive => table_count(self.n, self.k).unwrap_or(u128::MAX),
            Mode::Random { samples, .. } => samples as u128,
        }
    }

    fn automata(&self, start: u128, end: u128) -> Box<dyn Iterator<Item = Dfa>> {
        match self.mode {
            Mode::Exhaustive => {
                let range = TableRange::new(self.n, self.k, start, end);
                if self.dedup {
                    Box::new(range.filter(enumerate::is_class_representative))
                } else {
                    Box::new(range)
                }
            }
            Mode::Random { seed, .. } => Box::new(enumerate::random_samples(
                self.n,
                self.k,
                seed,
                start as u64,
                end as u64,
            )),
        }
    }
}

/// All automata a search with these parameters visits, in order.
pub fn enumerate_dfas(params: &SearchParams) -> Result<impl Iterator<Item = Dfa>> {
    params.validate()?;
    Ok(params.automata(0, params.work_size()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub total: u64,
    pub strongly_connected: u64,
    pub synchronizing: u64,
    /// Automata that entered the reset-word statistics.
    pub analyzed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxSync {
    pub length: usize,
    pub automaton: Dfa,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxAvoidance {
    #[serde(serialize_with = "crate::ratio::serialize")]
    pub ratio: Ratio<u64>,
    pub length: usize,
    pub automaton: Dfa,
    pub state: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolatorState {
    pub state: usize,
    pub length: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaWitness {
    pub automaton: Dfa,
    /// Isomorphism class: the canonical table when within the canonical
    /// form guard, otherwise the table itself.
    #[serde(skip)]
    class: Vec<usize>,
    pub max_avoiding_length: usize,
    pub part1_violators: Vec<ViolatorState>,
    pub part2_failures: Vec<Part2Failure>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaStats {
    /// Automata violating at least one part.
    pub violations: u64,
    pub part1_violations: u64,
    pub part2_violations: u64,
    /// At most one automaton per isomorphism class, most severe first
    /// (longest avoiding word), then by table.
    pub witnesses: Vec<LemmaWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WorstCase {
    pub length: usize,
    pub bound: u128,
    pub automaton: Dfa,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub pin_frankl_ok: bool,
    pub pin_frankl_violations: u64,
    pub cerny_ok: bool,
    pub cerny_violations: u64,
    pub worst: Option<WorstCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub params: SearchParams,
    pub counts: Counts,
    pub max_sync: Option<MaxSync>,
    pub max_avoidance: Option<MaxAvoidance>,
    pub lemma3: LemmaStats,
    pub bound_check: BoundCheck,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Partial statistics over a slice of the search space.
#[derive(Clone, Debug)]
pub struct Accumulator {
    n: usize,
    strongly_connected_only: bool,
    max_witnesses: usize,
    max_states: usize,
    counts: Counts,
    max_sync: Option<MaxSync>,
    max_avoidance: Option<MaxAvoidance>,
    lemma: LemmaStats,
    pin_frankl_violations: u64,
    cerny_violations: u64,
}

impl Accumulator {
    pub fn new(params: &SearchParams) -> Self {
        Accumulator {
            n: params.n,
            strongly_connected_only: params.strongly_connected_only,
            max_witnesses: params.max_witnesses,
            max_states: params.max_states,
            counts: Counts::default(),
            max_sync: None,
            max_avoidance: None,
            lemma: LemmaStats::default(),
            pin_frankl_violations: 0,
            cerny_violations: 0,
        }
    }

    pub fn add(&mut self, dfa: &Dfa) -> Result<()> {
        self.counts.total += 1;
        let strongly_connected = dfa.is_strongly_connected();
        let synchronizing = is_synchronizing(dfa);
        self.counts.strongly_connected += strongly_connected as u64;
        self.counts.synchronizing += synchronizing as u64;
        if !synchronizing || (self.strongly_connected_only && !strongly_connected) {
            return Ok(());
        }
        self.counts.analyzed += 1;

        let length = shortest_sync_word_within(dfa, self.max_states)?
            .length
            .expect("synchronizing automaton has a reset word");
        let b = bounds(dfa.n() as u64);
        self.pin_frankl_violations += (length as u128 > b.pin_frankl) as u64;
        self.cerny_violations += (length as u128 > b.cerny) as u64;
        offer(
            &mut self.max_sync,
            MaxSync {
                length,
                automaton: dfa.clone(),
            },
            |a, b| a.length.cmp(&b.length),
        );

        if !strongly_connected {
            return Ok(());
        }
        let profile = avoidance_profile_within(dfa, self.max_states)?;
        if dfa.n() >= 2 {
            let ratio = ratio_from_profile(dfa.n(), &profile)?;
            let (state, longest) = longest_record(&profile);
            offer(
                &mut self.max_avoidance,
                MaxAvoidance {
                    ratio,
                    length: longest,
                    automaton: dfa.clone(),
                    state,
                },
                |a, b| a.ratio.cmp(&b.ratio),
            );
        }
        let verdict = verdict_from_profile(dfa.n(), profile);
        if !verdict.holds() {
            self.lemma.violations += 1;
            self.lemma.part1_violations += !verdict.part1_holds as u64;
            self.lemma.part2_violations += !verdict.part2_holds as u64;
            let witness = LemmaWitness {
                automaton: dfa.clone(),
                class: canonical_form(dfa).unwrap_or_else(|_| dfa.clone()).table(),
                max_avoiding_length: verdict
                    .profile
                    .iter()
                    .filter_map(|r| r.length)
                    .max()
                    .unwrap_or(0),
                part1_violators: verdict
                    .part1_violators
                    .iter()
                    .map(|r| ViolatorState {
                        state: r.state,
                        length: r.length,
                    })
                    .collect(),
                part2_failures: verdict.part2_failures,
            };
            self.keep_witnesses(vec![witness]);
        }
        Ok(())
    }

    fn keep_witnesses(&mut self, more: Vec<LemmaWitness>) {
        self.lemma.witnesses.extend(more);
        self.lemma.witnesses.sort_by(witness_order);
        let mut classes = HashSet::new();
        self.lemma
            .witnesses
            .retain(|w| classes.insert(w.class.clone()));
        self.lemma.witnesses.truncate(self.max_witnesses);
    }

    /// Combines two partial results. Associative and commutative, so any
    /// split of the search space gives the same final report.
    pub fn merge(mut self, other: Accumulator) -> Accumulator {
        self.counts.total += other.counts.total;
        self.counts.strongly_connected += other.counts.strongly_connected;
        self.counts.synchronizing += other.counts.synchronizing;
        self.counts.analyzed += other.counts.analyzed;
        if let Some(m) = other.max_sync {
            offer(&mut self.max_sync, m, |a, b| a.length.cmp(&b.length));
        }
        if let Some(m) = other.max_avoidance {
            offer(&mut self.max_avoidance, m, |a, b| a.ratio.cmp(&b.ratio));
        }
        self.lemma.violations += other.lemma.violations;
        self.lemma.part1_violations += other.lemma.part1_violations;
        self.lemma.part2_violations += other.lemma.part2_violations;
        self.keep_witnesses(other.lemma.witnesses);
        self.pin_frankl_violations += other.pin_frankl_violations;
        self.cerny_violations += other.cerny_violations;
        self
    }

    pub fn finish(self, params: &SearchParams) -> SearchReport {
        let b = bounds(self.n as u64);
        let worst = self.max_sync.as_ref().map(|m| WorstCase {
            length: m.length,
            bound: b.pin_frankl,
            automaton: m.automaton.clone(),
        });
        SearchReport {
            params: params.clone(),
            counts: self.counts,
            max_sync: self.max_sync,
            max_avoidance: self.max_avoidance,
            lemma3: self.lemma,
            bound_check: BoundCheck {
                pin_frankl_ok: self.pin_frankl_violations == 0,
                pin_frankl_violations: self.pin_frankl_violations,
                cerny_ok: self.cerny_violations == 0,
                cerny_violations: self.cerny_violations,
                worst,
            },
        }
    }
}

/// Replaces `slot` when `candidate` is larger, or equal with a smaller table.
fn offer<T: HasAutomaton>(slot: &mut Option<T>, candidate: T, by: impl Fn(&T, &T) -> Ordering) {
    let replace = match slot {
        None => true,
        Some(current) => by(&candidate, current)
            .then_with(|| current.automaton().table_cmp(candidate.automaton()))
            .is_gt(),
    };
    if replace {
        *slot = Some(candidate);
    }
}

trait HasAutomaton {
    fn automaton(&self) -> &Dfa;
}

impl HasAutomaton for MaxSync {
    fn automaton(&self) -> &Dfa {
        &self.automaton
    }
}

impl HasAutomaton for MaxAvoidance {
    fn automaton(&self) -> &Dfa {
        &self.automaton
    }
}

fn witness_order(a: &LemmaWitness, b: &LemmaWitness) -> Ordering {
    b.max_avoiding_length
        .cmp(&a.max_avoiding_length)
        .then_with(|| a.automaton.table_cmp(&b.automaton))
}

/// Least state among those with the longest avoiding word.
fn longest_record(profile: &[AvoidanceRecord]) -> (usize, usize) {
    profile
        .iter()
        .filter_map(|r| r.length.map(|m| (r.state, m)))
        .fold(
            (0, 0),
            |best, (q, m)| if m > best.1 { (q, m) } else { best },
        )
}

/// Runs the census on the calling thread.
pub fn run_search(params: &SearchParams) -> Result<SearchReport> {
    run_search_parallel(params, 1)
}

/// Runs the census split over `workers` threads. The report does not
/// depend on `workers`.
pub fn run_search_parallel(params: &SearchParams, workers: usize) -> Result<SearchReport> {
    params.validate()?;
    let total = params.work_size();
    let workers = workers.max(1) as u128;
    let run = |start: u128, end: u128| -> Result<Accumulator> {
        let mut acc = Accumulator::new(params);
        for dfa in params.automata(start, end) {
            acc.add(&dfa)?;
        }
        Ok(acc)
    };
    let partials: Vec<Result<Accumulator>> = if workers == 1 {
        vec![run(0, total)]
    } else {
        let chunk = total.div_ceil(workers);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let start = (w * chunk).min(total);
                    let end = ((w + 1) * chunk).min(total);
                    scope.spawn(move || run(start, end))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };
    let mut merged = Accumulator::new(params);
    for partial in partials {
        merged = merged.merge(partial?);
    }
    Ok(merged.finish(params))
}
