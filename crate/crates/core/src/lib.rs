//! Analysis of synchronizing deterministic finite automata.
//!
//! A complete automaton [`Dfa`] acts on sets of states: the image `Q·w` of
//! the whole state set under a word `w` shrinks or stays the same with each
//! letter. This crate computes
//!
//! * shortest reset words, whose image is a single state ([`sync`]);
//! * shortest words whose image avoids a given state, and the exact verdict
//!   of the two-part avoidance lemma on an automaton ([`avoid`]);
//! * exhaustive and random censuses of small automata, up to isomorphism
//!   if asked ([`search`]).
//!
//! ```
//! use syncdfa::{avoid, parse_dfa, sync, Word};
//!
//! let dfa = parse_dfa("4 2\n1 0\n0 2\n2 3\n0 1\n").unwrap();
//! let reset = Word::from_alpha("abbababba").unwrap();
//! assert_eq!(dfa.image(&reset).unwrap().len(), 1);
//!
//! let q0 = avoid::shortest_avoiding_word(&dfa, 0).unwrap();
//! assert_eq!(q0.length, Some(6));
//! assert!(sync::is_synchronizing(&dfa));
//! ```
//!
//! The guide in `book/` walks through the concepts; its code samples are
//! compiled and run as doc-tests of this crate.

pub mod avoid;
mod bfs;
pub mod canonical;
mod dfa;
mod error;
pub mod format;
pub mod ratio;
pub mod search;
mod state_set;
pub mod sync;
mod word;

pub use bfs::DEFAULT_MAX_STATES;
pub use canonical::{canonical_form, is_isomorphic};
pub use dfa::Dfa;
pub use error::{Error, Result};
pub use format::{parse_any, parse_dfa, serialize_dfa, to_dot};
pub use state_set::StateSet;
pub use word::Word;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;

    #[doc = include_str!("../../../book/src/automata.md")]
    pub struct Automata;

    #[doc = include_str!("../../../book/src/synchronization.md")]
    pub struct Synchronization;

    #[doc = include_str!("../../../book/src/avoidance.md")]
    pub struct Avoidance;

    #[doc = include_str!("../../../book/src/search.md")]
    pub struct Search;

    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct CommandLine;
}
