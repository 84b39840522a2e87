use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite word over an alphabet `0..k`, stored as letter indices.
///
/// Letters are only checked against an alphabet when the word is applied
/// to an automaton.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// Reads a word written with the default letters `a`, `b`, `c`, ...
    /// Returns `None` on any other character.
    pub fn from_alpha(text: &str) -> Option<Self> {
        text.chars()
            .map(|c| c.is_ascii_lowercase().then(|| (c as u8 - b'a') as usize))
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    /// The concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Renders with default letter names; use [`crate::Dfa::render_word`] for
/// an automaton's own names.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let names = crate::dfa::default_letter_names(self.0.iter().max().map_or(0, |m| m + 1));
        let sep = if names.iter().all(|s| s.len() == 1) {
            ""
        } else {
            " "
        };
        for (i, &l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            f.write_str(&names[l])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_round_trip() {
        let w = Word::from_alpha("abbaba").unwrap();
        assert_eq!(w.letters(), &[0, 1, 1, 0, 1, 0]);
        assert_eq!(w.to_string(), "abbaba");
        assert_eq!(Word::from_alpha("ab1"), None);
        assert_eq!(Word::empty().to_string(), "ε");
    }

    #[test]
    fn concat() {
        let u = Word::from_alpha("ab").unwrap();
        let v = Word::from_alpha("ba").unwrap();
        assert_eq!(u.concat(&v), Word::from_alpha("abba").unwrap());
    }
}
