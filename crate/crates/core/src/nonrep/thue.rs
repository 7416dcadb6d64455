use serde::Serialize;

use crate::error::{Error, Result};

/// A word with no factor of the form `ww`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareFreeWord {
    symbols: Vec<char>,
}

impl SquareFreeWord {
    pub fn new(symbols: Vec<char>) -> Result<Self> {
        if !is_square_free(&symbols) {
            return Err(Error::invalid("word contains a square"));
        }
        Ok(SquareFreeWord { symbols })
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The word over `{0, 1, 2}` with `a ↦ 0`, `b ↦ 1`, `c ↦ 2`.
    pub fn as_colours(&self) -> Vec<usize> {
        self.symbols.iter().map(|&s| s as usize - 'a' as usize).collect()
    }
}

impl std::fmt::Display for SquareFreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// First `n` letters of the fixed point of `a → abc, b → ac, c → b`.
pub fn thue_word(n: usize) -> SquareFreeWord {
    let mut word = vec!['a'];
    while word.len() < n {
        word = word
            .iter()
            .flat_map(|&s| match s {
                'a' => &['a', 'b', 'c'][..],
                'b' => &['a', 'c'][..],
                _ => &['b'][..],
            })
            .copied()
            .collect();
    }
    word.truncate(n);
    SquareFreeWord { symbols: word }
}

/// Checks every pair of adjacent equal-length blocks.
pub fn is_square_free<T: PartialEq>(word: &[T]) -> bool {
    let n = word.len();
    (1..=n / 2).all(|s| (0..=n - 2 * s).all(|i| word[i..i + s] != word[i + s..i + 2 * s]))
}
