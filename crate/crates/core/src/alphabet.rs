//! Alphabets, symbols and finite words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter in its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(usize);

impl Symbol {
    pub fn new(index: usize) -> Self {
        Symbol(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite, totally ordered set of named symbols.
///
/// Declaration order is the order used for canonical numbering and for
/// every lexicographic tie-break in the crate.
#[derive(Debug, Clone)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl PartialOrd for Alphabet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Alphabet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.names.cmp(&other.names)
    }
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if out.index.contains_key(&name) {
                return Err(Error::DuplicateSymbol(name));
            }
            out.index.insert(name.clone(), out.names.len());
            out.names.push(name);
        }
        if out.names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(Symbol)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, symbol: Symbol) -> &str {
        &self.names[symbol.0]
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).copied().map(Symbol)
    }

    /// Named union: this alphabet's symbols first, then the other's new
    /// symbols in their declared order.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut out = self.clone();
        for name in &other.names {
            if !out.index.contains_key(name) {
                out.index.insert(name.clone(), out.names.len());
                out.names.push(name.clone());
            }
        }
        out
    }

    /// Maps a symbol of `self` to the same-named symbol of `target`.
    pub fn translate(&self, symbol: Symbol, target: &Alphabet) -> Option<Symbol> {
        target.lookup(self.name(symbol))
    }

    /// True when every symbol name uses a single character, in which case
    /// words print without separators.
    pub fn is_compact(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }
}

/// A finite word over an alphabet.
///
/// Ordered shortlex: shorter words first, then lexicographically by
/// symbol index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WordBlock(Vec<Symbol>);

impl WordBlock {
    pub fn new(letters: Vec<Symbol>) -> Self {
        WordBlock(letters)
    }

    pub fn empty() -> Self {
        WordBlock(Vec::new())
    }

    /// Parses a word from symbol names. Compact alphabets accept
    /// concatenated characters; otherwise names are separated by commas
    /// or whitespace.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(WordBlock::empty());
        }
        let tokens: Vec<String> = if alphabet.is_compact() && !text.contains([',', ' ']) {
            text.chars().map(String::from).collect()
        } else {
            text.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(String::from)
                .collect()
        };
        tokens
            .into_iter()
            .map(|t| alphabet.lookup(&t).ok_or(Error::UnknownSymbol(t)))
            .collect::<Result<Vec<_>>>()
            .map(WordBlock)
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn extended(&self, symbol: Symbol) -> WordBlock {
        let mut letters = self.0.clone();
        letters.push(symbol);
        WordBlock(letters)
    }

    pub fn prefix(&self, len: usize) -> WordBlock {
        WordBlock(self.0[..len].to_vec())
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayWord<'a> {
        DisplayWord {
            word: self,
            alphabet,
        }
    }
}

impl From<Vec<Symbol>> for WordBlock {
    fn from(letters: Vec<Symbol>) -> Self {
        WordBlock(letters)
    }
}

impl PartialOrd for WordBlock {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WordBlock {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

pub struct DisplayWord<'a> {
    word: &'a WordBlock,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("ε");
        }
        let sep = if self.alphabet.is_compact() { "" } else { "," };
        for (i, s) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            f.write_str(self.alphabet.name(*s))?;
        }
        Ok(())
    }
}
