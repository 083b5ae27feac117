//! Values of the term engine: cells of the free category on a polygraph, in
//! dimensions 0 to 2.
//!
//! A 1-cell is a path of 1-generators. A 2-cell is a vertical stack of
//! layers over a source word, each layer rewriting one contiguous block of
//! the current word by a single 2-generator; the whisker contexts are
//! implicit in the offsets. Two stacks denote the same cell exactly when
//! they are related by swapping independent adjacent layers, and
//! canonicalization picks the least such stack.

use std::fmt;

/// A 1-cell: a path of 1-generators. The start point is kept explicitly so
/// that empty paths (identities of 0-cells) are distinguished.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub start: String,
    pub letters: Vec<String>,
}

impl Word {
    pub fn empty(start: &str) -> Word {
        Word { start: start.to_string(), letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// One layer of a 2-cell: a single 2-generator applied at a horizontal
/// offset into the current word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layer {
    pub offset: usize,
    pub gen: String,
}

/// A 2-cell: layers applied bottom-to-top starting from `src`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub src: Word,
    pub layers: Vec<Layer>,
}

impl NormalForm {
    pub fn identity(src: Word) -> NormalForm {
        NormalForm { src, layers: Vec::new() }
    }
}

/// A cell of the free category, in dimension 0, 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero(String),
    One(Word),
    Two(NormalForm),
}

impl Cell {
    pub fn dim(&self) -> usize {
        match self {
            Cell::Zero(_) => 0,
            Cell::One(_) => 1,
            Cell::Two(_) => 2,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "id({})", self.start)
        } else {
            write!(f, "{}", self.letters.join(" *0 "))
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Zero(x) => write!(f, "{x}"),
            Cell::One(w) => write!(f, "{w}"),
            Cell::Two(nf) => write!(f, "{nf}"),
        }
    }
}

impl fmt::Display for NormalForm {
    /// Layers are shown positionally; the full whiskered term is produced by
    /// the engine, which knows the generator boundaries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "id({})", self.src);
        }
        let parts: Vec<String> = self
            .layers
            .iter()
            .map(|l| format!("{}@{}", l.gen, l.offset))
            .collect();
        write!(f, "[{} ; {}]", self.src, parts.join(" "))
    }
}
