//! Freely reduced words in a free group of fixed rank.
//!
//! Generators are numbered `1..=rank`. Every [`Word`] is kept freely reduced,
//! so two words represent the same group element exactly when their letter
//! sequences agree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub inverted: bool,
}

impl Letter {
    pub const fn gen(index: usize) -> Self {
        Letter { index, inverted: false }
    }

    pub const fn inv(index: usize) -> Self {
        Letter { index, inverted: true }
    }

    pub fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, inverted: !self.inverted }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverted != other.inverted
    }
}

/// How generator indices are rendered and parsed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Naming {
    /// `a1, a2, a3, ...`
    #[default]
    Plain,
    /// `a1, b1, a2, b2, ...` for indices `1, 2, 3, 4, ...`.
    Paired,
}

impl Naming {
    pub fn symbol(self, index: usize) -> String {
        match self {
            Naming::Plain => format!("a{index}"),
            Naming::Paired if index % 2 == 1 => format!("a{}", index.div_ceil(2)),
            Naming::Paired => format!("b{}", index / 2),
        }
    }

    /// Parses `a3` / `b2` into a plain generator index.
    pub fn parse_symbol(self, s: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("bad generator symbol `{s}`"));
        let (head, tail) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
        let k: usize = tail.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match (self, head) {
            (Naming::Plain, "a") => Ok(k),
            (Naming::Paired, "a") => Ok(2 * k - 1),
            (Naming::Paired, "b") => Ok(2 * k),
            _ => Err(bad()),
        }
    }
}

/// Index of the paired-basis generator `a_i` (that is, `2i - 1`).
pub const fn pa(i: usize) -> usize {
    2 * i - 1
}

/// Index of the paired-basis generator `b_i` (that is, `2i`).
pub const fn pb(i: usize) -> usize {
    2 * i
}

/// A freely reduced word in the free group of rank `rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(rank: usize) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// The single-letter word `a_index`.
    pub fn generator(index: usize, rank: usize) -> Result<Self> {
        Word::reduce([Letter::gen(index)], rank)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>, rank: usize) -> Result<Self> {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if l.index == 0 || l.index > rank {
                return Err(Error::IndexOutOfRange { index: l.index, rank });
            }
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank: self.rank, letters })
    }

    pub fn invert(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Replaces `a_i` by `images[i - 1]` and `a_i^-1` by its inverse.
    ///
    /// The output lives in the rank shared by the images.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        if images.len() != self.rank {
            return Err(Error::ArityMismatch { expected: self.rank, got: images.len() });
        }
        let out_rank = images.first().map_or(0, Word::rank);
        if let Some(w) = images.iter().find(|w| w.rank != out_rank) {
            return Err(Error::RankMismatch { left: out_rank, right: w.rank });
        }
        Ok(self.substitute_unchecked(images, out_rank))
    }

    pub(crate) fn substitute_unchecked(&self, images: &[Word], out_rank: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let img = &images[l.index - 1].letters;
            if l.inverted {
                for &x in img.iter().rev() {
                    push_reduced(&mut letters, x.inverse());
                }
            } else {
                for &x in img {
                    push_reduced(&mut letters, x);
                }
            }
        }
        Word { rank: out_rank, letters }
    }

    /// Exponent sum of each generator, indexed from 0.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rank];
        for l in &self.letters {
            sums[l.index - 1] += l.sign();
        }
        sums
    }

    /// Parses `a1 a2^-1 a1` (or `1` for the empty word).
    pub fn parse(s: &str, rank: usize, naming: Naming) -> Result<Word> {
        let mut raw = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (sym, inverted) = match tok.strip_suffix("^-1") {
                Some(sym) => (sym, true),
                None => (tok, false),
            };
            let index = naming.parse_symbol(sym)?;
            raw.push(Letter { index, inverted });
        }
        Word::reduce(raw, rank)
    }

    pub fn display(&self, naming: Naming) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let s = naming.symbol(l.index);
                if l.inverted {
                    s + "^-1"
                } else {
                    s
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Naming::Plain))
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    match letters.last() {
        Some(&last) if last.cancels(l) => {
            letters.pop();
        }
        _ => letters.push(l),
    }
}
