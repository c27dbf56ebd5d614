//! Generator-word syntax: `L12 P12 E1 EPS12 R1 B1 DEL PERM(1 2)(3 4)`.
//!
//! Juxtaposition is left-to-right composition and `^k` raises a factor to an
//! integer power (`^-1` for the inverse). Two-index names take either two
//! single digits (`L12`) or a parenthesised pair (`L(1,12)`, `L(a1,b1)`),
//! where `a_i`/`b_i` refer to the paired basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::Naming;

use super::{Endo, GeneratorName, Permutation};

/// A named generator raised to an integer power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    pub name: GeneratorName,
    pub power: i64,
}

impl Factor {
    pub fn new(name: GeneratorName) -> Self {
        Factor { name, power: 1 }
    }

    pub fn inv(name: GeneratorName) -> Self {
        Factor { name, power: -1 }
    }

    pub fn pow(name: GeneratorName, power: i64) -> Self {
        Factor { name, power }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            1 => write!(f, "{}", self.name),
            p => write!(f, "{}^{p}", self.name),
        }
    }
}

/// A word in named generators, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GenWord(pub Vec<Factor>);

impl GenWord {
    pub fn new() -> Self {
        GenWord(Vec::new())
    }

    pub fn of(factors: impl IntoIterator<Item = Factor>) -> Self {
        GenWord(factors.into_iter().collect())
    }

    pub fn single(name: GeneratorName) -> Self {
        GenWord(vec![Factor::new(name)])
    }

    pub fn then(mut self, other: &GenWord) -> Self {
        self.0.extend(other.0.iter().cloned());
        self
    }

    pub fn inverse(&self) -> Self {
        GenWord(
            self.0
                .iter()
                .rev()
                .map(|f| Factor { name: f.name.clone(), power: -f.power })
                .collect(),
        )
    }

    /// Evaluates the word at rank `n`.
    pub fn eval(&self, n: usize) -> Result<Endo> {
        let mut acc = Endo::identity(n);
        for f in &self.0 {
            let g = Endo::named(&f.name, n)?.pow(f.power)?;
            acc = acc.then(&g);
        }
        Ok(acc)
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        Parser { src: s.as_bytes(), pos: 0, n }.word()
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ID");
        }
        let parts: Vec<String> = self.0.iter().map(Factor::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn word(&mut self) -> Result<GenWord> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(GenWord(factors));
            }
            let tag = self.take_while(|c| c.is_ascii_uppercase()).to_string();
            if tag.is_empty() {
                return Err(self.err("expected a generator name"));
            }
            let name = match tag.as_str() {
                "ID" => None,
                "DEL" => Some(GeneratorName::Delta),
                "PERM" => Some(GeneratorName::Perm(self.cycles()?)),
                "L" | "P" | "EPS" => {
                    let (i, j) = self.two_indices()?;
                    Some(match tag.as_str() {
                        "L" => GeneratorName::Lambda(i, j),
                        "P" => GeneratorName::Rho(i, j),
                        _ => GeneratorName::Epsilon(i, j),
                    })
                }
                "E" => Some(GeneratorName::Inversion(self.one_index(true)?)),
                "R" => Some(GeneratorName::R(self.one_index(false)?)),
                "B" => Some(GeneratorName::Beta(self.one_index(false)?)),
                other => return Err(self.err(&format!("unknown generator `{other}`"))),
            };
            let power = self.power()?;
            if let Some(name) = name {
                factors.push(Factor { name, power });
            }
        }
    }

    fn power(&mut self) -> Result<i64> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        let k: i64 = digits.parse().map_err(|_| self.err("expected an exponent"))?;
        Ok(if neg { -k } else { k })
    }

    /// An index argument: a number, or `a3`/`b3` naming the paired basis.
    fn index_arg(&mut self, allow_paired: bool) -> Result<usize> {
        self.skip_ws();
        let tok = self.take_while(|c| c.is_ascii_alphanumeric()).to_string();
        if let Ok(k) = tok.parse::<usize>() {
            return Ok(k);
        }
        if allow_paired {
            return Naming::Paired.parse_symbol(&tok);
        }
        Err(self.err(&format!("bad index `{tok}`")))
    }

    fn two_indices(&mut self) -> Result<(usize, usize)> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let i = self.index_arg(true)?;
            self.expect(b',')?;
            let j = self.index_arg(true)?;
            self.expect(b')')?;
            return Ok((i, j));
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        match digits.as_bytes() {
            [i, j] => Ok(((i - b'0') as usize, (j - b'0') as usize)),
            _ => Err(self.err("expected two single-digit indices or `(i,j)`")),
        }
    }

    fn one_index(&mut self, allow_paired: bool) -> Result<usize> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let i = self.index_arg(allow_paired)?;
            self.expect(b')')?;
            return Ok(i);
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| self.err("expected an index"))
    }

    fn cycles(&mut self) -> Result<Permutation> {
        let mut cycles = Vec::new();
        while self.peek() == Some(b'(') {
            self.pos += 1;
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(b',') => self.pos += 1,
                    Some(c) if c.is_ascii_digit() => {
                        let d = self.take_while(|c| c.is_ascii_digit());
                        cycle.push(d.parse().unwrap());
                    }
                    _ => return Err(self.err("unterminated cycle")),
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Permutation::from_cycles(&cycles, self.n)
    }
}
