//! Words over a finite generating set.

use std::fmt;

use super::GroupError;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn gen(gen: usize) -> Self {
        Letter { gen, inv: false }
    }

    pub fn inverse_of(gen: usize) -> Self {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A word, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `gen^exp`; negative exponents give inverse letters.
    pub fn power_of(gen: usize, exp: i64) -> Self {
        let letter = if exp < 0 {
            Letter::inverse_of(gen)
        } else {
            Letter::gen(gen)
        };
        Word(vec![letter; exp.unsigned_abs() as usize])
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v)
    }

    /// Free reduction (cancels adjacent `x x^-1`).
    pub fn reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free and cyclic reduction.
    pub fn cyclically_reduced(&self) -> Word {
        let mut w = self.reduced().0;
        while w.len() >= 2 && w[0] == w[w.len() - 1].inverse() {
            w.pop();
            w.remove(0);
        }
        Word(w)
    }

    /// If the word is `g^k` for a single generator (k may be negative).
    pub fn as_power(&self) -> Option<(usize, i64)> {
        let first = *self.0.first()?;
        if self.0.iter().all(|&l| l == first) {
            let k = self.len() as i64;
            Some((first.gen, if first.inv { -k } else { k }))
        } else {
            None
        }
    }

    /// Parses words such as `a b a^-1`, `(ab)^9`, `x1*x2^-1`.
    ///
    /// Generator names are a letter followed by optional digits, so `ab` is
    /// two letters and `x12` is one.
    pub fn parse(text: &str, names: &[String]) -> Result<Word, GroupError> {
        let mut parser = WordParser {
            chars: text.chars().collect(),
            pos: 0,
            names,
            text,
        };
        let w = parser.sequence()?;
        parser.skip_ws();
        if parser.pos != parser.chars.len() {
            return Err(parser.error("unexpected character"));
        }
        Ok(w)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        // Runs of the same letter are written as powers.
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l.inv { -run } else { run };
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let name = self
                .names
                .get(l.gen)
                .cloned()
                .unwrap_or_else(|| format!("g{}", l.gen + 1));
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
    text: &'a str,
}

impl WordParser<'_> {
    fn error(&self, what: &str) -> GroupError {
        GroupError::Parse(format!("{what} at offset {} in {:?}", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && (self.chars[self.pos].is_whitespace() || self.chars[self.pos] == '*') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<Word, GroupError> {
        let mut out = Word::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(out),
                Some('1') if out.is_empty() => {
                    // `1` denotes the empty word.
                    self.pos += 1;
                }
                Some(_) => {
                    let atom = self.atom()?;
                    let exp = self.exponent()?;
                    out = out.concat(&atom.pow(exp));
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Word, GroupError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sequence()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let gen = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| GroupError::Parse(format!("unknown generator {name:?}")))?;
                Ok(Word(vec![Letter::gen(gen)]))
            }
            _ => Err(self.error("expected generator or '('")),
        }
    }

    fn exponent(&mut self) -> Result<i64, GroupError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("bad exponent"))
    }
}
