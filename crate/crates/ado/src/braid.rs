//! Braid words and the combinatorics of their closures.

use std::fmt;

use crate::error::{AdoError, Result};

/// A word in the braid group `B_n`, stored as nonzero generator indices:
/// `k` for `σ_k`, `−k` for `σ_k^{−1}`, with `1 ≤ |k| ≤ n − 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(AdoError::Parse("a braid needs at least 1 strand".into()));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(AdoError::Parse(format!(
                    "generator {g} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse a whitespace- or comma-separated list of nonzero integers,
    /// inferring the strand count as `max |k| + 1`.
    pub fn parse(text: &str) -> Result<Self> {
        let letters = Self::parse_letters(text)?;
        if letters.is_empty() {
            return Err(AdoError::Parse("empty braid word".into()));
        }
        let strands = letters
            .iter()
            .map(|g| g.unsigned_abs() as usize)
            .max()
            .unwrap()
            + 1;
        Self::new(strands, letters)
    }

    /// Parse with an explicit strand count; the word may be empty.
    pub fn parse_with_strands(text: &str, strands: usize) -> Result<Self> {
        Self::new(strands, Self::parse_letters(text)?)
    }

    fn parse_letters(text: &str) -> Result<Vec<i32>> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let g: i32 = tok
                .parse()
                .map_err(|_| AdoError::Parse(format!("bad braid letter {tok:?}")))?;
            if g == 0 {
                return Err(AdoError::Parse("braid letters must be nonzero".into()));
            }
            letters.push(g);
        }
        Ok(letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Writhe `e(β)`: the sum of the signs of the letters.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    /// The permutation induced on strand positions by reading the word
    /// left to right; `perm[i]` is where position `i` ends up.
    pub fn closure_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let k = g.unsigned_abs() as usize - 1;
            perm.swap(k, k + 1);
        }
        perm
    }

    /// Cycle lengths of the closure permutation, sorted; one cycle per
    /// component of the closure link.
    pub fn cycle_type(&self) -> Vec<usize> {
        let perm = self.closure_permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = perm[i];
            }
            cycles.push(len);
        }
        cycles.sort_unstable();
        cycles
    }

    /// The closure is a knot exactly when the permutation is a single cycle.
    pub fn closure_is_knot(&self) -> bool {
        self.cycle_type() == [self.strands]
    }

    pub fn require_knot(&self) -> Result<()> {
        if self.closure_is_knot() {
            Ok(())
        } else {
            Err(AdoError::NotAKnot {
                cycle_type: self.cycle_type(),
            })
        }
    }

    /// `σ_k^{±1} · β · σ_k^{∓1}` — same closure.
    pub fn conjugate(&self, g: i32) -> Result<BraidWord> {
        if g == 0 || g.unsigned_abs() as usize >= self.strands {
            return Err(AdoError::Parse(format!(
                "conjugating generator {g} out of range"
            )));
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        Self::new(self.strands, letters)
    }

    /// Markov stabilization: append `σ_n^{±1}` on one extra strand — same
    /// closure.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let g = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { g } else { -g });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Mirror image: invert every crossing.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|g| -g).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, [{}])", self.strands, self)
    }
}
