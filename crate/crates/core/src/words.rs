//! Words in the generators `x`, `y` of the q-Serre algebra: signatures,
//! reducibility, enumeration of irreducible words and spanning checks.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};

/// Longest length accepted by [`enumerate_irreducible`].
pub const ENUMERATION_CAP: usize = 16;
/// Longest length accepted by [`spanning_check`].
pub const SPANNING_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Letter {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word of length `n` whose letters are the bits of `bits`, most
    /// significant first, `0 = x`.
    pub fn from_bits(bits: u64, n: usize) -> Word {
        Word((0..n).map(|j| if bits >> (n - 1 - j) & 1 == 0 { Letter::X } else { Letter::Y }).collect())
    }

    /// Exchange `x` and `y`.
    pub fn mirror(&self) -> Word {
        Word(self.0.iter().map(|l| l.swap()).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(Error::Parse(format!("letter {other:?} is not x or y"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Lengths of the maximal constant runs, and the first letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub parts: Vec<usize>,
    pub leading_letter: Option<Letter>,
}

pub fn signature(w: &Word) -> Signature {
    let mut parts: Vec<usize> = Vec::new();
    let mut prev = None;
    for &l in &w.0 {
        if prev == Some(l) {
            *parts.last_mut().expect("run started") += 1;
        } else {
            parts.push(1);
            prev = Some(l);
        }
    }
    Signature { parts, leading_letter: w.0.first().copied() }
}

/// Some interior run is no longer than its left neighbour and strictly
/// shorter than its right neighbour.
pub fn parts_reducible(p: &[usize]) -> bool {
    p.windows(3).any(|w| w[0] >= w[1] && w[1] < w[2])
}

/// Strictly increasing up to some run, weakly decreasing after it.
pub fn parts_unimodal(p: &[usize]) -> bool {
    let mut t = 0;
    while t + 1 < p.len() && p[t] < p[t + 1] {
        t += 1;
    }
    p[t..].windows(2).all(|w| w[0] >= w[1])
}

pub fn is_reducible(w: &Word) -> bool {
    parts_reducible(&signature(w).parts)
}

pub fn is_irreducible_unimodal(w: &Word) -> bool {
    parts_unimodal(&signature(w).parts)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    Ok(())
}

/// Irreducible words of length `n` in lexicographic order (`x < y`).
pub fn enumerate_irreducible(n: usize) -> Result<Vec<Word>> {
    check_cap(n, ENUMERATION_CAP)?;
    Ok((0..1u64 << n).map(|b| Word::from_bits(b, n)).filter(|w| !is_reducible(w)).collect())
}

/// One row of the word-count table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordCount {
    pub n: usize,
    pub irreducible: usize,
    pub total: u64,
    /// Whether the run-pattern test and the unimodality test agree on every word of length `n`.
    pub equivalence_ok: bool,
}

pub fn word_count(n: usize) -> Result<WordCount> {
    check_cap(n, ENUMERATION_CAP)?;
    let total = 1u64 << n;
    let mut irreducible = 0;
    let mut equivalence_ok = true;
    for b in 0..total {
        let p = signature(&Word::from_bits(b, n)).parts;
        let red = parts_reducible(&p);
        if !red {
            irreducible += 1;
        }
        equivalence_ok &= red != parts_unimodal(&p);
    }
    Ok(WordCount { n, irreducible, total, equivalence_ok })
}

pub fn word_table(max_len: usize) -> Result<Vec<WordCount>> {
    check_cap(max_len, ENUMERATION_CAP)?;
    (0..=max_len).map(word_count).collect()
}

/// Ranks of the operator images of all words and of the irreducible words
/// of length at most `n`, with `x -> a`, `y -> astar`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningCheck {
    pub max_len: usize,
    pub irreducible_rank: usize,
    pub total_rank: usize,
    pub holds: bool,
}

pub fn spanning_check(a: &Matrix, astar: &Matrix, n: usize) -> Result<SpanningCheck> {
    check_cap(n, SPANNING_CAP)?;
    if !a.is_square() || a.rows() != astar.rows() || !astar.is_square() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: astar.rows() });
    }
    let dim = a.rows();
    let mut all = EchelonBasis::new();
    let mut irr = EchelonBasis::new();
    let mut layer = vec![(Word::default(), Matrix::identity(dim))];
    for len in 0..=n {
        for (w, m) in &layer {
            let flat = m.entries().to_vec();
            if !is_reducible(w) {
                irr.insert(flat.clone());
            }
            all.insert(flat);
        }
        if len == n {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|(w, m)| {
                [(Letter::X, a), (Letter::Y, astar)].map(|(l, g)| {
                    let mut next = w.clone();
                    next.0.push(l);
                    (next, m * g)
                })
            })
            .collect();
    }
    let (irreducible_rank, total_rank) = (irr.len(), all.len());
    Ok(SpanningCheck { max_len: n, irreducible_rank, total_rank, holds: irreducible_rank == total_rank })
}
