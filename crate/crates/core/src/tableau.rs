//! Standard Young tableaux stored as lattice words.
//!
//! Entry `j` of the word is the row containing `j`. Rows and grids are
//! derived views.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::{format_word, parse_word};

/// Default bound on |λ| for [`enumerate_syt`].
pub const DEFAULT_SYT_LIMIT: usize = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    word: Vec<usize>,
}

/// Checks the lattice property, returning the first failing prefix length.
fn lattice_violation(word: &[usize]) -> Option<usize> {
    let mut counts: Vec<usize> = Vec::new();
    for (pos, &letter) in word.iter().enumerate() {
        if letter == 0 {
            return Some(pos + 1);
        }
        if counts.len() < letter {
            counts.resize(letter, 0);
        }
        counts[letter - 1] += 1;
        if letter > 1 && counts[letter - 1] > counts[letter - 2] {
            return Some(pos + 1);
        }
    }
    None
}

pub fn is_lattice_word(word: &[usize]) -> bool {
    lattice_violation(word).is_none()
}

impl StandardTableau {
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        match lattice_violation(&word) {
            Some(position) => Err(Error::NotLatticeWord { position }),
            None => Ok(StandardTableau { word }),
        }
    }

    /// Builds a tableau from its rows, checking standardness.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut word = vec![0; n];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau("empty row".into()));
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
            }
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > n || word[x - 1] != 0 {
                    return Err(Error::InvalidTableau(format!("entry {x} is repeated or out of range")));
                }
                word[x - 1] = r + 1;
                if c > 0 && row[c - 1] >= x {
                    return Err(Error::InvalidTableau("rows must increase".into()));
                }
                if r > 0 && rows[r - 1][c] >= x {
                    return Err(Error::InvalidTableau("columns must increase".into()));
                }
            }
        }
        Ok(StandardTableau { word })
    }

    pub fn empty() -> Self {
        StandardTableau { word: Vec::new() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.word.iter().copied().max().unwrap_or(0)
    }

    pub fn shape(&self) -> Partition {
        let mut parts = vec![0; self.num_rows()];
        for &r in &self.word {
            parts[r - 1] += 1;
        }
        Partition::new(parts).expect("lattice words have partition shapes")
    }

    /// Row containing entry `j` (both 1-indexed).
    pub fn row_of(&self, j: usize) -> usize {
        self.word[j - 1]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.num_rows()];
        for (i, &r) in self.word.iter().enumerate() {
            rows[r - 1].push(i + 1);
        }
        rows
    }

    /// σ[j]: the tableau on the entries 1..=j.
    pub fn restrict(&self, j: usize) -> Result<Self> {
        if j > self.word.len() {
            return Err(Error::IndexOutOfRange { index: j, len: self.word.len() });
        }
        Ok(StandardTableau { word: self.word[..j].to_vec() })
    }

    /// σ̄: delete the box containing n.
    pub fn without_last(&self) -> Self {
        let mut word = self.word.clone();
        word.pop();
        StandardTableau { word }
    }

    pub fn concat(&self, other: &StandardTableau) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        StandardTableau { word }
    }

    /// Deletes the first row and renumbers.
    pub fn crop(&self) -> Self {
        StandardTableau { word: crop_word(&self.word) }
    }

    /// Entries j with j+1 in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&j| self.word[j] > self.word[j - 1])
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }
}

/// Deletes every 1 and decrements the remaining letters.
pub fn crop_word(word: &[usize]) -> Vec<usize> {
    word.iter().filter(|&&x| x > 1).map(|&x| x - 1).collect()
}

/// Σ (j−1) over positions j holding the letter 1.
pub fn sumone(word: &[usize]) -> usize {
    word.iter()
        .enumerate()
        .filter(|(_, &x)| x == 1)
        .map(|(i, _)| i)
        .sum()
}

pub fn tableau_from_word(word: Vec<usize>) -> Result<StandardTableau> {
    StandardTableau::from_word(word)
}

/// All standard tableaux of shape λ in lexicographic order of lattice words.
pub fn enumerate_syt(lambda: &Partition) -> Result<Vec<StandardTableau>> {
    enumerate_syt_with_limit(lambda, DEFAULT_SYT_LIMIT)
}

pub fn enumerate_syt_with_limit(lambda: &Partition, limit: usize) -> Result<Vec<StandardTableau>> {
    let n = lambda.size();
    if n > limit {
        return Err(Error::SizeLimitExceeded { size: n, limit });
    }
    fn go(parts: &[usize], filled: &mut [usize], word: &mut Vec<usize>, out: &mut Vec<StandardTableau>) {
        if word.len() == parts.iter().sum::<usize>() {
            out.push(StandardTableau { word: word.clone() });
            return;
        }
        for r in 0..parts.len() {
            if filled[r] < parts[r] && (r == 0 || filled[r] < filled[r - 1]) {
                filled[r] += 1;
                word.push(r + 1);
                go(parts, filled, word, out);
                word.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![0; lambda.len()];
    go(lambda.parts(), &mut filled, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// All standard tableaux of size n, grouped by shape.
pub fn all_syt(n: usize) -> Result<Vec<StandardTableau>> {
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        out.extend(enumerate_syt(&lambda)?);
    }
    Ok(out)
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.word))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::from_word(parse_word(s)?)
    }
}

/// Renders rows as "1 3 4 6 / 2 7 / 5 8".
pub fn format_rows(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}
