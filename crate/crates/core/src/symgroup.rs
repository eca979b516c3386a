//! Permutations in one-line notation, Bruhat order and parabolic cosets.
//!
//! Composition is `(u·v)(i) = u(v(i))`, so `w·t` permutes positions and
//! `s·w` permutes values.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{x} is repeated or outside 1..={n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// w₀ = n…21.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// s_j swaps j and j+1.
    pub fn simple(n: usize, j: usize) -> Self {
        Self::transposition(n, j, j + 1)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// w(i), 1-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation { images: other.images.iter().map(|&x| self.images[x - 1]).collect() }
    }

    /// w·t_{i,j}: swaps positions i and j.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    /// s_j·w: swaps the values j and j+1.
    pub fn swap_values(&self, j: usize) -> Self {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| if x == j { j + 1 } else if x == j + 1 { j } else { x })
                .collect(),
        }
    }

    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        self.lehmer_code().iter().sum()
    }

    /// c_i = #{j > i : w(i) > w(j)}.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count())
            .collect()
    }

    pub fn from_lehmer(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut images = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c >= n - i {
                return Err(Error::InvalidCode { position: i + 1 });
            }
            images.push(pool.remove(c));
        }
        Ok(Permutation { images })
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.images[i - 1] > self.images[i]).collect()
    }
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

pub fn lehmer_code(w: &Permutation) -> Vec<usize> {
    w.lehmer_code()
}

pub fn from_lehmer(code: &[usize]) -> Result<Permutation> {
    Permutation::from_lehmer(code)
}

pub fn longest_element(n: usize) -> Permutation {
    Permutation::longest(n)
}

fn check_size(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left, right })
    }
}

/// Bruhat comparison by the sorted-prefix dominance criterion.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_size(v.n(), w.n())?;
    Ok(bruhat_leq_unchecked(v, w))
}

pub(crate) fn bruhat_leq_unchecked(v: &Permutation, w: &Permutation) -> bool {
    let n = v.n();
    let mut a: Vec<usize> = Vec::with_capacity(n);
    let mut b: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n {
        let x = v.images[i];
        let y = w.images[i];
        a.insert(a.partition_point(|&z| z < x), x);
        b.insert(b.partition_point(|&z| z < y), y);
        if a.iter().zip(&b).any(|(p, q)| p > q) {
            return false;
        }
    }
    true
}

/// w_{0,λ}: reverses each Young block.
pub fn w0_young(lambda: &Partition) -> Permutation {
    let mut images = Vec::with_capacity(lambda.size());
    let mut start = 0;
    for &p in lambda.parts() {
        images.extend((start + 1..=start + p).rev());
        start += p;
    }
    Permutation { images }
}

/// Block index (0-based) of each value 1..=n.
fn block_of(lambda: &Partition) -> Vec<usize> {
    lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(b, &p)| std::iter::repeat_n(b, p))
        .collect()
}

/// Values of each block appear in increasing order in one-line notation.
pub fn is_min_coset(w: &Permutation, lambda: &Partition) -> Result<bool> {
    check_size(w.n(), lambda.size())?;
    let inv = w.inverse();
    let sums = lambda.partial_sums();
    Ok((1..w.n()).all(|j| sums.contains(&j) || inv.apply(j) < inv.apply(j + 1)))
}

/// ⌊w⌋^λ: sorts each block's values into increasing order over its positions.
pub fn min_coset_rep(w: &Permutation, lambda: &Partition) -> Result<Permutation> {
    check_size(w.n(), lambda.size())?;
    let blocks = block_of(lambda);
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    for (pos, &x) in w.images.iter().enumerate() {
        positions[blocks[x - 1]].push(pos);
    }
    let mut images = vec![0; w.n()];
    let mut start = 0;
    for (b, pos) in positions.iter().enumerate() {
        for (k, &p) in pos.iter().enumerate() {
            images[p] = start + k + 1;
        }
        start += lambda.parts()[b];
    }
    Ok(Permutation { images })
}

/// w = w_λ · ⌊w⌋^λ with w_λ in the Young subgroup.
pub fn parabolic_factor(w: &Permutation, lambda: &Partition) -> Result<(Permutation, Permutation)> {
    let rep = min_coset_rep(w, lambda)?;
    let w_lambda = w.compose(&rep.inverse());
    Ok((w_lambda, rep))
}

/// All minimal coset representatives for λ, in lexicographic order.
pub fn min_coset_reps(lambda: &Partition) -> Vec<Permutation> {
    fn go(
        lambda: &[usize],
        starts: &[usize],
        used: &mut [usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if used.iter().zip(lambda).all(|(u, p)| u == p) {
            out.push(Permutation { images: cur.clone() });
            return;
        }
        // Blocks in order of their next value gives lexicographic output.
        for b in 0..lambda.len() {
            if used[b] < lambda[b] {
                cur.push(starts[b] + used[b] + 1);
                used[b] += 1;
                go(lambda, starts, used, cur, out);
                used[b] -= 1;
                cur.pop();
            }
        }
    }
    let parts = lambda.parts();
    let mut starts = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    let mut out = Vec::new();
    go(parts, &starts, &mut vec![0; parts.len()], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All of S_n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    min_coset_reps(&Partition::new(vec![1; n]).expect("all-ones is a partition"))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format_word(&self.images))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(crate::parse_word(s)?)
    }
}
