//! The Richardson property, prime factorization, the deletion bijection Ψ
//! and generation of Richardson words from their crops.

use crate::error::{Error, Result};
use crate::evacuation::all_slides_l;
use crate::partition::Partition;
use crate::tableau::{crop_word, is_lattice_word, StandardTableau};

/// Tableau form: for each j outside the first row, the last entry of σ[j−1]
/// in the row above j exceeds every entry of σ[j−1] in the rows from j's row down.
pub fn is_richardson_def(sigma: &StandardTableau) -> bool {
    let word = sigma.word();
    for j in 0..word.len() {
        let r = word[j];
        if r < 2 {
            continue;
        }
        let Some(last_above) = (0..j).rev().find(|&i| word[i] == r - 1) else {
            return false;
        };
        if (0..j).any(|i| word[i] >= r && i > last_above) {
            return false;
        }
    }
    true
}

/// Row-by-row variant: the last entry of σ[j−1] in every row above j exceeds
/// every entry of σ[j−1] in the rows from j's row down.
pub fn is_richardson_strong(sigma: &StandardTableau) -> bool {
    let word = sigma.word();
    for j in 0..word.len() {
        let r = word[j];
        if r < 2 {
            continue;
        }
        let Some(b) = (0..j).rev().find(|&i| word[i] >= r) else {
            continue;
        };
        for row in 1..r {
            if !(b + 1..j).any(|i| word[i] == row) {
                return false;
            }
        }
    }
    true
}

/// Word form: scanning left from each letter r ≥ 2, the letter r−1 is met
/// before any letter ≥ r.
pub fn is_richardson_word(word: &[usize]) -> bool {
    if !is_lattice_word(word) {
        return false;
    }
    for j in 0..word.len() {
        let r = word[j];
        if r < 2 {
            continue;
        }
        let hit = word[..j].iter().rev().find(|&&x| x == r - 1 || x >= r);
        if hit != Some(&(r - 1)) {
            return false;
        }
    }
    true
}

/// Crop form: crop(σ) is Richardson and each second-row entry j has j−1 in row 1.
pub fn is_richardson_crop(sigma: &StandardTableau) -> bool {
    let mut word = sigma.word().to_vec();
    loop {
        if word.iter().all(|&x| x == 1) {
            return true;
        }
        for j in 1..word.len() {
            if word[j] == 2 && word[j - 1] != 1 {
                return false;
            }
        }
        if word.first() == Some(&2) {
            return false;
        }
        word = crop_word(&word);
    }
}

/// Slide form: every evacuation slide is an L-slide.
pub fn is_richardson_slides(sigma: &StandardTableau) -> bool {
    all_slides_l(sigma)
}

fn require_richardson(word: &[usize]) -> Result<()> {
    if is_richardson_word(word) {
        Ok(())
    } else {
        Err(Error::NotRichardson)
    }
}

/// Splits a Richardson word into prime Richardson factors, scanning from the right.
pub fn prime_decomposition(word: &[usize]) -> Result<Vec<Vec<usize>>> {
    require_richardson(word)?;
    let mut rest = word;
    let mut factors = Vec::new();
    while let Some(&last) = rest.last() {
        let mut pos = rest.len() - 1;
        let mut need = last - 1;
        while need >= 1 {
            pos -= 1;
            if rest[pos] == need {
                need -= 1;
            }
        }
        factors.push(rest[pos..].to_vec());
        rest = &rest[..pos];
    }
    factors.reverse();
    Ok(factors)
}

/// Prime test via the first-occurrence characterization.
pub fn is_prime(word: &[usize]) -> Result<bool> {
    require_richardson(word)?;
    let Some(&ell) = word.iter().max() else {
        return Err(Error::EmptyWord);
    };
    if word.iter().filter(|&&x| x == ell).count() != 1 || word.last() != Some(&ell) {
        return Ok(false);
    }
    let first = |x: usize| word.iter().position(|&y| y == x).expect("lattice words contain every smaller letter");
    for j in 1..ell {
        let (a, b) = (first(j), first(j + 1));
        if word[a + 1..b].iter().any(|&x| x + 1 > j) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn largest_letter(word: &[usize]) -> usize {
    word.iter().copied().max().unwrap_or(0)
}

/// Ψ: writes r = s∘t∘(ℓ−1)∘u∘ℓ and returns t∘s∘u.
pub fn psi(word: &[usize]) -> Result<Vec<usize>> {
    if !is_prime(word)? {
        return Err(Error::NotPrime);
    }
    let ell = largest_letter(word);
    if ell < 2 {
        return Err(Error::LargestLetterTooSmall { ell });
    }
    if ell == 2 {
        return Ok(Vec::new());
    }
    let mid = word.iter().position(|&x| x == ell - 1).expect("prime words contain ℓ−1");
    let prefix = &word[..mid];
    let u = &word[mid + 1..word.len() - 1];
    let factors = prime_decomposition(prefix)?;
    let (s, t) = factors.split_first().ok_or(Error::NotPrime)?;
    let mut out: Vec<usize> = t.concat();
    out.extend_from_slice(s);
    out.extend_from_slice(u);
    Ok(out)
}

/// Ψ⁻¹ onto prime words with largest letter `ell`.
pub fn psi_inverse(word: &[usize], ell: usize) -> Result<Vec<usize>> {
    if ell < 2 {
        return Err(Error::LargestLetterTooSmall { ell });
    }
    require_richardson(word)?;
    let found = largest_letter(word);
    if found + 2 != ell {
        return Err(Error::LetterMismatch { expected: ell - 2, found });
    }
    if ell == 2 {
        return Ok(vec![1, 2]);
    }
    let factors = prime_decomposition(word)?;
    let k = factors
        .iter()
        .position(|f| largest_letter(f) == ell - 2)
        .expect("some factor carries the largest letter");
    let mut out = factors[k].clone();
    for f in &factors[..k] {
        out.extend_from_slice(f);
    }
    out.push(ell - 1);
    for f in &factors[k + 1..] {
        out.extend_from_slice(f);
    }
    out.push(ell);
    Ok(out)
}

/// The Richardson words whose crop is `s`, with `extra_ones` more 1's than
/// second-row letters. Yields in lexicographic order of insertion positions.
#[derive(Clone, Debug)]
pub struct RichardsonExtensions {
    base: Vec<usize>,
    slots: Vec<usize>,
    state: Option<Vec<usize>>,
}

impl Iterator for RichardsonExtensions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let state = self.state.as_mut()?;
        let mut out = Vec::with_capacity(self.base.len() + state.len());
        let mut inserts = state.iter().map(|&i| self.slots[i]).peekable();
        for pos in 0..=self.base.len() {
            while inserts.peek() == Some(&pos) {
                out.push(1);
                inserts.next();
            }
            if pos < self.base.len() {
                out.push(self.base[pos]);
            }
        }
        match state.iter().rposition(|&i| i + 1 < self.slots.len()) {
            Some(k) => {
                let v = state[k] + 1;
                for x in &mut state[k..] {
                    *x = v;
                }
            }
            None => self.state = None,
        }
        Some(out)
    }
}

pub fn richardson_extensions(s: &[usize], extra_ones: usize) -> Result<RichardsonExtensions> {
    require_richardson(s)?;
    let mut base = Vec::with_capacity(2 * s.len());
    for &x in s {
        if x == 1 {
            base.extend_from_slice(&[1, 2]);
        } else {
            base.push(x + 1);
        }
    }
    let slots: Vec<usize> = (0..=base.len()).filter(|&p| base.get(p) != Some(&2)).collect();
    Ok(RichardsonExtensions { base, slots, state: Some(vec![0; extra_ones]) })
}

/// Extensions of `s` having shape λ; empty when λ does not crop to shape(s).
pub fn richardson_extensions_for_shape(s: &[usize], lambda: &Partition) -> Result<RichardsonExtensions> {
    let mut it = richardson_extensions(s, 0)?;
    let sigma = StandardTableau::from_word(s.to_vec())?;
    let second = sigma.shape().part(1);
    if lambda.without_first_row() != sigma.shape() || lambda.part(1) < second {
        it.state = None;
        return Ok(it);
    }
    it.state = Some(vec![0; lambda.part(1) - second]);
    Ok(it)
}
