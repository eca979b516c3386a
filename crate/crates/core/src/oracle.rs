//! Brute-force reference computations.
//!
//! These are deliberately naive and share no code paths with the
//! algorithms they check, apart from basic data types.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::symgroup::Permutation;
use crate::tableau::is_lattice_word;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lehmer rank of w in 0..n!.
fn rank(w: &Permutation) -> usize {
    let img = w.images();
    let n = img.len();
    let mut r = 0;
    for i in 0..n {
        let c = (i + 1..n).filter(|&j| img[i] > img[j]).count();
        r = r * (n - i) + c;
    }
    r
}

fn unrank(n: usize, mut r: usize) -> Permutation {
    let mut digits = vec![0; n];
    for i in (0..n).rev() {
        digits[i] = r % (n - i);
        r /= n - i;
    }
    let mut pool: Vec<usize> = (1..=n).collect();
    let images = digits.into_iter().map(|c| pool.remove(c)).collect();
    Permutation::new(images).expect("unranked Lehmer codes are permutations")
}

/// Bruhat order as the transitive closure of w·t ≤ w over inversions (i, j)
/// of w, stored as one down-set bitset per permutation.
pub struct BruhatClosure {
    n: usize,
    words: usize,
    down: Vec<Vec<u64>>,
}

impl BruhatClosure {
    pub fn new(n: usize) -> Self {
        assert!(n <= 7, "closure tables are only built for n ≤ 7");
        let total = factorial(n);
        let words = total.div_ceil(64);
        let mut perms: Vec<Permutation> = (0..total).map(|r| unrank(n, r)).collect();
        perms.sort_by_key(|w| w.inversions().len());
        let mut down: Vec<Vec<u64>> = vec![Vec::new(); total];
        for w in &perms {
            let me = rank(w);
            let mut set = vec![0u64; words];
            set[me / 64] |= 1 << (me % 64);
            for (i, j) in w.inversions() {
                let lower = rank(&w.swap_positions(i, j));
                for (a, b) in set.iter_mut().zip(&down[lower]) {
                    *a |= *b;
                }
            }
            down[me] = set;
        }
        BruhatClosure { n, words, down }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, v: &Permutation, w: &Permutation) -> bool {
        let a = rank(v);
        debug_assert!(a / 64 < self.words);
        self.down[rank(w)][a / 64] >> (a % 64) & 1 == 1
    }
}

/// f^λ by the hook length formula.
pub fn hook_length_count(lambda: &Partition) -> BigUint {
    let parts = lambda.parts();
    let mut hooks = BigUint::one();
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let leg = parts[i + 1..].iter().filter(|&&q| q > j).count();
            hooks *= p - j + leg;
        }
    }
    let fact: BigUint = (1..=lambda.size()).map(BigUint::from).product();
    fact / hooks
}

/// Motzkin paths of length n counted by enumerating all 3^n step sequences.
pub fn motzkin_paths(n: usize) -> BigUint {
    let mut count = 0u64;
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let mut height: i64 = 0;
        let mut ok = true;
        for _ in 0..n {
            height += (c % 3) as i64 - 1;
            c /= 3;
            if height < 0 {
                ok = false;
                break;
            }
        }
        if ok && height == 0 {
            count += 1;
        }
    }
    BigUint::from(count)
}

/// Factorization into lattice words by cutting wherever the suffix is itself
/// a lattice word.
pub fn lattice_factors(word: &[usize]) -> Vec<Vec<usize>> {
    let mut cuts = vec![0];
    for p in 1..word.len() {
        if is_lattice_word(&word[p..]) {
            cuts.push(p);
        }
    }
    cuts.push(word.len());
    if word.is_empty() {
        return Vec::new();
    }
    cuts.windows(2).map(|c| word[c[0]..c[1]].to_vec()).collect()
}

/// Minimal-length element of the coset S_λ·w by scanning the whole coset.
pub fn min_coset_rep_brute(w: &Permutation, lambda: &Partition) -> Permutation {
    let n = w.n();
    let mut block = vec![0; n + 1];
    let mut v = 1;
    for (b, &p) in lambda.parts().iter().enumerate() {
        for _ in 0..p {
            block[v] = b;
            v += 1;
        }
    }
    let mut best: Option<Permutation> = None;
    for r in 0..factorial(n) {
        let u = unrank(n, r);
        if (1..=n).any(|i| block[u.apply(i)] != block[i]) {
            continue;
        }
        let cand = u.compose(w);
        if best.as_ref().is_none_or(|b| cand.length() < b.length()) {
            best = Some(cand);
        }
    }
    best.expect("the coset is nonempty")
}

/// Inversions of a word in the letters 1 and 2 (pairs 2 before 1).
pub fn binary_inversions(word: &[usize]) -> usize {
    let mut twos = 0;
    let mut inv = 0;
    for &x in word {
        if x == 2 {
            twos += 1;
        } else {
            inv += twos;
        }
    }
    inv
}

/// Every filling of δ^(m) with entries in [n−1] (first row optionally fixed)
/// checked cell by cell after the fact.
pub fn guemes_fillings_brute(m: usize, n: usize, first_row: Option<&[usize]>) -> Vec<Vec<Vec<usize>>> {
    let shape: Vec<usize> = (1..m).rev().collect();
    let free: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .filter(|&(i, _)| first_row.is_none() || i > 0)
        .collect();
    let base = n.saturating_sub(1);
    let mut out = Vec::new();
    if base == 0 && !free.is_empty() {
        return out;
    }
    let total = if free.is_empty() { 1 } else { base.pow(free.len() as u32) };
    for code in 0..total {
        let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
        if let Some(first) = first_row {
            if !rows.is_empty() {
                rows[0] = first.to_vec();
            }
        }
        let mut c = code;
        for &(i, j) in &free {
            rows[i][j] = c % base + 1;
            c /= base;
        }
        let ok = (0..rows.len()).all(|i| {
            (0..rows[i].len()).all(|j| {
                let x = rows[i][j];
                let row_ok = j == 0 || rows[i][j - 1] < x;
                let col_ok = i == 0 || rows[i - 1][j] < x;
                let diag_ok = i == 0 || x <= rows[i - 1][j + 1];
                row_ok && col_ok && diag_ok
            })
        });
        if ok {
            out.push(rows);
        }
    }
    out.sort();
    out
}

/// Count of Richardson tableaux of shape λ by testing every lattice word.
pub fn richardson_count_brute(lambda: &Partition, test: impl Fn(&[usize]) -> bool) -> BigUint {
    let n = lambda.size();
    let ell = lambda.len();
    let mut count = BigUint::zero();
    let mut word = vec![1usize; n];
    if ell == 0 {
        return BigUint::one();
    }
    loop {
        let mut mult = vec![0; ell];
        for &x in &word {
            mult[x - 1] += 1;
        }
        if mult == lambda.parts() && is_lattice_word(&word) && test(&word) {
            count += 1u32;
        }
        let Some(k) = word.iter().rposition(|&x| x < ell) else {
            break;
        };
        word[k] += 1;
        for x in &mut word[k + 1..] {
            *x = 1;
        }
    }
    count
}
