//! Reading permutations of a tableau and the Springer fiber combinatorics
//! built on them: Richardson envelopes, totally nonnegative cells, Deodhar
//! smoothness certificates, K-components and column-concatenation tests.

use crate::error::{Error, Result};
use crate::evacuation::{evacuate, evacuation};
use crate::partition::Partition;
use crate::richardson::{is_richardson_def, prime_decomposition};
use crate::symgroup::{bruhat_leq, bruhat_leq_unchecked, is_min_coset, min_coset_reps, Permutation};
use crate::tableau::StandardTableau;

/// Default bound on |λ| for cell enumeration.
pub const DEFAULT_CELL_LIMIT: usize = 7;

/// A pair v ≤ w with dim = ℓ(w) − ℓ(v).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellIndex {
    pub v: Permutation,
    pub w: Permutation,
    pub dim: usize,
}

fn top_down_reading(sigma: &StandardTableau) -> Vec<usize> {
    sigma.rows().concat()
}

/// v_σ, where v_σ⁻¹ is the top-down reading word of σ∨.
pub fn reading_v(sigma: &StandardTableau) -> Permutation {
    let dual = evacuation(sigma);
    Permutation::from_vec_unchecked(top_down_reading(&dual)).inverse()
}

/// w_σ, where w₀w_σ⁻¹w₀ is the bottom-up reading word of σ.
pub fn reading_w(sigma: &StandardTableau) -> Permutation {
    let n = sigma.size();
    let reading: Vec<usize> = sigma.rows().into_iter().rev().flatten().collect();
    let conj: Vec<usize> = (1..=n).map(|i| n + 1 - reading[n - i]).collect();
    Permutation::from_vec_unchecked(conj).inverse()
}

/// Lehmer code of w_σ read off the tableau: code_{n+1−j} = #{i < j : row(i) < row(j)}.
pub fn lehmer_w_direct(sigma: &StandardTableau) -> Vec<usize> {
    let word = sigma.word();
    let n = word.len();
    let mut code = vec![0; n];
    for j in 0..n {
        code[n - 1 - j] = word[..j].iter().filter(|&&r| r < word[j]).count();
    }
    code
}

/// ℓ(w_σ) − ℓ(v_σ).
pub fn length_gap(sigma: &StandardTableau) -> isize {
    reading_w(sigma).length() as isize - reading_v(sigma).length() as isize
}

pub fn is_richardson_gap(sigma: &StandardTableau) -> bool {
    length_gap(sigma) == sigma.shape().n_lambda() as isize
}

pub fn richardson_envelope(sigma: &StandardTableau) -> Result<CellIndex> {
    let v = reading_v(sigma);
    let w = reading_w(sigma);
    if !bruhat_leq_unchecked(&v, &w) {
        return Err(Error::Inconsistent(format!("v = {v} is not below w = {w}")));
    }
    let dim = w.length() - v.length();
    Ok(CellIndex { v, w, dim })
}

fn excluded_simple_indices(lambda: &Partition) -> Vec<usize> {
    let sums = lambda.partial_sums();
    (1..lambda.size()).filter(|j| !sums.contains(j)).collect()
}

fn in_z_unchecked(v: &Permutation, w: &Permutation, js: &[usize]) -> bool {
    bruhat_leq_unchecked(v, w) && js.iter().all(|&j| !bruhat_leq_unchecked(&v.swap_values(j), w))
}

/// Membership in Z_λ.
pub fn in_z(v: &Permutation, w: &Permutation, lambda: &Partition) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch { left: v.n(), right: w.n() });
    }
    if !is_min_coset(v, lambda)? || !is_min_coset(w, lambda)? {
        return Ok(false);
    }
    Ok(in_z_unchecked(v, w, &excluded_simple_indices(lambda)))
}

fn check_cell_limit(lambda: &Partition, limit: usize) -> Result<()> {
    if lambda.size() > limit {
        Err(Error::SizeLimitExceeded { size: lambda.size(), limit })
    } else {
        Ok(())
    }
}

/// All cells of Z_λ, sorted by (dim, v, w).
pub fn enumerate_cells(lambda: &Partition) -> Result<Vec<CellIndex>> {
    enumerate_cells_with_limit(lambda, DEFAULT_CELL_LIMIT)
}

pub fn enumerate_cells_with_limit(lambda: &Partition, limit: usize) -> Result<Vec<CellIndex>> {
    check_cell_limit(lambda, limit)?;
    let reps = min_coset_reps(lambda);
    let lengths: Vec<usize> = reps.iter().map(Permutation::length).collect();
    let js = excluded_simple_indices(lambda);
    let mut cells = Vec::new();
    for (a, v) in reps.iter().enumerate() {
        for (b, w) in reps.iter().enumerate() {
            if lengths[b] >= lengths[a] && in_z_unchecked(v, w, &js) {
                cells.push(CellIndex { v: v.clone(), w: w.clone(), dim: lengths[b] - lengths[a] });
            }
        }
    }
    cells.sort_by(|x, y| (x.dim, &x.v, &x.w).cmp(&(y.dim, &y.v, &y.w)));
    Ok(cells)
}

/// Cells of dimension n(λ), sorted by (v, w).
pub fn top_cells(lambda: &Partition) -> Result<Vec<CellIndex>> {
    top_cells_with_limit(lambda, DEFAULT_CELL_LIMIT)
}

pub fn top_cells_with_limit(lambda: &Partition, limit: usize) -> Result<Vec<CellIndex>> {
    check_cell_limit(lambda, limit)?;
    let top = lambda.n_lambda();
    let reps = min_coset_reps(lambda);
    let lengths: Vec<usize> = reps.iter().map(Permutation::length).collect();
    let js = excluded_simple_indices(lambda);
    let mut cells = Vec::new();
    for (a, v) in reps.iter().enumerate() {
        for (b, w) in reps.iter().enumerate() {
            if lengths[b] == lengths[a] + top && in_z_unchecked(v, w, &js) {
                cells.push(CellIndex { v: v.clone(), w: w.clone(), dim: top });
            }
        }
    }
    cells.sort();
    Ok(cells)
}

/// (v_σ, w_σ) ∈ Z_λ, tested through the simple reflections of S_λ.
pub fn is_richardson_bruhat(sigma: &StandardTableau) -> bool {
    let v = reading_v(sigma);
    let w = reading_w(sigma);
    excluded_simple_indices(&sigma.shape())
        .into_iter()
        .all(|j| !bruhat_leq_unchecked(&v.swap_values(j), &w))
}

/// {(i, j) : v < v·t_{i,j} ≤ w}.
pub fn deodhar_set(v: &Permutation, w: &Permutation) -> Result<Vec<(usize, usize)>> {
    if !bruhat_leq(v, w)? {
        return Err(Error::NotComparable);
    }
    let n = v.n();
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            if v.apply(i) < v.apply(j) && bruhat_leq_unchecked(&v.swap_positions(i, j), w) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// Deodhar's criterion for the Schubert variety of `w` at the point `v`.
pub fn schubert_smooth_at(w: &Permutation, v: &Permutation) -> Result<bool> {
    let count = deodhar_set(v, w)?.len();
    Ok(count == w.length() - v.length())
}

pub fn richardson_smooth(v: &Permutation, w: &Permutation) -> Result<bool> {
    if !schubert_smooth_at(w, v)? {
        return Ok(false);
    }
    let w0 = Permutation::longest(v.n());
    schubert_smooth_at(&v.compose(&w0), &w.compose(&w0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectionMode {
    /// Read pairs from σ∨; they index deodhar_set(v_σ, w_σ).
    Evacuation,
    /// Read pairs from σ; they index deodhar_set(w_σw₀, v_σw₀).
    Plain,
}

/// Pairs i < j with i in a higher row than j and i the largest entry ≤ j of its row.
pub fn reflection_pairs_tableau(sigma: &StandardTableau, mode: ReflectionMode) -> Result<Vec<(usize, usize)>> {
    if !is_richardson_def(sigma) {
        return Err(Error::NotRichardson);
    }
    let tab = match mode {
        ReflectionMode::Evacuation => evacuation(sigma),
        ReflectionMode::Plain => sigma.clone(),
    };
    let word = tab.word();
    let mut out = Vec::new();
    for j in 1..=word.len() {
        for row in 1..word[j - 1] {
            let i = (1..j).rev().find(|&i| word[i - 1] == row).expect("rows above are nonempty before j");
            out.push((i, j));
        }
    }
    out.sort();
    Ok(out)
}

/// Whether the permutation flag lies in the Springer fiber of Jordan type λ.
pub fn permutation_flag_in_fiber(w: &Permutation, lambda: &Partition) -> Result<bool> {
    is_min_coset(w, lambda)
}

/// σ(I): builds σ(I)∨ by the colour-change rule and evacuates it.
pub fn k_component_tableau(subset: &[usize], n: usize) -> Result<StandardTableau> {
    let mut black = vec![false; n + 1];
    for &i in subset {
        if i == 0 || i > n {
            return Err(Error::ElementOutOfRange { element: i, n });
        }
        black[i] = true;
    }
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut rows = Vec::new();
    while !remaining.is_empty() {
        let mut row = vec![remaining[0]];
        let mut rest = Vec::new();
        for pair in remaining.windows(2) {
            if black[pair[0]] != black[pair[1]] {
                row.push(pair[1]);
            } else {
                rest.push(pair[1]);
            }
        }
        rows.push(row);
        remaining = rest;
    }
    let dual = StandardTableau::from_rows(&rows)
        .map_err(|e| Error::Inconsistent(format!("colour-change rows are not standard: {e}")))?;
    Ok(evacuation(&dual))
}

/// Every prime factor is a single column 12…m.
pub fn is_pr_richardson_component(sigma: &StandardTableau) -> Result<bool> {
    let factors = prime_decomposition(sigma.word())?;
    Ok(factors
        .iter()
        .all(|f| f.iter().enumerate().all(|(i, &x)| x == i + 1)))
}

/// First slide columns c_1, …, c_{k−1} of evacuate(σ∨), where n lies in row k of σ.
pub fn first_slide_columns(sigma: &StandardTableau) -> Vec<usize> {
    let Some(&k) = sigma.word().last() else {
        return Vec::new();
    };
    let trace = evacuate(&evacuation(sigma));
    let path = &trace.paths[0];
    (1..k).map(|i| path.column_in_row(i).unwrap_or(0)).collect()
}
