//! Guemes tableaux and the Schubert expansion of hook-shaped components.

use crate::error::{Error, Result};
use crate::springer::reading_w;
use crate::symgroup::Permutation;
use crate::tableau::StandardTableau;

/// A filling of the staircase (m−1, m−2, …, 1): rows and columns strictly
/// increase, diagonals weakly increase from southwest to northeast.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GuemesTableau {
    rows: Vec<Vec<usize>>,
}

fn staircase_violation(rows: &[Vec<usize>]) -> Option<String> {
    let m = rows.len() + 1;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != m - 1 - i {
            return Some(format!("row {} has length {}, expected {}", i + 1, row.len(), m - 1 - i));
        }
        for j in 0..row.len() {
            let x = row[j];
            if j > 0 && row[j - 1] >= x {
                return Some(format!("row {} is not strictly increasing", i + 1));
            }
            if i > 0 {
                if rows[i - 1][j] >= x {
                    return Some(format!("column {} is not strictly increasing", j + 1));
                }
                if x > rows[i - 1][j + 1] {
                    return Some(format!("diagonal through ({}, {}) decreases", i + 1, j + 1));
                }
            }
        }
    }
    None
}

impl GuemesTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        match staircase_violation(&rows) {
            Some(msg) => Err(Error::InvalidGuemes(msg)),
            None => Ok(GuemesTableau { rows }),
        }
    }

    /// The staircase parameter m.
    pub fn m(&self) -> usize {
        self.rows.len() + 1
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// τ_{i,j}, 1-indexed.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// x_τ = c_1⋯c_m with c_j = s_{τ_{m−j,j}} ⋯ s_{τ_{1,j}}.
pub fn x_tau(tau: &GuemesTableau, n: usize) -> Result<Permutation> {
    let max = n.saturating_sub(1);
    let top = tau.max_entry();
    if top > max || tau.rows.iter().flatten().any(|&x| x == 0) {
        return Err(Error::EntryOutOfRange { entry: top, max });
    }
    let m = tau.m();
    let mut x = Permutation::identity(n);
    for j in 1..m {
        for i in (1..=m - j).rev() {
            let s = tau.entry(i, j);
            x = x.swap_positions(s, s + 1);
        }
    }
    Ok(x)
}

/// ℓ(x_τ) = C(m, 2).
pub fn is_reduced(tau: &GuemesTableau, n: usize) -> Result<bool> {
    let m = tau.m();
    Ok(x_tau(tau, n)?.length() == m * (m - 1) / 2)
}

/// All Guemes tableaux of shape δ^(m) with entries in [n−1], optionally with
/// a pinned first row, in row-major lexicographic order.
pub fn guemes_tableaux(m: usize, n: usize, first_row: Option<&[usize]>) -> Vec<GuemesTableau> {
    let m = m.max(1);
    let mut rows: Vec<Vec<usize>> = (0..m - 1).map(|i| vec![0; m - 1 - i]).collect();
    if let Some(first) = first_row {
        if m < 2 {
            return if first.is_empty() { vec![GuemesTableau { rows }] } else { Vec::new() };
        }
        if first.len() != m - 1 || first.windows(2).any(|w| w[0] >= w[1]) {
            return Vec::new();
        }
        if first.iter().any(|&x| x == 0 || x + 1 > n) {
            return Vec::new();
        }
        rows[0] = first.to_vec();
    }
    let cells: Vec<(usize, usize)> = (0..m.saturating_sub(1))
        .flat_map(|i| (0..m - 1 - i).map(move |j| (i, j)))
        .filter(|&(i, _)| first_row.is_none() || i > 0)
        .collect();
    let mut out = Vec::new();
    fill(&mut rows, &cells, 0, n.saturating_sub(1), &mut out);
    out
}

fn fill(rows: &mut Vec<Vec<usize>>, cells: &[(usize, usize)], k: usize, max: usize, out: &mut Vec<GuemesTableau>) {
    if k == cells.len() {
        out.push(GuemesTableau { rows: rows.clone() });
        return;
    }
    let (i, j) = cells[k];
    let mut lo = 1;
    let mut hi = max;
    if j > 0 {
        lo = lo.max(rows[i][j - 1] + 1);
    }
    if i > 0 {
        lo = lo.max(rows[i - 1][j] + 1);
        hi = hi.min(rows[i - 1][j + 1]);
    }
    for x in lo..=hi {
        rows[i][j] = x;
        fill(rows, cells, k + 1, max, out);
    }
    rows[i][j] = 0;
}

/// The pinned first row w_σ⁻¹(n) < … < w_σ⁻¹(k+1) for σ of shape (k, 1^{n−k}).
pub fn hook_first_row(sigma: &StandardTableau) -> Result<Vec<usize>> {
    let k = sigma.shape().hook_arm().ok_or(Error::NotHookShape)?;
    let n = sigma.size();
    let winv = reading_w(sigma).inverse();
    Ok((k + 1..=n).rev().map(|i| winv.apply(i)).collect())
}

/// Indices w₀·x_τ of the Schubert classes in the expansion for a hook σ,
/// sorted, one per reduced Guemes tableau.
pub fn hook_expansion(sigma: &StandardTableau) -> Result<Vec<Permutation>> {
    let first = hook_first_row(sigma)?;
    let n = sigma.size();
    let m = first.len() + 1;
    let w0 = Permutation::longest(n);
    let mut out = Vec::new();
    for tau in guemes_tableaux(m, n, Some(&first)) {
        if is_reduced(&tau, n)? {
            out.push(w0.compose(&x_tau(&tau, n)?));
        }
    }
    out.sort();
    Ok(out)
}
