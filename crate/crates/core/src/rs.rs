//! Robinson–Schensted row insertion.

use crate::symgroup::Permutation;
use crate::tableau::StandardTableau;

/// The insertion and recording tableaux (P, Q) of w(1), …, w(n).
pub fn rs_insert(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in w.images().iter().enumerate() {
        let mut bumped = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![bumped]);
                q.push(vec![step + 1]);
                break;
            }
            let row = &mut p[r];
            match row.iter().position(|&y| y > bumped) {
                Some(c) => {
                    std::mem::swap(&mut row[c], &mut bumped);
                    r += 1;
                }
                None => {
                    row.push(bumped);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    let p = StandardTableau::from_rows(&p).expect("insertion tableau is standard");
    let q = StandardTableau::from_rows(&q).expect("recording tableau is standard");
    (p, q)
}
