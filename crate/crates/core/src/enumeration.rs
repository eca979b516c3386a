//! Exact and q-counts of Richardson tableaux, Motzkin numbers and the
//! generating-function recurrences.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::QPolynomial;

/// Default bound on n for [`motzkin_refinement_check`].
pub const DEFAULT_REFINEMENT_LIMIT: usize = 40;

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// (λ_i + λ_{i+2} + … + λ_ℓ, λ_{i+1} + … + λ_ℓ) for i = 1..ℓ−1.
fn binomial_arguments(lambda: &Partition) -> Vec<(usize, usize)> {
    let parts = lambda.parts();
    let ell = parts.len();
    (0..ell.saturating_sub(1))
        .map(|i| {
            let tail: usize = parts[i + 1..].iter().sum();
            let skip: usize = parts[i + 2..].iter().sum();
            (parts[i] + skip, tail)
        })
        .collect()
}

pub fn count_richardson(lambda: &Partition) -> BigUint {
    binomial_arguments(lambda)
        .into_iter()
        .map(|(n, k)| binomial(n, k))
        .product()
}

pub fn q_count_richardson(lambda: &Partition) -> QPolynomial {
    let parts = lambda.parts();
    let mut shift = 0;
    for i in 1..parts.len() {
        for j in i..parts.len() {
            shift += parts[i] * parts[j];
        }
    }
    binomial_arguments(lambda)
        .into_iter()
        .fold(QPolynomial::one(), |acc, (n, k)| &acc * &QPolynomial::q_binomial(n, k))
        .shift(shift)
}

/// M_0, …, M_n.
pub fn motzkin_table(n: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let next = if i == 0 {
            BigUint::one()
        } else {
            let mut acc = m[i - 1].clone();
            for k in 0..i.saturating_sub(1) {
                acc += &m[k] * &m[i - 2 - k];
            }
            acc
        };
        m.push(next);
    }
    m
}

pub fn motzkin(n: usize) -> BigUint {
    motzkin_table(n).pop().expect("table is nonempty")
}

/// T_n, the number of involutions in S_n.
pub fn involutions(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for k in 2..=n {
        let next = &cur + &prev * (k - 1);
        prev = cur;
        cur = next;
    }
    cur
}

/// M_n / T_n.
pub fn richardson_proportion(n: usize) -> BigRational {
    BigRational::new(BigInt::from(motzkin(n)), BigInt::from(involutions(n)))
}

/// Per-shape counts for λ ⊢ n together with their total, checked against M_n.
pub fn motzkin_refinement_check(n: usize) -> Result<(Vec<(Partition, BigUint)>, BigUint)> {
    motzkin_refinement_check_with_limit(n, DEFAULT_REFINEMENT_LIMIT)
}

pub fn motzkin_refinement_check_with_limit(n: usize, limit: usize) -> Result<(Vec<(Partition, BigUint)>, BigUint)> {
    if n > limit {
        return Err(Error::SizeLimitExceeded { size: n, limit });
    }
    let rows: Vec<(Partition, BigUint)> = Partition::all(n)
        .into_iter()
        .map(|lambda| {
            let c = count_richardson(&lambda);
            (lambda, c)
        })
        .collect();
    let total: BigUint = rows.iter().map(|(_, c)| c).sum();
    let expected = motzkin(n);
    if total != expected {
        return Err(Error::Inconsistent(format!("shape counts sum to {total}, expected M_{n} = {expected}")));
    }
    Ok((rows, total))
}

/// Dense multivariate power series truncated at per-variable degree caps.
#[derive(Clone, Debug)]
struct Series {
    caps: Vec<usize>,
    strides: Vec<usize>,
    coeffs: Vec<BigUint>,
}

impl Series {
    fn zero(caps: &[usize]) -> Self {
        let mut strides = Vec::with_capacity(caps.len());
        let mut size = 1;
        for &c in caps {
            strides.push(size);
            size *= c + 1;
        }
        Series { caps: caps.to_vec(), strides, coeffs: vec![BigUint::zero(); size] }
    }

    fn one(caps: &[usize]) -> Self {
        let mut s = Self::zero(caps);
        s.coeffs[0] = BigUint::one();
        s
    }

    /// x_i (0-based), or zero if its cap is 0.
    fn variable(caps: &[usize], i: usize) -> Self {
        let mut s = Self::zero(caps);
        if caps[i] > 0 {
            let idx = s.strides[i];
            s.coeffs[idx] = BigUint::one();
        }
        s
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        self.caps
            .iter()
            .map(|&c| {
                let e = idx % (c + 1);
                idx /= c + 1;
                e
            })
            .collect()
    }

    fn mul(&self, other: &Series) -> Series {
        let mut out = Series::zero(&self.caps);
        let expo: Vec<Vec<usize>> = (0..self.coeffs.len()).map(|i| self.exponents(i)).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if expo[i].iter().zip(&expo[j]).zip(&self.caps).all(|((x, y), c)| x + y <= *c) {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    fn add_one(mut self) -> Series {
        self.coeffs[0] += 1u32;
        self
    }

    /// 1/(1 − f) for f without constant term.
    fn geometric(f: &Series) -> Series {
        let depth: usize = f.caps.iter().sum();
        let mut g = Series::one(&f.caps);
        for _ in 0..depth {
            g = f.mul(&g).add_one();
        }
        g
    }
}

/// Coefficient of x^α in the generating function of Richardson words on the
/// alphabet [ℓ], built from P_ℓ = P_{ℓ−1}·R_{ℓ−2}·x_ℓ and
/// R_ℓ = R_{ℓ−1}/(1 − P_ℓ·R_{ℓ−1}).
pub fn gf_coefficient(ell: usize, alpha: &[usize]) -> BigUint {
    if alpha.iter().skip(ell).any(|&a| a > 0) {
        return BigUint::zero();
    }
    let mut caps: Vec<usize> = alpha.iter().take(ell).copied().collect();
    caps.resize(ell, 0);
    if ell == 0 {
        return BigUint::one();
    }
    // r[k] = R_k, p = P_k.
    let mut r: Vec<Series> = vec![Series::one(&caps)];
    let mut p = Series::variable(&caps, 0);
    for k in 1..=ell {
        if k > 1 {
            p = p.mul(&r[k - 2]).mul(&Series::variable(&caps, k - 1));
        }
        let denom = Series::geometric(&p.mul(&r[k - 1]));
        r.push(r[k - 1].mul(&denom));
    }
    r[ell].coeffs.last().cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn counts() {
        assert_eq!(count_richardson(&lam("3,2,1")), big(8));
        assert_eq!(count_richardson(&lam("4,2,2")), big(15));
        assert_eq!(count_richardson(&lam("3,3,3")), big(1));
        assert_eq!(count_richardson(&lam("2,2")), big(1));
        assert_eq!(count_richardson(&lam("3,1")), big(3));
        assert_eq!(count_richardson(&Partition::empty()), big(1));
    }

    #[test]
    fn q_counts() {
        assert_eq!(q_count_richardson(&lam("3,2,1")).to_string(), "q^7 + 2*q^8 + 2*q^9 + 2*q^10 + q^11");
        assert_eq!(q_count_richardson(&lam("6")), QPolynomial::one());
        assert_eq!(q_count_richardson(&lam("2,2")), QPolynomial::monomial(1, 4));
    }

    #[test]
    fn motzkin_and_involutions() {
        let m: Vec<u64> = motzkin_table(10).iter().map(|x| u64::try_from(x).unwrap()).collect();
        assert_eq!(m, vec![1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]);
        assert_eq!(motzkin(4), big(9));
        assert_eq!(involutions(4), big(10));
        assert_eq!(involutions(0), big(1));
        assert_eq!(involutions(6), big(76));
        let r = richardson_proportion(4);
        assert_eq!((r.numer().clone(), r.denom().clone()), (BigInt::from(9), BigInt::from(10)));
        assert_eq!(richardson_proportion(0), BigRational::one());
        let r6 = richardson_proportion(6);
        assert_eq!((r6.numer().clone(), r6.denom().clone()), (BigInt::from(51), BigInt::from(76)));
    }

    #[test]
    fn refinement() {
        let (rows, total) = motzkin_refinement_check(4).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(total, big(9));
        assert_eq!(motzkin_refinement_check(0).unwrap().1, big(1));
        assert_eq!(motzkin_refinement_check(10).unwrap().1, big(2188));
        assert!(matches!(motzkin_refinement_check(41), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn generating_function() {
        assert_eq!(gf_coefficient(2, &[1, 1]), big(1));
        assert_eq!(gf_coefficient(3, &[3, 2, 1]), big(8));
        assert_eq!(gf_coefficient(2, &[1, 2]), big(0));
        assert_eq!(gf_coefficient(3, &[4, 2, 2]), big(15));
        assert_eq!(gf_coefficient(1, &[0, 1]), big(0));
        assert_eq!(gf_coefficient(0, &[]), big(1));
        assert_eq!(gf_coefficient(2, &[3]), big(1));
    }

    #[test]
    fn binomials_exceed_machine_words() {
        assert_eq!(binomial(70, 35).to_string(), "112186277816662845432");
        assert_eq!(binomial(3, 5), big(0));
    }
}
