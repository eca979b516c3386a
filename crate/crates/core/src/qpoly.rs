use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial in q with integer coefficients, stored densely by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// c·q^e.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Σ q^e over the given exponents.
    pub fn from_exponents(exponents: impl IntoIterator<Item = usize>) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for e in exponents {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        Self::from_coeffs(coeffs)
    }

    /// Gaussian binomial [n choose k]_q.
    pub fn q_binomial(n: usize, k: usize) -> Self {
        if k > n {
            return Self::zero();
        }
        // Row-by-row: [m,j] = [m−1,j−1] + q^j [m−1,j].
        let mut row: Vec<QPolynomial> = vec![Self::one()];
        for m in 1..=n {
            let mut next = Vec::with_capacity(m + 1);
            for j in 0..=m {
                let left = if j > 0 { row[j - 1].clone() } else { Self::zero() };
                let right = if j < m { row[j].shift(j) } else { Self::zero() };
                next.push(left + right);
            }
            row = next;
        }
        row.swap_remove(k)
    }

    /// Multiplies by q^e.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Nonzero (exponent, coefficient) pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        QPolynomial::from_coeffs(long)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (e, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{magnitude}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{magnitude}*q^{e}")?,
            }
        }
        Ok(())
    }
}
