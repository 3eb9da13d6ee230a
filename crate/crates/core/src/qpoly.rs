//! Univariate polynomials in q with exact i64 coefficients.
//!
//! The value type of the q-analogue partition function, Kostka-Foulkes
//! polynomials, and graded multiplicities. Only the operations those
//! computations need are provided: addition, sign-scaling with a monomial
//! shift, degree, and evaluation at q = 1. All arithmetic is checked;
//! overflow is an error, never a wrap.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Canonical form: `coeffs[d]` is the coefficient of q^d and the last
/// entry is nonzero; the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    /// c * q^d.
    pub fn monomial(c: i64, d: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        QPolynomial { coeffs }
    }

    /// Builds from an ascending coefficient list, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Ascending coefficients in canonical form (empty for zero).
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient; the zero polynomial
    /// has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &QPolynomial) -> Result<QPolynomial> {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut coeffs = long.clone();
        for (c, &s) in coeffs.iter_mut().zip(short) {
            *c = c
                .checked_add(s)
                .ok_or(Error::Overflow("QPolynomial::add"))?;
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// c * q^m * self.
    pub fn scale_shift(&self, c: i64, m: usize) -> Result<QPolynomial> {
        if c == 0 || self.is_zero() {
            return Ok(QPolynomial::zero());
        }
        let mut coeffs = vec![0; m + self.coeffs.len()];
        for (d, &a) in self.coeffs.iter().enumerate() {
            coeffs[m + d] = a
                .checked_mul(c)
                .ok_or(Error::Overflow("QPolynomial::scale_shift"))?;
        }
        Ok(QPolynomial { coeffs })
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> Result<i64> {
        self.coeffs.iter().try_fold(0i64, |acc, &c| {
            acc.checked_add(c)
                .ok_or(Error::Overflow("QPolynomial::eval_at_one"))
        })
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}
