//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, constant term first. The zero polynomial is the empty
//! coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients (constant term first), trimming
    /// high zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPolynomial::monomial(1)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// `x^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(BigInt::is_one).unwrap_or(false)
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact division by an integer; every coefficient must be divisible.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::internal("division by zero scalar"));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = num_integer::Integer::div_rem(c, d);
            if !r.is_zero() {
                return Err(Error::internal(format!(
                    "inexact scalar division: {} not divisible by {}",
                    c, d
                )));
            }
            coeffs.push(q);
        }
        Ok(IntPolynomial { coeffs })
    }

    /// Exact polynomial division: `self = q * d` with no remainder, staying
    /// in integer coefficients throughout.
    pub fn div_exact(&self, d: &IntPolynomial) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::internal("division by zero polynomial"));
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let deg_n = self.degree().unwrap();
        let deg_d = d.degree().unwrap();
        if deg_n < deg_d {
            return Err(Error::internal("inexact polynomial division: degree too small"));
        }
        let lead_d = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quotient = vec![BigInt::zero(); deg_n - deg_d + 1];
        for t in (0..=deg_n - deg_d).rev() {
            let top = rem[t + deg_d].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = num_integer::Integer::div_rem(&top, lead_d);
            if !r.is_zero() {
                return Err(Error::internal(
                    "inexact polynomial division: leading coefficient does not divide",
                ));
            }
            for (s, dc) in d.coeffs.iter().enumerate() {
                let sub = &qc * dc;
                rem[t + s] -= sub;
            }
            quotient[t] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::internal("inexact polynomial division: nonzero remainder"));
        }
        Ok(IntPolynomial::from_coeffs(quotient))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Decimal coefficient strings, constant term first; safe for
    /// arbitrary-precision values in JSON payloads.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
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
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    /// Human form, highest degree first: `x^3 - 3*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = magnitude.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{}", magnitude)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}*x", magnitude)?,
                (_, true) => write!(f, "x^{}", i)?,
                (_, false) => write!(f, "{}*x^{}", magnitude, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}
