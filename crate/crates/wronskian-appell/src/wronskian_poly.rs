//! The Appell sequence generated by `exp(t*x - t^p/p)`, Wronskian
//! determinants of its members labeled by partitions, and extraction of the
//! polynomial factor carrying the quotient data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::core_quotient::{core_size_from_charvec, decompose};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poly::IntPolynomial;

/// The polynomials `q_0 .. q_n_max` for a fixed modulus `p`. Each `q_n` is
/// monic of degree `n` and supported on exponents congruent to `n` mod `p`.
#[derive(Clone, Debug)]
pub struct AppellTable {
    p: usize,
    polys: Vec<IntPolynomial>,
}

impl AppellTable {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn max_n(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn q(&self, n: usize) -> &IntPolynomial {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }
}

/// Generates the sequence through the recurrence
/// `q_n = x*q_{n-1} - (n-1)!/(n-p)! * q_{n-p}` with `q_n = x^n` below `p`.
pub fn appell_sequence(p: usize, n_max: usize) -> Result<AppellTable> {
    if p == 0 {
        return Err(Error::invalid("p must be a positive integer"));
    }
    let mut polys: Vec<IntPolynomial> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n < p {
            polys.push(IntPolynomial::monomial(n));
            continue;
        }
        // (n-1)! / (n-p)! = (n-1)(n-2)...(n-p+1)
        let mut falling = BigInt::one();
        for t in (n - p + 1)..n {
            falling *= BigInt::from(t);
        }
        let lead = polys[n - 1].shift_up(1);
        let tail = polys[n - p].scale(&falling);
        polys.push(&lead - &tail);
    }
    Ok(AppellTable { p, polys })
}

/// Generates the same table from the exponential generating function: the
/// truncated series product `exp(t*x) * exp(-t^p/p)` is accumulated with
/// exact rational coefficients and scaled by `n!`. Serves as an independent
/// construction against the recurrence.
pub fn appell_sequence_from_series(p: usize, n_max: usize) -> Result<AppellTable> {
    if p == 0 {
        return Err(Error::invalid("p must be a positive integer"));
    }
    let factorials: Vec<BigInt> = (0..=n_max).map(factorial).collect();
    // exp(-t^p/p) = sum_m (-1/p)^m / m! * t^{p*m}
    let mut outer_coeff: Vec<BigRational> = Vec::new();
    let mut m = 0usize;
    loop {
        if p * m > n_max {
            break;
        }
        let sign = if m.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        let denom = BigInt::from(p as u32).pow(m as u32) * &factorials[m.min(n_max)];
        outer_coeff.push(BigRational::new(sign, denom));
        m += 1;
    }

    let mut polys = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        // t^n coefficient of the product is sum_m outer_m * x^{n-pm}/(n-pm)!
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (m, om) in outer_coeff.iter().enumerate() {
            if p * m > n {
                break;
            }
            let rest = n - p * m;
            coeffs[rest] = om / BigRational::from_integer(factorials[rest].clone());
        }
        // q_n = n! * (t^n coefficient)
        let mut int_coeffs = Vec::with_capacity(n + 1);
        for c in coeffs {
            let scaled = c * BigRational::from_integer(factorials[n].clone());
            if !scaled.is_integer() {
                return Err(Error::internal(format!(
                    "series construction produced a non-integer coefficient at n={}",
                    n
                )));
            }
            int_coeffs.push(scaled.to_integer());
        }
        polys.push(IntPolynomial::from_coeffs(int_coeffs));
    }
    Ok(AppellTable { p, polys })
}

/// Fraction-free determinant of a square matrix of integer polynomials.
/// Row swaps handle zero pivots; every division is exact by the Sylvester
/// identity.
fn bareiss_determinant(mut m: Vec<Vec<IntPolynomial>>) -> Result<IntPolynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::internal("determinant of a non-square matrix"));
    }
    let mut sign = 1i32;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&s| !m[s][k].is_zero()) else {
                return Ok(IntPolynomial::zero());
            };
            m.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = cross.div_exact(&prev)?;
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -&det } else { det })
}

/// The monic polynomial `q_lambda`: the Wronskian of `q_{n_1},...,q_{n_r}`
/// over the degree vector of `lambda`, divided by the Vandermonde
/// determinant `prod_{i<j} (n_j - n_i)`.
///
/// Derivatives of table entries reduce through `q_n' = n q_{n-1}`, so every
/// matrix entry is a falling-factorial multiple of a lower table entry.
pub fn wronskian_q(lambda: &Partition, p: usize) -> Result<IntPolynomial> {
    if p == 0 {
        return Err(Error::invalid("p must be a positive integer"));
    }
    let r = lambda.len();
    if r == 0 {
        return Ok(IntPolynomial::one());
    }
    let dv = lambda.degree_vector();
    let degrees = dv.entries();
    let table = appell_sequence(p, degrees[0])?;

    let mut matrix = Vec::with_capacity(r);
    for order in 0..r {
        let mut row = Vec::with_capacity(r);
        for &n in degrees {
            if order > n {
                row.push(IntPolynomial::zero());
            } else {
                // n! / (n - order)! prefactor from repeated differentiation
                let mut falling = BigInt::one();
                for t in (n - order + 1)..=n {
                    falling *= BigInt::from(t);
                }
                row.push(table.q(n - order).scale(&falling));
            }
        }
        matrix.push(row);
    }

    let det = bareiss_determinant(matrix)?;
    let mut vandermonde = BigInt::one();
    for i in 0..r {
        for j in i + 1..r {
            vandermonde *= BigInt::from(degrees[j] as i64 - degrees[i] as i64);
        }
    }
    let q = det.div_exact_scalar(&vandermonde)?;
    if q.degree() != Some(lambda.size()) || !q.is_monic() {
        return Err(Error::internal(format!(
            "q_lambda for ({}) is not monic of degree {}",
            lambda,
            lambda.size()
        )));
    }
    Ok(q)
}

/// `q_lambda` together with its factorization data: the core size gives the
/// multiplicity of the zero at the origin, and `r` collects the surviving
/// coefficients with `q_lambda(x) = x^{core_size} * r(x^p)`.
#[derive(Clone, Debug)]
pub struct QFactorization {
    pub q: IntPolynomial,
    pub core_size: usize,
    pub r: IntPolynomial,
}

/// Computes `q_lambda` and verifies the factorization through the origin:
/// the lowest `|core|` coefficients vanish, the survivors sit on exponents
/// congruent to `|core|` mod `p`, and the extracted factor is monic of
/// degree `|quotient|` with nonzero constant term.
pub fn factorize_q(lambda: &Partition, p: usize) -> Result<QFactorization> {
    let q = wronskian_q(lambda, p)?;
    let (quotient, charvec) = decompose(lambda, p)?;
    let core_size = core_size_from_charvec(&charvec)? as usize;
    let mu_size = quotient.size();

    for i in 0..core_size.min(q.coeffs().len()) {
        if !q.coeff(i).is_zero() {
            return Err(Error::internal(format!(
                "q_lambda for ({}) has a nonzero coefficient below the core order at x^{}",
                lambda, i
            )));
        }
    }
    let mut r_coeffs = vec![BigInt::zero(); mu_size + 1];
    for (i, c) in q.coeffs().iter().enumerate().skip(core_size) {
        if c.is_zero() {
            continue;
        }
        let rel = i - core_size;
        if !rel.is_multiple_of(p) {
            return Err(Error::internal(format!(
                "q_lambda for ({}) has support off the residue class at x^{}",
                lambda, i
            )));
        }
        r_coeffs[rel / p] = c.clone();
    }
    let r = IntPolynomial::from_coeffs(r_coeffs);
    if r.degree() != Some(mu_size) || !r.is_monic() {
        return Err(Error::internal(format!(
            "extracted factor for ({}) is not monic of degree {}",
            lambda, mu_size
        )));
    }
    if r.coeff(0).is_zero() {
        return Err(Error::internal(format!(
            "extracted factor for ({}) has vanishing constant term",
            lambda
        )));
    }
    Ok(QFactorization { q, core_size, r })
}
