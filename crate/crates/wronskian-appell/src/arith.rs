//! Small exact-arithmetic helpers shared across modules.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(sum parts)! / prod(part!)` computed as a product of binomials.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut cum = 0usize;
    for &part in parts {
        cum += part;
        acc *= binomial(cum, part);
    }
    acc
}

/// Balanced product of many factors.
pub fn product_tree(mut factors: Vec<BigInt>) -> BigInt {
    if factors.is_empty() {
        return BigInt::one();
    }
    while factors.len() > 1 {
        factors = factors
            .chunks(2)
            .map(|pair| {
                if pair.len() == 2 {
                    &pair[0] * &pair[1]
                } else {
                    pair[0].clone()
                }
            })
            .collect();
    }
    factors.pop().unwrap()
}

/// Product of `value^count` over a multiset of integer factors.
pub fn product_of_counts(counts: &BTreeMap<i64, u64>) -> BigInt {
    let factors = counts
        .iter()
        .map(|(&v, &c)| BigInt::from(v).pow(c as u32))
        .collect();
    product_tree(factors)
}

/// Converts an exact rational to the nearest f64 without overflowing through
/// the naive numerator/denominator route. Accurate to about one ulp at 64
/// bits of working precision.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    bigint_ratio_to_f64(r.numer(), r.denom())
}

pub fn bigint_ratio_to_f64(numer: &BigInt, denom: &BigInt) -> f64 {
    if numer.is_zero() {
        return 0.0;
    }
    assert!(!denom.is_zero(), "zero denominator");
    let negative = numer.is_negative() != denom.is_negative();
    let n = numer.abs();
    let d = denom.abs();
    let e = n.bits() as i64 - d.bits() as i64;
    // shift so the integer quotient carries ~64 significant bits
    let extra = 64 - e;
    let (n2, d2) = if extra >= 0 {
        (n << extra as u64, d)
    } else {
        (n, d << (-extra) as u64)
    };
    let q = n2 / d2;
    let mut value = q.to_f64().unwrap_or(f64::INFINITY);
    // apply 2^(-extra) in halves to survive |extra| beyond f64 range
    let mut remaining = -extra;
    while remaining > 0 {
        let step = remaining.min(512);
        value *= 2f64.powi(step as i32);
        remaining -= step;
    }
    while remaining < 0 {
        let step = (-remaining).min(512);
        value /= 2f64.powi(step as i32);
        remaining += step;
    }
    if negative {
        -value
    } else {
        value
    }
}
