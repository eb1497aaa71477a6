//! The combinatorial coefficient formula for the quotient factor of
//! `q_lambda`, the limit coefficients of the rescaled polynomials as the
//! core grows, and a convergence harness that tracks coefficients and roots
//! toward their attractors.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{binomial, multinomial, ratio_to_f64};
use crate::core_quotient::{
    compose, core_by_strip_removal, CharacteristicVector, PQuotient,
};
use crate::error::{Error, Result};
use crate::hook_products::{attractors, non_p_fold_factor_counts, non_p_fold_ratio};
use crate::partitions::syt_count;
use crate::roots::numeric_roots;
use crate::wronskian_poly::factorize_q;

/// Number of lattice paths between nested quotients in the product lattice:
/// the multinomial over the componentwise size differences times the product
/// of the skew tableau counts.
pub fn f_p_count(mu: &PQuotient, sub: &PQuotient) -> Result<BigInt> {
    if !mu.contains(sub) {
        return Err(Error::invalid(format!(
            "quotient ({}) does not contain ({})",
            mu, sub
        )));
    }
    let diffs: Vec<usize> = mu
        .components()
        .iter()
        .zip(sub.components())
        .map(|(big, small)| big.size() - small.size())
        .collect();
    let mut count = multinomial(&diffs);
    for (big, small) in mu.components().iter().zip(sub.components()) {
        count *= syt_count(big, small)?;
    }
    Ok(count)
}

/// Paths from the empty tuple to `mu`.
pub fn f_p(mu: &PQuotient) -> Result<BigInt> {
    f_p_count(mu, &PQuotient::empty(mu.p())?)
}

/// All coefficients `r_0 .. r_{|mu|}` of the quotient factor of the
/// partition composed from `(mu, c)`, where the factor expands as
/// `sum_j r_j x^{|mu|-j}`.
///
/// Each coefficient is an alternating sum over nested subquotients: a signed
/// path-count fraction times the exact ratio of non-p-fold hook products.
/// The sum is accumulated in exact rationals; the result must come out an
/// integer, which is asserted.
pub fn r_coefficients(mu: &PQuotient, c: &CharacteristicVector) -> Result<Vec<BigInt>> {
    let p = mu.p();
    if c.p() != p {
        return Err(Error::invalid(format!(
            "quotient has {} components but characteristic vector has {}",
            p,
            c.p()
        )));
    }
    let lambda = compose(mu, c)?;
    let parity_lambda = core_by_strip_removal(&lambda, p)?.ht_parity;
    let counts_lambda = non_p_fold_factor_counts(&mu.component_diagrams(c)?);
    let f_mu = f_p(mu)?;
    let total = mu.size();

    let mut out = Vec::with_capacity(total + 1);
    for j in 0..=total {
        let mut sum = BigRational::zero();
        for sub in mu.subquotients_removing(j) {
            let sub_lambda = compose(&sub, c)?;
            let parity = parity_lambda ^ core_by_strip_removal(&sub_lambda, p)?.ht_parity;
            let counts_sub = non_p_fold_factor_counts(&sub.component_diagrams(c)?);
            let hook_ratio = non_p_fold_ratio(&counts_lambda, &counts_sub);
            let path_fraction =
                BigRational::new(f_p(&sub)? * f_p_count(mu, &sub)?, f_mu.clone());
            let term = path_fraction * hook_ratio;
            if parity == 1 {
                sum -= term;
            } else {
                sum += term;
            }
        }
        let mut value = sum * BigRational::from_integer(binomial(total, j));
        if j % 2 == 1 {
            value = -value;
        }
        if !value.is_integer() {
            return Err(Error::internal(format!(
                "coefficient formula produced a non-integer at j={} for quotient ({})",
                j, mu
            )));
        }
        out.push(value.to_integer());
    }
    Ok(out)
}

/// Single coefficient `r_j`; see [`r_coefficients`].
pub fn r_coefficient(mu: &PQuotient, c: &CharacteristicVector, j: usize) -> Result<BigInt> {
    if j > mu.size() {
        return Err(Error::invalid(format!(
            "coefficient index {} exceeds the quotient size {}",
            j,
            mu.size()
        )));
    }
    Ok(r_coefficients(mu, c)?.swap_remove(j))
}

fn compositions_bounded(bounds: &[usize], total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(bounds.len());
    fn rec(bounds: &[usize], idx: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx == bounds.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let rest: usize = bounds[idx + 1..].iter().sum();
        let lo = remaining.saturating_sub(rest);
        let hi = bounds[idx].min(remaining);
        for l in lo..=hi {
            current.push(l);
            rec(bounds, idx + 1, remaining - l, current, out);
            current.pop();
        }
    }
    rec(bounds, 0, total, &mut current, &mut out);
    out
}

/// Limit coefficients `L_0 .. L_{|mu|}` for real growth rates, by the
/// composition sum `L_j = (-1)^j sum prod binom(|mu_i|, l_i) alpha_i^{l_i}`.
pub fn limit_coefficients(mu: &PQuotient, a: &[f64]) -> Result<Vec<f64>> {
    if a.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            a.len()
        )));
    }
    let alphas = attractors(a).alphas;
    let sizes = mu.component_sizes();
    let total = mu.size();
    let mut out = Vec::with_capacity(total + 1);
    for j in 0..=total {
        let mut sum = 0.0f64;
        for combo in compositions_bounded(&sizes, j) {
            let mut term = 1.0f64;
            for (i, &l) in combo.iter().enumerate() {
                term *= binomial(sizes[i], l).to_f64().unwrap();
                term *= alphas[i].powi(l as i32);
            }
            sum += term;
        }
        out.push(if j % 2 == 1 { -sum } else { sum });
    }
    Ok(out)
}

/// Exact limit coefficients for integer growth rates.
pub fn limit_coefficients_exact(mu: &PQuotient, a: &[i64]) -> Result<Vec<BigInt>> {
    if a.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            a.len()
        )));
    }
    let alphas = crate::hook_products::attractor_values_exact(a);
    let sizes = mu.component_sizes();
    let total = mu.size();
    let mut out = Vec::with_capacity(total + 1);
    for j in 0..=total {
        let mut sum = BigInt::zero();
        for combo in compositions_bounded(&sizes, j) {
            let mut term = BigInt::one();
            for (i, &l) in combo.iter().enumerate() {
                term *= binomial(sizes[i], l);
                term *= alphas[i].pow(l as u32);
            }
            sum += term;
        }
        out.push(if j % 2 == 1 { -sum } else { sum });
    }
    Ok(out)
}

/// The limit polynomial `prod (x - alpha_i)^{|mu_i|}` expanded directly, as
/// coefficients with the constant term first. Independent of
/// [`limit_coefficients`], which goes through the composition sum.
pub fn limit_polynomial(mu: &PQuotient, a: &[f64]) -> Result<Vec<f64>> {
    if a.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            a.len()
        )));
    }
    let alphas = attractors(a).alphas;
    let mut coeffs = vec![1.0f64];
    for (alpha, size) in alphas.iter().zip(mu.component_sizes()) {
        for _ in 0..size {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (i, &cv) in coeffs.iter().enumerate() {
                next[i + 1] += cv;
                next[i] -= alpha * cv;
            }
            coeffs = next;
        }
    }
    Ok(coeffs)
}

/// Exact expansion of the limit polynomial for integer growth rates.
pub fn limit_polynomial_exact(mu: &PQuotient, a: &[i64]) -> Result<Vec<BigInt>> {
    if a.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            a.len()
        )));
    }
    let alphas = crate::hook_products::attractor_values_exact(a);
    let mut coeffs = vec![BigInt::one()];
    for (alpha, size) in alphas.iter().zip(mu.component_sizes()) {
        for _ in 0..size {
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, cv) in coeffs.iter().enumerate() {
                next[i + 1] += cv;
                next[i] -= alpha * cv;
            }
            coeffs = next;
        }
    }
    Ok(coeffs)
}

/// Linear-plus-offset growth of a characteristic vector: entry `i` at step
/// `k` is `a_i * k + b_i`. Both layers sum to zero so every step yields a
/// valid characteristic vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthSpec {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl GrowthSpec {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::invalid(
                "growth rates and offsets must have the same positive length",
            ));
        }
        if a.iter().sum::<i64>() != 0 {
            return Err(Error::invalid("growth rates must sum to zero"));
        }
        if b.iter().sum::<i64>() != 0 {
            return Err(Error::invalid("growth offsets must sum to zero"));
        }
        Ok(GrowthSpec { a, b })
    }

    /// Pure linear growth, all offsets zero.
    pub fn linear(a: Vec<i64>) -> Result<Self> {
        let b = vec![0; a.len()];
        GrowthSpec::new(a, b)
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn charvec_at(&self, k: u64) -> Result<CharacteristicVector> {
        let entries = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(&ai, &bi)| ai * k as i64 + bi)
            .collect();
        CharacteristicVector::new(entries)
    }
}

/// Which route produces the exact coefficients in a convergence run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CoefficientMethod {
    /// The combinatorial formula; scales to huge cores.
    Formula,
    /// The Wronskian determinant; exact but bounded by the partition size.
    Wronskian,
    /// Run both and demand exact agreement.
    Both,
}

/// Options for [`run_convergence`].
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub method: CoefficientMethod,
    /// Residual tolerance passed to the root finder.
    pub tol: f64,
    /// Largest `|lambda(k)|` the Wronskian route accepts.
    pub max_wronskian_size: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            method: CoefficientMethod::Formula,
            tol: crate::roots::DEFAULT_TOL,
            max_wronskian_size: 400,
        }
    }
}

/// One recovered root with its nearest attractor.
#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    pub re: f64,
    pub im: f64,
    pub nearest_attractor: f64,
    pub nearest_index: usize,
    pub distance: f64,
}

/// Per-step record of a convergence run.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRow {
    pub k: u64,
    /// `r_j / (pk)^{(p-1)j}` for `j = 0..=|mu|`.
    pub rescaled: Vec<f64>,
    /// `|rescaled_j - L_j|`, computed exactly before conversion.
    pub errors: Vec<f64>,
    pub sup_error: f64,
    pub roots: Vec<RootRecord>,
    /// Roots assigned to each attractor index.
    pub attractor_counts: Vec<usize>,
}

/// Full result of a convergence run, ready for serialization.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub p: usize,
    pub quotient: String,
    pub component_sizes: Vec<usize>,
    pub growth: GrowthSpec,
    pub attractors: Vec<f64>,
    /// Exact limit coefficients as decimal strings, `L_0` first.
    pub limit_exact: Vec<String>,
    pub limit: Vec<f64>,
    pub rows: Vec<ConvergenceRow>,
}

/// Builds `lambda(k)` for every `k`, computes the exact coefficients of the
/// quotient factor, rescales by `(pk)^{(p-1)j}` in exact arithmetic, and
/// records coefficient errors against the limit plus the numeric roots of
/// the rescaled polynomial.
pub fn run_convergence(
    mu: &PQuotient,
    growth: &GrowthSpec,
    k_list: &[u64],
    options: &RunOptions,
) -> Result<ConvergenceReport> {
    let p = mu.p();
    if growth.p() != p {
        return Err(Error::invalid(format!(
            "quotient has {} components but the growth spec has {}",
            p,
            growth.p()
        )));
    }
    if k_list.is_empty() {
        return Err(Error::invalid("k list must be nonempty"));
    }
    if k_list.contains(&0) || k_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("k values must be positive and strictly increasing"));
    }

    let a_f64: Vec<f64> = growth.a().iter().map(|&x| x as f64).collect();
    let attractor_values = attractors(&a_f64).alphas;
    let limit_exact = limit_coefficients_exact(mu, growth.a())?;
    let total = mu.size();

    let mut rows = Vec::with_capacity(k_list.len());
    for &k in k_list {
        let c = growth.charvec_at(k)?;
        let coeffs = exact_coefficients(mu, &c, options)?;

        let mut rescaled = Vec::with_capacity(total + 1);
        let mut errors = Vec::with_capacity(total + 1);
        let mut sup_error = 0.0f64;
        for (j, r_j) in coeffs.iter().enumerate() {
            let scale = BigInt::from(p as u64 * k).pow(((p - 1) * j) as u32);
            let value = BigRational::new(r_j.clone(), scale);
            let err = (&value - BigRational::from_integer(limit_exact[j].clone())).abs();
            let err_f64 = ratio_to_f64(&err);
            rescaled.push(ratio_to_f64(&value));
            errors.push(err_f64);
            sup_error = sup_error.max(err_f64);
        }

        // rescaled polynomial sum_j rescaled_j x^{|mu|-j}, constant first
        let mut poly = vec![0.0f64; total + 1];
        for (j, &v) in rescaled.iter().enumerate() {
            poly[total - j] = v;
        }
        let roots = numeric_roots(&poly, options.tol)?;
        let mut records = Vec::with_capacity(roots.len());
        let mut counts = vec![0usize; attractor_values.len()];
        for z in roots {
            let (idx, dist) = nearest_attractor(&attractor_values, z);
            counts[idx] += 1;
            records.push(RootRecord {
                re: z.re,
                im: z.im,
                nearest_attractor: attractor_values[idx],
                nearest_index: idx,
                distance: dist,
            });
        }

        rows.push(ConvergenceRow {
            k,
            rescaled,
            errors,
            sup_error,
            roots: records,
            attractor_counts: counts,
        });
    }

    Ok(ConvergenceReport {
        p,
        quotient: mu.to_string(),
        component_sizes: mu.component_sizes(),
        growth: growth.clone(),
        attractors: attractor_values,
        limit_exact: limit_exact.iter().map(|c| c.to_string()).collect(),
        limit: limit_exact
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .map(|r| ratio_to_f64(&r))
            .collect(),
        rows,
    })
}

fn nearest_attractor(attractor_values: &[f64], z: Complex64) -> (usize, f64) {
    let mut best = 0usize;
    let mut best_dist = f64::INFINITY;
    for (i, &alpha) in attractor_values.iter().enumerate() {
        let dist = (z - Complex64::new(alpha, 0.0)).norm();
        if dist < best_dist {
            best = i;
            best_dist = dist;
        }
    }
    (best, best_dist)
}

/// Exact coefficient list by the requested route; `Both` cross-checks the
/// formula against the Wronskian and fails on any mismatch.
pub fn exact_coefficients(
    mu: &PQuotient,
    c: &CharacteristicVector,
    options: &RunOptions,
) -> Result<Vec<BigInt>> {
    let by_formula = || r_coefficients(mu, c);
    let by_wronskian = || -> Result<Vec<BigInt>> {
        let lambda = compose(mu, c)?;
        if lambda.size() > options.max_wronskian_size {
            return Err(Error::SizeLimit(format!(
                "|lambda| = {} exceeds the Wronskian bound {}; use the formula route",
                lambda.size(),
                options.max_wronskian_size
            )));
        }
        let f = factorize_q(&lambda, mu.p())?;
        let total = mu.size();
        Ok((0..=total).map(|j| f.r.coeff(total - j)).collect())
    };
    match options.method {
        CoefficientMethod::Formula => by_formula(),
        CoefficientMethod::Wronskian => by_wronskian(),
        CoefficientMethod::Both => {
            let formula = by_formula()?;
            let wronskian = by_wronskian()?;
            if formula != wronskian {
                return Err(Error::internal(format!(
                    "coefficient routes disagree for quotient ({}) charges ({}): formula {:?} vs wronskian {:?}",
                    mu, c, formula, wronskian
                )));
            }
            Ok(formula)
        }
    }
}

impl ConvergenceReport {
    /// CSV of the rescaled coefficients: `k,j,rescaled_coeff,limit_coeff,abs_error`.
    pub fn coefficients_csv(&self) -> String {
        let mut out = String::from("k,j,rescaled_coeff,limit_coeff,abs_error\n");
        for row in &self.rows {
            for (j, (&value, &err)) in row.rescaled.iter().zip(&row.errors).enumerate() {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.k, j, value, self.limit_exact[j], err
                ));
            }
        }
        out
    }

    /// CSV of the recovered roots: `k,root_re,root_im,nearest_attractor,distance`.
    pub fn roots_csv(&self) -> String {
        let mut out = String::from("k,root_re,root_im,nearest_attractor,distance\n");
        for row in &self.rows {
            for root in &row.roots {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.k, root.re, root.im, root.nearest_attractor, root.distance
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
