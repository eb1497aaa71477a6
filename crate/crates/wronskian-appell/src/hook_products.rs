//! Hook-length products computed from Maya-diagram pairings: the full
//! product, its split into p-fold and non-p-fold factors via the quotient
//! diagrams, the exact core ratio, and the attractor data entering the
//! leading coefficient of the hook-ratio growth.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{bigint_ratio_to_f64, product_of_counts, product_tree};
use crate::core_quotient::{
    compose, core_by_strip_removal, core_from_charvec, CharacteristicVector, PQuotient,
};
use crate::error::{Error, Result};
use crate::maya::MayaDiagram;
use crate::partitions::Partition;

/// Product of all hook lengths of `lambda`, read from the Maya diagram: one
/// factor `m - n` for every filled box `m` above an empty box `n`.
///
/// Every such pair lies inside the stored word (below it all boxes are
/// filled, above it all are empty), so the finite window is exhaustive.
pub fn hook_product(lambda: &Partition) -> BigInt {
    let m = MayaDiagram::from_partition(lambda);
    let lo = m.first_empty();
    let hi = m.last_filled();
    let mut factors = Vec::with_capacity(lambda.size());
    for n in lo..=hi {
        if m.is_filled(n) {
            continue;
        }
        for mm in (n + 1)..=hi {
            if m.is_filled(mm) {
                factors.push(BigInt::from(mm - n));
            }
        }
    }
    product_tree(factors)
}

/// The hook product split by divisibility by `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookSplit {
    /// Product of the hook lengths not divisible by `p`.
    pub non_p_fold: BigInt,
    /// Product of the hook lengths divisible by `p`.
    pub p_fold: BigInt,
}

/// Multiset of non-p-fold hook factors of the partition whose quotient
/// diagrams are `comps`: for components `i != j`, a filled box `m` in
/// `comps[i]` and an empty box `n` in `comps[j]` pair up whenever
/// `p*m + i > p*n + j`, contributing the factor `p*(m-n) + i - j`.
pub(crate) fn non_p_fold_factor_counts(comps: &[MayaDiagram]) -> BTreeMap<i64, u64> {
    let p = comps.len() as i64;
    let mut counts = BTreeMap::new();
    for (i, mi) in comps.iter().enumerate() {
        for (j, mj) in comps.iter().enumerate() {
            if i == j {
                continue;
            }
            let (i, j) = (i as i64, j as i64);
            let hi = mi.last_filled();
            // the inequality reduces to m > n for i < j and m >= n for i > j
            for n in mj.first_empty()..=hi {
                if mj.is_filled(n) {
                    continue;
                }
                let start = if i < j { n + 1 } else { n };
                for m in start..=hi {
                    if mi.is_filled(m) {
                        *counts.entry(p * (m - n) + i - j).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    counts
}

fn p_fold_factors(comps: &[MayaDiagram]) -> Vec<BigInt> {
    let p = comps.len() as i64;
    let mut factors = Vec::new();
    for mi in comps {
        let hi = mi.last_filled();
        for n in mi.first_empty()..=hi {
            if mi.is_filled(n) {
                continue;
            }
            for m in (n + 1)..=hi {
                if mi.is_filled(m) {
                    factors.push(BigInt::from(p * (m - n)));
                }
            }
        }
    }
    factors
}

/// Splits the hook product of `lambda` into its p-fold and non-p-fold parts
/// using the p-modular decomposition of the charge-zero Maya diagram.
pub fn hook_split(lambda: &Partition, p: usize) -> Result<HookSplit> {
    let hat = MayaDiagram::from_partition(lambda).canonical();
    let comps = hat.p_decompose(p)?;
    let non_p_fold = product_of_counts(&non_p_fold_factor_counts(&comps));
    let p_fold = product_tree(p_fold_factors(&comps));
    Ok(HookSplit { non_p_fold, p_fold })
}

/// The exact integer `H_non-p-fold(lambda) / H(core)` together with its
/// factor count (the number of non-p-fold hooks beyond those of the core).
#[derive(Clone, Debug)]
pub struct CoreRatio {
    pub ratio: BigInt,
    pub factor_count: usize,
}

/// Divides the non-p-fold hook product of `lambda` by the full hook product
/// of its p-core. The hooks of the core embed into the non-p-fold hooks of
/// `lambda`, so the quotient is an exact integer with `(p-1)*|quotient|`
/// factors.
pub fn nonpfold_core_ratio(lambda: &Partition, p: usize) -> Result<CoreRatio> {
    let hat = MayaDiagram::from_partition(lambda).canonical();
    let comps = hat.p_decompose(p)?;
    let counts = non_p_fold_factor_counts(&comps);
    let numerator_factors: u64 = counts.values().sum();
    let numerator = product_of_counts(&counts);

    let charges = CharacteristicVector::new(comps.iter().map(|c| c.charge()).collect())
        .map_err(|_| Error::internal("component charges must sum to zero"))?;
    let core = core_from_charvec(&charges)?;
    let denominator = hook_product(&core);

    let (ratio, rem) = num_integer::Integer::div_rem(&numerator, &denominator);
    if !num_traits::Zero::is_zero(&rem) {
        return Err(Error::internal(format!(
            "core hook product does not divide the non-p-fold product for ({}) at p={}",
            lambda, p
        )));
    }
    Ok(CoreRatio {
        ratio,
        factor_count: numerator_factors as usize - core.size(),
    })
}

/// Growth rates together with their attractors `alpha_i = prod_{j != i}
/// (a_i - a_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AttractorVector {
    pub a: Vec<f64>,
    pub alphas: Vec<f64>,
}

/// Attractor values for the given growth rates. A single rate yields the
/// empty product 1.
pub fn attractors(a: &[f64]) -> AttractorVector {
    let alphas = (0..a.len())
        .map(|i| {
            (0..a.len())
                .filter(|&j| j != i)
                .map(|j| a[i] - a[j])
                .product::<f64>()
        })
        .collect();
    AttractorVector {
        a: a.to_vec(),
        alphas,
    }
}

/// Exact attractor values for integer growth rates.
pub fn attractor_values_exact(a: &[i64]) -> Vec<BigInt> {
    (0..a.len())
        .map(|i| {
            (0..a.len())
                .filter(|&j| j != i)
                .map(|j| BigInt::from(a[i] - a[j]))
                .fold(BigInt::one(), |acc, f| acc * f)
        })
        .collect()
}

/// Leading coefficient of the hook-ratio growth for a fixed quotient:
/// `(-1)^parity * p^{(p-1)|mu|} * prod alpha_i^{|mu^(i)|}`.
pub fn hook_ratio_growth_coefficient(mu: &PQuotient, a: &[f64], ht_parity: u8) -> Result<f64> {
    if a.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            a.len()
        )));
    }
    let p = mu.p();
    let total = mu.size();
    let alphas = attractors(a).alphas;
    let mut value = (p as f64).powi(((p - 1) * total) as i32);
    for (alpha, size) in alphas.iter().zip(mu.component_sizes()) {
        value *= alpha.powi(size as i32);
    }
    if ht_parity % 2 == 1 {
        value = -value;
    }
    Ok(value)
}

/// Exact variant of [`hook_ratio_growth_coefficient`] for integer growth rates.
pub fn hook_ratio_growth_coefficient_exact(mu: &PQuotient, a: &[i64], ht_parity: u8) -> Result<BigInt> {
    if a.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            a.len()
        )));
    }
    let p = mu.p();
    let total = mu.size();
    let alphas = attractor_values_exact(a);
    let mut value = BigInt::from(p as i64).pow(((p - 1) * total) as u32);
    for (alpha, size) in alphas.iter().zip(mu.component_sizes()) {
        value *= alpha.pow(size as u32);
    }
    if ht_parity % 2 == 1 {
        value = -value;
    }
    Ok(value)
}

/// One measurement in a hook-ratio growth check.
#[derive(Clone, Debug)]
pub struct HookRatioSample {
    pub k: u64,
    /// `H_non-p-fold(lambda(k)) / H(core(k)) / k^{(p-1)|mu|}`, exact ratio
    /// converted to f64 at the end.
    pub scaled_ratio: f64,
    /// Parity of the strip heights between `lambda(k)` and its core.
    pub ht_parity: u8,
}

/// Builds `lambda(k)` from the fixed quotient and the characteristic vector
/// `k*a`, computes the exact hook ratio, and rescales by `k^{(p-1)|mu|}`.
/// The samples approach the coefficient from [`hook_ratio_growth_coefficient`] in
/// absolute value as `k` grows.
pub fn hook_ratio_growth_samples(mu: &PQuotient, a: &[i64], k_list: &[u64]) -> Result<Vec<HookRatioSample>> {
    if a.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            a.len()
        )));
    }
    if a.iter().sum::<i64>() != 0 {
        return Err(Error::invalid("growth rates must sum to zero"));
    }
    if k_list.contains(&0) || k_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("k values must be positive and strictly increasing"));
    }
    let exponent = ((mu.p() - 1) * mu.size()) as u32;
    let mut samples = Vec::with_capacity(k_list.len());
    for &k in k_list {
        let c = CharacteristicVector::new(a.iter().map(|&ai| ai * k as i64).collect())?;
        let lambda = compose(mu, &c)?;
        let ratio = nonpfold_core_ratio(&lambda, mu.p())?;
        let scale = BigInt::from(k).pow(exponent);
        let scaled_ratio = bigint_ratio_to_f64(&ratio.ratio, &scale);
        let parity = core_by_strip_removal(&lambda, mu.p())?.ht_parity;
        samples.push(HookRatioSample {
            k,
            scaled_ratio,
            ht_parity: parity,
        });
    }
    Ok(samples)
}

/// Exact hook ratio between two partitions with the same core built from
/// nested quotients: `H_non-p-fold(lambda) / H_non-p-fold(smaller)` as a
/// reduced rational, computed by cancelling equal factors first.
pub(crate) fn non_p_fold_ratio(
    larger: &BTreeMap<i64, u64>,
    smaller: &BTreeMap<i64, u64>,
) -> BigRational {
    let mut numerator = BTreeMap::new();
    let mut denominator = BTreeMap::new();
    let keys: std::collections::BTreeSet<i64> = larger.keys().chain(smaller.keys()).copied().collect();
    for key in keys {
        let up = larger.get(&key).copied().unwrap_or(0);
        let down = smaller.get(&key).copied().unwrap_or(0);
        if up > down {
            numerator.insert(key, up - down);
        } else if down > up {
            denominator.insert(key, down - up);
        }
    }
    BigRational::new(product_of_counts(&numerator), product_of_counts(&denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_quotient::decompose;
    use crate::partitions::partitions_up_to;
    use num_traits::{ToPrimitive, Zero};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cell_hook_product(lambda: &Partition) -> BigInt {
        lambda
            .hook_lengths()
            .into_iter()
            .fold(BigInt::one(), |acc, h| acc * BigInt::from(h))
    }

    #[test]
    fn hook_product_examples() {
        // hooks of (4,4,4,1,1) are 8,5,4,3,7,4,3,2,6,3,2,1,2,1
        assert_eq!(hook_product(&p(&[4, 4, 4, 1, 1])), cell_hook_product(&p(&[4, 4, 4, 1, 1])));
        assert_eq!(hook_product(&Partition::empty()), BigInt::one());
        assert_eq!(hook_product(&p(&[2, 1])), BigInt::from(3));
    }

    #[test]
    fn maya_pairing_matches_young_cells() {
        for lambda in partitions_up_to(12) {
            assert_eq!(
                hook_product(&lambda),
                cell_hook_product(&lambda),
                "mismatch for {}",
                lambda
            );
        }
    }

    #[test]
    fn split_multiplies_back_and_matches_divisibility_filter() {
        for lambda in partitions_up_to(10) {
            for p_mod in 1..=5usize {
                let split = hook_split(&lambda, p_mod).unwrap();
                assert_eq!(&split.non_p_fold * &split.p_fold, hook_product(&lambda));

                let mut non_div = BigInt::one();
                let mut div = BigInt::one();
                for h in lambda.hook_lengths() {
                    if h % p_mod == 0 {
                        div *= BigInt::from(h);
                    } else {
                        non_div *= BigInt::from(h);
                    }
                }
                assert_eq!(split.non_p_fold, non_div, "{} p={}", lambda, p_mod);
                assert_eq!(split.p_fold, div, "{} p={}", lambda, p_mod);
            }
        }
    }

    #[test]
    fn split_worked_example() {
        // 3-divisible hooks of (4,4,4,1,1) are {3,3,6,3}
        let split = hook_split(&p(&[4, 4, 4, 1, 1]), 3).unwrap();
        assert_eq!(split.p_fold, BigInt::from(162));
        assert_eq!(split.non_p_fold, BigInt::from(35840));
        // p-fold part restated through the quotient: p^{|mu|} * prod H(mu_i)
        let (mu, _) = decompose(&p(&[4, 4, 4, 1, 1]), 3).unwrap();
        let quotient_hooks: BigInt = mu
            .components()
            .iter()
            .map(cell_hook_product)
            .fold(BigInt::one(), |acc, h| acc * h);
        assert_eq!(
            split.p_fold,
            BigInt::from(3).pow(mu.size() as u32) * quotient_hooks
        );
    }

    #[test]
    fn p_fold_restatement_sweep() {
        for lambda in partitions_up_to(10) {
            for p_mod in 1..=5usize {
                let split = hook_split(&lambda, p_mod).unwrap();
                let (mu, _) = decompose(&lambda, p_mod).unwrap();
                let quotient_hooks: BigInt = mu
                    .components()
                    .iter()
                    .map(cell_hook_product)
                    .fold(BigInt::one(), |acc, h| acc * h);
                assert_eq!(
                    split.p_fold,
                    BigInt::from(p_mod as i64).pow(mu.size() as u32) * quotient_hooks,
                    "{} p={}",
                    lambda,
                    p_mod
                );
            }
        }
    }

    #[test]
    fn core_ratio_examples() {
        // a p-core has ratio 1 with no factors
        let ratio = nonpfold_core_ratio(&p(&[4, 2]), 3).unwrap();
        assert_eq!(ratio.ratio, BigInt::one());
        assert_eq!(ratio.factor_count, 0);

        // (4,4,4,1,1) at p=3: core (1,1) with hook product 2
        let ratio = nonpfold_core_ratio(&p(&[4, 4, 4, 1, 1]), 3).unwrap();
        assert_eq!(ratio.ratio, BigInt::from(35840 / 2));
        assert_eq!(ratio.factor_count, 8);

        // (8,8,6,6,2,2,1) at p=3 has |mu| = 9, so 18 extra factors
        let ratio = nonpfold_core_ratio(&p(&[8, 8, 6, 6, 2, 2, 1]), 3).unwrap();
        assert_eq!(ratio.factor_count, 18);
    }

    #[test]
    fn core_ratio_is_exact_with_expected_factor_count() {
        for lambda in partitions_up_to(10) {
            for p_mod in 1..=5usize {
                let ratio = nonpfold_core_ratio(&lambda, p_mod).unwrap();
                let (mu, _) = decompose(&lambda, p_mod).unwrap();
                assert_eq!(
                    ratio.factor_count,
                    (p_mod - 1) * mu.size(),
                    "{} p={}",
                    lambda,
                    p_mod
                );
                assert!(ratio.ratio > BigInt::zero());
            }
        }
    }

    #[test]
    fn core_hooks_embed_into_partition_hooks() {
        use std::collections::HashMap;
        for lambda in partitions_up_to(10) {
            for p_mod in 2..=4usize {
                let core = core_by_strip_removal(&lambda, p_mod).unwrap().core;
                let mut counts: HashMap<usize, i64> = HashMap::new();
                for h in lambda.hook_lengths() {
                    *counts.entry(h).or_insert(0) += 1;
                }
                for h in core.hook_lengths() {
                    let slot = counts.entry(h).or_insert(0);
                    *slot -= 1;
                    assert!(*slot >= 0, "hook {} of core exceeds {} p={}", h, lambda, p_mod);
                }
            }
        }
    }

    #[test]
    fn core_ratio_young_cell_oracle_at_scale() {
        // a three-component instance with spread-out charges: the windowed
        // Maya pairing must match the plain Young-diagram computation
        let mu: PQuotient = "2;2,1;1,1".parse().unwrap();
        let c = crate::core_quotient::CharacteristicVector::new(vec![-10, -5, 15]).unwrap();
        let lambda = compose(&mu, &c).unwrap();
        assert_eq!(lambda.size(), 571);
        let core = core_from_charvec(&c).unwrap();
        let ratio = nonpfold_core_ratio(&lambda, 3).unwrap();

        let filter_product = |part: &Partition| {
            part.hook_lengths()
                .into_iter()
                .filter(|h| h % 3 != 0)
                .fold(BigInt::one(), |acc, h| acc * BigInt::from(h))
        };
        // compare multiplicatively so an inexact division cannot hide
        assert_eq!(&ratio.ratio * filter_product(&core), filter_product(&lambda));
        assert_eq!(ratio.factor_count, 2 * mu.size());
    }

    #[test]
    fn attractor_examples() {
        let att = attractors(&[-2.0, -1.0, 3.0]);
        assert_eq!(att.alphas, vec![5.0, -4.0, 20.0]);
        let att = attractors(&[-3.0, 3.0]);
        assert_eq!(att.alphas, vec![-6.0, 6.0]);
        let att = attractors(&[0.0, 0.0, 0.0]);
        assert_eq!(att.alphas, vec![0.0, 0.0, 0.0]);
        let att = attractors(&[7.0]);
        assert_eq!(att.alphas, vec![1.0]);
        assert_eq!(
            attractor_values_exact(&[-2, -1, 3]),
            vec![BigInt::from(5), BigInt::from(-4), BigInt::from(20)]
        );
    }

    #[test]
    fn attractors_respect_permutations() {
        let base = [-2.0, -1.0, 3.0, 1.0];
        let alphas = attractors(&base).alphas;
        let perm = [2usize, 0, 3, 1];
        let permuted: Vec<f64> = perm.iter().map(|&i| base[i]).collect();
        let permuted_alphas = attractors(&permuted).alphas;
        for (pos, &src) in perm.iter().enumerate() {
            assert_eq!(permuted_alphas[pos], alphas[src]);
        }
    }

    #[test]
    fn hook_ratio_growth_coefficient_edges() {
        let empty = PQuotient::empty(3).unwrap();
        assert_eq!(hook_ratio_growth_coefficient(&empty, &[-2.0, -1.0, 3.0], 0).unwrap(), 1.0);
        let single: PQuotient = "2,1".parse().unwrap();
        assert_eq!(hook_ratio_growth_coefficient(&single, &[0.0], 0).unwrap(), 1.0);
        assert!(hook_ratio_growth_coefficient(&single, &[1.0, -1.0], 0).is_err());
    }

    #[test]
    fn hook_ratio_growth_tiny_case() {
        // p=2, mu=((1), empty), a=(-1,1): scaled ratios head toward 4
        let mu: PQuotient = "1;".parse().unwrap();
        let samples = hook_ratio_growth_samples(&mu, &[-1, 1], &[1, 2, 4, 8, 16, 32, 50]).unwrap();
        let coefficient = hook_ratio_growth_coefficient_exact(&mu, &[-1, 1], samples.last().unwrap().ht_parity)
            .unwrap()
            .to_f64()
            .unwrap();
        assert_eq!(coefficient.abs(), 4.0);
        // deviation from |A| shrinks and the last sample sits within 5%
        let deviations: Vec<f64> = samples
            .iter()
            .map(|s| (s.scaled_ratio - coefficient.abs()).abs())
            .collect();
        assert!(deviations.windows(2).all(|w| w[1] <= w[0]));
        assert!((samples.last().unwrap().scaled_ratio / coefficient.abs() - 1.0).abs() < 0.05);
        // empty quotient: constant 1
        let empty = PQuotient::empty(2).unwrap();
        let samples = hook_ratio_growth_samples(&empty, &[-1, 1], &[1, 5, 10]).unwrap();
        assert!(samples.iter().all(|s| s.scaled_ratio == 1.0));
    }

    #[test]
    fn hook_ratio_growth_samples_validates_input() {
        let mu: PQuotient = "1;".parse().unwrap();
        assert!(hook_ratio_growth_samples(&mu, &[1, 1], &[1, 2]).is_err());
        assert!(hook_ratio_growth_samples(&mu, &[-1, 1], &[2, 2]).is_err());
        assert!(hook_ratio_growth_samples(&mu, &[-1, 1], &[0, 1]).is_err());
    }
}
