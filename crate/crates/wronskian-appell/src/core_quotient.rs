//! The bijection between a partition and its (p-core, p-quotient) pair,
//! characteristic vectors, the core-size formula, and border-strip removal
//! with height parity tracked on Maya diagrams.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::maya::MayaDiagram;
use crate::partitions::Partition;

/// The charges of the p modular component diagrams; p integers summing to
/// zero. Canonically labels a p-core.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacteristicVector {
    entries: Vec<i64>,
}

impl CharacteristicVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("characteristic vector must have p >= 1 entries"));
        }
        let sum: i64 = entries.iter().sum();
        if sum != 0 {
            return Err(Error::invalid(format!(
                "characteristic vector entries must sum to 0, got sum {}",
                sum
            )));
        }
        Ok(CharacteristicVector { entries })
    }

    pub fn zeros(p: usize) -> Self {
        CharacteristicVector {
            entries: vec![0; p.max(1)],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn p(&self) -> usize {
        self.entries.len()
    }
}

impl fmt::Display for CharacteristicVector {
    /// Textual form: comma-separated signed integers, e.g. `2,-1,-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl FromStr for CharacteristicVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::invalid(format!("bad characteristic entry {:?}", tok)))
            })
            .collect::<Result<Vec<_>>>()?;
        CharacteristicVector::new(entries)
    }
}

/// An ordered p-tuple of partitions; carries everything about a partition
/// except its p-core.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct PQuotient {
    components: Vec<Partition>,
}

impl PQuotient {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("p-quotient must have p >= 1 components"));
        }
        Ok(PQuotient { components })
    }

    /// The tuple of p empty partitions.
    pub fn empty(p: usize) -> Result<Self> {
        PQuotient::new(vec![Partition::empty(); p])
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn p(&self) -> usize {
        self.components.len()
    }

    /// Total size over the components.
    pub fn size(&self) -> usize {
        self.components.iter().map(|c| c.size()).sum()
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.size()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|c| c.is_empty())
    }

    /// Componentwise containment in the product lattice.
    pub fn contains(&self, other: &PQuotient) -> bool {
        self.p() == other.p()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.contains(b))
    }

    /// All tuples contained componentwise in `self` whose total size is
    /// `self.size() - j`, each exactly once, in increasing lexicographic
    /// order on the component part sequences.
    pub fn subquotients_removing(&self, j: usize) -> Vec<PQuotient> {
        let total = self.size();
        if j > total {
            return Vec::new();
        }
        let target = total - j;
        let grouped: Vec<Vec<Vec<Partition>>> = self
            .components
            .iter()
            .map(|c| c.subpartitions_by_size())
            .collect();

        let mut out = Vec::new();
        let mut picked: Vec<Partition> = Vec::with_capacity(self.p());
        fn rec(
            grouped: &[Vec<Vec<Partition>>],
            idx: usize,
            remaining: usize,
            picked: &mut Vec<Partition>,
            out: &mut Vec<PQuotient>,
        ) {
            if idx == grouped.len() {
                if remaining == 0 {
                    out.push(PQuotient {
                        components: picked.clone(),
                    });
                }
                return;
            }
            let max_rest: usize = grouped[idx + 1..]
                .iter()
                .map(|g| g.len() - 1)
                .sum();
            let max_here = (grouped[idx].len() - 1).min(remaining);
            let min_here = remaining.saturating_sub(max_rest);
            for s in min_here..=max_here {
                for part in &grouped[idx][s] {
                    picked.push(part.clone());
                    rec(grouped, idx + 1, remaining - s, picked, out);
                    picked.pop();
                }
            }
        }
        rec(&grouped, 0, target, &mut picked, &mut out);
        out.sort();
        out
    }

    /// The component Maya diagrams `M^(i)` used in recomposition: the
    /// charge-`c_i` representative of each component's diagram.
    pub fn component_diagrams(&self, c: &CharacteristicVector) -> Result<Vec<MayaDiagram>> {
        if c.p() != self.p() {
            return Err(Error::invalid(format!(
                "quotient has {} components but characteristic vector has {}",
                self.p(),
                c.p()
            )));
        }
        Ok(self
            .components
            .iter()
            .zip(c.entries())
            .map(|(mu, &ci)| MayaDiagram::from_partition(mu).canonical().shift(ci))
            .collect())
    }
}

impl fmt::Display for PQuotient {
    /// Textual form: semicolon-separated partitions, empty component is an
    /// empty field, e.g. `1,1;4;2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl FromStr for PQuotient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(';')
            .map(|tok| tok.parse::<Partition>())
            .collect::<Result<Vec<_>>>()?;
        PQuotient::new(components)
    }
}

/// Decomposes `lambda` into its p-quotient and characteristic vector via the
/// p-modular decomposition of the charge-zero Maya diagram.
pub fn decompose(lambda: &Partition, p: usize) -> Result<(PQuotient, CharacteristicVector)> {
    let hat = MayaDiagram::from_partition(lambda).canonical();
    let comps = hat.p_decompose(p)?;
    let charges: Vec<i64> = comps.iter().map(|c| c.charge()).collect();
    let mus: Vec<Partition> = comps.iter().map(|c| c.to_partition().0).collect();
    let quotient = PQuotient::new(mus)?;
    let charvec = CharacteristicVector::new(charges)
        .map_err(|_| Error::internal("component charges of a charge-0 diagram must sum to 0"))?;
    Ok((quotient, charvec))
}

/// Rebuilds the unique partition with p-quotient `mu` and the p-core labeled
/// by `c`. Exact inverse of [`decompose`].
pub fn compose(mu: &PQuotient, c: &CharacteristicVector) -> Result<Partition> {
    let comps = mu.component_diagrams(c)?;
    let m = MayaDiagram::p_compose(&comps)?;
    debug_assert_eq!(m.charge(), 0);
    Ok(m.to_partition().0)
}

/// The p-core labeled by a characteristic vector: the partition whose
/// quotient is empty and whose component charges are `c`.
pub fn core_from_charvec(c: &CharacteristicVector) -> Result<Partition> {
    compose(&PQuotient::empty(c.p())?, c)
}

/// Size of the p-core directly from its characteristic vector:
/// `(p/2) * sum(c_j^2) + sum(j * c_j)`.
pub fn core_size_from_charvec(c: &CharacteristicVector) -> Result<u64> {
    let p = c.p() as i128;
    let sq: i128 = c.entries().iter().map(|&x| (x as i128) * (x as i128)).sum();
    let lin: i128 = c
        .entries()
        .iter()
        .enumerate()
        .map(|(j, &x)| (j as i128) * (x as i128))
        .sum();
    let twice = p * sq + 2 * lin;
    if twice % 2 != 0 {
        return Err(Error::internal(
            "core size formula produced a non-integer; charge sum must be zero",
        ));
    }
    let size = twice / 2;
    if size < 0 {
        return Err(Error::internal("core size formula produced a negative value"));
    }
    Ok(size as u64)
}

/// True when the p-quotient of `lambda` is empty, i.e. `lambda` equals its
/// own p-core.
pub fn is_p_core(lambda: &Partition, p: usize) -> Result<bool> {
    let (quotient, _) = decompose(lambda, p)?;
    Ok(quotient.is_empty())
}

/// Which movable bullet the greedy strip removal picks first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StripOrder {
    LeftmostFirst,
    RightmostFirst,
}

/// Result of removing all border strips of size `p`.
#[derive(Clone, Debug)]
pub struct StripRemoval {
    pub core: Partition,
    /// Parity of the summed strip heights, independent of removal order.
    pub ht_parity: u8,
    /// Number of strips removed; equals the quotient size.
    pub strips_removed: usize,
}

/// Removes border strips of size `p` until none remains, tracking the parity
/// of the total height. On the Maya diagram a removal is a bullet moved `p`
/// steps left into an empty box; its height is the number of bullets passed.
pub fn core_by_strip_removal(lambda: &Partition, p: usize) -> Result<StripRemoval> {
    core_by_strip_removal_ordered(lambda, p, StripOrder::LeftmostFirst)
}

/// Same as [`core_by_strip_removal`] with an explicit greedy order; the core
/// and the height parity do not depend on the choice.
pub fn core_by_strip_removal_ordered(
    lambda: &Partition,
    p: usize,
    order: StripOrder,
) -> Result<StripRemoval> {
    if p == 0 {
        return Err(Error::invalid("p must be a positive integer"));
    }
    let hat = MayaDiagram::from_partition(lambda).canonical();
    let offset = hat.first_empty();
    let len = (hat.last_filled() - offset + 1).max(0) as usize;
    let mut word: Vec<bool> = (0..len).map(|i| hat.is_filled(offset + i as i64)).collect();

    // a bullet at index x moves to x-p when that target is inside the word
    // and empty; targets below the word start are filled, so x >= p.
    let movable = |word: &[bool], x: usize| x >= p && word[x] && !word[x - p];
    let mut total_height = 0usize;
    let mut strips = 0usize;
    loop {
        let pick = match order {
            StripOrder::LeftmostFirst => (0..word.len()).find(|&x| movable(&word, x)),
            StripOrder::RightmostFirst => (0..word.len()).rev().find(|&x| movable(&word, x)),
        };
        let Some(x) = pick else { break };
        let passed = word[x - p + 1..x].iter().filter(|&&b| b).count();
        word[x - p] = true;
        word[x] = false;
        total_height += passed;
        strips += 1;
    }
    let core_diagram = MayaDiagram::from_window(offset, word);
    debug_assert_eq!(core_diagram.charge(), 0);
    Ok(StripRemoval {
        core: core_diagram.to_partition().0,
        ht_parity: (total_height % 2) as u8,
        strips_removed: strips,
    })
}

/// Parity of the total strip height between two partitions with the same
/// p-core, computed as the XOR of their core-relative parities.
pub fn ht_p_parity_between(lambda: &Partition, smaller: &Partition, p: usize) -> Result<u8> {
    let a = core_by_strip_removal(lambda, p)?;
    let b = core_by_strip_removal(smaller, p)?;
    if a.core != b.core {
        return Err(Error::invalid(format!(
            "partitions have different {}-cores: ({}) vs ({})",
            p, a.core, b.core
        )));
    }
    Ok(a.ht_parity ^ b.ht_parity)
}
