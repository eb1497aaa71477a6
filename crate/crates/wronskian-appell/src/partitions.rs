//! Integer partitions and their Young-diagram combinatorics: degree vectors,
//! hook lengths, containment, border strips and standard-tableau path counts
//! in the Young lattice.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is the empty sequence. Parts are stored without
/// trailing zeros, so equality of values is equality of representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts. Trailing zeros are stripped; an
    /// increasing step or an interior zero is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "partition parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts (the length `r`).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes in the Young diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part at `row` (0-based), 0 beyond the last row.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// The conjugate partition (diagram transposed).
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// The degree vector `n_i = lambda_i + r - i` (1-based `i`), strictly
    /// decreasing with positive entries.
    pub fn degree_vector(&self) -> DegreeVector {
        let r = self.len();
        let entries = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + r - (i + 1))
            .collect();
        DegreeVector { entries }
    }

    /// Hook length of the box at `(row, col)` (0-based); the box must lie in
    /// the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - (col + 1);
        let leg = self.parts[row + 1..]
            .iter()
            .take_while(|&&p| p > col)
            .count();
        arm + leg + 1
    }

    /// All hook lengths, row by row. The result is a multiset of size
    /// `|lambda|`.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                hooks.push(self.hook_length(i, j));
            }
        }
        hooks
    }

    /// Cell-wise containment in the Young lattice: `mu <= self` iff
    /// `mu_i <= lambda_i` for all rows.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.parts
            .iter()
            .enumerate()
            .all(|(i, &m)| m <= self.part(i))
    }

    /// `|self| - |mu|` when `mu <= self`, `None` otherwise.
    pub fn size_difference(&self, mu: &Partition) -> Option<usize> {
        if self.contains(mu) {
            Some(self.size() - mu.size())
        } else {
            None
        }
    }

    /// Partitions covered by `self` in the Young lattice (one corner box
    /// removed).
    pub fn remove_corner(&self) -> Vec<Partition> {
        let mut down = Vec::new();
        for i in 0..self.len() {
            if self.parts[i] > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                down.push(Partition { parts });
            }
        }
        down
    }

    /// All subpartitions of `self`, grouped by size: entry `s` lists every
    /// `mu <= self` with `|mu| = s`, in increasing lexicographic order.
    pub fn subpartitions_by_size(&self) -> Vec<Vec<Partition>> {
        let total = self.size();
        let mut by_size: Vec<Vec<Partition>> = vec![Vec::new(); total + 1];
        let mut stack = vec![(Vec::<usize>::new(), 0usize)];
        while let Some((prefix, used)) = stack.pop() {
            by_size[used].push(Partition {
                parts: prefix.clone(),
            });
            let row = prefix.len();
            if row < self.len() {
                let cap = self.parts[row].min(*prefix.last().unwrap_or(&usize::MAX));
                for v in 1..=cap {
                    let mut next = prefix.clone();
                    next.push(v);
                    stack.push((next, used + v));
                }
            }
        }
        for group in &mut by_size {
            group.sort();
        }
        by_size
    }
}

impl fmt::Display for Partition {
    /// Textual form: comma-separated parts, empty string for the empty
    /// partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad partition part {:?}", tok)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The degree vector of a partition: strictly decreasing positive entries
/// `n_i = lambda_i + r - i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeVector {
    entries: Vec<usize>,
}

impl DegreeVector {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Recovers the partition via `lambda_i = n_i - r + i`.
    pub fn to_partition(&self) -> Partition {
        let r = self.entries.len();
        let parts = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &n)| n + (i + 1) - r)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", n)?;
        }
        Ok(())
    }
}

/// A border strip (rim hook): a connected skew diagram without a 2x2 square.
#[derive(Clone, Debug)]
pub struct BorderStrip {
    cells: Vec<(usize, usize)>,
}

impl BorderStrip {
    /// Validates connectivity and the no-2x2 condition; cells are 1-based
    /// `(row, col)` coordinates.
    pub fn new(cells: Vec<(usize, usize)>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::invalid("border strip must be nonempty"));
        }
        let set: std::collections::HashSet<_> = cells.iter().copied().collect();
        if set.len() != cells.len() {
            return Err(Error::invalid("border strip has duplicate cells"));
        }
        for &(i, j) in &set {
            if set.contains(&(i + 1, j)) && set.contains(&(i, j + 1)) && set.contains(&(i + 1, j + 1))
            {
                return Err(Error::invalid("border strip contains a 2x2 square"));
            }
        }
        // connectivity by edge adjacency
        let mut seen = std::collections::HashSet::new();
        let mut queue = vec![cells[0]];
        seen.insert(cells[0]);
        while let Some((i, j)) = queue.pop() {
            let mut neighbors = vec![(i + 1, j), (i, j + 1)];
            if i > 1 {
                neighbors.push((i - 1, j));
            }
            if j > 1 {
                neighbors.push((i, j - 1));
            }
            for nb in neighbors {
                if set.contains(&nb) && seen.insert(nb) {
                    queue.push(nb);
                }
            }
        }
        if seen.len() != set.len() {
            return Err(Error::invalid("border strip is not connected"));
        }
        Ok(BorderStrip { cells })
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// One less than the number of rows the strip occupies.
    pub fn height(&self) -> usize {
        let rows: std::collections::HashSet<_> = self.cells.iter().map(|&(i, _)| i).collect();
        rows.len() - 1
    }
}

/// Enumerates every single removal of a border strip of size `p` from
/// `lambda`, returning the smaller partition and the removed strip.
///
/// Works cell-wise on the Young diagram (containment plus connectivity and
/// no-2x2 checks), independently of any Maya-diagram reasoning, so it can
/// serve as an oracle for bullet-move implementations.
pub fn border_strip_removals(lambda: &Partition, p: usize) -> Vec<(Partition, BorderStrip)> {
    let mut out = Vec::new();
    if p == 0 || lambda.size() < p {
        return out;
    }
    for mu in &partitions_of_size(lambda.size() - p) {
        if !lambda.contains(mu) {
            continue;
        }
        let mut cells = Vec::with_capacity(p);
        for (i, &row) in lambda.parts.iter().enumerate() {
            for j in mu.part(i)..row {
                cells.push((i + 1, j + 1));
            }
        }
        if let Ok(strip) = BorderStrip::new(cells) {
            out.push((mu.clone(), strip));
        }
    }
    out
}

/// All partitions of `n`, in decreasing lexicographic order starting from
/// `(n)`.
pub fn partitions_of_size(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for v in (1..=remaining.min(max)).rev() {
            current.push(v);
            rec(remaining - v, v, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of size at most `n`: the empty partition first, then sizes
/// 1 through `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of_size).collect()
}

/// Number of standard Young tableaux of the skew shape `lambda/mu`, i.e. the
/// number of saturated chains from `mu` to `lambda` in the Young lattice.
///
/// Memoized recursion over down-covers of `lambda`; exact for any size.
pub fn syt_count(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if !lambda.contains(mu) {
        return Err(Error::invalid(format!(
            "({}) does not contain ({})",
            lambda, mu
        )));
    }
    let mut memo: HashMap<Partition, BigInt> = HashMap::new();
    fn rec(nu: &Partition, mu: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if nu == mu {
            return BigInt::one();
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for down in nu.remove_corner() {
            if down.contains(mu) {
                total += rec(&down, mu, memo);
            }
        }
        memo.insert(nu.clone(), total.clone());
        total
    }
    Ok(rec(lambda, mu, &mut memo))
}

/// `F_lambda`: paths from the empty partition to `lambda`.
pub fn syt_count_straight(lambda: &Partition) -> BigInt {
    syt_count(lambda, &Partition::empty()).expect("empty partition is always contained")
}
