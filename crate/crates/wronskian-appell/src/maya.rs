//! Maya diagrams: doubly infinite 0/1 sequences, eventually filled to the
//! left and empty to the right, stored in a unique finite normal form.
//!
//! A diagram is kept as `(offset, word)` where every position below `offset`
//! is filled, every position at or above `offset + word.len()` is empty, and
//! `word[i]` tells whether position `offset + i` is filled. The word starts
//! with an empty box and ends with a filled box (or is empty), which makes
//! the representation unique: `offset` is the lowest empty position and
//! `offset + word.len() - 1` the highest filled one.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    offset: i64,
    word: Vec<bool>,
}

impl MayaDiagram {
    /// Normalizes a window description: positions below `start` are filled,
    /// positions at or above `start + bits.len()` are empty, and `bits`
    /// covers the rest. The window must contain every deviation from the
    /// eventually-constant tails.
    pub fn from_window(mut start: i64, mut bits: Vec<bool>) -> Self {
        let first_empty = bits.iter().position(|&b| !b);
        match first_empty {
            Some(k) => {
                bits.drain(..k);
                start += k as i64;
            }
            None => {
                start += bits.len() as i64;
                bits.clear();
            }
        }
        while bits.last() == Some(&false) {
            bits.pop();
        }
        MayaDiagram {
            offset: start,
            word: bits,
        }
    }

    /// The diagram of the empty partition: exactly the negative positions
    /// are filled.
    pub fn empty_partition() -> Self {
        MayaDiagram {
            offset: 0,
            word: Vec::new(),
        }
    }

    /// The diagram `M_lambda`: negatives plus the degree vector entries.
    pub fn from_partition(lambda: &Partition) -> Self {
        let dv = lambda.degree_vector();
        let top = match dv.entries().first() {
            Some(&n) => n,
            None => return MayaDiagram::empty_partition(),
        };
        let mut bits = vec![false; top + 1];
        for &n in dv.entries() {
            bits[n] = true;
        }
        MayaDiagram::from_window(0, bits)
    }

    pub fn is_filled(&self, pos: i64) -> bool {
        if pos < self.offset {
            true
        } else {
            let idx = (pos - self.offset) as usize;
            self.word.get(idx).copied().unwrap_or(false)
        }
    }

    /// Lowest empty position.
    pub fn first_empty(&self) -> i64 {
        self.offset
    }

    /// Highest filled position; `offset - 1` when the word is empty.
    pub fn last_filled(&self) -> i64 {
        self.offset + self.word.len() as i64 - 1
    }

    /// Filled boxes at non-negative positions minus empty boxes at negative
    /// positions. Equals `offset` plus the number of set bits in the word.
    pub fn charge(&self) -> i64 {
        self.offset + self.word.iter().filter(|&&b| b).count() as i64
    }

    /// The equivalent diagram with every position moved by `t`.
    pub fn shift(&self, t: i64) -> Self {
        MayaDiagram {
            offset: self.offset + t,
            word: self.word.clone(),
        }
    }

    /// The charge-zero representative among the diagrams equivalent to
    /// `self`.
    pub fn canonical(&self) -> Self {
        self.shift(-self.charge())
    }

    /// The partition and charge encoded by the diagram. Equivalent diagrams
    /// yield the same partition and shifted charges; composing with
    /// [`MayaDiagram::from_partition`] recovers `lambda` with charge `r`.
    pub fn to_partition(&self) -> (Partition, i64) {
        // part for each filled box = number of empty boxes below it; only
        // boxes inside the word contribute.
        let mut parts = Vec::new();
        let mut empties_below = vec![0usize; self.word.len()];
        let mut count = 0;
        for (i, &b) in self.word.iter().enumerate() {
            empties_below[i] = count;
            if !b {
                count += 1;
            }
        }
        for (i, &b) in self.word.iter().enumerate().rev() {
            if b {
                parts.push(empties_below[i]);
            }
        }
        let partition = Partition::new(parts).expect("counts are weakly decreasing and positive");
        (partition, self.charge())
    }

    /// The `p`-modular decomposition: component `i` is filled at `m` exactly
    /// when `self` is filled at `p*m + i`. Requires a charge-zero diagram so
    /// that the component ordering is anchored the same way for every input;
    /// the component charges sum to zero.
    pub fn p_decompose(&self, p: usize) -> Result<Vec<MayaDiagram>> {
        if p == 0 {
            return Err(Error::invalid("p must be a positive integer"));
        }
        if self.charge() != 0 {
            return Err(Error::invalid(format!(
                "p-modular decomposition needs a charge-0 diagram, got charge {}",
                self.charge()
            )));
        }
        let p_i64 = p as i64;
        let mut components = Vec::with_capacity(p);
        for i in 0..p_i64 {
            let lo = num_integer::Integer::div_floor(&(self.offset - i), &p_i64) - 1;
            let hi = num_integer::Integer::div_floor(&(self.last_filled() - i), &p_i64) + 1;
            let bits = (lo..=hi).map(|m| self.is_filled(p_i64 * m + i)).collect();
            components.push(MayaDiagram::from_window(lo, bits));
        }
        debug_assert_eq!(components.iter().map(|c| c.charge()).sum::<i64>(), 0);
        Ok(components)
    }

    /// Inverse of [`MayaDiagram::p_decompose`]: interleaves the components,
    /// filling `p*m + i` when component `i` is filled at `m`.
    pub fn p_compose(components: &[MayaDiagram]) -> Result<MayaDiagram> {
        let p = components.len();
        if p == 0 {
            return Err(Error::invalid("need at least one component diagram"));
        }
        let p_i64 = p as i64;
        let lo = components
            .iter()
            .enumerate()
            .map(|(i, c)| p_i64 * c.first_empty() + i as i64)
            .min()
            .unwrap();
        let hi = components
            .iter()
            .enumerate()
            .map(|(i, c)| p_i64 * c.last_filled() + i as i64)
            .max()
            .unwrap();
        let bits = (lo..=hi.max(lo - 1))
            .map(|n| {
                let i = n.rem_euclid(p_i64);
                let m = (n - i).div_euclid(p_i64);
                components[i as usize].is_filled(m)
            })
            .collect();
        Ok(MayaDiagram::from_window(lo, bits))
    }

    /// Renders the window `[from, to)` with filled and empty circles and the
    /// origin marker between positions -1 and 0.
    pub fn render(&self, from: i64, to: i64) -> String {
        let mut out = String::from("…");
        for pos in from..to {
            if pos == 0 {
                out.push('|');
            }
            out.push(if self.is_filled(pos) { '●' } else { '○' });
        }
        out.push('…');
        out
    }

    /// A window that shows every deviation from the constant tails and the
    /// origin.
    pub fn render_auto(&self) -> String {
        let from = self.first_empty().min(0) - 1;
        let to = (self.last_filled() + 2).max(1);
        self.render(from, to)
    }
}

impl fmt::Debug for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MayaDiagram(offset={}, {})", self.offset, self.render_auto())
    }
}
