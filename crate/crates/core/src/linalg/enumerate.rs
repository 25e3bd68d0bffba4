use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use super::{FpVector, GenMatrixCode};

/// Largest dimension enumerated exhaustively unless the caller raises it.
pub const DEFAULT_DIMENSION_BUDGET: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumError {
    DimensionOverBudget { dimension: usize, budget: usize },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::DimensionOverBudget { dimension, budget } => {
                write!(f, "dimension {dimension} exceeds the enumeration budget {budget}")
            }
        }
    }
}

/// Weight distribution: weight -> number of codewords of that weight.
///
/// When `complete` is false only weights up to `truncation_bound` are exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    pub complete: bool,
    pub counts: BTreeMap<usize, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation_bound: Option<usize>,
}

impl WeightEnumerator {
    pub fn from_counts(counts: &[u64]) -> Self {
        WeightEnumerator {
            complete: true,
            counts: counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(w, &c)| (w, c))
                .collect(),
            truncation_bound: None,
        }
    }

    pub fn from_pairs(pairs: &[(usize, u64)]) -> Self {
        WeightEnumerator {
            complete: true,
            counts: pairs.iter().copied().filter(|&(_, c)| c != 0).collect(),
            truncation_bound: None,
        }
    }

    pub fn truncated(counts: BTreeMap<usize, u64>, bound: usize) -> Self {
        WeightEnumerator {
            complete: false,
            counts,
            truncation_bound: Some(bound),
        }
    }

    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    /// Smallest nonzero weight present.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn merge(&mut self, other: &WeightEnumerator) {
        for (&w, &c) in &other.counts {
            *self.counts.entry(w).or_insert(0) += c;
        }
        self.complete &= other.complete;
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&w, &c) in &self.counts {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}z^{w}")?;
            }
        }
        if !self.complete {
            write!(f, " + ...")?;
        }
        Ok(())
    }
}

/// Weight counts (indexed by weight) of the codewords whose top `fixed`
/// coefficients equal the base-p digits of `part`; the remaining coefficients
/// run through a modular Gray code, one row addition per step.
pub fn weight_enumerator_part<V: FpVector>(code: &GenMatrixCode<V>, fixed: usize, part: u64) -> Vec<u64> {
    let p = code.modulus();
    let k = code.dimension();
    let rows = code.rows();
    assert!(fixed <= k, "cannot fix more coefficients than the dimension");
    let free = k - fixed;

    let mut word = V::zeros(p, code.len());
    let mut rest = part;
    for row in rows.iter().skip(free) {
        let c = (rest % p as u64) as u8;
        rest /= p as u64;
        if c != 0 {
            word.axpy(c, row);
        }
    }

    let mut counts = vec![0u64; code.len() + 1];
    counts[word.weight()] += 1;
    let total = (p as u64).pow(free as u32);
    for t in 1..total {
        let mut j = 0;
        let mut s = t;
        while s % p as u64 == 0 {
            s /= p as u64;
            j += 1;
        }
        word.axpy(1, &rows[j]);
        counts[word.weight()] += 1;
    }
    counts
}

/// Complete weight distribution by visiting all p^k codewords.
pub fn weight_enumerator_exhaustive<V: FpVector>(
    code: &GenMatrixCode<V>,
    budget: usize,
) -> Result<WeightEnumerator, EnumError> {
    if code.dimension() > budget {
        return Err(EnumError::DimensionOverBudget {
            dimension: code.dimension(),
            budget,
        });
    }
    Ok(WeightEnumerator::from_counts(&weight_enumerator_part(code, 0, 0)))
}

/// Reference enumerator: encodes every coefficient vector from scratch.
pub fn weight_enumerator_naive<V: FpVector>(code: &GenMatrixCode<V>) -> WeightEnumerator {
    let p = code.modulus() as u64;
    let k = code.dimension();
    let mut counts = vec![0u64; code.len() + 1];
    let mut coeffs = vec![0u8; k];
    for idx in 0..p.pow(k as u32) {
        let mut r = idx;
        for c in coeffs.iter_mut() {
            *c = (r % p) as u8;
            r /= p;
        }
        counts[code.encode(&coeffs).weight()] += 1;
    }
    WeightEnumerator::from_counts(&counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Gf3Vec;
    use alloc::string::ToString;

    #[test]
    fn zero_code_enumerator() {
        let c = GenMatrixCode::<Gf3Vec>::zero(3, 5);
        let e = weight_enumerator_exhaustive(&c, 20).unwrap();
        assert_eq!(e.counts.into_iter().collect::<Vec<_>>(), [(0, 1)]);
    }

    #[test]
    fn budget_is_enforced() {
        let c = GenMatrixCode::<Gf3Vec>::full_space(3, 6);
        assert_eq!(
            weight_enumerator_exhaustive(&c, 5).unwrap_err(),
            EnumError::DimensionOverBudget {
                dimension: 6,
                budget: 5
            }
        );
    }

    #[test]
    fn parts_sum_to_whole() {
        let c = GenMatrixCode::<Gf3Vec>::full_space(3, 4);
        let whole = weight_enumerator_part(&c, 0, 0);
        let mut acc = vec![0u64; 5];
        for part in 0..9 {
            for (a, b) in acc.iter_mut().zip(weight_enumerator_part(&c, 2, part)) {
                *a += b;
            }
        }
        assert_eq!(acc, whole);
        // binomial(4, w) 2^w
        assert_eq!(whole, [1, 8, 24, 32, 16]);
    }

    #[test]
    fn display_polynomial() {
        let e = WeightEnumerator::from_pairs(&[(0, 1), (51, 1296), (81, 2)]);
        assert_eq!(e.to_string(), "1 + 1296z^51 + 2z^81");
    }
}
