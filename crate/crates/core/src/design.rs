//! Support designs of codeword classes, 2-design verification and incidence
//! matrices.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{FpVector, GenMatrixCode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DesignError {
    EmptyWeightClass { weight: usize },
    DimensionOverBudget { dimension: usize, budget: usize },
    NonUniformBlocks,
    NotADesign,
    BlockOutOfRange { point: usize, v: usize },
    UnsupportedStrength(usize),
}

impl fmt::Display for DesignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignError::EmptyWeightClass { weight } => write!(f, "no codewords of weight {weight}"),
            DesignError::DimensionOverBudget { dimension, budget } => {
                write!(f, "dimension {dimension} exceeds the enumeration budget {budget}")
            }
            DesignError::NonUniformBlocks => write!(f, "blocks have different sizes"),
            DesignError::NotADesign => write!(f, "block system is not a 2-design"),
            DesignError::BlockOutOfRange { point, v } => write!(f, "point {point} outside 0..{v}"),
            DesignError::UnsupportedStrength(t) => write!(f, "only t = 1 and t = 2 are supported, got {t}"),
        }
    }
}

/// Simple incidence structure on points `0..v`. Blocks are sorted point lists
/// kept in lexicographic order without repeats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Design {
    pub v: usize,
    pub blocks: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: usize,
    pub b: usize,
    pub k: usize,
    pub r: usize,
    pub lambda: usize,
}

impl Design {
    pub fn new(v: usize, blocks: impl IntoIterator<Item = Vec<u32>>) -> Result<Self, DesignError> {
        let mut set = BTreeSet::new();
        for mut b in blocks {
            b.sort_unstable();
            b.dedup();
            if let Some(&pt) = b.iter().find(|&&pt| pt as usize >= v) {
                return Err(DesignError::BlockOutOfRange { point: pt as usize, v });
            }
            set.insert(b);
        }
        Ok(Design {
            v,
            blocks: set.into_iter().collect(),
        })
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Common block size, if all blocks agree.
    pub fn block_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    /// Point -> set of blocks containing it, as bitsets over block indices.
    fn point_columns(&self) -> Vec<Vec<u64>> {
        let words = self.blocks.len().div_ceil(64);
        let mut cols = vec![vec![0u64; words]; self.v];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &pt in block {
                cols[pt as usize][bi / 64] |= 1 << (bi % 64);
            }
        }
        cols
    }

    /// Exact check that every `t`-subset of points lies in the same number of
    /// blocks (`t` in 1..=2). Returns that number when it is constant.
    pub fn verify_t_design(&self, t: usize) -> Result<Option<usize>, DesignError> {
        if self.block_size().is_none() && !self.blocks.is_empty() {
            return Err(DesignError::NonUniformBlocks);
        }
        let cols = self.point_columns();
        let count =
            |a: &[u64], b: &[u64]| -> usize { a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum() };
        match t {
            1 => {
                let mut reps = cols
                    .iter()
                    .map(|c| c.iter().map(|w| w.count_ones() as usize).sum::<usize>());
                let first = reps.next().unwrap_or(0);
                Ok(reps.all(|r| r == first).then_some(first))
            }
            2 => {
                let mut lambda = None;
                for i in 0..self.v {
                    for j in i + 1..self.v {
                        let c = count(&cols[i], &cols[j]);
                        match lambda {
                            None => lambda = Some(c),
                            Some(l) if l != c => return Ok(None),
                            _ => {}
                        }
                    }
                }
                Ok(lambda)
            }
            other => Err(DesignError::UnsupportedStrength(other)),
        }
    }

    /// `(v, b, k, r, λ)` with `r = bk/v` and `λ = r(k-1)/(v-1)`, both required
    /// to be integers.
    pub fn parameters(&self) -> Result<DesignParams, DesignError> {
        let k = self.block_size().ok_or(DesignError::NonUniformBlocks)?;
        let (v, b) = (self.v, self.blocks.len());
        if v < 2 || (b * k) % v != 0 {
            return Err(DesignError::NotADesign);
        }
        let r = b * k / v;
        if (r * (k.max(1) - 1)) % (v - 1) != 0 {
            return Err(DesignError::NotADesign);
        }
        Ok(DesignParams {
            v,
            b,
            k,
            r,
            lambda: r * (k.max(1) - 1) / (v - 1),
        })
    }

    /// 0/1 incidence rows, one per block in block order.
    pub fn incidence_rows<V: FpVector>(&self, p: u8) -> Vec<V> {
        self.blocks
            .iter()
            .map(|block| {
                let mut row = V::zeros(p, self.v);
                for &pt in block {
                    row.set(pt as usize, 1);
                }
                row
            })
            .collect()
    }

    /// Code over GF(p) spanned by the incidence rows.
    pub fn code<V: FpVector>(&self, p: u8) -> GenMatrixCode<V> {
        GenMatrixCode::from_rows(p, self.v, self.incidence_rows::<V>(p)).expect("rows have length v")
    }

    /// Copy with one block removed.
    pub fn without_block(&self, index: usize) -> Design {
        let mut blocks = self.blocks.clone();
        blocks.remove(index);
        Design { v: self.v, blocks }
    }
}

/// Design whose blocks are the distinct supports of the given words of weight `w`.
pub fn support_design_from_words<V: FpVector, I: IntoIterator<Item = V>>(
    v: usize,
    words: I,
    w: usize,
) -> Result<Design, DesignError> {
    let blocks: BTreeSet<Vec<u32>> = words
        .into_iter()
        .filter(|c| c.weight() == w)
        .map(|c| c.support().into_iter().map(|i| i as u32).collect())
        .collect();
    if blocks.is_empty() {
        return Err(DesignError::EmptyWeightClass { weight: w });
    }
    Design::new(v, blocks)
}

/// Support design of all weight-`w` codewords, found by enumerating the code.
pub fn support_design<V: FpVector>(code: &GenMatrixCode<V>, w: usize, budget: usize) -> Result<Design, DesignError> {
    let k = code.dimension();
    if k > budget {
        return Err(DesignError::DimensionOverBudget { dimension: k, budget });
    }
    let p = code.modulus() as u64;
    let rows = code.rows();
    let mut word = V::zeros(code.modulus(), code.len());
    let mut blocks = BTreeSet::new();
    for t in 1..p.pow(k as u32) {
        let mut j = 0;
        let mut s = t;
        while s % p == 0 {
            s /= p;
            j += 1;
        }
        word.axpy(1, &rows[j]);
        if word.weight() == w {
            blocks.insert(word.support().into_iter().map(|i| i as u32).collect::<Vec<_>>());
        }
    }
    if blocks.is_empty() {
        return Err(DesignError::EmptyWeightClass { weight: w });
    }
    Design::new(code.len(), blocks)
}
