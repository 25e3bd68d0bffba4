//! Minimum distance by Brouwer–Zimmermann information-set enumeration.
//!
//! The code is brought into systematic form on a sequence of column sets
//! chosen greedily from columns not used before. Enumerating every message of
//! weight at most `w` for each of these generator matrices proves a lower bound
//! on the weight of any codeword not yet seen; the search ends when that bound
//! meets the lightest codeword found.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{FpVector, GenMatrixCode};
use crate::poly::inv_mod;

/// Generator matrix in systematic form on `pivots`; `new_columns` of those
/// pivots were not pivots of any earlier set.
#[derive(Clone, Debug)]
pub struct InformationSet<V> {
    pub rows: Vec<V>,
    pub pivots: Vec<usize>,
    pub new_columns: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// True minimum distance with a witness.
    Exact,
    /// Every codeword of weight at most the bound.
    Bounded(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight<V> {
    pub distance: usize,
    pub witness: V,
    /// Codewords of weight `distance`; only known in bounded mode.
    pub count_at_distance: Option<u64>,
    /// `(message weight, lower bound, upper bound)` after each completed level.
    pub levels: Vec<(usize, usize, usize)>,
    pub ops: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BzError<V> {
    EmptyCode,
    /// Work cap hit; `lower <= d <= upper` still holds.
    BudgetExceeded {
        lower: usize,
        upper: usize,
        witness: Option<V>,
        ops: u64,
    },
}

impl<V> fmt::Display for BzError<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BzError::EmptyCode => write!(f, "minimum distance of the zero code is undefined"),
            BzError::BudgetExceeded { lower, upper, ops, .. } => {
                write!(
                    f,
                    "work cap reached after {ops} vector operations; {lower} <= d <= {upper}"
                )
            }
        }
    }
}

/// All codewords up to a weight bound, one representative per scalar class
/// (first nonzero coordinate 1), sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowWeightWords<V> {
    pub bound: usize,
    pub representatives: Vec<V>,
    pub ops: u64,
}

impl<V: FpVector> LowWeightWords<V> {
    /// Number of codewords (all scalar multiples) of weight exactly `w`.
    pub fn count(&self, w: usize) -> u64 {
        let mult = self.representatives.first().map_or(1, |v| v.modulus() as u64 - 1);
        self.representatives.iter().filter(|v| v.weight() == w).count() as u64 * mult
    }
}

pub fn information_sets<V: FpVector>(code: &GenMatrixCode<V>) -> Vec<InformationSet<V>> {
    let n = code.len();
    let p = code.modulus();
    let k = code.dimension();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let order: Vec<usize> = (0..n)
            .filter(|&c| !used[c])
            .chain((0..n).filter(|&c| used[c]))
            .collect();
        let mut rows: Vec<V> = code.rows().to_vec();
        let mut assigned = vec![false; k];
        let mut pivots = vec![0usize; k];
        let mut new_columns = 0;
        let mut done = 0;
        for &col in &order {
            if done == k {
                break;
            }
            let Some(r) = (0..k).find(|&r| !assigned[r] && rows[r].get(col) != 0) else {
                continue;
            };
            let lead = rows[r].get(col);
            if lead != 1 {
                rows[r].scale(inv_mod(lead, p));
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r {
                    let c = row.get(col);
                    if c != 0 {
                        row.axpy(p - c, &pivot_row);
                    }
                }
            }
            assigned[r] = true;
            pivots[r] = col;
            if !used[col] {
                new_columns += 1;
            }
            done += 1;
        }
        if new_columns == 0 {
            break;
        }
        for &c in &pivots {
            used[c] = true;
        }
        sets.push(InformationSet {
            rows,
            pivots,
            new_columns,
        });
    }
    sets
}

struct Search<'a, V> {
    p: u8,
    k: usize,
    n: usize,
    sets: &'a [InformationSet<V>],
    done: Vec<usize>,
    upper: usize,
    witness: Option<V>,
    collect_bound: Option<usize>,
    collected: BTreeSet<V>,
    ops: u64,
    cap: u64,
}

impl<V: FpVector> Search<'_, V> {
    fn lower(&self) -> usize {
        self.sets
            .iter()
            .zip(&self.done)
            .map(|(s, &w)| (w + 1).saturating_sub(self.k - s.new_columns))
            .sum()
    }

    /// Enumerate all messages of weight exactly `w` on set `j`. Returns false if
    /// the work cap was hit.
    fn level(&mut self, j: usize, w: usize) -> bool {
        let mut bufs: Vec<V> = (0..=w).map(|_| V::zeros(self.p, self.n)).collect();
        self.visit(j, w, 0, 0, &mut bufs)
    }

    fn visit(&mut self, j: usize, w: usize, depth: usize, start: usize, bufs: &mut [V]) -> bool {
        if depth == w {
            let word = &bufs[w];
            let wt = word.weight();
            if wt < self.upper {
                self.upper = wt;
                self.witness = Some(word.clone());
            }
            if let Some(b) = self.collect_bound {
                if wt <= b {
                    let mut rep = word.clone();
                    rep.normalize();
                    self.collected.insert(rep);
                }
            }
            return true;
        }
        let rows = &self.sets[j].rows;
        let max_coef = if depth == 0 { 1 } else { self.p - 1 };
        for i in start..=(self.k - (w - depth)) {
            for c in 1..=max_coef {
                if self.ops >= self.cap {
                    return false;
                }
                self.ops += 1;
                let (lo, hi) = bufs.split_at_mut(depth + 1);
                hi[0].assign_axpy(&lo[depth], c, &rows[i]);
                if !self.visit(j, w, depth + 1, i + 1, bufs) {
                    return false;
                }
            }
        }
        true
    }

    fn finished(&self) -> bool {
        match self.collect_bound {
            Some(b) => self.lower() > b,
            None => self.lower() >= self.upper,
        }
    }

    /// Run levels until finished. `levels` gets one entry per message weight.
    fn run(&mut self, levels: &mut Vec<(usize, usize, usize)>) -> Result<(), ()> {
        for w in 1..=self.k {
            if self.finished() {
                return Ok(());
            }
            for j in 0..self.sets.len() {
                if w < self.k - self.sets[j].new_columns {
                    continue;
                }
                while self.done[j] < w {
                    let next = self.done[j] + 1;
                    if !self.level(j, next) {
                        return Err(());
                    }
                    self.done[j] = next;
                }
                if self.collect_bound.is_none() && self.finished() {
                    break;
                }
            }
            levels.push((w, self.lower(), self.upper));
        }
        Ok(())
    }
}

/// Minimum distance of a nonzero code.
///
/// `cap` bounds the number of vector additions. In [`SearchMode::Bounded`] the
/// count of minimum-weight codewords is also returned when `d <= bound`.
pub fn min_weight_search<V: FpVector>(
    code: &GenMatrixCode<V>,
    mode: SearchMode,
    cap: u64,
) -> Result<MinWeight<V>, BzError<V>> {
    if code.dimension() == 0 {
        return Err(BzError::EmptyCode);
    }
    let sets = information_sets(code);
    let mut search = Search {
        p: code.modulus(),
        k: code.dimension(),
        n: code.len(),
        sets: &sets,
        done: vec![0; sets.len()],
        upper: code.len() + 1,
        witness: None,
        collect_bound: match mode {
            SearchMode::Exact => None,
            SearchMode::Bounded(b) => Some(b),
        },
        collected: BTreeSet::new(),
        ops: 0,
        cap,
    };
    let mut levels = Vec::new();
    if search.run(&mut levels).is_err() {
        return Err(BzError::BudgetExceeded {
            lower: search.lower().min(search.upper),
            upper: search.upper,
            witness: search.witness,
            ops: search.ops,
        });
    }
    let distance = search.upper;
    let count_at_distance = search.collect_bound.filter(|&b| distance <= b).map(|_| {
        search.collected.iter().filter(|v| v.weight() == distance).count() as u64 * (code.modulus() as u64 - 1)
    });
    Ok(MinWeight {
        distance,
        witness: search.witness.expect("a nonzero code has a nonzero codeword"),
        count_at_distance,
        levels,
        ops: search.ops,
    })
}

/// Every codeword of weight at most `bound`.
pub fn low_weight_codewords<V: FpVector>(
    code: &GenMatrixCode<V>,
    bound: usize,
    cap: u64,
) -> Result<LowWeightWords<V>, BzError<V>> {
    if code.dimension() == 0 {
        return Ok(LowWeightWords {
            bound,
            representatives: Vec::new(),
            ops: 0,
        });
    }
    let sets = information_sets(code);
    let mut search = Search {
        p: code.modulus(),
        k: code.dimension(),
        n: code.len(),
        sets: &sets,
        done: vec![0; sets.len()],
        upper: code.len() + 1,
        witness: None,
        collect_bound: Some(bound),
        collected: BTreeSet::new(),
        ops: 0,
        cap,
    };
    let mut levels = Vec::new();
    if search.run(&mut levels).is_err() {
        return Err(BzError::BudgetExceeded {
            lower: search.lower().min(search.upper),
            upper: search.upper,
            witness: search.witness,
            ops: search.ops,
        });
    }
    Ok(LowWeightWords {
        bound,
        representatives: search.collected.into_iter().collect(),
        ops: search.ops,
    })
}
