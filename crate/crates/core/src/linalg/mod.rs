//! Linear algebra over small prime fields with a bit-sliced fast path for GF(3).
//!
//! Codes are held as [`GenMatrixCode`] in canonical reduced row-echelon form, so
//! equal row spaces compare equal as plain values.

mod bytes;
mod bz;
mod code;
mod enumerate;
mod gf3;

pub use bytes::FpBytes;
pub use bz::{
    information_sets, low_weight_codewords, min_weight_search, BzError, InformationSet, LowWeightWords, MinWeight,
    SearchMode,
};
pub use code::{GenMatrixCode, LinalgError};
pub use enumerate::{
    weight_enumerator_exhaustive, weight_enumerator_naive, weight_enumerator_part, EnumError, WeightEnumerator,
    DEFAULT_DIMENSION_BUDGET,
};
pub use gf3::Gf3Vec;

use core::fmt::Debug;
use core::hash::Hash;

/// A vector over GF(p) with the row operations elimination and enumeration need.
pub trait FpVector: Clone + PartialEq + Eq + Ord + Hash + Debug {
    fn zeros(p: u8, n: usize) -> Self;
    fn modulus(&self) -> u8;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn get(&self, i: usize) -> u8;
    fn set(&mut self, i: usize, v: u8);
    /// `self += c * other`.
    fn axpy(&mut self, c: u8, other: &Self);
    /// `self = base + c * other`, reusing `self`'s storage.
    fn assign_axpy(&mut self, base: &Self, c: u8, other: &Self);
    fn scale(&mut self, c: u8);
    fn weight(&self) -> usize;
    fn dot(&self, other: &Self) -> u8;
    fn is_zero(&self) -> bool {
        self.weight() == 0
    }
    fn first_nonzero(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.get(i) != 0)
    }

    fn from_digits(p: u8, digits: &[u8]) -> Self {
        let mut v = Self::zeros(p, digits.len());
        for (i, &d) in digits.iter().enumerate() {
            v.set(i, d % p);
        }
        v
    }

    fn to_digits(&self) -> alloc::vec::Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Scale so the first nonzero coordinate is 1.
    fn normalize(&mut self) {
        if let Some(i) = self.first_nonzero() {
            let c = self.get(i);
            if c != 1 {
                self.scale(crate::poly::inv_mod(c, self.modulus()));
            }
        }
    }

    /// Support as sorted coordinate indices.
    fn support(&self) -> alloc::vec::Vec<usize> {
        (0..self.len()).filter(|&i| self.get(i) != 0).collect()
    }
}
