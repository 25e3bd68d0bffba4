use alloc::vec;
use alloc::vec::Vec;

use super::FpVector;
use crate::poly::mul_mod;

/// Byte-per-coordinate vector over GF(p). Used for p != 3 and as the reference
/// path the packed GF(3) kernels are checked against.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FpBytes {
    p: u8,
    data: Vec<u8>,
}

impl FpBytes {
    pub fn as_slice(&self) -> &[u8] {
        &self.data
    }
}

impl FpVector for FpBytes {
    fn zeros(p: u8, n: usize) -> Self {
        FpBytes { p, data: vec![0; n] }
    }

    fn modulus(&self) -> u8 {
        self.p
    }

    fn len(&self) -> usize {
        self.data.len()
    }

    fn get(&self, i: usize) -> u8 {
        self.data[i]
    }

    fn set(&mut self, i: usize, v: u8) {
        self.data[i] = v % self.p;
    }

    fn axpy(&mut self, c: u8, other: &Self) {
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = (*a + mul_mod(c, b, p)) % p;
        }
    }

    fn assign_axpy(&mut self, base: &Self, c: u8, other: &Self) {
        let p = self.p;
        for ((a, &b), &o) in self.data.iter_mut().zip(&base.data).zip(&other.data) {
            *a = (b + mul_mod(c, o, p)) % p;
        }
    }

    fn scale(&mut self, c: u8) {
        let p = self.p;
        self.data.iter_mut().for_each(|a| *a = mul_mod(*a, c, p));
    }

    fn weight(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    fn dot(&self, other: &Self) -> u8 {
        let p = self.p as u64;
        (self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum::<u64>()
            % p) as u8
    }
}
