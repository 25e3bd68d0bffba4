//! Dense univariate polynomials over a prime field GF(p).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Polynomial over GF(p), coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyGFp {
    p: u8,
    coeffs: Vec<u8>,
}

impl PolyGFp {
    pub fn new(p: u8, mut coeffs: Vec<u8>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyGFp { p, coeffs }
    }

    pub fn zero(p: u8) -> Self {
        PolyGFp { p, coeffs: Vec::new() }
    }

    pub fn one(p: u8) -> Self {
        PolyGFp::new(p, vec![1])
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(p: u8, n: usize) -> Self {
        let mut c = vec![0u8; n + 1];
        c[0] = p - 1;
        c[n] = 1;
        PolyGFp::new(p, c)
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        PolyGFp::new(p, c)
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        PolyGFp::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PolyGFp::zero(self.p);
        }
        let p = self.p as u32;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a as u32 * b as u32) % p;
            }
        }
        PolyGFp::new(self.p, c.into_iter().map(|x| x as u8).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv_mod(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top];
            if c != 0 {
                let f = mul_mod(c, lead_inv, p);
                quot[top - dd] = f;
                for (k, &dc) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + k;
                    rem[idx] = (rem[idx] + p - mul_mod(f, dc, p)) % p;
                }
            }
            rem.pop();
        }
        (PolyGFp::new(p, quot), PolyGFp::new(p, rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn eval(&self, x: u8) -> u8 {
        let p = self.p as u32;
        self.coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| (acc * x as u32 + c as u32) % p) as u8
    }

    /// Irreducibility by trial division with every monic polynomial of degree
    /// at most half the degree.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        for fd in 1..=d / 2 {
            for f in monic_polys(self.p, fd) {
                if f.divides(self) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PolyGFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// All monic polynomials of the given degree, in lexicographic order of the
/// lower coefficients (constant term varies fastest).
pub fn monic_polys(p: u8, degree: usize) -> impl Iterator<Item = PolyGFp> {
    let count = (p as u64).pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut c = vec![0u8; degree + 1];
        for slot in c.iter_mut().take(degree) {
            *slot = (idx % p as u64) as u8;
            idx /= p as u64;
        }
        c[degree] = 1;
        PolyGFp::new(p, c)
    })
}

pub(crate) fn mul_mod(a: u8, b: u8, p: u8) -> u8 {
    ((a as u16 * b as u16) % p as u16) as u8
}

pub(crate) fn inv_mod(a: u8, p: u8) -> u8 {
    debug_assert!(!a.is_multiple_of(p));
    (1..p).find(|&x| mul_mod(a, x, p) == 1).expect("nonzero element")
}
