use alloc::vec::Vec;
use core::fmt;

use super::{FpVector, Gf3Vec};
use crate::poly::inv_mod;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinalgError {
    LengthMismatch { expected: usize, found: usize },
    FieldMismatch { expected: u8, found: u8 },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::LengthMismatch { expected, found } => {
                write!(f, "vector length {found} does not match code length {expected}")
            }
            LinalgError::FieldMismatch { expected, found } => {
                write!(f, "vector over GF({found}) used with a code over GF({expected})")
            }
        }
    }
}

/// Linear code given by a generator matrix in reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot entry is 1 and every pivot
/// column is zero outside its row. Two codes with the same row space therefore
/// hold identical matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenMatrixCode<V = Gf3Vec> {
    p: u8,
    n: usize,
    rows: Vec<V>,
    pivots: Vec<usize>,
}

impl<V: FpVector> GenMatrixCode<V> {
    /// Row-reduce `rows` (all of length `n`) into canonical form.
    pub fn from_rows<I>(p: u8, n: usize, rows: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = V>,
    {
        let mut code = GenMatrixCode::zero(p, n);
        for r in rows {
            code.insert(r)?;
        }
        Ok(code)
    }

    pub fn zero(p: u8, n: usize) -> Self {
        GenMatrixCode {
            p,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full_space(p: u8, n: usize) -> Self {
        let rows = (0..n).map(|i| {
            let mut v = V::zeros(p, n);
            v.set(i, 1);
            v
        });
        GenMatrixCode::from_rows(p, n, rows).expect("unit vectors have length n")
    }

    fn check(&self, v: &V) -> Result<(), LinalgError> {
        if v.len() != self.n {
            return Err(LinalgError::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        if v.modulus() != self.p {
            return Err(LinalgError::FieldMismatch {
                expected: self.p,
                found: v.modulus(),
            });
        }
        Ok(())
    }

    /// Reduce `v` against the basis in place; the result is zero iff `v` was in
    /// the row space.
    fn reduce(&self, v: &mut V) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(piv);
            if c != 0 {
                v.axpy(self.p - c, row);
            }
        }
    }

    /// Add `v` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: V) -> Result<bool, LinalgError> {
        self.check(&v)?;
        self.reduce(&mut v);
        let Some(piv) = v.first_nonzero() else {
            return Ok(false);
        };
        let lead = v.get(piv);
        if lead != 1 {
            v.scale(inv_mod(lead, self.p));
        }
        for row in self.rows.iter_mut() {
            let c = row.get(piv);
            if c != 0 {
                row.axpy(self.p - c, &v);
            }
        }
        let at = self.pivots.partition_point(|&x| x < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[V] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &V) -> Result<bool, LinalgError> {
        self.check(v)?;
        let mut w = v.clone();
        self.reduce(&mut w);
        Ok(w.is_zero())
    }

    pub fn row_space_equal(&self, other: &Self) -> bool {
        self == other
    }

    /// Every row of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &Self) -> Result<bool, LinalgError> {
        if self.n != other.n {
            return Err(LinalgError::LengthMismatch {
                expected: other.n,
                found: self.n,
            });
        }
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Codeword `sum_i coeffs[i] * row_i`.
    pub fn encode(&self, coeffs: &[u8]) -> V {
        let mut v = V::zeros(self.p, self.n);
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if *c % self.p != 0 {
                v.axpy(*c % self.p, row);
            }
        }
        v
    }

    /// Dual code under the standard inner product.
    pub fn orthogonal_complement(&self) -> Self {
        let p = self.p;
        let mut is_pivot = alloc::vec![false; self.n];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let rows = (0..self.n).filter(|&j| !is_pivot[j]).map(|free| {
            let mut v = V::zeros(p, self.n);
            v.set(free, 1);
            for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                let c = row.get(free);
                if c != 0 {
                    v.set(piv, p - c);
                }
            }
            v
        });
        GenMatrixCode::from_rows(p, self.n, rows).expect("lengths agree")
    }

    /// Append a parity coordinate so every codeword sums to zero.
    pub fn extend(&self) -> Self {
        let p = self.p;
        let n = self.n + 1;
        let rows = self.rows.iter().map(|r| {
            let mut v = V::zeros(p, n);
            let mut s = 0u32;
            for i in 0..self.n {
                let d = r.get(i);
                s += d as u32;
                v.set(i, d);
            }
            v.set(self.n, ((p as u32 - s % p as u32) % p as u32) as u8);
            v
        });
        GenMatrixCode::from_rows(p, n, rows).expect("lengths agree")
    }

    /// Sum of codes: the span of both generator matrices.
    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(r.clone())?;
        }
        Ok(out)
    }

    /// Same code with coordinates permuted: `out[i] = c[perm[i]]`.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Self {
        let rows = self.rows.iter().map(|r| {
            let mut v = V::zeros(self.p, self.n);
            for (i, &src) in perm.iter().enumerate() {
                v.set(i, r.get(src));
            }
            v
        });
        GenMatrixCode::from_rows(self.p, self.n, rows).expect("lengths agree")
    }

    /// Re-encode with another vector representation.
    pub fn convert<W: FpVector>(&self) -> GenMatrixCode<W> {
        GenMatrixCode {
            p: self.p,
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| W::from_digits(self.p, &r.to_digits()))
                .collect(),
            pivots: self.pivots.clone(),
        }
    }

    /// Row-major digit text, one row per line.
    pub fn to_digit_rows(&self) -> Vec<alloc::string::String> {
        self.rows
            .iter()
            .map(|r| r.to_digits().into_iter().map(|d| char::from(b'0' + d)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FpBytes;
    use alloc::vec;

    fn v3(d: &[u8]) -> Gf3Vec {
        Gf3Vec::from_digits(3, d)
    }

    #[test]
    fn zero_rows_give_zero_code() {
        let c = GenMatrixCode::from_rows(3, 4, vec![v3(&[0; 4]), v3(&[0; 4])]).unwrap();
        assert_eq!(c.dimension(), 0);
        assert!(c.contains(&v3(&[0; 4])).unwrap());
    }

    #[test]
    fn identity_is_unchanged() {
        let c = GenMatrixCode::<Gf3Vec>::full_space(3, 5);
        assert_eq!(c.dimension(), 5);
        for (i, r) in c.rows().iter().enumerate() {
            assert_eq!(r.support(), [i]);
        }
        assert_eq!(c.orthogonal_complement().dimension(), 0);
    }

    #[test]
    fn canonical_form_is_independent_of_input_order() {
        let a = GenMatrixCode::from_rows(3, 4, vec![v3(&[1, 2, 0, 1]), v3(&[0, 1, 1, 2])]).unwrap();
        // r1 + r2 and 2 r1
        let b = GenMatrixCode::from_rows(3, 4, vec![v3(&[1, 0, 1, 0]), v3(&[2, 1, 0, 2])]).unwrap();
        assert!(a.row_space_equal(&b));
        assert_eq!(a.pivots(), [0, 1]);
    }

    #[test]
    fn length_mismatch_is_reported() {
        let c = GenMatrixCode::<Gf3Vec>::full_space(3, 3);
        assert_eq!(
            c.contains(&v3(&[1, 0])).unwrap_err(),
            LinalgError::LengthMismatch { expected: 3, found: 2 }
        );
    }

    #[test]
    fn extension_of_repetition_code() {
        let c = GenMatrixCode::from_rows(3, 2, vec![v3(&[1, 1])]).unwrap();
        let e = c.extend();
        assert_eq!(e.rows()[0].to_digits(), [1, 1, 1]);
        let z = GenMatrixCode::<Gf3Vec>::zero(3, 4).extend();
        assert_eq!((z.len(), z.dimension()), (5, 0));
    }

    #[test]
    fn complement_over_gf5() {
        let c = GenMatrixCode::from_rows(5, 3, vec![FpBytes::from_digits(5, &[1, 2, 3])]).unwrap();
        let d = c.orthogonal_complement();
        assert_eq!(d.dimension(), 2);
        for r in d.rows() {
            assert_eq!(r.dot(&c.rows()[0]), 0);
        }
    }
}
