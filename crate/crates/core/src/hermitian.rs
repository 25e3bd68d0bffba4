//! The trace code `C(2m, p)`: words `(Tr(a t^(p^m+1) + b t) + h)_t` over
//! GF(p^2m) with `a ∈ GF(p^m)`, `b ∈ GF(p^2m)`, `h ∈ GF(p)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{Elem, FieldError, FieldTable};
use crate::linalg::{FpVector, GenMatrixCode, WeightEnumerator};
use crate::util::is_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HermitianError {
    EvenOrNotPrime(u8),
    ZeroM,
    Field(FieldError),
    /// `a` must lie in GF(p^m).
    NotInSubfield,
}

impl fmt::Display for HermitianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HermitianError::EvenOrNotPrime(p) => write!(f, "p = {p} must be an odd prime"),
            HermitianError::ZeroM => write!(f, "m must be at least 1"),
            HermitianError::Field(e) => write!(f, "{e}"),
            HermitianError::NotInSubfield => write!(f, "coefficient a is not in GF(p^m)"),
        }
    }
}

impl From<FieldError> for HermitianError {
    fn from(e: FieldError) -> Self {
        HermitianError::Field(e)
    }
}

/// `(a, b, h)` naming the codeword `c(a, b, h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CodewordIndex {
    pub a: Elem,
    pub b: Elem,
    pub h: u8,
}

#[derive(Clone, Debug)]
pub struct HermitianCode {
    p: u8,
    m: u32,
    field: FieldTable,
    /// `p^m + 1`
    norm_exp: u64,
}

impl HermitianCode {
    pub fn new(p: u8, m: u32) -> Result<Self, HermitianError> {
        if p == 2 || !is_prime(p as u64) {
            return Err(HermitianError::EvenOrNotPrime(p));
        }
        if m == 0 {
            return Err(HermitianError::ZeroM);
        }
        let field = FieldTable::builtin(p, 2 * m)?;
        Self::with_field(field, m)
    }

    /// Use a specific representation of GF(p^2m).
    pub fn with_field(field: FieldTable, m: u32) -> Result<Self, HermitianError> {
        let p = field.characteristic();
        if p == 2 || !is_prime(p as u64) {
            return Err(HermitianError::EvenOrNotPrime(p));
        }
        if m == 0 {
            return Err(HermitianError::ZeroM);
        }
        if field.degree() != 2 * m {
            return Err(HermitianError::Field(FieldError::NotADivisor {
                d: m,
                e: field.degree(),
            }));
        }
        Ok(HermitianCode {
            p,
            m,
            field,
            norm_exp: (p as u64).pow(m) + 1,
        })
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.field.order()
    }

    pub fn dimension(&self) -> usize {
        3 * self.m as usize + 1
    }

    /// `p^(2m-1)(p-1) - p^(m-1)`.
    pub fn min_distance(&self) -> usize {
        let p = self.p as usize;
        let m = self.m;
        p.pow(2 * m - 1) * (p - 1) - p.pow(m - 1)
    }

    /// Exponent `p^m + 1` of the norm map to GF(p^m).
    pub fn norm_exponent(&self) -> u64 {
        self.norm_exp
    }

    pub fn check_index(&self, idx: &CodewordIndex) -> Result<(), HermitianError> {
        self.field.check(idx.a)?;
        self.field.check(idx.b)?;
        if !self.field.in_subfield(idx.a, self.m)? {
            return Err(HermitianError::NotInSubfield);
        }
        Ok(())
    }

    /// Coordinates of `c(a, b, h)` in point order.
    pub fn evaluate_digits(&self, idx: &CodewordIndex) -> Vec<u8> {
        let f = &self.field;
        let n = f.mult_order() as u64;
        let p = self.p;
        let trace = f.trace_table();
        let h = idx.h % p;
        let mut out = vec![h; f.order()];
        let la = idx.a.log().map(|x| x as u64);
        let lb = idx.b.log().map(|x| x as u64);
        let step_a = self.norm_exp % n;
        for (i, slot) in out.iter_mut().take(n as usize).enumerate() {
            let i = i as u64;
            let mut v = h;
            if let Some(la) = la {
                v += trace[((la + i * step_a) % n) as usize];
            }
            if let Some(lb) = lb {
                v += trace[((lb + i) % n) as usize];
            }
            *slot = v % p;
        }
        out
    }

    pub fn evaluate<V: FpVector>(&self, idx: &CodewordIndex) -> V {
        V::from_digits(self.p, &self.evaluate_digits(idx))
    }

    /// `T(a, b, h)` by counting zero coordinates.
    pub fn zero_count_direct(&self, idx: &CodewordIndex) -> usize {
        self.evaluate_digits(idx).iter().filter(|&&x| x == 0).count()
    }

    /// The value of `h` for which `a != 0` gives the larger weight:
    /// `Tr(b^(p^m+1) / (4a))`, obtained by completing the square.
    pub fn branch_value(&self, a: Elem, b: Elem) -> Result<u8, FieldError> {
        let f = &self.field;
        let four = f.prime_elem(4 % self.p);
        let denom = f.mul(four, a);
        let x = f.div(f.pow(b, self.norm_exp), denom)?;
        Ok(f.trace(x))
    }

    /// `T(a, b, h)` from the four-case closed form.
    pub fn zero_count_closed_form(&self, idx: &CodewordIndex) -> usize {
        let p = self.p as usize;
        let m = self.m;
        let q = p.pow(2 * m);
        match (idx.a.is_zero(), idx.b.is_zero(), idx.h.is_multiple_of(self.p)) {
            (true, true, true) => q,
            (true, true, false) => 0,
            (true, false, _) => p.pow(2 * m - 1),
            (false, _, _) => {
                let branch = self.branch_value(idx.a, idx.b).expect("a is nonzero");
                if idx.h % self.p == branch {
                    p.pow(2 * m - 1) - p.pow(m - 1) * (p - 1)
                } else {
                    p.pow(2 * m - 1) + p.pow(m - 1)
                }
            }
        }
    }

    /// Five-term weight distribution.
    pub fn theoretical_weight_distribution(&self) -> WeightEnumerator {
        let p = self.p as u64;
        let m = self.m;
        let pm = p.pow(m);
        let q = p.pow(2 * m);
        let d = p.pow(2 * m - 1) * (p - 1) - p.pow(m - 1);
        WeightEnumerator::from_pairs(&[
            (0, 1),
            (d as usize, q * (pm - 1) * (p - 1)),
            ((p.pow(2 * m - 1) * (p - 1)) as usize, p * (q - 1)),
            (((p.pow(2 * m - 1) + p.pow(m - 1)) * (p - 1)) as usize, q * (pm - 1)),
            (q as usize, p - 1),
        ])
    }

    /// Elements of GF(p^m), zero last.
    pub fn subfield_elements(&self) -> Vec<Elem> {
        self.field.subfield_elements(self.m).expect("m divides 2m")
    }

    /// Every index triple: `a` over GF(p^m), `b` over GF(p^2m), `h` over GF(p).
    pub fn all_indices(&self) -> impl Iterator<Item = CodewordIndex> + '_ {
        let subs = self.subfield_elements();
        let p = self.p;
        subs.into_iter().flat_map(move |a| {
            self.field
                .elements()
                .flat_map(move |b| (0..p).map(move |h| CodewordIndex { a, b, h }))
        })
    }

    /// Generator matrix from the evaluations at an F_p-basis of the index space.
    pub fn generator_matrix<V: FpVector>(&self) -> GenMatrixCode<V> {
        let f = &self.field;
        let a_rows = f
            .subfield_basis(self.m)
            .expect("m divides 2m")
            .into_iter()
            .map(|a| CodewordIndex { a, b: Elem::ZERO, h: 0 });
        let b_rows = f
            .polynomial_basis()
            .into_iter()
            .map(|b| CodewordIndex { a: Elem::ZERO, b, h: 0 });
        let h_row = core::iter::once(CodewordIndex {
            a: Elem::ZERO,
            b: Elem::ZERO,
            h: 1,
        });
        let rows = a_rows.chain(b_rows).chain(h_row).map(|idx| self.evaluate::<V>(&idx));
        GenMatrixCode::from_rows(self.p, self.length(), rows).expect("rows have the code length")
    }

    /// Indices of the minimum-weight codewords: `a != 0` and `h` different from
    /// [`Self::branch_value`].
    pub fn min_weight_indices(&self) -> Vec<CodewordIndex> {
        let mut out = Vec::new();
        for a in self.subfield_elements().into_iter().filter(|a| !a.is_zero()) {
            for b in self.field.elements() {
                let branch = self.branch_value(a, b).expect("a is nonzero");
                out.extend((0..self.p).filter(|&h| h != branch).map(|h| CodewordIndex { a, b, h }));
            }
        }
        out
    }

    /// Indices `a != 0`, `h != Tr(b)`: same count as the minimum-weight class
    /// but not the same set.
    pub fn trace_b_branch_indices(&self) -> Vec<CodewordIndex> {
        let mut out = Vec::new();
        for a in self.subfield_elements().into_iter().filter(|a| !a.is_zero()) {
            for b in self.field.elements() {
                let tb = self.field.trace(b);
                out.extend((0..self.p).filter(|&h| h != tb).map(|h| CodewordIndex { a, b, h }));
            }
        }
        out
    }

    /// Componentwise sum in index space.
    pub fn add_indices(&self, x: &CodewordIndex, y: &CodewordIndex) -> CodewordIndex {
        CodewordIndex {
            a: self.field.add(x.a, y.a),
            b: self.field.add(x.b, y.b),
            h: (x.h + y.h) % self.p,
        }
    }
}
