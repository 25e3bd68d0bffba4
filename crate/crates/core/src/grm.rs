//! Generalized Reed–Muller codes over a prime field: the punctured cyclic code,
//! its dual, the dimension and distance formulas, and the extended code as an
//! explicit evaluation matrix over GF(p^m) in point order.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclic::{cyclotomic_cosets, CyclicCode};
use crate::field::FieldTable;
use crate::linalg::{FpVector, GenMatrixCode};
use crate::util::{binomial, is_prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrmError {
    OutOfRange { i: u64, limit: u64 },
    InvalidOrder { l: u32, max: u32 },
    NotPrime(u8),
    FieldMismatch,
}

impl fmt::Display for GrmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrmError::OutOfRange { i, limit } => write!(f, "{i} is not below {limit}"),
            GrmError::InvalidOrder { l, max } => write!(f, "order {l} outside 1..={max}"),
            GrmError::NotPrime(q) => write!(f, "alphabet size {q} is not a prime"),
            GrmError::FieldMismatch => write!(f, "field does not match the code parameters"),
        }
    }
}

/// Base-q digit sum of `i`, for `0 <= i < q^m`.
pub fn q_weight(i: u64, q: u64, m: u32) -> Result<u64, GrmError> {
    let limit = q.pow(m);
    if i >= limit {
        return Err(GrmError::OutOfRange { i, limit });
    }
    Ok(digit_sum(i, q))
}

pub(crate) fn digit_sum(mut i: u64, q: u64) -> u64 {
    let mut s = 0;
    while i > 0 {
        s += i % q;
        i /= q;
    }
    s
}

/// `R_q(l, m)` with q prime and `1 <= l <= (q-1)m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrmParams {
    pub q: u8,
    pub l: u32,
    pub m: u32,
}

impl GrmParams {
    pub fn new(q: u8, l: u32, m: u32) -> Result<Self, GrmError> {
        if !is_prime(q as u64) {
            return Err(GrmError::NotPrime(q));
        }
        let max = (q as u32 - 1) * m;
        if l == 0 || l > max {
            return Err(GrmError::InvalidOrder { l, max });
        }
        Ok(GrmParams { q, l, m })
    }

    /// Punctured length `q^m - 1`.
    pub fn length(&self) -> u64 {
        (self.q as u64).pow(self.m) - 1
    }

    /// Euclidean split `l = l1 (q-1) + l0` with `0 <= l0 < q-1`.
    pub fn split(&self) -> (u32, u32) {
        let qm1 = self.q as u32 - 1;
        (self.l / qm1, self.l % qm1)
    }

    /// Number of `w` with `0 <= w < q^m` and digit sum at most `l` (the reduced
    /// monomials of degree at most `l`).
    pub fn monomial_count(&self) -> u64 {
        let q = self.q as u64;
        (0..q.pow(self.m)).filter(|&i| digit_sum(i, q) <= self.l as u64).count() as u64
    }
}

/// Defining set `{1 <= i <= n-1 : w_q(i) < (q-1)m - l}` of `R_q(l, m)*`.
pub fn grm_punctured_code(params: &GrmParams) -> CyclicCode {
    let n = params.length();
    let q = params.q as u64;
    let bound = (q - 1) * params.m as u64;
    let t = (1..n).filter(|&i| digit_sum(i, q) + (params.l as u64) < bound);
    CyclicCode::new(n, params.q, t).expect("digit sums are invariant under multiplication by q")
}

/// Alternating-sum dimension formula.
pub fn grm_dimension_formula(params: &GrmParams) -> i64 {
    let q = params.q as i64;
    let m = params.m as i64;
    (0..=params.l as i64)
        .map(|i| {
            (0..=m)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * binomial(m, j) * binomial(i - j * q + m - 1, i - j * q)
                })
                .sum::<i64>()
        })
        .sum()
}

/// `(q - l0) q^(m - l1 - 1) - 1`; `None` at `l = (q-1)m`, where the exponent
/// is negative and the punctured code is the whole space.
pub fn grm_min_weight_formula(params: &GrmParams) -> Option<u64> {
    let (l1, l0) = params.split();
    let q = params.q as u64;
    let exp = (params.m as i64) - (l1 as i64) - 1;
    (exp >= 0).then(|| (q - l0 as u64) * q.pow(exp as u32) - 1)
}

/// Defining set of `(R_q(l, m)*)^⊥`: `{0} ∪ {1 <= j <= n-1 : w_q(j) <= l}`.
pub fn grm_dual_code(params: &GrmParams) -> CyclicCode {
    let mut cyclic = grm_dual_code_without_zero(params);
    cyclic.defining_set.insert(0);
    cyclic
}

/// The dual defining set restricted to `1 <= j <= n-1`, without residue 0.
/// Kept for comparison; the dual proper also vanishes at `β^0`.
pub fn grm_dual_code_without_zero(params: &GrmParams) -> CyclicCode {
    let n = params.length();
    let q = params.q as u64;
    let t = (1..n).filter(|&j| digit_sum(j, q) <= params.l as u64);
    CyclicCode::new(n, params.q, t).expect("digit sums are invariant under multiplication by q")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrmDualParams {
    pub dimension: u64,
    /// `(q - l0') q^(m - l1' - 1)` with `m(q-1) - 1 - l = l1'(q-1) + l0'`.
    pub min_weight_bound: Option<u64>,
}

pub fn grm_dual_params(params: &GrmParams) -> GrmDualParams {
    let n = params.length();
    let k = n - grm_punctured_code(params).defining_set.len() as u64;
    let q = params.q as i64;
    let rest = params.m as i64 * (q - 1) - 1 - params.l as i64;
    let min_weight_bound = (rest >= 0)
        .then(|| {
            let (l1, l0) = (rest / (q - 1), rest % (q - 1));
            let exp = params.m as i64 - l1 - 1;
            (exp >= 0).then(|| ((q - l0) * q.pow(exp as u32)) as u64)
        })
        .flatten();
    GrmDualParams {
        dimension: n - k,
        min_weight_bound,
    }
}

/// Exponents in `[1, n-1]` with digit sum at most `l`, as coset leaders.
pub fn low_weight_coset_leaders(q: u8, m: u32, l: u32) -> Vec<u64> {
    let n = (q as u64).pow(m) - 1;
    cyclotomic_cosets(n, q as u64)
        .expect("n = q^m - 1 is coprime to q")
        .into_iter()
        .filter(|c| c.leader != 0 && digit_sum(c.leader, q as u64) <= l as u64)
        .map(|c| c.leader)
        .collect()
}

/// Extended code `R_p(l, m)` of length `p^m` over the point order of `field`
/// (`field` = GF(p^m)): the constant function plus `Tr(β t^e)` for every
/// exponent `1 <= e <= n` with `w_p(e) <= l` and `β` over a basis. The
/// exponent `n = p^m - 1` only qualifies at `l = (p-1)m`.
pub fn extended_grm_generator<V: FpVector>(field: &FieldTable, l: u32) -> GenMatrixCode<V> {
    let p = field.characteristic();
    let m = field.degree();
    let q = field.order();
    let n = field.mult_order() as usize;
    let trace = field.trace_table();
    let mut rows = Vec::new();
    rows.push(V::from_digits(p, &alloc::vec![1u8; q]));
    let mut exponents = low_weight_coset_leaders(p, m, l);
    if digit_sum(n as u64, p as u64) <= l as u64 {
        exponents.push(n as u64);
    }
    for e in exponents {
        for beta in field.polynomial_basis() {
            let b = beta.log().expect("basis elements are nonzero") as usize;
            let mut v = V::zeros(p, q);
            for i in 0..n {
                v.set(i, trace[(b + i * e as usize) % n]);
            }
            // t = 0 contributes Tr(0) = 0
            rows.push(v);
        }
    }
    GenMatrixCode::from_rows(p, q, rows).expect("rows have length q")
}

/// All exponent sets `{e : w_q(e) <= l}` are unions of cyclotomic cosets.
pub fn low_weight_exponents(q: u8, m: u32, l: u32) -> BTreeSet<u64> {
    let n = (q as u64).pow(m) - 1;
    (0..n).filter(|&e| digit_sum(e, q as u64) <= l as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Gf3Vec;

    #[test]
    fn q_weights() {
        assert_eq!(q_weight(0, 3, 4).unwrap(), 0);
        assert_eq!(q_weight(52, 3, 4).unwrap(), 6);
        assert_eq!(q_weight(80, 3, 4).unwrap(), 8);
        assert_eq!(
            q_weight(81, 3, 4).unwrap_err(),
            GrmError::OutOfRange { i: 81, limit: 81 }
        );
    }

    #[test]
    fn params_validation() {
        assert_eq!(
            GrmParams::new(3, 0, 2).unwrap_err(),
            GrmError::InvalidOrder { l: 0, max: 4 }
        );
        assert_eq!(
            GrmParams::new(3, 5, 2).unwrap_err(),
            GrmError::InvalidOrder { l: 5, max: 4 }
        );
        assert_eq!(GrmParams::new(4, 1, 2).unwrap_err(), GrmError::NotPrime(4));
    }

    #[test]
    fn full_order_punctured_code_is_full_space() {
        let g = GrmParams::new(3, 4, 2).unwrap();
        assert!(grm_punctured_code(&g).defining_set.is_empty());
        assert_eq!(grm_min_weight_formula(&g), None);
        // the extended code is all of GF(3)^9, one more than the punctured length
        let field = FieldTable::builtin(3, 2).unwrap();
        assert_eq!(extended_grm_generator::<Gf3Vec>(&field, 4).dimension(), 9);
        assert_eq!(grm_dimension_formula(&g), 9);
    }

    #[test]
    fn order_four_in_four_variables() {
        let g = GrmParams::new(3, 4, 4).unwrap();
        assert_eq!(grm_dimension_formula(&g), 50);
        assert_eq!(g.monomial_count(), 50);
        assert_eq!(grm_min_weight_formula(&g), Some(8));
    }

    #[test]
    fn order_two_in_two_variables() {
        let g = GrmParams::new(3, 2, 2).unwrap();
        assert_eq!(grm_dimension_formula(&g), 6);
        assert_eq!(grm_min_weight_formula(&g), Some(2));
        assert_eq!(grm_dual_params(&g).dimension, 2);
    }

    #[test]
    fn first_order_is_affine_functions() {
        for m in 1..=4 {
            let g = GrmParams::new(3, 1, m).unwrap();
            assert_eq!(grm_dimension_formula(&g), m as i64 + 1);
        }
    }

    #[test]
    fn order_zero_extended_code_is_constants() {
        let f = FieldTable::builtin(3, 2).unwrap();
        let c = extended_grm_generator::<Gf3Vec>(&f, 0);
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.rows()[0].weight(), 9);
    }
}
