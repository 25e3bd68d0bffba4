//! Cyclotomic cosets, minimal and generator polynomials, and defining-set
//! algebra for cyclic codes over GF(p).
//!
//! Convention: the defining set `T` of a code lists the exponents `i` with
//! `c(β^i) = 0` for every codeword polynomial `c(x) = Σ c_j x^j`, where `β` is a
//! fixed primitive n-th root of unity. Coordinate `j` is the coefficient of `x^j`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{Elem, FieldError, FieldTable};
use crate::linalg::{FpVector, GenMatrixCode};
use crate::poly::PolyGFp;
use crate::util::gcd;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicError {
    NotCoprime {
        n: u64,
        q: u64,
    },
    /// `n` does not divide `|field| - 1`.
    FieldTooSmall {
        n: u64,
        order: u64,
    },
    LengthMismatch,
    NotClosed {
        exponent: u64,
    },
    InvalidRoot,
    Field(FieldError),
}

impl fmt::Display for CyclicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicError::NotCoprime { n, q } => write!(f, "gcd({n}, {q}) != 1"),
            CyclicError::FieldTooSmall { n, order } => {
                write!(f, "no primitive {n}-th root of unity in a field of order {order}")
            }
            CyclicError::LengthMismatch => write!(f, "cyclic codes have different lengths or alphabets"),
            CyclicError::NotClosed { exponent } => {
                write!(
                    f,
                    "defining set is not closed under multiplication by p (missing {exponent})"
                )
            }
            CyclicError::InvalidRoot => write!(f, "element is not an n-th root of unity"),
            CyclicError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl From<FieldError> for CyclicError {
    fn from(e: FieldError) -> Self {
        CyclicError::Field(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicCoset {
    pub n: u64,
    pub q: u64,
    pub leader: u64,
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn of(s: u64, n: u64, q: u64) -> Self {
        let s = s % n;
        let mut members = vec![s];
        let mut x = s * q % n;
        while x != s {
            members.push(x);
            x = x * q % n;
        }
        members.sort_unstable();
        CyclotomicCoset {
            n,
            q,
            leader: members[0],
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The q-cyclotomic cosets partitioning `{0, ..., n-1}`, ordered by leader.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>, CyclicError> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(CyclicError::NotCoprime { n, q });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if !seen[s as usize] {
            let c = CyclotomicCoset::of(s, n, q);
            for &m in &c.members {
                seen[m as usize] = true;
            }
            out.push(c);
        }
    }
    Ok(out)
}

/// Primitive n-th root of unity `g^((|F|-1)/n)` in `field`.
pub fn root_of_unity(field: &FieldTable, n: u64) -> Result<Elem, CyclicError> {
    let order = field.mult_order() as u64;
    if n == 0 || !order.is_multiple_of(n) {
        return Err(CyclicError::FieldTooSmall {
            n,
            order: field.order() as u64,
        });
    }
    Ok(field.gen_pow((order / n) as i64))
}

/// Expand `Π (x - root)` over the field; the coefficients must land in GF(p).
fn product_of_linear_factors(field: &FieldTable, roots: impl Iterator<Item = Elem>) -> PolyGFp {
    let mut coeffs = vec![Elem::ONE];
    for r in roots {
        let neg_r = field.neg(r);
        let mut next = vec![Elem::ZERO; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, neg_r));
        }
        coeffs = next;
    }
    let p = field.characteristic();
    PolyGFp::new(
        p,
        coeffs
            .into_iter()
            .map(|c| {
                field
                    .prime_value(c)
                    .expect("conjugate roots give prime-field coefficients")
            })
            .collect(),
    )
}

/// `M(x) = Π_{i ∈ coset} (x - β^i)` for a primitive n-th root `β` of `field`.
pub fn minimal_polynomial(coset: &CyclotomicCoset, field: &FieldTable) -> Result<PolyGFp, CyclicError> {
    let beta = root_of_unity(field, coset.n)?;
    Ok(product_of_linear_factors(
        field,
        coset.members.iter().map(|&i| field.pow(beta, i)),
    ))
}

/// Cyclic code of length `n` over GF(p) described by its defining set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCode {
    pub n: u64,
    pub p: u8,
    pub defining_set: BTreeSet<u64>,
}

impl CyclicCode {
    pub fn new(n: u64, p: u8, defining_set: impl IntoIterator<Item = u64>) -> Result<Self, CyclicError> {
        if n == 0 || gcd(n, p as u64) != 1 {
            return Err(CyclicError::NotCoprime { n, q: p as u64 });
        }
        let defining_set: BTreeSet<u64> = defining_set.into_iter().map(|i| i % n).collect();
        for &i in &defining_set {
            let j = i * p as u64 % n;
            if !defining_set.contains(&j) {
                return Err(CyclicError::NotClosed { exponent: j });
            }
        }
        Ok(CyclicCode { n, p, defining_set })
    }

    /// Union of the cosets of the given representatives.
    pub fn from_cosets(n: u64, p: u8, leaders: impl IntoIterator<Item = u64>) -> Result<Self, CyclicError> {
        let mut t = BTreeSet::new();
        for s in leaders {
            t.extend(CyclotomicCoset::of(s, n, p as u64).members);
        }
        CyclicCode::new(n, p, t)
    }

    pub fn dimension(&self) -> usize {
        (self.n as usize) - self.defining_set.len()
    }

    /// Nonzeros: the complement of the defining set.
    pub fn nonzeros(&self) -> BTreeSet<u64> {
        (0..self.n).filter(|i| !self.defining_set.contains(i)).collect()
    }

    /// `T(C^⊥) = -(Z_n \ T(C))`.
    pub fn dual(&self) -> Self {
        let n = self.n;
        CyclicCode {
            n,
            p: self.p,
            defining_set: self.nonzeros().into_iter().map(|i| (n - i) % n).collect(),
        }
    }

    /// Defining set of `C_1 + ... + C_k` is the intersection of the defining sets.
    pub fn sum(codes: &[CyclicCode]) -> Result<Self, CyclicError> {
        let first = codes.first().ok_or(CyclicError::LengthMismatch)?;
        let mut t = first.defining_set.clone();
        for s in &codes[1..] {
            if s.n != first.n || s.p != first.p {
                return Err(CyclicError::LengthMismatch);
            }
            t = t.intersection(&s.defining_set).copied().collect();
        }
        Ok(CyclicCode {
            n: first.n,
            p: first.p,
            defining_set: t,
        })
    }

    /// Splitting field GF(p^r) of `x^n - 1`, r = ord_n(p).
    pub fn splitting_field(&self) -> Result<FieldTable, CyclicError> {
        let r = multiplicative_order(self.p as u64, self.n);
        Ok(FieldTable::builtin(self.p, r as u32)?)
    }

    /// `g(x) = Π_{i ∈ T} (x - β^i)`; `x^n - 1` when `T` is everything.
    pub fn generator_poly(&self, field: &FieldTable) -> Result<PolyGFp, CyclicError> {
        let beta = root_of_unity(field, self.n)?;
        Ok(product_of_linear_factors(
            field,
            self.defining_set.iter().map(|&i| field.pow(beta, i)),
        ))
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn check_poly(&self, field: &FieldTable) -> Result<PolyGFp, CyclicError> {
        let g = self.generator_poly(field)?;
        Ok(PolyGFp::x_n_minus_one(self.p, self.n as usize).div_rem(&g).0)
    }

    /// Generator matrix from the shifts `x^i g(x)`, `0 <= i < n - deg g`.
    pub fn generator_matrix<V: FpVector>(&self, field: &FieldTable) -> Result<GenMatrixCode<V>, CyclicError> {
        let g = self.generator_poly(field)?;
        let n = self.n as usize;
        let deg = g.degree().unwrap_or(0);
        let rows = (0..n - deg).map(|shift| {
            let mut v = V::zeros(self.p, n);
            for (j, &c) in g.coeffs().iter().enumerate() {
                v.set(shift + j, c);
            }
            v
        });
        Ok(GenMatrixCode::from_rows(self.p, n, rows).expect("rows have length n"))
    }
}

/// Smallest r >= 1 with `p^r ≡ 1 (mod n)`; `n = 1` gives 1.
pub fn multiplicative_order(p: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = p % n;
    let mut r = 1;
    while x != 1 {
        x = x * p % n;
        r += 1;
    }
    r
}

/// Irreducible cyclic code `{(Tr_s(a γ^i))_{0 <= i < n} : a ∈ GF(p^s)}` where
/// `s` is the degree of `γ` over GF(p) and `γ^n = 1`.
///
/// `field` must contain `γ`; the trace is taken from the subfield GF(p^s).
pub fn irreducible_cyclic_code<V: FpVector>(
    field: &FieldTable,
    gamma: Elem,
    n: u64,
) -> Result<GenMatrixCode<V>, CyclicError> {
    let gamma = field.check(gamma)?;
    if gamma.is_zero() || field.pow(gamma, n) != Elem::ONE {
        return Err(CyclicError::InvalidRoot);
    }
    let p = field.characteristic();
    let e = field.degree();
    let s = (1..=e)
        .filter(|d| e.is_multiple_of(*d))
        .find(|&d| field.in_subfield(gamma, d).unwrap_or(false))
        .expect("gamma lies in the full field");
    let basis = field.subfield_basis(s)?;
    let rows = basis.into_iter().map(|a| {
        let mut v = V::zeros(p, n as usize);
        let mut x = a;
        for i in 0..n as usize {
            v.set(i, field.subfield_trace(x, s).expect("a γ^i stays in GF(p^s)"));
            x = field.mul(x, gamma);
        }
        v
    });
    Ok(GenMatrixCode::from_rows(p, n as usize, rows).expect("rows have length n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Gf3Vec;

    #[test]
    fn cosets_mod_8() {
        let cs = cyclotomic_cosets(8, 3).unwrap();
        let members: Vec<Vec<u64>> = cs.into_iter().map(|c| c.members).collect();
        assert_eq!(members, [vec![0], vec![1, 3], vec![2, 6], vec![4], vec![5, 7]]);
    }

    #[test]
    fn coset_of_one_mod_80() {
        assert_eq!(CyclotomicCoset::of(1, 80, 3).members, [1, 3, 9, 27]);
        assert_eq!(CyclotomicCoset::of(0, 80, 3).members, [0]);
    }

    #[test]
    fn not_coprime_is_rejected() {
        assert_eq!(
            cyclotomic_cosets(9, 3).unwrap_err(),
            CyclicError::NotCoprime { n: 9, q: 3 }
        );
    }

    #[test]
    fn minimal_polynomial_of_zero_coset() {
        let f = FieldTable::builtin(3, 2).unwrap();
        let m = minimal_polynomial(&CyclotomicCoset::of(0, 8, 3), &f).unwrap();
        assert_eq!(m, PolyGFp::new(3, vec![2, 1]));
    }

    #[test]
    fn minimal_polynomials_multiply_to_x8_minus_1() {
        let f = FieldTable::builtin(3, 2).unwrap();
        let prod = cyclotomic_cosets(8, 3)
            .unwrap()
            .iter()
            .map(|c| minimal_polynomial(c, &f).unwrap())
            .fold(PolyGFp::one(3), |acc, m| acc.mul(&m));
        assert_eq!(prod, PolyGFp::x_n_minus_one(3, 8));
    }

    #[test]
    fn field_too_small() {
        let f = FieldTable::builtin(3, 2).unwrap();
        assert_eq!(
            root_of_unity(&f, 5).unwrap_err(),
            CyclicError::FieldTooSmall { n: 5, order: 9 }
        );
    }

    #[test]
    fn extreme_defining_sets() {
        let f = FieldTable::builtin(3, 2).unwrap();
        let full = CyclicCode::new(8, 3, []).unwrap();
        assert_eq!(full.generator_poly(&f).unwrap(), PolyGFp::one(3));
        assert_eq!(full.dimension(), 8);
        let zero = CyclicCode::new(8, 3, 0..8).unwrap();
        assert_eq!(zero.generator_poly(&f).unwrap(), PolyGFp::x_n_minus_one(3, 8));
        assert_eq!(zero.generator_matrix::<Gf3Vec>(&f).unwrap().dimension(), 0);
        assert_eq!(full.dual(), zero);
    }

    #[test]
    fn unclosed_defining_set_is_rejected() {
        assert_eq!(
            CyclicCode::new(8, 3, [1]).unwrap_err(),
            CyclicError::NotClosed { exponent: 3 }
        );
    }

    #[test]
    fn sum_identities() {
        let a = CyclicCode::from_cosets(8, 3, [1]).unwrap();
        let zero = CyclicCode::new(8, 3, 0..8).unwrap();
        assert_eq!(CyclicCode::sum(&[a.clone(), a.clone()]).unwrap(), a);
        assert_eq!(CyclicCode::sum(&[a.clone(), zero]).unwrap(), a);
        let other_len = CyclicCode::new(4, 3, []).unwrap();
        assert_eq!(
            CyclicCode::sum(&[a, other_len]).unwrap_err(),
            CyclicError::LengthMismatch
        );
    }

    #[test]
    fn irreducible_code_of_one_is_repetition() {
        let f = FieldTable::builtin(3, 2).unwrap();
        let c = irreducible_cyclic_code::<Gf3Vec>(&f, Elem::ONE, 8).unwrap();
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.rows()[0].weight(), 8);
        assert_eq!(
            irreducible_cyclic_code::<Gf3Vec>(&f, f.generator(), 5).unwrap_err(),
            CyclicError::InvalidRoot
        );
    }
}
