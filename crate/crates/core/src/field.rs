//! Table-driven arithmetic in GF(p^e) for fields of at most 3^12 elements.
//!
//! Nonzero elements are stored as discrete logarithms to a fixed primitive
//! element `g` (the class of `x` modulo the primitive polynomial); addition goes
//! through a Zech-logarithm table. The additive identity is a sentinel.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::PolyGFp;
use crate::util::{gcd, is_prime, prime_factors};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 531_441; // 3^12

/// One primitive polynomial per degree 1..=12 over GF(3), lowest coefficient first.
const GF3_PRIMITIVE: [&[u8]; 12] = [
    &[1, 1],
    &[2, 2, 1],
    &[1, 2, 0, 1],
    &[2, 1, 0, 0, 1],
    &[1, 2, 0, 0, 0, 1],
    &[2, 1, 0, 0, 0, 0, 1],
    &[1, 2, 1, 0, 0, 0, 0, 1],
    &[2, 0, 0, 1, 0, 0, 0, 0, 1],
    &[1, 0, 1, 2, 0, 0, 0, 0, 0, 1],
    &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    &[1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    BadPolynomial,
    NotIrreducible,
    NotPrimitive { order: u64 },
    TableTooLarge { order: u64 },
    DivisionByZero,
    ZeroElement,
    FieldMismatch,
    NotInSubfield,
    NotADivisor { d: u32, e: u32 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not a prime"),
            FieldError::BadPolynomial => write!(f, "polynomial must be monic of degree e with coefficients below p"),
            FieldError::NotIrreducible => write!(f, "polynomial is reducible"),
            FieldError::NotPrimitive { order } => {
                write!(
                    f,
                    "root of the polynomial has multiplicative order {order}, not p^e - 1"
                )
            }
            FieldError::TableTooLarge { order } => {
                write!(f, "field of order {order} exceeds the table limit {MAX_FIELD_ORDER}")
            }
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::ZeroElement => write!(f, "operation undefined for the zero element"),
            FieldError::FieldMismatch => write!(f, "element does not belong to this field"),
            FieldError::NotInSubfield => write!(f, "element is not in the requested subfield"),
            FieldError::NotADivisor { d, e } => write!(f, "{d} does not divide the extension degree {e}"),
        }
    }
}

/// Defining data of GF(p^e): `prim_poly` is `[c_0, ..., c_e]` with `c_e = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u8,
    pub e: u32,
    pub prim_poly: Vec<u8>,
}

impl FieldParams {
    pub fn new(p: u8, e: u32, prim_poly: Vec<u8>) -> Self {
        FieldParams { p, e, prim_poly }
    }

    /// The shipped polynomial for p = 3, otherwise the first primitive
    /// polynomial found by search.
    pub fn builtin(p: u8, e: u32) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        check_order(p, e)?;
        if p == 3 && (1..=12).contains(&e) {
            return Ok(FieldParams::new(3, e, GF3_PRIMITIVE[e as usize - 1].to_vec()));
        }
        primitive_polys(p, e)
            .next()
            .map(|poly| FieldParams::new(p, e, poly.coeffs().to_vec()))
            .ok_or(FieldError::NotPrimitive { order: 0 })
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.e)
    }
}

/// All primitive polynomials of degree `e` over GF(p), in the order of
/// [`crate::poly::monic_polys`].
pub fn primitive_polys(p: u8, e: u32) -> impl Iterator<Item = PolyGFp> {
    crate::poly::monic_polys(p, e as usize)
        .filter(move |f| f.coeffs()[0] != 0 && FieldTable::new(FieldParams::new(p, e, f.coeffs().to_vec())).is_ok())
}

fn check_order(p: u8, e: u32) -> Result<u64, FieldError> {
    if e == 0 {
        return Err(FieldError::BadPolynomial);
    }
    let order = (p as u64)
        .checked_pow(e)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or(FieldError::TableTooLarge {
            order: (p as u64).saturating_pow(e),
        })?;
    Ok(order)
}

/// Field element: zero or `g^k` with `0 <= k < q - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(u32::MAX);
    pub const ONE: Elem = Elem(0);

    pub fn is_zero(self) -> bool {
        self == Elem::ZERO
    }

    /// Discrete logarithm; `None` for zero.
    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(k) => write!(f, "g^{k}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FieldTable {
    params: FieldParams,
    q: u32,
    n: u32,
    /// log -> packed coefficient vector (base-p digits, digit i = coefficient of x^i)
    exp: Vec<u32>,
    /// packed vector -> log, `u32::MAX` at the zero vector
    log: Vec<u32>,
    /// k -> log(1 + g^k), `u32::MAX` when 1 + g^k = 0
    zech: Vec<u32>,
    /// position -> absolute trace as a GF(p) digit
    trace: Vec<u8>,
    neg_one: u32,
}

impl FieldTable {
    pub fn new(params: FieldParams) -> Result<Self, FieldError> {
        let p = params.p;
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        let q = check_order(p, params.e)? as u32;
        let e = params.e as usize;
        if params.prim_poly.len() != e + 1 || params.prim_poly[e] != 1 || params.prim_poly.iter().any(|&c| c >= p) {
            return Err(FieldError::BadPolynomial);
        }
        let poly = PolyGFp::new(p, params.prim_poly.clone());
        if !poly.is_irreducible() {
            return Err(FieldError::NotIrreducible);
        }
        let n = q - 1;
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut digits = vec![0u8; e];
        digits[0] = 1;
        for k in 0..n {
            let packed = pack(&digits, p);
            if k > 0 && packed == 1 {
                return Err(FieldError::NotPrimitive { order: k as u64 });
            }
            exp.push(packed);
            log[packed as usize] = k;
            mul_by_x(&mut digits, &params.prim_poly, p);
        }
        if pack(&digits, p) != 1 {
            // cannot happen for an irreducible polynomial: the root has order dividing n
            return Err(FieldError::NotPrimitive { order: 0 });
        }
        let zech = (0..n)
            .map(|k| log[add_packed(exp[k as usize], 1, p, e) as usize])
            .collect();
        let neg_one = if p == 2 { 0 } else { n / 2 };
        let mut table = FieldTable {
            params,
            q,
            n,
            exp,
            log,
            zech,
            trace: Vec::new(),
            neg_one,
        };
        table.trace = table.build_trace();
        Ok(table)
    }

    pub fn builtin(p: u8, e: u32) -> Result<Self, FieldError> {
        FieldTable::new(FieldParams::builtin(p, e)?)
    }

    fn build_trace(&self) -> Vec<u8> {
        let p = self.params.p;
        let e = self.params.e as usize;
        // trace of each polynomial-basis element g^i, then extend linearly
        let basis_traces: Vec<u8> = (0..e)
            .map(|i| {
                let x = Elem(i as u32 % self.n);
                let mut acc = Elem::ZERO;
                for j in 0..self.params.e {
                    acc = self.add(acc, self.frobenius(x, j));
                }
                self.prime_value(acc).expect("trace lies in the prime field")
            })
            .collect();
        let mut out = vec![0u8; self.q as usize];
        for k in 0..self.n as usize {
            let mut v = self.exp[k];
            let mut t = 0u32;
            for &bt in basis_traces.iter() {
                t += (v % p as u32) * bt as u32;
                v /= p as u32;
            }
            out[k] = (t % p as u32) as u8;
        }
        out
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn characteristic(&self) -> u8 {
        self.params.p
    }

    pub fn degree(&self) -> u32 {
        self.params.e
    }

    /// Number of elements q.
    pub fn order(&self) -> usize {
        self.q as usize
    }

    /// q - 1.
    pub fn mult_order(&self) -> u32 {
        self.n
    }

    pub fn generator(&self) -> Elem {
        Elem(1 % self.n)
    }

    /// `g^k` for any integer exponent.
    pub fn gen_pow(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.n as i64) as u32)
    }

    pub fn check(&self, x: Elem) -> Result<Elem, FieldError> {
        if x.is_zero() || x.0 < self.n {
            Ok(x)
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    /// Position of `x` in the global point order `[g^0, ..., g^(q-2), 0]`.
    #[inline]
    pub fn position(&self, x: Elem) -> usize {
        if x.is_zero() {
            self.n as usize
        } else {
            x.0 as usize
        }
    }

    #[inline]
    pub fn at_position(&self, pos: usize) -> Elem {
        if pos == self.n as usize {
            Elem::ZERO
        } else {
            Elem(pos as u32)
        }
    }

    /// All elements in point order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q as usize).map(move |i| self.at_position(i))
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        if x.is_zero() {
            return y;
        }
        if y.is_zero() {
            return x;
        }
        let diff = if y.0 >= x.0 { y.0 - x.0 } else { y.0 + self.n - x.0 };
        let z = self.zech[diff as usize];
        if z == u32::MAX {
            Elem::ZERO
        } else {
            let s = x.0 + z;
            Elem(if s >= self.n { s - self.n } else { s })
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        if x.is_zero() {
            x
        } else {
            self.mul(x, Elem(self.neg_one))
        }
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.is_zero() || y.is_zero() {
            return Elem::ZERO;
        }
        let s = x.0 + y.0;
        Elem(if s >= self.n { s - self.n } else { s })
    }

    pub fn inv(&self, x: Elem) -> Result<Elem, FieldError> {
        match x.log() {
            None => Err(FieldError::DivisionByZero),
            Some(k) => Ok(Elem((self.n - k) % self.n)),
        }
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^k`, with `0^0 = 1`.
    #[inline]
    pub fn pow(&self, x: Elem, k: u64) -> Elem {
        match x.log() {
            None if k == 0 => Elem::ONE,
            None => Elem::ZERO,
            Some(l) => Elem(((l as u64 * (k % self.n as u64)) % self.n as u64) as u32),
        }
    }

    /// `x^(p^k)`.
    pub fn frobenius(&self, x: Elem, k: u32) -> Elem {
        let n = self.n as u64;
        let mut e = 1u64;
        for _ in 0..k {
            e = e * self.params.p as u64 % n.max(1);
        }
        if n == 1 {
            return x;
        }
        self.pow(x, e)
    }

    /// Embedding of a prime-field digit.
    pub fn prime_elem(&self, c: u8) -> Elem {
        let c = c % self.params.p;
        if c == 0 {
            Elem::ZERO
        } else {
            Elem(self.log[c as usize])
        }
    }

    /// The digit of a prime-field element; `None` if `x` is outside GF(p).
    pub fn prime_value(&self, x: Elem) -> Option<u8> {
        match x.log() {
            None => Some(0),
            Some(k) => {
                let v = self.exp[k as usize];
                (v < self.params.p as u32).then_some(v as u8)
            }
        }
    }

    /// Coefficient vector over the polynomial basis `1, g, ..., g^(e-1)`.
    pub fn to_vector(&self, x: Elem) -> Vec<u8> {
        let p = self.params.p as u32;
        let mut v = match x.log() {
            None => 0,
            Some(k) => self.exp[k as usize],
        };
        (0..self.params.e)
            .map(|_| {
                let d = (v % p) as u8;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_vector(&self, coeffs: &[u8]) -> Result<Elem, FieldError> {
        if coeffs.len() != self.params.e as usize || coeffs.iter().any(|&c| c >= self.params.p) {
            return Err(FieldError::FieldMismatch);
        }
        let packed = pack(coeffs, self.params.p);
        let l = self.log[packed as usize];
        Ok(if l == u32::MAX { Elem::ZERO } else { Elem(l) })
    }

    /// Absolute trace `x + x^p + ... + x^(p^(e-1))` as a GF(p) digit.
    #[inline]
    pub fn trace(&self, x: Elem) -> u8 {
        self.trace[self.position(x)]
    }

    /// Trace table indexed by point position.
    pub fn trace_table(&self) -> &[u8] {
        &self.trace
    }

    /// Trace computed as an explicit Frobenius sum (reference path for `trace`).
    pub fn trace_by_sum(&self, x: Elem) -> Elem {
        (0..self.params.e).fold(Elem::ZERO, |acc, j| self.add(acc, self.frobenius(x, j)))
    }

    /// `x^(p^d) == x`, i.e. `x` lies in GF(p^d).
    pub fn in_subfield(&self, x: Elem, d: u32) -> Result<bool, FieldError> {
        if d == 0 || !self.params.e.is_multiple_of(d) {
            return Err(FieldError::NotADivisor { d, e: self.params.e });
        }
        Ok(self.frobenius(x, d) == x)
    }

    /// Trace from the subfield GF(p^d) down to GF(p), for `x` in that subfield.
    pub fn subfield_trace(&self, x: Elem, d: u32) -> Result<u8, FieldError> {
        if !self.in_subfield(x, d)? {
            return Err(FieldError::NotInSubfield);
        }
        let s = (0..d).fold(Elem::ZERO, |acc, j| self.add(acc, self.frobenius(x, j)));
        Ok(self.prime_value(s).expect("subfield trace lands in GF(p)"))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: Elem) -> Result<u64, FieldError> {
        let k = x.log().ok_or(FieldError::ZeroElement)? as u64;
        let n = self.n as u64;
        Ok(n / gcd(n, k))
    }

    /// Elements of the subfield GF(p^d), zero last.
    pub fn subfield_elements(&self, d: u32) -> Result<Vec<Elem>, FieldError> {
        if d == 0 || !self.params.e.is_multiple_of(d) {
            return Err(FieldError::NotADivisor { d, e: self.params.e });
        }
        let step = self.n / ((self.params.p as u32).pow(d) - 1);
        let mut out: Vec<Elem> = (0..self.n).step_by(step as usize).map(Elem).collect();
        out.push(Elem::ZERO);
        Ok(out)
    }

    /// `1, g, ..., g^(e-1)`.
    pub fn polynomial_basis(&self) -> Vec<Elem> {
        (0..self.params.e).map(|i| Elem(i % self.n)).collect()
    }

    /// `1, z, ..., z^(d-1)` where `z = g^((q-1)/(p^d-1))` generates GF(p^d)^*.
    pub fn subfield_basis(&self, d: u32) -> Result<Vec<Elem>, FieldError> {
        if d == 0 || !self.params.e.is_multiple_of(d) {
            return Err(FieldError::NotADivisor { d, e: self.params.e });
        }
        let step = self.n / ((self.params.p as u32).pow(d) - 1);
        Ok((0..d).map(|i| Elem((i * step) % self.n)).collect())
    }

    /// Element order over the polynomial representation, computed by repeated
    /// multiplication without the log tables.
    pub fn order_by_polynomial(&self, x: Elem) -> Result<u64, FieldError> {
        let x = self.check(x)?;
        if x.is_zero() {
            return Err(FieldError::ZeroElement);
        }
        let p = self.params.p;
        let e = self.params.e as usize;
        let base = self.to_vector(x);
        let mut acc = base.clone();
        let mut k = 1u64;
        let mut one = vec![0u8; e];
        one[0] = 1;
        while acc != one {
            acc = poly_mul_mod(&acc, &base, &self.params.prim_poly, p);
            k += 1;
        }
        Ok(k)
    }

    /// Multiplicative group order q - 1 split into primes.
    pub fn group_order_factors(&self) -> Vec<u64> {
        prime_factors(self.n as u64)
    }
}

fn pack(digits: &[u8], p: u8) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p as u32 + d as u32)
}

fn add_packed(a: u32, b: u32, p: u8, e: usize) -> u32 {
    let p = p as u32;
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut scale = 1;
    for _ in 0..e {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn mul_by_x(digits: &mut [u8], poly: &[u8], p: u8) {
    let e = digits.len();
    let top = digits[e - 1];
    for i in (1..e).rev() {
        digits[i] = digits[i - 1];
    }
    digits[0] = 0;
    if top != 0 {
        for (i, d) in digits.iter_mut().enumerate() {
            let sub = (top as u16 * poly[i] as u16 % p as u16) as u8;
            *d = (*d + p - sub) % p;
        }
    }
}

/// Multiply two residues modulo the monic `modulus`, all vectors lowest first.
pub(crate) fn poly_mul_mod(a: &[u8], b: &[u8], modulus: &[u8], p: u8) -> Vec<u8> {
    let prod = PolyGFp::new(p, a.to_vec()).mul(&PolyGFp::new(p, b.to_vec()));
    let (_, r) = prod.div_rem(&PolyGFp::new(p, modulus.to_vec()));
    let mut out = r.coeffs().to_vec();
    out.resize(modulus.len() - 1, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn gf9() -> FieldTable {
        FieldTable::new(FieldParams::new(3, 2, vec![2, 2, 1])).unwrap()
    }

    #[test]
    fn prime_field_from_linear_poly() {
        let f = FieldTable::new(FieldParams::new(3, 1, vec![1, 1])).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.prime_value(f.generator()), Some(2));
        assert_eq!(f.element_order(f.generator()).unwrap(), 2);
    }

    #[test]
    fn gf9_generator_order_by_polynomial_arithmetic() {
        let f = gf9();
        assert_eq!(f.order_by_polynomial(f.generator()).unwrap(), 8);
    }

    #[test]
    fn x2_plus_1_is_irreducible_but_not_primitive() {
        let r = FieldTable::new(FieldParams::new(3, 2, vec![1, 0, 1]));
        assert_eq!(r.unwrap_err(), FieldError::NotPrimitive { order: 4 });
        let r = FieldTable::new(FieldParams::new(3, 2, vec![2, 0, 1]));
        assert_eq!(r.unwrap_err(), FieldError::NotIrreducible);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldTable::new(FieldParams::new(3, 13, vec![0; 14])).unwrap_err(),
            FieldError::TableTooLarge { order: 1_594_323 }
        );
        assert_eq!(
            FieldTable::new(FieldParams::new(4, 1, vec![1, 1])).unwrap_err(),
            FieldError::NotPrime(4)
        );
        assert_eq!(
            FieldTable::new(FieldParams::new(3, 2, vec![2, 2, 2])).unwrap_err(),
            FieldError::BadPolynomial
        );
    }

    #[test]
    fn gf9_cube_of_generator() {
        let f = gf9();
        // g^3 = 2g + 1
        assert_eq!(f.to_vector(f.gen_pow(3)), [1, 2]);
        assert_eq!(f.trace(f.generator()), 1);
        assert_eq!(f.trace(Elem::ONE), 2);
    }

    #[test]
    fn trace_kernel_has_p_pow_e_minus_one_elements() {
        let f = gf9();
        assert_eq!(f.elements().filter(|&x| f.trace(x) == 0).count(), 3);
    }

    #[test]
    fn order_of_half_power() {
        let f = gf9();
        assert_eq!(f.element_order(Elem::ONE).unwrap(), 1);
        assert_eq!(f.element_order(f.gen_pow(4)).unwrap(), 2);
        assert_eq!(f.element_order(Elem::ZERO).unwrap_err(), FieldError::ZeroElement);
    }

    #[test]
    fn inverse_and_division_errors() {
        let f = gf9();
        assert_eq!(f.inv(Elem::ZERO).unwrap_err(), FieldError::DivisionByZero);
        for x in f.elements().filter(|x| !x.is_zero()) {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
        }
        assert_eq!(f.check(Elem(8)).unwrap_err(), FieldError::FieldMismatch);
    }

    #[test]
    fn subfield_queries() {
        let f = FieldTable::builtin(3, 4).unwrap();
        assert!(!f.in_subfield(f.generator(), 2).unwrap());
        assert_eq!(
            f.in_subfield(f.generator(), 3).unwrap_err(),
            FieldError::NotADivisor { d: 3, e: 4 }
        );
        assert_eq!(
            f.subfield_trace(f.generator(), 2).unwrap_err(),
            FieldError::NotInSubfield
        );
        assert_eq!(f.subfield_elements(2).unwrap().len(), 9);
    }

    #[test]
    fn builtin_table_entries_are_valid() {
        for e in 1..=12 {
            let f = FieldTable::builtin(3, e).unwrap();
            assert_eq!(f.order(), 3usize.pow(e));
        }
    }

    #[test]
    fn elem_display() {
        assert_eq!(Elem::ZERO.to_string(), "0");
        assert_eq!(Elem(5).to_string(), "g^5");
    }
}
