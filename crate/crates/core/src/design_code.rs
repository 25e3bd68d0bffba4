//! The ternary code spanned by the incidence rows of the minimum-weight
//! support design of `C(2m, 3)`, its alternative spanning sets, the
//! defining-set description through the residue families `S_0..S_3`, and the
//! structural checks run against it.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;
use serde::{Deserialize, Serialize};

use crate::cyclic::{CyclicCode, CyclicError};
use crate::design::{support_design_from_words, Design, DesignError};
use crate::field::{Elem, FieldTable};
use crate::grm::extended_grm_generator;
use crate::hermitian::{CodewordIndex, HermitianCode, HermitianError};
use crate::linalg::{FpVector, GenMatrixCode, Gf3Vec};
use crate::util::binomial;

/// Largest `m` for which the matrix routes (length `3^(2m)`) are built.
pub const MAX_MATRIX_M: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DesignCodeError {
    TooLarge { m: u32, max: u32 },
    Hermitian(HermitianError),
    Design(DesignError),
    Cyclic(CyclicError),
}

impl fmt::Display for DesignCodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignCodeError::TooLarge { m, max } => write!(f, "m = {m} exceeds the matrix-route limit {max}"),
            DesignCodeError::Hermitian(e) => write!(f, "{e}"),
            DesignCodeError::Design(e) => write!(f, "{e}"),
            DesignCodeError::Cyclic(e) => write!(f, "{e}"),
        }
    }
}

impl From<HermitianError> for DesignCodeError {
    fn from(e: HermitianError) -> Self {
        DesignCodeError::Hermitian(e)
    }
}

impl From<DesignError> for DesignCodeError {
    fn from(e: DesignError) -> Self {
        DesignCodeError::Design(e)
    }
}

impl From<CyclicError> for DesignCodeError {
    fn from(e: CyclicError) -> Self {
        DesignCodeError::Cyclic(e)
    }
}

/// `C(2m, 3)` together with the constructions of its design code.
#[derive(Clone, Debug)]
pub struct HermitianDesign {
    code: HermitianCode,
}

impl HermitianDesign {
    pub fn new(m: u32) -> Result<Self, DesignCodeError> {
        if m > MAX_MATRIX_M {
            return Err(DesignCodeError::TooLarge { m, max: MAX_MATRIX_M });
        }
        Ok(HermitianDesign {
            code: HermitianCode::new(3, m)?,
        })
    }

    pub fn hermitian(&self) -> &HermitianCode {
        &self.code
    }

    pub fn field(&self) -> &FieldTable {
        self.code.field()
    }

    pub fn m(&self) -> u32 {
        self.code.m()
    }

    pub fn length(&self) -> usize {
        self.code.length()
    }

    fn norm_exp(&self) -> u64 {
        3u64.pow(self.m()) + 1
    }

    /// Vector of `f(t)` over the point order.
    pub fn evaluate_fn(&self, f: impl Fn(Elem) -> u8) -> Gf3Vec {
        let field = self.field();
        let mut v = Gf3Vec::zeros(3, field.order());
        for pos in 0..field.order() {
            v.set(pos, f(field.at_position(pos)) % 3);
        }
        v
    }

    /// `Tr_depth(coef · t^e)` for `e >= 1`; `depth` is `2m` or `m`.
    pub fn monomial_row(&self, coef: Elem, e: u64, depth: u32) -> Gf3Vec {
        let field = self.field();
        let n = field.mult_order() as u64;
        let mut v = Gf3Vec::zeros(3, field.order());
        let Some(lc) = coef.log() else { return v };
        for pos in 0..n {
            let x = field.gen_pow(((lc as u64 + pos * (e % n)) % n) as i64);
            let value = if depth == field.degree() {
                field.trace(x)
            } else {
                field
                    .subfield_trace(x, depth)
                    .expect("monomial value lies in the subfield")
            };
            v.set(pos as usize, value);
        }
        v
    }

    /// `Tr(b t)`.
    pub fn linear_row(&self, b: Elem) -> Gf3Vec {
        self.monomial_row(b, 1, 2 * self.m())
    }

    /// `Tr(a t^(3^m+1))`.
    pub fn norm_row(&self, a: Elem) -> Gf3Vec {
        self.monomial_row(a, self.norm_exp(), 2 * self.m())
    }

    fn all_ones(&self) -> Gf3Vec {
        Gf3Vec::from_digits(3, &vec![1u8; self.length()])
    }

    /// Minimum-weight codewords of `C(2m, 3)` from the closed-form index set.
    pub fn min_weight_words(&self) -> Vec<Gf3Vec> {
        self.code
            .min_weight_indices()
            .iter()
            .map(|idx| self.code.evaluate::<Gf3Vec>(idx))
            .collect()
    }

    /// Support design of the minimum-weight class.
    pub fn min_weight_design(&self) -> Result<Design, DesignCodeError> {
        Ok(support_design_from_words(
            self.length(),
            self.min_weight_words(),
            self.code.min_distance(),
        )?)
    }

    /// Row space of the incidence matrix of the minimum-weight design.
    pub fn incidence_code(&self) -> Result<GenMatrixCode<Gf3Vec>, DesignCodeError> {
        Ok(self.min_weight_design()?.code::<Gf3Vec>(3))
    }

    /// Componentwise squares of the codewords named by `indices`.
    pub fn squared_words(&self, indices: &[CodewordIndex]) -> Vec<Gf3Vec> {
        indices
            .iter()
            .map(|idx| self.code.evaluate::<Gf3Vec>(idx).square())
            .collect()
    }

    /// Squares of all minimum-weight codewords.
    pub fn squared_generators(&self) -> Vec<Gf3Vec> {
        self.squared_words(&self.code.min_weight_indices())
    }

    /// Squares over the index set `a != 0, h != Tr(b)`.
    pub fn squared_generators_trace_branch(&self) -> Vec<Gf3Vec> {
        self.squared_words(&self.code.trace_b_branch_indices())
    }

    /// Exponents `(3^m+1)3^i + 1`, `i < m`.
    pub fn mixed_exponents(&self) -> Vec<u64> {
        (0..self.m()).map(|i| self.norm_exp() * 3u64.pow(i) + 1).collect()
    }

    /// Exponents `3^i + 1`, `i < 2m`.
    pub fn quadratic_exponents(&self) -> Vec<u64> {
        (0..2 * self.m()).map(|i| 3u64.pow(i) + 1).collect()
    }

    /// Exponents `(3^m+1)(3^i+1)`, `i < m`; `t^e` always lies in GF(3^m).
    pub fn norm_quadratic_exponents(&self) -> Vec<u64> {
        (0..self.m()).map(|i| self.norm_exp() * (3u64.pow(i) + 1)).collect()
    }

    /// Trace-monomial spanning set: full-field coefficients over a basis for
    /// the mixed, quadratic and linear exponents, GF(3^m) coefficients with the
    /// trace down to GF(3^m) for the norm-quadratic exponents, and the constant.
    pub fn trace_monomial_generators(&self) -> Vec<Gf3Vec> {
        let field = self.field();
        let m = self.m();
        let basis = field.polynomial_basis();
        let sub_basis = field.subfield_basis(m).expect("m divides 2m");
        let mut rows = Vec::new();
        for e in self
            .mixed_exponents()
            .into_iter()
            .chain(self.quadratic_exponents())
            .chain([1])
        {
            rows.extend(basis.iter().map(|&b| self.monomial_row(b, e, 2 * m)));
        }
        for e in self.norm_quadratic_exponents() {
            rows.extend(sub_basis.iter().map(|&c| self.monomial_row(c, e, m)));
        }
        rows.push(self.all_ones());
        rows
    }

    /// Length-`(q-1)` cyclic code with defining set `Z_n \ (S_0 ∪ ... ∪ S_3)`.
    pub fn defining_set_cyclic(&self) -> Result<CyclicCode, DesignCodeError> {
        let s = s_sets(self.m());
        let union = s.union();
        Ok(CyclicCode::new(s.n, 3, (0..s.n).filter(|i| !union.contains(i)))?)
    }

    /// Dual of the extended dual of the defining-set code, with the extension
    /// coordinate (the point `t = 0`) last.
    pub fn defining_set_code(&self) -> Result<GenMatrixCode<Gf3Vec>, DesignCodeError> {
        let defining = self.defining_set_cyclic()?;
        let cyclic = defining.generator_matrix::<Gf3Vec>(self.field())?;
        Ok(cyclic.orthogonal_complement().extend().orthogonal_complement())
    }

    /// Containment of `code` in the extended order-4 and order-2 GRM codes on
    /// 2m variables.
    pub fn grm_containment(&self, code: &GenMatrixCode<Gf3Vec>) -> GrmContainment {
        let grm4 = extended_grm_generator::<Gf3Vec>(self.field(), 4);
        let grm2 = extended_grm_generator::<Gf3Vec>(self.field(), 2);
        let m = self.m() as i64;
        let bound = binomial(2 * m + 3, 4) + binomial(2 * m + 2, 3) - (2 * m - 1) * 2 * m / 2 + 1;
        GrmContainment {
            code_dimension: code.dimension(),
            hermitian_dimension: self.code.dimension(),
            order4_dimension: grm4.dimension(),
            order4_dimension_formula: bound as usize,
            in_order4: code.is_subcode_of(&grm4).expect("same length"),
            order2_dimension: grm2.dimension(),
            in_order2: code.is_subcode_of(&grm2).expect("same length"),
        }
    }

    /// Membership of the product and trace functions that reduce the squared
    /// generators, on bases plus `samples` random choices, and the pointwise
    /// expansions of the products into trace monomials.
    pub fn span_memberships<R: RngCore>(
        &self,
        code: &GenMatrixCode<Gf3Vec>,
        rng: &mut R,
        samples: usize,
    ) -> SpanReport {
        let field = self.field();
        let m = self.m();
        let basis = field.polynomial_basis();
        let sub_basis = field.subfield_basis(m).expect("m divides 2m");
        let sub_nonzero: Vec<Elem> = self
            .code
            .subfield_elements()
            .into_iter()
            .filter(|a| !a.is_zero())
            .collect();
        let rand_full = |rng: &mut R| field.at_position(rng.next_u32() as usize % field.order());
        let rand_sub = |rng: &mut R| sub_nonzero[rng.next_u32() as usize % sub_nonzero.len()];

        let mut report = SpanReport::default();
        let member = |v: &Gf3Vec| code.contains(v).expect("same length");

        report.push("constant", core::iter::once(vec![]), |_| member(&self.all_ones()));

        let linear: Vec<Vec<Elem>> = basis
            .iter()
            .map(|&b| vec![b])
            .chain((0..samples).map(|_| vec![rand_full(rng)]))
            .collect();
        report.push("linear", linear, |w| member(&self.linear_row(w[0])));

        let linear_pairs: Vec<Vec<Elem>> = pairs(&basis)
            .chain((0..samples).map(|_| vec![rand_full(rng), rand_full(rng)]))
            .collect();
        report.push("linear_product", linear_pairs.iter().cloned(), |w| {
            member(&self.linear_row(w[0]).mul_pointwise(&self.linear_row(w[1])))
        });

        let norm: Vec<Vec<Elem>> = sub_basis
            .iter()
            .map(|&a| vec![a])
            .chain((0..samples).map(|_| vec![rand_sub(rng)]))
            .collect();
        report.push("norm", norm, |w| member(&self.norm_row(w[0])));

        let norm_pairs: Vec<Vec<Elem>> = pairs(&sub_basis)
            .chain((0..samples).map(|_| vec![rand_sub(rng), rand_sub(rng)]))
            .collect();
        report.push("norm_product", norm_pairs.iter().cloned(), |w| {
            member(&self.norm_row(w[0]).mul_pointwise(&self.norm_row(w[1])))
        });

        let mixed_pairs: Vec<Vec<Elem>> = sub_basis
            .iter()
            .flat_map(|&a| basis.iter().map(move |&b| vec![a, b]))
            .chain((0..samples).map(|_| vec![rand_sub(rng), rand_full(rng)]))
            .collect();
        report.push("norm_linear_product", mixed_pairs.iter().cloned(), |w| {
            member(&self.norm_row(w[0]).mul_pointwise(&self.linear_row(w[1])))
        });

        report.push("linear_product_expansion", linear_pairs.iter().cloned(), |w| {
            let lhs = self.linear_row(w[0]).mul_pointwise(&self.linear_row(w[1]));
            let mut rhs = Gf3Vec::zeros(3, self.length());
            for (j, e) in self.quadratic_exponents().into_iter().enumerate() {
                let c = field.mul(w[0], field.frobenius(w[1], j as u32));
                rhs.add_assign(&self.monomial_row(c, e, 2 * m));
            }
            lhs == rhs
        });

        report.push("norm_linear_product_expansion", mixed_pairs.iter().cloned(), |w| {
            let lhs = self.norm_row(w[0]).mul_pointwise(&self.linear_row(w[1]));
            let mut rhs = Gf3Vec::zeros(3, self.length());
            for (i, e) in self.mixed_exponents().into_iter().enumerate() {
                let c = field.mul(w[1], field.frobenius(w[0], i as u32));
                rhs.add_assign(&self.monomial_row(c, e, 2 * m));
            }
            rhs.scale(2);
            lhs == rhs
        });

        report.push("norm_product_expansion", norm_pairs.iter().cloned(), |w| {
            let lhs = self.norm_row(w[0]).mul_pointwise(&self.norm_row(w[1]));
            let mut rhs = Gf3Vec::zeros(3, self.length());
            for (j, e) in self.norm_quadratic_exponents().into_iter().enumerate() {
                let c = field.mul(w[0], field.frobenius(w[1], j as u32));
                rhs.add_assign(&self.monomial_row(c, e, m));
            }
            lhs == rhs
        });

        let span = |rows: Vec<Gf3Vec>| GenMatrixCode::from_rows(3, self.length(), rows).expect("same length");
        let monomials = |exps: Vec<u64>, coefs: &[Elem], depth: u32| -> Vec<Gf3Vec> {
            exps.iter()
                .flat_map(|&e| coefs.iter().map(move |&c| self.monomial_row(c, e, depth)))
                .collect()
        };
        report.push("linear_product_span", core::iter::once(vec![]), |_| {
            let products = pairs(&basis).map(|w| self.linear_row(w[0]).mul_pointwise(&self.linear_row(w[1])));
            span(products.collect()) == span(monomials(self.quadratic_exponents(), &basis, 2 * m))
        });
        report.push("norm_linear_product_span", core::iter::once(vec![]), |_| {
            let products = sub_basis.iter().flat_map(|&a| {
                basis
                    .iter()
                    .map(move |&b| self.norm_row(a).mul_pointwise(&self.linear_row(b)))
            });
            span(products.collect()) == span(monomials(self.mixed_exponents(), &basis, 2 * m))
        });
        report.push("norm_product_span", core::iter::once(vec![]), |_| {
            let products = pairs(&sub_basis).map(|w| self.norm_row(w[0]).mul_pointwise(&self.norm_row(w[1])));
            span(products.collect()) == span(monomials(self.norm_quadratic_exponents(), &sub_basis, m))
        });
        report
    }

    /// First `t` violating one of the three vanishing sums
    /// `Σ_a Tr(a t^(3^m+1))^2`, `Σ_b Tr(b t)^2`, `Σ_a Tr(a t^(3^m+1))` over
    /// nonzero `a ∈ GF(3^m)`, `b ∈ GF(3^2m)`, or `None` when all vanish.
    pub fn trace_sum_violation(&self) -> Option<Elem> {
        let field = self.field();
        let subs: Vec<Elem> = self
            .code
            .subfield_elements()
            .into_iter()
            .filter(|a| !a.is_zero())
            .collect();
        field.elements().find(|&t| {
            let nt = field.pow(t, self.norm_exp());
            let (mut sq, mut lin) = (0u32, 0u32);
            for &a in &subs {
                let v = field.trace(field.mul(a, nt)) as u32;
                sq += v * v;
                lin += v;
            }
            let lin_sq: u32 = field
                .elements()
                .filter(|b| !b.is_zero())
                .map(|b| (field.trace(field.mul(b, t)) as u32).pow(2))
                .sum();
            sq % 3 != 0 || lin % 3 != 0 || !lin_sq.is_multiple_of(3)
        })
    }

    /// Smallest number of `t` solving `Tr(a t^(3^m+1)) + h = 0` and
    /// `Tr(a (t+b)^(3^m+1)) + h = 0` over all `a ∈ GF(3^m)^*`, `b`, `h`,
    /// with a triple attaining it.
    pub fn min_shift_solutions(&self) -> (usize, CodewordIndex) {
        let field = self.field();
        let q = field.order();
        let mut best = (
            usize::MAX,
            CodewordIndex {
                a: Elem::ZERO,
                b: Elem::ZERO,
                h: 0,
            },
        );
        for a in self.code.subfield_elements().into_iter().filter(|a| !a.is_zero()) {
            let values: Vec<u8> = (0..q)
                .map(|pos| field.trace(field.mul(a, field.pow(field.at_position(pos), self.norm_exp()))))
                .collect();
            for h in 0..3u8 {
                let target = (3 - h) % 3;
                let members: Vec<usize> = (0..q).filter(|&pos| values[pos] == target).collect();
                let in_set: Vec<bool> = values.iter().map(|&v| v == target).collect();
                for bpos in 0..q {
                    let b = field.at_position(bpos);
                    let count = members
                        .iter()
                        .filter(|&&pos| in_set[field.position(field.add(field.at_position(pos), b))])
                        .count();
                    if count < best.0 {
                        best = (count, CodewordIndex { a, b, h });
                    }
                }
            }
        }
        best
    }
}

fn pairs(elems: &[Elem]) -> impl Iterator<Item = Vec<Elem>> + '_ {
    elems
        .iter()
        .enumerate()
        .flat_map(move |(i, &x)| elems[i..].iter().map(move |&y| vec![x, y]))
}

/// Outcome of [`HermitianDesign::grm_containment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrmContainment {
    pub code_dimension: usize,
    pub hermitian_dimension: usize,
    pub order4_dimension: usize,
    /// `C(2m+3,4) + C(2m+2,3) - (2m-1)m + 1`
    pub order4_dimension_formula: usize,
    pub in_order4: bool,
    pub order2_dimension: usize,
    pub in_order2: bool,
}

impl GrmContainment {
    /// Contained in order 4 with a strictly increasing dimension chain.
    pub fn holds(&self) -> bool {
        self.in_order4
            && self.hermitian_dimension < self.code_dimension
            && self.code_dimension < self.order4_dimension
            && self.order4_dimension == self.order4_dimension_formula
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanCheck {
    pub family: &'static str,
    pub tested: usize,
    /// Parameters of the first failing instance.
    pub failure: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub checks: Vec<SpanCheck>,
}

impl SpanReport {
    fn push(
        &mut self,
        family: &'static str,
        cases: impl IntoIterator<Item = Vec<Elem>>,
        mut ok: impl FnMut(&[Elem]) -> bool,
    ) {
        let mut tested = 0;
        let mut failure = None;
        for case in cases {
            tested += 1;
            if !ok(&case) {
                failure = Some(case);
                break;
            }
        }
        self.checks.push(SpanCheck {
            family,
            tested,
            failure,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }
}

/// A generator row leaving the code under `t -> s1 t + s2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFailure {
    pub row: usize,
    pub s1: Elem,
    pub s2: Elem,
}

/// Coordinate map of `t -> s1 t + s2` on the point order: `perm[pos(t)] = pos(s1 t + s2)`.
pub fn affine_permutation(field: &FieldTable, s1: Elem, s2: Elem) -> Vec<usize> {
    (0..field.order())
        .map(|pos| field.position(field.add(field.mul(s1, field.at_position(pos)), s2)))
        .collect()
}

/// Checks that every generator row of `code`, composed with `t -> s1 t + s2`,
/// stays in `code` for all `s1 != 0` with `s2 = 0`, `random_pairs` random
/// maps, and `s1 = 1` with `s2` over the polynomial basis. Returns the number
/// of maps tested.
pub fn affine_invariance_check<R: RngCore>(
    code: &GenMatrixCode<Gf3Vec>,
    field: &FieldTable,
    rng: &mut R,
    random_pairs: usize,
) -> Result<usize, AffineFailure> {
    let q = field.order();
    let mut maps: Vec<(Elem, Elem)> = field
        .elements()
        .filter(|s| !s.is_zero())
        .map(|s1| (s1, Elem::ZERO))
        .collect();
    for _ in 0..random_pairs {
        let s1 = field.gen_pow((rng.next_u32() % field.mult_order()) as i64);
        let s2 = field.at_position(rng.next_u32() as usize % q);
        maps.push((s1, s2));
    }
    maps.extend(field.polynomial_basis().into_iter().map(|s2| (Elem::ONE, s2)));
    for &(s1, s2) in &maps {
        let perm = affine_permutation(field, s1, s2);
        for (row, g) in code.rows().iter().enumerate() {
            if !code.contains(&g.permuted(&perm)).expect("same length") {
                return Err(AffineFailure { row, s1, s2 });
            }
        }
    }
    Ok(maps.len())
}

/// Design code of `C(2m, 3)` from its incidence rows.
pub fn design_code_from_incidence(m: u32) -> Result<GenMatrixCode<Gf3Vec>, DesignCodeError> {
    HermitianDesign::new(m)?.incidence_code()
}

/// `(9m^2 + 7m)/2 + 1`.
pub fn dimension_formula(m: u64) -> u64 {
    (9 * m * m + 7 * m) / 2 + 1
}

/// The residue families mod `n = 3^(2m) - 1`: `families[k][j]` is
/// `{-3^i x_kj : 0 <= i < 2m}` with `x_0j = 1`, `x_1j = 3^j(3^m+1) + 1`,
/// `x_2j = 3^j + 1`, `x_3j = (3^j+1)(3^m+1)`, `0 <= j < 2m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSets {
    pub m: u32,
    pub n: u64,
    pub families: [Vec<BTreeSet<u64>>; 4],
}

impl SSets {
    /// `S_k`, the union over `j`.
    pub fn set(&self, k: usize) -> BTreeSet<u64> {
        self.families[k].iter().flatten().copied().collect()
    }

    pub fn union(&self) -> BTreeSet<u64> {
        (0..4).flat_map(|k| self.set(k)).collect()
    }

    pub fn counts(&self) -> [usize; 4] {
        core::array::from_fn(|k| self.set(k).len())
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let sets: Vec<BTreeSet<u64>> = (0..4).map(|k| self.set(k)).collect();
        (0..4).all(|a| (a + 1..4).all(|b| sets[a].is_disjoint(&sets[b])))
    }

    /// Every member set is closed under multiplication by 3.
    pub fn closed_under_frobenius(&self) -> bool {
        self.families
            .iter()
            .flatten()
            .all(|s| s.iter().all(|&x| s.contains(&(mul_mod(x, 3, self.n)))))
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn s_sets(m: u32) -> SSets {
    assert!((1..=10).contains(&m), "m out of range");
    let n = 3u64.pow(2 * m) - 1;
    let pm = 3u64.pow(m);
    let pow3 = |i: u32| 3u64.pow(i) % n;
    let base = |k: usize, j: u32| -> u64 {
        match k {
            0 => 1,
            1 => (mul_mod(pow3(j), pm + 1, n) + 1) % n,
            2 => (pow3(j) + 1) % n,
            _ => mul_mod(pow3(j) + 1, pm + 1, n),
        }
    };
    let families = core::array::from_fn(|k| {
        (0..2 * m)
            .map(|j| {
                let x = base(k, j);
                (0..2 * m).map(|i| (n - mul_mod(pow3(i), x, n)) % n).collect()
            })
            .collect()
    });
    SSets { m, n, families }
}

pub fn s_set_counts(m: u32) -> [usize; 4] {
    s_sets(m).counts()
}

/// `(2m, 2m^2, (2m+1)m, m(m+1)/2)`.
pub fn s_set_count_formula(m: u32) -> [usize; 4] {
    let m = m as usize;
    [2 * m, 2 * m * m, (2 * m + 1) * m, m * (m + 1) / 2]
}

/// `|S_0 ∪ S_1 ∪ S_2 ∪ S_3| + 1` by direct residue arithmetic.
pub fn dimension_via_defining_set(m: u32) -> usize {
    s_sets(m).union().len() + 1
}
