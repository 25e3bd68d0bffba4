use std::collections::BTreeMap;

use hermdes_core::design::support_design_from_words;
use hermdes_core::field::primitive_polys;
use hermdes_core::hermitian::HermitianCode;
use hermdes_core::linalg::weight_enumerator_exhaustive;
use hermdes_core::{FieldParams, FieldTable, Gf3Vec};

#[test]
fn closed_form_matches_direct_zero_count() {
    for (p, m) in [(3u8, 1u32), (3, 2), (5, 1)] {
        let code = HermitianCode::new(p, m).unwrap();
        let mut seen = 0;
        for idx in code.all_indices() {
            assert_eq!(
                code.zero_count_closed_form(&idx),
                code.zero_count_direct(&idx),
                "{idx:?}"
            );
            seen += 1;
        }
        assert_eq!(seen, (p as usize).pow(3 * m + 1));
    }
}

#[test]
fn index_space_distribution_matches_table() {
    // weights tallied over all index triples, not over a generator matrix
    for (p, m) in [(3u8, 1u32), (3, 2), (5, 1)] {
        let code = HermitianCode::new(p, m).unwrap();
        let mut tally = BTreeMap::<usize, u64>::new();
        for idx in code.all_indices() {
            *tally.entry(code.length() - code.zero_count_direct(&idx)).or_default() += 1;
        }
        assert_eq!(tally, code.theoretical_weight_distribution().counts);
    }
}

#[test]
fn trace_branch_is_not_the_minimum_weight_class() {
    let code = HermitianCode::new(3, 2).unwrap();
    let literal = code.trace_b_branch_indices();
    assert_eq!(literal.len(), code.min_weight_indices().len());
    let off = literal
        .iter()
        .filter(|idx| code.length() - code.zero_count_direct(idx) != code.min_distance())
        .count();
    assert!(off > 0);
}

#[test]
fn results_do_not_depend_on_the_primitive_polynomial() {
    let builtin = HermitianCode::new(3, 2).unwrap();
    let poly = primitive_polys(3, 4)
        .find(|f| f.coeffs() != builtin.field().params().prim_poly.as_slice())
        .unwrap();
    let field = FieldTable::new(FieldParams::new(3, 4, poly.coeffs().to_vec())).unwrap();
    let other = HermitianCode::with_field(field, 2).unwrap();
    let a = weight_enumerator_exhaustive(&builtin.generator_matrix::<Gf3Vec>(), 10).unwrap();
    let b = weight_enumerator_exhaustive(&other.generator_matrix::<Gf3Vec>(), 10).unwrap();
    assert_eq!(a, b);
    let words = |c: &HermitianCode| {
        c.min_weight_indices()
            .iter()
            .map(|i| c.evaluate::<Gf3Vec>(i))
            .collect::<Vec<_>>()
    };
    let da = support_design_from_words(81, words(&builtin), 51).unwrap();
    let db = support_design_from_words(81, words(&other), 51).unwrap();
    assert_eq!(da.parameters().unwrap(), db.parameters().unwrap());
    assert_eq!(da.code::<Gf3Vec>(3).dimension(), db.code::<Gf3Vec>(3).dimension());
}
