use hermdes_core::design::{support_design, Design};
use hermdes_core::design_code::HermitianDesign;
use hermdes_core::{FpVector, Gf3Vec};
use proptest::prelude::*;

#[test]
fn enumerated_and_closed_form_designs_agree() {
    for (m, params) in [(1u32, (9, 18, 5, 10, 5)), (2, (81, 648, 51, 408, 255))] {
        let hd = HermitianDesign::new(m).unwrap();
        let code = hd.hermitian().generator_matrix::<Gf3Vec>();
        let enumerated = support_design(&code, hd.hermitian().min_distance(), 20).unwrap();
        let closed = hd.min_weight_design().unwrap();
        assert_eq!(enumerated, closed);
        let p = closed.parameters().unwrap();
        assert_eq!((p.v, p.b, p.k, p.r, p.lambda), params);
        assert_eq!(closed.verify_t_design(2).unwrap(), Some(p.lambda));
        assert_eq!(closed.verify_t_design(1).unwrap(), Some(p.r));
        // Fisher's inequality and the divisibility conditions
        assert!(p.b >= p.v);
        assert_eq!((p.b * p.k * (p.k - 1)) % (p.v * (p.v - 1)), 0);
    }
}

#[test]
fn incidence_rows_follow_block_order() {
    let design = HermitianDesign::new(2).unwrap().min_weight_design().unwrap();
    let rows = design.incidence_rows::<Gf3Vec>(3);
    assert_eq!(rows.len(), 648);
    for (row, block) in rows.iter().zip(&design.blocks) {
        assert_eq!(row.weight(), 51);
        let support: Vec<u32> = row.support().into_iter().map(|i| i as u32).collect();
        assert_eq!(&support, block);
    }
    assert!(design.blocks.windows(2).all(|w| w[0] < w[1]));
}

fn subsets(v: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << v) {
        if mask.count_ones() as usize == k {
            out.push((0..v).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn complete_designs(v in 4u32..10, k in 2usize..5) {
        prop_assume!(k < v as usize);
        let d = Design::new(v as usize, subsets(v, k)).unwrap();
        let lambda = binom(v as usize - 2, k - 2);
        prop_assert_eq!(d.verify_t_design(2).unwrap(), Some(lambda));
        let p = d.parameters().unwrap();
        prop_assert_eq!(p.lambda, lambda);
        prop_assert_eq!(p.b, binom(v as usize, k));
    }

    #[test]
    fn dropping_a_block_is_detected(v in 4u32..9, k in 2usize..4, drop in any::<prop::sample::Index>()) {
        prop_assume!(k < v as usize);
        let d = Design::new(v as usize, subsets(v, k)).unwrap();
        let i = drop.index(d.num_blocks());
        prop_assert_eq!(d.without_block(i).verify_t_design(2).unwrap(), None);
    }
}
