//! Lefschetz consistency beyond the untwisted battery: nontrivial twist
//! bundles, other Spin^c classes, and deeper q-orders.

use cpm_index::index::SpincData;
use cpm_index::lefschetz::{
    build_v_section4, lefschetz_sum, linear_model, LinearModelSpec, VSummand,
};

fn model(weights: Vec<i64>, c1: i64) -> cpm_index::lefschetz::FixedPointData {
    linear_model(&LinearModelSpec::new(weights).unwrap())
        .unwrap()
        .with_standard_spinc(c1)
}

fn assert_consistent(weights: Vec<i64>, c1: i64, v: &Vec<VSummand>, order: usize) {
    let m = weights.len() - 1;
    let data = model(weights.clone(), c1);
    let spinc = SpincData::new(m, c1).unwrap();
    let out = lefschetz_sum(&data, &spinc, v, order).unwrap();
    assert!(
        out.polynomial,
        "weights {weights:?} c1={c1}: pole at order {:?}",
        out.failing_order
    );
    assert!(
        out.matches_index,
        "weights {weights:?} c1={c1}: {:?} vs {:?}",
        out.at_one, out.index
    );
}

#[test]
fn section4_twists_across_models() {
    for weights in [
        vec![0i64, 1, 2],
        vec![0, 1, -1],
        vec![0, 2, 3],
        vec![0, 1, -2],
        vec![0, 1, 2, 3],
        vec![0, 1, -1, 2],
        vec![0, 1, -1, 3],
        vec![0, 2, -1, -3],
    ] {
        let m = weights.len() - 1;
        let c1 = m as i64 + 1;
        let data = model(weights.clone(), c1);
        let v = build_v_section4(&data).unwrap();
        assert_consistent(weights, c1, &v, 3);
    }
}

#[test]
fn single_line_twists() {
    for twist in [-2i64, 0, 2, 6] {
        for power in [0i64, 1, 2, -1] {
            let v = vec![VSummand { gamma_power: power, lambda_twist: twist, multiplicity: 1 }];
            assert_consistent(vec![0, 1, -1], 3, &v, 3);
            assert_consistent(vec![0, 1, 2], 3, &v, 3);
        }
    }
}

#[test]
fn multi_summand_twists() {
    let v = vec![
        VSummand { gamma_power: 1, lambda_twist: -2, multiplicity: 2 },
        VSummand { gamma_power: 2, lambda_twist: 4, multiplicity: 1 },
    ];
    assert_consistent(vec![0, 1, 2], 3, &v, 3);
    assert_consistent(vec![0, 1, -1, 2], 4, &v, 2);
}

#[test]
fn other_spinc_classes() {
    // any c1 of the right parity must stay consistent
    for c1 in [-3i64, -1, 1, 5, 7] {
        assert_consistent(vec![0, 1, -1], c1, &vec![], 3);
    }
    for c1 in [-4i64, 0, 2, 6] {
        assert_consistent(vec![0, 1, 3, 4], c1, &vec![], 3);
    }
}

#[test]
fn deeper_q_orders() {
    assert_consistent(vec![0, 1], 2, &vec![], 8);
    assert_consistent(vec![0, 1, -1], 3, &vec![], 8);
    let data = model(vec![0, 1, 2], 3);
    let v = build_v_section4(&data).unwrap();
    assert_consistent(vec![0, 1, 2], 3, &v, 6);
}
