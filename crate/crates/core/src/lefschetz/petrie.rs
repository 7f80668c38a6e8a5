//! The inequality chain bounding n (with p₁ = −n·x²) by the dimension.
//!
//! With the fixed-point normalization a_{Y_0} = 0, a non-negative Jacobi
//! index I_{Y_0} of the twist bundle forces
//!   Σ m_{Z,j}² + n·a_Z² ≤ Σ (d(Y_i)+1)·a_{Y_i}²   (Z the maximal-weight
//! component), and therefore n < m.

use super::star::{star_invariant, StarOutcome};
use super::vbundle::{build_v_section4, jacobi_index};
use super::{FixedPointData, LefschetzError};

/// All quantities in un-doubled units (stored weights divided by 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetrieOutcome {
    pub m: usize,
    pub n: i64,
    /// The chain's standing hypothesis; when false the report is
    /// informational only.
    pub n_nonnegative: bool,
    pub star: StarOutcome,
    /// I_{Y_0} = ½(Σ(d(Y_i)+1)·a_{Y_i}² − Σ m_{Y_0,j}²), twice the value to
    /// stay integral for odd weight sums.
    pub two_i_y0: i64,
    /// Index of the maximal-|γ-weight| component Z.
    pub max_component: usize,
    /// Σ m_{Z,j}² + n·a_Z².
    pub lhs: i64,
    /// Σ_{i>0} (d(Y_i)+1)·a_{Y_i}².
    pub rhs: i64,
    /// Largest n consistent with the chain, when a_Z ≠ 0.
    pub implied_n_bound: Option<i64>,
    /// Every implication of the chain holds on this data.
    pub chain_consistent: bool,
    /// I_{Y_0} ≥ 0 ⟹ n < m.
    pub bound_holds: bool,
    pub pass: bool,
}

pub fn petrie_bound_report(data: &FixedPointData) -> Result<PetrieOutcome, LefschetzError> {
    data.validate()?;
    if !data.is_normalized() {
        return Err(LefschetzError::MissingNormalization);
    }
    let v = build_v_section4(data)?;
    let with_v = data.clone().with_v(&v);
    let star = star_invariant(data);

    let ud = |w: i64| w / 2;
    let m2_sum = |i: usize| -> i64 {
        data.components[i]
            .normal_lines
            .iter()
            .map(|l| ud(l.weight) * ud(l.weight))
            .sum()
    };
    let a = |i: usize| ud(data.components[i].gamma_weight);

    // 2·I_{Y_0}, exact: jacobi_index may be half-integral in un-doubled units
    let s2: i64 = with_v.components[0]
        .v_lines
        .iter()
        .map(|l| ud(l.weight) * ud(l.weight))
        .sum();
    let two_i_y0 = s2 - m2_sum(0);
    debug_assert_eq!(
        jacobi_index(&with_v.components[0]).ok(),
        if two_i_y0 % 2 == 0 { Some(two_i_y0 / 2) } else { None }
    );

    let max_component = (0..data.components.len())
        .max_by_key(|&i| a(i) * a(i))
        .expect("nonempty");
    let az2 = a(max_component) * a(max_component);
    let lhs = m2_sum(max_component) + data.n * az2;
    let rhs: i64 = data
        .components
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| (c.half_dim as i64 + 1) * a(i) * a(i))
        .collect::<Vec<_>>()
        .iter()
        .sum();

    let i_nonneg = two_i_y0 >= 0;
    let mut chain_consistent = true;
    // I_{Y_0} ≥ 0 ⟺ Σ m_{Y_0}² ≤ rhs, by construction of V
    if i_nonneg != (m2_sum(0) <= rhs) {
        chain_consistent = false;
    }
    // the weight identity transports Σ m_{Y_0}² to the maximal component
    if star.pass && lhs != m2_sum(0) {
        chain_consistent = false;
    }
    // and then n·a_Z² ≤ rhs − Σ m_Z²
    if star.pass && i_nonneg && data.n * az2 > rhs - m2_sum(max_component) {
        chain_consistent = false;
    }
    let implied_n_bound = if az2 > 0 {
        Some((rhs - m2_sum(max_component)).div_euclid(az2))
    } else {
        None
    };
    let bound_holds = !i_nonneg || data.n < data.m as i64;
    let n_nonnegative = data.n >= 0;
    let pass = chain_consistent && bound_holds;
    Ok(PetrieOutcome {
        m: data.m,
        n: data.n,
        n_nonnegative,
        star,
        two_i_y0,
        max_component,
        lhs,
        rhs,
        implied_n_bound,
        chain_consistent,
        bound_holds,
        pass,
    })
}
