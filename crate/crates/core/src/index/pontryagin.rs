//! Conversion between Pontrjagin classes and multiplicative-sequence
//! components, and the reconstruction solver that recovers p(M) from the
//! vanishing relations plus the signature.

use num_traits::{One, Zero};

use crate::algebra::truncpoly::Poly;
use crate::algebra::{rat_i, Rat};
use crate::classes::{genus_factor, Genus};

use super::rigidity::relation_factor;
use super::IndexError;

// ---------------------------------------------------------------------------
// dense series in u = x² over Q, ascending, fixed length
// ---------------------------------------------------------------------------

fn u_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len();
    let mut out = vec![Rat::zero(); n];
    for i in 0..n {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..n - i {
            if !b[j].is_zero() {
                out[i + j] += a[i].clone() * b[j].clone();
            }
        }
    }
    out
}

fn u_exp(a: &[Rat]) -> Vec<Rat> {
    debug_assert!(a[0].is_zero());
    let n = a.len();
    let mut out = vec![Rat::zero(); n];
    out[0] = Rat::one();
    let mut term = out.clone();
    for k in 1..n {
        term = u_mul(&term, a);
        let inv_k = Rat::one() / rat_i(k as i64);
        for (o, t) in out.iter_mut().zip(term.iter()) {
            *o += t.clone() * inv_k.clone();
        }
        term = term.iter().map(|t| t.clone() * inv_k.clone()).collect();
        // term now holds a^k/k!
    }
    out
}

fn u_log(a: &[Rat]) -> Vec<Rat> {
    debug_assert!(a[0].is_one());
    let n = a.len();
    let mut w: Vec<Rat> = a.to_vec();
    w[0] = Rat::zero(); // a − 1
    let mut out = vec![Rat::zero(); n];
    let mut term = vec![Rat::zero(); n];
    term[0] = Rat::one();
    for k in 1..n {
        term = u_mul(&term, &w);
        let c = Rat::new((if k % 2 == 1 { 1 } else { -1 }).into(), (k as i64).into());
        for (o, t) in out.iter_mut().zip(term.iter()) {
            *o += t.clone() * c.clone();
        }
    }
    out
}

/// G(u) = g(√u) for the even genus factor g.
fn genus_u_series(genus: Genus, cap_u: usize) -> Vec<Rat> {
    let g = genus_factor(genus, 2 * cap_u);
    (0..=cap_u).map(|j| g.coeff(2 * j)).collect()
}

/// Power sums of the formal squares from the elementary symmetric values
/// (Newton's identities); e beyond the given list is zero.
fn power_sums(e: &[Rat], cap: usize) -> Vec<Rat> {
    let get_e = |i: usize| -> Rat {
        if i == 0 {
            Rat::one()
        } else {
            e.get(i - 1).cloned().unwrap_or_else(Rat::zero)
        }
    };
    let mut s = vec![Rat::zero(); cap + 1];
    for j in 1..=cap {
        let mut acc = if j % 2 == 1 {
            rat_i(j as i64) * get_e(j)
        } else {
            -rat_i(j as i64) * get_e(j)
        };
        for i in 1..j {
            let sign = if i % 2 == 1 { Rat::one() } else { -Rat::one() };
            acc += sign * get_e(i) * s[j - i].clone();
        }
        s[j] = acc;
    }
    s
}

/// The total class of the multiplicative sequence for total Pontrjagin class
/// 1 + Σ p[j−1]·x^{2j}, expanded in Q[x]/(x^{m+1}).
pub fn class_from_pontryagin(genus: Genus, p: &[Rat], m: usize) -> Poly {
    let cap_u = m / 2;
    let h = u_log(&genus_u_series(genus, cap_u));
    let s = power_sums(p, cap_u);
    let mut arg = vec![Rat::zero(); cap_u + 1];
    for j in 1..=cap_u {
        arg[j] = h[j].clone() * s[j].clone();
    }
    let series = u_exp(&arg);
    let mut poly = Poly::constant(m, series[0].clone());
    for (j, c) in series.iter().enumerate().skip(1) {
        poly = poly + Poly::monomial(m, 2 * j, c.clone());
    }
    poly
}

/// Invert the triangular dependence: recover p₁..p_{⌊m/2⌋} from the x^{2j}
/// components of the sequence. Exact; each stage is affine in the new p_j.
pub fn pontryagin_from_class(genus: Genus, components: &[Rat], m: usize) -> Vec<Rat> {
    let cap_u = m / 2;
    assert!(components.len() >= cap_u);
    let mut p: Vec<Rat> = Vec::with_capacity(cap_u);
    for j in 1..=cap_u {
        let mut with_zero = p.clone();
        with_zero.push(Rat::zero());
        let f0 = class_from_pontryagin(genus, &with_zero, m).coeff(2 * j);
        let mut with_one = p.clone();
        with_one.push(Rat::one());
        let f1 = class_from_pontryagin(genus, &with_one, m).coeff(2 * j);
        let slope = f1 - f0.clone();
        assert!(!slope.is_zero(), "sequence is degenerate at stage {j}");
        p.push((components[j - 1].clone() - f0) / slope);
    }
    p
}

/// ⟨L(p), μ⟩: the signature of a candidate class (0 in odd dimensions).
pub fn signature_from_p(p: &[Rat], m: usize) -> Rat {
    if !m.is_multiple_of(2) {
        return Rat::zero();
    }
    class_from_pontryagin(Genus::L, p, m).coeff(m)
}

/// Outcome of the reconstruction solver, with the solution-space dimension
/// reported at each stage instead of assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub m: usize,
    pub unknowns: usize,
    pub relation_count: usize,
    pub relation_rank: usize,
    pub dim_after_relations: usize,
    pub residual_dim: usize,
    /// Â components A₁..A_{⌊m/2⌋} when uniquely determined.
    pub ahat_components: Option<Vec<Rat>>,
    /// p₁..p_{⌊m/2⌋} when uniquely determined.
    pub pontryagin: Option<Vec<Rat>>,
    pub signature_used: bool,
}

/// Solve for the Â-components from the vanishing relations, convert to
/// Pontrjagin classes, and select by the signature ⟨L, μ⟩ = 1 (m even).
pub fn reconstruct_pontryagin(m: usize) -> Result<Reconstruction, IndexError> {
    if m < 2 {
        return Err(IndexError::DimensionTooSmall(m));
    }
    let unknowns = m / 2;
    let kmax: i64 = if m >= 3 { ((m - 3) / 2) as i64 } else { -1 };
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for k in 0..=kmax {
        let f = relation_factor(m, k as usize);
        let row: Vec<Rat> = (1..=unknowns)
            .map(|j| {
                if 2 * j <= m {
                    f.coeff(m - 2 * j)
                } else {
                    Rat::zero()
                }
            })
            .collect();
        rows.push(row);
        rhs.push(-f.coeff(m));
    }
    let relation_count = rows.len();
    let (particular, nullspace, rank) =
        solve_affine(rows, rhs, unknowns).ok_or(IndexError::NoSolution)?;
    let dim_after_relations = nullspace.len();

    // closed under the relations; now impose the signature
    if dim_after_relations == 0 {
        let p = pontryagin_from_class(Genus::AHat, &particular, m);
        let sig = signature_from_p(&p, m);
        let expected = if m.is_multiple_of(2) { Rat::one() } else { Rat::zero() };
        if sig != expected {
            return Err(IndexError::NoSolution);
        }
        return Ok(Reconstruction {
            m,
            unknowns,
            relation_count,
            relation_rank: rank,
            dim_after_relations,
            residual_dim: 0,
            ahat_components: Some(particular),
            pontryagin: Some(p),
            signature_used: false,
        });
    }
    if m.is_multiple_of(2) && dim_after_relations == 1 {
        let null = &nullspace[0];
        let only_top = null[..unknowns - 1].iter().all(|c| c.is_zero());
        if only_top {
            // lower components pinned; signature is affine in the free top p
            let lower = &particular[..unknowns - 1];
            let p_lower = if lower.is_empty() {
                vec![]
            } else {
                pontryagin_from_class(Genus::AHat, lower, m - 2)
            };
            let eval_sig = |top: Rat| -> Rat {
                let mut p = p_lower.clone();
                p.push(top);
                signature_from_p(&p, m)
            };
            let s0 = eval_sig(Rat::zero());
            let s1 = eval_sig(Rat::one());
            let slope = s1 - s0.clone();
            if slope.is_zero() {
                return Ok(Reconstruction {
                    m,
                    unknowns,
                    relation_count,
                    relation_rank: rank,
                    dim_after_relations,
                    residual_dim: 1,
                    ahat_components: None,
                    pontryagin: None,
                    signature_used: true,
                });
            }
            let top = (Rat::one() - s0) / slope;
            let mut p = p_lower;
            p.push(top);
            let a = class_from_pontryagin(Genus::AHat, &p, m);
            let ahat: Vec<Rat> = (1..=unknowns).map(|j| a.coeff(2 * j)).collect();
            return Ok(Reconstruction {
                m,
                unknowns,
                relation_count,
                relation_rank: rank,
                dim_after_relations,
                residual_dim: 0,
                ahat_components: Some(ahat),
                pontryagin: Some(p),
                signature_used: true,
            });
        }
    }
    Ok(Reconstruction {
        m,
        unknowns,
        relation_count,
        relation_rank: rank,
        dim_after_relations,
        residual_dim: dim_after_relations,
        ahat_components: None,
        pontryagin: None,
        signature_used: m.is_multiple_of(2),
    })
}

/// Gaussian elimination over Q: returns (particular solution, nullspace
/// basis, rank), or None when inconsistent.
fn solve_affine(
    mut rows: Vec<Vec<Rat>>,
    mut rhs: Vec<Rat>,
    ncols: usize,
) -> Option<(Vec<Rat>, Vec<Vec<Rat>>, usize)> {
    let nrows = rows.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        rhs.swap(r, pr);
        let inv = Rat::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        rhs[r] = rhs[r].clone() * inv;
        let pivot_row = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for (x, p) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *x = x.clone() - f.clone() * p.clone();
                }
                rhs[i] = rhs[i].clone() - f * pivot_rhs.clone();
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    if rhs.iter().skip(r).any(|v| !v.is_zero()) {
        return None;
    }
    let rank = pivot_cols.len();
    let mut particular = vec![Rat::zero(); ncols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        particular[c] = rhs[i].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut nullspace = Vec::new();
    for &fc in &free {
        let mut v = vec![Rat::zero(); ncols];
        v[fc] = Rat::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rows[i][fc].clone();
        }
        nullspace.push(v);
    }
    Some((particular, nullspace, rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::classes::{multiplicative_class, RootBundle};
    use crate::index::ahat_class;

    fn binomials(m: usize) -> Vec<Rat> {
        // p(CP^m) = (1+x²)^{m+1}: p_j = C(m+1, j)
        let mut out = Vec::new();
        let mut c = Rat::one();
        for j in 1..=m / 2 {
            c = c * rat_i((m + 2 - j) as i64) / rat_i(j as i64);
            out.push(c.clone());
        }
        out
    }

    #[test]
    fn forward_map_matches_root_expansion() {
        // Â and L of the standard class agree with the root-product route
        for m in 2..=8 {
            let p = binomials(m);
            let tm = RootBundle::cp_tangent_stable(m);
            for g in [Genus::AHat, Genus::L] {
                let via_p = class_from_pontryagin(g, &p, m);
                let via_roots = multiplicative_class(g, &tm, m).unwrap();
                assert_eq!(via_p, via_roots, "m={m} {g:?}");
            }
        }
    }

    #[test]
    fn p_to_class_to_p_roundtrip() {
        let m = 8;
        let p = vec![rat(3, 2), rat_i(-5), rat(7, 11), rat_i(2)];
        let a = class_from_pontryagin(Genus::AHat, &p, m);
        let comps: Vec<Rat> = (1..=m / 2).map(|j| a.coeff(2 * j)).collect();
        assert_eq!(pontryagin_from_class(Genus::AHat, &comps, m), p);
    }

    #[test]
    fn signature_of_standard_class_is_one() {
        for m in [2usize, 4, 6, 8] {
            assert_eq!(signature_from_p(&binomials(m), m), Rat::one(), "m={m}");
        }
    }

    #[test]
    fn reconstruct_even_dimensions() {
        for m in [4usize, 6, 8] {
            let r = reconstruct_pontryagin(m).unwrap();
            assert_eq!(r.residual_dim, 0, "m={m}");
            assert_eq!(r.pontryagin.unwrap(), binomials(m), "m={m}");
            assert!(r.signature_used);
        }
    }

    #[test]
    fn reconstruct_m4_values() {
        let r = reconstruct_pontryagin(4).unwrap();
        assert_eq!(r.pontryagin.unwrap(), vec![rat_i(5), rat_i(10)]);
    }

    #[test]
    fn reconstruct_odd_dimension_reports() {
        for m in [3usize, 5, 7] {
            let r = reconstruct_pontryagin(m).unwrap();
            if r.residual_dim == 0 {
                assert_eq!(r.pontryagin.unwrap(), binomials(m), "m={m}");
            }
        }
    }

    #[test]
    fn reconstructed_class_satisfies_relations() {
        use crate::index::rigidity::rigidity_relations;
        let r = reconstruct_pontryagin(6).unwrap();
        let p = r.pontryagin.unwrap();
        let a = class_from_pontryagin(Genus::AHat, &p, 6);
        assert_eq!(a, ahat_class(6));
        let values = rigidity_relations(6, &a).unwrap();
        assert!(values.iter().all(|v| v.is_zero()));
    }
}
