//! Weight inference and the algebraic quasi-homogeneity certificates:
//! the Euler identity and ideal/jacobian membership decided by exact linear
//! algebra on jets.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::linalg::solve_exact;
use crate::rat::{rat_i, Rat};

/// Quasi-homogeneous weight (α, β, γ) with gcd(α, β) = 1 and α ≤ β.
/// `swapped` records that the variables were exchanged to enforce α ≤ β, so
/// chart formulas downstream know the orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weight {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub swapped: bool,
}

impl Weight {
    /// Per-variable weights (w_x, w_y) for the polynomial as given
    /// (undoing the α ≤ β normalization).
    pub fn var_weights(&self) -> (u32, u32) {
        if self.swapped {
            (self.beta, self.alpha)
        } else {
            (self.alpha, self.beta)
        }
    }
}

/// Weight with minimal γ whose line carries the whole support, if any.
///
/// Ties on γ (single monomials) are broken by the smaller β then α, which
/// yields (1, 1) for pure powers.
pub fn infer_weights(f: &BiPoly) -> Result<Option<Weight>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        // γ = 0 is not an admissible weight.
        return Ok(None);
    }
    let supp = f.support();
    if supp.len() == 1 {
        let (i, j) = supp[0];
        return Ok(Some(Weight { alpha: 1, beta: 1, gamma: i + j, swapped: false }));
    }
    // The primitive positive normal of the support line, if one exists.
    let (i0, j0) = supp[0];
    let mut normal: Option<(u32, u32)> = None;
    for &(i, j) in &supp[1..] {
        let di = i as i64 - i0 as i64;
        let dj = j as i64 - j0 as i64;
        if di == 0 && dj == 0 {
            continue;
        }
        if di == 0 || dj == 0 || (di > 0) == (dj > 0) {
            // Vertical, horizontal, or same-sign direction: no positive
            // normal exists.
            return Ok(None);
        }
        let a = dj.unsigned_abs() as u32;
        let b = di.unsigned_abs() as u32;
        let g = a.gcd(&b);
        let cand = (a / g, b / g);
        match normal {
            None => normal = Some(cand),
            Some(n) if n != cand => return Ok(None),
            Some(_) => {}
        }
    }
    let Some((a, b)) = normal else { return Ok(None) };
    let gamma_i64 = a as u64 * i0 as u64 + b as u64 * j0 as u64;
    // Verify the whole support.
    for &(i, j) in &supp {
        if a as u64 * i as u64 + b as u64 * j as u64 != gamma_i64 {
            return Ok(None);
        }
    }
    let gamma = gamma_i64 as u32;
    if a <= b {
        Ok(Some(Weight { alpha: a, beta: b, gamma, swapped: false }))
    } else {
        Ok(Some(Weight { alpha: b, beta: a, gamma, swapped: true }))
    }
}

/// Exact Euler identity w_x·x·f_x + w_y·y·f_y = γ·f for the variable weights
/// carried by `w`.
pub fn euler_check(f: &BiPoly, w: &Weight) -> bool {
    let (wx, wy) = w.var_weights();
    let lhs_x = BiPoly::var_x() * f.partial_x();
    let lhs_y = BiPoly::var_y() * f.partial_y();
    let lhs = &lhs_x.scale(&rat_i(wx as i64)) + &lhs_y.scale(&rat_i(wy as i64));
    lhs == f.scale(&rat_i(w.gamma as i64))
}

/// Outcome of an ideal-membership decision at jet order N.
#[derive(Clone, Debug, PartialEq)]
pub struct MembershipCertificate {
    pub member: bool,
    pub jet_order: u32,
    /// Cofactors (A, B) with f ≡ A·g₁ + B·g₂ mod degree N, when member.
    pub cofactors: Option<(BiPoly, BiPoly)>,
    /// Lowest order at which membership fails, when not a member.
    pub residual_order: Option<u32>,
}

fn monomials_below(n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for d in 0..n {
        for i in 0..=d {
            out.push((i, d - i));
        }
    }
    out
}

/// Is f ≡ A·g₁ + B·g₂ solvable modulo total degree d? Returns cofactors on
/// success.
fn membership_at(f: &BiPoly, g1: &BiPoly, g2: &BiPoly, d: u32) -> Option<(BiPoly, BiPoly)> {
    let rows_idx = monomials_below(d);
    let cols_idx = monomials_below(d);
    let ncols = cols_idx.len();
    // Column for unknown coefficient of x^a y^b in A: the coefficients of
    // x^a y^b · g1 in every row monomial; same for B with g2.
    let mut a = Vec::with_capacity(rows_idx.len());
    for &(ri, rj) in &rows_idx {
        let mut row = Vec::with_capacity(2 * ncols);
        for g in [g1, g2] {
            for &(ci, cj) in &cols_idx {
                let c = if ri >= ci && rj >= cj {
                    g.coeff(ri - ci, rj - cj)
                } else {
                    Rat::zero()
                };
                row.push(c);
            }
        }
        a.push(row);
    }
    let b: Vec<Rat> = rows_idx.iter().map(|&(i, j)| f.coeff(i, j)).collect();
    let x = solve_exact(&a, &b)?;
    let mut pa = BiPoly::zero();
    let mut pb = BiPoly::zero();
    for (k, &(ci, cj)) in cols_idx.iter().enumerate() {
        if !x[k].is_zero() {
            pa = &pa + &BiPoly::monomial(ci, cj, x[k].clone());
        }
        if !x[ncols + k].is_zero() {
            pb = &pb + &BiPoly::monomial(ci, cj, x[ncols + k].clone());
        }
    }
    Some((pa, pb))
}

/// Decide f ∈ (g₁, g₂) modulo all terms of total degree ≥ N.
pub fn ideal_membership(f: &BiPoly, g1: &BiPoly, g2: &BiPoly, n: u32) -> MembershipCertificate {
    assert!(n >= 1);
    match membership_at(f, g1, g2, n) {
        Some((a, b)) => MembershipCertificate {
            member: true,
            jet_order: n,
            cofactors: Some((a, b)),
            residual_order: None,
        },
        None => {
            // Solvability mod d is monotone decreasing in d; find the first
            // failing order.
            let mut first_fail = n;
            for d in 1..=n {
                if membership_at(f, g1, g2, d).is_none() {
                    first_fail = d;
                    break;
                }
            }
            MembershipCertificate {
                member: false,
                jet_order: n,
                cofactors: None,
                residual_order: Some(first_fail),
            }
        }
    }
}

/// f ∈ (f_x, f_y) mod degree N. Errors when the critical point is not
/// isolated at desk scale (the partials share a factor).
pub fn jacobian_membership(f: &BiPoly, n: u32) -> Result<MembershipCertificate> {
    let fx = f.partial_x();
    let fy = f.partial_y();
    if fx.is_zero() && fy.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = fx.gcd(&fy)?;
    if !g.is_constant() {
        return Err(Error::NonIsolated);
    }
    Ok(ideal_membership(f, &fx, &fy, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse_bipoly;

    fn p(s: &str) -> BiPoly {
        parse_bipoly(s).unwrap()
    }

    #[test]
    fn weights_of_cusp() {
        let w = infer_weights(&p("y^2 - x^3")).unwrap().unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.swapped), (2, 3, 6, false));
    }

    #[test]
    fn weights_homogeneous() {
        let w = infer_weights(&p("x^2 + y^2")).unwrap().unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma), (1, 1, 2));
    }

    #[test]
    fn weights_not_collinear() {
        assert_eq!(infer_weights(&p("y^2 - x^3 + x^4")).unwrap(), None);
    }

    #[test]
    fn weights_swapped() {
        let w = infer_weights(&p("x^2 - y^3")).unwrap().unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.swapped), (2, 3, 6, true));
        assert!(euler_check(&p("x^2 - y^3"), &w));
    }

    #[test]
    fn weights_zero_errors() {
        assert_eq!(infer_weights(&BiPoly::zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn weights_scale_invariant() {
        let f = p("y^2 - x^3");
        let g = f.scale(&crate::rat::rat_pq(-7, 3));
        assert_eq!(infer_weights(&f).unwrap(), infer_weights(&g).unwrap());
    }

    #[test]
    fn euler_examples() {
        let w = Weight { alpha: 2, beta: 3, gamma: 6, swapped: false };
        assert!(euler_check(&p("y^2 - x^3"), &w));
        assert!(!euler_check(&p("y^2 - x^3 + x^4"), &w));
        let w11 = Weight { alpha: 1, beta: 1, gamma: 2, swapped: false };
        assert!(euler_check(&p("x*y"), &w11));
    }

    #[test]
    fn euler_cofactors_for_cusp() {
        // (x/3)·(−3x²) + (y/2)·(2y) = y² − x³.
        let f = p("y^2 - x^3");
        let cert = ideal_membership(&f, &f.partial_x(), &f.partial_y(), 6);
        assert!(cert.member);
        let (a, b) = cert.cofactors.unwrap();
        let recomposed = &(&a * &f.partial_x()) + &(&b * &f.partial_y());
        assert_eq!((&f - &recomposed).truncate_total_degree(6), BiPoly::zero());
    }

    #[test]
    fn zero_is_member() {
        let cert = ideal_membership(&BiPoly::zero(), &p("x"), &p("y"), 4);
        assert!(cert.member);
        let (a, b) = cert.cofactors.unwrap();
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn jacobian_membership_perturbed_cusp() {
        // y² − x³ + x⁴ is right-equivalent to a quasi-homogeneous germ.
        let cert = jacobian_membership(&p("y^2 - x^3 + x^4"), 10).unwrap();
        assert!(cert.member);
        let f = p("y^2 - x^3 + x^4");
        let (a, b) = cert.cofactors.unwrap();
        let recomposed = &(&a * &f.partial_x()) + &(&b * &f.partial_y());
        assert_eq!((&f - &recomposed).truncate_total_degree(10), BiPoly::zero());
    }

    #[test]
    fn jacobian_non_member() {
        let cert = jacobian_membership(&p("x^5 + y^5 + x^3*y^3"), 12).unwrap();
        assert!(!cert.member);
        assert!(cert.residual_order.is_some());
        // Stable at order 14.
        let cert14 = jacobian_membership(&p("x^5 + y^5 + x^3*y^3"), 14).unwrap();
        assert!(!cert14.member);
    }

    #[test]
    fn jacobian_rejects_non_isolated() {
        // f = y²: partials (0, 2y) share the factor y with f_y itself… the
        // gcd of (0, 2y) is y, not constant.
        assert_eq!(jacobian_membership(&p("y^2"), 4).unwrap_err(), Error::NonIsolated);
    }
}
