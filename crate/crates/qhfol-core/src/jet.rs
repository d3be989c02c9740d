//! Truncated power series of germs of diffeomorphisms of (ℂ, 0):
//! z ↦ c₁z + c₂z² + … + c_N z^N with c₁ ≠ 0. The group operations
//! (composition, inversion, conjugation) are closed at a fixed order.
//!
//! Coefficients are either exact complex rationals (ℚ(i), used by the group
//! axiom tests and exact fixtures) or `Complex64` (holonomy numerics). The
//! scalar is abstracted by `JetScalar`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{rat_to_f64, Rat};

/// Scalar operations a jet coefficient needs.
pub trait JetScalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Magnitude, for invertibility thresholds and residual reports.
    fn magnitude(&self) -> f64;
}

/// Exact element of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        CRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        CRat { re, im: Rat::zero() }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl JetScalar for CRat {
    fn zero() -> Self {
        CRat::new(Rat::zero(), Rat::zero())
    }
    fn one() -> Self {
        CRat::new(crate::rat::rat_i(1), Rat::zero())
    }
    fn add(&self, o: &Self) -> Self {
        CRat::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        CRat::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        CRat::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    fn div(&self, o: &Self) -> Self {
        let n = &o.re * &o.re + &o.im * &o.im;
        assert!(!n.is_zero(), "division by zero in ℚ(i)");
        let conj = CRat::new(o.re.clone(), -o.im.clone());
        let p = self.mul(&conj);
        CRat::new(p.re / n.clone(), p.im / n)
    }
    fn neg(&self) -> Self {
        CRat::new(-self.re.clone(), -self.im.clone())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn magnitude(&self) -> f64 {
        libm::hypot(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl JetScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Truncated series c₁z + … + c_Nz^N. `coeffs[k]` is c_{k+1}; the constant
/// term is identically zero (germs fix the origin).
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T: JetScalar> {
    coeffs: Vec<T>,
}

impl<T: JetScalar> Jet<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least the linear coefficient");
        Jet { coeffs }
    }

    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order];
        coeffs[0] = T::one();
        Jet { coeffs }
    }

    pub fn linear(c1: T, order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order];
        coeffs[0] = c1;
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// c_k for k = 1..=order.
    pub fn coeff(&self, k: usize) -> T {
        assert!(k >= 1);
        self.coeffs.get(k - 1).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, v: T) {
        assert!(k >= 1 && k <= self.coeffs.len());
        self.coeffs[k - 1] = v;
    }

    pub fn multiplier(&self) -> T {
        self.coeffs[0].clone()
    }

    /// Truncate or zero-extend to a new order.
    pub fn resize(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, T::zero());
        Jet { coeffs }
    }

    /// self ∘ other, truncated at the common order.
    pub fn compose(&self, other: &Jet<T>) -> Jet<T> {
        let n = core::cmp::min(self.order(), other.order());
        let f = self.resize(n);
        let g = other.resize(n);
        // Powers of g(z) through z^n.
        let mut out = vec![T::zero(); n];
        let mut gp: Vec<T> = g.coeffs.clone(); // g^1
        for m in 1..=n {
            let fm = f.coeffs[m - 1].clone();
            if !fm.is_zero() {
                for (k, c) in gp.iter().enumerate() {
                    out[k] = out[k].add(&fm.mul(c));
                }
            }
            if m < n {
                gp = mul_series(&gp, &g.coeffs, n);
            }
        }
        Jet { coeffs: out }
    }

    /// Compositional inverse (c₁ must be nonzero).
    pub fn invert(&self) -> Result<Jet<T>> {
        if self.coeffs[0].is_zero() || self.coeffs[0].magnitude() < 1e-300 {
            return Err(Error::NonInvertible);
        }
        let n = self.order();
        let mut g = Jet::linear(T::one().div(&self.coeffs[0]), n);
        for k in 2..=n {
            // Adding g_k z^k changes (f∘g)_k by c₁·g_k; solve for target z.
            let h = self.compose(&g);
            let target = if k == 1 { T::one() } else { T::zero() };
            let delta = target.sub(&h.coeff(k)).div(&self.coeffs[0]);
            g.set_coeff(k, delta);
        }
        Ok(g)
    }

    /// φ ∘ self ∘ φ⁻¹.
    pub fn conjugate_by(&self, phi: &Jet<T>) -> Result<Jet<T>> {
        let phi_inv = phi.invert()?;
        Ok(phi.compose(&self.compose(&phi_inv)))
    }

    /// Max coefficient magnitude of the difference, with coefficient k scaled
    /// by ρ^k (relative comparison on a disc of radius ρ).
    pub fn distance_scaled(&self, other: &Jet<T>, rho: f64) -> f64 {
        let n = core::cmp::max(self.order(), other.order());
        let mut d = 0.0f64;
        let mut rk = rho;
        for k in 1..=n {
            let delta = self.coeff(k).sub(&other.coeff(k)).magnitude() * rk;
            d = d.max(delta);
            rk *= rho;
        }
        d
    }
}

/// Product of two series with zero constant term, truncated at order n
/// (inputs and output indexed by z^1..z^n).
fn mul_series<T: JetScalar>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let mut out = vec![T::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let deg = i + j + 2; // z^{i+1}·z^{j+1}
            if deg > n {
                break;
            }
            out[deg - 1] = out[deg - 1].add(&ai.mul(bj));
        }
    }
    out
}

/// A jet with its error estimate: 0 for exact provenance, a step-halving /
/// fit residual bound for numeric ones. Errors propagate first order through
/// the group operations.
#[derive(Clone, Debug, PartialEq)]
pub struct JetDiffeo<T: JetScalar> {
    pub jet: Jet<T>,
    pub error: f64,
}

impl<T: JetScalar> JetDiffeo<T> {
    pub fn exact(jet: Jet<T>) -> Self {
        JetDiffeo { jet, error: 0.0 }
    }

    pub fn with_error(jet: Jet<T>, error: f64) -> Self {
        JetDiffeo { jet, error }
    }

    pub fn compose(&self, other: &JetDiffeo<T>) -> JetDiffeo<T> {
        let jet = self.jet.compose(&other.jet);
        let error = self.error + self.jet.multiplier().magnitude() * other.error;
        JetDiffeo { jet, error }
    }

    pub fn invert(&self) -> Result<JetDiffeo<T>> {
        let jet = self.jet.invert()?;
        let m = self.jet.multiplier().magnitude();
        Ok(JetDiffeo { jet, error: self.error / (m * m).max(1e-300) })
    }

    pub fn conjugate_by(&self, phi: &JetDiffeo<T>) -> Result<JetDiffeo<T>> {
        let inv = phi.invert()?;
        Ok(phi.compose(&self.compose(&inv)))
    }
}

/// Numeric view of an exact jet.
pub fn exact_to_numeric(j: &Jet<CRat>) -> Jet<Complex64> {
    Jet::new(j.coeffs().iter().map(|c| c.to_complex()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i, rat_pq};

    fn cr(n: i64) -> CRat {
        CRat::from_rat(rat_i(n))
    }

    fn jet_exact(coeffs: &[i64], order: usize) -> Jet<CRat> {
        let mut v: Vec<CRat> = coeffs.iter().map(|&c| cr(c)).collect();
        v.resize(order, CRat::zero());
        Jet::new(v)
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        // z + z², exact, through order 8.
        let f = jet_exact(&[1, 1], 8);
        let g = f.invert().unwrap();
        assert_eq!(f.compose(&g), Jet::identity(8));
        assert_eq!(g.compose(&f), Jet::identity(8));
    }

    #[test]
    fn conjugate_by_scaling() {
        // φ(z)=2z conjugating z+z²: φ∘f∘φ⁻¹ = z + z²/2.
        let f = jet_exact(&[1, 1], 5);
        let phi = Jet::linear(cr(2), 5);
        let c = f.conjugate_by(&phi).unwrap();
        let mut expected = Jet::identity(5);
        expected.set_coeff(2, CRat::from_rat(rat_pq(1, 2)));
        assert_eq!(c, expected);
    }

    #[test]
    fn linear_maps_commute_with_scalings() {
        let f = Jet::linear(cr(2), 6);
        let phi = Jet::linear(cr(3), 6);
        assert_eq!(f.conjugate_by(&phi).unwrap(), f);
    }

    #[test]
    fn associativity_exact_order_12() {
        let a = jet_exact(&[2, -1, 3], 12);
        let b = jet_exact(&[1, 1, 0, 5], 12);
        let c = jet_exact(&[-1, 0, 2], 12);
        let left = a.compose(&b).compose(&c);
        let right = a.compose(&b.compose(&c));
        assert_eq!(left, right);
    }

    #[test]
    fn non_invertible_rejected() {
        let f = jet_exact(&[0, 1], 4);
        assert_eq!(f.invert().unwrap_err(), Error::NonInvertible);
    }
}
