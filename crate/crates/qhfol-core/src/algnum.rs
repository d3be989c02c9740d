//! Algebraic points: roots of irreducible rational polynomials, carried as
//! (minimal polynomial, isolating box, numeric approximation).
//!
//! The design is deliberately narrow: no arithmetic tower. Resolution centers
//! always have rational chart coordinates; algebraic numbers only appear as
//! terminal marked points that need classification and numeric launch data.
//! Classification works symbolically in the quotient ring ℚ[t]/(m) — a field,
//! because m is irreducible — while the box/approximation pair only selects
//! which root of m is meant.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::rat::{rat_pq, rat_sign, rat_to_f64, Rat};
use crate::unipoly::UniPoly;

/// Axis-aligned rectangle in ℂ with rational corners. Real roots carry a
/// degenerate imaginary range [0, 0].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBox {
    pub re_lo: Rat,
    pub re_hi: Rat,
    pub im_lo: Rat,
    pub im_hi: Rat,
}

impl ComplexBox {
    pub fn contains(&self, other: &ComplexBox) -> bool {
        self.re_lo <= other.re_lo && other.re_hi <= self.re_hi && self.im_lo <= other.im_lo && other.im_hi <= self.im_hi
    }

    pub fn contains_point(&self, re: &Rat, im: &Rat) -> bool {
        &self.re_lo <= re && re <= &self.re_hi && &self.im_lo <= im && im <= &self.im_hi
    }

    pub fn diameter_f64(&self) -> f64 {
        let dre = rat_to_f64(&(&self.re_hi - &self.re_lo));
        let dim = rat_to_f64(&(&self.im_hi - &self.im_lo));
        libm::hypot(dre, dim)
    }

    pub fn center_f64(&self) -> Complex64 {
        Complex64::new(
            rat_to_f64(&((&self.re_lo + &self.re_hi) * rat_pq(1, 2))),
            rat_to_f64(&((&self.im_lo + &self.im_hi) * rat_pq(1, 2))),
        )
    }
}

/// A single root of an irreducible monic polynomial over ℚ.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgPoint {
    /// Irreducible monic minimal polynomial.
    pub minpoly: UniPoly,
    /// Rectangle containing exactly this root of `minpoly`.
    pub isolating_box: ComplexBox,
    /// Floating approximation, inside the box.
    pub numeric: Complex64,
}

impl AlgPoint {
    /// Is the root real? (The box pins the imaginary part to [0, 0].)
    pub fn is_real(&self) -> bool {
        self.im_is_zero()
    }

    fn im_is_zero(&self) -> bool {
        self.isolating_box.im_lo.is_zero() && self.isolating_box.im_hi.is_zero()
    }

    /// Degree-1 minpoly means the point is actually rational.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.minpoly.degree() == Some(1) {
            Some(-self.minpoly.coeff(0))
        } else {
            None
        }
    }
}

/// Exact or algebraic coordinate value.
#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Rational(Rat),
    Algebraic(AlgPoint),
}

impl Coord {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Coord::Rational(r) => Complex64::new(rat_to_f64(r), 0.0),
            Coord::Algebraic(a) => a.numeric,
        }
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self {
            Coord::Rational(r) => Some(r.clone()),
            Coord::Algebraic(a) => a.as_rational(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coord::Rational(r) if r.is_zero())
    }
}

/// All roots of a univariate polynomial, exactly: rationals as `Rational`,
/// the rest grouped per irreducible factor as `Algebraic` points. Returns
/// (root, multiplicity) pairs.
pub fn roots_exact(f: &UniPoly) -> Vec<(Coord, usize)> {
    let mut out = Vec::new();
    for (factor, mult) in f.factor() {
        match factor.degree() {
            Some(1) => {
                out.push((Coord::Rational(-factor.coeff(0)), mult));
            }
            Some(_) => {
                for ap in isolate_roots(&factor) {
                    out.push((Coord::Algebraic(ap), mult));
                }
            }
            None => {}
        }
    }
    out
}

/// Isolating data for every root of an irreducible polynomial. Boxes are
/// squares (degenerate for real roots) of side < gap/2 around the numeric
/// approximations, with real roots certified real by exact sign changes of
/// the minimal polynomial.
pub fn isolate_roots(minpoly: &UniPoly) -> Vec<AlgPoint> {
    let roots = minpoly.complex_roots();
    let n = roots.len();
    // Minimal pairwise distance bounds the safe box size.
    let mut gap = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            gap = gap.min((roots[i] - roots[j]).norm());
        }
    }
    if !gap.is_finite() {
        gap = 1.0;
    }
    let side = (gap / 4.0).min(1e-6).max(1e-12);
    roots
        .into_iter()
        .map(|z| {
            // A root of a real polynomial with |Im| below the cluster gap is
            // real iff the conjugate would collide with it; decide exactly by
            // a sign change across a thin real interval.
            let mut numeric = z;
            let is_real = libm::fabs(z.im) < side / 2.0 && {
                let lo = f64_to_rat(z.re - side);
                let hi = f64_to_rat(z.re + side);
                let s_lo = rat_sign(&minpoly.eval_rat(&lo));
                let s_hi = rat_sign(&minpoly.eval_rat(&hi));
                s_lo * s_hi < 0
            };
            let box_ = if is_real {
                numeric = Complex64::new(z.re, 0.0);
                ComplexBox {
                    re_lo: f64_to_rat(z.re - side),
                    re_hi: f64_to_rat(z.re + side),
                    im_lo: Rat::zero(),
                    im_hi: Rat::zero(),
                }
            } else {
                ComplexBox {
                    re_lo: f64_to_rat(z.re - side),
                    re_hi: f64_to_rat(z.re + side),
                    im_lo: f64_to_rat(z.im - side),
                    im_hi: f64_to_rat(z.im + side),
                }
            };
            AlgPoint { minpoly: minpoly.monic(), isolating_box: box_, numeric }
        })
        .collect()
}

/// Shrink the isolating box to diameter < eps without changing the isolated
/// root. Real roots use exact sign bisection; complex roots polish the
/// numeric approximation by Newton and re-center the box, staying inside the
/// original box.
pub fn alg_refine(p: &AlgPoint, eps: &Rat) -> AlgPoint {
    let eps_f = rat_to_f64(eps);
    if p.is_real() {
        let mut lo = p.isolating_box.re_lo.clone();
        let mut hi = p.isolating_box.re_hi.clone();
        let mut s_lo = rat_sign(&p.minpoly.eval_rat(&lo));
        loop {
            let width = &hi - &lo;
            if width < *eps || width.is_zero() {
                break;
            }
            let mid = (&lo + &hi) * rat_pq(1, 2);
            let s_mid = rat_sign(&p.minpoly.eval_rat(&mid));
            if s_mid == 0 {
                // Rational root hit exactly: collapse the box to the point.
                lo = mid.clone();
                hi = mid;
                break;
            }
            if s_mid == s_lo {
                lo = mid;
                s_lo = s_mid;
            } else {
                hi = mid;
            }
        }
        let numeric = Complex64::new(rat_to_f64(&((&lo + &hi) * rat_pq(1, 2))), 0.0);
        AlgPoint {
            minpoly: p.minpoly.clone(),
            isolating_box: ComplexBox { re_lo: lo, re_hi: hi, im_lo: Rat::zero(), im_hi: Rat::zero() },
            numeric,
        }
    } else {
        let deriv = p.minpoly.derivative();
        let mut z = p.numeric;
        for _ in 0..60 {
            let d = deriv.eval_complex(z);
            if d.norm() < 1e-300 {
                break;
            }
            let step = p.minpoly.eval_complex(z) / d;
            z -= step;
            if step.norm() < 1e-16 * (1.0 + z.norm()) {
                break;
            }
        }
        let side = (eps_f / 4.0).max(1e-14);
        let cand = ComplexBox {
            re_lo: f64_to_rat(z.re - side),
            re_hi: f64_to_rat(z.re + side),
            im_lo: f64_to_rat(z.im - side),
            im_hi: f64_to_rat(z.im + side),
        };
        // Containment keeps the root identity: never leave the old box.
        let box_ = if p.isolating_box.contains(&cand) { cand } else { p.isolating_box.clone() };
        AlgPoint { minpoly: p.minpoly.clone(), isolating_box: box_, numeric: z }
    }
}

fn f64_to_rat(x: f64) -> Rat {
    // Exact dyadic representation of the float.
    Rat::from_float(x).unwrap_or_else(|| Rat::zero())
}

// ---------------------------------------------------------------------------
// Exact arithmetic in ℚ[t]/(m), m irreducible.
// ---------------------------------------------------------------------------

/// An element of the number field ℚ[t]/(m), reduced mod m.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldElem {
    pub rep: UniPoly,
}

pub struct NumberField<'a> {
    pub minpoly: &'a UniPoly,
}

impl<'a> NumberField<'a> {
    pub fn new(minpoly: &'a UniPoly) -> Self {
        NumberField { minpoly }
    }

    pub fn elem(&self, p: &UniPoly) -> FieldElem {
        FieldElem { rep: p.div_rem(self.minpoly).1 }
    }

    pub fn from_rat(&self, r: &Rat) -> FieldElem {
        FieldElem { rep: UniPoly::constant(r.clone()) }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.elem(&a.rep.add(&b.rep))
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.elem(&a.rep.sub(&b.rep))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.elem(&a.rep.mul(&b.rep))
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.rep.is_zero()
    }

    /// Inverse via extended Euclid; panics on zero (m irreducible makes every
    /// nonzero element invertible).
    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        assert!(!a.rep.is_zero(), "inverse of zero in number field");
        let (mut r0, mut r1) = (self.minpoly.clone(), a.rep.clone());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let new_t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = new_t;
        }
        // r0 = gcd is a nonzero constant.
        let c = r0.coeff(0);
        assert!(!c.is_zero(), "minpoly must be irreducible");
        let inv_c = Rat::from_integer(1.into()) / c;
        self.elem(&t0.scale(&inv_c))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul(a, &self.inv(b))
    }

    /// Rational constant, if the element lies in ℚ ⊂ ℚ[t]/(m).
    pub fn as_rational(&self, a: &FieldElem) -> Option<Rat> {
        if a.rep.is_constant() {
            Some(a.rep.coeff(0))
        } else {
            None
        }
    }

    /// Numeric value at a chosen root.
    pub fn eval_at(&self, a: &FieldElem, root: Complex64) -> Complex64 {
        a.rep.eval_complex(root)
    }
}

/// Evaluate a `BiPoly` at (x₀, θ) with x₀ rational and θ algebraic, exactly,
/// as an element of ℚ[t]/(m).
pub fn bipoly_eval_alg(
    f: &crate::bipoly::BiPoly,
    x0: &Rat,
    field: &NumberField<'_>,
) -> FieldElem {
    // Collect Σ_j (Σ_i c_ij x0^i) t^j then reduce mod m.
    let mut acc = UniPoly::zero();
    for (&(i, j), c) in f.terms() {
        let mut xc = c.clone();
        for _ in 0..i {
            xc *= x0;
        }
        acc = acc.add(&UniPoly::monomial(j as usize, xc));
    }
    field.elem(&acc)
}

/// Same with the roles swapped: evaluate at (θ, y₀).
pub fn bipoly_eval_alg_x(
    f: &crate::bipoly::BiPoly,
    field: &NumberField<'_>,
    y0: &Rat,
) -> FieldElem {
    bipoly_eval_alg(&f.swap_vars(), y0, field)
}

/// Exact squareness test in ℚ for a field element: `Some(true/false)` when
/// the element is rational, `None` when it is irrational (hence not a
/// rational square).
pub fn rational_square_status(field: &NumberField<'_>, a: &FieldElem) -> Option<bool> {
    field.as_rational(a).map(|r| crate::rat::rat_is_square(&r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i;
    use alloc::vec;

    fn t2_minus_2() -> UniPoly {
        UniPoly::new(vec![rat_i(-2), rat_i(0), rat_i(1)])
    }

    #[test]
    fn isolate_sqrt2() {
        let pts = isolate_roots(&t2_minus_2());
        assert_eq!(pts.len(), 2);
        let pos = pts.iter().find(|p| p.numeric.re > 0.0).unwrap();
        assert!(pos.is_real());
        assert!((pos.numeric.re - libm::sqrt(2.0)).abs() < 1e-9);
    }

    #[test]
    fn refine_sqrt2_bisection() {
        let pts = isolate_roots(&t2_minus_2());
        let pos = pts.into_iter().find(|p| p.numeric.re > 0.0).unwrap();
        let eps = Rat::new(1.into(), 1_000_000.into());
        let refined = alg_refine(&pos, &eps);
        assert!(pos.isolating_box.contains(&refined.isolating_box));
        assert!(&refined.isolating_box.re_hi - &refined.isolating_box.re_lo < eps);
        assert!((refined.numeric.re - libm::sqrt(2.0)).abs() < 1e-6);
    }

    #[test]
    fn refine_rational_root_collapses() {
        // minpoly t − 3: the box collapses to the point 3.
        let m = UniPoly::linear_root(&rat_i(3));
        let p = AlgPoint {
            minpoly: m,
            isolating_box: ComplexBox {
                re_lo: rat_i(2),
                re_hi: rat_i(4),
                im_lo: Rat::zero(),
                im_hi: Rat::zero(),
            },
            numeric: Complex64::new(3.0, 0.0),
        };
        let refined = alg_refine(&p, &Rat::new(1.into(), 1000.into()));
        assert!(&refined.isolating_box.re_hi - &refined.isolating_box.re_lo < Rat::new(1.into(), 1000.into()));
        assert!(refined.isolating_box.contains_point(&rat_i(3), &Rat::zero()));
    }

    #[test]
    fn refine_imaginary_root() {
        // t² + 1, the root i.
        let m = UniPoly::new(vec![rat_i(1), rat_i(0), rat_i(1)]);
        let pts = isolate_roots(&m);
        let iroot = pts.into_iter().find(|p| p.numeric.im > 0.0).unwrap();
        let eps = Rat::new(1.into(), 1000.into());
        let refined = alg_refine(&iroot, &eps);
        assert!(iroot.isolating_box.contains(&refined.isolating_box));
        assert!((refined.numeric - Complex64::new(0.0, 1.0)).norm() < 1e-9);
    }

    #[test]
    fn field_arithmetic_mod_t2_minus_2() {
        let m = t2_minus_2();
        let field = NumberField::new(&m);
        // (1 + t)(1 − t) = 1 − t² = −1 mod (t² − 2).
        let a = field.elem(&UniPoly::new(vec![rat_i(1), rat_i(1)]));
        let b = field.elem(&UniPoly::new(vec![rat_i(1), rat_i(-1)]));
        let prod = field.mul(&a, &b);
        assert_eq!(field.as_rational(&prod), Some(rat_i(-1)));
        // t · t⁻¹ = 1.
        let t = field.elem(&UniPoly::monomial(1, rat_i(1)));
        let tinv = field.inv(&t);
        assert_eq!(field.as_rational(&field.mul(&t, &tinv)), Some(rat_i(1)));
    }
}
