//! Sparse bivariate polynomials over ℚ.
//!
//! `BiPoly` stores a finite map (i, j) ↦ c of nonzero coefficients of
//! monomials x^i y^j in a `BTreeMap`, so the term order is the canonical
//! lexicographic order on (i, j) and serialization is deterministic.
//! Everything is exact; blow-up pull-backs inflate exponents and Euclidean
//! gcd steps inflate coefficients, both of which are unbounded here.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_display, rat_i, rat_parse, rat_to_f64, Rat};
use crate::unipoly::UniPoly;

/// Sparse polynomial in two variables with `Rat` coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        BiPoly::constant(rat_i(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    pub fn monomial(i: u32, j: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    /// The variable x.
    pub fn var_x() -> Self {
        BiPoly::monomial(1, 0, rat_i(1))
    }

    /// The variable y.
    pub fn var_y() -> Self {
        BiPoly::monomial(0, 1, rat_i(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Support as a list of exponent pairs (lex order).
    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().cloned().collect()
    }

    fn insert_add(terms: &mut BTreeMap<(u32, u32), Rat>, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        match terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by the monomial x^i y^j.
    pub fn mul_monomial(&self, i: u32, j: u32) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(a, b), v)| ((a + i, b + j), v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                Self::insert_add(&mut terms, (i - 1, j), c * rat_i(i as i64));
            }
        }
        BiPoly { terms }
    }

    pub fn partial_y(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                Self::insert_add(&mut terms, (i, j - 1), c * rat_i(j as i64));
            }
        }
        BiPoly { terms }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Lowest total degree among the terms (the order of the germ).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    /// Terms of total degree < n.
    pub fn truncate_total_degree(&self, n: u32) -> Self {
        BiPoly {
            terms: self.terms.iter().filter(|(&(i, j), _)| i + j < n).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    /// Weighted degree α·i + β·j of a monomial; pieces of the grading.
    pub fn weighted_piece(&self, alpha: u32, beta: u32, delta: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| alpha as u64 * i as u64 + beta as u64 * j as u64 == delta as u64)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Terms of weighted degree < delta.
    pub fn weighted_truncate(&self, alpha: u32, beta: u32, delta: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| alpha as u64 * i as u64 + beta as u64 * (j as u64) < delta as u64)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Smallest weighted degree present.
    pub fn weighted_order(&self, alpha: u32, beta: u32) -> Option<u64> {
        self.terms.keys().map(|&(i, j)| alpha as u64 * i as u64 + beta as u64 * j as u64).min()
    }

    /// Largest weighted degree present.
    pub fn weighted_degree(&self, alpha: u32, beta: u32) -> Option<u64> {
        self.terms.keys().map(|&(i, j)| alpha as u64 * i as u64 + beta as u64 * j as u64).max()
    }

    /// Exchange the two variables (transpose the support).
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Largest k with x^k dividing self (0 for zero polynomial).
    pub fn order_in_x(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).min().unwrap_or(0)
    }

    pub fn order_in_y(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0)
    }

    /// Exact division by x^k. Panics if not divisible; callers divide by the
    /// computed order only.
    pub fn div_x_power(&self, k: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    assert!(i >= k, "not divisible by x^{}", k);
                    ((i - k, j), c.clone())
                })
                .collect(),
        }
    }

    pub fn div_y_power(&self, k: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    assert!(j >= k, "not divisible by y^{}", k);
                    ((i, j - k), c.clone())
                })
                .collect(),
        }
    }

    /// Substitution x ↦ px, y ↦ py (ring homomorphism).
    pub fn substitute(&self, px: &BiPoly, py: &BiPoly) -> Self {
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0) as usize;
        let max_j = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        // Memoized powers of the images.
        let mut xp: Vec<BiPoly> = Vec::with_capacity(max_i + 1);
        let mut yp: Vec<BiPoly> = Vec::with_capacity(max_j + 1);
        xp.push(BiPoly::one());
        yp.push(BiPoly::one());
        for k in 1..=max_i {
            let next = &xp[k - 1] * px;
            xp.push(next);
        }
        for k in 1..=max_j {
            let next = &yp[k - 1] * py;
            yp.push(next);
        }
        let mut acc = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            acc = &acc + &(&xp[i as usize] * &yp[j as usize]).scale(c);
        }
        acc
    }

    /// Translate: x ↦ x + a, y ↦ y + b.
    pub fn translate(&self, a: &Rat, b: &Rat) -> Self {
        let px = BiPoly::var_x() + BiPoly::constant(a.clone());
        let py = BiPoly::var_y() + BiPoly::constant(b.clone());
        self.substitute(&px, &py)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rat(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t *= x;
            }
            for _ in 0..j {
                t *= y;
            }
            acc += t;
        }
        acc
    }

    /// Restrict to x = 0 and view the result as a univariate polynomial in y.
    pub fn face_x0(&self) -> UniPoly {
        let deg = self.terms.keys().filter(|&&(i, _)| i == 0).map(|&(_, j)| j).max();
        match deg {
            None => UniPoly::zero(),
            Some(d) => {
                let mut coeffs = vec![Rat::zero(); d as usize + 1];
                for (&(i, j), c) in &self.terms {
                    if i == 0 {
                        coeffs[j as usize] = c.clone();
                    }
                }
                UniPoly::new(coeffs)
            }
        }
    }

    /// Restrict to y = 0, univariate in x.
    pub fn face_y0(&self) -> UniPoly {
        self.swap_vars().face_x0()
    }

    /// Substitute a univariate polynomial value for x at y-degree j slots:
    /// evaluate f(θ, y-as-var) where θ is given by a polynomial in a formal
    /// root; the result is a univariate polynomial in y with coefficients in
    /// ℚ[t]/m — represented here by evaluating coefficient-wise. Used by the
    /// algebraic-point machinery; see `algnum`.
    pub fn collect_powers_of_y(&self) -> BTreeMap<u32, UniPoly> {
        let mut out: BTreeMap<u32, UniPoly> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let entry = out.entry(j).or_insert_with(UniPoly::zero);
            *entry = entry.add(&UniPoly::monomial(i as usize, c.clone()));
        }
        out
    }

    /// Numeric evaluation.
    pub fn eval_complex(&self, x: Complex64, y: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(i, j), c) in &self.terms {
            acc += Complex64::new(rat_to_f64(c), 0.0) * x.powu(i) * y.powu(j);
        }
        acc
    }

    /// Precompiled form for the integrator hot loop.
    pub fn to_complex_terms(&self) -> Vec<(u32, u32, Complex64)> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| (i, j, Complex64::new(rat_to_f64(c), 0.0)))
            .collect()
    }

    /// Leading coefficient under the canonical lex order on (i, j).
    pub fn leading_coeff_lex(&self) -> Option<&Rat> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    /// Multivariate division with remainder by a single divisor under lex
    /// order. Returns (quotient, remainder) with f = q·g + r and no term of r
    /// divisible by the leading term of g.
    pub fn div_rem(&self, g: &BiPoly) -> (BiPoly, BiPoly) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let (&(gi, gj), gc) = g.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quo = BiPoly::zero();
        loop {
            // Highest term of rem divisible by the leading term of g.
            let hit = rem
                .terms
                .iter()
                .rev()
                .find(|(&(i, j), _)| i >= gi && j >= gj)
                .map(|(&k, c)| (k, c.clone()));
            match hit {
                None => return (quo, rem),
                Some(((i, j), c)) => {
                    let factor = BiPoly::monomial(i - gi, j - gj, &c / gc);
                    rem = &rem - &(g * &factor);
                    quo = &quo + &factor;
                }
            }
        }
    }

    /// Exact division: Some(q) with f = q·g, or None.
    pub fn div_exact(&self, g: &BiPoly) -> Option<BiPoly> {
        let (q, r) = self.div_rem(g);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// View as a polynomial in y with coefficients in ℚ[x].
    fn y_coeffs(&self) -> Vec<UniPoly> {
        let d = self.terms.keys().map(|&(_, j)| j).max().map(|d| d as usize);
        match d {
            None => Vec::new(),
            Some(d) => {
                let mut out = vec![UniPoly::zero(); d + 1];
                for (&(i, j), c) in &self.terms {
                    out[j as usize] = out[j as usize].add(&UniPoly::monomial(i as usize, c.clone()));
                }
                out
            }
        }
    }

    fn from_y_coeffs(coeffs: &[UniPoly]) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (j, p) in coeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((i as u32, j as u32), c.clone());
                }
            }
        }
        BiPoly { terms }
    }

    /// Content in ℚ[x] of the y-coefficients.
    fn content_y(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in self.y_coeffs() {
            g = g.gcd(&c);
        }
        g
    }

    /// gcd, normalized so the lex-leading coefficient is 1. The computation
    /// is Euclid in y over ℚ(x) with content extraction.
    pub fn gcd(&self, other: &BiPoly) -> Result<BiPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(other.normalize_lex());
        }
        if other.is_zero() {
            return Ok(self.normalize_lex());
        }
        let cont = self.content_y().gcd(&other.content_y());
        let f = Self::primitive_y(self);
        let g = Self::primitive_y(other);
        let prim = Self::gcd_primitive_y(&f, &g);
        let cont_poly = BiPoly::from_y_coeffs(&[cont]);
        Ok((&prim * &cont_poly).normalize_lex())
    }

    fn primitive_y(f: &BiPoly) -> BiPoly {
        let c = f.content_y();
        if c.is_zero() {
            return f.clone();
        }
        let mut coeffs = f.y_coeffs();
        for p in &mut coeffs {
            *p = p.div_exact(&c).expect("content divides");
        }
        BiPoly::from_y_coeffs(&coeffs)
    }

    /// gcd of two y-primitive polynomials via pseudo-remainders in y.
    fn gcd_primitive_y(f: &BiPoly, g: &BiPoly) -> BiPoly {
        let mut a = f.clone();
        let mut b = g.clone();
        loop {
            let db = b.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
            if b.is_zero() {
                return Self::primitive_y(&a);
            }
            if db == 0 {
                // b is a nonzero element of ℚ[x]; the primitive gcd is its
                // gcd with the content of a, but a is primitive, so 1.
                return BiPoly::one();
            }
            let r = Self::pseudo_rem_y(&a, &b);
            a = b;
            b = Self::primitive_y(&r);
        }
    }

    /// Pseudo-remainder of a by b in the variable y.
    fn pseudo_rem_y(a: &BiPoly, b: &BiPoly) -> BiPoly {
        let bc = b.y_coeffs();
        let db = bc.len() - 1;
        let lead_b = BiPoly::from_y_coeffs(&[bc[db].clone()]);
        let mut r = a.clone();
        loop {
            let dr = match r.terms.keys().map(|&(_, j)| j).max() {
                None => return r,
                Some(d) => d as usize,
            };
            if dr < db {
                return r;
            }
            let rc = r.y_coeffs();
            let lead_r = BiPoly::from_y_coeffs(&[rc[dr].clone()]);
            // lead_b · r − lead_r · y^{dr−db} · b kills the top term.
            r = &(&r * &lead_b) - &(&(&lead_r * b)).mul_monomial(0, (dr - db) as u32);
        }
    }

    /// Scale so the lex-leading coefficient is 1.
    pub fn normalize_lex(&self) -> BiPoly {
        match self.leading_coeff_lex() {
            None => BiPoly::zero(),
            Some(c) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Squarefreeness of the germ: gcd(f, f_x, f_y) is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let fx = self.partial_x();
        let fy = self.partial_y();
        if fx.is_zero() && fy.is_zero() {
            return self.is_constant();
        }
        let g1 = if fx.is_zero() { fy.clone() } else { fx.clone() };
        let g = self.gcd(&g1).expect("nonzero inputs");
        let g = if !fx.is_zero() && !fy.is_zero() {
            g.gcd(&fy).expect("nonzero inputs")
        } else {
            g
        };
        g.is_constant()
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            BiPoly::insert_add(&mut terms, *k, v.clone());
        }
        BiPoly { terms }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            BiPoly::insert_add(&mut terms, *k, -v.clone());
        }
        BiPoly { terms }
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                BiPoly::insert_add(&mut terms, (i1 + i2, j1 + j2), c1 * c2);
            }
        }
        BiPoly { terms }
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

// ---------------------------------------------------------------------------
// Text format: signed sum of `c*x^i*y^j`, whitespace insensitive, exact
// round-trip. Printing uses the canonical ascending lex order.
// ---------------------------------------------------------------------------

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(rat_display(&mag));
            }
            if i > 0 {
                parts.push(if i == 1 { String::from("x") } else { format!("x^{}", i) });
            }
            if j > 0 {
                parts.push(if j == 1 { String::from("y") } else { format!("y^{}", j) });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: String::from(message) })
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        let s = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse().map_err(|_| Error::Parse { offset: start, message: String::from("integer overflow") })
    }

    fn rational(&mut self) -> Result<Rat> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        let mut end = self.pos;
        // Optional /q.
        let save = self.pos;
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            self.skip_ws();
            let dstart = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos == dstart {
                return self.err("expected a denominator");
            }
            end = self.pos;
            let s: String = core::str::from_utf8(&self.bytes[start..end])
                .unwrap()
                .chars()
                .filter(|c| !c.is_whitespace())
                .collect();
            return rat_parse(&s).ok_or(Error::Parse {
                offset: start,
                message: String::from("bad rational (zero denominator?)"),
            });
        }
        self.pos = save;
        let s = core::str::from_utf8(&self.bytes[start..end]).unwrap();
        rat_parse(s).ok_or(Error::Parse { offset: start, message: String::from("bad number") })
    }

    /// One term: [coefficient] [* x[^i]] [* y[^j]], at least one factor.
    fn term(&mut self) -> Result<((u32, u32), Rat)> {
        let mut coeff: Option<Rat> = None;
        let mut i: u32 = 0;
        let mut j: u32 = 0;
        let mut seen_x = false;
        let mut seen_y = false;
        let mut any = false;
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    if any {
                        return self.err("coefficient must come first");
                    }
                    coeff = Some(self.rational()?);
                    any = true;
                }
                Some(b'x') | Some(b'X') => {
                    if seen_x {
                        return self.err("repeated variable x");
                    }
                    self.bump();
                    seen_x = true;
                    any = true;
                    i = self.exponent()?;
                }
                Some(b'y') | Some(b'Y') => {
                    if seen_y {
                        return self.err("repeated variable y");
                    }
                    self.bump();
                    seen_y = true;
                    any = true;
                    j = self.exponent()?;
                }
                _ => break,
            }
            // Optional explicit multiplication.
            if self.peek() == Some(b'*') {
                self.bump();
                // After '*', another factor must follow.
                match self.peek() {
                    Some(b) if b.is_ascii_digit() || b == b'x' || b == b'X' || b == b'y' || b == b'Y' => {}
                    _ => return self.err("dangling '*'"),
                }
            }
        }
        if !any {
            return self.err("expected a term");
        }
        Ok(((i, j), coeff.unwrap_or_else(|| rat_i(1))))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.bump();
            self.integer()
        } else {
            Ok(1)
        }
    }
}

/// Parse the polynomial text format. Errors carry the byte offset of the
/// failure.
pub fn parse_bipoly(input: &str) -> Result<BiPoly> {
    let mut sc = Scanner::new(input);
    let mut acc = BTreeMap::new();
    // Leading sign.
    let mut sign = match sc.peek() {
        Some(b'-') => {
            sc.bump();
            -1i32
        }
        Some(b'+') => {
            sc.bump();
            1
        }
        _ => 1,
    };
    if sc.peek().is_none() {
        return sc.err("empty input");
    }
    loop {
        let ((i, j), c) = sc.term()?;
        let c = if sign < 0 { -c } else { c };
        BiPoly::insert_add(&mut acc, (i, j), c);
        match sc.peek() {
            None => break,
            Some(b'+') => {
                sc.bump();
                sign = 1;
            }
            Some(b'-') => {
                sc.bump();
                sign = -1;
            }
            _ => return sc.err("expected '+', '-' or end of input"),
        }
        if sc.peek().is_none() {
            return sc.err("trailing sign");
        }
    }
    Ok(BiPoly { terms: acc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_pq;

    fn p(s: &str) -> BiPoly {
        parse_bipoly(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("y^2 - x^3"), &BiPoly::monomial(0, 2, rat_i(1)) - &BiPoly::monomial(3, 0, rat_i(1)));
        assert_eq!(p("1/2*x*y"), BiPoly::monomial(1, 1, rat_pq(1, 2)));
        assert_eq!(p(" - x "), BiPoly::monomial(1, 0, rat_i(-1)));
        assert_eq!(p("3"), BiPoly::constant(rat_i(3)));
        assert_eq!(p("x^2*y + x^2*y"), BiPoly::monomial(2, 1, rat_i(2)));
    }

    #[test]
    fn parse_error_offsets() {
        match parse_bipoly("y^^2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {:?}", other),
        }
        assert!(parse_bipoly("").is_err());
        assert!(parse_bipoly("x +").is_err());
        assert!(parse_bipoly("2*").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["y^2 - x^3", "1/2*x*y + 7", "x", "-3*x^2*y^5 + 2/3", "0"] {
            let f = p(s);
            assert_eq!(parse_bipoly(&format!("{}", f)).unwrap(), f);
        }
    }

    #[test]
    fn difference_of_squares() {
        let f = p("x + y");
        let g = p("x - y");
        assert_eq!(&f * &g, p("x^2 - y^2"));
    }

    #[test]
    fn partials() {
        assert_eq!(p("y^2 - x^3").partial_x(), p("-3*x^2"));
        assert_eq!(p("y^2 - x^3").partial_y(), p("2*y"));
    }

    #[test]
    fn substitute_blowup_chart() {
        // y² − x³ with x ↦ x, y ↦ x·y gives x²y² − x³.
        let f = p("y^2 - x^3");
        let sub = f.substitute(&BiPoly::var_x(), &p("x*y"));
        assert_eq!(sub, p("x^2*y^2 - x^3"));
        assert_eq!(sub.order_in_x(), 2);
        assert_eq!(sub.div_x_power(2), p("y^2 - x"));
    }

    #[test]
    fn gcd_examples() {
        let one = BiPoly::one();
        assert_eq!(p("x").gcd(&p("y")).unwrap(), one);
        assert_eq!(p("x*y").gcd(&p("x^2")).unwrap(), p("x"));
        assert_eq!(p("y^2 - x^3").gcd(&p("2*y")).unwrap(), one);
        // Common factor with mixed content.
        let f = &p("y^2 - x^3") * &p("x*y + 1");
        let g = &p("x + y") * &p("x*y + 1");
        assert_eq!(f.gcd(&g).unwrap(), p("x*y + 1").normalize_lex());
    }

    #[test]
    fn gcd_divides_both() {
        let f = &p("x^2 + y") * &p("x - y^2");
        let g = &p("x^2 + y") * &p("x + y + 1");
        let d = f.gcd(&g).unwrap();
        assert!(f.div_exact(&d).is_some());
        assert!(g.div_exact(&d).is_some());
    }

    #[test]
    fn squarefree_detection() {
        assert!(p("y^2 - x^3").is_squarefree());
        assert!(p("x*y").is_squarefree());
        assert!(!(&p("x + y") * &p("x + y")).is_squarefree());
        assert!(!p("y^2").is_squarefree());
    }

    #[test]
    fn div_rem_properties() {
        let f = p("x^3*y + x*y^2 - 2");
        let g = p("x*y - 1");
        let (q, r) = f.div_rem(&g);
        assert_eq!(&(&q * &g) + &r, f);
    }
}
