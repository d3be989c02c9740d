//! Dense univariate polynomials over ℚ: Euclidean arithmetic, squarefree
//! decomposition, rational roots, and full factorization into irreducibles
//! (Zassenhaus: factor mod p, Hensel lift, subset recombination). The face
//! polynomials this crate factors are desk-scale (degree ≤ ~20), so the
//! exponential recombination step is a non-issue.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rat::{rat_display, rat_i, rat_to_f64, Rat};

/// Dense polynomial in one variable over ℚ. No trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![rat_i(1)] }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn monomial(deg: usize, c: Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// t − r.
    pub fn linear_root(r: &Rat) -> Self {
        UniPoly::new(vec![-r.clone(), rat_i(1)])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = core::cmp::max(self.coeffs.len(), other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] = c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k] += c.clone();
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_i(k as i64))
                .collect(),
        )
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.clone();
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(rat_to_f64(c), 0.0);
        }
        acc
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, g: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let dg = g.degree().unwrap();
        let lg = g.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return (UniPoly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dg];
        while rem.len() > dg {
            let k = rem.len() - 1;
            let c = rem[k].clone() / lg.clone();
            if !c.is_zero() {
                quo[k - dg] = c.clone();
                for (i, gc) in g.coeffs.iter().enumerate() {
                    rem[k - dg + i] -= &c * gc;
                }
            }
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    pub fn div_exact(&self, g: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(g);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => {
                let inv = Rat::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Largest squarefree divisor (monic).
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun squarefree decomposition: list of (gᵢ, i) with f = lc·Π gᵢ^i and
    /// gᵢ monic, squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut i = 1usize;
        while !b.is_constant() {
            let d = c.sub(&b.derivative());
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            i += 1;
        }
        out
    }

    /// Primitive integer form: (scale, coeffs over ℤ) with
    /// self = scale · primitive, content(primitive) = 1, positive leading
    /// coefficient.
    pub fn primitive_z(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let mut lcm_den = BigInt::one();
        for c in &self.coeffs {
            lcm_den = lcm_den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm_den / c.denom())).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        let mut prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        let mut sign = BigInt::one();
        if prim.last().map(|c| c.is_negative()).unwrap_or(false) {
            for c in &mut prim {
                *c = -c.clone();
            }
            sign = -BigInt::one();
        }
        (Rat::new(sign * g, lcm_den), prim)
    }

    /// Rational roots with multiplicities.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        let mut out = Vec::new();
        for (g, mult) in self.squarefree_decomposition() {
            for r in rational_roots_squarefree(&g) {
                out.push((r, mult));
            }
        }
        out
    }

    /// Factor into monic irreducible factors with multiplicities (the
    /// leading coefficient is dropped).
    pub fn factor(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        for (g, mult) in self.squarefree_decomposition() {
            for f in factor_squarefree(&g) {
                out.push((f, mult));
            }
        }
        out
    }

    /// All complex roots of a squarefree polynomial, numerically
    /// (Durand–Kerner with Newton polish).
    pub fn complex_roots(&self) -> Vec<Complex64> {
        let n = match self.degree() {
            None | Some(0) => return Vec::new(),
            Some(n) => n,
        };
        let lead = rat_to_f64(self.leading().unwrap());
        // Cauchy bound for |roots|.
        let bound = 1.0
            + self
                .coeffs
                .iter()
                .take(n)
                .map(|c| libm::fabs(rat_to_f64(c) / lead))
                .fold(0.0, f64::max);
        let mut zs: Vec<Complex64> = (0..n)
            .map(|k| {
                let theta = 2.0 * core::f64::consts::PI * (k as f64) / (n as f64) + 0.7;
                Complex64::from_polar(0.6 * bound + 0.1, theta)
            })
            .collect();
        for _ in 0..400 {
            let mut moved = 0.0f64;
            for i in 0..n {
                let mut denom = Complex64::new(lead, 0.0);
                for j in 0..n {
                    if j != i {
                        denom *= zs[i] - zs[j];
                    }
                }
                if denom.norm() < 1e-300 {
                    continue;
                }
                let delta = self.eval_complex(zs[i]) / denom;
                zs[i] -= delta;
                moved = moved.max(delta.norm());
            }
            if moved < 1e-15 * (1.0 + bound) {
                break;
            }
        }
        let deriv = self.derivative();
        for z in &mut zs {
            for _ in 0..6 {
                let d = deriv.eval_complex(*z);
                if d.norm() < 1e-300 {
                    break;
                }
                *z -= self.eval_complex(*z) / d;
            }
        }
        zs
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", rat_display(c))?;
            } else {
                let var = if k == 1 { alloc::string::String::from("t") } else { alloc::format!("t^{}", k) };
                if c.is_one() {
                    write!(f, "{}", var)?;
                } else {
                    write!(f, "{}*{}", rat_display(c), var)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

fn rational_roots_squarefree(g: &UniPoly) -> Vec<Rat> {
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let (_, prim) = g.primitive_z();
    let mut low = 0usize;
    while prim[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        out.push(Rat::zero());
    }
    let a0 = prim[low].clone();
    let an = prim.last().unwrap().clone();
    for p in divisors(&a0.abs()) {
        for q in divisors(&an.abs()) {
            for sign in [1i64, -1] {
                let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                if g.eval_rat(&cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Desk-scale trial division.
    let mut out = vec![BigInt::one()];
    if n.is_zero() {
        return out;
    }
    let mut m = n.clone();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    for (p, e) in primes {
        let snapshot = out.clone();
        let mut pe = BigInt::one();
        for _ in 0..e {
            pe *= &p;
            for b in &snapshot {
                out.push(b * &pe);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// Factorization over ℚ (squarefree input): Zassenhaus.
// ---------------------------------------------------------------------------

fn factor_squarefree(g: &UniPoly) -> Vec<UniPoly> {
    match g.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![g.monic()],
        Some(_) => {}
    }

    // Strip rational roots first; they keep the Hensel stage small.
    let mut out = Vec::new();
    let (_, prim0) = g.primitive_z();
    let mut rest = unipoly_from_bigints(&prim0);
    for r in rational_roots_squarefree(g) {
        let lin = UniPoly::linear_root(&r);
        rest = rest.div_exact(&lin).expect("root divides");
        out.push(lin);
    }
    let d = rest.degree().unwrap_or(0);
    if d == 0 {
        return out;
    }
    if d <= 3 {
        // No rational root and degree ≤ 3: irreducible.
        out.push(rest.monic());
        return out;
    }
    let (_, prim) = rest.primitive_z();
    out.extend(zassenhaus(&prim));
    out
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn zassenhaus(prim: &[BigInt]) -> Vec<UniPoly> {
    let n = prim.len() - 1;
    let lead = prim[n].clone();

    // Pick a prime where f stays squarefree with unit leading coefficient.
    let mut chosen = None;
    let mut p = 10007u64;
    while p < 1_000_000 {
        if is_prime_u64(p) {
            let fp = reduce_mod(prim, p);
            if fp.len() == n + 1 {
                let dfp = zp_derivative(&fp, p);
                if zp_gcd(&fp, &dfp, p).len() == 1 {
                    chosen = Some((p, fp));
                    break;
                }
            }
        }
        p += 2;
    }
    let (p, fp) = chosen.expect("a squarefree integer polynomial has good primes below 10^6");

    let modular = zp_factor_squarefree(&fp, p);
    if modular.len() == 1 {
        return vec![unipoly_from_bigints(prim).monic()];
    }

    // Landau–Mignotte style bound on factor coefficients (times lc).
    let norm: BigInt = prim.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound: BigInt = BigInt::from(2).pow(n as u32 + 1) * norm * lead.abs();
    let mut pk = BigInt::from(p);
    let mut k = 1u32;
    while pk <= &bound * 2 {
        pk *= BigInt::from(p);
        k += 1;
    }

    let lifted = hensel_lift_all(prim, &modular, p, k, &pk);
    recombine(prim, &lifted, &pk)
}

fn reduce_mod(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let r = ((c % &pb) + &pb) % &pb;
            r.to_u64().unwrap()
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn unipoly_from_bigints(coeffs: &[BigInt]) -> UniPoly {
    UniPoly::new(coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

// --- arithmetic in F_p[t]: dense Vec<u64>, no trailing zeros ---

fn zp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn zp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    zp_trim(out)
}

fn zp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = core::cmp::max(a.len(), b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    zp_trim(out)
}

fn zp_inv(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible mod p");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

fn zp_div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty());
    let db = b.len() - 1;
    let inv_lb = zp_inv(b[db], p);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), zp_trim(rem));
    }
    let mut quo = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1;
        let c = (rem[k] * inv_lb) % p;
        if c != 0 {
            quo[k - db] = c;
            for (i, &bc) in b.iter().enumerate() {
                rem[k - db + i] = (rem[k - db + i] + p - (c * bc) % p) % p;
            }
        }
        rem.pop();
        while rem.last() == Some(&0) {
            rem.pop();
        }
    }
    (zp_trim(quo), zp_trim(rem))
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = zp_div_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = zp_inv(l, p);
        for c in &mut a {
            *c = (*c * inv) % p;
        }
    }
    a
}

fn zp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    zp_trim((1..a.len()).map(|k| (a[k] * (k as u64 % p)) % p).collect())
}

fn zp_powmod_u64(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = zp_div_rem(base, modulus, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = zp_div_rem(&zp_mul(&result, &b, p), modulus, p).1;
        }
        b = zp_div_rem(&zp_mul(&b, &b, p), modulus, p).1;
        e >>= 1;
    }
    result
}

fn zp_powmod_big(base: &[u64], e: &BigInt, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = zp_div_rem(base, modulus, p).1;
    let (_, bits) = e.to_radix_le(2);
    for bit in bits {
        if bit == 1 {
            result = zp_div_rem(&zp_mul(&result, &b, p), modulus, p).1;
        }
        b = zp_div_rem(&zp_mul(&b, &b, p), modulus, p).1;
    }
    result
}

/// Factor a squarefree polynomial over F_p into monic irreducibles.
fn zp_factor_squarefree(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let inv = zp_inv(*f.last().unwrap(), p);
    let f: Vec<u64> = f.iter().map(|&c| (c * inv) % p).collect();

    // Distinct-degree factorization.
    let mut pieces: Vec<(Vec<u64>, usize)> = Vec::new();
    let mut rest = f.clone();
    let mut h = vec![0u64, 1]; // t
    let mut d = 0usize;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            let deg = rest.len() - 1;
            pieces.push((rest.clone(), deg));
            break;
        }
        h = zp_powmod_u64(&h, p, &rest, p);
        let ht = zp_sub(&h, &[0, 1], p);
        let g = zp_gcd(&rest, &ht, p);
        if g.len() > 1 {
            pieces.push((g.clone(), d));
            rest = zp_div_rem(&rest, &g, p).0;
            h = zp_div_rem(&h, &rest, p).1;
        }
    }

    // Equal-degree splitting (Cantor–Zassenhaus; p is odd).
    let mut rng = Lcg(0x9e37_79b9_7f4a_7c15);
    let mut out = Vec::new();
    for (piece, d) in pieces {
        let mut stack = vec![piece];
        while let Some(g) = stack.pop() {
            let dg = g.len() - 1;
            if dg == d {
                out.push(g);
                continue;
            }
            let e = (BigInt::from(p).pow(d as u32) - 1) / 2;
            loop {
                let r: Vec<u64> = (0..dg).map(|_| rng.next() % p).collect();
                let r = zp_trim(r);
                if r.len() < 2 {
                    continue;
                }
                let w = zp_powmod_big(&r, &e, &g, p);
                let w1 = zp_sub(&w, &[1], p);
                let h = zp_gcd(&g, &w1, p);
                if h.len() > 1 && h.len() < g.len() {
                    let q = zp_div_rem(&g, &h, p).0;
                    stack.push(h);
                    stack.push(q);
                    break;
                }
            }
        }
    }
    out
}

// --- Hensel lifting ---

/// Extended Euclid over F_p[t]: (g, s, t) with s·a + t·b = g, g the monic gcd.
fn zp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = zp_div_rem(&r0, &r1, p);
        let new_s = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        let new_t = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    if let Some(&l) = r0.last() {
        let inv = zp_inv(l, p);
        let norm = |v: &[u64]| zp_trim(v.iter().map(|&c| (c * inv) % p).collect::<Vec<u64>>());
        return (norm(&r0), norm(&s0), norm(&t0));
    }
    (r0, s0, t0)
}

fn bigpoly_mod(coeffs: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = coeffs.iter().map(|c| ((c % m) + m) % m).collect();
    while out.last().map(|c| c.is_zero()).unwrap_or(false) {
        out.pop();
    }
    out
}

fn bigpoly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn bigpoly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = core::cmp::max(a.len(), b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        *o = a.get(i).cloned().unwrap_or_else(BigInt::zero) - b.get(i).cloned().unwrap_or_else(BigInt::zero);
    }
    out
}

fn bigpoly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = core::cmp::max(a.len(), b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        *o = a.get(i).cloned().unwrap_or_else(BigInt::zero) + b.get(i).cloned().unwrap_or_else(BigInt::zero);
    }
    out
}

fn bigint_inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let (mut t, mut new_t) = (BigInt::zero(), BigInt::one());
    let (mut r, mut new_r) = (m.clone(), ((a % m) + m) % m);
    while !new_r.is_zero() {
        let q = &r / &new_r;
        let tmp_t = &t - &q * &new_t;
        t = core::mem::replace(&mut new_t, tmp_t);
        let tmp_r = &r - &q * &new_r;
        r = core::mem::replace(&mut new_r, tmp_r);
    }
    assert!(r.is_one(), "not invertible");
    ((t % m) + m) % m
}

/// Lift f ≡ lc·Π gᵢ (mod p) to mod p^k, peeling one factor at a time. Every
/// returned factor is monic mod p^k.
fn hensel_lift_all(f: &[BigInt], modular: &[Vec<u64>], p: u64, k: u32, pk: &BigInt) -> Vec<Vec<BigInt>> {
    let mut factors: Vec<Vec<BigInt>> = Vec::new();
    let mut current: Vec<BigInt> = f.to_vec();
    let mut remaining: Vec<Vec<u64>> = modular.to_vec();
    while remaining.len() > 1 {
        let g0 = remaining.pop().unwrap();
        let mut h0 = vec![1u64];
        for r in &remaining {
            h0 = zp_mul(&h0, r, p);
        }
        let lc_mod = reduce_mod(&[current.last().unwrap().clone()], p);
        let lc_mod = if lc_mod.is_empty() { 0 } else { lc_mod[0] };
        let h0: Vec<u64> = h0.iter().map(|&c| (c * lc_mod) % p).collect();
        let (g, h) = hensel_lift_pair(&current, &g0, &h0, p, k);
        factors.push(g);
        current = h;
    }
    // Last factor: normalize monic mod p^k.
    let lc = current.last().unwrap().clone();
    let inv = bigint_inv_mod(&lc, pk);
    let last: Vec<BigInt> = current.iter().map(|c| ((c * &inv) % pk + pk) % pk).collect();
    factors.push(bigpoly_mod(&last, pk));
    factors
}

/// Lift f ≡ g·h (mod p) to f ≡ g·h (mod p^k), g monic throughout.
fn hensel_lift_pair(f: &[BigInt], g0: &[u64], h0: &[u64], p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (d, s, t) = zp_ext_gcd(g0, h0, p);
    assert!(d.len() == 1, "modular factors must be coprime");
    let mut g: Vec<BigInt> = g0.iter().map(|&c| BigInt::from(c)).collect();
    let mut h: Vec<BigInt> = h0.iter().map(|&c| BigInt::from(c)).collect();
    let s: Vec<BigInt> = s.iter().map(|&c| BigInt::from(c)).collect();
    let t: Vec<BigInt> = t.iter().map(|&c| BigInt::from(c)).collect();
    let mut modulus = BigInt::from(p);
    for _ in 1..k {
        let new_modulus = &modulus * BigInt::from(p);
        let e = bigpoly_mod(&bigpoly_sub(f, &bigpoly_mul(&g, &h)), &new_modulus);
        if e.is_empty() {
            modulus = new_modulus;
            continue;
        }
        // Correction: Δg = (t·e mod g), Δh = s·e + q·h where t·e = q·g + Δg.
        let te = bigpoly_mod(&bigpoly_mul(&t, &e), &new_modulus);
        let se = bigpoly_mod(&bigpoly_mul(&s, &e), &new_modulus);
        let (q, delta_g) = bigpoly_div_rem_monic(&te, &g, &new_modulus);
        let delta_h = bigpoly_mod(&bigpoly_add(&se, &bigpoly_mul(&q, &h)), &new_modulus);
        g = bigpoly_mod(&bigpoly_add(&g, &delta_g), &new_modulus);
        h = bigpoly_mod(&bigpoly_add(&h, &delta_h), &new_modulus);
        modulus = new_modulus;
    }
    (g, h)
}

/// Division with remainder by a monic divisor over ℤ/m.
fn bigpoly_div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    let mut rem: Vec<BigInt> = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), bigpoly_mod(&rem, m));
    }
    let mut quo = vec![BigInt::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1;
        let c = ((&rem[k] % m) + m) % m;
        if !c.is_zero() {
            quo[k - db] = c.clone();
            for (i, bc) in b.iter().enumerate() {
                let idx = k - db + i;
                let v = &rem[idx] - &c * bc;
                rem[idx] = v;
            }
        }
        rem.pop();
        while rem.last().map(|c| (((c % m) + m) % m).is_zero()).unwrap_or(false) {
            rem.pop();
        }
    }
    (bigpoly_mod(&quo, m), bigpoly_mod(&rem, m))
}

fn symmetric_rem(c: &BigInt, m: &BigInt) -> BigInt {
    let r = ((c % m) + m) % m;
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Zassenhaus recombination over subsets of the lifted factors.
fn recombine(prim: &[BigInt], lifted: &[Vec<BigInt>], pk: &BigInt) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut remaining: Vec<Vec<BigInt>> = lifted.to_vec();
    let mut current = prim.to_vec();
    let mut subset_size = 1usize;
    'outer: while 2 * subset_size <= remaining.len() {
        for subset in subsets_of_size(remaining.len(), subset_size) {
            let lc = current.last().unwrap().clone();
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = bigpoly_mod(&bigpoly_mul(&cand, &remaining[i]), pk);
            }
            let cand: Vec<BigInt> = cand.iter().map(|c| symmetric_rem(c, pk)).collect();
            let cand_poly = unipoly_from_bigints(&cand);
            if cand_poly.is_zero() {
                continue;
            }
            let (_, cand_prim) = cand_poly.primitive_z();
            let cand_prim_poly = unipoly_from_bigints(&cand_prim);
            let cur_poly = unipoly_from_bigints(&current);
            if let Some(quot) = cur_poly.div_exact(&cand_prim_poly) {
                out.push(cand_prim_poly.monic());
                let (_, qprim) = quot.primitive_z();
                current = qprim;
                let mut keep = Vec::new();
                for (i, f) in remaining.iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(f.clone());
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        subset_size += 1;
    }
    if current.len() > 1 {
        out.push(unipoly_from_bigints(&current).monic());
    }
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n || k == 0 {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Rightmost index that can still advance.
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_pq;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn gcd_and_division() {
        let f = up(&[-1, 0, 1]); // t² − 1
        let g = up(&[1, 1]); // t + 1
        assert_eq!(f.gcd(&g), g.monic());
        assert_eq!(f.div_exact(&g).unwrap(), up(&[-1, 1]));
    }

    #[test]
    fn rational_roots_found() {
        // (t − 3)(t + 1/2)(t² + 1)
        let f = up(&[-3, 1]).mul(&UniPoly::new(vec![rat_pq(1, 2), rat_i(1)])).mul(&up(&[1, 0, 1]));
        let mut roots: Vec<Rat> = f.rational_roots().into_iter().map(|(r, _)| r).collect();
        roots.sort();
        assert_eq!(roots, vec![rat_pq(-1, 2), rat_i(3)]);
    }

    #[test]
    fn squarefree_decomposition_works() {
        // (t−1)²(t+2)
        let f = up(&[-1, 1]).mul(&up(&[-1, 1])).mul(&up(&[2, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert!(dec.contains(&(up(&[2, 1]), 1)));
        assert!(dec.contains(&(up(&[-1, 1]), 2)));
    }

    #[test]
    fn factor_cyclotomic_like() {
        // t³ − 1 = (t − 1)(t² + t + 1)
        let f = up(&[-1, 0, 0, 1]);
        let mut fac = f.factor();
        fac.sort_by_key(|(g, _)| g.degree());
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].0, up(&[-1, 1]));
        assert_eq!(fac[1].0, up(&[1, 1, 1]));
    }

    #[test]
    fn factor_irreducible_quartic() {
        // t⁴ + 1 is irreducible over ℚ though it splits over ℝ.
        let f = up(&[1, 0, 0, 0, 1]);
        let fac = f.factor();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0, f.monic());
    }

    #[test]
    fn factor_product_of_quadratics() {
        // (t² − 2)(t² − 3)
        let f = up(&[-2, 0, 1]).mul(&up(&[-3, 0, 1]));
        let mut fac = f.factor();
        fac.sort_by(|(a, _), (b, _)| a.coeff(0).cmp(&b.coeff(0)));
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].0, up(&[-3, 0, 1]));
        assert_eq!(fac[1].0, up(&[-2, 0, 1]));
    }

    #[test]
    fn factor_degree_six_mixed() {
        // (t² + t + 1)(t⁴ + 1)
        let f = up(&[1, 1, 1]).mul(&up(&[1, 0, 0, 0, 1]));
        let mut fac = f.factor();
        fac.sort_by_key(|(g, _)| g.degree());
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].0, up(&[1, 1, 1]));
        assert_eq!(fac[1].0, up(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn complex_roots_of_quadratic() {
        let f = up(&[1, 0, 1]); // t² + 1
        let roots = f.complex_roots();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(libm::fabs(r.re) < 1e-10);
            assert!(libm::fabs(libm::fabs(r.im) - 1.0) < 1e-10);
        }
    }
}
