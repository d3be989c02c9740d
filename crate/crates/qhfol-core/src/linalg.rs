//! Small dense linear algebra: exact solves over ℚ (with minimal-norm
//! completion for underdetermined systems) and complex least squares by
//! Householder QR. Dimensions here are coefficient-space sizes of truncated
//! polynomial systems, i.e. a few hundred at most.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::rat::Rat;

/// Row-echelon data for an exact m×n system.
pub struct Echelon {
    /// Reduced rows of [A | b].
    rows: Vec<Vec<Rat>>,
    /// Pivot column of each reduced row.
    pivots: Vec<usize>,
    n: usize,
    /// True when some row reduces to 0 = nonzero.
    pub inconsistent: bool,
}

/// Gauss–Jordan over ℚ on the augmented matrix.
pub fn echelon(a: &[Vec<Rat>], b: &[Rat]) -> Echelon {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut rows: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut r = a[i].clone();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        // Any nonzero pivot works in exact arithmetic.
        let piv = (rank..m).find(|&r| !rows[r][col].is_zero());
        let Some(piv) = piv else { continue };
        rows.swap(rank, piv);
        let inv = Rat::one() / rows[rank][col].clone();
        for c in col..=n {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..m {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m {
            break;
        }
    }
    let inconsistent = (rank..m).any(|r| !rows[r][n].is_zero());
    rows.truncate(rank);
    Echelon { rows, pivots, n, inconsistent }
}

impl Echelon {
    /// Particular solution with free variables set to zero, or None.
    pub fn particular(&self) -> Option<Vec<Rat>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![Rat::zero(); self.n];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            x[p] = row[self.n].clone();
        }
        Some(x)
    }

    /// Basis of the nullspace of A.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.n {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.n];
            v[free] = Rat::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Solve A·x = b exactly; any solution (free variables at zero).
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    echelon(a, b).particular()
}

/// Solve A·x = b exactly, returning the solution of minimal Euclidean norm
/// (computed exactly via the normal equations on the nullspace).
pub fn solve_min_norm(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ech = echelon(a, b);
    let x0 = ech.particular()?;
    let null = ech.nullspace();
    if null.is_empty() {
        return Some(x0);
    }
    // minimize ‖x0 + N·c‖²  ⇔  (NᵀN)c = −Nᵀx0
    let k = null.len();
    let mut ntn = vec![vec![Rat::zero(); k]; k];
    let mut rhs = vec![Rat::zero(); k];
    for i in 0..k {
        for j in 0..k {
            let mut s = Rat::zero();
            for idx in 0..x0.len() {
                s += &null[i][idx] * &null[j][idx];
            }
            ntn[i][j] = s;
        }
        let mut s = Rat::zero();
        for idx in 0..x0.len() {
            s += &null[i][idx] * &x0[idx];
        }
        rhs[i] = -s;
    }
    let c = solve_exact(&ntn, &rhs).expect("Gram matrix of independent vectors is invertible");
    let mut x = x0;
    for i in 0..k {
        for idx in 0..x.len() {
            let delta = &c[i] * &null[i][idx];
            x[idx] = &x[idx] + &delta;
        }
    }
    Some(x)
}

/// Complex least squares min ‖A·x − b‖₂ via Householder QR.
/// Returns (x, residual norm). Errors only on degenerate shapes.
pub fn lstsq_complex(a: &[Vec<Complex64>], b: &[Complex64]) -> Option<(Vec<Complex64>, f64)> {
    let m = a.len();
    if m == 0 {
        return None;
    }
    let n = a[0].len();
    if m < n || n == 0 {
        return None;
    }
    let mut q = a.to_vec();
    let mut rhs = b.to_vec();

    for k in 0..n {
        // Householder vector for column k below row k.
        let mut norm2 = 0.0f64;
        for i in k..m {
            norm2 += q[i][k].norm_sqr();
        }
        let norm = libm::sqrt(norm2);
        if norm < 1e-300 {
            return None; // rank deficient
        }
        let x0 = q[k][k];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::new(1.0, 0.0) };
        let alpha = -phase * norm;
        // v = x − α·e1
        let mut v: Vec<Complex64> = (k..m).map(|i| q[i][k]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if vnorm2 > 1e-300 {
            // Apply H = I − 2·v·v*/‖v‖² to the trailing columns and rhs.
            for col in k..n {
                let mut dot = Complex64::new(0.0, 0.0);
                for (i, vi) in v.iter().enumerate() {
                    dot += vi.conj() * q[k + i][col];
                }
                let scale = 2.0 * dot / vnorm2;
                for (i, vi) in v.iter().enumerate() {
                    q[k + i][col] -= scale * vi;
                }
            }
            let mut dot = Complex64::new(0.0, 0.0);
            for (i, vi) in v.iter().enumerate() {
                dot += vi.conj() * rhs[k + i];
            }
            let scale = 2.0 * dot / vnorm2;
            for (i, vi) in v.iter().enumerate() {
                rhs[k + i] -= scale * vi;
            }
        }
        q[k][k] = alpha;
        for i in (k + 1)..m {
            q[i][k] = Complex64::new(0.0, 0.0);
        }
    }

    // Back substitution on the upper-triangular part.
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for k in (0..n).rev() {
        let mut acc = rhs[k];
        for j in (k + 1)..n {
            acc -= q[k][j] * x[j];
        }
        if q[k][k].norm() < 1e-300 {
            return None;
        }
        x[k] = acc / q[k][k];
    }
    let residual = libm::sqrt(rhs[n..].iter().map(|c| c.norm_sqr()).sum::<f64>());
    Some((x, residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i;

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&c| rat_i(c)).collect()
    }

    #[test]
    fn exact_solve_unique() {
        let a = vec![rv(&[2, 1]), rv(&[1, -1])];
        let b = rv(&[5, 1]);
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, rv(&[2, 1]));
    }

    #[test]
    fn exact_solve_inconsistent() {
        let a = vec![rv(&[1, 1]), rv(&[2, 2])];
        let b = rv(&[1, 3]);
        assert!(solve_exact(&a, &b).is_none());
    }

    #[test]
    fn min_norm_solution() {
        // x + y = 2 has min-norm solution (1, 1).
        let a = vec![rv(&[1, 1])];
        let b = rv(&[2]);
        let x = solve_min_norm(&a, &b).unwrap();
        assert_eq!(x, rv(&[1, 1]));
    }

    #[test]
    fn nullspace_dimension() {
        let a = vec![rv(&[1, 2, 3])];
        let e = echelon(&a, &rv(&[0]));
        assert_eq!(e.nullspace().len(), 2);
    }

    #[test]
    fn lstsq_exact_fit() {
        // Fit y = 2z on three points: exact.
        let a = vec![
            vec![Complex64::new(1.0, 0.0)],
            vec![Complex64::new(2.0, 0.0)],
            vec![Complex64::new(3.0, 0.0)],
        ];
        let b = vec![
            Complex64::new(2.0, 0.0),
            Complex64::new(4.0, 0.0),
            Complex64::new(6.0, 0.0),
        ];
        let (x, res) = lstsq_complex(&a, &b).unwrap();
        assert!((x[0] - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        assert!(res < 1e-12);
    }

    #[test]
    fn lstsq_complex_coefficients() {
        // y = (1+i)·z fitted through complex samples.
        let zs = [Complex64::new(0.5, 0.1), Complex64::new(-0.3, 0.4), Complex64::new(0.2, -0.7)];
        let c = Complex64::new(1.0, 1.0);
        let a: Vec<Vec<Complex64>> = zs.iter().map(|&z| vec![z]).collect();
        let b: Vec<Complex64> = zs.iter().map(|&z| c * z).collect();
        let (x, res) = lstsq_complex(&a, &b).unwrap();
        assert!((x[0] - c).norm() < 1e-12);
        assert!(res < 1e-12);
    }
}
