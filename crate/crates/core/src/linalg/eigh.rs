use num_complex::Complex64;

use super::{ComplexMatrix, Tolerances};
use crate::error::{Error, Result};

const OFF_DIAGONAL_TARGET: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector for `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl Spectrum {
    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = (0..n).map(|k| v[(r, k)] * self.eigenvalues[k] * v[(c, k)].conj()).sum();
            }
        }
        out
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.eigenvectors.rows()).map(|r| self.eigenvectors[(r, k)]).collect()
    }
}

pub fn eigh(h: &ComplexMatrix) -> Result<Spectrum> {
    eigh_with(h, &Tolerances::default())
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps run in fixed `(p, q)` order until the off-diagonal Frobenius mass
/// drops below `1e-14` (scaled by the matrix norm when that exceeds one).
/// Eigenvalues come out descending; each eigenvector is rotated so its first
/// non-negligible component is real and positive, which makes the output a
/// deterministic function of the input.
pub fn eigh_with(h: &ComplexMatrix, tol: &Tolerances) -> Result<Spectrum> {
    if !h.is_square() {
        return Err(Error::Contract(format!("eigh needs a square matrix, got {}×{}", h.rows(), h.cols())));
    }
    let defect = h.hermiticity_defect();
    if !(defect <= tol.herm) {
        return Err(Error::Contract(format!("matrix is not Hermitian (defect {defect:.3e})")));
    }
    let n = h.rows();
    let mut a = h.clone();
    // symmetrize exactly so that rounding in the input cannot bias the sweep
    for r in 0..n {
        a[(r, r)] = Complex64::new(a[(r, r)].re, 0.0);
        for c in r + 1..n {
            let avg = (a[(r, c)] + a[(c, r)].conj()) * 0.5;
            a[(r, c)] = avg;
            a[(c, r)] = avg.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TARGET * a.norm_fro().max(1.0);

    let mut converged = off_diagonal_norm(&a) < threshold;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        converged = off_diagonal_norm(&a) < threshold;
    }
    if !converged {
        return Err(Error::Contract(format!(
            "Jacobi sweep did not converge in {MAX_SWEEPS} sweeps (off-diagonal {:.3e})",
            off_diagonal_norm(&a)
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps ties in sweep order
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));

    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        let phase = (0..n)
            .map(|r| v[(r, k)])
            .find(|z| z.norm() > 1e-8)
            .map(|z| z.conj() / z.norm())
            .unwrap_or(Complex64::new(1.0, 0.0));
        for r in 0..n {
            eigenvectors[(r, col)] = v[(r, k)] * phase;
        }
    }
    Ok(Spectrum { eigenvalues, eigenvectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Zeroes `a[p][q]` with the unitary `J` acting on columns `p, q`:
/// `A ← J† A J`, `V ← V J`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // unit phase e^{-iφ} with a_pq = |a_pq| e^{iφ}
    let phase = apq.conj() / mag;

    let theta = (aqq - app) / (2.0 * mag);
    let t =
        if theta.is_infinite() { 0.5 / theta } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let j_pp = Complex64::new(c, 0.0);
    let j_pq = Complex64::new(s, 0.0);
    let j_qp = -phase * s;
    let j_qq = phase * c;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * j_pp + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * j_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * j_pp + vkq * j_qp;
        v[(k, q)] = vkp * j_pq + vkq * j_qq;
    }
}
