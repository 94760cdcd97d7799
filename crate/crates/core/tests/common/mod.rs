#![allow(dead_code)]

use horizon_core::horizon::{derive_coefficients, HorizonParams};
use horizon_core::linalg::{eigh, Complex64, ComplexMatrix, Ket};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// α uniform on [0, 1], ω log-uniform on [0.1, 10], T_H log-uniform on
/// [0.01, 100].
pub fn random_params<R: Rng>(rng: &mut R) -> HorizonParams {
    let alpha = rng.random_range(0.0..=1.0);
    let omega = 10f64.powf(rng.random_range(-1.0..=1.0));
    let t = 10f64.powf(rng.random_range(-2.0..=2.0));
    derive_coefficients(alpha, omega, t).unwrap()
}

fn gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

pub fn random_ket<R: Rng>(rng: &mut R, dim: usize) -> Ket {
    Ket::new((0..dim).map(|_| gaussian(rng)).collect()).unwrap()
}

/// A random cardinality-`m` decomposition `{(p_i, ψ_i)}` of `rho`, built from a
/// Haar-like `m × r` isometry applied to the eigen-ensemble.
pub fn random_decomposition<R: Rng>(rho: &ComplexMatrix, m: usize, rng: &mut R) -> Vec<(f64, Ket)> {
    let s = eigh(rho).unwrap();
    let kept: Vec<usize> = (0..rho.rows()).filter(|&k| s.eigenvalues[k] > 1e-12).collect();
    let r = kept.len();
    assert!(m >= r);
    // columns of a Gaussian m × r matrix, orthonormalized
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    while cols.len() < r {
        let mut v: Vec<Complex64> = (0..m).map(|_| gaussian(rng)).collect();
        for c in &cols {
            let dot: Complex64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ci) in v.iter_mut().zip(c) {
                *vi -= dot * ci;
            }
        }
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-8 {
            cols.push(v.into_iter().map(|z| z / n).collect());
        }
    }
    let dim = rho.rows();
    (0..m)
        .filter_map(|i| {
            let mut psi = vec![Complex64::new(0.0, 0.0); dim];
            for (j, &k) in kept.iter().enumerate() {
                let c = cols[j][i] * s.eigenvalues[k].sqrt();
                for (row, slot) in psi.iter_mut().enumerate() {
                    *slot += c * s.eigenvectors[(row, k)];
                }
            }
            let p: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
            (p > 1e-300).then(|| (p, Ket::new(psi).unwrap()))
        })
        .collect()
}

/// `Σ p_i |ψ_i⟩⟨ψ_i|`.
pub fn ensemble_state(ensemble: &[(f64, Ket)]) -> ComplexMatrix {
    let dim = ensemble[0].1.dim();
    let mut sum = ComplexMatrix::zeros(dim, dim);
    for (p, psi) in ensemble {
        let d = psi.density();
        for r in 0..dim {
            for c in 0..dim {
                sum[(r, c)] += d[(r, c)] * *p;
            }
        }
    }
    sum
}
