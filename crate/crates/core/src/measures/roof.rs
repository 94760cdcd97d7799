//! Numerical convex roof of the concurrence fill and the global concurrence.
//!
//! Every cardinality-`m` pure-state decomposition of `ρ = Σ_j λ_j |e_j⟩⟨e_j|`
//! has the form `|ψ̃_i⟩ = Σ_j U_ij √λ_j |e_j⟩` for an `m × r` isometry `U`
//! (`r` = rank). The isometry is obtained by orthonormalizing the columns of
//! an unconstrained complex matrix, and the ensemble average of the pure
//! measure is minimized over that matrix by pattern search with restarts.
//! The best value found is an upper bound on the roof.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::concurrence::{heron_fill, squared_concurrences};
use super::search::pattern_search;
use crate::error::{Error, Result};
use crate::linalg::{eigh_with, validate_density, ComplexMatrix, Ket, Tolerances};

/// Eigenvalues below this are dropped from the decomposition basis.
pub const EIGENVALUE_CUTOFF: f64 = 1e-12;

const MAX_ENSEMBLE: usize = 32;
const OBJECTIVE_FLOOR: f64 = 1e-15;
const DIM: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RoofObjective {
    /// Concurrence fill `F`.
    ConcurrenceFill,
    /// Global concurrence `Q`.
    GlobalConcurrence,
}

impl RoofObjective {
    /// Pure-state value for an unnormalized three-qubit vector.
    fn pure_value(self, v: &[Complex64]) -> f64 {
        let c2 = squared_concurrences(v);
        match self {
            RoofObjective::ConcurrenceFill => heron_fill(c2),
            RoofObjective::GlobalConcurrence => 0.5 * (c2[0] + c2[1] + c2[2]),
        }
    }
}

/// Budget and seeding for [`convex_roof`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoofConfig {
    /// Decomposition cardinality; `None` means `min(rank + 2, 8)`.
    pub ensemble_size: Option<usize>,
    pub restarts: usize,
    /// Pattern-search polls per restart.
    pub max_iters: usize,
    pub step_tolerance: f64,
    pub objective_tolerance: f64,
    pub rng_seed: u64,
}

impl Default for RoofConfig {
    fn default() -> Self {
        Self {
            ensemble_size: None,
            restarts: 32,
            max_iters: 2000,
            step_tolerance: 1e-9,
            objective_tolerance: 1e-12,
            rng_seed: 0,
        }
    }
}

impl RoofConfig {
    /// Smoke-test budget: 8 restarts × 500 polls.
    pub fn fast() -> Self {
        Self { restarts: 8, max_iters: 500, ..Self::default() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::Config("at least one restart is required".into()));
        }
        if let Some(m) = self.ensemble_size {
            if m == 0 || m > MAX_ENSEMBLE {
                return Err(Error::Config(format!("ensemble size {m} outside 1..={MAX_ENSEMBLE}")));
            }
        }
        if !(self.step_tolerance > 0.0) || !(self.objective_tolerance >= 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoofDiagnostics {
    /// Number of eigenvalues above the cutoff.
    pub rank: usize,
    pub ensemble_size: usize,
    /// Restarts actually run: 0 for a pure state, 1 when the eigen-ensemble
    /// already attains zero.
    pub restarts: usize,
    pub best: f64,
    pub median: f64,
    /// Whether the restart that produced `best` met its stopping tolerance.
    pub converged: bool,
    pub iterations: usize,
    /// `true` whenever the value came from a search rather than a pure state.
    pub upper_bound: bool,
}

#[derive(Clone, Debug)]
pub struct RoofOutcome {
    pub value: f64,
    pub diagnostics: RoofDiagnostics,
    /// The minimizing ensemble `(p_i, |ψ_i⟩)`, zero-weight members dropped.
    pub ensemble: Vec<(f64, Ket)>,
}

/// Ensemble average `Σ p_i objective(ψ_i)`; weights are taken as given.
pub fn ensemble_objective(ensemble: &[(f64, Ket)], objective: RoofObjective) -> f64 {
    ensemble.iter().map(|(p, psi)| p * objective.pure_value(psi.amplitudes())).sum()
}

/// Upper bound on the convex roof of `objective` at the three-qubit state
/// `rho`. Deterministic in `cfg.rng_seed`: restart `k` draws from stream `k`
/// of a ChaCha generator seeded with it, and restart 0 starts from the
/// eigen-ensemble itself.
pub fn convex_roof(rho: &ComplexMatrix, objective: RoofObjective, cfg: &RoofConfig) -> Result<RoofOutcome> {
    cfg.validate()?;
    if rho.rows() != DIM || rho.cols() != DIM {
        return Err(Error::Argument(format!("convex roof needs an 8×8 state, got {}×{}", rho.rows(), rho.cols())));
    }
    let tol = Tolerances::default();
    validate_density(rho, &tol)?;
    let spectrum = eigh_with(rho, &tol)?;

    let kept: Vec<usize> = (0..DIM).filter(|&k| spectrum.eigenvalues[k] > EIGENVALUE_CUTOFF).collect();
    let rank = kept.len();
    let weighted: Vec<[Complex64; DIM]> = kept
        .iter()
        .map(|&k| {
            let scale = spectrum.eigenvalues[k].sqrt();
            let mut w = [Complex64::new(0.0, 0.0); DIM];
            for (r, slot) in w.iter_mut().enumerate() {
                *slot = spectrum.eigenvectors[(r, k)] * scale;
            }
            w
        })
        .collect();

    let m = cfg.ensemble_size.unwrap_or_else(|| (rank + 2).min(8));
    if m < rank {
        return Err(Error::Config(format!("ensemble size {m} is below the rank {rank}")));
    }

    if rank == 1 {
        let psi = Ket::new(spectrum.eigenvector(kept[0]))?;
        let value = objective.pure_value(psi.amplitudes());
        return Ok(RoofOutcome {
            value,
            diagnostics: RoofDiagnostics {
                rank,
                ensemble_size: 1,
                restarts: 0,
                best: value,
                median: value,
                converged: true,
                iterations: 0,
                upper_bound: false,
            },
            ensemble: vec![(1.0, psi)],
        });
    }

    let problem = Decomposition { weighted, m, objective };
    let n_params = 2 * m * rank;

    let run = |restart: usize| {
        let (x0, step) = if restart == 0 {
            (problem.identity_start(), 0.1)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
            rng.set_stream(restart as u64);
            let x: Vec<f64> = (0..n_params).map(|_| StandardNormal.sample(&mut rng)).collect();
            (x, 0.25)
        };
        pattern_search(
            |x| problem.evaluate(x),
            x0,
            step,
            cfg.max_iters,
            cfg.step_tolerance,
            cfg.objective_tolerance,
            OBJECTIVE_FLOOR,
        )
    };

    // the objective is non-negative, so a restart that reaches the floor
    // cannot be beaten
    let first = run(0);
    let mut runs = vec![first];
    if runs[0].value > OBJECTIVE_FLOOR {
        runs.extend((1..cfg.restarts).into_par_iter().map(run).collect::<Vec<_>>());
    }

    let best_idx = (0..runs.len())
        .min_by(|&a, &b| runs[a].value.total_cmp(&runs[b].value).then(a.cmp(&b)))
        .expect("at least one restart");
    let best = &runs[best_idx];
    let mut values: Vec<f64> = runs.iter().map(|r| r.value).collect();
    values.sort_by(f64::total_cmp);
    let median = if values.len() % 2 == 1 {
        values[values.len() / 2]
    } else {
        0.5 * (values[values.len() / 2 - 1] + values[values.len() / 2])
    };

    Ok(RoofOutcome {
        value: best.value,
        diagnostics: RoofDiagnostics {
            rank,
            ensemble_size: m,
            restarts: runs.len(),
            best: best.value,
            median,
            converged: best.converged,
            iterations: best.iterations,
            upper_bound: true,
        },
        ensemble: problem.ensemble(&best.x),
    })
}

struct Decomposition {
    /// `√λ_j |e_j⟩` for the kept eigenpairs.
    weighted: Vec<[Complex64; DIM]>,
    m: usize,
    objective: RoofObjective,
}

impl Decomposition {
    fn rank(&self) -> usize {
        self.weighted.len()
    }

    /// Parameters of `U = [I; 0]`, i.e. the eigen-ensemble.
    fn identity_start(&self) -> Vec<f64> {
        let r = self.rank();
        let mut x = vec![0.0; 2 * self.m * r];
        for j in 0..r {
            x[2 * (j * r + j)] = 1.0;
        }
        x
    }

    /// Orthonormalizes the columns of the `m × r` matrix encoded in `x`
    /// (row-major, interleaved re/im) into `u`. Returns `false` if a column
    /// is numerically dependent on the previous ones.
    fn isometry(&self, x: &[f64], u: &mut [Complex64]) -> bool {
        let (m, r) = (self.m, self.rank());
        for (slot, pair) in u.iter_mut().zip(x.chunks_exact(2)) {
            *slot = Complex64::new(pair[0], pair[1]);
        }
        for j in 0..r {
            // two passes of modified Gram–Schmidt
            for _ in 0..2 {
                for k in 0..j {
                    let mut dot = Complex64::new(0.0, 0.0);
                    for i in 0..m {
                        dot += u[i * r + k].conj() * u[i * r + j];
                    }
                    for i in 0..m {
                        let uk = u[i * r + k];
                        u[i * r + j] -= dot * uk;
                    }
                }
            }
            let norm = (0..m).map(|i| u[i * r + j].norm_sqr()).sum::<f64>().sqrt();
            if !(norm > 1e-10) {
                return false;
            }
            for i in 0..m {
                u[i * r + j] /= norm;
            }
        }
        true
    }

    fn member(&self, u: &[Complex64], i: usize) -> [Complex64; DIM] {
        let r = self.rank();
        let mut psi = [Complex64::new(0.0, 0.0); DIM];
        for (j, w) in self.weighted.iter().enumerate() {
            let c = u[i * r + j];
            for k in 0..DIM {
                psi[k] += c * w[k];
            }
        }
        psi
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        let mut u = [Complex64::new(0.0, 0.0); MAX_ENSEMBLE * DIM];
        if !self.isometry(x, &mut u) {
            return f64::INFINITY;
        }
        (0..self.m)
            .map(|i| {
                let psi = self.member(&u, i);
                let p: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
                if p > 1e-300 {
                    p * self.objective.pure_value(&psi)
                } else {
                    0.0
                }
            })
            .sum()
    }

    fn ensemble(&self, x: &[f64]) -> Vec<(f64, Ket)> {
        let mut u = [Complex64::new(0.0, 0.0); MAX_ENSEMBLE * DIM];
        if !self.isometry(x, &mut u) {
            return Vec::new();
        }
        (0..self.m)
            .filter_map(|i| {
                let psi = self.member(&u, i);
                let p: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
                if p > 1e-300 {
                    Ket::new(psi.to_vec()).ok().map(|k| (p, k))
                } else {
                    None
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{cf_pure, gc_pure};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn w_state() -> Ket {
        let mut v = [0.0; 8];
        v[1] = 1.0;
        v[2] = 1.0;
        v[4] = 1.0;
        Ket::from_real(&v).unwrap()
    }

    #[test]
    fn pure_input_reproduces_pure_formulas() {
        let psi = w_state();
        let rho = psi.density();
        let cf = convex_roof(&rho, RoofObjective::ConcurrenceFill, &RoofConfig::fast()).unwrap();
        let gc = convex_roof(&rho, RoofObjective::GlobalConcurrence, &RoofConfig::fast()).unwrap();
        assert!((cf.value - cf_pure(&psi).unwrap()).abs() < 1e-8);
        assert!((gc.value - gc_pure(&psi).unwrap()).abs() < 1e-8);
        assert!(!cf.diagnostics.upper_bound);
        assert_eq!(cf.diagnostics.rank, 1);
    }

    #[test]
    fn diagonal_mixture_is_separable() {
        let rho = ComplexMatrix::from_diag(&[0.3, 0.1, 0.05, 0.15, 0.1, 0.1, 0.1, 0.1]);
        for obj in [RoofObjective::ConcurrenceFill, RoofObjective::GlobalConcurrence] {
            let out = convex_roof(&rho, obj, &RoofConfig::fast()).unwrap();
            assert!(out.value < 1e-8, "{obj:?}: {}", out.value);
        }
    }

    #[test]
    fn ensemble_reproduces_the_state() {
        let mut v = [0.0; 8];
        v[0] = 0.8;
        v[7] = 0.6;
        let ghz = Ket::from_real(&v).unwrap().density();
        let rho = ComplexMatrix::from_vec(
            8,
            8,
            ghz.as_slice()
                .iter()
                .zip(ComplexMatrix::identity(8).as_slice())
                .map(|(a, b)| a * 0.7 + b * (0.3 / 8.0))
                .collect(),
        )
        .unwrap();
        let out = convex_roof(&rho, RoofObjective::ConcurrenceFill, &RoofConfig::fast()).unwrap();
        let mut sum = ComplexMatrix::zeros(8, 8);
        for (p, psi) in &out.ensemble {
            let d = psi.density();
            for r in 0..8 {
                for c in 0..8 {
                    sum[(r, c)] += d[(r, c)] * *p;
                }
            }
        }
        assert!(sum.max_abs_diff(&rho).unwrap() < 1e-10);
        assert!((ensemble_objective(&out.ensemble, RoofObjective::ConcurrenceFill) - out.value).abs() < 1e-10);
    }

    #[test]
    fn deterministic_in_seed() {
        let mut v = [0.0; 8];
        v[0] = FRAC_1_SQRT_2;
        v[7] = FRAC_1_SQRT_2;
        let ghz = Ket::from_real(&v).unwrap().density();
        let rho = ComplexMatrix::from_vec(
            8,
            8,
            ghz.as_slice()
                .iter()
                .zip(ComplexMatrix::from_diag(&[0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).as_slice())
                .map(|(a, b)| a * 0.8 + b * 0.2)
                .collect(),
        )
        .unwrap();
        let cfg = RoofConfig::fast().with_seed(42);
        let a = convex_roof(&rho, RoofObjective::ConcurrenceFill, &cfg).unwrap();
        let b = convex_roof(&rho, RoofObjective::ConcurrenceFill, &cfg).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.diagnostics, b.diagnostics);
    }

    #[test]
    fn config_errors() {
        let rho = ComplexMatrix::from_diag(&[0.25, 0.25, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0]);
        let small = RoofConfig { ensemble_size: Some(3), ..RoofConfig::fast() };
        assert!(matches!(convex_roof(&rho, RoofObjective::ConcurrenceFill, &small), Err(Error::Config(_))));
        let none = RoofConfig { restarts: 0, ..RoofConfig::fast() };
        assert!(matches!(convex_roof(&rho, RoofObjective::ConcurrenceFill, &none), Err(Error::Config(_))));
        assert!(convex_roof(
            &ComplexMatrix::from_diag(&[0.5, 0.5]),
            RoofObjective::ConcurrenceFill,
            &RoofConfig::fast()
        )
        .is_err());
    }
}
