use crate::error::{Error, Result};
use crate::linalg::{partial_trace, purity_with, validate_density, ComplexMatrix, Tolerances};

/// l1-norm of coherence in the computational basis: `Σ_{i≠j} |ρ_ij|`.
pub fn qc_l1(rho: &ComplexMatrix) -> Result<f64> {
    validate_density(rho, &Tolerances::default())?;
    let n = rho.rows();
    let mut total = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                total += rho[(r, c)].norm();
            }
        }
    }
    Ok(total)
}

/// Squared Bloch lengths below this are reported as exactly zero.
const BLOCH_SNAP: f64 = 1e-14;

/// Bloch-vector length of a qubit, `√(2 tr ρ² − 1)`.
pub fn foc_single(rho_qubit: &ComplexMatrix) -> Result<f64> {
    if rho_qubit.rows() != 2 || rho_qubit.cols() != 2 {
        return Err(Error::Argument(format!(
            "first-order coherence of a single qubit needs a 2×2 state, got {}×{}",
            rho_qubit.rows(),
            rho_qubit.cols()
        )));
    }
    let p = purity_with(rho_qubit, &Tolerances::default())?;
    // rounding in tr ρ² would otherwise surface as ~1e-8 after the root
    let r2 = 2.0 * p - 1.0;
    Ok(if r2 < BLOCH_SNAP { 0.0 } else { r2.sqrt().min(1.0) })
}

/// Root-mean-square of the single-qubit first-order coherences of an
/// `n`-qubit state.
pub fn foc_multipartite(rho: &ComplexMatrix) -> Result<f64> {
    let n = qubit_count(rho)?;
    let dims = vec![2; n];
    let mut sum_sq = 0.0;
    for site in 0..n {
        let d = foc_single(&partial_trace(rho, &dims, &[site])?)?;
        sum_sq += d * d;
    }
    Ok((sum_sq / n as f64).sqrt())
}

/// [`foc_multipartite`] restricted to three qubits.
pub fn foc_tripartite(rho3: &ComplexMatrix) -> Result<f64> {
    if rho3.rows() != 8 {
        return Err(Error::Argument(format!("expected an 8×8 three-qubit state, got {}×{}", rho3.rows(), rho3.cols())));
    }
    foc_multipartite(rho3)
}

fn qubit_count(rho: &ComplexMatrix) -> Result<usize> {
    let d = rho.rows();
    if !rho.is_square() || !d.is_power_of_two() || d < 2 {
        return Err(Error::Argument(format!("{}×{} is not a multi-qubit state", rho.rows(), rho.cols())));
    }
    Ok(d.trailing_zeros() as usize)
}
