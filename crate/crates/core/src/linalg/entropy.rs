use super::{eigh_with, ComplexMatrix, Tolerances};
use crate::error::{Error, Result};

/// Checks that `rho` is a density operator: square, Hermitian, unit trace
/// and positive semidefinite, all within `tol`. Returns its eigenvalues
/// (descending) so callers that need them do not diagonalize twice.
pub fn validate_density(rho: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    if !rho.is_square() {
        return Err(Error::Contract(format!("density operator must be square, got {}×{}", rho.rows(), rho.cols())));
    }
    let tr = rho.trace();
    if !((tr.re - 1.0).abs() <= tol.trace && tr.im.abs() <= tol.trace) {
        return Err(Error::Contract(format!("trace {tr} differs from 1")));
    }
    let spectrum = eigh_with(rho, tol)?;
    let min = spectrum.eigenvalues.last().copied().unwrap_or(0.0);
    if min < -tol.psd {
        return Err(Error::Contract(format!("negative eigenvalue {min:.3e}")));
    }
    Ok(spectrum.eigenvalues)
}

/// `S(ρ) = −Σ λ log2 λ` in bits.
pub fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    von_neumann_entropy_with(rho, &Tolerances::default())
}

pub fn von_neumann_entropy_with(rho: &ComplexMatrix, tol: &Tolerances) -> Result<f64> {
    let eigenvalues = validate_density(rho, tol)?;
    Ok(eigenvalues
        .into_iter()
        .map(|l| l.clamp(0.0, 1.0))
        .filter(|&l| l > 0.0)
        .map(|l| -l * l.log2())
        .sum::<f64>()
        .max(0.0))
}

/// `tr ρ²`.
pub fn purity(rho: &ComplexMatrix) -> Result<f64> {
    purity_with(rho, &Tolerances::default())
}

pub fn purity_with(rho: &ComplexMatrix, tol: &Tolerances) -> Result<f64> {
    validate_density(rho, tol)?;
    // tr ρ² = Σ |ρ_ij|² for Hermitian ρ
    Ok(rho.as_slice().iter().map(|z| z.norm_sqr()).sum())
}
