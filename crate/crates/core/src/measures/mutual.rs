use crate::error::{Error, Result};
use crate::linalg::{partial_trace, von_neumann_entropy, ComplexMatrix};

/// Negative values down to this are treated as rounding and clamped to 0.
const NEGATIVITY_TOLERANCE: f64 = 1e-9;

/// `I(X:Y) = S(ρ_X) + S(ρ_Y) − S(ρ_XY)` in bits, for a bipartite state with
/// subsystem dimensions `dims`.
pub fn mutual_information(rho_pair: &ComplexMatrix, dims: [usize; 2]) -> Result<f64> {
    if rho_pair.rows() != dims[0] * dims[1] {
        return Err(Error::Shape(format!(
            "dims {}×{} do not match a {}×{} state",
            dims[0],
            dims[1],
            rho_pair.rows(),
            rho_pair.cols()
        )));
    }
    let s_xy = von_neumann_entropy(rho_pair)?;
    let s_x = von_neumann_entropy(&partial_trace(rho_pair, &dims, &[0])?)?;
    let s_y = von_neumann_entropy(&partial_trace(rho_pair, &dims, &[1])?)?;
    let i = s_x + s_y - s_xy;
    if i < -NEGATIVITY_TOLERANCE {
        return Err(Error::Contract(format!("negative mutual information {i:.3e}")));
    }
    Ok(i.max(0.0))
}
