use serde::{Deserialize, Serialize};

/// Numerical tolerances for density-operator contracts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Max-abs-entry bound on `ρ − ρ†`.
    pub herm: f64,
    /// Bound on `|tr ρ − 1|`.
    pub trace: f64,
    /// Bound on `|‖ψ‖ − 1|`.
    pub norm: f64,
    /// Eigenvalues down to `-psd` are treated as zero.
    pub psd: f64,
    /// Eigensolver reconstruction and orthonormality bound.
    pub eig: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { herm: 1e-10, trace: 1e-10, norm: 1e-10, psd: 1e-10, eig: 1e-10 }
    }
}
