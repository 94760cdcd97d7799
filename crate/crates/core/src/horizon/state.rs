use num_complex::Complex64;

use super::{HorizonParams, ScenarioId, SubsetSelector};
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, ComplexMatrix, Ket};

/// Five qubits in `(A, b, B, c, C)` order.
pub const SITE_DIMS: [usize; 5] = [2; 5];

/// The five-qubit state
///
/// ```text
/// Θ₊|01111⟩ + Θ₋|00000⟩ + Γ(|00011⟩ + |01100⟩) + Υ|10101⟩
/// ```
///
/// obtained by expanding `α|000⟩ + Υ|111⟩` of `(A, B, C)` in the Kruskal
/// basis for Bob's and Charlie's modes.
pub fn build_pentapartite_state(p: &HorizonParams) -> Ket {
    let mut amps = vec![Complex64::new(0.0, 0.0); 32];
    amps[0b01111] += p.theta_plus;
    amps[0b00000] += p.theta_minus;
    amps[0b00011] += p.gamma;
    amps[0b01100] += p.gamma;
    amps[0b10101] += p.upsilon;
    // already unit norm up to rounding; Ket::new would only rescale by 1 ± ε
    Ket::from_raw(amps)
}

/// Reduced state on `subset`, with sites in the selector's order.
pub fn reduce(psi: &Ket, subset: &SubsetSelector) -> Result<ComplexMatrix> {
    if psi.dim() != 32 {
        return Err(Error::Argument(format!("expected the 32-dim five-qubit state, got dim {}", psi.dim())));
    }
    if subset.len() > 4 {
        return Err(Error::Argument("subset must trace out at least one site".into()));
    }
    partial_trace(&psi.density(), &SITE_DIMS, &subset.indices())
}

/// Reduced state for a scenario, sites in global `(A, b, B, c, C)` order.
pub fn reduce_to_scenario(psi: &Ket, scenario: &ScenarioId) -> Result<ComplexMatrix> {
    reduce(psi, &scenario.subset())
}
