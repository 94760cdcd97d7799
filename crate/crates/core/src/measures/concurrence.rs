use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{Ket, Tolerances};

/// Heron factors `Q − C²` down to this value are treated as zero.
pub const TRIANGLE_TOLERANCE: f64 = 1e-12;

/// Squared one-vs-rest concurrences `C²_{i(jk)} = 4 det ρ_i` of a
/// three-qubit vector, one per site in tensor order. The vector need not be
/// normalized; the result is that of `v / ‖v‖`.
pub fn squared_concurrences(v: &[Complex64]) -> [f64; 3] {
    debug_assert_eq!(v.len(), 8);
    let norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    let mut out = [0.0; 3];
    if norm_sq <= 0.0 {
        return out;
    }
    for (site, slot) in out.iter_mut().enumerate() {
        let mask = 1usize << (2 - site);
        let (mut r00, mut r11) = (0.0, 0.0);
        let mut r01 = Complex64::new(0.0, 0.0);
        for i in 0..8 {
            if i & mask == 0 {
                let j = i | mask;
                r00 += v[i].norm_sqr();
                r11 += v[j].norm_sqr();
                r01 += v[i] * v[j].conj();
            }
        }
        let det = r00 * r11 - r01.norm_sqr();
        *slot = (4.0 * det / (norm_sq * norm_sq)).clamp(0.0, 1.0);
    }
    out
}

/// Concurrence fill from the three squared concurrences:
/// `[16/3 · Q (Q − C²_x)(Q − C²_y)(Q − C²_z)]^{1/4}` with `Q` the half
/// perimeter. Negative Heron factors are clamped to zero.
pub fn heron_fill(c2: [f64; 3]) -> f64 {
    let q = 0.5 * (c2[0] + c2[1] + c2[2]);
    let product: f64 = c2.iter().map(|&c| (q - c).max(0.0)).product();
    (16.0 / 3.0 * q * product).max(0.0).powf(0.25).min(1.0)
}

fn checked_pure(psi: &Ket) -> Result<&[Complex64]> {
    if psi.dim() != 8 {
        return Err(Error::Argument(format!("expected a three-qubit state, got dim {}", psi.dim())));
    }
    let defect = (psi.norm() - 1.0).abs();
    if defect > Tolerances::default().norm {
        return Err(Error::Contract(format!("state is not normalized (‖ψ‖ − 1 = {defect:.3e})")));
    }
    Ok(psi.amplitudes())
}

/// `C_{i(jk)} = 2√det ρ_i` for a pure three-qubit state.
pub fn concurrence_one_vs_rest(psi: &Ket, site: usize) -> Result<f64> {
    let v = checked_pure(psi)?;
    if site > 2 {
        return Err(Error::Argument(format!("site {site} out of range for three qubits")));
    }
    Ok(squared_concurrences(v)[site].sqrt())
}

/// Global concurrence: half-perimeter `Q` of the concurrence triangle.
pub fn gc_pure(psi: &Ket) -> Result<f64> {
    let c2 = squared_concurrences(checked_pure(psi)?);
    Ok(0.5 * c2.iter().sum::<f64>())
}

/// Concurrence fill of a pure three-qubit state.
pub fn cf_pure(psi: &Ket) -> Result<f64> {
    let c2 = squared_concurrences(checked_pure(psi)?);
    let q = 0.5 * c2.iter().sum::<f64>();
    if let Some(worst) = c2.iter().map(|&c| q - c).find(|&f| f < -TRIANGLE_TOLERANCE) {
        return Err(Error::Contract(format!("concurrence triangle inequality violated by {:.3e}", -worst)));
    }
    Ok(heron_fill(c2))
}
