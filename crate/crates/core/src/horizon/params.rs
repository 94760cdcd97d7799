use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical parameters plus the derived amplitudes of the five-qubit state.
///
/// `s_plus`/`s_minus` weight the Kruskal vacuum
/// `|0⟩_K = S₋|0⟩_out|0⟩_in + S₊|1⟩_out|1⟩_in`, with
/// `S± = (e^{±ω/T_H} + 1)^{-1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HorizonParams {
    pub alpha: f64,
    pub omega: f64,
    pub t_hawking: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    /// `α S₊²`
    pub theta_plus: f64,
    /// `α S₋²`
    pub theta_minus: f64,
    /// `α S₊ S₋ = α / (2 cosh(ω / 2T_H))`
    pub gamma: f64,
    /// `√(1 − α²)`
    pub upsilon: f64,
}

impl HorizonParams {
    /// `Θ₊² + Θ₋² + 2Γ² + Υ²`, which is 1 for a normalized state.
    pub fn norm_sqr(&self) -> f64 {
        self.theta_plus.powi(2) + self.theta_minus.powi(2) + 2.0 * self.gamma.powi(2) + self.upsilon.powi(2)
    }
}

/// Computes `S±`, `Θ±`, `Γ` and `Υ` from `(α, ω, T_H)`.
///
/// Everything is written in terms of `e^{−ω/T_H} ≤ 1`, so very cold or
/// very high-frequency modes simply send `S₊` to zero instead of
/// overflowing.
pub fn derive_coefficients(alpha: f64, omega: f64, t_hawking: f64) -> Result<HorizonParams> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha = {alpha} is outside [0, 1]")));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::Domain(format!("omega = {omega} must be positive and finite")));
    }
    if !(t_hawking > 0.0 && t_hawking.is_finite()) {
        return Err(Error::Domain(format!("T_H = {t_hawking} must be positive and finite")));
    }
    let x = omega / t_hawking;
    let boltzmann = (-x).exp();
    let denom = 1.0 + boltzmann;
    let s_plus_sq = boltzmann / denom;
    let s_minus_sq = 1.0 / denom;
    let s_plus = (-0.5 * x).exp() / denom.sqrt();
    let s_minus = denom.sqrt().recip();
    Ok(HorizonParams {
        alpha,
        omega,
        t_hawking,
        s_plus,
        s_minus,
        theta_plus: alpha * s_plus_sq,
        theta_minus: alpha * s_minus_sq,
        gamma: alpha * s_plus * s_minus,
        upsilon: (1.0 - alpha * alpha).max(0.0).sqrt(),
    })
}

/// `T_H = 1 / (8πM)` in natural units.
pub fn temperature_from_mass(mass: f64) -> Result<f64> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::Domain(format!("black-hole mass {mass} must be positive and finite")));
    }
    Ok(1.0 / (8.0 * std::f64::consts::PI * mass))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn zero_temperature_limit() {
        let p = derive_coefficients(FRAC_1_SQRT_2, 1.0, 0.01).unwrap();
        assert!(p.s_plus < 1e-21 && p.s_plus >= 0.0);
        assert!((p.s_minus - 1.0).abs() < 1e-15);
        assert!((p.theta_minus - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(p.theta_plus < 1e-40);
        assert!(p.gamma < 1e-21);
    }

    #[test]
    fn extreme_ratio_underflows_gracefully() {
        let p = derive_coefficients(0.5, 1.0, 1e-6).unwrap();
        assert_eq!(p.s_plus, 0.0);
        assert_eq!(p.gamma, 0.0);
        assert!((p.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn infinite_temperature_limit() {
        let p = derive_coefficients(1.0, 1.0, 1e9).unwrap();
        assert!((p.s_plus.powi(2) - 0.5).abs() < 1e-9);
        assert!((p.s_minus.powi(2) - 0.5).abs() < 1e-9);
        assert!((p.theta_plus - 0.5).abs() < 1e-9);
        assert!((p.theta_minus - 0.5).abs() < 1e-9);
        assert!((p.gamma - 0.5).abs() < 1e-9);
        assert_eq!(p.upsilon, 0.0);
    }

    #[test]
    fn unit_temperature_values() {
        // 30-digit evaluation of (e^{∓1} + 1)^{-1/2}
        let p = derive_coefficients(0.6, 1.0, 1.0).unwrap();
        assert!((p.s_minus - 0.855_019_636_400_243_7).abs() < 1e-15);
        assert!((p.s_plus - 0.518_595_624_133_095_7).abs() < 1e-15);
        assert!((p.gamma - 0.266_045_665_191_022_2).abs() < 1e-15);
        // Γ = α / (2 cosh(ω / 2T_H))
        assert!((p.gamma - 0.6 / (2.0 * 0.5_f64.cosh())).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(derive_coefficients(-0.1, 1.0, 1.0).is_err());
        assert!(derive_coefficients(1.1, 1.0, 1.0).is_err());
        assert!(derive_coefficients(0.5, 0.0, 1.0).is_err());
        assert!(derive_coefficients(0.5, 1.0, -1.0).is_err());
        assert!(derive_coefficients(f64::NAN, 1.0, 1.0).is_err());
        assert!(derive_coefficients(0.5, 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn mass_conversion() {
        let t = temperature_from_mass(1.0 / (8.0 * std::f64::consts::PI)).unwrap();
        assert!((t - 1.0).abs() < 1e-15);
        assert!(temperature_from_mass(0.0).is_err());
    }

    #[test]
    fn gamma_shrinks_monotonically_as_temperature_drops() {
        let mut last = f64::INFINITY;
        let mut last_theta = f64::INFINITY;
        for k in 0..60 {
            let t = 10.0 * 0.8_f64.powi(k);
            let p = derive_coefficients(0.8, 1.0, t).unwrap();
            assert!(p.gamma <= last && p.theta_plus <= last_theta);
            last = p.gamma;
            last_theta = p.theta_plus;
        }
        let (mut last, mut last_theta) = (f64::INFINITY, f64::INFINITY);
        for k in 0..60 {
            let w = 0.1 * 1.25_f64.powi(k);
            let p = derive_coefficients(0.8, w, 1.0).unwrap();
            assert!(p.gamma <= last && p.theta_plus <= last_theta);
            last = p.gamma;
            last_theta = p.theta_plus;
        }
    }

    proptest! {
        #[test]
        fn coefficients_are_normalized(
            alpha in 0.0..=1.0f64,
            omega in 1e-3..1e3f64,
            t in 1e-3..1e3f64,
        ) {
            let p = derive_coefficients(alpha, omega, t).unwrap();
            prop_assert!((p.s_plus.powi(2) + p.s_minus.powi(2) - 1.0).abs() < 1e-12);
            prop_assert!((p.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }
}
