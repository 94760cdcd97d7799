//! Closed-form one- and two-mode reduced states, assembled directly from the
//! coefficients without going through the 32-dimensional state. Used as an
//! independent check on [`super::reduce`].

use super::{HorizonParams, SubsetSelector};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// The tabulated subsets, each in the site order its matrix is written in.
/// Note `Bb` lists Bob before anti-Bob.
pub const APPENDIX_SUBSETS: [&str; 13] = ["A", "B", "b", "C", "c", "AB", "AC", "BC", "Ab", "Bb", "Ac", "Bc", "cC"];

/// Closed-form reduced state for one of [`APPENDIX_SUBSETS`] (in either site
/// order for pairs), returned with its sites in the order of `subset`.
pub fn appendix_oracle(subset: &SubsetSelector, p: &HorizonParams) -> Result<ComplexMatrix> {
    let canonical = subset.canonical();
    let tabulated = APPENDIX_SUBSETS
        .iter()
        .map(|l| l.parse::<SubsetSelector>().expect("static labels are valid"))
        .find(|s| s.canonical() == canonical)
        .ok_or_else(|| Error::Argument(format!("no closed form tabulated for subset {subset}")))?;

    let tp = p.theta_plus.powi(2);
    let tm = p.theta_minus.powi(2);
    let g = p.gamma.powi(2);
    let u = p.upsilon.powi(2);
    let pair_coherence = p.gamma * (p.theta_plus + p.theta_minus);

    let m = match tabulated.label().as_str() {
        "A" => ComplexMatrix::from_diag(&[tp + 2.0 * g + tm, u]),
        "B" | "C" => ComplexMatrix::from_diag(&[g + tm, tp + u + g]),
        "b" | "c" => ComplexMatrix::from_diag(&[u + g + tm, tp + g]),
        "AB" | "AC" => ComplexMatrix::from_diag(&[g + tm, tp + g, 0.0, u]),
        "BC" => ComplexMatrix::from_diag(&[tm, g, g, tp + u]),
        "Ab" | "Ac" => ComplexMatrix::from_diag(&[g + tm, tp + g, u, 0.0]),
        "Bc" => ComplexMatrix::from_diag(&[tm, g, u + g, tp]),
        "Bb" => ComplexMatrix::from_real_rows(&[
            &[g + tm, 0.0, 0.0, pair_coherence],
            &[0.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, u, 0.0],
            &[pair_coherence, 0.0, 0.0, tp + g],
        ])?,
        "cC" => ComplexMatrix::from_real_rows(&[
            &[g + tm, 0.0, 0.0, pair_coherence],
            &[0.0, u, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 0.0],
            &[pair_coherence, 0.0, 0.0, tp + g],
        ])?,
        other => unreachable!("tabulated subset {other} has no matrix"),
    };

    if tabulated == *subset {
        Ok(m)
    } else {
        // the only other order of a tabulated pair is the swap
        m.permute_sites(&[2, 2], &[1, 0])
    }
}
