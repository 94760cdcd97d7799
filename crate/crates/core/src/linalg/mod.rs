//! Dense complex linear algebra for the small Hermitian matrices used here
//! (at most 32×32 in practice).

mod eigh;
mod entropy;
mod matrix;
mod tolerance;

pub use eigh::{eigh, eigh_with, Spectrum};
pub use entropy::{purity, purity_with, validate_density, von_neumann_entropy, von_neumann_entropy_with};
pub use matrix::{partial_trace, tensor, tensor_bounded, ComplexMatrix, Ket, DEFAULT_MAX_DIM};
pub use tolerance::Tolerances;

pub use num_complex::Complex64;
