//! Exact integer matrices and the floating-point symmetric eigensolver.

mod eigen;
mod int;

pub use eigen::{
    psd_eigenvalues, skew_spectrum, symmetric_eigenvalues, FloatMatrix, MAX_SWEEPS,
    OFF_DIAGONAL_TOL, PSD_CLAMP,
};
pub use int::IntMatrix;
