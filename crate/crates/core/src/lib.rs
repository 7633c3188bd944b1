//! Van Vleck zeros and Stieltjes polynomials of the three-point
//! Heine–Stieltjes equation.
//!
//! The core types are generic over the scalar; the aliases below fix `f64`.

// Scalars are generic without assign-op bounds; negated comparisons are NaN-aware.
#![allow(clippy::assign_op_pattern, clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod acceptance;
pub mod eigen;
pub mod equilateral;
pub mod error;
pub mod interlace;
pub mod lame;
pub mod matrix;
pub mod problem;
pub mod quad;
pub mod random;
pub mod scalar;
pub mod spectral;
pub mod stats;

pub mod cheb;
mod linalg;

pub use equilateral::{check_radial_conjecture, equilateral_zeros, EquilateralSpectrum};
pub use error::{Error, ErrorKind, Result};
pub use interlace::{check_distinct_across_orders, check_interlacing, interlacing_sweep, InterlaceVerdict};
pub use lame::{lame_report, GammaClass};
pub use matrix::{
    build_matrix, build_matrix_at_alpha_zero, eigenvalue_slope_at_zero, eigenvalue_slope_at_zero_for, symmetrize, SymmetrizedMatrix,
    Tridiagonal, TridiagonalSpectralMatrix,
};
pub use problem::{denormalize_nu, heine_bound, heine_count, mu, LameProblem, NormalizedProblem};
pub use scalar::{Real, Scalar};

pub type Problem = LameProblem<f64>;
pub type Normalized = NormalizedProblem<f64>;
pub type SpectralMatrix = TridiagonalSpectralMatrix<f64>;
pub type ExactProblem = LameProblem<num_rational::BigRational>;
