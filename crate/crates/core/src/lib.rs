//! Exact index characters of projective Dirac operators on model manifolds.
//!
//! Everything is computed over the Gaussian rationals extended by powers of
//! π, so reported values are exact fractions. Start from [`engine::Engine`]
//! for indices and audits, [`models`] for the built-in manifolds and the text
//! format, and [`sun`] for explicit SU(N) representations.

pub mod characteristic;
pub mod cli;
pub mod clifford;
pub mod distributions;
pub mod engine;
pub mod error;
pub mod forms;
pub mod matrix;
pub mod models;
pub mod scalar;
pub mod sun;
