//! Numerics for Berezin quantizations on three phase-space geometries:
//! the finite Gabor torus `Z_N x Z_N`, the time-frequency plane, and the
//! affine (scale-shift) half-plane.
//!
//! The crate builds continuous Parseval frame families `k_x` over a
//! quadrature grid, assembles Toeplitz localization operators
//! `T_sigma f = sum_j sigma(x_j) <f, k_j> k_j w_j`, and provides the
//! diagnostics that make compactness and lower-bound claims checkable at
//! desk scale: Berezin transforms and their radial envelopes, Schur-test
//! constants, eigenvalue/epsilon-rank reports, wavelet admissibility and
//! decay integrals, and translate-supremum symbol constructions.
//!
//! Everything is deterministic: random trials are seeded, reductions use a
//! fixed pairwise summation order, and parallel loops only map independent
//! elements.

pub mod analysis;
pub mod berezin;
pub mod error;
pub mod frames;
pub mod linalg;
pub mod operators;
pub mod phase_space;
pub mod symbols;

pub use error::{Error, Result};
