//! Numerical laboratory for finite-alphabet downlink massive-MIMO precoding.
//!
//! The crate is organized around four building blocks:
//!
//! - [`channel`]: synthetic ULA group channels, their DFT beamspace projection
//!   and beam selection (the reduced "virtual" channel every precoder consumes).
//! - [`precoders`]: zero-forcing precoding with power normalization plus the
//!   RZF / SSCP / PSCP benchmark variants and virtual-antenna augmentation.
//! - [`pgp`]: per-group precoding — block 2x2 mutual-information-optimal
//!   precoders, the effective-channel reweighting that composes them with a
//!   zero-forcing stage, and the full precoder assembly.
//! - [`mi`]: mutual information of QAM inputs through small complex channels,
//!   by Gauss-Hermite quadrature or Monte Carlo, matched or with an erroneous
//!   decoder-side precoder estimate.
//!
//! Everything is deterministic given explicit seeds; random streams are
//! derived per object so any sub-result is reproducible in isolation.

pub mod channel;
pub mod error;
pub mod hermite;
pub mod matdump;
pub mod mi;
pub mod pgp;
pub mod precoders;
pub mod qam;
pub mod rng;
pub mod svd;

pub use error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex<f64>;
/// Dynamically sized complex matrix.
pub type CMat = nalgebra::DMatrix<C64>;
/// Dynamically sized complex vector.
pub type CVec = nalgebra::DVector<C64>;
