//! Nested-lattice coding and dithered mod-Λ channel simulation.
//!
//! The crate provides exact closest-point quantizers for the classical
//! low-dimensional lattices (Zⁿ, Dₙ, E8, A2, products and generic bases),
//! Voronoi (nested-lattice) codes built on them, a Monte Carlo transceiver
//! for the dithered mod-Λ AWGN and dirty-paper channels with pluggable
//! output scaling, and the statistical estimators (second moments,
//! nearest-neighbor entropies, chi-square independence, mutual information)
//! used to measure how close the simulated systems get to channel capacity.
//!
//! All randomness flows through per-frame counter-based streams, so every
//! simulation is reproducible bit for bit regardless of worker count. The
//! `parallel` feature (on by default) runs the batch loops on rayon; without
//! it everything falls back to the same sequential code path.

pub mod analysis;
pub mod channel;
pub mod code;
pub mod config;
pub mod error;
pub mod lattice;
mod linalg;
mod par;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};

/// Absolute tolerance, in amplitude units, for Voronoi membership and
/// congruence checks throughout the crate.
pub const TOLERANCE: f64 = 1e-9;
