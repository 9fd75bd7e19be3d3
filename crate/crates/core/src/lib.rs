//! Spectral verification of flux effects in wave traces.
//!
//! A magnetic Schrödinger operator `H = (i∇ + A)²` with zero magnetic field
//! (curl A = 0 in the domain) can still feel the gauge potential through the
//! flux trapped in holes of the domain. This crate verifies that effect
//! numerically, at desk scale, in three independent ways that must agree:
//!
//! 1. **Exact spectra** — Dirichlet eigenvalues of the flux disk/annulus from
//!    Bessel zeros of real order `ν = |m + α/2π|`, and closed-form spectra of
//!    flat tori with a constant gauge potential ([`spectra`]).
//! 2. **Band-limited wave traces** — `T_χ(t) = Σ_j χ(√λ_j/K) cos(t√λ_j)`,
//!    whose singularities sit at lengths of periodic billiard orbits
//!    ([`trace`]).
//! 3. **Stationary-phase predictions** — the singularity coefficient at an
//!    inscribed N-gon length, assembled from the symplectic linearization of
//!    the billiard flow ([`billiards`]), Gaussian-beam amplitudes with
//!    branch-tracked square roots and gauge holonomy ([`beams`]), and the
//!    reduced stationary-phase Hessian.
//!
//! The payoff observable: the fitted trace coefficient at orbit length `L`
//! divided by its zero-flux value equals `cos(flux)`.
//!
//! Conventions: unit propagation speed (so singular times are geometric
//! lengths), flux `α` measured in radians, and all geometry in the plane.

pub mod beams;
pub mod billiards;
pub mod cli;
pub mod config;
pub mod spectra;
pub mod trace;

pub mod acceptance;

mod quad;
mod sum;

pub use quad::integrate_gk;
pub use sum::neumaier_sum;

/// Crate version string, embedded in CSV provenance headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
