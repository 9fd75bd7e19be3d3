//! Gaussian-beam data along reflected rays.
//!
//! A beam carries, along a ray, the complex half-frame Z = a + ib, the
//! second-order phase matrix M = (c + id)Z⁻¹ (transverse Gaussian width),
//! a continuously tracked branch of arg det Z (the Maslov bookkeeping that
//! fixes square roots in amplitudes), and the accumulated gauge holonomy.
//! The stationary-phase side lives here too: the reduced closure Hessian and
//! the branch rule for det(−iQ)^{−1/2}.

mod evolve;
mod gauge;
mod stationary;

pub use evolve::{amplitude_a0, evolve_beam, initial_beam, sqrt_det_tracked, BeamState};
pub use gauge::{
    holonomy, max_curl_on_samples, path_polyline, path_polyline_until, FourierCoeff, GaugeField,
};
pub use stationary::{
    closure_hessian, hessian_det_at_closure, resolve_sign, sqrt_det_branch_stationary,
    stationary_branch, HessianDet, SingularitySignData,
};

use crate::billiards::BilliardsError;
use crate::quad::QuadError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BeamsError {
    #[error("path is not closed (gap {gap:.3e})")]
    NonClosedPath { gap: f64 },
    #[error("det(a+ib) vanishes at t={t:.9}; M is undefined at focal points")]
    FocalPoint { t: f64 },
    #[error("frame matrix Z is singular")]
    SingularFrame,
    #[error("stationary-phase Hessian is singular")]
    SingularHessian,
    #[error("branch tracking failed: {0}")]
    BranchTracking(String),
    #[error(transparent)]
    Billiards(#[from] BilliardsError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}
