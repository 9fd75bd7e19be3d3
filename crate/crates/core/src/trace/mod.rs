//! Band-limited wave traces, singularity predictions, and amplitude fits.
//!
//! Three independent routes meet here: (1) the trace Σ χ(√λ/K) cos(t√λ)
//! summed from an exact spectrum, (2) a closed-form prediction of each
//! singularity's coefficient from geometry and flux, and (3) a band-limited
//! model of the singular shape synthesized from a frequency integral. A
//! least-squares fit of (1) against (3) extracts a coefficient to compare
//! with (2).

pub mod fit;
pub mod isolation;
pub mod model;
pub mod predict;
pub mod samples;
pub mod torus_fit;
pub mod window;

pub use fit::{fit_amplitude, fit_both_sides, FitReport, SideComparison};
pub use isolation::{verify_isolation, IsolationReport};
pub use model::{bandlimited_model, frequency_profile_integral, side_shape};
pub use predict::{predict_singularity, SingularSide, SingularityPrediction};
pub use samples::{bandlimited_trace, TimeGrid, TraceSamples};
pub use torus_fit::{torus_peak_weights, TorusWeight};
pub use window::WindowSpec;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("spectrum cutoff {spectrum_cutoff} below window cutoff {window_cutoff} (or spectrum incomplete)")]
    IncompleteSpectrum { spectrum_cutoff: f64, window_cutoff: f64 },
    #[error("fit window around {target} (half width {half_width}) is contaminated by length {intruder}")]
    IsolationViolation { target: f64, intruder: f64, half_width: f64 },
    #[error("lattice fails genericity at bound {bound}: |d|=|d'| for d={d:?}, d'={d_prime:?}")]
    GenericityFailure { bound: f64, d: (i32, i32), d_prime: (i32, i32) },
    #[error("invalid trace parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Quadrature(#[from] crate::quad::QuadError),
    #[error(transparent)]
    Spectra(#[from] crate::spectra::SpectraError),
}
