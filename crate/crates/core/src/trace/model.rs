//! Band-limited realization of the one-sided singular shapes (t−L)_±^{−3/2}.
//!
//! The frequency integral
//!
//!   B(τ) = ∫₀^K χ(r/K) √r e^{−iτr} dr,     τ = t − L,
//!
//! carries both one-sided distributions: with Γ(3/2) = √π/2,
//!
//!   plus side  f₊(τ) = −(Re B + Im B) / (√2 Γ(3/2)),
//!   minus side f₋(τ) = (−Re B + Im B) / (√2 Γ(3/2)).
//!
//! These are the exact band-limited images of (t−L)_±^{−3/2} under the same
//! window χ that band-limits the trace, which is what makes a linear fit of
//! trace against shape meaningful. The pairing identity
//! ⟨(t−L)₊^{−3/2}, g⟩ = 4∫₀^∞ g′(L+u²) du validates the normalization in the
//! test suite.

use super::predict::{SingularSide, SingularityPrediction};
use super::samples::TimeGrid;
use super::window::{chi_profile, WindowSpec};
use super::TraceError;
use crate::quad::integrate_gk;

const QUAD_TOL: f64 = 1e-9;

/// B(τ) = ∫₀^K χ(r/K)·√r·e^{−iτr} dr as (Re, Im), adaptive quadrature split
/// at the window's knee K/2 (where χ stops being constant).
pub fn frequency_profile_integral(
    window: &WindowSpec,
    tau: f64,
) -> Result<(f64, f64), TraceError> {
    let k = window.cutoff;
    let re = |r: f64| chi_profile(r / k) * r.sqrt() * (tau * r).cos();
    let im = |r: f64| -(chi_profile(r / k) * r.sqrt() * (tau * r).sin());
    let half = 0.5 * k;
    let re_val = integrate_gk(&re, 0.0, half, QUAD_TOL)? + integrate_gk(&re, half, k, QUAD_TOL)?;
    let im_val = integrate_gk(&im, 0.0, half, QUAD_TOL)? + integrate_gk(&im, half, k, QUAD_TOL)?;
    Ok((re_val, im_val))
}

/// Unit-coefficient band-limited shape of the requested side at τ = t − L.
pub fn side_shape(window: &WindowSpec, side: SingularSide, tau: f64) -> Result<f64, TraceError> {
    let (re, im) = frequency_profile_integral(window, tau)?;
    // √2·Γ(3/2) = √(π/2)
    let denom = (0.5 * std::f64::consts::PI).sqrt();
    Ok(match side {
        SingularSide::Plus => -(re + im) / denom,
        SingularSide::Minus => (-re + im) / denom,
    })
}

/// Model samples C·f_side(t−L) on the grid, with C the prediction's full
/// trace coefficient (all orientation families).
pub fn bandlimited_model(
    prediction: &SingularityPrediction,
    window: &WindowSpec,
    grid: &TimeGrid,
) -> Result<Vec<f64>, TraceError> {
    grid.times()
        .iter()
        .map(|&t| {
            Ok(prediction.trace_coefficient * side_shape(window, prediction.side, t - prediction.length)?)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::predict::predict_singularity;

    #[test]
    fn plus_side_decays_into_the_minus_region() {
        // (t−L)₊^{−3/2} is supported on t > L; far on the other side the
        // band-limited shape must be a small fraction of its peak value
        let w = WindowSpec::new(60.0).unwrap();
        let peak = side_shape(&w, SingularSide::Plus, 0.05).unwrap();
        let far = side_shape(&w, SingularSide::Plus, -2.0).unwrap();
        assert!(far.abs() < 0.02 * peak.abs(), "far={far}, peak={peak}");
    }

    #[test]
    fn model_linear_in_coefficient() {
        let w = WindowSpec::new(40.0).unwrap();
        let grid = TimeGrid::covering(5.0, 5.4, w.max_grid_spacing()).unwrap();
        let p1 = predict_singularity(3, 1.0, 0.0);
        let p2 = predict_singularity(3, 1.0, std::f64::consts::PI / 3.0); // halves cos
        let m1 = bandlimited_model(&p1, &w, &grid).unwrap();
        let m2 = bandlimited_model(&p2, &w, &grid).unwrap();
        for (a, b) in m1.iter().zip(m2.iter()) {
            assert!((0.5 * a - b).abs() <= 1e-12 * a.abs().max(1e-12));
        }
    }
}
