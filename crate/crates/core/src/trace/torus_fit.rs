//! Per-length weight extraction from a torus trace.
//!
//! On a torus the trace singularity at t = |d| comes from the pair ±d of
//! lattice vectors and its strength carries cos(A₀·d). The band-limited
//! shape of that singularity is synthesized from the frequency integral
//!
//!   G_L(t) = ∫₀^K χ(r/K) · J₀(L·r) · cos(t·r) · r dr,   L = |d|,
//!
//! (the planar wave kernel periodized over the lattice, band-limited by the
//! same window as the trace). Only weight *ratios* across A₀ are asserted
//! anywhere: the absolute normalization of G is not part of the contract.

use super::samples::TraceSamples;
use super::window::{chi_profile, WindowSpec};
use super::TraceError;
use crate::quad::integrate_gk;
use crate::spectra::bessel::bessel_jy_limited;
use crate::spectra::torus::{lattice_genericity, TorusProblem};
use nalgebra::{DMatrix, DVector};

const QUAD_TOL: f64 = 1e-9;

/// Fitted weight of the singularity at one lattice length.
#[derive(Debug, Clone)]
pub struct TorusWeight {
    /// basis coordinates of the vector d
    pub d: (i32, i32),
    /// |d|
    pub length: f64,
    /// fitted coefficient of the band-limited kernel G_{|d|}
    pub weight: f64,
    /// ‖residual‖₂ / ‖trace window‖₂
    pub residual: f64,
}

/// Band-limited torus singularity kernel G_L(t).
pub fn torus_kernel(window: &WindowSpec, length: f64, t: f64) -> Result<f64, TraceError> {
    let k = window.cutoff;
    let x_max = length * k + 4.0;
    let f = |r: f64| {
        let j0 = bessel_jy_limited(0.0, length * r, 1.0, x_max).map(|v| v.j).unwrap_or(f64::NAN);
        chi_profile(r / k) * j0 * (t * r).cos() * r
    };
    let half = 0.5 * k;
    Ok(integrate_gk(&f, 0.0, half, QUAD_TOL)? + integrate_gk(&f, half, k, QUAD_TOL)?)
}

/// Fit the trace around each t = |d| and report the kernel weights.
///
/// Preconditions enforced here: the lattice passes the genericity check up
/// to the largest |d| requested, and each window contains no other lattice
/// length.
pub fn torus_peak_weights(
    trace: &TraceSamples,
    problem: &TorusProblem,
    ds: &[(i32, i32)],
    half_width: f64,
) -> Result<Vec<TorusWeight>, TraceError> {
    if ds.is_empty() {
        return Ok(Vec::new());
    }
    let lattice = &problem.lattice;
    let max_len = ds
        .iter()
        .map(|&(m1, m2)| lattice.vector(m1, m2).norm())
        .fold(0.0f64, f64::max);
    let bound = max_len + 1.0;
    let gen = lattice_genericity(lattice, bound);
    if !gen.pass {
        let (d, d_prime) = gen.witness.unwrap();
        return Err(TraceError::GenericityFailure { bound, d, d_prime });
    }
    // all distinct lattice lengths up to the bound (one per ± pair suffices)
    let covol = lattice.covolume();
    let b1 = (bound * lattice.e2().norm() / covol).ceil() as i32 + 1;
    let b2 = (bound * lattice.e1().norm() / covol).ceil() as i32 + 1;
    let mut norms = Vec::new();
    for m1 in -b1..=b1 {
        for m2 in -b2..=b2 {
            if m1 < 0 || (m1 == 0 && m2 <= 0) {
                continue;
            }
            let n = lattice.vector(m1, m2).norm();
            if n <= bound {
                norms.push(n);
            }
        }
    }
    norms.sort_by(f64::total_cmp);

    let mut out = Vec::with_capacity(ds.len());
    for &(m1, m2) in ds {
        let length = lattice.vector(m1, m2).norm();
        if length == 0.0 {
            return Err(TraceError::InvalidParameter("zero lattice vector requested".into()));
        }
        for &n in &norms {
            if (n - length).abs() > 1e-9 * length && (n - length).abs() < half_width {
                return Err(TraceError::IsolationViolation {
                    target: length,
                    intruder: n,
                    half_width,
                });
            }
        }
        let idx = trace.window_indices(length, half_width);
        if idx.len() < 6 {
            return Err(TraceError::InvalidParameter(format!(
                "only {} samples inside the window at |d| = {length}",
                idx.len()
            )));
        }
        let mut a = DMatrix::<f64>::zeros(idx.len(), 4);
        let mut y = DVector::<f64>::zeros(idx.len());
        for (row, &i) in idx.iter().enumerate() {
            let t = trace.times[i];
            let tau = t - length;
            a[(row, 0)] = torus_kernel(&trace.window, length, t)?;
            a[(row, 1)] = 1.0;
            a[(row, 2)] = tau;
            a[(row, 3)] = tau * tau;
            y[row] = trace.values[i];
        }
        let y_norm = y.norm();
        let svd = a.clone().svd(true, true);
        let x = svd
            .solve(&y, 1e-13)
            .map_err(|e| TraceError::InvalidParameter(format!("least-squares solve failed: {e}")))?;
        let residual = (&a * &x - &y).norm() / y_norm.max(1e-300);
        out.push(TorusWeight { d: (m1, m2), length, weight: x[0], residual });
    }
    Ok(out)
}
