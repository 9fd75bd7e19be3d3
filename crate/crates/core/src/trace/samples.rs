//! Band-limited trace evaluation T_χ(t) = Σ_j χ(√λ_j/K)·cos(t·√λ_j).

use super::window::WindowSpec;
use super::TraceError;
use crate::spectra::Spectrum;
use crate::sum::neumaier_sum;
use rayon::prelude::*;

/// Uniform time grid t_i = start + i·spacing, i = 0..n.
#[derive(Debug, Clone, Copy)]
pub struct TimeGrid {
    pub start: f64,
    pub spacing: f64,
    pub n: usize,
}

impl TimeGrid {
    /// Grid covering [start, end] with spacing ≤ max_spacing (shrunk to fit
    /// an integer number of steps).
    pub fn covering(start: f64, end: f64, max_spacing: f64) -> Result<Self, TraceError> {
        if !(end > start) || !(max_spacing > 0.0) {
            return Err(TraceError::InvalidParameter(format!(
                "bad grid: [{start}, {end}] spacing {max_spacing}"
            )));
        }
        let steps = ((end - start) / max_spacing).ceil() as usize;
        Ok(Self { start, spacing: (end - start) / steps as f64, n: steps + 1 })
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.start + self.spacing * i as f64).collect()
    }
}

/// A sampled band-limited trace.
#[derive(Debug, Clone)]
pub struct TraceSamples {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub window: WindowSpec,
    pub spectrum_cutoff: f64,
    /// Σ χ(√λ/K) — the value at t = 0 and a bound for all samples
    pub weight_sum: f64,
}

impl TraceSamples {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Indices of samples with |t − center| ≤ half_width (+ float slack).
    pub fn window_indices(&self, center: f64, half_width: f64) -> Vec<usize> {
        self.times
            .iter()
            .enumerate()
            .filter(|(_, &t)| (t - center).abs() <= half_width + 1e-12)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Sum the band-limited trace over the grid.
///
/// The spectrum must be complete below the window cutoff. Each sample is a
/// fixed-order compensated sum over the spectrum's stored order, so results
/// are bit-identical regardless of thread count (parallelism is across time
/// samples only).
pub fn bandlimited_trace(
    spectrum: &Spectrum,
    window: &WindowSpec,
    grid: &TimeGrid,
) -> Result<TraceSamples, TraceError> {
    if !spectrum.complete || spectrum.cutoff + 1e-9 < window.cutoff {
        return Err(TraceError::IncompleteSpectrum {
            spectrum_cutoff: spectrum.cutoff,
            window_cutoff: window.cutoff,
        });
    }
    if grid.spacing > window.max_grid_spacing() * (1.0 + 1e-12) {
        return Err(TraceError::InvalidParameter(format!(
            "grid spacing {} exceeds π/(4K) = {}",
            grid.spacing,
            window.max_grid_spacing()
        )));
    }
    // frequencies and weights in spectrum order; χ = 0 tail dropped
    let terms: Vec<(f64, f64)> = spectrum
        .lambdas()
        .map(|l| {
            let k = l.sqrt();
            (k, window.chi(k))
        })
        .filter(|&(_, w)| w != 0.0)
        .collect();
    let weight_sum = neumaier_sum(terms.iter().map(|&(_, w)| w));
    let times = grid.times();
    let values: Vec<f64> = times
        .par_iter()
        .map(|&t| neumaier_sum(terms.iter().map(|&(k, w)| w * (t * k).cos())))
        .collect();
    Ok(TraceSamples {
        times,
        values,
        window: *window,
        spectrum_cutoff: spectrum.cutoff,
        weight_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{Mode, SpectrumEntry};

    fn single_lambda_spectrum(lambda: f64, cutoff: f64) -> Spectrum {
        let k = lambda.sqrt();
        Spectrum {
            entries: vec![SpectrumEntry::Circular(Mode { m: 0, nu: 0.0, n: 1, k, lambda })],
            cutoff,
            complete: true,
        }
    }

    #[test]
    fn single_eigenvalue_is_a_plain_cosine() {
        // λ = 4, K = 100: χ(2/100) = 1, so T_χ(t) = cos 2t
        let s = single_lambda_spectrum(4.0, 100.0);
        let w = WindowSpec::new(100.0).unwrap();
        let grid = TimeGrid::covering(0.0, 1.0, w.max_grid_spacing()).unwrap();
        let tr = bandlimited_trace(&s, &w, &grid).unwrap();
        for (t, v) in tr.times.iter().zip(tr.values.iter()) {
            assert!((v - (2.0 * t).cos()).abs() < 1e-15);
        }
        assert!((tr.weight_sum - 1.0).abs() < 1e-15);
    }

    #[test]
    fn incomplete_spectrum_rejected() {
        let s = single_lambda_spectrum(4.0, 50.0);
        let w = WindowSpec::new(100.0).unwrap();
        let grid = TimeGrid::covering(0.0, 1.0, w.max_grid_spacing()).unwrap();
        assert!(matches!(
            bandlimited_trace(&s, &w, &grid),
            Err(TraceError::IncompleteSpectrum { .. })
        ));
    }

    #[test]
    fn coarse_grid_rejected() {
        let s = single_lambda_spectrum(4.0, 100.0);
        let w = WindowSpec::new(100.0).unwrap();
        let grid = TimeGrid { start: 0.0, spacing: 1.0, n: 4 };
        assert!(matches!(
            bandlimited_trace(&s, &w, &grid),
            Err(TraceError::InvalidParameter(_))
        ));
    }
}
