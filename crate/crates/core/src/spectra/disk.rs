//! Dirichlet spectrum of the flux disk.
//!
//! Separation of variables turns H = (i∇+A)² with an ideal flux line at the
//! center into Bessel problems of order ν = |m + α/(2π)| per angular channel
//! m; the eigenfrequencies are k = j_{ν,n}/R. Channels are enumerated up to
//! ν ≤ K·R + 10, beyond which no zero fits below the cutoff (j_{ν,1} > ν).

use super::zeros::bessel_j_zeros;
use super::{check_flux, sort_modes, Mode, SpectraError, Spectrum, SpectrumEntry};
use rayon::prelude::*;

/// Flux disk/annulus geometry: outer radius R, inner radius r0 (0 for the
/// plain disk), flux α through the center.
///
/// A scalar electric potential V is deliberately unsupported: it does not
/// move the leading trace singularities this crate studies.
#[derive(Debug, Clone, Copy)]
pub struct DiskFluxProblem {
    pub r_outer: f64,
    pub r_inner: f64,
    pub alpha: f64,
}

impl DiskFluxProblem {
    /// Validates 0 ≤ r_inner < r_outer and |α| < 4π.
    pub fn new(r_outer: f64, r_inner: f64, alpha: f64) -> Result<Self, SpectraError> {
        if !(r_outer > 0.0) || !(r_inner >= 0.0) || r_inner >= r_outer {
            return Err(SpectraError::InvalidGeometry(format!(
                "need 0 <= r_inner < r_outer, got r_inner={r_inner}, r_outer={r_outer}"
            )));
        }
        check_flux(alpha)?;
        Ok(Self { r_outer, r_inner, alpha })
    }

    /// Disk of radius R with flux α (empty obstacle).
    pub fn disk(r_outer: f64, alpha: f64) -> Result<Self, SpectraError> {
        Self::new(r_outer, 0.0, alpha)
    }

    /// Effective Bessel order of angular channel m.
    pub fn order(&self, m: i32) -> f64 {
        (m as f64 + self.alpha / (2.0 * std::f64::consts::PI)).abs()
    }

    /// Domain area (Weyl-law normalization).
    pub fn area(&self) -> f64 {
        std::f64::consts::PI * (self.r_outer * self.r_outer - self.r_inner * self.r_inner)
    }
}

/// Angular channels m whose order ν can possibly contribute eigenvalues
/// below the cutoff: ν ≤ K·R + margin.
pub(crate) fn channel_range(p: &DiskFluxProblem, k_cutoff: f64) -> Vec<i32> {
    let nu_cap = k_cutoff * p.r_outer + 10.0;
    let shift = p.alpha / (2.0 * std::f64::consts::PI);
    let m_lo = (-nu_cap - shift).floor() as i32;
    let m_hi = (nu_cap - shift).ceil() as i32;
    (m_lo..=m_hi).filter(|&m| p.order(m) <= nu_cap).collect()
}

/// Complete Dirichlet spectrum of the flux disk up to λ ≤ K².
pub fn disk_flux_spectrum(p: &DiskFluxProblem, k_cutoff: f64) -> Result<Spectrum, SpectraError> {
    if p.r_inner != 0.0 {
        return Err(SpectraError::InvalidGeometry(
            "disk solver requires r_inner = 0; use annulus_flux_spectrum".into(),
        ));
    }
    if !(k_cutoff > 0.0) {
        return Err(SpectraError::InvalidGeometry(format!(
            "cutoff must be positive, got {k_cutoff}"
        )));
    }
    let channels = channel_range(p, k_cutoff);
    // parallel per channel; indexed collect keeps a thread-count-independent
    // order before the global sort
    let per_channel: Vec<Result<Vec<Mode>, SpectraError>> = channels
        .par_iter()
        .map(|&m| {
            let nu = p.order(m);
            let zeros = bessel_j_zeros(nu, k_cutoff * p.r_outer)?;
            Ok(zeros
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let k = j / p.r_outer;
                    Mode { m, nu, n: i as u32 + 1, k, lambda: k * k }
                })
                .collect())
        })
        .collect();
    let mut modes = Vec::new();
    for r in per_channel {
        modes.extend(r?);
    }
    sort_modes(&mut modes);
    Ok(Spectrum {
        entries: modes.into_iter().map(SpectrumEntry::Circular).collect(),
        cutoff: k_cutoff,
        complete: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(DiskFluxProblem::new(1.0, 0.0, 13.0).is_err()); // 13 > 4π
        assert!(DiskFluxProblem::new(0.0, 0.0, 0.0).is_err());
        assert!(DiskFluxProblem::new(1.0, 1.0, 0.0).is_err());
        assert!(disk_flux_spectrum(&DiskFluxProblem::new(1.0, 0.5, 0.0).unwrap(), 10.0).is_err());
    }

    #[test]
    fn zero_flux_channel_symmetry() {
        let p = DiskFluxProblem::disk(1.0, 0.0).unwrap();
        let s = disk_flux_spectrum(&p, 12.0).unwrap();
        // m and −m give identical λ at α = 0, so every eigenvalue with m ≠ 0
        // appears twice
        let mut seen = std::collections::HashMap::<u64, i32>::new();
        for e in &s.entries {
            if let SpectrumEntry::Circular(mode) = e {
                *seen.entry(mode.lambda.to_bits()).or_insert(0) += mode.m.signum().max(0) - i32::from(mode.m < 0);
            }
        }
        for (_, balance) in seen {
            assert_eq!(balance, 0, "m and -m channels must pair at zero flux");
        }
    }
}
