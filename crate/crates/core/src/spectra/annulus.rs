//! Dirichlet spectrum of the flux annulus r0 < r < R.
//!
//! Eigenfrequencies per angular channel are the k-zeros of the cross-product
//! J_ν(k·r0)·Y_ν(k·R) − J_ν(k·R)·Y_ν(k·r0). Near k·r0 ≪ ν the Y factor grows
//! like (2/k r0)^ν, so the inner pair is rescaled before combining; the
//! rescaling is positive and preserves sign changes, which is all the
//! bracketing scan needs.

use super::bessel::bessel_jy_limited;
use super::disk::{channel_range, DiskFluxProblem};
use super::{sort_modes, Mode, SpectraError, Spectrum, SpectrumEntry};
use rayon::prelude::*;

/// Scaled cross-product whose zeros in k are the annulus eigenfrequencies.
fn cross_product_scaled(
    nu: f64,
    k: f64,
    r0: f64,
    r_outer: f64,
    x_max: f64,
) -> Result<f64, SpectraError> {
    let nu_max = super::bessel::DEFAULT_NU_MAX;
    let inner = bessel_jy_limited(nu, k * r0, nu_max, x_max)?;
    let outer = bessel_jy_limited(nu, k * r_outer, nu_max, x_max)?;
    let scale = inner.y.abs().max(1.0);
    Ok((inner.j / scale) * outer.y - outer.j * (inner.y / scale))
}

/// Complete Dirichlet spectrum of the flux annulus up to λ ≤ K².
pub fn annulus_flux_spectrum(p: &DiskFluxProblem, k_cutoff: f64) -> Result<Spectrum, SpectraError> {
    if p.r_inner <= 0.0 {
        return Err(SpectraError::InvalidGeometry(
            "annulus solver requires r_inner > 0; use disk_flux_spectrum".into(),
        ));
    }
    if !(k_cutoff > 0.0) {
        return Err(SpectraError::InvalidGeometry(format!(
            "cutoff must be positive, got {k_cutoff}"
        )));
    }
    let gap = p.r_outer - p.r_inner;
    // radial spacing of eigenfrequencies approaches π/(R−r0) from below only
    // by a small margin; stay safely under it and under the disk-zero spacing
    let step = (2.5 / p.r_outer).min(0.75 * std::f64::consts::PI / gap);
    let x_max = (k_cutoff + 2.0 * step) * p.r_outer + 4.0;
    let channels = channel_range(p, k_cutoff);

    let per_channel: Vec<Result<Vec<Mode>, SpectraError>> = channels
        .par_iter()
        .map(|&m| {
            let nu = p.order(m);
            let f = |k: f64| cross_product_scaled(nu, k, p.r_inner, p.r_outer, x_max);
            // no eigenfrequency below j_{ν,1}/R (domain monotonicity: the
            // annulus only raises the disk's eigenvalues)
            let mut lo = ((nu + 0.5 * nu.max(1.0).powf(1.0 / 3.0)) / p.r_outer).max(0.01 * step);
            let mut ks = Vec::new();
            if lo < k_cutoff {
                let mut f_lo = f(lo)?;
                while lo < k_cutoff {
                    let hi = (lo + step).min(k_cutoff);
                    let f_hi = f(hi)?;
                    if f_lo == 0.0 {
                        ks.push(lo);
                    } else if f_lo * f_hi < 0.0 {
                        ks.push(bisect(&f, lo, hi, f_lo)?);
                    } else if f_hi == 0.0 && hi == k_cutoff {
                        ks.push(hi);
                    }
                    lo = hi;
                    f_lo = f_hi;
                }
            }
            Ok(ks
                .iter()
                .enumerate()
                .map(|(i, &k)| Mode { m, nu, n: i as u32 + 1, k, lambda: k * k })
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

/// Plain bisection to ≈1e−13 relative; the cross-product derivative is not
/// worth wiring through the rescaling.
fn bisect<F>(f: &F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64, SpectraError>
where
    F: Fn(f64) -> Result<f64, SpectraError>,
{
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            return Ok(mid);
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
        if hi - lo <= 1e-14 * hi.max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_reduces_to_sine_gap() {
        // ν = 1/2 collapses the cross-product to sin(k(R−r0)): k = nπ/(R−r0)
        let p = DiskFluxProblem::new(1.0, 0.5, std::f64::consts::PI).unwrap();
        let s = annulus_flux_spectrum(&p, 30.0).unwrap();
        let ks: Vec<f64> = s
            .entries
            .iter()
            .filter_map(|e| match e {
                SpectrumEntry::Circular(m) if m.m == 0 => Some(m.k),
                _ => None,
            })
            .collect();
        assert!(ks.len() >= 4);
        for (i, k) in ks.iter().enumerate() {
            let expect = (i as f64 + 1.0) * 2.0 * std::f64::consts::PI;
            assert!((k - expect).abs() <= 1e-10, "k[{i}] = {k} vs {expect}");
        }
    }
}
