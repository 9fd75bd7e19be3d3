//! Isolation of a target length inside the periodic length spectrum.

use crate::billiards::LengthSpectrum;

/// Outcome of the isolation check around one target length.
#[derive(Debug, Clone)]
pub struct IsolationReport {
    pub pass: bool,
    pub target: f64,
    pub half_width: f64,
    /// nearest length that is not the target itself (whether or not it
    /// intrudes)
    pub nearest_competitor: Option<f64>,
    /// distance to that competitor
    pub gap: Option<f64>,
    /// obstacle band overlapping the window, if any
    pub band_overlap: Option<(f64, f64)>,
    /// accumulation point of whispering-gallery lengths (2πR); lengths
    /// cluster just below it, far from any target this crate fits
    pub whispering_accumulation: f64,
}

/// Check that no other periodic length (or obstacle band) intersects
/// (target − half_width, target + half_width).
///
/// Lengths within 1e−9·target of the target are treated as the target
/// itself; the multiplicity bookkeeping of the length spectrum keeps
/// congruent families merged already.
pub fn verify_isolation(lengths: &LengthSpectrum, target: f64, half_width: f64) -> IsolationReport {
    let self_tol = 1e-9 * target.max(1.0);
    let mut nearest: Option<f64> = None;
    let mut gap = f64::INFINITY;
    for e in &lengths.entries {
        let d = (e.length - target).abs();
        if d <= self_tol {
            continue;
        }
        if d < gap {
            gap = d;
            nearest = Some(e.length);
        }
    }
    let mut band_overlap = None;
    for &(lo, hi) in &lengths.obstacle_bands {
        if lo < target + half_width && hi > target - half_width {
            band_overlap = Some((lo, hi));
            break;
        }
    }
    let pass = gap >= half_width && band_overlap.is_none();
    IsolationReport {
        pass,
        target,
        half_width,
        nearest_competitor: nearest,
        gap: nearest.map(|_| gap),
        band_overlap,
        whispering_accumulation: lengths.whispering_sup,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::billiards::{length_spectrum, Geometry};

    #[test]
    fn triangle_is_isolated_at_0_3_but_not_0_5() {
        let lengths = length_spectrum(&Geometry::disk(1.0), 12.0, 40);
        let l3 = 3.0 * 3.0f64.sqrt();
        let r = verify_isolation(&lengths, l3, 0.3);
        assert!(r.pass);
        // nearest competitor is the square, 4√2, at distance ≈ 0.460
        let gap = r.gap.unwrap();
        assert!((r.nearest_competitor.unwrap() - 4.0 * 2.0f64.sqrt()).abs() < 1e-12);
        assert!((gap - (4.0 * 2.0f64.sqrt() - l3)).abs() < 1e-12);
        assert!(!verify_isolation(&lengths, l3, 0.5).pass);
    }

    #[test]
    fn diameter_window_reports_accumulation_far_away() {
        let lengths = length_spectrum(&Geometry::disk(1.0), 12.0, 40);
        let r = verify_isolation(&lengths, 4.0, 0.3);
        assert!(r.pass);
        // whispering-gallery lengths pile up near 2π, not near the diameter
        assert!((r.whispering_accumulation - 2.0 * std::f64::consts::PI).abs() < 1e-15);
        assert!(r.gap.unwrap() > 1.0);
    }
}
