//! Frequency window: flat through K/2, cos² roll-off to K.

use super::TraceError;

/// Band limit with the C¹ cutoff profile χ(s) = 1 on [0, 1/2],
/// cos²(π(s−1/2)) on (1/2, 1], 0 beyond.
#[derive(Debug, Clone, Copy)]
pub struct WindowSpec {
    /// frequency cutoff K
    pub cutoff: f64,
}

impl WindowSpec {
    pub fn new(cutoff: f64) -> Result<Self, TraceError> {
        if !(cutoff > 0.0) || !cutoff.is_finite() {
            return Err(TraceError::InvalidParameter(format!(
                "window cutoff must be positive, got {cutoff}"
            )));
        }
        Ok(Self { cutoff })
    }

    /// χ(k/K) for a frequency k ≥ 0.
    pub fn chi(&self, k: f64) -> f64 {
        chi_profile(k / self.cutoff)
    }

    /// Largest admissible uniform grid spacing π/(4K).
    pub fn max_grid_spacing(&self) -> f64 {
        0.25 * std::f64::consts::PI / self.cutoff
    }
}

/// The cutoff profile itself, on the normalized frequency s = k/K.
pub fn chi_profile(s: f64) -> f64 {
    if s <= 0.5 {
        1.0
    } else if s < 1.0 {
        let c = (std::f64::consts::PI * (s - 0.5)).cos();
        c * c
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_shape() {
        assert_eq!(chi_profile(0.0), 1.0);
        assert_eq!(chi_profile(0.5), 1.0);
        assert_eq!(chi_profile(1.0), 0.0);
        assert_eq!(chi_profile(2.0), 0.0);
        assert!((chi_profile(0.75) - 0.5).abs() < 1e-15);
        for i in 0..=100 {
            let s = i as f64 / 100.0;
            let v = chi_profile(s);
            assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn profile_is_c1_at_the_joints() {
        // one-sided difference quotients at s = 1/2 and s = 1 agree to O(h)
        let h = 1e-6;
        let d_left = (chi_profile(0.5) - chi_profile(0.5 - h)) / h;
        let d_right = (chi_profile(0.5 + h) - chi_profile(0.5)) / h;
        assert!(d_left.abs() < 1e-5 && d_right.abs() < 1e-5);
        let d_left = (chi_profile(1.0) - chi_profile(1.0 - h)) / h;
        let d_right = (chi_profile(1.0 + h) - chi_profile(1.0)) / h;
        assert!(d_left.abs() < 1e-5 && d_right.abs() < 1e-5);
    }
}
