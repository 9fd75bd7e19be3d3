//! Closed-form singularity predictions for inscribed N-gon orbits.
//!
//! At the length L_N = 2NR sin(π/N) the band-limited trace develops a
//! one-sided (t−L)^{−3/2} singularity. Per traversal orientation its
//! coefficient is
//!
//!   ± 2^{−5/2} · h^{3/2} · N^{−1/2} · cos(α_γ),   h = 2R sin(π/N),
//!
//! with the sign prefactor (−1)^{(N−1)/2} and the (t−L)₊ side for N odd,
//! (−1)^{N/2−1} and the (t−L)₋ side for N even. For N ≥ 3 the trace sees two
//! congruent orbit families (counterclockwise and clockwise, holonomies ±α
//! with equal cosine), so the observable coefficient is twice the
//! per-orientation value; the diameter N = 2 has a single family.

/// Which one-sided distribution the singular term multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularSide {
    /// (t − L)₊^{−3/2}
    Plus,
    /// (t − L)₋^{−3/2}
    Minus,
}

/// Prediction for the leading trace singularity of one inscribed-polygon
/// length.
#[derive(Debug, Clone, Copy)]
pub struct SingularityPrediction {
    pub n_sides: u32,
    /// orbit length L = 2NR sin(π/N)
    pub length: f64,
    pub side: SingularSide,
    /// (−1)^{(N−1)/2} for N odd, (−1)^{N/2−1} for N even
    pub sign_prefactor: f64,
    /// signed coefficient of one traversal orientation:
    /// sign · 2^{−5/2} h^{3/2} N^{−1/2} cos α
    pub coeff_per_orientation: f64,
    /// congruent orientation families sharing the length (2 for N ≥ 3)
    pub orientation_multiplicity: u32,
    /// what a fit of the full trace should recover:
    /// coeff_per_orientation × orientation_multiplicity
    pub trace_coefficient: f64,
    /// flux α_γ the prediction was evaluated at
    pub flux: f64,
}

/// Closed-form prediction for the N-gon singularity at flux α.
///
/// N ≥ 2 (N = 2 is the diameter, treated as even).
pub fn predict_singularity(n_sides: u32, r_outer: f64, alpha: f64) -> SingularityPrediction {
    assert!(n_sides >= 2, "inscribed polygons need at least 2 sides");
    assert!(r_outer > 0.0, "radius must be positive");
    let n = n_sides as f64;
    let h = 2.0 * r_outer * (std::f64::consts::PI / n).sin();
    let length = n * h;
    let (side, sign_prefactor) = if n_sides % 2 == 1 {
        (SingularSide::Plus, if ((n_sides - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    } else {
        (SingularSide::Minus, if (n_sides / 2 - 1) % 2 == 0 { 1.0 } else { -1.0 })
    };
    let magnitude = 2.0f64.powf(-2.5) * h.powf(1.5) / n.sqrt();
    let coeff_per_orientation = sign_prefactor * magnitude * alpha.cos();
    let orientation_multiplicity = if n_sides == 2 { 1 } else { 2 };
    SingularityPrediction {
        n_sides,
        length,
        side,
        sign_prefactor,
        coeff_per_orientation,
        orientation_multiplicity,
        trace_coefficient: coeff_per_orientation * orientation_multiplicity as f64,
        flux: alpha,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_reference_values() {
        let p = predict_singularity(3, 1.0, 0.0);
        assert_eq!(p.side, SingularSide::Plus);
        assert_eq!(p.sign_prefactor, -1.0);
        let expect = -(2.0f64.powf(-2.5)) * 3.0f64.powf(0.25);
        assert!((p.coeff_per_orientation - expect).abs() < 1e-15);
        assert!((p.coeff_per_orientation - (-0.2326512147755249)).abs() < 1e-12);
        assert!((p.length - 3.0 * 3.0f64.sqrt()).abs() < 1e-14);
        assert_eq!(p.orientation_multiplicity, 2);
        assert!((p.trace_coefficient - 2.0 * expect).abs() < 1e-15);
    }

    #[test]
    fn square_reference_values() {
        let p = predict_singularity(4, 1.0, 0.0);
        assert_eq!(p.side, SingularSide::Minus);
        assert_eq!(p.sign_prefactor, -1.0);
        // magnitude ¼·(sin π/4)^{3/2} = 2^{−11/4}
        let expect_mag = 2.0f64.powf(-2.75);
        assert!((p.coeff_per_orientation.abs() - expect_mag).abs() < 1e-15);
        assert!((expect_mag - 0.148650).abs() < 1e-6);
        assert!(p.coeff_per_orientation < 0.0);
        assert!((p.length - 4.0 * 2.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn cosine_factor_and_scaling() {
        // α = π/2 kills the coefficient for every N
        for n in 2..10 {
            let p = predict_singularity(n, 1.0, std::f64::consts::FRAC_PI_2);
            assert!(p.coeff_per_orientation.abs() < 1e-16);
        }
        // R^{3/2} scaling
        let a = predict_singularity(3, 1.0, 0.0);
        let b = predict_singularity(3, 2.0, 0.0);
        assert!((b.coeff_per_orientation / a.coeff_per_orientation - 2.0f64.powf(1.5)).abs() < 1e-12);
        // diameter: even rules with positive prefactor, single family
        let d = predict_singularity(2, 1.0, 0.0);
        assert_eq!(d.side, SingularSide::Minus);
        assert_eq!(d.sign_prefactor, 1.0);
        assert_eq!(d.orientation_multiplicity, 1);
    }
}
