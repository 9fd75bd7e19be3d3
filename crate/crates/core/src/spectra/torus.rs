//! Flat-torus spectra, lattice utilities, and gauge reduction.
//!
//! For a lattice L with dual L*, the operator (i∇+A)² with a curl-free
//! periodic potential is gauge equivalent to the constant potential A₀, and
//! its spectrum is the closed-form lattice sum λ_δ = |2πδ − A₀|², δ ∈ L*.
//! Genericity of the length spectrum (|d′| = |d| only for d′ = ±d) is what
//! lets per-length trace weights be attributed to a single vector pair.

use super::{LatticePoint, SpectraError, Spectrum, SpectrumEntry};
use crate::beams::GaugeField;
use crate::billiards::Vec2;
use num_complex::Complex64;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// A planar lattice with its dual basis (eᵢ* · eⱼ = δᵢⱼ).
#[derive(Debug, Clone, Copy)]
pub struct Lattice {
    e1: Vec2,
    e2: Vec2,
    d1: Vec2,
    d2: Vec2,
}

impl Lattice {
    pub fn new(e1: Vec2, e2: Vec2) -> Result<Self, SpectraError> {
        let det = e1.x * e2.y - e1.y * e2.x;
        let scale = e1.norm().max(e2.norm());
        if !(det.abs() > 1e-12 * scale * scale) {
            return Err(SpectraError::InvalidGeometry(format!(
                "lattice basis degenerate: e1={:?}, e2={:?}",
                (e1.x, e1.y),
                (e2.x, e2.y)
            )));
        }
        // dual rows = inverse of the basis matrix
        let d1 = Vec2::new(e2.y / det, -e2.x / det);
        let d2 = Vec2::new(-e1.y / det, e1.x / det);
        Ok(Self { e1, e2, d1, d2 })
    }

    pub fn e1(&self) -> Vec2 {
        self.e1
    }

    pub fn e2(&self) -> Vec2 {
        self.e2
    }

    /// Fundamental-cell area |e₁ × e₂|.
    pub fn covolume(&self) -> f64 {
        (self.e1.x * self.e2.y - self.e1.y * self.e2.x).abs()
    }

    /// Lattice vector m₁e₁ + m₂e₂.
    pub fn vector(&self, m1: i32, m2: i32) -> Vec2 {
        self.e1 * m1 as f64 + self.e2 * m2 as f64
    }

    /// Dual-lattice vector m₁e₁* + m₂e₂*.
    pub fn dual_vector(&self, m1: i32, m2: i32) -> Vec2 {
        self.d1 * m1 as f64 + self.d2 * m2 as f64
    }

    /// Distance from v to the nearest lattice point.
    pub fn distance_to_lattice(&self, v: Vec2) -> f64 {
        // coordinates of v in the basis, then search the rounding neighborhood
        let s1 = self.d1.dot(&v);
        let s2 = self.d2.dot(&v);
        let mut best = f64::INFINITY;
        for i in -1..=1 {
            for j in -1..=1 {
                let m1 = s1.round() + i as f64;
                let m2 = s2.round() + j as f64;
                let p = self.e1 * m1 + self.e2 * m2;
                best = best.min((v - p).norm());
            }
        }
        best
    }
}

/// Torus problem: lattice plus the constant part of the potential.
#[derive(Debug, Clone, Copy)]
pub struct TorusProblem {
    pub lattice: Lattice,
    pub a0: Vec2,
}

/// Closed-form spectrum λ_δ = |2πδ − A₀|² up to λ ≤ K², sorted by
/// (λ, m₁, m₂).
pub fn torus_spectrum(p: &TorusProblem, k_cutoff: f64) -> Spectrum {
    let radius = (k_cutoff + p.a0.norm()) / TWO_PI;
    // biorthogonality: m₁ = δ·e₁, so |m₁| ≤ |δ|·|e₁|
    let b1 = (radius * p.lattice.e1().norm()).ceil() as i32 + 1;
    let b2 = (radius * p.lattice.e2().norm()).ceil() as i32 + 1;
    let k2 = k_cutoff * k_cutoff;
    let mut entries = Vec::new();
    for m1 in -b1..=b1 {
        for m2 in -b2..=b2 {
            let delta = p.lattice.dual_vector(m1, m2);
            let shifted = delta * TWO_PI - p.a0;
            let lambda = shifted.norm_squared();
            if lambda <= k2 {
                entries.push(LatticePoint { m1, m2, delta, lambda });
            }
        }
    }
    entries.sort_by(|a, b| {
        a.lambda
            .total_cmp(&b.lambda)
            .then(a.m1.cmp(&b.m1))
            .then(a.m2.cmp(&b.m2))
    });
    Spectrum {
        entries: entries.into_iter().map(SpectrumEntry::Lattice).collect(),
        cutoff: k_cutoff,
        complete: true,
    }
}

/// Result of the exhaustive norm-coincidence search.
#[derive(Debug, Clone)]
pub struct GenericityReport {
    pub pass: bool,
    pub bound: f64,
    /// basis coordinates of a coinciding pair (|d| = |d′|, d′ ≠ ±d)
    pub witness: Option<((i32, i32), (i32, i32))>,
}

/// Exhaustively check that |d′| = |d| (to relative 1e−9) forces d′ = ±d over
/// all lattice vectors with |d| ≤ bound.
pub fn lattice_genericity(lattice: &Lattice, bound: f64) -> GenericityReport {
    let covol = lattice.covolume();
    let b1 = (bound * lattice.e2().norm() / covol).ceil() as i32 + 1;
    let b2 = (bound * lattice.e1().norm() / covol).ceil() as i32 + 1;
    // one representative per ±pair: lexicographically positive coordinates
    let mut reps: Vec<(f64, i32, i32)> = Vec::new();
    for m1 in -b1..=b1 {
        for m2 in -b2..=b2 {
            if m1 < 0 || (m1 == 0 && m2 <= 0) {
                continue;
            }
            let norm = lattice.vector(m1, m2).norm();
            if norm <= bound {
                reps.push((norm, m1, m2));
            }
        }
    }
    reps.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    for w in reps.windows(2) {
        let (na, a1, a2) = w[0];
        let (nb, b1m, b2m) = w[1];
        if (nb - na).abs() <= 1e-9 * na.max(nb) {
            return GenericityReport {
                pass: false,
                bound,
                witness: Some(((b1m, b2m), (a1, a2))),
            };
        }
    }
    GenericityReport { pass: true, bound, witness: None }
}

/// One Fourier coefficient of the gauge scalar φ.
#[derive(Debug, Clone, Copy)]
pub struct PhiCoeff {
    pub m1: i32,
    pub m2: i32,
    pub value: Complex64,
}

/// Split a curl-free periodic potential A into a constant A₀ plus ∇φ with φ
/// periodic and mean-zero: φ_δ = δ·A_δ / (2πi·δ·δ).
pub fn reduce_to_constant_gauge(
    field: &GaugeField,
) -> Result<(Vec2, Vec<PhiCoeff>), SpectraError> {
    match field {
        GaugeField::ConstantOnTorus { a0 } => Ok((*a0, Vec::new())),
        GaugeField::IdealFlux { .. } => Err(SpectraError::InvalidGeometry(
            "ideal flux line is not a periodic potential; gauge reduction applies to torus fields"
                .into(),
        )),
        GaugeField::FourierPeriodic { lattice, a0, coeffs } => {
            let mut a0_total = *a0;
            let mut phis = Vec::new();
            let mut worst = 0.0f64;
            for c in coeffs {
                if c.m1 == 0 && c.m2 == 0 {
                    // constant Fourier term folds into A₀ (real part is the field)
                    a0_total += Vec2::new(c.ax.re, c.ay.re);
                    continue;
                }
                let delta = lattice.dual_vector(c.m1, c.m2);
                let amp = (c.ax.norm_sqr() + c.ay.norm_sqr()).sqrt();
                if amp == 0.0 {
                    continue;
                }
                // zero-field condition: the curl of this mode, δ × A_δ, must vanish
                let cross = (delta.x * c.ay - delta.y * c.ax).norm();
                let rel = cross / (delta.norm() * amp);
                worst = worst.max(rel);
                if rel > 1e-10 {
                    continue; // keep scanning so the error reports the worst mode
                }
                let dot = delta.x * c.ax + delta.y * c.ay;
                let value = dot / (Complex64::new(0.0, TWO_PI) * delta.norm_squared());
                phis.push(PhiCoeff { m1: c.m1, m2: c.m2, value });
            }
            if worst > 1e-10 {
                return Err(SpectraError::NotCurlFree(worst));
            }
            Ok((a0_total, phis))
        }
    }
}

/// Convenience: the flux α_j = A₀·e_j around the j-th fundamental cycle of
/// the torus (the gauge-invariant data mod 2π).
pub fn cycle_fluxes(lattice: &Lattice, a0: Vec2) -> (f64, f64) {
    (a0.dot(&lattice.e1()), a0.dot(&lattice.e2()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Lattice {
        Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap()
    }

    #[test]
    fn dual_basis_biorthogonal() {
        let l = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07)).unwrap();
        assert!((l.dual_vector(1, 0).dot(&l.e1()) - 1.0).abs() < 1e-14);
        assert!(l.dual_vector(1, 0).dot(&l.e2()).abs() < 1e-14);
        assert!((l.dual_vector(0, 1).dot(&l.e2()) - 1.0).abs() < 1e-14);
        assert!(l.dual_vector(0, 1).dot(&l.e1()).abs() < 1e-14);
    }

    #[test]
    fn square_lattice_fails_genericity_with_axis_witness() {
        let rep = lattice_genericity(&square(), 10.0);
        assert!(!rep.pass);
        assert_eq!(rep.witness, Some(((1, 0), (0, 1))));
    }

    #[test]
    fn skewed_lattice_passes() {
        let l = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07)).unwrap();
        assert!(lattice_genericity(&l, 10.0).pass);
    }

    #[test]
    fn distance_to_lattice_basics() {
        let l = square();
        assert!(l.distance_to_lattice(Vec2::new(3.0, -2.0)) < 1e-15);
        assert!((l.distance_to_lattice(Vec2::new(0.5, 0.0)) - 0.5).abs() < 1e-15);
    }
}
