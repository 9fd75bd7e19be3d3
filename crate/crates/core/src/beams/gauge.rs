//! Zero-field gauge potentials and their line integrals.

use super::BeamsError;
use crate::billiards::Vec2;
use crate::quad::integrate_gk;
use crate::spectra::torus::Lattice;
use num_complex::Complex64;

/// One Fourier mode of a periodic potential: coefficient of e^{2πi δ·x} with
/// δ = m1·e1* + m2·e2*. Real fields list conjugate pairs explicitly.
#[derive(Debug, Clone, Copy)]
pub struct FourierCoeff {
    pub m1: i32,
    pub m2: i32,
    pub ax: Complex64,
    pub ay: Complex64,
}

/// A magnetic potential with zero field in the domain of interest.
#[derive(Debug, Clone)]
pub enum GaugeField {
    /// Flux line of strength `alpha` at `center`:
    /// A(x) = (α/2π)·(−y, x)/|x−center|² (curl-free away from the center).
    IdealFlux { alpha: f64, center: Vec2 },
    /// Constant covector on a torus.
    ConstantOnTorus { a0: Vec2 },
    /// Constant part plus periodic trigonometric part on a torus.
    FourierPeriodic { lattice: Lattice, a0: Vec2, coeffs: Vec<FourierCoeff> },
}

impl GaugeField {
    /// Pointwise value A(x). For `FourierPeriodic` the imaginary part of the
    /// coefficient sum is dropped; real fields must list conjugate pairs.
    pub fn vector_potential(&self, x: Vec2) -> Vec2 {
        match self {
            GaugeField::IdealFlux { alpha, center } => {
                let r = x - center;
                let s = alpha / (2.0 * std::f64::consts::PI * r.norm_squared());
                Vec2::new(-r.y * s, r.x * s)
            }
            GaugeField::ConstantOnTorus { a0 } => *a0,
            GaugeField::FourierPeriodic { lattice, a0, coeffs } => {
                let mut v = *a0;
                for c in coeffs {
                    let delta = lattice.dual_vector(c.m1, c.m2);
                    let ph = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * delta.dot(&x));
                    v.x += (c.ax * ph).re;
                    v.y += (c.ay * ph).re;
                }
                v
            }
        }
    }

    /// Exact line integral of A along the straight segment from `p` to `q`.
    fn segment_integral(&self, p: Vec2, q: Vec2) -> Result<f64, BeamsError> {
        match self {
            GaugeField::IdealFlux { alpha, center } => {
                // ∫ A·dx over the segment is (α/2π) times the signed angle
                // subtended at the flux center.
                let u = p - center;
                let v = q - center;
                let cross = u.x * v.y - u.y * v.x;
                let dot = u.dot(&v);
                Ok(alpha / (2.0 * std::f64::consts::PI) * cross.atan2(dot))
            }
            GaugeField::ConstantOnTorus { a0 } => Ok(a0.dot(&(q - p))),
            GaugeField::FourierPeriodic { .. } => {
                let d = q - p;
                let len = d.norm();
                if len == 0.0 {
                    return Ok(0.0);
                }
                let f = |s: f64| self.vector_potential(p + s * d).dot(&d);
                Ok(integrate_gk(f, 0.0, 1.0, 1e-10 / len.max(1.0))?)
            }
        }
    }

    /// Line integral of A along a polyline.
    pub fn line_integral(&self, points: &[Vec2]) -> Result<f64, BeamsError> {
        let mut sum = 0.0;
        for w in points.windows(2) {
            sum += self.segment_integral(w[0], w[1])?;
        }
        Ok(sum)
    }
}

/// Holonomy ∫A·dx around a closed polyline (orientation-sensitive).
///
/// For a flux line this is α × (winding number about the center), exactly.
/// Closure is required to 1e−10 relative to the polyline diameter; for torus
/// fields "closed" means the endpoints differ by a lattice vector.
pub fn holonomy(gauge: &GaugeField, points: &[Vec2]) -> Result<f64, BeamsError> {
    if points.len() < 2 {
        return Err(BeamsError::NonClosedPath { gap: f64::INFINITY });
    }
    let first = points[0];
    let last = points[points.len() - 1];
    let scale = points
        .iter()
        .map(|p| (p - first).norm())
        .fold(1.0f64, f64::max);
    let gap = match gauge {
        GaugeField::ConstantOnTorus { .. } | GaugeField::FourierPeriodic { .. } => {
            // lattice-periodic fields: closure up to a lattice vector
            match gauge {
                GaugeField::FourierPeriodic { lattice, .. } => lattice.distance_to_lattice(last - first),
                GaugeField::ConstantOnTorus { .. } => 0.0, // any displacement is a valid loop class
                _ => unreachable!(),
            }
        }
        GaugeField::IdealFlux { .. } => (last - first).norm(),
    };
    if gap > 1e-10 * scale {
        return Err(BeamsError::NonClosedPath { gap });
    }
    gauge.line_integral(points)
}

/// Largest |∂₁A₂ − ∂₂A₁| over sample points, by central differences —
/// a zero-field validity check.
pub fn max_curl_on_samples(gauge: &GaugeField, samples: &[Vec2]) -> f64 {
    let h = 1e-5;
    samples
        .iter()
        .map(|&x| {
            let dx = Vec2::new(h, 0.0);
            let dy = Vec2::new(0.0, h);
            let d1a2 = (gauge.vector_potential(x + dx).y - gauge.vector_potential(x - dx).y) / (2.0 * h);
            let d2a1 = (gauge.vector_potential(x + dy).x - gauge.vector_potential(x - dy).x) / (2.0 * h);
            (d1a2 - d2a1).abs()
        })
        .fold(0.0, f64::max)
}

/// Polyline of a reflected ray path (start, reflection points, endpoint).
pub fn path_polyline(path: &crate::billiards::ReflectedRayPath) -> Vec<Vec2> {
    let mut pts = Vec::with_capacity(path.events.len() + 2);
    pts.push(path.z);
    pts.extend(path.events.iter().map(|e| e.point));
    pts.push(path.position(path.t_max));
    pts
}

/// Polyline of the ray path truncated at time `t`.
pub fn path_polyline_until(path: &crate::billiards::ReflectedRayPath, t: f64) -> Vec<Vec2> {
    let mut pts = vec![path.z];
    pts.extend(path.events.iter().take_while(|e| e.t <= t).map(|e| e.point));
    pts.push(path.position(t));
    pts
}
