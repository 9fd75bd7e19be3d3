//! Inscribed polygon orbits and the length spectrum.

use super::{BilliardsError, Geometry, UnitDirection, Vec2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Counterclockwise,
    Clockwise,
}

/// A regular inscribed N-gon orbit (rotation number 1).
#[derive(Debug, Clone, Copy)]
pub struct OrbitSpec {
    pub n_sides: u32,
    pub r_outer: f64,
    pub orientation: Orientation,
    pub theta0: f64,
    /// side length h = 2R sin(π/N)
    pub side_length: f64,
    /// total length L = N·h
    pub length: f64,
    /// distance of each chord from the center, |w| = R cos(π/N)
    pub chord_distance: f64,
}

impl OrbitSpec {
    pub fn new(n_sides: u32, r_outer: f64, theta0: f64, orientation: Orientation) -> Self {
        let n = n_sides as f64;
        let h = 2.0 * r_outer * (std::f64::consts::PI / n).sin();
        OrbitSpec {
            n_sides,
            r_outer,
            orientation,
            theta0,
            side_length: h,
            length: n * h,
            chord_distance: r_outer * (std::f64::consts::PI / n).cos(),
        }
    }

    /// Signed chord parameter w = z·η⊥ of the representative ray:
    /// positive for counterclockwise traversal.
    pub fn signed_w(&self) -> f64 {
        match self.orientation {
            Orientation::Counterclockwise => self.chord_distance,
            Orientation::Clockwise => -self.chord_distance,
        }
    }

    /// Winding number of the closed orbit about the center.
    pub fn winding(&self) -> i32 {
        match self.orientation {
            Orientation::Counterclockwise => 1,
            Orientation::Clockwise => -1,
        }
    }
}

/// Construct the N-gon orbit and a representative start `(z, η)` at the
/// midpoint of the first side, so the path closes after exactly N
/// reflections at time L.
pub fn ngon_orbit(
    n_sides: u32,
    r_outer: f64,
    theta0: f64,
    orientation: Orientation,
) -> Result<(OrbitSpec, Vec2, UnitDirection), BilliardsError> {
    if n_sides < 2 {
        return Err(BilliardsError::InvalidGeometry(format!(
            "an inscribed polygon needs at least 2 sides, got {n_sides}"
        )));
    }
    if !(r_outer > 0.0) || !r_outer.is_finite() {
        return Err(BilliardsError::InvalidGeometry(format!("bad radius {r_outer}")));
    }
    let spec = OrbitSpec::new(n_sides, r_outer, theta0, orientation);
    let sign = match orientation {
        Orientation::Counterclockwise => 1.0,
        Orientation::Clockwise => -1.0,
    };
    let step = sign * 2.0 * std::f64::consts::PI / n_sides as f64;
    let v0 = r_outer * Vec2::new(theta0.cos(), theta0.sin());
    let v1 = r_outer * Vec2::new((theta0 + step).cos(), (theta0 + step).sin());
    let z = 0.5 * (v0 + v1);
    let eta = UnitDirection::new(v1 - v0)?;
    Ok((spec, z, eta))
}

/// One entry of the length spectrum.
#[derive(Debug, Clone, Copy)]
pub struct LengthEntry {
    pub length: f64,
    /// representative (sides N, rotation number q) realizing the length
    pub n_sides: u32,
    pub rotation: u32,
    /// number of (N, q) classes sharing this length within 1e−12
    pub multiplicity: u32,
}

/// Enumerated periodic-orbit lengths, plus the bands that obstacle-touching
/// families can occupy when an inner obstacle is present.
#[derive(Debug, Clone)]
pub struct LengthSpectrum {
    pub entries: Vec<LengthEntry>,
    /// Intervals (2k(R−r0), 2k(R+r0)) available to orbits with k obstacle
    /// bounces; empty when r_inner = 0.
    pub obstacle_bands: Vec<(f64, f64)>,
    /// Accumulation point 2πR of the whispering-gallery lengths
    /// 2NR sin(π/N) as N → ∞; enumerated lengths approach it from below up
    /// to the N cap.
    pub whispering_sup: f64,
}

/// All lengths 2NR sin(πq/N) of inscribed (N, q) polygon orbits up to
/// `l_max`, N ≤ `n_cap`, merged within 1e−12 with multiplicity.
///
/// Families whose chord distance R cos(πq/N) does not clear the obstacle are
/// excluded; obstacle-touching families are reported as bands, not lengths.
pub fn length_spectrum(g: &Geometry, l_max: f64, n_cap: u32) -> LengthSpectrum {
    let mut raw: Vec<(f64, u32, u32)> = Vec::new();
    for n in 2..=n_cap {
        for q in 1..=(n / 2) {
            let ang = std::f64::consts::PI * q as f64 / n as f64;
            let len = 2.0 * g.r_outer * (n as f64) * ang.sin();
            let chord_dist = g.r_outer * ang.cos();
            if len <= l_max && chord_dist > g.r_inner {
                raw.push((len, n, q));
            }
        }
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut entries: Vec<LengthEntry> = Vec::new();
    for (len, n, q) in raw {
        match entries.last_mut() {
            Some(e) if (len - e.length).abs() <= 1e-12 * len.max(1.0) => e.multiplicity += 1,
            _ => entries.push(LengthEntry { length: len, n_sides: n, rotation: q, multiplicity: 1 }),
        }
    }
    let mut obstacle_bands = Vec::new();
    if g.r_inner > 0.0 {
        let mut k = 1u32;
        loop {
            let lo = 2.0 * k as f64 * (g.r_outer - g.r_inner);
            if lo > l_max {
                break;
            }
            obstacle_bands.push((lo, 2.0 * k as f64 * (g.r_outer + g.r_inner)));
            k += 1;
        }
    }
    LengthSpectrum {
        entries,
        obstacle_bands,
        whispering_sup: 2.0 * std::f64::consts::PI * g.r_outer,
    }
}
