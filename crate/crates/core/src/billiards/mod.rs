//! Exact billiard dynamics in the disk/annulus and the symplectic
//! linearization of the reflected flow.
//!
//! Rays move at unit speed and reflect specularly off the outer circle
//! `|x| = R` (and the inner circle `|x| = r0` when an obstacle is present).
//! The linearization is taken with the homogeneous convention: positions are
//! degree-0 and momenta degree-1 in the initial covector, so time is always
//! arclength.

mod frame;
mod orbit;
mod ray;

pub use frame::{
    focal_times, frame_at, triangle_frame_closed_form, triangle_start, JacobiFrame,
    REFLECTION_GUARD,
};
pub use orbit::{length_spectrum, ngon_orbit, LengthEntry, LengthSpectrum, OrbitSpec, Orientation};
pub use ray::{reflect_direction, trace_ray, ReflectedRayPath, ReflectionEvent};

use nalgebra::{Matrix2, Vector2};
use thiserror::Error;

pub type Vec2 = Vector2<f64>;
pub type Mat2 = Matrix2<f64>;

/// Tolerance on |η·ν| below which a boundary hit counts as tangential.
pub const TANGENCY_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum BilliardsError {
    #[error("tangential boundary hit at t={t:.6} (|η·ν| = {incidence:.3e})")]
    TangentialHit { t: f64, incidence: f64 },
    #[error("point ({0:.6}, {1:.6}) is not on a boundary circle")]
    NotOnBoundary(f64, f64),
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("start point ({0:.6}, {1:.6}) is not strictly inside the domain")]
    StartOutsideDomain(f64, f64),
    #[error("t={t:.9} is within {tol:.1e} of the reflection at t={reflection:.9}; frame is discontinuous there")]
    ReflectionAdjacent { t: f64, reflection: f64, tol: f64 },
    #[error("time {t:.6} outside path domain [0, {t_max:.6}]")]
    OutsideDomain { t: f64, t_max: f64 },
    #[error("reflection count exceeded {0} (near-grazing ray)")]
    TooManyReflections(usize),
}

/// Direction in the plane, kept at unit length by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitDirection(Vec2);

impl UnitDirection {
    pub fn new(v: Vec2) -> Result<Self, BilliardsError> {
        let n = v.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(BilliardsError::ZeroDirection);
        }
        Ok(UnitDirection(v / n))
    }

    pub fn from_angle(theta: f64) -> Self {
        UnitDirection(Vec2::new(theta.cos(), theta.sin()))
    }

    pub fn as_vec(&self) -> Vec2 {
        self.0
    }

    /// Perpendicular (η₂, −η₁); rotates η clockwise by 90°.
    pub fn perp(&self) -> Vec2 {
        Vec2::new(self.0.y, -self.0.x)
    }
}

/// Perpendicular of an arbitrary vector, same convention as [`UnitDirection::perp`].
pub fn perp(v: Vec2) -> Vec2 {
    Vec2::new(v.y, -v.x)
}

/// Disk of radius `r_outer` with an optional concentric circular obstacle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub r_outer: f64,
    pub r_inner: f64,
}

impl Geometry {
    pub fn new(r_outer: f64, r_inner: f64) -> Result<Self, BilliardsError> {
        if !(r_outer.is_finite() && r_inner.is_finite()) || r_outer <= 0.0 {
            return Err(BilliardsError::InvalidGeometry(format!(
                "outer radius must be positive and finite, got {r_outer}"
            )));
        }
        if r_inner < 0.0 || r_inner >= r_outer {
            return Err(BilliardsError::InvalidGeometry(format!(
                "need 0 <= r_inner < r_outer, got r_inner={r_inner}, r_outer={r_outer}"
            )));
        }
        Ok(Geometry { r_outer, r_inner })
    }

    pub fn disk(r_outer: f64) -> Self {
        Geometry::new(r_outer, 0.0).expect("positive radius")
    }

    pub fn contains(&self, p: Vec2) -> bool {
        let r = p.norm();
        // Without an obstacle the center is interior; with one, its boundary is not.
        r < self.r_outer && (self.r_inner == 0.0 || r > self.r_inner)
    }
}
