//! Exact piecewise-linear ray tracing with circular reflections.

use super::{perp, BilliardsError, Geometry, UnitDirection, Vec2, TANGENCY_TOL};

const MAX_REFLECTIONS: usize = 1_000_000;

/// One specular reflection.
#[derive(Debug, Clone, Copy)]
pub struct ReflectionEvent {
    pub t: f64,
    pub point: Vec2,
    pub incoming: Vec2,
    pub outgoing: Vec2,
    /// true when the bounce is off the inner obstacle circle
    pub at_inner: bool,
}

/// A reflected ray path: start data, reflection events, total duration.
///
/// Positions are exact piecewise-linear functions of time; directions are
/// piecewise constant. The chord invariant |x·ξ⊥| is conserved across outer
/// reflections (both circles are concentric, so it is conserved everywhere).
#[derive(Debug, Clone)]
pub struct ReflectedRayPath {
    pub z: Vec2,
    pub eta: UnitDirection,
    pub t_max: f64,
    /// chord parameter w = z·η⊥
    pub w: f64,
    pub events: Vec<ReflectionEvent>,
    pub geometry: Geometry,
    /// number of bounces off the inner obstacle (0 when r_inner = 0)
    pub inner_hits: usize,
}

impl ReflectedRayPath {
    /// Index of the segment containing time `t`: 0 before the first
    /// reflection, `k` after the k-th.
    pub fn segment_index(&self, t: f64) -> usize {
        self.events.partition_point(|e| e.t <= t)
    }

    /// Direction (unit) on the segment containing `t`.
    pub fn direction(&self, t: f64) -> Vec2 {
        let k = self.segment_index(t);
        if k == 0 {
            self.eta.as_vec()
        } else {
            self.events[k - 1].outgoing
        }
    }

    /// Position at time `t ∈ [0, t_max]`.
    pub fn position(&self, t: f64) -> Vec2 {
        let k = self.segment_index(t);
        let (t0, x0, d) = if k == 0 {
            (0.0, self.z, self.eta.as_vec())
        } else {
            let e = &self.events[k - 1];
            (e.t, e.point, e.outgoing)
        };
        x0 + (t - t0) * d
    }

    /// |x(t)·ξ(t)⊥| — constant along the whole path.
    pub fn chord_invariant(&self, t: f64) -> f64 {
        self.position(t).dot(&perp(self.direction(t))).abs()
    }

    /// Times of all reflections in increasing order.
    pub fn reflection_times(&self) -> impl Iterator<Item = f64> + '_ {
        self.events.iter().map(|e| e.t)
    }

    /// Phase-space gap to the start data: |x(t_max) − z| + |ξ(t_max) − η|.
    pub fn closure_defect(&self) -> f64 {
        (self.position(self.t_max) - self.z).norm() + (self.direction(self.t_max) - self.eta.as_vec()).norm()
    }
}

/// Specular reflection of `eta` at boundary point `p`: η − 2(ν·η)ν.
///
/// `p` must lie on the outer or inner circle of `g`. Fails with
/// `TangentialHit` when |η·ν| < tolerance — such rays must not feed the
/// trace machinery.
pub fn reflect_direction(
    eta: UnitDirection,
    p: Vec2,
    g: &Geometry,
) -> Result<UnitDirection, BilliardsError> {
    let r = p.norm();
    let on_outer = (r - g.r_outer).abs() <= 1e-9 * g.r_outer;
    let on_inner = g.r_inner > 0.0 && (r - g.r_inner).abs() <= 1e-9 * g.r_outer;
    if !(on_outer || on_inner) {
        return Err(BilliardsError::NotOnBoundary(p.x, p.y));
    }
    let nu = p / r;
    let inc = eta.as_vec().dot(&nu);
    if inc.abs() < TANGENCY_TOL {
        return Err(BilliardsError::TangentialHit { t: 0.0, incidence: inc.abs() });
    }
    let out = eta.as_vec() - 2.0 * inc * nu;
    UnitDirection::new(out)
}

/// First-hit time along `x + s·d` on the circle of radius `r`, given the
/// quadratic s² + 2(x·d)s + (|x|² − r²) = 0. Returns the smallest root > tol.
fn circle_hit(x: Vec2, d: Vec2, r: f64, tol: f64) -> Option<f64> {
    let b = x.dot(&d);
    let c = x.norm_squared() - r * r;
    let disc = b * b - c;
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    // roots: −b ± sq; stable evaluation via the larger-magnitude root first
    let (s1, s2) = if b >= 0.0 {
        let big = -b - sq;
        (big, if big != 0.0 { c / big } else { -b + sq })
    } else {
        let big = -b + sq;
        (if big != 0.0 { c / big } else { -b - sq }, big)
    };
    let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
    if lo > tol {
        Some(lo)
    } else if hi > tol {
        Some(hi)
    } else {
        None
    }
}

/// Trace the exact reflected ray from `z` in direction `eta` for duration `t_max`.
pub fn trace_ray(
    z: Vec2,
    eta: UnitDirection,
    t_max: f64,
    g: &Geometry,
) -> Result<ReflectedRayPath, BilliardsError> {
    if !g.contains(z) {
        return Err(BilliardsError::StartOutsideDomain(z.x, z.y));
    }
    if !(t_max > 0.0) {
        return Err(BilliardsError::InvalidGeometry(format!("t_max must be positive, got {t_max}")));
    }
    let mut events = Vec::new();
    let mut inner_hits = 0usize;
    let mut x = z;
    let mut d = eta.as_vec();
    let mut t = 0.0f64;
    // A fresh segment starts exactly on a circle after each reflection; the
    // re-hit guard must exceed roundoff but stay far below any real chord.
    let step_tol = 1e-12 * g.r_outer;
    while t < t_max {
        let s_outer = circle_hit(x, d, g.r_outer, step_tol);
        let s_inner = if g.r_inner > 0.0 { circle_hit(x, d, g.r_inner, step_tol) } else { None };
        let (s, at_inner) = match (s_outer, s_inner) {
            (Some(a), Some(b)) if b < a => (b, true),
            (Some(a), _) => (a, false),
            (None, Some(b)) => (b, true),
            (None, None) => {
                // unreachable for a point inside the disk; defensive
                return Err(BilliardsError::InvalidGeometry("ray escaped the disk".into()));
            }
        };
        if t + s >= t_max {
            break;
        }
        let mut p = x + s * d;
        // pin the hit point to the circle to stop drift over many bounces
        let r_target = if at_inner { g.r_inner } else { g.r_outer };
        p *= r_target / p.norm();
        let nu = p / r_target;
        let inc = d.dot(&nu);
        if inc.abs() < TANGENCY_TOL {
            return Err(BilliardsError::TangentialHit { t: t + s, incidence: inc.abs() });
        }
        let out_raw = d - 2.0 * inc * nu;
        let out = out_raw / out_raw.norm();
        events.push(ReflectionEvent { t: t + s, point: p, incoming: d, outgoing: out, at_inner });
        if at_inner {
            inner_hits += 1;
        }
        if events.len() > MAX_REFLECTIONS {
            return Err(BilliardsError::TooManyReflections(MAX_REFLECTIONS));
        }
        x = p;
        d = out;
        t += s;
    }
    Ok(ReflectedRayPath {
        z,
        eta,
        t_max,
        w: z.dot(&eta.perp()),
        events,
        geometry: *g,
        inner_hits,
    })
}
