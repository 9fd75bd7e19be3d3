//! Jacobi frames: the symplectic linearization of the reflected flow.
//!
//! The frame F(t) = [[a, b], [c, d]] collects derivatives of the reflected
//! ray map with respect to initial position z and initial covector η, with x
//! homogeneous of degree 0 and ξ of degree 1 in η (time stays arclength).
//! Frames are computed by central finite differences of the exact ray map
//! with one Richardson extrapolation level, which keeps the symplectic
//! defect near 1e−10 — comfortably below contract tolerances.

use super::{trace_ray, BilliardsError, Mat2, ReflectedRayPath, UnitDirection, Vec2};
use nalgebra::Matrix2;
use num_complex::Complex64;

/// Finite-difference step for frame computation (scaled by outer radius).
const FD_STEP: f64 = 1e-5;
/// Frames are refused within this distance of a reflection time (scaled by
/// outer radius); callers sampling near reflections must stay outside it.
pub const REFLECTION_GUARD: f64 = 1e-4;

#[derive(Debug, Clone, Copy)]
pub struct JacobiFrame {
    pub t: f64,
    /// ∂x/∂z
    pub a: Mat2,
    /// ∂x/∂η
    pub b: Mat2,
    /// ∂ξ/∂z
    pub c: Mat2,
    /// ∂ξ/∂η
    pub d: Mat2,
}

impl JacobiFrame {
    /// Complex half-frame Z = a + ib whose determinant branch drives beam
    /// amplitudes.
    pub fn zmat(&self) -> Matrix2<Complex64> {
        self.a.map(|x| Complex64::new(x, 0.0)) + self.b.map(|x| Complex64::new(0.0, x))
    }

    /// Max Frobenius defect among the three symplecticity identities
    /// aᵗd − cᵗb = I, aᵗc symmetric, bᵗd symmetric.
    pub fn symplectic_defect(&self) -> f64 {
        let e1 = (self.a.transpose() * self.d - self.c.transpose() * self.b - Mat2::identity()).norm();
        let atc = self.a.transpose() * self.c;
        let btd = self.b.transpose() * self.d;
        let e2 = (atc - atc.transpose()).norm();
        let e3 = (btd - btd.transpose()).norm();
        e1.max(e2).max(e3)
    }
}

/// Ray map with the homogeneous-in-η convention: returns (x(t), ξ(t)) for a
/// possibly non-unit covector η.
fn ray_map(
    z: Vec2,
    eta_raw: Vec2,
    t: f64,
    path: &ReflectedRayPath,
) -> Result<(Vec2, Vec2), BilliardsError> {
    let scale = eta_raw.norm();
    let dir = UnitDirection::new(eta_raw)?;
    let p = trace_ray(z, dir, t + 1e-3 * path.geometry.r_outer, &path.geometry)?;
    Ok((p.position(t), scale * p.direction(t)))
}

/// Jacobi frame of `path` at time `t` by central differences with one
/// Richardson level.
///
/// Fails with `ReflectionAdjacent` when `t` is too close to a reflection:
/// the frame jumps there and the difference stencil would straddle the jump.
pub fn frame_at(path: &ReflectedRayPath, t: f64) -> Result<JacobiFrame, BilliardsError> {
    if !(0.0..=path.t_max).contains(&t) {
        return Err(BilliardsError::OutsideDomain { t, t_max: path.t_max });
    }
    let guard = REFLECTION_GUARD * path.geometry.r_outer.max(1.0);
    for tr in path.reflection_times() {
        if (t - tr).abs() < guard {
            return Err(BilliardsError::ReflectionAdjacent { t, reflection: tr, tol: guard });
        }
    }
    let h0 = FD_STEP * path.geometry.r_outer;
    let z = path.z;
    let eta = path.eta.as_vec();
    let unit = |i: usize| if i == 0 { Vec2::new(1.0, 0.0) } else { Vec2::new(0.0, 1.0) };

    // columns: (∂x/∂p, ∂ξ/∂p) for p among z1, z2, η1, η2
    let mut cols_x = [Vec2::zeros(); 4];
    let mut cols_xi = [Vec2::zeros(); 4];
    for p_idx in 0..4 {
        let d_at = |h: f64| -> Result<(Vec2, Vec2), BilliardsError> {
            let (zp, ep) = if p_idx < 2 {
                (z + h * unit(p_idx), eta)
            } else {
                (z, eta + h * unit(p_idx - 2))
            };
            let (zm, em) = if p_idx < 2 {
                (z - h * unit(p_idx), eta)
            } else {
                (z, eta - h * unit(p_idx - 2))
            };
            let (xp, xip) = ray_map(zp, ep, t, path)?;
            let (xm, xim) = ray_map(zm, em, t, path)?;
            Ok(((xp - xm) / (2.0 * h), (xip - xim) / (2.0 * h)))
        };
        let (dx1, dxi1) = d_at(h0)?;
        let (dx2, dxi2) = d_at(0.5 * h0)?;
        cols_x[p_idx] = (4.0 * dx2 - dx1) / 3.0;
        cols_xi[p_idx] = (4.0 * dxi2 - dxi1) / 3.0;
    }
    Ok(JacobiFrame {
        t,
        a: Mat2::from_columns(&[cols_x[0], cols_x[1]]),
        c: Mat2::from_columns(&[cols_xi[0], cols_xi[1]]),
        b: Mat2::from_columns(&[cols_x[2], cols_x[3]]),
        d: Mat2::from_columns(&[cols_xi[2], cols_xi[3]]),
    })
}

/// Start point and direction for the inscribed equilateral triangle orbit in
/// the disk of radius `r_outer`, offset `v` along the bottom side from its
/// midpoint. Vertices sit at polar angles 90°, 210°, 330°; the bottom side
/// runs along y = −R/2 in the +x direction, so the start is (v, −R/2) with
/// direction (1, 0).
pub fn triangle_start(r_outer: f64, v: f64) -> (Vec2, UnitDirection) {
    let z = Vec2::new(v, -0.5 * r_outer);
    let eta = UnitDirection::new(Vec2::new(1.0, 0.0)).expect("x axis is a valid direction");
    (z, eta)
}

/// Exact Jacobi frame of the [`triangle_start`] orbit on the flight segment
/// containing the closure time L = 3√3·R, i.e. for t strictly between the
/// third and fourth reflections, (L − h/2 − v, L + h/2 − v) with side
/// h = √3·R.
///
/// Each bounce off the outer circle at incidence φ = 30° from the normal
/// contributes transverse focusing 2/(R cos φ) = 4/(√3 R); multiplying the
/// three bounce and four flight matrices collapses to, with κ = 4√3/R,
/// u = t − L and P = I − ηηᵗ:
///
///   a = I + κ(u+v)·P,  b = [u(1−κv) − κv²]·P,  c = κ·P,  d = I − κv·P.
pub fn triangle_frame_closed_form(
    r_outer: f64,
    v: f64,
    t: f64,
) -> Result<JacobiFrame, BilliardsError> {
    if !(r_outer > 0.0) {
        return Err(BilliardsError::InvalidGeometry(format!(
            "outer radius must be positive, got {r_outer}"
        )));
    }
    let h = 3f64.sqrt() * r_outer;
    let l = 3.0 * h;
    if v.abs() >= 0.5 * h {
        return Err(BilliardsError::InvalidGeometry(format!(
            "offset |v| = {} must be below half the side length {}",
            v.abs(),
            0.5 * h
        )));
    }
    let (lo, hi) = (l - 0.5 * h - v, l + 0.5 * h - v);
    if !(t > lo && t < hi) {
        return Err(BilliardsError::InvalidGeometry(format!(
            "closed-form frame holds on the final segment ({lo:.6}, {hi:.6}); got t={t}"
        )));
    }
    let kappa = 4.0 * 3f64.sqrt() / r_outer;
    let p = Mat2::new(0.0, 0.0, 0.0, 1.0);
    let u = t - l;
    Ok(JacobiFrame {
        t,
        a: Mat2::identity() + kappa * (u + v) * p,
        b: (u * (1.0 - kappa * v) - kappa * v * v) * p,
        c: kappa * p,
        d: Mat2::identity() - kappa * v * p,
    })
}

/// Times in (0, t_max) where det(∂x/∂z) vanishes.
///
/// Within each free-flight segment a(t) is affine in t, so det a is an exact
/// quadratic; roots are taken from the quadratic built out of two sampled
/// frames and then polished against freshly computed frames by bisection.
pub fn focal_times(path: &ReflectedRayPath) -> Result<Vec<f64>, BilliardsError> {
    let guard = 2.5 * REFLECTION_GUARD * path.geometry.r_outer.max(1.0);
    let mut bounds: Vec<f64> = Vec::with_capacity(path.events.len() + 2);
    bounds.push(0.0);
    bounds.extend(path.reflection_times());
    bounds.push(path.t_max);
    let mut roots: Vec<f64> = Vec::new();
    for win in bounds.windows(2) {
        let (lo, hi) = (win[0], win[1]);
        if hi - lo < 4.0 * guard {
            continue;
        }
        let t1 = lo + 0.3 * (hi - lo);
        let t2 = lo + 0.7 * (hi - lo);
        let f1 = frame_at(path, t1)?;
        let f2 = frame_at(path, t2)?;
        let slope = (f2.a - f1.a) / (t2 - t1);
        // det(a1 + τ·S) = det(S)τ² + mix·τ + det(a1)
        let q2 = slope.determinant();
        let q1 = f1.a[(0, 0)] * slope[(1, 1)] + slope[(0, 0)] * f1.a[(1, 1)]
            - f1.a[(0, 1)] * slope[(1, 0)]
            - slope[(0, 1)] * f1.a[(1, 0)];
        let q0 = f1.a.determinant();
        let mut taus: Vec<f64> = Vec::new();
        if q2.abs() < 1e-12 {
            if q1.abs() > 1e-12 {
                taus.push(-q0 / q1);
            }
        } else {
            let disc = q1 * q1 - 4.0 * q2 * q0;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                let qq = -0.5 * (q1 + q1.signum() * sq);
                taus.push(qq / q2);
                if qq != 0.0 {
                    taus.push(q0 / qq);
                }
            }
        }
        for tau in taus {
            let troot = t1 + tau;
            if !(troot > lo + 1e-9 && troot < hi - 1e-9) {
                continue;
            }
            // polish against actual frames when a comfortable bracket exists
            let delta = 1e-3_f64.min(0.25 * (hi - lo));
            let (mut ta, mut tb) = ((troot - delta).max(lo + guard), (troot + delta).min(hi - guard));
            let refined = if ta < tb {
                let ga = frame_at(path, ta)?.a.determinant();
                let gb = frame_at(path, tb)?.a.determinant();
                if ga == 0.0 {
                    ta
                } else if gb == 0.0 {
                    tb
                } else if ga.signum() != gb.signum() {
                    let mut ga_sign = ga.signum();
                    while tb - ta > 1e-10 {
                        let tm = 0.5 * (ta + tb);
                        let gm = frame_at(path, tm)?.a.determinant();
                        if gm == 0.0 {
                            ta = tm;
                            tb = tm;
                            break;
                        }
                        if gm.signum() == ga_sign {
                            ta = tm;
                            ga_sign = gm.signum();
                        } else {
                            tb = tm;
                        }
                    }
                    0.5 * (ta + tb)
                } else {
                    troot
                }
            } else {
                troot
            };
            roots.push(refined);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    Ok(roots)
}
