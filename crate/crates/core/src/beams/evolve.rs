//! Beam evolution: Z = a + ib, M = (c + id)Z⁻¹, branch tracking of
//! arg det Z, reflection counting, and gauge holonomy.

use super::gauge::{path_polyline_until, GaugeField};
use super::BeamsError;
use crate::billiards::{frame_at, JacobiFrame, Mat2, ReflectedRayPath, UnitDirection, Vec2, REFLECTION_GUARD};
use nalgebra::Matrix2;
use num_complex::Complex64;

/// Beam data at a single time along a path.
#[derive(Debug, Clone)]
pub struct BeamState {
    pub t: f64,
    pub frame: JacobiFrame,
    /// Z = a + ib
    pub zmat: Matrix2<Complex64>,
    /// M = (c + id)Z⁻¹; Im M ≻ 0 away from t = 0 degeneracies
    pub m: Matrix2<Complex64>,
    /// continuous argument of det Z (not reduced mod 2π), +π at reflections
    pub theta_det: f64,
    pub reflections: u32,
    /// accumulated ∫ A·dx along the ray
    pub holonomy: f64,
}

impl BeamState {
    pub fn det_z(&self) -> Complex64 {
        self.zmat[(0, 0)] * self.zmat[(1, 1)] - self.zmat[(0, 1)] * self.zmat[(1, 0)]
    }
}

/// Beam at t = 0: Z = I, M = iI, no winding, no holonomy. The start data
/// only labels the ray — beam data at t = 0 is the same for every ray.
pub fn initial_beam(_z: Vec2, _eta: UnitDirection) -> BeamState {
    let frame = JacobiFrame { t: 0.0, a: Mat2::identity(), b: Mat2::zeros(), c: Mat2::zeros(), d: Mat2::identity() };
    BeamState {
        t: 0.0,
        frame,
        zmat: Matrix2::identity(),
        m: Matrix2::identity().map(|x: Complex64| x * Complex64::new(0.0, 1.0)),
        theta_det: 0.0,
        reflections: 0,
        holonomy: 0.0,
    }
}

fn det2(m: &Matrix2<Complex64>) -> Complex64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Evolve a beam along `path` to time `t`, tracking the branch of det Z
/// continuously between reflections (adaptive sampling, each step moving
/// arg det Z by less than π/2) and adding the fixed +π jump at each
/// reflection. Holonomy accumulates exactly along the traversed polyline.
pub fn evolve_beam(
    path: &ReflectedRayPath,
    gauge: Option<&GaugeField>,
    t: f64,
) -> Result<BeamState, BeamsError> {
    if t == 0.0 {
        return Ok(initial_beam(path.z, path.eta));
    }
    let guard = 1.25 * REFLECTION_GUARD * path.geometry.r_outer.max(1.0);
    // segment working windows: [start, end] clipped away from reflections
    let mut boundaries: Vec<f64> = vec![0.0];
    boundaries.extend(path.reflection_times().take_while(|&tr| tr < t));
    boundaries.push(t);

    let mut theta = 0.0f64;
    let mut prev_det: Option<Complex64> = None;
    let mut last_frame: Option<JacobiFrame> = None;
    for (j, win) in boundaries.windows(2).enumerate() {
        let seg_start = win[0];
        let seg_end = win[1];
        let lo = if j == 0 { 0.0 } else { seg_start + guard };
        let is_final_segment = j == boundaries.len() - 2;
        let hi = if is_final_segment { seg_end } else { seg_end - guard };
        if hi <= lo {
            return Err(BeamsError::BranchTracking(format!(
                "segment [{seg_start:.6}, {seg_end:.6}] too short to sample between reflections"
            )));
        }
        // adaptively refine until every step turns arg det Z by < π/2
        let mut n = 8usize;
        let (dets, frames) = loop {
            let mut dets = Vec::with_capacity(n + 1);
            let mut frames = Vec::with_capacity(n + 1);
            let mut ok = true;
            let mut prev: Option<Complex64> = None;
            for i in 0..=n {
                let ti = lo + (hi - lo) * i as f64 / n as f64;
                let f = if j == 0 && i == 0 {
                    // exact initial frame; avoids an FD call at t=0
                    JacobiFrame { t: 0.0, a: Mat2::identity(), b: Mat2::zeros(), c: Mat2::zeros(), d: Mat2::identity() }
                } else {
                    frame_at(path, ti)?
                };
                let dz = det2(&f.zmat());
                if let Some(p) = prev {
                    if (dz / p).arg().abs() >= std::f64::consts::FRAC_PI_2 {
                        ok = false;
                    }
                }
                prev = Some(dz);
                dets.push(dz);
                frames.push(f);
                if !ok {
                    break;
                }
            }
            if ok {
                break (dets, frames);
            }
            n *= 2;
            if n > 8192 {
                return Err(BeamsError::BranchTracking(format!(
                    "arg det Z varies too fast on segment [{seg_start:.6}, {seg_end:.6}]"
                )));
            }
        };
        // bridge across the reflection that started this segment
        if let Some(p) = prev_det {
            let drift = (dets[0] / (-p)).arg();
            if drift.abs() >= std::f64::consts::FRAC_PI_2 {
                return Err(BeamsError::BranchTracking(format!(
                    "branch drift {drift:.3} across reflection at t={seg_start:.6} is ambiguous"
                )));
            }
            theta += std::f64::consts::PI + drift;
        }
        for pair in dets.windows(2) {
            theta += (pair[1] / pair[0]).arg();
        }
        prev_det = Some(*dets.last().expect("nonempty segment sampling"));
        last_frame = Some(*frames.last().expect("nonempty segment sampling"));
    }

    let frame = last_frame.expect("at least one segment");
    let zmat = frame.zmat();
    let dz = det2(&zmat);
    // det Z never vanishes on genuine beams (Im M ≻ 0); defensive check
    if dz.norm() < 1e-12 {
        return Err(BeamsError::FocalPoint { t });
    }
    let zinv = zmat.try_inverse().ok_or(BeamsError::SingularFrame)?;
    let cid = frame.c.map(|x| Complex64::new(x, 0.0)) + frame.d.map(|x| Complex64::new(0.0, x));
    let m = cid * zinv;
    let holo = match gauge {
        Some(g) => g.line_integral(&path_polyline_until(path, t))?,
        None => 0.0,
    };
    Ok(BeamState {
        t,
        frame,
        zmat,
        m,
        theta_det: theta,
        reflections: path.segment_index(t) as u32,
        holonomy: holo,
    })
}

/// The continuously tracked branch of (det Z)^{1/2}:
/// |det Z|^{1/2}·e^{iθ_det/2}.
pub fn sqrt_det_tracked(state: &BeamState) -> Complex64 {
    Complex64::from_polar(state.det_z().norm().sqrt(), 0.5 * state.theta_det)
}

/// Leading beam amplitude a₀(t) = (−1)^k · (det Z)^{−1/2} · e^{i·holonomy},
/// with the square root on the tracked branch and k the reflection count.
/// At t = 0 this is 1; its magnitude is always |det Z|^{−1/2}.
pub fn amplitude_a0(state: &BeamState) -> Result<Complex64, BeamsError> {
    let dz = state.det_z();
    if dz.norm() < 1e-12 {
        return Err(BeamsError::FocalPoint { t: state.t });
    }
    let dirichlet = if state.reflections % 2 == 0 { 1.0 } else { -1.0 };
    let sqrt_branch = sqrt_det_tracked(state);
    Ok(Complex64::new(dirichlet, 0.0) / sqrt_branch * Complex64::from_polar(1.0, state.holonomy))
}
