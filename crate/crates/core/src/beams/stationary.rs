//! Closure Hessian of the stationary-phase reduction and its branch rules.
//!
//! At an orbit closure the phase of the beam superposition, as a function of
//! the transverse start offsets (u, w), has a complex symmetric Hessian
//! assembled from the frame blocks. Its determinant has a closed form
//! −C·det(Z⁻¹) with C = η⊥ᵗ·c·η⊥, and the branch of det(−iQ)^{−1/2} is fixed
//! by continuous deformation from the identity. Comparing that branch with
//! the amplitude's tracked square root resolves the sign of the trace
//! singularity.

use super::BeamsError;
use crate::billiards::{JacobiFrame, UnitDirection};
use nalgebra::{DMatrix, Matrix2, Matrix3, Matrix4};
use num_complex::Complex64;

type CMat2 = Matrix2<Complex64>;

fn to_c(m: &crate::billiards::Mat2) -> CMat2 {
    m.map(|x| Complex64::new(x, 0.0))
}

fn det2(m: &CMat2) -> Complex64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Hessian data at orbit closure.
#[derive(Debug, Clone)]
pub struct HessianDet {
    /// det of the P_η-augmented 4×4 block Hessian (direct assembly)
    pub direct: Complex64,
    /// −C·det(Z⁻¹) with C = η⊥ᵗ·c·η⊥ (= 4N/h for the regular N-gon)
    pub closed_form: Complex64,
}

/// Sign resolution between the amplitude branch and the stationary branch of
/// (det Z)^{1/2}.
#[derive(Debug, Clone, Copy)]
pub struct SingularitySignData {
    pub amplitude_branch: Complex64,
    pub stationary_branch: Complex64,
    /// +1 when the two branches agree, −1 when they are opposite
    pub sign: i8,
}

/// Assemble the augmented closure Hessian.
///
/// Returns (H̃ 4×4, Q₃ 3×3, C) where H̃ is the block Hessian
/// [[M, c − Ma], [cᵗ − aᵗM, aᵗMa − aᵗc]] + diag(0, P_η), Q₃ is its reduction
/// J̃ᵗHJ̃ onto {(u, w·η⊥, w·η⊥)} coordinates, and C = η⊥ᵗ·c·η⊥.
pub fn closure_hessian(
    frame: &JacobiFrame,
    eta: UnitDirection,
) -> Result<(Matrix4<Complex64>, Matrix3<Complex64>, f64), BeamsError> {
    let a = to_c(&frame.a);
    let c = to_c(&frame.c);
    let z = frame.zmat();
    let zinv = z.try_inverse().ok_or(BeamsError::SingularFrame)?;
    let cid = to_c(&frame.c) + frame.d.map(|x| Complex64::new(0.0, x));
    let m = cid * zinv;

    let h11 = m;
    let h12 = c - m * a;
    let h21 = c.transpose() - a.transpose() * m;
    let h22 = a.transpose() * m * a - a.transpose() * c;

    let ev = eta.as_vec();
    let p_eta = crate::billiards::Mat2::new(ev.x * ev.x, ev.x * ev.y, ev.x * ev.y, ev.y * ev.y);
    let mut h = Matrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            h[(i, j)] = h11[(i, j)];
            h[(i, j + 2)] = h12[(i, j)];
            h[(i + 2, j)] = h21[(i, j)];
            h[(i + 2, j + 2)] = h22[(i, j)] + Complex64::new(p_eta[(i, j)], 0.0);
        }
    }

    // reduction J: columns (e₁,0), (e₂,0), (η⊥,η⊥)
    let perp = eta.perp();
    let mut jmat = nalgebra::Matrix4x3::<Complex64>::zeros();
    jmat[(0, 0)] = Complex64::new(1.0, 0.0);
    jmat[(1, 1)] = Complex64::new(1.0, 0.0);
    jmat[(0, 2)] = Complex64::new(perp.x, 0.0);
    jmat[(1, 2)] = Complex64::new(perp.y, 0.0);
    jmat[(2, 2)] = Complex64::new(perp.x, 0.0);
    jmat[(3, 2)] = Complex64::new(perp.y, 0.0);
    let q3: Matrix3<Complex64> = jmat.transpose() * h * jmat;

    let cval = perp.dot(&(frame.c * perp));
    Ok((h, q3, cval))
}

/// Both routes to the closure-Hessian determinant; they must agree to
/// relative 1e−6 on valid frames (asserted by callers, not here).
pub fn hessian_det_at_closure(
    frame: &JacobiFrame,
    eta: UnitDirection,
) -> Result<HessianDet, BeamsError> {
    let (h, _q3, cval) = closure_hessian(frame, eta)?;
    let z = frame.zmat();
    let dz = det2(&z);
    if dz.norm() == 0.0 {
        return Err(BeamsError::SingularFrame);
    }
    Ok(HessianDet {
        direct: h.determinant(),
        closed_form: -Complex64::new(cval, 0.0) / dz,
    })
}

/// det(−iQ)^{−1/2} with the branch chosen by continuous deformation from the
/// identity: track arg det((1−s)I + s(−iQ)) over s ∈ [0, 1].
///
/// Equivalent to taking principal square roots factorwise after the −i
/// rotation when all rotated eigenvalues sit in the closed right half-plane.
pub fn sqrt_det_branch_stationary(q: &DMatrix<Complex64>) -> Result<Complex64, BeamsError> {
    let n = q.nrows();
    assert_eq!(n, q.ncols(), "square matrix required");
    let minus_iq = q.map(|x| x * Complex64::new(0.0, -1.0));
    let id = DMatrix::<Complex64>::identity(n, n);
    let mut steps = 64usize;
    'retry: loop {
        let mut theta = 0.0f64;
        let mut prev = Complex64::new(1.0, 0.0); // det at s = 0
        for k in 1..=steps {
            let s = k as f64 / steps as f64;
            let g = &id * Complex64::new(1.0 - s, 0.0) + &minus_iq * Complex64::new(s, 0.0);
            let det = g.determinant();
            if det.norm() < 1e-14 {
                return Err(BeamsError::SingularHessian);
            }
            let step = (det / prev).arg();
            if step.abs() >= std::f64::consts::FRAC_PI_2 {
                steps *= 2;
                if steps > 1 << 16 {
                    return Err(BeamsError::BranchTracking(
                        "deformation path winds too fast; eigenvalue near the branch cut".into(),
                    ));
                }
                continue 'retry;
            }
            theta += step;
            prev = det;
        }
        return Ok(Complex64::from_polar(prev.norm().powf(-0.5), -0.5 * theta));
    }
}

/// The stationary-phase branch value of (det Z)^{1/2} at closure:
/// det(−iQ₃)^{−1/2} · √C · e^{−iπ/4}.
pub fn stationary_branch(frame: &JacobiFrame, eta: UnitDirection) -> Result<Complex64, BeamsError> {
    let (_h, q3, cval) = closure_hessian(frame, eta)?;
    if cval <= 0.0 {
        return Err(BeamsError::SingularHessian);
    }
    let q3d = DMatrix::from_fn(3, 3, |i, j| q3[(i, j)]);
    let sdb = sqrt_det_branch_stationary(&q3d)?;
    Ok(sdb * cval.sqrt() * Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4))
}

/// Compare branches: +1 when they agree, −1 when opposite.
pub fn resolve_sign(amplitude_branch: Complex64, stationary_branch: Complex64) -> SingularitySignData {
    let agree = (amplitude_branch - stationary_branch).norm() < (amplitude_branch + stationary_branch).norm();
    SingularitySignData {
        amplitude_branch,
        stationary_branch,
        sign: if agree { 1 } else { -1 },
    }
}
