//! Zeros of J_ν on (0, k_max], complete by construction.
//!
//! All positive zeros of J_ν lie above ν, and consecutive zeros are separated
//! by more than 3 (the spacing decreases monotonically toward π from above
//! for ν > 1/2 and increases toward π from below for ν < 1/2, staying above
//! j_{0,2} − j_{0,1} ≈ 3.11 in the worst case). A unit-step sign scan from
//! just above ν therefore brackets every zero; bisection plus a Newton polish
//! delivers each one to ≈1e−12 absolute.

use super::bessel::bessel_jy_limited;
use super::SpectraError;

/// Step used by the bracketing scan; must stay below the minimal spacing of
/// consecutive zeros (> 3).
const SCAN_STEP: f64 = 1.0;

/// All zeros of J_ν in (0, k_max], ascending. Empty when k_max ≤ ν.
pub fn bessel_j_zeros(nu: f64, k_max: f64) -> Result<Vec<f64>, SpectraError> {
    if !(nu >= 0.0) || !k_max.is_finite() {
        return Err(SpectraError::DomainError {
            nu,
            x: k_max,
            nu_max: super::bessel::DEFAULT_NU_MAX,
            x_max: super::bessel::DEFAULT_X_MAX,
        });
    }
    let x_max = k_max + SCAN_STEP + 1.0;
    let j_at = |x: f64| -> Result<(f64, f64), SpectraError> {
        let v = bessel_jy_limited(nu, x, super::bessel::DEFAULT_NU_MAX, x_max.max(4.0))?;
        Ok((v.j, v.jp))
    };

    let mut zeros = Vec::new();
    // the first zero exceeds ν + 1.86 ν^{1/3}; starting the scan in the gap
    // between ν and j_{ν,1} guarantees no zero below the first scan point
    let mut lo = nu + 0.5 * nu.max(1.0).powf(1.0 / 3.0);
    if lo >= k_max {
        return Ok(zeros);
    }
    let (mut f_lo, _) = j_at(lo)?;
    while lo < k_max {
        let hi = (lo + SCAN_STEP).min(k_max);
        let (f_hi, _) = j_at(hi)?;
        if f_lo == 0.0 {
            zeros.push(lo);
        } else if f_lo * f_hi < 0.0 {
            zeros.push(refine_zero(&j_at, lo, hi, f_lo)?);
        } else if f_hi == 0.0 && hi == k_max {
            zeros.push(hi);
        }
        lo = hi;
        f_lo = f_hi;
        if hi >= k_max {
            break;
        }
    }
    zeros.retain(|&z| z <= k_max + 1e-12);

    // completeness self-check: spacing of found zeros must exceed the scan
    // step comfortably, else the scan assumption was violated
    for w in zeros.windows(2) {
        if w[1] - w[0] < 2.0 * SCAN_STEP {
            return Err(SpectraError::ConvergenceFailure {
                what: "bessel zero scan",
                detail: format!("suspicious spacing {} near {} for nu={nu}", w[1] - w[0], w[0]),
            });
        }
    }
    Ok(zeros)
}

/// Bisection until the bracket is small, then Newton with bracket fallback.
fn refine_zero<F>(j_at: &F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64, SpectraError>
where
    F: Fn(f64) -> Result<(f64, f64), SpectraError>,
{
    for _ in 0..20 {
        let mid = 0.5 * (lo + hi);
        let (f_mid, _) = j_at(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..60 {
        let (f, fp) = j_at(x)?;
        let step = if fp != 0.0 { f / fp } else { 0.0 };
        let mut next = x - step;
        if !(next > lo && next < hi) || step == 0.0 {
            next = 0.5 * (lo + hi);
        }
        let (f_next, _) = j_at(next)?;
        if f_lo * f_next < 0.0 {
            hi = next;
        } else {
            lo = next;
            f_lo = f_next;
        }
        if (next - x).abs() <= 1e-13 * next.max(1.0) {
            return Ok(next);
        }
        x = next;
    }
    Err(SpectraError::ConvergenceFailure {
        what: "bessel zero polish",
        detail: format!("bracket [{lo}, {hi}]"),
    })
}
