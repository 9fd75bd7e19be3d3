//! Second-order finite-difference oracle for the flux disk.
//!
//! Each angular channel m reduces to a radial problem of order ν. The
//! substitution f = r^ν g removes the centrifugal singularity; the remaining
//! operator −(r^{2ν+1} g′)′ = λ r^{2ν+1} g is discretized in flux form on a
//! staggered grid r_i = (i−1/2)h, which encodes regularity at r = 0 (the
//! conductance r^{2ν+1} vanishes at the inner cell edge) and Dirichlet at
//! r = R via an antisymmetric ghost cell. Symmetrizing by the cell masses
//! gives a real symmetric tridiagonal matrix whose lowest eigenvalues come
//! from Sturm-sequence bisection. Accuracy is O(h²); this is a
//! cross-validation oracle, not a production solver.

use super::disk::DiskFluxProblem;
use super::SpectraError;

/// Grid for the oracle: radial cells and angular channel range.
#[derive(Debug, Clone, Copy)]
pub struct FdGrid {
    /// number of radial cells (default 400)
    pub n_radial: usize,
    /// include angular channels |m| ≤ max_angular (default 12)
    pub max_angular: i32,
}

impl Default for FdGrid {
    fn default() -> Self {
        Self { n_radial: 400, max_angular: 12 }
    }
}

/// Lowest `count` eigenvalues of the flux disk by finite differences.
pub fn fd_oracle_spectrum(
    p: &DiskFluxProblem,
    grid: FdGrid,
    count: usize,
) -> Result<Vec<f64>, SpectraError> {
    if p.r_inner != 0.0 {
        return Err(SpectraError::InvalidGeometry(
            "finite-difference oracle covers the disk only (r_inner = 0)".into(),
        ));
    }
    if grid.n_radial < 8 {
        return Err(SpectraError::InvalidGeometry(format!(
            "grid too coarse: n_radial = {}",
            grid.n_radial
        )));
    }
    let per_channel = count.min(grid.n_radial);
    let mut all = Vec::new();
    for m in -grid.max_angular..=grid.max_angular {
        let nu = p.order(m);
        let (diag, off) = radial_tridiagonal(nu, p.r_outer, grid.n_radial);
        let evs = lowest_eigenvalues(&diag, &off, per_channel)?;
        all.extend(evs);
    }
    all.sort_by(f64::total_cmp);
    all.truncate(count);
    Ok(all)
}

/// Symmetrized tridiagonal (diag, off-diag) for order ν on n cells.
fn radial_tridiagonal(nu: f64, r_outer: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let h = r_outer / n as f64;
    let p = 2.0 * nu + 1.0;
    // conductances at cell edges r = i·h and masses at centers r = (i−1/2)h
    let edge = |i: usize| (i as f64 * h).powf(p);
    let mass = |i: usize| ((i as f64 - 0.5) * h).powf(p);
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n - 1);
    for i in 1..=n {
        let w_lo = if i == 1 { 0.0 } else { edge(i - 1) };
        // Dirichlet midway between cell n and the ghost: g_{n+1} = −g_n adds
        // the outer conductance twice
        let w_hi = if i == n { 2.0 * edge(n) } else { edge(i) };
        diag.push((w_lo + w_hi) / (h * h * mass(i)));
        if i < n {
            off.push(-edge(i) / (h * h * (mass(i) * mass(i + 1)).sqrt()));
        }
    }
    (diag, off)
}

/// Number of eigenvalues of the symmetric tridiagonal below σ (Sturm count
/// via the LDLᵗ inertia).
fn sturm_count(diag: &[f64], off: &[f64], sigma: f64) -> usize {
    let tiny = 1e-300;
    let mut count = 0usize;
    let mut d = diag[0] - sigma;
    if d == 0.0 {
        d = -tiny;
    }
    if d < 0.0 {
        count += 1;
    }
    for i in 1..diag.len() {
        d = diag[i] - sigma - off[i - 1] * off[i - 1] / d;
        if d == 0.0 {
            d = -tiny;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `count` eigenvalues by bisection on the Sturm count.
fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Result<Vec<f64>, SpectraError> {
    let n = diag.len();
    let count = count.min(n);
    // Gershgorin bounds
    let mut lo_all = f64::INFINITY;
    let mut hi_all = f64::NEG_INFINITY;
    for i in 0..n {
        let radius = if i == 0 { 0.0 } else { off[i - 1].abs() }
            + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo_all = lo_all.min(diag[i] - radius);
        hi_all = hi_all.max(diag[i] + radius);
    }
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        // find the (idx+1)-th eigenvalue: smallest σ with count(σ) ≥ idx+1
        let (mut lo, mut hi) = (lo_all, hi_all);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid == lo || mid == hi {
                break;
            }
            if sturm_count(diag, off, mid) >= idx + 1 {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-12 * hi.abs().max(1.0) {
                break;
            }
        }
        if !(hi.is_finite() && lo.is_finite()) {
            return Err(SpectraError::ConvergenceFailure {
                what: "tridiagonal bisection",
                detail: format!("eigenvalue index {idx}"),
            });
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_bisection_matches_dense_eigensolver() {
        // small symmetric tridiagonal, checked against nalgebra
        let diag = vec![2.0, 3.0, 1.0, 4.0, 2.5, 3.5];
        let off = vec![0.7, -0.4, 1.1, 0.2, -0.9];
        let n = diag.len();
        let mut dense = nalgebra::DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            dense[(i, i)] = diag[i];
            if i + 1 < n {
                dense[(i, i + 1)] = off[i];
                dense[(i + 1, i)] = off[i];
            }
        }
        let mut expect: Vec<f64> = dense.symmetric_eigen().eigenvalues.iter().copied().collect();
        expect.sort_by(f64::total_cmp);
        let got = lowest_eigenvalues(&diag, &off, n).unwrap();
        for (g, e) in got.iter().zip(expect.iter()) {
            assert!((g - e).abs() <= 1e-9 * e.abs().max(1.0), "{g} vs {e}");
        }
    }

    #[test]
    fn dirichlet_interval_limit() {
        // ν = 1/2 ⇒ half-line problem equivalent to sin(kr) on (0, R):
        // eigenvalues (nπ/R)² up to O(h²)
        let (diag, off) = radial_tridiagonal(0.5, 1.0, 600);
        let evs = lowest_eigenvalues(&diag, &off, 3).unwrap();
        for (i, ev) in evs.iter().enumerate() {
            let expect = ((i as f64 + 1.0) * std::f64::consts::PI).powi(2);
            assert!(
                (ev - expect).abs() <= 3e-4 * expect,
                "mode {i}: {ev} vs {expect}"
            );
        }
    }
}
