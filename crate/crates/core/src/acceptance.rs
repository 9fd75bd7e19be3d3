//! The acceptance suite: one function per verification criterion, runnable
//! by `fluxtrace verify` and by the integration-test gate.
//!
//! Every criterion is self-contained and deterministic (pseudo-randomness is
//! seeded). Tolerances are fixed here, not configurable: weakening them
//! would defeat the point of the gate.

use std::error::Error;

use rand::{Rng, SeedableRng};

use crate::beams::{
    evolve_beam, hessian_det_at_closure, resolve_sign, sqrt_det_tracked, stationary_branch,
};
use crate::billiards::{
    focal_times, frame_at, length_spectrum, trace_ray, triangle_frame_closed_form, triangle_start,
    Geometry, JacobiFrame, Vec2, REFLECTION_GUARD,
};
use crate::spectra::{
    bessel_j_zeros, disk_flux_spectrum, fd_oracle_spectrum, lattice_genericity, torus_spectrum,
    DiskFluxProblem, FdGrid, Lattice, TorusProblem,
};
use crate::trace::{
    bandlimited_trace, fit_amplitude, fit_both_sides, predict_singularity, side_shape,
    torus_peak_weights, verify_isolation, FitReport, SideComparison, SingularSide, TimeGrid,
    TraceSamples, WindowSpec,
};

const PI: f64 = std::f64::consts::PI;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

type CheckResult = Result<(bool, String), Box<dyn Error>>;

fn criterion(id: u32, name: &'static str, f: impl FnOnce() -> CheckResult) -> CriterionResult {
    match f() {
        Ok((pass, detail)) => CriterionResult { id, name, pass, detail },
        Err(e) => CriterionResult { id, name, pass: false, detail: format!("errored: {e}") },
    }
}

/// Number of acceptance criteria.
pub const CRITERIA: u32 = 8;

/// Run a single criterion by id (1-based; panics on an unknown id).
pub fn run_one(id: u32) -> CriterionResult {
    match id {
        1 => criterion(1, "cosine law", cosine_law),
        2 => criterion(2, "absolute coefficient", absolute_coefficient),
        3 => criterion(3, "side/sign discrimination", side_sign_discrimination),
        4 => criterion(4, "torus peak weights", torus_peak_ratios),
        5 => criterion(5, "frame and beam suite", frame_and_beam_suite),
        6 => criterion(6, "spectral solver suite", spectral_solver_suite),
        7 => criterion(7, "length isolation", length_isolation),
        8 => criterion(8, "planted-model recovery", planted_model_recovery),
        _ => panic!("unknown acceptance criterion {id}"),
    }
}

/// Run every criterion in order.
pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA).map(run_one).collect()
}

// ------------------------------------------------------------- helpers

/// Fit the N-gon singularity coefficient in the unit disk at flux `alpha`.
fn fit_ngon(n: u32, alpha: f64, cutoff: f64, half_width: f64) -> Result<FitReport, Box<dyn Error>> {
    let window = WindowSpec::new(cutoff)?;
    let pred = predict_singularity(n, 1.0, alpha);
    let lengths = length_spectrum(&Geometry::disk(1.0), pred.length + 1.0, 64);
    let pad = 2.0 * window.max_grid_spacing();
    let grid = TimeGrid::covering(
        pred.length - half_width - pad,
        pred.length + half_width + pad,
        window.max_grid_spacing(),
    )?;
    let p = DiskFluxProblem::disk(1.0, alpha)?;
    let spectrum = disk_flux_spectrum(&p, cutoff)?;
    let tr = bandlimited_trace(&spectrum, &window, &grid)?;
    Ok(fit_amplitude(&tr, &pred, &lengths, half_width, 1)?)
}

/// Fit both one-sided shapes for the N-gon at flux 0.
fn fit_ngon_both(n: u32, cutoff: f64, half_width: f64) -> Result<SideComparison, Box<dyn Error>> {
    let window = WindowSpec::new(cutoff)?;
    let pred = predict_singularity(n, 1.0, 0.0);
    let lengths = length_spectrum(&Geometry::disk(1.0), pred.length + 1.0, 64);
    let pad = 2.0 * window.max_grid_spacing();
    let grid = TimeGrid::covering(
        pred.length - half_width - pad,
        pred.length + half_width + pad,
        window.max_grid_spacing(),
    )?;
    let p = DiskFluxProblem::disk(1.0, 0.0)?;
    let spectrum = disk_flux_spectrum(&p, cutoff)?;
    let tr = bandlimited_trace(&spectrum, &window, &grid)?;
    Ok(fit_both_sides(&tr, &pred, &lengths, half_width, 1)?)
}

/// Reference torus lattice e₁ = (1,0), e₂ = (0.31, 1.07).
fn reference_lattice() -> Result<Lattice, Box<dyn Error>> {
    Ok(Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07))?)
}

/// Kernel weight at t = |e₁| for A₀ = α·e₁* (+ optional 2πδ* shift).
fn torus_weight(alpha: f64, shift: Option<(i32, i32)>) -> Result<f64, Box<dyn Error>> {
    let lattice = reference_lattice()?;
    let mut a0 = alpha * lattice.dual_vector(1, 0);
    if let Some((m1, m2)) = shift {
        a0 += 2.0 * PI * lattice.dual_vector(m1, m2);
    }
    let length = lattice.vector(1, 0).norm();
    let problem = TorusProblem { lattice, a0 };
    let cutoff = 200.0;
    let half_width = 0.05;
    let window = WindowSpec::new(cutoff)?;
    let pad = 2.0 * window.max_grid_spacing();
    let grid = TimeGrid::covering(
        length - half_width - pad,
        length + half_width + pad,
        window.max_grid_spacing(),
    )?;
    let spectrum = torus_spectrum(&problem, cutoff);
    let tr = bandlimited_trace(&spectrum, &window, &grid)?;
    let weights = torus_peak_weights(&tr, &problem, &[(1, 0)], half_width)?;
    Ok(weights[0].weight)
}

/// Max entrywise deviation between frames, relative to max(1, |reference|).
fn frame_rel_err(got: &JacobiFrame, want: &JacobiFrame) -> f64 {
    let pairs = [(got.a, want.a), (got.b, want.b), (got.c, want.c), (got.d, want.d)];
    let mut worst = 0.0f64;
    for (g, w) in pairs {
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((g[(i, j)] - w[(i, j)]).abs() / w[(i, j)].abs().max(1.0));
            }
        }
    }
    worst
}

fn im_m_min_eigenvalue(m: &nalgebra::Matrix2<num_complex::Complex64>) -> f64 {
    let p = m[(0, 0)].im;
    let r = m[(1, 1)].im;
    let q = 0.5 * (m[(0, 1)].im + m[(1, 0)].im);
    0.5 * (p + r) - (0.25 * (p - r) * (p - r) + q * q).sqrt()
}

// ----------------------------------------------------------- criteria

/// Criterion 1: fitted Ĉ(α)/Ĉ(0) equals cos α within 0.05 across the sweep.
fn cosine_law() -> CheckResult {
    let alphas = [0.0, PI / 4.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0, PI];
    let mut coeffs = Vec::with_capacity(alphas.len());
    for &a in &alphas {
        coeffs.push(fit_ngon(3, a, 80.0, 0.3)?.c_hat);
    }
    let c0 = coeffs[0];
    if c0 == 0.0 {
        return Ok((false, "zero-flux coefficient vanished".into()));
    }
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for (&a, &c) in alphas.iter().zip(&coeffs) {
        let err = (c / c0 - a.cos()).abs();
        worst = worst.max(err);
        rows.push(format!("α={a:.4}: ratio {:+.4} vs cos {:+.4}", c / c0, a.cos()));
    }
    Ok((
        worst <= 0.05,
        format!("max |Ĉ(α)/Ĉ(0) − cos α| = {worst:.4} (tol 0.05); {}", rows.join("; ")),
    ))
}

/// Criterion 2: Ĉ(0) within 10% of the two-orientation prediction
/// 2 × (−2^{−5/2}·3^{1/4}), stable within 5% between K = 60 and K = 100.
fn absolute_coefficient() -> CheckResult {
    let per_orientation = -(2.0f64.powf(-2.5)) * 3.0f64.powf(0.25);
    let pred = predict_singularity(3, 1.0, 0.0);
    // the fitted trace sees both traversal orientations of the triangle
    let expected = pred.trace_coefficient;
    let c80 = fit_ngon(3, 0.0, 80.0, 0.3)?.c_hat;
    let c60 = fit_ngon(3, 0.0, 60.0, 0.3)?.c_hat;
    let c100 = fit_ngon(3, 0.0, 100.0, 0.3)?.c_hat;
    let rel = (c80 - expected).abs() / expected.abs();
    let stability = (c60 - c100).abs() / c100.abs();
    let pass = rel <= 0.10 && stability <= 0.05;
    Ok((
        pass,
        format!(
            "Ĉ(0) = {c80:.6} vs prediction {} × ({per_orientation:.6}) = {expected:.6} \
             (two orientation families), rel err {rel:.4} (tol 0.10); \
             K-stability |Ĉ₆₀ − Ĉ₁₀₀|/|Ĉ₁₀₀| = {stability:.4} (tol 0.05)",
            pred.orientation_multiplicity
        ),
    ))
}

/// Criterion 3: triangle prefers (t−L)₊ with Ĉ < 0; square prefers (t−L)₋
/// with prefactor −1 and |Ĉ| within 15% of the two-orientation magnitude.
fn side_sign_discrimination() -> CheckResult {
    let tri = fit_ngon_both(3, 80.0, 0.3)?;
    let tri_ok = tri.preferred().side == SingularSide::Plus && tri.preferred().c_hat < 0.0;

    // the pentagon length 2·5·sin(π/5) ≈ 5.878 sits 0.221 from 4√2, so the
    // square window must be narrower than the default triangle window
    let sq_pred = predict_singularity(4, 1.0, 0.0);
    let sq = fit_ngon_both(4, 80.0, 0.18)?;
    let per_orientation = 0.25 * (PI / 4.0).sin().powf(1.5);
    let expected_mag = 2.0 * per_orientation;
    let sq_mag_err = (sq.minus.c_hat.abs() - expected_mag).abs() / expected_mag;
    let sq_ok = sq.preferred().side == SingularSide::Minus
        && sq_pred.sign_prefactor == -1.0
        && sq.minus.c_hat < 0.0
        && sq_mag_err <= 0.15;
    Ok((
        tri_ok && sq_ok,
        format!(
            "triangle: preferred side {:?}, Ĉ = {:.6} (residual {:.2e} vs {:.2e}); \
             square: preferred side {:?}, Ĉ = {:.6}, |Ĉ| vs 2 × ({per_orientation:.6}) = \
             {expected_mag:.6}, rel err {sq_mag_err:.4} (tol 0.15), sign prefactor {:+.0}",
            tri.preferred().side,
            tri.preferred().c_hat,
            tri.plus.residual,
            tri.minus.residual,
            sq.preferred().side,
            sq.minus.c_hat,
            sq_pred.sign_prefactor
        ),
    ))
}

/// Criterion 4: torus peak-weight ratios follow cos(A₀·e₁) within 0.03 and
/// are invariant under A₀ → A₀ + 2πδ* to 1e−9.
fn torus_peak_ratios() -> CheckResult {
    let lattice = reference_lattice()?;
    let gen = lattice_genericity(&lattice, 10.0);
    if !gen.pass {
        return Ok((false, format!("lattice genericity failed at bound 10: {:?}", gen.witness)));
    }
    let alphas = [0.0, PI / 3.0, PI / 2.0, PI];
    let w0 = torus_weight(0.0, None)?;
    if w0 == 0.0 {
        return Ok((false, "zero-flux weight vanished".into()));
    }
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for &a in &alphas {
        let w = torus_weight(a, None)?;
        let err = (w / w0 - a.cos()).abs();
        worst = worst.max(err);
        rows.push(format!("α₁={a:.4}: ratio {:+.4} vs cos {:+.4}", w / w0, a.cos()));
    }
    let w_base = torus_weight(PI / 3.0, None)?;
    let w_shift = torus_weight(PI / 3.0, Some((1, 1)))?;
    let inv = (w_base - w_shift).abs();
    let pass = worst <= 0.03 && inv <= 1e-9 * w_base.abs().max(1.0);
    Ok((
        pass,
        format!(
            "max ratio error {worst:.4} (tol 0.03); {}; gauge-shift invariance |Δw| = {inv:.2e} \
             (tol 1e−9)",
            rows.join("; ")
        ),
    ))
}

/// Criterion 5: frame closed form, symplecticity, Hessian determinant by two
/// routes, det-branch winding, resolved sign, Im M positivity.
fn frame_and_beam_suite() -> CheckResult {
    let r = 1.0;
    let g = Geometry::disk(r);
    let h = 3.0f64.sqrt() * r;
    let l = 3.0 * h;

    // frame closed form at v = 0 (closure) and v = 0.2 (off-midpoint)
    let mut frame_err = 0.0f64;
    for &v in &[0.0, 0.2] {
        let (z, eta) = triangle_start(r, v);
        let path = trace_ray(z, eta, l + 0.4 * h, &g)?;
        for &t in &[l - 0.25, l, l + 0.25] {
            let fd = frame_at(&path, t)?;
            let cf = triangle_frame_closed_form(r, v, t)?;
            frame_err = frame_err.max(frame_rel_err(&fd, &cf));
        }
    }
    let frame_ok = frame_err <= 1e-6;

    let (z, eta) = triangle_start(r, 0.0);
    let path = trace_ray(z, eta, l + 0.4 * h, &g)?;
    let f_l = frame_at(&path, l)?;
    let mut defect = f_l.symplectic_defect();

    // Hessian determinant: both routes vs −4√3
    let hd = hessian_det_at_closure(&f_l, eta)?;
    let expected = num_complex::Complex64::new(-4.0 * 3.0f64.sqrt(), 0.0);
    let hes_direct_err = (hd.direct - expected).norm();
    let hes_closed_err = (hd.closed_form - expected).norm();
    let hes_ok = hes_direct_err <= 1e-6 && hes_closed_err <= 1e-6;

    // winding to the third focal time
    let focals = focal_times(&path)?;
    let t3 = *focals.get(2).ok_or("fewer than three focal times")?;
    let st3 = evolve_beam(&path, None, t3)?;
    let winding_err = (st3.theta_det - 5.5 * PI).abs();
    let winding_ok = winding_err <= 1e-3;

    // resolved sign at closure
    let st_l = evolve_beam(&path, None, l)?;
    let sign = resolve_sign(sqrt_det_tracked(&st_l), stationary_branch(&f_l, eta)?);
    let sign_ok = sign.sign == -1;

    // Im M positive definite at 100 seeded random non-focal times
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x00f1);
    let guard = 3.0 * REFLECTION_GUARD * r.max(1.0);
    let mut min_eig = f64::INFINITY;
    let mut checked = 0usize;
    while checked < 100 {
        let t: f64 = rng.gen_range(0.02 * l..l);
        if path.reflection_times().any(|tr| (t - tr).abs() < guard) {
            continue;
        }
        let st = evolve_beam(&path, None, t)?;
        defect = defect.max(st.frame.symplectic_defect());
        min_eig = min_eig.min(im_m_min_eigenvalue(&st.m));
        checked += 1;
    }
    let im_ok = min_eig > 0.0;
    let defect_ok = defect <= 1e-8;

    let pass = frame_ok && defect_ok && hes_ok && winding_ok && sign_ok && im_ok;
    Ok((
        pass,
        format!(
            "closed-form frame max rel err {frame_err:.2e} (tol 1e−6); symplectic defect \
             {defect:.2e} (tol 1e−8); Hessian det −4√3: direct Δ {hes_direct_err:.2e}, \
             closed-form Δ {hes_closed_err:.2e} (tol 1e−6); |θ(t₃) − 11π/2| = {winding_err:.2e} \
             (tol 1e−3); resolved sign {} (want −1); min Im M eigenvalue {min_eig:.3e} over 100 \
             seeded times",
            sign.sign
        ),
    ))
}

/// Criterion 6: Bessel zeros, annulus half-integer channel, FD oracle,
/// multiset flux identities, Weyl count.
fn spectral_solver_suite() -> CheckResult {
    // j_{1/2,n} = nπ
    let zeros = bessel_j_zeros(0.5, 40.0 * PI + 1.0)?;
    let mut zero_err = 0.0f64;
    for (i, &z) in zeros.iter().enumerate().take(40) {
        zero_err = zero_err.max((z - (i as f64 + 1.0) * PI).abs());
    }
    let zeros_ok = zeros.len() >= 40 && zero_err <= 1e-12;

    // annulus ν = 1/2 channel: k = nπ/(R − r0) = 2nπ
    let annulus = DiskFluxProblem::new(1.0, 0.5, PI)?;
    let sp = crate::spectra::annulus_flux_spectrum(&annulus, 30.0)?;
    let mut half_ks: Vec<f64> = sp
        .entries
        .iter()
        .filter_map(|e| match e {
            crate::spectra::SpectrumEntry::Circular(m) if (m.nu - 0.5).abs() < 1e-12 => Some(m.k),
            _ => None,
        })
        .collect();
    half_ks.sort_by(f64::total_cmp);
    let mut annulus_err = 0.0f64;
    let mut annulus_count_ok = !half_ks.is_empty();
    for pair in half_ks.chunks(2) {
        // m = 0 and m = −1 both give ν = 1/2, so roots arrive in pairs
        annulus_count_ok &= pair.len() == 2 && (pair[0] - pair[1]).abs() <= 1e-10;
    }
    let mut n_th = 1.0f64;
    for pair in half_ks.chunks(2) {
        annulus_err = annulus_err.max((pair[0] - 2.0 * n_th * PI).abs());
        n_th += 1.0;
    }
    let annulus_ok = annulus_count_ok && annulus_err <= 1e-10;

    // FD oracle vs Bessel solver, lowest 10 eigenvalues
    let mut fd_err = 0.0f64;
    for &alpha in &[0.0, 0.3 * PI, 0.7 * PI, PI] {
        let p = DiskFluxProblem::disk(1.0, alpha)?;
        let exact = disk_flux_spectrum(&p, 9.0)?;
        let lam: Vec<f64> = exact.lambdas().take(10).collect();
        if lam.len() < 10 {
            return Ok((false, "exact spectrum produced fewer than 10 eigenvalues".into()));
        }
        let fd = fd_oracle_spectrum(&p, FdGrid::default(), 10)?;
        for (e, f) in lam.iter().zip(fd.iter()) {
            fd_err = fd_err.max((e - f).abs() / e);
        }
    }
    let fd_ok = fd_err <= 0.005;

    // multiset identities: spectrum(α) = spectrum(−α) = spectrum(α + 2π)
    let alpha = 0.7 * PI;
    let lam_a: Vec<f64> = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, alpha)?, 25.0)?
        .lambdas()
        .collect();
    let lam_neg: Vec<f64> = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, -alpha)?, 25.0)?
        .lambdas()
        .collect();
    let lam_shift: Vec<f64> =
        disk_flux_spectrum(&DiskFluxProblem::disk(1.0, alpha + 2.0 * PI)?, 25.0)?
            .lambdas()
            .collect();
    let multiset_ok = lam_a == lam_neg && lam_a == lam_shift && !lam_a.is_empty();

    // Weyl count at K = 100
    let weyl_spec = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, 0.3)?, 100.0)?;
    let weyl_expected = 100.0f64.powi(2) * PI / (4.0 * PI);
    let weyl_err = (weyl_spec.len() as f64 - weyl_expected).abs() / weyl_expected;
    let weyl_ok = weyl_err <= 0.03;

    let pass = zeros_ok && annulus_ok && fd_ok && multiset_ok && weyl_ok;
    Ok((
        pass,
        format!(
            "max |j_{{1/2,n}} − nπ| = {zero_err:.2e} over n ≤ 40 (tol 1e−12); annulus ν=1/2 max \
             |k − 2nπ| = {annulus_err:.2e} over {} roots (tol 1e−10); FD-vs-Bessel max rel err \
             {fd_err:.2e} over 4 fluxes × 10 eigenvalues (tol 5e−3); multiset \
             α/−α/α+2π identities exact: {multiset_ok} ({} eigenvalues); Weyl count {} vs \
             {weyl_expected:.0}, rel err {weyl_err:.4} (tol 0.03)",
            half_ks.len(),
            lam_a.len(),
            weyl_spec.len()
        ),
    ))
}

/// Criterion 7: no periodic length within 0.3 of 3√3 except itself; nearest
/// competitor is 4√2 at distance ≈ 0.460.
fn length_isolation() -> CheckResult {
    let lengths = length_spectrum(&Geometry::disk(1.0), 7.0, 64);
    let target = 3.0 * 3.0f64.sqrt();
    let iso = verify_isolation(&lengths, target, 0.3);
    let nearest = iso.nearest_competitor.ok_or("no competitor found")?;
    let gap = iso.gap.ok_or("no gap reported")?;
    let expected_nearest = 4.0 * 2.0f64.sqrt();
    let expected_gap = expected_nearest - target;
    let pass = iso.pass
        && (nearest - expected_nearest).abs() <= 1e-9
        && (gap - expected_gap).abs() <= 1e-3;
    Ok((
        pass,
        format!(
            "isolation pass = {}; nearest competitor {nearest:.6} (want 4√2 = \
             {expected_nearest:.6}) at gap {gap:.6} (want ≈ {expected_gap:.3})",
            iso.pass
        ),
    ))
}

/// Criterion 8: fit_amplitude recovers a planted coefficient −0.2327 over a
/// linear background within 1%.
fn planted_model_recovery() -> CheckResult {
    let planted = -0.2327;
    let window = WindowSpec::new(80.0)?;
    let pred = predict_singularity(3, 1.0, 0.0);
    let l = pred.length;
    let grid = TimeGrid::covering(l - 0.4, l + 0.4, window.max_grid_spacing())?;
    let times = grid.times();
    let mut values = Vec::with_capacity(times.len());
    for &t in &times {
        let shape = side_shape(&window, SingularSide::Plus, t - l)?;
        values.push(planted * shape + 0.8 + 1.7 * (t - l));
    }
    let tr = TraceSamples {
        times,
        values,
        window,
        spectrum_cutoff: window.cutoff,
        weight_sum: 0.0,
    };
    let lengths = length_spectrum(&Geometry::disk(1.0), l + 1.0, 64);
    let fit = fit_amplitude(&tr, &pred, &lengths, 0.3, 1)?;
    let rel = (fit.c_hat - planted).abs() / planted.abs();
    Ok((
        rel <= 0.01,
        format!(
            "recovered Ĉ = {:.6} vs planted {planted} (rel err {rel:.2e}, tol 1e−2), \
             residual {:.2e}",
            fit.c_hat, fit.residual
        ),
    ))
}
