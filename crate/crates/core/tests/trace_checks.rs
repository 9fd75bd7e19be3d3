//! Trace-side checks: pairing normalization of the one-sided shape, trace
//! linearity, singularity location, and flux parity.

use fluxtrace::billiards::Vec2;
use fluxtrace::integrate_gk;
use fluxtrace::spectra::{
    disk_flux_spectrum, torus_spectrum, DiskFluxProblem, Lattice, Spectrum, TorusProblem,
};
use fluxtrace::trace::{
    bandlimited_model, bandlimited_trace, predict_singularity, side_shape, SingularSide,
    TimeGrid, WindowSpec,
};

const PI: f64 = std::f64::consts::PI;

/// The plus shape must pair with smooth bump functions exactly like the
/// finite part of (t − L)₊^{−3/2}: ⟨shape, g⟩ = 4∫₀^∞ g′(L + u²) du for any
/// g whose transform stays inside the flat part of the window.
#[test]
fn plus_shape_pairs_like_the_inverse_three_halves_power() {
    let k = 40.0;
    let window = WindowSpec::new(k).unwrap();
    let l = 3.0;
    let sigma = 0.4; // ĝ(K/2) ~ e^{−σ²K²/8} ≈ 1e−14: no window distortion
    let g = |t: f64| (-(t - l) * (t - l) / (2.0 * sigma * sigma)).exp();
    let gp = |t: f64| -(t - l) / (sigma * sigma) * g(t);

    // band-limited integrand: the trapezoid rule at the trace grid spacing
    // is spectrally accurate
    let spacing = window.max_grid_spacing();
    let n = (6.0 / spacing).ceil() as usize;
    let dt = 6.0 / n as f64;
    let mut lhs = 0.0;
    for j in 0..=n {
        let tau = -3.0 + j as f64 * dt;
        let weight = if j == 0 || j == n { 0.5 } else { 1.0 };
        lhs += weight * side_shape(&window, SingularSide::Plus, tau).unwrap() * g(l + tau);
    }
    lhs *= dt;

    let rhs = 4.0 * integrate_gk(|u| gp(l + u * u), 0.0, 3.0, 1e-12).unwrap();
    assert!(rhs < 0.0, "a centered bump must pair negatively");
    let rel = ((lhs - rhs) / rhs).abs();
    assert!(rel < 1e-6, "pairing {lhs} vs {rhs} (rel {rel:.2e})");
}

#[test]
fn trace_is_additive_over_spectra() {
    let window = WindowSpec::new(12.0).unwrap();
    let grid = TimeGrid::covering(1.0, 3.0, window.max_grid_spacing()).unwrap();
    let disk = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, 0.4).unwrap(), 12.0).unwrap();
    let lattice = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07)).unwrap();
    let torus = torus_spectrum(&TorusProblem { lattice, a0: Vec2::new(0.0, 0.0) }, 12.0);
    let merged = Spectrum::merge(&disk, &torus);

    let t_disk = bandlimited_trace(&disk, &window, &grid).unwrap();
    let t_torus = bandlimited_trace(&torus, &window, &grid).unwrap();
    let t_merged = bandlimited_trace(&merged, &window, &grid).unwrap();

    assert!(
        (t_merged.weight_sum - (t_disk.weight_sum + t_torus.weight_sum)).abs() < 1e-12,
        "weight sums must add"
    );
    for i in 0..t_merged.len() {
        let sum = t_disk.values[i] + t_torus.values[i];
        assert!(
            (t_merged.values[i] - sum).abs() < 1e-12 * (1.0 + sum.abs()),
            "sample {i}: {} vs {sum}",
            t_merged.values[i]
        );
    }
}

#[test]
fn triangle_dip_sits_at_the_orbit_length() {
    let k = 60.0;
    let window = WindowSpec::new(k).unwrap();
    let pred = predict_singularity(3, 1.0, 0.0);
    let grid = TimeGrid::covering(
        pred.length - 0.45,
        pred.length + 0.45,
        window.max_grid_spacing(),
    )
    .unwrap();
    let spectrum = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, 0.0).unwrap(), k).unwrap();
    let trace = bandlimited_trace(&spectrum, &window, &grid).unwrap();
    let model = bandlimited_model(&pred, &window, &grid).unwrap();

    let argmin = |values: &[f64]| -> f64 {
        let (i, _) = values
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.total_cmp(b))
            .unwrap();
        trace.times[i]
    };
    let t_trace = argmin(&trace.values);
    let t_model = argmin(&model);
    assert!(
        (t_trace - t_model).abs() < 0.05,
        "trace dip at {t_trace}, model dip at {t_model}"
    );
    assert!((t_trace - pred.length).abs() < 0.1, "dip at {t_trace} vs L = {}", pred.length);
}

#[test]
fn trace_is_even_in_the_flux() {
    let window = WindowSpec::new(25.0).unwrap();
    let grid = TimeGrid::covering(4.9, 5.5, window.max_grid_spacing()).unwrap();
    let plus = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, 0.7 * PI).unwrap(), 25.0).unwrap();
    let minus = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, -0.7 * PI).unwrap(), 25.0).unwrap();
    let t_plus = bandlimited_trace(&plus, &window, &grid).unwrap();
    let t_minus = bandlimited_trace(&minus, &window, &grid).unwrap();
    // the spectra are identical as sorted multisets, so the traces agree
    // bitwise: the trace only sees |flux| (zero-field Aharonov–Bohm parity)
    assert_eq!(t_plus.values, t_minus.values);
    assert_eq!(t_plus.weight_sum, t_minus.weight_sum);
}
