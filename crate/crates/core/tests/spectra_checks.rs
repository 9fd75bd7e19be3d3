//! Spectral solver checks: closed-form channels, the finite-difference
//! oracle, flux symmetries, counting laws, and gauge reduction.

use fluxtrace::beams::{FourierCoeff, GaugeField};
use fluxtrace::billiards::Vec2;
use fluxtrace::spectra::{
    annulus_flux_spectrum, bessel_j_zeros, disk_flux_spectrum, fd_oracle_spectrum,
    lattice_genericity, reduce_to_constant_gauge, torus_spectrum, DiskFluxProblem, FdGrid,
    Lattice, SpectraError, SpectrumEntry, TorusProblem,
};
use num_complex::Complex64;

const PI: f64 = std::f64::consts::PI;

/// k values of one angular channel, in spectral order.
fn channel_ks(s: &fluxtrace::spectra::Spectrum, m: i32) -> Vec<f64> {
    s.entries
        .iter()
        .filter_map(|e| match e {
            SpectrumEntry::Circular(mode) if mode.m == m => Some(mode.k),
            _ => None,
        })
        .collect()
}

#[test]
fn half_integer_zeros_are_multiples_of_pi() {
    let zeros = bessel_j_zeros(0.5, 20.5 * PI).unwrap();
    assert_eq!(zeros.len(), 20);
    for (i, z) in zeros.iter().enumerate() {
        let want = (i + 1) as f64 * PI;
        assert!((z - want).abs() < 1e-12, "j_{{1/2,{}}} = {z} vs {want}", i + 1);
    }
}

#[test]
fn half_integer_annulus_channel_is_a_sine_series() {
    // flux π makes ν = 1/2 in the channels m = 0 and m = −1; on r0 = 1/2 the
    // radial problem is sin(k(r − r0)) = 0, so k = nπ/(R − r0) = 2nπ
    let p = DiskFluxProblem::new(1.0, 0.5, PI).unwrap();
    let s = annulus_flux_spectrum(&p, 30.0).unwrap();
    let ks0 = channel_ks(&s, 0);
    let ks1 = channel_ks(&s, -1);
    assert_eq!(ks0.len(), 4, "2nπ ≤ 30 has four solutions");
    for (i, k) in ks0.iter().enumerate() {
        let want = 2.0 * (i + 1) as f64 * PI;
        assert!((k - want).abs() < 1e-10, "k_{} = {k} vs {want}", i + 1);
    }
    // both channels sit at the same order ν = 1/2, hence identical roots
    assert_eq!(ks0, ks1);
}

#[test]
fn finite_difference_oracle_agrees_on_low_disk_modes() {
    let p = DiskFluxProblem::disk(1.0, 1.1).unwrap();
    let exact: Vec<f64> = disk_flux_spectrum(&p, 8.0).unwrap().lambdas().take(6).collect();
    let fd = fd_oracle_spectrum(&p, FdGrid::default(), 6).unwrap();
    assert_eq!(exact.len(), 6);
    for (e, f) in exact.iter().zip(&fd) {
        let rel = (e - f).abs() / e;
        assert!(rel < 5e-3, "exact {e} vs finite differences {f} (rel {rel:.2e})");
    }
}

#[test]
fn disk_spectrum_is_even_in_flux_and_periodic() {
    let alpha = 0.7 * PI;
    let s_plus = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, alpha).unwrap(), 25.0).unwrap();
    let s_minus = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, -alpha).unwrap(), 25.0).unwrap();
    // α ↦ −α relabels channels m ↦ −m with bitwise-equal orders
    let l_plus: Vec<f64> = s_plus.lambdas().collect();
    let l_minus: Vec<f64> = s_minus.lambdas().collect();
    assert_eq!(l_plus, l_minus);

    let s_shift =
        disk_flux_spectrum(&DiskFluxProblem::disk(1.0, alpha + 2.0 * PI).unwrap(), 25.0).unwrap();
    assert_eq!(s_plus.len(), s_shift.len());
    for (a, b) in s_plus.lambdas().zip(s_shift.lambdas()) {
        assert!((a - b).abs() < 1e-12 * (1.0 + a), "λ {a} vs shifted {b}");
    }
}

#[test]
fn disk_fundamental_mode() {
    let s = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, 0.0).unwrap(), 12.0).unwrap();
    let first = s.entries.first().unwrap();
    // λ₁ = j_{0,1}²
    assert!((first.lambda() - 5.7831859629467845).abs() < 1e-9);
    if let SpectrumEntry::Circular(m) = first {
        assert_eq!((m.m, m.n), (0, 1));
    } else {
        panic!("disk spectrum must consist of circular modes");
    }
}

#[test]
fn thin_obstacle_shifts_only_the_log_sensitive_channel() {
    // r0 = 1e−3: the m = 0 channel feels the obstacle through a logarithm
    // and moves from j_{0,1} ≈ 2.405 to ≈ 2.655; |m| = 1 barely moves
    let p = DiskFluxProblem::new(1.0, 1e-3, 0.0).unwrap();
    let s = annulus_flux_spectrum(&p, 6.0).unwrap();
    let k0 = channel_ks(&s, 0)[0];
    assert!((k0 - 2.6548141679429728).abs() < 1e-9, "m = 0 root {k0}");
    let j01 = 2.4048255576957729;
    assert!((k0 - j01) / j01 > 0.1, "the m = 0 shift is large");

    let k1 = channel_ks(&s, 1)[0];
    assert!((k1 - 3.8317177802909292).abs() < 1e-9, "m = 1 root {k1}");
    let j11 = 3.8317059702075123;
    assert!(k1 > j11, "an obstacle raises eigenvalues");
    assert!((k1 - j11) / j11 < 1e-4, "the |m| = 1 shift is tiny");
}

#[test]
fn disk_count_matches_two_term_weyl_law() {
    let s = disk_flux_spectrum(&DiskFluxProblem::disk(1.0, 0.3).unwrap(), 100.0).unwrap();
    // N(K) ≈ Area·K²/(4π) − Perimeter·K/(4π) = K²/4 − K/2
    let weyl = 100.0f64.powi(2) / 4.0 - 100.0 / 2.0;
    let rel = (s.len() as f64 - weyl).abs() / weyl;
    assert!(rel < 0.03, "count {} vs Weyl {weyl} (rel {rel:.3})", s.len());
}

#[test]
fn square_lattice_torus_low_modes() {
    let lattice = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
    let s = torus_spectrum(&TorusProblem { lattice, a0: Vec2::new(0.0, 0.0) }, 7.0);
    assert_eq!(s.len(), 5, "0 and the four copies of 4π² lie below 49");
    let lambdas: Vec<f64> = s.lambdas().collect();
    assert_eq!(lambdas[0], 0.0);
    for l in &lambdas[1..] {
        assert!((l - 4.0 * PI * PI).abs() < 1e-12 * l, "λ = {l}");
    }
}

#[test]
fn torus_spectrum_is_invariant_under_dual_shifts() {
    let lattice = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07)).unwrap();
    let a0 = lattice.dual_vector(1, 0) * 0.4;
    let shifted = a0 + lattice.dual_vector(1, 0) * (2.0 * PI);
    let s1 = torus_spectrum(&TorusProblem { lattice: lattice.clone(), a0 }, 30.0);
    let s2 = torus_spectrum(&TorusProblem { lattice, a0: shifted }, 30.0);
    assert_eq!(s1.len(), s2.len());
    for (a, b) in s1.lambdas().zip(s2.lambdas()) {
        assert!((a - b).abs() < 1e-9 * (1.0 + a), "λ {a} vs {b}");
    }
}

#[test]
fn genericity_passes_for_the_reference_lattice_and_fails_for_the_square() {
    let generic = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07)).unwrap();
    let report = lattice_genericity(&generic, 10.0);
    assert!(report.pass, "witness: {:?}", report.witness);

    let square = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
    let report = lattice_genericity(&square, 3.0);
    assert!(!report.pass);
    let ((a1, a2), (b1, b2)) = report.witness.unwrap();
    let la = square.vector(a1, a2).norm();
    let lb = square.vector(b1, b2).norm();
    assert!((la - lb).abs() < 1e-12, "witness norms {la} vs {lb}");
}

#[test]
fn gauge_reduction_recovers_the_scalar_modes() {
    let lattice = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07)).unwrap();
    let a0 = Vec2::new(0.2, -0.1);
    let make = |m1: i32, m2: i32, phi: Complex64| {
        let delta = lattice.dual_vector(m1, m2);
        let factor = Complex64::new(0.0, 2.0 * PI) * phi;
        FourierCoeff { m1, m2, ax: factor * delta.x, ay: factor * delta.y }
    };
    let modes = [
        ((1, 0), Complex64::new(0.3, -0.2)),
        ((-1, 0), Complex64::new(0.3, 0.2)),
        ((2, -1), Complex64::new(-0.05, 0.11)),
        ((-2, 1), Complex64::new(-0.05, -0.11)),
    ];
    let coeffs: Vec<FourierCoeff> =
        modes.iter().map(|&((m1, m2), phi)| make(m1, m2, phi)).collect();
    let field = GaugeField::FourierPeriodic { lattice, a0, coeffs };

    let (a0_rec, phis) = reduce_to_constant_gauge(&field).unwrap();
    assert!((a0_rec - a0).norm() < 1e-12);
    assert_eq!(phis.len(), modes.len());
    for &((m1, m2), phi) in &modes {
        let got = phis
            .iter()
            .find(|p| (p.m1, p.m2) == (m1, m2))
            .unwrap_or_else(|| panic!("mode ({m1}, {m2}) missing"));
        assert!((got.value - phi).norm() < 1e-12, "φ_({m1},{m2}) = {} vs {phi}", got.value);
    }
}

#[test]
fn gauge_reduction_rejects_nonzero_curl() {
    let lattice = Lattice::new(Vec2::new(1.0, 0.0), Vec2::new(0.31, 1.07)).unwrap();
    let delta = lattice.dual_vector(1, 1);
    // a coefficient perpendicular to δ is pure curl
    let bad = FourierCoeff {
        m1: 1,
        m2: 1,
        ax: Complex64::new(-delta.y, 0.0),
        ay: Complex64::new(delta.x, 0.0),
    };
    let field = GaugeField::FourierPeriodic {
        lattice,
        a0: Vec2::new(0.0, 0.0),
        coeffs: vec![bad],
    };
    match reduce_to_constant_gauge(&field) {
        Err(SpectraError::NotCurlFree(residual)) => assert!(residual > 0.5),
        other => panic!("expected a curl rejection, got {other:?}"),
    }
}
