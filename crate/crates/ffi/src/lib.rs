//! C ABI over the fluxtrace library.
//!
//! Conventions:
//! - Every fallible call returns [`FtStatus`] (zero on success) and writes
//!   results through out-pointers.
//! - On failure a thread-local message is recorded; read it with
//!   [`ft_last_error_message`]. The pointer stays valid until the next
//!   failing call on the same thread.
//! - [`FtSpectrum`] handles come from the `*_new` constructors and are
//!   released with [`ft_spectrum_free`]. A handle is immutable after
//!   construction.
//!
//! The committed header `include/fluxtrace.h` is regenerated by the build
//! script whenever this file changes.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::fmt::Display;

use fluxtrace::billiards::{length_spectrum, Geometry, Vec2};
use fluxtrace::neumaier_sum;
use fluxtrace::spectra::{
    annulus_flux_spectrum, disk_flux_spectrum, torus_spectrum, DiskFluxProblem, Lattice, Spectrum,
    TorusProblem,
};
use fluxtrace::trace::{
    bandlimited_trace, fit_amplitude, predict_singularity, SingularSide, TimeGrid, WindowSpec,
};

/// Outcome of a C-API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FtStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument value was rejected before any computation ran.
    InvalidArgument = 2,
    /// The computation itself failed; see `ft_last_error_message`.
    NumericalError = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: FtStatus, msg: impl Display) -> FtStatus {
    let text = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("NULs stripped"));
    status
}

/// Message describing the most recent failure on the calling thread, empty
/// if none has occurred yet.
///
/// The pointer is owned by the library and stays valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn ft_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ft_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Extra context a circular (disk/annulus) spectrum keeps for fitting.
struct CircularContext {
    geometry: Geometry,
    alpha: f64,
}

/// An eigenvalue list λ₀ ≤ λ₁ ≤ … ≤ K², complete below its cutoff.
pub struct FtSpectrum {
    spectrum: Spectrum,
    circular: Option<CircularContext>,
}

unsafe fn write_handle(
    out: *mut *mut FtSpectrum,
    spectrum: Spectrum,
    circular: Option<CircularContext>,
) -> FtStatus {
    *out = Box::into_raw(Box::new(FtSpectrum { spectrum, circular }));
    FtStatus::Ok
}

/// Dirichlet spectrum of the flux disk (`r_inner = 0`) or annulus
/// (`r_inner > 0`) with radius `r_outer` and flux `alpha` (radians), complete
/// up to λ ≤ `cutoff`².
///
/// # Safety
/// `out` must be a valid pointer to an `FtSpectrum*` slot. On success it
/// receives a handle that must be released with [`ft_spectrum_free`].
#[no_mangle]
pub unsafe extern "C" fn ft_disk_spectrum_new(
    r_outer: f64,
    r_inner: f64,
    alpha: f64,
    cutoff: f64,
    out: *mut *mut FtSpectrum,
) -> FtStatus {
    if out.is_null() {
        return fail(FtStatus::NullPointer, "out pointer is null");
    }
    if !(cutoff.is_finite() && cutoff > 0.0) {
        return fail(FtStatus::InvalidArgument, format!("cutoff must be positive, got {cutoff}"));
    }
    let problem = match DiskFluxProblem::new(r_outer, r_inner, alpha) {
        Ok(p) => p,
        Err(e) => return fail(FtStatus::InvalidArgument, e),
    };
    let spectrum = if r_inner > 0.0 {
        annulus_flux_spectrum(&problem, cutoff)
    } else {
        disk_flux_spectrum(&problem, cutoff)
    };
    match spectrum {
        Ok(s) => {
            let geometry = Geometry::new(r_outer, r_inner).expect("validated by problem");
            write_handle(out, s, Some(CircularContext { geometry, alpha }))
        }
        Err(e) => fail(FtStatus::NumericalError, e),
    }
}

/// Spectrum λ_δ = |2πδ − A₀|² of the flat torus `R²/L` with lattice basis
/// `e1`, `e2` and constant gauge covector `a0`, complete up to λ ≤ `cutoff`².
///
/// # Safety
/// `out` must be a valid pointer to an `FtSpectrum*` slot. On success it
/// receives a handle that must be released with [`ft_spectrum_free`].
#[no_mangle]
pub unsafe extern "C" fn ft_torus_spectrum_new(
    e1_x: f64,
    e1_y: f64,
    e2_x: f64,
    e2_y: f64,
    a0_x: f64,
    a0_y: f64,
    cutoff: f64,
    out: *mut *mut FtSpectrum,
) -> FtStatus {
    if out.is_null() {
        return fail(FtStatus::NullPointer, "out pointer is null");
    }
    if !(cutoff.is_finite() && cutoff > 0.0) {
        return fail(FtStatus::InvalidArgument, format!("cutoff must be positive, got {cutoff}"));
    }
    if !(a0_x.is_finite() && a0_y.is_finite()) {
        return fail(FtStatus::InvalidArgument, "gauge covector must be finite");
    }
    let lattice = match Lattice::new(Vec2::new(e1_x, e1_y), Vec2::new(e2_x, e2_y)) {
        Ok(l) => l,
        Err(e) => return fail(FtStatus::InvalidArgument, e),
    };
    let problem = TorusProblem { lattice, a0: Vec2::new(a0_x, a0_y) };
    write_handle(out, torus_spectrum(&problem, cutoff), None)
}

/// Release a spectrum handle. Null is a no-op.
///
/// # Safety
/// `s` must be null or a handle returned by a constructor and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ft_spectrum_free(s: *mut FtSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of eigenvalues in the spectrum; zero for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_spectrum_len(s: *const FtSpectrum) -> usize {
    if s.is_null() {
        0
    } else {
        (&*s).spectrum.len()
    }
}

/// Fetch eigenvalue `index` (ascending order) into `out`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid `double` slot.
#[no_mangle]
pub unsafe extern "C" fn ft_spectrum_eigenvalue(
    s: *const FtSpectrum,
    index: usize,
    out: *mut f64,
) -> FtStatus {
    if s.is_null() || out.is_null() {
        return fail(FtStatus::NullPointer, "spectrum and out must be non-null");
    }
    let spectrum = &(&*s).spectrum;
    match spectrum.entries.get(index) {
        Some(e) => {
            *out = e.lambda();
            FtStatus::Ok
        }
        None => fail(
            FtStatus::InvalidArgument,
            format!("index {index} out of range for spectrum of length {}", spectrum.len()),
        ),
    }
}

/// Evaluate the band-limited wave trace `T_χ(t) = Σ χ(√λ/K)·cos(t√λ)` at
/// `n_times` arbitrary times, writing into `out[0..n_times]`.
///
/// `cutoff` is the window's K and must not exceed the spectrum's own cutoff:
/// eigenvalues above it would be missing from the sum.
///
/// # Safety
/// `s` must be a live handle; `times` and `out` must point to `n_times`
/// readable / writable doubles.
#[no_mangle]
pub unsafe extern "C" fn ft_trace_eval(
    s: *const FtSpectrum,
    cutoff: f64,
    times: *const f64,
    n_times: usize,
    out: *mut f64,
) -> FtStatus {
    if s.is_null() || times.is_null() || out.is_null() {
        return fail(FtStatus::NullPointer, "spectrum, times and out must be non-null");
    }
    let spectrum = &(&*s).spectrum;
    let window = match WindowSpec::new(cutoff) {
        Ok(w) => w,
        Err(e) => return fail(FtStatus::InvalidArgument, e),
    };
    if !spectrum.complete || spectrum.cutoff + 1e-9 < cutoff {
        return fail(
            FtStatus::InvalidArgument,
            format!(
                "window cutoff {cutoff} exceeds the spectrum's completeness cutoff {}",
                spectrum.cutoff
            ),
        );
    }
    // Same sum as the library's gridded trace: fixed spectrum order, χ = 0
    // tail dropped, compensated summation per sample.
    let terms: Vec<(f64, f64)> = spectrum
        .lambdas()
        .map(|l| l.max(0.0).sqrt())
        .map(|omega| (window.chi(omega), omega))
        .filter(|(chi, _)| *chi != 0.0)
        .collect();
    for i in 0..n_times {
        let t = *times.add(i);
        if !t.is_finite() {
            return fail(FtStatus::InvalidArgument, format!("time sample {i} is not finite"));
        }
        let value = neumaier_sum(terms.iter().map(|&(chi, omega)| chi * (t * omega).cos()));
        *out.add(i) = value;
    }
    FtStatus::Ok
}

/// Closed-form prediction for the wave-trace singularity at the inscribed
/// regular N-gon of a circular domain.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct FtPrediction {
    pub n_sides: u32,
    /// orbit length L = 2NR sin(π/N)
    pub length: f64,
    /// +1: singular shape (t−L)₊^{−3/2}; −1: (t−L)₋^{−3/2}
    pub side: i32,
    pub sign_prefactor: f64,
    /// signed coefficient of one traversal orientation
    pub coeff_per_orientation: f64,
    /// congruent orientation families sharing the length (2 for N ≥ 3)
    pub orientation_multiplicity: u32,
    /// coefficient a trace fit should recover:
    /// `coeff_per_orientation × orientation_multiplicity`
    pub trace_coefficient: f64,
    /// flux (radians) the prediction was evaluated at
    pub flux: f64,
}

/// Stationary-phase prediction for the N-gon singularity at flux `alpha`.
///
/// Requires `n_sides ≥ 2` and `r_outer > 0`.
///
/// # Safety
/// `out` must be a valid `FtPrediction` slot.
#[no_mangle]
pub unsafe extern "C" fn ft_predict_ngon(
    n_sides: u32,
    r_outer: f64,
    alpha: f64,
    out: *mut FtPrediction,
) -> FtStatus {
    if out.is_null() {
        return fail(FtStatus::NullPointer, "out pointer is null");
    }
    if n_sides < 2 {
        return fail(FtStatus::InvalidArgument, "inscribed polygons need at least 2 sides");
    }
    if !(r_outer.is_finite() && r_outer > 0.0) {
        return fail(FtStatus::InvalidArgument, format!("radius must be positive, got {r_outer}"));
    }
    if !alpha.is_finite() {
        return fail(FtStatus::InvalidArgument, "flux must be finite");
    }
    let p = predict_singularity(n_sides, r_outer, alpha);
    *out = FtPrediction {
        n_sides: p.n_sides,
        length: p.length,
        side: match p.side {
            SingularSide::Plus => 1,
            SingularSide::Minus => -1,
        },
        sign_prefactor: p.sign_prefactor,
        coeff_per_orientation: p.coeff_per_orientation,
        orientation_multiplicity: p.orientation_multiplicity,
        trace_coefficient: p.trace_coefficient,
        flux: p.flux,
    };
    FtStatus::Ok
}

/// Fit the band-limited trace of a circular-domain spectrum around the N-gon
/// length and report the recovered singular coefficient and the relative
/// residual of the fit window.
///
/// The window cutoff is the spectrum's own cutoff. Torus spectra are
/// rejected: the N-gon construction lives in the disk.
///
/// # Safety
/// `s` must be a live handle; `out_c_hat` and `out_residual` must each be
/// null or a valid `double` slot.
#[no_mangle]
pub unsafe extern "C" fn ft_fit_ngon(
    s: *const FtSpectrum,
    n_sides: u32,
    half_width: f64,
    background_degree: u32,
    out_c_hat: *mut f64,
    out_residual: *mut f64,
) -> FtStatus {
    if s.is_null() {
        return fail(FtStatus::NullPointer, "spectrum must be non-null");
    }
    let handle = &*s;
    let circ = match &handle.circular {
        Some(c) => c,
        None => {
            return fail(
                FtStatus::InvalidArgument,
                "N-gon fits need a disk or annulus spectrum, not a torus",
            )
        }
    };
    if n_sides < 2 {
        return fail(FtStatus::InvalidArgument, "inscribed polygons need at least 2 sides");
    }
    let window = match WindowSpec::new(handle.spectrum.cutoff) {
        Ok(w) => w,
        Err(e) => return fail(FtStatus::NumericalError, e),
    };
    let prediction = predict_singularity(n_sides, circ.geometry.r_outer, circ.alpha);
    let lengths = length_spectrum(&circ.geometry, prediction.length + 1.0, 64);
    let pad = 2.0 * window.max_grid_spacing();
    let grid = match TimeGrid::covering(
        prediction.length - half_width - pad,
        prediction.length + half_width + pad,
        window.max_grid_spacing(),
    ) {
        Ok(g) => g,
        Err(e) => return fail(FtStatus::InvalidArgument, e),
    };
    let trace = match bandlimited_trace(&handle.spectrum, &window, &grid) {
        Ok(t) => t,
        Err(e) => return fail(FtStatus::NumericalError, e),
    };
    match fit_amplitude(&trace, &prediction, &lengths, half_width, background_degree as usize) {
        Ok(report) => {
            if !out_c_hat.is_null() {
                *out_c_hat = report.c_hat;
            }
            if !out_residual.is_null() {
                *out_residual = report.residual;
            }
            FtStatus::Ok
        }
        Err(e) => fail(FtStatus::NumericalError, e),
    }
}
