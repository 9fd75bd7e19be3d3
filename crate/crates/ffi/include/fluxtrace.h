#ifndef FLUXTRACE_H
#define FLUXTRACE_H

/* Generated by cbindgen from fluxtrace-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a C-API call.
 */
typedef enum FtStatus {
  FT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  FT_STATUS_NULL_POINTER = 1,
  /**
   * An argument value was rejected before any computation ran.
   */
  FT_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The computation itself failed; see `ft_last_error_message`.
   */
  FT_STATUS_NUMERICAL_ERROR = 3,
} FtStatus;

/**
 * An eigenvalue list λ₀ ≤ λ₁ ≤ … ≤ K², complete below its cutoff.
 */
typedef struct FtSpectrum FtSpectrum;

/**
 * Closed-form prediction for the wave-trace singularity at the inscribed
 * regular N-gon of a circular domain.
 */
typedef struct FtPrediction {
  uint32_t n_sides;
  /**
   * orbit length L = 2NR sin(π/N)
   */
  double length;
  /**
   * +1: singular shape (t−L)₊^{−3/2}; −1: (t−L)₋^{−3/2}
   */
  int32_t side;
  double sign_prefactor;
  /**
   * signed coefficient of one traversal orientation
   */
  double coeff_per_orientation;
  /**
   * congruent orientation families sharing the length (2 for N ≥ 3)
   */
  uint32_t orientation_multiplicity;
  /**
   * coefficient a trace fit should recover:
   * `coeff_per_orientation × orientation_multiplicity`
   */
  double trace_coefficient;
  /**
   * flux (radians) the prediction was evaluated at
   */
  double flux;
} FtPrediction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on the calling thread, empty
 * if none has occurred yet.
 *
 * The pointer is owned by the library and stays valid until the next
 * failing call on the same thread.
 */
const char *ft_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ft_version(void);

/**
 * Dirichlet spectrum of the flux disk (`r_inner = 0`) or annulus
 * (`r_inner > 0`) with radius `r_outer` and flux `alpha` (radians), complete
 * up to λ ≤ `cutoff`².
 *
 * # Safety
 * `out` must be a valid pointer to an `FtSpectrum*` slot. On success it
 * receives a handle that must be released with [`ft_spectrum_free`].
 */
enum FtStatus ft_disk_spectrum_new(double r_outer,
                                   double r_inner,
                                   double alpha,
                                   double cutoff,
                                   struct FtSpectrum **out);

/**
 * Spectrum λ_δ = |2πδ − A₀|² of the flat torus `R²/L` with lattice basis
 * `e1`, `e2` and constant gauge covector `a0`, complete up to λ ≤ `cutoff`².
 *
 * # Safety
 * `out` must be a valid pointer to an `FtSpectrum*` slot. On success it
 * receives a handle that must be released with [`ft_spectrum_free`].
 */
enum FtStatus ft_torus_spectrum_new(double e1_x,
                                    double e1_y,
                                    double e2_x,
                                    double e2_y,
                                    double a0_x,
                                    double a0_y,
                                    double cutoff,
                                    struct FtSpectrum **out);

/**
 * Release a spectrum handle. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a handle returned by a constructor and not yet freed.
 */
void ft_spectrum_free(struct FtSpectrum *s);

/**
 * Number of eigenvalues in the spectrum; zero for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t ft_spectrum_len(const struct FtSpectrum *s);

/**
 * Fetch eigenvalue `index` (ascending order) into `out`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid `double` slot.
 */
enum FtStatus ft_spectrum_eigenvalue(const struct FtSpectrum *s, size_t index, double *out);

/**
 * Evaluate the band-limited wave trace `T_χ(t) = Σ χ(√λ/K)·cos(t√λ)` at
 * `n_times` arbitrary times, writing into `out[0..n_times]`.
 *
 * `cutoff` is the window's K and must not exceed the spectrum's own cutoff:
 * eigenvalues above it would be missing from the sum.
 *
 * # Safety
 * `s` must be a live handle; `times` and `out` must point to `n_times`
 * readable / writable doubles.
 */
enum FtStatus ft_trace_eval(const struct FtSpectrum *s,
                            double cutoff,
                            const double *times,
                            size_t n_times,
                            double *out);

/**
 * Stationary-phase prediction for the N-gon singularity at flux `alpha`.
 *
 * Requires `n_sides ≥ 2` and `r_outer > 0`.
 *
 * # Safety
 * `out` must be a valid `FtPrediction` slot.
 */
enum FtStatus ft_predict_ngon(uint32_t n_sides,
                              double r_outer,
                              double alpha,
                              struct FtPrediction *out);

/**
 * Fit the band-limited trace of a circular-domain spectrum around the N-gon
 * length and report the recovered singular coefficient and the relative
 * residual of the fit window.
 *
 * The window cutoff is the spectrum's own cutoff. Torus spectra are
 * rejected: the N-gon construction lives in the disk.
 *
 * # Safety
 * `s` must be a live handle; `out_c_hat` and `out_residual` must each be
 * null or a valid `double` slot.
 */
enum FtStatus ft_fit_ngon(const struct FtSpectrum *s,
                          uint32_t n_sides,
                          double half_width,
                          uint32_t background_degree,
                          double *out_c_hat,
                          double *out_residual);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLUXTRACE_H */
