//! Compensated summation.

/// Neumaier-compensated sum over `values` in iteration order.
///
/// Deterministic for a fixed input order; used everywhere a spectrum-sized
/// reduction feeds a tolerance-sensitive comparison.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut s = 0.0f64;
    let mut c = 0.0f64;
    for v in values {
        let t = s + v;
        if s.abs() >= v.abs() {
            c += (s - t) + v;
        } else {
            c += (v - t) + s;
        }
        s = t;
    }
    s + c
}
