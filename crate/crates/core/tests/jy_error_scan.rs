// temporary: print scaled errors for every frozen J/Y row
use fluxtrace::spectra::bessel::bessel_jy_limited;
include!("bessel_reference_table.rs");
#[test]
fn scan() {
    let pi = std::f64::consts::PI;
    let mut worst_osc = (0.0f64, 0.0, 0.0, ' ');
    let mut worst_mono = (0.0f64, 0.0, 0.0, ' ');
    for &(nu, x, j_ref, y_ref) in JY_REFS {
        let v = bessel_jy_limited(nu, x, 400.0, 650.0).unwrap();
        for (tag, got, want) in [('J', v.j, j_ref), ('Y', v.y, y_ref)] {
            let abs = (got - want).abs();
            if x > nu {
                let env = (2.0 / (pi * x)).sqrt();
                let scaled = abs / want.abs().max(env);
                if scaled > worst_osc.0 { worst_osc = (scaled, nu, x, tag); }
            } else {
                let scaled = abs / want.abs();
                if scaled > worst_mono.0 { worst_mono = (scaled, nu, x, tag); }
            }
        }
    }
    println!("worst oscillatory (env-relative): {:.3e} at {}({}, {})", worst_osc.0, worst_osc.3, worst_osc.1, worst_osc.2);
    println!("worst monotone (value-relative):  {:.3e} at {}({}, {})", worst_mono.0, worst_mono.3, worst_mono.1, worst_mono.2);
}
