//! The committed C header must stay in sync with the exported surface and
//! compile standalone as both C11 and C++17.

use std::path::Path;
use std::process::Command;

fn header() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/fluxtrace.h");
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

#[test]
fn header_compiles_as_c11_and_cxx17() {
    let include_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempdir();
    let main_c = dir.join("smoke.c");
    std::fs::write(
        &main_c,
        r#"
#include "fluxtrace.h"
int main(void) {
    FtSpectrum *s = 0;
    FtPrediction p;
    FtStatus st = ft_predict_ngon(3, 1.0, 0.0, &p);
    if (st != FT_STATUS_OK) return 1;
    ft_spectrum_free(s);
    return ft_version() == 0;
}
"#,
    )
    .unwrap();
    for (compiler, std, src) in
        [("cc", "-std=c11", "smoke.c"), ("c++", "-std=c++17", "smoke.cc")]
    {
        let src_path = dir.join(src);
        if src != "smoke.c" {
            std::fs::copy(&main_c, &src_path).unwrap();
        }
        let out = Command::new(compiler)
            .arg(std)
            .arg("-Wall")
            .arg("-Werror")
            .arg("-fsyntax-only")
            .arg("-I")
            .arg(&include_dir)
            .arg(&src_path)
            .output()
            .expect("compiler available");
        assert!(
            out.status.success(),
            "{compiler} {std} rejected the header:\n{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn header_declares_every_exported_symbol() {
    let text = header();
    for symbol in [
        "ft_version",
        "ft_last_error_message",
        "ft_disk_spectrum_new",
        "ft_torus_spectrum_new",
        "ft_spectrum_free",
        "ft_spectrum_len",
        "ft_spectrum_eigenvalue",
        "ft_trace_eval",
        "ft_predict_ngon",
        "ft_fit_ngon",
    ] {
        assert!(text.contains(symbol), "header is missing {symbol}");
    }
    assert!(text.contains("FT_STATUS_OK"), "status enum should use C-style constants");
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("fluxtrace-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
