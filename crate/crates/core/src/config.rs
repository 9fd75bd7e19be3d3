//! Experiment configuration: TOML file + flag overrides, validated before
//! any computation runs.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot parse config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Disk,
    Annulus,
    Torus,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct GeometrySection {
    pub r_outer: f64,
    pub r_inner: f64,
}

impl Default for GeometrySection {
    fn default() -> Self {
        Self { r_outer: 1.0, r_inner: 0.0 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct LatticeSection {
    pub e1: [f64; 2],
    pub e2: [f64; 2],
}

impl Default for LatticeSection {
    fn default() -> Self {
        Self { e1: [1.0, 0.0], e2: [0.31, 1.07] }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct FluxSection {
    /// flux α for circular problems; for the torus, the cycle flux
    /// α₁ = A₀·e₁ realized as A₀ = α·e₁* (so A₀·e₂ = 0)
    pub alpha: f64,
    /// optional sweep; when non-empty, fit commands iterate over it
    pub sweep: Vec<f64>,
}

impl Default for FluxSection {
    fn default() -> Self {
        Self { alpha: 0.0, sweep: Vec::new() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct WindowSection {
    /// frequency cutoff K
    pub cutoff: f64,
}

impl Default for WindowSection {
    fn default() -> Self {
        Self { cutoff: 80.0 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct OrbitSection {
    pub n_sides: u32,
}

impl Default for OrbitSection {
    fn default() -> Self {
        Self { n_sides: 3 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct FitSection {
    /// half-width of the fit window around the orbit length
    pub half_width: f64,
    /// polynomial background degree
    pub background_degree: usize,
    /// half-width for torus peak fits
    pub torus_half_width: f64,
}

impl Default for FitSection {
    fn default() -> Self {
        Self { half_width: 0.3, background_degree: 1, torus_half_width: 0.05 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct TraceSection {
    pub t_start: f64,
    pub t_end: f64,
}

impl Default for TraceSection {
    fn default() -> Self {
        Self { t_start: 0.1, t_end: 7.0 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct RunSection {
    /// rayon thread count; 0 = library default
    pub threads: usize,
    pub out_dir: PathBuf,
}

impl Default for RunSection {
    fn default() -> Self {
        Self { threads: 0, out_dir: PathBuf::from("out") }
    }
}

/// Full experiment configuration (file values + flag overrides).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub kind: ProblemKind,
    pub geometry: GeometrySection,
    pub lattice: LatticeSection,
    pub flux: FluxSection,
    pub window: WindowSection,
    pub orbit: OrbitSection,
    pub fit: FitSection,
    pub trace: TraceSection,
    pub run: RunSection,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            kind: ProblemKind::Disk,
            geometry: GeometrySection::default(),
            lattice: LatticeSection::default(),
            flux: FluxSection::default(),
            window: WindowSection::default(),
            orbit: OrbitSection::default(),
            fit: FitSection::default(),
            trace: TraceSection::default(),
            run: RunSection::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml_str(s: &str) -> Result<Self, ConfigError> {
        let cfg: ExperimentConfig = toml::from_str(s)?;
        Ok(cfg)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string_pretty(self).expect("config serialization cannot fail")
    }

    /// Resolved experiment definition as canonical TOML: every section that
    /// determines computed values. The `run` section (thread count, output
    /// directory) is excluded so identical experiments emit identical bytes
    /// regardless of how they are executed.
    pub fn experiment_toml_string(&self) -> String {
        #[derive(Serialize)]
        struct Experiment<'a> {
            kind: ProblemKind,
            geometry: &'a GeometrySection,
            lattice: &'a LatticeSection,
            flux: &'a FluxSection,
            window: &'a WindowSection,
            orbit: &'a OrbitSection,
            fit: &'a FitSection,
            trace: &'a TraceSection,
        }
        let view = Experiment {
            kind: self.kind,
            geometry: &self.geometry,
            lattice: &self.lattice,
            flux: &self.flux,
            window: &self.window,
            orbit: &self.orbit,
            fit: &self.fit,
            trace: &self.trace,
        };
        toml::to_string_pretty(&view).expect("config serialization cannot fail")
    }

    /// SHA-256 of the experiment definition (canonical TOML, `run` section
    /// excluded), for output provenance headers.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.experiment_toml_string().as_bytes());
        let digest = h.finalize();
        let mut out = String::with_capacity(64);
        for b in digest {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }

    /// All flux values a sweep-aware command iterates over.
    pub fn flux_values(&self) -> Vec<f64> {
        if self.flux.sweep.is_empty() {
            vec![self.flux.alpha]
        } else {
            self.flux.sweep.clone()
        }
    }

    /// Validate against module preconditions; rejected configs must produce
    /// no partial output.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let g = &self.geometry;
        if !(g.r_outer > 0.0) || !g.r_outer.is_finite() {
            return Err(ConfigError::Invalid(format!("r_outer = {}", g.r_outer)));
        }
        if !(g.r_inner >= 0.0) || g.r_inner >= g.r_outer {
            return Err(ConfigError::Invalid(format!(
                "need 0 <= r_inner < r_outer, got r_inner = {}",
                g.r_inner
            )));
        }
        match self.kind {
            ProblemKind::Disk => {
                if g.r_inner != 0.0 {
                    return Err(ConfigError::Invalid(
                        "disk problems require r_inner = 0 (use kind = \"annulus\")".into(),
                    ));
                }
            }
            ProblemKind::Annulus => {
                if g.r_inner <= 0.0 {
                    return Err(ConfigError::Invalid(
                        "annulus problems require r_inner > 0".into(),
                    ));
                }
            }
            ProblemKind::Torus => {
                let e1 = self.lattice.e1;
                let e2 = self.lattice.e2;
                let det = e1[0] * e2[1] - e1[1] * e2[0];
                if det.abs() < 1e-12 {
                    return Err(ConfigError::Invalid("lattice basis is degenerate".into()));
                }
            }
        }
        for &a in std::iter::once(&self.flux.alpha).chain(self.flux.sweep.iter()) {
            if !a.is_finite() || a.abs() >= 4.0 * std::f64::consts::PI {
                return Err(ConfigError::Invalid(format!(
                    "flux {a} outside |alpha| < 4*pi"
                )));
            }
        }
        if !(self.window.cutoff > 0.0) || !self.window.cutoff.is_finite() {
            return Err(ConfigError::Invalid(format!("cutoff = {}", self.window.cutoff)));
        }
        if self.orbit.n_sides < 2 {
            return Err(ConfigError::Invalid(format!(
                "n_sides = {} (need at least 2)",
                self.orbit.n_sides
            )));
        }
        if !(self.fit.half_width > 0.0) || self.fit.half_width > crate::trace::fit::MAX_HALF_WIDTH {
            return Err(ConfigError::Invalid(format!(
                "fit half_width = {} outside (0, {}]",
                self.fit.half_width,
                crate::trace::fit::MAX_HALF_WIDTH
            )));
        }
        if !(self.fit.torus_half_width > 0.0) || self.fit.torus_half_width > 0.35 {
            return Err(ConfigError::Invalid(format!(
                "torus_half_width = {}",
                self.fit.torus_half_width
            )));
        }
        if !(self.trace.t_end > self.trace.t_start) {
            return Err(ConfigError::Invalid(format!(
                "trace range [{}, {}] is empty",
                self.trace.t_start, self.trace.t_end
            )));
        }
        if self.run.threads > 4096 {
            return Err(ConfigError::Invalid(format!("threads = {}", self.run.threads)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_roundtrip_and_hash_stability() {
        let cfg = ExperimentConfig::default();
        cfg.validate().unwrap();
        let text = cfg.to_toml_string();
        let back = ExperimentConfig::from_toml_str(&text).unwrap();
        assert_eq!(cfg, back);
        assert_eq!(cfg.hash(), back.hash());
        assert_eq!(cfg.hash().len(), 64);
    }

    #[test]
    fn hash_ignores_execution_details() {
        let base = ExperimentConfig::default();
        let mut moved = base.clone();
        moved.run.threads = 7;
        moved.run.out_dir = PathBuf::from("elsewhere");
        assert_eq!(base.hash(), moved.hash());
        assert_eq!(base.experiment_toml_string(), moved.experiment_toml_string());
        assert!(!base.experiment_toml_string().contains("threads"));
        let mut changed = base.clone();
        changed.window.cutoff = 81.0;
        assert_ne!(base.hash(), changed.hash());
    }

    #[test]
    fn rejects_bad_values() {
        let mut cfg = ExperimentConfig::default();
        cfg.flux.alpha = 20.0;
        assert!(cfg.validate().is_err());
        let mut cfg = ExperimentConfig::default();
        cfg.kind = ProblemKind::Annulus;
        assert!(cfg.validate().is_err()); // r_inner = 0
        cfg.geometry.r_inner = 0.5;
        cfg.validate().unwrap();
        let mut cfg = ExperimentConfig::default();
        cfg.fit.half_width = 0.4;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(ExperimentConfig::from_toml_str("surprise = 1").is_err());
    }
}
