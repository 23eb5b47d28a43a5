//! Run configuration: TOML by default, JSON when the file parses as such.

use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::Deserialize;
use superfield::lattice::ModeLattice;
use superfield::lie::{self, LieData};
use superfield::suites::{default_lattice, OracleSettings, Settings, Suite};
use superfield::symbolic::{Scalar, Q};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {msg}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("{0}")]
    Invalid(String),
}

/// A rational given as an integer, a float-free string like `"3/2"`.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Rat {
    Int(i64),
    Text(String),
}

impl Rat {
    pub fn to_q(&self) -> Result<Q, ConfigError> {
        match self {
            Rat::Int(n) => Ok(Q::from_integer((*n).into())),
            Rat::Text(s) => s
                .trim()
                .parse::<BigRational>()
                .map_err(|_| ConfigError::Rational(s.clone())),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Corruption {
    pub i: usize,
    pub j: usize,
    pub h: usize,
    pub delta: Rat,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TheoryConfig {
    pub lie: String,
    pub xi: Option<Rat>,
    pub corrupt: Option<Corruption>,
}

impl Default for TheoryConfig {
    fn default() -> Self {
        TheoryConfig {
            lie: "su2".into(),
            xi: None,
            corrupt: None,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LatticeConfig {
    pub modes: Vec<[Rat; 3]>,
    pub scalar_mass: Rat,
    pub dirac_mass: Rat,
    pub scalar_dim: usize,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig {
            modes: vec![
                [Rat::Int(4), Rat::Int(0), Rat::Int(0)],
                [Rat::Int(-4), Rat::Int(0), Rat::Int(0)],
            ],
            scalar_mass: Rat::Int(3),
            dirac_mass: Rat::Int(3),
            scalar_dim: 2,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OracleConfig {
    pub enabled: bool,
    pub n_max: usize,
    pub cap: usize,
    pub tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        let d = OracleSettings::default();
        OracleConfig {
            enabled: d.enabled,
            n_max: d.n_max,
            cap: d.cap,
            tol: d.tol,
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub path: Option<PathBuf>,
    pub timings: bool,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SampleConfig {
    pub bv: usize,
    pub brst: usize,
    pub dirac: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            bv: 200,
            brst: 100,
            dirac: 20,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub seed: u64,
    pub suites: Vec<String>,
    pub theory: TheoryConfig,
    pub lattice: LatticeConfig,
    pub oracle: OracleConfig,
    pub output: OutputConfig,
    pub samples: SampleConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            suites: Suite::ALL.iter().map(|s| s.name().to_string()).collect(),
            theory: TheoryConfig::default(),
            lattice: LatticeConfig::default(),
            oracle: OracleConfig::default(),
            output: OutputConfig::default(),
            samples: SampleConfig::default(),
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.len(), |i| before.len() - i - 1)
        + 1;
    (line, column)
}

impl RunConfig {
    /// JSON if the text starts with `{`, TOML otherwise.
    pub fn parse(text: &str, origin: &str) -> Result<Self, ConfigError> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| ConfigError::Parse {
                path: origin.to_string(),
                line: e.line(),
                column: e.column(),
                msg: e.to_string(),
            })
        } else {
            toml::from_str(text).map_err(|e| {
                let (line, column) = e.span().map_or((0, 0), |s| line_col(text, s.start));
                ConfigError::Parse {
                    path: origin.to_string(),
                    line,
                    column,
                    msg: e.message().to_string(),
                }
            })
        }
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        RunConfig::parse(&text, &path.display().to_string())
    }

    pub fn suites(&self) -> Result<Vec<Suite>, ConfigError> {
        self.suites
            .iter()
            .map(|s| s.parse().map_err(|e| ConfigError::Invalid(format!("{e}"))))
            .collect()
    }

    pub fn lie(&self) -> Result<LieData, ConfigError> {
        let base =
            lie::preset(&self.theory.lie).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        Ok(match &self.theory.corrupt {
            None => base,
            Some(c) => {
                let d = base.dim();
                if c.i >= d || c.j >= d || c.h >= d {
                    return Err(ConfigError::Invalid(format!(
                        "corrupted constant index out of range for {} (dim {d})",
                        base.name
                    )));
                }
                base.corrupted(c.i, c.j, c.h, Scalar::rational(c.delta.to_q()?))
            }
        })
    }

    pub fn lattice(&self) -> Result<ModeLattice, ConfigError> {
        if self.lattice.modes.is_empty() {
            return Ok(default_lattice());
        }
        let modes = self
            .lattice
            .modes
            .iter()
            .map(|m| Ok([m[0].to_q()?, m[1].to_q()?, m[2].to_q()?]))
            .collect::<Result<Vec<_>, ConfigError>>()?;
        ModeLattice::new(
            modes,
            self.lattice.scalar_mass.to_q()?,
            self.lattice.dirac_mass.to_q()?,
        )
        .map_err(|e| ConfigError::Invalid(e.to_string()))
    }

    pub fn settings(&self) -> Result<Settings, ConfigError> {
        let mut s = Settings::new(self.lie()?, self.lattice()?);
        s.xi = self.theory.xi.as_ref().map(Rat::to_q).transpose()?;
        s.scalar_dim = self.lattice.scalar_dim;
        s.seed = self.seed;
        s.bv_samples = self.samples.bv;
        s.brst_samples = self.samples.brst;
        s.dirac_samples = self.samples.dirac;
        s.oracle = OracleSettings {
            enabled: self.oracle.enabled,
            n_max: self.oracle.n_max,
            cap: self.oracle.cap,
            tol: self.oracle.tol,
        };
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_and_json_agree() {
        let t = r#"
seed = 5
suites = ["algebra"]
[theory]
lie = "u1"
xi = "1/2"
[lattice]
modes = [[1, 0, 0], ["1/2", 0, 0]]
scalar_mass = 1
dirac_mass = 2
"#;
        let j = r#"{"seed": 5, "suites": ["algebra"], "theory": {"lie": "u1", "xi": "1/2"},
            "lattice": {"modes": [[1,0,0],["1/2",0,0]], "scalar_mass": 1, "dirac_mass": 2}}"#;
        let a = RunConfig::parse(t, "t").unwrap().settings().unwrap();
        let b = RunConfig::parse(j, "j").unwrap().settings().unwrap();
        assert_eq!(a.lattice, b.lattice);
        assert_eq!(a.xi, b.xi);
        assert_eq!(a.seed, 5);
        assert_eq!(a.lie.name, "u1");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = RunConfig::parse("seed = 1\nsuites = [\"algebra\"\n", "c.toml").unwrap_err();
        let ConfigError::Parse { line, .. } = e else {
            panic!("{e}")
        };
        assert!(line >= 2);
        let e = RunConfig::parse("{\"seed\": }", "c.json").unwrap_err();
        assert!(matches!(e, ConfigError::Parse { line: 1, .. }));
    }

    #[test]
    fn unknown_keys_and_suites_rejected() {
        assert!(RunConfig::parse("sed = 1", "c").is_err());
        let c = RunConfig::parse("suites = [\"nope\"]", "c").unwrap();
        assert!(c.suites().is_err());
    }

    #[test]
    fn corruption_is_applied() {
        let c = RunConfig::parse(
            "[theory]\nlie = \"su2\"\ncorrupt = { i = 0, j = 0, h = 1, delta = 1 }",
            "c",
        )
        .unwrap();
        assert_ne!(c.lie().unwrap(), lie::su2());
    }
}
