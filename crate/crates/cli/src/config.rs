//! Flat `key=value` run configuration.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use siegel_core::lfuncs::EvalPolicy;
use siegel_core::perron::QuadratureSpec;

use crate::CliError;

/// Environment variable naming the config file when `--config` is absent.
pub const CONFIG_ENV: &str = "SIEGEL_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (expected csv or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub em_order: usize,
    pub split_point: usize,
    pub target_abs_error: f64,
    pub height: f64,
    pub step: f64,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        let p = EvalPolicy::default();
        let q = QuadratureSpec::default();
        Self {
            em_order: p.em_order(),
            split_point: p.split_point(),
            target_abs_error: p.target_abs_error(),
            height: q.height(),
            step: q.step(),
            format: Format::Csv,
            output: None,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn policy(&self) -> Result<EvalPolicy, CliError> {
        Ok(EvalPolicy::new(self.em_order, self.split_point, self.target_abs_error)?)
    }

    pub fn quadrature(&self) -> Result<QuadratureSpec, CliError> {
        Ok(QuadratureSpec::new(QuadratureSpec::default().line_sigma(), self.height, self.step)?)
    }

    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: FromStr>(v: &str) -> Result<T, String> {
            v.parse().map_err(|_| format!("cannot parse {v:?}"))
        }
        fn positive(v: f64) -> Result<f64, String> {
            if v > 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(format!("{v} is not positive"))
            }
        }
        match key {
            "em_order" => self.em_order = num(value)?,
            "split_point" => self.split_point = num(value)?,
            "target_abs_error" => self.target_abs_error = positive(num(value)?)?,
            "height" => self.height = positive(num(value)?)?,
            "step" => self.step = positive(num(value)?)?,
            "format" => self.format = value.parse()?,
            "output" => self.output = Some(PathBuf::from(value)),
            "seed" => self.seed = num(value)?,
            _ => return Err(format!("unknown key {key:?}")),
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| CliError::Config { line: i + 1, message };
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| err("expected key=value".into()))?;
            cfg.set(k.trim(), v.trim()).map_err(err)?;
        }
        Ok(cfg)
    }
}

/// Reads `path`, or `$SIEGEL_CONFIG` when `path` is `None`; defaults when
/// neither is given.
pub fn load_config(path: Option<&Path>) -> Result<RunConfig, CliError> {
    let path = match path {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(CONFIG_ENV).map(PathBuf::from),
    };
    match path {
        None => Ok(RunConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(&p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            RunConfig::parse(&text)
        }
    }
}
