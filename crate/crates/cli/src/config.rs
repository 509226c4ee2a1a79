//! Settings from a TOML file, overridden by command-line flags.

use std::path::Path;

use serde::Deserialize;

use crate::failure::Failure;
use qpmut::pathalg::Field;
use qpmut::qpcore::Options;

/// Keys accepted in the config file. Every key is optional.
#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub degree_bound: Option<usize>,
    pub field: Option<String>,
    pub seed: Option<u64>,
    pub reduction_cap: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read config {}: {e}", path.display())))?;
        FileConfig::parse(&text)
    }

    pub fn parse(text: &str) -> Result<FileConfig, Failure> {
        toml::from_str(text).map_err(|e| Failure::input(format!("invalid config: {e}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub degree_bound: usize,
    /// Reinterpret input coefficients over this field when set.
    pub field: Option<Field>,
    pub seed: u64,
    pub reduction_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        let o = Options::default();
        Settings {
            degree_bound: o.degree_bound,
            field: None,
            seed: 0,
            reduction_cap: o.reduction_cap,
        }
    }
}

impl Settings {
    /// Defaults, then the file, then the flags.
    pub fn resolve(file: &FileConfig, flags: &FileConfig) -> Result<Settings, Failure> {
        let d = Settings::default();
        let field = match flags.field.as_ref().or(file.field.as_ref()) {
            Some(s) => Some(s.parse::<Field>().map_err(Failure::from)?),
            None => None,
        };
        let s = Settings {
            degree_bound: flags
                .degree_bound
                .or(file.degree_bound)
                .unwrap_or(d.degree_bound),
            field,
            seed: flags.seed.or(file.seed).unwrap_or(d.seed),
            reduction_cap: flags
                .reduction_cap
                .or(file.reduction_cap)
                .unwrap_or(d.reduction_cap),
        };
        if s.degree_bound < 2 {
            return Err(Failure::input("degree bound must be at least 2"));
        }
        Ok(s)
    }

    pub fn options(&self) -> Options {
        Options {
            degree_bound: self.degree_bound,
            reduction_cap: self.reduction_cap,
        }
    }
}
