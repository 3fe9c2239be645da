use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::code::DEFAULT_ENUMERATION_CAP;
use crate::error::{Error, Result};
use crate::perm::{AutConfig, DEFAULT_ELEMENT_CAP};

/// Caps and budgets shared by every analysis in a run.
///
/// Loaded from a TOML file; command-line flags and `CODEAUT_*` environment
/// variables override individual fields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SurveyConfig {
    /// Largest `2^k` enumerated for spectra, distances and invariant words.
    pub enumeration_cap: u64,
    /// Largest group order enumerated when searching for a regular cycle.
    pub element_cap: u64,
    /// Per-code budget for the automorphism search, in seconds.
    pub time_budget: Option<f64>,
    pub out: Option<PathBuf>,
    pub workers: usize,
    pub seed: u64,
    pub max_invariant_words: usize,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        Self {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            element_cap: DEFAULT_ELEMENT_CAP,
            time_budget: None,
            out: None,
            workers: 1,
            seed: crate::cyclic::ALPHA_SEED,
            max_invariant_words: AutConfig::default().max_invariant_words,
        }
    }
}

impl SurveyConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.enumeration_cap == 0 || self.element_cap == 0 || self.max_invariant_words == 0 {
            return Err(Error::InvalidArgument("caps must be positive".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidArgument(
                "worker count must be positive".into(),
            ));
        }
        if let Some(t) = self.time_budget {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::InvalidArgument(format!("bad time budget {t}")));
            }
        }
        Ok(())
    }

    pub fn aut_config(&self) -> AutConfig {
        AutConfig {
            enumeration_cap: self.enumeration_cap,
            max_invariant_words: self.max_invariant_words,
            time_budget: self.time_budget.map(Duration::from_secs_f64),
            ..AutConfig::default()
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }
}
