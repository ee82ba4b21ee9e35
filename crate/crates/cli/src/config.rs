//! Optional TOML configuration.
//!
//! ```toml
//! seed = 42
//! format = "machine"
//!
//! [search]
//! max = 2
//!
//! [suite]
//! samples = 10000
//! models = 10000
//! mutations = 100
//! ```
//!
//! Command-line flags and `CONTINGENT_SEED` take precedence over the file.

use std::path::Path;

use anyhow::{bail, Context, Result};
use contingent::search::{MAX_EXHAUSTIVE_SIZE, MAX_SAMPLE_SIZE};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub seed: Option<u64>,
    pub format: Option<Format>,
    #[serde(default)]
    pub search: SearchConfig,
    #[serde(default)]
    pub suite: SuiteSection,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub max: Option<usize>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteSection {
    pub samples: Option<usize>,
    pub models: Option<usize>,
    pub mutations: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let config: Config =
            toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        config
            .validate()
            .with_context(|| format!("in {}", path.display()))?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        if let Some(max) = self.search.max {
            if max == 0 || max > MAX_SAMPLE_SIZE {
                bail!("search.max must be between 1 and {MAX_SAMPLE_SIZE} (exhaustive search stops at {MAX_EXHAUSTIVE_SIZE})");
            }
        }
        Ok(())
    }
}
