use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    pub max_index: u32,
    pub max_degree_sum: u32,
    pub truncation: usize,
    pub output_format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_index: 4, max_degree_sum: 12, truncation: 4, output_format: OutputFormat::Text }
    }
}

/// Optional settings from a TOML file or from flags.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub max_index: Option<u32>,
    #[serde(alias = "max_degree")]
    pub max_degree_sum: Option<u32>,
    pub truncation: Option<usize>,
    pub output_format: Option<OutputFormat>,
}

impl Overrides {
    pub fn from_file(path: &Path) -> Result<Overrides, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }

    fn apply(&self, c: &mut Config) {
        if let Some(v) = self.max_index {
            c.max_index = v;
        }
        if let Some(v) = self.max_degree_sum {
            c.max_degree_sum = v;
        }
        if let Some(v) = self.truncation {
            c.truncation = v;
        }
        if let Some(v) = self.output_format {
            c.output_format = v;
        }
    }
}

/// Defaults, then the file, then flags.
pub fn resolve(file: Option<&Overrides>, flags: &Overrides) -> Result<Config, CliError> {
    let mut c = Config::default();
    if let Some(f) = file {
        f.apply(&mut c);
    }
    flags.apply(&mut c);
    if c.max_degree_sum == 0 || c.truncation == 0 {
        return Err(CliError::Usage("--max-degree and --truncation must be at least 1".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let file: Overrides = toml::from_str("max_index = 2\ntruncation = 3\noutput_format = \"json\"").unwrap();
        let flags = Overrides { truncation: Some(5), ..Default::default() };
        let c = resolve(Some(&file), &flags).unwrap();
        assert_eq!(c, Config { max_index: 2, max_degree_sum: 12, truncation: 5, output_format: OutputFormat::Json });
        assert_eq!(resolve(None, &Overrides::default()).unwrap(), Config::default());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(toml::from_str::<Overrides>("colour = 1").is_err());
        let flags = Overrides { truncation: Some(0), ..Default::default() };
        assert!(resolve(None, &flags).is_err());
    }
}
