//! Experiment configuration.
//!
//! The file is a flat TOML document; every key is optional:
//!
//! ```toml
//! antecedent = [1, 0.3, 0, 0, 0]
//! consequent = [0, 0, 0, 0.3, 1]
//! methods = ["cri", "dmm:three-valued"]
//! classes = [1, 2]
//! target_mode = "hedged"
//! tilted_antecedent = [1, 0.2, 0, 0, 0]
//! tilted_consequent = [0, 0, 0, 0.2, 1]
//! tolerance = 0.05
//! format = "markdown"
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Variant;
use crate::eval::{CaseId, CaseSpec, Class, TargetMode, Tilted};
use crate::inference::FuzzyRule;
use crate::set::DiscreteFuzzySet;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("malformed config: {0}")]
    Parse(String),

    #[error("invalid `{field}`: {reason}")]
    Invalid { field: &'static str, reason: String },
}

fn invalid(field: &'static str, reason: impl ToString) -> ConfigError {
    ConfigError::Invalid {
        field,
        reason: reason.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Markdown,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            other => Err(format!("unknown format '{other}' (csv, json, markdown)")),
        }
    }
}

/// "Slightly tilted" versions of A and B used by cases 5 and 10.
#[derive(Debug, Clone, PartialEq)]
pub struct TiltedVectors {
    pub antecedent: DiscreteFuzzySet,
    pub consequent: DiscreteFuzzySet,
}

impl TiltedVectors {
    pub fn standard() -> Self {
        Self {
            antecedent: DiscreteFuzzySet::new(vec![1.0, 0.2, 0.0, 0.0, 0.0]).expect("valid"),
            consequent: DiscreteFuzzySet::new(vec![0.0, 0.0, 0.0, 0.2, 1.0]).expect("valid"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub rule: FuzzyRule,
    /// Canonical order, no duplicates.
    pub variants: Vec<Variant>,
    /// Ascending, no duplicates.
    pub classes: Vec<Class>,
    pub target_mode: TargetMode,
    pub tilted: Option<TiltedVectors>,
    pub tolerance: f64,
    pub format: OutputFormat,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    antecedent: Option<Vec<f64>>,
    consequent: Option<Vec<f64>>,
    methods: Option<Vec<String>>,
    classes: Option<Vec<i64>>,
    target_mode: Option<String>,
    tilted_antecedent: Option<Vec<f64>>,
    tilted_consequent: Option<Vec<f64>>,
    tolerance: Option<f64>,
    format: Option<String>,
}

fn fuzzy_set(field: &'static str, values: Vec<f64>) -> Result<DiscreteFuzzySet, ConfigError> {
    DiscreteFuzzySet::new(values).map_err(|e| invalid(field, e))
}

pub fn load_config(path: impl AsRef<Path>) -> Result<ExperimentConfig, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<ExperimentConfig, ConfigError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    ExperimentConfig::from_raw(raw)
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self::from_raw(RawConfig::default()).expect("defaults are valid")
    }
}

impl ExperimentConfig {
    fn from_raw(raw: RawConfig) -> Result<Self, ConfigError> {
        let standard = FuzzyRule::small_large();
        let rule_defaulted = raw.antecedent.is_none() && raw.consequent.is_none();
        let antecedent = match raw.antecedent {
            Some(v) => fuzzy_set("antecedent", v)?,
            None => standard.antecedent,
        };
        let consequent = match raw.consequent {
            Some(v) => fuzzy_set("consequent", v)?,
            None => standard.consequent,
        };
        let rule = FuzzyRule::new(antecedent, consequent);

        let mut variants = Vec::new();
        match raw.methods {
            None => variants = Variant::roster(),
            Some(list) => {
                if list.is_empty() {
                    return Err(invalid("methods", "list is empty"));
                }
                for spec in &list {
                    variants.extend(Variant::expand(spec).map_err(|e| invalid("methods", e))?);
                }
            }
        }
        variants.sort();
        variants.dedup();

        let mut classes = Vec::new();
        for id in raw.classes.unwrap_or_else(|| vec![1]) {
            let class = u8::try_from(id)
                .map_err(|_| format!("unknown class {id} (expected 1 or 2)"))
                .and_then(Class::try_from)
                .map_err(|e| invalid("classes", e))?;
            classes.push(class);
        }
        if classes.is_empty() {
            return Err(invalid("classes", "list is empty"));
        }
        classes.sort();
        classes.dedup();

        let target_mode = match raw.target_mode.as_deref().map(str::to_ascii_lowercase) {
            None => TargetMode::Hedged,
            Some(m) => match m.as_str() {
                "hedged" => TargetMode::Hedged,
                "plain" => TargetMode::Plain,
                "best" => TargetMode::Best,
                other => return Err(invalid("target_mode", format!("unknown mode '{other}' (hedged, plain, best)"))),
            },
        };

        let tilted = match (raw.tilted_antecedent, raw.tilted_consequent) {
            (Some(a), Some(b)) => {
                let a = fuzzy_set("tilted_antecedent", a)?;
                let b = fuzzy_set("tilted_consequent", b)?;
                rule.antecedent
                    .ensure_same_universe(&a)
                    .map_err(|e| invalid("tilted_antecedent", e))?;
                rule.consequent
                    .ensure_same_universe(&b)
                    .map_err(|e| invalid("tilted_consequent", e))?;
                Some(TiltedVectors {
                    antecedent: a,
                    consequent: b,
                })
            }
            (None, None) if rule_defaulted => Some(TiltedVectors::standard()),
            (None, None) => None,
            (Some(_), None) => return Err(invalid("tilted_consequent", "missing; tilted vectors come in pairs")),
            (None, Some(_)) => return Err(invalid("tilted_antecedent", "missing; tilted vectors come in pairs")),
        };

        let tolerance = raw.tolerance.unwrap_or(0.05);
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(invalid("tolerance", format!("must be a positive number, got {tolerance}")));
        }

        let format = match raw.format {
            None => OutputFormat::default(),
            Some(f) => f.parse().map_err(|e| invalid("format", e))?,
        };

        let config = Self {
            rule,
            variants,
            classes,
            target_mode,
            tilted,
            tolerance,
            format,
        };
        config.check_tilted()?;
        Ok(config)
    }

    fn check_tilted(&self) -> Result<(), ConfigError> {
        if self.tilted.is_none() && self.classes.iter().any(|c| c.needs_tilted()) {
            return Err(invalid(
                "classes",
                "class 2 needs tilted_antecedent and tilted_consequent",
            ));
        }
        Ok(())
    }

    /// Narrows the run to one class and/or a method filter (`cri`,
    /// `cri:goedel`, ...).
    pub fn restrict(&self, class: Option<Class>, method: Option<&str>) -> Result<Self, ConfigError> {
        let mut out = self.clone();
        if let Some(class) = class {
            out.classes = vec![class];
            out.check_tilted()?;
        }
        if let Some(method) = method {
            let wanted = Variant::expand(method).map_err(|e| invalid("methods", e))?;
            out.variants.retain(|v| wanted.contains(v));
            if out.variants.is_empty() {
                return Err(invalid("methods", format!("'{method}' selects none of the configured methods")));
            }
        }
        Ok(out)
    }

    /// Union of the configured classes' cases, ascending.
    pub fn cases(&self) -> Vec<CaseId> {
        let mut cases: Vec<CaseId> = self.classes.iter().flat_map(|c| c.cases()).collect();
        cases.sort();
        cases.dedup();
        cases
    }

    /// Case 5 uses the tilted vectors directly. Case 10 is read through the
    /// contrapositive rule like every other FMT case: its premise is the
    /// complement of tilted B and its target the complement of tilted A.
    pub fn case_spec(&self, case: CaseId) -> crate::error::Result<CaseSpec> {
        let tilted = match (case.get(), &self.tilted) {
            (5, Some(t)) => Some(Tilted {
                premise: t.antecedent.clone(),
                target: t.consequent.clone(),
            }),
            (10, Some(t)) => Some(Tilted {
                premise: t.consequent.complement(),
                target: t.antecedent.complement(),
            }),
            _ => None,
        };
        CaseSpec::new(case, tilted)
    }

    /// Standard rule and tilted vectors, so printed reference values apply.
    pub fn uses_standard_suite(&self) -> bool {
        self.rule == FuzzyRule::small_large()
            && self.tilted.as_ref().is_none_or(|t| *t == TiltedVectors::standard())
    }
}
