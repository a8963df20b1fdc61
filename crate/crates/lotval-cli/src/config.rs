//! Parsing of `key = value` model configuration files.
//!
//! A configuration file describes one lot-sizing model plus the financial
//! context used to price it. Lines are independent; `#` starts a comment
//! that runs to the end of the line, and blank lines are ignored.
//!
//! ```text
//! # purchased part, priced quarterly
//! model          = eoq
//! demand         = 220000
//! order_cost     = 31
//! unit_cost      = 2
//! holding_factor = 0.25
//! safety_stock   = 300      # eoq only, defaults to 0
//! tax_rate       = 0.19
//! wacc           = 0.15
//! quantity_unit  = kg       # optional, display only
//! currency       = $        # optional, display only
//! ```
//!
//! A `poq` model replaces `safety_stock` with a required `max_production`
//! key. Keys that do not apply to the chosen model are rejected rather
//! than silently ignored, as are unknown keys, duplicates, and values that
//! fail to parse; every error names the offending key and line.

use lotval::{EoqParameters, FinancialContext, LotModel, PoqParameters};
use std::collections::BTreeMap;
use thiserror::Error;

/// Everything a subcommand needs to run: the model, the financial
/// context, and optional display labels.
#[derive(Debug, Clone)]
pub struct ModelConfig {
    pub model: LotModel,
    pub financial: FinancialContext,
    pub quantity_unit: Option<String>,
    pub currency: Option<String>,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, got `{content}`")]
    Syntax { line: usize, content: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}` (first set on line {first_line})")]
    DuplicateKey {
        line: usize,
        first_line: usize,
        key: String,
    },
    #[error("missing required key `{key}`")]
    MissingKey { key: &'static str },
    #[error("line {line}: key `{key}` does not apply to model `{model}`")]
    ForeignKey {
        line: usize,
        key: String,
        model: &'static str,
    },
    #[error("line {line}: value for `{key}` is not a number: `{value}`")]
    Number {
        line: usize,
        key: String,
        value: String,
    },
    #[error("line {line}: `model` must be `eoq` or `poq`, got `{value}`")]
    BadModel { line: usize, value: String },
    #[error("{message}")]
    Invalid { message: String },
}

const KNOWN_KEYS: [&str; 11] = [
    "model",
    "demand",
    "order_cost",
    "unit_cost",
    "holding_factor",
    "safety_stock",
    "max_production",
    "tax_rate",
    "wacc",
    "quantity_unit",
    "currency",
];

/// One parsed `key = value` entry with the line it came from.
struct Entries(BTreeMap<String, (String, usize)>);

impl Entries {
    fn line_of(&self, key: &str) -> Option<usize> {
        self.0.get(key).map(|&(_, line)| line)
    }

    fn number(&self, key: &'static str) -> Result<f64, ConfigError> {
        let (value, line) = self.0.get(key).ok_or(ConfigError::MissingKey { key })?;
        value.parse().map_err(|_| ConfigError::Number {
            line: *line,
            key: key.to_string(),
            value: value.clone(),
        })
    }

    fn number_or(&self, key: &'static str, default: f64) -> Result<f64, ConfigError> {
        if self.0.contains_key(key) {
            self.number(key)
        } else {
            Ok(default)
        }
    }

    fn string(&self, key: &str) -> Option<String> {
        self.0
            .get(key)
            .map(|(value, _)| value.clone())
            .filter(|value| !value.is_empty())
    }

    fn reject(&self, key: &str, model: &'static str) -> Result<(), ConfigError> {
        match self.line_of(key) {
            Some(line) => Err(ConfigError::ForeignKey {
                line,
                key: key.to_string(),
                model,
            }),
            None => Ok(()),
        }
    }

    /// Wraps a domain validation error, pointing back at the config line
    /// that defined the offending field where one exists.
    fn invalid(&self, err: lotval::Error) -> ConfigError {
        let key = match &err {
            lotval::Error::InvalidParameter { field, .. } => match *field {
                // Library field names that differ from their config keys.
                "setup_cost" => "order_cost",
                "cost_of_capital" => "wacc",
                other => other,
            },
            lotval::Error::CapacityViolation { .. } => "demand",
            _ => "",
        };
        let message = match self.line_of(key) {
            Some(line) => format!("line {line}: {err}"),
            None => err.to_string(),
        };
        ConfigError::Invalid { message }
    }
}

fn split_entries(text: &str) -> Result<Entries, ConfigError> {
    let mut entries = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parsed = line
            .split_once('=')
            .map(|(key, value)| (key.trim(), value.trim()))
            .filter(|(key, _)| !key.is_empty());
        let Some((key, value)) = parsed else {
            return Err(ConfigError::Syntax {
                line: line_no,
                content: line.to_string(),
            });
        };
        if !KNOWN_KEYS.contains(&key) {
            return Err(ConfigError::UnknownKey {
                line: line_no,
                key: key.to_string(),
            });
        }
        if let Some(&(_, first_line)) = entries.get(key) {
            return Err(ConfigError::DuplicateKey {
                line: line_no,
                first_line,
                key: key.to_string(),
            });
        }
        entries.insert(key.to_string(), (value.to_string(), line_no));
    }
    Ok(Entries(entries))
}

pub fn parse_config(text: &str) -> Result<ModelConfig, ConfigError> {
    let entries = split_entries(text)?;

    let (model_value, model_line) = entries
        .0
        .get("model")
        .ok_or(ConfigError::MissingKey { key: "model" })?;
    let demand = entries.number("demand")?;
    let order_cost = entries.number("order_cost")?;
    let unit_cost = entries.number("unit_cost")?;
    let holding_factor = entries.number("holding_factor")?;

    let model = match model_value.as_str() {
        "eoq" => {
            entries.reject("max_production", "eoq")?;
            let safety_stock = entries.number_or("safety_stock", 0.0)?;
            let params =
                EoqParameters::new(demand, order_cost, unit_cost, holding_factor, safety_stock)
                    .map_err(|e| entries.invalid(e))?;
            LotModel::Eoq(params)
        }
        "poq" => {
            entries.reject("safety_stock", "poq")?;
            let max_production = entries.number("max_production")?;
            let params =
                PoqParameters::new(demand, max_production, order_cost, unit_cost, holding_factor)
                    .map_err(|e| entries.invalid(e))?;
            LotModel::Poq(params)
        }
        other => {
            return Err(ConfigError::BadModel {
                line: *model_line,
                value: other.to_string(),
            })
        }
    };

    let tax_rate = entries.number("tax_rate")?;
    let wacc = entries.number("wacc")?;
    let financial = FinancialContext::new(tax_rate, wacc).map_err(|e| entries.invalid(e))?;

    Ok(ModelConfig {
        model,
        financial,
        quantity_unit: entries.string("quantity_unit"),
        currency: entries.string("currency"),
    })
}
