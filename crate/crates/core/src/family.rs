//! Implication operators and their companion t-norms.
//!
//! Łukasiewicz, Gödel, R0 and Goguen are residuated pairs. Zadeh's
//! implication `(1 - a) ∨ (a ∧ b)` has no residual t-norm; it is composed with
//! `min`, which gives the classical max-min compositional rule.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{FuzzyError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorFamily {
    Zadeh,
    Lukasiewicz,
    Goedel,
    R0,
    Goguen,
}

impl OperatorFamily {
    pub const ALL: [OperatorFamily; 5] = [
        OperatorFamily::Zadeh,
        OperatorFamily::Lukasiewicz,
        OperatorFamily::Goedel,
        OperatorFamily::R0,
        OperatorFamily::Goguen,
    ];

    pub const RESIDUAL: [OperatorFamily; 4] = [
        OperatorFamily::Lukasiewicz,
        OperatorFamily::Goedel,
        OperatorFamily::R0,
        OperatorFamily::Goguen,
    ];

    pub fn id(self) -> &'static str {
        match self {
            OperatorFamily::Zadeh => "zadeh",
            OperatorFamily::Lukasiewicz => "lukasiewicz",
            OperatorFamily::Goedel => "goedel",
            OperatorFamily::R0 => "r0",
            OperatorFamily::Goguen => "goguen",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            OperatorFamily::Zadeh => "Zadeh",
            OperatorFamily::Lukasiewicz => "Łukasiewicz",
            OperatorFamily::Goedel => "Gödel",
            OperatorFamily::R0 => "R0",
            OperatorFamily::Goguen => "Goguen",
        }
    }

    /// Whether `tnorm` is the residuum partner of `implies`.
    pub fn is_residual(self) -> bool {
        self != OperatorFamily::Zadeh
    }

    /// Checked implication `a → b`.
    pub fn implies(self, a: f64, b: f64) -> Result<f64> {
        check_degree(a)?;
        check_degree(b)?;
        Ok(self.implication(a, b))
    }

    /// Checked t-norm `a ⊗ b`.
    pub fn tnorm(self, a: f64, b: f64) -> Result<f64> {
        check_degree(a)?;
        check_degree(b)?;
        Ok(self.conjunction(a, b))
    }

    /// Unchecked implication; callers guarantee `a, b ∈ [0, 1]`.
    #[inline]
    pub(crate) fn implication(self, a: f64, b: f64) -> f64 {
        match self {
            OperatorFamily::Zadeh => (1.0 - a).max(a.min(b)),
            OperatorFamily::Lukasiewicz => (1.0 - a + b).min(1.0),
            _ if a <= b => 1.0,
            OperatorFamily::Goedel => b,
            OperatorFamily::R0 => (1.0 - a).max(b),
            // a > b >= 0 here, so a > 0
            OperatorFamily::Goguen => b / a,
        }
    }

    /// Unchecked t-norm; callers guarantee `a, b ∈ [0, 1]`.
    #[inline]
    pub(crate) fn conjunction(self, a: f64, b: f64) -> f64 {
        match self {
            OperatorFamily::Zadeh | OperatorFamily::Goedel => a.min(b),
            // 1 is kept as an exact identity; a + b - 1 rounds when b is small
            OperatorFamily::Lukasiewicz if a == 1.0 => b,
            OperatorFamily::Lukasiewicz if b == 1.0 => a,
            OperatorFamily::Lukasiewicz => (a + b - 1.0).max(0.0),
            OperatorFamily::R0 => {
                if a + b <= 1.0 {
                    0.0
                } else {
                    a.min(b)
                }
            }
            OperatorFamily::Goguen => a * b,
        }
    }
}

fn check_degree(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(FuzzyError::DegreeOutOfRange(x))
    }
}

impl fmt::Display for OperatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for OperatorFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "zadeh" | "rz" => Ok(OperatorFamily::Zadeh),
            "lukasiewicz" | "l" => Ok(OperatorFamily::Lukasiewicz),
            "goedel" | "godel" | "g" => Ok(OperatorFamily::Goedel),
            "r0" => Ok(OperatorFamily::R0),
            "goguen" | "gougen" | "go" => Ok(OperatorFamily::Goguen),
            other => Err(format!("unknown operator family `{other}`")),
        }
    }
}
