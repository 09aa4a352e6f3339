//! Discrete fuzzy sets over anonymous finite universes, plus the linguistic
//! hedges used to build premises ("very", "more or less", "not").

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FuzzyError, Result};

/// Membership vector over the universe `0..len`.
///
/// Every degree lies in `[0, 1]` and the universe is never empty. Two sets
/// can only be combined when their lengths agree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct DiscreteFuzzySet {
    memberships: Vec<f64>,
}

impl DiscreteFuzzySet {
    pub fn new(memberships: Vec<f64>) -> Result<Self> {
        if memberships.is_empty() {
            return Err(FuzzyError::EmptyUniverse);
        }
        for (index, &value) in memberships.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(FuzzyError::MembershipOutOfRange { index, value });
            }
        }
        Ok(Self { memberships })
    }

    /// The all-zero set of the given size.
    pub fn empty(size: usize) -> Result<Self> {
        Self::new(vec![0.0; size])
    }

    pub fn universe_size(&self) -> usize {
        self.memberships.len()
    }

    pub fn memberships(&self) -> &[f64] {
        &self.memberships
    }

    pub fn into_memberships(self) -> Vec<f64> {
        self.memberships
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        self.memberships.get(k).copied()
    }

    pub fn is_normal(&self) -> bool {
        self.memberships.contains(&1.0)
    }

    pub fn is_zero(&self) -> bool {
        self.memberships.iter().all(|&m| m == 0.0)
    }

    pub fn ensure_same_universe(&self, other: &Self) -> Result<()> {
        if self.universe_size() != other.universe_size() {
            return Err(FuzzyError::UniverseMismatch {
                expected: self.universe_size(),
                found: other.universe_size(),
            });
        }
        Ok(())
    }

    /// "not S": elementwise `1 - s`.
    pub fn complement(&self) -> Self {
        Self {
            memberships: self.memberships.iter().map(|&m| 1.0 - m).collect(),
        }
    }

    /// Elementwise `s^p`. `p = 2` is "very", `p = 0.5` is "more or less".
    pub fn power_hedge(&self, p: f64) -> Result<Self> {
        if !p.is_finite() || p <= 0.0 {
            return Err(FuzzyError::NonPositiveExponent(p));
        }
        Ok(Self {
            memberships: self.memberships.iter().map(|&m| m.powf(p)).collect(),
        })
    }

    pub fn very(&self) -> Self {
        self.power_hedge(2.0).expect("2 is a valid exponent")
    }

    pub fn more_or_less(&self) -> Self {
        self.power_hedge(0.5).expect("0.5 is a valid exponent")
    }

    /// True when the pointwise-min intersection is identically zero.
    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        self.ensure_same_universe(other)?;
        Ok(self
            .memberships
            .iter()
            .zip(&other.memberships)
            .all(|(&s, &t)| s.min(t) == 0.0))
    }
}

impl TryFrom<Vec<f64>> for DiscreteFuzzySet {
    type Error = FuzzyError;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<DiscreteFuzzySet> for Vec<f64> {
    fn from(value: DiscreteFuzzySet) -> Self {
        value.memberships
    }
}

impl fmt::Display for DiscreteFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let precision = f.precision();
        f.write_str("[")?;
        for (i, m) in self.memberships.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match precision {
                Some(p) => write!(f, "{}", trim_decimal(&format!("{m:.p$}")))?,
                None => write!(f, "{m}")?,
            }
        }
        f.write_str("]")
    }
}

/// Drops trailing zeros of a fixed-precision rendering ("0.300" -> "0.3").
pub(crate) fn trim_decimal(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    if trimmed == "-0" {
        "0".to_string()
    } else {
        trimmed.to_string()
    }
}
