//! Single-rule fuzzy modus ponens (FMP) and fuzzy modus tollens (FMT).
//!
//! Five methods are provided:
//!
//! * compositional rule of inference (`cri_*`), sup-⊗ composition;
//! * triple implication (`tip_*`), whose FMP form is the same kernel as CRI;
//! * quintuple implication (`qip_*`);
//! * approximate analogical reasoning (`aars_*`), similarity based;
//! * the distance-measure method (`dmm_*`), which shifts a base set by the
//!   premise/antecedent distance and rescales it to `[0, 1]`.
//!
//! FMT is treated through the contrapositive rule "if y is not-B then x is
//! not-A": the DMM difference, sign and distance for FMT are taken against
//! `1 - B`.

mod analogical;
mod composition;
mod distance;

use serde::{Deserialize, Serialize};

use crate::error::{FuzzyError, Result};
use crate::family::OperatorFamily;
use crate::set::DiscreteFuzzySet;

pub use analogical::{aars_fmp, aars_fmt, similarity};
pub use composition::{cri_fmp, cri_fmt, qip_fmp, qip_fmt, tip_fmp, tip_fmt, Relation};
pub use distance::{dmm_fmp, dmm_fmt, euclid_dm, normalize_unit, sign_vector, Normalized};

/// "if x is A then y is B". The two universes may differ in size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzyRule {
    pub antecedent: DiscreteFuzzySet,
    pub consequent: DiscreteFuzzySet,
}

impl FuzzyRule {
    pub fn new(antecedent: DiscreteFuzzySet, consequent: DiscreteFuzzySet) -> Self {
        Self {
            antecedent,
            consequent,
        }
    }

    /// A = [1, 0.3, 0, 0, 0] ("small"), B = [0, 0, 0, 0.3, 1] ("large").
    pub fn small_large() -> Self {
        Self::new(
            DiscreteFuzzySet::new(vec![1.0, 0.3, 0.0, 0.0, 0.0]).expect("valid"),
            DiscreteFuzzySet::new(vec![0.0, 0.0, 0.0, 0.3, 1.0]).expect("valid"),
        )
    }

    pub(crate) fn check_fmp_premise(&self, premise: &DiscreteFuzzySet) -> Result<()> {
        self.antecedent.ensure_same_universe(premise)
    }

    pub(crate) fn check_fmt_premise(&self, premise: &DiscreteFuzzySet) -> Result<()> {
        self.consequent.ensure_same_universe(premise)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Fmp,
    Fmt,
}

impl Direction {
    pub fn id(self) -> &'static str {
        match self {
            Direction::Fmp => "fmp",
            Direction::Fmt => "fmt",
        }
    }
}

/// How zero differences map into the DMM sign vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignForm {
    /// P(+1, 0, -1): zero stays zero.
    ThreeValued,
    /// P(+1, -1): zero maps to +1.
    TwoValued,
}

impl SignForm {
    pub fn id(self) -> &'static str {
        match self {
            SignForm::ThreeValued => "three-valued",
            SignForm::TwoValued => "two-valued",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AarsForm {
    /// `min(1, X / S)`
    MoreOrLess,
    /// `X * S`
    Reduction,
}

impl AarsForm {
    pub fn id(self) -> &'static str {
        match self {
            AarsForm::MoreOrLess => "more-or-less",
            AarsForm::Reduction => "reduction",
        }
    }
}

/// The set the DMM quasi-result is built on.
///
/// Relative to the conclusion side: for FMP `Plain` is B and `Complement`
/// is 1 - B; for FMT `Plain` is A and `Complement` is 1 - A. The method
/// cannot infer which one applies from the premise, so callers pick it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum DmmBase {
    Plain,
    Complement,
    Tilted(DiscreteFuzzySet),
}

impl DmmBase {
    fn resolve(&self, side: &DiscreteFuzzySet) -> Result<DiscreteFuzzySet> {
        match self {
            DmmBase::Plain => Ok(side.clone()),
            DmmBase::Complement => Ok(side.complement()),
            DmmBase::Tilted(set) => {
                side.ensure_same_universe(set)?;
                Ok(set.clone())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodKind {
    Cri,
    Tip,
    Qip,
    Aars,
    Dmm,
}

impl MethodKind {
    pub const ALL: [MethodKind; 5] = [
        MethodKind::Cri,
        MethodKind::Tip,
        MethodKind::Qip,
        MethodKind::Aars,
        MethodKind::Dmm,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MethodKind::Cri => "cri",
            MethodKind::Tip => "tip",
            MethodKind::Qip => "qip",
            MethodKind::Aars => "aars",
            MethodKind::Dmm => "dmm",
        }
    }
}

/// DMM working values, kept for inspection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DmmTrace {
    /// premise - antecedent
    pub difference: Vec<f64>,
    pub signs: Vec<i8>,
    pub distance: f64,
    /// base + distance * signs, before rescaling
    pub quasi: Vec<f64>,
    pub max: f64,
    pub min: f64,
    /// Premise and antecedent share no support; the conclusion is zero.
    pub disjoint: bool,
    /// The quasi-result was constant; the conclusion is zero.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InferenceOutcome {
    pub conclusion: DiscreteFuzzySet,
    pub method: MethodKind,
    pub direction: Direction,
    pub family: Option<OperatorFamily>,
    pub sign_form: Option<SignForm>,
    pub aars_form: Option<AarsForm>,
    /// Present exactly when `method` is DMM.
    pub trace: Option<DmmTrace>,
}

impl InferenceOutcome {
    pub(crate) fn composed(
        conclusion: DiscreteFuzzySet,
        method: MethodKind,
        direction: Direction,
        family: OperatorFamily,
    ) -> Self {
        Self {
            conclusion,
            method,
            direction,
            family: Some(family),
            sign_form: None,
            aars_form: None,
            trace: None,
        }
    }
}

/// Combines per-premise conclusions of a multi-premise problem.
///
/// The combination operator is left undefined by the method (it is stated not
/// to be max), so the conclusions are returned as an ordered collection.
pub fn union_conclusions(parts: &[InferenceOutcome]) -> Result<Vec<DiscreteFuzzySet>> {
    if parts.is_empty() {
        return Err(FuzzyError::NoConclusions);
    }
    Ok(parts.iter().map(|o| o.conclusion.clone()).collect())
}

/// Builds a set from values the kernels already keep inside `[0, 1]`.
pub(crate) fn unit_set(values: Vec<f64>) -> DiscreteFuzzySet {
    DiscreteFuzzySet::new(values).expect("inference kernels stay inside [0, 1]")
}
