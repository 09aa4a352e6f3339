//! Premise/target taxonomy for the ten reductive-property cases and the
//! criterion functions that score a conclusion against its target.
//!
//! | case | direction | premise        | hedged target  | plain target |
//! |------|-----------|----------------|----------------|--------------|
//! | 1    | FMP       | A              | B              | B            |
//! | 2    | FMP       | A²             | B²             | B            |
//! | 3    | FMP       | A^½            | B^½            | B            |
//! | 4    | FMP       | 1 - A          | 1 - B          | 1 - B        |
//! | 5    | FMP       | tilted         | tilted         | tilted       |
//! | 6    | FMT       | 1 - B          | 1 - A          | 1 - A        |
//! | 7    | FMT       | 1 - B²         | 1 - A²         | 1 - A        |
//! | 8    | FMT       | 1 - B^½        | 1 - A^½        | 1 - A        |
//! | 9    | FMT       | B              | A              | A            |
//! | 10   | FMT       | tilted         | tilted         | tilted       |

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FuzzyError, Result};
use crate::inference::{Direction, DmmBase, FuzzyRule};
use crate::set::DiscreteFuzzySet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct CaseId(u8);

impl CaseId {
    pub fn new(id: u8) -> Result<Self> {
        if (1..=10).contains(&id) {
            Ok(Self(id))
        } else {
            Err(FuzzyError::UnknownCase(id))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn direction(self) -> Direction {
        if self.0 <= 5 {
            Direction::Fmp
        } else {
            Direction::Fmt
        }
    }

    pub fn is_tilted(self) -> bool {
        self.0 == 5 || self.0 == 10
    }

    pub fn all() -> impl Iterator<Item = CaseId> {
        (1..=10).map(CaseId)
    }
}

impl TryFrom<u8> for CaseId {
    type Error = FuzzyError;

    fn try_from(value: u8) -> Result<Self> {
        Self::new(value)
    }
}

impl From<CaseId> for u8 {
    fn from(value: CaseId) -> Self {
        value.0
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Class 1 ends each direction with the negation cases (4, 9); class 2
/// with the slightly tilted cases (5, 10).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Class {
    One,
    Two,
}

impl Class {
    pub fn id(self) -> u8 {
        match self {
            Class::One => 1,
            Class::Two => 2,
        }
    }

    pub fn cases(self) -> [CaseId; 8] {
        let ids = match self {
            Class::One => [1, 2, 3, 4, 6, 7, 8, 9],
            Class::Two => [1, 2, 3, 5, 6, 7, 8, 10],
        };
        ids.map(CaseId)
    }

    pub fn contains(self, case: CaseId) -> bool {
        self.cases().contains(&case)
    }

    pub fn needs_tilted(self) -> bool {
        self == Class::Two
    }
}

impl TryFrom<u8> for Class {
    type Error = String;

    fn try_from(value: u8) -> std::result::Result<Self, Self::Error> {
        match value {
            1 => Ok(Class::One),
            2 => Ok(Class::Two),
            other => Err(format!("unknown class {other} (expected 1 or 2)")),
        }
    }
}

impl From<Class> for u8 {
    fn from(value: Class) -> Self {
        value.id()
    }
}

/// Explicit premise/target pair for the slightly tilted cases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tilted {
    pub premise: DiscreteFuzzySet,
    pub target: DiscreteFuzzySet,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseSpec {
    pub case: CaseId,
    pub tilted: Option<Tilted>,
}

impl CaseSpec {
    pub fn new(case: CaseId, tilted: Option<Tilted>) -> Result<Self> {
        if case.is_tilted() && tilted.is_none() {
            return Err(FuzzyError::MissingTilted(case.get()));
        }
        // non-tilted cases derive everything from the rule
        let tilted = if case.is_tilted() { tilted } else { None };
        Ok(Self { case, tilted })
    }

    pub fn standard(case: u8) -> Result<Self> {
        Self::new(CaseId::new(case)?, None)
    }

    pub fn direction(&self) -> Direction {
        self.case.direction()
    }

    fn tilted(&self) -> Result<&Tilted> {
        self.tilted
            .as_ref()
            .ok_or(FuzzyError::MissingTilted(self.case.get()))
    }

    /// Base set for the distance-measure method in this case.
    pub fn dmm_base(&self) -> Result<DmmBase> {
        Ok(match self.case.get() {
            1..=3 | 9 => DmmBase::Plain,
            4 | 6..=8 => DmmBase::Complement,
            _ => DmmBase::Tilted(self.tilted()?.target.clone()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetMode {
    /// very/more-or-less targets for cases 2, 3, 7, 8
    #[default]
    Hedged,
    /// un-hedged alternative for cases 2, 3, 7, 8
    Plain,
    /// both, scored by the better of the two
    Best,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Single(DiscreteFuzzySet),
    Pair {
        hedged: DiscreteFuzzySet,
        plain: DiscreteFuzzySet,
    },
}

pub fn generate_premise(rule: &FuzzyRule, case: &CaseSpec) -> Result<DiscreteFuzzySet> {
    let a = &rule.antecedent;
    let b = &rule.consequent;
    let premise = match case.case.get() {
        1 => a.clone(),
        2 => a.very(),
        3 => a.more_or_less(),
        4 => a.complement(),
        6 => b.complement(),
        7 => b.very().complement(),
        8 => b.more_or_less().complement(),
        9 => b.clone(),
        _ => {
            let premise = case.tilted()?.premise.clone();
            let side = match case.direction() {
                Direction::Fmp => a,
                Direction::Fmt => b,
            };
            side.ensure_same_universe(&premise)?;
            premise
        }
    };
    Ok(premise)
}

fn hedged_target(rule: &FuzzyRule, case: &CaseSpec) -> Result<DiscreteFuzzySet> {
    let a = &rule.antecedent;
    let b = &rule.consequent;
    Ok(match case.case.get() {
        1 => b.clone(),
        2 => b.very(),
        3 => b.more_or_less(),
        4 => b.complement(),
        6 => a.complement(),
        7 => a.very().complement(),
        8 => a.more_or_less().complement(),
        9 => a.clone(),
        _ => tilted_target(rule, case)?,
    })
}

fn plain_target(rule: &FuzzyRule, case: &CaseSpec) -> Result<DiscreteFuzzySet> {
    let a = &rule.antecedent;
    let b = &rule.consequent;
    Ok(match case.case.get() {
        1..=3 => b.clone(),
        4 => b.complement(),
        6..=8 => a.complement(),
        9 => a.clone(),
        _ => tilted_target(rule, case)?,
    })
}

fn tilted_target(rule: &FuzzyRule, case: &CaseSpec) -> Result<DiscreteFuzzySet> {
    let target = case.tilted()?.target.clone();
    let side = match case.direction() {
        Direction::Fmp => &rule.consequent,
        Direction::Fmt => &rule.antecedent,
    };
    side.ensure_same_universe(&target)?;
    Ok(target)
}

pub fn expected_target(rule: &FuzzyRule, case: &CaseSpec, mode: TargetMode) -> Result<Target> {
    Ok(match mode {
        TargetMode::Hedged => Target::Single(hedged_target(rule, case)?),
        TargetMode::Plain => Target::Single(plain_target(rule, case)?),
        TargetMode::Best => Target::Pair {
            hedged: hedged_target(rule, case)?,
            plain: plain_target(rule, case)?,
        },
    })
}

/// `(1 - Σ|c_k - t_k| / r) × 100`
pub fn rpcf_single(conclusion: &DiscreteFuzzySet, target: &DiscreteFuzzySet) -> Result<f64> {
    conclusion.ensure_same_universe(target)?;
    let r = conclusion.universe_size() as f64;
    let deviation: f64 = conclusion
        .memberships()
        .iter()
        .zip(target.memberships())
        .map(|(c, t)| (c - t).abs())
        .sum();
    Ok((1.0 - deviation / r) * 100.0)
}

/// Scores against a target; a pair scores by its better member.
pub fn rpcf_target(conclusion: &DiscreteFuzzySet, target: &Target) -> Result<f64> {
    match target {
        Target::Single(t) => rpcf_single(conclusion, t),
        Target::Pair { hedged, plain } => {
            Ok(rpcf_single(conclusion, hedged)?.max(rpcf_single(conclusion, plain)?))
        }
    }
}

pub fn rpcf_aggregate(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(FuzzyError::EmptyAggregate);
    }
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

pub fn rpcf_overall(fmp: f64, fmt: f64) -> f64 {
    (fmp + fmt) / 2.0
}

/// `conclusion - target`, elementwise.
pub fn error_vector(conclusion: &DiscreteFuzzySet, target: &DiscreteFuzzySet) -> Result<Vec<f64>> {
    conclusion.ensure_same_universe(target)?;
    Ok(conclusion
        .memberships()
        .iter()
        .zip(target.memberships())
        .map(|(c, t)| c - t)
        .collect())
}

/// Per-case scores of one method over one class, with the FMP, FMT and
/// overall aggregates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RpcfResult {
    pub per_case: BTreeMap<CaseId, f64>,
    pub fmp_aggregate: f64,
    pub fmt_aggregate: f64,
    pub overall: f64,
}

impl RpcfResult {
    pub fn from_cases(per_case: BTreeMap<CaseId, f64>) -> Result<Self> {
        let (fmp, fmt): (Vec<_>, Vec<_>) = per_case
            .iter()
            .partition(|(case, _)| case.direction() == Direction::Fmp);
        let fmp: Vec<f64> = fmp.into_iter().map(|(_, &v)| v).collect();
        let fmt: Vec<f64> = fmt.into_iter().map(|(_, &v)| v).collect();
        let fmp_aggregate = rpcf_aggregate(&fmp)?;
        let fmt_aggregate = rpcf_aggregate(&fmt)?;
        Ok(Self {
            per_case,
            fmp_aggregate,
            fmt_aggregate,
            overall: rpcf_overall(fmp_aggregate, fmt_aggregate),
        })
    }
}
