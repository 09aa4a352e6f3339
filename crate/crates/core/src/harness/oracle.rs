//! Independent scalar re-implementation of every method, written against
//! plain slices with naive loops, and the audit comparing it with the
//! production pipeline and the printed reference values.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::fixtures::{self, max_gap, score_agrees, Cell, FixtureStatus, VECTOR_TOLERANCE};
use super::{run_suite, ExperimentConfig, Variant};
use crate::error::Result;
use crate::eval::{Class, TargetMode};
use crate::family::OperatorFamily;
use crate::inference::{AarsForm, SignForm};

/// Production and oracle must agree to this absolute gap.
const EXACT: f64 = 1e-12;

pub fn implies(family: OperatorFamily, a: f64, b: f64) -> f64 {
    match family {
        OperatorFamily::Zadeh => {
            let keep = if a < b { a } else { b };
            let drop = 1.0 - a;
            if drop > keep {
                drop
            } else {
                keep
            }
        }
        OperatorFamily::Lukasiewicz => {
            let v = 1.0 - a + b;
            if v > 1.0 {
                1.0
            } else {
                v
            }
        }
        _ if a <= b => 1.0,
        OperatorFamily::Goedel => b,
        OperatorFamily::R0 => {
            if 1.0 - a > b {
                1.0 - a
            } else {
                b
            }
        }
        OperatorFamily::Goguen => b / a,
    }
}

pub fn tnorm(family: OperatorFamily, a: f64, b: f64) -> f64 {
    match family {
        OperatorFamily::Zadeh | OperatorFamily::Goedel => {
            if a < b {
                a
            } else {
                b
            }
        }
        OperatorFamily::Lukasiewicz => {
            let v = a + b - 1.0;
            if v < 0.0 {
                0.0
            } else {
                v
            }
        }
        OperatorFamily::R0 => {
            if a + b <= 1.0 {
                0.0
            } else if a < b {
                a
            } else {
                b
            }
        }
        OperatorFamily::Goguen => a * b,
    }
}

fn complement(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| 1.0 - x).collect()
}

/// The standard problem data as plain vectors.
#[derive(Debug, Clone)]
pub struct Problem {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub tilted_a: Option<Vec<f64>>,
    pub tilted_b: Option<Vec<f64>>,
}

impl Problem {
    pub fn from_config(config: &ExperimentConfig) -> Self {
        Self {
            a: config.rule.antecedent.memberships().to_vec(),
            b: config.rule.consequent.memberships().to_vec(),
            tilted_a: config.tilted.as_ref().map(|t| t.antecedent.memberships().to_vec()),
            tilted_b: config.tilted.as_ref().map(|t| t.consequent.memberships().to_vec()),
        }
    }

    fn tilted(&self) -> (&[f64], &[f64]) {
        (
            self.tilted_a.as_deref().expect("tilted vectors present"),
            self.tilted_b.as_deref().expect("tilted vectors present"),
        )
    }

    pub fn premise(&self, case: u8) -> Vec<f64> {
        let (a, b) = (&self.a, &self.b);
        match case {
            1 => a.clone(),
            2 => a.iter().map(|x| x * x).collect(),
            3 => a.iter().map(|x| x.sqrt()).collect(),
            4 => complement(a),
            5 => self.tilted().0.to_vec(),
            6 => complement(b),
            7 => b.iter().map(|x| 1.0 - x * x).collect(),
            8 => b.iter().map(|x| 1.0 - x.sqrt()).collect(),
            9 => b.clone(),
            _ => complement(self.tilted().1),
        }
    }

    /// One target, or hedged and plain for `Best`.
    pub fn targets(&self, case: u8, mode: TargetMode) -> Vec<Vec<f64>> {
        let (a, b) = (&self.a, &self.b);
        let hedged = match case {
            1 => b.clone(),
            2 => b.iter().map(|x| x * x).collect(),
            3 => b.iter().map(|x| x.sqrt()).collect(),
            4 => complement(b),
            5 => self.tilted().1.to_vec(),
            6 => complement(a),
            7 => a.iter().map(|x| 1.0 - x * x).collect(),
            8 => a.iter().map(|x| 1.0 - x.sqrt()).collect(),
            9 => a.clone(),
            _ => complement(self.tilted().0),
        };
        let plain = match case {
            2 | 3 => b.clone(),
            7 | 8 => complement(a),
            _ => hedged.clone(),
        };
        match mode {
            TargetMode::Hedged => vec![hedged],
            TargetMode::Plain => vec![plain],
            TargetMode::Best => vec![hedged, plain],
        }
    }

    fn dmm_base(&self, case: u8) -> Vec<f64> {
        match case {
            1..=3 => self.b.clone(),
            4 => complement(&self.b),
            5 => self.tilted().1.to_vec(),
            6..=8 => complement(&self.a),
            9 => self.a.clone(),
            _ => complement(self.tilted().0),
        }
    }

    pub fn infer(&self, variant: Variant, case: u8, premise: &[f64]) -> Vec<f64> {
        let (a, b) = (&self.a, &self.b);
        let fmp = case <= 5;
        match variant {
            Variant::Cri(f) | Variant::Tip(f) if fmp => {
                let mut out = vec![0.0; b.len()];
                for (y, o) in out.iter_mut().enumerate() {
                    for x in 0..a.len() {
                        let v = tnorm(f, premise[x], implies(f, a[x], b[y]));
                        if v > *o {
                            *o = v;
                        }
                    }
                }
                out
            }
            Variant::Cri(f) => {
                let mut out = vec![0.0; a.len()];
                for (x, o) in out.iter_mut().enumerate() {
                    for y in 0..b.len() {
                        let v = tnorm(f, premise[y], implies(f, a[x], b[y]));
                        if v > *o {
                            *o = v;
                        }
                    }
                }
                out
            }
            Variant::Tip(f) => {
                let mut out = vec![1.0; a.len()];
                for (x, o) in out.iter_mut().enumerate() {
                    for y in 0..b.len() {
                        let v = implies(f, implies(f, a[x], b[y]), premise[y]);
                        if v < *o {
                            *o = v;
                        }
                    }
                }
                out
            }
            Variant::Qip(f) if fmp => {
                let mut out = vec![0.0; b.len()];
                for (y, o) in out.iter_mut().enumerate() {
                    for x in 0..a.len() {
                        let w = tnorm(f, premise[x], implies(f, premise[x], a[x]));
                        let v = tnorm(f, w, implies(f, a[x], b[y]));
                        if v > *o {
                            *o = v;
                        }
                    }
                }
                out
            }
            Variant::Qip(f) => {
                let mut out = vec![0.0; a.len()];
                for (x, o) in out.iter_mut().enumerate() {
                    for y in 0..b.len() {
                        let lhs = tnorm(f, a[x], implies(f, a[x], b[y]));
                        let v = tnorm(f, lhs, implies(f, b[y], premise[y]));
                        if v > *o {
                            *o = v;
                        }
                    }
                }
                out
            }
            Variant::Aars(form) => {
                let (against, modified) = if fmp { (a, b) } else { (b, a) };
                let s = 1.0 / (1.0 + rms(premise, against));
                modified
                    .iter()
                    .map(|&m| match form {
                        AarsForm::MoreOrLess => {
                            let v = m / s;
                            if v > 1.0 {
                                1.0
                            } else {
                                v
                            }
                        }
                        AarsForm::Reduction => m * s,
                    })
                    .collect()
            }
            Variant::Dmm(form) => {
                let against = if fmp { a.clone() } else { complement(b) };
                let base = self.dmm_base(case);
                if premise.iter().zip(&against).all(|(p, q)| p.min(*q) == 0.0) {
                    return vec![0.0; base.len()];
                }
                let d = rms(premise, &against);
                let mut quasi = Vec::with_capacity(base.len());
                for k in 0..base.len() {
                    let diff = premise[k] - against[k];
                    let sign = if diff > 0.0 {
                        1.0
                    } else if diff < 0.0 {
                        -1.0
                    } else if form == SignForm::TwoValued {
                        1.0
                    } else {
                        0.0
                    };
                    quasi.push(base[k] + d * sign);
                }
                let hi = quasi.iter().cloned().fold(f64::MIN, f64::max);
                let lo = quasi.iter().cloned().fold(f64::MAX, f64::min);
                if hi > lo {
                    quasi.iter().map(|q| (q - lo) / (hi - lo)).collect()
                } else {
                    vec![0.0; base.len()]
                }
            }
        }
    }
}

fn rms(u: &[f64], v: &[f64]) -> f64 {
    let mut sum = 0.0;
    for k in 0..u.len() {
        sum += (u[k] - v[k]) * (u[k] - v[k]);
    }
    (sum / u.len() as f64).sqrt()
}

pub fn rpcf(conclusion: &[f64], target: &[f64]) -> f64 {
    let mut dev = 0.0;
    for k in 0..conclusion.len() {
        dev += (conclusion[k] - target[k]).abs();
    }
    (1.0 - dev / conclusion.len() as f64) * 100.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckLabel {
    MatchesPaper,
    PaperErratum,
    ImplementationBug,
}

impl CheckLabel {
    pub fn id(self) -> &'static str {
        match self {
            CheckLabel::MatchesPaper => "matches-paper",
            CheckLabel::PaperErratum => "paper-erratum",
            CheckLabel::ImplementationBug => "implementation-bug",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Score(f64),
    Conclusion(Vec<f64>),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Score(v) => write!(f, "{v:.3}"),
            Quantity::Conclusion(v) => {
                let parts: Vec<String> = v.iter().map(|x| format!("{x:.4}")).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

/// One audited cell. `reference` is the printed value, or the production
/// value when the oracle is compared against the pipeline itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub variant: Variant,
    pub class: Option<Class>,
    pub cell: String,
    /// `None` for production-versus-oracle records.
    pub table: Option<u8>,
    pub status: Option<FixtureStatus>,
    pub reference: Quantity,
    pub oracle: Quantity,
    pub delta: f64,
    pub label: CheckLabel,
}

/// Recomputes every cell with the oracle, compares it with the production
/// report and, on the standard suite, with every printed value. Printed
/// values within `config.tolerance` are labelled as matches; flagged cells
/// that disagree are errata; anything else is an implementation bug.
pub fn oracle_check(config: &ExperimentConfig) -> Result<Vec<CheckRecord>> {
    let report = run_suite(config)?;
    let problem = Problem::from_config(config);
    let mut records = Vec::new();

    let mut scores: BTreeMap<(Variant, u8), (Vec<f64>, f64)> = BTreeMap::new();
    for row in &report.rows {
        let case = row.case.get();
        let premise = problem.premise(case);
        let conclusion = problem.infer(row.variant, case, &premise);
        let score = problem
            .targets(case, config.target_mode)
            .iter()
            .map(|t| rpcf(&conclusion, t))
            .fold(f64::MIN, f64::max);

        let gap = max_gap(row.conclusion.memberships(), &conclusion);
        if gap > EXACT {
            records.push(CheckRecord {
                variant: row.variant,
                class: None,
                cell: format!("case {case} conclusion"),
                table: None,
                status: None,
                reference: Quantity::Conclusion(row.conclusion.memberships().to_vec()),
                oracle: Quantity::Conclusion(conclusion.clone()),
                delta: gap,
                label: CheckLabel::ImplementationBug,
            });
        }
        if (row.rpcf - score).abs() > EXACT * 100.0 {
            records.push(CheckRecord {
                variant: row.variant,
                class: None,
                cell: format!("case {case}"),
                table: None,
                status: None,
                reference: Quantity::Score(row.rpcf),
                oracle: Quantity::Score(score),
                delta: (row.rpcf - score).abs(),
                label: CheckLabel::ImplementationBug,
            });
        }
        scores.insert((row.variant, case), (conclusion, score));
    }

    if !(config.uses_standard_suite() && config.target_mode == TargetMode::Hedged) {
        return Ok(records);
    }

    let label = |agrees: bool, status: FixtureStatus| match (agrees, status) {
        (true, _) => CheckLabel::MatchesPaper,
        (false, FixtureStatus::Verified) => CheckLabel::ImplementationBug,
        (false, _) => CheckLabel::PaperErratum,
    };

    for printed in fixtures::printed_scores() {
        if !config.variants.contains(&printed.variant) || !config.classes.contains(&printed.class) {
            continue;
        }
        let oracle = match printed.cell {
            Cell::Case(c) => match scores.get(&(printed.variant, c)) {
                Some((_, s)) => *s,
                None => continue,
            },
            cell => {
                let mean = |fmp: bool| {
                    let vals: Vec<f64> = printed
                        .class
                        .cases()
                        .iter()
                        .filter(|c| (c.get() <= 5) == fmp)
                        .map(|c| scores[&(printed.variant, c.get())].1)
                        .collect();
                    vals.iter().sum::<f64>() / vals.len() as f64
                };
                match cell {
                    Cell::Fmp => mean(true),
                    Cell::Fmt => mean(false),
                    _ => (mean(true) + mean(false)) / 2.0,
                }
            }
        };
        let agrees = score_agrees(oracle, printed.printed, config.tolerance);
        records.push(CheckRecord {
            variant: printed.variant,
            class: Some(printed.class),
            cell: printed.cell.to_string(),
            table: Some(printed.table),
            status: Some(printed.status),
            reference: Quantity::Score(printed.printed),
            oracle: Quantity::Score(oracle),
            delta: (oracle - printed.printed).abs(),
            label: label(agrees, printed.status),
        });
    }

    for printed in fixtures::printed_conclusions() {
        let Some((conclusion, _)) = scores.get(&(printed.variant, printed.case)) else {
            continue;
        };
        let gap = max_gap(conclusion, &printed.printed);
        records.push(CheckRecord {
            variant: printed.variant,
            class: Some(Class::One),
            cell: format!("case {} conclusion", printed.case),
            table: Some(printed.table),
            status: Some(printed.status),
            reference: Quantity::Conclusion(printed.printed.clone()),
            oracle: Quantity::Conclusion(conclusion.clone()),
            delta: gap,
            label: label(gap <= VECTOR_TOLERANCE, printed.status),
        });
    }
    Ok(records)
}
