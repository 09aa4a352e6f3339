//! Experiment runner: method variants, suite execution, oracle audit and
//! report rendering.

mod config;
pub mod fixtures;
pub mod oracle;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::eval::{
    expected_target, generate_premise, rpcf_target, CaseId, CaseSpec, Class, RpcfResult, Target,
    TargetMode,
};
use crate::family::OperatorFamily;
use crate::inference::{
    aars_fmp, aars_fmt, cri_fmp, cri_fmt, dmm_fmp, dmm_fmt, qip_fmp, qip_fmt, tip_fmp, tip_fmt,
    AarsForm, Direction, FuzzyRule, InferenceOutcome, MethodKind, SignForm,
};
use crate::set::DiscreteFuzzySet;

pub use config::{load_config, parse_config, ConfigError, ExperimentConfig, OutputFormat, TiltedVectors};
pub use oracle::{oracle_check, CheckLabel, CheckRecord, Quantity};
pub use report::{render_report, render_tables, AggregateRow, Report, ReportRow};

/// One method with its operator family or form, e.g. `cri:goedel`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Cri(OperatorFamily),
    Tip(OperatorFamily),
    Qip(OperatorFamily),
    Aars(AarsForm),
    Dmm(SignForm),
}

impl Variant {
    /// The 17 variants compared in the standard suite.
    pub fn roster() -> Vec<Variant> {
        use OperatorFamily::*;
        let mut all = vec![
            Variant::Cri(Zadeh),
            Variant::Cri(Lukasiewicz),
            Variant::Cri(Goedel),
            Variant::Cri(R0),
            Variant::Cri(Goguen),
        ];
        all.extend(OperatorFamily::RESIDUAL.map(Variant::Tip));
        all.extend(OperatorFamily::RESIDUAL.map(Variant::Qip));
        all.push(Variant::Aars(AarsForm::MoreOrLess));
        all.push(Variant::Aars(AarsForm::Reduction));
        all.push(Variant::Dmm(SignForm::ThreeValued));
        all.push(Variant::Dmm(SignForm::TwoValued));
        all
    }

    pub fn method(self) -> MethodKind {
        match self {
            Variant::Cri(_) => MethodKind::Cri,
            Variant::Tip(_) => MethodKind::Tip,
            Variant::Qip(_) => MethodKind::Qip,
            Variant::Aars(_) => MethodKind::Aars,
            Variant::Dmm(_) => MethodKind::Dmm,
        }
    }

    /// Family or form id, the part after the colon.
    pub fn detail(self) -> &'static str {
        match self {
            Variant::Cri(f) | Variant::Tip(f) | Variant::Qip(f) => f.id(),
            Variant::Aars(form) => form.id(),
            Variant::Dmm(form) => form.id(),
        }
    }

    pub fn family(self) -> Option<OperatorFamily> {
        match self {
            Variant::Cri(f) | Variant::Tip(f) | Variant::Qip(f) => Some(f),
            _ => None,
        }
    }

    pub fn id(self) -> String {
        format!("{}:{}", self.method().id(), self.detail())
    }

    /// Human-readable label for tables.
    pub fn label(self) -> String {
        let method = self.method().id().to_uppercase();
        match self {
            Variant::Cri(f) | Variant::Tip(f) | Variant::Qip(f) => {
                format!("{method}-{}", f.display_name())
            }
            Variant::Aars(form) => format!("{method} {}", form.id()),
            Variant::Dmm(form) => format!("{method} {}", form.id()),
        }
    }

    /// Expands `cri` to its whole family group, or parses a single
    /// `method:detail` id.
    pub fn expand(spec: &str) -> std::result::Result<Vec<Variant>, String> {
        let spec = spec.trim().to_ascii_lowercase();
        if spec == "all" {
            return Ok(Self::roster());
        }
        if !spec.contains(':') {
            let group: Vec<Variant> = Self::roster()
                .into_iter()
                .filter(|v| v.method().id() == spec)
                .collect();
            return if group.is_empty() {
                Err(format!("unknown method '{spec}'"))
            } else {
                Ok(group)
            };
        }
        spec.parse().map(|v| vec![v])
    }

    pub fn infer(
        self,
        rule: &FuzzyRule,
        case: &CaseSpec,
        premise: &DiscreteFuzzySet,
    ) -> Result<InferenceOutcome> {
        let fmp = case.direction() == Direction::Fmp;
        match (self, fmp) {
            (Variant::Cri(f), true) => cri_fmp(rule, premise, f),
            (Variant::Cri(f), false) => cri_fmt(rule, premise, f),
            (Variant::Tip(f), true) => tip_fmp(rule, premise, f),
            (Variant::Tip(f), false) => tip_fmt(rule, premise, f),
            (Variant::Qip(f), true) => qip_fmp(rule, premise, f),
            (Variant::Qip(f), false) => qip_fmt(rule, premise, f),
            (Variant::Aars(form), true) => aars_fmp(rule, premise, form),
            (Variant::Aars(form), false) => aars_fmt(rule, premise, form),
            (Variant::Dmm(form), true) => dmm_fmp(rule, premise, &case.dmm_base()?, form),
            (Variant::Dmm(form), false) => dmm_fmt(rule, premise, &case.dmm_base()?, form),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let (method, detail) = lower
            .split_once(':')
            .ok_or_else(|| format!("method id '{s}' must look like 'cri:goedel'"))?;
        let family = || detail.parse::<OperatorFamily>().map_err(|e| e.to_string());
        let residual = |f: OperatorFamily| {
            if f.is_residual() {
                Ok(f)
            } else {
                Err(format!("{method} needs a residual family, got '{detail}'"))
            }
        };
        match method {
            "cri" => Ok(Variant::Cri(family()?)),
            "tip" => Ok(Variant::Tip(residual(family()?)?)),
            "qip" => Ok(Variant::Qip(residual(family()?)?)),
            "aars" => match detail {
                "more-or-less" | "mol" => Ok(Variant::Aars(AarsForm::MoreOrLess)),
                "reduction" => Ok(Variant::Aars(AarsForm::Reduction)),
                _ => Err(format!("unknown AARS form '{detail}'")),
            },
            "dmm" => match detail {
                "three-valued" | "3" => Ok(Variant::Dmm(SignForm::ThreeValued)),
                "two-valued" | "2" => Ok(Variant::Dmm(SignForm::TwoValued)),
                _ => Err(format!("unknown DMM sign form '{detail}'")),
            },
            _ => Err(format!("unknown method '{method}'")),
        }
    }
}

impl Serialize for Variant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.id())
    }
}

impl<'de> Deserialize<'de> for Variant {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn target_sets(target: Target) -> Vec<DiscreteFuzzySet> {
    match target {
        Target::Single(t) => vec![t],
        Target::Pair { hedged, plain } => vec![hedged, plain],
    }
}

/// Runs every configured variant on every case of the configured classes.
pub fn run_suite(config: &ExperimentConfig) -> Result<Report> {
    let cases = config.cases();
    let mut rows = Vec::with_capacity(config.variants.len() * cases.len());
    for &variant in &config.variants {
        for &case in &cases {
            let spec = config.case_spec(case)?;
            let premise = generate_premise(&config.rule, &spec)?;
            let target = expected_target(&config.rule, &spec, config.target_mode)?;
            let outcome = variant.infer(&config.rule, &spec, &premise)?;
            let rpcf = rpcf_target(&outcome.conclusion, &target)?;
            rows.push(ReportRow {
                variant,
                case,
                direction: case.direction(),
                premise,
                targets: target_sets(target),
                conclusion: outcome.conclusion,
                rpcf,
                annotation: None,
            });
        }
    }

    let mut aggregates = Vec::new();
    for &variant in &config.variants {
        for &class in &config.classes {
            let per_case: BTreeMap<CaseId, f64> = rows
                .iter()
                .filter(|r| r.variant == variant && class.contains(r.case))
                .map(|r| (r.case, r.rpcf))
                .collect();
            let result = RpcfResult::from_cases(per_case)?;
            aggregates.push(AggregateRow {
                variant,
                class,
                fmp: result.fmp_aggregate,
                fmt: result.fmt_aggregate,
                overall: result.overall,
                annotation: None,
            });
        }
    }

    let mut report = Report {
        rule: config.rule.clone(),
        target_mode: config.target_mode,
        rows,
        aggregates,
    };
    if config.uses_standard_suite() && config.target_mode == TargetMode::Hedged {
        fixtures::annotate(&mut report, config.tolerance);
    }
    report.sort();
    Ok(report)
}

/// Best overall score per method over the given class, as (method, variant, score).
pub fn best_per_method(report: &Report, class: Class) -> Vec<(MethodKind, Variant, f64)> {
    let mut best: BTreeMap<MethodKind, (Variant, f64)> = BTreeMap::new();
    for agg in report.aggregates.iter().filter(|a| a.class == class) {
        let entry = best
            .entry(agg.variant.method())
            .or_insert((agg.variant, agg.overall));
        if agg.overall > entry.1 {
            *entry = (agg.variant, agg.overall);
        }
    }
    best.into_iter().map(|(m, (v, s))| (m, v, s)).collect()
}
