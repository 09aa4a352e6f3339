//! Report model and its CSV, JSON and markdown renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{OutputFormat, Variant};
use crate::eval::{CaseId, Class, TargetMode};
use crate::inference::{Direction, FuzzyRule, MethodKind};
use crate::set::DiscreteFuzzySet;

/// One (variant, case) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub variant: Variant,
    pub case: CaseId,
    pub direction: Direction,
    pub premise: DiscreteFuzzySet,
    /// One target, or hedged and plain under `TargetMode::Best`; the score
    /// is the best over them.
    pub targets: Vec<DiscreteFuzzySet>,
    pub conclusion: DiscreteFuzzySet,
    pub rpcf: f64,
    pub annotation: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub variant: Variant,
    pub class: Class,
    pub fmp: f64,
    pub fmt: f64,
    pub overall: f64,
    pub annotation: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub rule: FuzzyRule,
    pub target_mode: TargetMode,
    /// Sorted by (variant, case).
    pub rows: Vec<ReportRow>,
    /// Sorted by (variant, class).
    pub aggregates: Vec<AggregateRow>,
}

impl Report {
    pub(crate) fn sort(&mut self) {
        self.rows.sort_by_key(|r| (r.variant, r.case));
        self.aggregates.sort_by_key(|a| (a.variant, a.class));
    }

    pub fn row(&self, variant: Variant, case: CaseId) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.variant == variant && r.case == case)
    }

    pub fn aggregate(&self, variant: Variant, class: Class) -> Option<&AggregateRow> {
        self.aggregates
            .iter()
            .find(|a| a.variant == variant && a.class == class)
    }

    pub fn classes(&self) -> Vec<Class> {
        let mut classes: Vec<Class> = self.aggregates.iter().map(|a| a.class).collect();
        classes.sort();
        classes.dedup();
        classes
    }

    fn variants(&self) -> Vec<Variant> {
        let mut variants: Vec<Variant> = self.rows.iter().map(|r| r.variant).collect();
        variants.dedup();
        variants
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["method", "family", "direction", "case", "rpcf", "conclusion"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.variant.method().id(),
                r.variant.detail(),
                r.direction.id(),
                &r.case.to_string(),
                &r.rpcf.to_string(),
                &r.conclusion.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    pub fn to_json(&self) -> String {
        let mut methods: BTreeMap<String, BTreeMap<String, JsonVariant>> = BTreeMap::new();
        for r in &self.rows {
            let entry = methods
                .entry(r.variant.method().id().to_string())
                .or_default()
                .entry(r.variant.detail().to_string())
                .or_default();
            entry.cases.insert(
                r.case.get().to_string(),
                JsonCase {
                    direction: r.direction,
                    premise: r.premise.clone(),
                    targets: r.targets.clone(),
                    conclusion: r.conclusion.clone(),
                    rpcf: r.rpcf,
                    annotation: r.annotation.clone(),
                },
            );
        }
        for a in &self.aggregates {
            let entry = methods
                .entry(a.variant.method().id().to_string())
                .or_default()
                .entry(a.variant.detail().to_string())
                .or_default();
            entry.classes.insert(
                a.class.id().to_string(),
                JsonAggregate {
                    fmp: a.fmp,
                    fmt: a.fmt,
                    overall: a.overall,
                    annotation: a.annotation.clone(),
                },
            );
        }
        let doc = JsonReport {
            rule: self.rule.clone(),
            target_mode: self.target_mode,
            methods,
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let doc: JsonReport = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let mut rows = Vec::new();
        let mut aggregates = Vec::new();
        for (method, families) in doc.methods {
            for (detail, entry) in families {
                let variant: Variant = format!("{method}:{detail}").parse()?;
                for (case, c) in entry.cases {
                    let id: u8 = case.parse().map_err(|_| format!("bad case key '{case}'"))?;
                    rows.push(ReportRow {
                        variant,
                        case: CaseId::new(id).map_err(|e| e.to_string())?,
                        direction: c.direction,
                        premise: c.premise,
                        targets: c.targets,
                        conclusion: c.conclusion,
                        rpcf: c.rpcf,
                        annotation: c.annotation,
                    });
                }
                for (class, a) in entry.classes {
                    let id: u8 = class.parse().map_err(|_| format!("bad class key '{class}'"))?;
                    aggregates.push(AggregateRow {
                        variant,
                        class: Class::try_from(id)?,
                        fmp: a.fmp,
                        fmt: a.fmt,
                        overall: a.overall,
                        annotation: a.annotation,
                    });
                }
            }
        }
        let mut report = Report {
            rule: doc.rule,
            target_mode: doc.target_mode,
            rows,
            aggregates,
        };
        report.sort();
        Ok(report)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Reductive property report\n\n");
        let _ = writeln!(
            out,
            "Rule: A = {:.3}, B = {:.3}; targets: {}\n",
            self.rule.antecedent,
            self.rule.consequent,
            mode_id(self.target_mode)
        );
        for class in self.classes() {
            let _ = writeln!(out, "## Class {}\n", class.id());
            for method in MethodKind::ALL {
                if let Some(table) = self.method_table(class, method) {
                    out.push_str(&table);
                    out.push('\n');
                }
            }
            out.push_str(&self.summary_table(class));
            out.push('\n');
        }
        let notes = self.notes();
        if !notes.is_empty() {
            out.push_str("## Notes\n\n");
            for n in notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }

    /// Per-case table for one method: premise, then conclusion and score for
    /// each variant, then the aggregate rows.
    fn method_table(&self, class: Class, method: MethodKind) -> Option<String> {
        let variants: Vec<Variant> = self
            .variants()
            .into_iter()
            .filter(|v| v.method() == method)
            .collect();
        if variants.is_empty() {
            return None;
        }
        let mut out = String::new();
        let _ = writeln!(out, "### {} (class {})\n", method.id().to_uppercase(), class.id());
        out.push_str("| case | premise |");
        for v in &variants {
            let _ = write!(out, " {} |", v.label());
        }
        out.push_str("\n|---|---|");
        for _ in &variants {
            out.push_str("---|");
        }
        out.push('\n');
        for case in class.cases() {
            let Some(first) = self.row(variants[0], case) else {
                continue;
            };
            let _ = write!(out, "| {} | {:.3} |", case, first.premise);
            for &v in &variants {
                match self.row(v, case) {
                    Some(r) => {
                        let _ = write!(out, " {:.3} {:.2} |", r.conclusion, r.rpcf);
                    }
                    None => out.push_str(" |"),
                }
            }
            out.push('\n');
        }
        for (label, pick) in [
            ("FMP", (|a: &AggregateRow| a.fmp) as fn(&AggregateRow) -> f64),
            ("FMT", |a: &AggregateRow| a.fmt),
            ("overall", |a: &AggregateRow| a.overall),
        ] {
            let _ = write!(out, "| {label} | |");
            for &v in &variants {
                match self.aggregate(v, class) {
                    Some(a) => {
                        let _ = write!(out, " {:.2} |", pick(a));
                    }
                    None => out.push_str(" |"),
                }
            }
            out.push('\n');
        }
        Some(out)
    }

    fn summary_table(&self, class: Class) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "### Summary (class {})\n", class.id());
        out.push_str("| method | variant | FMP | FMT | overall |\n|---|---|---|---|---|\n");
        for a in self.aggregates.iter().filter(|a| a.class == class) {
            let _ = writeln!(
                out,
                "| {} | {} | {:.2} | {:.2} | {:.2} |",
                a.variant.method().id().to_uppercase(),
                a.variant.detail(),
                a.fmp,
                a.fmt,
                a.overall
            );
        }
        out
    }

    fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        for r in &self.rows {
            if let Some(a) = &r.annotation {
                notes.push(format!("{} case {}: {a}", r.variant, r.case));
            }
        }
        for g in &self.aggregates {
            if let Some(a) = &g.annotation {
                notes.push(format!("{} class {}: {a}", g.variant, g.class.id()));
            }
        }
        notes
    }
}

fn mode_id(mode: TargetMode) -> &'static str {
    match mode {
        TargetMode::Hedged => "hedged",
        TargetMode::Plain => "plain",
        TargetMode::Best => "best",
    }
}

#[derive(Serialize, Deserialize)]
struct JsonReport {
    rule: FuzzyRule,
    target_mode: TargetMode,
    methods: BTreeMap<String, BTreeMap<String, JsonVariant>>,
}

#[derive(Default, Serialize, Deserialize)]
struct JsonVariant {
    cases: BTreeMap<String, JsonCase>,
    classes: BTreeMap<String, JsonAggregate>,
}

#[derive(Serialize, Deserialize)]
struct JsonCase {
    direction: Direction,
    premise: DiscreteFuzzySet,
    targets: Vec<DiscreteFuzzySet>,
    conclusion: DiscreteFuzzySet,
    rpcf: f64,
    annotation: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonAggregate {
    fmp: f64,
    fmt: f64,
    overall: f64,
    annotation: Option<String>,
}

pub fn render_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => report.to_json(),
        OutputFormat::Markdown => report.to_markdown(),
    }
}

/// Per-method tables for class 1, the class 1 summary and the class 2
/// summary, as (file name, markdown) pairs.
pub fn render_tables(report: &Report) -> Vec<(String, String)> {
    let mut files = Vec::new();
    let classes = report.classes();
    if classes.contains(&Class::One) {
        for (n, method) in [
            (2, MethodKind::Qip),
            (3, MethodKind::Cri),
            (4, MethodKind::Tip),
            (5, MethodKind::Aars),
            (6, MethodKind::Dmm),
        ] {
            if let Some(table) = report.method_table(Class::One, method) {
                files.push((format!("table{n}_{}.md", method.id()), table));
            }
        }
        files.push(("table7_class1_summary.md".into(), report.summary_table(Class::One)));
    }
    if classes.contains(&Class::Two) {
        files.push(("table11_class2_summary.md".into(), report.summary_table(Class::Two)));
        let mut detail = String::new();
        for method in MethodKind::ALL {
            if let Some(table) = report.method_table(Class::Two, method) {
                detail.push_str(&table);
                detail.push('\n');
            }
        }
        files.push(("class2_cases.md".into(), detail));
    }
    files
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{parse_config, run_suite};

    #[test]
    fn csv_shape() {
        let report = run_suite(&parse_config("").unwrap()).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("method,family,direction,case,rpcf,conclusion"));
        assert_eq!(lines.count(), 136);
    }

    #[test]
    fn json_round_trip() {
        let report = run_suite(&parse_config("classes = [1, 2]\ntarget_mode = \"best\"").unwrap()).unwrap();
        let back = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
        let report = run_suite(&parse_config("").unwrap()).unwrap();
        assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
    }

    #[test]
    fn markdown_prints_dmm_aggregate() {
        let config = parse_config("methods = [\"dmm:three-valued\"]").unwrap();
        let md = run_suite(&config).unwrap().to_markdown();
        assert!(md.contains("| FMP | | 88.06 |"), "{md}");
        assert!(md.contains("| DMM | three-valued | 88.06 | 88.06 | 88.06 |"), "{md}");
    }

    #[test]
    fn tables_cover_both_classes() {
        let report = run_suite(&parse_config("classes = [1, 2]").unwrap()).unwrap();
        let names: Vec<String> = render_tables(&report).into_iter().map(|(n, _)| n).collect();
        assert!(names.contains(&"table6_dmm.md".to_string()));
        assert!(names.contains(&"table11_class2_summary.md".to_string()));
        assert_eq!(names.len(), 8);
    }
}
