//! Sup-⊗ and inf-→ compositions over the rule's implication relation.

use super::{unit_set, Direction, FuzzyRule, InferenceOutcome, MethodKind};
use crate::error::Result;
use crate::family::OperatorFamily;
use crate::set::DiscreteFuzzySet;

/// The matrix `R(x, y) = A(x) → B(y)`, rows indexed by x.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    rows: Vec<Vec<f64>>,
}

impl Relation {
    pub fn from_rule(rule: &FuzzyRule, family: OperatorFamily) -> Self {
        let rows = rule
            .antecedent
            .memberships()
            .iter()
            .map(|&a| {
                rule.consequent
                    .memberships()
                    .iter()
                    .map(|&b| family.implication(a, b))
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.rows[x][y]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    fn columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

fn sup(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, f64::max)
}

fn inf(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(1.0, f64::min)
}

/// `B*(y) = ⋁_x A*(x) ⊗ (A(x) → B(y))`
pub fn cri_fmp(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    family: OperatorFamily,
) -> Result<InferenceOutcome> {
    rule.check_fmp_premise(premise)?;
    let conclusion = sup_compose_fmp(rule, premise, family);
    Ok(InferenceOutcome::composed(
        conclusion,
        MethodKind::Cri,
        Direction::Fmp,
        family,
    ))
}

/// Same kernel as [`cri_fmp`]; the triple implication FMP solution
/// coincides with the compositional rule.
pub fn tip_fmp(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    family: OperatorFamily,
) -> Result<InferenceOutcome> {
    rule.check_fmp_premise(premise)?;
    let conclusion = sup_compose_fmp(rule, premise, family);
    Ok(InferenceOutcome::composed(
        conclusion,
        MethodKind::Tip,
        Direction::Fmp,
        family,
    ))
}

fn sup_compose_fmp(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    family: OperatorFamily,
) -> DiscreteFuzzySet {
    let relation = Relation::from_rule(rule, family);
    let p = premise.memberships();
    let values = (0..relation.columns())
        .map(|y| {
            sup(relation
                .rows()
                .iter()
                .zip(p)
                .map(|(row, &px)| family.conjunction(px, row[y])))
        })
        .collect();
    unit_set(values)
}

/// `A*(x) = ⋁_y B*(y) ⊗ (A(x) → B(y))`
pub fn cri_fmt(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    family: OperatorFamily,
) -> Result<InferenceOutcome> {
    rule.check_fmt_premise(premise)?;
    let relation = Relation::from_rule(rule, family);
    let p = premise.memberships();
    let values = relation
        .rows()
        .iter()
        .map(|row| sup(row.iter().zip(p).map(|(&r, &py)| family.conjunction(py, r))))
        .collect();
    Ok(InferenceOutcome::composed(
        unit_set(values),
        MethodKind::Cri,
        Direction::Fmt,
        family,
    ))
}

/// `A*(x) = ⋀_y (A(x) → B(y)) → B*(y)`
pub fn tip_fmt(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    family: OperatorFamily,
) -> Result<InferenceOutcome> {
    rule.check_fmt_premise(premise)?;
    let relation = Relation::from_rule(rule, family);
    let p = premise.memberships();
    let values = relation
        .rows()
        .iter()
        .map(|row| inf(row.iter().zip(p).map(|(&r, &py)| family.implication(r, py))))
        .collect();
    Ok(InferenceOutcome::composed(
        unit_set(values),
        MethodKind::Tip,
        Direction::Fmt,
        family,
    ))
}

/// `B*(y) = ⋁_x A*(x) ⊗ (A*(x) → A(x)) ⊗ (A(x) → B(y))`
pub fn qip_fmp(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    family: OperatorFamily,
) -> Result<InferenceOutcome> {
    rule.check_fmp_premise(premise)?;
    let relation = Relation::from_rule(rule, family);
    // A*(x) ⊗ (A*(x) → A(x)) does not depend on y
    let weights: Vec<f64> = premise
        .memberships()
        .iter()
        .zip(rule.antecedent.memberships())
        .map(|(&px, &ax)| family.conjunction(px, family.implication(px, ax)))
        .collect();
    let values = (0..relation.columns())
        .map(|y| {
            sup(relation
                .rows()
                .iter()
                .zip(&weights)
                .map(|(row, &w)| family.conjunction(w, row[y])))
        })
        .collect();
    Ok(InferenceOutcome::composed(
        unit_set(values),
        MethodKind::Qip,
        Direction::Fmp,
        family,
    ))
}

/// `A*(x) = ⋁_y A(x) ⊗ (A(x) → B(y)) ⊗ (B(y) → B*(y))`
pub fn qip_fmt(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    family: OperatorFamily,
) -> Result<InferenceOutcome> {
    rule.check_fmt_premise(premise)?;
    let relation = Relation::from_rule(rule, family);
    let back: Vec<f64> = rule
        .consequent
        .memberships()
        .iter()
        .zip(premise.memberships())
        .map(|(&by, &py)| family.implication(by, py))
        .collect();
    let values = relation
        .rows()
        .iter()
        .zip(rule.antecedent.memberships())
        .map(|(row, &ax)| {
            sup(row
                .iter()
                .zip(&back)
                .map(|(&r, &k)| family.conjunction(family.conjunction(ax, r), k)))
        })
        .collect();
    Ok(InferenceOutcome::composed(
        unit_set(values),
        MethodKind::Qip,
        Direction::Fmt,
        family,
    ))
}
