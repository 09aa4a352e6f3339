//! Distance-measure method (DMM).
//!
//! The premise/antecedent difference fixes a sign per universe point, the
//! Euclidean distance fixes the magnitude, and the shifted base set is
//! min-max rescaled back into `[0, 1]`.

use super::{unit_set, DmmBase, DmmTrace, Direction, FuzzyRule, InferenceOutcome, MethodKind, SignForm};
use crate::error::{FuzzyError, Result};
use crate::set::DiscreteFuzzySet;

/// Root-mean-square distance `sqrt(Σ (u_k - v_k)² / r)`.
pub fn euclid_dm(u: &DiscreteFuzzySet, v: &DiscreteFuzzySet) -> Result<f64> {
    u.ensure_same_universe(v)?;
    Ok(rms_distance(u.memberships(), v.memberships()))
}

pub(crate) fn rms_distance(u: &[f64], v: &[f64]) -> f64 {
    let sum: f64 = u.iter().zip(v).map(|(a, b)| (a - b) * (a - b)).sum();
    (sum / u.len() as f64).sqrt()
}

pub fn sign_vector(diff: &[f64], form: SignForm) -> Vec<i8> {
    diff.iter()
        .map(|&d| {
            if d > 0.0 {
                1
            } else if d < 0.0 {
                -1
            } else {
                match form {
                    SignForm::ThreeValued => 0,
                    SignForm::TwoValued => 1,
                }
            }
        })
        .collect()
}

/// Result of min-max rescaling.
#[derive(Debug, Clone, PartialEq)]
pub struct Normalized {
    pub set: DiscreteFuzzySet,
    pub max: f64,
    pub min: f64,
    /// All inputs were equal; `set` is all zeros.
    pub degenerate: bool,
}

/// `(raw - min) / (max - min)`; a constant input yields zeros and is flagged.
pub fn normalize_unit(raw: &[f64]) -> Result<Normalized> {
    if raw.is_empty() {
        return Err(FuzzyError::EmptyUniverse);
    }
    let max = raw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = raw.iter().copied().fold(f64::INFINITY, f64::min);
    let span = max - min;
    if span.is_nan() || span <= 0.0 {
        return Ok(Normalized {
            set: DiscreteFuzzySet::empty(raw.len())?,
            max,
            min,
            degenerate: true,
        });
    }
    let values = raw.iter().map(|&q| (q - min) / span).collect();
    Ok(Normalized {
        set: unit_set(values),
        max,
        min,
        degenerate: false,
    })
}

fn run_dmm(
    premise: &DiscreteFuzzySet,
    antecedent: &DiscreteFuzzySet,
    base: &DiscreteFuzzySet,
    form: SignForm,
) -> Result<(DiscreteFuzzySet, DmmTrace)> {
    let disjoint = premise.is_disjoint(antecedent)?;
    let difference: Vec<f64> = premise
        .memberships()
        .iter()
        .zip(antecedent.memberships())
        .map(|(p, a)| p - a)
        .collect();
    let signs = sign_vector(&difference, form);
    let distance = rms_distance(premise.memberships(), antecedent.memberships());

    // The sign vector lives on the premise universe and shifts the base on the
    // conclusion universe, so the two must agree in size.
    if signs.len() != base.universe_size() {
        return Err(FuzzyError::UniverseMismatch {
            expected: base.universe_size(),
            found: signs.len(),
        });
    }
    let quasi: Vec<f64> = base
        .memberships()
        .iter()
        .zip(&signs)
        .map(|(&b, &s)| b + distance * f64::from(s))
        .collect();
    let normalized = normalize_unit(&quasi)?;
    let conclusion = if disjoint {
        DiscreteFuzzySet::empty(base.universe_size())?
    } else {
        normalized.set
    };
    let trace = DmmTrace {
        difference,
        signs,
        distance,
        quasi,
        max: normalized.max,
        min: normalized.min,
        disjoint,
        degenerate: !disjoint && normalized.degenerate,
    };
    Ok((conclusion, trace))
}

fn dmm_outcome(conclusion: DiscreteFuzzySet, trace: DmmTrace, direction: Direction, form: SignForm) -> InferenceOutcome {
    InferenceOutcome {
        conclusion,
        method: MethodKind::Dmm,
        direction,
        family: None,
        sign_form: Some(form),
        aars_form: None,
        trace: Some(trace),
    }
}

/// FMP by distance measure. `base` resolves against B (`Plain` = B,
/// `Complement` = 1 - B).
pub fn dmm_fmp(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    base: &DmmBase,
    form: SignForm,
) -> Result<InferenceOutcome> {
    rule.check_fmp_premise(premise)?;
    let base = base.resolve(&rule.consequent)?;
    let (conclusion, trace) = run_dmm(premise, &rule.antecedent, &base, form)?;
    Ok(dmm_outcome(conclusion, trace, Direction::Fmp, form))
}

/// FMT by distance measure through the contrapositive rule: difference,
/// sign, distance and the emptiness guard are all taken against 1 - B.
/// `base` resolves against A (`Plain` = A, `Complement` = 1 - A).
pub fn dmm_fmt(
    rule: &FuzzyRule,
    premise: &DiscreteFuzzySet,
    base: &DmmBase,
    form: SignForm,
) -> Result<InferenceOutcome> {
    rule.check_fmt_premise(premise)?;
    let base = base.resolve(&rule.antecedent)?;
    let not_b = rule.consequent.complement();
    let (conclusion, trace) = run_dmm(premise, &not_b, &base, form)?;
    Ok(dmm_outcome(conclusion, trace, Direction::Fmt, form))
}
