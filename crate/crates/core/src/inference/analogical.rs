//! Approximate analogical reasoning: modify the rule's set by the similarity
//! `S = 1 / (1 + DM)` between premise and antecedent.

use super::distance::rms_distance;
use super::{unit_set, AarsForm, Direction, FuzzyRule, InferenceOutcome, MethodKind};
use crate::error::Result;
use crate::set::DiscreteFuzzySet;

/// `1 / (1 + DM(u, v))`, in `(0, 1]`.
pub fn similarity(u: &DiscreteFuzzySet, v: &DiscreteFuzzySet) -> Result<f64> {
    u.ensure_same_universe(v)?;
    Ok(1.0 / (1.0 + rms_distance(u.memberships(), v.memberships())))
}

fn modify(target: &DiscreteFuzzySet, s: f64, form: AarsForm) -> DiscreteFuzzySet {
    let values = target
        .memberships()
        .iter()
        .map(|&m| match form {
            AarsForm::MoreOrLess => (m / s).min(1.0),
            AarsForm::Reduction => m * s,
        })
        .collect();
    unit_set(values)
}

fn outcome(conclusion: DiscreteFuzzySet, direction: Direction, form: AarsForm) -> InferenceOutcome {
    InferenceOutcome {
        conclusion,
        method: MethodKind::Aars,
        direction,
        family: None,
        sign_form: None,
        aars_form: Some(form),
        trace: None,
    }
}

/// Modifies B by the similarity of the premise to A.
pub fn aars_fmp(rule: &FuzzyRule, premise: &DiscreteFuzzySet, form: AarsForm) -> Result<InferenceOutcome> {
    rule.check_fmp_premise(premise)?;
    let s = similarity(premise, &rule.antecedent)?;
    Ok(outcome(modify(&rule.consequent, s, form), Direction::Fmp, form))
}

/// Modifies A by the similarity of the premise to B.
pub fn aars_fmt(rule: &FuzzyRule, premise: &DiscreteFuzzySet, form: AarsForm) -> Result<InferenceOutcome> {
    rule.check_fmt_premise(premise)?;
    let s = similarity(premise, &rule.consequent)?;
    Ok(outcome(modify(&rule.antecedent, s, form), Direction::Fmt, form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::FuzzyError;

    fn set(v: &[f64]) -> DiscreteFuzzySet {
        DiscreteFuzzySet::new(v.to_vec()).unwrap()
    }

    fn assert_close(actual: &DiscreteFuzzySet, expected: &[f64], tol: f64) {
        for (k, (a, e)) in actual.memberships().iter().zip(expected).enumerate() {
            assert!((a - e).abs() <= tol, "index {k}: {actual} vs {expected:?}");
        }
    }

    #[test]
    fn fmp_examples() {
        let rule = FuzzyRule::small_large();
        let out = aars_fmp(&rule, &rule.antecedent, AarsForm::MoreOrLess).unwrap();
        assert_eq!(out.conclusion, rule.consequent);
        let out = aars_fmp(&rule, &set(&[1.0, 0.09, 0.0, 0.0, 0.0]), AarsForm::Reduction).unwrap();
        assert_close(&out.conclusion, &[0.0, 0.0, 0.0, 0.274, 0.914], 5e-4);
        let out = aars_fmp(&rule, &set(&[0.0, 0.7, 1.0, 1.0, 1.0]), AarsForm::MoreOrLess).unwrap();
        assert_close(&out.conclusion, &[0.0, 0.0, 0.0, 0.574, 1.0], 5e-4);
    }

    #[test]
    fn fmt_examples() {
        let rule = FuzzyRule::small_large();
        let not_b = set(&[1.0, 1.0, 1.0, 0.7, 0.0]);
        let out = aars_fmt(&rule, &not_b, AarsForm::MoreOrLess).unwrap();
        assert_close(&out.conclusion, &[1.0, 0.574, 0.0, 0.0, 0.0], 5e-4);
        let out = aars_fmt(&rule, &not_b, AarsForm::Reduction).unwrap();
        assert_close(&out.conclusion, &[0.523, 0.157, 0.0, 0.0, 0.0], 5e-4);
        for form in [AarsForm::MoreOrLess, AarsForm::Reduction] {
            let out = aars_fmt(&rule, &rule.consequent, form).unwrap();
            assert_eq!(out.conclusion, rule.antecedent);
        }
    }

    #[test]
    fn similarity_bounds() {
        let a = set(&[1.0, 0.3, 0.0]);
        assert_eq!(similarity(&a, &a).unwrap(), 1.0);
        let s = similarity(&a, &a.complement()).unwrap();
        assert!(s > 0.0 && s < 1.0);
        assert!(matches!(
            aars_fmp(&FuzzyRule::small_large(), &a, AarsForm::Reduction),
            Err(FuzzyError::UniverseMismatch { .. })
        ));
    }
}
