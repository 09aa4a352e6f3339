//! Whole-suite invariants on the default class 1 configuration.

use fuzzy_reductive::harness::best_per_method;
use fuzzy_reductive::{
    expected_target, parse_config, render_report, rpcf_target, run_suite, Class, MethodKind,
    OutputFormat, Report,
};

fn default_report() -> Report {
    run_suite(&parse_config("").unwrap()).unwrap()
}

#[test]
fn best_scores_rank_dmm_cri_tip_qip_aars() {
    let best = best_per_method(&default_report(), Class::One);
    let order: Vec<MethodKind> = {
        let mut ranked = best.clone();
        ranked.sort_by(|x, y| y.2.total_cmp(&x.2));
        ranked.into_iter().map(|(m, _, _)| m).collect()
    };
    assert_eq!(
        order,
        [MethodKind::Dmm, MethodKind::Cri, MethodKind::Tip, MethodKind::Qip, MethodKind::Aars]
    );
}

#[test]
fn fmt_lags_fmp_except_for_dmm() {
    let report = default_report();
    for agg in report.aggregates.iter().filter(|a| a.class == Class::One) {
        if agg.variant.method() == MethodKind::Dmm {
            assert!((agg.fmt - agg.fmp).abs() <= 5.5, "{}: {} vs {}", agg.variant, agg.fmp, agg.fmt);
        } else {
            assert!(agg.fmt < agg.fmp, "{}: {} vs {}", agg.variant, agg.fmp, agg.fmt);
        }
    }
}

#[test]
fn renderings_are_byte_stable() {
    let config = parse_config("classes = [1, 2]").unwrap();
    for format in [OutputFormat::Csv, OutputFormat::Json, OutputFormat::Markdown] {
        let first = render_report(&run_suite(&config).unwrap(), format);
        let second = render_report(&run_suite(&config).unwrap(), format);
        assert_eq!(first, second, "{format:?}");
    }
}

#[test]
fn stored_rpcf_is_recomputable() {
    let config = parse_config("").unwrap();
    let report = run_suite(&config).unwrap();
    for row in &report.rows {
        let spec = config.case_spec(row.case).unwrap();
        let target = expected_target(&config.rule, &spec, config.target_mode).unwrap();
        assert_eq!(row.rpcf, rpcf_target(&row.conclusion, &target).unwrap(), "{} case {}", row.variant, row.case);
    }
}

#[test]
fn json_round_trip_preserves_the_report() {
    let report = default_report();
    assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
}
