//! Discrete fuzzy modus ponens and modus tollens with reductive-property
//! evaluation.
//!
//! * [`set`] and [`family`]: membership vectors, hedges, and the five
//!   implication / t-norm families.
//! * [`inference`]: CRI, TIP, QIP, AARS and the distance-measure method.
//! * [`eval`]: the ten premise/target cases and the RPCF criterion.
//! * [`harness`]: configuration, suite runner, oracle audit, reports.
//!
//! ```
//! use fuzzy_reductive::{cri_fmp, FuzzyRule, OperatorFamily};
//!
//! let rule = FuzzyRule::small_large();
//! let out = cri_fmp(&rule, &rule.antecedent, OperatorFamily::Goedel).unwrap();
//! assert_eq!(out.conclusion, rule.consequent);
//! ```

pub mod error;
pub mod eval;
pub mod family;
pub mod harness;
pub mod inference;
pub mod set;

pub use error::{FuzzyError, Result};
pub use eval::{
    error_vector, expected_target, generate_premise, rpcf_aggregate, rpcf_overall, rpcf_single,
    rpcf_target, CaseId, CaseSpec, Class, RpcfResult, Target, TargetMode, Tilted,
};
pub use family::OperatorFamily;
pub use harness::{
    load_config, oracle_check, parse_config, render_report, render_tables, run_suite, ExperimentConfig,
    OutputFormat, Report, Variant,
};
pub use inference::{
    aars_fmp, aars_fmt, cri_fmp, cri_fmt, dmm_fmp, dmm_fmt, euclid_dm, normalize_unit, qip_fmp,
    qip_fmt, sign_vector, similarity, tip_fmp, tip_fmt, union_conclusions, AarsForm, Direction,
    DmmBase, DmmTrace, FuzzyRule, InferenceOutcome, MethodKind, SignForm,
};
pub use set::DiscreteFuzzySet;
