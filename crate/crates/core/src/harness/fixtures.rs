//! Published reference values for the standard suite (rule small → large,
//! tilted vectors [1, 0.2, 0, 0, 0] / [0, 0, 0, 0.2, 1], hedged targets).
//!
//! Each printed cell carries a status:
//!
//! * `Verified`: independently recomputed and agrees;
//! * `Erratum`: the recomputation disagrees and the cause is identified
//!   (a copied row, a misaligned term, a vector whose own score contradicts it);
//! * `Unreconstructable`: no reading of the method reproduces it.

use serde::{Deserialize, Serialize};

use super::{Report, Variant};
use crate::eval::Class;
use crate::family::OperatorFamily::{self, Goedel, Goguen, Lukasiewicz, Zadeh, R0};
use crate::inference::{AarsForm, SignForm};

/// Allowed elementwise gap between a computed conclusion and a vector
/// printed at three decimals.
pub const VECTOR_TOLERANCE: f64 = 5e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureStatus {
    Verified,
    Erratum,
    Unreconstructable,
}

impl FixtureStatus {
    pub fn id(self) -> &'static str {
        match self {
            FixtureStatus::Verified => "verified",
            FixtureStatus::Erratum => "erratum",
            FixtureStatus::Unreconstructable => "unreconstructable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell {
    Case(u8),
    Fmp,
    Fmt,
    Overall,
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Case(c) => write!(f, "case {c}"),
            Cell::Fmp => f.write_str("FMP aggregate"),
            Cell::Fmt => f.write_str("FMT aggregate"),
            Cell::Overall => f.write_str("overall"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrintedScore {
    pub table: u8,
    pub variant: Variant,
    pub class: Class,
    pub cell: Cell,
    pub printed: f64,
    pub status: FixtureStatus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrintedConclusion {
    pub table: u8,
    pub variant: Variant,
    pub case: u8,
    pub printed: Vec<f64>,
    pub status: FixtureStatus,
}

/// Printed scores carry two decimals at most; a computed score agrees when
/// it is within `tolerance` of the printed one either as is or rounded to
/// two decimals.
pub fn score_agrees(computed: f64, printed: f64, tolerance: f64) -> bool {
    let slack = tolerance + 1e-9;
    let rounded = (computed * 100.0).round() / 100.0;
    (computed - printed).abs() <= slack || (rounded - printed).abs() <= slack
}

pub fn max_gap(computed: &[f64], printed: &[f64]) -> f64 {
    if computed.len() != printed.len() {
        return f64::INFINITY;
    }
    computed
        .iter()
        .zip(printed)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

use FixtureStatus::{Erratum as E, Unreconstructable as U, Verified as V};

const B: [f64; 5] = [0.0, 0.0, 0.0, 0.3, 1.0];
const A: [f64; 5] = [1.0, 0.3, 0.0, 0.0, 0.0];
const ONES: [f64; 5] = [1.0; 5];
const ZEROS: [f64; 5] = [0.0; 5];

#[derive(Default)]
struct Book {
    scores: Vec<PrintedScore>,
    conclusions: Vec<PrintedConclusion>,
}

impl Book {
    fn cases(&mut self, table: u8, variant: Variant, cells: &[(u8, f64, FixtureStatus)]) {
        for &(case, printed, status) in cells {
            self.score(table, variant, Class::One, Cell::Case(case), printed, status);
        }
    }

    fn score(&mut self, table: u8, variant: Variant, class: Class, cell: Cell, printed: f64, status: FixtureStatus) {
        self.scores.push(PrintedScore {
            table,
            variant,
            class,
            cell,
            printed,
            status,
        });
    }

    fn totals(&mut self, table: u8, variant: Variant, class: Class, values: [(f64, FixtureStatus); 3]) {
        for (cell, (printed, status)) in [Cell::Fmp, Cell::Fmt, Cell::Overall].into_iter().zip(values) {
            self.score(table, variant, class, cell, printed, status);
        }
    }

    fn vectors(&mut self, table: u8, variant: Variant, rows: &[(u8, &[f64], FixtureStatus)]) {
        for &(case, printed, status) in rows {
            self.conclusions.push(PrintedConclusion {
                table,
                variant,
                case,
                printed: printed.to_vec(),
                status,
            });
        }
    }
}

fn book() -> Book {
    let mut b = Book::default();
    let residual: [OperatorFamily; 4] = OperatorFamily::RESIDUAL;

    // QIP, class 1
    for f in residual {
        let v = Variant::Qip(f);
        b.cases(2, v, &[(1, 100.0, V), (2, 95.8, V), (3, 95.1, V), (4, 26.0, V)]);
        b.cases(2, v, &[(6, 26.0, V), (7, 21.8, V), (8, 42.95, E), (9, 100.0, V)]);
        b.score(2, v, Class::One, Cell::Fmp, 79.21, V);
        b.score(2, v, Class::One, Cell::Fmt, 47.69, E);
        // case 4 prints B, but its own 26 % only fits [0, 0, 0, 0.3, 0.3]
        b.vectors(2, v, &[(1, &B, V), (2, &B, V), (3, &B, V), (4, &B, E)]);
        let low = [0.3, 0.3, 0.0, 0.0, 0.0];
        b.vectors(2, v, &[(6, &low, V), (7, &low, V), (8, &low, V), (9, &A, V)]);
    }

    // CRI (table 3) and TIP (table 4), class 1: the FMP columns coincide
    let fmp_columns: [(OperatorFamily, f64, [f64; 5], f64); 4] = [
        (Lukasiewicz, 85.14, [0.248, 0.248, 0.248, 0.548, 1.0], 88.73),
        (Goedel, 100.0, [0.0, 0.0, 0.0, 0.548, 1.0], 92.45),
        (R0, 67.14, [0.548, 0.548, 0.548, 0.548, 1.0], 84.23),
        (Goguen, 100.0, [0.0, 0.0, 0.0, 0.548, 1.0], 92.45),
    ];
    for (f, case3, vec3, fmp) in fmp_columns {
        for (table, v) in [(3, Variant::Cri(f)), (4, Variant::Tip(f))] {
            b.cases(table, v, &[(1, 100.0, V), (2, 95.8, V), (3, case3, V), (4, 74.0, V)]);
            b.score(table, v, Class::One, Cell::Fmp, fmp, V);
            b.vectors(table, v, &[(1, &B, V), (2, &B, V), (3, &vec3, V), (4, &ONES, V)]);
        }
        // printed FMT rows equal the FMP composition applied to the FMT premise
        let cri = Variant::Cri(f);
        b.cases(3, cri, &[(6, 74.0, E), (7, 78.2, E), (8, 69.05, E), (9, 26.0, V)]);
        b.score(3, cri, Class::One, Cell::Fmt, 61.81, E);
        b.vectors(3, cri, &[(6, &ONES, E), (7, &ONES, E), (8, &ONES, E), (9, &ONES, V)]);

        let tip = Variant::Tip(f);
        b.cases(4, tip, &[(6, 26.0, V), (7, 21.8, V), (8, 30.95, V), (9, 100.0, V)]);
        b.score(4, tip, Class::One, Cell::Fmt, 44.69, V);
        b.vectors(4, tip, &[(6, &ZEROS, V), (7, &ZEROS, V), (8, &ZEROS, V), (9, &A, V)]);
    }

    // AARS, class 1
    let mol = Variant::Aars(AarsForm::MoreOrLess);
    b.cases(5, mol, &[(1, 100.0, V), (2, 95.24, V), (3, 95.71, V), (4, 17.47, V)]);
    b.cases(5, mol, &[(6, 17.47, V), (7, 13.41, V), (8, 17.66, V), (9, 100.0, V)]);
    b.score(5, mol, Class::One, Cell::Fmp, 77.10, V);
    b.score(5, mol, Class::One, Cell::Fmt, 37.14, V);
    b.vectors(
        5,
        mol,
        &[
            (1, &B, V),
            (2, &[0.0, 0.0, 0.0, 0.328, 1.0], V),
            (3, &[0.0, 0.0, 0.0, 0.333, 1.0], V),
            (4, &[0.0, 0.0, 0.0, 0.574, 1.0], V),
            (6, &[1.0, 0.574, 0.0, 0.0, 0.0], V),
            (7, &[1.0, 0.581, 0.0, 0.0, 0.0], V),
            (8, &[1.0, 0.569, 0.0, 0.0, 0.0], V),
            (9, &A, V),
        ],
    );
    let red = Variant::Aars(AarsForm::Reduction);
    b.cases(5, red, &[(1, 100.0, V), (2, 94.60, V), (3, 92.45, V), (4, 18.68, V)]);
    b.cases(5, red, &[(6, 18.68, V), (7, 14.57, V), (8, 23.57, V), (9, 100.0, V)]);
    b.score(5, red, Class::One, Cell::Fmp, 76.43, V);
    b.score(5, red, Class::One, Cell::Fmt, 39.2, V);
    b.vectors(
        5,
        red,
        &[
            (1, &B, V),
            (2, &[0.0, 0.0, 0.0, 0.274, 0.914], V),
            (3, &[0.0, 0.0, 0.0, 0.27, 0.9], V),
            (4, &[0.0, 0.0, 0.0, 0.157, 0.523], V),
            (6, &[0.523, 0.157, 0.0, 0.0, 0.0], V),
            (7, &[0.517, 0.155, 0.0, 0.0, 0.0], V),
            (8, &[0.527, 0.158, 0.0, 0.0, 0.0], V),
            (9, &A, V),
        ],
    );

    // DMM, class 1
    let three = Variant::Dmm(SignForm::ThreeValued);
    b.cases(6, three, &[(1, 100.0, V), (2, 91.16, V), (3, 92.83, V), (4, 68.25, V)]);
    b.cases(6, three, &[(6, 100.0, V), (7, 91.16, V), (8, 92.83, V), (9, 68.25, V)]);
    b.score(6, three, Class::One, Cell::Fmp, 88.06, V);
    b.score(6, three, Class::One, Cell::Fmt, 88.06, V);
    b.vectors(
        6,
        three,
        &[
            (1, &B, V),
            (2, &[0.086, 0.0, 0.086, 0.36, 1.0], V),
            (3, &[0.0, 0.111, 0.0, 0.3, 1.0], V),
            // built on B instead of 1 - B; the base 1 - B gives the two-valued row
            (4, &[0.0, 0.646, 0.646, 0.752, 1.0], E),
            (6, &[0.0, 0.7, 1.0, 1.0, 1.0], V),
            (7, &[0.0, 0.64, 0.914, 1.0, 0.914], V),
            (8, &[0.0, 0.7, 1.0, 0.889, 1.0], V),
            (9, &[0.0, 0.11, 0.0, 0.3, 1.0], U),
        ],
    );
    let two = Variant::Dmm(SignForm::TwoValued);
    b.cases(6, two, &[(1, 100.0, V), (2, 87.26, V), (3, 95.05, V), (4, 68.25, V)]);
    b.cases(6, two, &[(6, 100.0, V), (7, 95.80, V), (8, 90.61, V), (9, 85.51, U)]);
    b.score(6, two, Class::One, Cell::Fmp, 87.64, V);
    b.score(6, two, Class::One, Cell::Fmt, 92.98, U);
    b.vectors(
        6,
        two,
        &[
            (1, &B, V),
            (2, &[0.158, 0.0, 0.158, 0.41, 1.0], V),
            (3, &B, V),
            (4, &[0.0, 1.0, 1.0, 0.84, 0.45], V),
            (6, &[0.0, 0.7, 1.0, 1.0, 1.0], V),
            (7, &[0.0, 0.7, 1.0, 1.0, 1.0], V),
            (8, &[0.0, 0.7, 1.0, 0.778, 1.0], V),
            (9, &[0.56, 0.0, 0.0, 0.13, 1.0], U),
        ],
    );

    // class 1 summary
    let one = Class::One;
    b.totals(7, three, one, [(88.06, V), (88.06, V), (88.06, V)]);
    b.totals(7, two, one, [(87.64, V), (92.98, U), (90.31, U)]);
    b.totals(7, Variant::Cri(Goedel), one, [(92.45, V), (61.81, E), (77.131, E)]);
    b.totals(7, Variant::Cri(Goguen), one, [(92.45, V), (61.81, E), (77.131, E)]);
    b.totals(7, Variant::Cri(Lukasiewicz), one, [(88.73, V), (61.81, E), (75.273, E)]);
    b.totals(7, Variant::Cri(R0), one, [(84.23, V), (61.81, E), (73.023, E)]);
    b.totals(7, Variant::Cri(Zadeh), one, [(78.38, V), (61.81, E), (70.098, E)]);
    b.totals(7, Variant::Tip(Goedel), one, [(92.45, V), (44.69, V), (68.570, V)]);
    b.totals(7, Variant::Tip(Goguen), one, [(92.45, V), (44.69, V), (68.570, V)]);
    b.totals(7, Variant::Tip(Lukasiewicz), one, [(88.73, V), (44.69, V), (66.711, V)]);
    b.totals(7, Variant::Tip(R0), one, [(84.23, V), (44.69, V), (64.461, V)]);
    for f in residual {
        b.totals(7, Variant::Qip(f), one, [(79.21, V), (47.69, E), (63.450, E)]);
    }
    b.totals(7, red, one, [(76.43, V), (39.20, V), (57.818, V)]);
    b.totals(7, mol, one, [(77.10, V), (37.14, V), (57.121, V)]);

    // class 2 summary
    let two_c = Class::Two;
    b.totals(11, Variant::Cri(Zadeh), two_c, [(81.35, V), (74.30, E), (77.83, E)]);
    // 81.35 is copied from the Zadeh row; TIP prints 94.70 / 90.20 for the same formula
    b.totals(11, Variant::Cri(Lukasiewicz), two_c, [(81.35, E), (74.30, E), (77.83, E)]);
    b.totals(11, Variant::Cri(Goedel), two_c, [(98.45, V), (74.30, E), (86.38, E)]);
    b.totals(11, Variant::Cri(R0), two_c, [(81.35, E), (74.30, E), (77.83, E)]);
    b.totals(11, Variant::Cri(Goguen), two_c, [(98.45, V), (74.30, E), (86.38, E)]);
    // 62.01 is not the mean of its own columns (60.20)
    b.totals(11, Variant::Tip(Lukasiewicz), two_c, [(94.70, V), (25.70, V), (62.01, E)]);
    b.totals(11, Variant::Tip(Goedel), two_c, [(98.45, V), (25.70, V), (62.08, V)]);
    b.totals(11, Variant::Tip(R0), two_c, [(90.20, V), (25.70, V), (57.95, V)]);
    b.totals(11, Variant::Tip(Goguen), two_c, [(98.45, V), (25.70, V), (62.08, V)]);
    b.totals(11, Variant::Qip(Lukasiewicz), two_c, [(97.20, V), (25.70, V), (61.45, V)]);
    b.totals(11, Variant::Qip(Goedel), two_c, [(97.20, V), (25.70, V), (61.45, V)]);
    // the QIP FMP kernel is family independent on these premises
    b.totals(11, Variant::Qip(R0), two_c, [(95.85, E), (25.70, V), (60.78, E)]);
    b.totals(11, Variant::Qip(Goguen), two_c, [(96.20, E), (25.70, V), (60.95, E)]);
    b.totals(11, mol, two_c, [(97.17, V), (16.01, V), (56.59, V)]);
    b.totals(11, red, two_c, [(96.10, V), (18.40, V), (57.25, V)]);
    b.totals(11, three, two_c, [(93.95, U), (96.08, U), (95.02, U)]);
    b.totals(11, two, two_c, [(93.97, U), (89.13, U), (91.55, U)]);
    b
}

pub fn printed_scores() -> Vec<PrintedScore> {
    book().scores
}

pub fn printed_conclusions() -> Vec<PrintedConclusion> {
    book().conclusions
}

/// Notes every row and aggregate of a standard-suite report that disagrees
/// with a printed value, or whose printed value is flagged.
pub(crate) fn annotate(report: &mut Report, tolerance: f64) {
    let book = book();
    for row in &mut report.rows {
        let mut notes = Vec::new();
        for s in book
            .scores
            .iter()
            .filter(|s| s.variant == row.variant && s.cell == Cell::Case(row.case.get()))
        {
            if !score_agrees(row.rpcf, s.printed, tolerance) {
                notes.push(format!("table {} prints {} ({})", s.table, s.printed, s.status.id()));
            }
        }
        for c in book
            .conclusions
            .iter()
            .filter(|c| c.variant == row.variant && c.case == row.case.get())
        {
            if max_gap(row.conclusion.memberships(), &c.printed) > VECTOR_TOLERANCE {
                notes.push(format!(
                    "table {} prints conclusion {:?} ({})",
                    c.table,
                    c.printed,
                    c.status.id()
                ));
            }
        }
        row.annotation = join(notes);
    }
    for agg in &mut report.aggregates {
        let mut notes = Vec::new();
        for s in book
            .scores
            .iter()
            .filter(|s| s.variant == agg.variant && s.class == agg.class)
        {
            let computed = match s.cell {
                Cell::Fmp => agg.fmp,
                Cell::Fmt => agg.fmt,
                Cell::Overall => agg.overall,
                Cell::Case(_) => continue,
            };
            if !score_agrees(computed, s.printed, tolerance) {
                notes.push(format!(
                    "table {} prints {} {} ({})",
                    s.table,
                    s.cell,
                    s.printed,
                    s.status.id()
                ));
            }
        }
        agg.annotation = join(notes);
    }
}

fn join(notes: Vec<String>) -> Option<String> {
    if notes.is_empty() {
        None
    } else {
        Some(notes.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_rule() {
        assert!(score_agrees(95.046, 95.1, 0.05));
        assert!(score_agrees(85.14, 85.14, 0.05));
        assert!(!score_agrees(30.95, 42.95, 0.05));
        assert!(score_agrees(77.1305, 77.131, 0.05));
    }

    #[test]
    fn book_is_complete() {
        let scores = printed_scores();
        // eight cases for each of the 16 variants in tables 2-6
        let per_case = scores.iter().filter(|s| matches!(s.cell, Cell::Case(_))).count();
        assert_eq!(per_case, 16 * 8);
        let t7 = scores.iter().filter(|s| s.table == 7).count();
        let t11 = scores.iter().filter(|s| s.table == 11).count();
        assert_eq!((t7, t11), (17 * 3, 17 * 3));
        assert!(printed_conclusions().iter().all(|c| c.printed.len() == 5));
    }

    #[test]
    fn gaps() {
        assert!((max_gap(&[0.0, 0.5], &[0.0, 0.4]) - 0.1).abs() < 1e-12);
        assert!(max_gap(&[0.0], &[0.0, 0.0]).is_infinite());
    }
}
