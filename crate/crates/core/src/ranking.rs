//! Score, accuracy and certainty of a number, and the lexicographic
//! comparison built on them.

use std::cmp::Ordering;

use crate::model::IvbfwnNumber;

/// Absolute tolerance under which two keys count as equal in [`compare`].
pub const COMPARE_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComparisonResult {
    Greater,
    Less,
    Indifferent,
}

impl ComparisonResult {
    pub fn reverse(self) -> Self {
        match self {
            ComparisonResult::Greater => ComparisonResult::Less,
            ComparisonResult::Less => ComparisonResult::Greater,
            ComparisonResult::Indifferent => ComparisonResult::Indifferent,
        }
    }
}

impl From<ComparisonResult> for Ordering {
    fn from(r: ComparisonResult) -> Ordering {
        match r {
            ComparisonResult::Greater => Ordering::Greater,
            ComparisonResult::Less => Ordering::Less,
            ComparisonResult::Indifferent => Ordering::Equal,
        }
    }
}

/// `p/12` times the sum of the twelve endpoint terms; lies in `[0, p]`.
pub fn score(a: &IvbfwnNumber) -> f64 {
    let (t, i, f) = (a.truth_pos(), a.ind_pos(), a.fals_pos());
    let (tn, inn, fnn) = (a.truth_neg(), a.ind_neg(), a.fals_neg());
    let bracket = t.lo()
        + t.hi()
        + (1.0 - i.lo())
        + (1.0 - i.hi())
        + (1.0 - f.lo())
        + (1.0 - f.hi())
        + (1.0 + tn.lo())
        + (1.0 + tn.hi())
        - inn.lo()
        - inn.hi()
        - fnn.lo()
        - fnn.hi();
    a.weight() / 12.0 * bracket
}

/// Lies in `[0, p]`.
pub fn accuracy(a: &IvbfwnNumber) -> f64 {
    let (t, f) = (a.truth_pos(), a.fals_pos());
    let (tn, fnn) = (a.truth_neg(), a.fals_neg());
    let bracket = 4.0 + t.lo() + t.hi() - f.lo() - f.hi() + tn.lo() + tn.hi() - fnn.lo() - fnn.hi();
    a.weight() / 8.0 * bracket
}

/// Lies in `[p/2, 3p/2]`, so it can exceed 1. Only ever used as the last
/// tie-break key, where the constant offset does not change outcomes.
pub fn certainty(a: &IvbfwnNumber) -> f64 {
    let (t, fnn) = (a.truth_pos(), a.fals_neg());
    a.weight() / 4.0 * (2.0 + t.lo() + t.hi() - fnn.lo() - fnn.hi())
}

/// The three comparison keys, in priority order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub score: f64,
    pub accuracy: f64,
    pub certainty: f64,
}

impl Evaluation {
    pub fn of(a: &IvbfwnNumber) -> Self {
        Evaluation {
            score: score(a),
            accuracy: accuracy(a),
            certainty: certainty(a),
        }
    }

    /// Lexicographic on (score, accuracy, certainty); keys within
    /// [`COMPARE_EPSILON`] of each other are treated as equal.
    pub fn compare(&self, other: &Evaluation) -> ComparisonResult {
        for (x, y) in [
            (self.score, other.score),
            (self.accuracy, other.accuracy),
            (self.certainty, other.certainty),
        ] {
            if (x - y).abs() > COMPARE_EPSILON {
                return if x > y {
                    ComparisonResult::Greater
                } else {
                    ComparisonResult::Less
                };
            }
        }
        ComparisonResult::Indifferent
    }
}

pub fn compare(a: &IvbfwnNumber, b: &IvbfwnNumber) -> ComparisonResult {
    Evaluation::of(a).compare(&Evaluation::of(b))
}
