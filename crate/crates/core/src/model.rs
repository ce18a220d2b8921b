//! Value types shared by every other module.
//!
//! An [`IvbfwnNumber`] carries six closed intervals (positive and negative
//! truth, indeterminacy and falsity) together with a fuzzy weight index in
//! `[0, 1]`. Positive intervals live in `[0, 1]`, negative ones in `[-1, 0]`.
//! All range checks are exact comparisons; nothing is clamped on the way in.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The six membership slots of a number, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    TruthPos,
    IndPos,
    FalsPos,
    TruthNeg,
    IndNeg,
    FalsNeg,
}

impl Component {
    pub const ALL: [Component; 6] = [
        Component::TruthPos,
        Component::IndPos,
        Component::FalsPos,
        Component::TruthNeg,
        Component::IndNeg,
        Component::FalsNeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Component::TruthPos => "truth_pos",
            Component::IndPos => "ind_pos",
            Component::FalsPos => "fals_pos",
            Component::TruthNeg => "truth_neg",
            Component::IndNeg => "ind_neg",
            Component::FalsNeg => "fals_neg",
        }
    }

    pub fn is_negative(self) -> bool {
        matches!(
            self,
            Component::TruthNeg | Component::IndNeg | Component::FalsNeg
        )
    }

    pub fn index(self) -> usize {
        self as usize
    }

    fn range(self) -> (f64, f64, &'static str) {
        if self.is_negative() {
            (-1.0, 0.0, "[-1, 0]")
        } else {
            (0.0, 1.0, "[0, 1]")
        }
    }

    /// Checks `[lo, hi]` against this slot's range and ordering.
    pub fn check(self, lo: f64, hi: f64) -> Result<Interval> {
        let (min, max, range) = self.range();
        for value in [lo, hi] {
            // written so that NaN fails too
            if !(min <= value && value <= max) {
                return Err(Error::Range {
                    component: self.name(),
                    value,
                    range,
                });
            }
        }
        if lo > hi {
            return Err(Error::Order {
                component: self.name(),
                lo,
                hi,
            });
        }
        Ok(Interval { lo, hi })
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A plain closed interval. Carries no range invariant on its own; the slot
/// it sits in decides which range applies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn map(self, f: impl Fn(f64) -> f64) -> Self {
        Interval {
            lo: f(self.lo),
            hi: f(self.hi),
        }
    }

    pub fn zip_with(self, other: Interval, f: impl Fn(f64, f64) -> f64) -> Self {
        Interval {
            lo: f(self.lo, other.lo),
            hi: f(self.hi, other.hi),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Interval with `0 <= lo <= hi <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PosInterval(Interval);

impl PosInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        Component::TruthPos.check(lo, hi).map(PosInterval)
    }

    pub fn lo(&self) -> f64 {
        self.0.lo
    }

    pub fn hi(&self) -> f64 {
        self.0.hi
    }

    pub fn interval(&self) -> Interval {
        self.0
    }
}

/// Interval with `-1 <= lo <= hi <= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegInterval(Interval);

impl NegInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        Component::TruthNeg.check(lo, hi).map(NegInterval)
    }

    pub fn lo(&self) -> f64 {
        self.0.lo
    }

    pub fn hi(&self) -> f64 {
        self.0.hi
    }

    pub fn interval(&self) -> Interval {
        self.0
    }
}

fn check_weight(weight: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&weight) {
        Ok(weight)
    } else {
        Err(Error::Weight(weight))
    }
}

/// Interval-valued bipolar fuzzy weighted neutrosophic number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IvbfwnNumber {
    intervals: [Interval; 6],
    weight: f64,
}

impl IvbfwnNumber {
    pub fn new(
        truth_pos: PosInterval,
        ind_pos: PosInterval,
        fals_pos: PosInterval,
        truth_neg: NegInterval,
        ind_neg: NegInterval,
        fals_neg: NegInterval,
        weight: f64,
    ) -> Result<Self> {
        let number = IvbfwnNumber {
            intervals: [
                truth_pos.0,
                ind_pos.0,
                fals_pos.0,
                truth_neg.0,
                ind_neg.0,
                fals_neg.0,
            ],
            weight: check_weight(weight)?,
        };
        number.assert_condition();
        Ok(number)
    }

    /// Builds a number from six `[lo, hi]` pairs in storage order
    /// (`truth_pos`, `ind_pos`, `fals_pos`, `truth_neg`, `ind_neg`, `fals_neg`).
    pub fn from_pairs(pairs: [[f64; 2]; 6], weight: f64) -> Result<Self> {
        let mut intervals = [Interval::point(0.0); 6];
        for (slot, (component, [lo, hi])) in intervals
            .iter_mut()
            .zip(Component::ALL.into_iter().zip(pairs))
        {
            *slot = component.check(lo, hi)?;
        }
        let number = IvbfwnNumber {
            intervals,
            weight: check_weight(weight)?,
        };
        number.assert_condition();
        Ok(number)
    }

    /// Assembles an operation result. Callers guarantee every slot is in range.
    pub(crate) fn from_parts(intervals: [Interval; 6], weight: f64) -> Self {
        let number = IvbfwnNumber { intervals, weight };
        debug_assert!(number.is_valid(), "operation left the domain: {number}");
        number
    }

    pub fn truth_pos(&self) -> PosInterval {
        PosInterval(self.intervals[0])
    }

    pub fn ind_pos(&self) -> PosInterval {
        PosInterval(self.intervals[1])
    }

    pub fn fals_pos(&self) -> PosInterval {
        PosInterval(self.intervals[2])
    }

    pub fn truth_neg(&self) -> NegInterval {
        NegInterval(self.intervals[3])
    }

    pub fn ind_neg(&self) -> NegInterval {
        NegInterval(self.intervals[4])
    }

    pub fn fals_neg(&self) -> NegInterval {
        NegInterval(self.intervals[5])
    }

    pub fn interval(&self, component: Component) -> Interval {
        self.intervals[component.index()]
    }

    pub fn intervals(&self) -> &[Interval; 6] {
        &self.intervals
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn with_weight(&self, weight: f64) -> Result<Self> {
        Ok(IvbfwnNumber {
            intervals: self.intervals,
            weight: check_weight(weight)?,
        })
    }

    pub fn pairs(&self) -> [[f64; 2]; 6] {
        self.intervals.map(|i| [i.lo, i.hi])
    }

    /// The twelve endpoints in storage order, low endpoint first.
    pub fn endpoints(&self) -> [f64; 12] {
        let mut out = [0.0; 12];
        for (k, i) in self.intervals.iter().enumerate() {
            out[2 * k] = i.lo;
            out[2 * k + 1] = i.hi;
        }
        out
    }

    /// Sum of the six positive endpoints minus the sum of the six negative
    /// ones. Always within `[0, 12]` for a valid number.
    pub fn condition_sum(&self) -> f64 {
        self.intervals
            .iter()
            .zip(Component::ALL)
            .map(|(i, c)| {
                let s = i.lo + i.hi;
                if c.is_negative() {
                    -s
                } else {
                    s
                }
            })
            .sum()
    }

    /// Re-checks every invariant. Used by closure tests and debug assertions.
    pub fn is_valid(&self) -> bool {
        self.intervals
            .iter()
            .zip(Component::ALL)
            .all(|(i, c)| c.check(i.lo, i.hi).is_ok())
            && (0.0..=1.0).contains(&self.weight)
            && (0.0..=12.0).contains(&self.condition_sum())
    }

    fn assert_condition(&self) {
        let sum = self.condition_sum();
        assert!(
            (0.0..=12.0).contains(&sum),
            "validated number violates 0 <= sum <= 12: {sum}"
        );
    }
}

impl fmt::Display for IvbfwnNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for i in &self.intervals {
            write!(f, "{i}, ")?;
        }
        write!(f, "{}>", self.weight)
    }
}

/// Unvalidated cell as it appears in documents.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawNumber {
    pub truth_pos: [f64; 2],
    pub ind_pos: [f64; 2],
    pub fals_pos: [f64; 2],
    pub truth_neg: [f64; 2],
    pub ind_neg: [f64; 2],
    pub fals_neg: [f64; 2],
    pub weight: f64,
}

impl RawNumber {
    pub fn pairs(&self) -> [[f64; 2]; 6] {
        [
            self.truth_pos,
            self.ind_pos,
            self.fals_pos,
            self.truth_neg,
            self.ind_neg,
            self.fals_neg,
        ]
    }

    /// Every problem with this cell, not just the first.
    pub fn problems(&self) -> Vec<Error> {
        let mut out: Vec<Error> = Component::ALL
            .into_iter()
            .zip(self.pairs())
            .filter_map(|(c, [lo, hi])| c.check(lo, hi).err())
            .collect();
        if let Err(e) = check_weight(self.weight) {
            out.push(e);
        }
        out
    }
}

impl From<&IvbfwnNumber> for RawNumber {
    fn from(n: &IvbfwnNumber) -> Self {
        let [truth_pos, ind_pos, fals_pos, truth_neg, ind_neg, fals_neg] = n.pairs();
        RawNumber {
            truth_pos,
            ind_pos,
            fals_pos,
            truth_neg,
            ind_neg,
            fals_neg,
            weight: n.weight,
        }
    }
}

impl TryFrom<RawNumber> for IvbfwnNumber {
    type Error = Error;

    fn try_from(raw: RawNumber) -> Result<Self> {
        IvbfwnNumber::from_pairs(raw.pairs(), raw.weight)
    }
}

/// Finite IVBFWN-set: element labels mapped to numbers, in insertion order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IvbfwnSet {
    elements: IndexMap<String, IvbfwnNumber>,
}

impl IvbfwnSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an element. Returns the previous value if the label was present,
    /// leaving its position unchanged.
    pub fn insert(
        &mut self,
        label: impl Into<String>,
        value: IvbfwnNumber,
    ) -> Option<IvbfwnNumber> {
        self.elements.insert(label.into(), value)
    }

    pub fn get(&self, label: &str) -> Option<&IvbfwnNumber> {
        self.elements.get(label)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &IvbfwnNumber)> {
        self.elements.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.elements.keys().map(String::as_str)
    }

    /// True when both sets are defined over the same labels (in any order).
    pub fn same_universe(&self, other: &IvbfwnSet) -> bool {
        self.len() == other.len() && self.labels().all(|l| other.elements.contains_key(l))
    }
}

impl<S: Into<String>> FromIterator<(S, IvbfwnNumber)> for IvbfwnSet {
    fn from_iter<T: IntoIterator<Item = (S, IvbfwnNumber)>>(iter: T) -> Self {
        IvbfwnSet {
            elements: iter.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }
}

/// Bipolar neutrosophic number: six scalar memberships.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BnNumber {
    values: [f64; 6],
}

impl BnNumber {
    /// Values in storage order: `T+, I+, F+, T-, I-, F-`.
    pub fn new(values: [f64; 6]) -> Result<Self> {
        for (c, v) in Component::ALL.into_iter().zip(values) {
            c.check(v, v)?;
        }
        Ok(BnNumber { values })
    }

    pub(crate) fn from_values(values: [f64; 6]) -> Self {
        let n = BnNumber { values };
        debug_assert!(n.is_valid(), "operation left the domain: {n:?}");
        n
    }

    pub fn values(&self) -> [f64; 6] {
        self.values
    }

    pub fn get(&self, component: Component) -> f64 {
        self.values[component.index()]
    }

    pub fn is_valid(&self) -> bool {
        Component::ALL
            .into_iter()
            .zip(self.values)
            .all(|(c, v)| c.check(v, v).is_ok())
    }

    /// Degenerate-interval embedding into an IVBFWN number with weight `p`.
    pub fn embed(&self, weight: f64) -> Result<IvbfwnNumber> {
        IvbfwnNumber::from_pairs(self.values.map(|v| [v, v]), weight)
    }
}

/// A violation found while scanning a decision matrix. Coordinates are
/// zero-based; `Display` shows them one-based.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub row: Option<usize>,
    pub col: Option<usize>,
    pub reason: String,
}

impl Violation {
    fn global(reason: impl Into<String>) -> Self {
        Violation {
            row: None,
            col: None,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.row, self.col) {
            (Some(r), Some(c)) => write!(f, "({}, {}): {}", r + 1, c + 1, self.reason),
            (Some(r), None) => write!(f, "row {}: {}", r + 1, self.reason),
            _ => f.write_str(&self.reason),
        }
    }
}

/// Unvalidated decision matrix; also the on-disk document shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMatrix {
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    pub cells: Vec<Vec<RawNumber>>,
}

/// Scans the whole matrix and reports every violation found.
pub fn validate_matrix(m: &RawMatrix) -> Vec<Violation> {
    let mut out = Vec::new();
    if m.alternatives.is_empty() {
        out.push(Violation::global("empty alternatives"));
    }
    if m.criteria.is_empty() {
        out.push(Violation::global("empty criteria"));
    }
    for (what, labels) in [("alternative", &m.alternatives), ("criterion", &m.criteria)] {
        for (k, label) in labels.iter().enumerate() {
            if labels[..k].contains(label) {
                out.push(Violation::global(format!(
                    "duplicate {what} label `{label}`"
                )));
            }
        }
    }
    if m.cells.len() != m.alternatives.len() {
        out.push(Violation::global(format!(
            "{} rows of cells for {} alternatives",
            m.cells.len(),
            m.alternatives.len()
        )));
    }
    for (r, row) in m.cells.iter().enumerate() {
        if row.len() != m.criteria.len() {
            out.push(Violation {
                row: Some(r),
                col: None,
                reason: format!("{} cells for {} criteria", row.len(), m.criteria.len()),
            });
        }
        for (c, cell) in row.iter().enumerate() {
            out.extend(cell.problems().into_iter().map(|e| Violation {
                row: Some(r),
                col: Some(c),
                reason: e.to_string(),
            }));
        }
        if !row.is_empty() && !row.iter().any(|cell| cell.weight > 0.0) {
            out.push(Violation {
                row: Some(r),
                col: None,
                reason: "no cell has positive weight".into(),
            });
        }
    }
    out
}

/// Alternatives x criteria grid of validated numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    cells: Vec<Vec<IvbfwnNumber>>,
}

impl DecisionMatrix {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<String>,
        cells: Vec<Vec<IvbfwnNumber>>,
    ) -> Result<Self> {
        let raw = RawMatrix {
            alternatives,
            criteria,
            cells: cells
                .iter()
                .map(|row| row.iter().map(RawNumber::from).collect())
                .collect(),
        };
        let violations = validate_matrix(&raw);
        if !violations.is_empty() {
            return Err(Error::Validation(violations));
        }
        Ok(DecisionMatrix {
            alternatives: raw.alternatives,
            criteria: raw.criteria,
            cells,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn rows(&self) -> &[Vec<IvbfwnNumber>] {
        &self.cells
    }

    pub fn row(&self, i: usize) -> &[IvbfwnNumber] {
        &self.cells[i]
    }

    pub fn cell(&self, i: usize, j: usize) -> &IvbfwnNumber {
        &self.cells[i][j]
    }

    pub fn alternative_index(&self, label: &str) -> Option<usize> {
        self.alternatives.iter().position(|a| a == label)
    }

    /// Replaces every cell's weight with one weight per criterion, applied
    /// to all rows.
    pub fn with_criterion_weights(&self, weights: &[f64]) -> Result<Self> {
        if weights.len() != self.criteria.len() {
            return Err(Error::LengthMismatch {
                items: self.criteria.len(),
                weights: weights.len(),
            });
        }
        let cells = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .zip(weights)
                    .map(|(cell, &w)| cell.with_weight(w))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        DecisionMatrix::new(self.alternatives.clone(), self.criteria.clone(), cells)
    }

    pub fn to_raw(&self) -> RawMatrix {
        RawMatrix {
            alternatives: self.alternatives.clone(),
            criteria: self.criteria.clone(),
            cells: self
                .cells
                .iter()
                .map(|row| row.iter().map(RawNumber::from).collect())
                .collect(),
        }
    }
}

impl TryFrom<RawMatrix> for DecisionMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        let violations = validate_matrix(&raw);
        if !violations.is_empty() {
            return Err(Error::Validation(violations));
        }
        let cells = raw
            .cells
            .into_iter()
            .map(|row| row.into_iter().map(IvbfwnNumber::try_from).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(DecisionMatrix {
            alternatives: raw.alternatives,
            criteria: raw.criteria,
            cells,
        })
    }
}
