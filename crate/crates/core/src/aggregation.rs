//! Weighted average and weighted geometric aggregation of IVBFWN numbers.
//!
//! Weights are normalised to sum to one before they are used as exponents.
//! The average combines slots the way [`add`](crate::arithmetic::add) does
//! and keeps the largest item weight; the geometric mean combines them the way
//! [`mul`](crate::arithmetic::mul) does and keeps the smallest.

use crate::arithmetic::{product_form, sum_form, Form};
use crate::error::{Error, Result};
use crate::model::{Component, Interval, IvbfwnNumber};

/// Per-item weights in `[0, 1]` with a strictly positive total.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    total: f64,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
            return Err(Error::Weight(bad));
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::ZeroWeightSum);
        }
        Ok(WeightVector { weights, total })
    }

    /// Uses each item's own weight index.
    pub fn from_items(items: &[IvbfwnNumber]) -> Result<Self> {
        WeightVector::new(items.iter().map(IvbfwnNumber::weight).collect())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn normalized(&self) -> Vec<f64> {
        self.weights.iter().map(|w| w / self.total).collect()
    }
}

/// `Π base_j^{e_j}`, accumulated left to right. Zero exponents contribute
/// nothing; a zero base with a positive exponent makes the product zero.
fn weighted_product(factors: impl Iterator<Item = (f64, f64)>) -> f64 {
    let mut log_sum = 0.0;
    for (base, exponent) in factors {
        if exponent == 0.0 {
            continue;
        }
        if base == 0.0 {
            return 0.0;
        }
        log_sum += exponent * base.ln();
    }
    log_sum.exp()
}

fn aggregate(
    items: &[IvbfwnNumber],
    w: &WeightVector,
    form: fn(Component) -> Form,
    weight: f64,
) -> Result<IvbfwnNumber> {
    if items.len() != w.len() {
        return Err(Error::LengthMismatch {
            items: items.len(),
            weights: w.len(),
        });
    }
    let exponents = w.normalized();
    let slot = |c: Component, pick: fn(Interval) -> f64| {
        let magnitudes = items.iter().map(|a| pick(a.interval(c)).abs());
        let m = match form(c) {
            Form::ProbSum => {
                1.0 - weighted_product(magnitudes.map(|m| 1.0 - m).zip(exponents.iter().copied()))
            }
            Form::Product => weighted_product(magnitudes.zip(exponents.iter().copied())),
        };
        if c.is_negative() {
            -m
        } else {
            m
        }
    };
    let intervals = Component::ALL.map(|c| Interval {
        lo: slot(c, |i| i.lo),
        hi: slot(c, |i| i.hi),
    });
    Ok(IvbfwnNumber::from_parts(intervals, weight))
}

fn weight_extreme(items: &[IvbfwnNumber], pick: fn(f64, f64) -> f64, init: f64) -> f64 {
    items.iter().map(IvbfwnNumber::weight).fold(init, pick)
}

/// Weighted average; the result weight is the largest item weight.
pub fn aggregate_average(items: &[IvbfwnNumber], w: &WeightVector) -> Result<IvbfwnNumber> {
    aggregate(items, w, sum_form, weight_extreme(items, f64::max, 0.0))
}

/// Weighted geometric mean; the result weight is the smallest item weight.
pub fn aggregate_geometric(items: &[IvbfwnNumber], w: &WeightVector) -> Result<IvbfwnNumber> {
    aggregate(items, w, product_form, weight_extreme(items, f64::min, 1.0))
}
