//! Scalar multiple, power, sum and product of IVBFWN numbers.
//!
//! Every slot is handled on magnitudes (`|x|`, so negative slots are mapped
//! into `[0, 1]` and the sign restored afterwards) with one of two forms:
//! the probabilistic sum `a + b - ab` or the plain product `ab`. The sum-like
//! operations (`scale`, `add`) and the product-like ones (`power`, `mul`)
//! use mirrored form assignments, and the same assignments drive the weighted
//! average and geometric aggregators.

use crate::error::{Error, Result};
use crate::model::{Component, Interval, IvbfwnNumber};

/// How a slot combines magnitudes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Form {
    /// `a + b - ab`, evaluated as `1 - (1 - a)(1 - b)` so that rounding stays
    /// monotone in each argument; scalar multiple `1 - (1 - a)^λ`
    ProbSum,
    /// `ab`, scalar multiple `a^λ`
    Product,
}

impl Form {
    fn dual(self) -> Form {
        match self {
            Form::ProbSum => Form::Product,
            Form::Product => Form::ProbSum,
        }
    }

    pub(crate) fn combine(self, a: f64, b: f64) -> f64 {
        match self {
            Form::ProbSum => 1.0 - (1.0 - a) * (1.0 - b),
            Form::Product => a * b,
        }
    }

    pub(crate) fn repeat(self, m: f64, lambda: f64) -> f64 {
        match self {
            Form::ProbSum => 1.0 - (1.0 - m).powf(lambda),
            Form::Product => m.powf(lambda),
        }
    }
}

/// Slot forms for `scale`, `add` and the weighted average.
pub(crate) const fn sum_form(c: Component) -> Form {
    match c {
        Component::TruthPos | Component::IndNeg | Component::FalsNeg => Form::ProbSum,
        Component::IndPos | Component::FalsPos | Component::TruthNeg => Form::Product,
    }
}

/// Slot forms for `power`, `mul` and the weighted geometric mean.
pub(crate) fn product_form(c: Component) -> Form {
    sum_form(c).dual()
}

/// Applies `f` to the magnitude of `x` and restores the slot's sign.
pub(crate) fn on_magnitude(c: Component, x: f64, f: impl Fn(f64) -> f64) -> f64 {
    if c.is_negative() {
        -f(-x)
    } else {
        f(x)
    }
}

/// Strictly positive multiplier or exponent.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Scalar(f64);

impl Scalar {
    pub fn new(lambda: f64) -> Result<Self> {
        if lambda > 0.0 && lambda.is_finite() {
            Ok(Scalar(lambda))
        } else {
            Err(Error::Scalar(lambda))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Scalar {
    type Error = Error;

    fn try_from(lambda: f64) -> Result<Self> {
        Scalar::new(lambda)
    }
}

fn unary(a: &IvbfwnNumber, lambda: Scalar, form: fn(Component) -> Form) -> IvbfwnNumber {
    let intervals = Component::ALL.map(|c| {
        let f = form(c);
        a.interval(c)
            .map(|x| on_magnitude(c, x, |m| f.repeat(m, lambda.0)))
    });
    IvbfwnNumber::from_parts(intervals, a.weight())
}

fn binary(
    a: &IvbfwnNumber,
    b: &IvbfwnNumber,
    form: fn(Component) -> Form,
    weight: f64,
) -> IvbfwnNumber {
    let intervals: [Interval; 6] = Component::ALL.map(|c| {
        let f = form(c);
        a.interval(c).zip_with(b.interval(c), |x, y| {
            if c.is_negative() {
                -f.combine(-x, -y)
            } else {
                f.combine(x, y)
            }
        })
    });
    IvbfwnNumber::from_parts(intervals, weight)
}

/// `λ·a`. The weight is carried over unchanged.
pub fn scale(lambda: Scalar, a: &IvbfwnNumber) -> IvbfwnNumber {
    unary(a, lambda, sum_form)
}

/// `a^λ`. The weight is carried over unchanged.
pub fn power(a: &IvbfwnNumber, lambda: Scalar) -> IvbfwnNumber {
    unary(a, lambda, product_form)
}

/// `a + b`, weight `max(p_a, p_b)`.
pub fn add(a: &IvbfwnNumber, b: &IvbfwnNumber) -> IvbfwnNumber {
    binary(a, b, sum_form, a.weight().max(b.weight()))
}

/// `a · b`, weight `min(p_a, p_b)`.
pub fn mul(a: &IvbfwnNumber, b: &IvbfwnNumber) -> IvbfwnNumber {
    binary(a, b, product_form, a.weight().min(b.weight()))
}
