//! Interval-valued bipolar fuzzy weighted neutrosophic (IVBFWN) numbers and
//! sets: set algebra, arithmetic, scoring, weighted aggregation, and a
//! multi-criteria ranking engine over decision matrices.
//!
//! ```
//! use ivbfwn::{IvbfwnNumber, score};
//!
//! let a = IvbfwnNumber::from_pairs(
//!     [[0.4, 0.8], [0.2, 0.6], [0.1, 0.5], [-0.4, -0.3], [-0.6, -0.2], [-0.5, -0.3]],
//!     0.9,
//! )
//! .unwrap();
//! assert!((score(&a) - 0.5025).abs() < 1e-12);
//! ```

pub mod aggregation;
pub mod arithmetic;
pub mod bn;
pub mod engine;
pub mod error;
pub mod io;
pub mod model;
pub mod ranking;
pub mod set_algebra;

pub use aggregation::{aggregate_average, aggregate_geometric, WeightVector};
pub use arithmetic::{add, mul, power, scale, Scalar};
pub use engine::{rank_alternatives, trace, OperatorChoice, RankingReport, Trace};
pub use error::{Error, Result};
pub use model::{
    BnNumber, Component, DecisionMatrix, Interval, IvbfwnNumber, IvbfwnSet, NegInterval,
    PosInterval, RawMatrix, RawNumber, Violation,
};
pub use ranking::{accuracy, certainty, compare, score, ComparisonResult, Evaluation};
