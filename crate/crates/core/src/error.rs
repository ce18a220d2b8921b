use thiserror::Error;

use crate::model::Violation;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{component}: endpoint {value} outside {range}")]
    Range {
        component: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("{component}: lower endpoint {lo} exceeds upper endpoint {hi}")]
    Order {
        component: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("weight {0} outside [0, 1]")]
    Weight(f64),

    #[error("scalar must be strictly positive, got {0}")]
    Scalar(f64),

    #[error("sets are defined over different elements")]
    UniverseMismatch,

    #[error("{items} items but {weights} weights")]
    LengthMismatch { items: usize, weights: usize },

    #[error("weights sum to zero")]
    ZeroWeightSum,

    #[error("weights must sum to 1, got {0}")]
    WeightSum(f64),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("invalid decision matrix ({} violation(s))", .0.len())]
    Validation(Vec<Violation>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
