//! The ranking procedure: aggregate each alternative's row, evaluate the
//! aggregates, and order the alternatives by the lexicographic comparison.

use std::fmt;
use std::str::FromStr;

use crate::aggregation::{aggregate_average, aggregate_geometric, WeightVector};
use crate::error::Result;
use crate::model::{DecisionMatrix, IvbfwnNumber};
use crate::ranking::{ComparisonResult, Evaluation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OperatorChoice {
    #[default]
    Average,
    Geometric,
}

impl OperatorChoice {
    pub fn name(self) -> &'static str {
        match self {
            OperatorChoice::Average => "average",
            OperatorChoice::Geometric => "geometric",
        }
    }

    /// Aggregates one row, using each cell's weight index as its weight.
    pub fn apply(self, row: &[IvbfwnNumber]) -> Result<IvbfwnNumber> {
        let w = WeightVector::from_items(row)?;
        match self {
            OperatorChoice::Average => aggregate_average(row, &w),
            OperatorChoice::Geometric => aggregate_geometric(row, &w),
        }
    }
}

impl fmt::Display for OperatorChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "average" => Ok(OperatorChoice::Average),
            "geometric" => Ok(OperatorChoice::Geometric),
            other => Err(format!(
                "unknown operator `{other}` (expected average or geometric)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairwiseComparison {
    pub first: usize,
    pub second: usize,
    pub result: ComparisonResult,
}

/// Every intermediate value of a ranking run.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub matrix: DecisionMatrix,
    pub operator: OperatorChoice,
    pub aggregates: Vec<IvbfwnNumber>,
    pub evaluations: Vec<Evaluation>,
    /// All pairs `first < second`, in row-major order.
    pub comparisons: Vec<PairwiseComparison>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport {
    pub operator: OperatorChoice,
    /// Alternative labels in input order; the per-alternative vectors follow it.
    pub alternatives: Vec<String>,
    pub aggregates: Vec<IvbfwnNumber>,
    pub scores: Vec<f64>,
    pub accuracies: Vec<f64>,
    pub certainties: Vec<f64>,
    /// Best first.
    pub order: Vec<String>,
    /// Runs of mutually indifferent alternatives, each in input order.
    pub ties: Vec<Vec<String>>,
}

impl RankingReport {
    /// `A1 ≻ A2 ≈ A3 ≻ A4`
    pub fn ranking_text(&self) -> String {
        let mut out = String::new();
        for (k, label) in self.order.iter().enumerate() {
            if k > 0 {
                let prev = &self.order[k - 1];
                let tied = self
                    .ties
                    .iter()
                    .any(|g| g.contains(prev) && g.contains(label));
                out.push_str(if tied { " ≈ " } else { " ≻ " });
            }
            out.push_str(label);
        }
        out
    }
}

pub fn trace(m: &DecisionMatrix, op: OperatorChoice) -> Result<Trace> {
    let aggregates = m
        .rows()
        .iter()
        .map(|row| op.apply(row))
        .collect::<Result<Vec<_>>>()?;
    let evaluations: Vec<Evaluation> = aggregates.iter().map(Evaluation::of).collect();
    let mut comparisons = Vec::new();
    for first in 0..evaluations.len() {
        for second in first + 1..evaluations.len() {
            comparisons.push(PairwiseComparison {
                first,
                second,
                result: evaluations[first].compare(&evaluations[second]),
            });
        }
    }
    Ok(Trace {
        matrix: m.clone(),
        operator: op,
        aggregates,
        evaluations,
        comparisons,
    })
}

impl Trace {
    /// Indices best first. Stable insertion: an alternative only moves ahead
    /// of ones it strictly beats, so indifferent ones keep input order.
    pub fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = Vec::with_capacity(self.evaluations.len());
        for i in 0..self.evaluations.len() {
            let mut pos = order.len();
            while pos > 0
                && self.evaluations[i].compare(&self.evaluations[order[pos - 1]])
                    == ComparisonResult::Greater
            {
                pos -= 1;
            }
            order.insert(pos, i);
        }
        order
    }

    pub fn report(&self) -> RankingReport {
        let labels = self.matrix.alternatives();
        let order = self.order();
        let mut ties: Vec<Vec<usize>> = Vec::new();
        let mut run = vec![order[0]];
        for pair in order.windows(2) {
            let result = self.evaluations[pair[0]].compare(&self.evaluations[pair[1]]);
            if result == ComparisonResult::Indifferent {
                run.push(pair[1]);
            } else {
                if run.len() > 1 {
                    ties.push(std::mem::take(&mut run));
                }
                run = vec![pair[1]];
            }
        }
        if run.len() > 1 {
            ties.push(run);
        }
        let names = |ix: &[usize]| ix.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>();
        RankingReport {
            operator: self.operator,
            alternatives: labels.to_vec(),
            aggregates: self.aggregates.clone(),
            scores: self.evaluations.iter().map(|e| e.score).collect(),
            accuracies: self.evaluations.iter().map(|e| e.accuracy).collect(),
            certainties: self.evaluations.iter().map(|e| e.certainty).collect(),
            order: names(&order),
            ties: ties
                .into_iter()
                .map(|mut g| {
                    g.sort_unstable();
                    names(&g)
                })
                .collect(),
        }
    }
}

pub fn rank_alternatives(m: &DecisionMatrix, op: OperatorChoice) -> Result<RankingReport> {
    Ok(trace(m, op)?.report())
}
