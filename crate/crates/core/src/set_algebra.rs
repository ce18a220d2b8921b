//! Containment, equality, union, intersection and complement of IVBFWN-sets.
//!
//! Union and intersection average the indeterminacy intervals, so neither is
//! associative, and neither is a lattice join/meet for the containment order
//! on the negative axes. They are implemented as defined.

use crate::error::{Error, Result};
use crate::model::{Component, Interval, IvbfwnNumber, IvbfwnSet};

fn mean(a: f64, b: f64) -> f64 {
    (a + b) / 2.0
}

/// `a ⊆ b` for single numbers.
pub fn number_contains(a: &IvbfwnNumber, b: &IvbfwnNumber) -> bool {
    Component::ALL.into_iter().all(|c| {
        let (x, y) = (a.interval(c), b.interval(c));
        match c {
            // truth grows, indeterminacy and falsity shrink, on both poles
            Component::TruthPos | Component::TruthNeg => x.lo <= y.lo && x.hi <= y.hi,
            _ => x.lo >= y.lo && x.hi >= y.hi,
        }
    }) && a.weight() <= b.weight()
}

pub fn number_union(a: &IvbfwnNumber, b: &IvbfwnNumber) -> IvbfwnNumber {
    let intervals = combine(a, b, |c| match c {
        Component::TruthPos | Component::FalsNeg => f64::max,
        Component::FalsPos | Component::TruthNeg => f64::min,
        Component::IndPos | Component::IndNeg => mean,
    });
    IvbfwnNumber::from_parts(intervals, a.weight().max(b.weight()))
}

pub fn number_intersection(a: &IvbfwnNumber, b: &IvbfwnNumber) -> IvbfwnNumber {
    let intervals = combine(a, b, |c| match c {
        Component::TruthPos | Component::FalsNeg => f64::min,
        Component::FalsPos | Component::TruthNeg => f64::max,
        Component::IndPos | Component::IndNeg => mean,
    });
    IvbfwnNumber::from_parts(intervals, a.weight().min(b.weight()))
}

pub fn number_complement(a: &IvbfwnNumber) -> IvbfwnNumber {
    let i = a.intervals();
    let flip = |iv: Interval, unit: f64| Interval {
        lo: unit - iv.hi,
        hi: unit - iv.lo,
    };
    IvbfwnNumber::from_parts(
        [i[2], flip(i[1], 1.0), i[0], i[5], flip(i[4], -1.0), i[3]],
        1.0 - a.weight(),
    )
}

fn combine(
    a: &IvbfwnNumber,
    b: &IvbfwnNumber,
    op: impl Fn(Component) -> fn(f64, f64) -> f64,
) -> [Interval; 6] {
    Component::ALL.map(|c| a.interval(c).zip_with(b.interval(c), op(c)))
}

fn paired<'a>(
    a: &'a IvbfwnSet,
    b: &'a IvbfwnSet,
) -> Result<impl Iterator<Item = (&'a str, &'a IvbfwnNumber, &'a IvbfwnNumber)>> {
    if !a.same_universe(b) {
        return Err(Error::UniverseMismatch);
    }
    Ok(a.iter().map(move |(label, x)| {
        let y = b.get(label).expect("universes checked");
        (label, x, y)
    }))
}

/// Tests `a ⊆ b`.
pub fn contains(a: &IvbfwnSet, b: &IvbfwnSet) -> Result<bool> {
    Ok(paired(a, b)?.all(|(_, x, y)| number_contains(x, y)))
}

/// Exact equality of all twelve endpoints and the weight, element by element.
pub fn equals(a: &IvbfwnSet, b: &IvbfwnSet) -> Result<bool> {
    Ok(paired(a, b)?.all(|(_, x, y)| x == y))
}

/// Element order follows `a`.
pub fn union(a: &IvbfwnSet, b: &IvbfwnSet) -> Result<IvbfwnSet> {
    Ok(paired(a, b)?
        .map(|(l, x, y)| (l, number_union(x, y)))
        .collect())
}

/// Element order follows `a`.
pub fn intersection(a: &IvbfwnSet, b: &IvbfwnSet) -> Result<IvbfwnSet> {
    Ok(paired(a, b)?
        .map(|(l, x, y)| (l, number_intersection(x, y)))
        .collect())
}

pub fn complement(a: &IvbfwnSet) -> IvbfwnSet {
    a.iter().map(|(l, x)| (l, number_complement(x))).collect()
}
