//! Bipolar neutrosophic numbers and sets with scalar memberships.
//!
//! Every IVBFWN operation reduces to one of these when the intervals are
//! degenerate and the weight is 1, which is what the reduction tests rely on.
//! The formulas here are written out slot by slot on purpose, without the
//! shared machinery of [`arithmetic`](crate::arithmetic), so they can act as
//! an independent check of it.

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::model::BnNumber;

/// Tolerance on `Σw = 1` for the aggregation operators.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

pub type BnSet = IndexMap<String, BnNumber>;

fn same_universe(a: &BnSet, b: &BnSet) -> Result<()> {
    if a.len() == b.len() && a.keys().all(|k| b.contains_key(k)) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

fn zip_sets(a: &BnSet, b: &BnSet, f: impl Fn(&BnNumber, &BnNumber) -> BnNumber) -> Result<BnSet> {
    same_universe(a, b)?;
    Ok(a.iter().map(|(k, x)| (k.clone(), f(x, &b[k]))).collect())
}

fn lift(values: [f64; 6]) -> BnNumber {
    BnNumber::from_values(values)
}

/// Containment with the bipolar neutrosophic direction: on the negative pole
/// truth must not increase and falsity must not decrease.
pub fn bn_contains(a: &BnSet, b: &BnSet) -> Result<bool> {
    same_universe(a, b)?;
    Ok(a.iter().all(|(k, x)| {
        let ([tp, ip, fp, tn, i_n, fnn], [tp2, ip2, fp2, tn2, in2, fn2]) =
            (x.values(), b[k].values());
        tp <= tp2 && ip <= ip2 && fp >= fp2 && tn >= tn2 && i_n >= in2 && fnn <= fn2
    }))
}

pub fn bn_equals(a: &BnSet, b: &BnSet) -> Result<bool> {
    same_universe(a, b)?;
    Ok(a.iter().all(|(k, x)| *x == b[k]))
}

pub fn bn_union_number(x: &BnNumber, y: &BnNumber) -> BnNumber {
    let (a, b) = (x.values(), y.values());
    lift([
        a[0].max(b[0]),
        (a[1] + b[1]) / 2.0,
        a[2].min(b[2]),
        a[3].min(b[3]),
        (a[4] + b[4]) / 2.0,
        a[5].max(b[5]),
    ])
}

pub fn bn_intersection_number(x: &BnNumber, y: &BnNumber) -> BnNumber {
    let (a, b) = (x.values(), y.values());
    lift([
        a[0].min(b[0]),
        (a[1] + b[1]) / 2.0,
        a[2].max(b[2]),
        a[3].max(b[3]),
        (a[4] + b[4]) / 2.0,
        a[5].min(b[5]),
    ])
}

pub fn bn_union(a: &BnSet, b: &BnSet) -> Result<BnSet> {
    zip_sets(a, b, bn_union_number)
}

pub fn bn_intersection(a: &BnSet, b: &BnSet) -> Result<BnSet> {
    zip_sets(a, b, bn_intersection_number)
}

/// `1 - x` on the positive pole, `-1 - x` on the negative one.
pub fn bn_complement(a: &BnSet) -> BnSet {
    a.iter()
        .map(|(k, x)| {
            let v = x.values();
            let c = [
                1.0 - v[0],
                1.0 - v[1],
                1.0 - v[2],
                -1.0 - v[3],
                -1.0 - v[4],
                -1.0 - v[5],
            ];
            (k.clone(), lift(c))
        })
        .collect()
}

fn check_lambda(lambda: f64) -> Result<f64> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(lambda)
    } else {
        Err(Error::Scalar(lambda))
    }
}

pub fn bn_scale(lambda: f64, a: &BnNumber) -> Result<BnNumber> {
    let l = check_lambda(lambda)?;
    let [tp, ip, fp, tn, i_n, fnn] = a.values();
    Ok(lift([
        1.0 - (1.0 - tp).powf(l),
        ip.powf(l),
        fp.powf(l),
        -(-tn).powf(l),
        -(1.0 - (1.0 - (-i_n)).powf(l)),
        -(1.0 - (1.0 - (-fnn)).powf(l)),
    ]))
}

pub fn bn_power(a: &BnNumber, lambda: f64) -> Result<BnNumber> {
    let l = check_lambda(lambda)?;
    let [tp, ip, fp, tn, i_n, fnn] = a.values();
    Ok(lift([
        tp.powf(l),
        1.0 - (1.0 - ip).powf(l),
        1.0 - (1.0 - fp).powf(l),
        -(1.0 - (1.0 - (-tn)).powf(l)),
        -(-i_n).powf(l),
        -(-fnn).powf(l),
    ]))
}

pub fn bn_add(a: &BnNumber, b: &BnNumber) -> BnNumber {
    let [t1, i1, f1, tn1, in1, fn1] = a.values();
    let [t2, i2, f2, tn2, in2, fn2] = b.values();
    lift([
        t1 + t2 - t1 * t2,
        i1 * i2,
        f1 * f2,
        -(tn1 * tn2),
        -(-in1 - in2 - in1 * in2),
        -(-fn1 - fn2 - fn1 * fn2),
    ])
}

pub fn bn_mul(a: &BnNumber, b: &BnNumber) -> BnNumber {
    let [t1, i1, f1, tn1, in1, fn1] = a.values();
    let [t2, i2, f2, tn2, in2, fn2] = b.values();
    lift([
        t1 * t2,
        i1 + i2 - i1 * i2,
        f1 + f2 - f1 * f2,
        -(-tn1 - tn2 - tn1 * tn2),
        -(in1 * in2),
        -(fn1 * fn2),
    ])
}

/// In `[0, 1]`.
pub fn bn_score(a: &BnNumber) -> f64 {
    let [tp, ip, fp, tn, i_n, fnn] = a.values();
    (tp + 1.0 - ip + 1.0 - fp + 1.0 + tn - i_n - fnn) / 6.0
}

/// In `[-2, 2]`.
pub fn bn_accuracy(a: &BnNumber) -> f64 {
    let [tp, _, fp, tn, _, fnn] = a.values();
    tp - fp + tn - fnn
}

/// In `[0, 2]`.
pub fn bn_certainty(a: &BnNumber) -> f64 {
    let [tp, .., fnn] = a.values();
    tp - fnn
}

fn check_simplex(items: &[BnNumber], weights: &[f64]) -> Result<()> {
    if items.len() != weights.len() {
        return Err(Error::LengthMismatch {
            items: items.len(),
            weights: weights.len(),
        });
    }
    if let Some(&bad) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
        return Err(Error::Weight(bad));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(Error::WeightSum(sum));
    }
    Ok(())
}

fn prod(items: &[BnNumber], weights: &[f64], f: impl Fn([f64; 6]) -> f64) -> f64 {
    items
        .iter()
        .zip(weights)
        .map(|(a, &w)| f(a.values()).powf(w))
        .product()
}

/// Weighted average; weights must already sum to one.
pub fn bn_aggregate_average(items: &[BnNumber], weights: &[f64]) -> Result<BnNumber> {
    check_simplex(items, weights)?;
    let p = |f: fn([f64; 6]) -> f64| prod(items, weights, f);
    Ok(lift([
        1.0 - p(|v| 1.0 - v[0]),
        p(|v| v[1]),
        p(|v| v[2]),
        -p(|v| -v[3]),
        -(1.0 - p(|v| 1.0 - (-v[4]))),
        -(1.0 - p(|v| 1.0 - (-v[5]))),
    ]))
}

/// Weighted geometric mean; weights must already sum to one.
pub fn bn_aggregate_geometric(items: &[BnNumber], weights: &[f64]) -> Result<BnNumber> {
    check_simplex(items, weights)?;
    let p = |f: fn([f64; 6]) -> f64| prod(items, weights, f);
    Ok(lift([
        p(|v| v[0]),
        1.0 - p(|v| 1.0 - v[1]),
        1.0 - p(|v| 1.0 - v[2]),
        -(1.0 - p(|v| 1.0 - (-v[3]))),
        -p(|v| -v[4]),
        -p(|v| -v[5]),
    ]))
}
