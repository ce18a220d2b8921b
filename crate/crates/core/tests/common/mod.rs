//! Strategies and property bodies shared by the integration tests and the
//! acceptance harness.

#![allow(dead_code)]

use ivbfwn::bn::*;
use ivbfwn::set_algebra::*;
use ivbfwn::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const TOL: f64 = 1e-9;
pub const EMBED_TOL: f64 = 1e-12;

pub type Check = Result<(), TestCaseError>;

/// Fixed seed, no persistence: identical cases on every run.
pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![1 => Just(0.0), 1 => Just(1.0), 8 => 0.0..=1.0f64]
}

/// Multiples of 1/64, so sums, means and products of a few of them are exact.
fn dyadic_unit() -> impl Strategy<Value = f64> {
    (0u32..=64).prop_map(|k| f64::from(k) / 64.0)
}

/// Pairs `v[2k], v[2k+1]` become slot `k`; negative slots are mirrored.
fn build(v: [f64; 12], weight: f64) -> IvbfwnNumber {
    let mut pairs = [[0.0; 2]; 6];
    for (k, c) in Component::ALL.into_iter().enumerate() {
        let (lo, hi) = (v[2 * k].min(v[2 * k + 1]), v[2 * k].max(v[2 * k + 1]));
        pairs[k] = if c.is_negative() {
            [-hi, -lo]
        } else {
            [lo, hi]
        };
    }
    IvbfwnNumber::from_pairs(pairs, weight).expect("generated number is valid")
}

pub fn number() -> impl Strategy<Value = IvbfwnNumber> {
    (prop::array::uniform12(unit()), unit()).prop_map(|(v, w)| build(v, w))
}

pub fn dyadic_number() -> impl Strategy<Value = IvbfwnNumber> {
    (prop::array::uniform12(dyadic_unit()), dyadic_unit()).prop_map(|(v, w)| build(v, w))
}

pub fn bn_number() -> impl Strategy<Value = BnNumber> {
    prop::array::uniform6(unit())
        .prop_map(|v| BnNumber::new([v[0], v[1], v[2], -v[3], -v[4], -v[5]]).expect("valid"))
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![0.01..=1.0f64, 1.0..=10.0f64].prop_map(|l| Scalar::new(l).expect("positive"))
}

/// Items with aggregation weights in `[0, 1]` and a positive total.
pub fn weighted_items(min_weight: f64) -> impl Strategy<Value = (Vec<IvbfwnNumber>, Vec<f64>)> {
    (1usize..=8).prop_flat_map(move |n| {
        (
            prop::collection::vec(number(), n),
            prop::collection::vec(min_weight..=1.0f64, n),
        )
            .prop_filter("positive total", |(_, w)| w.iter().sum::<f64>() > 0.0)
    })
}

/// A number that contains `a`: every slot moved towards the top of the
/// containment order by a random fraction of the available room.
pub fn dominating(a: IvbfwnNumber) -> impl Strategy<Value = IvbfwnNumber> {
    prop::array::uniform12(0.0..=1.0f64).prop_map(move |t| {
        let mut pairs = a.pairs();
        for (k, c) in Component::ALL.into_iter().enumerate() {
            let [lo, hi] = pairs[k];
            let (floor, ceil) = if c.is_negative() {
                (-1.0, 0.0)
            } else {
                (0.0, 1.0)
            };
            let up = matches!(c, Component::TruthPos | Component::TruthNeg);
            pairs[k] = if up {
                let new_hi = hi + t[2 * k + 1] * (ceil - hi);
                [(lo + t[2 * k] * (ceil - lo)).min(new_hi), new_hi]
            } else {
                let new_lo = lo - t[2 * k] * (lo - floor);
                [new_lo, (hi - t[2 * k + 1] * (hi - floor)).max(new_lo)]
            };
        }
        IvbfwnNumber::from_pairs(pairs, a.weight()).expect("moved within range")
    })
}

pub fn check_close(got: &IvbfwnNumber, want: &IvbfwnNumber, tol: f64) -> Check {
    check_members_close(got, want, tol)?;
    prop_assert!(
        (got.weight() - want.weight()).abs() <= tol,
        "weight: {got} vs {want}"
    );
    Ok(())
}

pub fn check_members_close(got: &IvbfwnNumber, want: &IvbfwnNumber, tol: f64) -> Check {
    for (x, y) in got.endpoints().iter().zip(want.endpoints()) {
        prop_assert!((x - y).abs() <= tol, "{got} vs {want}");
    }
    Ok(())
}

fn check_valid(a: &IvbfwnNumber) -> Check {
    prop_assert!(a.is_valid(), "invalid result {a}");
    Ok(())
}

pub fn embed(b: &BnNumber) -> IvbfwnNumber {
    b.embed(1.0).expect("unit weight")
}

pub fn check_embedded(got: &IvbfwnNumber, want: &BnNumber) -> Check {
    check_members_close(got, &embed(want), EMBED_TOL)
}

// Set algebra.

pub fn set_closure(a: &IvbfwnNumber, b: &IvbfwnNumber) -> Check {
    check_valid(&number_union(a, b))?;
    check_valid(&number_intersection(a, b))?;
    check_valid(&number_complement(a))
}

pub fn set_idempotency(a: &IvbfwnNumber) -> Check {
    prop_assert_eq!(number_union(a, a), *a);
    prop_assert_eq!(number_intersection(a, a), *a);
    Ok(())
}

pub fn set_commutativity(a: &IvbfwnNumber, b: &IvbfwnNumber) -> Check {
    prop_assert_eq!(number_union(a, b), number_union(b, a));
    prop_assert_eq!(number_intersection(a, b), number_intersection(b, a));
    Ok(())
}

/// Exact for dyadic inputs.
pub fn complement_involution(a: &IvbfwnNumber) -> Check {
    prop_assert_eq!(number_complement(&number_complement(a)), *a);
    Ok(())
}

/// Exact for dyadic inputs.
pub fn de_morgan(a: &IvbfwnNumber, b: &IvbfwnNumber) -> Check {
    let (ca, cb) = (number_complement(a), number_complement(b));
    prop_assert_eq!(
        number_complement(&number_union(a, b)),
        number_intersection(&ca, &cb)
    );
    prop_assert_eq!(
        number_complement(&number_intersection(a, b)),
        number_union(&ca, &cb)
    );
    Ok(())
}

/// Union is not associative: indeterminacy lows 0, 0, 1.
pub fn union_non_associativity() -> Check {
    let with_ind = |lo: f64| {
        IvbfwnNumber::from_pairs(
            [
                [0.5, 0.5],
                [lo, 1.0],
                [0.5, 0.5],
                [-0.5, -0.5],
                [-0.5, -0.5],
                [-0.5, -0.5],
            ],
            0.5,
        )
        .expect("valid")
    };
    let (a, b, c) = (with_ind(0.0), with_ind(0.0), with_ind(1.0));
    let left = number_union(&number_union(&a, &b), &c);
    let right = number_union(&a, &number_union(&b, &c));
    prop_assert_eq!(left.ind_pos().lo(), 0.5);
    prop_assert_eq!(right.ind_pos().lo(), 0.25);
    prop_assert_ne!(left, right);
    Ok(())
}

pub fn subset_order(a: &IvbfwnNumber, b: &IvbfwnNumber, c: &IvbfwnNumber) -> Check {
    prop_assert!(number_contains(a, a));
    if number_contains(a, b) && number_contains(b, a) {
        prop_assert_eq!(a, b);
    }
    if number_contains(a, b) && number_contains(b, c) {
        prop_assert!(number_contains(a, c));
    }
    Ok(())
}

// Arithmetic.

pub fn arithmetic_closure(a: &IvbfwnNumber, b: &IvbfwnNumber, l: Scalar) -> Check {
    check_valid(&scale(l, a))?;
    check_valid(&power(a, l))?;
    check_valid(&add(a, b))?;
    check_valid(&mul(a, b))
}

pub fn arithmetic_commutativity(a: &IvbfwnNumber, b: &IvbfwnNumber) -> Check {
    prop_assert_eq!(add(a, b), add(b, a));
    prop_assert_eq!(mul(a, b), mul(b, a));
    Ok(())
}

/// `tol = 0` on dyadic inputs.
pub fn arithmetic_associativity(
    a: &IvbfwnNumber,
    b: &IvbfwnNumber,
    c: &IvbfwnNumber,
    tol: f64,
) -> Check {
    check_close(&add(&add(a, b), c), &add(a, &add(b, c)), tol)?;
    check_close(&mul(&mul(a, b), c), &mul(a, &mul(b, c)), tol)
}

pub fn distributivity(a: &IvbfwnNumber, b: &IvbfwnNumber, l1: Scalar, l2: Scalar) -> Check {
    let l12 = Scalar::new(l1.get() + l2.get()).expect("positive");
    check_close(
        &scale(l1, &add(a, b)),
        &add(&scale(l1, a), &scale(l1, b)),
        TOL,
    )?;
    check_close(
        &power(&mul(a, b), l1),
        &mul(&power(a, l1), &power(b, l1)),
        TOL,
    )?;
    check_close(&scale(l12, a), &add(&scale(l1, a), &scale(l2, a)), TOL)?;
    check_close(&power(a, l12), &mul(&power(a, l1), &power(a, l2)), TOL)
}

// Ranking.

pub fn ranking_bounds(a: &IvbfwnNumber) -> Check {
    let p = a.weight();
    let (s, ac, c) = (score(a), accuracy(a), certainty(a));
    prop_assert!((0.0..=p).contains(&s), "score {s} outside [0, {p}]");
    prop_assert!((0.0..=p).contains(&ac), "accuracy {ac} outside [0, {p}]");
    prop_assert!(
        (p / 2.0..=1.5 * p).contains(&c),
        "certainty {c} outside [{}, {}]",
        p / 2.0,
        1.5 * p
    );
    Ok(())
}

pub fn compare_preorder(a: &IvbfwnNumber, b: &IvbfwnNumber, c: &IvbfwnNumber) -> Check {
    use ComparisonResult::*;
    prop_assert_eq!(compare(a, a), Indifferent);
    prop_assert_eq!(compare(a, b), compare(b, a).reverse());
    if compare(a, b) == Greater && compare(b, c) == Greater {
        prop_assert_eq!(compare(a, c), Greater);
    }
    Ok(())
}

// Aggregation.

pub fn fold_average(items: &[IvbfwnNumber], w: &[f64]) -> Check {
    let wv = WeightVector::new(w.to_vec()).expect("valid weights");
    let got = aggregate_average(items, &wv).expect("aggregates");
    let terms = items
        .iter()
        .zip(wv.normalized())
        .map(|(a, wj)| scale(Scalar::new(wj).expect("positive weight"), a));
    let folded = terms.reduce(|acc, t| add(&acc, &t)).expect("non-empty");
    check_close(&got, &folded, TOL)
}

pub fn fold_geometric(items: &[IvbfwnNumber], w: &[f64]) -> Check {
    let wv = WeightVector::new(w.to_vec()).expect("valid weights");
    let got = aggregate_geometric(items, &wv).expect("aggregates");
    let terms = items
        .iter()
        .zip(wv.normalized())
        .map(|(a, wj)| power(a, Scalar::new(wj).expect("positive weight")));
    let folded = terms.reduce(|acc, t| mul(&acc, &t)).expect("non-empty");
    check_close(&got, &folded, TOL)
}

pub fn aggregation_idempotency(a: &IvbfwnNumber, w: &[f64]) -> Check {
    let items = vec![*a; w.len()];
    let wv = WeightVector::new(w.to_vec()).expect("valid weights");
    check_close(
        &aggregate_average(&items, &wv).expect("aggregates"),
        a,
        EMBED_TOL,
    )?;
    check_close(
        &aggregate_geometric(&items, &wv).expect("aggregates"),
        a,
        EMBED_TOL,
    )
}

pub fn aggregation_boundedness(items: &[IvbfwnNumber], w: &[f64]) -> Check {
    let wv = WeightVector::new(w.to_vec()).expect("valid weights");
    let weights = items.iter().map(IvbfwnNumber::weight);
    let (p_min, p_max) = (
        weights.clone().fold(1.0, f64::min),
        weights.fold(0.0, f64::max),
    );
    for (got, p) in [
        (aggregate_average(items, &wv).expect("aggregates"), p_max),
        (aggregate_geometric(items, &wv).expect("aggregates"), p_min),
    ] {
        check_valid(&got)?;
        prop_assert_eq!(got.weight(), p);
        for (k, x) in got.endpoints().into_iter().enumerate() {
            let column = items.iter().map(|a| a.endpoints()[k]);
            let lo = column.clone().fold(f64::INFINITY, f64::min);
            let hi = column.fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(
                lo - EMBED_TOL <= x && x <= hi + EMBED_TOL,
                "endpoint {k}: {x} outside [{lo}, {hi}]"
            );
        }
    }
    Ok(())
}

/// `lower[j] ⊆ upper[j]` for every j implies the aggregates are ordered too.
pub fn aggregation_monotonicity(
    lower: &[IvbfwnNumber],
    upper: &[IvbfwnNumber],
    w: &[f64],
) -> Check {
    let wv = WeightVector::new(w.to_vec()).expect("valid weights");
    let avg = (aggregate_average(lower, &wv), aggregate_average(upper, &wv));
    let geo = (
        aggregate_geometric(lower, &wv),
        aggregate_geometric(upper, &wv),
    );
    for (lo, hi) in [avg, geo] {
        let (lo, hi) = (lo.expect("aggregates"), hi.expect("aggregates"));
        prop_assert!(number_contains(&lo, &hi), "{lo} not contained in {hi}");
    }
    Ok(())
}

// Degenerate embedding against the bipolar neutrosophic baseline.

pub fn embedding_arithmetic(a: &BnNumber, b: &BnNumber, l: Scalar) -> Check {
    let (ea, eb) = (embed(a), embed(b));
    check_embedded(&scale(l, &ea), &bn_scale(l.get(), a).expect("positive"))?;
    check_embedded(&power(&ea, l), &bn_power(a, l.get()).expect("positive"))?;
    check_embedded(&add(&ea, &eb), &bn_add(a, b))?;
    check_embedded(&mul(&ea, &eb), &bn_mul(a, b))
}

pub fn embedding_scoring(a: &BnNumber) -> Check {
    let e = embed(a);
    prop_assert!((score(&e) - bn_score(a)).abs() <= EMBED_TOL);
    prop_assert!((accuracy(&e) - (2.0 + bn_accuracy(a)) / 4.0).abs() <= EMBED_TOL);
    prop_assert!((certainty(&e) - (1.0 + bn_certainty(a)) / 2.0).abs() <= EMBED_TOL);
    Ok(())
}

pub fn embedding_aggregation(items: &[BnNumber], w: &[f64]) -> Check {
    let wv = WeightVector::new(w.to_vec()).expect("valid weights");
    let simplex = wv.normalized();
    let embedded: Vec<IvbfwnNumber> = items.iter().map(embed).collect();
    check_embedded(
        &aggregate_average(&embedded, &wv).expect("aggregates"),
        &bn_aggregate_average(items, &simplex).expect("simplex weights"),
    )?;
    check_embedded(
        &aggregate_geometric(&embedded, &wv).expect("aggregates"),
        &bn_aggregate_geometric(items, &simplex).expect("simplex weights"),
    )
}

pub fn bn_items() -> impl Strategy<Value = (Vec<BnNumber>, Vec<f64>)> {
    (1usize..=8).prop_flat_map(|n| {
        (
            prop::collection::vec(bn_number(), n),
            prop::collection::vec(0.0..=1.0f64, n),
        )
            .prop_filter("positive total", |(_, w)| w.iter().sum::<f64>() > 0.0)
    })
}

// Matrices.

fn label() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9 _\"\\\\é≻-]{0,6}"
}

pub fn matrix() -> impl Strategy<Value = DecisionMatrix> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(rows, cols)| {
            (
                prop::collection::vec(label(), rows),
                prop::collection::vec(label(), cols),
                prop::collection::vec(prop::collection::vec(number(), cols), rows),
            )
        })
        .prop_map(|(alts, crits, mut cells)| {
            for row in &mut cells {
                if row.iter().all(|c| c.weight() == 0.0) {
                    row[0] = row[0].with_weight(1.0).expect("unit weight");
                }
            }
            let unique = |v: Vec<String>, prefix: &str| {
                v.into_iter()
                    .enumerate()
                    .map(|(i, s)| format!("{prefix}{i}:{s}"))
                    .collect()
            };
            DecisionMatrix::new(unique(alts, "A"), unique(crits, "C"), cells).expect("valid matrix")
        })
}

pub fn matrix_round_trip(m: &DecisionMatrix) -> Check {
    let text = io::serialize_matrix(m);
    let back = io::parse_matrix(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, m);
    prop_assert_eq!(io::serialize_matrix(&back), text);
    Ok(())
}

pub fn report_round_trip(m: &DecisionMatrix) -> Check {
    for op in [OperatorChoice::Average, OperatorChoice::Geometric] {
        let report = rank_alternatives(m, op).expect("ranks");
        let json = io::emit_report(&report, io::ReportFormat::Json, 4);
        let again = io::emit_report(
            &rank_alternatives(m, op).expect("ranks"),
            io::ReportFormat::Json,
            4,
        );
        prop_assert_eq!(&json, &again);
        let back = io::parse_report(&json).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(back, report);
    }
    Ok(())
}
