//! Scans checked against independently computed answers.
//!
//! The scanner classifies tuples through series evaluation in the
//! torsion ring; everything here recomputes the expected answer by a
//! different route (symbolic group theory, or direct cyclotomic
//! arithmetic) and demands exact agreement, record for record.

use std::collections::BTreeSet;

use padic_rigidity::{
    binomial_series_int, cyclotomic_ring, enumerate_points, rat, scan_ideal, LtGroup, LtKind,
    MultiSeries, PadicApprox, RingElement, TorsionPoint, TorsionTuple, Valuation, Zp,
};

fn mult_group(p: u64, precision: u32, degree: usize) -> LtGroup {
    LtGroup::new(p, precision, degree, LtKind::Cyclotomic).unwrap()
}

fn graph_series(p: u64, precision: u32, degree: usize, m: i64) -> MultiSeries<Zp> {
    let one = MultiSeries::one(Zp::new(p, precision), 2, degree);
    let y = MultiSeries::variable(Zp::new(p, precision), 2, degree, 1);
    binomial_series_int(p, precision, m, degree)
        .promote(2, 0)
        .unwrap()
        .sub(&one)
        .unwrap()
        .sub(&y)
        .unwrap()
}

/// Exact zeros of (1+X)^m - (1+Y) among torsion tuples are the graph
/// {(t, [m]t)}; the scanner must find them and nothing else.
#[test]
fn graph_zeros_match_symbolic_enumeration() {
    let p = 3u64;
    let group = mult_group(p, 12, 16);
    for m in [1i64, 5, 7, 13] {
        let phi = graph_series(p, 12, 16, m);
        let report = scan_ideal(&group, &[phi], rat(1, 1), 2, 100_000).unwrap();

        let expected: BTreeSet<String> = enumerate_points(p, 2)
            .unwrap()
            .into_iter()
            .map(|t| {
                TorsionTuple::new(vec![t.clone(), t.mul_int(m).unwrap()]).to_string()
            })
            .collect();
        let found: BTreeSet<String> = report
            .zero_tuples()
            .map(|r| r.tuple.to_string())
            .collect();
        assert_eq!(found, expected, "m = {}", m);
        assert_eq!(report.zeros, 9, "m = {}", m);
        assert_eq!(report.undecided, 0, "m = {}", m);
    }
}

/// Aggregate zero counts follow the p^k law for graph ideals.
#[test]
fn graph_zero_counts_follow_the_tower() {
    let group = mult_group(3, 12, 16);
    let phi = graph_series(3, 12, 16, 7);
    let report = scan_ideal(&group, &[phi], rat(1, 1), 3, 100_000).unwrap();
    let mut cumulative = 0u64;
    for prof in &report.profile {
        cumulative += prof.zeros;
        assert_eq!(cumulative, 3u64.pow(prof.level), "level {}", prof.level);
    }
}

/// Per-tuple valuations of X - p recomputed with bare ring arithmetic:
/// no series evaluation, no embedding table, just (1+x)^u - 1 - p.
#[test]
fn linear_ideal_valuations_match_direct_cyclotomic_arithmetic() {
    let p = 3u64;
    let precision = 12;
    let group = mult_group(p, precision, 16);
    let x = MultiSeries::variable(Zp::new(p, precision), 1, 16, 0);
    let c = MultiSeries::constant(
        Zp::new(p, precision),
        1,
        16,
        PadicApprox::from_u64(p, precision, p),
    );
    let report = scan_ideal(&group, &[x.sub(&c).unwrap()], rat(1, 2), 3, 100_000).unwrap();

    for record in &report.records {
        let point = record.tuple.point(0);
        let oracle = if point.is_origin() {
            Valuation::Exact(rat(1, 1))
        } else {
            let ring = cyclotomic_ring(p, point.level(), precision).unwrap();
            let u = RingElement::one(&ring)
                .try_add(&RingElement::uniformizer(&ring))
                .unwrap()
                .pow_u64(point.exponent());
            let value = u
                .try_sub(&RingElement::one(&ring))
                .unwrap()
                .try_sub(&RingElement::one(&ring).scalar_mul(&PadicApprox::from_u64(
                    p, precision, p,
                )))
                .unwrap();
            value.valuation()
        };
        assert_eq!(record.min_valuation, oracle, "tuple {}", record.tuple);
    }

    // Away from the origin the valuation never beats 1/2, and exactly
    // the level-1 points attain it.
    for record in &report.records {
        let level = record.tuple.level();
        if level >= 1 {
            let v = match record.min_valuation {
                Valuation::Exact(v) => v,
                Valuation::AtLeast(_) => panic!("nonzero values must be exact here"),
            };
            assert!(v <= rat(1, 2));
            assert_eq!(v == rat(1, 2), level == 1);
        }
    }
}

/// Shrinking the valuation demand can only grow the membership set.
#[test]
fn membership_is_monotone_in_epsilon() {
    let p = 3u64;
    let group = mult_group(p, 12, 16);
    let gen = MultiSeries::variable(Zp::new(p, 12), 2, 16, 0);
    let mut previous: Option<BTreeSet<String>> = None;
    for (num, den) in [(10, 1), (2, 1), (1, 1), (1, 2), (1, 6)] {
        let report = scan_ideal(&group, &[gen.clone()], rat(num, den), 2, 100_000).unwrap();
        let members: BTreeSet<String> = report
            .records
            .iter()
            .filter(|r| r.membership.as_str() == "in")
            .map(|r| r.tuple.to_string())
            .collect();
        if let Some(prev) = &previous {
            assert!(
                prev.is_subset(&members),
                "epsilon {}/{} lost members",
                num,
                den
            );
        }
        previous = Some(members);
    }
}

/// The level profile's deepest-nonzero-valuation column for X - p is
/// the uniformizer valuation at each level, known in closed form.
#[test]
fn profile_witnesses_attain_the_reported_valuation() {
    let p = 3u64;
    let group = mult_group(p, 12, 16);
    let x = MultiSeries::variable(Zp::new(p, 12), 1, 16, 0);
    let c = MultiSeries::constant(Zp::new(p, 12), 1, 16, PadicApprox::from_u64(p, 12, p));
    let report = scan_ideal(&group, &[x.sub(&c).unwrap()], rat(1, 2), 4, 100_000).unwrap();
    for prof in &report.profile {
        let expect = match prof.level {
            0 => rat(1, 1),
            k => rat(1, (p.pow(k) - p.pow(k - 1)) as i64),
        };
        assert_eq!(prof.max_min_valuation, Some(expect), "level {}", prof.level);
        let witness = prof.witness.as_ref().expect("every level has tuples");
        let record = report
            .records
            .iter()
            .find(|r| r.tuple == *witness)
            .expect("witness tuple was scanned");
        assert_eq!(record.min_valuation, Valuation::Exact(expect));
    }
}

/// Sampled scans draw from the same classification: every sampled
/// record agrees with the exhaustive scan of the same ideal.
#[test]
fn sampled_records_agree_with_exhaustive_scan() {
    let p = 3u64;
    let group = mult_group(p, 12, 16);
    let gen = graph_series(p, 12, 16, 5);
    let full = scan_ideal(&group, &[gen.clone()], rat(1, 1), 2, 100_000).unwrap();
    let sampled =
        padic_rigidity::scan_sampled(&group, &[gen], rat(1, 1), 2, 40, 99).unwrap();
    assert!(!sampled.records.is_empty());
    for record in &sampled.records {
        let reference = full
            .records
            .iter()
            .find(|r| r.tuple == record.tuple)
            .expect("sampled tuple lies in the enumerated space");
        assert_eq!(record.min_valuation, reference.min_valuation);
        assert_eq!(record.membership.as_str(), reference.membership.as_str());
        assert_eq!(record.zero_at_precision, reference.zero_at_precision);
    }
}

/// Values at a point of exact level k drop when the point is pushed
/// down the tower by [p], and the embeddings stay compatible: the
/// level-k embedding of a level-j point (j < k) has the level-j
/// valuation.
#[test]
fn tower_embeddings_are_compatible() {
    let p = 3u64;
    let group = mult_group(p, 12, 16);
    let embedder = padic_rigidity::Embedder::new(&group);
    let phi = MultiSeries::variable(Zp::new(p, 12), 1, 16, 0);
    for k in 2..=3u32 {
        let t = TorsionTuple::new(vec![TorsionPoint::primitive(p, k).unwrap()]);
        let dropped = t.mul_int(p as i64).unwrap();
        assert_eq!(dropped.level(), k - 1);
        let shallow = embedder.embed(&dropped).unwrap().evaluate(&phi).unwrap();
        assert_eq!(
            shallow.value.valuation(),
            Valuation::Exact(rat(1, (p.pow(k - 1) - p.pow(k - 2)) as i64)),
            "level {} after [p]",
            k
        );
    }
}
