//! Scan torsion tuples against an ideal and profile the results.
//!
//! Membership in S_I(epsilon) asks whether every generator takes
//! valuation at least epsilon at the tuple.  Each answer is certified:
//! "in" and "out" come with exact or bounded valuations that decide the
//! comparison, and anything the precision window cannot decide is
//! reported as undecided rather than guessed.

use padic_rigidity::{rat, LtGroup, LtKind, MultiSeries, Result, Zp};

fn main() -> Result<()> {
    let p = 3u64;
    let precision = 12;
    let degree = 16;
    let group = LtGroup::new(p, precision, degree, LtKind::Cyclotomic)?;

    // The ideal (X1) in two variables: membership at epsilon = 10 forces
    // the first coordinate to sit very deep, i.e. at the origin.
    let gen = MultiSeries::variable(Zp::new(p, precision), 2, degree, 0);
    let report = padic_rigidity::scan_ideal(&group, &[gen.clone()], rat(10, 1), 2, 100_000)?;

    println!(
        "scan of (X1), epsilon = {}: {} tuples, {} in / {} out / {} undecided, {} exact zeros",
        report.epsilon,
        report.records.len(),
        report.members,
        report.outside,
        report.undecided,
        report.zeros
    );
    for prof in &report.profile {
        println!(
            "  level {}: {} tuples, {} zeros, {} undecided, deepest nonzero valuation {}",
            prof.level,
            prof.tuples,
            prof.zeros,
            prof.undecided,
            prof.max_min_valuation
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into())
        );
    }

    // The members are exactly the tuples whose first coordinate is the
    // origin: 9 of the 81 level <= 2 tuples.
    assert_eq!(report.members, 9);
    for rec in report.records.iter().filter(|r| r.membership.as_str() == "in") {
        assert!(rec.tuple.point(0).is_origin());
    }
    println!("members are exactly the first-coordinate-origin tuples");

    // Tightening epsilon can only shrink the membership set.
    let loose = padic_rigidity::scan_ideal(&group, &[gen], rat(1, 2), 2, 100_000)?;
    assert!(loose.members >= report.members);
    println!(
        "epsilon 1/2 admits {} tuples; epsilon 10 keeps {} of them",
        loose.members, report.members
    );
    Ok(())
}
