//! The two ways a torsion scan can end.
//!
//! Either the ideal vanishes on torsion points all the way down the
//! tower, in which case a structural witness (a translated subtorus)
//! is extracted and verified, or the zeros dry up and every torsion
//! value outside a finite exception set stays above a uniform
//! valuation threshold.  There is no third outcome at the scanned
//! depth, only honestly reported undecidability.

use padic_rigidity::{
    binomial_series_int, DichotomyOutcome, LtGroup, LtKind, MultiSeries, PadicApprox, Result, Zp,
};

fn main() -> Result<()> {
    let p = 3u64;
    let precision = 12;
    let degree = 16;
    let group = LtGroup::new(p, precision, degree, LtKind::Cyclotomic)?;

    // Outcome one: X - p has its only small torsion value at the
    // origin; everywhere else the valuation is at most 1/2.
    let x = MultiSeries::variable(Zp::new(p, precision), 1, degree, 0);
    let c = MultiSeries::constant(
        Zp::new(p, precision),
        1,
        degree,
        PadicApprox::from_u64(p, precision, p),
    );
    let x_minus_p = x.sub(&c)?;
    let report = padic_rigidity::dichotomy_report(&group, &[x_minus_p], 4, 100_000)?;
    println!(
        "I = (X - p), depth 4: outcome = {}, {} tuples, {} undecided",
        report.outcome_name(),
        report.tuples_scanned,
        report.undecided
    );
    match &report.outcome {
        DichotomyOutcome::BoundedBelow { threshold, exceptions } => {
            println!(
                "  threshold {} with {} exception(s): {}",
                threshold,
                exceptions.len(),
                exceptions
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            assert_eq!(*threshold, padic_rigidity::rat(1, 2));
            assert!(exceptions.len() == 1 && exceptions[0].is_origin());
        }
        other => panic!("expected bounded-below, got {:?}", other),
    }

    // Outcome two: a graph relation keeps producing zeros at every
    // level, and the scan hands back the verified witness instead.
    let one = MultiSeries::one(Zp::new(p, precision), 2, degree);
    let y = MultiSeries::variable(Zp::new(p, precision), 2, degree, 1);
    let phi = binomial_series_int(p, precision, 5, degree)
        .promote(2, 0)?
        .sub(&one)?
        .sub(&y)?;
    let report = padic_rigidity::dichotomy_report(&group, &[phi], 2, 100_000)?;
    println!(
        "I = ((1+X)^5 - (1+Y)), depth 2: outcome = {}",
        report.outcome_name()
    );
    match &report.outcome {
        DichotomyOutcome::SpecialFound(w) => {
            println!(
                "  witness: {} translated by {}, exponent modulus 3^{}",
                w.kind.as_str(),
                w.translate,
                w.modulus_exp.unwrap_or(0)
            );
        }
        other => panic!("expected a special witness, got {:?}", other),
    }
    for (level, zeros) in &report.zero_counts {
        println!("  zeros at level <= {}: {}", level, zeros);
    }
    Ok(())
}
