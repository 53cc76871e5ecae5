//! Recover a hidden multiplicative relation from torsion zeros alone.
//!
//! Given a two-variable series, the detector enumerates its exact
//! torsion zeros level by level.  A graph relation leaves an
//! unmistakable footprint: p^k zeros at level <= k, fibered over the
//! first coordinate.  Discrete logarithms of the fibers then pin the
//! exponent modulo p^k, and the candidate is verified symbolically
//! before being reported as a witness.

use padic_rigidity::{
    binomial_series_int, ExponentSpec, LtGroup, LtKind, MultiSeries, Result, Zp,
};

fn main() -> Result<()> {
    let p = 3u64;
    let precision = 12;
    let degree = 16;
    let level_bound = 3;
    let group = LtGroup::new(p, precision, degree, LtKind::Cyclotomic)?;

    // (1+X)^13 - (1+Y): its torsion zeros are exactly {(t, [13]t)}.
    let m = 13i64;
    let one = MultiSeries::one(Zp::new(p, precision), 2, degree);
    let y = MultiSeries::variable(Zp::new(p, precision), 2, degree, 1);
    let phi = binomial_series_int(p, precision, m, degree)
        .promote(2, 0)?
        .sub(&one)?
        .sub(&y)?;

    let detection = padic_rigidity::detect_binomial_relation(&group, &phi, level_bound, 100_000)?;
    println!("diagnostic: {}", detection.diagnostic);
    for (level, zeros) in &detection.zero_counts {
        println!("  zeros at level <= {}: {}", level, zeros);
        assert_eq!(*zeros, p.pow(*level) as u64);
    }

    let witness = detection.witness.expect("graph relation should be found");
    println!(
        "witness: kind = {}, translate = {}, partial = {}",
        witness.kind.as_str(),
        witness.translate,
        witness.partial
    );
    match &witness.exponents[1] {
        ExponentSpec::Residue(r) => {
            println!(
                "recovered exponent: {} (truth: {} = {} mod 27)",
                r,
                m,
                m % 27
            );
            assert_eq!(r.value(), &num_bigint::BigUint::from(13u32));
        }
        other => panic!("expected a residue exponent, got {:?}", other),
    }

    // A series whose zero set is a pair of axes is not a graph, and the
    // detector says so instead of forcing a witness.
    let x = MultiSeries::variable(Zp::new(p, precision), 2, degree, 0);
    let axes = x.mul(&y)?;
    let detection = padic_rigidity::detect_binomial_relation(&group, &axes, level_bound, 100_000)?;
    assert!(detection.witness.is_none());
    println!("XY declined: {}", detection.diagnostic);
    Ok(())
}
