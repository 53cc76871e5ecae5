//! Certify that a series vanishes on a translated one-parameter subgroup.
//!
//! The subgroup {([n1]u, ..., [nk]u)} translated by a torsion tuple is
//! substituted into the series and the composite is checked coefficient
//! by coefficient: each must vanish to a floor determined by the window
//! and, for exponents only known modulo p^K, by that modulus.  The
//! check either certifies the vanishing or names the failing degree.

use padic_rigidity::{
    binomial_series_int, ExponentSpec, LtGroup, LtKind, MultiSeries, PadicApprox, Result,
    TorsionTuple, Zp,
};

fn graph(p: u64, precision: u32, degree: usize, m: i64) -> Result<MultiSeries<Zp>> {
    let one = MultiSeries::one(Zp::new(p, precision), 2, degree);
    let y = MultiSeries::variable(Zp::new(p, precision), 2, degree, 1);
    binomial_series_int(p, precision, m, degree)
        .promote(2, 0)?
        .sub(&one)?
        .sub(&y)
}

fn main() -> Result<()> {
    let p = 3u64;
    let precision = 12;
    let degree = 10;
    let group = LtGroup::new(p, precision, degree, LtKind::Cyclotomic)?;
    let origin = TorsionTuple::origin(p, 2);

    // The group law X + Y + XY vanishes identically on the inverse
    // pairs {(u, [-1]u)}: a subtorus with exponent vector (1, -1).
    let law = group.group_law().clone();
    let check = padic_rigidity::verify_subtorus_translate(
        &group,
        &law,
        &[ExponentSpec::Integer(1), ExponentSpec::Integer(-1)],
        &origin,
    )?;
    println!(
        "law on {{(u, -u)}}: verified = {}, residual floor {}",
        check.verified, check.floor
    );
    assert!(check.verified);

    // A graph relation (1+X)^m = 1+Y vanishes on {(u, [m]u)} exactly.
    let phi = graph(p, precision, degree, 5)?;
    let check = padic_rigidity::verify_subtorus_translate(
        &group,
        &phi,
        &[ExponentSpec::Integer(1), ExponentSpec::Integer(5)],
        &origin,
    )?;
    println!(
        "graph m=5 on {{(u, [5]u)}}: verified = {}, residual floor {}",
        check.verified, check.floor
    );
    assert!(check.verified);

    // If the exponent is only known modulo p^3, the same graph with the
    // true exponent 5 + 27 still verifies against the residue 5: the
    // coefficient floors weaken degree by degree to account for the
    // unknown multiple of 27.  A wrong residue is caught.
    let phi = graph(p, precision, degree, 5 + 27)?;
    let residue = ExponentSpec::Residue(PadicApprox::from_u64(p, 3, 5));
    let check = padic_rigidity::verify_subtorus_translate(
        &group,
        &phi,
        &[ExponentSpec::Integer(1), residue],
        &origin,
    )?;
    assert!(check.verified);
    println!("graph m=32 against residue 5 mod 27: verified, floors per degree:");
    for c in check.coefficients.iter().take(4) {
        println!(
            "  degree {}: needs valuation >= {}, found {} ({})",
            c.degree,
            c.required,
            c.valuation,
            if c.ok { "ok" } else { "FAIL" }
        );
    }

    let wrong = ExponentSpec::Residue(PadicApprox::from_u64(p, 3, 7));
    let check = padic_rigidity::verify_subtorus_translate(
        &group,
        &phi,
        &[ExponentSpec::Integer(1), wrong],
        &origin,
    )?;
    assert!(!check.verified);
    println!("graph m=32 against residue 7 mod 27: rejected");
    Ok(())
}
