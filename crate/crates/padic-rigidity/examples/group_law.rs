//! Build formal group laws and endomorphisms, two ways.
//!
//! The multiplicative group has the closed law (1+X)(1+Y) - 1 and closed
//! endomorphisms (1+X)^a - 1; the generic degree-by-degree solver must
//! reproduce both.  For the standard series pX + X^p no closed form
//! exists and the solver is the only route, so its leading coefficients
//! are checked against hand-derived values here.

use padic_rigidity::{LtGroup, LtKind, PadicApprox, Result};

fn main() -> Result<()> {
    let p = 3;
    let precision = 10;
    let degree = 6;

    // Multiplicative: solver output vs the closed form X + Y + XY.
    let mult = LtGroup::new(p, precision, degree, LtKind::Cyclotomic)?;
    println!("multiplicative law   L(X,Y) = {}", mult.group_law());
    println!("                     f(X)   = {}", mult.f());

    // [2] and [-1] via the closed binomial route.
    let two = PadicApprox::from_i64(p, precision + degree as u32, 2);
    println!("[2](X)  = {}", mult.bracket(&two)?);
    println!("[-1](X) = {}", mult.bracket_int(-1)?);

    // Standard pX + X^p: no closed law; the solver works degree by
    // degree.  Hand derivation for p = 3: the degree-3 part of the law
    // is (X^2 Y + X Y^2)/8, and [2] has degree-3 coefficient
    // (2 - 2^3)/(3 - 3^3) = 1/4.
    let standard = LtGroup::new(p, precision, degree, LtKind::Standard)?;
    println!("\nstandard law         L(X,Y) = {}", standard.group_law());
    let bracket2 = standard.bracket_int(2)?;
    println!("standard [2](X) = {}", bracket2);

    let c3 = bracket2.coeff(&[3]);
    let quarter_times_4 = c3.mul(&PadicApprox::from_i64(p, precision, 4));
    assert!(quarter_times_4.sub(&PadicApprox::one(p, precision)).is_zero());
    println!("degree-3 coefficient of standard [2] is 1/4: confirmed");

    // The brackets respect the law: [2](x) computed by adding x to
    // itself along L agrees with the solved series.  Both windows are
    // truncated, so agreement is certified only up to the smaller of
    // the two evaluation ceilings.
    let x = standard.torsion_point(1, precision)?;
    let via_law = standard.group_law().evaluate(&[x.clone(), x.clone()])?;
    let via_bracket = bracket2.evaluate(&[x])?;
    let ceiling = via_law.ceiling.min(via_bracket.ceiling);
    let defect = via_law.value.try_sub(&via_bracket.value)?;
    assert_eq!(defect.valuation().certified_ge(ceiling), Some(true));
    println!(
        "[2] agrees with x +_L x on a level-1 torsion point (certified to {})",
        ceiling
    );
    Ok(())
}
