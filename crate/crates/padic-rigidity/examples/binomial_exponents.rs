//! Binomial series with p-adic exponents, and the precision they cost.
//!
//! (1+X)^a makes sense for any p-adic a, but the coefficient binom(a, i)
//! divides by i!, so the exponent must carry v_p(D!) digits of headroom
//! beyond the output precision.  The endomorphism route [a] through the
//! group law must reproduce the binomial route coefficient-for-
//! coefficient; that identity is checked here on random exponents.

use padic_rigidity::{
    binomial_series, binomial_series_int, same_window, Error, LtGroup, LtKind, PadicApprox, Result,
};
use rand::{Rng, SeedableRng};

fn main() -> Result<()> {
    let p = 3u64;
    let precision = 12;
    let degree = 16;
    let group = LtGroup::new(p, precision, degree, LtKind::Cyclotomic)?;

    // v_3(16!) = 6, so a 12-digit output needs an 18-digit exponent.
    let skimpy = PadicApprox::from_u64(p, precision, 7);
    match binomial_series(&skimpy, degree, precision) {
        Err(Error::InsufficientExponentPrecision { given, required, .. }) => {
            println!(
                "exponent with {} digits rejected: dividing by i! up to {}! needs {}",
                given, degree, required
            );
        }
        other => panic!("headroom check should have failed, got {:?}", other.is_ok()),
    }

    // Two routes to the same endomorphism: solve along the group law,
    // or expand the binomial directly.  They agree window-for-window.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let one = padic_rigidity::MultiSeries::one(
        padic_rigidity::Zp::new(p, precision),
        1,
        degree,
    );
    for _ in 0..20 {
        let a = PadicApprox::from_i64(p, precision + degree as u32, rng.gen_range(-9999..=9999));
        let via_group = group.bracket(&a)?;
        let via_binomial = binomial_series(&a, degree, precision)?.sub(&one)?;
        assert!(same_window(&via_group, &via_binomial));
    }
    println!("bracket and binomial routes agree on 20 random exponents");

    // Integer exponents inside the window give exact polynomials; the
    // series is only a truncation when the exponent falls outside it.
    let poly = binomial_series_int(p, precision, 5, degree);
    let trunc = binomial_series_int(p, precision, -1, degree);
    assert!(!poly.is_truncated() && poly.max_degree() == 5);
    assert!(trunc.is_truncated());
    println!("(1+X)^5  = {}", poly);
    println!("(1+X)^-1 = {}", trunc);
    Ok(())
}
