//! The Frobenius congruence on torsion values.
//!
//! For any series with integral coefficients and any torsion tuple t,
//! the value at [p]t is congruent to the p-th power of the value at t
//! modulo the maximal ideal: v(phi([p]t) - phi(t)^p) >= 1.  The bound
//! is checked as a certified inequality on random series and tuples;
//! a window too shallow to decide would say so instead of passing.

use padic_rigidity::{
    rat, sample_tuples, Embedder, LtGroup, LtKind, MultiSeries, PadicApprox, Result, Zp,
};
use rand::{Rng, SeedableRng};

fn random_series(rng: &mut impl Rng, p: u64, precision: u32, degree: usize) -> MultiSeries<Zp> {
    let ring = Zp::new(p, precision);
    let mut terms = Vec::new();
    for _ in 0..6 {
        let exp = vec![rng.gen_range(0..4u32), rng.gen_range(0..4u32)];
        let coeff = PadicApprox::from_i64(p, precision, rng.gen_range(-40..=40));
        terms.push((exp, coeff));
    }
    MultiSeries::from_terms(ring, 2, degree, terms, false).expect("valid terms")
}

fn main() -> Result<()> {
    let p = 3u64;
    let group = LtGroup::new(p, 12, 16, LtKind::Cyclotomic)?;
    let embedder = Embedder::new(&group);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);

    let mut certified = 0u32;
    let mut undecided = 0u32;
    let trials = 60;
    for _ in 0..trials {
        let phi = random_series(&mut rng, p, 12, 16);
        let tuple = &sample_tuples(p, 2, 3, 1, &mut rng)?[0];
        let defect = padic_rigidity::frobenius_defect(&embedder, &phi, tuple)?;
        match defect.certified_ge(rat(1, 1)) {
            Some(true) => certified += 1,
            Some(false) => panic!("congruence failed at {} with defect {}", tuple, defect),
            None => undecided += 1,
        }
    }
    println!(
        "phi([p]t) = phi(t)^p mod pi: certified on {}/{} random (series, tuple) pairs, {} undecided",
        certified, trials, undecided
    );
    assert_eq!(undecided, 0);
    Ok(())
}
