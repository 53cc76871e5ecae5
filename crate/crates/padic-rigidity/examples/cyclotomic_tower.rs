//! The tower of torsion fields and its uniformizer valuations.
//!
//! A point of exact level k generates a totally ramified extension of
//! degree p^k - p^(k-1), and its valuation is exactly one over that.
//! The defining polynomial is computed two independent ways: dividing
//! iterates of f, and the direct closed form; they must agree exactly.

use padic_rigidity::{cyclotomic_minpoly, rat, LtGroup, LtKind, Result, Valuation};

fn main() -> Result<()> {
    let p = 3u64;
    let precision = 12;
    let group = LtGroup::new(p, precision, 16, LtKind::Cyclotomic)?;

    for k in 1..=4u32 {
        let degree = p.pow(k) - p.pow(k - 1);

        // Route one: peel the level-k factor out of the k-th iterate of f.
        let from_iterates = group.torsion_minpoly(k)?;
        // Route two: closed form, no group law involved.
        let direct = cyclotomic_minpoly(p, k)?;
        assert_eq!(from_iterates, direct);

        let ring = group.torsion_ring(k, precision)?;
        let x = group.torsion_point(k, precision)?;
        assert_eq!(ring.degree() as u64, degree);
        assert_eq!(x.valuation(), Valuation::Exact(rat(1, degree as i64)));

        // The point is an exact root of the k-th iterate of f, not just
        // an approximate one: annihilation is a ring identity here.
        let iterate = group.iterate_f(k)?;
        assert!(x.eval_int_poly(&iterate).is_zero());

        println!(
            "level {}: degree {} extension, uniformizer valuation 1/{}, \
             minpoly has {} coefficients (two routes agree)",
            k,
            degree,
            degree,
            direct.len()
        );
    }
    Ok(())
}
