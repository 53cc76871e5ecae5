//! Straighten a sequence of torsion tuples into product form.
//!
//! If deep tuples keep appearing whose coordinates move together, the
//! dependence can be removed: discrete logarithms between consecutive
//! coordinates are estimated from the deepest tuples, a change of
//! variables subtracts each chain, and what remains of the straightened
//! coordinates is checked for constancy.  The output is the transform,
//! the straightened tuples, and a per-coordinate account of the
//! evidence.

use padic_rigidity::{Result, TorsionPoint, TorsionTuple};

fn main() -> Result<()> {
    let p = 3u64;

    // Tuples (t, [3]t) for t running down the tower: coordinate 1 is
    // chained to coordinate 0 with exponent 3.
    let tuples: Vec<TorsionTuple> = (1..=4u32)
        .map(|k| {
            let t = TorsionPoint::primitive(p, k);
            t.and_then(|t| Ok(TorsionTuple::new(vec![t.clone(), t.mul_int(3)?])))
        })
        .collect::<Result<_>>()?;

    let outcome = padic_rigidity::normalize_sequence(&tuples)?;
    for chain in &outcome.chains {
        match &chain.exponent {
            Some(e) => println!(
                "coordinate {}: chained with exponent {} ({} of {} samples agree)",
                chain.position, e, chain.agreements, chain.samples
            ),
            None => println!("coordinate {}: no chain estimated", chain.position),
        }
        if let Some(c) = &chain.constant {
            println!("  after straightening, constant value {}", c);
        }
    }

    println!("transform entry (1,0) = {}", outcome.cv.entry(1, 0));
    for (before, after) in tuples.iter().zip(&outcome.normalized) {
        println!("  {}  ->  {}", before, after);
    }

    // The straightened second coordinates all collapse to the origin:
    // the sequence lives on the subtorus {(u, u^3)}, nothing more.
    assert!(outcome.normalized.iter().all(|t| t.point(1).is_origin()));
    assert_eq!(
        outcome.chains[0].constant,
        Some(TorsionPoint::origin(p))
    );
    println!("second coordinate projects to a single point: the origin");
    Ok(())
}
