//! Randomized checks of the formal-group identities.
//!
//! Four families are exercised on random integer pairs: the law commutes
//! with endomorphisms, endomorphisms add along the law, they compose
//! multiplicatively, and [1], [p] are the identity and the defining
//! series.  Every comparison is a window-for-window congruence, so a
//! single failure means a real coefficient mismatch, not noise.

use padic_rigidity::{LtGroup, LtKind, Result};

fn main() -> Result<()> {
    for (p, kind) in [
        (2, LtKind::Cyclotomic),
        (3, LtKind::Cyclotomic),
        (2, LtKind::Standard),
        (3, LtKind::Standard),
    ] {
        let group = LtGroup::new(p, 10, 8, kind)?;
        let report = group.verify_axioms(25, 7)?;
        println!("p = {}, f = {}", p, group.f());
        for check in &report.axioms {
            println!(
                "  {:<36} {:>3} trials, {} failures",
                check.name, check.trials, check.failures
            );
        }
        assert!(report.all_passed());
    }
    println!("all identity families hold on every trial");
    Ok(())
}
