//! Exact p-adic power-series arithmetic, formal group laws, and
//! torsion-point rigidity scans.
//!
//! Everything here computes with certified precision: scalars are residues
//! mod p^N with tracked digit counts, valuations are exact rationals or
//! honest lower bounds, and series evaluations carry ceilings past which
//! no claim is made.  No floating point anywhere.

pub mod cli;
pub mod coeff;
pub mod config;
pub mod eisenstein;
pub mod error;
pub mod json;
pub mod lubin_tate;
pub mod padic;
pub mod rigidity;
pub mod series;
pub mod torsion;

pub use coeff::{CoeffRing, Fp, Zp};
pub use config::{EnumMode, GroupSpec, RunConfig};
pub use eisenstein::{cyclotomic_minpoly, cyclotomic_ring, EisensteinRing, RingElement};
pub use error::{Error, Result};
pub use lubin_tate::{
    same_window, solve_bracket, solve_group_law, AxiomCheck, AxiomReport, LtGroup, LtKind,
};
pub use padic::{rat, PadicApprox, Rat, Valuation};
pub use rigidity::{
    detect_binomial_relation, dichotomy_report, normalize_sequence, verify_subtorus_translate,
    ChainEstimate, CoeffCheck, Detection, DichotomyOutcome, DichotomyReport, ExponentSpec,
    NormalizeOutcome, SpecialWitness, TranslateCheck, WitnessKind,
};
pub use series::{
    binomial_series, binomial_series_int, map_series, ChangeOfVariables, Evaluation, MultiSeries,
};
pub use torsion::{
    apply_cv_to_tuple, enumerate_points, enumerate_tuples, frobenius_defect, sample_tuples,
    scan_ideal, scan_sampled, EmbeddedTuple, Embedder, LevelProfile, Membership, ScanRecord,
    ScanReport, TorsionPoint, TorsionTuple,
};
