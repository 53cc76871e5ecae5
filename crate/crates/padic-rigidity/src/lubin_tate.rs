//! Formal groups of Lubin-Tate type and their torsion towers.
//!
//! A distinguished series f (congruent to pX below degree 2 and to X^p
//! mod p) determines a unique one-dimensional formal group law admitting
//! f as the multiplication-by-p endomorphism.  The law and the integer
//! endomorphisms [a] are solved degree by degree; each degree divides by
//! p*(1 - p^(d-1)) once, so certifying N digits at degree bound D needs
//! N + D - 1 working digits.  Inputs are required to carry N + D.
//!
//! Two models are built in: the cyclotomic series (1+X)^p - 1, whose law
//! is the multiplicative X + Y + XY, and the standard pX + X^p.  Both
//! have exact integer models, so their torsion towers (iterated preimages
//! of zero under f) come with exact Eisenstein minimal polynomials.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{CoeffRing, Zp};
use crate::eisenstein::{
    int_poly_compose, int_poly_divide_exact, EisensteinRing, RingElement,
};
use crate::error::{Error, Result};
use crate::padic::PadicApprox;
use crate::series::{binomial_series, binomial_series_int, MultiSeries};

/// Choice of distinguished series.
#[derive(Debug, Clone, PartialEq)]
pub enum LtKind {
    /// (1+X)^p - 1; the law is multiplicative.
    Cyclotomic,
    /// pX + X^p.
    Standard,
    /// Caller-supplied series, validated against both congruences.
    Custom(MultiSeries<Zp>),
}

impl LtKind {
    pub fn name(&self) -> &'static str {
        match self {
            LtKind::Cyclotomic => "cyclotomic",
            LtKind::Standard => "standard",
            LtKind::Custom(_) => "custom",
        }
    }
}

/// A solved formal group: the distinguished series, its group law, and a
/// cache of integer endomorphisms, all published at one precision.
#[derive(Debug)]
pub struct LtGroup {
    prime: u64,
    precision: u32,
    degree_bound: usize,
    kind: LtKind,
    f: MultiSeries<Zp>,
    law: MultiSeries<Zp>,
    brackets: Mutex<BTreeMap<String, MultiSeries<Zp>>>,
}

impl LtGroup {
    pub fn new(prime: u64, precision: u32, degree_bound: usize, kind: LtKind) -> Result<LtGroup> {
        assert!(prime >= 2 && precision >= 1 && degree_bound >= 1);
        let work = precision + degree_bound as u32;
        let f_work = match &kind {
            LtKind::Cyclotomic | LtKind::Standard => {
                let model = int_model(prime, &kind).expect("builtin kinds have integer models");
                series_from_int_poly(prime, work, degree_bound, &model)
            }
            LtKind::Custom(f) => {
                validate_custom(prime, precision, degree_bound, f)?;
                restrict_to(f, degree_bound)
            }
        };
        let law = match &kind {
            LtKind::Cyclotomic => multiplicative_law(prime, precision, degree_bound),
            _ => solve_group_law(&f_work, precision)?,
        };
        let f = reduce_series(&f_work, precision);
        Ok(LtGroup {
            prime,
            precision,
            degree_bound,
            kind,
            f,
            law,
            brackets: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn kind(&self) -> &LtKind {
        &self.kind
    }

    /// The distinguished series, at the published precision.
    pub fn f(&self) -> &MultiSeries<Zp> {
        &self.f
    }

    /// The group law L(X, Y).
    pub fn group_law(&self) -> &MultiSeries<Zp> {
        &self.law
    }

    /// The endomorphism [a] for a p-adic integer a.  Since [a] mod p^N
    /// depends on a beyond its first N digits (each solved degree spends
    /// one), a must carry N + D digits.
    pub fn bracket(&self, a: &PadicApprox) -> Result<MultiSeries<Zp>> {
        if a.prime() != self.prime {
            return Err(Error::RingMismatch("exponent over a different prime".into()));
        }
        let work = self.precision + self.degree_bound as u32;
        if a.precision() < work {
            return Err(Error::InsufficientExponentPrecision {
                given: a.precision(),
                required: work,
                degree: self.degree_bound,
            });
        }
        let key = a.reduce_precision(work).to_decimal();
        if let Some(hit) = self.brackets.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let out = match &self.kind {
            LtKind::Cyclotomic => {
                // (1+X)^a - 1.
                let ring = Zp::new(self.prime, self.precision);
                let one = MultiSeries::one(ring, 1, self.degree_bound);
                binomial_series(a, self.degree_bound, self.precision)?.sub(&one)?
            }
            _ => {
                let work_f = self.f_at_working_precision();
                solve_bracket(&work_f, a, self.precision)?
            }
        };
        self.brackets.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// The endomorphism [m] for an integer m.
    pub fn bracket_int(&self, m: i64) -> Result<MultiSeries<Zp>> {
        if let LtKind::Cyclotomic = self.kind {
            // Small non-negative exponents give exact polynomials, which
            // keeps evaluation ceilings at full precision.
            if m >= 0 && (m as usize) <= self.degree_bound {
                let ring = Zp::new(self.prime, self.precision);
                let one = MultiSeries::one(ring, 1, self.degree_bound);
                return binomial_series_int(self.prime, self.precision, m, self.degree_bound)
                    .sub(&one);
            }
        }
        let work = self.precision + self.degree_bound as u32;
        self.bracket(&PadicApprox::from_i64(self.prime, work, m))
    }

    fn f_at_working_precision(&self) -> MultiSeries<Zp> {
        let work = self.precision + self.degree_bound as u32;
        match &self.kind {
            LtKind::Custom(f) => restrict_to(f, self.degree_bound),
            kind => {
                let model = int_model(self.prime, kind).expect("builtin");
                series_from_int_poly(self.prime, work, self.degree_bound, &model)
            }
        }
    }

    /// Exact integer coefficients of f, when the model has them.
    pub fn int_model(&self) -> Option<Vec<BigInt>> {
        int_model(self.prime, &self.kind)
    }

    /// f iterated k times as an exact integer polynomial.
    pub fn iterate_f(&self, k: u32) -> Result<Vec<BigInt>> {
        let model = self.int_model().ok_or_else(|| {
            Error::InvalidConfig("torsion towers need an exact integral model for f".into())
        })?;
        let mut acc = vec![BigInt::zero(), BigInt::one()];
        for _ in 0..k {
            acc = int_poly_compose(&model, &acc);
        }
        Ok(acc)
    }

    /// Minimal polynomial of a primitive level-k torsion point: the exact
    /// quotient f^(k) / f^(k-1), Eisenstein of degree p^(k-1) (p-1).
    pub fn torsion_minpoly(&self, level: u32) -> Result<Vec<BigInt>> {
        if level == 0 {
            return Err(Error::InvalidInput("torsion level must be positive".into()));
        }
        let num = self.iterate_f(level)?;
        let den = self.iterate_f(level - 1)?;
        let quot = int_poly_divide_exact(&num, &den)?;
        debug_assert_eq!(
            quot.len() as u64 - 1,
            self.prime.pow(level - 1) * (self.prime - 1)
        );
        Ok(quot)
    }

    /// The ring generated by a primitive level-k torsion point.
    pub fn torsion_ring(&self, level: u32, precision: u32) -> Result<Arc<EisensteinRing>> {
        let minpoly = self.torsion_minpoly(level)?;
        EisensteinRing::new(
            self.prime,
            precision,
            minpoly,
            &format!("lt-{}-level-{}", self.kind.name(), level),
        )
    }

    /// A primitive level-k torsion point, as the uniformizer of its ring.
    pub fn torsion_point(&self, level: u32, precision: u32) -> Result<RingElement> {
        Ok(RingElement::uniformizer(&self.torsion_ring(level, precision)?))
    }

    /// Check the defining identities on random integer pairs.
    pub fn verify_axioms(&self, trials: u32, seed: u64) -> Result<AxiomReport> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut scaling = AxiomCheck::new("law-commutes-with-brackets");
        let mut addition = AxiomCheck::new("brackets-add-along-law");
        let mut multiplication = AxiomCheck::new("brackets-compose-multiplicatively");
        let mut identities = AxiomCheck::new("unit-and-p-identities");

        for _ in 0..trials {
            let a: i64 = rng.gen_range(-999..=999);
            let b: i64 = rng.gen_range(-999..=999);
            let ga = self.bracket_int(a)?;
            let gb = self.bracket_int(b)?;

            // L([a]X, [a]Y) = [a] L(X, Y)
            let gax = ga.promote(2, 0)?;
            let gay = ga.promote(2, 1)?;
            let lhs = self.law.substitute(&[&gax, &gay])?;
            let rhs = ga.substitute(&[&self.law])?;
            scaling.record(same_window(&lhs, &rhs));

            // L([a]X, [b]X) = [a+b] X
            let lhs = self.law.substitute(&[&ga, &gb])?;
            let rhs = self.bracket_int(a + b)?;
            addition.record(same_window(&lhs, &rhs));

            // [a]([b] X) = [ab] X
            let lhs = ga.substitute(&[&gb])?;
            let rhs = self.bracket_int(a * b)?;
            multiplication.record(same_window(&lhs, &rhs));
        }

        let x = MultiSeries::variable(Zp::new(self.prime, self.precision), 1, self.degree_bound, 0);
        let ok = same_window(&self.bracket_int(1)?, &x)
            && same_window(&self.bracket_int(self.prime as i64)?, &self.f);
        identities.record(ok);

        Ok(AxiomReport {
            axioms: vec![scaling, addition, multiplication, identities],
        })
    }
}

/// Outcome of one identity family in [`LtGroup::verify_axioms`].
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: String,
    pub trials: u32,
    pub failures: u32,
}

impl AxiomCheck {
    fn new(name: &str) -> Self {
        AxiomCheck { name: name.into(), trials: 0, failures: 0 }
    }

    fn record(&mut self, passed: bool) {
        self.trials += 1;
        if !passed {
            self.failures += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.axioms.iter().all(|a| a.failures == 0)
    }
}

/// Stored windows agree (truncation flags aside).
pub fn same_window<R: CoeffRing>(a: &MultiSeries<R>, b: &MultiSeries<R>) -> bool {
    a.nvars() == b.nvars()
        && a.degree_bound() == b.degree_bound()
        && a.term_count() == b.term_count()
        && a.terms().all(|(exp, coeff)| &b.coeff(exp) == coeff)
}

fn int_model(prime: u64, kind: &LtKind) -> Option<Vec<BigInt>> {
    match kind {
        LtKind::Cyclotomic => {
            // (1+X)^p - 1: binomial coefficients, constant dropped.
            let p = prime as usize;
            let mut c = BigInt::one();
            let mut coeffs = vec![BigInt::zero(); p + 1];
            for i in 1..=p {
                c = c * BigInt::from((p - i + 1) as u64) / BigInt::from(i as u64);
                coeffs[i] = c.clone();
            }
            Some(coeffs)
        }
        LtKind::Standard => {
            let mut coeffs = vec![BigInt::zero(); prime as usize + 1];
            coeffs[1] = BigInt::from(prime);
            coeffs[prime as usize] = BigInt::one();
            Some(coeffs)
        }
        LtKind::Custom(_) => None,
    }
}

fn series_from_int_poly(
    prime: u64,
    precision: u32,
    degree_bound: usize,
    poly: &[BigInt],
) -> MultiSeries<Zp> {
    let ring = Zp::new(prime, precision);
    let mut out = MultiSeries::zero(ring, 1, degree_bound);
    for (i, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i > degree_bound {
            out.mark_truncated();
            continue;
        }
        out.set_term(vec![i as u32], PadicApprox::from_bigint(prime, precision, c));
    }
    out
}

fn multiplicative_law(prime: u64, precision: u32, degree_bound: usize) -> MultiSeries<Zp> {
    let ring = Zp::new(prime, precision);
    let one = PadicApprox::one(prime, precision);
    let mut law = MultiSeries::zero(ring, 2, degree_bound);
    law.set_term(vec![1, 0], one.clone());
    law.set_term(vec![0, 1], one.clone());
    if degree_bound >= 2 {
        law.set_term(vec![1, 1], one);
    }
    law
}

fn reduce_series(s: &MultiSeries<Zp>, precision: u32) -> MultiSeries<Zp> {
    let ring = Zp::new(s.prime(), precision);
    let mut out = MultiSeries::zero(ring, s.nvars(), s.degree_bound());
    if s.is_truncated() {
        out.mark_truncated();
    }
    for (exp, coeff) in s.terms() {
        out.set_term(exp.clone(), coeff.reduce_precision(precision));
    }
    out
}

fn restrict_to(s: &MultiSeries<Zp>, degree_bound: usize) -> MultiSeries<Zp> {
    let mut out = MultiSeries::zero(s.ring().clone(), s.nvars(), degree_bound);
    if s.is_truncated() {
        out.mark_truncated();
    }
    for (exp, coeff) in s.terms() {
        if exp.iter().map(|&e| e as usize).sum::<usize>() > degree_bound {
            out.mark_truncated();
            continue;
        }
        out.set_term(exp.clone(), coeff.clone());
    }
    out
}

fn validate_custom(
    prime: u64,
    precision: u32,
    degree_bound: usize,
    f: &MultiSeries<Zp>,
) -> Result<()> {
    if f.nvars() != 1 {
        return Err(Error::InvalidGroupLaw("f must be a one-variable series".into()));
    }
    if f.prime() != prime {
        return Err(Error::InvalidGroupLaw("f is over a different prime".into()));
    }
    let required = precision + degree_bound as u32;
    if f.precision() < required {
        return Err(Error::InsufficientPrecision {
            given: f.precision(),
            required,
        });
    }
    if f.degree_bound() < degree_bound || f.degree_bound() < prime as usize {
        return Err(Error::InvalidGroupLaw(format!(
            "f must carry terms to degree {} (and at least to degree {})",
            degree_bound, prime
        )));
    }
    if !f.coeff(&[0]).is_zero() {
        return Err(Error::InvalidGroupLaw("f has a nonzero constant term".into()));
    }
    let p_lin = PadicApprox::from_u64(prime, f.precision(), prime);
    if f.coeff(&[1]) != p_lin {
        return Err(Error::InvalidGroupLaw(
            "the linear coefficient of f must equal p".into(),
        ));
    }
    for (exp, coeff) in f.terms() {
        let d = exp[0] as u64;
        let r = coeff.residue();
        if d == prime {
            if r != 1 {
                return Err(Error::InvalidGroupLaw(
                    "f must reduce to X^p mod p (unit coefficient at X^p)".into(),
                ));
            }
        } else if d >= 2 && r != 0 {
            return Err(Error::InvalidGroupLaw(format!(
                "f must reduce to X^p mod p; degree {} has a unit coefficient",
                d
            )));
        }
    }
    if f.coeff(&[prime as u32]).residue() != 1 {
        return Err(Error::InvalidGroupLaw(
            "f must reduce to X^p mod p (missing X^p term)".into(),
        ));
    }
    Ok(())
}

/// Divide the degree-d defect by p (1 - p^(d-1)): one exact p-division
/// and one unit inverse.
fn solve_step(prime: u64, degree: usize, defect: &PadicApprox) -> Result<PadicApprox> {
    let divided = defect.div_exact_p().map_err(|_| {
        Error::InvalidGroupLaw(format!(
            "degree-{} defect is not divisible by p; f does not satisfy the congruences",
            degree
        ))
    })?;
    let unit = BigInt::one() - BigInt::from(prime).pow(degree as u32 - 1);
    let unit = PadicApprox::from_bigint(prime, divided.precision(), &unit);
    Ok(divided.mul(&unit.invert()?))
}

/// Solve L(X, Y) with L = X + Y + O(deg 2) and f(L) = L(f(X), f(Y)).
///
/// At each degree d the unknown homogeneous part enters as
/// p L_d - p^d L_d, everything else being known, so L_d is the defect of
/// the current approximation divided by p - p^d.
pub fn solve_group_law(f: &MultiSeries<Zp>, precision: u32) -> Result<MultiSeries<Zp>> {
    let prime = f.prime();
    let d_max = f.degree_bound();
    if f.precision() < precision + d_max as u32 - 1 {
        return Err(Error::InsufficientPrecision {
            given: f.precision(),
            required: precision + d_max as u32 - 1,
        });
    }
    let work = f.precision();
    let ring = Zp::new(prime, work);
    let one = PadicApprox::one(prime, work);
    let mut law = MultiSeries::zero(ring.clone(), 2, d_max);
    law.set_term(vec![1, 0], one.clone());
    law.set_term(vec![0, 1], one);

    let fx = f.promote(2, 0)?;
    let fy = f.promote(2, 1)?;
    for d in 2..=d_max {
        // Defect of the current truncation: L(f(X), f(Y)) - f(L).
        let lhs = law.substitute(&[&fx, &fy])?;
        let rhs = f.substitute(&[&law])?;
        let defect = lhs.sub(&rhs)?;
        for (exp, coeff) in defect.terms() {
            if exp.iter().sum::<u32>() as usize != d {
                continue;
            }
            let c = solve_step(prime, d, coeff)?;
            law.set_term(exp.clone(), c);
        }
    }
    let mut out = reduce_series(&law, precision);
    out.mark_truncated();
    Ok(out)
}

/// Solve [a](X) = aX + O(deg 2) with f([a]) = [a](f); same scheme as the
/// group law, one variable.
pub fn solve_bracket(
    f: &MultiSeries<Zp>,
    a: &PadicApprox,
    precision: u32,
) -> Result<MultiSeries<Zp>> {
    let prime = f.prime();
    let d_max = f.degree_bound();
    let required = precision + d_max as u32 - 1;
    if f.precision() < required {
        return Err(Error::InsufficientPrecision { given: f.precision(), required });
    }
    if a.precision() < required {
        return Err(Error::InsufficientExponentPrecision {
            given: a.precision(),
            required,
            degree: d_max,
        });
    }
    let work = f.precision().min(a.precision());
    let ring = Zp::new(prime, work);
    let mut g = MultiSeries::zero(ring.clone(), 1, d_max);
    g.set_term(vec![1], a.reduce_precision(work));

    for d in 2..=d_max {
        let lhs = g.substitute(&[f])?;
        let rhs = f.substitute(&[&g])?;
        let defect = lhs.sub(&rhs)?;
        for (exp, coeff) in defect.terms() {
            if exp[0] as usize != d {
                continue;
            }
            let c = solve_step(prime, d, coeff)?;
            g.set_term(exp.clone(), c);
        }
    }
    let mut out = reduce_series(&g, precision);
    out.mark_truncated();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::cyclotomic_minpoly;
    use crate::padic::{rat, Valuation};

    fn inv_mod(prime: u64, precision: u32, v: i64) -> PadicApprox {
        PadicApprox::from_i64(prime, precision, v).invert().unwrap()
    }

    #[test]
    fn cyclotomic_law_is_multiplicative() {
        let g = LtGroup::new(3, 8, 6, LtKind::Cyclotomic).unwrap();
        let law = g.group_law();
        assert_eq!(law.coeff(&[1, 0]), PadicApprox::one(3, 8));
        assert_eq!(law.coeff(&[0, 1]), PadicApprox::one(3, 8));
        assert_eq!(law.coeff(&[1, 1]), PadicApprox::one(3, 8));
        assert_eq!(law.term_count(), 3);
        assert!(!law.is_truncated());
    }

    #[test]
    fn generic_solver_recovers_multiplicative_law() {
        // Dual route: the degree-by-degree solver on (1+X)^p - 1 must
        // reproduce X + Y + XY on the whole window.
        for p in [2u64, 3] {
            let model = int_model(p, &LtKind::Cyclotomic).unwrap();
            let f = series_from_int_poly(p, 8 + 8, 8, &model);
            let law = solve_group_law(&f, 8).unwrap();
            let expect = multiplicative_law(p, 8, 8);
            assert!(same_window(&law, &expect), "p = {}", p);
            // The solver only certifies the window, so its output is
            // truncated even when the true law happens to terminate.
            assert!(law.is_truncated());
        }
    }

    #[test]
    fn generic_solver_recovers_binomial_bracket() {
        let p = 3u64;
        let model = int_model(p, &LtKind::Cyclotomic).unwrap();
        let f = series_from_int_poly(p, 16, 8, &model);
        let a = PadicApprox::from_u64(p, 16, 5);
        let got = solve_bracket(&f, &a, 8).unwrap();
        let one = MultiSeries::one(Zp::new(p, 8), 1, 8);
        let expect = binomial_series_int(p, 8, 5, 8).sub(&one).unwrap();
        assert!(same_window(&got, &expect));
    }

    #[test]
    fn standard_law_degree_three_coefficients() {
        // For f = 3X + X^3 the first correction is (X^2 Y + X Y^2) / 8.
        let g = LtGroup::new(3, 10, 6, LtKind::Standard).unwrap();
        let law = g.group_law();
        let eighth = inv_mod(3, 10, 8);
        assert!(law.coeff(&[2, 0]).is_zero());
        assert!(law.coeff(&[1, 1]).is_zero());
        assert!(law.coeff(&[0, 2]).is_zero());
        assert_eq!(law.coeff(&[2, 1]), eighth);
        assert_eq!(law.coeff(&[1, 2]), eighth);
    }

    #[test]
    fn standard_doubling_degree_three_coefficient() {
        // [2] for f = 3X + X^3: cubic coefficient (2 - 2^3)/(3 - 3^3) = 1/4.
        let g = LtGroup::new(3, 10, 6, LtKind::Standard).unwrap();
        let two = g.bracket_int(2).unwrap();
        assert_eq!(two.coeff(&[1]), PadicApprox::from_u64(3, 10, 2));
        assert!(two.coeff(&[2]).is_zero());
        assert_eq!(two.coeff(&[3]), inv_mod(3, 10, 4));
    }

    #[test]
    fn standard_two_adic_law_is_multiplicative() {
        // At p = 2 the standard series IS the cyclotomic one.
        let g = LtGroup::new(2, 9, 7, LtKind::Standard).unwrap();
        assert!(same_window(g.group_law(), &multiplicative_law(2, 9, 7)));
    }

    #[test]
    fn unit_and_p_brackets() {
        for kind in [LtKind::Cyclotomic, LtKind::Standard] {
            let g = LtGroup::new(3, 8, 6, kind).unwrap();
            let one = g.bracket_int(1).unwrap();
            let x = MultiSeries::variable(Zp::new(3, 8), 1, 6, 0);
            assert!(same_window(&one, &x));
            let p = g.bracket_int(3).unwrap();
            assert!(same_window(&p, g.f()));
        }
    }

    #[test]
    fn axiom_sweep_on_both_builtin_kinds() {
        for kind in [LtKind::Cyclotomic, LtKind::Standard] {
            let g = LtGroup::new(3, 6, 5, kind).unwrap();
            let report = g.verify_axioms(4, 17).unwrap();
            assert!(report.all_passed(), "{:?}", report);
        }
    }

    #[test]
    fn torsion_minpoly_matches_cyclotomic_route() {
        // f-iteration quotient vs direct Phi_{p^k}(1+X): exact equality.
        let g = LtGroup::new(3, 8, 6, LtKind::Cyclotomic).unwrap();
        for k in 1..=3u32 {
            assert_eq!(g.torsion_minpoly(k).unwrap(), cyclotomic_minpoly(3, k).unwrap());
        }
        let g2 = LtGroup::new(2, 8, 6, LtKind::Cyclotomic).unwrap();
        assert_eq!(g2.torsion_minpoly(2).unwrap(), cyclotomic_minpoly(2, 2).unwrap());
    }

    #[test]
    fn standard_torsion_minpoly_level_one() {
        let g = LtGroup::new(3, 8, 6, LtKind::Standard).unwrap();
        let m = g.torsion_minpoly(1).unwrap();
        assert_eq!(m, vec![BigInt::from(3), BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn standard_torsion_tower_valuations() {
        let g = LtGroup::new(3, 10, 6, LtKind::Standard).unwrap();
        for k in 1..=3u32 {
            let lam = g.torsion_point(k, 10).unwrap();
            let e = 3i64.pow(k - 1) * 2;
            assert_eq!(lam.valuation(), Valuation::Exact(rat(1, e)));
            // f^(k) kills the point; f^(k-1) sends it one level down.
            let killed = lam.eval_int_poly(&g.iterate_f(k).unwrap());
            assert_eq!(killed.valuation(), Valuation::AtLeast(rat(10, 1)));
            if k >= 2 {
                let dropped = lam.eval_int_poly(&g.int_model().unwrap());
                let e_down = 3i64.pow(k - 2) * 2;
                assert_eq!(dropped.valuation(), Valuation::Exact(rat(1, e_down)));
            }
        }
    }

    #[test]
    fn custom_series_is_validated() {
        let p = 3u64;
        let work = 6 + 4; // precision 6, degree bound 4
        let ring = Zp::new(p, work);
        let mk = |terms: &[(u32, i64)]| {
            MultiSeries::from_terms(
                ring.clone(),
                1,
                4,
                terms
                    .iter()
                    .map(|&(e, c)| (vec![e], PadicApprox::from_i64(p, work, c))),
                false,
            )
            .unwrap()
        };
        // Valid: 3X + 3X^2 + X^3.
        let good = mk(&[(1, 3), (2, 3), (3, 1)]);
        let g = LtGroup::new(p, 6, 4, LtKind::Custom(good)).unwrap();
        assert!(g.verify_axioms(2, 5).unwrap().all_passed());
        // Wrong linear term.
        let bad = mk(&[(1, 1), (3, 1)]);
        assert!(matches!(
            LtGroup::new(p, 6, 4, LtKind::Custom(bad)),
            Err(Error::InvalidGroupLaw(_))
        ));
        // Unit coefficient off the X^p slot.
        let bad = mk(&[(1, 3), (2, 1), (3, 1)]);
        assert!(matches!(
            LtGroup::new(p, 6, 4, LtKind::Custom(bad)),
            Err(Error::InvalidGroupLaw(_))
        ));
        // Constant term.
        let bad = mk(&[(0, 3), (1, 3), (3, 1)]);
        assert!(matches!(
            LtGroup::new(p, 6, 4, LtKind::Custom(bad)),
            Err(Error::InvalidGroupLaw(_))
        ));
        // Not enough digits for the requested precision.
        let shallow_ring = Zp::new(p, 7);
        let shallow = MultiSeries::from_terms(
            shallow_ring,
            1,
            4,
            [(vec![1], PadicApprox::from_i64(p, 7, 3)), (vec![3], PadicApprox::from_i64(p, 7, 1))],
            false,
        )
        .unwrap();
        assert!(matches!(
            LtGroup::new(p, 6, 4, LtKind::Custom(shallow)),
            Err(Error::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn custom_torsion_tower_is_rejected() {
        let p = 3u64;
        let ring = Zp::new(p, 10);
        let f = MultiSeries::from_terms(
            ring,
            1,
            4,
            [(vec![1], PadicApprox::from_i64(p, 10, 3)), (vec![3], PadicApprox::from_i64(p, 10, 1))],
            false,
        )
        .unwrap();
        let g = LtGroup::new(p, 6, 4, LtKind::Custom(f)).unwrap();
        assert!(matches!(g.torsion_minpoly(1), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn bracket_demands_working_precision() {
        let g = LtGroup::new(3, 8, 6, LtKind::Standard).unwrap();
        let a = PadicApprox::from_u64(3, 10, 7); // needs 14
        assert!(matches!(
            g.bracket(&a),
            Err(Error::InsufficientExponentPrecision { required: 14, .. })
        ));
    }
}
