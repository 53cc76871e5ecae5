//! Truncated multivariate power series over p-adic coefficient rings.
//!
//! A [`MultiSeries`] stores the terms of total degree <= D of a power
//! series in n variables, sparsely, with all coefficients at one shared
//! precision.  The `truncated` flag records whether terms above D may
//! exist: polynomials constructed term-by-term keep exact tails (they
//! have none), while binomial series and inverses are honest truncations.
//! Evaluation at points of positive valuation reports a certified
//! ceiling; no claim is ever made past min(p^N, the truncation tail).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::{CoeffRing, Fp, Zp};
use crate::eisenstein::RingElement;
use crate::error::{Error, Result};
use crate::padic::{factorial_valuation, rat, PadicApprox, Rat, Valuation};

/// Sparse truncated power series; see the module docs.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiSeries<R: CoeffRing> {
    ring: R,
    nvars: usize,
    degree_bound: usize,
    /// Exponent vector -> nonzero coefficient; keys have length `nvars`
    /// and total degree <= `degree_bound`.
    terms: BTreeMap<Vec<u32>, R::Elem>,
    /// True when terms of degree > `degree_bound` may be nonzero.
    truncated: bool,
}

impl<R: CoeffRing> MultiSeries<R> {
    pub fn zero(ring: R, nvars: usize, degree_bound: usize) -> Self {
        assert!(nvars >= 1, "series need at least one variable");
        assert!(degree_bound >= 1, "degree bound must be positive");
        MultiSeries {
            ring,
            nvars,
            degree_bound,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn constant(ring: R, nvars: usize, degree_bound: usize, value: R::Elem) -> Self {
        let mut s = Self::zero(ring, nvars, degree_bound);
        s.set_term(vec![0; nvars], value);
        s
    }

    pub fn one(ring: R, nvars: usize, degree_bound: usize) -> Self {
        let value = ring.one();
        Self::constant(ring, nvars, degree_bound, value)
    }

    /// The monomial X_var.
    pub fn variable(ring: R, nvars: usize, degree_bound: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        let one = ring.one();
        let mut s = Self::zero(ring, nvars, degree_bound);
        let mut exp = vec![0u32; nvars];
        exp[var] = 1;
        s.set_term(exp, one);
        s
    }

    /// Build from explicit terms; exact (no tail) unless `truncated`.
    pub fn from_terms(
        ring: R,
        nvars: usize,
        degree_bound: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, R::Elem)>,
        truncated: bool,
    ) -> Result<Self> {
        let mut s = Self::zero(ring, nvars, degree_bound);
        s.truncated = truncated;
        for (exp, coeff) in terms {
            if exp.len() != nvars {
                return Err(Error::ShapeMismatch(format!(
                    "exponent vector of length {} in a {}-variable series",
                    exp.len(),
                    nvars
                )));
            }
            if total_degree(&exp) > degree_bound {
                return Err(Error::ShapeMismatch(format!(
                    "term of degree {} above the bound {}",
                    total_degree(&exp),
                    degree_bound
                )));
            }
            let prev = s.coeff(&exp);
            s.set_term(exp, s.ring.add(&prev, &coeff));
        }
        Ok(s)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn prime(&self) -> u64 {
        self.ring.prime()
    }

    pub fn precision(&self) -> u32 {
        self.ring.precision()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub(crate) fn mark_truncated(&mut self) {
        self.truncated = true;
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R::Elem)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// All stored terms are zero.  (A truncated series may still hide a
    /// nonzero tail; this only inspects the stored window.)
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> R::Elem {
        self.terms.get(exp).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&vec![0; self.nvars])
    }

    /// Largest total degree with a stored term.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|e| total_degree(e)).max().unwrap_or(0)
    }

    pub(crate) fn set_term(&mut self, exp: Vec<u32>, value: R::Elem) {
        debug_assert_eq!(exp.len(), self.nvars);
        debug_assert!(total_degree(&exp) <= self.degree_bound);
        if self.ring.is_zero(&value) {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, value);
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                "series coefficients live in different rings".into(),
            ));
        }
        if self.nvars != other.nvars || self.degree_bound != other.degree_bound {
            return Err(Error::ShapeMismatch(format!(
                "({} vars, degree {}) vs ({} vars, degree {})",
                self.nvars, self.degree_bound, other.nvars, other.degree_bound
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.truncated = self.truncated || other.truncated;
        for (exp, coeff) in &other.terms {
            let prev = out.coeff(exp);
            out.set_term(exp.clone(), self.ring.add(&prev, coeff));
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        let terms = std::mem::take(&mut out.terms);
        for (exp, coeff) in terms {
            out.terms.insert(exp, self.ring.neg(&coeff));
        }
        out
    }

    pub fn scalar_mul(&self, scalar: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.nvars, self.degree_bound);
        out.truncated = self.truncated;
        for (exp, coeff) in &self.terms {
            out.set_term(exp.clone(), self.ring.mul(coeff, scalar));
        }
        out
    }

    /// Truncating product.  Any term pair spilling past the degree bound
    /// marks the result as a truncation.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.ring.clone(), self.nvars, self.degree_bound);
        out.truncated = self.truncated || other.truncated;
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for (eb, cb) in &other.terms {
                if da + total_degree(eb) > self.degree_bound {
                    out.truncated = true;
                    continue;
                }
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let prev = out.coeff(&exp);
                out.set_term(exp, self.ring.add(&prev, &self.ring.mul(ca, cb)));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u64) -> Result<Self> {
        let mut acc = Self::one(self.ring.clone(), self.nvars, self.degree_bound);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Compose: substitute `targets[i]` for variable i.  Every target must
    /// have zero constant term, so that each output coefficient is a
    /// finite sum and the stored window stays exact.
    pub fn substitute<'a>(&self, targets: &[&'a MultiSeries<R>]) -> Result<MultiSeries<R>> {
        if targets.len() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "{} substitution targets for {} variables",
                targets.len(),
                self.nvars
            )));
        }
        let first = targets
            .first()
            .ok_or_else(|| Error::ShapeMismatch("no substitution targets".into()))?;
        for (i, g) in targets.iter().enumerate() {
            g.check_shape(first)?;
            if g.ring != self.ring {
                return Err(Error::RingMismatch(
                    "substitution targets over a different coefficient ring".into(),
                ));
            }
            if !self.ring.is_zero(&g.constant_term()) {
                return Err(Error::NonzeroConstantTerm { var: i });
            }
        }
        let out_vars = first.nvars;
        let bound = first.degree_bound;
        let mut out = MultiSeries::zero(self.ring.clone(), out_vars, bound);
        out.truncated = self.truncated;

        // Powers of each target, grown lazily to the exponents in use.
        let mut powers: Vec<Vec<MultiSeries<R>>> = targets
            .iter()
            .map(|g| vec![MultiSeries::one(self.ring.clone(), out_vars, bound), (*g).clone()])
            .collect();
        for (exp, coeff) in &self.terms {
            let mut prod = MultiSeries::constant(self.ring.clone(), out_vars, bound, coeff.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&powers[i][1])?;
                    powers[i].push(next);
                }
                prod = prod.mul(&powers[i][e as usize])?;
            }
            if prod.truncated {
                out.truncated = true;
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// Relabel variables: the result reads variable `perm[i]` where the
    /// original read its i-th argument.  `perm` must be a permutation.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.nvars {
            return Err(Error::ShapeMismatch("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.nvars];
        for &p in perm {
            if p >= self.nvars || seen[p] {
                return Err(Error::ShapeMismatch("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut out = Self::zero(self.ring.clone(), self.nvars, self.degree_bound);
        out.truncated = self.truncated;
        for (exp, coeff) in &self.terms {
            let mut new_exp = vec![0u32; self.nvars];
            for (i, &e) in exp.iter().enumerate() {
                new_exp[perm[i]] = e;
            }
            out.set_term(new_exp, coeff.clone());
        }
        Ok(out)
    }

    /// Spread a one-variable series onto variable `var` of an n-variable
    /// series.
    pub fn promote(&self, nvars: usize, var: usize) -> Result<MultiSeries<R>> {
        if self.nvars != 1 {
            return Err(Error::ShapeMismatch("promote expects one variable".into()));
        }
        assert!(var < nvars);
        let mut out = MultiSeries::zero(self.ring.clone(), nvars, self.degree_bound);
        out.truncated = self.truncated;
        for (exp, coeff) in &self.terms {
            let mut new_exp = vec![0u32; nvars];
            new_exp[var] = exp[0];
            out.set_term(new_exp, coeff.clone());
        }
        Ok(out)
    }

    /// Reduce coefficients modulo the maximal ideal; the result lives over
    /// the residue field F_p.
    pub fn reduce_mod_pi(&self) -> MultiSeries<Fp> {
        let fp = Fp { prime: self.ring.prime() };
        let mut out = MultiSeries::zero(fp.clone(), self.nvars, self.degree_bound);
        out.truncated = self.truncated;
        for (exp, coeff) in &self.terms {
            let r = self.ring.residue(coeff);
            if r != 0 {
                out.set_term(exp.clone(), r);
            }
        }
        out
    }

    /// Largest M with X_var^M dividing the series mod pi, together with a
    /// cofactor psi satisfying self = X_var^M * psi (mod pi, up to the
    /// degree bound).  Terms not divisible by X_var^M are pi-multiples by
    /// maximality and stay out of psi.
    pub fn factor_out_variable(&self, var: usize) -> Result<(usize, MultiSeries<R>)> {
        assert!(var < self.nvars, "variable index out of range");
        let reduced = self.reduce_mod_pi();
        if reduced.is_zero() {
            return Err(Error::ZeroModP);
        }
        let m = reduced
            .terms
            .keys()
            .map(|e| e[var])
            .min()
            .expect("nonzero reduction has terms") as usize;
        let mut psi = Self::zero(self.ring.clone(), self.nvars, self.degree_bound);
        psi.truncated = self.truncated;
        for (exp, coeff) in &self.terms {
            if (exp[var] as usize) < m {
                // pi-multiple; belongs to the remainder, not the cofactor.
                continue;
            }
            let mut new_exp = exp.clone();
            new_exp[var] -= m as u32;
            psi.set_term(new_exp, coeff.clone());
        }
        Ok((m, psi))
    }

    /// Smallest degree of a one-variable series whose coefficient is a
    /// unit, if any.
    pub fn unit_order(&self) -> Option<usize> {
        assert_eq!(self.nvars, 1, "unit_order expects one variable");
        self.terms
            .iter()
            .filter(|(_, c)| self.ring.is_unit(c))
            .map(|(e, _)| e[0] as usize)
            .min()
    }

    /// Evaluate at a point of an Eisenstein ring, every coordinate inside
    /// the open unit polydisk.  The result carries a certified ceiling:
    /// the sum of stored terms is exact mod p^N, and if the series is a
    /// truncation the unseen tail has valuation > (D+1) * min coordinate
    /// valuation, so nothing past min(N, (D+1)*min_val) is claimed.
    pub fn evaluate(&self, point: &[RingElement]) -> Result<Evaluation> {
        if point.len() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let target = point[0].ring().clone();
        if target.prime() != self.ring.prime() {
            return Err(Error::RingMismatch("point over a different prime".into()));
        }
        let mut min_val: Option<Rat> = None;
        for (i, coord) in point.iter().enumerate() {
            if !coord.same_ring(&point[0]) {
                return Err(Error::RingMismatch(
                    "point coordinates live in different rings".into(),
                ));
            }
            let bound = coord.valuation().bound();
            if coord.valuation().certified_gt(rat(0, 1)) != Some(true) {
                return Err(Error::PointNotInDisk { index: i });
            }
            min_val = Some(min_val.map_or(bound, |m: Rat| m.min(bound)));
        }
        let n_rat = Rat::from_integer(self.ring.precision() as i64);
        let ceiling = if self.truncated {
            let mv = min_val.expect("at least one coordinate");
            n_rat.min(Rat::from_integer(self.degree_bound as i64 + 1) * mv)
        } else {
            n_rat
        };

        let mut powers: Vec<Vec<RingElement>> = point
            .iter()
            .map(|c| vec![RingElement::one(&target), c.clone()])
            .collect();
        let mut acc = RingElement::zero(&target);
        for (exp, coeff) in &self.terms {
            let mut term = self.ring.embed_in(coeff, &target)?;
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_raw(&point[i]);
                    powers[i].push(next);
                }
                term = term.mul_raw(&powers[i][e as usize]);
            }
            acc = acc.add_raw(&term);
        }
        Ok(Evaluation { value: acc, ceiling })
    }
}

impl MultiSeries<Zp> {
    /// Inverse of a series with unit constant term, as a truncation.
    pub fn invert(&self) -> Result<MultiSeries<Zp>> {
        let c = self.constant_term();
        if !c.is_unit() {
            return Err(Error::InexactDivision(
                "constant term is not a unit".into(),
            ));
        }
        let c_inv = c.invert()?;
        let mut w = self.clone();
        w.set_term(vec![0; self.nvars], self.ring.zero());
        let w_scaled = w.scalar_mul(&c_inv).neg();
        let mut acc = MultiSeries::one(self.ring.clone(), self.nvars, self.degree_bound);
        let mut power = MultiSeries::one(self.ring.clone(), self.nvars, self.degree_bound);
        for _ in 0..self.degree_bound {
            power = power.mul(&w_scaled)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        let mut out = acc.scalar_mul(&c_inv);
        if !w.is_zero() || self.truncated {
            out.truncated = true;
        }
        Ok(out)
    }
}

fn var_name(nvars: usize, i: usize) -> String {
    match (nvars, i) {
        (1, 0) | (2, 0) => "X".into(),
        (2, 1) => "Y".into(),
        _ => format!("X{}", i + 1),
    }
}

/// Human-oriented form with balanced coefficient representatives, so the
/// residue of -3 prints as -3.  The serialized form lives elsewhere.
impl std::fmt::Display for MultiSeries<Zp> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        let modulus = crate::padic::pow_biguint(self.prime(), self.precision());
        let half = &modulus / 2u32;
        for (n, (exp, coeff)) in self.terms.iter().enumerate() {
            let value = coeff.value();
            let (sign, magnitude) = if value > &half {
                ("-", (&modulus - value).to_string())
            } else {
                ("+", value.to_string())
            };
            if n == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let monomial: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let v = var_name(self.nvars, i);
                    if e == 1 { v } else { format!("{}^{}", v, e) }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{}", magnitude)?;
            } else if magnitude == "1" {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", magnitude, monomial.join("*"))?;
            }
        }
        if self.truncated {
            write!(f, " + O(deg > {})", self.degree_bound)?;
        }
        Ok(())
    }
}

/// Result of evaluating a series: the accumulated ring element and the
/// ceiling below which its valuation is certified.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub value: RingElement,
    pub ceiling: Rat,
}

impl Evaluation {
    /// Certified valuation: exact values below the ceiling stay exact,
    /// everything else collapses to a lower bound.
    pub fn certified_valuation(&self) -> Valuation {
        self.value.valuation().capped(self.ceiling)
    }

    /// Weaken the ceiling (e.g. by the precision of an embedded point).
    pub fn cap_ceiling(&mut self, extra: Rat) {
        if extra < self.ceiling {
            self.ceiling = extra;
        }
    }
}

/// Map a base-ring series into any coefficient ring over the same prime.
pub fn map_series<R: CoeffRing>(ring: &R, s: &MultiSeries<Zp>) -> Result<MultiSeries<R>> {
    let mut out = MultiSeries::zero(ring.clone(), s.nvars(), s.degree_bound());
    if s.is_truncated() {
        out.mark_truncated();
    }
    for (exp, coeff) in s.terms() {
        out.set_term(exp.clone(), ring.from_padic(coeff)?);
    }
    Ok(out)
}

/// (1+X)^m for a p-adic exponent known mod p^M, as a truncation to degree
/// D.  Binomial coefficients C(m, i) for i <= D are determined mod
/// p^(M - v_p(i!)), so M >= N + v_p(D!) is required for N certified
/// digits; the incremental quotient below realizes exactly that loss.
pub fn binomial_series(
    exponent: &PadicApprox,
    degree_bound: usize,
    precision: u32,
) -> Result<MultiSeries<Zp>> {
    let p = exponent.prime();
    let required = precision + factorial_valuation(p, degree_bound);
    if exponent.precision() < required {
        return Err(Error::InsufficientExponentPrecision {
            given: exponent.precision(),
            required,
            degree: degree_bound,
        });
    }
    let ring = Zp::new(p, precision);
    let mut out = MultiSeries::zero(ring, 1, degree_bound);
    out.mark_truncated();
    let mut c = PadicApprox::one(p, exponent.precision());
    out.set_term(vec![0], c.reduce_precision(precision));
    for i in 1..=degree_bound {
        let factor = exponent.sub(&PadicApprox::from_u64(p, exponent.precision(), (i - 1) as u64));
        c = c.mul(&factor);
        // Divide by i = p^v * unit: v exact divisions, then a unit inverse.
        let mut rest = i as u64;
        while rest % p == 0 {
            c = c.div_exact_p()?;
            rest /= p;
        }
        if rest > 1 {
            let unit = PadicApprox::from_u64(p, c.precision(), rest);
            c = c.mul(&unit.invert()?);
        }
        debug_assert!(c.precision() >= precision);
        out.set_term(vec![i as u32], c.reduce_precision(precision));
    }
    Ok(out)
}

/// (1+X)^m for an exact integer exponent (negative allowed).  Coefficients
/// are exact integer binomials; the result is a polynomial when
/// 0 <= m <= D and a truncation otherwise.
pub fn binomial_series_int(
    prime: u64,
    precision: u32,
    exponent: i64,
    degree_bound: usize,
) -> MultiSeries<Zp> {
    let ring = Zp::new(prime, precision);
    let mut out = MultiSeries::zero(ring, 1, degree_bound);
    let mut c = BigInt::one();
    out.set_term(vec![0], PadicApprox::one(prime, precision));
    let m = BigInt::from(exponent);
    for i in 1..=degree_bound {
        c *= &m - BigInt::from(i as i64 - 1);
        let d = BigInt::from(i as i64);
        debug_assert!((&c % &d).is_zero());
        c /= d;
        out.set_term(vec![i as u32], PadicApprox::from_bigint(prime, precision, &c));
    }
    if exponent < 0 || exponent as usize > degree_bound {
        out.mark_truncated();
    }
    out
}

/// A unitriangular multiplicative change of variables with an explicit
/// permutation part: first relabel variables, then substitute
/// X_i -> (1+X_i) * prod_{j<i} (1+X_j)^(B_ij) - 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ChangeOfVariables {
    prime: u64,
    nvars: usize,
    modulus_exp: u32,
    perm: Vec<usize>,
    /// (i, j) with j < i -> exponent residue mod p^modulus_exp.
    entries: BTreeMap<(usize, usize), PadicApprox>,
}

impl ChangeOfVariables {
    pub fn identity(prime: u64, nvars: usize, modulus_exp: u32) -> Self {
        ChangeOfVariables {
            prime,
            nvars,
            modulus_exp,
            perm: (0..nvars).collect(),
            entries: BTreeMap::new(),
        }
    }

    pub fn with_permutation(mut self, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != self.nvars {
            return Err(Error::ShapeMismatch("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.nvars];
        for &p in &perm {
            if p >= self.nvars || seen[p] {
                return Err(Error::ShapeMismatch("not a permutation".into()));
            }
            seen[p] = true;
        }
        self.perm = perm;
        Ok(self)
    }

    /// Set B_ij (strictly lower triangular: j < i).
    pub fn with_entry(mut self, i: usize, j: usize, value: PadicApprox) -> Result<Self> {
        if j >= i || i >= self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "entry ({}, {}) is not strictly lower triangular",
                i, j
            )));
        }
        if value.prime() != self.prime {
            return Err(Error::RingMismatch("exponent over a different prime".into()));
        }
        let reduced = if value.precision() > self.modulus_exp {
            value.reduce_precision(self.modulus_exp)
        } else if value.precision() == self.modulus_exp {
            value
        } else {
            return Err(Error::InsufficientExponentPrecision {
                given: value.precision(),
                required: self.modulus_exp,
                degree: 0,
            });
        };
        if !reduced.is_zero() {
            self.entries.insert((i, j), reduced);
        }
        self.entries.retain(|_, v| !v.is_zero());
        Ok(self)
    }

    pub fn with_entry_i64(self, i: usize, j: usize, value: i64) -> Result<Self> {
        let v = PadicApprox::from_i64(self.prime, self.modulus_exp, value);
        self.with_entry(i, j, v)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn modulus_exp(&self) -> u32 {
        self.modulus_exp
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &PadicApprox)> {
        self.entries.iter()
    }

    pub fn entry(&self, i: usize, j: usize) -> PadicApprox {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| PadicApprox::zero(self.prime, self.modulus_exp))
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty() && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Apply to a series: permutation first, then the unitriangular
    /// substitution.  Exponent residues must carry enough digits for the
    /// binomial expansions at this degree bound.
    pub fn apply_to_series<R: CoeffRing>(&self, series: &MultiSeries<R>) -> Result<MultiSeries<R>> {
        if series.nvars() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "change of variables on {} variables applied to {}-variable series",
                self.nvars,
                series.nvars()
            )));
        }
        if series.prime() != self.prime {
            return Err(Error::RingMismatch("series over a different prime".into()));
        }
        let permuted = series.permute_vars(&self.perm)?;
        if self.entries.is_empty() {
            return Ok(permuted);
        }
        let n = self.nvars;
        let d = series.degree_bound();
        let ring = series.ring().clone();
        let one = MultiSeries::one(ring.clone(), n, d);
        let mut targets = Vec::with_capacity(n);
        for i in 0..n {
            // (1+X_i) * prod_{j<i} (1+X_j)^(B_ij) - 1.
            let xi = MultiSeries::variable(ring.clone(), n, d, i);
            let mut prod = one.add(&xi)?;
            for j in 0..i {
                if let Some(b) = self.entries.get(&(i, j)) {
                    let binom = binomial_series(b, d, ring.precision())?;
                    let factor = map_series(&ring, &binom)?.promote(n, j)?;
                    prod = prod.mul(&factor)?;
                }
            }
            targets.push(prod.sub(&one)?);
        }
        let refs: Vec<&MultiSeries<R>> = targets.iter().collect();
        permuted.substitute(&refs)
    }

    /// Inverse transform.  Supported when one of the two parts is trivial;
    /// a mixed inverse is not expressible in this normal form.
    pub fn inverse(&self) -> Result<ChangeOfVariables> {
        let perm_trivial = self.perm.iter().enumerate().all(|(i, &p)| i == p);
        if perm_trivial {
            // (I + B)^(-1) = I + sum_{t>=1} (-B)^t, exact since B is
            // nilpotent; entries stay strictly lower triangular.
            let n = self.nvars;
            let zero = PadicApprox::zero(self.prime, self.modulus_exp);
            let at = |m: &Vec<Vec<PadicApprox>>, i: usize, j: usize| m[i][j].clone();
            let mut b = vec![vec![zero.clone(); n]; n];
            for ((i, j), v) in &self.entries {
                b[*i][*j] = v.clone();
            }
            let mut acc = vec![vec![zero.clone(); n]; n];
            let mut power = b.clone();
            let mut sign_neg = true;
            for _ in 1..n.max(2) {
                for i in 0..n {
                    for j in 0..i {
                        let term = if sign_neg {
                            at(&power, i, j).neg()
                        } else {
                            at(&power, i, j)
                        };
                        acc[i][j] = acc[i][j].add(&term);
                    }
                }
                // power <- power * B
                let mut next = vec![vec![zero.clone(); n]; n];
                for i in 0..n {
                    for j in 0..i {
                        let mut s = zero.clone();
                        for k in 0..n {
                            s = s.add(&power[i][k].mul(&b[k][j]));
                        }
                        next[i][j] = s;
                    }
                }
                power = next;
                sign_neg = !sign_neg;
            }
            let mut out = ChangeOfVariables::identity(self.prime, n, self.modulus_exp);
            for i in 0..n {
                for j in 0..i {
                    if !acc[i][j].is_zero() {
                        out = out.with_entry(i, j, acc[i][j].clone())?;
                    }
                }
            }
            return Ok(out);
        }
        if self.entries.is_empty() {
            let mut inv_perm = vec![0usize; self.nvars];
            for (i, &p) in self.perm.iter().enumerate() {
                inv_perm[p] = i;
            }
            return ChangeOfVariables::identity(self.prime, self.nvars, self.modulus_exp)
                .with_permutation(inv_perm);
        }
        Err(Error::InvalidConfig(
            "inverse of a mixed permutation/exponent transform is not in normal form".into(),
        ))
    }
}

pub(crate) fn total_degree(exp: &[u32]) -> usize {
    exp.iter().map(|&e| e as usize).sum()
}
