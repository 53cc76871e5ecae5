//! Symbolic torsion points, their ring embeddings, and ideal scans.
//!
//! A p-power torsion point of a formal group is carried symbolically as a
//! level k and a unit exponent u mod p^k: the point [u](lambda_k) for the
//! canonical primitive level-k point lambda_k.  Group operations on these
//! pairs are exact integer arithmetic; nothing is lost until a point is
//! embedded into an Eisenstein ring, where the multiplicative model embeds
//! exactly and the generic model goes through bracket series with an
//! explicit accuracy ceiling.
//!
//! Scans evaluate ideal generators at every tuple up to a level bound and
//! classify each tuple by certified comparisons only: a tuple is never
//! silently declared inside or outside a valuation neighborhood when the
//! arithmetic cannot decide it.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};

use crate::coeff::Zp;
use crate::eisenstein::{EisensteinRing, RingElement};
use crate::error::{Error, Result};
use crate::lubin_tate::{LtGroup, LtKind};
use crate::padic::{rat, PadicApprox, Rat, Valuation};
use crate::series::{ChangeOfVariables, MultiSeries};

/// A p^k-torsion point in canonical form: the origin is level 0, and a
/// level-k point (k >= 1) has a unit exponent 1 <= u < p^k.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionPoint {
    prime: u64,
    level: u32,
    exponent: u64,
}

fn level_modulus(prime: u64, level: u32) -> Result<u64> {
    prime
        .checked_pow(level)
        .ok_or(Error::LevelTooDeep { level, max: 39 })
}

impl TorsionPoint {
    pub fn origin(prime: u64) -> Self {
        TorsionPoint { prime, level: 0, exponent: 0 }
    }

    /// The canonical primitive level-k point [1](lambda_k).
    pub fn primitive(prime: u64, level: u32) -> Result<Self> {
        Self::from_raw(prime, level, 1)
    }

    /// Canonicalize an arbitrary exponent at a level: divisibility by p
    /// drops levels, zero drops to the origin.
    pub fn from_raw(prime: u64, level: u32, exponent: u64) -> Result<Self> {
        assert!(prime >= 2);
        let modulus = level_modulus(prime, level)?;
        let mut level = level;
        let mut e = if level == 0 { 0 } else { exponent % modulus };
        if e == 0 {
            return Ok(Self::origin(prime));
        }
        while level > 0 && e % prime == 0 {
            e /= prime;
            level -= 1;
        }
        if level == 0 || e == 0 {
            return Ok(Self::origin(prime));
        }
        Ok(TorsionPoint { prime, level, exponent: e })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_origin(&self) -> bool {
        self.level == 0
    }

    fn check_prime(&self, other: &Self) {
        assert_eq!(self.prime, other.prime, "torsion points over different primes");
    }

    /// Formal group addition, exact on symbolic exponents.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_prime(other);
        let level = self.level.max(other.level);
        let modulus = level_modulus(self.prime, level)? as u128;
        let lift = |p: &Self| {
            let shift = self.prime.pow(level - p.level) as u128;
            (p.exponent as u128) * shift % modulus
        };
        let e = (lift(self) + lift(other)) % modulus;
        Self::from_raw(self.prime, level, e as u64)
    }

    pub fn neg(&self) -> Self {
        if self.is_origin() {
            return self.clone();
        }
        let modulus = level_modulus(self.prime, self.level).expect("stored level fits");
        TorsionPoint {
            prime: self.prime,
            level: self.level,
            exponent: modulus - self.exponent,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// The endomorphism [m]; multiples of p drop levels.
    pub fn mul_int(&self, m: i64) -> Result<Self> {
        if self.is_origin() {
            return Ok(self.clone());
        }
        let modulus = level_modulus(self.prime, self.level)? as i128;
        let e = (self.exponent as i128 * m as i128).rem_euclid(modulus);
        Self::from_raw(self.prime, self.level, e as u64)
    }

    /// Multiply by a residue (already reduced anywhere past this level).
    pub fn mul_residue(&self, m: &PadicApprox) -> Result<Self> {
        assert_eq!(self.prime, m.prime(), "residue over a different prime");
        if self.is_origin() {
            return Ok(self.clone());
        }
        if m.precision() < self.level {
            return Err(Error::InsufficientExponentPrecision {
                given: m.precision(),
                required: self.level,
                degree: 0,
            });
        }
        let modulus = level_modulus(self.prime, self.level)? as u128;
        let r = (m.value() % BigUint::from(modulus)).to_u64_digits();
        let r = r.first().copied().unwrap_or(0) as u128;
        let e = (self.exponent as u128 * r) % modulus;
        Self::from_raw(self.prime, self.level, e as u64)
    }

    /// Discrete logarithm: the residue e mod p^(base level) with
    /// [e](base) = self, when base is deep enough.
    pub fn dlog(&self, base: &Self) -> Option<PadicApprox> {
        self.check_prime(base);
        if base.is_origin() || self.level > base.level {
            return None;
        }
        let kb = base.level;
        let p = self.prime;
        let u_base = PadicApprox::from_u64(p, kb, base.exponent);
        let inv = u_base.invert().ok()?;
        let shift = level_modulus(p, kb - self.level).ok()?;
        let lifted = PadicApprox::from_u64(p, kb, self.exponent)
            .mul(&PadicApprox::from_u64(p, kb, shift));
        Some(lifted.mul(&inv))
    }
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.level, self.exponent)
    }
}

/// A tuple of torsion points, one per ambient variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionTuple {
    points: Vec<TorsionPoint>,
}

impl TorsionTuple {
    pub fn new(points: Vec<TorsionPoint>) -> Self {
        assert!(!points.is_empty(), "tuples need at least one coordinate");
        for w in points.windows(2) {
            w[0].check_prime(&w[1]);
        }
        TorsionTuple { points }
    }

    pub fn origin(prime: u64, nvars: usize) -> Self {
        Self::new(vec![TorsionPoint::origin(prime); nvars])
    }

    pub fn prime(&self) -> u64 {
        self.points[0].prime()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, i: usize) -> &TorsionPoint {
        &self.points[i]
    }

    pub fn points(&self) -> &[TorsionPoint] {
        &self.points
    }

    /// Deepest coordinate level.
    pub fn level(&self) -> u32 {
        self.points.iter().map(|p| p.level()).max().unwrap_or(0)
    }

    pub fn is_origin(&self) -> bool {
        self.points.iter().all(|p| p.is_origin())
    }

    /// Apply [m] coordinatewise.
    pub fn mul_int(&self, m: i64) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|p| p.mul_int(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(points))
    }

    /// Parse `level:exponent,level:exponent,...`.
    pub fn parse(prime: u64, text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for part in text.split(',') {
            let (k, u) = part
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("bad torsion coordinate '{}'", part)))?;
            let level: u32 = k
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad torsion level '{}'", k)))?;
            let exponent: u64 = u
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad torsion exponent '{}'", u)))?;
            points.push(TorsionPoint::from_raw(prime, level, exponent)?);
        }
        if points.is_empty() {
            return Err(Error::InvalidInput("empty torsion tuple".into()));
        }
        Ok(Self::new(points))
    }
}

impl fmt::Display for TorsionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.points {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

/// All torsion points of level <= `level_bound`, origin first, then by
/// level and exponent.  There are exactly p^level_bound of them.
pub fn enumerate_points(prime: u64, level_bound: u32) -> Result<Vec<TorsionPoint>> {
    let mut out = vec![TorsionPoint::origin(prime)];
    for k in 1..=level_bound {
        let modulus = level_modulus(prime, k)?;
        for u in 1..modulus {
            if u % prime != 0 {
                out.push(TorsionPoint { prime, level: k, exponent: u });
            }
        }
    }
    Ok(out)
}

/// Every tuple of `nvars` points of level <= `level_bound`, in
/// lexicographic order, refusing to materialize more than `cap` tuples.
pub fn enumerate_tuples(
    prime: u64,
    nvars: usize,
    level_bound: u32,
    cap: u64,
) -> Result<Vec<TorsionTuple>> {
    let points = enumerate_points(prime, level_bound)?;
    let count = (points.len() as u128)
        .checked_pow(nvars as u32)
        .unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut idx = vec![0usize; nvars];
    loop {
        out.push(TorsionTuple::new(
            idx.iter().map(|&i| points[i].clone()).collect(),
        ));
        let mut pos = nvars;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < points.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Draw tuples uniformly (with repetition) from the level <= bound space.
pub fn sample_tuples(
    prime: u64,
    nvars: usize,
    level_bound: u32,
    count: usize,
    rng: &mut impl Rng,
) -> Result<Vec<TorsionTuple>> {
    let modulus = level_modulus(prime, level_bound)?;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let points = (0..nvars)
            .map(|_| TorsionPoint::from_raw(prime, level_bound, rng.gen_range(0..modulus)))
            .collect::<Result<Vec<_>>>()?;
        out.push(TorsionTuple::new(points));
    }
    Ok(out)
}

/// Apply a change of variables to a tuple so that evaluation is
/// equivariant: evaluating the transformed series at t agrees with
/// evaluating the original at the transformed tuple.  Concretely the
/// exponent part acts first (s_i = t_i + sum_{j<i} [B_ij] t_j) and the
/// permutation then reads coordinate perm[i] into slot i.
pub fn apply_cv_to_tuple(cv: &ChangeOfVariables, t: &TorsionTuple) -> Result<TorsionTuple> {
    if cv.nvars() != t.len() {
        return Err(Error::ShapeMismatch(format!(
            "change of variables on {} variables applied to a {}-tuple",
            cv.nvars(),
            t.len()
        )));
    }
    if cv.prime() != t.prime() {
        return Err(Error::RingMismatch("tuple over a different prime".into()));
    }
    if cv.modulus_exp() < t.level() {
        return Err(Error::InsufficientExponentPrecision {
            given: cv.modulus_exp(),
            required: t.level(),
            degree: 0,
        });
    }
    let mut acted = Vec::with_capacity(t.len());
    for i in 0..t.len() {
        let mut s = t.point(i).clone();
        for j in 0..i {
            let b = cv.entry(i, j);
            if b.is_zero() {
                continue;
            }
            s = s.add(&t.point(j).mul_residue(&b)?)?;
        }
        acted.push(s);
    }
    let out = (0..t.len()).map(|i| acted[cv.perm()[i]].clone()).collect();
    Ok(TorsionTuple::new(out))
}

/// A tuple realized inside one Eisenstein ring, with the accuracy ceiling
/// its coordinates carry (full precision for exact embeddings).
#[derive(Debug, Clone)]
pub struct EmbeddedTuple {
    pub ring: Arc<EisensteinRing>,
    pub coords: Vec<RingElement>,
    pub ceiling: Rat,
}

impl EmbeddedTuple {
    /// Evaluate a series at this tuple, folding the embedding ceiling
    /// into the evaluation's own.
    pub fn evaluate(&self, phi: &MultiSeries<Zp>) -> Result<crate::series::Evaluation> {
        let mut ev = phi.evaluate(&self.coords)?;
        ev.cap_ceiling(self.ceiling);
        Ok(ev)
    }
}

/// Embeds symbolic tuples into torsion rings of a fixed formal group,
/// caching one ring per level.
pub struct Embedder<'g> {
    group: &'g LtGroup,
    precision: u32,
    rings: RefCell<BTreeMap<u32, Arc<EisensteinRing>>>,
}

impl<'g> Embedder<'g> {
    pub fn new(group: &'g LtGroup) -> Self {
        Embedder {
            group,
            precision: group.precision(),
            rings: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn group(&self) -> &LtGroup {
        self.group
    }

    /// The ring generated by a primitive point of this level (level 0 is
    /// the base ring).
    pub fn ring(&self, level: u32) -> Result<Arc<EisensteinRing>> {
        if let Some(r) = self.rings.borrow().get(&level) {
            return Ok(r.clone());
        }
        let ring = if level == 0 {
            EisensteinRing::new(
                self.group.prime(),
                self.precision,
                vec![self.group.prime().into(), 1.into()],
                "base",
            )?
        } else {
            self.group.torsion_ring(level, self.precision)?
        };
        self.rings.borrow_mut().insert(level, ring.clone());
        Ok(ring)
    }

    /// Embed at the tuple's own level.
    pub fn embed(&self, t: &TorsionTuple) -> Result<EmbeddedTuple> {
        self.embed_at(t, t.level())
    }

    /// Embed into the level-`ring_level` ring (which must contain every
    /// coordinate).  The multiplicative model embeds exactly; other
    /// models route units through bracket series and inherit their
    /// ceilings.
    pub fn embed_at(&self, t: &TorsionTuple, ring_level: u32) -> Result<EmbeddedTuple> {
        let force_series = !matches!(self.group.kind(), LtKind::Cyclotomic);
        self.embed_inner(t, ring_level, force_series)
    }

    /// Always take the bracket-series route, even for the multiplicative
    /// model.  Exists so the exact route can be cross-checked against it.
    pub fn embed_via_series(&self, t: &TorsionTuple, ring_level: u32) -> Result<EmbeddedTuple> {
        self.embed_inner(t, ring_level, true)
    }

    fn embed_inner(
        &self,
        t: &TorsionTuple,
        ring_level: u32,
        series_route: bool,
    ) -> Result<EmbeddedTuple> {
        if t.prime() != self.group.prime() {
            return Err(Error::RingMismatch("tuple over a different prime".into()));
        }
        if t.level() > ring_level {
            return Err(Error::LevelTooDeep { level: t.level(), max: ring_level });
        }
        let ring = self.ring(ring_level)?;
        let mut coords = Vec::with_capacity(t.len());
        let mut ceiling = Rat::from_integer(self.precision as i64);
        for point in t.points() {
            if point.is_origin() {
                coords.push(RingElement::zero(&ring));
                continue;
            }
            if !series_route {
                // zeta^(u p^(K-k)) - 1, exact by construction.
                let shift = BigUint::from(self.group.prime()).pow(ring_level - point.level());
                let exp = BigUint::from(point.exponent()) * shift;
                let one = RingElement::one(&ring);
                let lam = RingElement::uniformizer(&ring);
                let val = one.try_add(&lam)?.pow(&exp).try_sub(&one)?;
                coords.push(val);
            } else {
                // Walk down to the coordinate's level with exact
                // f-iterates, then apply [u] as a series.
                let lam = RingElement::uniformizer(&ring);
                let steps = ring_level - point.level();
                let base = if steps == 0 {
                    lam
                } else {
                    let mut iter = self.group.iterate_f(steps)?;
                    // iterate_f of builtin models; custom models cannot
                    // reach here because their towers are rejected.
                    if iter.is_empty() {
                        iter.push(0.into());
                    }
                    lam.eval_int_poly(&iter)
                };
                let bracket = self.group.bracket_int(point.exponent() as i64)?;
                let ev = bracket.evaluate(std::slice::from_ref(&base))?;
                if ev.ceiling < ceiling {
                    ceiling = ev.ceiling;
                }
                coords.push(ev.value);
            }
        }
        Ok(EmbeddedTuple { ring, coords, ceiling })
    }
}

/// Certified valuation of phi([p] t) - phi(t)^p.  For an integral phi
/// this is at least 1; the return value says whether the arithmetic here
/// can see that.
pub fn frobenius_defect(
    embedder: &Embedder,
    phi: &MultiSeries<Zp>,
    t: &TorsionTuple,
) -> Result<Valuation> {
    let level = t.level();
    let dropped = t.mul_int(embedder.group().prime() as i64)?;
    let et = embedder.embed_at(t, level)?;
    let ed = embedder.embed_at(&dropped, level)?;
    let ev_t = et.evaluate(phi)?;
    let ev_d = ed.evaluate(phi)?;
    let diff = ev_d
        .value
        .try_sub(&ev_t.value.pow(&BigUint::from(embedder.group().prime())))?;
    let ceiling = ev_d.ceiling.min(ev_t.ceiling);
    Ok(diff.valuation().capped(ceiling))
}

/// How a tuple relates to the valuation neighborhood of an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// Every generator certified to exceed the threshold.
    In,
    /// Some generator certified at or below the threshold.
    Out,
    /// At least one comparison the arithmetic could not decide.
    Undecided,
}

impl Membership {
    pub fn as_str(&self) -> &'static str {
        match self {
            Membership::In => "in",
            Membership::Out => "out",
            Membership::Undecided => "undecided",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanRecord {
    pub tuple: TorsionTuple,
    pub valuations: Vec<Valuation>,
    pub min_valuation: Valuation,
    pub membership: Membership,
    /// Every generator vanished to working precision here.
    pub zero_at_precision: bool,
}

/// Per-level summary: the largest certified minimum valuation among
/// tuples whose minimum is exactly known, and how many tuples vanished
/// outright.
#[derive(Debug, Clone)]
pub struct LevelProfile {
    pub level: u32,
    pub tuples: u64,
    pub zeros: u64,
    pub undecided: u64,
    pub max_min_valuation: Option<Rat>,
    pub witness: Option<TorsionTuple>,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub prime: u64,
    pub group_kind: String,
    pub epsilon: Rat,
    pub level_bound: u32,
    pub nvars: usize,
    pub records: Vec<ScanRecord>,
    pub profile: Vec<LevelProfile>,
    pub members: u64,
    pub outside: u64,
    pub undecided: u64,
    pub zeros: u64,
}

impl ScanReport {
    pub fn zero_tuples(&self) -> impl Iterator<Item = &ScanRecord> {
        self.records.iter().filter(|r| r.zero_at_precision)
    }

    /// More than half of all classifications were undecidable.
    pub fn undecided_majority(&self) -> bool {
        2 * self.undecided > self.records.len() as u64
    }
}

fn check_scan_inputs(
    group: &LtGroup,
    generators: &[MultiSeries<Zp>],
    epsilon: Rat,
) -> Result<usize> {
    if generators.is_empty() {
        return Err(Error::InvalidInput("the ideal needs at least one generator".into()));
    }
    let nvars = generators[0].nvars();
    for g in generators {
        if g.nvars() != nvars {
            return Err(Error::ShapeMismatch(
                "generators disagree on the number of variables".into(),
            ));
        }
        if g.prime() != group.prime() {
            return Err(Error::RingMismatch("generator over a different prime".into()));
        }
    }
    if epsilon < rat(0, 1) {
        return Err(Error::InvalidInput("the threshold must be non-negative".into()));
    }
    Ok(nvars)
}

/// Evaluate every generator at every tuple of level <= `level_bound` and
/// classify membership in the epsilon-neighborhood by certified
/// comparisons.
pub fn scan_ideal(
    group: &LtGroup,
    generators: &[MultiSeries<Zp>],
    epsilon: Rat,
    level_bound: u32,
    cap: u64,
) -> Result<ScanReport> {
    let nvars = check_scan_inputs(group, generators, epsilon)?;
    let tuples = enumerate_tuples(group.prime(), nvars, level_bound, cap)?;
    scan_tuples(group, generators, epsilon, level_bound, tuples)
}

/// Like `scan_ideal`, but over a deterministic seeded sample instead of
/// the full enumeration; duplicates merge by tuple identity, so records
/// are in tuple order and independent of draw order.
pub fn scan_sampled(
    group: &LtGroup,
    generators: &[MultiSeries<Zp>],
    epsilon: Rat,
    level_bound: u32,
    count: u64,
    seed: u64,
) -> Result<ScanReport> {
    let nvars = check_scan_inputs(group, generators, epsilon)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let drawn = sample_tuples(group.prime(), nvars, level_bound, count as usize, &mut rng)?;
    let mut unique: BTreeMap<String, TorsionTuple> = BTreeMap::new();
    for t in drawn {
        unique.insert(t.to_string(), t);
    }
    let tuples: Vec<TorsionTuple> = unique.into_values().collect();
    scan_tuples(group, generators, epsilon, level_bound, tuples)
}

fn scan_tuples(
    group: &LtGroup,
    generators: &[MultiSeries<Zp>],
    epsilon: Rat,
    level_bound: u32,
    tuples: Vec<TorsionTuple>,
) -> Result<ScanReport> {
    let nvars = generators[0].nvars();
    let embedder = Embedder::new(group);
    let mut records = Vec::with_capacity(tuples.len());
    let (mut members, mut outside, mut undecided, mut zeros) = (0u64, 0u64, 0u64, 0u64);
    for tuple in tuples {
        let embedded = embedder.embed(&tuple)?;
        let mut valuations = Vec::with_capacity(generators.len());
        let mut min_valuation: Option<Valuation> = None;
        let mut all_above = true;
        let mut any_undecided = false;
        let mut all_zero = true;
        for g in generators {
            let val = embedded.evaluate(g)?.certified_valuation();
            if val.is_exact() {
                all_zero = false;
            }
            match val.certified_gt(epsilon) {
                Some(true) => {}
                Some(false) => all_above = false,
                None => any_undecided = true,
            }
            min_valuation = Some(match min_valuation {
                None => val.clone(),
                Some(m) => m.min(&val),
            });
            valuations.push(val);
        }
        let membership = if !all_above {
            Membership::Out
        } else if any_undecided {
            Membership::Undecided
        } else {
            Membership::In
        };
        match membership {
            Membership::In => members += 1,
            Membership::Out => outside += 1,
            Membership::Undecided => undecided += 1,
        }
        if all_zero {
            zeros += 1;
        }
        records.push(ScanRecord {
            tuple,
            valuations,
            min_valuation: min_valuation.expect("at least one generator"),
            membership,
            zero_at_precision: all_zero,
        });
    }
    let mut profile = Vec::new();
    for level in 0..=level_bound {
        let mut row = LevelProfile {
            level,
            tuples: 0,
            zeros: 0,
            undecided: 0,
            max_min_valuation: None,
            witness: None,
        };
        for r in records.iter().filter(|r| r.tuple.level() == level) {
            row.tuples += 1;
            if r.zero_at_precision {
                row.zeros += 1;
            }
            if r.membership == Membership::Undecided {
                row.undecided += 1;
            }
            if let Valuation::Exact(v) = r.min_valuation {
                if row.max_min_valuation.map_or(true, |m| v > m) {
                    row.max_min_valuation = Some(v);
                    row.witness = Some(r.tuple.clone());
                }
            }
        }
        profile.push(row);
    }
    Ok(ScanReport {
        prime: group.prime(),
        group_kind: group.kind().name().to_string(),
        epsilon,
        level_bound,
        nvars,
        records,
        profile,
        members,
        outside,
        undecided,
        zeros,
    })
}
