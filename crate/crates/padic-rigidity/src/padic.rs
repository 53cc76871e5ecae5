//! Exact arithmetic in Z_p truncated at a tracked precision.
//!
//! A [`PadicApprox`] is an integer residue mod p^N together with the
//! exponent N.  All arithmetic is exact on residues; nothing here ever
//! rounds.  Precision can only shrink: adding or multiplying two values
//! takes the minimum of their precisions, and dividing by p costs one
//! digit.  Valuations are reported through [`Valuation`], which keeps
//! "known exactly" and "at least this deep" apart so that callers can
//! make certified comparisons instead of silently trusting zeros.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Rational numbers used for (normalized) valuations.
pub type Rat = Ratio<i64>;

/// Convenience constructor for valuation rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(num, den)
}

/// A p-adic valuation that is either known exactly or only bounded below.
///
/// `AtLeast(b)` means the computation could not see past depth `b`: the
/// true valuation is `>= b` and nothing more can be claimed.  Every
/// comparison offered here is certified: it returns `None` whenever the
/// stored information cannot decide the question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Exact(Rat),
    AtLeast(Rat),
}

impl Valuation {
    /// Lower bound carried by this valuation (the value itself if exact).
    pub fn bound(&self) -> Rat {
        match self {
            Valuation::Exact(v) | Valuation::AtLeast(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Valuation::Exact(_))
    }

    /// Certified strict comparison against a threshold.
    pub fn certified_gt(&self, threshold: Rat) -> Option<bool> {
        match self {
            Valuation::Exact(v) => Some(*v > threshold),
            Valuation::AtLeast(b) => {
                if *b > threshold {
                    Some(true)
                } else {
                    None
                }
            }
        }
    }

    /// Certified non-strict comparison against a threshold.
    pub fn certified_ge(&self, threshold: Rat) -> Option<bool> {
        match self {
            Valuation::Exact(v) => Some(*v >= threshold),
            Valuation::AtLeast(b) => {
                if *b >= threshold {
                    Some(true)
                } else {
                    None
                }
            }
        }
    }

    /// Valuation of a product: bounds add, exactness survives only if both
    /// factors were exact.
    pub fn add(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Exact(a), Valuation::Exact(b)) => Valuation::Exact(a + b),
            _ => Valuation::AtLeast(self.bound() + other.bound()),
        }
    }

    /// Valuation of a sum (ultrametric): the minimum, when it is certain.
    ///
    /// `Exact(a)` beats `AtLeast(b)` whenever `a <= b`, since the true
    /// value behind the bound can only be deeper.
    pub fn min(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Exact(a), Valuation::Exact(b)) => Valuation::Exact(*a.min(b)),
            (Valuation::Exact(a), Valuation::AtLeast(b)) => {
                if a <= b {
                    Valuation::Exact(*a)
                } else {
                    Valuation::AtLeast(*b)
                }
            }
            (Valuation::AtLeast(_), Valuation::Exact(_)) => other.min(self),
            (Valuation::AtLeast(a), Valuation::AtLeast(b)) => Valuation::AtLeast(*a.min(b)),
        }
    }

    /// Scale by a nonnegative integer (valuation of an M-th power).
    pub fn scale(&self, m: i64) -> Valuation {
        let f = Rat::from_integer(m);
        match self {
            Valuation::Exact(v) => Valuation::Exact(v * f),
            Valuation::AtLeast(b) => Valuation::AtLeast(b * f),
        }
    }

    /// Cap the certified information at `ceiling`: anything at or above the
    /// ceiling collapses to `AtLeast(ceiling)`.
    pub fn capped(&self, ceiling: Rat) -> Valuation {
        match self {
            Valuation::Exact(v) if *v < ceiling => Valuation::Exact(*v),
            Valuation::Exact(_) => Valuation::AtLeast(ceiling),
            Valuation::AtLeast(b) => Valuation::AtLeast((*b).min(ceiling)),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Exact(v) => write!(f, "{}", v),
            Valuation::AtLeast(b) => write!(f, ">={}", b),
        }
    }
}

/// An element of Z/p^N viewed as a precision-N approximation to Z_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicApprox {
    prime: u64,
    precision: u32,
    value: BigUint,
}

impl PadicApprox {
    /// Reduce `value` mod p^precision.
    pub fn new(prime: u64, precision: u32, value: BigUint) -> Self {
        assert!(prime >= 2, "prime must be at least 2");
        assert!(precision >= 1, "precision must be at least 1");
        let modulus = pow_biguint(prime, precision);
        PadicApprox {
            prime,
            precision,
            value: value % modulus,
        }
    }

    pub fn from_u64(prime: u64, precision: u32, value: u64) -> Self {
        Self::new(prime, precision, BigUint::from(value))
    }

    /// Signed values wrap around mod p^N.
    pub fn from_bigint(prime: u64, precision: u32, value: &BigInt) -> Self {
        let modulus = BigInt::from(pow_biguint(prime, precision));
        let mut r = value % &modulus;
        if r.is_negative() {
            r += &modulus;
        }
        Self::new(prime, precision, r.magnitude().clone())
    }

    pub fn from_i64(prime: u64, precision: u32, value: i64) -> Self {
        Self::from_bigint(prime, precision, &BigInt::from(value))
    }

    pub fn zero(prime: u64, precision: u32) -> Self {
        Self::new(prime, precision, BigUint::zero())
    }

    pub fn one(prime: u64, precision: u32) -> Self {
        Self::new(prime, precision, BigUint::one())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> BigUint {
        pow_biguint(self.prime, self.precision)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// True when the residue is a unit, i.e. not divisible by p.
    pub fn is_unit(&self) -> bool {
        !(&self.value % self.prime).is_zero()
    }

    /// Image in the residue field F_p.
    pub fn residue(&self) -> u64 {
        use num_traits::ToPrimitive;
        (&self.value % self.prime).to_u64().expect("residue fits u64")
    }

    fn check_compatible(&self, other: &PadicApprox) {
        assert_eq!(
            self.prime, other.prime,
            "cannot combine values over different primes"
        );
    }

    /// Drop claimed precision to `precision` (never raises it).
    pub fn reduce_precision(&self, precision: u32) -> PadicApprox {
        assert!(
            precision <= self.precision,
            "cannot raise precision from {} to {}",
            self.precision,
            precision
        );
        PadicApprox::new(self.prime, precision, self.value.clone())
    }

    pub fn add(&self, other: &PadicApprox) -> PadicApprox {
        self.check_compatible(other);
        let precision = self.precision.min(other.precision);
        PadicApprox::new(self.prime, precision, &self.value + &other.value)
    }

    pub fn sub(&self, other: &PadicApprox) -> PadicApprox {
        self.check_compatible(other);
        let precision = self.precision.min(other.precision);
        let modulus = pow_biguint(self.prime, precision);
        let a = &self.value % &modulus;
        let b = &other.value % &modulus;
        let r = if a >= b { a - b } else { &modulus + a - b };
        PadicApprox::new(self.prime, precision, r)
    }

    pub fn mul(&self, other: &PadicApprox) -> PadicApprox {
        self.check_compatible(other);
        let precision = self.precision.min(other.precision);
        PadicApprox::new(self.prime, precision, &self.value * &other.value)
    }

    pub fn neg(&self) -> PadicApprox {
        PadicApprox::zero(self.prime, self.precision).sub(self)
    }

    pub fn mul_u64(&self, k: u64) -> PadicApprox {
        PadicApprox::new(self.prime, self.precision, &self.value * k)
    }

    pub fn pow(&self, mut exp: u64) -> PadicApprox {
        let mut base = self.clone();
        let mut acc = PadicApprox::one(self.prime, self.precision);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Largest e with p^e dividing the residue, as far as the precision can
    /// see.  A zero residue yields `AtLeast(N)`: the true value may sit
    /// deeper than the window.
    pub fn valuation(&self) -> Valuation {
        if self.value.is_zero() {
            return Valuation::AtLeast(Rat::from_integer(self.precision as i64));
        }
        let p = BigUint::from(self.prime);
        let mut v = 0i64;
        let mut rest = self.value.clone();
        while (&rest % &p).is_zero() {
            rest /= &p;
            v += 1;
        }
        Valuation::Exact(Rat::from_integer(v))
    }

    /// Divide by p.  Requires the residue to be divisible by p and costs
    /// one digit of precision.
    pub fn div_exact_p(&self) -> Result<PadicApprox> {
        if self.precision < 2 {
            return Err(Error::InsufficientPrecision {
                given: self.precision,
                required: 2,
            });
        }
        let p = BigUint::from(self.prime);
        if !(&self.value % &p).is_zero() {
            return Err(Error::InexactDivision(format!(
                "value {} is a unit times p^0, cannot divide by {}",
                self.value, self.prime
            )));
        }
        Ok(PadicApprox::new(
            self.prime,
            self.precision - 1,
            &self.value / &p,
        ))
    }

    /// Multiplicative inverse of a unit mod p^N.
    pub fn invert(&self) -> Result<PadicApprox> {
        if !self.is_unit() {
            return Err(Error::InexactDivision(format!(
                "{} is not a unit mod {}",
                self.value, self.prime
            )));
        }
        let modulus = BigInt::from(self.modulus());
        let value = BigInt::from(self.value.clone());
        let (g, inv) = extended_gcd(&value, &modulus);
        debug_assert!(g.is_one(), "unit inverse gcd should be 1");
        let mut inv = inv % &modulus;
        if inv.is_negative() {
            inv += &modulus;
        }
        Ok(PadicApprox::new(
            self.prime,
            self.precision,
            inv.magnitude().clone(),
        ))
    }

    /// Decimal residue string, the canonical serialized form.
    pub fn to_decimal(&self) -> String {
        self.value.to_str_radix(10)
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.prime, self.precision)
    }
}

/// p^n as a BigUint.
pub fn pow_biguint(prime: u64, n: u32) -> BigUint {
    BigUint::from(prime).pow(n)
}

/// v_p(n!) by Legendre's formula.
pub fn factorial_valuation(prime: u64, n: usize) -> u32 {
    let mut total = 0u64;
    let mut q = prime;
    loop {
        let term = n as u64 / q;
        if term == 0 {
            break;
        }
        total += term;
        match q.checked_mul(prime) {
            Some(next) => q = next,
            None => break,
        }
    }
    total as u32
}

/// Returns (gcd, x) with a*x = gcd mod b (only the first Bezout factor is
/// needed for modular inverses).
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
    }
    (old_r, old_s)
}
