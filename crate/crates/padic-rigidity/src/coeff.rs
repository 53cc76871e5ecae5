//! Coefficient rings for truncated power series.
//!
//! Series are generic over the ring their coefficients live in: the base
//! ring Z/p^N ([`Zp`]), an Eisenstein extension (`Arc<EisensteinRing>`),
//! or the residue field ([`Fp`]) for reductions mod the maximal ideal.

use std::fmt::Debug;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::eisenstein::{EisensteinRing, RingElement};
use crate::error::{Error, Result};
use crate::padic::{rat, PadicApprox, Valuation};

/// Ring operations a series needs from its coefficients.
pub trait CoeffRing: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn prime(&self) -> u64;
    /// Shared precision of all elements (residue fields report 1).
    fn precision(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Embed an unsigned integer.
    fn from_biguint(&self, n: &BigUint) -> Self::Elem;
    /// Embed a scalar approximation (must carry enough precision).
    fn from_padic(&self, x: &PadicApprox) -> Result<Self::Elem>;
    fn valuation(&self, a: &Self::Elem) -> Valuation;
    /// Image in the residue field F_p.
    fn residue(&self, a: &Self::Elem) -> u64;
    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.residue(a) != 0
    }
    /// Embed a coefficient into a target Eisenstein ring for evaluation.
    fn embed_in(&self, a: &Self::Elem, target: &Arc<EisensteinRing>) -> Result<RingElement>;
}

/// The base coefficient ring Z/p^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zp {
    pub prime: u64,
    pub precision: u32,
}

impl Zp {
    pub fn new(prime: u64, precision: u32) -> Self {
        Zp { prime, precision }
    }
}

impl CoeffRing for Zp {
    type Elem = PadicApprox;

    fn prime(&self) -> u64 {
        self.prime
    }

    fn precision(&self) -> u32 {
        self.precision
    }

    fn zero(&self) -> PadicApprox {
        PadicApprox::zero(self.prime, self.precision)
    }

    fn one(&self) -> PadicApprox {
        PadicApprox::one(self.prime, self.precision)
    }

    fn add(&self, a: &PadicApprox, b: &PadicApprox) -> PadicApprox {
        a.add(b)
    }

    fn sub(&self, a: &PadicApprox, b: &PadicApprox) -> PadicApprox {
        a.sub(b)
    }

    fn neg(&self, a: &PadicApprox) -> PadicApprox {
        a.neg()
    }

    fn mul(&self, a: &PadicApprox, b: &PadicApprox) -> PadicApprox {
        a.mul(b)
    }

    fn is_zero(&self, a: &PadicApprox) -> bool {
        a.is_zero()
    }

    fn from_biguint(&self, n: &BigUint) -> PadicApprox {
        PadicApprox::new(self.prime, self.precision, n.clone())
    }

    fn from_padic(&self, x: &PadicApprox) -> Result<PadicApprox> {
        if x.prime() != self.prime {
            return Err(Error::RingMismatch("scalar over a different prime".into()));
        }
        if x.precision() < self.precision {
            return Err(Error::InsufficientPrecision {
                given: x.precision(),
                required: self.precision,
            });
        }
        Ok(x.reduce_precision(self.precision))
    }

    fn valuation(&self, a: &PadicApprox) -> Valuation {
        a.valuation()
    }

    fn residue(&self, a: &PadicApprox) -> u64 {
        a.residue()
    }

    fn embed_in(&self, a: &PadicApprox, target: &Arc<EisensteinRing>) -> Result<RingElement> {
        RingElement::from_padic(target, a)
    }
}

impl CoeffRing for Arc<EisensteinRing> {
    type Elem = RingElement;

    fn prime(&self) -> u64 {
        EisensteinRing::prime(self)
    }

    fn precision(&self) -> u32 {
        EisensteinRing::precision(self)
    }

    fn zero(&self) -> RingElement {
        RingElement::zero(self)
    }

    fn one(&self) -> RingElement {
        RingElement::one(self)
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a.add_raw(b)
    }

    fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a.sub_raw(b)
    }

    fn neg(&self, a: &RingElement) -> RingElement {
        a.neg()
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a.mul_raw(b)
    }

    fn is_zero(&self, a: &RingElement) -> bool {
        a.is_zero()
    }

    fn from_biguint(&self, n: &BigUint) -> RingElement {
        let scalar = PadicApprox::new(EisensteinRing::prime(self), EisensteinRing::precision(self), n.clone());
        RingElement::from_padic(self, &scalar).expect("constant embedding cannot fail")
    }

    fn from_padic(&self, x: &PadicApprox) -> Result<RingElement> {
        RingElement::from_padic(self, x)
    }

    fn valuation(&self, a: &RingElement) -> Valuation {
        a.valuation()
    }

    fn residue(&self, a: &RingElement) -> u64 {
        a.residue()
    }

    fn embed_in(&self, a: &RingElement, target: &Arc<EisensteinRing>) -> Result<RingElement> {
        if a.ring() == target || Arc::ptr_eq(a.ring(), target) {
            Ok(a.clone())
        } else {
            Err(Error::RingMismatch(
                "coefficients live in a different extension than the point".into(),
            ))
        }
    }
}

/// The residue field F_p; elements are reduced representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fp {
    pub prime: u64,
}

impl CoeffRing for Fp {
    type Elem = u64;

    fn prime(&self) -> u64 {
        self.prime
    }

    fn precision(&self) -> u32 {
        1
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.prime
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.prime - b % self.prime) % self.prime
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.prime - a % self.prime) % self.prime
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // Primes here are small; u128 keeps the product exact.
        ((*a as u128 * *b as u128) % self.prime as u128) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a % self.prime == 0
    }

    fn from_biguint(&self, n: &BigUint) -> u64 {
        use num_traits::ToPrimitive;
        (n % self.prime).to_u64().unwrap()
    }

    fn from_padic(&self, x: &PadicApprox) -> Result<u64> {
        if x.prime() != self.prime {
            return Err(Error::RingMismatch("scalar over a different prime".into()));
        }
        Ok(x.residue())
    }

    fn valuation(&self, a: &u64) -> Valuation {
        if self.is_zero(a) {
            Valuation::AtLeast(rat(1, 1))
        } else {
            Valuation::Exact(rat(0, 1))
        }
    }

    fn residue(&self, a: &u64) -> u64 {
        a % self.prime
    }

    fn embed_in(&self, _a: &u64, _target: &Arc<EisensteinRing>) -> Result<RingElement> {
        Err(Error::RingMismatch(
            "residue-field series cannot be evaluated at ring points".into(),
        ))
    }
}
