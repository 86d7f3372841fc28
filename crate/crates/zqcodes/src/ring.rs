//! Residue arithmetic mod q and the number-theoretic helpers the weight
//! formulas consume: gcd, Euler phi, divisor lists, additive orders.

use std::collections::BTreeMap;

use crate::{Error, Result};

/// Largest modulus [`RingContext::new`] accepts. Divisor tables are built by
/// trial division, so q stays desk-scale; exhaustive enumeration elsewhere is
/// the real bottleneck.
pub const DEFAULT_MAX_Q: u64 = 1 << 16;

/// Greatest common divisor. `gcd(a, 0) = a`; both arguments zero is an error.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::UndefinedGcd);
    }
    Ok(gcd_unchecked(a, b))
}

fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Euler's totient: the number of integers in [1, m] coprime to m.
pub fn euler_phi(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::PhiOfZero);
    }
    let mut phi = m;
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            phi -= phi / p;
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

/// Smallest divisor of q exceeding 1 (necessarily prime; q itself when q is prime).
pub fn smallest_divisor(q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::ModulusTooSmall(q));
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return Ok(d);
        }
        d += 1;
    }
    Ok(q)
}

/// The modulus q together with the derived number-theoretic facts every
/// closed-form predictor reads: the smallest divisor p > 1, the full divisor
/// list, Euler phi on each divisor, and the unit count phi(q).
///
/// Immutable once built; all operations are pure, so a context can be shared
/// freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    q: u64,
    p_smallest: u64,
    divisors: Vec<u64>,
    phi_of: BTreeMap<u64, u64>,
    unit_count: u64,
}

impl RingContext {
    /// Builds the context for Z_q, rejecting q < 2 or q > [`DEFAULT_MAX_Q`].
    pub fn new(q: u64) -> Result<Self> {
        Self::with_limit(q, DEFAULT_MAX_Q)
    }

    /// Same as [`RingContext::new`] with a caller-chosen upper limit on q.
    pub fn with_limit(q: u64, limit: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::ModulusTooSmall(q));
        }
        if q > limit {
            return Err(Error::ModulusTooLarge { q, limit });
        }
        let divisors: Vec<u64> = (1..=q).filter(|d| q.is_multiple_of(*d)).collect();
        let mut phi_of = BTreeMap::new();
        for &d in &divisors {
            phi_of.insert(d, euler_phi(d)?);
        }
        let p_smallest = divisors[1];
        let unit_count = phi_of[&q];
        Ok(Self {
            q,
            p_smallest,
            divisors,
            phi_of,
            unit_count,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Smallest divisor of q exceeding 1 (a prime).
    pub fn p_smallest(&self) -> u64 {
        self.p_smallest
    }

    /// All divisors of q in ascending order, including 1 and q.
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// phi(d) for a divisor d of q; None when d does not divide q.
    pub fn phi_of(&self, d: u64) -> Option<u64> {
        self.phi_of.get(&d).copied()
    }

    /// phi(q), the number of units of Z_q.
    pub fn unit_count(&self) -> u64 {
        self.unit_count
    }

    /// Additive order of alpha: the smallest d >= 1 with d*alpha = 0 mod q.
    /// Equals q / gcd(alpha, q); the order of 0 is 1.
    pub fn additive_order(&self, alpha: u64) -> u64 {
        self.q / gcd_unchecked(alpha % self.q, self.q)
    }

    /// True iff gcd(alpha, q) = 1.
    pub fn is_unit(&self, alpha: u64) -> bool {
        gcd_unchecked(alpha % self.q, self.q) == 1
    }

    /// Canonical representative of v in [0, q-1].
    pub fn reduce(&self, v: u64) -> u64 {
        v % self.q
    }
}
