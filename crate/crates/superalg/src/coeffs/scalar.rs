//! Exact scalars: arbitrary-precision rationals, prime fields and p-local rationals.

use std::fmt;
use std::hash::Hash;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::CoeffError;

/// The coefficient ring an algebra lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "p")]
pub enum CoefficientRing {
    Rational,
    PrimeField(u64),
    Local(u64),
}

impl CoefficientRing {
    pub fn prime_field(p: u64) -> Result<Self, CoeffError> {
        check_odd_prime(p)?;
        Ok(CoefficientRing::PrimeField(p))
    }

    pub fn local(p: u64) -> Result<Self, CoeffError> {
        check_odd_prime(p)?;
        Ok(CoefficientRing::Local(p))
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            CoefficientRing::Rational => None,
            CoefficientRing::PrimeField(p) | CoefficientRing::Local(p) => Some(*p),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientRing::Local(_))
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Rational => write!(f, "Q"),
            CoefficientRing::PrimeField(p) => write!(f, "F{p}"),
            CoefficientRing::Local(p) => write!(f, "Z({p})"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

pub fn check_odd_prime(p: u64) -> Result<(), CoeffError> {
    if p == 2 || !is_prime(p) {
        Err(CoeffError::NotOddPrime(p))
    } else {
        Ok(())
    }
}

/// Exact commutative scalar in which 2 is invertible.
///
/// Arithmetic is by reference so that big rationals are not cloned needlessly.
pub trait Scalar:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn ring() -> CoefficientRing;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    /// Image of a rational number, or `None` when its denominator is not invertible.
    fn from_rational(q: &Rational) -> Option<Self>;
    /// Rational lift; `None` for prime-field elements.
    fn to_rational(&self) -> Option<Rational>;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse inside the ring itself.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn is_unit(&self) -> bool {
        self.inv().is_some()
    }
    fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }
    fn signed(sign: bool) -> Self {
        if sign {
            Self::one().neg()
        } else {
            Self::one()
        }
    }
}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
    /// Reduction modulo `p`, if the denominator is prime to `p`.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let d = self.denom().mod_floor(&pb);
        if d.is_zero() {
            return None;
        }
        let n = self.numer().mod_floor(&pb).to_u64()?;
        let d = d.to_u64()?;
        Some(n * pow_mod(d, p - 2, p) % p)
    }
    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for Rational {
    fn ring() -> CoefficientRing {
        CoefficientRing::Rational
    }
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Element of the prime field F_P, stored as its least nonnegative residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }
    pub fn value(&self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn ring() -> CoefficientRing {
        CoefficientRing::prime_field(P).expect("Fp modulus must be an odd prime")
    }
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        q.mod_p(P).map(Fp)
    }
    fn to_rational(&self) -> Option<Rational> {
        None
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(pow_mod(self.0, P - 2, P)))
        }
    }
}

/// Rational number whose reduced denominator is prime to P.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Zp<const P: u64>(Rational);

impl<const P: u64> Zp<P> {
    pub fn new(q: Rational) -> Result<Self, CoeffError> {
        if q.denom().mod_floor(&BigInt::from(P)).is_zero() {
            Err(CoeffError::NotLocal { value: q.to_string(), p: P })
        } else {
            Ok(Zp(q))
        }
    }
    pub fn as_rational(&self) -> &Rational {
        &self.0
    }
    /// Reduction to the residue field.
    pub fn reduce(&self) -> Fp<P> {
        Fp(self.0.mod_p(P).expect("p-local by construction"))
    }
}

impl<const P: u64> fmt::Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Scalar for Zp<P> {
    fn ring() -> CoefficientRing {
        CoefficientRing::local(P).expect("Zp modulus must be an odd prime")
    }
    fn zero() -> Self {
        Zp(Rational::zero())
    }
    fn one() -> Self {
        Zp(Rational::one())
    }
    fn from_i64(n: i64) -> Self {
        Zp(Rational::from_i64(n))
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        Zp::new(q.clone()).ok()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.0.clone())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Zp(self.0.add(&o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        Zp(self.0.sub(&o.0))
    }
    fn mul(&self, o: &Self) -> Self {
        Zp(self.0.mul(&o.0))
    }
    fn neg(&self) -> Self {
        Zp(self.0.neg())
    }
    fn inv(&self) -> Option<Self> {
        let r = self.0.inv()?;
        Zp::new(r).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F3 = Fp<3>;
    type Z5 = Zp<5>;

    #[test]
    fn two_is_invertible() {
        let half = F3::from_i64(2).inv().unwrap();
        assert!(F3::from_i64(2).mul(&half).is_one());
        let half = Z5::from_i64(2).inv().unwrap();
        assert!(Z5::from_i64(2).mul(&half).is_one());
        assert_eq!(half.as_rational(), &Rational::new(1, 2));
    }

    #[test]
    fn local_rejects_bad_denominators() {
        assert!(Z5::new(Rational::new(1, 5)).is_err());
        assert!(Z5::new(Rational::new(5, 3)).is_ok());
        assert!(Z5::from_i64(5).inv().is_none());
        assert!(Z5::from_i64(3).inv().is_some());
    }

    #[test]
    fn reduction_mod_p() {
        assert_eq!(Rational::new(1, 2).mod_p(3), Some(2));
        assert_eq!(Rational::new(-1, 1).mod_p(5), Some(4));
        assert_eq!(Rational::new(1, 3).mod_p(3), None);
        assert_eq!(Zp::<3>::new(Rational::new(7, 2)).unwrap().reduce(), Fp::<3>::new(2));
    }

    #[test]
    fn ring_validation() {
        assert!(CoefficientRing::prime_field(2).is_err());
        assert!(CoefficientRing::prime_field(9).is_err());
        assert!(CoefficientRing::local(7).is_ok());
        assert_eq!(F3::ring().to_string(), "F3");
    }
}
