//! Exact scalar arithmetic: arbitrary-precision rationals, prime fields and
//! the combinatorial helpers used by the closed-form degree formulas.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Identifies the ground field of a polynomial or matrix in JSON documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    Q,
    GFp(u32),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => write!(f, "Q"),
            FieldTag::GFp(p) => write!(f, "GF({p})"),
        }
    }
}

/// A commutative ring given by a context object. Elements carry no
/// reference to the context, so the context is passed to every operation.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// A field of exact scalars.
pub trait Field: Ring + PartialEq {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn tag(&self) -> FieldTag;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Rank of a row-major matrix. The default is plain Gaussian elimination;
    /// fields with a better-suited kernel override it.
    fn rank(&self, rows: usize, cols: usize, entries: &[Self::Elem]) -> usize {
        crate::matrix::gauss_rank(self, rows, cols, entries)
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v.into())
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

impl Field for RationalField {
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn tag(&self) -> FieldTag {
        FieldTag::Q
    }
    fn parse_elem(&self, s: &str) -> Result<Rational> {
        parse_rational(s)
    }
    /// Small integers in [-9, 9]; enough spread to avoid accidental rank drops
    /// while keeping Bareiss intermediates short.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        self.from_i64(rng.gen_range(-9..=9))
    }
    fn rank(&self, rows: usize, cols: usize, entries: &[Rational]) -> usize {
        crate::matrix::bareiss_rank(rows, cols, entries)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
}

/// Prime field GF(p) with p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: i64) -> GfpScalar {
        GfpScalar::new(v, self.p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// An element of GF(p) together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GfpScalar {
    value: u32,
    p: u32,
}

impl GfpScalar {
    pub fn new(v: i64, p: u32) -> Self {
        GfpScalar {
            value: v.rem_euclid(p as i64) as u32,
            p,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(GfpScalar::new(t0, self.p))
    }

    fn check(&self, other: &Self) {
        debug_assert_eq!(self.p, other.p, "mixed moduli");
    }
}

impl fmt::Display for GfpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Add for GfpScalar {
    type Output = GfpScalar;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        let s = self.value as u64 + rhs.value as u64;
        GfpScalar {
            value: (s % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl std::ops::Sub for GfpScalar {
    type Output = GfpScalar;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        let s = self.value as u64 + self.p as u64 - rhs.value as u64;
        GfpScalar {
            value: (s % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl std::ops::Mul for GfpScalar {
    type Output = GfpScalar;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        let s = self.value as u64 * rhs.value as u64;
        GfpScalar {
            value: (s % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl std::ops::Neg for GfpScalar {
    type Output = GfpScalar;
    fn neg(self) -> Self {
        GfpScalar {
            value: if self.value == 0 { 0 } else { self.p - self.value },
            p: self.p,
        }
    }
}

impl Ring for PrimeField {
    type Elem = GfpScalar;

    fn zero(&self) -> GfpScalar {
        self.elem(0)
    }
    fn one(&self) -> GfpScalar {
        self.elem(1)
    }
    fn from_i64(&self, v: i64) -> GfpScalar {
        self.elem(v)
    }
    fn add(&self, a: &GfpScalar, b: &GfpScalar) -> GfpScalar {
        *a + *b
    }
    fn sub(&self, a: &GfpScalar, b: &GfpScalar) -> GfpScalar {
        *a - *b
    }
    fn mul(&self, a: &GfpScalar, b: &GfpScalar) -> GfpScalar {
        *a * *b
    }
    fn neg(&self, a: &GfpScalar) -> GfpScalar {
        -*a
    }
    fn is_zero(&self, a: &GfpScalar) -> bool {
        a.value == 0
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &GfpScalar) -> Option<GfpScalar> {
        a.inv()
    }
    fn tag(&self) -> FieldTag {
        FieldTag::GFp(self.p)
    }
    fn parse_elem(&self, s: &str) -> Result<GfpScalar> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(self.elem(v));
        }
        // accept "a/b" as a * b^-1
        let r = parse_rational(s)?;
        let reduce = |x: &BigInt| -> i64 {
            x.mod_floor(&BigInt::from(self.p)).to_i64().unwrap_or_default()
        };
        let num = self.elem(reduce(r.numer()));
        let den = self.elem(reduce(r.denom()));
        den.inv()
            .map(|di| num * di)
            .ok_or_else(|| Error::Parse(format!("{s:?} has denominator divisible by {}", self.p)))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> GfpScalar {
        GfpScalar {
            value: rng.gen_range(0..self.p),
            p: self.p,
        }
    }
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); the empty product is 1.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (a + Rational::from_integer(i.into())))
}

/// Binomial coefficient; 0 whenever k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 || n < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

/// Returns the integer value of `r` when its denominator is 1.
pub fn as_integer(r: &Rational) -> Option<Integer> {
    r.is_integer().then(|| r.to_integer())
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&q(1, 2), 0), q(1, 1));
        assert_eq!(pochhammer(&q(1, 2), 2), q(3, 4));
        assert_eq!(pochhammer(&q(3, 1), 3), q(60, 1));
        // negative half-integers appear in the s = 2 closed form
        assert_eq!(pochhammer(&q(-1, 2), 2), q(-1, 4));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 1), 4.into());
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(9, 2), 36.into());
        for n in 0..10 {
            assert_eq!(binomial(n, 0), 1.into());
        }
        assert_eq!(binomial(3, 4), 0.into());
        assert_eq!(binomial(3, -1), 0.into());
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(q(6, 8).to_string(), "3/4");
        assert_eq!(q(-4, 2).to_string(), "-2");
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), q(-7, 1));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn prime_field_validation() {
        assert!(PrimeField::new(101).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(100).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn gfp_json() {
        let x = GfpScalar::new(-1, 101);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"value":100,"p":101}"#);
        assert_eq!(serde_json::to_string(&FieldTag::Q).unwrap(), r#""Q""#);
        assert_eq!(serde_json::to_string(&FieldTag::GFp(3)).unwrap(), r#"{"GFp":3}"#);
    }

    #[test]
    fn gfp_parse_fraction() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.parse_elem("1/2").unwrap(), f.elem(4));
        assert!(f.parse_elem("1/7").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            let f = RationalField;
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
            // canonical form: equal values have identical parts
            let scaled = Rational::new(a.numer() * 3, a.denom() * 3);
            prop_assert_eq!(scaled.numer(), a.numer());
            prop_assert_eq!(scaled.denom(), a.denom());
        }

        #[test]
        fn gfp_field_axioms(p in prop::sample::select(vec![2u64, 3, 101, 32003, 2147483647]),
                            a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            let f = PrimeField::new(p).unwrap();
            let (a, b, c) = (f.elem(a), f.elem(b), f.elem(c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a - a, f.zero());
            prop_assert!(a.value() < f.modulus());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), f.one());
            }
        }
    }
}
