//! Univariate integer polynomials and rational functions, expanded as power
//! series at 0. Used for Hilbert series in z and Chern polynomials in t.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{Integer, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Integer>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Integer>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// (1 - z)^k
    pub fn one_minus_z_pow(k: u32) -> Self {
        Self::from_i64(&[1, -1]).pow(k)
    }

    /// (1 + z)^k
    pub fn one_plus_z_pow(k: u32) -> Self {
        Self::from_i64(&[1, 1]).pow(k)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplication by z^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn content(&self) -> Integer {
        self.coeffs.iter().fold(Integer::zero(), |acc, c| acc.gcd(c))
    }

    pub fn eval(&self, z: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * z + c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Quotient of two integer polynomials. Both parts are divided by their
/// common content and the denominator's lowest nonzero coefficient is kept
/// positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniRationalFn {
    num: UniPoly,
    den: UniPoly,
}

impl UniRationalFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Shape("zero denominator".into()));
        }
        let g = num.content().gcd(&den.content());
        let lowest = den.coeffs().iter().find(|c| !c.is_zero()).expect("nonzero").clone();
        let g = if lowest.is_negative() { -g } else { g };
        let div = |p: &UniPoly| UniPoly::new(p.coeffs().iter().map(|c| c / &g).collect());
        Ok(UniRationalFn {
            num: div(&num),
            den: div(&den),
        })
    }

    pub fn poly(p: UniPoly) -> Self {
        UniRationalFn {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// c / (1 - z)^k
    pub fn over_one_minus_z(c: i64, k: u32) -> Self {
        Self::new(UniPoly::from_i64(&[c]), UniPoly::one_minus_z_pow(k)).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniRationalFn {
            num: self.num.scale(&(-Integer::one())),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero")
    }

    /// Divides numerator and denominator by (1 - z) while both vanish at 1.
    pub fn cancel_one_minus_z(&self) -> Self {
        let at_one = |p: &UniPoly| p.eval(&Integer::one()).is_zero();
        // p = (1 - z) q gives q_k = p_0 + ... + p_k
        let divide = |p: &UniPoly| {
            let mut acc = Integer::zero();
            UniPoly::new(p.coeffs().iter().map(|c| {
                acc += c;
                acc.clone()
            }).collect())
        };
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        while !num.is_zero() && at_one(&num) && at_one(&den) {
            num = divide(&num);
            den = divide(&den);
        }
        Self::new(num, den).expect("nonzero denominator")
    }

    /// Equality as rational functions (cross-multiplication).
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Power-series coefficients at 0 of degrees 0..=upto.
    pub fn series_coefficients(&self, upto: usize) -> Result<Vec<Integer>> {
        series_coefficients(self, upto)
    }
}

impl fmt::Display for UniRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Exact power-series expansion of `f` through degree `upto`.
pub fn series_coefficients(f: &UniRationalFn, upto: usize) -> Result<Vec<Integer>> {
    let d0 = f.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::NoSeriesAtZero);
    }
    // c_k = (num_k - Σ_{i>=1} den_i c_{k-i}) / den_0, carried in rationals
    // so a denominator with |den_0| > 1 is still handled exactly
    let d0 = Rational::from_integer(d0);
    let mut out: Vec<Rational> = Vec::with_capacity(upto + 1);
    for k in 0..=upto {
        let mut acc = Rational::from_integer(f.num.coeff(k));
        for i in 1..=k.min(f.den.coeffs().len().saturating_sub(1)) {
            acc -= Rational::from_integer(f.den.coeff(i)) * &out[k - i];
        }
        out.push(acc / &d0);
    }
    out.into_iter()
        .enumerate()
        .map(|(k, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegralSeries(k)) })
        .collect()
}
