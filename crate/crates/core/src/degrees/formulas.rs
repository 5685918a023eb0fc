use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::degree_schur;
use crate::arith::{as_integer, binomial, factorial, pochhammer, Integer, Rational};
use crate::error::{Error, Result};
use crate::kalman::StratumSpec;
use crate::polyring::{UniPoly, UniRationalFn};

/// C(n, d-1), valid for s = 1.
pub fn degree_binomial(spec: &StratumSpec) -> Result<Integer> {
    if spec.s != 1 {
        return Err(Error::MethodNotApplicable {
            method: "binomial",
            requirement: "s = 1",
        });
    }
    Ok(binomial(spec.n as i64, spec.d as i64 - 1))
}

/// Coefficient of t^{d-1} in (1+t)^d / (1-t)^{n-d}, valid for s = d-1.
pub fn degree_univariate(spec: &StratumSpec) -> Result<Integer> {
    if spec.d < 2 || spec.s + 1 != spec.d {
        return Err(Error::MethodNotApplicable {
            method: "univariate",
            requirement: "s = d - 1 >= 1",
        });
    }
    let f = UniRationalFn::new(
        UniPoly::one_plus_z_pow(spec.d as u32),
        UniPoly::one_minus_z_pow((spec.n - spec.d) as u32),
    )?;
    Ok(f.series_coefficients(spec.d - 1)?.pop().expect("nonempty"))
}

/// Closed form for s = 2:
/// (-1)^d 2^{2d-3}/(d-1)! Σ_{k=0}^{d-2} (1/2-k)_{d-1} (n+1-k)_k (d+n-2k)_k / (2k)!
pub fn degree_koutschan(d: usize, n: usize) -> Result<Integer> {
    if d < 2 || n < d {
        return Err(Error::MethodNotApplicable {
            method: "koutschan",
            requirement: "2 <= d <= n",
        });
    }
    let r = |v: i64| Rational::from_integer(v.into());
    let half = Rational::new(1.into(), 2.into());
    let (di, ni) = (d as i64, n as i64);
    let mut sum = Rational::zero();
    for k in 0..=(di - 2) {
        let term = pochhammer(&(&half - r(k)), (d - 1) as u32)
            * pochhammer(&r(ni + 1 - k), k as u32)
            * pochhammer(&r(di + ni - 2 * k), k as u32)
            / Rational::from_integer(factorial(2 * k as u64));
        sum += term;
    }
    let sign = if d.is_multiple_of(2) { r(1) } else { r(-1) };
    let prefactor = Rational::from_integer(Integer::from(2).pow((2 * d - 3) as u32))
        / Rational::from_integer(factorial((d - 1) as u64));
    let value = sign * prefactor * sum;
    match as_integer(&value) {
        Some(v) if !v.is_negative() => Ok(v),
        _ => Err(Error::NonIntegerDegree(value.to_string())),
    }
}

/// deg Gr(s, d) = 1!2!⋯(s-1)! [s(d-s)]! / ((d-s)!(d-s+1)!⋯(d-1)!)
pub fn grassmannian_degree(s: usize, d: usize) -> Integer {
    assert!(1 <= s && s <= d, "need 1 <= s <= d");
    let num = (1..s).fold(Integer::one(), |acc, i| acc * factorial(i as u64)) * factorial((s * (d - s)) as u64);
    let den = ((d - s)..d).fold(Integer::one(), |acc, i| acc * factorial(i as u64));
    num / den
}

/// Leading coefficient of deg K_{s,d,n} as a polynomial in n.
pub fn asymptotic_leading(s: usize, d: usize) -> Rational {
    Rational::new(grassmannian_degree(s, d), factorial((s * (d - s)) as u64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialityReport {
    pub s: usize,
    pub d: usize,
    pub ns: Vec<usize>,
    #[serde(serialize_with = "ser_strings")]
    pub degrees: Vec<Integer>,
    /// expected polynomial degree s(d-s)
    pub poly_degree: usize,
    /// differences of order s(d-s)+1 all vanish
    pub higher_differences_vanish: bool,
    #[serde(serialize_with = "ser_display")]
    pub leading: Rational,
    #[serde(serialize_with = "ser_display")]
    pub expected_leading: Rational,
    pub pass: bool,
}

fn ser_strings<S: serde::Serializer>(v: &[Integer], ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(v: &T, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(v)
}

/// Finite differences of degree_schur over consecutive n: the order
/// s(d-s)+1 differences vanish and the order s(d-s) difference divided by
/// [s(d-s)]! is the asymptotic leading coefficient.
pub fn verify_polynomiality(s: usize, d: usize, ns: std::ops::RangeInclusive<usize>) -> Result<PolynomialityReport> {
    let m = s * (d - s);
    let ns: Vec<usize> = ns.collect();
    if ns.len() < m + 2 || ns[0] < d {
        return Err(Error::Shape(format!("need at least {} consecutive values of n >= d", m + 2)));
    }
    let degrees: Vec<Integer> =
        ns.iter().map(|&n| degree_schur(&StratumSpec::new(s, d, n)?)).collect::<Result<_>>()?;
    let mut diffs = degrees.clone();
    for _ in 0..m {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let higher_differences_vanish = diffs.windows(2).all(|w| w[0] == w[1]);
    let leading = Rational::new(diffs[0].clone(), factorial(m as u64));
    let expected_leading = asymptotic_leading(s, d);
    Ok(PolynomialityReport {
        s,
        d,
        pass: higher_differences_vanish && leading == expected_leading,
        ns,
        degrees,
        poly_degree: m,
        higher_differences_vanish,
        leading,
        expected_leading,
    })
}

/// Homogeneous polynomial Σ c_k t1^{deg-k} t2^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiDegree {
    /// coefficient of t1^{deg-k} t2^k at index k
    pub coeffs: Vec<Integer>,
}

impl BiDegree {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of t1^{deg-k} t2^k.
    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// t1 ↦ t1 + t2.
    pub fn shift_t1(&self) -> Self {
        let deg = self.degree();
        let mut out = vec![Integer::zero(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            // (t1 + t2)^{deg-k} t2^k
            for j in 0..=(deg - k) {
                out[k + j] += c * binomial((deg - k) as i64, j as i64);
            }
        }
        BiDegree { coeffs: out }
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.degree();
        let pow = |v: &str, e: usize| match e {
            0 => None,
            1 => Some(v.to_string()),
            _ => Some(format!("{v}^{e}")),
        };
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let vars: Vec<String> = [pow("t1", deg - k), pow("t2", k)].into_iter().flatten().collect();
            let body = match (c.is_one(), vars.is_empty()) {
                (_, true) => c.to_string(),
                (true, false) => vars.join("*"),
                (false, false) => format!("{c}*{}", vars.join("*")),
            };
            parts.push(body);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The multidegree t1^{n-1} + t1^{n-2} t2 + ... + t2^{n-1} of the
/// eigenvector incidence, and its image under t1 ↦ t1 + t2, whose
/// coefficients are C(n, d-1). Fails if that identity does not hold.
pub fn multidegree_incidence(n: usize) -> Result<(BiDegree, BiDegree)> {
    if n < 1 {
        return Err(Error::SizeOutOfRange { n, reason: "need n >= 1" });
    }
    let plain = BiDegree {
        coeffs: vec![Integer::one(); n],
    };
    let shifted = plain.shift_t1();
    for d in 1..=n {
        if shifted.coeff(d - 1) != binomial(n as i64, d as i64 - 1) {
            return Err(Error::Shape(format!("multidegree coefficient mismatch at d={d}")));
        }
    }
    Ok((plain, shifted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: usize, d: usize, n: usize) -> StratumSpec {
        StratumSpec::new(s, d, n).unwrap()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(degree_binomial(&spec(1, 3, 5)).unwrap(), 10.into());
        assert_eq!(degree_binomial(&spec(1, 3, 9)).unwrap(), 36.into());
        assert!(degree_binomial(&spec(2, 3, 5)).is_err());
    }

    #[test]
    fn univariate_values() {
        assert_eq!(degree_univariate(&spec(2, 3, 5)).unwrap(), 12.into());
        for n in 2..10 {
            assert_eq!(degree_univariate(&spec(1, 2, n)).unwrap(), n.into());
        }
        for d in 2..8 {
            assert_eq!(degree_univariate(&spec(d - 1, d, d)).unwrap(), d.into());
        }
        assert!(degree_univariate(&spec(1, 3, 5)).is_err());
    }

    #[test]
    fn koutschan_values() {
        assert_eq!(degree_koutschan(3, 5).unwrap(), 12.into());
        assert_eq!(degree_koutschan(2, 7).unwrap(), 1.into());
        for n in 5..13 {
            assert_eq!(degree_koutschan(3, n).unwrap(), degree_univariate(&spec(2, 3, n)).unwrap(), "n={n}");
        }
        for n in 6..13 {
            assert_eq!(degree_koutschan(4, n).unwrap(), degree_schur(&spec(2, 4, n)).unwrap(), "n={n}");
        }
        assert!(degree_koutschan(1, 5).is_err());
    }

    #[test]
    fn grassmannian() {
        assert_eq!(grassmannian_degree(2, 4), 2.into());
        assert_eq!(grassmannian_degree(2, 3), 1.into());
        assert_eq!(grassmannian_degree(2, 5), 5.into());
        assert_eq!(grassmannian_degree(3, 6), 42.into());
        for d in 1..8 {
            assert_eq!(grassmannian_degree(1, d), 1.into());
            assert_eq!(asymptotic_leading(1, d), Rational::new(1.into(), factorial(d as u64 - 1)));
        }
    }

    #[test]
    fn polynomiality() {
        let r = verify_polynomiality(1, 2, 2..=6).unwrap();
        assert!(r.pass);
        assert_eq!(r.leading, Rational::one());
        let r = verify_polynomiality(2, 3, 3..=8).unwrap();
        assert!(r.pass);
        assert_eq!(r.leading, Rational::new(1.into(), 2.into()));
        let r = verify_polynomiality(1, 3, 3..=8).unwrap();
        assert_eq!(r.leading, Rational::new(1.into(), 2.into()));
        assert!(verify_polynomiality(2, 4, 4..=6).is_err());
    }

    #[test]
    fn multidegree() {
        let (p, q) = multidegree_incidence(3).unwrap();
        assert_eq!(p.to_string(), "t1^2 + t1*t2 + t2^2");
        assert_eq!(q.to_string(), "t1^2 + 3*t1*t2 + 3*t2^2");
        let (p, q) = multidegree_incidence(1).unwrap();
        assert_eq!((p.to_string(), q.to_string()), ("1".into(), "1".into()));
        for n in 1..11 {
            let (_, q) = multidegree_incidence(n).unwrap();
            for d in 1..=n {
                assert_eq!(q.coeff(d - 1), degree_binomial(&spec(1, d, n)).unwrap());
            }
        }
    }
}
