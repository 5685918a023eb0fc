use std::fmt;

use num_traits::{One, Zero};

use super::facets::{face_series, initial_ideal_and_facets, shelling_h_vector};
use super::check_n;
use crate::arith::{binomial, factorial, Integer, Rational};
use crate::error::Result;
use crate::polyring::{standard_monomial_count, UniPoly, UniRationalFn};

/// dim_K (K[A]/M)_t, counting standard monomials in the support variables
/// and spreading the remaining degree over the free variables.
pub fn hilbert_function(n: usize, t: u32) -> Result<Integer> {
    let init = initial_ideal_and_facets(n)?;
    let free = init.complex.free_count as i64;
    let mut total = Integer::zero();
    for k in 0..=t {
        let support = standard_monomial_count(&init.generators, &init.complex.support, k);
        let rest = (t - k) as i64;
        total += support * binomial(rest + free - 1, rest);
    }
    Ok(total)
}

/// n/(1-z)^{n²-n+2} - (n-1)/(1-z)^{n²-n+1} - 1/(1-z)^{n²-2n+4} + 1/(1-z)^{n²-2n+3}
pub fn hilbert_series_closed(n: usize) -> Result<UniRationalFn> {
    check_n(n)?;
    let n2 = (n * n) as u32;
    let n = n as u32;
    let parts = [
        UniRationalFn::over_one_minus_z(n as i64, n2 - n + 2),
        UniRationalFn::over_one_minus_z(-(n as i64 - 1), n2 - n + 1),
        UniRationalFn::over_one_minus_z(-1, n2 - 2 * n + 4),
        UniRationalFn::over_one_minus_z(1, n2 - 2 * n + 3),
    ];
    Ok(parts.iter().skip(1).fold(parts[0].clone(), |acc, p| acc.add(p)).cancel_one_minus_z())
}

/// 1/(1-z)^{n²-2n+3} · ((1 + (n-1)z)/(1-z)^{n-1} - z/(1-z))
pub fn hilbert_series_facet_form(n: usize) -> Result<UniRationalFn> {
    check_n(n)?;
    let shelled = UniRationalFn::new(UniPoly::from_i64(&[1, n as i64 - 1]), UniPoly::one_minus_z_pow(n as u32 - 1))?;
    let correction = UniRationalFn::new(UniPoly::from_i64(&[0, 1]), UniPoly::one_minus_z_pow(1))?;
    let free = UniRationalFn::over_one_minus_z(1, (n * n - 2 * n + 3) as u32);
    Ok(free.mul(&shelled.sub(&correction)))
}

/// Rebuilds the facet form from the complex itself: the h-vector of the
/// primed complex gives (1+(n-1)z)/(1-z)^{n-1}, and the face series of
/// the unprimed complex must equal that minus z/(1-z). Returns whether both
/// identities hold and the product with the free factor is the closed form.
pub fn shelling_series_identity(n: usize) -> Result<bool> {
    let cx = initial_ideal_and_facets(n)?.complex;
    let primed = cx.primed_index_facets();
    let Some(h) = shelling_h_vector(&primed) else {
        return Ok(false);
    };
    let h_poly = UniPoly::from_i64(&h.iter().map(|&x| x as i64).collect::<Vec<_>>());
    let dim = primed[0].len() as u32;
    let from_h = UniRationalFn::new(h_poly, UniPoly::one_minus_z_pow(dim))?;
    let primed_ok = from_h.equals(&face_series(&primed));
    let correction = UniRationalFn::new(UniPoly::from_i64(&[0, 1]), UniPoly::one_minus_z_pow(1))?;
    let unprimed = face_series(&cx.index_facets());
    let identified_ok = unprimed.equals(&from_h.sub(&correction));
    let free = UniRationalFn::over_one_minus_z(1, cx.free_count as u32);
    let closed_ok = free.mul(&unprimed).equals(&hilbert_series_closed(n)?);
    Ok(primed_ok && identified_ok && closed_ok)
}

/// A polynomial in t with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub coeffs: Vec<Rational>,
}

impl HilbertPolynomial {
    /// [P^r] = C(t+r, r)
    pub fn projective_space(r: u32) -> Self {
        let mut coeffs = vec![Rational::one()];
        for i in 1..=r {
            // multiply by (t + i)
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] += c * Rational::from_integer(i.into());
                next[k + 1] += c;
            }
            coeffs = next;
        }
        let denom = Rational::from_integer(factorial(r as u64));
        HilbertPolynomial {
            coeffs: coeffs.into_iter().map(|c| c / &denom).collect(),
        }
    }

    fn combine(terms: &[(i64, HilbertPolynomial)]) -> Self {
        let len = terms.iter().map(|(_, p)| p.coeffs.len()).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); len];
        for (scale, p) in terms {
            let s = Rational::from_integer((*scale).into());
            for (k, c) in p.coeffs.iter().enumerate() {
                coeffs[k] += c * &s;
            }
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: i64) -> Rational {
        let t = Rational::from_integer(t.into());
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &t + c)
    }

    /// Leading coefficient times (degree)!, the degree of the variety.
    pub fn normalized_leading_coefficient(&self) -> Rational {
        let lead = self.coeffs.last().cloned().unwrap_or_default();
        lead * Rational::from_integer(factorial(self.degree() as u64))
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// n[P^{n²-n+1}] - (n-1)[P^{n²-n}] - [P^{n²-2n+3}] + [P^{n²-2n+2}]
pub fn hilbert_polynomial(n: usize) -> Result<HilbertPolynomial> {
    check_n(n)?;
    let n2 = (n * n) as u32;
    let nn = n as u32;
    Ok(HilbertPolynomial::combine(&[
        (n as i64, HilbertPolynomial::projective_space(n2 - nn + 1)),
        (-(n as i64 - 1), HilbertPolynomial::projective_space(n2 - nn)),
        (-1, HilbertPolynomial::projective_space(n2 - 2 * nn + 3)),
        (1, HilbertPolynomial::projective_space(n2 - 2 * nn + 2)),
    ]))
}

/// Least t₀ ≤ max_t such that the Hilbert function equals the Hilbert
/// polynomial for every t in t₀..=max_t; `None` if they differ at max_t.
pub fn agreement_threshold(n: usize, max_t: u32) -> Result<Option<u32>> {
    let hp = hilbert_polynomial(n)?;
    let mut threshold = None;
    for t in (0..=max_t).rev() {
        if Rational::from_integer(hilbert_function(n, t)?) != hp.eval(t as i64) {
            break;
        }
        threshold = Some(t);
    }
    Ok(threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomial_ideal::contains;
    use crate::polyring::{Monomial, VarId};

    #[test]
    fn n4_values() {
        assert_eq!(hilbert_function(4, 0).unwrap(), 1.into());
        assert_eq!(hilbert_function(4, 1).unwrap(), 16.into());
        assert_eq!(hilbert_function(4, 2).unwrap(), 135.into());
        for n in 3..8 {
            assert_eq!(hilbert_function(n, 1).unwrap(), (n * n).into());
        }
    }

    /// Direct count over all n² variables at n = 3, where it is still small.
    #[test]
    fn full_enumeration_n3() {
        fn rec(vars: &[VarId], t: u32, acc: Vec<(VarId, u32)>, gens: &[Monomial], count: &mut u64) {
            if vars.is_empty() {
                if t == 0 && !contains(gens, &Monomial::from_pairs(acc)) {
                    *count += 1;
                }
                return;
            }
            for e in 0..=t {
                let mut next = acc.clone();
                next.push((vars[0], e));
                rec(&vars[1..], t - e, next, gens, count);
            }
        }
        let gens = initial_ideal_and_facets(3).unwrap().generators;
        let vars: Vec<VarId> = (1..=3).flat_map(|i| (1..=3).map(move |j| VarId::new(i, j))).collect();
        for t in 0..5 {
            let mut count = 0;
            rec(&vars, t, Vec::new(), &gens, &mut count);
            assert_eq!(hilbert_function(3, t).unwrap(), count.into(), "t={t}");
        }
    }

    #[test]
    fn counts_match_closed_series() {
        for n in 3..7 {
            let series = hilbert_series_closed(n).unwrap().series_coefficients(8).unwrap();
            for t in 0..=8 {
                assert_eq!(series[t as usize], hilbert_function(n, t).unwrap(), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn facet_form_matches_closed_form() {
        for n in 3..11 {
            assert!(hilbert_series_facet_form(n).unwrap().equals(&hilbert_series_closed(n).unwrap()), "n={n}");
            assert!(shelling_series_identity(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn projective_space_polynomial() {
        let p = HilbertPolynomial::projective_space(3);
        for t in 0..10 {
            assert_eq!(p.eval(t), Rational::from_integer(binomial(t + 3, 3)));
        }
        assert_eq!(HilbertPolynomial::projective_space(0).eval(5), Rational::one());
    }

    #[test]
    fn polynomial_shape_and_threshold() {
        for n in 3..8 {
            let hp = hilbert_polynomial(n).unwrap();
            assert_eq!(hp.degree(), n * n - n + 1);
            assert_eq!(hp.normalized_leading_coefficient(), Rational::from_integer(n.into()));
        }
        for n in 3..6 {
            assert_eq!(agreement_threshold(n, 8).unwrap(), Some(0));
        }
        // far out, compared against the closed series
        let hp = hilbert_polynomial(4).unwrap();
        let series = hilbert_series_closed(4).unwrap().series_coefficients(40).unwrap();
        assert_eq!(hp.eval(40), Rational::from_integer(series[40].clone()));
    }
}
