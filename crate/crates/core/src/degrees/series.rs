use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::arith::{binomial, Integer, Rational};
use crate::error::Result;
use crate::kalman::StratumSpec;

/// Power series in x_1..x_s with every term of total degree above `cap`
/// discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSymSeries {
    s: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

type Kernel = HashMap<Vec<u32>, Integer>;

impl TruncatedSymSeries {
    pub fn one(s: usize, cap: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; s], Rational::one());
        TruncatedSymSeries { s, cap, terms }
    }

    /// Builds a series from (exponent, coefficient) pairs, dropping zeros and
    /// terms above the cap. Panics if an exponent has the wrong length.
    pub fn from_terms(s: usize, cap: u32, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), s, "exponent length must equal the number of variables");
            if e.iter().sum::<u32>() <= cap {
                *out.entry(e).or_insert_with(Rational::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        TruncatedSymSeries { s, cap, terms: out }
    }

    /// The elementary symmetric polynomial e_s = x_1 ⋯ x_s.
    pub fn top_elementary(s: usize, cap: u32) -> Self {
        Self::from_terms(s, cap, [(vec![1; s], Rational::one())])
    }

    pub fn vars(&self) -> usize {
        self.s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.s, other.s);
        let cap = self.cap.min(other.cap);
        let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &other.terms {
                if d1 + e2.iter().sum::<u32>() > cap {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *out.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        TruncatedSymSeries { s: self.s, cap, terms: out }
    }

    /// The series with its variables permuted: x_i ↦ x_{perm[i]}.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut f = vec![0; self.s];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            (f, c.clone())
        });
        Self::from_terms(self.s, self.cap, terms)
    }

    /// Invariance under every adjacent transposition, hence under all of S_s.
    pub fn is_symmetric(&self) -> bool {
        (0..self.s.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.coeff(&f) == *c
            })
        })
    }

    /// Terms of total degree exactly k.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == k).map(|(e, c)| (e.clone(), c.clone()));
        Self::from_terms(self.s, self.cap, terms)
    }
}

/// Multiplies by a sparse factor, with factor terms grouped by degree so
/// only products within the cap are formed.
fn mul_factor(acc: &Kernel, factor_by_degree: &[Vec<(Vec<u32>, Integer)>], cap: u32) -> Kernel {
    let mut out: Kernel = HashMap::with_capacity(acc.len() * 2);
    for (e1, c1) in acc {
        let d1: u32 = e1.iter().sum();
        for group in &factor_by_degree[..=(cap - d1) as usize] {
            for (e2, c2) in group {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *out.entry(e).or_insert_with(Integer::zero) += c1 * c2;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// (1 + x_i)^n through the cap.
fn numerator_factor(s: usize, i: usize, n: usize, cap: u32) -> Vec<Vec<(Vec<u32>, Integer)>> {
    (0..=cap)
        .map(|m| {
            let c = binomial(n as i64, m as i64);
            if c.is_zero() {
                return vec![];
            }
            let mut e = vec![0; s];
            e[i] = m;
            vec![(e, c)]
        })
        .collect()
}

/// 1/((1 + x_i - x_j)(1 + x_j - x_i)) = Σ_k (x_i - x_j)^{2k} through the cap.
fn paired_denominator_factor(s: usize, i: usize, j: usize, cap: u32) -> Vec<Vec<(Vec<u32>, Integer)>> {
    (0..=cap)
        .map(|deg| {
            if deg % 2 == 1 {
                return vec![];
            }
            (0..=deg)
                .map(|m| {
                    let mut e = vec![0; s];
                    e[i] = deg - m;
                    e[j] = m;
                    let c = binomial(deg as i64, m as i64);
                    (e, if m % 2 == 0 { c } else { -c })
                })
                .collect()
        })
        .collect()
}

/// ∏(1 + x_i)^n / ∏_{i≠j}(1 + x_i - x_j) in s variables, truncated at
/// total degree s(d-s).
pub fn expand_degree_series(spec: &StratumSpec) -> Result<TruncatedSymSeries> {
    let StratumSpec { s, d, n } = *spec;
    let cap = (s * (d - s)) as u32;
    expand_chern_series(s, n, cap)
}

/// Same series for an arbitrary cap.
pub fn expand_chern_series(s: usize, n: usize, cap: u32) -> Result<TruncatedSymSeries> {
    let mut acc: Kernel = HashMap::new();
    acc.insert(vec![0; s], Integer::one());
    for i in 0..s {
        acc = mul_factor(&acc, &numerator_factor(s, i, n, cap), cap);
    }
    for i in 0..s {
        for j in i + 1..s {
            acc = mul_factor(&acc, &paired_denominator_factor(s, i, j, cap), cap);
        }
    }
    Ok(TruncatedSymSeries::from_terms(
        s,
        cap,
        acc.into_iter().map(|(e, c)| (e, Rational::from_integer(c))),
    ))
}
