use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::series::TruncatedSymSeries;
use crate::arith::{as_integer, Integer};
use crate::error::{Error, Result};

/// Weakly decreasing positive parts. Ordered by size, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts decreasingly and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The s×w rectangle (w^s).
    pub fn rectangle(s: usize, w: u32) -> Self {
        Self::new(vec![w; s])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts padded with zeros to length s.
    pub fn padded(&self, s: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(s.max(v.len()), 0);
        v
    }

    /// Adds a full column of height s: λ + (1^s).
    pub fn add_column(&self, s: usize) -> Self {
        Self::new(self.padded(s).into_iter().map(|p| p + 1).collect())
    }

    /// Partitions with at most `s` parts and size at most `max_size`.
    pub fn all_up_to(s: usize, max_size: u32) -> Vec<Partition> {
        fn rec(left: usize, max_part: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if left == 0 {
                return;
            }
            for p in (1..=max_part.min(budget)).rev() {
                cur.push(p);
                rec(left - 1, p, budget - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(s, max_size, max_size, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Σ c_λ s_λ(x_1..x_s), complete through total degree `through`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub s: usize,
    pub through: u32,
    coeffs: BTreeMap<Partition, Integer>,
}

impl SchurExpansion {
    pub fn from_coeffs(s: usize, through: u32, coeffs: impl IntoIterator<Item = (Partition, Integer)>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SchurExpansion { s, through, coeffs }
    }

    pub fn coeff(&self, lambda: &Partition) -> Integer {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in partition order.
    pub fn coeffs(&self) -> &BTreeMap<Partition, Integer> {
        &self.coeffs
    }

    /// Multiplies by e_s^k, which shifts every partition by k full columns.
    pub fn shift_columns(&self, k: u32) -> Self {
        let coeffs = self.coeffs.iter().map(|(lam, c)| {
            let shifted = (0..k).fold(lam.clone(), |acc, _| acc.add_column(self.s));
            (shifted, c.clone())
        });
        SchurExpansion::from_coeffs(self.s, self.through + k * self.s as u32, coeffs)
    }

    /// Keeps only partitions that fit in the s×w box.
    pub fn fit_in_box(&self, w: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(lam, _)| lam.len() <= self.s && lam.parts().first().is_none_or(|&p| p <= w))
            .map(|(l, c)| (l.clone(), c.clone()));
        SchurExpansion::from_coeffs(self.s, self.through, coeffs)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(l, c)| format!("{l}: {c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Permutations of 0..s with their signs, by Heap's algorithm.
pub(crate) fn signed_permutations(s: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..s).collect();
    let mut c = vec![0usize; s];
    let mut sign = 1;
    out.push((p.clone(), sign));
    let mut i = 1;
    while i < s {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            sign = -sign;
            out.push((p.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Schur coefficients by the bialternant: with δ = (s-1, ..., 1, 0) and
/// a_δ = ∏_{i<j}(x_i - x_j), the coefficient of s_λ in f is the coefficient
/// of x^{λ+δ} in f·a_δ, i.e. Σ_σ sgn(σ) f[λ + δ - σ(δ)].
pub fn schur_decompose(f: &TruncatedSymSeries) -> Result<SchurExpansion> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let s = f.vars();
    let delta: Vec<i64> = (0..s).map(|i| (s - 1 - i) as i64).collect();
    let perms = signed_permutations(s);
    let mut coeffs = Vec::new();
    for lam in Partition::all_up_to(s, f.cap()) {
        let alpha: Vec<i64> = lam.padded(s).iter().zip(&delta).map(|(&l, &d)| l as i64 + d).collect();
        let mut acc = crate::arith::Rational::zero();
        for (perm, sign) in &perms {
            let exps: Option<Vec<u32>> =
                (0..s).map(|i| u32::try_from(alpha[i] - delta[perm[i]]).ok()).collect();
            if let Some(e) = exps {
                let c = f.coeff(&e);
                if *sign > 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
        }
        let Some(c) = as_integer(&acc) else {
            return Err(Error::NonIntegralSchur {
                partition: lam.parts().to_vec(),
                coeff: acc.to_string(),
            });
        };
        coeffs.push((lam, c));
    }
    Ok(SchurExpansion::from_coeffs(s, f.cap(), coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::degrees::series::expand_degree_series;
    use crate::kalman::StratumSpec;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    /// s_λ(x_1..x_s) as a sum over semistandard tableaux with entries in 1..s.
    pub(crate) fn schur_by_tableaux(lam: &Partition, s: usize, cap: u32) -> TruncatedSymSeries {
        let shape = lam.parts().to_vec();
        let cells: Vec<(usize, usize)> =
            shape.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
        let mut fill: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
        let mut terms = Vec::new();
        fn rec(
            k: usize,
            cells: &[(usize, usize)],
            fill: &mut Vec<Vec<usize>>,
            s: usize,
            terms: &mut Vec<(Vec<u32>, Rational)>,
        ) {
            if k == cells.len() {
                let mut e = vec![0u32; s];
                for row in fill.iter() {
                    for &v in row {
                        e[v] += 1;
                    }
                }
                terms.push((e, Rational::from_integer(1.into())));
                return;
            }
            let (r, c) = cells[k];
            // rows weakly increase, columns strictly increase
            let lo_row = if c > 0 { fill[r][c - 1] } else { 0 };
            let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 0 };
            for v in lo_row.max(lo_col)..s {
                fill[r][c] = v;
                rec(k + 1, cells, fill, s, terms);
            }
        }
        rec(0, &cells, &mut fill, s, &mut terms);
        TruncatedSymSeries::from_terms(s, cap, terms)
    }

    #[test]
    fn top_elementary_is_a_column() {
        for s in 1..5 {
            let e = TruncatedSymSeries::top_elementary(s, s as u32 + 2);
            let exp = schur_decompose(&e).unwrap();
            assert_eq!(exp.coeffs().len(), 1);
            assert_eq!(exp.coeff(&Partition::new(vec![1; s])), 1.into());
        }
    }

    #[test]
    fn tableau_schur_round_trip() {
        for s in 1..=3 {
            for lam in Partition::all_up_to(s, 6) {
                let f = schur_by_tableaux(&lam, s, 6);
                let exp = schur_decompose(&f).unwrap();
                assert_eq!(exp.coeffs().len(), 1, "s={s} λ={lam}");
                assert_eq!(exp.coeff(&lam), 1.into(), "s={s} λ={lam}");
            }
        }
    }

    #[test]
    fn example_two_three_five() {
        let f = expand_degree_series(&StratumSpec::new(2, 3, 5).unwrap()).unwrap();
        let exp = schur_decompose(&f).unwrap();
        let text = exp.to_string();
        assert_eq!(text, "{(): 1, (1): 5, (1,1): 12, (2): 11}");
    }

    #[test]
    fn rejects_asymmetric_input() {
        let f = TruncatedSymSeries::from_terms(2, 2, [(vec![2, 0], q(1))]);
        assert!(matches!(schur_decompose(&f), Err(Error::NotSymmetric)));
    }

    #[test]
    fn rejects_fractional_coefficients() {
        let half = Rational::new(1.into(), 2.into());
        let f = TruncatedSymSeries::from_terms(2, 2, [(vec![1, 0], half.clone()), (vec![0, 1], half)]);
        assert!(matches!(schur_decompose(&f), Err(Error::NonIntegralSchur { .. })));
    }

    #[test]
    fn column_shift_matches_multiplication() {
        // e_s · s_λ = s_{λ + 1^s}, checked on monomial expansions
        for s in 1..=3 {
            for lam in Partition::all_up_to(s, 4) {
                let cap = 4 + s as u32;
                let product = schur_by_tableaux(&lam, s, cap).mul(&TruncatedSymSeries::top_elementary(s, cap));
                let exp = schur_decompose(&product).unwrap();
                let single = SchurExpansion::from_coeffs(s, cap, [(lam.clone(), 1.into())]).shift_columns(1);
                assert_eq!(exp.coeffs(), single.coeffs(), "s={s} λ={lam}");
            }
        }
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(Partition::all_up_to(2, 3).len(), 1 + 1 + 2 + 2);
        assert_eq!(Partition::all_up_to(3, 4).len(), 1 + 1 + 2 + 3 + 4);
        assert_eq!(Partition::new(vec![1, 0, 2]).parts(), &[2, 1]);
        assert_eq!(signed_permutations(3).iter().filter(|(_, s)| *s > 0).count(), 3);
        assert_eq!(signed_permutations(4).len(), 24);
    }
}
