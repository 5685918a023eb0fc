use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// The matrix variable a_{row,col} (1-based).
///
/// Variables are totally ordered row-major *descending*:
/// a_{11} > a_{12} > ... > a_{1n} > a_{21} > ... > a_{nn}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarId {
    pub row: u16,
    pub col: u16,
}

impl VarId {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "variables are 1-based");
        VarId {
            row: row as u16,
            col: col as u16,
        }
    }

    /// Name in the JSON schema, e.g. `a_3_1`.
    pub fn json_name(&self) -> String {
        format!("a_{}_{}", self.row, self.col)
    }

    pub fn parse_json_name(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid variable name {s:?}"));
        let rest = s.strip_prefix("a_").ok_or_else(bad)?;
        let (r, c) = rest.split_once('_').ok_or_else(bad)?;
        let row: usize = r.parse().map_err(|_| bad())?;
        let col: usize = c.parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(VarId::new(row, col))
    }

    /// `a31` when both indices are single digits and `compact` is set,
    /// `a_3_1` otherwise.
    pub fn text_name(&self, compact: bool) -> String {
        if compact && self.row <= 9 && self.col <= 9 {
            format!("a{}{}", self.row, self.col)
        } else {
            self.json_name()
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        (other.row, other.col).cmp(&(self.row, self.col))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial stored sparsely as (variable, exponent) pairs, greatest
/// variable first, with no zero exponents. `Ord` is the lexicographic term
/// order induced by [`VarId`]'s order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(VarId, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            factors: vec![(v, 1)],
            degree: 1,
        }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut factors: Vec<(VarId, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match factors.iter_mut().find(|(w, _)| *w == v) {
                Some(f) => f.1 += e,
                None => factors.push((v, e)),
            }
        }
        factors.sort_by_key(|f| std::cmp::Reverse(f.0));
        let degree = factors.iter().map(|f| f.1).sum();
        Monomial { factors, degree }
    }

    /// Product of the given variables (with repetition).
    pub fn of_vars(vars: &[VarId]) -> Self {
        Monomial::from_pairs(vars.iter().map(|&v| (v, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.factors.iter().find(|f| f.0 == v).map_or(0, |f| f.1)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.factors.iter().map(|f| f.0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|f| f.1 == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            factors: out,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut j = 0;
        let b = &other.factors;
        for &(v, e) in &self.factors {
            while j < b.len() && b[j].0 > v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let pairs = other.factors.iter().filter_map(|&(v, e)| {
            let r = e - self.exponent(v);
            (r > 0).then_some((v, r))
        });
        let factors: Vec<_> = pairs.collect();
        let degree = other.degree - self.degree;
        Some(Monomial { factors, degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        let degree = out.iter().map(|f| f.1).sum();
        Monomial { factors: out, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.vars().all(|v| other.exponent(v) == 0)
    }

    pub fn to_text(&self, compact: bool) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for &(v, e) in &self.factors {
            let name = v.text_name(compact);
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }

    pub(crate) fn max_index(&self) -> u16 {
        self.factors.iter().map(|(v, _)| v.row.max(v.col)).max().unwrap_or(0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.factors, &other.factors);
        for k in 0..a.len().min(b.len()) {
            match a[k].0.cmp(&b[k].0) {
                Ordering::Equal => match a[k].1.cmp(&b[k].1) {
                    Ordering::Equal => continue,
                    o => return o,
                },
                // the side holding the greater variable has a positive
                // exponent where the other has zero
                o => return o,
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(true))
    }
}
