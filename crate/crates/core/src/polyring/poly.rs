use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, VarId};
use crate::arith::{Field, FieldTag, Ring};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial in the variables a_{ij}.
///
/// Terms are kept sorted lex-descending with no zero coefficients, so the
/// zero polynomial has no terms and the leading term is always first.
#[derive(Clone, Debug)]
pub struct MultiPoly<F: Field> {
    field: F,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> Hash for MultiPoly<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: &F) -> Self {
        MultiPoly {
            field: field.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::term(field, c, Monomial::one())
    }

    pub fn term(field: &F, c: F::Elem, m: Monomial) -> Self {
        let terms = if field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        MultiPoly {
            field: field.clone(),
            terms,
        }
    }

    pub fn var(field: &F, v: VarId) -> Self {
        Self::term(field, field.one(), Monomial::var(v))
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(field: &F, terms: impl IntoIterator<Item = (F::Elem, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (c, m) in terms {
            let e = acc.entry(m).or_insert_with(|| field.zero());
            *e = field.add(e, &c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly {
            field: field.clone(),
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Lex-greatest monomial and its coefficient.
    pub fn leading_term(&self) -> Result<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|t| t.0)
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.iter().flat_map(|t| t.0.vars()).collect();
        vs.sort_by(|a, b| b.cmp(a));
        vs.dedup();
        vs
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let fix = |c: &F::Elem| if negate_other { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), fix(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { f.sub(&a[i].1, &b[j].1) } else { f.add(&a[i].1, &b[j].1) };
                    if !f.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
        MultiPoly {
            field: f.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(c, &Monomial::one())
    }

    /// Multiplication by c·m; lex order is multiplicative so the term order
    /// is preserved.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f);
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), f.mul(tc, c))).collect();
        MultiPoly {
            field: f.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(ca, cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { field: f.clone(), terms }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Evaluates at a point; variables missing from `point` evaluate to zero.
    pub fn eval(&self, point: &dyn Fn(VarId) -> F::Elem) -> F::Elem {
        let f = &self.field;
        self.terms.iter().fold(f.zero(), |acc, (m, c)| {
            let v = m.factors().iter().fold(c.clone(), |acc, &(var, e)| {
                let x = point(var);
                (0..e).fold(acc, |acc, _| f.mul(&acc, &x))
            });
            f.add(&acc, &v)
        })
    }

    /// Sets the variables selected by `kill` to zero.
    pub fn restrict_zero(&self, kill: impl Fn(VarId) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| !m.vars().any(&kill)).cloned().collect();
        MultiPoly {
            field: self.field.clone(),
            terms,
        }
    }

    fn compact_names(&self) -> bool {
        self.terms.iter().all(|t| t.0.max_index() <= 9)
    }

    /// Text form, e.g. `a31*a42 - a32*a41`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let compact = self.compact_names();
        let f = &self.field;
        let minus_one = f.neg(&f.one());
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = split_sign(c);
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag);
            } else {
                let unit = *c == f.one() || *c == minus_one;
                if !unit {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&m.to_text(compact));
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            field: self.field.tag(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    monomial: MonomialJson(m.clone()),
                })
                .collect(),
        }
    }

    pub fn from_json(field: &F, j: &PolyJson) -> Result<Self> {
        if j.field != field.tag() {
            return Err(Error::FieldMismatch {
                expected: field.tag().to_string(),
                found: j.field.to_string(),
            });
        }
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((field.parse_elem(&t.coeff)?, t.monomial.0.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(field, terms))
    }
}

fn split_sign(c: &impl fmt::Display) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The polynomial ring over `F`, as a [`Ring`] context for matrices of
/// polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = MultiPoly<F>;

    fn zero(&self) -> MultiPoly<F> {
        MultiPoly::zero(&self.field)
    }
    fn one(&self) -> MultiPoly<F> {
        MultiPoly::constant(&self.field, self.field.one())
    }
    fn from_i64(&self, v: i64) -> MultiPoly<F> {
        MultiPoly::constant(&self.field, self.field.from_i64(v))
    }
    fn add(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.add(b)
    }
    fn sub(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.sub(b)
    }
    fn mul(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.mul(b)
    }
    fn neg(&self, a: &MultiPoly<F>) -> MultiPoly<F> {
        a.neg()
    }
    fn is_zero(&self, a: &MultiPoly<F>) -> bool {
        a.is_zero()
    }
}

/// `{"field": ..., "terms": [{"coeff": "...", "monomial": {"a_3_1": 1}}]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub field: FieldTag,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: MonomialJson,
}

/// A monomial serialized as a map from variable name to exponent, in
/// variable order.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialJson(pub Monomial);

impl Serialize for MonomialJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.factors().len()))?;
        for (v, e) in self.0.factors() {
            map.serialize_entry(&v.json_name(), e)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MonomialJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: HashMap<String, u32> = HashMap::deserialize(d)?;
        let pairs = raw
            .into_iter()
            .map(|(k, e)| VarId::parse_json_name(&k).map(|v| (v, e)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(MonomialJson(Monomial::from_pairs(pairs)))
    }
}
