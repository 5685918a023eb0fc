//! Degrees of the strata K_{s,d,n}: Schur coefficients of the Chern-root
//! series, closed forms for special strata, and the multidegree of the
//! eigenvector incidence.

mod formulas;
mod schur;
mod series;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Integer;
use crate::error::{Error, Result};
use crate::kalman::StratumSpec;

pub use formulas::{
    asymptotic_leading, degree_binomial, degree_koutschan, degree_univariate, grassmannian_degree,
    multidegree_incidence, verify_polynomiality, BiDegree, PolynomialityReport,
};
pub use schur::{schur_decompose, Partition, SchurExpansion};
pub use series::{expand_chern_series, expand_degree_series, TruncatedSymSeries};

/// Coefficient of s_{((d-s)^s)} in the Schur expansion of the Chern-root
/// series. For s = d the cap is 0 and this is the constant term 1, the
/// degree of the linear space K_{d,d,n}.
pub fn degree_schur(spec: &StratumSpec) -> Result<Integer> {
    let expansion = schur_decompose(&expand_degree_series(spec)?)?;
    Ok(expansion.coeff(&Partition::rectangle(spec.s, (spec.d - spec.s) as u32)))
}

/// The same degree read off as the full-box coefficient after multiplying
/// by e_s^{n-d}: shift every partition by n-d columns and keep those in the
/// s×(n-s) box.
pub fn degree_by_column_shift(spec: &StratumSpec) -> Result<Integer> {
    let StratumSpec { s, d, n } = *spec;
    let expansion = schur_decompose(&expand_degree_series(spec)?)?;
    let boxed = expansion.shift_columns((n - d) as u32).fit_in_box((n - s) as u32);
    Ok(boxed.coeff(&Partition::rectangle(s, (n - s) as u32)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeMethod {
    Schur,
    Binomial,
    Univariate,
    Koutschan,
}

impl DegreeMethod {
    pub const ALL: [DegreeMethod; 4] =
        [DegreeMethod::Schur, DegreeMethod::Binomial, DegreeMethod::Univariate, DegreeMethod::Koutschan];

    pub fn name(self) -> &'static str {
        match self {
            DegreeMethod::Schur => "schur",
            DegreeMethod::Binomial => "binomial",
            DegreeMethod::Univariate => "univariate",
            DegreeMethod::Koutschan => "koutschan",
        }
    }

    pub fn applies_to(self, spec: &StratumSpec) -> bool {
        match self {
            DegreeMethod::Schur => true,
            DegreeMethod::Binomial => spec.s == 1,
            DegreeMethod::Univariate => spec.d >= 2 && spec.s + 1 == spec.d,
            DegreeMethod::Koutschan => spec.s == 2 && spec.d >= 3,
        }
    }

    pub fn compute(self, spec: &StratumSpec) -> Result<Integer> {
        match self {
            DegreeMethod::Schur => degree_schur(spec),
            DegreeMethod::Binomial => degree_binomial(spec),
            DegreeMethod::Univariate => degree_univariate(spec),
            DegreeMethod::Koutschan => {
                if spec.s != 2 {
                    return Err(Error::MethodNotApplicable {
                        method: "koutschan",
                        requirement: "s = 2",
                    });
                }
                degree_koutschan(spec.d, spec.n)
            }
        }
    }
}

impl fmt::Display for DegreeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DegreeMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DegreeMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown degree method {s:?}")))
    }
}

/// Every applicable method's value for one stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub s: usize,
    pub d: usize,
    pub n: usize,
    #[serde(serialize_with = "ser_values")]
    pub values: Vec<(DegreeMethod, Integer)>,
    pub agree: bool,
}

fn ser_values<S: serde::Serializer>(v: &[(DegreeMethod, Integer)], ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = ser.serialize_map(Some(v.len()))?;
    for (m, x) in v {
        map.serialize_entry(m.name(), &x.to_string())?;
    }
    map.end()
}

impl DegreeReport {
    pub fn degree(&self) -> &Integer {
        &self.values[0].1
    }

    pub fn methods(&self) -> Vec<DegreeMethod> {
        self.values.iter().map(|(m, _)| *m).collect()
    }
}

pub fn degree_all(spec: &StratumSpec) -> Result<DegreeReport> {
    let values = DegreeMethod::ALL
        .into_iter()
        .filter(|m| m.applies_to(spec))
        .map(|m| Ok((m, m.compute(spec)?)))
        .collect::<Result<Vec<_>>>()?;
    let agree = values.iter().all(|(_, v)| *v == values[0].1);
    Ok(DegreeReport {
        s: spec.s,
        d: spec.d,
        n: spec.n,
        values,
        agree,
    })
}

/// All strata 1 ≤ s ≤ d ≤ n ≤ nmax, computed in parallel, in (n, d, s) order.
pub fn degree_grid(nmax: usize) -> Result<Vec<DegreeReport>> {
    let specs: Vec<StratumSpec> = (1..=nmax)
        .flat_map(|n| (1..=n).flat_map(move |d| (1..=d).map(move |s| StratumSpec { s, d, n })))
        .collect();
    specs.par_iter().map(degree_all).collect()
}
