//! The ideal I_{2,n} of matrices with an eigenvector in span(e_1, e_2):
//! its explicit lex Gröbner basis of quadrics and cubics, the initial
//! monomial ideal and its Stanley-Reisner complex, and Hilbert data.

mod facets;
mod hilbert;

use serde::Serialize;

use crate::arith::{binomial, Field, RationalField};
use crate::error::{Error, Result};
use crate::kalman::{small_kalman_matrix, symbolic_matrix, all_minors};
use crate::polyring::{check_all_s_pairs, normal_form, Monomial, MultiPoly, PairCheck, PolyRing, VarId};

pub use facets::{face_series, initial_ideal_and_facets, shelling_h_vector, FacetComplex, InitialIdeal};
pub use hilbert::{
    agreement_threshold, hilbert_function, hilbert_polynomial, hilbert_series_closed, hilbert_series_facet_form,
    shelling_series_identity, HilbertPolynomial,
};

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::SizeOutOfRange { n, reason: "need n >= 3" });
    }
    Ok(())
}

fn a(i: usize, j: usize) -> VarId {
    VarId::new(i, j)
}

/// The explicit Gröbner basis of I_{2,n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GB2Basis<F: Field> {
    pub n: usize,
    /// a_{i1}a_{j2} - a_{i2}a_{j1} for 3 ≤ i < j ≤ n
    pub quadrics: Vec<MultiPoly<F>>,
    /// indexed by 3 ≤ i ≤ j ≤ n
    pub cubics: Vec<MultiPoly<F>>,
    pub reduced: bool,
}

impl<F: Field> GB2Basis<F> {
    /// Quadrics followed by cubics.
    pub fn elements(&self) -> Vec<MultiPoly<F>> {
        self.quadrics.iter().chain(&self.cubics).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.quadrics.len() + self.cubics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Index pairs (i, j) with 3 ≤ i < j ≤ n.
pub fn quadric_indices(n: usize) -> Vec<(usize, usize)> {
    (3..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Index pairs (i, j) with 3 ≤ i ≤ j ≤ n.
pub fn cubic_indices(n: usize) -> Vec<(usize, usize)> {
    (3..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect()
}

pub fn quadric_lead(i: usize, j: usize) -> Monomial {
    Monomial::of_vars(&[a(i, 1), a(j, 2)])
}

pub fn cubic_lead(i: usize, j: usize) -> Monomial {
    Monomial::of_vars(&[a(1, 1), a(i, 2), a(j, 1)])
}

pub fn quadric<F: Field>(field: &F, i: usize, j: usize) -> MultiPoly<F> {
    MultiPoly::from_terms(
        field,
        [
            (field.one(), quadric_lead(i, j)),
            (field.from_i64(-1), Monomial::of_vars(&[a(i, 2), a(j, 1)])),
        ],
    )
}

/// a11 a_{i2} a_{j1} - a12 a_{i1} a_{j1} + a21 a_{i2} a_{j2} - a22 a_{i1} a_{j2}.
/// In reduced form the last term becomes -a22 a_{i2} a_{j1} when i < j.
pub fn cubic<F: Field>(field: &F, i: usize, j: usize, reduced: bool) -> MultiPoly<F> {
    let last = if reduced && i < j { [a(2, 2), a(i, 2), a(j, 1)] } else { [a(2, 2), a(i, 1), a(j, 2)] };
    MultiPoly::from_terms(
        field,
        [
            (field.one(), cubic_lead(i, j)),
            (field.from_i64(-1), Monomial::of_vars(&[a(1, 2), a(i, 1), a(j, 1)])),
            (field.one(), Monomial::of_vars(&[a(2, 1), a(i, 2), a(j, 2)])),
            (field.from_i64(-1), Monomial::of_vars(&last)),
        ],
    )
}

pub fn gb_generators<F: Field>(field: &F, n: usize, reduced: bool) -> Result<GB2Basis<F>> {
    check_n(n)?;
    Ok(GB2Basis {
        n,
        quadrics: quadric_indices(n).into_iter().map(|(i, j)| quadric(field, i, j)).collect(),
        cubics: cubic_indices(n).into_iter().map(|(i, j)| cubic(field, i, j, reduced)).collect(),
        reduced,
    })
}

/// Buchberger's criterion on the explicit basis over Q.
pub fn verify_buchberger(n: usize) -> Result<PairCheck> {
    Ok(check_all_s_pairs(&gb_generators(&RationalField, n, false)?.elements()))
}

/// Whether each basis element's lex leading monomial is the expected one.
pub fn leading_terms_match<F: Field>(basis: &GB2Basis<F>) -> bool {
    let quad = basis.quadrics.iter().zip(quadric_indices(basis.n)).all(|(q, (i, j))| {
        q.leading_term().is_ok_and(|(m, c)| *m == quadric_lead(i, j) && basis.quadrics[0].field().is_one(c))
    });
    let cub = basis.cubics.iter().zip(cubic_indices(basis.n)).all(|(g, (i, j))| {
        g.leading_term().is_ok_and(|(m, c)| *m == cubic_lead(i, j) && g.field().is_one(c))
    });
    quad && cub
}

/// Every 2×2 minor of the small Kalman matrix, in all n² variables, has
/// normal form 0 against the explicit basis.
pub fn small_minors_reduce_to_zero(n: usize) -> Result<bool> {
    check_n(n)?;
    let ring = PolyRing::new(RationalField);
    let small = small_kalman_matrix(&ring, &symbolic_matrix(&RationalField, n), 2)?;
    let basis = gb_generators(&RationalField, n, false)?.elements();
    Ok(all_minors(&ring, &small, 2)?.iter().all(|m| normal_form(m, &basis).is_zero()))
}

/// One named check in machine-readable form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub pass: bool,
    pub details: serde_json::Value,
}

/// Runs every d = 2 check for one n; Hilbert data through degree `max_t`.
pub fn gb_reports(n: usize, max_t: u32) -> Result<Vec<CheckReport>> {
    check_n(n)?;
    let basis = gb_generators(&RationalField, n, false)?;
    let mut out = Vec::new();

    let counts_ok = basis.quadrics.len() as i64 == binomial(n as i64 - 2, 2).try_into().unwrap_or(-1)
        && basis.cubics.len() as i64 == binomial(n as i64 - 1, 2).try_into().unwrap_or(-1);
    out.push(CheckReport {
        check: "generator_counts".into(),
        n,
        pass: counts_ok,
        details: serde_json::json!({"quadrics": basis.quadrics.len(), "cubics": basis.cubics.len()}),
    });
    out.push(CheckReport {
        check: "leading_terms".into(),
        n,
        pass: leading_terms_match(&basis),
        details: serde_json::json!({}),
    });

    let pairs = check_all_s_pairs(&basis.elements());
    out.push(CheckReport {
        check: "buchberger".into(),
        n,
        pass: pairs.all_reduce_to_zero(),
        details: serde_json::json!({
            "pairs_checked": pairs.pairs_checked,
            "nonzero_pairs": pairs.nonzero_pairs,
        }),
    });

    let init = initial_ideal_and_facets(n)?;
    out.push(CheckReport {
        check: "initial_ideal".into(),
        n,
        pass: init.intersection_matches && init.complex.is_unmixed(),
        details: serde_json::json!({
            "generators": init.generators.iter().map(|m| m.to_text(true)).collect::<Vec<_>>(),
            "facets": init.complex.facets.len(),
            "codimension": init.complex.codimension(),
            "degree": init.complex.degree(),
            "support": init.complex.support.len(),
            "free": init.complex.free_count,
        }),
    });

    let closed = hilbert_series_closed(n)?.series_coefficients(max_t as usize)?;
    let counted: Vec<_> = (0..=max_t).map(|t| hilbert_function(n, t)).collect::<Result<_>>()?;
    out.push(CheckReport {
        check: "hilbert_series".into(),
        n,
        pass: closed == counted
            && hilbert_series_facet_form(n)?.equals(&hilbert_series_closed(n)?)
            && shelling_series_identity(n)?,
        details: serde_json::json!({
            "hilbert_function": counted.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "closed_form": hilbert_series_closed(n)?.to_string(),
        }),
    });

    let hp = hilbert_polynomial(n)?;
    let threshold = agreement_threshold(n, max_t)?;
    out.push(CheckReport {
        check: "hilbert_polynomial".into(),
        n,
        pass: threshold.is_some(),
        details: serde_json::json!({
            "degree": hp.degree(),
            "threshold": threshold,
            "normalized_leading_coefficient": hp.normalized_leading_coefficient().to_string(),
        }),
    });

    out.push(CheckReport {
        check: "small_minors".into(),
        n,
        pass: small_minors_reduce_to_zero(n)?,
        details: serde_json::json!({}),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kalman::{stratum_generators, GeneratorSource, StratumSpec};
    use crate::polyring::{buchberger_complete, reduce_basis, Budget, CompletionStatus};

    #[test]
    fn counts() {
        for (n, q, c) in [(3, 0, 1), (4, 1, 3), (5, 3, 6), (8, 15, 21)] {
            let b = gb_generators(&RationalField, n, false).unwrap();
            assert_eq!((b.quadrics.len(), b.cubics.len()), (q, c), "n={n}");
        }
        assert!(gb_generators(&RationalField, 2, false).is_err());
    }

    #[test]
    fn n4_quadric_text() {
        let b = gb_generators(&RationalField, 4, false).unwrap();
        assert_eq!(b.quadrics[0].to_text(), "a31*a42 - a32*a41");
        assert_eq!(b.cubics[0].to_text(), "a11*a31*a32 - a12*a31^2 + a21*a32^2 - a22*a31*a32");
    }

    #[test]
    fn leading_terms_are_underlined() {
        for n in 3..9 {
            for reduced in [false, true] {
                assert!(leading_terms_match(&gb_generators(&RationalField, n, reduced).unwrap()));
            }
        }
    }

    #[test]
    fn buchberger_small_n() {
        let r4 = verify_buchberger(4).unwrap();
        assert_eq!(r4.pairs_checked, 6);
        assert!(r4.all_reduce_to_zero());
        let r5 = verify_buchberger(5).unwrap();
        assert_eq!(r5.pairs_checked, 36);
        assert!(r5.all_reduce_to_zero());
        // a single element is trivially a Gröbner basis
        assert!(check_all_s_pairs(&gb_generators(&RationalField, 3, false).unwrap().elements()).all_reduce_to_zero());
    }

    #[test]
    fn generators_are_reduced_kalman_minors() {
        for n in 3..7 {
            let spec = StratumSpec::new(1, 2, n).unwrap();
            let minors = stratum_generators(&RationalField, &spec, GeneratorSource::Reduced).unwrap();
            for g in gb_generators(&RationalField, n, false).unwrap().elements() {
                assert!(minors.iter().any(|m| *m == g || *m == g.neg()), "n={n}: {g} is not a minor");
            }
        }
    }

    #[test]
    fn reduced_variant_is_the_reduced_basis() {
        for n in 3..7 {
            let plain = gb_generators(&RationalField, n, false).unwrap();
            let red = gb_generators(&RationalField, n, true).unwrap();
            let mut expected = red.elements();
            let mut got = reduce_basis(&plain.elements());
            let key = |p: &MultiPoly<RationalField>| p.leading_monomial().unwrap().clone();
            expected.sort_by_key(key);
            got.sort_by_key(key);
            assert_eq!(got, expected, "n={n}");
            for (p, r) in plain.elements().iter().zip(red.elements()) {
                let diff = p.sub(&r);
                assert!(normal_form(&diff, &plain.elements()).is_zero());
                assert!(normal_form(&diff, &red.elements()).is_zero());
            }
        }
    }

    #[test]
    fn completion_of_minors_recovers_the_basis() {
        // independent route: complete the raw 2x2 minors from scratch
        for n in 3..6 {
            let spec = StratumSpec::new(1, 2, n).unwrap();
            let minors = stratum_generators(&RationalField, &spec, GeneratorSource::Reduced).unwrap();
            let c = buchberger_complete(&minors, Budget::default());
            assert_eq!(c.status, CompletionStatus::Complete);
            let mut expected = gb_generators(&RationalField, n, true).unwrap().elements();
            let mut got = c.basis;
            let key = |p: &MultiPoly<RationalField>| p.leading_monomial().unwrap().clone();
            expected.sort_by_key(key);
            got.sort_by_key(key);
            assert_eq!(got, expected, "n={n}");
        }
    }

    #[test]
    fn small_minors_reduce() {
        assert!(small_minors_reduce_to_zero(4).unwrap());
        assert!(small_minors_reduce_to_zero(5).unwrap());
    }

    #[test]
    fn census_sources_generate_inside_the_ideal() {
        let spec = StratumSpec::new(1, 2, 4).unwrap();
        let basis = gb_generators(&RationalField, 4, false).unwrap().elements();
        for source in [GeneratorSource::Reduced, GeneratorSource::Small] {
            for g in stratum_generators(&RationalField, &spec, source).unwrap() {
                assert!(normal_form(&g, &basis).is_zero());
            }
        }
    }

    #[test]
    fn reports_pass() {
        let reports = gb_reports(4, 6).unwrap();
        assert_eq!(reports.len(), 7);
        for r in &reports {
            assert!(r.pass, "{}: {}", r.check, r.details);
        }
        let json = serde_json::to_value(&reports[2]).unwrap();
        assert_eq!(json["check"], "buchberger");
        assert_eq!(json["n"], 4);
        assert_eq!(json["pass"], true);
        assert_eq!(json["details"]["pairs_checked"], 6);
    }
}
