//! Multivariate polynomials in the matrix variables a_{ij} under the lex
//! order, with division, Buchberger completion, monomial-ideal utilities and
//! univariate rational-function series.

mod buchberger;
mod division;
mod monomial;
pub mod monomial_ideal;
mod poly;
mod series;

pub use buchberger::{
    buchberger_complete, check_all_s_pairs, reduce_basis, Budget, Completion, CompletionStatus, PairCheck,
};
pub use division::{divide, normal_form, s_polynomial, Division};
pub use monomial::{Monomial, VarId};
pub use monomial_ideal::standard_monomial_count;
pub use poly::{MonomialJson, MultiPoly, PolyJson, PolyRing, TermJson};
pub use series::{series_coefficients, UniPoly, UniRationalFn};

use crate::arith::Field;

/// Lex-greatest term of a nonzero polynomial.
pub fn lex_leading_term<F: Field>(f: &MultiPoly<F>) -> crate::Result<(Monomial, F::Elem)> {
    f.leading_term().map(|(m, c)| (m.clone(), c.clone()))
}
