//! Multivariate division with respect to the lex order, and S-polynomials.

use super::monomial::Monomial;
use super::poly::MultiPoly;
use crate::arith::Field;
use crate::error::Result;

/// Result of dividing `f` by an ordered list of divisors:
/// f = Σ quotients[i]·divisors[i] + remainder.
#[derive(Clone, Debug)]
pub struct Division<F: Field> {
    pub quotients: Vec<MultiPoly<F>>,
    pub remainder: MultiPoly<F>,
}

/// Full multivariate division. The current leading term of the running
/// dividend is always reduced first, by the first divisor (in list order)
/// whose leading monomial divides it; terms no divisor can touch move to the
/// remainder.
pub fn divide<F: Field>(f: &MultiPoly<F>, divisors: &[MultiPoly<F>]) -> Division<F> {
    let field = f.field().clone();
    let leads: Vec<(Monomial, F::Elem)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term().expect("divisors must be nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut quotients = vec![MultiPoly::zero(&field); divisors.len()];
    let mut rem_terms = Vec::new();
    let mut p = f.clone();
    while let Ok((lm, lc)) = p.leading_term() {
        let hit = leads.iter().position(|(m, _)| m.divides(lm));
        match hit {
            Some(k) => {
                let q_mon = leads[k].0.quotient_of(lm).expect("divides");
                let q_coef = field.div(lc, &leads[k].1).expect("nonzero lead");
                quotients[k] = quotients[k].add(&MultiPoly::term(&field, q_coef.clone(), q_mon.clone()));
                p = p.sub(&divisors[k].mul_term(&q_coef, &q_mon));
            }
            None => {
                let (m, c) = (lm.clone(), lc.clone());
                rem_terms.push((c.clone(), m.clone()));
                p = p.sub(&MultiPoly::term(&field, c, m));
            }
        }
    }
    Division {
        quotients,
        remainder: MultiPoly::from_terms(&field, rem_terms),
    }
}

/// Remainder of [`divide`].
pub fn normal_form<F: Field>(f: &MultiPoly<F>, divisors: &[MultiPoly<F>]) -> MultiPoly<F> {
    let field = f.field().clone();
    let leads: Vec<(&Monomial, &F::Elem)> =
        divisors.iter().map(|g| g.leading_term().expect("divisors must be nonzero")).collect();
    let mut rem_terms = Vec::new();
    let mut p = f.clone();
    while let Ok((lm, lc)) = p.leading_term() {
        match leads.iter().position(|(m, _)| m.divides(lm)) {
            Some(k) => {
                let q_mon = leads[k].0.quotient_of(lm).expect("divides");
                let q_coef = field.div(lc, leads[k].1).expect("nonzero lead");
                p = p.sub(&divisors[k].mul_term(&q_coef, &q_mon));
            }
            None => {
                let t = MultiPoly::term(&field, lc.clone(), lm.clone());
                rem_terms.push((lc.clone(), lm.clone()));
                p = p.sub(&t);
            }
        }
    }
    MultiPoly::from_terms(&field, rem_terms)
}

/// (lcm/lt(f))·f − (lcm/lt(g))·g with both leading terms scaled to cancel.
pub fn s_polynomial<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    let field = f.field();
    let (mf, cf) = f.leading_term()?;
    let (mg, cg) = g.leading_term()?;
    let l = mf.lcm(mg);
    let uf = mf.quotient_of(&l).expect("lcm");
    let ug = mg.quotient_of(&l).expect("lcm");
    let a = f.mul_term(&field.inv(cf).expect("nonzero"), &uf);
    let b = g.mul_term(&field.inv(cg).expect("nonzero"), &ug);
    Ok(a.sub(&b))
}
