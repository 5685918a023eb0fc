//! Budgeted Buchberger completion with the normal selection strategy.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;

use super::division::{normal_form, s_polynomial};
use super::monomial::Monomial;
use super::poly::MultiPoly;
use crate::arith::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_poly_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 50_000,
            max_poly_degree: 30,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct Completion<F: Field> {
    pub basis: Vec<MultiPoly<F>>,
    pub status: CompletionStatus,
    /// S-pairs actually reduced (coprime pairs are skipped, not counted).
    pub pairs_reduced: usize,
    pub pairs_skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    // smallest lcm degree first, then lex-smallest lcm, then indices
    fn cmp(&self, other: &Self) -> Ordering {
        self.lcm
            .degree()
            .cmp(&other.lcm.degree())
            .then_with(|| self.lcm.cmp(&other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Completes `gens` to a Gröbner basis. On success the result is the reduced
/// Gröbner basis (monic, inter-reduced), sorted by degree and then by
/// leading monomial, greatest first. When the budget runs out the partial, unreduced basis
/// is returned with [`CompletionStatus::BudgetExceeded`].
pub fn buchberger_complete<F: Field>(gens: &[MultiPoly<F>], budget: Budget) -> Completion<F> {
    let mut basis: Vec<MultiPoly<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert(make_pair(&basis, i, j));
        }
    }
    let (mut reduced, mut skipped) = (0, 0);
    while let Some(pair) = queue.pop_first() {
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (li, lj) = (fi.leading_monomial().expect("nonzero"), fj.leading_monomial().expect("nonzero"));
        if li.is_coprime(lj) {
            skipped += 1;
            continue;
        }
        if reduced >= budget.max_pairs {
            return Completion {
                basis,
                status: CompletionStatus::BudgetExceeded,
                pairs_reduced: reduced,
                pairs_skipped: skipped,
            };
        }
        reduced += 1;
        let s = s_polynomial(fi, fj).expect("nonzero");
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.degree() > budget.max_poly_degree {
            basis.push(r);
            return Completion {
                basis,
                status: CompletionStatus::BudgetExceeded,
                pairs_reduced: reduced,
                pairs_skipped: skipped,
            };
        }
        basis.push(r);
        let k = basis.len() - 1;
        for i in 0..k {
            queue.insert(make_pair(&basis, i, k));
        }
    }
    Completion {
        basis: reduce_basis(&basis),
        status: CompletionStatus::Complete,
        pairs_reduced: reduced,
        pairs_skipped: skipped,
    }
}

fn make_pair<F: Field>(basis: &[MultiPoly<F>], i: usize, j: usize) -> Pair {
    let li = basis[i].leading_monomial().expect("nonzero");
    let lj = basis[j].leading_monomial().expect("nonzero");
    Pair { lcm: li.lcm(lj), i, j }
}

/// Minimalizes and inter-reduces a Gröbner basis into the unique reduced one.
pub fn reduce_basis<F: Field>(basis: &[MultiPoly<F>]) -> Vec<MultiPoly<F>> {
    let mut minimal: Vec<MultiPoly<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let lh = h.leading_monomial().expect("nonzero");
            // among equal leading monomials keep the first
            l != k && lh.divides(lg) && (lh != lg || l < k)
        });
        if !redundant {
            minimal.push(g.monic());
        }
    }
    let mut out: Vec<MultiPoly<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<MultiPoly<F>> =
                minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, h)| h.clone()).collect();
            let (lm, lc) = minimal[k].leading_term().expect("nonzero");
            let head = MultiPoly::term(minimal[k].field(), lc.clone(), lm.clone());
            let tail = minimal[k].sub(&head);
            head.add(&normal_form(&tail, &others)).monic()
        })
        .collect();
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.leading_monomial().unwrap().cmp(a.leading_monomial().unwrap()))
    });
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub pairs_checked: usize,
    pub nonzero_pairs: Vec<(usize, usize)>,
}

impl PairCheck {
    pub fn all_reduce_to_zero(&self) -> bool {
        self.nonzero_pairs.is_empty()
    }
}

/// Buchberger's criterion: reduces every S-pair (coprime ones included)
/// against `basis`. Pairs are checked in parallel; the report lists failing
/// pairs in index order.
pub fn check_all_s_pairs<F: Field>(basis: &[MultiPoly<F>]) -> PairCheck {
    let pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut nonzero: Vec<(usize, usize)> = pairs
        .par_iter()
        .filter(|&&(i, j)| {
            let s = s_polynomial(&basis[i], &basis[j]).expect("nonzero basis elements");
            !normal_form(&s, basis).is_zero()
        })
        .copied()
        .collect();
    nonzero.sort_unstable();
    PairCheck {
        pairs_checked: pairs.len(),
        nonzero_pairs: nonzero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, RationalField, Ring};
    use crate::polyring::VarId;

    fn a(i: usize, j: usize) -> MultiPoly<RationalField> {
        MultiPoly::var(&RationalField, VarId::new(i, j))
    }

    #[test]
    fn monomial_ideal_is_already_complete() {
        let gens = vec![a(2, 1), a(3, 1)];
        let c = buchberger_complete(&gens, Budget::default());
        assert_eq!(c.status, CompletionStatus::Complete);
        assert_eq!(c.basis, vec![a(2, 1), a(3, 1)]);
    }

    #[test]
    fn completion_adds_missing_elements() {
        // <x^2 - y, x y - 1> in the lex order a11 > a12
        let x = a(1, 1);
        let y = a(1, 2);
        let one = RationalField.one();
        let f1 = x.mul(&x).sub(&y);
        let f2 = x.mul(&y).sub(&MultiPoly::constant(&RationalField, one));
        let c = buchberger_complete(&[f1, f2], Budget::default());
        assert_eq!(c.status, CompletionStatus::Complete);
        assert!(check_all_s_pairs(&c.basis).all_reduce_to_zero());
        // reduced basis is {x - y^2, y^3 - 1}
        let texts: Vec<String> = c.basis.iter().map(|g| g.to_text()).collect();
        assert_eq!(texts, vec!["a11 - a12^2", "a12^3 - 1"]);
    }

    #[test]
    fn budget_is_enforced() {
        let x = a(1, 1);
        let y = a(1, 2);
        let f1 = x.mul(&x).sub(&y);
        let f2 = x.mul(&y).sub(&y.mul(&y));
        let c = buchberger_complete(&[f1, f2], Budget { max_pairs: 0, max_poly_degree: 30 });
        assert_eq!(c.status, CompletionStatus::BudgetExceeded);
    }

    #[test]
    fn works_over_prime_fields() {
        let f = PrimeField::new(101).unwrap();
        let v = |i, j| MultiPoly::var(&f, VarId::new(i, j));
        let g1 = v(1, 1).mul(&v(2, 1)).sub(&v(1, 2).mul(&v(1, 2)));
        let g2 = v(1, 1).mul(&v(1, 2)).sub(&v(2, 1));
        let c = buchberger_complete(&[g1, g2], Budget::default());
        assert_eq!(c.status, CompletionStatus::Complete);
        assert!(check_all_s_pairs(&c.basis).all_reduce_to_zero());
        assert!(c.basis.iter().all(|g| f.is_one(g.leading_term().unwrap().1)));
    }
}
