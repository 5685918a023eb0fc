//! Monomial ideals given by generator lists.

use super::monomial::{Monomial, VarId};
use crate::arith::{binomial, Integer};

/// Drops generators divisible by another generator and duplicates; sorts
/// the survivors lex-descending.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Intersection of two monomial ideals via pairwise lcms.
pub fn intersect(i: &[Monomial], j: &[Monomial]) -> Vec<Monomial> {
    let lcms: Vec<Monomial> = i.iter().flat_map(|a| j.iter().map(move |b| a.lcm(b))).collect();
    minimalize(&lcms)
}

pub fn contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Ideals are equal iff their minimal generating sets agree.
pub fn same_ideal(a: &[Monomial], b: &[Monomial]) -> bool {
    minimalize(a) == minimalize(b)
}

/// Prime ideal generated by a set of variables.
pub fn variable_prime(vars: &[VarId]) -> Vec<Monomial> {
    minimalize(&vars.iter().map(|&v| Monomial::var(v)).collect::<Vec<_>>())
}

/// Number of degree-`t` monomials in `support_vars` divisible by none of
/// `leading`. Generators that use variables outside `support_vars` can never
/// divide such a monomial and are ignored.
pub fn standard_monomial_count(leading: &[Monomial], support_vars: &[VarId], t: u32) -> Integer {
    let gens: Vec<&Monomial> = leading
        .iter()
        .filter(|m| m.vars().all(|v| support_vars.contains(&v)))
        .collect();
    if gens.is_empty() {
        let k = support_vars.len() as i64;
        if k == 0 {
            return if t == 0 { 1.into() } else { 0.into() };
        }
        return binomial(t as i64 + k - 1, t as i64);
    }
    if gens.iter().any(|g| g.is_one()) {
        return 0.into();
    }
    let mut exps = vec![0u32; support_vars.len()];
    let mut count: u64 = 0;
    count_rec(&gens, support_vars, &mut exps, 0, t, &mut count);
    count.into()
}

fn count_rec(
    gens: &[&Monomial],
    vars: &[VarId],
    exps: &mut Vec<u32>,
    pos: usize,
    remaining: u32,
    count: &mut u64,
) {
    if pos + 1 == vars.len() {
        exps[pos] = remaining;
        if !gens.iter().any(|g| divides_dense(g, vars, exps)) {
            *count += 1;
        }
        exps[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        // prune once a generator only involving already-fixed variables
        // divides the partial monomial
        if e > 0 && gens.iter().any(|g| g.vars().all(|v| index_of(vars, v) <= pos) && divides_dense(g, vars, exps)) {
            continue;
        }
        count_rec(gens, vars, exps, pos + 1, remaining - e, count);
    }
    exps[pos] = 0;
}

fn index_of(vars: &[VarId], v: VarId) -> usize {
    vars.iter().position(|&w| w == v).expect("support variable")
}

fn divides_dense(g: &Monomial, vars: &[VarId], exps: &[u32]) -> bool {
    g.factors().iter().all(|&(v, e)| exps[index_of(vars, v)] >= e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize, j: usize) -> VarId {
        VarId::new(i, j)
    }

    /// Enumerate every monomial of degree t and test membership directly.
    fn brute_count(leading: &[Monomial], vars: &[VarId], t: u32) -> u64 {
        fn rec(vars: &[VarId], t: u32, acc: Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
            if vars.is_empty() {
                if t == 0 {
                    out.push(Monomial::from_pairs(acc));
                }
                return;
            }
            for e in 0..=t {
                let mut next = acc.clone();
                next.push((vars[0], e));
                rec(&vars[1..], t - e, next, out);
            }
        }
        let mut all = Vec::new();
        rec(vars, t, Vec::new(), &mut all);
        all.iter().filter(|m| !contains(leading, m)).count() as u64
    }

    fn n4_initial_ideal() -> (Vec<Monomial>, Vec<VarId>) {
        let m = |v: &[VarId]| Monomial::of_vars(v);
        let gens = vec![
            m(&[a(3, 1), a(4, 2)]),
            m(&[a(1, 1), a(3, 1), a(3, 2)]),
            m(&[a(1, 1), a(3, 2), a(4, 1)]),
            m(&[a(1, 1), a(4, 1), a(4, 2)]),
        ];
        let support = vec![a(1, 1), a(3, 1), a(3, 2), a(4, 1), a(4, 2)];
        (gens, support)
    }

    #[test]
    fn counts_without_generators() {
        let vars = [a(1, 1), a(1, 2), a(2, 1)];
        for t in 0..6 {
            assert_eq!(standard_monomial_count(&[], &vars, t), binomial(t as i64 + 2, t as i64));
        }
    }

    #[test]
    fn all_variables_kill_positive_degrees() {
        let vars = [a(1, 1), a(1, 2)];
        let gens: Vec<Monomial> = vars.iter().map(|&v| Monomial::var(v)).collect();
        assert_eq!(standard_monomial_count(&gens, &vars, 0), 1.into());
        for t in 1..5 {
            assert_eq!(standard_monomial_count(&gens, &vars, t), 0.into());
        }
    }

    #[test]
    fn n4_degree_two_count() {
        let (gens, support) = n4_initial_ideal();
        assert_eq!(standard_monomial_count(&gens, &support, 2), 14.into());
        for t in 0..7 {
            assert_eq!(standard_monomial_count(&gens, &support, t), brute_count(&gens, &support, t).into());
        }
    }

    #[test]
    fn intersection_of_primes() {
        // <x> ∩ <y> = <xy>
        let i = variable_prime(&[a(1, 1)]);
        let j = variable_prime(&[a(1, 2)]);
        assert_eq!(intersect(&i, &j), vec![Monomial::of_vars(&[a(1, 1), a(1, 2)])]);
        let m = vec![Monomial::of_vars(&[a(1, 1)]), Monomial::of_vars(&[a(1, 1), a(1, 2)])];
        assert_eq!(minimalize(&m), vec![Monomial::var(a(1, 1))]);
    }
}
