use serde::Serialize;

use super::construct::{kalman_matrix, small_kalman_matrix};
use super::minors::all_minors;
use super::StratumSpec;
use crate::arith::{Field, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::matrix::{kernel_basis, mat_vec, rank, Matrix};

/// Exact rank over the entry field: Bareiss over Q, elimination over GF(p).
pub fn exact_rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rank(field, m)
}

/// Both rank criteria for one matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    pub kalman_rank: usize,
    pub kalman_bound: usize,
    pub small_rank: usize,
    pub small_bound: usize,
}

fn check_matrix<E: Clone>(a: &Matrix<E>, spec: &StratumSpec) -> Result<()> {
    if !a.is_square() || a.rows() != spec.n {
        return Err(Error::Shape(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            a.rows(),
            a.cols(),
            n = spec.n
        )));
    }
    Ok(())
}

/// Computes rank(C, CA, ..., CA^d) ≤ n-s and rank of the small Kalman
/// matrix ≤ d-s, and fails if the two disagree.
pub fn membership<F: Field>(field: &F, a: &Matrix<F::Elem>, spec: &StratumSpec) -> Result<MembershipReport> {
    check_matrix(a, spec)?;
    let StratumSpec { s, d, n } = *spec;
    if d == n {
        // L is everything, so A itself has invariant subspaces of every dimension
        return Ok(MembershipReport {
            member: true,
            kalman_rank: 0,
            kalman_bound: n - s,
            small_rank: 0,
            small_bound: d - s,
        });
    }
    let kalman_rank = exact_rank(field, &kalman_matrix(field, a, d)?);
    let small_rank = exact_rank(field, &small_kalman_matrix(field, a, d)?);
    let by_kalman = kalman_rank <= n - s;
    let by_small = small_rank <= d - s;
    if by_kalman != by_small {
        return Err(Error::CriteriaDisagree {
            kalman: kalman_rank,
            small: small_rank,
        });
    }
    Ok(MembershipReport {
        member: by_kalman,
        kalman_rank,
        kalman_bound: n - s,
        small_rank,
        small_bound: d - s,
    })
}

pub fn is_member<F: Field>(field: &F, a: &Matrix<F::Elem>, spec: &StratumSpec) -> Result<bool> {
    Ok(membership(field, a, spec)?.member)
}

/// Whether every (d-s+1)-minor of the small Kalman matrix vanishes at A.
pub fn small_minors_vanish<F: Field>(field: &F, a: &Matrix<F::Elem>, spec: &StratumSpec) -> Result<bool> {
    check_matrix(a, spec)?;
    let m = small_kalman_matrix(field, a, spec.d)?;
    Ok(all_minors(field, &m, spec.d - spec.s + 1)?.iter().all(|x| field.is_zero(x)))
}

/// Whether A maps the kernel of its Kalman matrix into itself. For d = n
/// the kernel is the whole space.
pub fn kalman_kernel_invariance<F: Field>(field: &F, a: &Matrix<F::Elem>, d: usize) -> Result<bool> {
    if d == a.rows() && a.is_square() {
        return Ok(true);
    }
    let k = kalman_matrix(field, a, d)?;
    for v in kernel_basis(field, &k) {
        let w = mat_vec(field, a, &v);
        if !mat_vec(field, &k, &w).iter().all(|x| field.is_zero(x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Default bound on the number of subspaces `brute_force_member` visits.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// Number of k-dimensional subspaces of GF(q)^d, or `None` on overflow.
pub fn gaussian_binomial(d: u32, k: u32, q: u128) -> Option<u128> {
    if k > d {
        return Some(0);
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(q.checked_pow(d - i)?.checked_sub(1)?)?;
        den = den.checked_mul(q.checked_pow(i + 1)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// Subspaces of L of dimension s..=d, the search space of the brute-force oracle.
pub fn subspace_count(spec: &StratumSpec, p: u32) -> Option<u128> {
    (spec.s..=spec.d).try_fold(0u128, |acc, k| acc.checked_add(gaussian_binomial(spec.d as u32, k as u32, p as u128)?))
}

/// Exhaustive search for an A-invariant subspace V ⊆ L over GF(p) with
/// dim V ≥ s. Subspaces are enumerated by RREF representative: pivot
/// columns lexicographically, then free entries as an odometer.
/// Returns the RREF basis of the first invariant subspace found.
pub fn find_invariant_subspace(
    field: &PrimeField,
    a: &Matrix<<PrimeField as Ring>::Elem>,
    spec: &StratumSpec,
    cap: u128,
) -> Result<Option<Vec<Vec<<PrimeField as Ring>::Elem>>>> {
    check_matrix(a, spec)?;
    let p = field.modulus();
    let count = subspace_count(spec, p).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::EnumerationCap { count, cap });
    }
    let StratumSpec { s, d, n } = *spec;
    for k in s..=d {
        for pivots in combinations(d, k) {
            // free slots: (row r, column c) with c > pivot r and c not a pivot
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| ((pivots[r] + 1)..d).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let mut digits = vec![0u32; slots.len()];
            loop {
                let mut basis = vec![vec![field.zero(); n]; k];
                for (r, &pc) in pivots.iter().enumerate() {
                    basis[r][pc] = field.one();
                }
                for (&(r, c), &v) in slots.iter().zip(&digits) {
                    basis[r][c] = field.elem(v as i64);
                }
                if is_invariant(field, a, &basis, &pivots, d) {
                    return Ok(Some(basis));
                }
                if !advance(&mut digits, p) {
                    break;
                }
            }
        }
    }
    Ok(None)
}

pub fn brute_force_member(
    field: &PrimeField,
    a: &Matrix<<PrimeField as Ring>::Elem>,
    spec: &StratumSpec,
    cap: u128,
) -> Result<bool> {
    if spec.d == spec.n {
        return Ok(true);
    }
    Ok(find_invariant_subspace(field, a, spec, cap)?.is_some())
}

fn advance(digits: &mut [u32], p: u32) -> bool {
    for x in digits.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

/// A·v stays in span(basis) for every basis vector. The basis is in RREF
/// with the given pivots, all inside the first d coordinates.
fn is_invariant<F: Field>(field: &F, a: &Matrix<F::Elem>, basis: &[Vec<F::Elem>], pivots: &[usize], d: usize) -> bool {
    basis.iter().all(|v| {
        let mut w = mat_vec(field, a, v);
        if w[d..].iter().any(|x| !field.is_zero(x)) {
            return false;
        }
        for (r, &pc) in pivots.iter().enumerate() {
            let c = w[pc].clone();
            if field.is_zero(&c) {
                continue;
            }
            for (wi, bi) in w.iter_mut().zip(&basis[r]) {
                *wi = field.sub(wi, &field.mul(&c, bi));
            }
        }
        w.iter().all(|x| field.is_zero(x))
    })
}

/// k-subsets of 0..n in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
