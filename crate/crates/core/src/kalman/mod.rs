//! Kalman matrices of a square matrix A relative to L = span(e_1, ..., e_d),
//! the minors cutting out the Kalman varieties K_{s,d,n}, and exact
//! membership tests.

mod construct;
mod membership;
mod minors;
mod witness;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use construct::{
    constant_matrix, evaluate_matrix, kalman_matrix, matrix_power, observation_matrix, reduced_kalman_matrix,
    reduced_kalman_symbolic, small_kalman_matrix, symbolic_first_columns, symbolic_matrix,
};
pub use membership::{
    brute_force_member, exact_rank, find_invariant_subspace, gaussian_binomial, is_member, kalman_kernel_invariance,
    membership, small_minors_vanish, subspace_count, MembershipReport, DEFAULT_ENUMERATION_CAP,
};
pub use minors::{all_minors, census_text, degree_census, stratum_generators, GeneratorSource, MAX_MINOR_SIZE};
pub use witness::{make_witness, random_matrix, SubspaceWitness};

/// The variety K_{s,d,n} of n×n matrices with an invariant subspace of
/// dimension at least s inside a fixed d-dimensional L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumSpec {
    pub s: usize,
    pub d: usize,
    pub n: usize,
}

impl StratumSpec {
    pub fn new(s: usize, d: usize, n: usize) -> Result<Self> {
        if s < 1 || s > d || d > n {
            return Err(Error::InvalidStratum { s, d, n });
        }
        Ok(StratumSpec { s, d, n })
    }

    /// Codimension in P^{n²-1}.
    pub fn codimension(&self) -> usize {
        self.s * (self.n - self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, RationalField};
    use crate::matrix::Matrix;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spec_validation() {
        assert!(StratumSpec::new(0, 1, 2).is_err());
        assert!(StratumSpec::new(3, 2, 4).is_err());
        assert!(StratumSpec::new(1, 5, 4).is_err());
        assert_eq!(StratumSpec::new(2, 3, 5).unwrap().codimension(), 4);
    }

    fn small_spec() -> impl Strategy<Value = StratumSpec> {
        (2usize..6).prop_flat_map(|n| (1..n).prop_flat_map(move |d| (1..=d).prop_map(move |s| StratumSpec { s, d, n })))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        /// rank(Kalman) ≤ n-s ⇔ rank(small) ≤ d-s ⇔ small minors vanish,
        /// on uniform and witness samples alike.
        #[test]
        fn criteria_agree(spec in small_spec(), seed in any::<u64>(), witness in any::<bool>()) {
            let f = PrimeField::new(7).unwrap();
            let a = if witness {
                make_witness(&spec, &f, seed).matrix
            } else {
                random_matrix(&f, spec.n, &mut ChaCha8Rng::seed_from_u64(seed))
            };
            let report = membership(&f, &a, &spec).unwrap();
            prop_assert_eq!(report.member, small_minors_vanish(&f, &a, &spec).unwrap());
            prop_assert!(kalman_kernel_invariance(&f, &a, spec.d).unwrap());
            if witness {
                prop_assert!(report.member);
            }
        }

        /// The largest invariant subspace inside L is the Kalman kernel, which
        /// is defined over GF(p), so exhaustive search and rank agree exactly.
        #[test]
        fn brute_force_matches_rank(spec in small_spec().prop_filter("small", |s| s.n <= 4), seed in any::<u64>()) {
            let f = PrimeField::new(3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // bias toward members by zeroing A21 half the time
            let mut a = random_matrix(&f, spec.n, &mut rng);
            if seed % 2 == 0 {
                for i in spec.d..spec.n {
                    for j in 0..spec.d {
                        a.set(i, j, f.elem(0));
                    }
                }
            }
            let brute = brute_force_member(&f, &a, &spec, DEFAULT_ENUMERATION_CAP).unwrap();
            prop_assert_eq!(brute, is_member(&f, &a, &spec).unwrap());
        }

        /// Membership only sees the first d columns.
        #[test]
        fn last_columns_are_irrelevant(spec in small_spec(), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = if seed % 3 == 0 {
                make_witness(&spec, &RationalField, seed).matrix
            } else {
                random_matrix(&RationalField, spec.n, &mut rng)
            };
            let b = random_matrix(&RationalField, spec.n, &mut rng);
            let mixed = Matrix::from_fn(spec.n, spec.n, |i, j| if j < spec.d { a.get(i, j).clone() } else { b.get(i, j).clone() });
            prop_assert_eq!(is_member(&RationalField, &a, &spec).unwrap(), is_member(&RationalField, &mixed, &spec).unwrap());
        }
    }
}
