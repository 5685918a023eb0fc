use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::StratumSpec;
use crate::arith::Field;
use crate::matrix::{inverse, mat_mul, rank, rref, Matrix};

/// A matrix together with an A-invariant subspace of L certifying
/// membership in K_{s,d,n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceWitness<E> {
    /// s vectors of length n in reduced row-echelon form
    pub basis: Vec<Vec<E>>,
    pub matrix: Matrix<E>,
}

/// Uniformly random n×n matrix.
pub fn random_matrix<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |_, _| field.random(rng))
}

/// Random point of K_{s,d,n}: A = g B g^{-1} where B keeps span(e_1..e_s)
/// invariant and g preserves L = span(e_1..e_d).
pub fn make_witness<F: Field>(spec: &StratumSpec, field: &F, seed: u64) -> SubspaceWitness<F::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let StratumSpec { s, d, n } = *spec;
    let b = Matrix::from_fn(n, n, |i, j| if i >= s && j < s { field.zero() } else { field.random(&mut rng) });
    let (g, g_inv) = loop {
        let g = Matrix::from_fn(n, n, |i, j| if i >= d && j < d { field.zero() } else { field.random(&mut rng) });
        if let Some(g_inv) = inverse(field, &g) {
            break (g, g_inv);
        }
    };
    let a = mat_mul(field, &mat_mul(field, &g, &b).expect("square"), &g_inv).expect("square");
    let first_columns = Matrix::from_fn(s, n, |i, j| g.get(j, i).clone());
    let (echelon, _) = rref(field, &first_columns);
    debug_assert_eq!(rank(field, &first_columns), s);
    SubspaceWitness {
        basis: (0..s).map(|i| echelon.row(i).to_vec()).collect(),
        matrix: a,
    }
}
