use crate::arith::{Field, Ring};
use crate::error::{Error, Result};
use crate::matrix::{identity, mat_mul, Matrix};
use crate::polyring::{MultiPoly, PolyRing, VarId};

/// The n×n matrix of variables (a_{ij}).
pub fn symbolic_matrix<F: Field>(field: &F, n: usize) -> Matrix<MultiPoly<F>> {
    Matrix::from_fn(n, n, |i, j| MultiPoly::var(field, VarId::new(i + 1, j + 1)))
}

/// Symbolic matrix whose last n-d columns (the blocks A12, A22) are zero.
pub fn symbolic_first_columns<F: Field>(field: &F, d: usize, n: usize) -> Matrix<MultiPoly<F>> {
    Matrix::from_fn(n, n, |i, j| {
        if j < d {
            MultiPoly::var(field, VarId::new(i + 1, j + 1))
        } else {
            MultiPoly::zero(field)
        }
    })
}

fn check_square<E: Clone>(a: &Matrix<E>) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::Shape(format!("expected a square matrix, got {}x{}", a.rows(), a.cols())));
    }
    Ok(a.rows())
}

fn check_d(d: usize, n: usize) -> Result<()> {
    if d < 1 || d + 1 > n {
        return Err(Error::DimensionOutOfRange { d, n });
    }
    Ok(())
}

/// C = (0 | I), the (n-d)×n matrix whose kernel is span(e_1, ..., e_d).
pub fn observation_matrix<R: Ring>(ring: &R, d: usize, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n - d, n, |i, j| if j == d + i { ring.one() } else { ring.zero() })
}

/// Row blocks C·A^k for k = 0..=d. Since C selects the last n-d rows,
/// C·A^k is the bottom of A^k, computed by repeated right multiplication.
fn bottom_blocks<R: Ring>(ring: &R, a: &Matrix<R::Elem>, d: usize) -> Result<Vec<Matrix<R::Elem>>> {
    let n = check_square(a)?;
    check_d(d, n)?;
    let mut blocks = vec![observation_matrix(ring, d, n)];
    for k in 0..d {
        let next = mat_mul(ring, &blocks[k], a)?;
        blocks.push(next);
    }
    Ok(blocks)
}

/// The (d+1)(n-d) × n Kalman matrix stacking C, CA, ..., CA^d.
pub fn kalman_matrix<R: Ring>(ring: &R, a: &Matrix<R::Elem>, d: usize) -> Result<Matrix<R::Elem>> {
    Matrix::vstack(&bottom_blocks(ring, a, d)?)
}

/// The d(n-d) × d small Kalman matrix stacking [A], [A^2], ..., [A^d], where
/// [M] is the lower-left (n-d)×d block of M.
pub fn small_kalman_matrix<R: Ring>(ring: &R, a: &Matrix<R::Elem>, d: usize) -> Result<Matrix<R::Elem>> {
    let blocks = bottom_blocks(ring, a, d)?;
    let n = a.rows();
    let cut: Vec<_> = blocks[1..].iter().map(|b| b.block(0, n - d, 0, d)).collect();
    Matrix::vstack(&cut)
}

/// The d(n-d) × d reduced Kalman matrix stacking A21·A11^k, k = 0..d-1.
pub fn reduced_kalman_matrix<R: Ring>(ring: &R, a: &Matrix<R::Elem>, d: usize) -> Result<Matrix<R::Elem>> {
    let n = check_square(a)?;
    check_d(d, n)?;
    let a11 = a.block(0, d, 0, d);
    let a21 = a.block(d, n, 0, d);
    let mut blocks = vec![a21];
    for k in 1..d {
        let next = mat_mul(ring, &blocks[k - 1], &a11)?;
        blocks.push(next);
    }
    Matrix::vstack(&blocks)
}

/// Reduced Kalman matrix in the d² + d(n-d) variables of A11 and A21.
pub fn reduced_kalman_symbolic<F: Field>(field: &F, d: usize, n: usize) -> Result<Matrix<MultiPoly<F>>> {
    check_d(d, n)?;
    let ring = PolyRing::new(field.clone());
    reduced_kalman_matrix(&ring, &symbolic_first_columns(field, d, n), d)
}

/// A^k by repeated multiplication.
pub fn matrix_power<R: Ring>(ring: &R, a: &Matrix<R::Elem>, k: u32) -> Result<Matrix<R::Elem>> {
    let n = check_square(a)?;
    let mut acc = identity(ring, n);
    for _ in 0..k {
        acc = mat_mul(ring, &acc, a)?;
    }
    Ok(acc)
}

/// Substitutes scalar values for the variables of a polynomial matrix.
pub fn evaluate_matrix<F: Field>(m: &Matrix<MultiPoly<F>>, point: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let at = |v: VarId| point.get(v.row as usize - 1, v.col as usize - 1).clone();
    m.map(|p| p.eval(&at))
}

/// Scalar matrix as constant polynomials.
pub fn constant_matrix<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Matrix<MultiPoly<F>> {
    a.map(|c| MultiPoly::constant(field, c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, RationalField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring() -> PolyRing<RationalField> {
        PolyRing::new(RationalField)
    }

    #[test]
    fn kalman_n2_d1() {
        let a = symbolic_matrix(&RationalField, 2);
        let k = kalman_matrix(&ring(), &a, 1).unwrap();
        assert_eq!((k.rows(), k.cols()), (2, 2));
        let texts: Vec<String> = k.entries().iter().map(|p| p.to_text()).collect();
        assert_eq!(texts, vec!["0", "1", "a21", "a22"]);
    }

    #[test]
    fn first_block_is_observation_matrix() {
        for n in 2..6 {
            for d in 1..n {
                let a = symbolic_matrix(&RationalField, n);
                let k = kalman_matrix(&ring(), &a, d).unwrap();
                assert_eq!(k.rows(), (d + 1) * (n - d));
                assert_eq!(k.block(0, n - d, 0, n), observation_matrix(&ring(), d, n));
            }
        }
    }

    #[test]
    fn blocks_match_matrix_powers() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (n, d) = (4, 2);
        let a = Matrix::from_fn(n, n, |_, _| f.random(&mut rng));
        let k = kalman_matrix(&f, &a, d).unwrap();
        let c = observation_matrix(&f, d, n);
        for i in 0..=d {
            let oracle = mat_mul(&f, &c, &matrix_power(&f, &a, i as u32).unwrap()).unwrap();
            assert_eq!(k.block(i * (n - d), (i + 1) * (n - d), 0, n), oracle);
        }
        // symbolic n=4, d=2 against the same oracle
        let s = symbolic_matrix(&RationalField, n);
        let ks = kalman_matrix(&ring(), &s, d).unwrap();
        let cs = observation_matrix(&ring(), d, n);
        for i in 0..=d {
            let oracle = mat_mul(&ring(), &cs, &matrix_power(&ring(), &s, i as u32).unwrap()).unwrap();
            assert_eq!(ks.block(i * (n - d), (i + 1) * (n - d), 0, n), oracle);
        }
    }

    #[test]
    fn small_kalman_n4_d2_entries() {
        let a = symbolic_matrix(&RationalField, 4);
        let m = small_kalman_matrix(&ring(), &a, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 2));
        assert_eq!(m.get(0, 0).to_text(), "a31");
        assert_eq!(m.get(1, 1).to_text(), "a42");
        let expected = "a11*a31 + a21*a32 + a31*a33 + a34*a41";
        assert_eq!(m.get(2, 0).to_text(), expected);
        assert_eq!(m.get(2, 1).to_text(), "a12*a31 + a22*a32 + a32*a33 + a34*a42");
    }

    #[test]
    fn small_kalman_vanishes_when_bottom_rows_vanish() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (n, d) = (5, 3);
        let a = Matrix::from_fn(n, n, |i, _| if i >= d { f.zero() } else { f.random(&mut rng) });
        let m = small_kalman_matrix(&f, &a, d).unwrap();
        assert!(m.entries().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn reduced_is_small_with_last_columns_zero() {
        for (d, n) in [(2, 4), (3, 5), (2, 5), (1, 3)] {
            let reduced = reduced_kalman_symbolic(&RationalField, d, n).unwrap();
            let small = small_kalman_matrix(&ring(), &symbolic_matrix(&RationalField, n), d).unwrap();
            let killed = small.map(|p| p.restrict_zero(|v| v.col as usize > d));
            assert_eq!(reduced, killed, "d={d} n={n}");
        }
        let r = reduced_kalman_symbolic(&RationalField, 2, 4).unwrap();
        assert_eq!(r.get(2, 0).to_text(), "a11*a31 + a21*a32");
        assert_eq!(r.get(2, 1).to_text(), "a12*a31 + a22*a32");
    }

    #[test]
    fn hyperplane_case_is_square() {
        let n = 4;
        let r = reduced_kalman_symbolic(&RationalField, n - 1, n).unwrap();
        assert_eq!((r.rows(), r.cols()), (n - 1, n - 1));
        let a = symbolic_first_columns(&RationalField, n - 1, n);
        let a11 = a.block(0, n - 1, 0, n - 1);
        let a21 = a.block(n - 1, n, 0, n - 1);
        for i in 0..n - 1 {
            let row = mat_mul(&ring(), &a21, &matrix_power(&ring(), &a11, i as u32).unwrap()).unwrap();
            assert_eq!(r.block(i, i + 1, 0, n - 1), row);
        }
    }

    #[test]
    fn specialization_commutes_with_construction() {
        let f = PrimeField::new(101).unwrap();
        let pr = PolyRing::new(f);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (d, n) in [(1, 3), (2, 4), (3, 5), (2, 5)] {
            let a = Matrix::from_fn(n, n, |_, _| f.random(&mut rng));
            let sym = symbolic_matrix(&f, n);
            assert_eq!(
                evaluate_matrix(&kalman_matrix(&pr, &sym, d).unwrap(), &a),
                kalman_matrix(&f, &a, d).unwrap()
            );
            assert_eq!(
                evaluate_matrix(&small_kalman_matrix(&pr, &sym, d).unwrap(), &a),
                small_kalman_matrix(&f, &a, d).unwrap()
            );
            assert_eq!(
                evaluate_matrix(&reduced_kalman_symbolic(&f, d, n).unwrap(), &a),
                reduced_kalman_matrix(&f, &a, d).unwrap()
            );
        }
    }

    #[test]
    fn d_out_of_range() {
        let a = symbolic_matrix(&RationalField, 3);
        assert!(matches!(kalman_matrix(&ring(), &a, 0), Err(Error::DimensionOutOfRange { .. })));
        assert!(matches!(kalman_matrix(&ring(), &a, 3), Err(Error::DimensionOutOfRange { .. })));
        assert!(reduced_kalman_symbolic(&RationalField, 4, 4).is_err());
    }
}
