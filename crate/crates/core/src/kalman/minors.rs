use std::collections::{BTreeMap, HashMap};

use super::construct::{kalman_matrix, reduced_kalman_symbolic, small_kalman_matrix, symbolic_matrix};
use super::StratumSpec;
use crate::arith::{Field, Ring};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polyring::{MultiPoly, PolyRing};

/// Largest symbolic determinant we expand.
pub const MAX_MINOR_SIZE: usize = 9;

/// Which Kalman matrix the stratum ideal is read off from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSource {
    /// (n-s+1)-minors of C, CA, ..., CA^d
    Full,
    /// (d-s+1)-minors of [A], ..., [A^d]
    Small,
    /// (d-s+1)-minors of A21, A21 A11, ..., A21 A11^{d-1}
    Reduced,
}

impl std::str::FromStr for GeneratorSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(GeneratorSource::Full),
            "small" => Ok(GeneratorSource::Small),
            "reduced" => Ok(GeneratorSource::Reduced),
            _ => Err(Error::Parse(format!("unknown generator source {s:?}"))),
        }
    }
}

struct MinorCache<'a, R: Ring> {
    ring: &'a R,
    m: &'a Matrix<R::Elem>,
    memo: HashMap<(u64, u64), R::Elem>,
}

impl<R: Ring> MinorCache<'_, R> {
    /// Determinant of the submatrix on the row/column bitmasks, by cofactor
    /// expansion along its sparsest row.
    fn det(&mut self, rows: u64, cols: u64) -> R::Elem {
        if rows == 0 {
            return self.ring.one();
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return v.clone();
        }
        let col_list: Vec<usize> = bits(cols);
        let pivot_row = bits(rows)
            .into_iter()
            .min_by_key(|&r| col_list.iter().filter(|&&c| !self.ring.is_zero(self.m.get(r, c))).count())
            .expect("nonempty");
        // sign of the pivot row's position within the selected rows
        let row_pos = (rows & ((1u64 << pivot_row) - 1)).count_ones() as usize;
        let mut acc = self.ring.zero();
        for (k, &c) in col_list.iter().enumerate() {
            let entry = self.m.get(pivot_row, c).clone();
            if self.ring.is_zero(&entry) {
                continue;
            }
            let sub = self.det(rows & !(1 << pivot_row), cols & !(1 << c));
            if self.ring.is_zero(&sub) {
                continue;
            }
            let term = self.ring.mul(&entry, &sub);
            acc = if (row_pos + k).is_multiple_of(2) { self.ring.add(&acc, &term) } else { self.ring.sub(&acc, &term) };
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, mask: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, mask | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// All k×k minors, ordered by row subset then column subset (both
/// lexicographic on index sets).
pub fn all_minors<R: Ring>(ring: &R, m: &Matrix<R::Elem>, k: usize) -> Result<Vec<R::Elem>> {
    if k == 0 || k > m.rows() || k > m.cols() {
        return Err(Error::MinorTooLarge {
            size: k,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > 64 || m.cols() > 64 {
        return Err(Error::TooManyRows(m.rows().max(m.cols())));
    }
    let mut cache = MinorCache {
        ring,
        m,
        memo: HashMap::new(),
    };
    let row_sets = subsets(m.rows(), k);
    let col_sets = subsets(m.cols(), k);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for &r in &row_sets {
        for &c in &col_sets {
            out.push(cache.det(r, c));
        }
    }
    Ok(out)
}

/// Nonzero minors generating the ideal of K_{s,d,n}, sorted by degree and
/// then by leading monomial (greatest first).
pub fn stratum_generators<F: Field>(
    field: &F,
    spec: &StratumSpec,
    source: GeneratorSource,
) -> Result<Vec<MultiPoly<F>>> {
    let StratumSpec { s, d, n } = *spec;
    if d + 1 > n {
        return Err(Error::DimensionOutOfRange { d, n });
    }
    let ring = PolyRing::new(field.clone());
    let (matrix, size) = match source {
        GeneratorSource::Full => (kalman_matrix(&ring, &symbolic_matrix(field, n), d)?, n - s + 1),
        GeneratorSource::Small => (small_kalman_matrix(&ring, &symbolic_matrix(field, n), d)?, d - s + 1),
        GeneratorSource::Reduced => (reduced_kalman_symbolic(field, d, n)?, d - s + 1),
    };
    if size > matrix.rows() || size > matrix.cols() {
        return Err(Error::MinorTooLarge {
            size,
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    if size > MAX_MINOR_SIZE {
        return Err(Error::DeterminantCap(size));
    }
    let mut gens: Vec<MultiPoly<F>> =
        all_minors(&ring, &matrix, size)?.into_iter().filter(|p| !p.is_zero()).collect();
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.leading_monomial().unwrap().cmp(a.leading_monomial().unwrap()))
    });
    Ok(gens)
}

/// Number of polynomials per total degree.
pub fn degree_census<F: Field>(polys: &[MultiPoly<F>]) -> BTreeMap<u32, usize> {
    let mut census = BTreeMap::new();
    for p in polys {
        *census.entry(p.degree()).or_insert(0) += 1;
    }
    census
}

/// `"2:1 3:4 4:1"`
pub fn census_text(census: &BTreeMap<u32, usize>) -> String {
    census.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(" ")
}
