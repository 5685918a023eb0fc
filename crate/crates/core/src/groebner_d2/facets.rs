use std::collections::BTreeSet;

use super::{a, check_n, cubic_indices, cubic_lead, quadric_indices, quadric_lead};
use crate::error::Result;
use crate::polyring::monomial_ideal::{intersect, minimalize, same_ideal, variable_prime};
use crate::polyring::{Monomial, UniPoly, UniRationalFn, VarId};

/// Stanley-Reisner complex of the initial ideal M, listed on the 2n-3
/// variables that occur in M's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetComplex {
    pub n: usize,
    pub facets: Vec<Vec<VarId>>,
    pub support: Vec<VarId>,
    /// variables not occurring in M
    pub free_count: usize,
}

impl FacetComplex {
    /// The minimal primes of M, one per facet, generated by the support
    /// variables outside the facet.
    pub fn primes(&self) -> Vec<Vec<VarId>> {
        self.facets
            .iter()
            .map(|f| self.support.iter().copied().filter(|v| !f.contains(v)).collect())
            .collect()
    }

    pub fn is_unmixed(&self) -> bool {
        let primes = self.primes();
        primes.iter().all(|p| p.len() == primes[0].len())
    }

    pub fn codimension(&self) -> usize {
        self.primes().iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Number of minimal primes of minimal codimension.
    pub fn degree(&self) -> usize {
        let c = self.codimension();
        self.primes().iter().filter(|p| p.len() == c).count()
    }

    /// Facets as vertex indices into `support`.
    pub fn index_facets(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|v| self.support.iter().position(|w| w == v).expect("support")).collect())
            .collect()
    }

    /// The complex with a11 in the last facet replaced by a new vertex,
    /// which turns the listed facet order into a shelling.
    pub fn primed_index_facets(&self) -> Vec<Vec<usize>> {
        let mut facets = self.index_facets();
        let a11 = self.support.iter().position(|&v| v == a(1, 1)).expect("a11 in support");
        let fresh = self.support.len();
        if let Some(last) = facets.last_mut() {
            for x in last.iter_mut() {
                if *x == a11 {
                    *x = fresh;
                }
            }
        }
        facets
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialIdeal {
    /// leading monomials of the quadrics, then of the cubics
    pub generators: Vec<Monomial>,
    pub complex: FacetComplex,
    /// M equals the intersection of the facet primes
    pub intersection_matches: bool,
}

pub fn initial_ideal_and_facets(n: usize) -> Result<InitialIdeal> {
    check_n(n)?;
    let generators: Vec<Monomial> = quadric_indices(n)
        .into_iter()
        .map(|(i, j)| quadric_lead(i, j))
        .chain(cubic_indices(n).into_iter().map(|(i, j)| cubic_lead(i, j)))
        .collect();

    let mut facets = vec![std::iter::once(a(1, 1)).chain((3..=n).map(|i| a(i, 1))).collect::<Vec<_>>()];
    for i in 3..=n {
        facets.push((3..=i).map(|k| a(k, 2)).chain((i..=n).map(|k| a(k, 1))).collect());
    }
    facets.push(std::iter::once(a(1, 1)).chain((3..=n).map(|i| a(i, 2))).collect());

    let support: BTreeSet<VarId> = generators.iter().flat_map(|m| m.vars().collect::<Vec<_>>()).collect();
    // BTreeSet iterates ascending, so reverse for a11 first
    let support: Vec<VarId> = support.into_iter().rev().collect();
    let complex = FacetComplex {
        n,
        free_count: n * n - support.len(),
        facets,
        support,
    };

    let mut acc: Option<Vec<Monomial>> = None;
    for prime in complex.primes() {
        let p = variable_prime(&prime);
        acc = Some(match acc {
            None => p,
            Some(cur) => intersect(&cur, &p),
        });
    }
    let intersection_matches = same_ideal(&acc.unwrap_or_default(), &minimalize(&generators));
    Ok(InitialIdeal {
        generators,
        complex,
        intersection_matches,
    })
}

/// All faces of the complex, the empty face included.
fn faces(facets: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for f in facets {
        let mut sorted = f.clone();
        sorted.sort_unstable();
        for mask in 0u64..(1 << sorted.len()) {
            out.insert(sorted.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v).collect());
        }
    }
    out
}

/// Hilbert series of the Stanley-Reisner ring, Σ_F (z/(1-z))^{|F|} over
/// faces, as one rational function.
pub fn face_series(facets: &[Vec<usize>]) -> UniRationalFn {
    let all = faces(facets);
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut f = vec![0i64; top + 1];
    for face in &all {
        f[face.len()] += 1;
    }
    let num = f.iter().enumerate().fold(UniPoly::zero(), |acc, (k, &c)| {
        acc.add(&UniPoly::from_i64(&[c]).shift(k).mul(&UniPoly::one_minus_z_pow((top - k) as u32)))
    });
    UniRationalFn::new(num, UniPoly::one_minus_z_pow(top as u32)).expect("nonzero denominator")
}

/// If the facet order is a shelling, the h-vector read off from the
/// restriction faces; `None` otherwise.
pub fn shelling_h_vector(facets: &[Vec<usize>]) -> Option<Vec<usize>> {
    let top = facets.iter().map(Vec::len).max()?;
    if facets.iter().any(|f| f.len() != top) {
        return None;
    }
    let mut h = vec![0usize; top + 1];
    for (k, f) in facets.iter().enumerate() {
        let earlier = &facets[..k];
        let in_earlier = |face: &[usize]| earlier.iter().any(|g| face.iter().all(|v| g.contains(v)));
        // restriction face: vertices whose removal lands in an earlier facet
        let restriction: Vec<usize> = f
            .iter()
            .copied()
            .filter(|&v| {
                let rest: Vec<usize> = f.iter().copied().filter(|&w| w != v).collect();
                in_earlier(&rest)
            })
            .collect();
        // shelling: the new faces are exactly those containing the restriction
        for mask in 0u64..(1 << f.len()) {
            let face: Vec<usize> = f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            let is_new = !in_earlier(&face);
            let contains_r = restriction.iter().all(|v| face.contains(v));
            if is_new != contains_r {
                return None;
            }
        }
        h[restriction.len()] += 1;
    }
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    Some(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;

    #[test]
    fn n4_initial_ideal() {
        let init = initial_ideal_and_facets(4).unwrap();
        let m = |v: &[VarId]| Monomial::of_vars(v);
        assert_eq!(
            init.generators,
            vec![
                m(&[a(3, 1), a(4, 2)]),
                m(&[a(1, 1), a(3, 2), a(3, 1)]),
                m(&[a(1, 1), a(3, 2), a(4, 1)]),
                m(&[a(1, 1), a(4, 2), a(4, 1)]),
            ]
        );
        let sets: Vec<BTreeSet<VarId>> = init.complex.facets.iter().map(|f| f.iter().copied().collect()).collect();
        let expect = |v: &[VarId]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(
            sets,
            vec![
                expect(&[a(1, 1), a(3, 1), a(4, 1)]),
                expect(&[a(3, 2), a(3, 1), a(4, 1)]),
                expect(&[a(3, 2), a(4, 2), a(4, 1)]),
                expect(&[a(1, 1), a(3, 2), a(4, 2)]),
            ]
        );
        assert!(init.intersection_matches);
    }

    #[test]
    fn complex_shape_all_n() {
        for n in 3..11 {
            let c = initial_ideal_and_facets(n).unwrap();
            assert!(c.intersection_matches, "n={n}");
            let cx = &c.complex;
            assert_eq!(cx.facets.len(), n);
            assert!(cx.facets.iter().all(|f| f.len() == n - 1));
            assert_eq!(cx.support.len(), 2 * n - 3);
            assert_eq!(cx.free_count, n * n - 2 * n + 3);
            assert!(cx.is_unmixed());
            assert_eq!(cx.codimension(), n - 2);
            assert_eq!(cx.degree(), n);
            assert!(c.generators.iter().all(Monomial::is_squarefree));
        }
    }

    #[test]
    fn primed_complex_is_shellable() {
        for n in 3..11 {
            let cx = initial_ideal_and_facets(n).unwrap().complex;
            assert_eq!(shelling_h_vector(&cx.primed_index_facets()), Some(vec![1, n - 1]), "n={n}");
        }
    }

    #[test]
    fn shelling_detection() {
        // two triangles sharing only a vertex: not a shelling
        assert_eq!(shelling_h_vector(&[vec![0, 1, 2], vec![2, 3, 4]]), None);
        // boundary of a triangle: h = (1, 1, 1)
        assert_eq!(shelling_h_vector(&[vec![0, 1], vec![1, 2], vec![0, 2]]), Some(vec![1, 1, 1]));
    }

    #[test]
    fn face_series_of_simplex_and_points() {
        // a single simplex on k vertices is a polynomial ring in k variables
        let s = face_series(&[vec![0, 1, 2]]);
        assert!(s.equals(&UniRationalFn::over_one_minus_z(1, 3)));
        // two isolated points: 1 + 2z/(1-z) = (1+z)/(1-z)
        let p = face_series(&[vec![0], vec![1]]);
        assert!(p.equals(&UniRationalFn::new(UniPoly::from_i64(&[1, 1]), UniPoly::from_i64(&[1, -1])).unwrap()));
    }
}
