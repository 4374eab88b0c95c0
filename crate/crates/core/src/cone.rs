//! Cone-level operations on finite generator sets.
//!
//! A cone is represented by an ordered list of generators; all
//! operations reduce to exact LP membership tests. `reduce_ci` strips
//! generators that lie in the cone of the others, `lineal_part` finds
//! the generators inside the lineality space, `decompose` splits a cone
//! into its lineal and conic parts, and `minimize` assembles a
//! minimum-cardinality generator from a basis of the lineality space,
//! one extra negative-sum vector, and the reduced conic part.
//!
//! Generator order is significant: iteration in `reduce_ci` runs in
//! ascending index order and basis extraction is greedy by index, so
//! every operation is deterministic for a fixed input.

use crate::linalg::{extract_basis, project_complement, RMatrix, RVector};
use crate::lp::{solve_feasibility, FeasibilityResult, FeasibilitySystem};
use crate::rational::Rational;
use num_traits::Zero;

/// Ordered finite list of generators sharing one ambient dimension.
/// Duplicates and zero vectors are permitted; `reduce_ci` removes both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    ambient_dim: usize,
    vectors: Vec<RVector>,
}

impl GeneratorSet {
    pub fn new(ambient_dim: usize, vectors: Vec<RVector>) -> Self {
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(
                v.dim(),
                ambient_dim,
                "generator {} has dimension {}, expected {}",
                i,
                v.dim(),
                ambient_dim
            );
        }
        Self {
            ambient_dim,
            vectors,
        }
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self::new(ambient_dim, Vec::new())
    }

    /// Generator set with integer entries, one row per generator.
    pub fn from_i64(ambient_dim: usize, rows: &[&[i64]]) -> Self {
        Self::new(
            ambient_dim,
            rows.iter().map(|r| RVector::from_i64(r)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[RVector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &RVector {
        &self.vectors[i]
    }

    /// The subset of generators selected by `indices`, in the given order.
    pub fn subset(&self, indices: &[usize]) -> GeneratorSet {
        GeneratorSet::new(
            self.ambient_dim,
            indices.iter().map(|&i| self.vectors[i].clone()).collect(),
        )
    }

    /// The system `Ay = c, y >= 0` whose columns are the generators;
    /// feasibility of this system is exactly membership of `c`.
    pub fn feasibility_system(&self, c: &RVector) -> FeasibilitySystem {
        assert_eq!(
            c.dim(),
            self.ambient_dim,
            "membership query has dimension {}, expected {}",
            c.dim(),
            self.ambient_dim
        );
        FeasibilitySystem::new(
            RMatrix::from_columns(self.ambient_dim, &self.vectors),
            c.clone(),
        )
    }
}

/// Nonnegative coefficients witnessing membership: one coefficient per
/// generator, with `sum(lambda_i * s_i)` equal to the queried point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    coefficients: Vec<Rational>,
}

impl MembershipCertificate {
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Recomputes the combination `sum(lambda_i * s_i)` from scratch so
    /// callers can check the certificate without trusting the solver.
    pub fn reconstruct(&self, s: &GeneratorSet) -> RVector {
        assert_eq!(self.coefficients.len(), s.len());
        let mut acc = RVector::zero(s.ambient_dim());
        for (lambda, v) in self.coefficients.iter().zip(s.vectors()) {
            if !lambda.is_zero() {
                acc = acc.add(&v.scale(lambda));
            }
        }
        acc
    }
}

/// Decides `c ∈ cone(S)` and returns the coefficient certificate on the
/// positive branch. A `None` is only produced after the solver has
/// verified a Farkas witness for the negative branch.
pub fn member(c: &RVector, s: &GeneratorSet) -> Option<MembershipCertificate> {
    match solve_feasibility(&s.feasibility_system(c)) {
        FeasibilityResult::Feasible(y) => Some(MembershipCertificate {
            coefficients: y.entries().to_vec(),
        }),
        FeasibilityResult::Infeasible(_) => None,
    }
}

/// Removes every generator contained in the cone of the remaining ones,
/// visiting indices in ascending order. The result generates the same
/// cone and is conically independent.
pub fn reduce_ci(s: &GeneratorSet) -> GeneratorSet {
    let mut alive = vec![true; s.len()];
    for i in 0..s.len() {
        let rest: Vec<RVector> = (0..s.len())
            .filter(|&j| j != i && alive[j])
            .map(|j| s.vector(j).clone())
            .collect();
        let rest = GeneratorSet::new(s.ambient_dim(), rest);
        if member(s.vector(i), &rest).is_some() {
            alive[i] = false;
        }
    }
    GeneratorSet::new(
        s.ambient_dim(),
        (0..s.len())
            .filter(|&i| alive[i])
            .map(|i| s.vector(i).clone())
            .collect(),
    )
}

/// Indices of the generators lying in the lineality space, i.e. those
/// `s` with `-s ∈ cone(S)`, in ascending order.
pub fn lineal_part(s: &GeneratorSet) -> Vec<usize> {
    lineal_part_jobs(s, 1)
}

/// Same as [`lineal_part`], running the per-generator membership tests
/// on up to `jobs` threads. The tests are independent, so the result is
/// identical for every job count.
pub fn lineal_part_jobs(s: &GeneratorSet, jobs: usize) -> Vec<usize> {
    let flags = membership_flags(s, jobs);
    (0..s.len()).filter(|&i| flags[i]).collect()
}

/// For each generator index, whether `-s_i ∈ cone(S)`.
fn membership_flags(s: &GeneratorSet, jobs: usize) -> Vec<bool> {
    let n = s.len();
    let jobs = jobs.max(1).min(n.max(1));
    if jobs == 1 || n <= 1 {
        return (0..n)
            .map(|i| member(&s.vector(i).neg(), s).is_some())
            .collect();
    }
    // Contiguous chunks, reassembled in chunk order, so the flag vector
    // is independent of scheduling.
    let chunk = n.div_ceil(jobs);
    let mut flags = Vec::with_capacity(n);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for start in (0..n).step_by(chunk) {
            let end = (start + chunk).min(n);
            handles.push(scope.spawn(move || {
                (start..end)
                    .map(|i| member(&s.vector(i).neg(), s).is_some())
                    .collect::<Vec<bool>>()
            }));
        }
        for h in handles {
            flags.extend(h.join().expect("lineality membership worker panicked"));
        }
    });
    flags
}

/// True when the lineality space is trivial: every generator whose
/// negation lies in the cone must itself be the zero vector.
pub fn is_pointed(s: &GeneratorSet) -> bool {
    (0..s.len()).all(|i| {
        let v = s.vector(i);
        v.is_zero() || member(&v.neg(), s).is_none()
    })
}

/// Split of a generator set into lineal and conic parts, together with
/// a basis of the lineality space and the conic part's image under the
/// orthogonal projection away from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDecomposition {
    /// Indices of generators inside the lineality space, ascending.
    pub lineal_indices: Vec<usize>,
    /// The remaining indices, ascending.
    pub conic_indices: Vec<usize>,
    /// Indices of a greedy maximal independent subset of the lineal
    /// part; a basis of the lineality space.
    pub basis_indices: Vec<usize>,
    /// Projections of the conic-part generators onto the orthogonal
    /// complement of the lineality space, in `conic_indices` order.
    pub projected_conic: Vec<RVector>,
    /// Dimension of the lineality space.
    pub lineality_dim: usize,
}

impl ConeDecomposition {
    /// The projected conic part as a generator set in the ambient space.
    pub fn projected_set(&self, ambient_dim: usize) -> GeneratorSet {
        GeneratorSet::new(ambient_dim, self.projected_conic.clone())
    }
}

/// Decomposes `S` into lineal part, conic part, lineality basis, and
/// projected conic part.
pub fn decompose(s: &GeneratorSet) -> ConeDecomposition {
    decompose_jobs(s, 1)
}

/// Same as [`decompose`] with the lineality membership tests spread
/// over up to `jobs` threads.
pub fn decompose_jobs(s: &GeneratorSet, jobs: usize) -> ConeDecomposition {
    let lineal_indices = lineal_part_jobs(s, jobs);
    let in_lineal = {
        let mut mask = vec![false; s.len()];
        for &i in &lineal_indices {
            mask[i] = true;
        }
        mask
    };
    let conic_indices: Vec<usize> = (0..s.len()).filter(|&i| !in_lineal[i]).collect();

    let lineal_vectors: Vec<RVector> = lineal_indices
        .iter()
        .map(|&i| s.vector(i).clone())
        .collect();
    let basis_indices: Vec<usize> = extract_basis(&lineal_vectors)
        .into_iter()
        .map(|pos| lineal_indices[pos])
        .collect();
    let basis_vectors: Vec<RVector> = basis_indices
        .iter()
        .map(|&i| s.vector(i).clone())
        .collect();

    let projected_conic: Vec<RVector> = conic_indices
        .iter()
        .map(|&i| project_complement(s.vector(i), &basis_vectors))
        .collect();

    let lineality_dim = basis_indices.len();
    ConeDecomposition {
        lineal_indices,
        conic_indices,
        basis_indices,
        projected_conic,
        lineality_dim,
    }
}

/// Computes a minimum-cardinality generator of `cone(S)`.
///
/// The construction: reduce to a conically independent generator `S'`,
/// take its lineal part, pick a greedy basis `B` of the lineality
/// space, and return `B`, the single vector `-sum(B)`, and the conic
/// part of `S'`. When the lineality space is trivial the negative-sum
/// vector is omitted — the empty sum would only insert a useless zero
/// vector — and the result is just the reduced conic part.
///
/// The output may contain vectors outside `S` (the negative sum), which
/// is why this returns vectors rather than indices.
pub fn minimize(s: &GeneratorSet) -> GeneratorSet {
    let reduced = reduce_ci(s);
    let lineal_indices = lineal_part(&reduced);
    let in_lineal = {
        let mut mask = vec![false; reduced.len()];
        for &i in &lineal_indices {
            mask[i] = true;
        }
        mask
    };

    let lineal_vectors: Vec<RVector> = lineal_indices
        .iter()
        .map(|&i| reduced.vector(i).clone())
        .collect();
    let basis_pos = extract_basis(&lineal_vectors);

    let mut out: Vec<RVector> = basis_pos
        .iter()
        .map(|&p| lineal_vectors[p].clone())
        .collect();
    if !out.is_empty() {
        let neg_sum = out
            .iter()
            .fold(RVector::zero(s.ambient_dim()), |acc, v| acc.add(v))
            .neg();
        out.push(neg_sum);
    }
    for (i, &lineal) in in_lineal.iter().enumerate() {
        if !lineal {
            out.push(reduced.vector(i).clone());
        }
    }
    GeneratorSet::new(s.ambient_dim(), out)
}

/// True when the two sets generate the same cone, checked by mutual
/// membership of every generator.
pub fn cone_equal(a: &GeneratorSet, b: &GeneratorSet) -> bool {
    assert_eq!(
        a.ambient_dim(),
        b.ambient_dim(),
        "cone_equal: ambient dimensions differ ({} vs {})",
        a.ambient_dim(),
        b.ambient_dim()
    );
    a.vectors().iter().all(|v| member(v, b).is_some())
        && b.vectors().iter().all(|v| member(v, a).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn member_orthant() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1]]);
        let cert = member(&RVector::from_i64(&[1, 1]), &s).expect("in cone");
        assert_eq!(cert.coefficients(), &[rat(1), rat(1)]);
        assert_eq!(cert.reconstruct(&s), RVector::from_i64(&[1, 1]));

        assert!(member(&RVector::from_i64(&[-1, 0]), &s).is_none());
    }

    #[test]
    fn member_empty_set_contains_origin_only() {
        let s = GeneratorSet::empty(3);
        let cert = member(&RVector::zero(3), &s).expect("origin generates trivially");
        assert!(cert.coefficients().is_empty());
        assert!(member(&RVector::from_i64(&[0, 0, 1]), &s).is_none());
    }

    #[test]
    fn reduce_drops_conic_combination() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let r = reduce_ci(&s);
        assert_eq!(r, GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn reduce_positive_multiple_keeps_later_element() {
        // Iteration i = 0 sees (1,0) = (1/2)(2,0) and removes it; the
        // survivor is the second vector, not the first.
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[2, 0]]);
        let r = reduce_ci(&s);
        assert_eq!(r, GeneratorSet::from_i64(2, &[&[2, 0]]));
    }

    #[test]
    fn reduce_keeps_conically_independent_set() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(reduce_ci(&s), s);
    }

    #[test]
    fn reduce_always_removes_zero_vector() {
        let s = GeneratorSet::from_i64(2, &[&[0, 0], &[1, 0]]);
        assert_eq!(reduce_ci(&s), GeneratorSet::from_i64(2, &[&[1, 0]]));

        let only_zero = GeneratorSet::from_i64(2, &[&[0, 0]]);
        assert_eq!(reduce_ci(&only_zero), GeneratorSet::empty(2));
    }

    #[test]
    fn lineal_part_of_half_plane() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(lineal_part(&s), vec![0, 1]);
    }

    #[test]
    fn lineal_part_of_pointed_cone_is_empty() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert!(lineal_part(&s).is_empty());
    }

    #[test]
    fn lineal_part_of_full_plane_is_everything() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(lineal_part(&s), vec![0, 1, 2, 3]);
    }

    #[test]
    fn lineal_part_jobs_matches_sequential() {
        let s = GeneratorSet::from_i64(3, &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 1], &[2, 3, 0]]);
        let seq = lineal_part(&s);
        for jobs in [2, 3, 8] {
            assert_eq!(lineal_part_jobs(&s, jobs), seq);
        }
    }

    #[test]
    fn pointedness() {
        assert!(is_pointed(&GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1]])));
        assert!(!is_pointed(&GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0]])));
        assert!(is_pointed(&GeneratorSet::empty(2)));
        // The zero vector is in every lineality space but does not make
        // the cone non-pointed.
        assert!(is_pointed(&GeneratorSet::from_i64(2, &[&[0, 0], &[1, 0]])));
    }

    #[test]
    fn decompose_half_plane() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        let d = decompose(&s);
        assert_eq!(d.lineal_indices, vec![0, 1]);
        assert_eq!(d.conic_indices, vec![2]);
        assert_eq!(d.basis_indices, vec![0]);
        assert_eq!(d.lineality_dim, 1);
        assert_eq!(d.projected_conic, vec![RVector::from_i64(&[0, 1])]);
    }

    #[test]
    fn decompose_projects_away_lineality_component() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[1, 1]]);
        let d = decompose(&s);
        assert_eq!(d.projected_conic, vec![RVector::from_i64(&[0, 1])]);
    }

    #[test]
    fn decompose_pointed_cone_is_trivial() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1]]);
        let d = decompose(&s);
        assert!(d.lineal_indices.is_empty());
        assert!(d.basis_indices.is_empty());
        assert_eq!(d.lineality_dim, 0);
        assert_eq!(d.conic_indices, vec![0, 1]);
        // Projection with an empty basis is the identity.
        assert_eq!(d.projected_conic, s.vectors().to_vec());
    }

    #[test]
    fn minimize_pointed_cone_equals_reduction() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(minimize(&s), GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn minimize_full_plane_uses_negative_sum() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let g = minimize(&s);
        assert_eq!(g, GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]]));
        assert!(cone_equal(&s, &g));
    }

    #[test]
    fn minimize_half_plane_keeps_size_three() {
        let s = GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        let g = minimize(&s);
        assert_eq!(g, GeneratorSet::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]));
    }

    #[test]
    fn minimize_trivial_cone_is_empty() {
        assert_eq!(minimize(&GeneratorSet::empty(2)), GeneratorSet::empty(2));
        let zero_only = GeneratorSet::from_i64(2, &[&[0, 0]]);
        assert_eq!(minimize(&zero_only), GeneratorSet::empty(2));
    }

    #[test]
    fn cone_equality_examples() {
        let a = GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let b = GeneratorSet::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert!(cone_equal(&a, &b));

        let c = GeneratorSet::from_i64(2, &[&[1, 0]]);
        let d = GeneratorSet::from_i64(2, &[&[2, 0]]);
        assert!(cone_equal(&c, &d));

        let e = GeneratorSet::from_i64(2, &[&[-1, 0]]);
        assert!(!cone_equal(&c, &e));
    }
}
