//! Dense rational vectors and matrices.
//!
//! Provides the small exact-arithmetic kernel the cone operations are
//! built on: reduced row echelon form, greedy basis extraction, and
//! orthogonal projection onto the complement of a subspace. Projection
//! is computed through the normal equations with an exact Gram solve;
//! orthonormalization is not an option here because square roots leave
//! the rationals.
//!
//! Dimension mismatches are programmer errors and panic; none of these
//! routines inspects user input directly.

use crate::rational::{rat, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::Index;

/// Fixed-dimension vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RVector {
    entries: Vec<Rational>,
}

impl RVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self { entries }
    }

    /// Vector with the given integer entries.
    pub fn from_i64(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&n| rat(n)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    /// Standard basis vector `e_i` in the given dimension.
    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit index {} out of range for dimension {}", i, dim);
        let mut v = Self::zero(dim);
        v.entries[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RVector) -> Rational {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dot: dimension mismatch ({} vs {})",
            self.dim(),
            other.dim()
        );
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &RVector) -> RVector {
        assert_eq!(
            self.dim(),
            other.dim(),
            "add: dimension mismatch ({} vs {})",
            self.dim(),
            other.dim()
        );
        RVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &RVector) -> RVector {
        assert_eq!(
            self.dim(),
            other.dim(),
            "sub: dimension mismatch ({} vs {})",
            self.dim(),
            other.dim()
        );
        RVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> RVector {
        RVector::new(self.entries.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> RVector {
        RVector::new(self.entries.iter().map(|a| -a).collect())
    }
}

impl Index<usize> for RVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl fmt::Display for RVector {
    /// Space-separated exact rational tokens, e.g. `1 -2/3 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "matrix entries: expected {}x{} = {}, got {}",
            rows,
            cols,
            rows * cols,
            entries.len()
        );
        Self { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    /// Matrix with the given integer entries, row-major.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&n| rat(n)).collect())
    }

    /// Builds the matrix whose columns are the given vectors. The row
    /// count is explicit so that a matrix with zero columns still knows
    /// its height.
    pub fn from_columns(rows: usize, columns: &[RVector]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(
                col.dim(),
                rows,
                "from_columns: column {} has dimension {}, expected {}",
                j,
                col.dim(),
                rows
            );
            for i in 0..rows {
                *m.at_mut(i, j) = col[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn column(&self, j: usize) -> RVector {
        RVector::new((0..self.rows).map(|i| self.at(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> RMatrix {
        let mut t = RMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mat_vec(&self, v: &RVector) -> RVector {
        assert_eq!(
            v.dim(),
            self.cols,
            "mat_vec: vector dimension {} does not match {} columns",
            v.dim(),
            self.cols
        );
        RVector::new(
            (0..self.rows)
                .map(|r| {
                    (0..self.cols).fold(Rational::zero(), |acc, c| acc + self.at(r, c) * &v[c])
                })
                .collect(),
        )
    }

    pub fn mat_mul(&self, other: &RMatrix) -> RMatrix {
        assert_eq!(
            self.cols, other.rows,
            "mat_mul: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = RMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.at(r, k) * other.at(k, c);
                }
                *out.at_mut(r, c) = acc;
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form with the list of pivot columns in
    /// ascending order. The rank of the matrix is the number of pivots.
    ///
    /// The pivot in each column is the first nonzero entry from the
    /// top, so the result is deterministic.
    pub fn rref(&self) -> (RMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let sel = match found {
                Some(r) => r,
                None => continue,
            };
            m.swap_rows(sel, pivot_row);

            let inv = m.at(pivot_row, col).clone();
            for j in col..m.cols {
                let v = m.at(pivot_row, j) / &inv;
                *m.at_mut(pivot_row, j) = v;
            }
            for r in 0..m.rows {
                if r == pivot_row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j) - &factor * m.at(pivot_row, j);
                    *m.at_mut(r, j) = v;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }
}

/// Indices of a maximal linearly independent subset of `vectors`,
/// spanning the same subspace.
///
/// The selection is greedy by ascending input index (the
/// lexicographically first maximal independent subset), which is what
/// makes downstream basis choices deterministic. Equivalent to the
/// pivot columns of the matrix whose columns are the input vectors.
pub fn extract_basis(vectors: &[RVector]) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let dim = vectors[0].dim();
    let m = RMatrix::from_columns(dim, vectors);
    let (_, pivots) = m.rref();
    pivots
}

/// Orthogonal projection of `x` onto the complement of `span(basis)`,
/// computed as `x - M (M^T M)^{-1} M^T x` where the basis vectors are
/// the columns of `M`. With an empty basis the subspace is `{0}` and
/// `x` is returned unchanged.
///
/// Panics if the Gram matrix `M^T M` is singular, which can only happen
/// when the basis vectors are linearly dependent — callers are expected
/// to obtain the basis from [`extract_basis`].
pub fn project_complement(x: &RVector, basis: &[RVector]) -> RVector {
    if basis.is_empty() {
        return x.clone();
    }
    let m = RMatrix::from_columns(x.dim(), basis);
    let mt = m.transpose();
    let gram = mt.mat_mul(&m);
    let rhs = mt.mat_vec(x);
    let w = solve_square(&gram, &rhs)
        .expect("project_complement: Gram matrix is singular (basis not linearly independent)");
    x.sub(&m.mat_vec(&w))
}

/// Solves the square system `a w = rhs` exactly. Returns `None` when
/// `a` is singular.
fn solve_square(a: &RMatrix, rhs: &RVector) -> Option<RVector> {
    let n = a.rows();
    assert_eq!(a.cols(), n, "solve_square: matrix is not square");
    assert_eq!(rhs.dim(), n, "solve_square: rhs dimension mismatch");

    // Augment with the right-hand side and reduce.
    let mut aug = RMatrix::zero(n, n + 1);
    for r in 0..n {
        for c in 0..n {
            *aug.at_mut(r, c) = a.at(r, c).clone();
        }
        *aug.at_mut(r, n) = rhs[r].clone();
    }
    let (red, pivots) = aug.rref();
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(red.column(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rref_identity_is_fixed_point() {
        let id = RMatrix::identity(2);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero_matrix_has_no_pivots() {
        let z = RMatrix::zero(3, 3);
        let (r, pivots) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_skips_dependent_column() {
        // Columns (1,0), (2,0), (0,1): the middle column is twice the first.
        let m = RMatrix::from_i64(2, 3, &[1, 2, 0, 0, 0, 1]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r, RMatrix::from_i64(2, 3, &[1, 2, 0, 0, 0, 1]));
    }

    #[test]
    fn rref_produces_unit_pivots() {
        let m = RMatrix::from_i64(2, 2, &[2, 4, 1, 3]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, RMatrix::identity(2));
    }

    #[test]
    fn extract_basis_keeps_independent_prefix() {
        let vs = vec![RVector::from_i64(&[1, 0]), RVector::from_i64(&[0, 1])];
        assert_eq!(extract_basis(&vs), vec![0, 1]);
    }

    #[test]
    fn extract_basis_greedy_drops_multiple() {
        let vs = vec![
            RVector::from_i64(&[1, 0]),
            RVector::from_i64(&[2, 0]),
            RVector::from_i64(&[0, 1]),
        ];
        assert_eq!(extract_basis(&vs), vec![0, 2]);
    }

    #[test]
    fn extract_basis_empty() {
        assert!(extract_basis(&[]).is_empty());
    }

    #[test]
    fn project_axis_aligned() {
        let x = RVector::from_i64(&[3, 4]);
        let b = vec![RVector::from_i64(&[1, 0])];
        assert_eq!(project_complement(&x, &b), RVector::from_i64(&[0, 4]));
    }

    #[test]
    fn project_empty_basis_is_identity() {
        let x = RVector::from_i64(&[7, -2, 5]);
        assert_eq!(project_complement(&x, &[]), x);
    }

    #[test]
    fn project_diagonal_basis() {
        // Normal equations by hand: M^T M = 2, M^T x = 1, w = 1/2,
        // so the projection is (1,0) - (1/2)(1,1) = (1/2, -1/2).
        let x = RVector::from_i64(&[1, 0]);
        let b = vec![RVector::from_i64(&[1, 1])];
        let p = project_complement(&x, &b);
        assert_eq!(p, RVector::new(vec![ratio(1, 2), ratio(-1, 2)]));
    }

    #[test]
    fn dot_exact_values() {
        let a = RVector::from_i64(&[1, 2]);
        let b = RVector::from_i64(&[3, 4]);
        assert_eq!(a.dot(&b), rat(11));

        let c = RVector::new(vec![ratio(1, 2), ratio(1, 3)]);
        let d = RVector::from_i64(&[2, 3]);
        assert_eq!(c.dot(&d), rat(2));
    }

    #[test]
    fn scale_by_zero_gives_zero_vector() {
        let v = RVector::from_i64(&[5, -7, 11]);
        assert_eq!(v.scale(&rat(0)), RVector::zero(3));
    }

    #[test]
    #[should_panic(expected = "dot: dimension mismatch")]
    fn dot_rejects_dimension_mismatch() {
        let a = RVector::from_i64(&[1]);
        let b = RVector::from_i64(&[1, 2]);
        let _ = a.dot(&b);
    }
}
