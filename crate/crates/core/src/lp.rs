//! Exact feasibility solver for systems `{Ay = c, y >= 0}`.
//!
//! The solver runs a phase-1 simplex over the rationals: one artificial
//! variable per row, objective = sum of artificials, starting basis =
//! artificials. Rows whose right-hand side is negative are negated up
//! front so the initial tableau is primal feasible. The system is
//! feasible exactly when the phase-1 optimum is zero — an exact test,
//! there is no epsilon anywhere.
//!
//! Pivoting follows Bland's rule (lowest-index entering column, and
//! lowest-index basic variable among the minimum-ratio rows), which
//! guarantees termination on degenerate tableaus and makes the returned
//! certificate deterministic for a fixed input.
//!
//! Both answers are certificates: `Feasible` carries the nonnegative
//! coefficient vector itself, `Infeasible` carries a Farkas witness `z`
//! with `A^T z <= 0` and `c^T z > 0`, read off the final dual values.
//! An infeasible witness is re-verified before it is returned; if that
//! verification ever fails the solver panics rather than guessing.

use crate::linalg::{RMatrix, RVector};
use crate::rational::Rational;
use num_traits::{One, Zero};

/// The system `Ay = c`, `y >= 0`, where the columns of `A` are the
/// generators and `c` is the point being tested.
#[derive(Clone, Debug)]
pub struct FeasibilitySystem {
    a: RMatrix,
    c: RVector,
}

impl FeasibilitySystem {
    pub fn new(a: RMatrix, c: RVector) -> Self {
        assert_eq!(
            a.rows(),
            c.dim(),
            "feasibility system: matrix has {} rows but target has dimension {}",
            a.rows(),
            c.dim()
        );
        Self { a, c }
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.a
    }

    pub fn target(&self) -> &RVector {
        &self.c
    }

    /// Number of columns of `A` (generators / variables).
    pub fn num_columns(&self) -> usize {
        self.a.cols()
    }

    /// Number of rows of `A` (ambient dimension).
    pub fn num_rows(&self) -> usize {
        self.a.rows()
    }
}

/// Outcome of a feasibility solve. Exactly one branch is returned for
/// every well-formed system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    /// `y >= 0` with `Ay = c`, componentwise exact.
    Feasible(RVector),
    /// Farkas witness `z` with `A^T z <= 0` and `c^T z > 0`.
    Infeasible(RVector),
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }
}

/// Checks a certificate against the branch invariants, trusting nothing
/// about how it was produced.
pub fn verify_certificate(sys: &FeasibilitySystem, res: &FeasibilityResult) -> bool {
    match res {
        FeasibilityResult::Feasible(y) => {
            assert_eq!(
                y.dim(),
                sys.num_columns(),
                "verify_certificate: coefficient vector has dimension {}, expected {}",
                y.dim(),
                sys.num_columns()
            );
            if y.entries().iter().any(|v| v < &Rational::zero()) {
                return false;
            }
            sys.a.mat_vec(y) == sys.c
        }
        FeasibilityResult::Infeasible(z) => {
            assert_eq!(
                z.dim(),
                sys.num_rows(),
                "verify_certificate: Farkas witness has dimension {}, expected {}",
                z.dim(),
                sys.num_rows()
            );
            let zero = Rational::zero();
            for j in 0..sys.num_columns() {
                if sys.a.column(j).dot(z) > zero {
                    return false;
                }
            }
            sys.c.dot(z) > zero
        }
    }
}

/// Decides `{Ay = c, y >= 0}` and returns a certificate for whichever
/// branch holds.
pub fn solve_feasibility(sys: &FeasibilitySystem) -> FeasibilityResult {
    let n = sys.num_rows();
    let m = sys.num_columns();
    let rhs_col = m + n;

    // Row signs: negate rows with a negative right-hand side so the
    // artificial starting basis is feasible.
    let signs: Vec<bool> = (0..n).map(|i| sys.c[i] < Rational::zero()).collect();
    let flip = |negate: bool, v: &Rational| if negate { -v } else { v.clone() };

    // Tableau: columns [0, m) original, [m, m+n) artificial, m+n rhs.
    let mut tab = RMatrix::zero(n, rhs_col + 1);
    for (i, &negate) in signs.iter().enumerate() {
        for j in 0..m {
            *tab.at_mut(i, j) = flip(negate, sys.a.at(i, j));
        }
        *tab.at_mut(i, m + i) = Rational::one();
        *tab.at_mut(i, rhs_col) = flip(negate, &sys.c[i]);
    }
    let mut basis: Vec<usize> = (m..m + n).collect();

    // Reduced-cost row, with the negated objective value in the rhs
    // cell. Pricing out the artificial starting basis leaves the
    // artificial columns at zero and the original columns at minus
    // their column sums.
    let mut obj = vec![Rational::zero(); rhs_col + 1];
    for j in (0..m).chain(std::iter::once(rhs_col)) {
        let mut acc = Rational::zero();
        for i in 0..n {
            acc += tab.at(i, j);
        }
        obj[j] = -acc;
    }

    loop {
        // Bland entering rule: lowest-index column with negative
        // reduced cost.
        let entering = (0..rhs_col).find(|&j| obj[j] < Rational::zero());
        let col = match entering {
            Some(j) => j,
            None => break,
        };

        // Ratio test; ties resolved toward the lowest basic variable
        // index (Bland leaving rule).
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..n {
            let coeff = tab.at(r, col);
            if coeff <= &Rational::zero() {
                continue;
            }
            let ratio = tab.at(r, rhs_col) / coeff;
            leave = match leave {
                None => Some((r, ratio)),
                Some((best_r, best)) => {
                    if ratio < best || (ratio == best && basis[r] < basis[best_r]) {
                        Some((r, ratio))
                    } else {
                        Some((best_r, best))
                    }
                }
            };
        }
        // The phase-1 objective is bounded below by zero, so an
        // unbounded ray cannot occur.
        let (row, _) = leave.expect("phase-1 simplex: entering column has no positive entry");

        // Pivot on (row, col).
        let pivot = tab.at(row, col).clone();
        for j in 0..=rhs_col {
            let v = tab.at(row, j) / &pivot;
            *tab.at_mut(row, j) = v;
        }
        for r in 0..n {
            if r == row || tab.at(r, col).is_zero() {
                continue;
            }
            let factor = tab.at(r, col).clone();
            for j in 0..=rhs_col {
                let v = tab.at(r, j) - &factor * tab.at(row, j);
                *tab.at_mut(r, j) = v;
            }
        }
        if !obj[col].is_zero() {
            let factor = obj[col].clone();
            for (j, cell) in obj.iter_mut().enumerate() {
                let v = &*cell - &factor * tab.at(row, j);
                *cell = v;
            }
        }
        basis[row] = col;
    }

    // Optimum reached; the objective value is minus the rhs cell.
    let optimum = -obj[rhs_col].clone();
    debug_assert!(optimum >= Rational::zero());

    if optimum.is_zero() {
        // Any artificial still in the basis sits at level zero, so the
        // original coordinates alone reproduce c.
        let mut y = vec![Rational::zero(); m];
        for r in 0..n {
            if basis[r] < m {
                y[basis[r]] = tab.at(r, rhs_col).clone();
            }
        }
        let y = RVector::new(y);
        let result = FeasibilityResult::Feasible(y);
        assert!(
            verify_certificate(sys, &result),
            "phase-1 simplex: feasible certificate failed exact verification"
        );
        result
    } else {
        // Dual values from the artificial reduced costs: u_i = 1 -
        // objrow[m+i]; undo the row negation to get the witness for the
        // original system.
        let z = RVector::new(
            (0..n)
                .map(|i| {
                    let u = Rational::one() - &obj[m + i];
                    if signs[i] {
                        -u
                    } else {
                        u
                    }
                })
                .collect(),
        );
        let result = FeasibilityResult::Infeasible(z);
        assert!(
            verify_certificate(sys, &result),
            "phase-1 simplex: Farkas witness failed exact verification"
        );
        result
    }
}
