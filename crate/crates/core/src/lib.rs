//! Minimum-cardinality generators of finitely generated convex cones.
//!
//! Everything is computed over exact arbitrary-precision rationals: cone
//! membership is decided by a phase-1 simplex that returns a verifiable
//! certificate in both directions, conic independence is established by
//! repeated membership tests, and non-pointed cones are handled by
//! splitting off the lineality space and working in its orthogonal
//! complement.
//!
//! The crate is organized as four layers:
//!
//! - [`rational`] / [`linalg`]: rational scalars, vectors, matrices,
//!   reduced row echelon form, basis extraction, orthogonal projection.
//! - [`lp`]: exact feasibility solver for `{Ay = c, y >= 0}` with
//!   Farkas certificates for the infeasible branch.
//! - [`cone`]: generator sets, membership, conic-independence reduction,
//!   lineality decomposition, and minimum-generator construction.
//! - [`oracle`]: brute-force subset search, known instance families, and
//!   seeded random instances for cross-checking the cone operations.
//!
//! All values are immutable after construction and all operations are
//! pure functions, so everything here is safe to share across threads.

pub mod cone;
pub mod linalg;
pub mod lp;
pub mod oracle;
pub mod rational;

pub use cone::{ConeDecomposition, GeneratorSet, MembershipCertificate};
pub use linalg::{RMatrix, RVector};
pub use lp::{FeasibilityResult, FeasibilitySystem};
pub use rational::{parse_rational, rat, ratio, Rational};
