//! Independent ground truth for the cone operations.
//!
//! `bruteforce_min_subset` searches all subsets of a small generator
//! set for the smallest one generating the same cone — slow, obviously
//! correct, and independent of the reduction/minimization path it is
//! used to check. `known_family` builds instances whose minimum and
//! conically-independent sizes are known in closed form, and
//! `random_instance` produces seeded instances with a prescribed
//! lineality dimension.
//!
//! Instance generation uses SplitMix64 so a seed reproduces the same
//! instance on any platform or implementation of this tool.

use crate::cone::{cone_equal, is_pointed, lineal_part, member, reduce_ci, GeneratorSet};
use crate::linalg::{extract_basis, RVector};
use crate::rational::rat;
use std::fmt;

/// Subset search refuses sets larger than this; `verify_minimum` only
/// consults the brute force below it.
pub const BRUTEFORCE_CAP: usize = 12;

/// SplitMix64: the 64-bit generator from Steele, Lea & Flood's
/// "Fast Splittable Pseudorandom Number Generators". The full algorithm
/// is a dozen lines, so a seed reproduces the same stream in any
/// reimplementation of this tool.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Value in `[0, bound)` by simple reduction; the exact mapping is
    /// part of the reproducibility contract.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below: bound must be positive");
        self.next_u64() % bound
    }

    /// Integer in the inclusive range `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "int_in: empty range");
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Parameters for seeded random instance generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    /// Ambient dimension `n`.
    pub ambient_dim: usize,
    /// Total number of generators `m`.
    pub generator_count: usize,
    /// Number of independent `±` pairs to plant; the resulting cone has
    /// lineality dimension at least this.
    pub lineality_dim_target: usize,
    pub seed: u64,
    /// Magnitude bound for the random integer entries; must be positive.
    pub coefficient_bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    ZeroDimension,
    ZeroCoefficientBound,
    LinealityExceedsDimension { target: usize, ambient: usize },
    TooFewGenerators { count: usize, needed: usize },
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::ZeroDimension => write!(f, "ambient dimension must be positive"),
            InstanceError::ZeroCoefficientBound => {
                write!(f, "coefficient bound must be positive")
            }
            InstanceError::LinealityExceedsDimension { target, ambient } => write!(
                f,
                "lineality target {} exceeds ambient dimension {}",
                target, ambient
            ),
            InstanceError::TooFewGenerators { count, needed } => write!(
                f,
                "{} generators cannot hold {} lineality pairs (need at least {})",
                count,
                needed / 2,
                needed
            ),
        }
    }
}

impl std::error::Error for InstanceError {}

impl InstanceSpec {
    pub fn validate(&self) -> Result<(), InstanceError> {
        if self.ambient_dim == 0 {
            return Err(InstanceError::ZeroDimension);
        }
        if self.coefficient_bound == 0 {
            return Err(InstanceError::ZeroCoefficientBound);
        }
        if self.lineality_dim_target > self.ambient_dim {
            return Err(InstanceError::LinealityExceedsDimension {
                target: self.lineality_dim_target,
                ambient: self.ambient_dim,
            });
        }
        if self.generator_count < 2 * self.lineality_dim_target {
            return Err(InstanceError::TooFewGenerators {
                count: self.generator_count,
                needed: 2 * self.lineality_dim_target,
            });
        }
        Ok(())
    }
}

/// Builds a seeded random generator set: `d` independent vectors each
/// planted together with its negation, then the remaining slots filled
/// with nonnegative integer combinations of a small nonnegative seed
/// set. With `d = 0` every entry is nonnegative, so the instance is
/// guaranteed pointed; with `d >= 1` the lineality dimension is at
/// least `d` and the filler vectors generally have components inside
/// the lineality space.
pub fn random_instance(spec: &InstanceSpec) -> Result<GeneratorSet, InstanceError> {
    spec.validate()?;
    let n = spec.ambient_dim;
    let bound = spec.coefficient_bound as i64;
    let mut rng = SplitMix64::new(spec.seed);
    let mut vectors: Vec<RVector> = Vec::with_capacity(spec.generator_count);

    let mut planted: Vec<RVector> = Vec::new();
    for _ in 0..spec.lineality_dim_target {
        loop {
            let v = RVector::new((0..n).map(|_| rat(rng.int_in(-bound, bound))).collect());
            planted.push(v);
            if extract_basis(&planted).len() == planted.len() {
                break;
            }
            planted.pop();
        }
        let v = planted.last().unwrap().clone();
        vectors.push(v.neg());
        vectors.push(v);
    }

    let remaining = spec.generator_count - vectors.len();
    if remaining > 0 {
        let seed_count = 1 + rng.below(n.min(4) as u64) as usize;
        let seeds: Vec<RVector> = (0..seed_count)
            .map(|_| RVector::new((0..n).map(|_| rat(rng.int_in(0, bound))).collect()))
            .collect();
        for _ in 0..remaining {
            let mut w = RVector::zero(n);
            for s in &seeds {
                let coeff = rat(rng.int_in(0, bound));
                w = w.add(&s.scale(&coeff));
            }
            vectors.push(w);
        }
    }

    Ok(GeneratorSet::new(n, vectors))
}

/// The instance family `{±e_1, ..., ±e_d} ∪ {e_{d+1}, ..., e_{d+k}}` in
/// dimension `d + k`. Its conically independent size is `2d + k` while
/// a minimum generator needs only `d + 1 + k` vectors when `d >= 1`
/// (and `k` when `d = 0`), so growing `d` with `k = 0` pushes the ratio
/// toward 2.
pub fn known_family(d: usize, k: usize) -> (GeneratorSet, usize, usize) {
    assert!(d + k >= 1, "known_family: d + k must be at least 1");
    let n = d + k;
    let mut vectors = Vec::with_capacity(2 * d + k);
    for i in 0..d {
        vectors.push(RVector::unit(n, i));
        vectors.push(RVector::unit(n, i).neg());
    }
    for j in d..n {
        vectors.push(RVector::unit(n, j));
    }
    let expected_min = if d >= 1 { d + 1 + k } else { k };
    let expected_ci = 2 * d + k;
    (GeneratorSet::new(n, vectors), expected_min, expected_ci)
}

/// Exhaustively finds a smallest subset of `s` generating the same
/// cone. Subsets are enumerated by increasing cardinality and, within a
/// cardinality, in lexicographic index order; the first success wins,
/// which fixes the tie-break.
///
/// Panics when `s` has more than `cap` generators — the search is
/// exponential and refuses to run beyond desk scale.
pub fn bruteforce_min_subset(s: &GeneratorSet, cap: usize) -> Vec<usize> {
    assert!(
        s.len() <= cap,
        "brute force refused: {} generators exceeds cap {}",
        s.len(),
        cap
    );
    let n = s.len();
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if subset_generates(s, &combo) {
                return combo;
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full index set generates its own cone");
}

/// Whether the subset of `s` selected by `indices` still generates
/// `cone(s)`. Containment of the subset in the original cone is
/// automatic, so only the vectors outside the subset need testing.
fn subset_generates(s: &GeneratorSet, indices: &[usize]) -> bool {
    let t = s.subset(indices);
    let mut chosen = vec![false; s.len()];
    for &i in indices {
        chosen[i] = true;
    }
    (0..s.len())
        .filter(|&i| !chosen[i])
        .all(|i| member(s.vector(i), &t).is_some())
}

/// Advances `combo` to the next k-combination of `{0, .., n-1}` in
/// lexicographic order; false when exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Result of checking a candidate minimum generator against
/// independently recomputed evidence.
#[derive(Clone, Debug)]
pub struct MinimalityReport {
    /// Mutual-membership check `cone(candidate) = cone(input)`.
    pub generates_same_cone: bool,
    pub candidate_size: usize,
    /// Minimum cardinality recomputed from scratch: a reduction of the
    /// input, its lineality dimension `d`, and `(d >= 1 ? d + 1 : 0)`
    /// plus the reduced conic part.
    pub expected_size: usize,
    pub lineality_dim: usize,
    /// Brute-force minimum subset size; only computed for pointed
    /// inputs within [`BRUTEFORCE_CAP`], where the subset-restricted
    /// minimum coincides with the unrestricted one.
    pub bruteforce_size: Option<usize>,
}

impl MinimalityReport {
    pub fn size_matches(&self) -> bool {
        self.candidate_size == self.expected_size
    }

    pub fn passed(&self) -> bool {
        self.generates_same_cone
            && self.size_matches()
            && self
                .bruteforce_size
                .is_none_or(|b| b == self.candidate_size)
    }
}

/// Checks that `g` is a minimum generator of `cone(s)`, recomputing the
/// expected cardinality from `s` alone and consulting the brute force
/// where it is applicable.
pub fn verify_minimum(s: &GeneratorSet, g: &GeneratorSet) -> MinimalityReport {
    let generates_same_cone = cone_equal(s, g);

    let reduced = reduce_ci(s);
    let lineal = lineal_part(&reduced);
    let lineal_vectors: Vec<RVector> = lineal.iter().map(|&i| reduced.vector(i).clone()).collect();
    let lineality_dim = extract_basis(&lineal_vectors).len();
    let conic_count = reduced.len() - lineal.len();
    let expected_size = if lineality_dim >= 1 {
        lineality_dim + 1
    } else {
        0
    } + conic_count;

    let bruteforce_size = if s.len() <= BRUTEFORCE_CAP && is_pointed(s) {
        Some(bruteforce_min_subset(s, BRUTEFORCE_CAP).len())
    } else {
        None
    };

    MinimalityReport {
        generates_same_cone,
        candidate_size: g.len(),
        expected_size,
        lineality_dim,
        bruteforce_size,
    }
}
