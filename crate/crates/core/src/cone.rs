//! Faces of the real cone generated by the columns of A.
//!
//! Facet normals are found exactly: for every subset of columns of rank
//! one less than rank(A), the column-space vectors orthogonal to it form a
//! line, and a generator is kept when it evaluates with one sign on all
//! columns. Faces are the intersections of facet column sets, each carrying
//! a supporting functional as a certificate (the sum of the normals of the
//! facets containing it, or zero for the whole cone). Non-pointed cones
//! need no special casing: the minimal face falls out of the intersection
//! closure.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::intlin::{rational_nullspace, rref, IntegerMatrix, RationalVector};
use crate::{Error, Rational};

/// A face τ ⪯ A of the cone R≥0·A, identified with the set of columns
/// lying on it.
///
/// The certificate satisfies `normal·a_i = 0` exactly for i ∈ columns and
/// `normal·a_i > 0` off them; the whole cone carries the zero functional.
/// `dim` is the orbit dimension rank(A_τ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// 0-based column indices.
    pub columns: BTreeSet<usize>,
    pub normal: RationalVector,
    pub dim: usize,
}

impl Face {
    /// The 0/1 indicator vector 1^τ of length n.
    pub fn one_tau(&self, n: usize) -> Vec<u8> {
        let mut v = vec![0u8; n];
        for &i in &self.columns {
            assert!(i < n, "face column out of range for ambient n");
            v[i] = 1;
        }
        v
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn sorted_columns(&self) -> Vec<usize> {
        self.columns.iter().copied().collect()
    }
}

/// rank(A_τ), the dimension of the torus orbit attached to the face.
pub fn orbit_dimension(a: &IntegerMatrix, face: &Face) -> usize {
    a.column_submatrix(&face.sorted_columns())
        .expect("face columns lie in range")
        .rank()
}

/// All faces of R≥0·A with certificates, deduplicated by column set and
/// sorted by (dimension, columns). Includes the whole cone and the minimal
/// face. Zero columns are rejected.
pub fn enumerate_faces(a: &IntegerMatrix) -> Result<Vec<Face>, Error> {
    if let Some(col) = a.first_zero_column() {
        return Err(Error::ZeroColumn { col: col + 1 });
    }
    let n = a.cols();
    let full: BTreeSet<usize> = (0..n).collect();
    if n == 0 {
        return Ok(vec![Face {
            columns: full,
            normal: vec![Rational::zero(); a.rows()],
            dim: 0,
        }]);
    }

    let facets = facet_normals(a);

    // Intersection closure of the facet column sets, seeded with the cone.
    let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    sets.insert(full.clone());
    for (cols, _) in &facets {
        sets.insert(cols.clone());
    }
    loop {
        let snapshot: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
        let before = sets.len();
        for (x, y) in snapshot.iter().tuple_combinations() {
            sets.insert(x.intersection(y).copied().collect());
        }
        if sets.len() == before {
            break;
        }
    }

    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|columns| {
            let normal = if columns == full {
                vec![Rational::zero(); a.rows()]
            } else {
                let mut c = vec![Rational::zero(); a.rows()];
                for (fc, fnorm) in &facets {
                    if columns.is_subset(fc) {
                        for (ci, fi) in c.iter_mut().zip(fnorm) {
                            *ci += fi;
                        }
                    }
                }
                c
            };
            let dim = a
                .column_submatrix(&columns.iter().copied().collect::<Vec<_>>())
                .expect("in range")
                .rank();
            Face {
                columns,
                normal,
                dim,
            }
        })
        .collect();
    faces.sort_by(|x, y| {
        (x.dim, x.sorted_columns()).cmp(&(y.dim, y.sorted_columns()))
    });
    Ok(faces)
}

/// Facet column sets with primitive integer-valued normals oriented
/// nonnegatively on the columns.
fn facet_normals(a: &IntegerMatrix) -> Vec<(BTreeSet<usize>, RationalVector)> {
    let d = a.rows();
    let n = a.cols();
    let r = a.rank();
    if r == 0 {
        return Vec::new();
    }

    // Column-space basis from the pivot columns of A.
    let mut rows = a.to_rational_rows();
    let pivot_cols = rref(&mut rows);
    let basis: Vec<RationalVector> = pivot_cols
        .iter()
        .map(|&j| {
            (0..d)
                .map(|i| Rational::from_integer(a.get(i, j).clone()))
                .collect()
        })
        .collect();

    let column = |j: usize| -> RationalVector {
        (0..d)
            .map(|i| Rational::from_integer(a.get(i, j).clone()))
            .collect()
    };

    let mut out: BTreeMap<BTreeSet<usize>, RationalVector> = BTreeMap::new();
    for subset in (0..n).combinations(r.saturating_sub(1)) {
        // Solve for c = Σ y_k b_k with c·a_i = 0 on the subset.
        let system: Vec<RationalVector> = subset
            .iter()
            .map(|&i| {
                let ai = column(i);
                basis.iter().map(|b| crate::intlin::dot(&ai, b)).collect()
            })
            .collect();
        let null = rational_nullspace(&system, r);
        if null.len() != 1 {
            continue; // subset rank is not r−1
        }
        let mut c: RationalVector = (0..d)
            .map(|i| {
                null[0]
                    .iter()
                    .zip(&basis)
                    .map(|(y, b)| y * &b[i])
                    .sum::<Rational>()
            })
            .collect();
        let evals: Vec<Rational> = (0..n).map(|j| crate::intlin::dot(&c, &column(j))).collect();
        if evals.iter().all(|e| e >= &Rational::zero()) {
            // keep orientation
        } else if evals.iter().all(|e| e <= &Rational::zero()) {
            for ci in c.iter_mut() {
                *ci = -ci.clone();
            }
        } else {
            continue; // not a supporting functional
        }
        let zero_set: BTreeSet<usize> =
            (0..n).filter(|&j| evals[j].is_zero()).collect();
        if zero_set.len() == n {
            continue; // orthogonal to every column; cannot happen for c ≠ 0
        }
        out.entry(zero_set).or_insert_with(|| primitive(&c));
    }
    out.into_iter().collect()
}

/// Scales a rational vector to a primitive integer vector (same direction).
fn primitive(c: &[Rational]) -> RationalVector {
    let lcm = c
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|r| (r * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, e| acc.gcd(e));
    ints.into_iter()
        .map(|e| {
            if gcd.is_zero() {
                Rational::from_integer(e)
            } else {
                Rational::from_integer(e / &gcd)
            }
        })
        .collect()
}
