//! Shared fixtures for the integration suites: the fixed corpus, the
//! seeded random battery, and brute-force oracles independent of the
//! engine paths they check.

// Each integration test binary compiles this module separately and uses a
// different subset of it.
#![allow(dead_code)]

use gkzcheck_core::intlin::IntegerMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BATTERY_SEED: u64 = 0xA11CE;

pub fn matrix(rows: &[&[i64]]) -> IntegerMatrix {
    let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    IntegerMatrix::from_rows(&owned).unwrap()
}

/// The fixed verification corpus.
pub fn corpus() -> Vec<(&'static str, IntegerMatrix)> {
    vec![
        ("identity2", matrix(&[&[1, 0], &[0, 1]])),
        ("segment12", matrix(&[&[1, 2]])),
        ("cusp23", matrix(&[&[2, 3]])),
        ("conic", matrix(&[&[1, 1, 1], &[0, 1, 2]])),
        ("twisted_cubic", matrix(&[&[1, 1, 1, 1], &[0, 1, 2, 3]])),
        ("triangle", matrix(&[&[1, 1], &[0, 1]])),
        ("flag3", matrix(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]])),
    ]
}

/// Twenty seeded random full-row-rank matrices with d ≤ 3, n ≤ 5, entries
/// in 0..=4, and no zero column.
pub fn random_battery() -> Vec<IntegerMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(BATTERY_SEED);
    let mut out = Vec::new();
    while out.len() < 20 {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(d..=5usize);
        let rows: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=4i64)).collect())
            .collect();
        let a = IntegerMatrix::from_rows(&rows).unwrap();
        if a.first_zero_column().is_none() && a.rank() == d {
            out.push(a);
        }
    }
    out
}

/// Corpus plus random battery.
pub fn full_battery() -> Vec<(String, IntegerMatrix)> {
    let mut out: Vec<(String, IntegerMatrix)> = corpus()
        .into_iter()
        .map(|(name, a)| (name.to_string(), a))
        .collect();
    for (i, a) in random_battery().into_iter().enumerate() {
        out.push((format!("random{i:02}"), a));
    }
    out
}

/// Brute-force face oracle for d ≤ 3, n ≤ 5: candidate normals from the
/// null spaces of all (d−1)-subsets of columns (both signs); the feasible
/// ones are facet functionals and sums over their subsets reach every face.
pub fn face_oracle(a: &IntegerMatrix) -> std::collections::BTreeSet<Vec<usize>> {
    use gkzcheck_core::intlin::{dot, rational_nullspace};
    use gkzcheck_core::Rational;
    use itertools::Itertools;
    use num_traits::Zero;
    use std::collections::BTreeSet;

    let d = a.rows();
    let n = a.cols();
    let column = |j: usize| -> Vec<Rational> {
        (0..d)
            .map(|i| Rational::from_integer(a.get(i, j).clone()))
            .collect()
    };
    let mut feasible: Vec<Vec<Rational>> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for subset in (0..n).combinations(d.saturating_sub(1)) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| column(i)).collect();
        let null = rational_nullspace(&rows, d);
        if null.len() != 1 {
            continue;
        }
        for sign in [1i64, -1] {
            let c: Vec<Rational> = null[0]
                .iter()
                .map(|e| e * Rational::from_integer(sign.into()))
                .collect();
            let evals: Vec<Rational> = (0..n).map(|j| dot(&c, &column(j))).collect();
            if evals.iter().all(|e| e >= &Rational::zero()) {
                let zeros: Vec<usize> = (0..n).filter(|&j| evals[j].is_zero()).collect();
                if zeros.len() < n && seen.insert(zeros) {
                    feasible.push(c);
                }
            }
        }
    }
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    out.insert((0..n).collect());
    for k in 1..=feasible.len() {
        for pick in feasible.iter().combinations(k) {
            let sum: Vec<Rational> = (0..d)
                .map(|i| pick.iter().map(|c| c[i].clone()).sum())
                .collect();
            let zeros: Vec<usize> = (0..n)
                .filter(|&j| dot(&sum, &column(j)).is_zero())
                .collect();
            out.insert(zeros);
        }
    }
    out
}
