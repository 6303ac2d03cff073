//! Exact integer and rational linear algebra.
//!
//! Provides the dense arbitrary-precision kernels everything else reduces
//! to: ranks and solvability over Q via Gauss-Jordan elimination, and
//! saturated kernel lattices over Z via the Smith normal form. Matrices at
//! this scale are tiny (a handful of rows and columns), so the algorithms
//! favor auditability over asymptotics.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational};

/// A vector of exact rationals. `BigRational` keeps entries in lowest terms
/// with nonzero denominators by construction.
pub type RationalVector = Vec<Rational>;

/// Dense row-major matrix with arbitrary-precision integer entries.
///
/// The ambient use is the defining d×n matrix of a hypergeometric system,
/// but the type stays general purpose: full-row-rank and nonzero-column
/// requirements are enforced at the hypergeometric API boundary, not here.
/// A matrix may have zero columns (`cols == 0`) so that column submatrices
/// indexed by the empty face remain representable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, Error> {
        if rows == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "{} entries supplied for a {}x{} matrix",
                    entries.len(),
                    rows,
                    cols
                ),
            });
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from machine-integer rows, validating rectangularity.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedMatrix {
                    row: i + 1,
                    found: row.len(),
                    expected: cols,
                });
            }
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&e| BigInt::from(e)))
            .collect();
        IntegerMatrix::new(rows.len(), cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntegerMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    /// Index (0-based) of the first zero column, if any.
    pub fn first_zero_column(&self) -> Option<usize> {
        (0..self.cols).find(|&j| self.is_zero_column(j))
    }

    /// A·v for an integer vector v of length `cols`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    pub fn to_rational_rows(&self) -> Vec<RationalVector> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| Rational::from_integer(e.clone()))
                    .collect()
            })
            .collect()
    }

    /// Rank over the rationals, by Gauss-Jordan elimination.
    pub fn rank(&self) -> usize {
        if self.cols == 0 {
            return 0;
        }
        let mut m = self.to_rational_rows();
        rref(&mut m).len()
    }

    /// The d×|indices| submatrix of the selected columns, order preserving.
    pub fn column_submatrix(&self, indices: &[usize]) -> Result<IntegerMatrix, Error> {
        for &j in indices {
            if j >= self.cols {
                return Err(Error::ColumnOutOfRange {
                    index: j,
                    cols: self.cols,
                });
            }
        }
        let mut entries = Vec::with_capacity(self.rows * indices.len());
        for i in 0..self.rows {
            for &j in indices {
                entries.push(self.get(i, j).clone());
            }
        }
        IntegerMatrix::new(self.rows, indices.len(), entries)
    }

    /// Whether the all-ones row of length `cols` lies in the rational row
    /// span, decided by an exact linear solve.
    pub fn rowspan_contains_ones(&self) -> bool {
        // Solve Aᵀ y = (1,…,1): one equation per column of A.
        let system: Vec<RationalVector> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| Rational::from_integer(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let rhs: RationalVector = vec![Rational::one(); self.cols];
        solve_rational(&system, &rhs).is_some()
    }

    /// Basis of the saturated integer kernel lattice ker_Z(A), computed via
    /// the Smith normal form. The returned vectors generate every integer
    /// solution of Av = 0; their count is `cols − rank`.
    pub fn kernel_lattice_basis(&self) -> Vec<Vec<BigInt>> {
        let snf = self.smith_normal_form();
        let nonzero = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
        (nonzero..self.cols)
            .map(|j| snf.right.column(j))
            .collect()
    }

    /// Smith normal form U·A·V = D with unimodular U, V and nonnegative
    /// diagonal entries each dividing the next. Pivots are chosen to
    /// minimize absolute value, which keeps intermediate entries small at
    /// this scale.
    pub fn smith_normal_form(&self) -> SmithNormalForm {
        let d = self.rows;
        let n = self.cols;
        let mut m = self.entries.clone();
        let mut u = IntegerMatrix::identity(d);
        let mut v = IntegerMatrix::identity(n);

        let idx = |i: usize, j: usize| i * n + j;

        let swap_rows = |m: &mut Vec<BigInt>, u: &mut IntegerMatrix, a: usize, b: usize| {
            for j in 0..n {
                m.swap(idx(a, j), idx(b, j));
            }
            for j in 0..d {
                u.entries.swap(a * d + j, b * d + j);
            }
        };
        let swap_cols = |m: &mut Vec<BigInt>, v: &mut IntegerMatrix, a: usize, b: usize| {
            for i in 0..d {
                m.swap(idx(i, a), idx(i, b));
            }
            for i in 0..n {
                v.entries.swap(i * n + a, i * n + b);
            }
        };
        // row a -= q * row b
        let row_sub = |m: &mut Vec<BigInt>, u: &mut IntegerMatrix, a: usize, b: usize, q: &BigInt| {
            for j in 0..n {
                let s = &m[idx(b, j)] * q;
                m[idx(a, j)] -= s;
            }
            for j in 0..d {
                let s = u.get(b, j) * q;
                u.entries[a * d + j] -= s;
            }
        };
        // col a -= q * col b
        let col_sub = |m: &mut Vec<BigInt>, v: &mut IntegerMatrix, a: usize, b: usize, q: &BigInt| {
            for i in 0..d {
                let s = &m[idx(i, b)] * q;
                m[idx(i, a)] -= s;
            }
            for i in 0..n {
                let s = v.get(i, b) * q;
                v.entries[i * n + a] -= s;
            }
        };
        let negate_row = |m: &mut Vec<BigInt>, u: &mut IntegerMatrix, a: usize| {
            for j in 0..n {
                let e = -m[idx(a, j)].clone();
                m[idx(a, j)] = e;
            }
            for j in 0..d {
                let e = -u.get(a, j).clone();
                u.entries[a * d + j] = e;
            }
        };

        let mut t = 0;
        while t < d.min(n) {
            // Pivot: nonzero entry of minimal absolute value in m[t.., t..].
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d {
                for j in t..n {
                    if !m[idx(i, j)].is_zero()
                        && pivot
                            .map(|(pi, pj)| m[idx(i, j)].abs() < m[idx(pi, pj)].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            if pi != t {
                swap_rows(&mut m, &mut u, t, pi);
            }
            if pj != t {
                swap_cols(&mut m, &mut v, t, pj);
            }
            if m[idx(t, t)].is_negative() {
                negate_row(&mut m, &mut u, t);
            }

            'reduce: loop {
                // Clear column t below the pivot. Floor division against a
                // positive pivot leaves remainders in [0, pivot), so any
                // survivor becomes a strictly smaller pivot.
                for i in t + 1..d {
                    if !m[idx(i, t)].is_zero() {
                        let q = m[idx(i, t)].div_floor(&m[idx(t, t)]);
                        row_sub(&mut m, &mut u, i, t, &q);
                        if !m[idx(i, t)].is_zero() {
                            swap_rows(&mut m, &mut u, t, i);
                            continue 'reduce;
                        }
                    }
                }
                for j in t + 1..n {
                    if !m[idx(t, j)].is_zero() {
                        let q = m[idx(t, j)].div_floor(&m[idx(t, t)]);
                        col_sub(&mut m, &mut v, j, t, &q);
                        if !m[idx(t, j)].is_zero() {
                            swap_cols(&mut m, &mut v, t, j);
                            continue 'reduce;
                        }
                    }
                }
                // Row and column are clean; force the divisibility chain.
                let mut offender = None;
                'scan: for i in t + 1..d {
                    for j in t + 1..n {
                        if !m[idx(i, j)].mod_floor(&m[idx(t, t)]).is_zero() {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(i) => {
                        // row t += row i, exposing the offending entry.
                        for j in 0..n {
                            let s = m[idx(i, j)].clone();
                            m[idx(t, j)] += s;
                        }
                        for j in 0..d {
                            let s = u.get(i, j).clone();
                            u.entries[t * d + j] += s;
                        }
                        continue 'reduce;
                    }
                    None => break 'reduce,
                }
            }
            t += 1;
        }

        let diagonal = (0..d.min(n)).map(|k| m[idx(k, k)].clone()).collect();
        SmithNormalForm {
            diagonal,
            left: u,
            right: v,
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Result of the Smith normal form: `left · A · right` is diagonal with the
/// entries of `diagonal`, and both transforms are unimodular.
pub struct SmithNormalForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

/// Reduced row echelon form in place; returns the pivot column indices.
pub fn rref(m: &mut [RationalVector]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..cols {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let s = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rational_rank(rows: &[RationalVector]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of {x : M x = 0} over Q for the given row list with `cols` columns.
pub fn rational_nullspace(rows: &[RationalVector], cols: usize) -> Vec<RationalVector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; cols];
        for &c in &pivots {
            s[c] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for f in 0..cols {
        if pivot_set[f] {
            continue;
        }
        let mut x = vec![Rational::zero(); cols];
        x[f] = Rational::one();
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = -m[pi][f].clone();
        }
        basis.push(x);
    }
    basis
}

/// One exact solution of M x = b, or None when the system is inconsistent.
pub fn solve_rational(rows: &[RationalVector], rhs: &[Rational]) -> Option<RationalVector> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per equation");
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let cols = rows[0].len();
    let mut m: Vec<RationalVector> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rational::zero(); cols];
    for (pi, &pc) in pivots.iter().enumerate() {
        x[pc] = m[pi][cols].clone();
    }
    Some(x)
}

/// Exact dot product of two rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product needs equal lengths");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::Signed;

    fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&e| BigInt::from(e)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(&[vec![1, 1, 1], vec![0, 1, 2]]).rank(), 2);
        assert_eq!(m(&[vec![0, 0, 0], vec![0, 0, 0]]).rank(), 0);
        assert_eq!(m(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).rank(), 2);
    }

    #[test]
    fn kernel_identity_is_trivial() {
        assert!(m(&[vec![1, 0], vec![0, 1]]).kernel_lattice_basis().is_empty());
    }

    /// Oracle: rational nullspace by Gaussian elimination, denominators
    /// cleared. The SNF basis must agree up to unimodular change, which we
    /// check by expressing each oracle vector integrally in the SNF basis
    /// and vice versa.
    fn rational_kernel_oracle(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
        let rows = a.to_rational_rows();
        rational_nullspace(&rows, a.cols())
            .into_iter()
            .map(|v| {
                let lcm = v
                    .iter()
                    .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                v.iter()
                    .map(|r| (r * Rational::from_integer(lcm.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    fn integrally_spans(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
        if basis.is_empty() {
            return v.iter().all(|e| e.is_zero());
        }
        let n = v.len();
        // Solve basisᵀ c = v over Q and check integrality.
        let rows: Vec<RationalVector> = (0..n)
            .map(|i| {
                basis
                    .iter()
                    .map(|b| Rational::from_integer(b[i].clone()))
                    .collect()
            })
            .collect();
        let rhs: RationalVector = v
            .iter()
            .map(|e| Rational::from_integer(e.clone()))
            .collect();
        match solve_rational(&rows, &rhs) {
            Some(c) => c.iter().all(|x| x.is_integer()),
            None => false,
        }
    }

    #[test]
    fn kernel_conic_matrix() {
        let a = m(&[vec![1, 1, 1], vec![0, 1, 2]]);
        let basis = a.kernel_lattice_basis();
        assert_eq!(basis.len(), 1);
        assert!(a.mul_vec(&basis[0]).iter().all(|e| e.is_zero()));
        // Up to sign this is (1, −2, 1).
        assert!(integrally_spans(&basis, &big(&[1, -2, 1])));
        assert!(integrally_spans(&[big(&[1, -2, 1])], &basis[0]));
    }

    #[test]
    fn kernel_one_by_two() {
        let a = m(&[vec![1, 2]]);
        let basis = a.kernel_lattice_basis();
        assert_eq!(basis.len(), 1);
        assert!(integrally_spans(&basis, &big(&[2, -1])));
        assert!(integrally_spans(&[big(&[2, -1])], &basis[0]));
    }

    #[test]
    fn kernel_matches_rational_oracle_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let d = rng.gen_range(1..=3usize);
            let n = rng.gen_range(1..=5usize);
            let rows: Vec<Vec<i64>> = (0..d)
                .map(|_| (0..n).map(|_| rng.gen_range(-4..=4i64)).collect())
                .collect();
            let a = m(&rows);
            let basis = a.kernel_lattice_basis();
            assert_eq!(basis.len(), n - a.rank());
            for v in &basis {
                assert!(a.mul_vec(v).iter().all(|e| e.is_zero()));
            }
            // Saturation: every oracle kernel vector is an integer
            // combination of the returned basis.
            for w in rational_kernel_oracle(&a) {
                assert!(integrally_spans(&basis, &w), "not saturated for {a}");
            }
        }
    }

    #[test]
    fn smith_normal_form_diagonalizes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let d = rng.gen_range(1..=4usize);
            let n = rng.gen_range(1..=5usize);
            let rows: Vec<Vec<i64>> = (0..d)
                .map(|_| (0..n).map(|_| rng.gen_range(-6..=6i64)).collect())
                .collect();
            let a = m(&rows);
            let snf = a.smith_normal_form();
            // left · a · right is the claimed diagonal.
            for i in 0..d {
                for j in 0..n {
                    let mut s = BigInt::zero();
                    for k in 0..d {
                        for l in 0..n {
                            s += snf.left.get(i, k) * a.get(k, l) * snf.right.get(l, j);
                        }
                    }
                    let expect = if i == j && i < snf.diagonal.len() {
                        snf.diagonal[i].clone()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, expect);
                }
            }
            // Divisibility chain, nonnegative entries.
            for w in snf.diagonal.windows(2) {
                if !w[0].is_zero() {
                    assert!(w[1].mod_floor(&w[0]).is_zero());
                } else {
                    assert!(w[1].is_zero());
                }
                assert!(!w[0].is_negative() && !w[1].is_negative());
            }
        }
    }

    #[test]
    fn rowspan_ones_examples() {
        assert!(m(&[vec![1, 1, 1], vec![0, 1, 2]]).rowspan_contains_ones());
        assert!(!m(&[vec![1, 2]]).rowspan_contains_ones());
        assert!(m(&[vec![2, 2], vec![0, 1]]).rowspan_contains_ones());
    }

    #[test]
    fn column_submatrix_examples() {
        let a = m(&[vec![1, 1, 1], vec![0, 1, 2]]);
        // 1-based {1,3} in the ambient description is 0-based {0,2}.
        let s = a.column_submatrix(&[0, 2]).unwrap();
        assert_eq!(s, m(&[vec![1, 1], vec![0, 2]]));
        let empty = a.column_submatrix(&[]).unwrap();
        assert_eq!(empty.rows(), 2);
        assert_eq!(empty.cols(), 0);
        let all = a.column_submatrix(&[0, 1, 2]).unwrap();
        assert_eq!(all, a);
        assert!(matches!(
            a.column_submatrix(&[3]),
            Err(Error::ColumnOutOfRange { index: 3, cols: 3 })
        ));
    }

    #[test]
    fn submatrix_rank_is_monotone() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let d = rng.gen_range(1..=3usize);
            let n = rng.gen_range(1..=5usize);
            let rows: Vec<Vec<i64>> = (0..d)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3i64)).collect())
                .collect();
            let a = m(&rows);
            let subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            assert!(a.column_submatrix(&subset).unwrap().rank() <= a.rank());
        }
    }

    #[test]
    fn solve_and_nullspace_are_exact() {
        let rows = vec![
            vec![Rational::from_integer(1.into()), Rational::from_integer(2.into())],
            vec![Rational::from_integer(2.into()), Rational::from_integer(4.into())],
        ];
        let rhs = vec![
            Rational::from_integer(3.into()),
            Rational::from_integer(6.into()),
        ];
        let x = solve_rational(&rows, &rhs).unwrap();
        assert_eq!(dot(&rows[0], &x), rhs[0]);
        let null = rational_nullspace(&rows, 2);
        assert_eq!(null.len(), 1);
        assert!(dot(&rows[0], &null[0]).is_zero());
        let bad_rhs = vec![
            Rational::from_integer(3.into()),
            Rational::from_integer(7.into()),
        ];
        assert!(solve_rational(&rows, &bad_rhs).is_none());
    }
}
