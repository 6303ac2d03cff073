//! Toric ideals: construction from the kernel lattice, the A-homogeneity
//! audit, standard-grading detection, and the homogenized matrix Â.
//!
//! The toric ideal of A is the saturation of the lattice-basis ideal: each
//! kernel vector v contributes the binomial ξ^{v⁺} − ξ^{v⁻}, and saturating
//! at ξ1⋯ξn at once (one auxiliary variable, one elimination) yields the
//! full ideal ⟨ξ^u − ξ^v | Au = Av⟩.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::groebner::Ideal;
use crate::intlin::IntegerMatrix;
use crate::poly::text::{render_polynomial, xi_names};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::{Error, Rational};

/// The toric ideal of a matrix, with its kernel lattice and the cached
/// reduced grevlex basis. Every basis element is a binomial ξ^u − ξ^v with
/// Au = Av; `homogeneity_audit` re-checks that mechanically.
#[derive(Debug, Clone)]
pub struct ToricData {
    matrix: IntegerMatrix,
    kernel_basis: Vec<Vec<BigInt>>,
    ideal: Ideal,
    gb: Arc<Vec<Polynomial>>,
}

impl ToricData {
    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn kernel_basis(&self) -> &[Vec<BigInt>] {
        &self.kernel_basis
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Reduced grevlex Gröbner basis of the toric ideal.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.gb
    }

    pub fn homogeneity_audit(&self) -> HomogeneityAudit {
        a_homogeneity_audit(&self.matrix, &self.gb)
    }
}

/// ξ^{v⁺} − ξ^{v⁻} for an integer kernel vector v.
pub fn kernel_binomial(v: &[BigInt]) -> Polynomial {
    let n = v.len();
    let mut plus = vec![0u32; n];
    let mut minus = vec![0u32; n];
    for (i, e) in v.iter().enumerate() {
        let mag: u32 = e
            .abs()
            .try_into()
            .expect("kernel exponent exceeds u32; matrix far outside supported scale");
        if e.is_positive() {
            plus[i] = mag;
        } else if e.is_negative() {
            minus[i] = mag;
        }
    }
    &Polynomial::monomial(Monomial::from_exponents(plus))
        - &Polynomial::monomial(Monomial::from_exponents(minus))
}

/// Builds the toric ideal of A, rejecting zero columns (the face machinery
/// downstream indexes nonzero columns a_i). Rank deficiency is allowed
/// here; full row rank is demanded only at the hypergeometric boundary.
pub fn toric_ideal(a: &IntegerMatrix) -> Result<ToricData, Error> {
    if let Some(col) = a.first_zero_column() {
        return Err(Error::ZeroColumn { col: col + 1 });
    }
    let n = a.cols();
    let kernel_basis = a.kernel_lattice_basis();
    let gens: Vec<Polynomial> = kernel_basis.iter().map(|v| kernel_binomial(v)).collect();
    let lattice = Ideal::new(n, gens);
    let all_vars = Monomial::from_exponents(vec![1; n]);
    let ideal = lattice.saturate(&all_vars);
    let gb = ideal.groebner_basis(&MonomialOrder::GrevLex);
    Ok(ToricData {
        matrix: a.clone(),
        kernel_basis,
        ideal,
        gb,
    })
}

/// Whether k[ξ]/I_A is standard Z-graded: exactly when the all-ones row
/// lies in the rational row span of A.
pub fn is_standard_graded(a: &IntegerMatrix) -> bool {
    a.rowspan_contains_ones()
}

/// The (d+1)×(n+1) homogenization: a row of ones across the top, then
/// (1,0,…,0) as the leftmost column.
#[derive(Debug, Clone)]
pub struct HomogenizedMatrix {
    matrix: IntegerMatrix,
    source: IntegerMatrix,
}

impl HomogenizedMatrix {
    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn source(&self) -> &IntegerMatrix {
        &self.source
    }
}

pub fn homogenize(a: &IntegerMatrix) -> HomogenizedMatrix {
    let d = a.rows();
    let n = a.cols();
    let mut entries = Vec::with_capacity((d + 1) * (n + 1));
    entries.extend(std::iter::repeat_with(BigInt::one).take(n + 1));
    for i in 0..d {
        entries.push(BigInt::zero());
        entries.extend(a.row(i).iter().cloned());
    }
    let matrix = IntegerMatrix::new(d + 1, n + 1, entries).expect("well-formed by construction");
    HomogenizedMatrix {
        matrix,
        source: a.clone(),
    }
}

/// Outcome of checking each basis element for A-graded homogeneity.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HomogeneityAudit {
    pub pass: bool,
    /// Rendered element and the reason it failed, when one does.
    pub counterexample: Option<String>,
}

/// A·u for the exponent vector of a monomial.
pub fn a_degree(a: &IntegerMatrix, m: &Monomial) -> Vec<BigInt> {
    let v: Vec<BigInt> = m.exponents().iter().map(|&e| BigInt::from(e)).collect();
    a.mul_vec(&v)
}

/// Confirms every basis element is a binomial ξ^u − ξ^v with Au = Av.
pub fn a_homogeneity_audit(a: &IntegerMatrix, basis: &[Polynomial]) -> HomogeneityAudit {
    let names = xi_names(a.cols());
    for g in basis {
        let render = || render_polynomial(g, &names);
        let terms: Vec<_> = g.terms().collect();
        if terms.len() != 2 {
            return HomogeneityAudit {
                pass: false,
                counterexample: Some(format!("{} is not a binomial", render())),
            };
        }
        let coeffs: Vec<&Rational> = terms.iter().map(|(_, c)| *c).collect();
        let one = Rational::one();
        if !((coeffs[0] == &one && coeffs[1] == &-one.clone())
            || (coeffs[1] == &one && coeffs[0] == &-one.clone()))
        {
            return HomogeneityAudit {
                pass: false,
                counterexample: Some(format!("{} does not have coefficients ±1", render())),
            };
        }
        let du = a_degree(a, terms[0].0);
        let dv = a_degree(a, terms[1].0);
        if du != dv {
            return HomogeneityAudit {
                pass: false,
                counterexample: Some(format!(
                    "{}: A-degrees differ ({du:?} vs {dv:?})",
                    render()
                )),
            };
        }
    }
    HomogeneityAudit {
        pass: true,
        counterexample: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;
    use rand::{Rng, SeedableRng};

    fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, &xi_names(n)).unwrap()
    }

    /// Brute-force membership oracle: ξ^u − ξ^v reduces to zero against the
    /// computed basis exactly when Au = Av, for all exponent vectors with
    /// entries up to the bound.
    fn membership_matches_balance(a: &IntegerMatrix, t: &ToricData, max_entry: u32) {
        let n = a.cols();
        let mut stack = vec![vec![]];
        let mut vectors = Vec::new();
        while let Some(v) = stack.pop() {
            if v.len() == n {
                vectors.push(v);
                continue;
            }
            for e in 0..=max_entry {
                let mut w = v.clone();
                w.push(e);
                stack.push(w);
            }
        }
        for u in &vectors {
            for v in &vectors {
                if u == v {
                    continue;
                }
                let mu = Monomial::from_exponents(u.clone());
                let mv = Monomial::from_exponents(v.clone());
                let balanced = a_degree(a, &mu) == a_degree(a, &mv);
                let b = &Polynomial::monomial(mu) - &Polynomial::monomial(mv);
                let member =
                    crate::groebner::reduce(&b, t.groebner_basis(), &MonomialOrder::GrevLex)
                        .is_zero();
                assert_eq!(member, balanced, "membership mismatch for {u:?} vs {v:?}");
            }
        }
    }

    #[test]
    fn toric_examples() {
        let identity = toric_ideal(&m(&[vec![1, 0], vec![0, 1]])).unwrap();
        assert!(identity.groebner_basis().is_empty());

        let conic = toric_ideal(&m(&[vec![1, 1, 1], vec![0, 1, 2]])).unwrap();
        assert_eq!(conic.groebner_basis(), &[p("u2^2 - u1*u3", 3)]);

        let segment = toric_ideal(&m(&[vec![1, 2]])).unwrap();
        assert_eq!(segment.groebner_basis(), &[p("u1^2 - u2", 2)]);

        assert!(matches!(
            toric_ideal(&m(&[vec![1, 0], vec![1, 0]])),
            Err(Error::ZeroColumn { col: 2 })
        ));
    }

    #[test]
    fn membership_oracles() {
        let conic = m(&[vec![1, 1, 1], vec![0, 1, 2]]);
        membership_matches_balance(&conic, &toric_ideal(&conic).unwrap(), 3);
        let segment = m(&[vec![1, 2]]);
        membership_matches_balance(&segment, &toric_ideal(&segment).unwrap(), 4);
    }

    #[test]
    fn standard_grading_examples() {
        assert!(is_standard_graded(&m(&[vec![1, 1, 1], vec![0, 1, 2]])));
        assert!(!is_standard_graded(&m(&[vec![1, 2]])));
        assert!(is_standard_graded(&m(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]])));
    }

    #[test]
    fn homogenize_examples() {
        let h = homogenize(&m(&[vec![1, 2]]));
        assert_eq!(h.matrix(), &m(&[vec![1, 1, 1], vec![0, 1, 2]]));

        let h2 = homogenize(&m(&[vec![1, 1], vec![0, 1]]));
        assert_eq!(
            h2.matrix(),
            &m(&[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]])
        );

        let h3 = homogenize(&m(&[vec![2]]));
        assert_eq!(h3.matrix(), &m(&[vec![1, 1], vec![0, 2]]));

        // Invariants: top row ones, left column (1,0,…,0), deleting both
        // recovers the source.
        let a = m(&[vec![3, 0, 1], vec![2, 2, 5]]);
        let hat = homogenize(&a);
        let hm = hat.matrix();
        assert!((0..hm.cols()).all(|j| hm.get(0, j).is_one()));
        assert!(hm.get(0, 0).is_one() && (1..hm.rows()).all(|i| hm.get(i, 0).is_zero()));
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                assert_eq!(hm.get(i + 1, j + 1), a.get(i, j));
            }
        }
        assert_eq!(hat.source(), &a);
    }

    #[test]
    fn homogeneity_audit_examples() {
        let a = m(&[vec![1, 1, 1], vec![0, 1, 2]]);
        let t = toric_ideal(&a).unwrap();
        assert!(t.homogeneity_audit().pass);

        let corrupted = [p("u1 - u2", 3)];
        let audit = a_homogeneity_audit(&a, &corrupted);
        assert!(!audit.pass);
        assert!(audit.counterexample.unwrap().contains("A-degrees differ"));

        assert!(a_homogeneity_audit(&a, &[]).pass);
        let not_binomial = [p("u1 + u2 + u3", 3)];
        assert!(!a_homogeneity_audit(&a, &not_binomial).pass);
    }

    #[test]
    fn toric_dimension_equals_rank_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let mut tried = 0;
        while tried < 8 {
            let d = rng.gen_range(1..=2usize);
            let n = rng.gen_range(d.max(2)..=4usize);
            let rows: Vec<Vec<i64>> = (0..d)
                .map(|_| (0..n).map(|_| rng.gen_range(0..=3i64)).collect())
                .collect();
            let a = m(&rows);
            if a.first_zero_column().is_some() {
                continue;
            }
            tried += 1;
            let t = toric_ideal(&a).unwrap();
            assert_eq!(
                t.ideal().krull_dimension(&MonomialOrder::GrevLex),
                crate::groebner::KrullDimension::Dim(a.rank())
            );
            assert!(t.homogeneity_audit().pass);
        }
    }
}
