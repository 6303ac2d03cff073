//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every tolerance is exact equality; there is no floating point in
//! any verdict path. Run with `cargo test --test acceptance -- --nocapture`
//! to see the per-criterion lines.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gkzcheck_core::groebner::{buchberger, reduce, KrullDimension};
use gkzcheck_core::hypergeo::{
    characteristic_model, face_dimension_audit, family_check, homogenization_reduction,
    verify_parameter_theorem,
};
use gkzcheck_core::intlin::IntegerMatrix;
use gkzcheck_core::poly::{Monomial, MonomialOrder, Polynomial};
use gkzcheck_core::report::GradedPath;
use gkzcheck_core::toric::{a_degree, is_standard_graded, kernel_binomial, toric_ideal};
use gkzcheck_core::transversal::{
    certify_transversality, sample_face_certificates, TransversalityInstance,
};
use gkzcheck_core::{cone, Error, Rational};

use common::{corpus, face_oracle, full_battery};

fn criterion(number: usize, name: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    match &outcome {
        Ok(()) => println!("ACCEPTANCE {number} {name}: PASS"),
        Err(_) => println!("ACCEPTANCE {number} {name}: FAIL"),
    }
    if let Err(payload) = outcome {
        std::panic::resume_unwind(payload);
    }
}

const GREVLEX: MonomialOrder = MonomialOrder::GrevLex;

#[test]
fn criterion_1_parameter_theorem_battery() {
    criterion(1, "parameter theorem dimension battery", || {
        for (name, a) in full_battery() {
            let v = verify_parameter_theorem(&a).unwrap();
            assert_eq!(
                v.dim_cut,
                KrullDimension::Dim(v.n),
                "{name}: dim after adjoining forms"
            );
            assert_eq!(
                v.dim_product,
                KrullDimension::Dim(v.n + v.rank),
                "{name}: dim of the product ring"
            );
            assert_eq!(v.drop, Some(v.rank), "{name}: dimension drop");
            assert!(v.pass, "{name}: verdict");
            assert!(v.sop_certified, "{name}: system-of-parameters certificate");
        }
    });
}

#[test]
fn criterion_2_holonomicity_battery() {
    criterion(2, "holonomicity dimension battery", || {
        for (name, a) in full_battery() {
            let model = characteristic_model(&a).unwrap();
            assert_eq!(
                model.dimension,
                KrullDimension::Dim(model.n),
                "{name}: characteristic dimension"
            );
            assert!(
                model.routes_consistent,
                "{name}: direct and homogenized routes disagree"
            );
            let expected_path = if is_standard_graded(&a) {
                GradedPath::Direct
            } else {
                GradedPath::Homogenized
            };
            assert_eq!(model.graded_path, expected_path, "{name}: route choice");
        }
    });
}

#[test]
fn criterion_3_homogenization_isomorphism() {
    criterion(3, "homogenization contraction identity", || {
        let mut nongraded = 0;
        for (name, a) in corpus() {
            let verdict = homogenization_reduction(&a).unwrap();
            if is_standard_graded(&a) {
                assert!(verdict.trivially_consistent, "{name}");
            } else {
                nongraded += 1;
                assert_eq!(verdict.xi_level_equal, Some(true), "{name}: ξ-level");
                assert_eq!(verdict.x_extended_equal, Some(true), "{name}: x-extended");
            }
            assert!(verdict.pass, "{name}");
        }
        assert!(nongraded >= 2, "corpus must exercise non-graded inputs");
    });
}

#[test]
fn criterion_4_holonomic_family() {
    criterion(4, "family coherence (finite constant generic fibers)", || {
        for (name, a) in full_battery() {
            let verdict = family_check(&a, 3, 0).unwrap();
            assert!(
                verdict.parameter_free_generators,
                "{name}: parameter variables crept into the ideal"
            );
            assert!(
                verdict.common_degree.is_some(),
                "{name}: fiber degrees {:?}",
                verdict
                    .samples
                    .iter()
                    .map(|s| s.degree.to_string())
                    .collect::<Vec<_>>()
            );
            assert!(verdict.pass, "{name}");
        }
    });
}

#[test]
fn criterion_5_transversality_battery() {
    criterion(5, "transversality certificates and boundary refusal", || {
        for (name, a) in corpus() {
            for face in cone::enumerate_faces(&a).unwrap() {
                let battery = sample_face_certificates(&a, &face, 10, 0).unwrap();
                assert_eq!(
                    battery.passed, 10,
                    "{name}: face {:?}",
                    battery.face_columns
                );
            }
            // An instance with a zero ξ-coordinate must be refused with
            // the orbit-boundary diagnosis.
            let n = a.cols();
            let mut q = vec![Rational::from_integer(1.into()); n];
            q[n - 1] = Rational::zero();
            let p = vec![Rational::zero(); n];
            let instance =
                TransversalityInstance::new(a.to_rational_rows(), p, q).unwrap();
            assert!(
                matches!(
                    certify_transversality(&instance),
                    Err(Error::OrbitBoundary { .. })
                ),
                "{name}: boundary instance was not refused"
            );
        }
    });
}

#[test]
fn criterion_6_face_and_orbit_facts() {
    criterion(6, "face enumeration oracle and toric dimension", || {
        for (name, a) in corpus() {
            let faces = cone::enumerate_faces(&a).unwrap();
            let sets: BTreeSet<Vec<usize>> =
                faces.iter().map(|f| f.sorted_columns()).collect();
            assert_eq!(sets, face_oracle(&a), "{name}: face lattice");
            for face in &faces {
                assert_eq!(
                    face.dim,
                    cone::orbit_dimension(&a, face),
                    "{name}: orbit dimension"
                );
            }
        }
        for (name, a) in full_battery() {
            let t = toric_ideal(&a).unwrap();
            assert_eq!(
                t.ideal().krull_dimension(&GREVLEX),
                KrullDimension::Dim(a.rank()),
                "{name}: dim of the toric variety"
            );
        }
    });
}

#[test]
fn criterion_7_engine_oracles() {
    criterion(7, "engine-level oracles", || {
        for (name, a) in corpus() {
            membership_iff_balance(&name, &a, 100);
            permutation_invariance(&name, &a);
            saturation_idempotence(&name, &a);
        }
        // Dimension is independent of the global order (lex cross-check
        // for small ambient rings).
        for (name, a) in corpus() {
            if a.cols() > 3 {
                continue;
            }
            let ideal = gkzcheck_core::hypergeo::parameter_theorem_ideal(&a).unwrap();
            assert_eq!(
                ideal.krull_dimension(&GREVLEX),
                ideal.krull_dimension(&MonomialOrder::Lex),
                "{name}: lex vs grevlex dimension"
            );
        }
    });
}

#[test]
fn criterion_8_face_dimension_audit() {
    criterion(8, "per-face dimension audit", || {
        for (name, a) in full_battery() {
            let audit = face_dimension_audit(&a).unwrap();
            assert!(audit.pass, "{name}: {:?}", audit.entries);
        }
    });
}

/// 100 seeded (u, v) pairs per matrix: the binomial ξ^u − ξ^v lies in the
/// toric ideal exactly when Au = Av. Half the pairs are built balanced
/// from kernel vectors so both directions of the equivalence get traffic.
fn membership_iff_balance(name: &str, a: &IntegerMatrix, pairs: usize) {
    let t = toric_ideal(a).unwrap();
    let n = a.cols();
    let mut rng = ChaCha8Rng::seed_from_u64(0xBA1A ^ n as u64);
    let kernel = t.kernel_basis();
    for k in 0..pairs {
        let (u, v): (Vec<u32>, Vec<u32>) = if k % 2 == 0 || kernel.is_empty() {
            (
                (0..n).map(|_| rng.gen_range(0..=3u32)).collect(),
                (0..n).map(|_| rng.gen_range(0..=3u32)).collect(),
            )
        } else {
            // Balanced by construction: w in the kernel lattice, split into
            // positive and negative parts, plus a common shift.
            let mut w = vec![BigInt::zero(); n];
            for basis_vec in kernel {
                let c = BigInt::from(rng.gen_range(-2..=2i64));
                for (wi, bi) in w.iter_mut().zip(basis_vec) {
                    *wi += &c * bi;
                }
            }
            let shift: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=1u32)).collect();
            let mut u = vec![0u32; n];
            let mut v = vec![0u32; n];
            for i in 0..n {
                let mag: u32 = w[i].abs().try_into().unwrap();
                if w[i].is_positive() {
                    u[i] = mag;
                } else {
                    v[i] = mag;
                }
                u[i] += shift[i];
                v[i] += shift[i];
            }
            (u, v)
        };
        let mu = Monomial::from_exponents(u.clone());
        let mv = Monomial::from_exponents(v.clone());
        let balanced = a_degree(a, &mu) == a_degree(a, &mv);
        let binomial = &Polynomial::monomial(mu) - &Polynomial::monomial(mv);
        let member = reduce(&binomial, t.groebner_basis(), &GREVLEX).is_zero();
        assert_eq!(member, balanced, "{name}: pair {u:?} vs {v:?}");
    }
}

/// Permuting the lattice generators must reproduce the identical reduced
/// basis.
fn permutation_invariance(name: &str, a: &IntegerMatrix) {
    let gens: Vec<Polynomial> = a
        .kernel_lattice_basis()
        .iter()
        .map(|v| kernel_binomial(v))
        .collect();
    if gens.is_empty() {
        return;
    }
    let n = a.cols();
    let reference = buchberger(&gens, &GREVLEX, n);
    let mut reversed = gens.clone();
    reversed.reverse();
    assert_eq!(
        buchberger(&reversed, &GREVLEX, n),
        reference,
        "{name}: reversed generators"
    );
    let mut rotated = gens.clone();
    rotated.rotate_left(gens.len() / 2);
    assert_eq!(
        buchberger(&rotated, &GREVLEX, n),
        reference,
        "{name}: rotated generators"
    );
}

fn saturation_idempotence(name: &str, a: &IntegerMatrix) {
    let n = a.cols();
    let gens: Vec<Polynomial> = a
        .kernel_lattice_basis()
        .iter()
        .map(|v| kernel_binomial(v))
        .collect();
    let lattice = gkzcheck_core::groebner::Ideal::new(n, gens);
    let all_vars = Monomial::from_exponents(vec![1; n]);
    let once = lattice.saturate(&all_vars);
    let twice = once.saturate(&all_vars);
    assert!(once.equals(&twice), "{name}: saturation not idempotent");
}
