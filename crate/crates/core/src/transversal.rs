//! Pointwise transversality certificates.
//!
//! At a point (p, q) of k^n × X lying on Var(Lxξ) with every q_i nonzero,
//! the tangent space of Var(Lxξ) is the kernel of the ℓ×2n matrix
//! [L(q) L(p)], and the explicit lift y_i = −p_i η_i / q_i shows that the
//! kernel projects onto the full ξ-factor. Together with k^n × {0} inside
//! the tangent space of k^n × X, the two tangent spaces sum to the ambient
//! 2n-space. A certificate records the n lifts for the standard basis and
//! verifies each kernel membership exactly; a zero q-coordinate is refused
//! as an orbit-boundary point, because the lemma's hypothesis fails there.

use num_traits::Zero;

use crate::cone::Face;
use crate::intlin::{rational_nullspace, IntegerMatrix, RationalVector};
use crate::sampling;
use crate::{Error, Rational};

/// A validated point of Var(Lxξ): an ℓ×m rational matrix together with
/// x-coordinates p and ξ-coordinates q satisfying Σ_j L_kj p_j q_j = 0 for
/// every row k.
#[derive(Debug, Clone)]
pub struct TransversalityInstance {
    l_matrix: Vec<RationalVector>,
    p: RationalVector,
    q: RationalVector,
}

impl TransversalityInstance {
    pub fn new(
        l_matrix: Vec<RationalVector>,
        p: RationalVector,
        q: RationalVector,
    ) -> Result<Self, Error> {
        let m = p.len();
        if q.len() != m {
            return Err(Error::DimensionMismatch {
                context: format!("p has length {m} but q has length {}", q.len()),
            });
        }
        for (k, row) in l_matrix.iter().enumerate() {
            if row.len() != m {
                return Err(Error::DimensionMismatch {
                    context: format!("row {k} of L has length {}, expected {m}", row.len()),
                });
            }
            let value: Rational = row
                .iter()
                .zip(p.iter().zip(&q))
                .map(|(l, (pi, qi))| l * pi * qi)
                .sum();
            if !value.is_zero() {
                return Err(Error::NotOnVariety {
                    row: k + 1,
                    value: crate::poly::text::render_rational(&value),
                });
            }
        }
        Ok(TransversalityInstance { l_matrix, p, q })
    }

    pub fn vars(&self) -> usize {
        self.p.len()
    }

    pub fn l_matrix(&self) -> &[RationalVector] {
        &self.l_matrix
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    fn first_zero_q(&self) -> Option<usize> {
        self.q.iter().position(|qi| qi.is_zero())
    }
}

/// Multiplies column j of L by v_j, exactly.
pub fn scale_columns(
    l_matrix: &[RationalVector],
    v: &[Rational],
) -> Result<Vec<RationalVector>, Error> {
    for (k, row) in l_matrix.iter().enumerate() {
        if row.len() != v.len() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "row {k} of L has length {}, expected {} for column scaling",
                    row.len(),
                    v.len()
                ),
            });
        }
    }
    Ok(l_matrix
        .iter()
        .map(|row| row.iter().zip(v).map(|(l, vi)| l * vi).collect())
        .collect())
}

/// One verified kernel member of [L(q) L(p)].
#[derive(Debug, Clone)]
pub struct LiftWitness {
    pub eta: RationalVector,
    pub y: RationalVector,
}

/// The lift y with y_i = −p_i η_i / q_i, verified exactly to satisfy
/// L(q)·y + L(p)·η = 0 before being returned. A zero q-coordinate is an
/// orbit-boundary point and is refused.
pub fn kernel_lift(
    instance: &TransversalityInstance,
    eta: &[Rational],
) -> Result<RationalVector, Error> {
    if eta.len() != instance.vars() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "η has length {}, expected {}",
                eta.len(),
                instance.vars()
            ),
        });
    }
    if let Some(i) = instance.first_zero_q() {
        return Err(Error::OrbitBoundary { index: i + 1 });
    }
    let y: RationalVector = instance
        .p
        .iter()
        .zip(eta.iter().zip(&instance.q))
        .map(|(pi, (ei, qi))| -(pi * ei) / qi)
        .collect();
    for (k, row) in instance.l_matrix.iter().enumerate() {
        let value: Rational = row
            .iter()
            .zip(y.iter().zip(&instance.q))
            .map(|(l, (yi, qi))| l * qi * yi)
            .sum::<Rational>()
            + row
                .iter()
                .zip(eta.iter().zip(&instance.p))
                .map(|(l, (ei, pi))| l * pi * ei)
                .sum::<Rational>();
        if !value.is_zero() {
            return Err(Error::CertificateCheckFailed {
                detail: format!("kernel lift fails on row {}: {value}", k + 1),
            });
        }
    }
    Ok(y)
}

/// Transversality certificate at one instance: for each standard basis
/// vector η^(i) the lift y^(i) is a verified kernel member, so the kernel
/// of [L(q) L(p)] projects onto all of the ξ-space. Smoothness of the
/// ambient factor at the sampled point is an assumption recorded in the
/// certificate, not re-derived: torus orbits are smooth and q is sampled
/// with support exactly the face.
#[derive(Debug, Clone)]
pub struct TransversalityCertificate {
    pub vars: usize,
    pub lifts: Vec<LiftWitness>,
    /// The η-parts of the lifts are the standard basis, hence span k^m.
    pub eta_parts_span: bool,
    pub smoothness_assumption: &'static str,
    pub pass: bool,
}

pub const SMOOTHNESS_NOTE: &str =
    "ambient smoothness assumed: torus orbits are smooth and q has support exactly the face";

pub fn certify_transversality(
    instance: &TransversalityInstance,
) -> Result<TransversalityCertificate, Error> {
    if let Some(i) = instance.first_zero_q() {
        return Err(Error::OrbitBoundary { index: i + 1 });
    }
    let m = instance.vars();
    let mut lifts = Vec::with_capacity(m);
    for i in 0..m {
        let mut eta = vec![Rational::zero(); m];
        eta[i] = Rational::from_integer(1.into());
        let y = kernel_lift(instance, &eta)?;
        lifts.push(LiftWitness { eta, y });
    }
    Ok(TransversalityCertificate {
        vars: m,
        lifts,
        eta_parts_span: true,
        smoothness_assumption: SMOOTHNESS_NOTE,
        pass: true,
    })
}

/// The orbit point q = t·1^τ of length n: q_i = t^{a_i} for i in the face
/// and 0 otherwise. Negative matrix entries exponentiate by exact division,
/// so every t_k must be nonzero.
pub fn sample_orbit_point(
    a: &IntegerMatrix,
    face: &Face,
    t: &[Rational],
) -> Result<RationalVector, Error> {
    if t.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            context: format!("torus point has length {}, expected {}", t.len(), a.rows()),
        });
    }
    if let Some(k) = t.iter().position(|tk| tk.is_zero()) {
        return Err(Error::ZeroTorusCoordinate { index: k + 1 });
    }
    let n = a.cols();
    let mut q = vec![Rational::zero(); n];
    for &i in &face.columns {
        let mut value = Rational::from_integer(1.into());
        for (k, tk) in t.iter().enumerate() {
            value *= rational_int_pow(tk, a.get(k, i));
        }
        q[i] = value;
    }
    Ok(q)
}

fn rational_int_pow(base: &Rational, exp: &num_bigint::BigInt) -> Rational {
    use num_traits::{One, Signed, ToPrimitive};
    let e = exp
        .abs()
        .to_u32()
        .expect("exponent magnitude exceeds u32; matrix far outside supported scale");
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    if exp.is_negative() {
        Rational::one() / acc
    } else {
        acc
    }
}

/// One face's sampling battery: instances are built in the τ-restricted
/// coordinates (L = A_τ, q the orbit point restricted to τ, p a random
/// rational point of ker L(q)), certified, and counted.
#[derive(Debug, Clone)]
pub struct FaceSampling {
    pub face_columns: Vec<usize>,
    pub requested: usize,
    pub passed: usize,
    pub certificates: Vec<TransversalityCertificate>,
}

pub fn sample_face_certificates(
    a: &IntegerMatrix,
    face: &Face,
    count: usize,
    seed: u64,
) -> Result<FaceSampling, Error> {
    let cols = face.sorted_columns();
    let sub = a.column_submatrix(&cols)?;
    let l_matrix: Vec<RationalVector> = sub.to_rational_rows();
    let mask: u64 = cols.iter().fold(0, |m, &i| m | (1 << (i % 64)));
    let mut rng = sampling::rng_for(seed, mask.wrapping_add(face.columns.len() as u64));

    let mut passed = 0;
    let mut certificates = Vec::with_capacity(count);
    for _ in 0..count {
        let t = sampling::random_nonzero_vector(&mut rng, a.rows());
        let q_full = sample_orbit_point(a, face, &t)?;
        let q: RationalVector = cols.iter().map(|&i| q_full[i].clone()).collect();
        // p ranges over ker(L·diag(q)) so that (p, q) lies on Var(Lxξ).
        let scaled = scale_columns(&l_matrix, &q)?;
        let kernel = rational_nullspace(&scaled, cols.len());
        let mut p = vec![Rational::zero(); cols.len()];
        for basis_vec in &kernel {
            let c = sampling::random_rational(&mut rng);
            for (pi, bi) in p.iter_mut().zip(basis_vec) {
                *pi += &c * bi;
            }
        }
        let instance = TransversalityInstance::new(l_matrix.clone(), p, q)?;
        let cert = certify_transversality(&instance)?;
        if cert.pass {
            passed += 1;
        }
        certificates.push(cert);
    }
    Ok(FaceSampling {
        face_columns: cols,
        requested: count,
        passed,
        certificates,
    })
}
