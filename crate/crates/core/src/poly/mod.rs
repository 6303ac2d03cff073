//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are stored sorted descending under a fixed internal order
//! (grevlex), with no duplicate monomials and no stored zeros, so the
//! representation is canonical and arithmetic is a linear merge. Monomial
//! *orders* remain a separate concern: operations that need a leading term
//! take a [`MonomialOrder`] and re-sort lazily (a scan) when it is not the
//! storage order.
//!
//! Variable naming convention, recorded here once and used by every module:
//! in a 2n-variable context, indices 0..n are the x-block and n..2n are the
//! ξ-block; ξ renders as `u` in text form (see [`text`]).

pub mod order;
pub mod text;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;
pub use order::MonomialOrder;

/// Exponent vector of a monomial. The ambient variable count is the vector
/// length and must agree across any interacting values.
///
/// The derived `Ord` is plain entry-wise lexicographic and exists only for
/// set/map keys; mathematical comparisons go through [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn variable(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[Rational]) -> Rational {
        assert_eq!(weights.len(), self.exps.len(), "weight vector length");
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, w)| w * Rational::from_integer(e.into()))
            .sum()
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable counts");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "variable counts");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient `self / other` when divisible.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self
                    .exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable counts");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Re-index variables into a ring with `new_nvars` variables; `map`
    /// sends each old index to its new position.
    pub fn remap(&self, new_nvars: usize, map: impl Fn(usize) -> usize) -> Monomial {
        let mut exps = vec![0; new_nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                let j = map(i);
                assert!(j < new_nvars, "remap target out of range");
                exps[j] += e;
            }
        }
        Monomial { exps }
    }
}

/// Sparse polynomial with exact rational coefficients. Terms are stored
/// sorted descending under the fixed internal order (grevlex) with no
/// zeros, so the representation is canonical, the grevlex leading term is
/// the first entry, and arithmetic is a linear merge. Operations that take
/// a different monomial order re-sort lazily by scanning.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

/// Comparison backing the storage order: descending grevlex.
fn storage_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    MonomialOrder::GrevLex.cmp(b, a)
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::term(Monomial::one(nvars), c)
    }

    pub fn variable(index: usize, nvars: usize) -> Self {
        Polynomial::term(Monomial::variable(index, nvars), Rational::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in internal storage order (descending grevlex).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    /// Union of the supports of all terms.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        let mut seen = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        seen.into_iter()
            .enumerate()
            .filter(|(_, s)| *s)
            .map(|(i, _)| i)
    }

    pub fn add_term(&mut self, m: &Monomial, c: &Rational) {
        assert_eq!(m.nvars(), self.nvars, "variable counts");
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(t, _)| storage_cmp(t, m)) {
            Ok(pos) => {
                self.terms[pos].1 += c;
                if self.terms[pos].1.is_zero() {
                    self.terms.remove(pos);
                }
            }
            Err(pos) => self.terms.insert(pos, (m.clone(), c.clone())),
        }
    }

    /// self + c·g, as a linear sorted merge.
    pub fn add_scaled(&self, g: &Polynomial, c: &Rational) -> Polynomial {
        assert_eq!(self.nvars, g.nvars, "variable counts");
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            match storage_cmp(&self.terms[i].0, &g.terms[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let (m, a) = &g.terms[j];
                    out.push((m.clone(), a * c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let sum = &self.terms[i].1 + &(&g.terms[j].1 * c);
                    if !sum.is_zero() {
                        out.push((self.terms[i].0.clone(), sum));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (m, a) in &g.terms[j..] {
            out.push((m.clone(), a * c));
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    /// Leading term under the given order, or None for the zero polynomial.
    /// The grevlex lead is the first stored term; other orders scan.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        if matches!(order, MonomialOrder::GrevLex) {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading(order).map(|(m, _)| m)
    }

    /// Scalar multiple of the whole polynomial.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiply by a single term `c·m`. Multiplying every exponent vector
    /// by the same monomial preserves the storage order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    /// self -= c · m · g, as one sorted merge. Untouched terms of self are
    /// moved, not cloned, which matters on the division-algorithm hot path.
    pub fn sub_mul_term_assign(&mut self, g: &Polynomial, m: &Monomial, c: &Rational) {
        assert_eq!(self.nvars, g.nvars, "variable counts");
        let neg_c = -c.clone();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let old = std::mem::take(&mut self.terms);
        let mut hi = old.into_iter().peekable();
        let mut gi = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.mul(m), gc * &neg_c))
            .peekable();
        loop {
            let pick = match (hi.peek(), gi.peek()) {
                (Some((hm, _)), Some((gm, _))) => storage_cmp(hm, gm),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => break,
            };
            match pick {
                std::cmp::Ordering::Less => out.push(hi.next().expect("peeked")),
                std::cmp::Ordering::Greater => out.push(gi.next().expect("peeked")),
                std::cmp::Ordering::Equal => {
                    let (hm, hc) = hi.next().expect("peeked");
                    let (_, gc) = gi.next().expect("peeked");
                    let sum = hc + gc;
                    if !sum.is_zero() {
                        out.push((hm, sum));
                    }
                }
            }
        }
        self.terms = out;
    }

    /// Rescales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Sum of the terms maximizing weight·exponent; zero maps to zero.
    pub fn weight_leading_form(&self, weights: &[Rational]) -> Polynomial {
        assert_eq!(weights.len(), self.nvars, "weight vector length");
        let Some(top) = self
            .terms
            .iter()
            .map(|(m, _)| m.weighted_degree(weights))
            .max()
        else {
            return Polynomial::zero(self.nvars);
        };
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(weights) == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact substitution of the assigned variables. The result lives in
    /// the same ambient ring; assigned variables no longer appear in any
    /// support.
    pub fn evaluate_partial(&self, assignment: &BTreeMap<usize, Rational>) -> Polynomial {
        for &i in assignment.keys() {
            assert!(i < self.nvars, "assigned index out of range");
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exponents().to_vec();
            for (&i, v) in assignment {
                for _ in 0..exps[i] {
                    coeff *= v;
                }
                exps[i] = 0;
            }
            out.add_term(&Monomial::from_exponents(exps), &coeff);
        }
        out
    }

    /// Re-index every term into a ring with `new_nvars` variables.
    pub fn remap_vars(&self, new_nvars: usize, map: impl Fn(usize) -> usize + Copy) -> Polynomial {
        Polynomial::from_terms(
            new_nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(new_nvars, map), c.clone())),
        )
    }

    /// Drops the first `front` variables, which must not occur in any term.
    /// Returns None when some term does involve them.
    pub fn strip_front_vars(&self, front: usize) -> Option<Polynomial> {
        if self
            .terms
            .iter()
            .any(|(m, _)| m.support().any(|i| i < front))
        {
            return None;
        }
        Some(self.remap_vars(self.nvars - front, |i| i - front))
    }

    /// Total degree of the polynomial (maximum over terms), or None if zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, &Rational::one())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, &-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable counts");
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            out = out.add_scaled(&rhs.mul_term(m, a), &Rational::one());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Convenience for tests and fixtures: n/d as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
