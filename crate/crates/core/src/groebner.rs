//! Buchberger engine: normal forms, reduced Gröbner bases, elimination,
//! saturation, initial ideals, and dimension counts for quotients.
//!
//! The pair loop uses normal-strategy selection (smallest lcm first) with
//! Buchberger's coprime and chain criteria. That is deliberately the plain,
//! auditable version of the algorithm: every ideal in sight has a handful
//! of variables and generators, and the reduced basis it returns is the
//! canonical one regardless of generator order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::Rational;

/// Krull dimension of a quotient ring; `Empty` marks the unit ideal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KrullDimension {
    Empty,
    Dim(usize),
}

impl KrullDimension {
    pub fn as_dim(&self) -> Option<usize> {
        match self {
            KrullDimension::Empty => None,
            KrullDimension::Dim(d) => Some(*d),
        }
    }
}

impl fmt::Display for KrullDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullDimension::Empty => write!(f, "empty"),
            KrullDimension::Dim(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for KrullDimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            KrullDimension::Empty => s.serialize_str("empty"),
            KrullDimension::Dim(d) => s.serialize_u64(*d as u64),
        }
    }
}

/// Vector-space dimension of a quotient ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientDimension {
    Infinite,
    Finite(usize),
}

impl QuotientDimension {
    pub fn as_finite(&self) -> Option<usize> {
        match self {
            QuotientDimension::Infinite => None,
            QuotientDimension::Finite(d) => Some(*d),
        }
    }
}

impl fmt::Display for QuotientDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDimension::Infinite => write!(f, "infinite"),
            QuotientDimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for QuotientDimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            QuotientDimension::Infinite => s.serialize_str("infinite"),
            QuotientDimension::Finite(d) => s.serialize_u64(*d as u64),
        }
    }
}

/// An ideal of k[vars] presented by generators, with a write-once cache of
/// reduced Gröbner bases per monomial order. Cached bases are canonical, so
/// a racing recomputation can only ever insert an identical value.
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            nvars: self.nvars,
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("nvars", &self.nvars)
            .field("gens", &self.gens)
            .finish()
    }
}

impl Ideal {
    /// Builds an ideal from generators, dropping exact zeros.
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator has wrong variable count");
        }
        Ideal {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn zero(nvars: usize) -> Ideal {
        Ideal::new(nvars, Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Gröbner basis for the order, computed on first use and
    /// cached. The unit ideal yields `[1]`; the zero ideal yields `[]`.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(hit) = self.cache.lock().unwrap().get(order) {
            return Arc::clone(hit);
        }
        let basis = Arc::new(buchberger(&self.gens, order, self.nvars));
        let mut cache = self.cache.lock().unwrap();
        Arc::clone(cache.entry(order.clone()).or_insert(basis))
    }

    /// Ideal membership via normal form against the reduced basis.
    pub fn contains(&self, f: &Polynomial, order: &MonomialOrder) -> bool {
        reduce(f, &self.groebner_basis(order), order).is_zero()
    }

    /// Mutual-containment ideal equality.
    pub fn equals(&self, other: &Ideal) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        let order = MonomialOrder::GrevLex;
        self.gens.iter().all(|g| other.contains(g, &order))
            && other.gens.iter().all(|g| self.contains(g, &order))
    }

    /// Generators of I ∩ k[back variables]: compute a basis under the block
    /// elimination order and keep the elements free of the front block,
    /// re-indexed into the smaller ring.
    pub fn eliminate(&self, front: usize) -> Ideal {
        assert!(front < self.nvars, "front block must leave variables");
        let order = MonomialOrder::Elimination { front };
        let gb = self.groebner_basis(&order);
        let gens = gb
            .iter()
            .filter_map(|g| g.strip_front_vars(front))
            .collect();
        Ideal::new(self.nvars - front, gens)
    }

    /// Saturation I : m^∞ by the single-auxiliary-variable trick: adjoin t,
    /// impose t·m = 1, and eliminate t.
    pub fn saturate(&self, m: &Monomial) -> Ideal {
        assert_eq!(m.nvars(), self.nvars, "monomial has wrong variable count");
        if m.is_one() {
            return self.clone();
        }
        let nv = self.nvars + 1;
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.remap_vars(nv, |i| i + 1))
            .collect();
        let tm = Monomial::variable(0, nv).mul(&m.remap(nv, |i| i + 1));
        gens.push(&Polynomial::monomial(tm) - &Polynomial::one(nv));
        Ideal::new(nv, gens).eliminate(1)
    }

    /// Initial ideal under the weight vector: generated by the weight
    /// leading forms of a Gröbner basis for the weight-refined order.
    pub fn initial_ideal(&self, weights: &[Rational]) -> Ideal {
        assert_eq!(weights.len(), self.nvars, "weight vector length");
        let order = MonomialOrder::weight_grevlex(weights.to_vec());
        let gb = self.groebner_basis(&order);
        Ideal::new(
            self.nvars,
            gb.iter().map(|g| g.weight_leading_form(weights)).collect(),
        )
    }

    /// Krull dimension of k[vars]/I by the independent-set method on the
    /// initial monomial ideal: the dimension is the largest number of
    /// variables supporting no leading monomial, equivalently nvars minus a
    /// minimum hitting set of the leading supports.
    pub fn krull_dimension(&self, order: &MonomialOrder) -> KrullDimension {
        let gb = self.groebner_basis(order);
        if gb.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return KrullDimension::Empty;
        }
        let supports = leading_supports(&gb, order);
        assert!(
            self.nvars <= 64,
            "independent-set search is limited to 64 variables"
        );
        KrullDimension::Dim(self.nvars - min_hitting_set(&supports))
    }

    /// Number of standard monomials (monomials outside the initial ideal),
    /// or `Infinite` when some variable has no pure power among the leading
    /// monomials.
    pub fn quotient_vector_space_dimension(&self, order: &MonomialOrder) -> QuotientDimension {
        let gb = self.groebner_basis(order);
        if gb.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return QuotientDimension::Finite(0);
        }
        let lms: Vec<Monomial> = gb
            .iter()
            .filter_map(|g| g.leading_monomial(order).cloned())
            .collect();
        for v in 0..self.nvars {
            let has_pure_power = lms.iter().any(|m| m.support().eq(std::iter::once(v)));
            if !has_pure_power {
                return QuotientDimension::Infinite;
            }
        }
        // Finite: walk the standard monomials from 1 upward.
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut stack = vec![Monomial::one(self.nvars)];
        while let Some(m) = stack.pop() {
            if lms.iter().any(|lm| lm.divides(&m)) || !seen.insert(m.clone()) {
                continue;
            }
            for v in 0..self.nvars {
                stack.push(m.mul(&Monomial::variable(v, self.nvars)));
            }
        }
        QuotientDimension::Finite(seen.len())
    }
}

/// Supports of the leading monomials as bitmasks, without duplicates or
/// supersets (any hitting set for a subset also hits its supersets).
fn leading_supports(gb: &[Polynomial], order: &MonomialOrder) -> Vec<u64> {
    let mut masks: BTreeSet<u64> = BTreeSet::new();
    for g in gb {
        if let Some(lm) = g.leading_monomial(order) {
            let mut mask = 0u64;
            for i in lm.support() {
                mask |= 1 << i;
            }
            masks.insert(mask);
        }
    }
    let all: Vec<u64> = masks.into_iter().collect();
    all.iter()
        .copied()
        .filter(|&m| !all.iter().any(|&s| s != m && (s & m) == s))
        .collect()
}

fn min_hitting_set(supports: &[u64]) -> usize {
    fn rec(supports: &[u64], chosen: u64, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        match supports.iter().find(|&&s| s & chosen == 0) {
            None => *best = size,
            Some(&s) => {
                let mut bits = s;
                while bits != 0 {
                    let v = bits.trailing_zeros() as u64;
                    rec(supports, chosen | (1 << v), size + 1, best);
                    bits &= bits - 1;
                }
            }
        }
    }
    let mut best = supports.len();
    rec(supports, 0, 0, &mut best);
    best
}

/// Precomputed leading data for a reducer list: monomial, coefficient,
/// total degree, and a divisibility mask for fast prefiltering. The list
/// is kept sorted by degree so a scan can stop at the first reducer too
/// big to divide the current term.
struct Reducer {
    index: usize,
    monomial: Monomial,
    coefficient: Rational,
    degree: u64,
    mask: u64,
}

/// Divisibility mask: each variable gets a block of bits recording which
/// power-of-two exponent thresholds its exponent reaches. If a divides b
/// then mask(a) & !mask(b) == 0; collisions from wrapping only make the
/// filter more permissive, never wrong.
fn divmask(m: &Monomial) -> u64 {
    let nvars = m.nvars().max(1);
    let bits_per_var = (64 / nvars).clamp(1, 8);
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        let base = (i * bits_per_var) % 64;
        for k in 0..bits_per_var {
            if u64::from(e) >= (1 << k) {
                mask |= 1 << ((base + k) % 64);
            }
        }
    }
    mask
}

fn insert_reducer(reducers: &mut Vec<Reducer>, r: Reducer) {
    let pos = reducers.partition_point(|x| x.degree <= r.degree);
    reducers.insert(pos, r);
}

fn reducers_of(basis: &[Polynomial], order: &MonomialOrder, skip: Option<usize>) -> Vec<Reducer> {
    let mut out = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        if let Some((m, c)) = g.leading(order) {
            insert_reducer(
                &mut out,
                Reducer {
                    index: i,
                    monomial: m.clone(),
                    coefficient: c.clone(),
                    degree: m.degree(),
                    mask: divmask(m),
                },
            );
        }
    }
    out
}

fn reduce_against(
    f: &Polynomial,
    basis: &[Polynomial],
    reducers: &[Reducer],
    order: &MonomialOrder,
) -> Polynomial {
    let mut rem = Polynomial::zero(f.nvars());
    let mut h = f.clone();
    'outer: while !h.is_zero() {
        let (lm, lc) = {
            let (m, c) = h.leading(order).expect("nonzero polynomial has a lead");
            (m.clone(), c.clone())
        };
        let deg = lm.degree();
        let mask = divmask(&lm);
        for r in reducers {
            if r.degree > deg {
                break; // sorted by degree; nothing further divides
            }
            if (r.mask & !mask) != 0 {
                continue;
            }
            if let Some(q) = lm.checked_div(&r.monomial) {
                let factor = &lc / &r.coefficient;
                h.sub_mul_term_assign(&basis[r.index], &q, &factor);
                continue 'outer;
            }
        }
        rem.add_term(&lm, &lc);
        h.add_term(&lm, &-lc);
    }
    rem
}

/// Normal form of f against the basis: repeatedly rewrites any term
/// divisible by a basis leading term. The result has no such term, and
/// f − result lies in the ideal generated by the basis.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let reducers = reducers_of(basis, order, None);
    reduce_against(f, basis, &reducers, order)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading(order).expect("nonzero");
    let (gm, gc) = g.leading(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = l.checked_div(fm).expect("lcm divisible by lead");
    let b = l.checked_div(gm).expect("lcm divisible by lead");
    let inv_f = Rational::one() / fc.clone();
    let inv_g = Rational::one() / gc.clone();
    &f.mul_term(&a, &inv_f) - &g.mul_term(&b, &inv_g)
}

#[derive(Clone)]
struct Pair {
    left: usize,
    right: usize,
    lcm: Monomial,
}

/// Gebauer–Möller pair update: prunes the new pairs (the fresh element
/// against everything) by the lcm-divisibility and coprime criteria, and
/// drops old pairs whose lcm factors through the new leading monomial.
fn update_pairs(pairs: &mut Vec<Pair>, lms: &[Monomial], t: usize) {
    let lt = &lms[t];
    let mut fresh: Vec<Pair> = (0..t)
        .map(|i| Pair {
            left: i,
            right: t,
            lcm: lms[i].lcm(lt),
        })
        .collect();
    // Coprime pairs survive this pass so their lcms can prune others; they
    // are dropped at the end.
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(cand) = fresh.pop() {
        let coprime = cand.lcm == lms[cand.left].mul(lt);
        let dominated = fresh
            .iter()
            .chain(kept.iter())
            .any(|p| p.lcm.divides(&cand.lcm));
        if coprime || !dominated {
            kept.push(cand);
        }
    }
    // Old pairs whose lcm is a multiple of the new leading monomial are
    // redundant unless one of their own lcms coincides with it.
    pairs.retain(|p| {
        !(lt.divides(&p.lcm)
            && lms[p.left].lcm(lt) != p.lcm
            && lms[p.right].lcm(lt) != p.lcm)
    });
    pairs.extend(
        kept.into_iter()
            .filter(|p| p.lcm != lms[p.left].mul(lt)),
    );
}

/// The reduced Gröbner basis of the ideal generated by `gens`: S-pairs all
/// reduce to zero, leading coefficients are 1, no term of any element is
/// divisible by another element's leading term, and the result is sorted
/// ascending by leading monomial. It depends only on the ideal and order.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, nvars: usize) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut reducers: Vec<Reducer> = Vec::new();

    let push = |basis: &mut Vec<Polynomial>,
                    lms: &mut Vec<Monomial>,
                    reducers: &mut Vec<Reducer>,
                    pairs: &mut Vec<Pair>,
                    g: Polynomial| {
        let lm = g.leading_monomial(order).expect("nonzero").clone();
        insert_reducer(
            reducers,
            Reducer {
                index: basis.len(),
                monomial: lm.clone(),
                coefficient: Rational::one(),
                degree: lm.degree(),
                mask: divmask(&lm),
            },
        );
        lms.push(lm);
        basis.push(g);
        update_pairs(pairs, lms, basis.len() - 1);
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return vec![Polynomial::one(nvars)];
        }
        push(&mut basis, &mut lms, &mut reducers, &mut pairs, g.monic(order));
    }

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first, index pair as tiebreak.
        let mut pick = 0;
        for k in 1..pairs.len() {
            match order.cmp(&pairs[k].lcm, &pairs[pick].lcm) {
                Ordering::Less => pick = k,
                Ordering::Equal
                    if (pairs[k].left, pairs[k].right)
                        < (pairs[pick].left, pairs[pick].right) =>
                {
                    pick = k
                }
                _ => {}
            }
        }
        let pair = pairs.swap_remove(pick);
        let s = s_polynomial(&basis[pair.left], &basis[pair.right], order);
        let r = reduce_against(&s, &basis, &reducers, order);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::one(nvars)];
        }
        push(&mut basis, &mut lms, &mut reducers, &mut pairs, r.monic(order));
    }

    reduce_basis(basis, order)
}

/// Minimizes and inter-reduces a Gröbner basis into the reduced basis.
fn reduce_basis(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        let am = a.leading_monomial(order).expect("nonzero");
        let bm = b.leading_monomial(order).expect("nonzero");
        order.cmp(am, bm)
    });
    // Minimal set: in ascending order any divisor precedes its multiples.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let gm = g.leading_monomial(order).expect("nonzero").clone();
        let redundant = minimal
            .iter()
            .any(|h| h.leading_monomial(order).expect("nonzero").divides(&gm));
        if !redundant {
            minimal.push(g);
        }
    }
    // Tail-reduce each element. Leading terms are pairwise non-divisible
    // (and a lead never divides a strictly smaller term of its own tail),
    // so one pass against the full reducer list suffices.
    let snapshot = minimal.clone();
    let reducers = reducers_of(&snapshot, order, None);
    for g in minimal.iter_mut() {
        let monic = g.monic(order);
        let (lm, lc) = monic.leading(order).expect("nonzero");
        let lead = Polynomial::term(lm.clone(), lc.clone());
        let tail = &monic - &lead;
        let reduced_tail = reduce_against(&tail, &snapshot, &reducers, order);
        *g = &lead + &reduced_tail;
    }
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::{parse_polynomial, xi_names};
    use crate::poly::int;
    use rand::{Rng, SeedableRng};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, &xi_names(n)).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        Ideal::new(n, gens.iter().map(|s| p(s, n)).collect())
    }

    const GREVLEX: MonomialOrder = MonomialOrder::GrevLex;

    #[test]
    fn reduce_examples() {
        // ξ2² rewrites to ξ1ξ3 against the conic binomial.
        let g = p("u2^2 - u1*u3", 3);
        let f = p("u2^2", 3);
        assert_eq!(reduce(&f, &[g.clone()], &GREVLEX), p("u1*u3", 3));
        // Empty basis: identity.
        assert_eq!(reduce(&f, &[], &GREVLEX), f);
        // Multiples of a basis element vanish.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let exps: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
            let m = Polynomial::monomial(Monomial::from_exponents(exps));
            assert!(reduce(&(&m * &g), &[g.clone()], &GREVLEX).is_zero());
        }
    }

    #[test]
    fn buchberger_single_binomial_is_already_reduced() {
        let gb = buchberger(&[p("u1*u3 - u2^2", 3)], &GREVLEX, 3);
        assert_eq!(gb, vec![p("u2^2 - u1*u3", 3)]);
    }

    #[test]
    fn buchberger_unit_ideal() {
        let gb = buchberger(&[p("u1 - 1", 1), p("u1", 1)], &GREVLEX, 1);
        assert_eq!(gb, vec![Polynomial::one(1)]);
    }

    #[test]
    fn twisted_cubic_relations_close_up() {
        // Saturated kernel binomials of [[1,1,1,1],[0,1,2,3]].
        let gens = [p("u1*u3 - u2^2", 4), p("u2*u4 - u3^2", 4), p("u1*u4 - u2*u3", 4)];
        let gb = buchberger(&gens, &GREVLEX, 4);
        assert_eq!(gb.len(), 3);
        // Brute-force oracle: every binomial ξ^u − ξ^v with Au = Av and
        // degree ≤ 4 reduces to zero.
        let a_rows: [[i64; 4]; 2] = [[1, 1, 1, 1], [0, 1, 2, 3]];
        let mut checked = 0;
        for (u, v) in small_exponent_pairs(4, 4) {
            let balanced = (0..2).all(|r| {
                let lhs: i64 = (0..4).map(|c| a_rows[r][c] * u[c] as i64).sum();
                let rhs: i64 = (0..4).map(|c| a_rows[r][c] * v[c] as i64).sum();
                lhs == rhs
            });
            if !balanced {
                continue;
            }
            let b = &Polynomial::monomial(Monomial::from_exponents(u.clone()))
                - &Polynomial::monomial(Monomial::from_exponents(v.clone()));
            assert!(
                reduce(&b, &gb, &GREVLEX).is_zero(),
                "balanced binomial {u:?} - {v:?} did not reduce"
            );
            checked += 1;
        }
        assert!(checked > 20, "oracle must exercise many pairs");
    }

    fn small_exponent_pairs(nvars: usize, max_deg: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
        fn vectors(nvars: usize, max_deg: u32) -> Vec<Vec<u32>> {
            let mut out = vec![vec![]];
            for _ in 0..nvars {
                out = out
                    .into_iter()
                    .flat_map(|v| {
                        (0..=max_deg).filter_map(move |e| {
                            let mut w = v.clone();
                            let deg: u32 = w.iter().sum::<u32>() + e;
                            if deg <= max_deg {
                                w.push(e);
                                Some(w)
                            } else {
                                None
                            }
                        })
                    })
                    .collect();
            }
            out
        }
        let vs = vectors(nvars, max_deg);
        let mut pairs = Vec::new();
        for u in &vs {
            for v in &vs {
                if u != v {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
        pairs
    }

    #[test]
    fn eliminate_examples() {
        // Adjoint variable: names t, u1, u2.
        let names: Vec<String> = ["t", "u1", "u2"].into_iter().map(String::from).collect();
        let gens = vec![
            parse_polynomial("t*u1*u2 - 1", &names).unwrap(),
            parse_polynomial("u1 - u2", &names).unwrap(),
        ];
        let eliminated = Ideal::new(3, gens).eliminate(1);
        assert!(eliminated.equals(&ideal(&["u1 - u2"], 2)));

        let t_in_two = Ideal::new(2, vec![Polynomial::variable(0, 2)]);
        assert!(t_in_two.eliminate(1).generators().is_empty());

        let unit = Ideal::new(2, vec![Polynomial::one(2)]);
        assert!(unit.eliminate(1).equals(&Ideal::new(1, vec![Polynomial::one(1)])));
    }

    #[test]
    fn saturate_examples() {
        let i = ideal(&["u1*u2"], 2);
        let by_xi1 = i.saturate(&Monomial::variable(0, 2));
        assert!(by_xi1.equals(&ideal(&["u2"], 2)));

        let unchanged = i.saturate(&Monomial::one(2));
        assert!(unchanged.equals(&i));

        let j = ideal(&["u1^2 - u1*u2"], 2);
        let sat = j.saturate(&Monomial::from_exponents(vec![1, 1]));
        let expected = ideal(&["u1 - u2"], 2);
        assert!(sat.equals(&expected));
        // Membership oracle both ways.
        assert!(sat.contains(&p("u1 - u2", 2), &GREVLEX));
        assert!(expected.contains(&p("u1^2 - u1*u2", 2), &GREVLEX));
    }

    #[test]
    fn saturation_is_idempotent() {
        let m = Monomial::from_exponents(vec![1, 1]);
        for gens in [vec!["u1^2 - u1*u2"], vec!["u1*u2"], vec!["u1^3 - u2^2"]] {
            let i = ideal(&gens, 2);
            let once = i.saturate(&m);
            let twice = once.saturate(&m);
            assert!(once.equals(&twice));
        }
    }

    #[test]
    fn krull_dimension_examples() {
        assert_eq!(
            ideal(&["u1*u3 - u2^2"], 3).krull_dimension(&GREVLEX),
            KrullDimension::Dim(2)
        );
        assert_eq!(Ideal::zero(4).krull_dimension(&GREVLEX), KrullDimension::Dim(4));
        assert_eq!(
            ideal(&["u1", "u2", "u3"], 3).krull_dimension(&GREVLEX),
            KrullDimension::Dim(0)
        );
        assert_eq!(
            ideal(&["u1 - 1", "u1"], 1).krull_dimension(&GREVLEX),
            KrullDimension::Empty
        );
    }

    /// Brute-force oracle: the dimension is the largest coordinate subspace
    /// contained in the variety of the initial ideal. A subspace spanned by
    /// the variables in S lies in Var(in I) exactly when no leading
    /// monomial is supported inside S.
    fn krull_oracle(i: &Ideal, order: &MonomialOrder) -> KrullDimension {
        let gb = i.groebner_basis(order);
        if gb.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return KrullDimension::Empty;
        }
        let lms: Vec<Monomial> = gb
            .iter()
            .filter_map(|g| g.leading_monomial(order).cloned())
            .collect();
        let n = i.nvars();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let contained = lms.iter().all(|m| {
                // Some variable of the monomial lies outside S, so the
                // monomial vanishes on the subspace.
                m.support().any(|v| mask & (1 << v) == 0)
            });
            if contained {
                best = best.max(mask.count_ones() as usize);
            }
        }
        KrullDimension::Dim(best)
    }

    #[test]
    fn krull_dimension_matches_oracle_and_is_order_free() {
        let samples = vec![
            ideal(&["u1*u3 - u2^2"], 3),
            ideal(&["u1*u2", "u2*u3"], 3),
            ideal(&["u1^2", "u2"], 3),
            Ideal::zero(3),
            ideal(&["u1^2 - u2"], 2),
            ideal(&["u1*u2 - 1"], 2),
        ];
        for i in samples {
            let grev = i.krull_dimension(&GREVLEX);
            assert_eq!(grev, krull_oracle(&i, &GREVLEX));
            assert_eq!(grev, i.krull_dimension(&MonomialOrder::Lex));
        }
    }

    #[test]
    fn quotient_dimension_examples() {
        assert_eq!(
            ideal(&["u1^2", "u2"], 2).quotient_vector_space_dimension(&GREVLEX),
            QuotientDimension::Finite(2)
        );
        assert_eq!(
            ideal(&["u1*u2"], 2).quotient_vector_space_dimension(&GREVLEX),
            QuotientDimension::Infinite
        );
        assert_eq!(
            ideal(&["u1 - 1", "u1"], 1).quotient_vector_space_dimension(&GREVLEX),
            QuotientDimension::Finite(0)
        );
    }

    #[test]
    fn basis_is_reduced_and_generator_order_free() {
        let gens = vec![
            p("u1*u3 - u2^2", 4),
            p("u2*u4 - u3^2", 4),
            p("u1*u4 - u2*u3", 4),
            p("u1^2*u4 - u1*u2*u3", 4),
        ];
        let gb = buchberger(&gens, &GREVLEX, 4);
        // Reducedness: no term of any element divisible by another lead.
        for (i, g) in gb.iter().enumerate() {
            assert!(g.leading(&GREVLEX).unwrap().1.is_one());
            for (j, h) in gb.iter().enumerate() {
                if i == j {
                    continue;
                }
                let hlm = h.leading_monomial(&GREVLEX).unwrap();
                for (m, _) in g.terms() {
                    assert!(!hlm.divides(m), "basis not reduced");
                }
            }
        }
        // Permutations of the generators give the identical basis.
        let mut permuted = gens.clone();
        permuted.reverse();
        assert_eq!(buchberger(&permuted, &GREVLEX, 4), gb);
        let mut rotated = gens.clone();
        rotated.rotate_left(2);
        assert_eq!(buchberger(&rotated, &GREVLEX, 4), gb);
    }

    /// Criteria-free Buchberger: every pair, no pruning. Slow but plainly
    /// correct, so it serves as an oracle for the pair-update logic.
    fn naive_buchberger(gens: &[Polynomial], order: &MonomialOrder, nvars: usize) -> Vec<Polynomial> {
        let mut basis: Vec<Polynomial> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.monic(order))
            .collect();
        if basis.iter().any(|g| g.is_constant()) {
            return vec![Polynomial::one(nvars)];
        }
        let mut pending: Vec<(usize, usize)> = (0..basis.len())
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        while let Some((i, j)) = pending.pop() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            let r = reduce(&s, &basis, order);
            if r.is_zero() {
                continue;
            }
            if r.is_constant() {
                return vec![Polynomial::one(nvars)];
            }
            let t = basis.len();
            basis.push(r.monic(order));
            pending.extend((0..t).map(|k| (k, t)));
        }
        reduce_basis(basis, order)
    }

    #[test]
    fn pair_pruning_matches_naive_buchberger() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for case in 0..40 {
            let nvars = 3;
            let ngens = rng.gen_range(1..=3usize);
            let gens: Vec<Polynomial> = (0..ngens)
                .map(|_| {
                    let nterms = rng.gen_range(1..=3usize);
                    Polynomial::from_terms(
                        nvars,
                        (0..nterms).map(|_| {
                            let exps: Vec<u32> =
                                (0..nvars).map(|_| rng.gen_range(0..3)).collect();
                            (Monomial::from_exponents(exps), int(rng.gen_range(-3..=3)))
                        }),
                    )
                })
                .collect();
            for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
                assert_eq!(
                    buchberger(&gens, &order, nvars),
                    naive_buchberger(&gens, &order, nvars),
                    "case {case} under {order:?} with gens {gens:?}"
                );
            }
        }
    }

    #[test]
    fn random_combinations_reduce_to_zero() {
        let gens = vec![p("u1*u3 - u2^2", 3), p("u1^2 - u2", 3)];
        let gb = buchberger(&gens, &GREVLEX, 3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let mut f = Polynomial::zero(3);
            for g in &gens {
                let exps: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                let c = int(rng.gen_range(-3..=3));
                f = &f + &g.mul_term(&Monomial::from_exponents(exps), &c);
            }
            assert!(reduce(&f, &gb, &GREVLEX).is_zero());
        }
    }
}
