//! Monomial orders.
//!
//! Four families cover everything the engine needs: lex and graded reverse
//! lex as global workhorses, a block order for variable elimination, and a
//! weight order (refined by a global tiebreak) for initial-form ideals.

use std::cmp::Ordering;

use num_traits::Zero;

use super::Monomial;
use crate::{Error, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Lexicographic; earlier variables dominate.
    Lex,
    /// Graded reverse lexicographic: total degree first, ties broken by the
    /// *smallest* exponent on the *last* differing variable winning.
    GrevLex,
    /// Block elimination order: the first `front` variables are compared by
    /// grevlex and dominate; ties fall through to grevlex on the rest. A
    /// basis element free of the front block is therefore smaller than any
    /// element involving it.
    Elimination { front: usize },
    /// Compare weight·exponent first (exact rationals), then the tiebreak.
    /// Global as long as the weights are nonnegative and the tiebreak is
    /// global.
    WeightRefined {
        weights: Vec<Rational>,
        tiebreak: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Weight order with the given weights, tie-broken by grevlex.
    pub fn weight_grevlex(weights: Vec<Rational>) -> MonomialOrder {
        MonomialOrder::WeightRefined {
            weights,
            tiebreak: Box::new(MonomialOrder::GrevLex),
        }
    }

    /// Total-order comparison, checking that the monomials share an ambient
    /// variable count (and that it matches the weight vector, if any).
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering, Error> {
        if u.nvars() != v.nvars() {
            return Err(Error::VariableCountMismatch {
                left: u.nvars(),
                right: v.nvars(),
            });
        }
        if let MonomialOrder::WeightRefined { weights, .. } = self {
            if weights.len() != u.nvars() {
                return Err(Error::VariableCountMismatch {
                    left: weights.len(),
                    right: u.nvars(),
                });
            }
        }
        Ok(self.cmp(u, v))
    }

    /// Comparison for internal use; ambient counts must already agree.
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), v.nvars(), "variable counts");
        match self {
            MonomialOrder::Lex => lex(u.exponents(), v.exponents()),
            MonomialOrder::GrevLex => grevlex(u.exponents(), v.exponents()),
            MonomialOrder::Elimination { front } => {
                let f = *front;
                grevlex(&u.exponents()[..f], &v.exponents()[..f])
                    .then_with(|| grevlex(&u.exponents()[f..], &v.exponents()[f..]))
            }
            MonomialOrder::WeightRefined { weights, tiebreak } => {
                let wu = u.weighted_degree(weights);
                let wv = v.weighted_degree(weights);
                wu.cmp(&wv).then_with(|| tiebreak.cmp(u, v))
            }
        }
    }
}

fn lex(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex(u: &[u32], v: &[u32]) -> Ordering {
    let du: u64 = u.iter().map(|&e| e as u64).sum();
    let dv: u64 = v.iter().map(|&e| e as u64).sum();
    match du.cmp(&dv) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal degree: the last nonzero entry of u − v decides; negative
    // means u is greater.
    for (a, b) in u.iter().zip(v).rev() {
        match a.cmp(b) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// True when the order is global for the given ambient count, i.e. 1 is the
/// unique minimum. Weight orders need nonnegative weights plus a global
/// tiebreak; the other variants are always global.
pub fn is_global(order: &MonomialOrder, nvars: usize) -> bool {
    match order {
        MonomialOrder::Lex | MonomialOrder::GrevLex | MonomialOrder::Elimination { .. } => true,
        MonomialOrder::WeightRefined { weights, tiebreak } => {
            weights.len() == nvars
                && weights.iter().all(|w| w >= &Rational::zero())
                && is_global(tiebreak, nvars)
        }
    }
}
