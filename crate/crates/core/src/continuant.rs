//! Exact continuants and finite continued fractions.
//!
//! The continuant of `(a_1, ..., a_t)` is defined by `⟨∅⟩ = 1`, `⟨a_1⟩ = a_1`
//! and `⟨a_1..a_{j+1}⟩ = a_{j+1}·⟨a_1..a_j⟩ + ⟨a_1..a_{j-1}⟩`. Everything here
//! is exact; nothing goes through floating point.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::ExtRational;
use crate::sequence::Sequence;

/// The last two continuants of the recurrence: `⟨a_1..a_t⟩` and
/// `⟨a_1..a_{t-1}⟩`. For the empty sequence this is `(1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuantPair {
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub full: BigUint,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub truncated: BigUint,
}

impl ContinuantPair {
    fn start() -> Self {
        ContinuantPair { full: BigUint::one(), truncated: BigUint::zero() }
    }

    fn push(&mut self, a: u64) {
        let next = &self.full * a + &self.truncated;
        self.truncated = std::mem::replace(&mut self.full, next);
    }
}

/// Runs the pair recurrence over raw elements; zeros are permitted here
/// so that `[0; ...]` style expressions can reuse it.
fn pair_raw(elems: &[u64]) -> ContinuantPair {
    let mut pair = ContinuantPair::start();
    for &a in elems {
        pair.push(a);
    }
    pair
}

/// `⟨seq⟩` in `t` big-integer multiply-adds.
pub fn continuant(seq: &Sequence) -> BigUint {
    pair_raw(seq).full
}

/// `⟨elems⟩` for a raw slice, validating positivity.
pub fn continuant_of(elems: &[u64]) -> Result<BigUint> {
    Ok(continuant(&Sequence::new(elems.to_vec())?))
}

/// `(⟨seq⟩, ⟨seq minus last⟩)`; `(1, 0)` for the empty sequence.
pub fn continuant_pair(seq: &Sequence) -> ContinuantPair {
    pair_raw(seq)
}

/// Machine-word continuant for hot loops; `None` on overflow.
pub fn continuant_u128(elems: &[u64]) -> Option<u128> {
    let (mut p, mut q) = (1u128, 0u128);
    for &a in elems {
        let next = p.checked_mul(a as u128)?.checked_add(q)?;
        q = p;
        p = next;
    }
    Some(p)
}

/// Right-hand side of the split identity
/// `⟨x, z⟩ = ⟨x⟩⟨z⟩ + ⟨x_1..x_{i-1}⟩⟨z_2..z_j⟩`.
///
/// Always equals `continuant(left ++ right)`; computed independently so the
/// identity can be checked.
pub fn split_identity_check(left: &Sequence, right: &Sequence) -> BigUint {
    let l = continuant_pair(left);
    // ⟨z_2..z_j⟩ is the truncated continuant of the reversed tail.
    let r = continuant_pair(&right.reversed());
    &l.full * &r.full + &l.truncated * &r.truncated
}

/// `[a_0; a_1, ..., a_t] = ⟨a_0, a_1..a_t⟩ / ⟨a_1..a_t⟩`; `[a_0; ∅] = a_0`.
pub fn cf_value(seq: &Sequence, leading: u64) -> ExtRational {
    let den = continuant(seq);
    let mut elems = Vec::with_capacity(seq.len() + 1);
    elems.push(leading);
    elems.extend_from_slice(seq);
    let num = pair_raw(&elems).full;
    ExtRational::ratio(&num, &den)
}

/// `[0; a_1, ..., a_t]` as a finite rational; zero for the empty sequence.
pub(crate) fn cf_tail(elems: &[u64]) -> num_rational::BigRational {
    use num_bigint::BigInt;
    if elems.is_empty() {
        return num_rational::BigRational::zero();
    }
    let den = pair_raw(elems).full;
    let num = pair_raw(&elems[1..]).full;
    num_rational::BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Neighbours of `s` under one trivial move: reversal, or unit extraction
/// (`⟨a+1, ...⟩ = ⟨1, a, ...⟩`) in either direction at the front. End moves
/// are reached through reversal.
fn trivial_moves(s: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(3);
    out.push(s.iter().rev().copied().collect());
    if let Some(&first) = s.first() {
        if first >= 2 {
            let mut v = Vec::with_capacity(s.len() + 1);
            v.push(1);
            v.push(first - 1);
            v.extend_from_slice(&s[1..]);
            out.push(v);
        }
        if first == 1 && s.len() >= 2 {
            let mut v = Vec::with_capacity(s.len() - 1);
            v.push(s[1] + 1);
            v.extend_from_slice(&s[2..]);
            out.push(v);
        }
    }
    out
}

/// The full orbit of `seq` under symmetry and unit extraction at either
/// end. The orbit is finite: every member has the same continuant.
pub fn trivial_orbit(seq: &Sequence) -> Result<Vec<Sequence>> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seq.to_vec());
    queue.push_back(seq.to_vec());
    while let Some(cur) = queue.pop_front() {
        for next in trivial_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut orbit: Vec<Sequence> = seen.into_iter().map(Sequence::from_positive).collect();
    orbit.sort();
    Ok(orbit)
}

/// Canonical representative of the trivial-move class of `seq`: the
/// lexicographically least member of its orbit. Two sequences are
/// trivially equal iff their normal forms coincide.
pub fn unit_extraction_normal_form(seq: &Sequence) -> Result<Sequence> {
    Ok(trivial_orbit(seq)?.swap_remove(0))
}

/// Whether two nonempty sequences are related by symmetry and unit
/// extraction alone.
pub fn trivially_equal(a: &Sequence, b: &Sequence) -> Result<bool> {
    Ok(unit_extraction_normal_form(a)? == unit_extraction_normal_form(b)?)
}

/// Consecutive continuants are coprime; exposed for property tests.
pub fn pair_is_coprime(pair: &ContinuantPair) -> bool {
    pair.full.gcd(&pair.truncated).is_one()
}
