//! Reflections (reversal of a contiguous middle segment) and their effect on
//! the continuant.
//!
//! For a host sequence split as `(U, V, W)` with `V` nonempty and at least
//! one of `U`, `W` nonempty, reflecting `V` does not decrease the continuant
//! iff
//!
//! ```text
//! a(U, V, W) = ([0; u_α..u_1] − [0; w_1..w_γ]) · ([0; v_β..v_1] − [0; v_1..v_β]) ≥ 0
//! ```
//!
//! with `[0; ∅] = 0` for an empty side. The transitive algorithms chain such
//! reflections into monotone paths toward the extremal arrangements.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::continuant::{cf_tail, cf_value, continuant, continuant_pair, trivially_equal};
use crate::error::{Error, Result};
use crate::rational::{sign_of, ExtRational};
use crate::sequence::Sequence;

/// Reflection of positions `lo..=hi` (1-based) inside a host sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ReflectionSpec {
    pub lo: usize,
    pub hi: usize,
}

impl ReflectionSpec {
    pub fn new(lo: usize, hi: usize) -> Self {
        ReflectionSpec { lo, hi }
    }

    /// `1 ≤ lo ≤ hi ≤ len`, and the prefix or the suffix is nonempty.
    pub fn validate(&self, len: usize) -> Result<()> {
        let ok = self.lo >= 1 && self.lo <= self.hi && self.hi <= len && (self.lo > 1 || self.hi < len);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidReflection { lo: self.lo, hi: self.hi, len })
        }
    }

    /// Every valid spec for a host of length `len`.
    pub fn all_for(len: usize) -> impl Iterator<Item = ReflectionSpec> {
        (1..=len).flat_map(move |lo| {
            (lo..=len)
                .map(move |hi| ReflectionSpec { lo, hi })
                .filter(move |s| s.validate(len).is_ok())
        })
    }

    fn parts<'a>(&self, seq: &'a [u64]) -> (&'a [u64], &'a [u64], &'a [u64]) {
        let (u, rest) = seq.split_at(self.lo - 1);
        let (v, w) = rest.split_at(self.hi - self.lo + 1);
        (u, v, w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReflectionKind {
    Increasing,
    Decreasing,
    /// Equal continuants, explained by symmetry and unit extraction.
    Trivial,
    /// Equal continuants that are not trivially related. Never observed;
    /// kept so that the classifier can report it rather than hide it.
    Neutral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: ReflectionKind,
    /// Sign of `a(U, V, W)`.
    pub sign: Ordering,
}

/// Outcome of comparing two heads that share a tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MajorizationVerdict {
    Majorized,
    StrictlyMajorized,
    NotMajorized,
}

pub fn apply_reflection(seq: &Sequence, spec: ReflectionSpec) -> Result<Sequence> {
    spec.validate(seq.len())?;
    let mut v = seq.to_vec();
    v[spec.lo - 1..spec.hi].reverse();
    Ok(Sequence::from_positive(v))
}

fn reversed(s: &[u64]) -> Vec<u64> {
    s.iter().rev().copied().collect()
}

/// Exact `a(U, V, W)` for the split described by `spec`.
pub fn a_value(seq: &Sequence, spec: ReflectionSpec) -> Result<BigRational> {
    spec.validate(seq.len())?;
    let (u, v, w) = spec.parts(seq);
    let outer = cf_tail(&reversed(u)) - cf_tail(w);
    let inner = cf_tail(&reversed(v)) - cf_tail(v);
    Ok(outer * inner)
}

/// `a'(U, V, W) = ([0; u_α..u_1] − [0; w_1..w_γ]) · (v_1 − v_β)`. Has the same
/// sign as [`a_value`] whenever `v_1 ≠ v_β`.
pub fn a_prime_value(seq: &Sequence, spec: ReflectionSpec) -> Result<BigRational> {
    spec.validate(seq.len())?;
    let (u, v, w) = spec.parts(seq);
    let outer = cf_tail(&reversed(u)) - cf_tail(w);
    let diff = BigInt::from(v[0]) - BigInt::from(v[v.len() - 1]);
    Ok(outer * BigRational::from_integer(diff))
}

pub fn classify(seq: &Sequence, spec: ReflectionSpec) -> Result<Classification> {
    let a = a_value(seq, spec)?;
    let sign = sign_of(&a);
    let kind = match sign {
        Ordering::Greater => ReflectionKind::Increasing,
        Ordering::Less => ReflectionKind::Decreasing,
        Ordering::Equal => {
            let reflected = apply_reflection(seq, spec)?;
            if trivially_equal(seq, &reflected)? {
                ReflectionKind::Trivial
            } else {
                ReflectionKind::Neutral
            }
        }
    };
    Ok(Classification { kind, sign })
}

/// The correct pair `(i, j)`, `i < j`, `a_i > a_j`, with the largest `j − i`
/// (1-based); ties go to the smallest `i`. `None` when `seq` is
/// nondecreasing.
pub fn most_remote_pair(seq: &Sequence) -> Option<(usize, usize)> {
    let t = seq.len();
    for d in (1..t).rev() {
        for i in 0..t - d {
            if seq[i] > seq[i + d] {
                return Some((i + 1, i + d + 1));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub lo: usize,
    pub hi: usize,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub before: BigUint,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub after: BigUint,
}

/// A monotone path of reflections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub initial: Sequence,
    /// The input was read back to front before the first reflection.
    /// Reversal leaves the continuant unchanged.
    pub reversed: bool,
    pub steps: Vec<TraceStep>,
    #[serde(rename = "final")]
    pub result: Sequence,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub value: BigUint,
}

impl Trace {
    pub fn specs(&self) -> Vec<ReflectionSpec> {
        self.steps.iter().map(|s| ReflectionSpec::new(s.lo, s.hi)).collect()
    }
}

struct Walker {
    cur: Vec<u64>,
    value: BigUint,
    steps: Vec<TraceStep>,
}

impl Walker {
    fn new(cur: Vec<u64>) -> Self {
        let value = continuant(&Sequence::from_positive(cur.clone()));
        Walker { cur, value, steps: Vec::new() }
    }

    /// Reflects `lo..=hi`; `want` is the direction the step must not violate.
    fn reflect(&mut self, lo: usize, hi: usize, want: Ordering) {
        if lo >= hi {
            return;
        }
        self.cur[lo - 1..hi].reverse();
        let after = continuant(&Sequence::from_positive(self.cur.clone()));
        let ord = after.cmp(&self.value);
        assert!(
            ord == want || ord == Ordering::Equal,
            "non-monotone reflection {lo}..{hi}: {} -> {after}",
            self.value
        );
        let before = std::mem::replace(&mut self.value, after.clone());
        self.steps.push(TraceStep { lo, hi, before, after });
    }

    fn finish(self, initial: &Sequence, reversed: bool) -> Trace {
        Trace {
            initial: initial.clone(),
            reversed,
            steps: self.steps,
            result: Sequence::from_positive(self.cur),
            value: self.value,
        }
    }
}

/// Step-up algorithm: reflect the most remote correct pair until the
/// sequence is sorted. Every step is non-decreasing, and the end point is
/// the maximum over all arrangements that keep the minimum in front.
///
/// The minimum must sit at one end of the input; a trailing minimum is
/// handled by reading the sequence backwards.
pub fn transitive_maximize(seq: &Sequence) -> Result<Trace> {
    let min = *seq.iter().min().ok_or(Error::EmptySequence)?;
    let (start, reversed) = if seq[0] == min {
        (seq.to_vec(), false)
    } else if seq[seq.len() - 1] == min {
        (seq.reversed().into_vec(), true)
    } else {
        return Err(Error::domain(
            "step-up reflection needs the minimum element at an end of the sequence",
        ));
    };
    let mut walk = Walker::new(start);
    while let Some((i, j)) = most_remote_pair(&Sequence::from_positive(walk.cur.clone())) {
        debug_assert!(i > 1);
        walk.reflect(i, j, Ordering::Greater);
    }
    Ok(walk.finish(seq, reversed))
}

/// Step-down algorithm toward the zigzag arrangement. The sequence is
/// oriented so that `a_1 ≤ a_t`; then, window by window and alternating
/// ends, the window minimum is reflected into the outer slot and the
/// window maximum next to it. Every step is non-increasing.
pub fn transitive_minimize(seq: &Sequence) -> Result<Trace> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let t = seq.len();
    let reversed = seq[0] > seq[t - 1];
    let start = if reversed { seq.reversed().into_vec() } else { seq.to_vec() };
    let mut walk = Walker::new(start);
    let (mut lo, mut hi) = (1usize, t);
    let mut forward = true;
    while hi > lo {
        let window = &walk.cur[lo - 1..hi];
        if forward {
            let min = *window.iter().min().expect("nonempty window");
            let p = lo + window.iter().position(|&a| a == min).unwrap();
            walk.reflect(lo, p, Ordering::Less);
            let rest = &walk.cur[lo..hi];
            let max = *rest.iter().max().expect("window of length ≥ 2");
            let q = lo + 1 + rest.iter().position(|&a| a == max).unwrap();
            walk.reflect(lo + 1, q, Ordering::Less);
            lo += 2;
        } else {
            let min = *window.iter().min().expect("nonempty window");
            let p = lo + window.iter().rposition(|&a| a == min).unwrap();
            walk.reflect(p, hi, Ordering::Less);
            let rest = &walk.cur[lo - 1..hi - 1];
            let max = *rest.iter().max().expect("window of length ≥ 2");
            let q = lo + rest.iter().rposition(|&a| a == max).unwrap();
            walk.reflect(q, hi - 1, Ordering::Less);
            hi -= 2;
        }
        forward = !forward;
    }
    Ok(walk.finish(seq, reversed))
}

/// Head-wise domination of `⟨y, z⟩` by `⟨x, z⟩` for a tail of length
/// `tail_len`: `⟨y⟩ ≤ ⟨x⟩` and `⟨y minus last⟩ ≤ ⟨x minus last⟩`.
/// Strict when both hold strictly, or when the first is strict and the tail
/// is nonempty.
pub fn majorizes(x_head: &Sequence, y_head: &Sequence, tail_len: usize) -> MajorizationVerdict {
    let x = continuant_pair(x_head);
    let y = continuant_pair(y_head);
    let full = y.full.cmp(&x.full);
    let trunc = y.truncated.cmp(&x.truncated);
    if full == Ordering::Greater || trunc == Ordering::Greater {
        return MajorizationVerdict::NotMajorized;
    }
    let both_strict = full == Ordering::Less && trunc == Ordering::Less;
    if both_strict || (full == Ordering::Less && tail_len >= 1) {
        MajorizationVerdict::StrictlyMajorized
    } else {
        MajorizationVerdict::Majorized
    }
}

/// Sufficient tail condition for `⟨z, x⟩ > ⟨z, y⟩` given `⟨x⟩ > ⟨y⟩`:
///
/// ```text
/// [z_j; z_{j-1}, ..., z_1] > (⟨y_2..y_k⟩ − ⟨x_2..x_i⟩) / (⟨x⟩ − ⟨y⟩)
/// ```
pub fn lemma13_tail_condition(x: &Sequence, y: &Sequence, z: &Sequence) -> Result<bool> {
    let cx = continuant(x);
    let cy = continuant(y);
    if cx <= cy {
        return Err(Error::domain(format!("need ⟨x⟩ > ⟨y⟩, got {cx} ≤ {cy}")));
    }
    if z.is_empty() {
        return Err(Error::domain("tail condition is undefined for an empty tail"));
    }
    let drop_first = |s: &Sequence| -> BigInt {
        if s.is_empty() {
            BigInt::from(0)
        } else {
            BigInt::from(continuant(&Sequence::from_positive(s[1..].to_vec())))
        }
    };
    let threshold = BigRational::new(
        drop_first(y) - drop_first(x),
        BigInt::from(cx) - BigInt::from(cy),
    );
    let zr = z.reversed();
    let tail_value = cf_value(&Sequence::from_positive(zr[1..].to_vec()), zr[0]);
    Ok(tail_value > ExtRational::Finite(threshold))
}
