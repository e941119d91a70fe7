//! Exhaustive ground truth for every set family.
//!
//! Members are streamed in lexicographic order, one candidate in memory at a
//! time, and evaluated with a machine-word continuant that falls back to big
//! integers on overflow.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::continuant::{continuant_of, continuant_u128, unit_extraction_normal_form};
use crate::error::{Error, Result};
use crate::extremal::MultisetSpec;
use crate::sequence::Sequence;

/// A finite family of sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum EnumerationRequest {
    /// All arrangements of a multiset.
    W(MultisetSpec),
    /// Arrangements of a multiset starting with its least value.
    V(MultisetSpec),
    /// Compositions of `s` into `t` parts, each at most `n`.
    UStn { s: u64, t: u64, n: u64 },
    /// Compositions of `s` into `t` parts.
    USt { s: u64, t: u64 },
    /// Compositions of `s` into parts at most `n`.
    UnS { s: u64, n: u64 },
}

impl EnumerationRequest {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Enumeration(m));
        match *self {
            EnumerationRequest::UStn { s, t, n } if s == 0 || t == 0 || n == 0 => {
                bad(format!("U(S,t,n) needs positive S, t, n; got ({s},{t},{n})"))
            }
            EnumerationRequest::USt { s, t } if s == 0 || t == 0 => {
                bad(format!("U(S,t) needs positive S, t; got ({s},{t})"))
            }
            EnumerationRequest::UnS { s, n } if s == 0 || n == 0 => {
                bad(format!("U_n(S) needs positive S, n; got ({s},{n})"))
            }
            _ => Ok(()),
        }
    }

    /// Bounds `(sum, fixed length, part cap)` for the composition families.
    fn composition_shape(&self) -> Option<(u64, Option<u64>, u64)> {
        match *self {
            EnumerationRequest::UStn { s, t, n } => Some((s, Some(t), n)),
            EnumerationRequest::USt { s, t } => Some((s, Some(t), s.saturating_sub(t) + 1)),
            EnumerationRequest::UnS { s, n } => Some((s, None, n)),
            _ => None,
        }
    }

    /// Membership test independent of the enumerator.
    pub fn contains(&self, seq: &[u64]) -> bool {
        if seq.contains(&0) {
            return false;
        }
        match self {
            EnumerationRequest::W(ms) => ms.matches(seq),
            EnumerationRequest::V(ms) => ms.matches(seq) && seq.first() == Some(&ms.min()),
            _ => {
                let (s, t, n) = self.composition_shape().expect("composition family");
                seq.iter().sum::<u64>() == s
                    && t.is_none_or(|t| seq.len() as u64 == t)
                    && seq.iter().all(|&a| a <= n)
            }
        }
    }

    /// Lexicographic stream of the members.
    pub fn enumerate(&self) -> Result<Box<dyn Iterator<Item = Vec<u64>> + Send>> {
        self.validate()?;
        Ok(match self {
            EnumerationRequest::W(ms) => Box::new(Permutations::new(ms.elements(), false)),
            EnumerationRequest::V(ms) => Box::new(Permutations::new(ms.elements(), true)),
            _ => {
                let (s, t, n) = self.composition_shape().expect("composition family");
                Box::new(Compositions::new(s, t, n, Vec::new()))
            }
        })
    }

    /// The members split by first element, for parallel scans. Each part is
    /// lexicographic and the parts come in increasing order of first element.
    fn partitions(&self) -> Result<Vec<Box<dyn Iterator<Item = Vec<u64>> + Send>>> {
        self.validate()?;
        match self.composition_shape() {
            Some((s, t, n)) => Ok((1..=n.min(s))
                .map(|a| Box::new(Compositions::new(s, t, n, vec![a])) as Box<dyn Iterator<Item = Vec<u64>> + Send>)
                .collect()),
            None => Ok(vec![self.enumerate()?]),
        }
    }
}

/// Distinct permutations of a multiset by the classical next-permutation
/// step, starting from the sorted order.
struct Permutations {
    cur: Option<Vec<u64>>,
    lead_fixed: bool,
}

impl Permutations {
    fn new(mut elems: Vec<u64>, lead_fixed: bool) -> Self {
        elems.sort_unstable();
        Permutations { cur: Some(elems), lead_fixed }
    }
}

fn next_permutation(v: &mut [u64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.cur.take()?;
        let mut nxt = out.clone();
        if next_permutation(&mut nxt) && !(self.lead_fixed && nxt[0] != out[0]) {
            self.cur = Some(nxt);
        }
        Some(out)
    }
}

/// Compositions of `s` with parts in `1..=n`, of fixed length `t` or any
/// length, extending a fixed prefix, in lexicographic order.
struct Compositions {
    t: Option<u64>,
    n: u64,
    prefix_len: usize,
    cur: Option<Vec<u64>>,
}

impl Compositions {
    fn new(s: u64, t: Option<u64>, n: u64, prefix: Vec<u64>) -> Self {
        let prefix_len = prefix.len();
        let mut it = Compositions { t, n, prefix_len, cur: None };
        let used: u64 = prefix.iter().sum();
        let ok = prefix.iter().all(|&a| 1 <= a && a <= n) && used <= s;
        if ok {
            let mut v = prefix;
            if it.complete(&mut v, s - used) {
                it.cur = Some(v);
            }
        }
        it
    }

    /// Whether `rem` can be spread over the slots left after `filled` parts.
    fn feasible(&self, filled: usize, rem: u64) -> bool {
        match self.t {
            Some(t) => {
                let slots = t.saturating_sub(filled as u64);
                filled as u64 <= t && slots <= rem && rem <= slots.saturating_mul(self.n)
            }
            None => true,
        }
    }

    /// Appends the lexicographically least completion of `v` absorbing `rem`.
    fn complete(&self, v: &mut Vec<u64>, mut rem: u64) -> bool {
        if !self.feasible(v.len(), rem) {
            return false;
        }
        match self.t {
            Some(t) => {
                while (v.len() as u64) < t {
                    let after = t - v.len() as u64 - 1;
                    let a = rem.saturating_sub(after * self.n).max(1);
                    v.push(a);
                    rem -= a;
                }
            }
            None => v.extend(std::iter::repeat_n(1, rem as usize)),
        }
        true
    }

    fn successor(&self, v: &mut Vec<u64>) -> bool {
        let mut rem = 0u64;
        while v.len() > self.prefix_len {
            let a = v.pop().unwrap();
            rem += a;
            let w = a + 1;
            if w <= self.n && w <= rem {
                v.push(w);
                if self.complete(v, rem - w) {
                    return true;
                }
                v.pop();
            }
        }
        false
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.cur.take()?;
        let mut nxt = out.clone();
        if self.successor(&mut nxt) {
            self.cur = Some(nxt);
        }
        Some(out)
    }
}

/// Continuant key ordered like the integer value: machine words below big
/// integers, which only arise past `u128::MAX`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Small(u128),
    Big(BigUint),
}

impl Key {
    fn of(seq: &[u64]) -> Key {
        match continuant_u128(seq) {
            Some(v) => Key::Small(v),
            None => Key::Big(continuant_of(seq).expect("members are positive")),
        }
    }

    fn into_big(self) -> BigUint {
        match self {
            Key::Small(v) => BigUint::from(v),
            Key::Big(v) => v,
        }
    }
}

#[derive(Debug, Clone)]
struct Tracker {
    min: Option<(Key, Vec<Vec<u64>>)>,
    max: Option<(Key, Vec<Vec<u64>>)>,
    count: u64,
}

impl Tracker {
    fn new() -> Self {
        Tracker { min: None, max: None, count: 0 }
    }

    fn offer(slot: &mut Option<(Key, Vec<Vec<u64>>)>, key: &Key, seq: &[u64], better: std::cmp::Ordering) {
        match slot {
            Some((k, list)) => match key.cmp(k) {
                o if o == better => *slot = Some((key.clone(), vec![seq.to_vec()])),
                std::cmp::Ordering::Equal => list.push(seq.to_vec()),
                _ => {}
            },
            None => *slot = Some((key.clone(), vec![seq.to_vec()])),
        }
    }

    fn push(&mut self, seq: &[u64]) {
        let key = Key::of(seq);
        self.count += 1;
        Tracker::offer(&mut self.min, &key, seq, std::cmp::Ordering::Less);
        Tracker::offer(&mut self.max, &key, seq, std::cmp::Ordering::Greater);
    }

    fn merge_slot(
        a: Option<(Key, Vec<Vec<u64>>)>,
        b: Option<(Key, Vec<Vec<u64>>)>,
        better: std::cmp::Ordering,
    ) -> Option<(Key, Vec<Vec<u64>>)> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some((ka, mut la)), Some((kb, lb))) => match kb.cmp(&ka) {
                o if o == better => Some((kb, lb)),
                std::cmp::Ordering::Equal => {
                    la.extend(lb);
                    Some((ka, la))
                }
                _ => Some((ka, la)),
            },
        }
    }

    /// Associative merge; `other` must cover members after `self`'s.
    fn merge(self, other: Tracker) -> Tracker {
        Tracker {
            min: Tracker::merge_slot(self.min, other.min, std::cmp::Ordering::Less),
            max: Tracker::merge_slot(self.max, other.max, std::cmp::Ordering::Greater),
            count: self.count + other.count,
        }
    }
}

/// Exact extrema with every witness, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceReport {
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub min: BigUint,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub max: BigUint,
    pub argmin: Vec<Sequence>,
    pub argmax: Vec<Sequence>,
    pub cardinality: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Min,
    Max,
}

impl BruteForceReport {
    pub fn witnesses(&self, which: Extremum) -> &[Sequence] {
        match which {
            Extremum::Min => &self.argmin,
            Extremum::Max => &self.argmax,
        }
    }

    pub fn value(&self, which: Extremum) -> &BigUint {
        match which {
            Extremum::Min => &self.min,
            Extremum::Max => &self.max,
        }
    }
}

/// Scans the whole family; `Infeasible` when it has no member.
pub fn brute_force(req: &EnumerationRequest) -> Result<BruteForceReport> {
    let parts = req.partitions()?;
    let tracker = parts
        .into_par_iter()
        .map(|it| {
            let mut tr = Tracker::new();
            for seq in it {
                tr.push(&seq);
            }
            tr
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tracker::new(), Tracker::merge);
    let (Some((kmin, amin)), Some((kmax, amax))) = (tracker.min, tracker.max) else {
        return Err(Error::Infeasible(format!("{req:?} has no members")));
    };
    let wrap = |v: Vec<Vec<u64>>| v.into_iter().map(Sequence::from_positive).collect();
    Ok(BruteForceReport {
        min: kmin.into_big(),
        max: kmax.into_big(),
        argmin: wrap(amin),
        argmax: wrap(amax),
        cardinality: tracker.count,
    })
}

/// Number of trivial-move classes among `seqs`.
pub fn class_count(seqs: &[Sequence]) -> Result<usize> {
    let forms: BTreeSet<Sequence> = seqs.iter().map(unit_extraction_normal_form).collect::<Result<_>>()?;
    Ok(forms.len())
}

/// Whether all extremal witnesses share one class under symmetry and unit
/// extraction.
pub fn uniqueness_check(req: &EnumerationRequest, which: Extremum) -> Result<bool> {
    let report = brute_force(req)?;
    Ok(class_count(report.witnesses(which))? == 1)
}

/// `F(a)`: the continuant of `seq` after moving mass between positions `i`
/// and `j` so that `seq_i = a` and `seq_i + seq_j` is unchanged.
pub fn transfer_value(seq: &[u64], i: usize, j: usize, a: u64) -> Option<BigUint> {
    let tau = seq[i] + seq[j];
    if a == 0 || a >= tau {
        return None;
    }
    let mut v = seq.to_vec();
    v[i] = a;
    v[j] = tau - a;
    continuant_of(&v).ok()
}

/// Outcome of the unit-variation properties on one family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitVariation {
    /// Every minimiser has at most one element outside `{1, n}`.
    pub argmin_single_interior: bool,
    /// `F(a) > min(F(a−1), F(a+1))` at every sampled interior pair.
    pub strict_transfer: bool,
    pub pairs_checked: u64,
}

impl UnitVariation {
    pub fn holds(&self) -> bool {
        self.argmin_single_interior && self.strict_transfer
    }
}

/// Members visited by the transfer check; every member when the family is
/// at most this large, an even stride otherwise.
pub const UNIT_VARIATION_SAMPLE: u64 = 4096;

pub fn unit_variation_check(req: &EnumerationRequest) -> Result<UnitVariation> {
    let n = match *req {
        EnumerationRequest::UStn { n, .. } | EnumerationRequest::UnS { n, .. } => n,
        _ => return Err(Error::Enumeration("unit variation applies to bounded compositions only".into())),
    };
    let report = brute_force(req)?;
    let interior = |a: u64| a != 1 && a != n;
    let argmin_single_interior = report.argmin.iter().all(|s| s.iter().filter(|&&a| interior(a)).count() <= 1);
    let stride = (report.cardinality / UNIT_VARIATION_SAMPLE).max(1);
    let mut strict_transfer = true;
    let mut pairs_checked = 0;
    for seq in req.enumerate()?.step_by(stride as usize) {
        let pos: Vec<usize> = (0..seq.len()).filter(|&k| interior(seq[k])).collect();
        for (x, &i) in pos.iter().enumerate() {
            for &j in &pos[x + 1..] {
                let a = seq[i];
                let mid = transfer_value(&seq, i, j, a).expect("in range");
                let lo = transfer_value(&seq, i, j, a - 1).expect("a ≥ 2");
                let hi = transfer_value(&seq, i, j, a + 1).expect("b ≥ 2");
                strict_transfer &= mid > lo.min(hi);
                pairs_checked += 1;
            }
        }
    }
    Ok(UnitVariation { argmin_single_interior, strict_transfer, pairs_checked })
}

/// Whether `t` is a sum of terms each equal to `n` or `n + 1`, by search.
pub fn representable_bruteforce(t: u64, n: u64) -> bool {
    (0..=t / n).any(|x| (t - n * x).is_multiple_of(n + 1))
}
