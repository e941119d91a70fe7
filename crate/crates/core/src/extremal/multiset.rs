//! Arrangements of a fixed multiset: the sorted views, the valley shape, and
//! the three extremal arrangements.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Distinct values `h_1 < ... < h_f` with multiplicities `p_1, ..., p_f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultisetSpec {
    values: Vec<u64>,
    mults: Vec<usize>,
}

impl MultisetSpec {
    pub fn new(values: Vec<u64>, mults: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("a multiset needs at least one distinct value"));
        }
        if values.len() != mults.len() {
            return Err(Error::domain(format!(
                "{} values but {} multiplicities",
                values.len(),
                mults.len()
            )));
        }
        if values[0] == 0 {
            return Err(Error::domain("values must be positive"));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("values must be strictly increasing"));
        }
        if mults.contains(&0) {
            return Err(Error::domain("multiplicities must be positive"));
        }
        Ok(MultisetSpec { values, mults })
    }

    /// Collects the multiset of a nonempty list of positive elements.
    pub fn from_elements(elems: &[u64]) -> Result<Self> {
        let seq = Sequence::new(elems.to_vec())?;
        if seq.is_empty() {
            return Err(Error::EmptySequence);
        }
        let sorted = seq.sorted();
        let mut values: Vec<u64> = Vec::new();
        let mut mults: Vec<usize> = Vec::new();
        for a in sorted {
            if values.last() == Some(&a) {
                *mults.last_mut().unwrap() += 1;
            } else {
                values.push(a);
                mults.push(1);
            }
        }
        MultisetSpec::new(values, mults)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// Number of distinct values `f`.
    pub fn distinct(&self) -> usize {
        self.values.len()
    }

    /// Total length `t = Σ p_j`.
    pub fn len(&self) -> usize {
        self.mults.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> u64 {
        self.values[0]
    }

    /// All elements in nondecreasing order.
    pub fn elements(&self) -> Vec<u64> {
        self.values
            .iter()
            .zip(&self.mults)
            .flat_map(|(&h, &p)| std::iter::repeat_n(h, p))
            .collect()
    }

    pub fn matches(&self, seq: &[u64]) -> bool {
        let mut s = seq.to_vec();
        s.sort_unstable();
        s == self.elements()
    }
}

/// A split `p_j = l_j + r_j` of every multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitSpec {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl SplitSpec {
    pub fn new(ms: &MultisetSpec, left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        let ok = left.len() == ms.distinct()
            && right.len() == ms.distinct()
            && left.iter().zip(&right).zip(ms.mults()).all(|((l, r), p)| l + r == *p);
        if !ok {
            return Err(Error::domain("split must satisfy l_j + r_j = p_j for every j"));
        }
        Ok(SplitSpec { left, right })
    }

    /// The split that makes the valley maximal: counting `j` down from `f`,
    /// the unit share alternates left, right, left, ...; the partner side
    /// takes the remaining `p_j − 1` copies.
    pub fn alternating(ms: &MultisetSpec) -> Self {
        let f = ms.distinct();
        let (mut left, mut right) = (Vec::with_capacity(f), Vec::with_capacity(f));
        for j in 1..=f {
            let p = ms.mults()[j - 1];
            if (f - j).is_multiple_of(2) {
                left.push(1);
                right.push(p - 1);
            } else {
                left.push(p - 1);
                right.push(1);
            }
        }
        SplitSpec { left, right }
    }

    /// The valley `(h_f^{l_f}, ..., h_1^{l_1}, h_1^{r_1}, ..., h_f^{r_f})`.
    pub fn valley(&self, ms: &MultisetSpec) -> Sequence {
        let h = ms.values();
        let mut out = Vec::with_capacity(ms.len());
        for j in (0..h.len()).rev() {
            out.extend(std::iter::repeat_n(h[j], self.left[j]));
        }
        for (&v, &r) in h.iter().zip(&self.right) {
            out.extend(std::iter::repeat_n(v, r));
        }
        Sequence::from_positive(out)
    }
}

/// The ascending view `b_0 ≤ ... ≤ b_{t-1}` and the descending view
/// `c_1 ≥ ... ≥ c_t` of a multiset, with their interleavings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedViews {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl SortedViews {
    pub fn new(ms: &MultisetSpec) -> Self {
        let b = ms.elements();
        let c = b.iter().rev().copied().collect();
        SortedViews { b, c }
    }

    pub fn t(&self) -> usize {
        self.b.len()
    }

    /// `b_j`, 0-based as in the ascending view.
    pub fn b(&self, j: usize) -> u64 {
        self.b[j]
    }

    /// `c_j`, 1-based as in the descending view.
    pub fn c(&self, j: usize) -> u64 {
        self.c[j - 1]
    }

    /// `n_j`: `b_j` for even `j`, `c_j` for odd `j`.
    pub fn n(&self, j: usize) -> u64 {
        if j.is_multiple_of(2) {
            self.b(j)
        } else {
            self.c(j)
        }
    }

    /// `m_ν`: `c_ν` for even `ν`, `b_ν` for odd `ν`.
    pub fn m(&self, nu: usize) -> u64 {
        if nu.is_multiple_of(2) {
            self.c(nu)
        } else {
            self.b(nu)
        }
    }

    /// `(n_0, ..., n_ν, m_μ, ..., m_1)` with `ν = t_+ − 1`, `μ = t_−`.
    pub fn zigzag(&self) -> Sequence {
        let t = self.t();
        let t_minus = t / 2;
        let t_plus = t - t_minus;
        let mut out: Vec<u64> = (0..t_plus).map(|j| self.n(j)).collect();
        out.extend((1..=t_minus).rev().map(|nu| self.m(nu)));
        Sequence::from_positive(out)
    }
}
