//! The universal argument of every continuant: a finite list of positive
//! integers.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence `(a_1, ..., a_t)` of positive integers. The empty
/// sequence is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Sequence(Vec<u64>);

impl Sequence {
    /// Validates that every element is at least 1.
    pub fn new(elems: Vec<u64>) -> Result<Self> {
        if let Some(position) = elems.iter().position(|&a| a == 0) {
            return Err(Error::InvalidSequence { position: position + 1, value: 0 });
        }
        Ok(Sequence(elems))
    }

    pub fn empty() -> Self {
        Sequence(Vec::new())
    }

    /// `a^{b}`: `count` copies of `value`.
    pub fn repeat(value: u64, count: usize) -> Result<Self> {
        Sequence::new(vec![value; count])
    }

    /// Crate-internal constructor for callers that already maintain positivity.
    pub(crate) fn from_positive(elems: Vec<u64>) -> Self {
        debug_assert!(elems.iter().all(|&a| a >= 1));
        Sequence(elems)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn reversed(&self) -> Sequence {
        Sequence(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Sequence) -> Sequence {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Sequence(v)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Elements sorted ascending; the multiset underlying the sequence.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

impl Deref for Sequence {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl TryFrom<Vec<u64>> for Sequence {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Sequence::new(v)
    }
}

impl From<Sequence> for Vec<u64> {
    fn from(s: Sequence) -> Vec<u64> {
        s.0
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Parses `1,3,2` (whitespace tolerated, empty string is the empty sequence).
impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(Sequence::empty());
        }
        let elems = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Sequence::new(elems)
    }
}

/// Shorthand used throughout the tests: `seq![1, 2, 3]`.
#[macro_export]
macro_rules! seq {
    () => { $crate::Sequence::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::Sequence::new(vec![$($x as u64),+]).expect("positive elements")
    };
}
