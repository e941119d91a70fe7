//! Exact rationals extended with a `+∞` sentinel used when comparing
//! continued-fraction tails.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// An exact rational in lowest terms, or `+∞`.
///
/// `+∞` compares greater than every finite value and equal to itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    PosInfinity,
}

impl ExtRational {
    pub fn zero() -> Self {
        ExtRational::Finite(BigRational::zero())
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        ExtRational::Finite(BigRational::from_integer(v.into()))
    }

    /// `num / den` reduced; `den` must be nonzero.
    pub fn ratio(num: &BigUint, den: &BigUint) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        ExtRational::Finite(BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone())))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::PosInfinity)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::PosInfinity => None,
        }
    }

    pub fn into_finite(self) -> Option<BigRational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::PosInfinity => None,
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            ExtRational::Finite(r) if r.is_zero() => Ordering::Equal,
            ExtRational::Finite(r) if r.is_negative() => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl From<BigRational> for ExtRational {
    fn from(r: BigRational) -> Self {
        ExtRational::Finite(r)
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::PosInfinity, ExtRational::PosInfinity) => Ordering::Equal,
            (ExtRational::PosInfinity, _) => Ordering::Greater,
            (_, ExtRational::PosInfinity) => Ordering::Less,
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => write!(f, "{r}"),
            ExtRational::PosInfinity => write!(f, "+inf"),
        }
    }
}

/// Sign of a finite rational as an `Ordering` against zero.
pub(crate) fn sign_of(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_negative() {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}
