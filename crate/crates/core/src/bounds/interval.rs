//! Certified real intervals with dyadic endpoints.
//!
//! A value is held as `[lo, hi] / 2^p` with `lo ≤ hi`; every operation rounds
//! `lo` down and `hi` up, so the true real always stays inside.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn floor_shr(v: &BigInt, k: u32) -> BigInt {
    v.div_floor(&(BigInt::one() << k))
}

fn ceil_shr(v: &BigInt, k: u32) -> BigInt {
    -((-v).div_floor(&(BigInt::one() << k)))
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn ceil_root(v: &BigInt, k: u32) -> BigInt {
    let r = v.nth_root(k);
    if r.pow(k) < *v {
        r + 1
    } else {
        r
    }
}

impl Interval {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn from_integer(v: impl Into<BigInt>, bits: u32) -> Self {
        let scaled = v.into() << bits;
        Interval { lo: scaled.clone(), hi: scaled, bits }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        let num = r.numer() << bits;
        Interval { lo: num.div_floor(r.denom()), hi: ceil_div(&num, r.denom()), bits }
    }

    /// `√v` for a nonnegative integer `v`.
    pub fn sqrt_integer(v: &BigUint, bits: u32) -> Self {
        let scaled = BigInt::from(v.clone()) << (2 * bits);
        Interval { lo: scaled.sqrt(), hi: ceil_root(&scaled, 2), bits }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, bits: self.bits }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, bits: self.bits }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        Interval { lo: floor_shr(lo, self.bits), hi: ceil_shr(hi, self.bits), bits: self.bits }
    }

    /// `1 / self`; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Self> {
        if !self.is_positive() && !self.is_negative() {
            return None;
        }
        let one = BigInt::one() << (2 * self.bits);
        // For a sign-definite interval, 1/x is decreasing.
        Some(Interval { lo: one.div_floor(&self.hi), hi: ceil_div(&one, &self.lo), bits: self.bits })
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.recip()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Interval::from_integer(1, self.bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^{1/k}` for a nonnegative interval.
    pub fn root(&self, k: u32) -> Option<Self> {
        if self.lo.is_negative() || k == 0 {
            return None;
        }
        let shift = self.bits * (k - 1);
        Some(Interval {
            lo: (&self.lo << shift).nth_root(k),
            hi: ceil_root(&(&self.hi << shift), k),
            bits: self.bits,
        })
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certified comparison: `Some` only when the intervals are disjoint or
    /// both are the same point.
    pub fn cmp_certified(&self, o: &Self) -> Option<Ordering> {
        debug_assert_eq!(self.bits, o.bits);
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if self.lo > o.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && o.lo == o.hi && self.lo == o.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// `⌊x⌋` when it is the same for every point of the interval.
    pub fn floor_certified(&self) -> Option<BigInt> {
        let a = floor_shr(&self.lo, self.bits);
        (a == floor_shr(&self.hi, self.bits)).then_some(a)
    }

    /// The nearest integer when no half-integer lies in the interval.
    pub fn nearest_certified(&self) -> Option<BigInt> {
        let half = BigInt::one() << (self.bits - 1);
        let shifted = Interval { lo: &self.lo + &half, hi: &self.hi + &half, bits: self.bits };
        let n = shifted.floor_certified()?;
        // Exclude an endpoint sitting exactly on a half-integer.
        let boundary = n.clone() << self.bits;
        (shifted.lo != boundary).then_some(n)
    }

    /// Width in units of `2^{-p}`.
    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// Decimal string of the lower endpoint truncated toward `−∞`.
    pub fn lower_decimal(&self, digits: u32) -> String {
        decimal(&self.lo, self.bits, digits, false)
    }

    /// Decimal string of the upper endpoint rounded toward `+∞`.
    pub fn upper_decimal(&self, digits: u32) -> String {
        decimal(&self.hi, self.bits, digits, true)
    }
}

fn decimal(v: &BigInt, bits: u32, digits: u32, up: bool) -> String {
    let scaled = v * BigInt::from(10u32).pow(digits);
    let q = if up { ceil_shr(&scaled, bits) } else { floor_shr(&scaled, bits) };
    let neg = q.sign() == Sign::Minus;
    let mag = q.abs().to_string();
    let d = digits as usize;
    let padded = format!("{:0>width$}", mag, width = d + 1);
    let (int, frac) = padded.split_at(padded.len() - d);
    let sign = if neg { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// `e²` as `Σ_{k≤K} 2^k/k!` plus a tail bound `2·2^{K+1}/(K+1)!`, valid once
/// `K + 2 > 4` so that consecutive tail terms at least halve.
pub fn e_squared(bits: u32) -> Interval {
    let mut k: u64 = 0;
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    let two = BigRational::from_integer(BigInt::from(2));
    let eps = BigRational::new(BigInt::one(), BigInt::one() << (bits + 2));
    loop {
        sum += &term;
        k += 1;
        term = term * &two / BigRational::from_integer(BigInt::from(k));
        if k >= 4 && &term * &two < eps {
            break;
        }
    }
    let lo = Interval::from_rational(&sum, bits);
    let hi = Interval::from_rational(&(sum + &term * &two), bits);
    Interval { lo: lo.lo, hi: hi.hi, bits }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_brackets() {
        let r = Interval::sqrt_integer(&BigUint::from(2u32), 64);
        assert_eq!(r.lower_decimal(6), "1.414213");
        assert_eq!(r.upper_decimal(6), "1.414214");
        let sq = r.mul(&r);
        assert_eq!(sq.cmp_certified(&Interval::from_integer(2, 64)), None);
        assert!(sq.width_ulps() < BigInt::from(16));
    }

    #[test]
    fn e_squared_digits() {
        let e2 = e_squared(128);
        assert_eq!(e2.lower_decimal(12), "7.389056098930");
        assert_eq!(e2.upper_decimal(12), "7.389056098931");
    }

    #[test]
    fn roots_and_powers() {
        let x = Interval::from_integer(32, 80);
        assert_eq!(x.root(5).unwrap().floor_certified(), Some(BigInt::from(2)));
        assert_eq!(x.root(5).unwrap().nearest_certified(), Some(BigInt::from(2)));
        let third = Interval::from_rational(&BigRational::new(1.into(), 3.into()), 80);
        assert_eq!(third.pow(3).mul(&Interval::from_integer(27, 80)).nearest_certified(), Some(BigInt::one()));
        assert!(Interval::from_integer(0, 10).recip().is_none());
    }

    #[test]
    fn decimal_formatting() {
        let x = Interval::from_rational(&BigRational::new((-3).into(), 2.into()), 16);
        assert_eq!(x.lower_decimal(2), "-1.50");
        assert_eq!(Interval::from_integer(7, 8).lower_decimal(0), "7");
    }
}
