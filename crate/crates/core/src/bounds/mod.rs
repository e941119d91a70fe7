//! Growth of continuants bounded by `n`: the sequences `K_{l,n}` and
//! `k_{l,n} = ⟨n^l⟩`, the quadratic surds `λ_n = (n+√(n²+4))/2` and
//! `μ_n = (n+2+√(n²+4n))/2`, and the lower bound
//! `min U_n(S) ≥ μ_n^{(S−n+1)/(n+1)} / e²`.
//!
//! Irrational quantities are evaluated in [`Interval`] arithmetic. A decision
//! is returned only once the interval separates from the threshold; the
//! [`adaptive`] wrapper doubles the working precision until that happens.

mod interval;

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

pub use interval::{e_squared, Interval};

use crate::continuant::continuant_u128;
use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Starting and maximal working precision in bits.
pub const MIN_BITS: u32 = 64;
pub const MAX_BITS: u32 = 1 << 14;

/// Retries `f` at doubling precision while it reports `Precision`.
pub fn adaptive<T>(mut f: impl FnMut(u32) -> Result<T>) -> Result<T> {
    let mut bits = MIN_BITS;
    loop {
        match f(bits) {
            Err(Error::Precision { .. }) if bits < MAX_BITS => bits *= 2,
            other => return other,
        }
    }
}

/// `K_0 = 1`, `K_1 = n+2`, `K_{j+1} = (n+2)K_j − K_{j−1}`.
pub fn k_upper(n: u64, l: u64) -> BigUint {
    let step = BigUint::from(n + 2);
    // K_{-1} = 0 makes the recurrence produce K_1 = n+2.
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    for _ in 0..l {
        let next = &step * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `k_{l,n} = ⟨n^l⟩`.
pub fn k_lower(n: u64, l: u64) -> BigUint {
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    for _ in 0..l {
        let next = &cur * n + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn alternating(first: u64, second: u64, len: usize) -> Sequence {
    let v = (0..len).map(|i| if i % 2 == 0 { first } else { second }).collect();
    Sequence::from_positive(v)
}

/// The three continuant forms of `K`: `⟨(1,n)…⟩` with `2l−1` terms is
/// `K_{l−1}`, `⟨(n,1)…⟩` with `2l−1` terms is `n·K_{l−1}`, and `⟨(1,n)^l⟩`
/// is `K_l − K_{l−1}`.
pub fn lemma6_check(n: u64, l: u64) -> Result<bool> {
    if n == 0 || l == 0 {
        return Err(Error::domain(format!("need n ≥ 1 and l ≥ 1, got n={n}, l={l}")));
    }
    let odd = 2 * l as usize - 1;
    let k_prev = k_upper(n, l - 1);
    let a = crate::continuant::continuant(&alternating(1, n, odd)) == k_prev;
    let b = crate::continuant::continuant(&alternating(n, 1, odd)) == &k_prev * n;
    let c = crate::continuant::continuant(&alternating(1, n, 2 * l as usize)) == k_upper(n, l) - &k_prev;
    Ok(a && b && c)
}

/// `λ_n` and `μ_n` at a fixed precision.
#[derive(Debug, Clone)]
pub struct SpectralConstants {
    pub n: u64,
    pub lambda: Interval,
    pub mu: Interval,
}

impl SpectralConstants {
    pub fn new(n: u64, bits: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be positive"));
        }
        let half = |num: Interval| num.div(&Interval::from_integer(2, bits)).expect("nonzero");
        let lambda = half(Interval::from_integer(n, bits).add(&Interval::sqrt_integer(&BigUint::from(n * n + 4), bits)));
        let mu = half(Interval::from_integer(n + 2, bits).add(&Interval::sqrt_integer(&BigUint::from(n * n + 4 * n), bits)));
        Ok(SpectralConstants { n, lambda, mu })
    }

    /// `n < λ_n < n+1 < μ_n < n+2`, certified.
    pub fn sandwich(&self) -> Result<bool> {
        let bits = self.lambda.bits();
        let at = |v: u64| Interval::from_integer(v, bits);
        let chain = [at(self.n), self.lambda.clone(), at(self.n + 1), self.mu.clone(), at(self.n + 2)];
        let mut ok = true;
        for w in chain.windows(2) {
            match w[0].cmp_certified(&w[1]) {
                Some(ord) => ok &= ord == Ordering::Less,
                None => return Err(Error::Precision { bits, what: "spectral sandwich" }),
            }
        }
        Ok(ok)
    }
}

/// Outcome of checking both closed forms at one `(n, l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub n: u64,
    pub l: u64,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub k_exact: BigUint,
    #[serde(serialize_with = "crate::serde_decimal::bigint")]
    pub k_nearest: BigInt,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub big_k_exact: BigUint,
    #[serde(serialize_with = "crate::serde_decimal::bigint")]
    pub big_k_floor: BigInt,
}

impl ClosedForm {
    pub fn holds(&self) -> bool {
        BigInt::from(self.k_exact.clone()) == self.k_nearest
            && BigInt::from(self.big_k_exact.clone()) == self.big_k_floor
    }
}

/// `k_{l,n} = ‖λ^{l+2}/(λ²+1)‖` and `K_{l,n} = ⌊μ^{l+2}/(μ²−1)⌋` at a fixed
/// precision; `Precision` when either rounding is not yet determined.
pub fn closed_form_eval(n: u64, l: u64, bits: u32) -> Result<ClosedForm> {
    let c = SpectralConstants::new(n, bits)?;
    let one = Interval::from_integer(1, bits);
    let lam2 = c.lambda.pow(2);
    let mu2 = c.mu.pow(2);
    let precision = Error::Precision { bits, what: "closed form rounding" };
    let small = c.lambda.pow(l + 2).div(&lam2.add(&one)).ok_or(precision.clone())?;
    let large = c.mu.pow(l + 2).div(&mu2.sub(&one)).ok_or(precision.clone())?;
    let k_nearest = small.nearest_certified().ok_or(precision.clone())?;
    let big_k_floor = large.floor_certified().ok_or(precision)?;
    Ok(ClosedForm { n, l, k_exact: k_lower(n, l), k_nearest, big_k_exact: k_upper(n, l), big_k_floor })
}

pub fn closed_form_check(n: u64, l: u64, bits: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    Ok(closed_form_eval(n, l, bits)?.holds())
}

/// Truth values of the three inequalities
/// `K_{n,n} − K_{n−1,n} < k_{n+1,n}`, `K_{n−1,n} < k_{n,n}` and
/// `n > (nK_{n−1,n} − k_{n,n}) / (k_{n+1,n} − K_{n,n})`, evaluated exactly as
/// written. The last is `None` when its denominator vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma9 {
    pub n: u64,
    pub first: bool,
    pub second: bool,
    pub third: Option<bool>,
    pub third_denominator_sign: i8,
}

impl Lemma9 {
    pub fn all(&self) -> bool {
        self.first && self.second && self.third == Some(true)
    }
}

pub fn lemma9_check(n: u64) -> Result<Lemma9> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let z = |v: BigUint| BigInt::from(v);
    let (kn, kn1) = (z(k_upper(n, n)), z(k_upper(n, n - 1)));
    let (sn, sn1) = (z(k_lower(n, n)), z(k_lower(n, n + 1)));
    let first = &kn - &kn1 < sn1;
    let second = kn1 < sn;
    let num = BigInt::from(n) * &kn1 - &sn;
    let den = &sn1 - &kn;
    let sign = match den.cmp(&BigInt::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    };
    let third = (sign != 0).then(|| BigRational::from_integer(BigInt::from(n)) > BigRational::new(num, den));
    Ok(Lemma9 { n, first, second, third, third_denominator_sign: sign })
}

/// `(1+1/λ²)/(1−1/μ²)·(μ/λ)^n < (41/40)e²` for `n > 8`.
pub fn lemma8_check(n: u64, bits: u32) -> Result<bool> {
    if n <= 8 {
        return Err(Error::domain(format!("stated for n > 8, got n={n}")));
    }
    let c = SpectralConstants::new(n, bits)?;
    let one = Interval::from_integer(1, bits);
    let precision = Error::Precision { bits, what: "spectral ratio comparison" };
    let left = one
        .add(&c.lambda.pow(2).recip().ok_or(precision.clone())?)
        .div(&one.sub(&c.mu.pow(2).recip().ok_or(precision.clone())?))
        .ok_or(precision.clone())?
        .mul(&c.mu.div(&c.lambda).ok_or(precision.clone())?.pow(n));
    let ratio = BigRational::new(41.into(), 40.into());
    let right = Interval::from_rational(&ratio, bits).mul(&e_squared(bits));
    match left.cmp_certified(&right) {
        Some(ord) => Ok(ord == Ordering::Less),
        None => Err(precision),
    }
}

/// `μ_n^{(S−n+1)/(n+1)} / e²` as a certified interval.
pub fn corollary1_interval(s: u64, n: u64, bits: u32) -> Result<Interval> {
    if !(2 <= n && n + 2 <= s) {
        return Err(Error::domain(format!("need 2 ≤ n ≤ S−2, got S={s}, n={n}")));
    }
    let c = SpectralConstants::new(n, bits)?;
    let root = c.mu.pow(s - n + 1).root((n + 1) as u32).expect("positive");
    Ok(root.div(&e_squared(bits)).expect("e² is positive"))
}

/// Certified lower decimal approximation of the bound to `digits` places.
pub fn corollary1_bound(s: u64, n: u64, digits: u32) -> Result<String> {
    let bits = MIN_BITS.max(4 * digits + 32);
    Ok(corollary1_interval(s, n, bits)?.lower_decimal(digits))
}

/// Certified `bound < value` for an exact integer `value`.
pub fn corollary1_below(s: u64, n: u64, value: &BigUint) -> Result<bool> {
    adaptive(|bits| {
        let iv = corollary1_interval(s, n, bits)?;
        match iv.cmp_certified(&Interval::from_integer(BigInt::from(value.clone()), bits)) {
            Some(ord) => Ok(ord != Ordering::Greater),
            None => Err(Error::Precision { bits, what: "bound versus minimum" }),
        }
    })
}

/// `(3+√8)^{1/5}` against `√(2+10⁻⁶)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Remark1 {
    pub left: String,
    pub right: String,
    pub left_greater: bool,
}

pub fn remark1(digits: u32) -> Result<Remark1> {
    adaptive(|bits| {
        let bits = bits.max(4 * digits + 32);
        let left = Interval::from_integer(3, bits)
            .add(&Interval::sqrt_integer(&BigUint::from(8u32), bits))
            .root(5)
            .expect("positive");
        let inner = BigRational::new(2_000_001.into(), 1_000_000.into());
        let right = Interval::from_rational(&inner, bits).root(2).expect("positive");
        let ord = left
            .cmp_certified(&right)
            .ok_or(Error::Precision { bits, what: "fifth root comparison" })?;
        Ok(Remark1 {
            left: left.lower_decimal(digits),
            right: right.lower_decimal(digits),
            left_greater: ord == Ordering::Greater,
        })
    })
}

/// Bound next to an exact minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    #[serde(rename = "S")]
    pub s: u64,
    pub n: u64,
    pub bound: String,
    pub exact_min: Option<String>,
    pub margin: Option<String>,
}

impl BoundReport {
    pub fn new(s: u64, n: u64, digits: u32, exact_min: Option<&BigUint>) -> Result<Self> {
        let bits = MIN_BITS.max(4 * digits + 32);
        let iv = corollary1_interval(s, n, bits)?;
        let margin = exact_min.map(|m| {
            Interval::from_integer(BigInt::from(m.clone()), bits).sub(&iv).lower_decimal(digits)
        });
        Ok(BoundReport {
            s,
            n,
            bound: iv.lower_decimal(digits),
            exact_min: exact_min.map(|m| m.to_string()),
            margin,
        })
    }
}

/// `k_{l,n}` through the machine-word continuant, for cross-checks.
pub fn k_lower_u128(n: u64, l: u64) -> Option<u128> {
    continuant_u128(&vec![n; l as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        for n in 1..5 {
            assert_eq!(k_upper(n, 0), BigUint::one());
            assert_eq!(k_upper(n, 1), BigUint::from(n + 2));
            assert_eq!(k_lower(n, 0), BigUint::one());
        }
        assert_eq!(k_upper(3, 2), BigUint::from(24u32));
        assert_eq!(k_upper(1, 2), BigUint::from(8u32));
        assert_eq!(k_lower(3, 2), BigUint::from(10u32));
        assert_eq!(k_lower(2, 3), BigUint::from(12u32));
        assert_eq!(k_lower_u128(2, 3), Some(12));
    }

    #[test]
    fn continuant_forms_of_k() {
        assert!(lemma6_check(2, 2).unwrap());
        assert!(lemma6_check(3, 1).unwrap());
        assert!(lemma6_check(1, 0).is_err());
    }

    #[test]
    fn closed_forms_small() {
        assert!(adaptive(|b| closed_form_check(1, 1, b)).unwrap());
        assert!(adaptive(|b| closed_form_check(1, 0, b)).unwrap());
        let cf = adaptive(|b| closed_form_eval(3, 2, b)).unwrap();
        assert_eq!(cf.big_k_floor, BigInt::from(24));
        assert!(cf.holds());
    }

    #[test]
    fn three_inequalities_at_two() {
        let r = lemma9_check(2).unwrap();
        assert!(r.first && r.second);
        assert_eq!(r.third_denominator_sign, -1);
    }

    #[test]
    fn spectral_ratio_domain() {
        assert!(adaptive(|b| lemma8_check(9, b)).unwrap());
        assert!(adaptive(|b| lemma8_check(100, b)).unwrap());
        assert!(lemma8_check(8, 64).is_err());
    }

    #[test]
    fn bound_and_fifth_root() {
        assert_eq!(corollary1_bound(8, 2, 2).unwrap(), "2.92");
        assert!(corollary1_bound(3, 2, 2).is_err());
        assert!(corollary1_below(8, 2, &BigUint::from(24u32)).unwrap());
        let r = remark1(6).unwrap();
        assert!(r.left_greater);
        assert!(r.left.starts_with("1.42268"));
        assert!(r.right.starts_with("1.4142"));
    }

    #[test]
    fn sandwich() {
        for n in 1..=20 {
            assert!(adaptive(|b| SpectralConstants::new(n, b)?.sandwich()).unwrap());
        }
    }
}
