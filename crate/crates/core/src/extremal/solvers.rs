//! Integer systems behind the bounded-sum extremal templates.
//!
//! `T_z(m, x)` is `(1,n)` repeated `m_+` times, then the centre `N_z(x)`,
//! then `(n,1)` repeated `m_−` times, where `m_− = ⌊m/2⌋`, `m_+ = m − m_−`,
//! and `N_z(x) = (n^x, z)` for `x ≥ 0`, `(1^{−1−x}, z, 1)` for `x < 0`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Parameters of the template `T_z(m, x)` for bound `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TzParams {
    pub n: u64,
    pub z: u64,
    pub m: u64,
    pub x: i64,
}

impl TzParams {
    pub fn new(n: u64, z: u64, m: u64, x: i64) -> Result<Self> {
        if n == 0 || z == 0 || z > n {
            return Err(Error::domain(format!("need n ≥ 1 and 1 ≤ z ≤ n, got n={n}, z={z}")));
        }
        Ok(TzParams { n, z, m, x })
    }

    /// `2m + x + 1` for `x ≥ 0`, `2m − x + 1` otherwise.
    pub fn len(&self) -> u64 {
        2 * self.m + self.x.unsigned_abs() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `m(n+1) + nx + z` for `x ≥ 0`, `m(n+1) − x + z` otherwise.
    pub fn sum(&self) -> u64 {
        let wings = self.m * (self.n + 1) + self.z;
        if self.x >= 0 {
            wings + self.n * self.x as u64
        } else {
            wings + self.x.unsigned_abs()
        }
    }
}

/// The centre block `N_z(x)`.
pub fn build_n(n: u64, z: u64, x: i64) -> Result<Sequence> {
    TzParams::new(n, z, 0, x)?;
    let mut out = Vec::new();
    if x >= 0 {
        out.extend(std::iter::repeat_n(n, x as usize));
        out.push(z);
    } else {
        out.extend(std::iter::repeat_n(1, (-1 - x) as usize));
        out.push(z);
        out.push(1);
    }
    Sequence::new(out)
}

/// The full template `T_z(m, x)`.
pub fn build_t(params: &TzParams) -> Result<Sequence> {
    let centre = build_n(params.n, params.z, params.x)?;
    let m_minus = params.m / 2;
    let m_plus = params.m - m_minus;
    let mut out = Vec::with_capacity(params.len() as usize);
    for _ in 0..m_plus {
        out.extend_from_slice(&[1, params.n]);
    }
    out.extend_from_slice(&centre);
    for _ in 0..m_minus {
        out.extend_from_slice(&[params.n, 1]);
    }
    Ok(Sequence::from_positive(out))
}

/// Solution `(h_1, h_2, c, d)` of `c·h_1 + d·h_2 = S`, `c + d = t`,
/// `h_2 = h_1 + 1`, `d < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisionSplit {
    pub h1: u64,
    pub h2: u64,
    pub c: u64,
    pub d: u64,
}

pub fn solve_thm5(s: u64, t: u64) -> Result<DivisionSplit> {
    if !(2 <= t && t <= s) {
        return Err(Error::domain(format!("need 2 ≤ t ≤ S, got S={s}, t={t}")));
    }
    let h1 = s / t;
    let d = s % t;
    Ok(DivisionSplit { h1, h2: h1 + 1, c: t - d, d })
}

/// Solves the two-system problem for the minimal composition of `S` into
/// `t` parts bounded by `n`.
///
/// For `S = nt` the set has the single member `(n^t)`, described here as
/// `T_n(0, t−1)`.
pub fn solve_thm6(s: u64, t: u64, n: u64) -> Result<TzParams> {
    if n == 0 || !(2 <= t && t <= s && s <= n * t) {
        return Err(Error::domain(format!("need 2 ≤ t ≤ S ≤ nt and n ≥ 1, got S={s}, t={t}, n={n}")));
    }
    if s == n * t {
        return TzParams::new(n, n, 0, t as i64 - 1);
    }
    // S < nt forces n ≥ 2 here.
    let (s, t, n) = (s as i64, t as i64, n as i64);
    let r = s - t + 1;
    let z = (r - 1).rem_euclid(n - 1) + 1;
    let twice = 2 * (r - z);
    debug_assert_eq!(twice % (n - 1), 0);
    let x = twice / (n - 1) + 1 - t;
    let rest = t - x.abs() - 1;
    if rest < 0 || rest % 2 != 0 {
        return Err(Error::domain(format!("no admissible (m, x) for S={s}, t={t}, n={n}")));
    }
    let params = TzParams::new(n as u64, z as u64, (rest / 2) as u64, x)?;
    debug_assert_eq!(which_system(&params, s as u64, t as u64), Some(if x >= 0 { 1 } else { 2 }));
    Ok(params)
}

/// Which of the two systems `(m, x, z)` satisfies: 1 for the `x ≥ 0`
/// system, 2 for the `x < 0` one, `None` if neither.
pub fn which_system(p: &TzParams, s: u64, t: u64) -> Option<u8> {
    let (m, x, z, n) = (p.m as i64, p.x, p.z as i64, p.n as i64);
    let (s, t) = (s as i64, t as i64);
    let z_ok = 1 <= z && z < n;
    let first = m * (n + 1) + n * x + z == s && 2 * m + x + 1 == t && x >= 0 && z_ok;
    let second = m * (n + 1) - x + z == s && 2 * m - x + 1 == t && x < 0 && z_ok;
    match (first, second) {
        (true, false) => Some(1),
        (false, true) => Some(2),
        _ => None,
    }
}

/// `S_0 = (n+1)·{(S−1)/(n+1)} + 1` and `S_1 = n·{S/n}`.
pub fn s0_s1(s: u64, n: u64) -> Result<(u64, u64)> {
    if s == 0 || n == 0 {
        return Err(Error::domain("S and n must be positive"));
    }
    Ok(((s - 1) % (n + 1) + 1, s % n))
}

/// The residues `z ∈ {1, ..., n−1}` admitted for `U_n(S)`, by the
/// three-branch rule on `S_0`, `S_1`.
pub fn p_of_s(s: u64, n: u64) -> Result<BTreeSet<u64>> {
    if n < 2 {
        return Err(Error::domain(format!("need n ≥ 2, got {n}")));
    }
    let full: BTreeSet<u64> = (1..n).collect();
    if s + 1 >= n * n {
        return Ok(full);
    }
    let (s0, s1) = s0_s1(s, n)?;
    let picked: BTreeSet<u64> = if s0 <= s1 {
        (s0..=s1).collect()
    } else {
        (1..=s1).chain(s0..n).collect()
    };
    Ok(picked.intersection(&full).copied().collect())
}

/// `T_0 = (n+1)·{(T−1)/(n+1)}` and `T_1 = n·{T/n}` (fractional parts taken
/// toward −∞, so `T = 0` gives `T_0 = n`).
pub fn sylvester_t0_t1(t: u64, n: u64) -> (u64, u64) {
    let t0 = (t as i64 - 1).rem_euclid(n as i64 + 1) as u64;
    (t0, t % n)
}

/// `⌊T/n⌋ − ⌊(T−1)/(n+1)⌋`; equals 1 exactly for the representable
/// `T < n² − n − 1`, and 0 otherwise.
pub fn floor_difference(t: u64, n: u64) -> i64 {
    let (t, n) = (t as i64, n as i64);
    t.div_euclid(n) - (t - 1).div_euclid(n + 1)
}

/// Whether `T` is a sum of terms each equal to `n` or `n + 1`.
pub fn sylvester_representable(t: u64, n: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::domain(format!("need n ≥ 2, got {n}")));
    }
    let frobenius = n * n - n - 1;
    Ok(match t.cmp(&frobenius) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => false,
        std::cmp::Ordering::Less => {
            let (t0, t1) = sylvester_t0_t1(t, n);
            t1 <= t0
        }
    })
}

/// For `z ∈ P(S)`, the unique `(m, x)` with `m(n+1) + nx + z = S`,
/// `m ≥ 0`, `0 ≤ x ≤ n`. `None` when `m < 1`.
pub fn solve_thm7(s: u64, n: u64, z: u64) -> Result<Option<TzParams>> {
    if !p_of_s(s, n)?.contains(&z) {
        return Err(Error::domain(format!("z={z} is not an admissible residue for S={s}, n={n}")));
    }
    let (si, ni, zi) = (s as i64, n as i64, z as i64);
    let x = (zi - si).rem_euclid(ni + 1);
    let num = si - zi - ni * x;
    debug_assert_eq!(num.rem_euclid(ni + 1), 0);
    let m = num.div_euclid(ni + 1);
    if m < 1 {
        return Ok(None);
    }
    Ok(Some(TzParams::new(n, z, m as u64, x)?))
}
