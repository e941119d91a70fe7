//! Closed-form extremal arrangements over the constrained sequence sets.
//!
//! | family     | set                                   | extremum |
//! |------------|---------------------------------------|----------|
//! | `max-v`    | arrangements of a multiset, `a_1=h_1` | max      |
//! | `max-w`    | arrangements of a multiset            | max      |
//! | `min-w`    | arrangements of a multiset            | min      |
//! | `max-un`   | compositions of `S`                   | max      |
//! | `max-ust`  | compositions of `S` into `t` parts    | max      |
//! | `min-ustn` | the same with parts `≤ n`             | min      |
//! | `min-un`   | compositions of `S` with parts `≤ n`  | min      |

mod multiset;
mod solvers;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

pub use multiset::{MultisetSpec, SortedViews, SplitSpec};
pub use solvers::{
    build_n, build_t, floor_difference, p_of_s, s0_s1, solve_thm5, solve_thm6, solve_thm7,
    sylvester_representable, sylvester_t0_t1, which_system, DivisionSplit, TzParams,
};

use crate::continuant::continuant;
use crate::error::{Error, Result};
use crate::sequence::Sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    MaxV,
    MaxW,
    MinW,
    MaxUn,
    MaxUst,
    MinUstn,
    MinUn,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::MaxV => "max-v",
            Family::MaxW => "max-w",
            Family::MinW => "min-w",
            Family::MaxUn => "max-un",
            Family::MaxUst => "max-ust",
            Family::MinUstn => "min-ustn",
            Family::MinUn => "min-un",
        }
    }
}

/// One candidate of the residue minimisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub params: TzParams,
    pub witness: Sequence,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub value: BigUint,
}

/// Solver parameters behind a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Params {
    Sorted { multiset: MultisetSpec },
    Valley { multiset: MultisetSpec, split: SplitSpec },
    Zigzag { multiset: MultisetSpec },
    AllOnes { sum: u64 },
    Division { sum: u64, len: u64, split: DivisionSplit },
    Template { sum: u64, len: u64, tz: TzParams },
    MinOverResidues { sum: u64, bound: u64, candidates: Vec<Candidate>, minimizing_z: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub family: Family,
    pub params: Params,
    pub witness: Sequence,
    #[serde(serialize_with = "crate::serde_decimal::biguint")]
    pub value: BigUint,
    pub tie_witnesses: Vec<Sequence>,
}

impl ExtremalResult {
    fn new(family: Family, params: Params, witness: Sequence) -> Self {
        let value = continuant(&witness);
        ExtremalResult { family, params, witness, value, tie_witnesses: Vec::new() }
    }
}

/// Maximum over arrangements starting with the least value: the ascending
/// order.
pub fn max_v(ms: &MultisetSpec) -> ExtremalResult {
    let witness = Sequence::from_positive(ms.elements());
    ExtremalResult::new(Family::MaxV, Params::Sorted { multiset: ms.clone() }, witness)
}

/// Maximum over all arrangements: the valley with the alternating split.
pub fn max_w(ms: &MultisetSpec) -> ExtremalResult {
    let split = SplitSpec::alternating(ms);
    let witness = split.valley(ms);
    ExtremalResult::new(Family::MaxW, Params::Valley { multiset: ms.clone(), split }, witness)
}

/// Minimum over all arrangements: the zigzag of the sorted views.
pub fn min_w(ms: &MultisetSpec) -> ExtremalResult {
    let witness = SortedViews::new(ms).zigzag();
    ExtremalResult::new(Family::MinW, Params::Zigzag { multiset: ms.clone() }, witness)
}

/// Maximum over compositions of `S`: all ones, value `F_{S+1}`.
pub fn max_un(s: u64) -> Result<ExtremalResult> {
    if s == 0 {
        return Err(Error::domain("S must be positive"));
    }
    let witness = Sequence::from_positive(vec![1; s as usize]);
    Ok(ExtremalResult::new(Family::MaxUn, Params::AllOnes { sum: s }, witness))
}

/// Maximum over compositions of `S` into `t` parts:
/// `(h_2, h_1^c, h_2^{d−1})`, or `(h_1^t)` when `t | S`.
pub fn max_ust(s: u64, t: u64) -> Result<ExtremalResult> {
    let split = solve_thm5(s, t)?;
    let mut out = Vec::with_capacity(t as usize);
    if split.d == 0 {
        out.extend(std::iter::repeat_n(split.h1, t as usize));
    } else {
        out.push(split.h2);
        out.extend(std::iter::repeat_n(split.h1, split.c as usize));
        out.extend(std::iter::repeat_n(split.h2, split.d as usize - 1));
    }
    let witness = Sequence::new(out)?;
    Ok(ExtremalResult::new(Family::MaxUst, Params::Division { sum: s, len: t, split }, witness))
}

/// Minimum over compositions of `S` into `t` parts bounded by `n`.
///
/// The set is empty unless `t ≤ S ≤ nt`; that case is `Infeasible`.
pub fn min_ustn(s: u64, t: u64, n: u64) -> Result<ExtremalResult> {
    if n == 0 || t < 2 {
        return Err(Error::domain(format!("need t ≥ 2 and n ≥ 1, got t={t}, n={n}")));
    }
    if s < t || s > n.saturating_mul(t) {
        return Err(Error::Infeasible(format!("no composition of {s} into {t} parts bounded by {n}")));
    }
    let tz = solve_thm6(s, t, n)?;
    let witness = build_t(&tz)?;
    Ok(ExtremalResult::new(Family::MinUstn, Params::Template { sum: s, len: t, tz }, witness))
}

/// Minimum over compositions of `S` with parts bounded by `n`, as the least
/// template over the admissible residues with `m ≥ 1`. Ties keep the
/// smallest `z` as witness and list the rest.
pub fn min_un(s: u64, n: u64) -> Result<ExtremalResult> {
    if n < 2 || s < 2 * n + 2 {
        return Err(Error::domain(format!("need n ≥ 2 and S ≥ 2n+2, got S={s}, n={n}")));
    }
    let zs: Vec<u64> = p_of_s(s, n)?.into_iter().collect();
    let solved: Vec<Option<TzParams>> =
        zs.par_iter().map(|&z| solve_thm7(s, n, z)).collect::<Result<_>>()?;
    let candidates: Vec<Candidate> = solved
        .into_iter()
        .flatten()
        .map(|params| {
            let witness = build_t(&params)?;
            let value = continuant(&witness);
            Ok(Candidate { params, witness, value })
        })
        .collect::<Result<_>>()?;
    let best = candidates
        .iter()
        .map(|c| &c.value)
        .min()
        .cloned()
        .ok_or_else(|| Error::Infeasible(format!("no admissible residue with m ≥ 1 for S={s}, n={n}")))?;
    let winners: Vec<&Candidate> = candidates.iter().filter(|c| c.value == best).collect();
    let witness = winners[0].witness.clone();
    let tie_witnesses = winners[1..].iter().map(|c| c.witness.clone()).collect();
    let minimizing_z = winners.iter().map(|c| c.params.z).collect();
    Ok(ExtremalResult {
        family: Family::MinUn,
        params: Params::MinOverResidues { sum: s, bound: n, candidates, minimizing_z },
        witness,
        value: best,
        tie_witnesses,
    })
}
