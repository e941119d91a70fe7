//! Exact continuants, extremal constructions over constrained sets of
//! positive-integer sequences, and an exhaustive oracle that certifies them.
//!
//! The crate is organised bottom-up:
//!
//! * [`continuant`]: the recurrence, continued fractions, and the trivial
//!   (symmetry / unit extraction) normal form.
//! * [`reflect`]: middle-segment reversals, their sign test, and the
//!   monotone step-up / step-down algorithms built from them.
//! * [`extremal`]: closed-form maximisers and minimisers for multiset
//!   arrangements and bounded-sum compositions, with their integer solvers.
//! * [`bounds`]: the quadratic-surd sequences and certified interval
//!   evaluation of the growth bounds.
//! * [`oracle`]: exhaustive enumeration of every set family.
//! * [`cli`]: the command-line surface and the verification grids.

pub mod bounds;
pub mod cli;
pub mod continuant;
pub mod error;
pub mod extremal;
pub mod oracle;
pub mod rational;
pub mod reflect;
pub mod sequence;
pub(crate) mod serde_decimal;

pub use continuant::{
    cf_value, continuant, continuant_pair, split_identity_check, unit_extraction_normal_form,
    ContinuantPair,
};
pub use error::{Error, Result};
pub use rational::ExtRational;
pub use sequence::Sequence;
