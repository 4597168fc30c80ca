//! Yu-Gong interleaved binary sequences: construction from finite-field
//! primitives, periodic autocorrelation, and exact 2-adic complexity.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2k`] — binary extension fields with exp/log tables and trace maps.
//! * [`seq`] — bit-packed periodic sequences and shift sequences.
//! * [`seqgen`] — m-sequences, their interleaved decomposition, the shift
//!   matrix and the Yu-Gong construction itself.
//! * [`correlate`] — autocorrelation profiles (naive and packed), optimality
//!   classes and the four-valued autocorrelation predictor.
//! * [`adic`] — 2-adic complexity, the lower bound, the congruence chain,
//!   gcd facts, prime scans and a rational approximation oracle.
//! * [`tables`] — published autocorrelation and complexity tables as fixtures.
//! * [`report`] — the versioned check-record format shared by the CLI.

pub mod adic;
pub mod correlate;
mod error;
pub mod gf2k;
pub mod report;
pub mod seq;
pub mod seqgen;
pub mod tables;

pub use adic::{two_adic_complexity, AdicReport, Bound, BoundCase};
pub use correlate::{full_profile, AutocorrProfile, Optimality, TauClass};
pub use error::{Error, Result};
pub use gf2k::{FieldContext, FieldElem};
pub use seq::{BinarySeq, InterleaveSpec, Shift, ShiftSeq};
pub use seqgen::{yu_gong, Delta, YuGong};

/// Period `4(2^(2k) - 1)` of the Yu-Gong sequence with parameter `k`.
pub fn yu_gong_period(k: u32) -> u64 {
    4 * ((1u64 << (2 * k)) - 1)
}
