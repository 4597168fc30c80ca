//! 2-adic complexity and the number theory around it.
//!
//! For a sequence of period `N` with `S(2) = sum s_i 2^i`, write
//! `S(2) / (2^N - 1) = e / f` in lowest terms; the 2-adic complexity is
//! `floor(log2(f + 1))` with `f = (2^N - 1) / gcd(2^N - 1, S(2))`.

mod congruence;
mod lemma2;
mod primality;
mod rational;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::seq::BinarySeq;
use crate::seqgen::YuGong;
use crate::{yu_gong_period, Error, Result};

pub use congruence::{
    crt_consistency, hu_identity, product_mod_small, st_product, t_at_inverse_two,
    verify_congruences, weighted_ac_sum, CongruenceRecord, CongruenceReport, CrtCheck,
    WeightedSum, MOD15_BY_K_MOD4,
};
pub use lemma2::{
    conjecture_gcd_direct, conjecture_gcd_reduced, conjecture_scan, lemma2_checks,
    prime_candidate, scan_prime_k, Clause, ConjectureRow, GcdRoute, Lemma2Report,
    DEFAULT_SIZE_CAP,
};
pub use primality::is_probable_prime;
pub use rational::{periodic_prefix, rational_approximation, two_adic_expansion, RationalApprox};

/// `2^bits - 1`.
pub fn mersenne(bits: u64) -> BigUint {
    (BigUint::one() << bits) - 1u32
}

/// `S(2)`: one period read as a little-endian integer.
pub fn s_of_two(seq: &BinarySeq) -> BigUint {
    BigUint::from_bytes_le(&seq.to_bytes())
}

/// `floor(log2(f + 1))`.
pub fn complexity_of_denominator(f: &BigUint) -> u64 {
    (f + 1u32).bits() - 1
}

/// Euclid with one reduction step up front; the library gcd is a binary gcd
/// and is slow when the operands differ wildly in size.
pub(crate) fn gcd_big(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    let r = big % small;
    if r.is_zero() {
        small.clone()
    } else {
        small.gcd(&r)
    }
}

#[derive(Clone, Debug)]
pub struct AdicReport {
    pub period: u64,
    pub s2: BigUint,
    /// `gcd(S(2), 2^N - 1)`
    pub gcd: BigUint,
    /// `(2^N - 1) / gcd`
    pub denominator: BigUint,
    pub phi2: u64,
    pub bound: Option<Bound>,
}

impl AdicReport {
    pub fn with_bound(mut self, bound: Bound) -> Self {
        self.bound = Some(bound);
        self
    }

    /// Whether the attached bound holds; `None` without a bound or when the
    /// bound makes no claim.
    pub fn meets_bound(&self) -> Option<bool> {
        self.bound.as_ref().and_then(|b| b.admits(self.phi2))
    }
}

pub fn two_adic_complexity(seq: &BinarySeq) -> AdicReport {
    let n = seq.period() as u64;
    let s2 = s_of_two(seq);
    let m = mersenne(n);
    let gcd = gcd_big(&s2, &m);
    let denominator = &m / &gcd;
    let phi2 = complexity_of_denominator(&denominator);
    AdicReport {
        period: n,
        s2,
        gcd,
        denominator,
        phi2,
        bound: None,
    }
}

/// [`two_adic_complexity`] with the lower bound for the sequence's `k` attached.
pub fn yu_gong_complexity(yg: &YuGong) -> Result<AdicReport> {
    Ok(two_adic_complexity(&yg.seq).with_bound(theorem3_bound(yg.k)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundCase {
    /// `k ≡ 0 (mod 4)` and `2^(2k-1) - 2^k + 1` prime: complexity equals `N`.
    PrimeZeroMod4,
    /// Even `k`: complexity exceeds `N - log2 N + 1`.
    EvenK,
    /// Odd `k`: complexity exceeds `N - 2 log2 N + 4`.
    OddK,
    /// `k = 1`; the tabulated value is recorded without a claim.
    OutOfTheorem,
}

impl BoundCase {
    pub fn label(self) -> &'static str {
        match self {
            BoundCase::PrimeZeroMod4 => "prime-k0",
            BoundCase::EvenK => "even-k",
            BoundCase::OddK => "odd-k",
            BoundCase::OutOfTheorem => "out-of-theorem",
        }
    }
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Tabulated bound for `k = 1`.
pub const K1_REPORTED_BOUND: u64 = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct Bound {
    pub k: u32,
    pub period: u64,
    pub case: BoundCase,
    /// Integer bound as tabulated: `N` in the prime case, otherwise the floor
    /// of the real threshold.
    pub reported: u64,
    /// Real-valued threshold (`N` in the prime case); `None` for `k = 1`.
    pub threshold: Option<f64>,
    /// Smallest integer complexity consistent with the claim.
    pub min_admissible: Option<u64>,
}

impl Bound {
    pub fn admits(&self, phi2: u64) -> Option<bool> {
        match self.case {
            BoundCase::PrimeZeroMod4 => Some(phi2 == self.period),
            BoundCase::EvenK | BoundCase::OddK => self.min_admissible.map(|m| phi2 >= m),
            BoundCase::OutOfTheorem => None,
        }
    }
}

/// Lower bound on the 2-adic complexity of the Yu-Gong sequence for `k`.
///
/// `N = 4(2^(2k) - 1)` is never a power of two, so
/// `floor(N - log2 N + 1) = N + 1 - ceil(log2 N) = N - 2k - 1`, and since
/// `0 < -2 log2(1 - 2^(-2k)) < 1`, `floor(N - 2 log2 N + 4) = N - 4k`.
/// Both thresholds are non-integral, so "strictly greater" means at least
/// one more than the floor.
pub fn theorem3_bound(k: u32) -> Result<Bound> {
    if !(1..=30).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "bound defined for 1 <= k <= 30, got {k}"
        )));
    }
    let n = yu_gong_period(k);
    if k == 1 {
        return Ok(Bound {
            k,
            period: n,
            case: BoundCase::OutOfTheorem,
            reported: K1_REPORTED_BOUND,
            threshold: None,
            min_admissible: None,
        });
    }
    let nf = n as f64;
    let log_n = nf.log2();
    let kk = u64::from(k);
    let bound = if k % 4 == 0 && is_probable_prime(&prime_candidate(k)) {
        Bound {
            k,
            period: n,
            case: BoundCase::PrimeZeroMod4,
            reported: n,
            threshold: Some(nf),
            min_admissible: Some(n),
        }
    } else if k % 2 == 0 {
        let reported = n - 2 * kk - 1;
        Bound {
            k,
            period: n,
            case: BoundCase::EvenK,
            reported,
            threshold: Some(nf - log_n + 1.0),
            min_admissible: Some(reported + 1),
        }
    } else {
        let reported = n - 4 * kk;
        Bound {
            k,
            period: n,
            case: BoundCase::OddK,
            reported,
            threshold: Some(nf - 2.0 * log_n + 4.0),
            min_admissible: Some(reported + 1),
        }
    };
    Ok(bound)
}
