//! Periodic autocorrelation of binary sequences.
//!
//! `AC(tau) = sum_t (-1)^(s_t + s_(t+tau)) = N - 2 * wt(s xor L^tau s)`.
//! The packed path forms each rotation from a doubled copy of the sequence
//! realigned once per bit offset `tau mod 64`, so every phase shift costs
//! `ceil(N/64)` XOR + popcount steps.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::gf2k::FieldContext;
use crate::seq::BinarySeq;
use crate::seqgen::{yu_gong, Delta};
use crate::{yu_gong_period, Error, Result};

/// `AC(tau)` for `tau = 0..N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutocorrProfile {
    values: Vec<i64>,
}

impl AutocorrProfile {
    pub fn from_values(values: Vec<i64>) -> Result<Self> {
        match values.first() {
            Some(&peak) if peak == values.len() as i64 => Ok(AutocorrProfile { values }),
            _ => Err(Error::InvalidParameter(
                "profile must start with AC(0) = N".into(),
            )),
        }
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, tau: usize) -> i64 {
        self.values[tau % self.values.len()]
    }

    pub fn off_peak(&self) -> &[i64] {
        &self.values[1..]
    }

    pub fn off_peak_set(&self) -> BTreeSet<i64> {
        self.off_peak().iter().copied().collect()
    }

    pub fn classify(&self) -> Optimality {
        classify_optimality(self)
    }

    /// `tau,ac` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tau,ac\n");
        for (tau, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{tau},{v}\n"));
        }
        out
    }
}

/// Autocorrelation classes for period `N`, keyed on the off-peak value set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Optimality {
    /// `N ≡ 0 (mod 4)`, off-peak values in `{0}`.
    Perfect,
    /// `N ≡ 0 (mod 4)`, off-peak values in `{0, -4}` or `{0, 4}`.
    OptimalValue,
    /// `N ≡ 0 (mod 4)`, off-peak values in `{0, 4, -4}`.
    OptimalMagnitude,
    /// `N ≡ 1 (mod 4)`, off-peak values in `{1, -3}`.
    OptimalOneMod4,
    /// `N ≡ 2 (mod 4)`, off-peak values in `{2, -2}`.
    OptimalTwoMod4,
    /// `N ≡ 3 (mod 4)`, off-peak values all `-1`.
    IdealTwoLevel,
    None,
}

impl Optimality {
    pub fn label(self) -> &'static str {
        match self {
            Optimality::Perfect => "perfect",
            Optimality::OptimalValue => "optimal-value-n0",
            Optimality::OptimalMagnitude => "optimal-magnitude",
            Optimality::OptimalOneMod4 => "optimal-n1",
            Optimality::OptimalTwoMod4 => "optimal-n2",
            Optimality::IdealTwoLevel => "ideal-two-level",
            Optimality::None => "none",
        }
    }
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_optimality(profile: &AutocorrProfile) -> Optimality {
    let set = profile.off_peak_set();
    let within = |allowed: &[i64]| set.iter().all(|v| allowed.contains(v));
    match profile.period() % 4 {
        0 if within(&[0]) => Optimality::Perfect,
        0 if within(&[0, -4]) || within(&[0, 4]) => Optimality::OptimalValue,
        0 if within(&[0, 4, -4]) => Optimality::OptimalMagnitude,
        1 if within(&[1, -3]) => Optimality::OptimalOneMod4,
        2 if within(&[2, -2]) => Optimality::OptimalTwoMod4,
        3 if within(&[-1]) => Optimality::IdealTwoLevel,
        _ => Optimality::None,
    }
}

/// Index-by-index evaluation of `AC(tau)`; `tau` is reduced mod `N`.
pub fn autocorrelation(seq: &BinarySeq, tau: usize) -> i64 {
    let n = seq.period();
    (0..n)
        .map(|t| if seq.get(t) == seq.get(t + tau) { 1 } else { -1 })
        .sum()
}

pub fn naive_profile(seq: &BinarySeq) -> AutocorrProfile {
    AutocorrProfile {
        values: (0..seq.period()).map(|tau| autocorrelation(seq, tau)).collect(),
    }
}

/// Word-aligned rotations of one sequence.
struct Rotations<'a> {
    seq: &'a BinarySeq,
    words: usize,
    tail_mask: u64,
    /// The sequence repeated periodically over `2 * words + 2` words.
    repeated: Vec<u64>,
}

impl<'a> Rotations<'a> {
    fn new(seq: &'a BinarySeq) -> Self {
        let n = seq.period();
        let tail = n % 64;
        let words = n.div_ceil(64);
        let mut repeated = vec![0u64; 2 * words + 2];
        for t in 0..repeated.len() * 64 {
            if seq.get(t % n) {
                repeated[t / 64] |= 1 << (t % 64);
            }
        }
        Rotations {
            seq,
            words,
            tail_mask: if tail == 0 { !0 } else { (1u64 << tail) - 1 },
            repeated,
        }
    }

    /// `out[q]` holds bits `64q + r .. 64q + r + 64` of `s || s || ...`.
    fn aligned(&self, r: usize) -> Vec<u64> {
        let src = &self.repeated;
        (0..src.len() - 1)
            .map(|q| {
                if r == 0 {
                    src[q]
                } else {
                    (src[q] >> r) | (src[q + 1] << (64 - r))
                }
            })
            .collect()
    }

    fn distance(&self, rotated: &[u64]) -> u64 {
        let base = self.seq.words();
        let last = self.words - 1;
        let mut d: u64 = base[..last]
            .iter()
            .zip(&rotated[..last])
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum();
        d += u64::from(((base[last] ^ rotated[last]) & self.tail_mask).count_ones());
        d
    }
}

/// `AC(tau)` through the packed path.
pub fn autocorrelation_packed(seq: &BinarySeq, tau: usize) -> i64 {
    let n = seq.period();
    let tau = tau % n;
    let rot = Rotations::new(seq);
    let aligned = rot.aligned(tau % 64);
    let q = tau / 64;
    let d = rot.distance(&aligned[q..q + rot.words]);
    n as i64 - 2 * d as i64
}

/// Packed autocorrelation at each listed phase shift.
pub fn autocorrelation_at(seq: &BinarySeq, taus: &[usize]) -> Vec<i64> {
    let n = seq.period();
    let rot = Rotations::new(seq);
    let mut by_offset: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 64];
    for (slot, &tau) in taus.iter().enumerate() {
        let tau = tau % n;
        by_offset[tau % 64].push((slot, tau));
    }
    let mut out = vec![0i64; taus.len()];
    for (r, group) in by_offset.iter().enumerate() {
        if group.is_empty() {
            continue;
        }
        let aligned = rot.aligned(r);
        for &(slot, tau) in group {
            let q = tau / 64;
            let d = rot.distance(&aligned[q..q + rot.words]);
            out[slot] = n as i64 - 2 * d as i64;
        }
    }
    out
}

/// Full profile via the packed path, spread over the current rayon pool.
///
/// Work is split by bit offset `tau mod 64`; each task writes a disjoint set of
/// slots, so the result does not depend on the number of workers.
pub fn full_profile(seq: &BinarySeq) -> AutocorrProfile {
    let n = seq.period();
    let rot = Rotations::new(seq);
    let parts: Vec<Vec<(usize, i64)>> = (0..64.min(n))
        .into_par_iter()
        .map(|r| {
            let aligned = rot.aligned(r);
            (r..n)
                .step_by(64)
                .map(|tau| {
                    let q = tau / 64;
                    let d = rot.distance(&aligned[q..q + rot.words]);
                    (tau, n as i64 - 2 * d as i64)
                })
                .collect()
        })
        .collect();
    let mut values = vec![0i64; n];
    for (tau, v) in parts.into_iter().flatten() {
        values[tau] = v;
    }
    AutocorrProfile { values }
}

/// [`full_profile`] on a dedicated pool of `workers` threads.
pub fn full_profile_with_workers(seq: &BinarySeq, workers: usize) -> AutocorrProfile {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
    {
        Ok(pool) => pool.install(|| full_profile(seq)),
        Err(_) => full_profile(seq),
    }
}

/// The residue triple of a phase shift and the autocorrelation value the
/// four-valued law assigns to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauClass {
    pub tau: u64,
    /// `tau mod (2^(2k) - 1)`
    pub x: u64,
    /// `tau mod (2^k + 1)`
    pub y: u64,
    /// `tau mod 4`
    pub v: u64,
    pub predicted: i64,
}

/// Predicts `AC(tau)` of the Yu-Gong sequence with parameter `k` from
/// `(x, y, v)`. All seven cases are evaluated and exactly one must fire.
pub fn predict_yu_gong(tau: u64, k: u32) -> Result<TauClass> {
    if !(2..=31).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "the four-valued law needs k >= 2, got {k}"
        )));
    }
    let n = yu_gong_period(k);
    if tau == 0 || tau >= n {
        return Err(Error::TauOutOfRange { tau, period: n });
    }
    let x = tau % ((1u64 << (2 * k)) - 1);
    let y = tau % ((1u64 << k) + 1);
    let v = tau % 4;
    let (sigma, psi) = (x != 0, y != 0);

    let cases: [(bool, i64); 7] = [
        (x == 0, 0),
        (sigma && y == 0 && v != 0, 0),
        (psi && v == 2, 0),
        (sigma && y == 0 && v == 0, -4),
        (psi && v == 1, -4),
        (psi && v == 3, -4),
        (psi && v == 0, 4),
    ];
    let mut hits = cases.iter().filter(|(fires, _)| *fires);
    match (hits.next(), hits.next()) {
        (Some(&(_, predicted)), None) => Ok(TauClass {
            tau,
            x,
            y,
            v,
            predicted,
        }),
        _ => Err(Error::CaseSplit {
            tau,
            matched: cases.iter().filter(|(f, _)| *f).count(),
        }),
    }
}

pub const REGULAR_BLOCK: [i64; 4] = [-4, 0, -4, 4];

/// Expected block `S_j` (1-based) of `AC(1..=4(2^k+1))` for `k >= 2`.
pub fn expected_block(k: u32, j: u64) -> [i64; 4] {
    let quarter = 1u64 << (k - 2);
    if j == quarter + 1 {
        [0, 0, -4, 4]
    } else if j == 3 * quarter + 1 {
        [-4, 0, 0, 4]
    } else if j == (1u64 << k) + 1 {
        [-4, 0, -4, -4]
    } else {
        REGULAR_BLOCK
    }
}

/// Measured blocks `S_1 ..= S_(2^k+1)`.
pub fn blocks(profile: &AutocorrProfile, k: u32) -> Vec<[i64; 4]> {
    let count = (1usize << k) + 1;
    (0..count)
        .map(|j| std::array::from_fn(|i| profile.value(4 * j + i + 1)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub tau: u64,
    pub predicted: i64,
    pub measured: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMismatch {
    pub j: u64,
    pub expected: [i64; 4],
    pub measured: [i64; 4],
}

/// Number of regular blocks `{-4,0,-4,4}` in one run of consecutive blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCount {
    pub first: u64,
    pub last: u64,
    pub expected: u64,
    pub measured: u64,
}

#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub k: u32,
    pub delta: Delta,
    pub modulus: u64,
    pub period: u64,
    pub values_in_range: bool,
    pub mismatches: Vec<Mismatch>,
    pub periodicity_failures: Vec<u64>,
    pub block_mismatches: Vec<BlockMismatch>,
    pub families: Vec<FamilyCount>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.values_in_range
            && self.mismatches.is_empty()
            && self.periodicity_failures.is_empty()
            && self.block_mismatches.is_empty()
            && self.families.iter().all(|f| f.expected == f.measured)
    }
}

/// Compares a measured Yu-Gong profile against the four-valued law, the
/// `4(2^k+1)` periodicity and the block structure.
pub fn check_profile(k: u32, profile: &AutocorrProfile) -> Result<Theorem1Report> {
    let n = yu_gong_period(k);
    if profile.period() as u64 != n {
        return Err(Error::LengthMismatch {
            what: "profile period",
            expected: n,
            actual: profile.period() as u64,
        });
    }
    let ni = n as i64;
    let values_in_range = profile
        .values()
        .iter()
        .all(|v| [ni, 0, 4, -4].contains(v));

    let mut mismatches = Vec::new();
    for tau in 1..n {
        let class = predict_yu_gong(tau, k)?;
        let measured = profile.value(tau as usize);
        if class.predicted != measured {
            mismatches.push(Mismatch {
                tau,
                predicted: class.predicted,
                measured,
            });
        }
    }

    let block_len = 4 * ((1u64 << k) + 1);
    let periodicity_failures = (1..n)
        .filter(|&tau| {
            let r = tau % block_len;
            let reference = if r == 0 { block_len } else { r };
            profile.value(tau as usize) != profile.value(reference as usize)
        })
        .collect();

    let measured = blocks(profile, k);
    let block_mismatches = measured
        .iter()
        .enumerate()
        .filter_map(|(idx, m)| {
            let j = idx as u64 + 1;
            let expected = expected_block(k, j);
            (expected != *m).then_some(BlockMismatch {
                j,
                expected,
                measured: *m,
            })
        })
        .collect();

    let quarter = 1u64 << (k - 2);
    let count_regular = |first: u64, last: u64| {
        (first..=last)
            .filter(|&j| measured[(j - 1) as usize] == REGULAR_BLOCK)
            .count() as u64
    };
    let families = [
        (1, quarter, quarter),
        (quarter + 2, 3 * quarter, 2 * quarter - 1),
        (3 * quarter + 2, 1u64 << k, quarter - 1),
    ]
    .into_iter()
    .map(|(first, last, expected)| FamilyCount {
        first,
        last,
        expected,
        measured: if first > last { 0 } else { count_regular(first, last) },
    })
    .collect();

    Ok(Theorem1Report {
        k,
        delta: Delta::Plus,
        modulus: 0,
        period: n,
        values_in_range,
        mismatches,
        periodicity_failures,
        block_mismatches,
        families,
    })
}

/// Generates the Yu-Gong sequence over `ctx` and checks its full profile.
pub fn verify_theorem1(k: u32, delta: Delta, ctx: &FieldContext) -> Result<Theorem1Report> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "the four-valued law needs k >= 2, got {k}"
        )));
    }
    let yg = yu_gong(k, delta, Some(ctx))?;
    let profile = full_profile(&yg.seq);
    let mut report = check_profile(k, &profile)?;
    report.delta = delta;
    report.modulus = yg.modulus;
    Ok(report)
}

/// Quadruples joined by `,`, each terminated by `;`.
pub fn format_grouped(values: &[i64]) -> String {
    values
        .chunks(4)
        .map(|c| {
            let mut s = c.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            s.push(';');
            s
        })
        .collect()
}

/// Inverse of [`format_grouped`]; whitespace is ignored.
pub fn parse_grouped(text: &str) -> Result<Vec<i64>> {
    text.split([',', ';'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

/// One printed row of a grouped table: `tau` from `first` to `last` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupedRow {
    pub first: u64,
    pub last: u64,
    pub text: String,
}

/// Splits `AC(1..N)` into rows of `4(2^k+1)` values in the grouped format.
pub fn grouped_rows(profile: &AutocorrProfile, k: u32) -> Vec<GroupedRow> {
    let row = 4 * ((1usize << k) + 1);
    profile
        .off_peak()
        .chunks(row)
        .enumerate()
        .map(|(i, chunk)| GroupedRow {
            first: (i * row + 1) as u64,
            last: (i * row + chunk.len()) as u64,
            text: format_grouped(chunk),
        })
        .collect()
}
