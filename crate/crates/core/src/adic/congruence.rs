//! The congruence chain for `S(2) T(2^-1)` modulo `2^N - 1` and its factors.
//!
//! With `T(x) = sum (-1)^(s_i) x^i`, the product `S(2) T(2^-1)` is tied to the
//! autocorrelation profile by
//! `-2 S(x) T(x^-1) ≡ N + sum_(tau>=1) AC(tau) x^tau - T(x^-1) sum x^i (mod x^N - 1)`.
//! Every check below compares the directly computed product against a closed
//! form, each reduced to a canonical residue in `[0, m)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{gcd_big, mersenne, s_of_two};
use crate::correlate::{autocorrelation_at, AutocorrProfile};
use crate::seq::BinarySeq;
use crate::{yu_gong_period, Error, Result};

/// Residue of `S(2) T(2^-1)` modulo 15, indexed by `k mod 4`.
pub const MOD15_BY_K_MOD4: [u32; 4] = [13, 0, 10, 9];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceRecord {
    pub label: String,
    pub modulus: BigUint,
    pub expected: BigUint,
    pub actual: BigUint,
    pub pass: bool,
}

impl CongruenceRecord {
    /// Reduces both sides mod `modulus` and compares.
    pub fn new(label: impl Into<String>, modulus: BigUint, expected: &BigInt, actual: &BigInt) -> Self {
        let expected = residue(expected, &modulus);
        let actual = residue(actual, &modulus);
        CongruenceRecord {
            label: label.into(),
            pass: expected == actual,
            modulus,
            expected,
            actual,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CongruenceReport {
    pub k: u32,
    pub records: Vec<CongruenceRecord>,
}

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CongruenceRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn get(&self, label: &str) -> Option<&CongruenceRecord> {
        self.records.iter().find(|r| r.label == label)
    }
}

/// Canonical residue of a signed integer in `[0, m)`; `m = 0` means exact.
pub(crate) fn residue(x: &BigInt, m: &BigUint) -> BigUint {
    if m.is_zero() {
        return x.magnitude().clone();
    }
    let m = BigInt::from_biguint(Sign::Plus, m.clone());
    x.mod_floor(&m).to_biguint().expect("mod_floor is nonnegative")
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn signed(x: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x.clone())
}

/// `T(2^-1) mod 2^N - 1`, evaluated as `sum (-1)^(s_i) 2^((N - i) mod N)`.
pub fn t_at_inverse_two(seq: &BinarySeq) -> BigUint {
    let n = seq.period();
    let bytes = n.div_ceil(8);
    let mut plus = vec![0u8; bytes];
    let mut minus = vec![0u8; bytes];
    for i in 0..n {
        let e = (n - i) % n;
        let target = if seq.get(i) { &mut minus } else { &mut plus };
        target[e / 8] |= 1 << (e % 8);
    }
    let m = mersenne(n as u64);
    let plus = BigUint::from_bytes_le(&plus);
    let minus = BigUint::from_bytes_le(&minus);
    // both parts are below 2^N, so one correction suffices
    (plus + &m - minus) % &m
}

/// `S(2) T(2^-1) mod 2^N - 1`.
pub fn st_product(seq: &BinarySeq) -> BigUint {
    let m = mersenne(seq.period() as u64);
    (s_of_two(seq) % &m) * t_at_inverse_two(seq) % &m
}

/// `S(2) T(2^-1) mod m` for a small odd `m` dividing `2^N - 1`, without big
/// integers.
pub fn product_mod_small(seq: &BinarySeq, m: u64) -> Result<u64> {
    let n = seq.period() as u64;
    if m == 0 || m % 2 == 0 || crate::gf2k::pow_mod(2, n, m) != 1 % m {
        return Err(Error::InvalidParameter(format!(
            "{m} is not an odd divisor of 2^{n} - 1"
        )));
    }
    let m128 = u128::from(m);
    let inv2 = u128::from((m + 1) / 2);
    let (mut s, mut t) = (0u128, 0u128);
    let (mut up, mut down) = (1u128, 1u128);
    for i in 0..seq.period() {
        if seq.get(i) {
            s = (s + up) % m128;
            t = (t + m128 - down) % m128;
        } else {
            t = (t + down) % m128;
        }
        up = up * 2 % m128;
        down = down * inv2 % m128;
    }
    Ok((s * t % m128) as u64)
}

/// Moduli used by the chain for parameter `k`.
struct Moduli {
    k: u32,
    /// `N = 4(2^(2k) - 1)`
    n: u64,
    /// `L = 4(2^k + 1)`
    l: u64,
    full: BigUint,
    block: BigUint,
    cofactor: BigUint,
    fermat_fifth: BigUint,
    plus: BigUint,
    minus: BigUint,
}

impl Moduli {
    fn new(k: u32) -> Self {
        let n = yu_gong_period(k);
        let l = 4 * ((1u64 << k) + 1);
        let full = mersenne(n);
        let block = mersenne(l);
        let cofactor = &full / &block;
        let half = (1u64 << k) + 1;
        let fermat_fifth = ((BigUint::one() << (2 * half)) + 1u32) / 5u32;
        let plus = (BigUint::one() << half) + 1u32;
        let minus = mersenne(half);
        Moduli {
            k,
            n,
            l,
            full,
            block,
            cofactor,
            fermat_fifth,
            plus,
            minus,
        }
    }

    /// `(2^L - 1)/5 + 2^(2^k) + 2^(3*2^k + 2) - c`, the bracket shared by the
    /// closed forms (`c = 2^L` modulo `2^N - 1`, `c = 1` modulo `2^L - 1`).
    fn bracket(&self, c: &BigInt) -> BigInt {
        let two_k = 1u64 << self.k;
        signed(&self.block) / 5u32 + pow2(two_k) + pow2(3 * two_k + 2) - c
    }
}

/// `sum_(tau=1)^(4(2^k+1)) AC(tau) 2^tau`, measured and in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSum {
    pub direct: BigInt,
    pub closed_form: BigInt,
}

impl WeightedSum {
    pub fn agree(&self) -> bool {
        self.direct == self.closed_form
    }
}

fn closed_weighted_sum(k: u32) -> BigInt {
    let l = 4 * ((1u64 << k) + 1);
    let two_k = 1u64 << k;
    let inner: BigInt =
        BigInt::from(3) * (pow2(l) - 1u32) / 15u32 + pow2(two_k) + pow2(3 * two_k + 2) - pow2(l);
    inner * 8u32
}

fn direct_weighted_sum(values: impl IntoIterator<Item = (u64, i64)>) -> BigInt {
    values
        .into_iter()
        .map(|(tau, ac)| BigInt::from(ac) << tau)
        .sum()
}

/// Weighted sum of the first `4(2^k + 1)` autocorrelation values.
pub fn weighted_ac_sum(k: u32, profile: &AutocorrProfile) -> Result<WeightedSum> {
    let n = yu_gong_period(k);
    if profile.period() as u64 != n {
        return Err(Error::LengthMismatch {
            what: "profile period",
            expected: n,
            actual: profile.period() as u64,
        });
    }
    let l = 4 * ((1u64 << k) + 1);
    Ok(WeightedSum {
        direct: direct_weighted_sum((1..=l).map(|tau| (tau, profile.value(tau as usize)))),
        closed_form: closed_weighted_sum(k),
    })
}

/// Checks the full chain for the Yu-Gong sequence of parameter `k`.
///
/// Labels: `Key-equation` (the reduction to one autocorrelation block, using
/// the measured values), `Key-3` (its closed form), `Key-7` (mod 15),
/// `Key-4` (mod the cofactor `(2^N-1)/(2^L-1)`), `Key-5` (mod `2^L - 1`),
/// `Key-8`, `Key-9`, `Key-10` (mod the factors `(2^(2(2^k+1))+1)/5`,
/// `2^(2^k+1)+1`, `2^(2^k+1)-1`).
pub fn verify_congruences(seq: &BinarySeq, k: u32) -> Result<CongruenceReport> {
    if !(1..=crate::seqgen::MAX_K).contains(&k) {
        return Err(Error::InvalidParameter(format!("k = {k} out of range")));
    }
    let n = yu_gong_period(k);
    if seq.period() as u64 != n {
        return Err(Error::LengthMismatch {
            what: "Yu-Gong period 4(2^(2k)-1)",
            expected: n,
            actual: seq.period() as u64,
        });
    }
    let m = Moduli::new(k);
    let product = signed(&st_product(seq));
    let kk = u64::from(k);

    let taus: Vec<usize> = (1..=m.l as usize).collect();
    let measured = autocorrelation_at(seq, &taus);
    let w = direct_weighted_sum((1..=m.l).zip(measured.iter().copied()));
    // every term carries a factor 2^tau with tau >= 1
    let half_w: BigInt = w / 2u32;
    let key_equation = -(signed(&m.cofactor) * half_w) - pow2(2 * kk + 1);

    let cof = signed(&m.cofactor);
    let key3: BigInt = -(cof * m.bracket(&pow2(m.l)) + pow2(2 * kk - 1)) * 4u32;
    let key7 = BigInt::from(MOD15_BY_K_MOD4[(k % 4) as usize]);
    let key4 = -pow2(2 * kk + 1);
    let key5: BigInt =
        -(BigInt::from((1u64 << k) - 1) * m.bracket(&BigInt::one()) + pow2(2 * kk - 1)) * 4u32;
    let key8: BigInt = -(pow2(2 * kk - 1) - pow2(kk) + 1u32) * 4u32;
    let key9: BigInt = -(pow2(kk - 1) - 1u32).pow(2) * 8u32;
    let key10 = -pow2(2 * kk + 1);

    let records = vec![
        CongruenceRecord::new("Key-equation", m.full.clone(), &key_equation, &product),
        CongruenceRecord::new("Key-3", m.full.clone(), &key3, &product),
        CongruenceRecord::new("Key-7", BigUint::from(15u32), &key7, &product),
        CongruenceRecord::new("Key-4", m.cofactor.clone(), &key4, &product),
        CongruenceRecord::new("Key-5", m.block.clone(), &key5, &product),
        CongruenceRecord::new("Key-8", m.fermat_fifth.clone(), &key8, &product),
        CongruenceRecord::new("Key-9", m.plus.clone(), &key9, &product),
        CongruenceRecord::new("Key-10", m.minus.clone(), &key10, &product),
    ];
    debug_assert_eq!(m.n, n);
    Ok(CongruenceReport { k, records })
}

/// Checks `S(2) T(2^-1) ≡ -(N + sum_(tau>=1) AC(tau) 2^tau) / 2 (mod 2^N - 1)`
/// for any sequence against its measured profile.
pub fn hu_identity(seq: &BinarySeq, profile: &AutocorrProfile) -> Result<CongruenceRecord> {
    let n = seq.period();
    if profile.period() != n {
        return Err(Error::LengthMismatch {
            what: "profile period",
            expected: n as u64,
            actual: profile.period() as u64,
        });
    }
    let m = mersenne(n as u64);
    let weighted = direct_weighted_sum((1..n as u64).map(|tau| (tau, profile.value(tau as usize))));
    // 2^-1 ≡ 2^(N-1)
    let rhs = -(BigInt::from(n) + weighted) * pow2(n as u64 - 1);
    Ok(CongruenceRecord::new(
        "Hu-identity",
        m,
        &rhs,
        &signed(&st_product(seq)),
    ))
}

/// Residues of a value modulo `5`, `(2^(2(2^k+1))+1)/5`, `2^(2^k+1)+1` and
/// `2^(2^k+1)-1`, recombined by CRT and compared with the direct residue.
#[derive(Clone, Debug)]
pub struct CrtCheck {
    pub moduli: Vec<BigUint>,
    pub residues: Vec<BigUint>,
    /// Least common multiple of the moduli; equals `2^L - 1` exactly when
    /// they are pairwise coprime.
    pub lcm: BigUint,
    pub pairwise_coprime: bool,
    pub recombined: BigUint,
    pub direct: BigUint,
}

impl CrtCheck {
    pub fn consistent(&self) -> bool {
        self.recombined == &self.direct % &self.lcm
    }
}

/// Generalised CRT for two congruences; `None` if they are incompatible.
fn crt_pair(a1: &BigInt, m1: &BigInt, a2: &BigInt, m2: &BigInt) -> Option<(BigInt, BigInt)> {
    let eg = m1.extended_gcd(m2);
    let g = eg.gcd;
    let diff = a2 - a1;
    if !(&diff % &g).is_zero() {
        return None;
    }
    let lcm = m1 / &g * m2;
    let step = m2 / &g;
    let t = (diff / &g * eg.x).mod_floor(&step);
    Some(((a1 + m1 * t).mod_floor(&lcm), lcm))
}

pub fn crt_consistency(value: &BigUint, k: u32) -> CrtCheck {
    let m = Moduli::new(k);
    let moduli = vec![BigUint::from(5u32), m.fermat_fifth.clone(), m.plus.clone(), m.minus.clone()];
    let residues: Vec<BigUint> = moduli.iter().map(|q| value % q).collect();
    let pairwise_coprime = (0..moduli.len())
        .all(|i| (i + 1..moduli.len()).all(|j| gcd_big(&moduli[i], &moduli[j]).is_one()));

    let mut acc = (BigInt::zero(), BigInt::one());
    let mut ok = true;
    for (r, q) in residues.iter().zip(&moduli) {
        match crt_pair(&acc.0, &acc.1, &signed(r), &signed(q)) {
            Some(next) => acc = next,
            None => {
                ok = false;
                break;
            }
        }
    }
    let lcm = acc.1.magnitude().clone();
    let recombined = if ok {
        acc.0.magnitude().clone()
    } else {
        // incompatible residues cannot come from one integer
        lcm.clone() + 1u32
    };
    CrtCheck {
        moduli,
        residues,
        lcm,
        pairwise_coprime,
        recombined,
        direct: value % &m.block,
    }
}
