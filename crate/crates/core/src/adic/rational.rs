//! Rational approximation of a 2-adic bit prefix (FCSR synthesis).
//!
//! Finds the rational `p/q`, `q` odd, of least height `max(|p|, |q|)` whose
//! 2-adic expansion starts with the given bits, by the Klapper-Goresky
//! lattice iteration over pairs `(g1, g2)` with `A·g2 ≡ g1 (mod 2^t)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::seq::BinarySeq;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalApprox {
    pub p: BigInt,
    /// Odd and positive; `p/q` is in lowest terms.
    pub q: BigInt,
    pub matched_bits: usize,
}

impl RationalApprox {
    /// `floor(log2(q + 1))`.
    pub fn complexity(&self) -> u64 {
        (&self.q + 1u32).bits() - 1
    }
}

type Pair = (BigInt, BigInt);

fn height(h: &Pair) -> BigInt {
    h.0.abs().max(h.1.abs())
}

fn combine(f: &Pair, d: &BigInt, g: &Pair) -> Pair {
    (&f.0 + d * &g.0, &f.1 + d * &g.1)
}

/// Largest odd integer `<= num/den`.
fn odd_floor(num: &BigInt, den: &BigInt) -> BigInt {
    let fl = num.div_floor(den);
    if fl.is_odd() {
        fl
    } else {
        fl - 1
    }
}

/// The odd `d` minimising `height(f + d g)`.
///
/// The height is piecewise linear and convex in `d`, with breakpoints where
/// one of `f1 + d g1`, `f2 + d g2`, `(f1 ± f2) + d (g1 ± g2)` vanishes, so the
/// odd minimiser sits next to one of them. Ties go to the smallest `|d|`.
fn best_odd_multiplier(f: &Pair, g: &Pair) -> BigInt {
    let mut candidates = vec![BigInt::one(), -BigInt::one()];
    let lines = [
        (f.0.clone(), g.0.clone()),
        (f.1.clone(), g.1.clone()),
        (&f.0 - &f.1, &g.0 - &g.1),
        (&f.0 + &f.1, &g.0 + &g.1),
    ];
    for (a, b) in lines {
        if !b.is_zero() {
            let o = odd_floor(&-a, &b);
            candidates.push(&o + 2);
            candidates.push(o);
        }
    }
    candidates.sort_by(|x, y| x.abs().cmp(&y.abs()).then(x.cmp(y)));
    candidates
        .into_iter()
        .min_by(|x, y| height(&combine(f, x, g)).cmp(&height(&combine(f, y, g))))
        .expect("nonempty")
}

/// Least-height rational whose 2-adic expansion begins with `bits`.
pub fn rational_approximation(bits: &[bool]) -> Result<RationalApprox> {
    if bits.len() < 2 {
        return Err(Error::InvalidParameter(
            "rational approximation needs at least 2 bits".into(),
        ));
    }
    let Some(first) = bits.iter().position(|&b| b) else {
        return Ok(RationalApprox {
            p: BigInt::zero(),
            q: BigInt::one(),
            matched_bits: bits.len(),
        });
    };
    let mut f: Pair = (BigInt::zero(), BigInt::from(2));
    let mut g: Pair = (BigInt::one() << first, BigInt::one());
    let mut a = BigInt::one() << first;
    for (t, &bit) in bits.iter().enumerate().skip(first + 1) {
        if bit {
            a.set_bit(t as u64, true);
        }
        let modulus = BigInt::one() << (t + 1);
        if (&a * &g.1 - &g.0).mod_floor(&modulus).is_zero() {
            f = (&f.0 * 2, &f.1 * 2);
        } else if height(&g) < height(&f) {
            let d = best_odd_multiplier(&f, &g);
            let next = combine(&f, &d, &g);
            f = (&g.0 * 2, &g.1 * 2);
            g = next;
        } else {
            let d = best_odd_multiplier(&g, &f);
            g = combine(&g, &d, &f);
            f = (&f.0 * 2, &f.1 * 2);
        }
    }
    let common = g.0.gcd(&g.1);
    let (mut p, mut q) = (g.0 / &common, g.1 / &common);
    if q.is_negative() {
        p = -p;
        q = -q;
    }
    let expansion = two_adic_expansion(&p, &q, bits.len())?;
    let matched_bits = expansion.iter().zip(bits).take_while(|(x, y)| x == y).count();
    Ok(RationalApprox { p, q, matched_bits })
}

/// Inverse of odd `q` modulo `2^bits` by Newton iteration.
fn inverse_pow2(q: &BigInt, bits: usize) -> BigInt {
    let modulus = BigInt::one() << bits;
    let mut x = BigInt::one();
    let mut precision = 1;
    while precision < bits {
        precision = (2 * precision).min(bits);
        let m = BigInt::one() << precision;
        x = (&x * (BigInt::from(2) - q * &x)).mod_floor(&m);
    }
    x.mod_floor(&modulus)
}

/// First `len` bits of the 2-adic expansion of `p/q`.
pub fn two_adic_expansion(p: &BigInt, q: &BigInt, len: usize) -> Result<Vec<bool>> {
    if q.is_even() {
        return Err(Error::InvalidParameter(format!(
            "denominator {q} is even; no 2-adic expansion"
        )));
    }
    if len == 0 {
        return Ok(Vec::new());
    }
    let v = (p * inverse_pow2(q, len)).mod_floor(&(BigInt::one() << len));
    let mag = v.magnitude();
    Ok((0..len as u64).map(|i| mag.bit(i)).collect())
}

/// `len` bits of the periodic extension of `seq`.
pub fn periodic_prefix(seq: &BinarySeq, len: usize) -> Vec<bool> {
    (0..len).map(|t| seq.get(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(text: &str) -> Vec<bool> {
        text.chars().map(|c| c == '1').collect()
    }

    /// Least height over `|p| <= h`, odd `q <= h`, by exhaustion.
    fn brute_min_height(prefix: &[bool], limit: i64) -> Option<i64> {
        let n = prefix.len();
        let a: i128 = prefix
            .iter()
            .enumerate()
            .map(|(i, &b)| i128::from(b) << i)
            .sum();
        let m = 1i128 << n;
        let mut best = None;
        for q in (1..=limit).step_by(2) {
            for p in -limit..=limit {
                if (a * i128::from(q) - i128::from(p)).rem_euclid(m) == 0 {
                    let h = p.abs().max(q);
                    if best.is_none_or(|b| h < b) {
                        best = Some(h);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn expansion_examples() {
        // -1 = ...1111, 1/3 = ...10101011, -1/3 = ...0101
        let one = BigInt::one();
        assert_eq!(two_adic_expansion(&-&one, &one, 4).unwrap(), bits("1111"));
        assert_eq!(two_adic_expansion(&one, &BigInt::from(3), 8).unwrap(), bits("11010101"));
        assert_eq!(two_adic_expansion(&-&one, &BigInt::from(3), 6).unwrap(), bits("101010"));
        assert!(two_adic_expansion(&one, &BigInt::from(4), 3).is_err());
    }

    #[test]
    fn periodic_110() {
        // 110 110 ... = -3/7
        let r = rational_approximation(&bits("11011011")).unwrap();
        assert_eq!((r.p.clone(), r.q.clone()), (BigInt::from(-3), BigInt::from(7)));
        assert_eq!(r.complexity(), 3);
        assert_eq!(r.matched_bits, 8);
    }

    #[test]
    fn degenerate_prefixes() {
        let r = rational_approximation(&[false; 10]).unwrap();
        assert_eq!((r.p, r.q), (BigInt::zero(), BigInt::one()));
        let r = rational_approximation(&[true; 10]).unwrap();
        assert_eq!((r.p, r.q), (BigInt::from(-1), BigInt::one()));
        assert!(rational_approximation(&[true]).is_err());
    }

    #[test]
    fn minimal_height_matches_exhaustion() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..60 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let len = 3 + (state % 8) as usize;
            let prefix: Vec<bool> = (0..len).map(|i| state >> (20 + i) & 1 == 1).collect();
            let r = rational_approximation(&prefix).unwrap();
            assert_eq!(r.matched_bits, len, "{prefix:?}");
            let h = r.p.abs().max(r.q.clone());
            // (A mod 2^len)/1 always qualifies, so the search window is sufficient
            let brute = brute_min_height(&prefix, 1 << len).unwrap();
            assert_eq!(h, BigInt::from(brute), "{prefix:?}");
        }
    }
}
