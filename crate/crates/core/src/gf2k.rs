//! Binary extension fields GF(2^n) backed by exp/log tables.
//!
//! Elements are polynomial residues stored as `n`-bit masks; the modulus is
//! an `(n + 1)`-bit mask with the most significant coefficient first when
//! printed (x^4 + x + 1 is `0x13`). The generator is always the class of `x`,
//! so only primitive moduli are accepted.

use std::fmt;
use std::ops::Add;

use crate::{Error, Result};

/// Largest degree accepted by [`build_field`].
pub const MAX_DEGREE: u32 = 32;

/// Largest degree for which exp/log tables are materialised (two tables of
/// `2^n` 32-bit words each).
pub const TABLE_DEGREE_LIMIT: u32 = 24;

/// An element of GF(2^n), stored as its coefficient vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for FieldElem {
    type Output = FieldElem;

    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(self.0 ^ rhs.0)
    }
}

impl fmt::LowerHex for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// GF(2^n) with a primitive modulus and its exp/log tables.
///
/// Immutable once built; share it freely across threads.
#[derive(Clone)]
pub struct FieldContext {
    degree: u32,
    modulus: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

/// Builds GF(2^n). Without an explicit modulus the numerically smallest
/// primitive polynomial of degree `n` is used.
pub fn build_field(n: u32, modulus: Option<u64>) -> Result<FieldContext> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    let modulus = match modulus {
        Some(m) => {
            check_primitive(m, n)?;
            m
        }
        None => smallest_primitive(n),
    };
    if n > TABLE_DEGREE_LIMIT {
        return Err(Error::TableTooLarge {
            degree: n,
            limit: TABLE_DEGREE_LIMIT,
        });
    }

    let order = (1usize << n) - 1;
    let mut exp = Vec::with_capacity(order);
    let mut log = vec![u32::MAX; order + 1];
    let top = 1u64 << n;
    let mut x = 1u64;
    for i in 0..order {
        exp.push(x as u32);
        log[x as usize] = i as u32;
        x <<= 1;
        if x & top != 0 {
            x ^= modulus;
        }
    }
    debug_assert_eq!(x, 1, "modulus passed the primitivity test");

    Ok(FieldContext {
        degree: n,
        modulus,
        exp,
        log,
    })
}

impl FieldContext {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Size of the multiplicative group, `2^n - 1`.
    pub fn order(&self) -> u64 {
        self.exp.len() as u64
    }

    /// The primitive element: the class of `x`.
    pub fn generator(&self) -> FieldElem {
        self.exp_of(1)
    }

    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if u64::from(bits) >> self.degree != 0 {
            return Err(Error::InvalidParameter(format!(
                "{bits:#x} does not fit in {} bits",
                self.degree
            )));
        }
        Ok(FieldElem(bits))
    }

    /// `generator^i`, with `i` reduced modulo the group order.
    pub fn exp_of(&self, i: u64) -> FieldElem {
        FieldElem(self.exp[(i % self.order()) as usize])
    }

    /// Discrete logarithm to the base of the generator; `None` for zero.
    pub fn dlog(&self, x: FieldElem) -> Option<u32> {
        if x.is_zero() {
            None
        } else {
            Some(self.log[x.0 as usize])
        }
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let s = u64::from(self.log[a.0 as usize]) + u64::from(self.log[b.0 as usize]);
        self.exp_of(s)
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if a.is_zero() {
            return if e == 0 { FieldElem::ONE } else { FieldElem::ZERO };
        }
        let l = u128::from(self.log[a.0 as usize]) * u128::from(e) % u128::from(self.order());
        self.exp_of(l as u64)
    }

    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    /// `a^(2^(m*j))` by `m*j` squarings folded into one log multiplication.
    fn frobenius(&self, a: FieldElem, exponent_bits: u32) -> FieldElem {
        if a.is_zero() {
            return a;
        }
        let q = self.order();
        let two_pow = pow_mod(2, u64::from(exponent_bits), q);
        let l = u128::from(self.log[a.0 as usize]) * u128::from(two_pow) % u128::from(q);
        self.exp_of(l as u64)
    }

    /// Whether `x` lies in the subfield GF(2^ext).
    pub fn in_subfield(&self, x: FieldElem, ext: u32) -> bool {
        self.degree % ext == 0 && self.frobenius(x, ext) == x
    }

    /// Relative trace `Tr_sub^ext(x) = x + x^(2^sub) + ... + x^(2^(sub(ext/sub - 1)))`
    /// for `x` in the subfield GF(2^ext) of this field.
    pub fn trace_over(&self, x: FieldElem, sub: u32, ext: u32) -> Result<FieldElem> {
        if sub == 0 || ext == 0 || ext % sub != 0 || self.degree % ext != 0 {
            return Err(Error::TraceDegree { sub, ext });
        }
        if !self.in_subfield(x, ext) {
            return Err(Error::NotInSubfield { elem: x.0, ext });
        }
        let mut acc = FieldElem::ZERO;
        let mut term = x;
        for _ in 0..ext / sub {
            acc = acc + term;
            term = self.frobenius(term, sub);
        }
        debug_assert!(self.in_subfield(acc, sub));
        Ok(acc)
    }

    /// `Tr_m^n(x)` from this field down to GF(2^m).
    pub fn trace(&self, m: u32, x: FieldElem) -> Result<FieldElem> {
        self.trace_over(x, m, self.degree)
    }
}

/// Parses a modulus given as hex (`0x13` or `13`).
pub fn parse_modulus(text: &str) -> Result<u64> {
    let t = text.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u64::from_str_radix(digits, 16)
        .map_err(|e| Error::InvalidParameter(format!("modulus {text:?}: {e}")))
}

pub(crate) fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = u128::from(m);
    let mut b = u128::from(base) % m;
    let mut r = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

fn poly_degree(p: u64) -> u32 {
    debug_assert!(p != 0);
    63 - p.leading_zeros()
}

/// `a * b mod m` over GF(2); `a`, `b` already reduced below `deg m`.
fn poly_mulmod(mut a: u64, mut b: u64, m: u64) -> u64 {
    let n = poly_degree(m);
    let top = 1u64 << n;
    let mut r = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= m;
        }
    }
    r
}

fn poly_powmod(a: u64, mut e: u64, m: u64) -> u64 {
    let mut base = a;
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(r, base, m);
        }
        base = poly_mulmod(base, base, m);
        e >>= 1;
    }
    r
}

fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test over GF(2).
fn is_irreducible(m: u64, n: u32) -> bool {
    let x = poly_rem(2, m);
    // x^(2^i) mod m
    let frob = |i: u32| {
        let mut t = x;
        for _ in 0..i {
            t = poly_mulmod(t, t, m);
        }
        t
    };
    if frob(n) != x {
        return false;
    }
    prime_factors(u64::from(n))
        .into_iter()
        .all(|p| poly_gcd(m, frob(n / p as u32) ^ x) == 1)
}

/// Multiplicative order of `x` modulo an irreducible `m`; 0 if `x` is not a unit.
fn order_of_x(m: u64, n: u32) -> u64 {
    let x = poly_rem(2, m);
    if x == 0 {
        return 0;
    }
    let group = (1u64 << n) - 1;
    let mut order = group;
    for r in prime_factors(group) {
        while order % r == 0 && poly_powmod(x, order / r, m) == 1 {
            order /= r;
        }
    }
    order
}

fn check_primitive(m: u64, n: u32) -> Result<()> {
    if m == 0 || poly_degree(m) != n {
        return Err(Error::ModulusDegree {
            modulus: m,
            expected: n,
            actual: if m == 0 { 0 } else { poly_degree(m) },
        });
    }
    if !is_irreducible(m, n) {
        return Err(Error::Reducible(m));
    }
    let expected = (1u64 << n) - 1;
    let order = order_of_x(m, n);
    if order != expected {
        return Err(Error::NotPrimitive {
            modulus: m,
            order,
            expected,
        });
    }
    Ok(())
}

/// Whether `m` is a primitive polynomial of degree `n`.
pub fn is_primitive(m: u64, n: u32) -> bool {
    check_primitive(m, n).is_ok()
}

fn smallest_primitive(n: u32) -> u64 {
    let lo = 1u64 << n;
    (lo..lo << 1)
        .find(|&m| is_primitive(m, n))
        .expect("primitive polynomials exist in every degree")
}

/// All primitive moduli of degree `n`, in increasing order.
pub fn primitive_moduli(n: u32) -> Vec<u64> {
    let lo = 1u64 << n;
    (lo..lo << 1).filter(|&m| is_primitive(m, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> FieldContext {
        build_field(4, None).unwrap()
    }

    /// Exhaustive primitivity by walking powers of x.
    fn brute_primitive(m: u64, n: u32) -> bool {
        let top = 1u64 << n;
        let mut x = 1u64;
        for i in 1..top {
            x <<= 1;
            if x & top != 0 {
                x ^= m;
            }
            if x == 1 {
                return i == top - 1;
            }
        }
        false
    }

    #[test]
    fn default_moduli() {
        assert_eq!(gf16().modulus(), 0b10011);
        assert_eq!(build_field(2, None).unwrap().modulus(), 0b111);
        assert_eq!(build_field(1, None).unwrap().modulus(), 0b11);
    }

    #[test]
    fn primitivity_agrees_with_brute_force() {
        for n in 1..=10 {
            for m in (1u64 << n)..(2u64 << n) {
                assert_eq!(is_primitive(m, n), brute_primitive(m, n), "m={m:#x}");
            }
        }
        assert_eq!(primitive_moduli(4), vec![0x13, 0x19]);
        assert_eq!(primitive_moduli(6).len(), 6);
        assert_eq!(primitive_moduli(8).len(), 16);
    }

    #[test]
    fn rejects_bad_moduli() {
        // x^4 + x^3 + x^2 + x + 1: irreducible, x has order 5
        let err = build_field(4, Some(0b11111)).unwrap_err();
        assert_eq!(
            err,
            Error::NotPrimitive {
                modulus: 0x1f,
                order: 5,
                expected: 15
            }
        );
        // (x^2 + x + 1)^2
        assert_eq!(build_field(4, Some(0x15)).unwrap_err(), Error::Reducible(0x15));
        assert!(matches!(
            build_field(4, Some(0x7)),
            Err(Error::ModulusDegree { actual: 2, .. })
        ));
        assert_eq!(build_field(0, None).unwrap_err(), Error::DegreeOutOfRange(0));
        assert_eq!(build_field(33, None).unwrap_err(), Error::DegreeOutOfRange(33));
        assert!(matches!(
            build_field(30, None),
            Err(Error::TableTooLarge { degree: 30, .. })
        ));
    }

    #[test]
    fn exp_log_round_trip() {
        for n in 1..=12 {
            let f = build_field(n, None).unwrap();
            let mut seen = vec![false; 1 << n];
            for i in 0..f.order() {
                let x = f.exp_of(i);
                assert!(!seen[x.bits() as usize]);
                seen[x.bits() as usize] = true;
                assert_eq!(f.dlog(x), Some(i as u32));
            }
            assert_eq!(f.dlog(FieldElem::ZERO), None);
        }
    }

    #[test]
    fn dlog_examples() {
        let f = gf16();
        assert_eq!(f.dlog(FieldElem::ONE), Some(0));
        assert_eq!(f.dlog(f.generator()), Some(1));
        // alpha^3 + 1, i.e. alpha^14 by repeated multiplication
        let mut t = FieldElem::ONE;
        for _ in 0..14 {
            t = f.mul(t, f.generator());
        }
        assert_eq!(t.bits(), 0b1001);
        assert_eq!(f.dlog(f.elem(0b1001).unwrap()), Some(14));
    }

    #[test]
    fn trace_examples() {
        let f = gf16();
        assert_eq!(f.trace(1, FieldElem::ONE).unwrap(), FieldElem::ZERO);
        assert_eq!(f.trace(2, FieldElem::ONE).unwrap(), FieldElem::ZERO);
        let a = f.generator();
        let by_hand = a + f.square(a) + f.pow(a, 4) + f.pow(a, 8);
        assert_eq!(by_hand, FieldElem::ZERO);
        assert_eq!(f.trace(1, a).unwrap(), FieldElem::ZERO);
        assert_eq!(f.trace(3, a), Err(Error::TraceDegree { sub: 3, ext: 4 }));
    }

    #[test]
    fn trace_lands_in_subfield() {
        let f = build_field(6, None).unwrap();
        for m in [1, 2, 3, 6] {
            for i in 0..f.order() {
                let t = f.trace(m, f.exp_of(i)).unwrap();
                assert!(f.in_subfield(t, m));
            }
        }
    }

    #[test]
    fn transitivity_exhaustive() {
        for n in 1..=8 {
            let f = build_field(n, None).unwrap();
            for m in (1..=n).filter(|m| n % m == 0) {
                for bits in 0..(1u32 << n) {
                    let x = FieldElem(bits);
                    let direct = f.trace(1, x).unwrap();
                    let inner = f.trace(m, x).unwrap();
                    let outer = f.trace_over(inner, 1, m).unwrap();
                    assert_eq!(direct, outer, "n={n} m={m} x={bits:#x}");
                }
            }
        }
    }

    #[test]
    fn absolute_trace_is_balanced() {
        for n in 1..=12 {
            let f = build_field(n, None).unwrap();
            let ones = (0..1u32 << n)
                .filter(|&b| f.trace(1, FieldElem(b)).unwrap() == FieldElem::ONE)
                .count();
            assert_eq!(ones, 1 << (n - 1));
        }
    }

    #[test]
    fn modulus_parsing() {
        assert_eq!(parse_modulus("0x13").unwrap(), 0x13);
        assert_eq!(parse_modulus("11D").unwrap(), 0x11d);
        assert!(parse_modulus("0xzz").is_err());
    }
}
