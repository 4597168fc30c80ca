//! The gcd facts behind the complexity bound, the prime scan and the
//! conjecture scan.
//!
//! With `p(k) = 2^(2k-1) - 2^k + 1` and `F(k) = (2^(2(2^k+1)) + 1) / 5`, the
//! bound hinges on `gcd(p, F)` and `gcd(2^(k-1) - 1, 2^(2^k+1) + 1)`.
//! `F` has about `2^(k+1)` bits, so the materialised gcd is capped; the
//! reduced route computes `2^(2(2^k+1)) + 1 mod 5p` by modular
//! exponentiation and needs only numbers the size of `p`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{gcd_big, is_probable_prime};
use crate::{Error, Result};

/// Default largest `k` for which `F(k)` is materialised.
pub const DEFAULT_SIZE_CAP: u32 = 16;
/// Hard ceiling on the cap: `F(24)` is already about 4 MiB.
pub const MAX_SIZE_CAP: u32 = 24;
/// Largest `k` the reduced route accepts (the exponent must fit in 64 bits).
pub const MAX_REDUCED_K: u32 = 60;

/// `2^(2k-1) - 2^k + 1`.
pub fn prime_candidate(k: u32) -> BigUint {
    assert!(k >= 1, "candidate defined for k >= 1");
    (BigUint::one() << (2 * k - 1)) - (BigUint::one() << k) + 1u32
}

fn exponent(k: u32) -> u64 {
    2 * ((1u64 << k) + 1)
}

fn fermat_fifth(k: u32) -> BigUint {
    ((BigUint::one() << exponent(k)) + 1u32) / 5u32
}

fn check_cap(k: u32, cap: u32) -> Result<()> {
    if cap > MAX_SIZE_CAP {
        return Err(Error::InvalidParameter(format!(
            "size cap {cap} exceeds the ceiling {MAX_SIZE_CAP}"
        )));
    }
    if k > cap {
        return Err(Error::ResourceCap { k, cap });
    }
    Ok(())
}

/// `gcd(p(k), F(k))` with `F(k)` built in full.
pub fn conjecture_gcd_direct(k: u32, cap: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    check_cap(k, cap)?;
    Ok(gcd_big(&fermat_fifth(k), &prime_candidate(k)))
}

/// `gcd(p(k), F(k))` without building `F(k)`: `2^e + 1 = 5F` is divisible by
/// 5, so `r = (2^e + 1) mod 5p` is too, and `F ≡ r/5 (mod p)`.
pub fn conjecture_gcd_reduced(k: u32) -> Result<BigUint> {
    if !(1..=MAX_REDUCED_K).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "reduced gcd supports 1 <= k <= {MAX_REDUCED_K}, got {k}"
        )));
    }
    let p = prime_candidate(k);
    let m = &p * 5u32;
    let r = (BigUint::from(2u32).modpow(&BigUint::from(exponent(k)), &m) + 1u32) % &m;
    debug_assert!((&r % 5u32).is_zero());
    Ok((r / 5u32).gcd(&p))
}

/// One evaluated clause: the claim as text and whether the computed values
/// satisfy it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub part: u8,
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct Lemma2Report {
    pub k: u32,
    /// `p(k)`
    pub candidate: BigUint,
    pub candidate_prime: bool,
    /// `gcd(p(k), F(k))`
    pub gcd_main: BigUint,
    /// `gcd(2^(k-1) - 1, 2^(2^k+1) + 1)`
    pub gcd_aux: BigUint,
    pub clauses: Vec<Clause>,
}

impl Lemma2Report {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }
}

/// Evaluates every clause that applies to `k`; `k` above `cap` is refused.
pub fn lemma2_checks(k: u32, cap: u32) -> Result<Lemma2Report> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k}; need k >= 2")));
    }
    let gcd_main = conjecture_gcd_direct(k, cap)?;
    let candidate = prime_candidate(k);
    let candidate_prime = is_probable_prime(&candidate);
    let aux_a = (BigUint::one() << (k - 1)) - 1u32;
    let aux_b = (BigUint::one() << ((1u64 << k) + 1)) + 1u32;
    let gcd_aux = gcd_big(&aux_b, &aux_a);

    let mut clauses = Vec::new();
    let five_divides = (&gcd_main % 5u32).is_zero();
    match k % 4 {
        2 => clauses.push(Clause {
            part: 1,
            claim: "5 | gcd(p, F)".into(),
            holds: five_divides,
        }),
        0 => clauses.push(Clause {
            part: 1,
            claim: "5 does not divide gcd(p, F)".into(),
            holds: !five_divides,
        }),
        _ => {}
    }
    if k % 4 == 0 && candidate_prime {
        clauses.push(Clause {
            part: 2,
            claim: "gcd(p, F) = 1 (p prime, k = 0 mod 4)".into(),
            holds: gcd_main.is_one(),
        });
    } else {
        clauses.push(Clause {
            part: 2,
            claim: format!("gcd(p, F) < 2^{}", 2 * k - 1),
            holds: gcd_main < (BigUint::one() << (2 * k - 1)),
        });
    }
    if k % 2 == 0 {
        clauses.push(Clause {
            part: 3,
            claim: "gcd(2^(k-1) - 1, 2^(2^k+1) + 1) = 1 (k even)".into(),
            holds: gcd_aux.is_one(),
        });
    } else {
        clauses.push(Clause {
            part: 3,
            claim: format!("gcd(2^(k-1) - 1, 2^(2^k+1) + 1) < 2^{}", k - 1),
            holds: gcd_aux < (BigUint::one() << (k - 1)),
        });
    }
    Ok(Lemma2Report {
        k,
        candidate,
        candidate_prime,
        gcd_main,
        gcd_aux,
        clauses,
    })
}

/// All `k <= max_k` with `k ≡ 0 (mod 4)` and `p(k)` (probably) prime.
pub fn scan_prime_k(max_k: u32) -> Vec<u32> {
    let ks: Vec<u32> = (4..=max_k).step_by(4).collect();
    ks.into_par_iter()
        .filter(|&k| is_probable_prime(&prime_candidate(k)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcdRoute {
    /// Reduced and materialised routes both ran and agreed.
    Both,
    /// Above the size cap; reduced route only.
    Reduced,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub k: u32,
    pub gcd: BigUint,
    pub route: GcdRoute,
    pub counterexample: bool,
}

/// `gcd(p(k), F(k))` for each `k ≡ 0 (mod 4)`, sorted by `k`.
///
/// Every `k` gets the reduced route; those within `cap` are cross-checked
/// against the materialised gcd.
pub fn conjecture_scan(ks: &[u32], cap: u32) -> Result<Vec<ConjectureRow>> {
    if let Some(&bad) = ks.iter().find(|&&k| k == 0 || k % 4 != 0) {
        return Err(Error::InvalidParameter(format!(
            "conjecture concerns k = 0 mod 4, k > 0; got {bad}"
        )));
    }
    if cap > MAX_SIZE_CAP {
        return Err(Error::InvalidParameter(format!(
            "size cap {cap} exceeds the ceiling {MAX_SIZE_CAP}"
        )));
    }
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    ks.into_par_iter()
        .map(|k| {
            let gcd = conjecture_gcd_reduced(k)?;
            let route = if k <= cap {
                let direct = conjecture_gcd_direct(k, cap)?;
                if direct != gcd {
                    return Err(Error::InvalidParameter(format!(
                        "gcd routes disagree at k = {k}: {direct} vs {gcd}"
                    )));
                }
                GcdRoute::Both
            } else {
                GcdRoute::Reduced
            };
            Ok(ConjectureRow {
                k,
                counterexample: !gcd.is_one(),
                gcd,
                route,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_candidates() {
        assert_eq!(prime_candidate(2), BigUint::from(5u32));
        assert_eq!(prime_candidate(4), BigUint::from(113u32));
        assert_eq!(fermat_fifth(2), BigUint::from(205u32));
    }

    #[test]
    fn k2_gcd_is_five() {
        let r = lemma2_checks(2, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(r.gcd_main, BigUint::from(5u32));
        assert!(r.passed(), "{:?}", r.clauses);
        assert_eq!(r.clauses[0].part, 1);
    }

    #[test]
    fn k3_aux_gcd() {
        let r = lemma2_checks(3, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(r.gcd_aux, BigUint::from(3u32));
        assert!(r.passed());
    }

    #[test]
    fn routes_agree() {
        for k in 1..=14 {
            assert_eq!(
                conjecture_gcd_reduced(k).unwrap(),
                conjecture_gcd_direct(k, DEFAULT_SIZE_CAP).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            lemma2_checks(17, DEFAULT_SIZE_CAP).unwrap_err(),
            Error::ResourceCap { k: 17, cap: 16 }
        );
        assert!(lemma2_checks(5, MAX_SIZE_CAP + 1).is_err());
    }

    #[test]
    fn conjecture_rows_sorted() {
        let rows = conjecture_scan(&[12, 4, 8, 4], 8).unwrap();
        let ks: Vec<u32> = rows.iter().map(|r| r.k).collect();
        assert_eq!(ks, [4, 8, 12]);
        assert_eq!(rows[2].route, GcdRoute::Reduced);
        assert!(conjecture_scan(&[6], 8).is_err());
    }
}
