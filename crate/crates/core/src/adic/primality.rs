//! Miller-Rabin.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// The first 13 primes; as Miller-Rabin witnesses they decide primality
/// for every `n < 3_317_044_064_679_887_385_961_981`.
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const DETERMINISTIC_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;
const RANDOM_ROUNDS: usize = 64;
const SEED: u64 = 0x5eed_2ad1c;

/// Exact below `3.3 * 10^24`; above, an additional 64 rounds with witnesses
/// drawn from a fixed-seed generator, so results are reproducible.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for p in WITNESSES {
            let p = u64::from(p);
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    } else if WITNESSES.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }

    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 2");
    let d = &n_minus_1 >> s;
    let witness = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };

    if !WITNESSES.iter().all(|&a| witness(&BigUint::from(a))) {
        return false;
    }
    if n.to_u128().is_some_and(|v| v < DETERMINISTIC_LIMIT) {
        return true;
    }
    let mut rng = ChaCha20Rng::seed_from_u64(SEED);
    let two = BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| witness(&rng.gen_biguint_range(&two, &n_minus_1)))
}
