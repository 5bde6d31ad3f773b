//! Exact integer number theory: factorization, radicals, p-adic valuations,
//! multiplicative orders and the lift-the-exponent closed forms.
//!
//! Everything operates on 64-bit integers with checked overflow; intermediate
//! products go through `u128`.

use crate::error::{Error, Result};

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple; errors on overflow.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(Error::Overflow("lcm"))
}

/// `a * b mod n` without overflow.
pub fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// `a^e mod n` by square-and-multiply. `n = 1` gives 0.
pub fn mod_pow(mut a: u64, mut e: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, a, n);
        }
        a = mod_mul(a, a, n);
        e >>= 1;
    }
    acc
}

/// Modular inverse of `a` mod `n`; requires `gcd(a, n) = 1`.
pub fn mod_inverse(a: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if n == 1 {
        return Ok(0);
    }
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotCoprime { m: a % n, n });
    }
    Ok(s0.rem_euclid(n as i128) as u64)
}

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set certifies primality for every n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A certified prime-power factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    /// `(p_i, e_i)` with primes strictly increasing, all `e_i >= 1`.
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Product of the distinct primes; 1 for the empty factorization.
    pub fn radical(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    /// Rebuilds `n` from the factor list.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
    }
}

/// Factors `n` by trial division, certifying the final cofactor with
/// Miller-Rabin so large prime tails are not ground through the wheel.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if n >= 1 << 63 {
        return Err(Error::Overflow("factorize: input must be below 2^63"));
    }
    fn strip(p: u64, rem: &mut u64, factors: &mut Vec<(u64, u32)>) {
        let mut e = 0;
        while *rem % p == 0 {
            *rem /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    let mut rem = n;
    let mut factors = Vec::new();
    strip(2, &mut rem, &mut factors);
    strip(3, &mut rem, &mut factors);
    let mut d = 5u64;
    while d * d <= rem {
        if rem > 1 && is_prime(rem) {
            break;
        }
        let before = rem;
        strip(d, &mut rem, &mut factors);
        strip(d + 2, &mut rem, &mut factors);
        d += 6;
        if before == rem {
            // nothing stripped: skip the primality re-check on the next pass
            while d * d <= rem && rem % d != 0 && rem % (d + 2) != 0 {
                d += 6;
            }
        }
    }
    if rem > 1 {
        factors.push((rem, 1));
    }
    factors.sort_unstable();
    let f = Factorization { n, factors };
    debug_assert_eq!(f.product(), n);
    Ok(f)
}

/// rad(n): the product of the distinct primes dividing n; rad(1) = 1.
pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.radical())
}

/// The l-adic valuation of n: the largest v with l^v | n.
pub fn valuation(l: u64, n: u64) -> Result<u32> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let mut v = 0;
    let mut rem = n;
    while rem % l == 0 {
        rem /= l;
        v += 1;
    }
    Ok(v)
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let mut phi = 1u64;
    for &(p, e) in &f.factors {
        phi *= p.pow(e - 1) * (p - 1);
    }
    Ok(phi)
}

/// All positive divisors of n, sorted ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, e) in &f.factors {
        let prev = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// The order of `m` in `(Z/nZ)^*`, computed by divisor descent on phi(n).
///
/// `mult_order(m, 1) = 1` by the trivial-group convention.
pub fn mult_order(m: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if n == 1 {
        return Ok(1);
    }
    let m = m % n;
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    let phi = euler_phi(n)?;
    let mut t = phi;
    for &(p, _) in &factorize(phi)?.factors {
        while t % p == 0 && mod_pow(m, t / p, n) == 1 {
            t /= p;
        }
    }
    assert_eq!(mod_pow(m, t, n), 1, "descent must land on an annihilator");
    assert_eq!(phi % t, 0, "order must divide phi(n)");
    Ok(t)
}

/// `v_l(m^d - 1)` via the lift-the-exponent closed forms.
///
/// Odd `l` requires `l | m - 1`; `l = 2` requires `m` odd. `m >= 2` so the
/// valuation is finite.
pub fn lte_valuation(l: u64, m: u64, d: u64) -> Result<u32> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if d == 0 {
        return Err(Error::NonPositive(0));
    }
    if m < 2 {
        return Err(Error::LteHypothesis(format!(
            "m = {m} < 2 makes v_l(m^d - 1) degenerate"
        )));
    }
    if l == 2 {
        if m % 2 == 0 {
            return Err(Error::LteHypothesis(format!("l = 2 requires odd m, got {m}")));
        }
        return Ok(if m % 4 == 1 {
            valuation(2, m - 1)? + valuation(2, d)?
        } else if d % 2 == 1 {
            1
        } else {
            valuation(2, m + 1)? + valuation(2, d)?
        });
    }
    if (m - 1) % l != 0 {
        return Err(Error::LteHypothesis(format!(
            "odd l = {l} requires l | m - 1, got m = {m}"
        )));
    }
    Ok(valuation(l, m - 1)? + valuation(l, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(45).unwrap().factors, vec![(3, 2), (5, 1)]);
        assert_eq!(factorize(1).unwrap().factors, vec![]);
        assert_eq!(factorize(225).unwrap().factors, vec![(3, 2), (5, 2)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_large_prime_tail() {
        // 2^31 - 1 is prime; trial division must hand off to Miller-Rabin.
        let f = factorize(6 * 2147483647).unwrap();
        assert_eq!(f.factors, vec![(2, 1), (3, 1), (2147483647, 1)]);
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(45).unwrap(), 15);
        assert_eq!(radical(8).unwrap(), 2);
        assert_eq!(radical(1).unwrap(), 1);
    }

    #[test]
    fn valuation_examples() {
        // 342 = 2 * 3^2 * 19, 2400 = 2^5 * 3 * 5^2, checked by direct division.
        assert_eq!(valuation(3, 342).unwrap(), 2);
        assert_eq!(valuation(5, 2400).unwrap(), 2);
        assert_eq!(valuation(7, 10).unwrap(), 0);
        assert!(valuation(6, 10).is_err());
    }

    #[test]
    fn mult_order_examples() {
        // 7^2 = 4, 7^3 = 13, 7^4 = 1 mod 15, by direct powering.
        assert_eq!(mult_order(7, 15).unwrap(), 4);
        // 7^3 = 343 = 38*9 + 1.
        assert_eq!(mult_order(7, 9).unwrap(), 3);
        assert_eq!(mult_order(5, 1).unwrap(), 1);
        assert!(mult_order(6, 15).is_err());
    }

    #[test]
    fn lte_examples() {
        // v_3(7^3 - 1) = v_3(342) = 2.
        assert_eq!(lte_valuation(3, 7, 3).unwrap(), 2);
        // 7^2 - 1 = 48 = 2^4 * 3.
        assert_eq!(lte_valuation(2, 7, 2).unwrap(), 4);
        // v_3(6) = 1.
        assert_eq!(lte_valuation(3, 7, 1).unwrap(), 1);
        assert!(lte_valuation(3, 8, 1).is_err());
        assert!(lte_valuation(2, 8, 1).is_err());
    }

    /// Independent oracle: v_l(m^d - 1) by big-integer powering.
    fn lte_brute(l: u64, m: u64, d: u64) -> u32 {
        let x = BigUint::from(m).pow(d as u32) - 1u32;
        let l = BigUint::from(l);
        let mut v = 0;
        let mut rem = x;
        while (&rem % &l) == BigUint::from(0u32) {
            rem /= &l;
            v += 1;
        }
        v
    }

    #[test]
    fn lte_matches_bigint_spot() {
        for (l, m, d) in [(3, 7, 3), (3, 4, 9), (5, 11, 25), (2, 7, 2), (2, 3, 8), (2, 9, 6)] {
            assert_eq!(lte_valuation(l, m, d).unwrap(), lte_brute(l, m, d), "l={l} m={m} d={d}");
        }
    }

    #[test]
    fn mersenne_prime_check() {
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483647u64 * 2147483647));
        assert!(is_prime(18446744073709551557)); // largest 64-bit prime
    }

    proptest! {
        #[test]
        fn factorize_roundtrip(n in 1u64..10_000) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.product(), n);
            for w in f.factors.windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            for &(p, _) in &f.factors {
                prop_assert!(is_prime(p));
            }
        }

        #[test]
        fn mult_order_divides_phi(m in 2u64..500, n in 2u64..2000) {
            prop_assume!(gcd(m, n) == 1);
            let t = mult_order(m, n).unwrap();
            prop_assert_eq!(euler_phi(n).unwrap() % t, 0);
            prop_assert_eq!(mod_pow(m, t, n), 1);
            // minimality against proper divisors
            for d in divisors(t).unwrap() {
                if d < t {
                    prop_assert_ne!(mod_pow(m, d, n), 1);
                }
            }
        }
    }
}
