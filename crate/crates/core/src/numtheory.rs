//! Elementary integer routines: factorization, multiplicative orders,
//! Euler's totient and modular inverses.
//!
//! Everything here works on `u64` magnitudes and is sized for desk-scale
//! inputs (moduli up to a few million), so the algorithms are the plain ones:
//! trial division and iterated multiplication.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("{n} is not a unit modulo {modulus} (gcd = {gcd})")]
    NotCoprime { n: u64, modulus: u64, gcd: u64 },
    #[error("modulus must be at least {min}, got {modulus}")]
    ModulusTooSmall { modulus: u64, min: u64 },
}

/// Prime factorization `value = Π prime^exponent`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// The exact prime powers `p^k ∥ value`, together with `p` and `k`.
    pub fn prime_powers(&self) -> impl Iterator<Item = PrimePower> + '_ {
        self.factors.iter().map(|&(prime, exponent)| PrimePower {
            prime,
            exponent,
            value: prime.pow(exponent),
        })
    }

    /// Multiplies the factors back out.
    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let current = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..current {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// One factor `prime^exponent` of a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
    pub value: u64,
}

pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { value: n, factors }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factorize(n);
    f.factors.len() == 1 && f.factors[0].1 == 1
}

/// If `q = p^m` for a prime `p`, returns `(p, m)`.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    match factorize(q).factors.as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// `base^exp mod modulus` by square-and-multiply; `pow_mod(_, _, 1) == 0`.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn check_unit(n: u64, s: u64) -> Result<(), NumTheoryError> {
    let g = gcd(n % s, s);
    if g != 1 {
        return Err(NumTheoryError::NotCoprime {
            n,
            modulus: s,
            gcd: g,
        });
    }
    Ok(())
}

/// Least `j >= 1` with `n^j ≡ 1 (mod s)`. Returns 1 when `s == 1`.
pub fn mult_order(n: u64, s: u64) -> Result<u64, NumTheoryError> {
    if s == 0 {
        return Err(NumTheoryError::ModulusTooSmall { modulus: s, min: 1 });
    }
    if s == 1 {
        return Ok(1);
    }
    check_unit(n, s)?;
    let base = n % s;
    let mut acc = base;
    let mut j = 1;
    while acc != 1 {
        acc = ((acc as u128 * base as u128) % s as u128) as u64;
        j += 1;
    }
    Ok(j)
}

/// Least `j >= 1` with `n^j ≡ -1 (mod s)`, or `None` if `-1` is not a power of `n`.
///
/// For `s <= 2` we have `-1 ≡ 1`, so the answer coincides with [`mult_order`].
pub fn neg_order(n: u64, s: u64) -> Result<Option<u64>, NumTheoryError> {
    if s == 0 {
        return Err(NumTheoryError::ModulusTooSmall { modulus: s, min: 1 });
    }
    if s == 1 {
        return Ok(Some(1));
    }
    check_unit(n, s)?;
    let target = s - 1;
    let base = n % s;
    let mut acc = base;
    let mut j = 1;
    // The powers of n cycle back to 1 after ord_s(n) steps; if -1 has not shown
    // up by then it never will.
    loop {
        if acc == target {
            return Ok(Some(j));
        }
        if acc == 1 {
            return Ok(None);
        }
        acc = ((acc as u128 * base as u128) % s as u128) as u64;
        j += 1;
    }
}

/// The unique `m ∈ [1, s)` with `n·m ≡ 1 (mod s)`.
pub fn mod_inverse(n: u64, s: u64) -> Result<u64, NumTheoryError> {
    if s < 2 {
        return Err(NumTheoryError::ModulusTooSmall { modulus: s, min: 2 });
    }
    check_unit(n, s)?;
    // extended Euclid on signed values
    let (mut old_r, mut r) = ((n % s) as i128, s as i128);
    let (mut old_t, mut t) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_t, t) = (t, old_t - quot * t);
    }
    Ok(old_t.rem_euclid(s as i128) as u64)
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    factorize(n)
        .factors
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// The smallest prime factor of `n >= 2`.
pub fn smallest_prime_factor(n: u64) -> u64 {
    assert!(n >= 2);
    factorize(n).factors[0].0
}
