use std::fmt;

use crate::error::{Error, Result};

/// Trial division runs up to this bound; anything left over must be a prime
/// (proven by Miller-Rabin) or the factorization is refused.
const TRIAL_LIMIT: u128 = 1_000_000;

/// A rational prime, checked on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::domain(format!("{p} is not a prime")))
        }
    }

    /// For values already known to be prime (factorization output).
    pub(crate) fn new_unchecked(p: u64) -> Self {
        debug_assert!(is_prime(p));
        Prime(p)
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of a positive integer as `(p, e)` pairs, ascending.
pub fn factorize(n: u128) -> Result<Vec<(Prime, u32)>> {
    if n == 0 {
        return Err(Error::domain("cannot factor zero"));
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p <= TRIAL_LIMIT && p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((Prime::new_unchecked(p as u64), e));
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if rest > 1 {
        if p * p > rest || u64::try_from(rest).map(is_prime).unwrap_or(false) {
            out.push((Prime::new_unchecked(rest as u64), 1));
        } else {
            for (q, e) in num_prime::nt_funcs::factorize128(rest) {
                let q = u64::try_from(q)
                    .map_err(|_| Error::unsupported(format!("{n} has a prime factor above 2^64")))?;
                out.push((Prime::new_unchecked(q), e as u32));
            }
            out.sort_by_key(|(q, _)| q.get());
        }
    }
    Ok(out)
}

/// Legendre symbol (a/p) for an odd prime p; 0 when p divides a.
pub fn legendre(a: i128, p: Prime) -> i8 {
    let p = p.get();
    debug_assert!(p != 2);
    let r = a.rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}
