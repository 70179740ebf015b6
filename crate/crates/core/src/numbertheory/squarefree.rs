use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::{factorize, Prime};
use super::Rational;
use crate::error::{Error, Result};

fn to_u128(n: &BigInt) -> Result<u128> {
    n.abs()
        .to_u128()
        .ok_or_else(|| Error::unsupported(format!("{n} exceeds the supported integer range")))
}

/// Signed exponent vector of a nonzero rational: `r = sign * prod p^k_p`.
pub(crate) fn rational_exponents(r: &Rational) -> Result<(i8, BTreeMap<Prime, i64>)> {
    if r.is_zero() {
        return Err(Error::domain("zero has no squarefree part"));
    }
    let sign = if r.is_negative() { -1 } else { 1 };
    let mut exps = BTreeMap::new();
    for (p, e) in factorize(to_u128(r.numer())?)? {
        *exps.entry(p).or_insert(0) += e as i64;
    }
    for (p, e) in factorize(to_u128(r.denom())?)? {
        *exps.entry(p).or_insert(0) -= e as i64;
    }
    Ok((sign, exps))
}

/// Writes `r = s * t^2` with `s` a squarefree integer and `t > 0` rational.
pub fn squarefree_part(r: &Rational) -> Result<(i64, Rational)> {
    let (sign, exps) = rational_exponents(r)?;
    let mut s: i64 = sign as i64;
    let mut t_num = BigInt::one();
    let mut t_den = BigInt::one();
    for (p, k) in exps {
        let odd = k.rem_euclid(2);
        if odd == 1 {
            s = s
                .checked_mul(p.get() as i64)
                .ok_or_else(|| Error::unsupported("squarefree part exceeds 64 bits"))?;
        }
        let half = (k - odd) / 2;
        let pp = BigInt::from(p.get()).pow(half.unsigned_abs() as u32);
        if half >= 0 {
            t_num *= pp;
        } else {
            t_den *= pp;
        }
    }
    Ok((s, Rational::new(t_num, t_den)))
}

/// Squarefree part as a rational, without the 64-bit limit of [`squarefree`].
#[cfg(test)]
pub(crate) fn square_class(r: &Rational) -> Result<Rational> {
    let (sign, exps) = rational_exponents(r)?;
    let mut s = BigInt::from(sign);
    for (p, k) in exps {
        if k.rem_euclid(2) == 1 {
            s *= p.get();
        }
    }
    Ok(Rational::from_integer(s))
}

/// Squarefree part only; the representative used everywhere for classes mod squares.
pub fn squarefree(r: &Rational) -> Result<i64> {
    squarefree_part(r).map(|(s, _)| s)
}

pub(crate) fn squarefree_int(n: i128) -> Result<i64> {
    squarefree(&Rational::from_integer(BigInt::from(n)))
}

/// Primes dividing a nonzero integer.
#[cfg(test)]
pub(crate) fn prime_divisors(n: i128) -> Result<Vec<Prime>> {
    if n == 0 {
        return Err(Error::domain("zero has no prime divisors"));
    }
    Ok(factorize(n.unsigned_abs())?.into_iter().map(|(p, _)| p).collect())
}

pub(crate) fn is_square_int(n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let r = isqrt(n as u128);
    r * r == n as u128
}

pub(crate) fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}
