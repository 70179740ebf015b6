use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::brauer::BrauerClass;
use super::place::Place;
use super::primes::{legendre, Prime};
use super::squarefree::rational_exponents;
use super::Rational;
use crate::error::{Error, Result};

/// `r = p^v * u` with `u` a p-adic unit, given as `(v, u mod m)`; `m` is `p`
/// for odd `p` and 8 for `p = 2`.
fn local_split(r: &Rational, p: u64) -> (i64, u64) {
    let pb = BigInt::from(p);
    let strip = |x: &BigInt| -> (i64, BigInt) {
        let mut x = x.abs();
        let mut v = 0;
        loop {
            let (q, rem) = x.div_rem(&pb);
            if !rem.is_zero() {
                return (v, x);
            }
            x = q;
            v += 1;
        }
    };
    let (vn, n) = strip(r.numer());
    let (vd, d) = strip(r.denom());
    let m = BigInt::from(if p == 2 { 8 } else { p });
    let sign = if r.is_negative() { BigInt::from(-1) } else { BigInt::from(1) };
    // For p = 2 the inverse of an odd d is d itself mod 8; for odd p the
    // Legendre symbol of d^-1 equals that of d.
    let u = (sign * n * d).mod_floor(&m);
    (vn - vd, u.to_u64().expect("residue fits"))
}

fn unit_sign(x: u64) -> u32 {
    ((x % 4) == 3) as u32
}

fn unit_omega(x: u64) -> u32 {
    u32::from(x % 8 == 3 || x % 8 == 5)
}

fn symbol(a: &Rational, b: &Rational, v: Place) -> i8 {
    match v {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) if p.get() == 2 => {
            let (alpha, u) = local_split(a, 2);
            let (beta, w) = local_split(b, 2);
            let e = unit_sign(u) * unit_sign(w)
                + (alpha.rem_euclid(2) as u32) * unit_omega(w)
                + (beta.rem_euclid(2) as u32) * unit_omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = local_split(a, p.get());
            let (beta, w) = local_split(b, p.get());
            let (alpha, beta) = (alpha.rem_euclid(2), beta.rem_euclid(2));
            let eps_p = ((p.get() - 1) / 2 % 2) as i64;
            let mut s: i8 = if (alpha * beta * eps_p) % 2 == 0 { 1 } else { -1 };
            if beta == 1 {
                s *= legendre(u as i128, p);
            }
            if alpha == 1 {
                s *= legendre(w as i128, p);
            }
            s
        }
    }
}

fn nonzero(r: &Rational, which: &str) -> Result<()> {
    if r.is_zero() {
        Err(Error::domain(format!("hilbert symbol: {which} must be nonzero")))
    } else {
        Ok(())
    }
}

/// Local Hilbert symbol `(a, b)_v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8> {
    nonzero(a, "a")?;
    nonzero(b, "b")?;
    Ok(symbol(a, b, v))
}

/// Places where `(a, b)_v` can be -1: the infinite place, 2 and the odd primes of `ab`.
pub(crate) fn candidate_places(a: &Rational, b: &Rational) -> Result<BTreeSet<Place>> {
    let mut places = BTreeSet::from([Place::Infinite, Place::Finite(Prime::new_unchecked(2))]);
    for r in [a, b] {
        for p in rational_exponents(r)?.1.into_keys() {
            places.insert(Place::Finite(p));
        }
    }
    Ok(places)
}

/// Brauer class of the quaternion algebra `(a, b)_Q`.
pub fn quaternion_class(a: &Rational, b: &Rational) -> Result<BrauerClass> {
    nonzero(a, "a")?;
    nonzero(b, "b")?;
    let ramified = candidate_places(a, b)?
        .into_iter()
        .filter(|v| symbol(a, b, *v) == -1);
    BrauerClass::half_at(ramified)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(n: u64) -> Place {
        Place::prime(n).unwrap()
    }

    #[test]
    fn documented_symbols() {
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Place::Infinite).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), p(2)).unwrap(), -1);
        for v in [Place::Infinite, p(2), p(3), p(5), p(7)] {
            for b in [-7, -3, -1, 2, 5, 6] {
                assert_eq!(hilbert_symbol(&q(1), &q(b), v).unwrap(), 1);
            }
        }
    }

    #[test]
    fn known_local_values() {
        // (2, 3)_3 = (2/3) = -1 and (2, 3)_2 = -1 too.
        assert_eq!(hilbert_symbol(&q(2), &q(3), p(3)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(2), &q(3), p(2)).unwrap(), -1);
        // (p, p)_p = (-1, p)_p.
        assert_eq!(hilbert_symbol(&q(3), &q(3), p(3)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(5), &q(5), p(5)).unwrap(), 1);
        // (2, 2)_2 = (2, -1)_2 = +1.
        assert_eq!(hilbert_symbol(&q(2), &q(2), p(2)).unwrap(), 1);
        assert_eq!(hilbert_symbol(&q(-1), &q(3), p(2)).unwrap(), -1);
    }

    #[test]
    fn fractional_arguments_reduce_mod_squares() {
        let half = Rational::new(1.into(), 2.into());
        let eighteen_over_25 = Rational::new(18.into(), 25.into());
        for v in [Place::Infinite, p(2), p(3), p(5)] {
            assert_eq!(
                hilbert_symbol(&half, &q(-3), v).unwrap(),
                hilbert_symbol(&eighteen_over_25, &q(-3), v).unwrap()
            );
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(
            hilbert_symbol(&q(0), &q(3), Place::Infinite),
            Err(Error::Domain(_))
        ));
        assert!(quaternion_class(&q(2), &q(0)).is_err());
    }

    #[test]
    fn quaternion_class_examples() {
        assert!(quaternion_class(&q(1), &q(5)).unwrap().is_trivial());
        assert_eq!(
            quaternion_class(&q(-1), &q(-1)).unwrap(),
            BrauerClass::half_at([Place::Infinite, p(2)]).unwrap()
        );
        assert_eq!(
            quaternion_class(&q(-1), &q(3)).unwrap(),
            BrauerClass::half_at([p(2), p(3)]).unwrap()
        );
    }
}
