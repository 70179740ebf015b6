//! Arithmetic over Q and its completions.

mod brauer;
mod conic;
mod hilbert;
mod place;
mod primes;
mod quadext;
mod squarefree;

pub use brauer::{brauer_combine, brauer_index, restricts_trivially, BrauerClass, Invariant};
pub use conic::conic_has_point;
pub use hilbert::{hilbert_symbol, quaternion_class};
pub use place::Place;
pub use primes::{factorize, is_prime, legendre, Prime};
pub use quadext::{is_norm, prime_splitting, QuadExt, Splitting};
pub use squarefree::{squarefree, squarefree_part};

pub(crate) use squarefree::is_square_int;
#[cfg(test)]
pub(crate) use squarefree::square_class;

/// Exact rational numbers, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let bad = || crate::Error::domain(format!("`{s}` is not a rational number"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&d) {
        return Err(crate::Error::domain(format!("`{s}` has zero denominator")));
    }
    Ok(Rational::new(n, d))
}

/// Renders as `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-7/2", "0", "12/8"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&parse_rational("12/8").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("4/-6").unwrap()), "-2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
