use std::fmt;

use super::place::Place;
use super::primes::legendre;
use super::squarefree::squarefree_int;
use super::Rational;
use super::hilbert::quaternion_class;
use crate::error::{Error, Result};

/// The quadratic field Q(sqrt d), `d` squarefree and not 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadExt {
    d: i64,
}

/// Decomposition of a place of Q in a quadratic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl QuadExt {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::domain(format!("Q(sqrt {d}) is not a quadratic field")));
        }
        if squarefree_int(d as i128)? != d {
            return Err(Error::domain(format!("{d} is not squarefree")));
        }
        Ok(QuadExt { d })
    }

    /// Q(sqrt r) for an arbitrary nonsquare rational `r`.
    pub fn from_rational(r: &Rational) -> Result<Self> {
        let s = super::squarefree(r)?;
        Self::new(s)
    }

    pub fn d(self) -> i64 {
        self.d
    }

    pub fn is_imaginary(self) -> bool {
        self.d < 0
    }

    /// Field discriminant: `d` if `d = 1 mod 4`, else `4d`.
    pub fn discriminant(self) -> i64 {
        if self.d.rem_euclid(4) == 1 {
            self.d
        } else {
            4 * self.d
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

pub fn prime_splitting(field: &QuadExt, v: Place) -> Splitting {
    let d = field.d;
    match v {
        Place::Infinite => {
            if d > 0 {
                Splitting::Split
            } else {
                Splitting::Inert
            }
        }
        Place::Finite(p) if p.get() == 2 => match d.rem_euclid(8) {
            1 => Splitting::Split,
            5 => Splitting::Inert,
            _ => Splitting::Ramified,
        },
        Place::Finite(p) => match legendre(d as i128, p) {
            0 => Splitting::Ramified,
            1 => Splitting::Split,
            _ => Splitting::Inert,
        },
    }
}

/// Whether `b` is a norm from `L`, i.e. `(d, b)` splits.
pub fn is_norm(field: &QuadExt, b: &Rational) -> Result<bool> {
    if num_traits::Zero::is_zero(b) {
        return Err(Error::domain("is_norm: b must be nonzero"));
    }
    Ok(quaternion_class(&Rational::from_integer(field.d.into()), b)?.is_trivial())
}
