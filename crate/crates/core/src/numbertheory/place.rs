use std::fmt;
use std::str::FromStr;

use super::primes::Prime;
use crate::error::{Error, Result};

/// A place of Q. The derived order puts the infinite place first, then
/// primes ascending; every rendering of Brauer data relies on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinite,
    Finite(Prime),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        Prime::new(p).map(Place::Finite)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Place::Infinite)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => f.write_str("inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Place::Infinite);
        }
        let p: u64 = s
            .parse()
            .map_err(|_| Error::domain(format!("`{s}` is neither \"inf\" nor a prime")))?;
        Place::prime(p)
    }
}
