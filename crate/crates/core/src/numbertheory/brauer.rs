use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::place::Place;
use super::quadext::{prime_splitting, QuadExt, Splitting};
use crate::error::{Error, Result};

/// A local invariant in Q/Z, kept in [0, 1).
pub type Invariant = Ratio<i64>;

fn reduce_mod_one(x: Invariant) -> Invariant {
    let r = x - x.floor();
    debug_assert!(r >= Invariant::zero() && r < Invariant::one());
    r
}

/// Class in Br(Q), stored by its local invariants.
///
/// Only nonzero invariants are kept, so two classes are equal exactly when
/// their maps are equal. The invariants sum to an integer and the one at the
/// infinite place is 0 or 1/2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerClass {
    invariants: BTreeMap<Place, Invariant>,
}

impl BrauerClass {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Builds a class from `(place, invariant)` pairs. Repeated places add.
    pub fn from_invariants<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Place, Invariant)>,
    {
        let mut invariants: BTreeMap<Place, Invariant> = BTreeMap::new();
        for (v, x) in entries {
            let slot = invariants.entry(v).or_insert_with(Invariant::zero);
            *slot = reduce_mod_one(*slot + x);
        }
        invariants.retain(|_, x| !x.is_zero());
        if let Some(x) = invariants.get(&Place::Infinite) {
            if *x != Invariant::new(1, 2) {
                return Err(Error::domain(format!(
                    "invariant at the infinite place must be 0 or 1/2, got {x}"
                )));
            }
        }
        let total: Invariant = invariants.values().copied().sum();
        if !total.is_integer() {
            return Err(Error::domain(format!(
                "local invariants sum to {total}, not an integer"
            )));
        }
        Ok(BrauerClass { invariants })
    }

    /// Class with invariant 1/2 at each listed place.
    pub fn half_at<I: IntoIterator<Item = Place>>(places: I) -> Result<Self> {
        Self::from_invariants(places.into_iter().map(|v| (v, Invariant::new(1, 2))))
    }

    pub fn invariant(&self, v: Place) -> Invariant {
        self.invariants.get(&v).copied().unwrap_or_else(Invariant::zero)
    }

    pub fn invariants(&self) -> impl Iterator<Item = (Place, Invariant)> + '_ {
        self.invariants.iter().map(|(v, x)| (*v, *x))
    }

    pub fn support(&self) -> impl Iterator<Item = Place> + '_ {
        self.invariants.keys().copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn is_two_torsion(&self) -> bool {
        self.invariants.values().all(|x| *x.denom() == 2)
    }

    pub fn ramified_at_infinity(&self) -> bool {
        self.invariants.contains_key(&Place::Infinite)
    }

    /// Tensor product of the underlying algebras.
    pub fn combine(&self, other: &BrauerClass) -> BrauerClass {
        let mut invariants = self.invariants.clone();
        for (v, x) in &other.invariants {
            let slot = invariants.entry(*v).or_insert_with(Invariant::zero);
            *slot = reduce_mod_one(*slot + x);
        }
        invariants.retain(|_, x| !x.is_zero());
        BrauerClass { invariants }
    }

    /// The `i`-fold tensor power.
    pub fn power(&self, i: i64) -> BrauerClass {
        let mut invariants = BTreeMap::new();
        for (v, x) in &self.invariants {
            let y = reduce_mod_one(*x * Invariant::from_integer(i));
            if !y.is_zero() {
                invariants.insert(*v, y);
            }
        }
        BrauerClass { invariants }
    }

    /// Index (= degree of the division algebra), the lcm of the local denominators.
    pub fn index(&self) -> u64 {
        self.invariants
            .values()
            .fold(1i64, |acc, x| acc.lcm(x.denom()))
            .unsigned_abs()
    }

    /// Whether the class dies over `L`. Only 2-torsion classes are handled.
    pub fn restricts_trivially(&self, field: &QuadExt) -> Result<bool> {
        self.check_two_torsion()?;
        Ok(self
            .support()
            .all(|v| prime_splitting(field, v) != Splitting::Split))
    }

    /// A fixed representative for the restriction of `self` to `L`.
    ///
    /// Two 2-torsion classes have the same restriction to `L` exactly when
    /// they agree at every place that splits in `L`. The representative keeps
    /// those places and, if their count is odd, adds the smallest place that
    /// does not split in `L`.
    pub fn restriction_representative(&self, field: &QuadExt) -> Result<BrauerClass> {
        self.check_two_torsion()?;
        let kept: Vec<Place> = self
            .support()
            .filter(|v| prime_splitting(field, *v) == Splitting::Split)
            .collect();
        if kept.len() % 2 == 0 {
            return BrauerClass::half_at(kept);
        }
        let filler = smallest_nonsplit_place(field);
        BrauerClass::half_at(kept.into_iter().chain(std::iter::once(filler)))
    }

    fn check_two_torsion(&self) -> Result<()> {
        if self.is_two_torsion() {
            Ok(())
        } else {
            Err(Error::unsupported(format!(
                "restriction to a quadratic field needs a 2-torsion class, got {self}"
            )))
        }
    }
}

fn smallest_nonsplit_place(field: &QuadExt) -> Place {
    if field.is_imaginary() {
        return Place::Infinite;
    }
    (2u64..)
        .filter_map(|p| Place::prime(p).ok())
        .find(|v| prime_splitting(field, *v) != Splitting::Split)
        .expect("a quadratic field has infinitely many non-split primes")
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (v, x)) in self.invariants.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({v},{x})")?;
        }
        f.write_str("]")
    }
}

pub fn brauer_combine(c1: &BrauerClass, c2: &BrauerClass) -> BrauerClass {
    c1.combine(c2)
}

pub fn brauer_index(c: &BrauerClass) -> u64 {
    c.index()
}

pub fn restricts_trivially(c: &BrauerClass, field: &QuadExt) -> Result<bool> {
    c.restricts_trivially(field)
}
