//! Nondegenerate quadratic forms over Q and their invariants.

mod invariants;
mod matrix;

pub use invariants::{
    even_clifford_class, invariants, real_even_clifford_nonsplit, witt_class_closed_form,
    EvenCenter, EvenClifford, FormInvariants,
};
pub use matrix::{diagonalize, diagonalize_with_transform, SymMatrix};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numbertheory::Rational;

/// The form `a_1 x_1^2 + ... + a_n x_n^2` with all `a_i` nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalForm {
    entries: Vec<Rational>,
}

impl DiagonalForm {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("a diagonal form needs at least one entry"));
        }
        if let Some(i) = entries.iter().position(Zero::is_zero) {
            return Err(Error::domain(format!("entry {i} of the diagonal form is zero")));
        }
        Ok(DiagonalForm { entries })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&a| Rational::from_integer(a.into())).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Determinant `a_1 ... a_n`.
    pub fn det(&self) -> Rational {
        self.entries.iter().fold(Rational::one(), |acc, a| acc * a)
    }

    /// `(positive entries, negative entries)`.
    pub fn signature(&self) -> (usize, usize) {
        let p = self.entries.iter().filter(|a| a.is_positive()).count();
        (p, self.dim() - p)
    }

    pub fn scaled(&self, c: &Rational) -> Result<DiagonalForm> {
        DiagonalForm::new(self.entries.iter().map(|a| a * c).collect())
    }
}
