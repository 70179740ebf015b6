//! Rational points on the conic `a x^2 + b y^2 = z^2` by exhaustive search.
//!
//! Independent of the Hilbert symbol code: it shares only squarefree
//! reduction and integer square roots.

use num_integer::Integer;

use super::squarefree::{is_square_int, isqrt, squarefree_int};
use super::Rational;
use crate::error::{Error, Result};

/// Removes square factors from a nonzero integer.
fn strip_squares(c: i128) -> Result<i128> {
    squarefree_int(c).map(i128::from)
}

/// Rewrites `c1 x^2 + c2 y^2 + c3 z^2 = 0` until the coefficients are
/// squarefree and pairwise coprime. Each step preserves solvability.
fn legendre_reduce(mut c: [i128; 3]) -> Result<[i128; 3]> {
    for ci in c.iter_mut() {
        *ci = strip_squares(*ci)?;
    }
    loop {
        let mut changed = false;
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let g = c[i].gcd(&c[j]);
            if g > 1 {
                c[i] /= g;
                c[j] /= g;
                c[k] = strip_squares(c[k] * g)?;
                changed = true;
            }
        }
        if !changed {
            return Ok(c);
        }
    }
}

/// Whether `c1 x^2 + c2 y^2 + c3 z^2 = 0` has a nonzero integer solution, for
/// squarefree pairwise coprime coefficients.
///
/// A solution exists iff one exists with `|x| <= sqrt|c2 c3|` and the
/// analogous bounds on `y` and `z` (Holzer), so the search below is exact.
fn reduced_has_point(c: [i128; 3]) -> bool {
    if c.iter().all(|x| *x > 0) || c.iter().all(|x| *x < 0) {
        return false;
    }
    let bound = |i: usize| {
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        isqrt((c[j] * c[k]).unsigned_abs()) as i128
    };
    // Solve for the variable with the smallest coefficient; it has the largest bound.
    let solve = (0..3).min_by_key(|&i| c[i].abs()).unwrap();
    let others: Vec<usize> = (0..3).filter(|&i| i != solve).collect();
    let (u, w) = (others[0], others[1]);
    for s in 0..=bound(u) {
        for t in 0..=bound(w) {
            if s == 0 && t == 0 {
                continue;
            }
            let rest = -(c[u] * s * s + c[w] * t * t);
            if rest % c[solve] != 0 {
                continue;
            }
            if is_square_int(rest / c[solve]) {
                return true;
            }
        }
    }
    false
}

/// Whether `a x^2 + b y^2 = z^2` has a rational point other than the origin.
pub fn conic_has_point(a: &Rational, b: &Rational) -> Result<bool> {
    let sa = super::squarefree(a).map_err(|_| Error::domain("conic: a must be nonzero"))?;
    let sb = super::squarefree(b).map_err(|_| Error::domain("conic: b must be nonzero"))?;
    let c = legendre_reduce([sa as i128, sb as i128, -1])?;
    Ok(reduced_has_point(c))
}
