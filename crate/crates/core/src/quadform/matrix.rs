use num_traits::{One, Zero};

use super::DiagonalForm;
use crate::error::{Error, Result};
use crate::numbertheory::Rational;

/// Invertible symmetric matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl SymMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::domain("matrix must have dimension at least 1"));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix must be square"));
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::domain(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        let m = SymMatrix { n, rows };
        if m.determinant().is_zero() {
            return Err(Error::domain("matrix is singular"));
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        SymMatrix { n, rows }
    }

    pub fn from_diagonal(form: &DiagonalForm) -> Self {
        let n = form.dim();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (i, a) in form.entries().iter().enumerate() {
            rows[i][i] = a.clone();
        }
        SymMatrix { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        determinant(&self.rows)
    }

    /// `P^T M P`. Fails when `P` is not square of the right size or is singular.
    pub fn congruent(&self, p: &[Vec<Rational>]) -> Result<SymMatrix> {
        let n = self.n;
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::domain("transform has the wrong shape"));
        }
        if determinant(p).is_zero() {
            return Err(Error::domain("transform is singular"));
        }
        let mut mp = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    acc += &self.rows[i][k] * &p[k][j];
                }
                mp[i][j] = acc;
            }
        }
        let mut out = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    acc += &p[k][i] * &mp[k][j];
                }
                out[i][j] = acc;
            }
        }
        Ok(SymMatrix { n, rows: out })
    }
}

pub(crate) fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if piv != c {
            a.swap(piv, c);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

/// Diagonalizes by symmetric row/column operations, returning the form and
/// the transform `P` with `P^T M P` diagonal.
pub fn diagonalize_with_transform(m: &SymMatrix) -> Result<(DiagonalForm, Vec<Vec<Rational>>)> {
    let n = m.n;
    let mut a = m.rows.clone();
    let mut p = SymMatrix::identity(n).rows;

    // Column operation c_i += f * c_j on `a` (both sides) and on `p`.
    fn add_multiple(a: &mut [Vec<Rational>], p: &mut [Vec<Rational>], i: usize, j: usize, f: &Rational) {
        let n = a.len();
        for r in 0..n {
            let t = f * &a[r][j];
            a[r][i] += t;
        }
        for c in 0..n {
            let t = f * &a[j][c];
            a[i][c] += t;
        }
        for r in 0..n {
            let t = f * &p[r][j];
            p[r][i] += t;
        }
    }

    for i in 0..n {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
                for row in p.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                // a_ii + 2 a_ij + a_jj = 2 a_ij, nonzero
                add_multiple(&mut a, &mut p, i, j, &Rational::one());
            } else {
                return Err(Error::domain("matrix is singular"));
            }
        }
        for k in i + 1..n {
            if a[k][i].is_zero() {
                continue;
            }
            let f = -(&a[k][i] / &a[i][i]);
            add_multiple(&mut a, &mut p, k, i, &f);
        }
    }
    let entries = (0..n).map(|i| a[i][i].clone()).collect();
    Ok((DiagonalForm::new(entries)?, p))
}

pub fn diagonalize(m: &SymMatrix) -> Result<DiagonalForm> {
    diagonalize_with_transform(m).map(|(d, _)| d)
}
