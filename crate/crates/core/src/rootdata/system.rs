use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

/// An irreducible reduced root system, nodes numbered as in Bourbaki.
///
/// | type | node lengths^2                         | edges                          |
/// |------|----------------------------------------|--------------------------------|
/// | A_n  | all 2                                  | i - i+1                        |
/// | B_n  | 1..n-1: 4, n: 2                        | i - i+1, double at n-1 = n     |
/// | C_n  | 1..n-1: 2, n: 4                        | i - i+1, double at n-1 = n     |
/// | D_n  | all 2                                  | i - i+1 up to n-1, n-2 - n     |
/// | E_n  | all 2                                  | 1-3, 3-4, 4-5, ..., 2-4        |
/// | F_4  | 1, 2: 4; 3, 4: 2                       | 1-2, 2 = 3 double, 3-4         |
/// | G_2  | 1: 2 (short), 2: 6                     | triple                         |
///
/// `B_1` is the rank-one system with its short root, so its fundamental
/// weight is the spin weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystem {
    family: Family,
    rank: usize,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::domain(format!("{family}{rank} is not a root system")));
        }
        Ok(RootSystem { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots, shortest roots of length^2 2.
    pub fn symmetrized(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut b = vec![vec![0i64; n]; n];
        let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            b[i - 1][j - 1] = v;
            b[j - 1][i - 1] = v;
        };
        match self.family {
            Family::A => {
                for i in 1..=n {
                    b[i - 1][i - 1] = 2;
                }
                for i in 1..n {
                    link(&mut b, i, i + 1, -1);
                }
            }
            Family::B => {
                if n == 1 {
                    b[0][0] = 2;
                } else {
                    for i in 1..n {
                        b[i - 1][i - 1] = 4;
                    }
                    b[n - 1][n - 1] = 2;
                    for i in 1..n {
                        link(&mut b, i, i + 1, -2);
                    }
                }
            }
            Family::C => {
                if n == 1 {
                    b[0][0] = 2;
                } else {
                    for i in 1..n {
                        b[i - 1][i - 1] = 2;
                    }
                    b[n - 1][n - 1] = 4;
                    for i in 1..n - 1 {
                        link(&mut b, i, i + 1, -1);
                    }
                    link(&mut b, n - 1, n, -2);
                }
            }
            Family::D => {
                for i in 1..=n {
                    b[i - 1][i - 1] = 2;
                }
                for i in 1..n - 1 {
                    link(&mut b, i, i + 1, -1);
                }
                link(&mut b, n - 2, n, -1);
            }
            Family::E => {
                for i in 1..=n {
                    b[i - 1][i - 1] = 2;
                }
                link(&mut b, 1, 3, -1);
                link(&mut b, 2, 4, -1);
                for i in 3..n {
                    link(&mut b, i, i + 1, -1);
                }
            }
            Family::F => {
                b[0][0] = 4;
                b[1][1] = 4;
                b[2][2] = 2;
                b[3][3] = 2;
                link(&mut b, 1, 2, -2);
                link(&mut b, 2, 3, -2);
                link(&mut b, 3, 4, -1);
            }
            Family::G => {
                b[0][0] = 2;
                b[1][1] = 6;
                link(&mut b, 1, 2, -3);
            }
        }
        b
    }

    /// Cartan matrix `A_ij = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
    ///
    /// Column `j` lists `alpha_j` in fundamental-weight coordinates.
    pub fn cartan(self) -> Vec<Vec<i64>> {
        let b = self.symmetrized();
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| 2 * b[i][j] / b[i][i]).collect())
            .collect()
    }

    /// Positive roots in simple-root coordinates, sorted by height, then lexicographically.
    pub fn positive_roots(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let a = self.cartan();
        let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        all.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for beta in &layer {
                for i in 0..n {
                    // alpha_i-string through beta: beta - q alpha_i, ..., beta + p alpha_i,
                    // with p - q = -<beta, alpha_i^vee>.
                    let mut q = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if all.contains(&probe) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
                    if q - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !all.contains(&up) {
                            next.insert(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }
        let mut roots: Vec<Vec<i64>> = all.into_iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        roots
    }

    /// `(mu, alpha)` for `mu` in fundamental-weight and `alpha` in simple-root coordinates.
    pub(crate) fn pair(self, diag: &[i64], mu: &[i64], alpha: &[i64]) -> i64 {
        (0..self.rank).map(|j| mu[j] * alpha[j] * diag[j] / 2).sum()
    }

    /// Whether the Dynkin diagram has a symmetry of order 2 (triality excluded).
    pub fn has_diagram_involution(self) -> bool {
        match self.family {
            Family::A => self.rank >= 2,
            Family::D => true,
            Family::E => self.rank == 6,
            _ => false,
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::domain(format!("`{s}` is not a root system label"));
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        RootSystem::new(family, rank)
    }
}

/// Dominant weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn check_rank(&self, sys: RootSystem) -> Result<()> {
        if self.0.len() == sys.rank() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "weight has {} coordinates but {sys} has rank {}",
                self.0.len(),
                sys.rank()
            )))
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::domain(format!("`{t}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Weyl dimension formula, exact.
pub fn weyl_dimension(sys: RootSystem, lambda: &Weight) -> Result<BigUint> {
    lambda.check_rank(sys)?;
    let diag: Vec<i64> = (0..sys.rank()).map(|i| sys.symmetrized()[i][i]).collect();
    let rho = vec![1i64; sys.rank()];
    let shifted: Vec<i64> = lambda.0.iter().map(|&c| i64::from(c) + 1).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for alpha in sys.positive_roots() {
        num *= BigUint::from(sys.pair(&diag, &shifted, &alpha) as u64);
        den *= BigUint::from(sys.pair(&diag, &rho, &alpha) as u64);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}
