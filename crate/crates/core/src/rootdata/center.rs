use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use super::system::{weyl_dimension, Family, RootSystem, Weight};
use crate::error::{Error, Result};

/// `Z* = P / Q` as a product of cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalGroup {
    orders: Vec<u32>,
}

impl FundamentalGroup {
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> u32 {
        self.orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn identity(&self) -> CenterCharacter {
        CenterCharacter { residues: vec![0; self.orders.len()], orders: self.orders.clone() }
    }

    /// All elements, in lexicographic order of residues.
    pub fn elements(&self) -> Vec<CenterCharacter> {
        let mut out = vec![self.identity()];
        for (k, &m) in self.orders.iter().enumerate() {
            let base = std::mem::take(&mut out);
            for c in base {
                for r in 0..m {
                    let mut d = c.clone();
                    d.residues[k] = r;
                    out.push(d);
                }
            }
        }
        out.sort();
        out
    }

    /// Builds the element with the given residues (reduced).
    pub fn element(&self, residues: &[i64]) -> Result<CenterCharacter> {
        if residues.len() != self.orders.len() {
            return Err(Error::domain(format!(
                "character needs {} residues, got {}",
                self.orders.len(),
                residues.len()
            )));
        }
        Ok(CenterCharacter {
            residues: residues
                .iter()
                .zip(&self.orders)
                .map(|(r, m)| r.rem_euclid(i64::from(*m)) as u32)
                .collect(),
            orders: self.orders.clone(),
        })
    }
}

impl fmt::Display for FundamentalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.orders.iter().map(|m| format!("Z/{m}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// An element of `Z*`, i.e. a weight modulo the root lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CenterCharacter {
    residues: Vec<u32>,
    orders: Vec<u32>,
}

impl CenterCharacter {
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|r| *r == 0)
    }

    pub fn add(&self, other: &CenterCharacter) -> CenterCharacter {
        debug_assert_eq!(self.orders, other.orders);
        let residues = self
            .residues
            .iter()
            .zip(&other.residues)
            .zip(&self.orders)
            .map(|((a, b), m)| (a + b) % m)
            .collect();
        CenterCharacter { residues, orders: self.orders.clone() }
    }

    pub fn neg(&self) -> CenterCharacter {
        let residues = self.residues.iter().zip(&self.orders).map(|(a, m)| (m - a) % m).collect();
        CenterCharacter { residues, orders: self.orders.clone() }
    }

    pub fn scale(&self, k: i64) -> CenterCharacter {
        let residues = self
            .residues
            .iter()
            .zip(&self.orders)
            .map(|(a, m)| (i64::from(*a) * k).rem_euclid(i64::from(*m)) as u32)
            .collect();
        CenterCharacter { residues, orders: self.orders.clone() }
    }

    pub fn order(&self) -> u32 {
        (1..).find(|&k| self.scale(i64::from(k)).is_identity()).unwrap()
    }
}

impl fmt::Display for CenterCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.residues.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn fundamental_group(sys: RootSystem) -> FundamentalGroup {
    let n = sys.rank() as u32;
    let orders = match sys.family() {
        Family::A => vec![n + 1],
        Family::B | Family::C => vec![2],
        Family::D if n % 2 == 1 => vec![4],
        Family::D => vec![2, 2],
        Family::E if n == 6 => vec![3],
        Family::E if n == 7 => vec![2],
        Family::E | Family::F | Family::G => vec![],
    };
    FundamentalGroup { orders }
}

/// Image of the fundamental weight `varpi_{i+1}` in `Z*`, as residues.
fn fundamental_image(sys: RootSystem, i: usize) -> Vec<i64> {
    let n = sys.rank();
    let node = i as i64 + 1;
    match sys.family() {
        Family::A => vec![node],
        Family::B => vec![i64::from(node == n as i64)],
        Family::C => vec![node % 2],
        Family::D if n % 2 == 1 => {
            if i == n - 1 {
                vec![1]
            } else if i == n - 2 {
                vec![3]
            } else {
                vec![2 * node]
            }
        }
        Family::D => {
            if i == n - 1 {
                vec![0, 1]
            } else if i == n - 2 {
                vec![1, 0]
            } else {
                vec![node, node]
            }
        }
        Family::E if n == 6 => vec![[1, 0, 2, 0, 1, 2][i]],
        Family::E if n == 7 => vec![[0, 1, 0, 0, 1, 0, 1][i]],
        _ => vec![],
    }
}

/// Restriction of `lambda` to the center of the simply connected group.
pub fn center_character(sys: RootSystem, lambda: &Weight) -> Result<CenterCharacter> {
    lambda.check_rank(sys)?;
    let group = fundamental_group(sys);
    let mut acc = vec![0i64; group.orders().len()];
    for (i, &c) in lambda.coords().iter().enumerate() {
        for (slot, r) in acc.iter_mut().zip(fundamental_image(sys, i)) {
            *slot += i64::from(c) * r;
        }
    }
    group.element(&acc)
}

/// Node permutation of the diagram involution.
fn diagram_flip(sys: RootSystem, i: usize) -> usize {
    let n = sys.rank();
    match sys.family() {
        Family::A => n - 1 - i,
        Family::D if i == n - 2 => n - 1,
        Family::D if i == n - 1 => n - 2,
        Family::E => [5, 1, 4, 3, 2, 0][i],
        _ => i,
    }
}

/// The `*`-action: identity for inner forms, the diagram involution for outer ones.
pub fn star_action(sys: RootSystem, outer: bool, lambda: &Weight) -> Result<Weight> {
    lambda.check_rank(sys)?;
    if !outer {
        return Ok(lambda.clone());
    }
    if !sys.has_diagram_involution() {
        return Err(Error::domain(format!("{sys} has no diagram symmetry of order 2")));
    }
    let mut out = vec![0; sys.rank()];
    for (i, &c) in lambda.coords().iter().enumerate() {
        out[diagram_flip(sys, i)] = c;
    }
    Ok(Weight(out))
}

/// Solves `A m = lambda` over Q and checks that `m` is integral.
pub fn in_root_lattice(sys: RootSystem, lambda: &Weight) -> Result<bool> {
    lambda.check_rank(sys)?;
    let n = sys.rank();
    let a = sys.cartan();
    let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<i64>> = a[i].iter().map(|&x| Ratio::from_integer(x)).collect();
            row.push(Ratio::from_integer(i64::from(lambda.coords()[i])));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !m[r][c].is_zero()).expect("Cartan matrices are invertible");
        m.swap(c, piv);
        let p = m[c][c];
        for k in c..=n {
            m[c][k] /= p;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in c..=n {
                    let t = f * m[c][k];
                    m[r][k] -= t;
                }
            }
        }
    }
    Ok((0..n).all(|i| m[i][n].is_integer()))
}

/// One dominant representative per element of `Z*`: the identity maps to 0,
/// every other element to the fundamental weight of least dimension in its
/// class (lowest node on ties).
pub fn character_representatives(sys: RootSystem) -> Vec<(CenterCharacter, Weight)> {
    let group = fundamental_group(sys);
    let n = sys.rank();
    let mut out = Vec::new();
    for c in group.elements() {
        if c.is_identity() {
            out.push((c, Weight::zero(n)));
            continue;
        }
        let rep = (0..n)
            .map(|i| Weight::fundamental(n, i))
            .filter(|w| center_character(sys, w).map(|x| x == c).unwrap_or(false))
            .min_by_key(|w| weyl_dimension(sys, w).expect("rank checked"))
            .expect("fundamental weights generate Z*");
        out.push((c, rep));
    }
    out
}

/// The `*`-action transported to `Z*`.
pub fn star_on_character(sys: RootSystem, outer: bool, c: &CenterCharacter) -> Result<CenterCharacter> {
    let (_, rep) = character_representatives(sys)
        .into_iter()
        .find(|(d, _)| d == c)
        .ok_or_else(|| Error::domain(format!("{c} is not an element of Z* for {sys}")))?;
    center_character(sys, &star_action(sys, outer, &rep)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    fn w(c: &[u32]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn documented_groups() {
        assert_eq!(fundamental_group(sys("A2")).orders(), &[3]);
        assert_eq!(fundamental_group(sys("D4")).orders(), &[2, 2]);
        assert!(fundamental_group(sys("E8")).is_trivial());
        assert_eq!(fundamental_group(sys("D5")).orders(), &[4]);
        assert_eq!(fundamental_group(sys("E6")).to_string(), "Z/3");
    }

    #[test]
    fn documented_characters() {
        let c = center_character(sys("A1"), &w(&[1])).unwrap();
        assert_eq!(c.residues(), &[1]);
        assert_eq!(c.order(), 2);
        assert!(center_character(sys("A2"), &w(&[1, 1])).unwrap().is_identity());
    }

    #[test]
    fn roots_have_trivial_character() {
        for s in ["A1", "A5", "B1", "B4", "C3", "D4", "D5", "D6", "D7", "E6", "E7", "E8", "F4", "G2"] {
            let rs = sys(s);
            let a = rs.cartan();
            for j in 0..rs.rank() {
                let coords: Vec<i64> = (0..rs.rank()).map(|i| a[i][j]).collect();
                // alpha_j = sum_i A_ij varpi_i, possibly with negative coordinates;
                // add 3 varpi per node to stay dominant, then compare.
                let shifted = Weight(coords.iter().map(|&x| (x + 3) as u32).collect());
                let base = Weight(vec![3; rs.rank()]);
                let lhs = center_character(rs, &shifted).unwrap();
                let rhs = center_character(rs, &base).unwrap();
                assert_eq!(lhs, rhs, "{s} alpha_{}", j + 1);
            }
        }
    }

    #[test]
    fn kernel_is_root_lattice() {
        for s in ["A3", "B2", "B3", "C2", "C4", "D4", "D5", "E6", "E7", "G2", "F4"] {
            let rs = sys(s);
            let n = rs.rank();
            let mut coords = vec![0u32; n];
            // every weight with coordinates <= 2
            loop {
                let lambda = Weight(coords.clone());
                assert_eq!(
                    in_root_lattice(rs, &lambda).unwrap(),
                    center_character(rs, &lambda).unwrap().is_identity(),
                    "{s} {lambda}"
                );
                let Some(k) = coords.iter().position(|&c| c < 2) else { break };
                for c in coords.iter_mut().take(k) {
                    *c = 0;
                }
                coords[k] += 1;
            }
        }
    }

    #[test]
    fn root_lattice_examples() {
        assert!(in_root_lattice(sys("A1"), &w(&[2])).unwrap());
        assert!(!in_root_lattice(sys("A1"), &w(&[1])).unwrap());
        assert!(!in_root_lattice(sys("B2"), &w(&[0, 1])).unwrap());
        assert!(in_root_lattice(sys("B2"), &w(&[1, 0])).unwrap());
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_action(sys("A2"), true, &w(&[1, 0])).unwrap(), w(&[0, 1]));
        assert_eq!(star_action(sys("B3"), false, &w(&[1, 0, 2])).unwrap(), w(&[1, 0, 2]));
        assert!(star_action(sys("B3"), true, &w(&[1, 0, 0])).is_err());
        assert!(star_action(sys("A1"), true, &w(&[1])).is_err());
        // lambda_+ <-> lambda_-
        assert_eq!(star_action(sys("D5"), true, &w(&[0, 0, 0, 0, 1])).unwrap(), w(&[0, 0, 0, 1, 0]));
        assert_eq!(star_action(sys("D5"), true, &w(&[1, 2, 3, 0, 0])).unwrap(), w(&[1, 2, 3, 0, 0]));
        assert_eq!(
            star_action(sys("E6"), true, &w(&[1, 2, 3, 4, 5, 6])).unwrap(),
            w(&[6, 2, 5, 4, 3, 1])
        );
    }

    #[test]
    fn star_on_characters() {
        let e6 = sys("E6");
        let g = fundamental_group(e6);
        let one = g.element(&[1]).unwrap();
        assert_eq!(star_on_character(e6, true, &one).unwrap(), one.neg());
        let d4 = sys("D4");
        let g = fundamental_group(d4);
        let plus = g.element(&[0, 1]).unwrap();
        assert_eq!(star_on_character(d4, true, &plus).unwrap(), g.element(&[1, 0]).unwrap());
        let vector = g.element(&[1, 1]).unwrap();
        assert_eq!(star_on_character(d4, true, &vector).unwrap(), vector);
        let d5 = sys("D5");
        let g = fundamental_group(d5);
        assert_eq!(star_on_character(d5, true, &g.element(&[1]).unwrap()).unwrap(), g.element(&[3]).unwrap());
    }

    #[test]
    fn representatives_cover_the_group() {
        for s in ["A4", "B3", "C3", "D4", "D5", "E6", "E7", "E8"] {
            let rs = sys(s);
            let reps = character_representatives(rs);
            assert_eq!(reps.len() as u32, fundamental_group(rs).order());
            for (c, wt) in reps {
                assert_eq!(center_character(rs, &wt).unwrap(), c);
            }
        }
        let reps = character_representatives(sys("D5"));
        let spin: Vec<&Weight> = reps.iter().filter(|(c, _)| c.order() == 4).map(|(_, w)| w).collect();
        assert_eq!(spin, vec![&w(&[0, 0, 0, 0, 1]), &w(&[0, 0, 0, 1, 0])]);
    }
}
