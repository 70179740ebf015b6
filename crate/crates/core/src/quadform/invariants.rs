use std::collections::BTreeMap;
use std::fmt;

use super::DiagonalForm;
use crate::error::Result;
use crate::numbertheory::{
    integer, is_square_int, quaternion_class, squarefree, BrauerClass, Place, QuadExt, Rational,
};

/// Center of the even Clifford algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvenCenter {
    /// Odd dimension.
    Rational,
    /// Even dimension, square discriminant: Q x Q.
    SplitEtale,
    /// Even dimension, nonsquare discriminant.
    Field(QuadExt),
}

impl fmt::Display for EvenCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvenCenter::Rational => f.write_str("Q"),
            EvenCenter::SplitEtale => f.write_str("QxQ"),
            EvenCenter::Field(l) => write!(f, "{l}"),
        }
    }
}

/// Brauer data of the even Clifford algebra.
///
/// With center a quadratic field `L`, `class` is a Q-class whose restriction
/// to `L` is the class of the algebra, normalized by
/// [`BrauerClass::restriction_representative`]. With center `Q x Q` it is
/// the class of either factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenClifford {
    pub center: EvenCenter,
    pub class: BrauerClass,
    pub split_over_center: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormInvariants {
    pub dim: usize,
    pub det_mod_squares: i64,
    /// Squarefree part of `(-1)^(n(n-1)/2) det`.
    pub disc: i64,
    pub signature: (usize, usize),
    /// Places with Hasse invariant -1; every other place has +1.
    pub hasse: BTreeMap<Place, i8>,
    /// Class of the full Clifford algebra (even dimension) or of its even
    /// part (odd dimension).
    pub witt_class: BrauerClass,
    pub even: EvenClifford,
}

impl FormInvariants {
    pub fn hasse_at(&self, v: Place) -> i8 {
        self.hasse.get(&v).copied().unwrap_or(1)
    }
}

fn hasse_class(entries: &[Rational]) -> Result<BrauerClass> {
    let mut acc = BrauerClass::trivial();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            acc = acc.combine(&quaternion_class(&entries[i], &entries[j])?);
        }
    }
    Ok(acc)
}

/// Class of `C(<b_1, ..., b_m>)` from
/// `C(<b_1, b_2> + q) = (b_1, b_2) (x) C(-b_1 b_2 q)`, stopping at dimension 0 or 1.
///
/// For odd `m` this is the class over the center, as a Q-class.
#[cfg(test)]
pub(crate) fn clifford_class_by_recursion(entries: &[Rational]) -> Result<BrauerClass> {
    use crate::numbertheory::square_class;
    let mut acc = BrauerClass::trivial();
    let mut rest: Vec<Rational> = entries.to_vec();
    while rest.len() >= 2 {
        let (b1, b2) = (rest[0].clone(), rest[1].clone());
        acc = acc.combine(&quaternion_class(&b1, &b2)?);
        let scale = square_class(&(-(&b1 * &b2)))?;
        rest = rest[2..]
            .iter()
            .map(|b| square_class(&(b * &scale)))
            .collect::<Result<_>>()?;
    }
    Ok(acc)
}

/// Class of `(prod x, prod y)`, expanded bimultiplicatively so no product
/// of entries is ever factored.
fn symbol_of_products(x: &[Rational], y: &[Rational]) -> Result<BrauerClass> {
    let mut acc = BrauerClass::trivial();
    for a in x {
        for b in y {
            acc = acc.combine(&quaternion_class(a, b)?);
        }
    }
    Ok(acc)
}

/// `C^0(<a_1, ..., a_n>) = C(<-a_n a_1, ..., -a_n a_{n-1}>)`, through the
/// Hasse invariant and determinant of the second form. For even `n` that
/// form has odd length; over its center only the first `n - 2` entries count.
fn even_class_raw(form: &DiagonalForm) -> Result<BrauerClass> {
    let e = form.entries();
    let n = e.len();
    let m = if n % 2 == 1 { n - 1 } else { n - 2 };
    let t = -&e[n - 1];
    let b: Vec<[Rational; 2]> = e[..m].iter().map(|a| [t.clone(), a.clone()]).collect();
    let mut acc = BrauerClass::trivial();
    for i in 0..m {
        for j in i + 1..m {
            acc = acc.combine(&symbol_of_products(&b[i], &b[j])?);
        }
    }
    // m is even, so det of the second form is prod a_i up to squares.
    let mut det: Vec<Rational> = e[..m].to_vec();
    let minus_one = [integer(-1)];
    let corr = match m % 8 {
        2 => BrauerClass::trivial(),
        4 => {
            det.push(integer(-1));
            symbol_of_products(&minus_one, &det)?
        }
        6 => quaternion_class(&minus_one[0], &minus_one[0])?,
        _ => symbol_of_products(&minus_one, &det)?,
    };
    Ok(acc.combine(&corr))
}

/// Witt invariant from the Hasse invariant `s` and the determinant:
/// `c = s + corr(n mod 8)`.
pub fn witt_class_closed_form(form: &DiagonalForm) -> Result<BrauerClass> {
    let s = hasse_class(form.entries())?;
    let det = form.det();
    let minus_one = integer(-1);
    let corr = match form.dim() % 8 {
        1 | 2 => BrauerClass::trivial(),
        3 | 4 => quaternion_class(&minus_one, &(-det))?,
        5 | 6 => quaternion_class(&minus_one, &minus_one)?,
        _ => quaternion_class(&minus_one, &det)?,
    };
    Ok(s.combine(&corr))
}

fn signed_disc(form: &DiagonalForm) -> Result<i64> {
    let n = form.dim();
    let det = form.det();
    let d = if (n * (n - 1) / 2) % 2 == 0 { det } else { -det };
    squarefree(&d)
}

pub fn even_clifford_class(form: &DiagonalForm) -> Result<EvenClifford> {
    let class = even_class_raw(form)?;
    if form.dim() % 2 == 1 {
        let split = class.is_trivial();
        return Ok(EvenClifford { center: EvenCenter::Rational, class, split_over_center: split });
    }
    let disc = signed_disc(form)?;
    if is_square_int(disc as i128) {
        let split = class.is_trivial();
        return Ok(EvenClifford { center: EvenCenter::SplitEtale, class, split_over_center: split });
    }
    let l = QuadExt::new(disc)?;
    Ok(EvenClifford {
        center: EvenCenter::Field(l),
        split_over_center: class.restricts_trivially(&l)?,
        class: class.restriction_representative(&l)?,
    })
}

pub fn invariants(form: &DiagonalForm) -> Result<FormInvariants> {
    let hasse = hasse_class(form.entries())?
        .support()
        .map(|v| (v, -1))
        .collect();
    Ok(FormInvariants {
        dim: form.dim(),
        det_mod_squares: squarefree(&form.det())?,
        disc: signed_disc(form)?,
        signature: form.signature(),
        hasse,
        witt_class: witt_class_closed_form(form)?,
        even: even_clifford_class(form)?,
    })
}

/// Whether the even Clifford algebra of a real form of signature `(p, q)`
/// is not split.
pub fn real_even_clifford_nonsplit(p: usize, q: usize) -> bool {
    let t = (2 * p as i64 - (p + q) as i64).rem_euclid(8);
    (3..=5).contains(&t)
}
