use std::fmt;

use num_integer::Integer;

use super::descriptor::{E7Label, LieDescriptor};
use crate::error::{Error, Result};
use crate::numbertheory::{integer, quaternion_class, BrauerClass, Invariant, Place, QuadExt};
use crate::quadform::even_clifford_class;
use crate::rootdata::{
    center_character, fundamental_group, star_on_character, CenterCharacter, RootSystem, Weight,
};

/// Finite-dimensional real division algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealAlgebra {
    Real,
    Complex,
    Quaternion,
}

impl fmt::Display for RealAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealAlgebra::Real => "R",
            RealAlgebra::Complex => "C",
            RealAlgebra::Quaternion => "H",
        })
    }
}

/// Center of a Tits algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Center {
    Rational,
    Quadratic(QuadExt),
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Center::Rational => f.write_str("Q"),
            Center::Quadratic(l) => write!(f, "{l}"),
        }
    }
}

/// Brauer data of a Tits algebra.
///
/// `Known` classes with a quadratic center are Q-classes standing for their
/// restriction to that center. `Opaque` classes come from index tables that
/// record only (non)triviality and the behavior at the infinite place; a
/// nontrivial opaque class ramified at infinity is a quaternion class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TitsClass {
    Known(BrauerClass),
    Opaque { nontrivial: bool, ramified_at_infinity: bool },
}

impl TitsClass {
    pub fn is_trivial(&self) -> bool {
        match self {
            TitsClass::Known(c) => c.is_trivial(),
            TitsClass::Opaque { nontrivial, .. } => !nontrivial,
        }
    }

    pub fn ramified_at_infinity(&self) -> bool {
        match self {
            TitsClass::Known(c) => c.ramified_at_infinity(),
            TitsClass::Opaque { ramified_at_infinity, .. } => *ramified_at_infinity,
        }
    }

    pub fn known(&self) -> Result<&BrauerClass> {
        match self {
            TitsClass::Known(c) => Ok(c),
            TitsClass::Opaque { .. } => Err(Error::unsupported(
                "this Tits algebra is only known up to (non)triviality",
            )),
        }
    }

    pub fn local_invariant(&self, v: Place) -> Result<Invariant> {
        self.known().map(|c| c.invariant(v))
    }
}

impl fmt::Display for TitsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TitsClass::Known(c) => write!(f, "{c}"),
            TitsClass::Opaque { nontrivial: false, .. } => f.write_str("trivial"),
            TitsClass::Opaque { ramified_at_infinity: true, .. } => f.write_str("nontrivial(H at inf)"),
            TitsClass::Opaque { .. } => f.write_str("nontrivial"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TitsReport {
    pub center: Center,
    pub q_class: TitsClass,
    pub r_algebra: RealAlgebra,
    pub division_after_real: bool,
}

/// Whether `q_class (x)_Q R` is a division algebra.
pub fn remains_division_over_r(center: &Center, q_class: &TitsClass) -> bool {
    match (center, q_class) {
        (Center::Rational, TitsClass::Known(c)) => {
            c.is_trivial() || (c.ramified_at_infinity() && c.index() == 2)
        }
        (Center::Rational, TitsClass::Opaque { nontrivial, ramified_at_infinity }) => {
            !nontrivial || *ramified_at_infinity
        }
        (Center::Quadratic(l), _) if !l.is_imaginary() => false,
        (Center::Quadratic(l), TitsClass::Known(c)) => c.restricts_trivially(l).unwrap_or(false),
        (Center::Quadratic(_), TitsClass::Opaque { nontrivial, .. }) => !nontrivial,
    }
}

/// Character of the vector representation `varpi_1`.
fn vector_character(sys: RootSystem) -> Result<CenterCharacter> {
    center_character(sys, &Weight::fundamental(sys.rank(), 0))
}

fn check_character(sys: RootSystem, c: &CenterCharacter) -> Result<()> {
    if fundamental_group(sys).elements().contains(c) {
        Ok(())
    } else {
        Err(Error::domain(format!("{c} is not a character of the center for {sys}")))
    }
}

/// Whether the `*`-action over Q fixes `c`.
pub fn fixed_over_q(desc: &LieDescriptor, c: &CenterCharacter) -> Result<bool> {
    let sys = desc.root_system()?;
    check_character(sys, c)?;
    Ok(match desc.splitting_field()? {
        None => true,
        Some(_) => &star_on_character(sys, true, c)? == c,
    })
}

fn indeterminate(msg: impl Into<String>) -> Error {
    Error::Indeterminate(msg.into())
}

pub(crate) fn class_q(desc: &LieDescriptor, c: &CenterCharacter, fixed: bool) -> Result<TitsClass> {
    let sys = desc.root_system()?;
    if c.is_identity() {
        return Ok(TitsClass::Known(BrauerClass::trivial()));
    }
    let residue = i64::from(c.residues()[0]);
    let known = TitsClass::Known;
    match desc {
        LieDescriptor::SplitSimple { .. } | LieDescriptor::CSplit { .. } | LieDescriptor::Exceptional { .. } => {
            Ok(known(BrauerClass::trivial()))
        }
        LieDescriptor::AInner { class, .. } => Ok(known(class.power(residue))),
        LieDescriptor::AOuter { n, field, d_d, det_b, .. } => {
            if fixed {
                if *d_d != 1 {
                    return Err(indeterminate(
                        "the Tits algebra of the fixed character is not modeled when D is not L",
                    ));
                }
                let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
                let b = integer(sign) * det_b;
                return Ok(known(quaternion_class(&integer(field.d()), &b)?));
            }
            if *d_d == 1 {
                Ok(known(BrauerClass::trivial()))
            } else if residue.gcd(&(*d_d as i64)) == 1 {
                Ok(TitsClass::Opaque { nontrivial: true, ramified_at_infinity: false })
            } else {
                Err(indeterminate(format!(
                    "the class of D^{residue} over L is not determined by the degree dD = {d_d}"
                )))
            }
        }
        LieDescriptor::BOdd { form } => Ok(known(even_clifford_class(form)?.class)),
        LieDescriptor::CQuat { d, .. } => Ok(known(d.clone())),
        LieDescriptor::DOrth { form, .. } => {
            if c == &vector_character(sys)? {
                Ok(known(BrauerClass::trivial()))
            } else {
                Ok(known(even_clifford_class(form)?.class))
            }
        }
        LieDescriptor::DQuat { k, d, c0_class, .. } => {
            if c == &vector_character(sys)? {
                return Ok(known(d.clone()));
            }
            if k % 2 == 0 {
                if fixed && d.ramified_at_infinity() {
                    Ok(TitsClass::Opaque { nontrivial: true, ramified_at_infinity: true })
                } else {
                    Err(indeterminate(
                        "the spin Tits algebra is only determined when the form is inner and D is ramified at infinity",
                    ))
                }
            } else {
                let c0 = c0_class
                    .as_ref()
                    .ok_or_else(|| Error::MissingInvariant("c0Class (class of the even Clifford algebra C0_D(B))".into()))?;
                match desc.splitting_field()? {
                    Some(l) => Ok(known(c0.restriction_representative(&l)?)),
                    None => Err(indeterminate(
                        "with k odd and an inner form the spin Tits algebra has exponent 4 and is not modeled",
                    )),
                }
            }
        }
        LieDescriptor::E6Inner { index } => {
            if index.strongly_inner() {
                Ok(known(BrauerClass::trivial()))
            } else {
                Ok(TitsClass::Opaque { nontrivial: true, ramified_at_infinity: false })
            }
        }
        LieDescriptor::E6Outer { field, splits_over_l } => {
            if *splits_over_l {
                Ok(known(BrauerClass::trivial()))
            } else if field.is_imaginary() {
                Ok(TitsClass::Opaque { nontrivial: true, ramified_at_infinity: false })
            } else {
                Err(indeterminate("over a real field L a non-split form may still be strongly inner"))
            }
        }
        LieDescriptor::E7 { index_q, index_r } => e7_class(*index_q, *index_r),
        LieDescriptor::ResScalars { .. } | LieDescriptor::DirectSum { .. } => Err(Error::unsupported(
            format!("Tits classes of {} are computed factorwise", desc.kind()),
        )),
    }
}

fn e7_class(index_q: E7Label, index_r: E7Label) -> Result<TitsClass> {
    match (index_q.tits_trivial(), index_r.tits_trivial()) {
        (Some(true), _) => Ok(TitsClass::Known(BrauerClass::trivial())),
        (_, Some(false)) => Ok(TitsClass::Opaque { nontrivial: true, ramified_at_infinity: true }),
        (Some(false), Some(true)) => Ok(TitsClass::Opaque { nontrivial: true, ramified_at_infinity: false }),
        (Some(false), None) => Err(indeterminate(format!(
            "real index {index_r} does not determine the real Tits algebra"
        ))),
        (None, _) => Err(indeterminate(format!(
            "rational index {index_q} does not determine the Tits algebra"
        ))),
    }
}

/// Tits algebra data for the character `c`.
pub fn tits_class_q(desc: &LieDescriptor, c: &CenterCharacter) -> Result<TitsReport> {
    let fixed = fixed_over_q(desc, c)?;
    let center = if fixed {
        Center::Rational
    } else {
        Center::Quadratic(desc.splitting_field()?.expect("non-fixed characters need an outer form"))
    };
    let q_class = class_q(desc, c, fixed)?;
    let r_algebra = match center {
        Center::Quadratic(l) if l.is_imaginary() => RealAlgebra::Complex,
        _ if q_class.ramified_at_infinity() => RealAlgebra::Quaternion,
        _ => RealAlgebra::Real,
    };
    let division_after_real = remains_division_over_r(&center, &q_class);
    Ok(TitsReport { center, q_class, r_algebra, division_after_real })
}

pub fn tits_class_r(desc: &LieDescriptor, c: &CenterCharacter) -> Result<RealAlgebra> {
    tits_class_q(desc, c).map(|r| r.r_algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::DiagonalForm;
    use crate::rootdata::Family;

    fn p(n: u64) -> Place {
        Place::prime(n).unwrap()
    }

    fn half(places: &[Place]) -> BrauerClass {
        BrauerClass::half_at(places.iter().copied()).unwrap()
    }

    fn ch(desc: &LieDescriptor, r: &[i64]) -> CenterCharacter {
        fundamental_group(desc.root_system().unwrap()).element(r).unwrap()
    }

    #[test]
    fn a_inner_powers() {
        let h = half(&[p(2), Place::Infinite]);
        let desc = LieDescriptor::AInner { n: 3, d: 2, class: h.clone() };
        let r1 = tits_class_q(&desc, &ch(&desc, &[1])).unwrap();
        assert_eq!(r1.q_class, TitsClass::Known(h));
        assert_eq!(r1.center, Center::Rational);
        assert_eq!(r1.r_algebra, RealAlgebra::Quaternion);
        assert!(r1.division_after_real);
        let r2 = tits_class_q(&desc, &ch(&desc, &[2])).unwrap();
        assert!(r2.q_class.is_trivial());
    }

    #[test]
    fn b_odd_three_squares() {
        let desc = LieDescriptor::BOdd { form: DiagonalForm::from_integers(&[1, 1, 1]).unwrap() };
        let r = tits_class_q(&desc, &ch(&desc, &[1])).unwrap();
        assert_eq!(r.q_class, TitsClass::Known(half(&[p(2), Place::Infinite])));
    }

    #[test]
    fn real_algebras() {
        let desc = LieDescriptor::CQuat { n: 2, d: half(&[p(2), Place::Infinite]), diagonal: None };
        assert_eq!(tits_class_r(&desc, &ch(&desc, &[1])).unwrap(), RealAlgebra::Quaternion);
        let desc = LieDescriptor::AOuter {
            n: 3,
            field: QuadExt::new(-1).unwrap(),
            d_d: 1,
            det_b: integer(1),
            diagonal: None,
        };
        assert_eq!(tits_class_r(&desc, &ch(&desc, &[1])).unwrap(), RealAlgebra::Complex);
        let split = LieDescriptor::SplitSimple { sys: RootSystem::new(Family::E, 7).unwrap() };
        assert_eq!(tits_class_r(&split, &ch(&split, &[1])).unwrap(), RealAlgebra::Real);
    }

    #[test]
    fn division_rule_examples() {
        assert!(remains_division_over_r(&Center::Rational, &TitsClass::Known(BrauerClass::trivial())));
        assert!(!remains_division_over_r(&Center::Rational, &TitsClass::Known(half(&[p(2), p(3)]))));
        let gaussian = Center::Quadratic(QuadExt::new(-1).unwrap());
        assert!(!remains_division_over_r(&gaussian, &TitsClass::Known(half(&[p(5), Place::Infinite]))));
        assert!(remains_division_over_r(&gaussian, &TitsClass::Known(half(&[p(2), Place::Infinite]))));
        let cubic = BrauerClass::from_invariants([
            (Place::Infinite, Invariant::new(1, 2)),
            (p(2), Invariant::new(1, 3)),
            (p(3), Invariant::new(1, 6)),
        ])
        .unwrap();
        assert!(!remains_division_over_r(&Center::Rational, &TitsClass::Known(cubic)));
        let real = Center::Quadratic(QuadExt::new(2).unwrap());
        assert!(!remains_division_over_r(&real, &TitsClass::Known(BrauerClass::trivial())));
    }

    #[test]
    fn d_quat_needs_c0_for_odd_k() {
        let desc = LieDescriptor::DQuat {
            k: 3,
            d: half(&[p(2), Place::Infinite]),
            reduced_norm: integer(1),
            c0_class: None,
        };
        // Z/4: 2 is the vector character, 1 and 3 are the spin characters.
        let vector = tits_class_q(&desc, &ch(&desc, &[2])).unwrap();
        assert_eq!(vector.q_class, TitsClass::Known(half(&[p(2), Place::Infinite])));
        assert!(matches!(tits_class_q(&desc, &ch(&desc, &[1])), Err(Error::MissingInvariant(_))));
        let with_c0 = LieDescriptor::DQuat {
            k: 3,
            d: half(&[p(2), Place::Infinite]),
            reduced_norm: integer(1),
            c0_class: Some(BrauerClass::trivial()),
        };
        let spin = tits_class_q(&with_c0, &ch(&with_c0, &[1])).unwrap();
        assert_eq!(spin.r_algebra, RealAlgebra::Complex);
        assert!(spin.division_after_real);
    }

    #[test]
    fn e7_opaque_classes() {
        let desc = LieDescriptor::E7 { index_q: E7Label::E7_31_2, index_r: E7Label::E7_31_2 };
        let r = tits_class_q(&desc, &ch(&desc, &[1])).unwrap();
        assert_eq!(r.r_algebra, RealAlgebra::Quaternion);
        assert!(matches!(r.q_class.local_invariant(Place::Infinite), Err(Error::Unsupported(_))));
        let desc = LieDescriptor::E7 { index_q: E7Label::E7_48_1, index_r: E7Label::E7_0_7 };
        assert!(matches!(tits_class_q(&desc, &ch(&desc, &[1])), Err(Error::Indeterminate(_))));
    }

    #[test]
    fn rejects_foreign_characters() {
        let desc = LieDescriptor::CSplit { n: 3 };
        let alien = fundamental_group(RootSystem::new(Family::A, 2).unwrap()).element(&[1]).unwrap();
        assert!(matches!(tits_class_q(&desc, &alien), Err(Error::Domain(_))));
    }
}
