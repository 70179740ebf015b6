use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use super::descriptor::LieDescriptor;
use crate::error::{Error, Result};
use crate::numbertheory::{Invariant, Place, Rational};
use crate::rootdata::{Family, RootSystem};

/// Label of a real semisimple Lie algebra.
///
/// `Sp { n }` is `sp(2n, R)`, `SoStar { k }` is `so*(2k)`; the compact forms
/// are `su(n, 0)`, `so(n, 0)` and `sp(n, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealForm {
    SlR { n: usize },
    SlH { n: usize },
    Su { p: usize, q: usize },
    So { p: usize, q: usize },
    SoStar { k: usize },
    Sp { n: usize },
    SpPQ { p: usize, q: usize },
    Complex(RootSystem),
    Split(RootSystem),
    Sum(Vec<RealForm>),
}

fn ordered(p: usize, q: usize) -> (usize, usize) {
    (p.max(q), p.min(q))
}

impl RealForm {
    fn check(&self) -> Result<()> {
        let ok = match *self {
            RealForm::SlR { n } => n >= 2,
            RealForm::SlH { n } => n >= 1,
            RealForm::Su { p, q } => p + q >= 2,
            RealForm::So { p, q } => p + q >= 3,
            RealForm::SoStar { k } => k >= 2,
            RealForm::Sp { n } => n >= 1,
            RealForm::SpPQ { p, q } => p + q >= 1,
            RealForm::Complex(_) | RealForm::Split(_) => true,
            RealForm::Sum(ref parts) => !parts.is_empty(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("{self} is not a semisimple real form")))
        }
    }

    /// Normal form modulo the low-rank isomorphisms, with `p >= q` and sums
    /// flattened and sorted.
    pub fn canonical(&self) -> RealForm {
        use RealForm::*;
        let su2 = Su { p: 2, q: 0 };
        let sl2 = SlR { n: 2 };
        let c = match *self {
            Sum(ref parts) => {
                let mut flat = Vec::new();
                for part in parts {
                    match part.canonical() {
                        Sum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                flat.sort();
                return if flat.len() == 1 { flat.pop().unwrap() } else { Sum(flat) };
            }
            Su { p, q } => {
                let (p, q) = ordered(p, q);
                match (p, q) {
                    (1, 1) => sl2,
                    _ => Su { p, q },
                }
            }
            SlH { n: 1 } => su2,
            SlR { n } => SlR { n },
            SlH { n } => SlH { n },
            So { p, q } => match ordered(p, q) {
                (3, 0) => su2,
                (2, 1) => sl2,
                (4, 0) => Sum(vec![su2.clone(), su2]),
                (2, 2) => Sum(vec![sl2.clone(), sl2]),
                (3, 1) => complex_a(1),
                (6, 0) => Su { p: 4, q: 0 },
                (5, 1) => SlH { n: 2 },
                (4, 2) => Su { p: 2, q: 2 },
                (3, 3) => SlR { n: 4 },
                (p, q) => So { p, q },
            },
            SoStar { k: 2 } => Sum(vec![sl2, su2]),
            SoStar { k: 3 } => Su { p: 3, q: 1 },
            SoStar { k: 4 } => So { p: 6, q: 2 },
            SoStar { k } => SoStar { k },
            Sp { n: 1 } => sl2,
            Sp { n: 2 } => So { p: 3, q: 2 },
            Sp { n } => Sp { n },
            SpPQ { p, q } => match ordered(p, q) {
                (1, 0) => su2,
                (2, 0) => So { p: 5, q: 0 },
                (1, 1) => So { p: 4, q: 1 },
                (p, q) => SpPQ { p, q },
            },
            Split(sys) => match (sys.family(), sys.rank()) {
                (Family::A, r) => SlR { n: r + 1 },
                (Family::B, r) => So { p: r + 1, q: r },
                (Family::C, r) => Sp { n: r },
                (Family::D, r) => So { p: r, q: r },
                _ => Split(sys),
            },
            Complex(sys) => match (sys.family(), sys.rank()) {
                (Family::B | Family::C, 1) => complex_a(1),
                (Family::C, 2) => Complex(RootSystem::new(Family::B, 2).expect("B2")),
                (Family::D, 3) => complex_a(3),
                _ => Complex(sys),
            },
        };
        if &c == self {
            c
        } else {
            c.canonical()
        }
    }

    /// Whether two labels name isomorphic real Lie algebras (as far as
    /// [`RealForm::canonical`] knows).
    pub fn matches(&self, other: &RealForm) -> bool {
        self.canonical() == other.canonical()
    }
}

fn complex_a(r: usize) -> RealForm {
    RealForm::Complex(RootSystem::new(Family::A, r).expect("type A"))
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealForm::SlR { n } => write!(f, "sl({n},R)"),
            RealForm::SlH { n } => write!(f, "sl({n},H)"),
            RealForm::Su { p, q } => write!(f, "su({p},{q})"),
            RealForm::So { p, q } => write!(f, "so({p},{q})"),
            RealForm::SoStar { k } => write!(f, "so*({})", 2 * k),
            RealForm::Sp { n } => write!(f, "sp({},R)", 2 * n),
            RealForm::SpPQ { p, q } => write!(f, "sp({p},{q})"),
            RealForm::Complex(sys) => write!(f, "complex({sys})"),
            RealForm::Split(sys) => write!(f, "split({sys})"),
            RealForm::Sum(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_simple(s: &str) -> Result<RealForm> {
    let bad = || Error::Parse { line: 1, column: 1, message: format!("unrecognized real form `{s}`") };
    let open = s.find('(').ok_or_else(bad)?;
    let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let name = s[..open].trim();
    let args: Vec<&str> = inner.split(',').map(str::trim).collect();
    let num = |a: &str| a.parse::<usize>().map_err(|_| bad());
    let is_r = |a: &str| matches!(a, "R" | "ℝ");
    let is_h = |a: &str| matches!(a, "H" | "ℍ");
    let form = match (name, args.as_slice()) {
        ("sl", [n, f]) if is_r(f) => RealForm::SlR { n: num(n)? },
        ("sl", [n, f]) if is_h(f) => RealForm::SlH { n: num(n)? },
        ("sp", [n, f]) if is_r(f) => {
            let n = num(n)?;
            if n % 2 == 1 {
                return Err(bad());
            }
            RealForm::Sp { n: n / 2 }
        }
        ("su", [n]) => RealForm::Su { p: num(n)?, q: 0 },
        ("su", [p, q]) => RealForm::Su { p: num(p)?, q: num(q)? },
        ("so", [n]) => RealForm::So { p: num(n)?, q: 0 },
        ("so", [p, q]) => RealForm::So { p: num(p)?, q: num(q)? },
        ("sp", [n]) => RealForm::SpPQ { p: num(n)?, q: 0 },
        ("sp", [p, q]) => RealForm::SpPQ { p: num(p)?, q: num(q)? },
        ("so*", [n]) => {
            let n = num(n)?;
            if n % 2 == 1 {
                return Err(bad());
            }
            RealForm::SoStar { k: n / 2 }
        }
        ("complex", [sys]) => RealForm::Complex(sys.parse()?),
        ("split", [sys]) => RealForm::Split(sys.parse()?),
        _ => return Err(bad()),
    };
    form.check()?;
    Ok(form)
}

impl FromStr for RealForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts: Vec<RealForm> = s
            .split('+')
            .map(|p| parse_simple(p.trim()))
            .collect::<Result<_>>()?;
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { RealForm::Sum(parts) })
    }
}

fn sign_count(entries: &[Rational]) -> (usize, usize) {
    let p = entries.iter().filter(|x| x.is_positive()).count();
    (p, entries.len() - p)
}

fn half() -> Invariant {
    Invariant::new(1, 2)
}

/// Real form `g (x)_Q R` of a descriptor, from its signature and infinite-place data.
pub fn real_form_of(desc: &LieDescriptor) -> Result<RealForm> {
    let no_data = |what: &str| Err(Error::unsupported(format!("{}: {what}", desc.kind())));
    Ok(match desc {
        LieDescriptor::SplitSimple { sys } => RealForm::Split(*sys).canonical(),
        LieDescriptor::AInner { n, d, class } => {
            let size = n * (*d as usize);
            let inv = class.invariant(Place::Infinite);
            if inv.is_zero() {
                RealForm::SlR { n: size }
            } else if inv == half() {
                RealForm::SlH { n: size / 2 }
            } else {
                return no_data("unexpected invariant at infinity");
            }
        }
        LieDescriptor::AOuter { n, field, d_d, diagonal, .. } => {
            if *d_d != 1 {
                return no_data("the real form is not determined when D is not L");
            }
            if !field.is_imaginary() {
                RealForm::SlR { n: *n }
            } else if let Some(diag) = diagonal {
                let (p, q) = sign_count(diag);
                RealForm::Su { p, q }
            } else {
                return no_data("a diagonal Hermitian form is needed for the signature");
            }
        }
        LieDescriptor::BOdd { form } | LieDescriptor::DOrth { form, .. } => {
            let (p, q) = form.signature();
            RealForm::So { p, q }
        }
        LieDescriptor::CSplit { n } => RealForm::Sp { n: *n },
        LieDescriptor::CQuat { n, d, diagonal } => {
            if !d.ramified_at_infinity() {
                RealForm::Sp { n: *n }
            } else if let Some(diag) = diagonal {
                let (p, q) = sign_count(diag);
                RealForm::SpPQ { p, q }
            } else {
                return no_data("a diagonal Hermitian form is needed for the signature");
            }
        }
        LieDescriptor::DQuat { k, d, .. } => {
            if d.ramified_at_infinity() {
                RealForm::SoStar { k: *k }
            } else {
                return no_data("a quaternion algebra split at infinity needs the skew-Hermitian form");
            }
        }
        LieDescriptor::ResScalars { field, sys, .. } => {
            if field.is_imaginary() {
                RealForm::Complex(*sys)
            } else {
                return no_data("restriction of scalars from a real field needs the forms at both real places");
            }
        }
        LieDescriptor::DirectSum { factors } => {
            RealForm::Sum(factors.iter().map(real_form_of).collect::<Result<_>>()?)
        }
        LieDescriptor::E6Inner { .. }
        | LieDescriptor::E6Outer { .. }
        | LieDescriptor::E7 { .. }
        | LieDescriptor::Exceptional { .. } => {
            return no_data("exceptional descriptors carry no real-form data");
        }
    }
    .canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbertheory::{integer, BrauerClass, QuadExt};
    use crate::quadform::DiagonalForm;

    fn rf(s: &str) -> RealForm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["sl(3,R)", "sl(2,H)", "su(2,1)", "so(5,2)", "so*(10)", "sp(6,R)", "sp(2,1)", "complex(E7)", "split(F4)"] {
            assert_eq!(rf(s).to_string(), s);
        }
        assert_eq!(rf("su(3)"), RealForm::Su { p: 3, q: 0 });
        assert!("so(2)".parse::<RealForm>().is_err());
        assert!("sp(3,R)".parse::<RealForm>().is_err());
        assert!(matches!("gl(2,R)".parse::<RealForm>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn low_rank_coincidences() {
        assert!(rf("so(3,0)").matches(&rf("su(2)")));
        assert!(rf("sp(1)").matches(&rf("sl(1,H)")));
        assert!(rf("so(1,2)").matches(&rf("sp(2,R)")));
        assert!(rf("so(4)").matches(&rf("su(2)+so(3)")));
        assert!(rf("so(3,1)").matches(&rf("complex(B1)")));
        assert!(rf("so(6)").matches(&rf("su(4)")));
        assert!(rf("so*(6)").matches(&rf("su(1,3)")));
        assert!(rf("sp(4,R)").matches(&rf("split(B2)")));
        assert!(!rf("so(5,0)").matches(&rf("so(4,1)")));
        assert!(!rf("sl(3,R)").matches(&rf("su(3)")));
    }

    #[test]
    fn documented_examples() {
        let b = LieDescriptor::BOdd { form: DiagonalForm::from_integers(&[1, 1, 1]).unwrap() };
        assert!(real_form_of(&b).unwrap().matches(&rf("so(3,0)")));
        let a2 = LieDescriptor::SplitSimple { sys: "A2".parse().unwrap() };
        assert_eq!(real_form_of(&a2).unwrap(), rf("sl(3,R)"));
        let h = BrauerClass::half_at([Place::Infinite, Place::prime(2).unwrap()]).unwrap();
        let dq = LieDescriptor::DQuat { k: 5, d: h.clone(), reduced_norm: integer(1), c0_class: None };
        assert_eq!(real_form_of(&dq).unwrap(), rf("so*(10)"));
        let su = LieDescriptor::AOuter {
            n: 3,
            field: QuadExt::new(-1).unwrap(),
            d_d: 1,
            det_b: integer(-1),
            diagonal: Some(vec![integer(1), integer(1), integer(-1)]),
        };
        assert_eq!(real_form_of(&su).unwrap(), rf("su(2,1)"));
        let quat = LieDescriptor::AInner { n: 1, d: 2, class: h };
        assert!(real_form_of(&quat).unwrap().matches(&rf("su(2)")));
        let e7 = LieDescriptor::Exceptional { sys: "E8".parse().unwrap() };
        assert!(matches!(real_form_of(&e7), Err(Error::Unsupported(_))));
    }
}
