use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numbertheory::{is_square_int, squarefree, BrauerClass, QuadExt, Rational};
use crate::quadform::DiagonalForm;
use crate::rootdata::{Family, RootSystem};

/// Tits indices of inner forms of `E_6` that the criteria distinguish.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum E6Label {
    E6_28_2,
    E6_0_6,
    E6_16_2,
    E6_78_0,
}

/// Tits indices of forms of `E_7`; `E7_78_1` stands for any other index.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum E7Label {
    E7_28_3,
    E7_0_7,
    E7_31_2,
    E7_9_4,
    E7_133_0,
    E7_48_1,
    E7_78_1,
}

impl E6Label {
    pub const ALL: [E6Label; 4] = [E6Label::E6_28_2, E6Label::E6_0_6, E6Label::E6_16_2, E6Label::E6_78_0];

    pub fn as_str(self) -> &'static str {
        match self {
            E6Label::E6_28_2 => "E6_28_2",
            E6Label::E6_0_6 => "E6_0_6",
            E6Label::E6_16_2 => "E6_16_2",
            E6Label::E6_78_0 => "E6_78_0",
        }
    }

    pub fn strongly_inner(self) -> bool {
        matches!(self, E6Label::E6_28_2 | E6Label::E6_0_6)
    }
}

impl E7Label {
    pub const ALL: [E7Label; 7] = [
        E7Label::E7_28_3,
        E7Label::E7_0_7,
        E7Label::E7_31_2,
        E7Label::E7_9_4,
        E7Label::E7_133_0,
        E7Label::E7_48_1,
        E7Label::E7_78_1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            E7Label::E7_28_3 => "E7_28_3",
            E7Label::E7_0_7 => "E7_0_7",
            E7Label::E7_31_2 => "E7_31_2",
            E7Label::E7_9_4 => "E7_9_4",
            E7Label::E7_133_0 => "E7_133_0",
            E7Label::E7_48_1 => "E7_48_1",
            E7Label::E7_78_1 => "E7_78_1",
        }
    }

    /// Whether the Tits algebra of the nontrivial character is trivial, when known.
    pub fn tits_trivial(self) -> Option<bool> {
        match self {
            E7Label::E7_28_3 | E7Label::E7_0_7 => Some(true),
            E7Label::E7_31_2 | E7Label::E7_9_4 | E7Label::E7_133_0 => Some(false),
            E7Label::E7_48_1 | E7Label::E7_78_1 => None,
        }
    }
}

macro_rules! label_parse {
    ($t:ty, $what:literal) => {
        impl FromStr for $t {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                <$t>::ALL
                    .iter()
                    .copied()
                    .find(|l| l.as_str() == s.trim())
                    .ok_or_else(|| Error::validation($what, format!("unknown index label `{s}`")))
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

label_parse!(E6Label, "index");
label_parse!(E7Label, "index");

/// Structural description of a semisimple Lie algebra over Q.
///
/// `n` for `AInner` is the size of the matrices over `D`, so the type is
/// `A_{nd-1}`. For `AOuter` the type is `A_{n dD - 1}`. `diagonal` fields
/// hold the diagonal of a diagonal Hermitian matrix and feed only
/// [`real_form_of`](super::real_form_of).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieDescriptor {
    SplitSimple { sys: RootSystem },
    AInner { n: usize, d: u64, class: BrauerClass },
    AOuter { n: usize, field: QuadExt, d_d: u64, det_b: Rational, diagonal: Option<Vec<Rational>> },
    BOdd { form: DiagonalForm },
    CSplit { n: usize },
    CQuat { n: usize, d: BrauerClass, diagonal: Option<Vec<Rational>> },
    DOrth { k: usize, form: DiagonalForm },
    DQuat { k: usize, d: BrauerClass, reduced_norm: Rational, c0_class: Option<BrauerClass> },
    E6Inner { index: E6Label },
    E6Outer { field: QuadExt, splits_over_l: bool },
    E7 { index_q: E7Label, index_r: E7Label },
    Exceptional { sys: RootSystem },
    ResScalars { field: QuadExt, sys: RootSystem, strongly_inner: bool },
    DirectSum { factors: Vec<LieDescriptor> },
}

fn check(cond: bool, field: &str, rule: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::validation(field, rule))
    }
}

fn check_quaternion_division(d: &BrauerClass) -> Result<()> {
    check(!d.is_trivial(), "d", "must be a nontrivial class (a quaternion division algebra)")?;
    check(d.is_two_torsion(), "d", "all invariants must be 0 or 1/2")
}

impl LieDescriptor {
    pub fn kind(&self) -> &'static str {
        match self {
            LieDescriptor::SplitSimple { .. } => "SplitSimple",
            LieDescriptor::AInner { .. } => "AInner",
            LieDescriptor::AOuter { .. } => "AOuter",
            LieDescriptor::BOdd { .. } => "BOdd",
            LieDescriptor::CSplit { .. } => "CSplit",
            LieDescriptor::CQuat { .. } => "CQuat",
            LieDescriptor::DOrth { .. } => "DOrth",
            LieDescriptor::DQuat { .. } => "DQuat",
            LieDescriptor::E6Inner { .. } => "E6Inner",
            LieDescriptor::E6Outer { .. } => "E6Outer",
            LieDescriptor::E7 { .. } => "E7",
            LieDescriptor::Exceptional { .. } => "Exceptional",
            LieDescriptor::ResScalars { .. } => "ResScalars",
            LieDescriptor::DirectSum { .. } => "DirectSum",
        }
    }

    /// Checks the structural rules of each variant.
    pub fn validate(&self) -> Result<()> {
        match self {
            LieDescriptor::SplitSimple { .. } => Ok(()),
            LieDescriptor::AInner { n, d, class } => {
                check(*n >= 1, "n", "must be at least 1")?;
                check(*d >= 1, "d", "must be at least 1")?;
                check(n * (*d as usize) >= 2, "n", "n*d must be at least 2")?;
                check(class.index() == *d, "class", "index must equal the degree d of D")
            }
            LieDescriptor::AOuter { n, d_d, det_b, diagonal, .. } => {
                check(*n >= 1, "n", "must be at least 1")?;
                check(*d_d >= 1, "dD", "must be at least 1")?;
                check(n * (*d_d as usize) >= 3, "n", "n*dD must be at least 3 for an outer form")?;
                check(!det_b.is_zero(), "detB", "must be nonzero")?;
                if let Some(diag) = diagonal {
                    check(*d_d == 1, "diagonal", "only offered when D = L")?;
                    check(diag.len() == *n, "diagonal", "must have n entries")?;
                    check(diag.iter().all(|x| !x.is_zero()), "diagonal", "entries must be nonzero")?;
                    let prod = diag.iter().fold(Rational::one(), |acc, x| acc * x);
                    check(&prod == det_b, "diagonal", "product must equal detB")?;
                }
                Ok(())
            }
            LieDescriptor::BOdd { form } => {
                check(form.dim() >= 3 && form.dim() % 2 == 1, "form", "dimension must be odd and at least 3")
            }
            LieDescriptor::CSplit { n } => check(*n >= 1, "n", "must be at least 1"),
            LieDescriptor::CQuat { n, d, diagonal } => {
                check(*n >= 1, "n", "must be at least 1")?;
                check_quaternion_division(d)?;
                if let Some(diag) = diagonal {
                    check(diag.len() == *n, "diagonal", "must have n entries")?;
                    check(diag.iter().all(|x| !x.is_zero()), "diagonal", "entries must be nonzero")?;
                }
                Ok(())
            }
            LieDescriptor::DOrth { k, form } => {
                check(*k >= 3, "k", "must be at least 3")?;
                check(form.dim() == 2 * k, "form", "dimension must be 2k")
            }
            LieDescriptor::DQuat { k, d, reduced_norm, c0_class } => {
                check(*k >= 3, "k", "must be at least 3")?;
                check_quaternion_division(d)?;
                check(!reduced_norm.is_zero(), "reducedNormB", "must be nonzero")?;
                if d.ramified_at_infinity() {
                    check(
                        reduced_norm.is_positive(),
                        "reducedNormB",
                        "must be positive when D is ramified at infinity",
                    )?;
                }
                if let Some(c) = c0_class {
                    check(c.is_two_torsion() || c.is_trivial(), "c0Class", "all invariants must be 0 or 1/2")?;
                }
                Ok(())
            }
            LieDescriptor::E6Inner { .. } | LieDescriptor::E6Outer { .. } => Ok(()),
            LieDescriptor::E7 { index_q, index_r } => {
                let contradiction = index_q.tits_trivial() == Some(true) && index_r.tits_trivial() == Some(false);
                check(
                    !contradiction,
                    "indexR",
                    "a form with trivial Tits algebra over Q cannot have a nontrivial one over R",
                )
            }
            LieDescriptor::Exceptional { sys } => check(
                matches!(sys.family(), Family::F | Family::G) || (sys.family() == Family::E && sys.rank() == 8),
                "sys",
                "must be E8, F4 or G2",
            ),
            LieDescriptor::ResScalars { .. } => Ok(()),
            LieDescriptor::DirectSum { factors } => {
                check(!factors.is_empty(), "factors", "must be nonempty")?;
                for f in factors {
                    check(
                        !matches!(f, LieDescriptor::DirectSum { .. }),
                        "factors",
                        "direct sums cannot be nested",
                    )?;
                    f.validate()?;
                }
                Ok(())
            }
        }
    }

    /// Absolute root system, for simple descriptors other than restriction of scalars.
    pub fn root_system(&self) -> Result<RootSystem> {
        let rs = |f, r| RootSystem::new(f, r);
        match self {
            LieDescriptor::SplitSimple { sys } | LieDescriptor::Exceptional { sys } => Ok(*sys),
            LieDescriptor::AInner { n, d, .. } => rs(Family::A, n * (*d as usize) - 1),
            LieDescriptor::AOuter { n, d_d, .. } => rs(Family::A, n * (*d_d as usize) - 1),
            LieDescriptor::BOdd { form } => rs(Family::B, (form.dim() - 1) / 2),
            LieDescriptor::CSplit { n } | LieDescriptor::CQuat { n, .. } => rs(Family::C, *n),
            LieDescriptor::DOrth { k, .. } | LieDescriptor::DQuat { k, .. } => rs(Family::D, *k),
            LieDescriptor::E6Inner { .. } | LieDescriptor::E6Outer { .. } => rs(Family::E, 6),
            LieDescriptor::E7 { .. } => rs(Family::E, 7),
            LieDescriptor::ResScalars { .. } | LieDescriptor::DirectSum { .. } => Err(Error::unsupported(
                format!("{} has no single absolute root system", self.kind()),
            )),
        }
    }

    /// The quadratic field over which an outer form becomes inner; `None` for inner forms.
    pub fn splitting_field(&self) -> Result<Option<QuadExt>> {
        match self {
            LieDescriptor::AOuter { field, .. } | LieDescriptor::E6Outer { field, .. } => Ok(Some(*field)),
            LieDescriptor::DOrth { k, form } => {
                let det = form.det();
                let delta = if k % 2 == 0 { det } else { -det };
                let s = squarefree(&delta)?;
                Ok(if is_square_int(s as i128) { None } else { Some(QuadExt::new(s)?) })
            }
            LieDescriptor::DQuat { k, reduced_norm, .. } => {
                let delta = if k % 2 == 0 { reduced_norm.clone() } else { -reduced_norm.clone() };
                let s = squarefree(&delta)?;
                Ok(if is_square_int(s as i128) { None } else { Some(QuadExt::new(s)?) })
            }
            LieDescriptor::ResScalars { .. } | LieDescriptor::DirectSum { .. } => Err(Error::unsupported(
                format!("{} is not absolutely simple", self.kind()),
            )),
            _ => Ok(None),
        }
    }

    /// Whether the form stays outer over R: outer over Q with imaginary splitting field.
    pub fn outer_over_r(&self) -> Result<bool> {
        Ok(self.splitting_field()?.is_some_and(QuadExt::is_imaginary))
    }
}
