use num_bigint::BigUint;

use super::{Universal, Verdict};
use crate::error::{Error, Result};
use crate::numbertheory::{BrauerClass, QuadExt};
use crate::rootdata::{center_character, fundamental_group, star_action, weyl_dimension, RootSystem, Weight};
use crate::titsalgebra::{class_q, fixed_over_q, remains_division_over_r, Center, LieDescriptor, TitsClass};

const ENGINE: &str = "D_Q(lambda) (x) R must be a division algebra, and an outer form must stay outer over R";

/// Tits data of one character of one simple factor.
pub(crate) struct CharData {
    pub label: String,
    pub fixed: bool,
    pub class: Result<TitsClass>,
}

/// The characters of a simple factor together with its splitting field.
pub(crate) struct Profile {
    pub field: Option<QuadExt>,
    pub chars: Vec<CharData>,
}

pub(crate) fn profile(desc: &LieDescriptor) -> Result<Profile> {
    if let LieDescriptor::ResScalars { field, strongly_inner, .. } = desc {
        // The weights (lambda, 0) are swapped with (0, lambda) by Gal(L/Q).
        let moved = if *strongly_inner {
            TitsClass::Known(BrauerClass::trivial())
        } else {
            TitsClass::Opaque { nontrivial: true, ramified_at_infinity: false }
        };
        return Ok(Profile {
            field: Some(*field),
            chars: vec![
                CharData { label: "0".into(), fixed: true, class: Ok(TitsClass::Known(BrauerClass::trivial())) },
                CharData { label: "(lambda,0)".into(), fixed: false, class: Ok(moved) },
            ],
        });
    }
    let sys = desc.root_system()?;
    let mut chars = Vec::new();
    for c in fundamental_group(sys).elements() {
        let fixed = fixed_over_q(desc, &c)?;
        chars.push(CharData { label: c.to_string(), fixed, class: class_q(desc, &c, fixed) });
    }
    Ok(Profile { field: desc.splitting_field()?, chars })
}

/// Combines the Tits classes of the components of a character of a product.
///
/// Over a quadratic center, classes coming from fixed components are
/// restrictions of their Q-classes.
pub(crate) fn combine(parts: &[(bool, &Result<TitsClass>)], over_l: bool) -> Result<TitsClass> {
    let mut nontrivial = Vec::new();
    for (fixed, class) in parts {
        let class = class.as_ref().map_err(Clone::clone)?;
        if !class.is_trivial() {
            nontrivial.push((*fixed, class));
        }
    }
    match nontrivial.as_slice() {
        [] => Ok(TitsClass::Known(BrauerClass::trivial())),
        [(fixed, class)] => {
            if over_l && *fixed && matches!(class, TitsClass::Opaque { .. }) {
                Err(Error::Indeterminate(format!(
                    "the restriction of the class {class} to the center is not determined"
                )))
            } else {
                Ok((*class).clone())
            }
        }
        many => {
            let mut acc = BrauerClass::trivial();
            for (_, class) in many {
                match class {
                    TitsClass::Known(c) => acc = acc.combine(c),
                    TitsClass::Opaque { .. } => {
                        return Err(Error::Indeterminate(format!(
                            "the product with the class {class} is not determined"
                        )))
                    }
                }
            }
            Ok(TitsClass::Known(acc))
        }
    }
}

pub(crate) enum Outcome {
    Pass,
    Fail,
    Unknown,
}

/// Checks one character: `moved` lists the fields of the components that
/// are not fixed over Q.
pub(crate) fn check(moved: &[QuadExt], parts: &[(bool, &Result<TitsClass>)]) -> (Outcome, String) {
    let center = match moved.first() {
        None => Center::Rational,
        Some(l) => {
            if moved.iter().any(|m| m != l) {
                return (Outcome::Fail, "non-fixed components become inner over different fields".into());
            }
            if !l.is_imaginary() {
                return (Outcome::Fail, format!("center {l} is real: fixed over R but not over Q"));
            }
            Center::Quadratic(*l)
        }
    };
    match combine(parts, center != Center::Rational) {
        Err(e) => (Outcome::Unknown, format!("center={center}, {e}")),
        Ok(class) => {
            let ok = remains_division_over_r(&center, &class);
            let values = format!("center={center}, class={class}, division over R={ok}");
            (if ok { Outcome::Pass } else { Outcome::Fail }, values)
        }
    }
}

fn summarize(rows: Vec<(String, Outcome, String)>) -> Verdict {
    let mut verdict = Verdict { universal: Universal::Yes, trace: Vec::new() };
    let mut failed = false;
    let mut unknown = false;
    for (label, outcome, values) in rows {
        match outcome {
            Outcome::Pass => {}
            Outcome::Fail => failed = true,
            Outcome::Unknown => unknown = true,
        }
        verdict.push(&format!("character {label}"), values, ENGINE);
    }
    verdict.universal = if failed {
        Universal::No
    } else if unknown {
        Universal::Indeterminate
    } else {
        Universal::Yes
    };
    verdict
}

/// Decides R-universality by running over the characters of the center.
pub fn generic_engine(desc: &LieDescriptor) -> Result<Verdict> {
    desc.validate()?;
    let profiles = match desc {
        LieDescriptor::DirectSum { factors } => factors.iter().map(profile).collect::<Result<Vec<_>>>()?,
        other => vec![profile(other)?],
    };
    let mut rows = Vec::new();
    let mut index = vec![0usize; profiles.len()];
    loop {
        let mut moved = Vec::new();
        let mut parts = Vec::new();
        let mut labels = Vec::new();
        for (prof, &i) in profiles.iter().zip(&index) {
            let ch = &prof.chars[i];
            if !ch.fixed {
                moved.push(prof.field.expect("non-fixed characters come from outer forms"));
            }
            parts.push((ch.fixed, &ch.class));
            labels.push(ch.label.clone());
        }
        let (outcome, values) = check(&moved, &parts);
        rows.push((labels.join(";"), outcome, values));
        // Odometer over the product of the character sets.
        let mut pos = 0;
        loop {
            if pos == profiles.len() {
                return Ok(summarize(rows));
            }
            index[pos] += 1;
            if index[pos] < profiles[pos].chars.len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

/// Per-factor data of a dominant weight.
struct WeightData {
    sys: RootSystem,
    weight_fixed: bool,
    char_fixed: bool,
    class: Result<TitsClass>,
    field: Option<QuadExt>,
}

fn weight_data(desc: &LieDescriptor, lambda: &Weight) -> Result<WeightData> {
    if matches!(desc, LieDescriptor::ResScalars { .. } | LieDescriptor::DirectSum { .. }) {
        return Err(Error::unsupported(format!("weights of {} are not modeled", desc.kind())));
    }
    let sys = desc.root_system()?;
    lambda.check_rank(sys)?;
    let field = desc.splitting_field()?;
    let weight_fixed = field.is_none() || &star_action(sys, true, lambda)? == lambda;
    let c = center_character(sys, lambda)?;
    let char_fixed = fixed_over_q(desc, &c)?;
    Ok(WeightData { sys, weight_fixed, char_fixed, class: class_q(desc, &c, char_fixed), field })
}

fn split_weight(factors: &[LieDescriptor], lambda: &Weight) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    let mut rest = lambda.coords();
    for f in factors {
        let r = f.root_system()?.rank();
        if rest.len() < r {
            return Err(Error::domain("weight has fewer coordinates than the total rank"));
        }
        out.push(Weight(rest[..r].to_vec()));
        rest = &rest[r..];
    }
    if !rest.is_empty() {
        return Err(Error::domain("weight has more coordinates than the total rank"));
    }
    Ok(out)
}

fn weight_components(desc: &LieDescriptor, lambda: &Weight) -> Result<Vec<WeightData>> {
    desc.validate()?;
    match desc {
        LieDescriptor::DirectSum { factors } => split_weight(factors, lambda)?
            .iter()
            .zip(factors)
            .map(|(w, f)| weight_data(f, w))
            .collect(),
        other => Ok(vec![weight_data(other, lambda)?]),
    }
}

fn moved_and_parts(data: &[WeightData]) -> (Vec<QuadExt>, Vec<(bool, &Result<TitsClass>)>) {
    let moved = data
        .iter()
        .filter(|d| !d.weight_fixed)
        .map(|d| d.field.expect("moved weights come from outer forms"))
        .collect();
    let parts = data.iter().map(|d| (d.char_fixed, &d.class)).collect();
    (moved, parts)
}

/// Whether the real irreducible representation with highest weight
/// `lambda` is defined over Q.
pub fn decide_weight(desc: &LieDescriptor, lambda: &Weight) -> Result<bool> {
    let data = weight_components(desc, lambda)?;
    let (moved, parts) = moved_and_parts(&data);
    match check(&moved, &parts) {
        (Outcome::Pass, _) => Ok(true),
        (Outcome::Fail, _) => Ok(false),
        (Outcome::Unknown, values) => Err(Error::Indeterminate(values)),
    }
}

/// Dimension of the irreducible Q-representation containing `lambda`:
/// orbit size times Schur index times Weyl dimension.
pub fn q_irreducible_dimension(desc: &LieDescriptor, lambda: &Weight) -> Result<BigUint> {
    let simple = match desc {
        LieDescriptor::DirectSum { factors } => factors.iter().collect(),
        other => vec![other],
    };
    if let Some(e) = simple.iter().find(|d| {
        matches!(d, LieDescriptor::E6Inner { .. } | LieDescriptor::E6Outer { .. } | LieDescriptor::E7 { .. })
    }) {
        return Err(Error::unsupported(format!("{} Tits algebras are known only up to triviality", e.kind())));
    }
    let data = weight_components(desc, lambda)?;
    let (moved, parts) = moved_and_parts(&data);
    let over_l = match moved.first() {
        None => None,
        Some(l) if moved.iter().all(|m| m == l) => Some(*l),
        Some(_) => return Err(Error::unsupported("components moved over different fields")),
    };
    let class = match combine(&parts, over_l.is_some()) {
        Ok(c) => c,
        Err(Error::Indeterminate(msg)) => return Err(Error::unsupported(msg)),
        Err(e) => return Err(e),
    };
    let class = class.known()?;
    let index = match over_l {
        None => class.index(),
        Some(l) => {
            if class.restricts_trivially(&l)? {
                1
            } else {
                2
            }
        }
    };
    let orbit: u64 = if over_l.is_some() { 2 } else { 1 };
    let mut weyl = BigUint::from(1u32);
    let coords = match desc {
        LieDescriptor::DirectSum { factors } => split_weight(factors, lambda)?,
        _ => vec![lambda.clone()],
    };
    for (d, w) in data.iter().zip(&coords) {
        weyl *= weyl_dimension(d.sys, w)?;
    }
    Ok(weyl * BigUint::from(orbit * index))
}
