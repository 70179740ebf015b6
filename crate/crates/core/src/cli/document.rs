//! JSON descriptor documents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbertheory::{format_rational, parse_rational, BrauerClass, Invariant, Place, QuadExt, Rational};
use crate::quadform::DiagonalForm;
use crate::titsalgebra::LieDescriptor;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Str(String),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Int(n) => n.to_string(),
            Scalar::Str(s) => s.clone(),
        }
    }
}

type ClassEntry = (Scalar, i64, i64);

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "type", deny_unknown_fields)]
enum Doc {
    SplitSimple {
        sys: String,
    },
    AInner {
        n: usize,
        d: u64,
        class: Vec<ClassEntry>,
    },
    AOuter {
        n: usize,
        #[serde(rename = "L")]
        field: Scalar,
        #[serde(rename = "dD")]
        d_d: u64,
        #[serde(rename = "detB")]
        det_b: Scalar,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        diagonal: Option<Vec<Scalar>>,
    },
    BOdd {
        form: Vec<Scalar>,
    },
    CSplit {
        n: usize,
    },
    CQuat {
        n: usize,
        d: Vec<ClassEntry>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        diagonal: Option<Vec<Scalar>>,
    },
    DOrth {
        k: usize,
        form: Vec<Scalar>,
    },
    DQuat {
        k: usize,
        d: Vec<ClassEntry>,
        #[serde(rename = "reducedNormB")]
        reduced_norm: Scalar,
        #[serde(rename = "c0Class", default, skip_serializing_if = "Option::is_none")]
        c0_class: Option<Vec<ClassEntry>>,
    },
    E6Inner {
        index: String,
    },
    E6Outer {
        #[serde(rename = "L")]
        field: Scalar,
        #[serde(rename = "splitsOverL")]
        splits_over_l: bool,
    },
    E7 {
        #[serde(rename = "indexQ")]
        index_q: String,
        #[serde(rename = "indexR")]
        index_r: String,
    },
    Exceptional {
        sys: String,
    },
    ResScalars {
        #[serde(rename = "L")]
        field: Scalar,
        sys: String,
        #[serde(rename = "stronglyInner")]
        strongly_inner: bool,
    },
    DirectSum {
        factors: Vec<Doc>,
    },
}

fn rational(field: &str, s: &Scalar) -> Result<Rational> {
    parse_rational(&s.text()).map_err(|e| Error::validation(field, e.to_string()))
}

fn rationals(field: &str, v: &[Scalar]) -> Result<Vec<Rational>> {
    v.iter().map(|s| rational(field, s)).collect()
}

fn form(field: &str, v: &[Scalar]) -> Result<DiagonalForm> {
    DiagonalForm::new(rationals(field, v)?).map_err(|e| Error::validation(field, e.to_string()))
}

fn quad(field: &str, s: &Scalar) -> Result<QuadExt> {
    let d = rational(field, s)?;
    QuadExt::from_rational(&d).map_err(|e| Error::validation(field, e.to_string()))
}

fn class(field: &str, entries: &[ClassEntry]) -> Result<BrauerClass> {
    let mut out = Vec::new();
    for (place, num, den) in entries {
        let v: Place = place.text().parse().map_err(|e: Error| Error::validation(field, e.to_string()))?;
        if *den == 0 {
            return Err(Error::validation(field, "denominator must be nonzero"));
        }
        out.push((v, Invariant::new(*num, *den)));
    }
    BrauerClass::from_invariants(out).map_err(|e| Error::validation(field, e.to_string()))
}

fn parsed<T: std::str::FromStr<Err = Error>>(field: &str, s: &str) -> Result<T> {
    s.parse().map_err(|e: Error| match e {
        Error::Validation { rule, .. } => Error::validation(field, rule),
        other => Error::validation(field, other.to_string()),
    })
}

fn from_doc(doc: &Doc) -> Result<LieDescriptor> {
    Ok(match doc {
        Doc::SplitSimple { sys } => LieDescriptor::SplitSimple { sys: parsed("sys", sys)? },
        Doc::AInner { n, d, class: c } => LieDescriptor::AInner { n: *n, d: *d, class: class("class", c)? },
        Doc::AOuter { n, field, d_d, det_b, diagonal } => LieDescriptor::AOuter {
            n: *n,
            field: quad("L", field)?,
            d_d: *d_d,
            det_b: rational("detB", det_b)?,
            diagonal: diagonal.as_deref().map(|v| rationals("diagonal", v)).transpose()?,
        },
        Doc::BOdd { form: f } => LieDescriptor::BOdd { form: form("form", f)? },
        Doc::CSplit { n } => LieDescriptor::CSplit { n: *n },
        Doc::CQuat { n, d, diagonal } => LieDescriptor::CQuat {
            n: *n,
            d: class("d", d)?,
            diagonal: diagonal.as_deref().map(|v| rationals("diagonal", v)).transpose()?,
        },
        Doc::DOrth { k, form: f } => LieDescriptor::DOrth { k: *k, form: form("form", f)? },
        Doc::DQuat { k, d, reduced_norm, c0_class } => LieDescriptor::DQuat {
            k: *k,
            d: class("d", d)?,
            reduced_norm: rational("reducedNormB", reduced_norm)?,
            c0_class: c0_class.as_deref().map(|c| class("c0Class", c)).transpose()?,
        },
        Doc::E6Inner { index } => LieDescriptor::E6Inner { index: parsed("index", index)? },
        Doc::E6Outer { field, splits_over_l } => {
            LieDescriptor::E6Outer { field: quad("L", field)?, splits_over_l: *splits_over_l }
        }
        Doc::E7 { index_q, index_r } => {
            LieDescriptor::E7 { index_q: parsed("indexQ", index_q)?, index_r: parsed("indexR", index_r)? }
        }
        Doc::Exceptional { sys } => LieDescriptor::Exceptional { sys: parsed("sys", sys)? },
        Doc::ResScalars { field, sys, strongly_inner } => LieDescriptor::ResScalars {
            field: quad("L", field)?,
            sys: parsed("sys", sys)?,
            strongly_inner: *strongly_inner,
        },
        Doc::DirectSum { factors } => {
            LieDescriptor::DirectSum { factors: factors.iter().map(from_doc).collect::<Result<_>>()? }
        }
    })
}

fn str_scalar(r: &Rational) -> Scalar {
    Scalar::Str(format_rational(r))
}

fn class_doc(c: &BrauerClass) -> Vec<ClassEntry> {
    c.invariants()
        .map(|(v, inv)| (Scalar::Str(v.to_string()), *inv.numer(), *inv.denom()))
        .collect()
}

fn to_doc(desc: &LieDescriptor) -> Doc {
    let scalars = |v: &[Rational]| v.iter().map(str_scalar).collect::<Vec<_>>();
    match desc {
        LieDescriptor::SplitSimple { sys } => Doc::SplitSimple { sys: sys.to_string() },
        LieDescriptor::AInner { n, d, class } => Doc::AInner { n: *n, d: *d, class: class_doc(class) },
        LieDescriptor::AOuter { n, field, d_d, det_b, diagonal } => Doc::AOuter {
            n: *n,
            field: Scalar::Int(field.d()),
            d_d: *d_d,
            det_b: str_scalar(det_b),
            diagonal: diagonal.as_deref().map(scalars),
        },
        LieDescriptor::BOdd { form } => Doc::BOdd { form: scalars(form.entries()) },
        LieDescriptor::CSplit { n } => Doc::CSplit { n: *n },
        LieDescriptor::CQuat { n, d, diagonal } => {
            Doc::CQuat { n: *n, d: class_doc(d), diagonal: diagonal.as_deref().map(scalars) }
        }
        LieDescriptor::DOrth { k, form } => Doc::DOrth { k: *k, form: scalars(form.entries()) },
        LieDescriptor::DQuat { k, d, reduced_norm, c0_class } => Doc::DQuat {
            k: *k,
            d: class_doc(d),
            reduced_norm: str_scalar(reduced_norm),
            c0_class: c0_class.as_ref().map(class_doc),
        },
        LieDescriptor::E6Inner { index } => Doc::E6Inner { index: index.to_string() },
        LieDescriptor::E6Outer { field, splits_over_l } => {
            Doc::E6Outer { field: Scalar::Int(field.d()), splits_over_l: *splits_over_l }
        }
        LieDescriptor::E7 { index_q, index_r } => {
            Doc::E7 { index_q: index_q.to_string(), index_r: index_r.to_string() }
        }
        LieDescriptor::Exceptional { sys } => Doc::Exceptional { sys: sys.to_string() },
        LieDescriptor::ResScalars { field, sys, strongly_inner } => Doc::ResScalars {
            field: Scalar::Int(field.d()),
            sys: sys.to_string(),
            strongly_inner: *strongly_inner,
        },
        LieDescriptor::DirectSum { factors } => Doc::DirectSum { factors: factors.iter().map(to_doc).collect() },
    }
}

/// Parses and validates a descriptor document.
pub fn parse_descriptor(text: &str) -> Result<LieDescriptor> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    // Shape errors from the tagged enum carry no position.
    let doc = Doc::deserialize(value).map_err(|e| Error::validation("document", e.to_string()))?;
    let desc = from_doc(&doc)?;
    desc.validate()?;
    Ok(desc)
}

pub(crate) fn descriptor_value(desc: &LieDescriptor) -> serde_json::Value {
    serde_json::to_value(to_doc(desc)).expect("descriptor documents serialize")
}

/// Serializes a descriptor as a compact JSON document.
pub fn serialize_descriptor(desc: &LieDescriptor) -> String {
    serde_json::to_string(&descriptor_value(desc)).expect("descriptor documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbertheory::integer;

    #[test]
    fn documented_examples() {
        assert_eq!(parse_descriptor(r#"{"type":"CSplit","n":3}"#).unwrap(), LieDescriptor::CSplit { n: 3 });
        assert_eq!(
            parse_descriptor(r#"{"type":"BOdd","form":["1","1","-3"]}"#).unwrap(),
            LieDescriptor::BOdd { form: DiagonalForm::from_integers(&[1, 1, -3]).unwrap() }
        );
        let a = parse_descriptor(r#"{"type":"AInner","n":3,"d":2,"class":[["2",1,2],["inf",1,2]]}"#).unwrap();
        let h = BrauerClass::half_at([Place::Infinite, Place::prime(2).unwrap()]).unwrap();
        assert_eq!(a, LieDescriptor::AInner { n: 3, d: 2, class: h });
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_descriptor("{\"type\":\"CSplit\",\n  \"n\": }") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 8)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_descriptor(r#"{"type":"CSplit","n":3,"m":1}"#), Err(Error::Validation { .. })));
    }

    #[test]
    fn validation_errors_name_fields() {
        let field = |text: &str| match parse_descriptor(text) {
            Err(Error::Validation { field, .. }) => field,
            other => panic!("{other:?}"),
        };
        assert_eq!(field(r#"{"type":"BOdd","form":["1","0","1"]}"#), "form");
        assert_eq!(field(r#"{"type":"BOdd","form":["1","1"]}"#), "form");
        assert_eq!(field(r#"{"type":"CQuat","n":2,"d":[["inf",1,2],["4",1,2]]}"#), "d");
        assert_eq!(field(r#"{"type":"E7","indexQ":"E7_1_1","indexR":"E7_0_7"}"#), "indexQ");
        assert_eq!(field(r#"{"type":"AOuter","n":2,"L":-1,"dD":1,"detB":"1"}"#), "n");
    }

    #[test]
    fn round_trip() {
        let desc = LieDescriptor::DirectSum {
            factors: vec![
                LieDescriptor::DQuat {
                    k: 3,
                    d: BrauerClass::half_at([Place::Infinite, Place::prime(3).unwrap()]).unwrap(),
                    reduced_norm: parse_rational("2/3").unwrap(),
                    c0_class: Some(BrauerClass::trivial()),
                },
                LieDescriptor::AOuter {
                    n: 3,
                    field: QuadExt::new(-7).unwrap(),
                    d_d: 1,
                    det_b: integer(-2),
                    diagonal: Some(vec![integer(1), integer(2), integer(-1)]),
                },
            ],
        };
        let text = serialize_descriptor(&desc);
        assert_eq!(parse_descriptor(&text).unwrap(), desc);
        assert_eq!(serialize_descriptor(&parse_descriptor(&text).unwrap()), text);
    }
}
