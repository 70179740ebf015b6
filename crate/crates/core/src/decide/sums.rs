use super::closed::decide;
use super::engine::profile;
use super::{Universal, Verdict};
use crate::error::Result;
use crate::numbertheory::QuadExt;
use crate::titsalgebra::{LieDescriptor, TitsClass};

const CONDITION_1: &str = "direct sum condition (1): each simple factor is R-universal";
const CONDITION_2: &str = "direct sum condition (2): the sum is inner or becomes inner over one imaginary \
                           quadratic field L, so the *-actions over R and over Q agree";
/// Citation attached to failures of the isomorphism condition on Tits algebras.
pub const CONDITION_3_CITATION: &str = "direct sum condition (3): D_Q(lambda_i) and D_Q(lambda_j) are isomorphic \
                                         for *-fixed weights of distinct factors with nontrivial Tits algebras";
const CONDITION_4: &str = "direct sum condition (4): for an outer sum, D_Q(lambda_i) splits over L for the \
                           *-fixed weights of the other factors";
const RES_IMAGINARY: &str = "restriction of scalars: the extension L must be imaginary quadratic";
const RES_STRONGLY_INNER: &str = "restriction of scalars: the factor over L must be strongly inner";

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    fn worst(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Pass,
        }
    }
}

fn outer_field(desc: &LieDescriptor) -> Result<Option<QuadExt>> {
    match desc {
        LieDescriptor::ResScalars { field, .. } => Ok(Some(*field)),
        other => other.splitting_field(),
    }
}

/// Nontrivial Tits classes of the characters fixed over Q; `Err` entries
/// stand for classes the data does not determine.
fn fixed_classes(desc: &LieDescriptor) -> Result<Vec<std::result::Result<TitsClass, String>>> {
    Ok(profile(desc)?
        .chars
        .into_iter()
        .filter(|c| c.fixed)
        .filter_map(|c| match c.class {
            Ok(class) if class.is_trivial() => None,
            Ok(class) => Some(Ok(class)),
            Err(e) => Some(Err(e.to_string())),
        })
        .collect())
}

/// Universality of a direct sum of simple factors, condition by condition.
///
/// A definite failure of any condition gives `No`; otherwise an undecided
/// condition gives `Indeterminate`.
pub fn decide_direct_sum(factors: &[LieDescriptor]) -> Result<Verdict> {
    LieDescriptor::DirectSum { factors: factors.to_vec() }.validate()?;
    let mut verdict = Verdict { universal: Universal::Yes, trace: Vec::new() };
    let mut status = Status::Pass;
    let mut first_failure: Option<&str> = None;
    let mut record = |verdict: &mut Verdict, s: Status, criterion: &'static str, values: String, citation| {
        if s == Status::Fail && first_failure.is_none() {
            first_failure = Some(criterion);
        }
        status = status.worst(s);
        verdict.push(criterion, values, citation);
    };

    // (1)
    let mut s1 = Status::Pass;
    let mut parts = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let v = decide(f)?;
        s1 = s1.worst(match v.universal {
            Universal::Yes => Status::Pass,
            Universal::No => Status::Fail,
            Universal::Indeterminate => Status::Unknown,
        });
        parts.push(format!("factor {i} ({})={}", f.kind(), v.universal));
    }
    record(&mut verdict, s1, "condition-1", parts.join(", "), CONDITION_1);

    // (2)
    let fields: Vec<(usize, QuadExt)> = factors
        .iter()
        .enumerate()
        .filter_map(|(i, f)| outer_field(f).transpose().map(|l| l.map(|l| (i, l))))
        .collect::<Result<_>>()?;
    let common = fields.first().map(|(_, l)| *l);
    let s2 = match common {
        None => Status::Pass,
        Some(l) if l.is_imaginary() && fields.iter().all(|(_, m)| *m == l) => Status::Pass,
        Some(_) => Status::Fail,
    };
    let listed: Vec<String> = fields.iter().map(|(i, l)| format!("factor {i}: {l}")).collect();
    let values = if listed.is_empty() { "all factors inner".to_string() } else { listed.join(", ") };
    record(&mut verdict, s2, "condition-2", values, CONDITION_2);

    // (3)
    let classes: Vec<_> = factors.iter().map(fixed_classes).collect::<Result<_>>()?;
    let mut s3 = Status::Pass;
    let mut notes = Vec::new();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            for a in &classes[i] {
                for b in &classes[j] {
                    let s = match (a, b) {
                        (Ok(TitsClass::Known(x)), Ok(TitsClass::Known(y))) => {
                            if x == y {
                                Status::Pass
                            } else {
                                notes.push(format!("factor {i} class {x} != factor {j} class {y}"));
                                Status::Fail
                            }
                        }
                        _ => {
                            let show = |c: &std::result::Result<TitsClass, String>| match c {
                                Ok(c) => c.to_string(),
                                Err(e) => e.clone(),
                            };
                            notes.push(format!("factor {i} class {} vs factor {j} class {} undetermined", show(a), show(b)));
                            Status::Unknown
                        }
                    };
                    s3 = s3.worst(s);
                }
            }
        }
    }
    let values = if notes.is_empty() { "no conflicting nontrivial Tits algebras".to_string() } else { notes.join("; ") };
    record(&mut verdict, s3, "condition-3", values, CONDITION_3_CITATION);

    // (4)
    let mut s4 = Status::Pass;
    let mut notes = Vec::new();
    if let Some(l) = common {
        for (i, list) in classes.iter().enumerate() {
            if !fields.iter().any(|(j, _)| *j != i) {
                continue;
            }
            for c in list {
                let s = match c {
                    Ok(TitsClass::Known(x)) => match x.restricts_trivially(&l) {
                        Ok(true) => Status::Pass,
                        _ => {
                            notes.push(format!("factor {i} class {x} does not split over {l}"));
                            Status::Fail
                        }
                    },
                    Ok(other) => {
                        notes.push(format!("factor {i} class {other}: splitting over {l} undetermined"));
                        Status::Unknown
                    }
                    Err(e) => {
                        notes.push(format!("factor {i}: {e}"));
                        Status::Unknown
                    }
                };
                s4 = s4.worst(s);
            }
        }
    }
    let values = match common {
        None => "sum is inner".to_string(),
        Some(l) if notes.is_empty() => format!("all fixed Tits algebras split over {l}"),
        Some(_) => notes.join("; "),
    };
    record(&mut verdict, s4, "condition-4", values, CONDITION_4);

    verdict.universal = match status {
        Status::Pass => Universal::Yes,
        Status::Fail => Universal::No,
        Status::Unknown => Universal::Indeterminate,
    };
    if let Some(c) = first_failure {
        verdict.push("first-failure", c, "the first failing condition decides");
    }
    Ok(verdict)
}

/// Universality of `R_{L/Q}(G')` for an absolutely simple `G'` over `L`.
///
/// The strongly inner flag is taken as given.
pub fn decide_res_scalars(field: &QuadExt, strongly_inner: bool) -> Verdict {
    let values = format!("L={field}, imaginary={}, strongly inner (as supplied)={strongly_inner}", field.is_imaginary());
    if !field.is_imaginary() {
        Verdict::single(Universal::No, "res-scalars", values, RES_IMAGINARY)
    } else if !strongly_inner {
        Verdict::single(Universal::No, "res-scalars", values, RES_STRONGLY_INNER)
    } else {
        let mut v = Verdict::single(Universal::Yes, "res-scalars", values, RES_IMAGINARY);
        v.push("res-scalars", "strongly inner", RES_STRONGLY_INNER);
        v
    }
}
