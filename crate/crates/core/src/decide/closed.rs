use num_traits::Signed;

use super::sums::{decide_direct_sum, decide_res_scalars};
use super::{yes_no, Universal, Verdict};
use crate::error::Result;
use crate::numbertheory::{format_rational, integer, is_norm, squarefree, Place, QuadExt};
use crate::quadform::{even_clifford_class, real_even_clifford_nonsplit};
use crate::titsalgebra::LieDescriptor;

const SPLIT: &str = "split forms have trivial Tits algebras";
const SYMPLECTIC: &str = "Sp_{2n}(Q) is R-universal";
const EFG: &str = "every Q-form of type E8, F4 or G2 is R-universal";
const A_INNER: &str = "inner type A: D is Q or a quaternion algebra that does not split over R";
const A_OUTER: &str =
    "outer type A: L imaginary, D = L, and n odd or (-1)^(n/2) det B negative or a norm from L";
const B_ODD: &str = "odd orthogonal: C0_Q(B) split or C0_R(B) not split";
const C_QUAT: &str = "type C over a quaternion algebra: D does not split over R";
const D_ORTH: &str = "even orthogonal: C0_Q(B) split and (-1)^k det B negative or a square, \
                      or C0_Q(B) not split over R and (-1)^k det B a square";
const D_QUAT: &str = "quaternionic orthogonal: D does not split over R, and Nrd(B) a square (k even) \
                      or C0_D(B) split (k odd)";
const E6: &str = "E6: strongly inner (E6_28_2, E6_0_6), or outer and split over an imaginary quadratic field";
const E7: &str = "E7: Q-index E7_28_3 or E7_0_7, or real Tits algebra nontrivial (E7_31_2, E7_9_4, E7_133_0)";

/// Closed-form R-universality criterion for a descriptor.
pub fn decide(desc: &LieDescriptor) -> Result<Verdict> {
    desc.validate()?;
    Ok(match desc {
        LieDescriptor::SplitSimple { sys } => {
            Verdict::single(Universal::Yes, "split", format!("sys={sys}"), SPLIT)
        }
        LieDescriptor::CSplit { n } => Verdict::single(Universal::Yes, "C-split", format!("n={n}"), SYMPLECTIC),
        LieDescriptor::Exceptional { sys } => {
            Verdict::single(Universal::Yes, "exceptional", format!("sys={sys}"), EFG)
        }
        LieDescriptor::AInner { n, d, class } => {
            let ok = *d == 1 || (*d == 2 && class.ramified_at_infinity());
            Verdict::single(
                yes_no(ok),
                "A-inner",
                format!(
                    "n={n}, d={d}, class={class}, index={}, inv_inf={}",
                    class.index(),
                    class.invariant(Place::Infinite)
                ),
                A_INNER,
            )
        }
        LieDescriptor::AOuter { n, field, d_d, det_b, .. } => a_outer(*n, field, *d_d, det_b)?,
        LieDescriptor::BOdd { form } => {
            let even = even_clifford_class(form)?;
            let (p, q) = form.signature();
            let real_nonsplit = real_even_clifford_nonsplit(p, q);
            Verdict::single(
                yes_no(even.split_over_center || real_nonsplit),
                "B-odd",
                format!(
                    "signature=({p},{q}), C0_Q class={}, C0_Q split={}, C0_R nonsplit={real_nonsplit}",
                    even.class, even.split_over_center
                ),
                B_ODD,
            )
        }
        LieDescriptor::CQuat { n, d, .. } => Verdict::single(
            yes_no(d.ramified_at_infinity()),
            "C-quaternion",
            format!("n={n}, D={d}"),
            C_QUAT,
        ),
        LieDescriptor::DOrth { k, form } => {
            let det = form.det();
            let delta = squarefree(&if k % 2 == 0 { det } else { -det })?;
            let square = delta == 1;
            let even = even_clifford_class(form)?;
            let (p, q) = form.signature();
            let real_nonsplit = real_even_clifford_nonsplit(p, q);
            let ok = (even.split_over_center && (delta < 0 || square)) || (real_nonsplit && square);
            Verdict::single(
                yes_no(ok),
                "D-orthogonal",
                format!(
                    "k={k}, signature=({p},{q}), (-1)^k det B={delta} mod squares, center={}, \
                     C0 class={}, C0 split={}, C0_R nonsplit={real_nonsplit}",
                    even.center, even.class, even.split_over_center
                ),
                D_ORTH,
            )
        }
        LieDescriptor::DQuat { k, d, reduced_norm, c0_class } => {
            let nrd = squarefree(reduced_norm)?;
            let base = format!("k={k}, D={d}, Nrd(B)={nrd} mod squares");
            if !d.ramified_at_infinity() {
                Verdict::single(Universal::No, "D-quaternion", base, D_QUAT)
            } else if k % 2 == 0 {
                Verdict::single(yes_no(nrd == 1), "D-quaternion", base, D_QUAT)
            } else {
                match c0_class {
                    None => Verdict::single(
                        Universal::Indeterminate,
                        "D-quaternion",
                        format!("{base}, missing c0Class (class of C0_D(B))"),
                        D_QUAT,
                    ),
                    Some(c0) => {
                        let l = QuadExt::new(-nrd)?;
                        let split = c0.restricts_trivially(&l)?;
                        Verdict::single(
                            yes_no(split),
                            "D-quaternion",
                            format!("{base}, center={l}, C0_D class={c0}, split over center={split}"),
                            D_QUAT,
                        )
                    }
                }
            }
        }
        LieDescriptor::E6Inner { index } => Verdict::single(
            yes_no(index.strongly_inner()),
            "E6-inner",
            format!("index={index}, strongly inner={}", index.strongly_inner()),
            E6,
        ),
        LieDescriptor::E6Outer { field, splits_over_l } => Verdict::single(
            yes_no(field.is_imaginary() && *splits_over_l),
            "E6-outer",
            format!("L={field}, imaginary={}, splits over L={splits_over_l}", field.is_imaginary()),
            E6,
        ),
        LieDescriptor::E7 { index_q, index_r } => {
            let u = match (index_q.tits_trivial(), index_r.tits_trivial()) {
                (Some(true), _) | (_, Some(false)) => Universal::Yes,
                (Some(false), Some(true)) => Universal::No,
                _ => Universal::Indeterminate,
            };
            let values = match u {
                Universal::Indeterminate => {
                    format!("indexQ={index_q}, indexR={index_r}: the Tits algebra is not determined by these labels")
                }
                _ => format!("indexQ={index_q}, indexR={index_r}"),
            };
            Verdict::single(u, "E7", values, E7)
        }
        LieDescriptor::ResScalars { field, strongly_inner, .. } => decide_res_scalars(field, *strongly_inner),
        LieDescriptor::DirectSum { factors } => decide_direct_sum(factors)?,
    })
}

fn a_outer(n: usize, field: &QuadExt, d_d: u64, det_b: &crate::numbertheory::Rational) -> Result<Verdict> {
    let head = format!("n={n}, L={field}, dD={d_d}");
    if !field.is_imaginary() {
        return Ok(Verdict::single(Universal::No, "A-outer", format!("{head}, L real"), A_OUTER));
    }
    if d_d > 1 {
        return Ok(Verdict::single(Universal::No, "A-outer", format!("{head}, D != L"), A_OUTER));
    }
    if n % 2 == 1 {
        return Ok(Verdict::single(Universal::Yes, "A-outer", format!("{head}, n odd"), A_OUTER));
    }
    let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
    let b = integer(sign) * det_b;
    let negative = b.is_negative();
    let norm = is_norm(field, &b)?;
    Ok(Verdict::single(
        yes_no(negative || norm),
        "A-outer",
        format!("{head}, (-1)^(n/2) det B={}, negative={negative}, norm from L={norm}", format_rational(&b)),
        A_OUTER,
    ))
}
