use std::str::FromStr;

use super::closed::decide;
use crate::error::{Error, Result};
use crate::numbertheory::{integer, BrauerClass, Place, QuadExt, Rational};
use crate::quadform::DiagonalForm;
use crate::rootdata::{Family, RootSystem};
use crate::titsalgebra::{real_form_of, LieDescriptor, RealForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealFormQuery {
    pub label: RealForm,
}

impl FromStr for RealFormQuery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(RealFormQuery { label: s.parse()? })
    }
}

/// Parameters the search may use.
///
/// Diagonal entries are `+m` and `-m` for `m` in `magnitudes`; quaternion
/// classes are supported on `primes` and the infinite place; outer forms of
/// type A use the fields `Q(sqrt(d))` for `d` in `fields`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBound {
    pub magnitudes: Vec<i64>,
    pub primes: Vec<u64>,
    pub fields: Vec<i64>,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound {
            magnitudes: vec![1, 2, 3, 5, 7],
            primes: vec![2, 3, 5, 7],
            fields: vec![-1, -2, -3, -5, -6, -7, -10],
        }
    }
}

impl SearchBound {
    fn validate(&self) -> Result<()> {
        if self.magnitudes.is_empty() || self.magnitudes.iter().any(|&m| m <= 0) {
            return Err(Error::validation("bound", "magnitudes must be positive and nonempty"));
        }
        for &p in &self.primes {
            Place::prime(p)?;
        }
        for &d in &self.fields {
            QuadExt::new(d)?;
        }
        Ok(())
    }
}

/// Nondecreasing sequences of length `len` over `pool`, in lexicographic order.
fn multisets(pool: &[i64], len: usize) -> Vec<Vec<i64>> {
    let mut sorted = pool.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(pool: &[i64], start: usize, len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            go(pool, i, len, cur, out);
            cur.pop();
        }
    }
    go(&sorted, 0, len, &mut cur, &mut out);
    out
}

/// Diagonals with `p` positive and `q` negative entries.
fn diagonals(bound: &SearchBound, p: usize, q: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for pos in multisets(&bound.magnitudes, p) {
        for neg in multisets(&bound.magnitudes, q) {
            let mut e = pos.clone();
            e.extend(neg.iter().map(|m| -m));
            out.push(e);
        }
    }
    out
}

/// Quaternion classes on the bound's places, by size and then lexicographically
/// (infinite place first).
fn quaternion_classes(bound: &SearchBound) -> Result<Vec<BrauerClass>> {
    let mut places = vec![Place::Infinite];
    let mut primes = bound.primes.clone();
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        places.push(Place::prime(p)?);
    }
    let mut subsets: Vec<Vec<Place>> = Vec::new();
    for mask in 1u32..(1 << places.len()) {
        if mask.count_ones() % 2 == 0 {
            subsets.push((0..places.len()).filter(|i| mask >> i & 1 == 1).map(|i| places[i]).collect());
        }
    }
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets.into_iter().map(BrauerClass::half_at).collect()
}

fn rationals(e: &[i64]) -> Vec<Rational> {
    e.iter().map(|&x| integer(x)).collect()
}

fn sys(f: Family, r: usize) -> Result<RootSystem> {
    RootSystem::new(f, r)
}

fn candidates(label: &RealForm, bound: &SearchBound) -> Result<Vec<LieDescriptor>> {
    use RealForm::*;
    let ramified = || -> Result<Vec<BrauerClass>> {
        Ok(quaternion_classes(bound)?.into_iter().filter(BrauerClass::ramified_at_infinity).collect())
    };
    Ok(match *label {
        SlR { n } => vec![LieDescriptor::SplitSimple { sys: sys(Family::A, n - 1)? }],
        Split(s) => vec![LieDescriptor::SplitSimple { sys: s }],
        Su { p, q } if p + q == 2 => {
            if p.min(q) == 1 {
                vec![LieDescriptor::SplitSimple { sys: sys(Family::A, 1)? }]
            } else {
                ramified()?.into_iter().map(|class| LieDescriptor::AInner { n: 1, d: 2, class }).collect()
            }
        }
        Su { p, q } => {
            let mut out = Vec::new();
            for &d in &bound.fields {
                let field = QuadExt::new(d)?;
                if !field.is_imaginary() {
                    continue;
                }
                for diag in diagonals(bound, p, q) {
                    let det: i64 = diag.iter().product();
                    out.push(LieDescriptor::AOuter {
                        n: p + q,
                        field,
                        d_d: 1,
                        det_b: integer(det),
                        diagonal: Some(rationals(&diag)),
                    });
                }
            }
            out
        }
        So { p, q } => {
            let n = p + q;
            match (p.max(q), p.min(q)) {
                (4, 0) => {
                    let su2 = candidates(&Su { p: 2, q: 0 }, bound)?;
                    su2.into_iter().map(|f| LieDescriptor::DirectSum { factors: vec![f.clone(), f] }).collect()
                }
                (2, 2) => {
                    let a1 = LieDescriptor::SplitSimple { sys: sys(Family::A, 1)? };
                    vec![LieDescriptor::DirectSum { factors: vec![a1.clone(), a1] }]
                }
                (3, 1) => vec![LieDescriptor::ResScalars {
                    field: QuadExt::new(-1)?,
                    sys: sys(Family::A, 1)?,
                    strongly_inner: true,
                }],
                _ => {
                    let mut out = Vec::new();
                    for diag in diagonals(bound, p, q) {
                        let form = DiagonalForm::from_integers(&diag)?;
                        out.push(if n % 2 == 1 {
                            LieDescriptor::BOdd { form }
                        } else {
                            LieDescriptor::DOrth { k: n / 2, form }
                        });
                    }
                    out
                }
            }
        }
        Sp { n } => vec![LieDescriptor::CSplit { n }],
        SpPQ { p, q } => {
            let mut out = Vec::new();
            for d in ramified()? {
                for diag in diagonals(bound, p, q) {
                    out.push(LieDescriptor::CQuat { n: p + q, d: d.clone(), diagonal: Some(rationals(&diag)) });
                }
            }
            out
        }
        SlH { n } => ramified()?.into_iter().map(|class| LieDescriptor::AInner { n, d: 2, class }).collect(),
        SoStar { k } if k % 2 == 0 && k >= 3 => ramified()?
            .into_iter()
            .map(|d| LieDescriptor::DQuat { k, d, reduced_norm: integer(1), c0_class: None })
            .collect(),
        SoStar { k } => {
            return Err(Error::unsupported(format!(
                "so*({}) needs the class of C0_D(B), which the search cannot certify",
                2 * k
            )))
        }
        Complex(s) => vec![LieDescriptor::ResScalars { field: QuadExt::new(-1)?, sys: s, strongly_inner: true }],
        Sum(ref parts) => {
            let mut factors = Vec::new();
            for part in parts {
                factors.push(find_simple(part, bound)?);
            }
            vec![LieDescriptor::DirectSum { factors }]
        }
    })
}

fn verified(desc: &LieDescriptor, label: &RealForm) -> bool {
    matches!(real_form_of(desc), Ok(rf) if rf.matches(label)) && matches!(decide(desc), Ok(v) if v.is_yes())
}

fn search(label: &RealForm, bound: &SearchBound) -> Result<LieDescriptor> {
    candidates(label, bound)?
        .into_iter()
        .find(|d| verified(d, label))
        .ok_or_else(|| Error::NotFound(format!("no R-universal Q-form of {label} within the bound")))
}

fn find_simple(label: &RealForm, bound: &SearchBound) -> Result<LieDescriptor> {
    match search(label, bound) {
        Err(Error::Unsupported(msg)) => {
            let canon = label.canonical();
            if &canon == label {
                Err(Error::Unsupported(msg))
            } else {
                search(&canon, bound)
            }
        }
        other => other,
    }
}

/// Searches for an R-universal Q-form with the given real form.
///
/// Candidates are enumerated in a fixed order: diagonal forms as a
/// nondecreasing tuple of positive entries followed by a nondecreasing tuple
/// of negative entries (by absolute value), quaternion classes by support
/// size and then lexicographically, fields in the order of the bound. The
/// first candidate whose real form matches and whose verdict is `Yes` is
/// returned.
pub fn find_runiversal_qform(query: &RealFormQuery, bound: &SearchBound) -> Result<LieDescriptor> {
    bound.validate()?;
    let found = find_simple(&query.label, bound)?;
    if verified(&found, &query.label) {
        Ok(found)
    } else {
        Err(Error::NotFound(format!("no R-universal Q-form of {} within the bound", query.label)))
    }
}
