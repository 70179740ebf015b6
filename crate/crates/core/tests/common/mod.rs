#![allow(dead_code)]

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use runiv::numbertheory::{integer, BrauerClass, Invariant, Place, QuadExt, Rational};
use runiv::quadform::DiagonalForm;
use runiv::rootdata::{Family, RootSystem};
use runiv::titsalgebra::LieDescriptor;

pub const ENTRIES: [i64; 8] = [1, -1, 2, -2, 3, -3, 5, -5];
pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(n: u64) -> Place {
    Place::prime(n).unwrap()
}

pub fn q(n: i64) -> Rational {
    integer(n)
}

pub fn sys(s: &str) -> RootSystem {
    s.parse().unwrap()
}

/// Every root system of rank at most `max`, without repetitions.
pub fn systems_up_to(max: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for r in 1..=max {
        out.push(RootSystem::new(Family::A, r).unwrap());
        if r >= 2 {
            out.push(RootSystem::new(Family::B, r).unwrap());
        }
        if r >= 3 {
            out.push(RootSystem::new(Family::C, r).unwrap());
        }
        if r >= 4 {
            out.push(RootSystem::new(Family::D, r).unwrap());
        }
    }
    for (f, r) in [(Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 7), (Family::E, 8)] {
        if r <= max {
            out.push(RootSystem::new(f, r).unwrap());
        }
    }
    out
}

pub fn form<R: Rng>(rng: &mut R, dim: usize) -> DiagonalForm {
    let e: Vec<i64> = (0..dim).map(|_| *ENTRIES.choose(rng).unwrap()).collect();
    DiagonalForm::from_integers(&e).unwrap()
}

/// A random quaternion class on {2, 3, 5, 7, inf}; nontrivial if asked.
pub fn quaternion<R: Rng>(rng: &mut R, nontrivial: bool) -> BrauerClass {
    let places = [Place::Infinite, p(2), p(3), p(5), p(7)];
    loop {
        let mask: u32 = rng.gen_range(0..32);
        if mask.count_ones() % 2 == 1 || (nontrivial && mask == 0) {
            continue;
        }
        return BrauerClass::half_at((0..5).filter(|i| mask >> i & 1 == 1).map(|i| places[i])).unwrap();
    }
}

fn two_primes<R: Rng>(rng: &mut R) -> (Place, Place) {
    let mut ps = PRIMES.to_vec();
    ps.shuffle(rng);
    (p(ps[0]), p(ps[1]))
}

/// A class of index `d` for `d` in 1..=4.
pub fn class_of_index<R: Rng>(rng: &mut R, d: u64) -> BrauerClass {
    let (a, b) = two_primes(rng);
    match d {
        1 => BrauerClass::trivial(),
        2 => quaternion(rng, true),
        3 => BrauerClass::from_invariants([(a, Invariant::new(1, 3)), (b, Invariant::new(2, 3))]).unwrap(),
        4 if rng.gen_bool(0.5) => {
            BrauerClass::from_invariants([(a, Invariant::new(1, 4)), (b, Invariant::new(3, 4))]).unwrap()
        }
        4 => BrauerClass::from_invariants([
            (Place::Infinite, Invariant::new(1, 2)),
            (a, Invariant::new(1, 4)),
            (b, Invariant::new(1, 4)),
        ])
        .unwrap(),
        _ => unreachable!(),
    }
}

fn product_of_entries<R: Rng>(rng: &mut R, count: usize) -> i64 {
    (0..count).map(|_| *ENTRIES.choose(rng).unwrap()).product()
}

const FIELDS: [i64; 10] = [-1, -2, -3, -5, -6, -7, -10, 2, 3, 5];

pub fn a_inner<R: Rng>(rng: &mut R) -> LieDescriptor {
    loop {
        let n = rng.gen_range(1..=3usize);
        let d = *[1u64, 2, 2, 2, 3, 4].choose(rng).unwrap();
        if n * d as usize >= 2 {
            return LieDescriptor::AInner { n, d, class: class_of_index(rng, d) };
        }
    }
}

pub fn a_outer<R: Rng>(rng: &mut R) -> LieDescriptor {
    loop {
        let n = rng.gen_range(1..=6usize);
        let d_d = *[1u64, 1, 1, 2, 3].choose(rng).unwrap();
        if n * d_d as usize >= 3 {
            let field = QuadExt::new(*FIELDS.choose(rng).unwrap()).unwrap();
            return LieDescriptor::AOuter { n, field, d_d, det_b: q(product_of_entries(rng, n)), diagonal: None };
        }
    }
}

pub fn b_odd<R: Rng>(rng: &mut R) -> LieDescriptor {
    let dim = *[3usize, 5, 7].choose(rng).unwrap();
    LieDescriptor::BOdd { form: form(rng, dim) }
}

pub fn c_quat<R: Rng>(rng: &mut R) -> LieDescriptor {
    LieDescriptor::CQuat { n: rng.gen_range(1..=4), d: quaternion(rng, true), diagonal: None }
}

pub fn d_orth<R: Rng>(rng: &mut R) -> LieDescriptor {
    let k = rng.gen_range(3..=4usize);
    LieDescriptor::DOrth { k, form: form(rng, 2 * k) }
}

pub fn d_quat<R: Rng>(rng: &mut R) -> LieDescriptor {
    let k = rng.gen_range(3..=5usize);
    let d = quaternion(rng, true);
    let mut nrd = product_of_entries(rng, 2);
    if d.ramified_at_infinity() {
        nrd = nrd.abs();
    }
    let c0_class = if rng.gen_bool(0.7) { Some(quaternion(rng, false)) } else { None };
    LieDescriptor::DQuat { k, d, reduced_norm: q(nrd), c0_class }
}

fn small_factor<R: Rng>(rng: &mut R) -> LieDescriptor {
    match rng.gen_range(0..6) {
        0 => LieDescriptor::SplitSimple { sys: sys(["A1", "A2", "B2", "G2"].choose(rng).unwrap()) },
        1 => LieDescriptor::CQuat { n: rng.gen_range(1..=2), d: quaternion(rng, true), diagonal: None },
        2 => LieDescriptor::AInner { n: 1, d: 2, class: quaternion(rng, true) },
        3 => {
            let field = QuadExt::new(*[-1i64, -1, -2, 2].choose(rng).unwrap()).unwrap();
            LieDescriptor::AOuter { n: 3, field, d_d: 1, det_b: q(1), diagonal: None }
        }
        4 => LieDescriptor::BOdd { form: form(rng, 3) },
        _ => LieDescriptor::ResScalars {
            field: QuadExt::new(*[-1i64, -1, -2, 3].choose(rng).unwrap()).unwrap(),
            sys: sys("A1"),
            strongly_inner: rng.gen_bool(0.8),
        },
    }
}

pub fn direct_sum<R: Rng>(rng: &mut R) -> LieDescriptor {
    let len = rng.gen_range(2..=3usize);
    LieDescriptor::DirectSum { factors: (0..len).map(|_| small_factor(rng)).collect() }
}

/// Deterministic corpus covering every classical variant, plus split,
/// exceptional and direct-sum descriptors.
pub fn corpus() -> Vec<LieDescriptor> {
    let mut r = rng(0x5eed);
    let mut out = Vec::new();
    for s in systems_up_to(4) {
        out.push(LieDescriptor::SplitSimple { sys: s });
    }
    for n in 1..=4 {
        out.push(LieDescriptor::CSplit { n });
    }
    for s in ["G2", "F4", "E8"] {
        out.push(LieDescriptor::Exceptional { sys: sys(s) });
    }
    for _ in 0..45 {
        out.push(a_inner(&mut r));
    }
    for _ in 0..60 {
        out.push(a_outer(&mut r));
    }
    for _ in 0..60 {
        out.push(b_odd(&mut r));
    }
    for _ in 0..30 {
        out.push(c_quat(&mut r));
    }
    for _ in 0..60 {
        out.push(d_orth(&mut r));
    }
    for _ in 0..45 {
        out.push(d_quat(&mut r));
    }
    for _ in 0..30 {
        out.push(direct_sum(&mut r));
    }
    out
}

/// Dimension of the irreducible module with highest weight `lambda`
/// (fundamental-weight coordinates) from Freudenthal's multiplicity formula,
/// summed over dominant weights times their Weyl orbit sizes.
pub fn freudenthal_dimension(s: RootSystem, lambda: &[i64]) -> u128 {
    let b = s.symmetrized();
    let r = s.rank();
    let half: Vec<i64> = (0..r).map(|i| b[i][i] / 2).collect();
    // Simple root j in fundamental-weight coordinates: <alpha_j, alpha_k^vee>.
    let simple: Vec<Vec<i64>> = (0..r).map(|j| (0..r).map(|k| 2 * b[j][k] / b[k][k]).collect()).collect();
    let positive = positive_roots_by_reflection(&b);
    let to_weight = |a: &[i64]| -> Vec<i64> {
        (0..r).map(|k| (0..r).map(|j| a[j] * simple[j][k]).sum()).collect()
    };
    let roots: Vec<(Vec<i64>, Vec<i64>)> = positive.iter().map(|a| (a.clone(), to_weight(a))).collect();
    // (beta, nu) for beta in root coordinates and nu in weight coordinates.
    let pair = |beta: &[i64], nu: &[i64]| -> i64 { (0..r).map(|j| beta[j] * nu[j] * half[j]).sum() };

    let dominant = |w: &[i64]| w.iter().all(|&c| c >= 0);
    let mut found: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    found.insert(lambda.to_vec(), vec![0; r]);
    let mut stack = vec![lambda.to_vec()];
    while let Some(mu) = stack.pop() {
        let beta = found[&mu].clone();
        for (a, aw) in &roots {
            let nu: Vec<i64> = mu.iter().zip(aw).map(|(x, y)| x - y).collect();
            if dominant(&nu) && !found.contains_key(&nu) {
                let nb: Vec<i64> = beta.iter().zip(a).map(|(x, y)| x + y).collect();
                found.insert(nu.clone(), nb);
                stack.push(nu);
            }
        }
    }
    let mut order: Vec<(Vec<i64>, Vec<i64>)> = found.into_iter().collect();
    order.sort_by_key(|(_, beta)| beta.iter().sum::<i64>());

    let to_dominant = |w: &[i64]| -> Vec<i64> {
        let mut w = w.to_vec();
        while let Some(j) = (0..r).find(|&j| w[j] < 0) {
            let c = w[j];
            for k in 0..r {
                w[k] -= c * simple[j][k];
            }
        }
        w
    };
    let lam_rho: Vec<i64> = lambda.iter().map(|c| c + 1).collect();
    let mut mult: HashMap<Vec<i64>, i128> = HashMap::new();
    for (mu, beta) in &order {
        if beta.iter().all(|&c| c == 0) {
            mult.insert(mu.clone(), 1);
            continue;
        }
        // (lambda+rho)^2 - (mu+rho)^2 = 2(lambda+rho, beta) - (beta, beta).
        let beta_w = to_weight(beta);
        let denom = 2 * pair(beta, &lam_rho) - pair(beta, &beta_w);
        let mut sum: i128 = 0;
        for (a, aw) in &roots {
            for k in 1.. {
                let nu: Vec<i64> = mu.iter().zip(aw).map(|(x, y)| x + k * y).collect();
                let Some(&m) = mult.get(&to_dominant(&nu)) else { break };
                sum += m * i128::from(pair(a, &nu));
            }
        }
        let num = 2 * sum;
        assert!(denom > 0 && num % i128::from(denom) == 0, "Freudenthal recursion is not integral");
        mult.insert(mu.clone(), num / i128::from(denom));
    }
    order.iter().map(|(mu, _)| mult[mu] as u128 * orbit_size(mu, &simple) as u128).sum()
}

fn orbit_size(mu: &[i64], simple: &[Vec<i64>]) -> usize {
    let r = mu.len();
    let mut seen = std::collections::HashSet::new();
    seen.insert(mu.to_vec());
    let mut stack = vec![mu.to_vec()];
    while let Some(w) = stack.pop() {
        for j in 0..r {
            let c = w[j];
            let v: Vec<i64> = (0..r).map(|k| w[k] - c * simple[j][k]).collect();
            if seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    seen.len()
}

/// Positive roots in simple-root coordinates, as the Weyl-group orbit of the
/// simple roots intersected with the positive cone.
pub fn positive_roots_by_reflection(b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = b.len();
    let mut seen = std::collections::BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    for s in &stack {
        seen.insert(s.clone());
    }
    while let Some(x) = stack.pop() {
        for i in 0..r {
            let bx: i64 = (0..r).map(|j| b[i][j] * x[j]).sum();
            let c = 2 * bx / b[i][i];
            let mut y = x.clone();
            y[i] -= c;
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().filter(|x| x.iter().all(|&c| c >= 0)).collect()
}

/// Element of a Clifford algebra on three generators with a diagonal metric,
/// indexed by blade bitmasks.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector(pub [Rational; 8]);

fn reorder_sign(a: usize, b: usize) -> i64 {
    let mut swaps = 0;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Multivector {
    pub fn blade(mask: usize) -> Self {
        let mut c: [Rational; 8] = Default::default();
        c[mask] = q(1);
        Multivector(c)
    }

    pub fn mul(&self, other: &Multivector, metric: &[Rational; 3]) -> Multivector {
        let mut out: [Rational; 8] = Default::default();
        for a in 0..8 {
            for b in 0..8 {
                if self.0[a] == q(0) || other.0[b] == q(0) {
                    continue;
                }
                let mut coeff = q(reorder_sign(a, b)) * &self.0[a] * &other.0[b];
                for (i, m) in metric.iter().enumerate() {
                    if (a & b) >> i & 1 == 1 {
                        coeff *= m;
                    }
                }
                out[a ^ b] += coeff;
            }
        }
        Multivector(out)
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        let mut out = self.0.clone();
        for (o, x) in out.iter_mut().zip(&other.0) {
            *o += x;
        }
        Multivector(out)
    }

    /// The scalar value if only the scalar blade is nonzero.
    pub fn scalar(&self) -> Option<Rational> {
        self.0[1..].iter().all(|c| *c == q(0)).then(|| self.0[0].clone())
    }
}

/// Quaternion presentation `(alpha, beta)` of the even Clifford algebra of
/// `<a1, a2, a3>`, read off from blade products of `i = e1 e2` and `j = e1 e3`.
pub fn even_clifford_presentation(a: [i64; 3]) -> (Rational, Rational) {
    let metric = [q(a[0]), q(a[1]), q(a[2])];
    let i = Multivector::blade(0b011);
    let j = Multivector::blade(0b101);
    let ii = i.mul(&i, &metric).scalar().expect("i^2 is scalar");
    let jj = j.mul(&j, &metric).scalar().expect("j^2 is scalar");
    let anti = i.mul(&j, &metric).add(&j.mul(&i, &metric));
    assert!(anti.0.iter().all(|c| *c == q(0)), "i and j must anticommute");
    let ij = i.mul(&j, &metric);
    assert!(ij.0[0b110] != q(0), "ij must span the remaining even blade");
    (ii, jj)
}
