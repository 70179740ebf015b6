mod common;

use std::collections::BTreeSet;

use common::{freudenthal_dimension, positive_roots_by_reflection, sys, systems_up_to};
use proptest::prelude::*;
use runiv::rootdata::{
    center_character, character_representatives, fundamental_group, in_root_lattice, star_action, weyl_dimension,
    RootSystem, Weight,
};

fn with_weight(max_rank: usize) -> impl Strategy<Value = (RootSystem, Weight)> {
    prop::sample::select(systems_up_to(max_rank)).prop_flat_map(|s| {
        prop::collection::vec(0u32..=2, s.rank()).prop_map(move |c| (s, Weight(c)))
    })
}

proptest! {
    #[test]
    fn star_is_an_involution((s, w) in with_weight(8)) {
        for outer in [false, true] {
            if outer && !s.has_diagram_involution() {
                continue;
            }
            let once = star_action(s, outer, &w).unwrap();
            prop_assert_eq!(star_action(s, outer, &once).unwrap(), w.clone());
            prop_assert_eq!(in_root_lattice(s, &once).unwrap(), in_root_lattice(s, &w).unwrap());
            prop_assert_eq!(
                center_character(s, &once).unwrap().order(),
                center_character(s, &w).unwrap().order()
            );
            prop_assert_eq!(weyl_dimension(s, &once).unwrap(), weyl_dimension(s, &w).unwrap());
        }
    }

    #[test]
    fn root_lattice_is_the_kernel((s, w) in with_weight(8)) {
        prop_assert_eq!(in_root_lattice(s, &w).unwrap(), center_character(s, &w).unwrap().is_identity());
    }
}

#[test]
fn center_character_surjects() {
    for s in systems_up_to(8) {
        let group = fundamental_group(s);
        let mut reached = BTreeSet::new();
        reached.insert(group.identity().to_string());
        let images: Vec<_> = (0..s.rank()).map(|i| center_character(s, &Weight::fundamental(s.rank(), i)).unwrap()).collect();
        let mut frontier = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            for g in &images {
                let y = x.add(g);
                if reached.insert(y.to_string()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(reached.len() as u32, group.order(), "{s}");
        let reps = character_representatives(s);
        assert_eq!(reps.len() as u32, group.order(), "{s}");
        for (c, w) in reps {
            assert_eq!(center_character(s, &w).unwrap(), c, "{s}");
        }
    }
}

#[test]
fn positive_roots_match_reflection_closure() {
    for s in systems_up_to(8) {
        let ours: BTreeSet<Vec<i64>> = s.positive_roots().into_iter().collect();
        let oracle: BTreeSet<Vec<i64>> = positive_roots_by_reflection(&s.symmetrized()).into_iter().collect();
        assert_eq!(ours, oracle, "{s}");
    }
}

#[test]
fn known_dimensions() {
    // TRIVIAL anchors: adjoint and smallest representations.
    let cases = [
        ("A1", vec![1], 2u64),
        ("A2", vec![1, 1], 8),
        ("G2", vec![1, 0], 7),
        ("G2", vec![0, 1], 14),
        ("F4", vec![0, 0, 0, 1], 26),
        ("E6", vec![1, 0, 0, 0, 0, 0], 27),
        ("E7", vec![0, 0, 0, 0, 0, 0, 1], 56),
        ("E8", vec![0, 0, 0, 0, 0, 0, 0, 1], 248),
        ("D4", vec![0, 0, 0, 1], 8),
        ("B3", vec![0, 0, 1], 8),
        ("C3", vec![0, 0, 1], 14),
    ];
    for (name, w, dim) in cases {
        let got = weyl_dimension(sys(name), &Weight(w.clone())).unwrap();
        assert_eq!(got, dim.into(), "{name} {w:?}");
    }
}

#[test]
fn freudenthal_spot_checks_rank_five_and_six() {
    for name in ["A5", "B5", "D5", "E6"] {
        let s = sys(name);
        for i in 0..s.rank() {
            let mut c = vec![0i64; s.rank()];
            c[i] = 1;
            let w = Weight(c.iter().map(|&x| x as u32).collect());
            assert_eq!(weyl_dimension(s, &w).unwrap(), freudenthal_dimension(s, &c).into(), "{name} {c:?}");
        }
    }
}
