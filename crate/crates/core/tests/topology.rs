//! Finite spaces: components against the connectivity oracle, and functoriality of π0.

use proptest::prelude::*;
use separable_mv::oracle::{components_by_connectivity, topologies_by_families, up_to_homeomorphism};
use separable_mv::topology::{
    components, full_mask, is_homeomorphism, pi0, pi0_map, quasi_components, ContinuousMap, FinSpace,
};

fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..m).map(move |y| {
                    let mut g = f.clone();
                    g.push(y);
                    g
                })
            })
            .collect();
    }
    out
}

fn representatives(max_points: usize) -> Vec<FinSpace> {
    (0..=max_points).flat_map(|n| up_to_homeomorphism(&topologies_by_families(n))).collect()
}

fn continuous_maps(x: &FinSpace, y: &FinSpace) -> Vec<ContinuousMap> {
    all_maps(x.points(), y.points())
        .into_iter()
        .filter_map(|f| ContinuousMap::new(x.clone(), y.clone(), f).ok())
        .collect()
}

/// Continuous maps preserve "same component", on every map between spaces of at most 4 points.
#[test]
fn continuous_maps_preserve_components() {
    let reps = representatives(4);
    assert_eq!(reps.len(), 1 + 1 + 3 + 9 + 33);
    for x in &reps {
        let cx = components(x);
        for y in &reps {
            let cy = components(y);
            for f in continuous_maps(x, y) {
                for p in 0..x.points() {
                    for q in 0..x.points() {
                        if cx.class_of[p] == cx.class_of[q] {
                            assert_eq!(cy.class_of[f.map()[p]], cy.class_of[f.map()[q]]);
                        }
                    }
                }
                assert!(pi0_map(&f).is_ok());
            }
        }
    }
}

#[test]
fn pi0_is_a_functor() {
    let reps = representatives(3);
    for x in &reps {
        let id = pi0_map(&ContinuousMap::identity(x)).unwrap();
        assert_eq!(id.map, (0..id.source.classes.len()).collect::<Vec<_>>());
        for y in &reps {
            let fs = continuous_maps(x, y);
            for z in &reps {
                let gs = continuous_maps(y, z);
                for f in &fs {
                    let pf = pi0_map(f).unwrap();
                    for g in &gs {
                        let pg = pi0_map(g).unwrap();
                        let pgf = pi0_map(&f.then(g).unwrap()).unwrap();
                        let composed: Vec<usize> = pf.map.iter().map(|&c| pg.map[c]).collect();
                        assert_eq!(pgf.map, composed);
                    }
                }
            }
        }
    }
}

#[test]
fn pi0_is_idempotent() {
    for x in representatives(4) {
        let once = pi0(&x);
        let twice = pi0(&once.quotient);
        let n = once.quotient.points();
        assert_eq!(twice.class_of, (0..n).collect::<Vec<_>>());
        assert!(is_homeomorphism(&once.quotient, &twice.quotient, &twice.class_of));
    }
}

fn space(max_points: usize) -> impl Strategy<Value = FinSpace> {
    (0..=max_points).prop_flat_map(|n| {
        prop::collection::vec(0..=full_mask(n), 0..6)
            .prop_map(move |sub| FinSpace::generated_by(n, &sub).unwrap())
    })
}

proptest! {
    #[test]
    fn components_match_connectivity_oracle(x in space(6)) {
        let c = components(&x);
        prop_assert_eq!(&c, &quasi_components(&x));
        prop_assert_eq!(c.classes, components_by_connectivity(&x));
    }
}
