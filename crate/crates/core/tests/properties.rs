//! Property tests for the algebraic invariants, each against an independent formulation.

use std::collections::BTreeSet;

use proptest::prelude::*;
use separable_mv::algebra::{enumerate_homs, product_split};
use separable_mv::lgroup::{gamma, xi, SimplicialGroup};
use separable_mv::oracle;
use separable_mv::pierce::{chi, is_boolean_via_primes, phi};
use separable_mv::terms::{generated_subalgebra, parse_term, Term};
use separable_mv::{Element, FiniteMV, Fraction};

fn algebra(max_components: usize, max_order: u64) -> impl Strategy<Value = FiniteMV> {
    prop::collection::vec(1..=max_order, 0..=max_components).prop_map(|o| FiniteMV::new(o).unwrap())
}

fn element_of(a: &FiniteMV) -> impl Strategy<Value = Element> {
    let a = a.clone();
    let steps: Vec<_> = a.orders().iter().map(|&m| 0..=m).collect();
    steps.prop_map(move |s| a.from_steps(&s).unwrap())
}

fn with_elements(n: usize) -> impl Strategy<Value = (FiniteMV, Vec<Element>)> {
    algebra(3, 8).prop_flat_map(move |a| {
        let e = prop::collection::vec(element_of(&a), n);
        (Just(a), e)
    })
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        (1u64..=9, 2u64..=9).prop_filter_map("proper fraction", |(p, q)| {
            (p < q).then(|| Fraction::new(p, q).ok()).flatten().filter(|f| f.den() == q).map(Term::Const)
        }),
        prop::sample::select(vec!["x", "y", "z1", "_w"]).prop_map(Term::var),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::oplus(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::odot(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::join(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::meet(a, b)),
        ]
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_identity(t in term()) {
        let printed = t.to_string();
        prop_assert_eq!(parse_term(&printed).unwrap(), t, "{}", printed);
    }

    #[test]
    fn mv_axioms((a, e) in with_elements(3)) {
        let (x, y, z) = (&e[0], &e[1], &e[2]);
        let zero = a.zero();
        prop_assert_eq!(x.oplus(&y.oplus(z)), x.oplus(y).oplus(z));
        prop_assert_eq!(x.oplus(y), y.oplus(x));
        prop_assert_eq!(x.oplus(&zero), x.clone());
        prop_assert_eq!(x.neg().neg(), x.clone());
        prop_assert_eq!(x.oplus(&zero.neg()), zero.neg());
        prop_assert_eq!(x.neg().oplus(y).neg().oplus(y), y.neg().oplus(x).neg().oplus(x));
        // derived operations
        prop_assert_eq!(x.odot(y), x.neg().oplus(&y.neg()).neg());
        prop_assert_eq!(x.join(y), x.odot(&y.neg()).oplus(y));
        prop_assert_eq!(x.leq(y), x.neg().oplus(y).is_one());
    }

    #[test]
    fn boolean_prime_criterion((a, e) in with_elements(1)) {
        prop_assert_eq!(is_boolean_via_primes(&a, &e[0]).unwrap(), a.is_boolean(&e[0]).unwrap());
    }

    #[test]
    fn split_is_bijective((a, e) in with_elements(2), pick in any::<u64>()) {
        let k = a.components();
        let x = a.indicator((0..k).filter(|i| pick >> i & 1 == 1));
        let s = product_split(&a, &x).unwrap();
        let c = &e[0];
        let (c0, c1) = s.pair(c);
        prop_assert_eq!(&s.unpair(&c0, &c1).unwrap(), c);
        let glued = s.combine(&e[0], &e[1]).unwrap();
        prop_assert_eq!(s.pair(&glued), (s.q0.apply(&e[0]), s.q1.apply(&e[1])));
    }

    #[test]
    fn phi_and_chi_are_inverse(a in algebra(8, 4), pick in any::<u64>()) {
        let k = a.components();
        let x0: BTreeSet<usize> = (0..k).filter(|i| pick >> i & 1 == 1).collect();
        let b = chi(&a, &x0).unwrap();
        prop_assert_eq!(phi(&a, &b).unwrap(), x0);
        prop_assert_eq!(chi(&a, &phi(&a, &b).unwrap()).unwrap(), b);
    }

    #[test]
    fn homs_carry_generated_subalgebras((a, e) in with_elements(2), b in algebra(3, 12), pick in any::<prop::sample::Index>()) {
        let homs = enumerate_homs(&a, &b);
        prop_assume!(!homs.is_empty());
        let h = &homs[pick.index(homs.len())];
        let sa = generated_subalgebra(&a, &e).unwrap();
        let image: BTreeSet<Element> = sa.elements().iter().map(|x| h.apply(x)).collect();
        let images: Vec<Element> = e.iter().map(|x| h.apply(x)).collect();
        let direct: BTreeSet<Element> = generated_subalgebra(&b, &images).unwrap().elements().iter().cloned().collect();
        prop_assert_eq!(image, direct);
    }

    #[test]
    fn generation_is_a_closure_operator((a, e) in with_elements(3)) {
        let small = generated_subalgebra(&a, &e[..1]).unwrap();
        let big = generated_subalgebra(&a, &e).unwrap();
        prop_assert!(small.elements().iter().all(|x| big.contains(x)));
        let again = generated_subalgebra(&a, big.elements()).unwrap();
        prop_assert_eq!(again.elements(), big.elements());
        prop_assert!(big.verify());
    }

    #[test]
    fn simplicial_round_trip(unit in prop::collection::vec(1u64..=40, 0..=6)) {
        let g = SimplicialGroup::new(unit).unwrap();
        prop_assert_eq!(xi(&gamma(&g)), g.clone());
        prop_assert_eq!(gamma(&xi(&gamma(&g))), gamma(&g));
    }
}

/// `Sa(G)` is the least subalgebra containing `G`, computed by intersecting all subalgebras.
#[test]
fn generation_matches_intersection_of_subalgebras() {
    for a in separable_mv::algebra::algebras_up_to_size(30) {
        let subs = oracle::all_subalgebras(&a);
        let elements: Vec<Element> = a.elements().collect();
        for g in &elements {
            let gi = a.index_of(g).unwrap();
            let least = subs
                .iter()
                .filter(|s| s.contains(&gi))
                .fold(None::<BTreeSet<usize>>, |acc, s| {
                    Some(acc.map_or_else(|| s.clone(), |t| t.intersection(s).copied().collect()))
                })
                .unwrap();
            let sa: BTreeSet<usize> = generated_subalgebra(&a, std::slice::from_ref(g))
                .unwrap()
                .elements()
                .iter()
                .map(|x| a.index_of(x).unwrap())
                .collect();
            assert_eq!(sa, least, "{a:?}, generator {g}");
        }
    }
}
