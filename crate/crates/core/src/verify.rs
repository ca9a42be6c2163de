//! The acceptance suites: each criterion sweeps a bounded catalog and compares the
//! structural algorithms with the brute-force oracles of [`crate::oracle`].

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{algebras_bounded, algebras_up_to_size, enumerate_homs, product_split, FiniteMV, Ideal};
use crate::coproduct::{coproduct_finite, is_separable, is_subterminal_epic, separability_witness, Representable};
use crate::fraction::{gcd, Fraction};
use crate::lgroup::{gamma, product_unital, xi, SimplicialGroup};
use crate::oracle;
use crate::pierce::{boolean_skeleton, chi, decompose, holder_embed, is_boolean_via_primes, phi};
use crate::terms::{generated_subalgebra, order_rank, order_rank_rational};
use crate::topology::{components, e_map, gamma_compare, pierce_coproduct_check, quasi_components, FinSpace};
use crate::algebra::{RationalAlgebra, RationalProduct};
use crate::Element;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Seed for the sampled part of criterion 8.
    pub seed: u64,
    /// Optional cap on carrier sizes in the size-bounded sweeps (criteria 1, 6, 7, 9).
    pub max_size: Option<u128>,
    /// Pairs involving a four-point space drawn for criterion 8.
    pub four_point_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            max_size: None,
            four_point_samples: 4000,
        }
    }
}

impl VerifyConfig {
    fn cap(&self, bound: u128) -> u128 {
        self.max_size.map_or(bound, |m| m.min(bound))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual cases checked.
    pub cases: u64,
    pub failures: Vec<String>,
    pub within_time_limit: bool,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub limit: Option<Duration>,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let limit = self.limit.map_or(String::new(), |l| format!(" / limit {}s", l.as_secs()));
        format!(
            "criterion {:>2} {:<34} {}  ({} cases, {:.2}s{limit})",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.cases,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Collects cases and keeps the first few failures.
struct Tally {
    cases: u64,
    failures: Vec<String>,
    failed: u64,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 10 {
                self.failures.push(what());
            }
        }
    }
}

fn run(id: u8, name: &'static str, limit: Option<Duration>, body: impl FnOnce(&mut Tally)) -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    body(&mut t);
    let elapsed = start.elapsed();
    let within_time_limit = limit.is_none_or(|l| elapsed <= l);
    if t.failed > t.failures.len() as u64 {
        t.failures.push(format!("… {} failures in total", t.failed));
    }
    CriterionReport {
        id,
        name,
        passed: t.failed == 0 && within_time_limit,
        cases: t.cases,
        failures: t.failures,
        within_time_limit,
        elapsed,
        limit,
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "hom enumeration vs search"),
    (2, "coproduct universal property"),
    (3, "Boolean skeleton of coproducts"),
    (4, "separability witness vs factors"),
    (5, "subterminal iff single chain"),
    (6, "vanishing loci and Boolean primes"),
    (7, "product splitting"),
    (8, "components and products of spaces"),
    (9, "order-rank and local finiteness"),
    (10, "simplicial groups round trip"),
];

pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Option<CriterionReport> {
    Some(match id {
        1 => hom_oracle(cfg),
        2 => coproduct_universal_property(),
        3 => skeleton_of_coproducts(),
        4 => separability(),
        5 => subterminal(),
        6 => vanishing_loci(cfg),
        7 => splitting(cfg),
        8 => spaces(cfg),
        9 => order_ranks(cfg),
        10 => simplicial(),
        _ => return None,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, cfg).expect("known criterion"))
        .collect()
}

fn name(id: u8) -> &'static str {
    CRITERIA[id as usize - 1].1
}

/// Every pair of algebras with at most 30 elements: component-map homs equal searched homs.
pub fn hom_oracle(cfg: &VerifyConfig) -> CriterionReport {
    run(1, name(1), Some(Duration::from_secs(120)), |t| {
        let algebras = algebras_up_to_size(cfg.cap(30));
        for a in &algebras {
            for b in &algebras {
                let mut fast: Vec<Vec<usize>> = enumerate_homs(a, b).iter().map(|h| h.carrier_table()).collect();
                fast.sort();
                let slow = oracle::homs_by_search(a, b);
                t.check(fast == slow, || {
                    format!("Hom({a:?}, {b:?}): {} enumerated, {} searched", fast.len(), slow.len())
                });
            }
        }
    })
}

/// `h ↦ (in0;h, in1;h)` is a bijection `Hom(A+B, C) → Hom(A, C) × Hom(B, C)`.
pub fn coproduct_universal_property() -> CriterionReport {
    run(2, name(2), Some(Duration::from_secs(300)), |t| {
        let small = algebras_bounded(2, 6);
        let targets = algebras_bounded(2, 12);
        for a in &small {
            for b in &small {
                let c = coproduct_finite(a, b);
                for target in &targets {
                    let from_sum = enumerate_homs(&c.algebra, target);
                    let from_a = enumerate_homs(a, target);
                    let from_b = enumerate_homs(b, target);
                    let mut pairs = BTreeSet::new();
                    let mut ok = true;
                    for h in &from_sum {
                        let f = c.in0.then(h).expect("composable");
                        let g = c.in1.then(h).expect("composable");
                        ok &= c.copair(&f, &g).as_ref() == Ok(h);
                        pairs.insert((f.component_map().to_vec(), g.component_map().to_vec()));
                    }
                    ok &= pairs.len() == from_sum.len() && pairs.len() == from_a.len() * from_b.len();
                    t.check(ok, || {
                        format!(
                            "A={a:?} B={b:?} C={target:?}: |Hom(A+B,C)|={}, |Hom(A,C)|·|Hom(B,C)|={}",
                            from_sum.len(),
                            from_a.len() * from_b.len()
                        )
                    });
                }
            }
        }
    })
}

pub fn skeleton_of_coproducts() -> CriterionReport {
    run(3, name(3), None, |t| {
        let algebras = algebras_bounded(3, 4);
        for a in &algebras {
            for b in &algebras {
                let r = pierce_coproduct_check(a, b);
                let product = boolean_skeleton(a).atom_count() * boolean_skeleton(b).atom_count();
                t.check(r.passed && r.skeleton_atoms == product, || {
                    format!("A={a:?} B={b:?}: {r:?}, expected {product} atoms")
                });
            }
        }
    })
}

/// The Boolean witness for `ker ∇` exists and yields the same factors as the direct decomposition.
pub fn separability() -> CriterionReport {
    run(4, name(4), None, |t| {
        for a in algebras_bounded(3, 4) {
            let cert = separability_witness(&a).expect("within the search limit");
            let sum = &cert.coproduct.algebra;
            let witness_ok = cert.witness.as_ref().is_some_and(|e| {
                let nabla = cert.coproduct.codiagonal.as_ref().expect("A + A");
                let principal = Ideal::principal(sum, &e.neg()).expect("e in A + A");
                // brute-force kernel when the carrier is small, else componentwise
                let kernel_ok = if sum.size() <= 50_000 {
                    sum.elements().all(|c| nabla.apply(&c).is_zero() == principal.contains(&c))
                } else {
                    let n = a.components();
                    (0..sum.components()).all(|k| principal.vanishing().contains(&k) == (k / n == k % n))
                };
                sum.is_boolean(e) == Ok(true) && nabla.apply(e).is_one() && kernel_ok
            });
            let factors: Vec<RationalAlgebra> = decompose(&a)
                .factors
                .iter()
                .map(|c| holder_embed(c).expect("simple factor"))
                .collect();
            let verdict = is_separable(&Representable::Finite(a.clone()));
            t.check(
                witness_ok && verdict.separable && verdict.witness_agrees == Some(true) && verdict.factors == factors,
                || format!("{a:?}: witness {:?}, verdict {verdict:?}", cert.witness),
            );
        }
    })
}

pub fn subterminal() -> CriterionReport {
    run(5, name(5), None, |t| {
        for a in algebras_bounded(3, 8) {
            let epic = is_subterminal_epic(&a);
            t.check(epic == (a.components() == 1), || format!("{a:?}: subterminal = {epic}"));
        }
    })
}

pub fn vanishing_loci(cfg: &VerifyConfig) -> CriterionReport {
    run(6, name(6), None, |t| {
        for a in algebras_bounded(8, 3) {
            let k = a.components();
            for b in a.boolean_elements() {
                let v = phi(&a, &b).expect("Boolean");
                t.check(chi(&a, &v).as_ref() == Ok(&b), || format!("{a:?}: χ(φ({b})) ≠ {b}"));
            }
            for mask in 0u64..1 << k {
                let x0: BTreeSet<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
                let back = chi(&a, &x0).and_then(|b| phi(&a, &b));
                t.check(back.as_ref() == Ok(&x0), || format!("{a:?}: φ(χ({x0:?})) ≠ {x0:?}"));
            }
        }
        for a in algebras_up_to_size(cfg.cap(200)) {
            for x in a.elements() {
                let direct = a.is_boolean(&x).expect("element of A");
                let via = is_boolean_via_primes(&a, &x).expect("element of A");
                t.check(direct == via, || format!("{a:?}, {x}: isBoolean {direct}, prime criterion {via}"));
            }
        }
    })
}

pub fn splitting(cfg: &VerifyConfig) -> CriterionReport {
    run(7, name(7), None, |t| {
        for a in algebras_up_to_size(cfg.cap(100)) {
            for x in a.boolean_elements() {
                let s = product_split(&a, &x).expect("Boolean x");
                let (t0, t1) = (s.q0.target().clone(), s.q1.target().clone());
                let mut ok = t0.size() * t1.size() == a.size();
                // (q0, q1) is a bijection A → A[(¬x)⁻¹] × A[x⁻¹]
                for c in a.elements() {
                    let (c0, c1) = s.pair(&c);
                    ok &= s.unpair(&c0, &c1).as_ref() == Ok(&c);
                }
                for y0 in t0.elements() {
                    for y1 in t1.elements() {
                        ok &= s.unpair(&y0, &y1).map(|c| s.pair(&c)) == Ok((y0.clone(), y1.clone()));
                    }
                }
                // combine is a section: (q0, q1)(combine(c0, c1)) = (q0 c0, q1 c1)
                let elements: Vec<Element> = a.elements().collect();
                for c0 in &elements {
                    for c1 in &elements {
                        let c = s.combine(c0, c1).expect("elements of A");
                        ok &= s.pair(&c) == (s.q0.apply(c0), s.q1.apply(c1));
                    }
                }
                t.check(ok, || format!("{a:?}, x = {x}"));
            }
        }
    })
}

fn four_point_pairs(cfg: &VerifyConfig, small: &[FinSpace], four: &[FinSpace]) -> Vec<(FinSpace, FinSpace)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.four_point_samples);
    let pool: Vec<&FinSpace> = small.iter().chain(four).collect();
    for i in 0..cfg.four_point_samples {
        let x = four.choose(&mut rng).expect("355 spaces").clone();
        let y = (*pool.choose(&mut rng).expect("non-empty pool")).clone();
        out.push(if i % 2 == 0 { (x, y) } else { (y, x) });
    }
    out
}

pub fn spaces(cfg: &VerifyConfig) -> CriterionReport {
    run(8, name(8), Some(Duration::from_secs(300)), |t| {
        let mut by_size: Vec<Vec<FinSpace>> = (0..=4).map(oracle::topologies_by_families).collect();
        by_size.push(oracle::topologies_by_preorders(5));
        let counts: Vec<usize> = by_size.iter().map(Vec::len).collect();
        t.check(counts == [1, 1, 4, 29, 355, 6942], || format!("topology counts {counts:?}"));

        let small: Vec<FinSpace> = by_size[..4].concat();
        let mut pairs: Vec<(FinSpace, FinSpace)> = Vec::new();
        for x in &small {
            for y in &small {
                pairs.push((x.clone(), y.clone()));
            }
        }
        pairs.extend(four_point_pairs(cfg, &small, &by_size[4]));
        for (x, y) in &pairs {
            let g = gamma_compare(x, y).expect("at most 16 points");
            t.check(g.homeomorphism, || format!("γ not a homeomorphism for {x:?} × {y:?}"));
        }

        for x in by_size.iter().flatten() {
            let comp = components(x);
            let quasi = quasi_components(x);
            let mut reference = oracle::components_by_connectivity(x);
            reference.sort_by_key(|m| m.trailing_zeros());
            let e = e_map(x);
            // E x = E x′ ⇔ x, x′ in the same quasi-component
            let same_e_iff_same_quasi = (0..x.points()).all(|p| {
                (0..x.points()).all(|q| (e.vectors[p] == e.vectors[q]) == (quasi.class_of[p] == quasi.class_of[q]))
            });
            t.check(
                comp == quasi && comp.classes == reference && same_e_iff_same_quasi && e.homeomorphism,
                || format!("{x:?}: components {:?}, oracle {reference:?}", comp.classes),
            );
        }
    })
}

pub fn order_ranks(cfg: &VerifyConfig) -> CriterionReport {
    run(9, name(9), None, |t| {
        let unit_interval = RationalProduct::new(vec![RationalAlgebra::full()]);
        for q in 1..=24u64 {
            for p in (0..=q).filter(|&p| gcd(p, q) == 1) {
                let x = Fraction::new(p, q).expect("p ≤ q");
                let r = order_rank_rational(&unit_interval, &Element::new(vec![x])).expect("in [0,1] ∩ Q");
                let closed = oracle::closure_in_unit_interval(&[x], 1000).expect("finite closure");
                let expected: BTreeSet<Fraction> =
                    (0..=q).map(|k| Fraction::new(k, q).expect("k ≤ q")).collect();
                let generated: BTreeSet<Fraction> =
                    r.generated.elements().iter().map(|e| e.coords()[0]).collect();
                t.check(
                    r.rank == 1 && r.structure == FiniteMV::chain(q) && closed == expected && generated == closed,
                    || format!("{x}: rank {}, Sa ≅ {}, closure size {}", r.rank, r.structure, closed.len()),
                );
            }
        }

        let algebras = algebras_up_to_size(cfg.cap(24));
        for a in &algebras {
            for b in &algebras {
                for h in enumerate_homs(a, b) {
                    for x in a.elements() {
                        let y = h.apply(&x);
                        let rx = order_rank(a, &x).expect("x in A");
                        let ry = order_rank(b, &y).expect("h x in B");
                        let image: BTreeSet<Element> = rx.generated.elements().iter().map(|e| h.apply(e)).collect();
                        let direct: BTreeSet<Element> = generated_subalgebra(b, std::slice::from_ref(&y))
                            .expect("h x in B")
                            .elements()
                            .iter()
                            .cloned()
                            .collect();
                        t.check(ry.rank <= rx.rank && image == direct, || {
                            format!("{h:?} at {x}: rank {} → {}", rx.rank, ry.rank)
                        });
                    }
                }
            }
        }
    })
}

pub fn simplicial() -> CriterionReport {
    run(10, name(10), None, |t| {
        let algebras = algebras_bounded(4, 6);
        for a in &algebras {
            t.check(gamma(&xi(a)) == *a, || format!("Γ Ξ {a:?} ≠ {a:?}"));
        }
        // every unit vector, not only sorted ones
        let mut units: Vec<Vec<u64>> = vec![Vec::new()];
        for _ in 0..4 {
            let longer: Vec<Vec<u64>> = units
                .iter()
                .filter(|u| u.len() == units.last().map_or(0, Vec::len))
                .flat_map(|u| {
                    (1..=6).map(move |m| {
                        let mut v = u.clone();
                        v.push(m);
                        v
                    })
                })
                .collect();
            units.extend(longer);
        }
        for u in &units {
            let g = SimplicialGroup::new(u.clone()).expect("positive unit");
            t.check(xi(&gamma(&g)) == g, || format!("Ξ Γ {u:?} ≠ {u:?}"));
        }
        let small = algebras_bounded(2, 6);
        for a in &small {
            for b in &small {
                let (g, h) = (xi(a), xi(b));
                let lhs = gamma(&product_unital(&g, &h));
                let rhs = a.product(b).0;
                t.check(lhs == rhs, || format!("Γ({g:?} × {h:?}) = {lhs:?}, Γ g × Γ h = {rhs:?}"));
            }
        }
    })
}
