//! Finite MV-algebras: elements, homomorphisms, ideals and Boolean splittings.

use separable_mv::algebra::{enumerate_homs, localize, product_split, Ideal};
use separable_mv::{FiniteMV, Fraction};

pub fn main() {
    let a = FiniteMV::new(vec![2, 3]).unwrap();
    println!("A = {a}, |A| = {}", a.size());

    let half_third = a.element(vec![Fraction::new(1, 2).unwrap(), Fraction::new(1, 3).unwrap()]).unwrap();
    println!("x = {half_third}, x ⊕ x = {}, ¬x = {}", half_third.oplus(&half_third), half_third.neg());

    for b in [FiniteMV::chain(6), FiniteMV::new(vec![6, 2]).unwrap()] {
        let homs = enumerate_homs(&a, &b);
        println!("|Hom({a}, {b})| = {}", homs.len());
        for h in &homs {
            println!("  component map {:?}, image of x = {}", h.component_map(), h.apply(&half_third));
        }
    }

    let i = Ideal::principal(&a, &a.atom(0)).unwrap();
    println!("⟨{}⟩ vanishes on components {:?}", a.atom(0), i.vanishing());

    let x = a.atom(1);
    let (local, _) = localize(&a, &x).unwrap();
    println!("A[{x}⁻¹] = {local}");
    let split = product_split(&a, &x).unwrap();
    let (c0, c1) = split.pair(&half_third);
    println!(
        "split along {x}: {} × {}; x ↦ ({c0}, {c1}) ↦ {}",
        split.q0.target(),
        split.q1.target(),
        split.unpair(&c0, &c1).unwrap()
    );
}
