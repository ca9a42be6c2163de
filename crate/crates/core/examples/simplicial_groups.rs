//! Unital simplicial groups and their unit intervals.

use separable_mv::lgroup::{gamma, product_unital, xi, SimplicialGroup};

pub fn main() {
    let g = SimplicialGroup::new(vec![2, 3]).unwrap();
    let a = gamma(&g);
    println!("Γ(ℤ², (2,3)) = {a}, with {} lattice points", g.unit_interval().len());
    println!("Ξ Γ G = {:?}", xi(&a));

    let x = [1, 2];
    let y = [1, 2];
    let s = g.truncated_sum(&x, &y);
    println!("({x:?} + {y:?}) ∧ u = {s:?}, as an element: {}", g.to_element(&s).unwrap());
    println!("u − {x:?} = {:?}", g.complement(&x));

    let h = SimplicialGroup::new(vec![4]).unwrap();
    println!("Γ(G × H) = {}", gamma(&product_unital(&g, &h)));
}
