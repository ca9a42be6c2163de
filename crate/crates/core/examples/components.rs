//! Finite spaces: components, π0, the clopen-vector map and products.

use separable_mv::topology::{clopen_algebra, components, e_map, gamma_compare, pi0, quasi_components, FinSpace};

pub fn main() {
    // two Sierpiński spaces next to a point
    let x = FinSpace::new(
        5,
        &[vec![], vec![0], vec![2], vec![0, 2], vec![0, 1], vec![0, 1, 2], vec![2, 3], vec![0, 2, 3], vec![0, 1, 2, 3], vec![4], vec![0, 4], vec![2, 4], vec![0, 2, 4], vec![0, 1, 4], vec![0, 1, 2, 4], vec![2, 3, 4], vec![0, 2, 3, 4], vec![0, 1, 2, 3, 4]],
    )
    .unwrap();
    println!("components: {:?}", components(&x).class_lists());
    println!("quasi-components: {:?}", quasi_components(&x).class_lists());

    let p = pi0(&x);
    println!("π0 X has {} points, opens {:?}", p.quotient.points(), p.quotient.open_lists());
    println!("clopen algebra has {} atoms", clopen_algebra(&x).atom_count);

    let e = e_map(&x);
    println!("E takes {} distinct values; π0 X → π0′ X is a homeomorphism: {}", e.image.len(), e.homeomorphism);

    let g = gamma_compare(&x, &FinSpace::sierpinski()).unwrap();
    println!("γ : π0(X × S) → π0 X × π0 S is a homeomorphism: {}", g.homeomorphism);
}
