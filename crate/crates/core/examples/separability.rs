//! Coproducts, the separability witness and subterminal algebras.

use separable_mv::algebra::RationalAlgebra;
use separable_mv::coproduct::{
    coproduct_finite, coproduct_rational, is_separable, is_subterminal_epic, separability_witness, Representable,
};
use separable_mv::FiniteMV;

pub fn main() {
    let a = FiniteMV::new(vec![2, 3]).unwrap();
    let c = coproduct_finite(&a, &a);
    println!("A + A = {}", c.algebra);
    println!("in0 = {:?}, in1 = {:?}", c.in0.component_map(), c.in1.component_map());

    let cert = separability_witness(&a).unwrap();
    let e = cert.witness.as_ref().unwrap();
    println!("ker ∇ vanishes on {:?}; witness e = {e}", cert.kernel.vanishing());
    let back = cert.localized_codiagonal.as_ref().unwrap();
    println!("(A+A)[e⁻¹] = {} → A is an isomorphism: {}", back.source(), back.is_iso());

    let v = is_separable(&Representable::Finite(a.clone()));
    println!("separable: {}, factors {:?}", v.separable, v.factors);

    for b in [FiniteMV::chain(6), a.clone(), FiniteMV::new(vec![1, 1]).unwrap()] {
        println!("{b} subterminal: {}", is_subterminal_epic(&b));
    }

    let sum = coproduct_rational(&RationalAlgebra::dyadic(), &RationalAlgebra::chain(3).unwrap());
    println!("Ł{{2^∞}} + Ł3 = {sum}");
}
