//! Parsing and evaluating terms, generated subalgebras and order-rank.

use separable_mv::algebra::{RationalAlgebra, RationalProduct};
use separable_mv::format::parse_env;
use separable_mv::terms::{generated_subalgebra, order_rank, order_rank_rational, parse_term};
use separable_mv::{Element, FiniteMV, Fraction};

pub fn main() {
    let a = FiniteMV::new(vec![4, 6]).unwrap();
    let t = parse_term("!(x + y) v x * 1/2").unwrap();
    println!("term: {t}");
    let env = parse_env(r#"{"x":["1/4","1/3"],"y":"0"}"#, a.components()).unwrap();
    println!("value in {a}: {}", t.eval(&env, &a).unwrap());

    let x = env["x"].clone();
    let sa = generated_subalgebra(&a, std::slice::from_ref(&x)).unwrap();
    println!("Sa({x}) has {} elements, structure {}", sa.len(), sa.structure());
    let r = order_rank(&a, &x).unwrap();
    println!("order-rank of {x}: {}", r.rank);

    // in [0,1] ∩ Q the element p/q generates Ł_q
    let unit = RationalProduct::new(vec![RationalAlgebra::full(), RationalAlgebra::dyadic()]);
    let y = Element::new(vec![Fraction::new(3, 7).unwrap(), Fraction::new(1, 2).unwrap()]);
    let r = order_rank_rational(&unit, &y).unwrap();
    println!("in {:?}: order-rank of {y} is {}, Sa ≅ {}", unit.factors(), r.rank, r.structure);
}
