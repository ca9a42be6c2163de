//! Boolean skeletons, prime spectra, vanishing loci and direct decompositions.

use std::collections::BTreeSet;

use separable_mv::pierce::{boolean_skeleton, chi, chinese_boolean, decompose, gelfand_transform, holder_embed, phi, spec};
use separable_mv::{FiniteMV, Fraction};

pub fn main() {
    let a = FiniteMV::new(vec![3, 2, 3]).unwrap();
    let p = boolean_skeleton(&a);
    println!("P({a}) has {} atoms and {} elements", p.atom_count(), p.size());

    let sp = spec(&a);
    println!("Spec A = {:?}", sp.points());
    for b in p.elements().take(4) {
        let v = phi(&a, &b).unwrap();
        println!("  V({b}) = {v:?}, χ back = {}", chi(&a, &v).unwrap());
    }

    let x0: BTreeSet<usize> = [0].into();
    let x1: BTreeSet<usize> = [1, 2].into();
    println!("Boolean element 0 on {x0:?}, 1 on {x1:?}: {}", chinese_boolean(&a, &x0, &x1).unwrap());

    let d = decompose(&a);
    for f in &d.factors {
        println!("factor {f} embeds into [0,1] as {}", holder_embed(f).unwrap());
    }
    let x = a.element(vec![Fraction::new(1, 3).unwrap(), Fraction::ONE, Fraction::ZERO]).unwrap();
    println!("Gelfand transform of {x}: {:?}", gelfand_transform(&a, &x).unwrap());
}
