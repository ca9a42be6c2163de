//! Finite Boolean algebras, Stone-dual to finite discrete spaces.

use std::collections::BTreeSet;

use super::space::FinSpace;
use crate::algebra::FiniteMV;
use crate::coproduct::coproduct_finite;
use crate::pierce::boolean_skeleton;

/// The powerset algebra on `atom_count` atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBoolean {
    pub atom_count: usize,
}

impl FiniteBoolean {
    pub fn size(&self) -> u128 {
        1u128 << self.atom_count
    }

    /// As an MV-algebra: `Ł_1^k`.
    pub fn as_algebra(&self) -> FiniteMV {
        FiniteMV::new(vec![1; self.atom_count]).expect("positive orders")
    }

    /// The dual space of ultrafilters: discrete on the atoms.
    pub fn dual_space(&self) -> FinSpace {
        FinSpace::discrete(self.atom_count)
    }
}

/// Clopens of `X`; its atoms are the minimal non-empty clopens.
pub fn clopen_algebra(x: &FinSpace) -> FiniteBoolean {
    let clopens: Vec<u64> = x.clopens().into_iter().filter(|&s| s != 0).collect();
    let atoms = clopens
        .iter()
        .filter(|&&s| !clopens.iter().any(|&t| t != s && t & !s == 0))
        .count();
    FiniteBoolean { atom_count: atoms }
}

/// Coproduct of Boolean algebras: dual to the product of atom sets.
pub fn ba_coproduct(a: FiniteBoolean, b: FiniteBoolean) -> FiniteBoolean {
    FiniteBoolean {
        atom_count: a.atom_count * b.atom_count,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PierceCoproductCheck {
    /// Atoms of `P(A + B)`.
    pub skeleton_atoms: usize,
    /// Atoms of `P A + P B`.
    pub boolean_coproduct_atoms: usize,
    /// The canonical map `P A + P B → P(A + B)` is a Boolean isomorphism.
    pub canonical_iso: bool,
    pub passed: bool,
}

/// Compares `P(A + B)` with `P A + P B` through the map induced by `P in0` and `P in1`.
///
/// On atoms the canonical map sends `(e_i, e_j)` to `in0(e_i) ∧ in1(e_j)`; it is an
/// isomorphism iff these are pairwise distinct atoms of `P(A + B)` exhausting them.
pub fn pierce_coproduct_check(a: &FiniteMV, b: &FiniteMV) -> PierceCoproductCheck {
    let c = coproduct_finite(a, b);
    let sum_skeleton = boolean_skeleton(&c.algebra);
    let pa = boolean_skeleton(a);
    let pb = boolean_skeleton(b);
    let boolean_sum = ba_coproduct(
        FiniteBoolean {
            atom_count: pa.atom_count(),
        },
        FiniteBoolean {
            atom_count: pb.atom_count(),
        },
    );

    let preserves_booleans = pa.elements().all(|e| sum_skeleton.contains(&c.in0.apply(&e)))
        && pb.elements().all(|e| sum_skeleton.contains(&c.in1.apply(&e)));

    let mut images = BTreeSet::new();
    let mut all_atoms = true;
    for ea in pa.atoms() {
        for eb in pb.atoms() {
            let img = c.in0.apply(&ea).meet(&c.in1.apply(&eb));
            let ones = img.coords().iter().filter(|x| x.is_one()).count();
            all_atoms &= sum_skeleton.contains(&img) && ones == 1;
            images.insert(img);
        }
    }
    let canonical_iso = preserves_booleans
        && all_atoms
        && images.len() == boolean_sum.atom_count
        && images.len() == sum_skeleton.atom_count();
    PierceCoproductCheck {
        skeleton_atoms: sum_skeleton.atom_count(),
        boolean_coproduct_atoms: boolean_sum.atom_count,
        canonical_iso,
        passed: canonical_iso && sum_skeleton.atom_count() == boolean_sum.atom_count,
    }
}
