use std::collections::{HashMap, VecDeque};

use crate::algebra::{Element, FiniteMV, RationalProduct};
use crate::error::{Error, Result};

/// How an element of a generated subalgebra was first reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derivation {
    Zero,
    Generator(usize),
    Neg(usize),
    Oplus(usize, usize),
}

/// A subalgebra given by its carrier, with a closure certificate.
///
/// `derivations[i]` explains `elements[i]` in terms of earlier-discovered elements;
/// indices refer to positions in `elements`.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    ambient: FiniteMV,
    elements: Vec<Element>,
    derivations: Vec<Derivation>,
    index: HashMap<Element, usize>,
}

impl Subalgebra {
    pub fn ambient(&self) -> &FiniteMV {
        &self.ambient
    }

    /// Elements in ascending (lexicographic) order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn derivations(&self) -> &[Derivation] {
        &self.derivations
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.index.contains_key(a)
    }

    /// Checks the certificate: each derivation reproduces its element, and the carrier
    /// contains 0 and is closed under ⊕ and ¬.
    pub fn verify(&self) -> bool {
        let ok_derivations = self.elements.iter().zip(&self.derivations).all(|(e, d)| match *d {
            Derivation::Zero => e.is_zero(),
            Derivation::Generator(_) => true,
            Derivation::Neg(i) => self.elements[i].neg() == *e,
            Derivation::Oplus(i, j) => self.elements[i].oplus(&self.elements[j]) == *e,
        });
        ok_derivations
            && self.contains(&self.ambient.zero())
            && self.elements.iter().all(|a| {
                self.contains(&a.neg()) && self.elements.iter().all(|b| self.contains(&a.oplus(b)))
            })
    }

    /// Minimal non-zero Boolean elements; one per directly indecomposable factor.
    pub fn boolean_atoms(&self) -> Vec<Element> {
        let booleans: Vec<&Element> = self
            .elements
            .iter()
            .filter(|e| e.is_zero_one() && !e.is_zero())
            .collect();
        booleans
            .iter()
            .filter(|b| !booleans.iter().any(|c| c != *b && c.leq(b)))
            .map(|b| (*b).clone())
            .collect()
    }

    /// The isomorphism type as a product of chains, in canonical form.
    ///
    /// Each atom `b` cuts out the factor `{s ∧ b}`, a finite chain.
    pub fn structure(&self) -> FiniteMV {
        let mut orders: Vec<u64> = self
            .boolean_atoms()
            .iter()
            .map(|b| {
                let mut slice: Vec<Element> = self.elements.iter().map(|s| s.meet(b)).collect();
                slice.sort();
                slice.dedup();
                slice.len() as u64 - 1
            })
            .collect();
        orders.sort_unstable();
        FiniteMV::new(orders).expect("factors have at least two elements")
    }
}

/// Least subalgebra of `a` containing `gens`, by worklist closure under ⊕ and ¬.
pub fn generated_subalgebra(a: &FiniteMV, gens: &[Element]) -> Result<Subalgebra> {
    for g in gens {
        a.check(g)?;
    }
    let mut found: Vec<Element> = Vec::new();
    let mut how: Vec<Derivation> = Vec::new();
    let mut index: HashMap<Element, usize> = HashMap::new();
    let mut queue = VecDeque::new();

    let mut push = |e: Element, d: Derivation, found: &mut Vec<Element>, queue: &mut VecDeque<usize>| {
        if !index.contains_key(&e) {
            index.insert(e.clone(), found.len());
            queue.push_back(found.len());
            found.push(e);
            how.push(d);
        }
    };

    push(a.zero(), Derivation::Zero, &mut found, &mut queue);
    let mut sorted: Vec<(usize, &Element)> = gens.iter().enumerate().collect();
    sorted.sort_by(|x, y| x.1.cmp(y.1));
    for (i, g) in sorted {
        push(g.clone(), Derivation::Generator(i), &mut found, &mut queue);
    }
    let mut processed: Vec<usize> = Vec::new();
    while let Some(i) = queue.pop_front() {
        processed.push(i);
        let e = found[i].clone();
        push(e.neg(), Derivation::Neg(i), &mut found, &mut queue);
        for &j in &processed {
            let s = e.oplus(&found[j]);
            push(s, Derivation::Oplus(i, j), &mut found, &mut queue);
        }
    }

    // sort the carrier, remapping certificate indices
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&x, &y| found[x].cmp(&found[y]));
    let mut new_pos = vec![0; found.len()];
    for (pos, &old) in order.iter().enumerate() {
        new_pos[old] = pos;
    }
    let remap = |d: Derivation| match d {
        Derivation::Neg(i) => Derivation::Neg(new_pos[i]),
        Derivation::Oplus(i, j) => Derivation::Oplus(new_pos[i], new_pos[j]),
        d => d,
    };
    let elements: Vec<Element> = order.iter().map(|&o| found[o].clone()).collect();
    let derivations: Vec<Derivation> = order.iter().map(|&o| remap(how[o])).collect();
    let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    Ok(Subalgebra {
        ambient: a.clone(),
        elements,
        derivations,
        index,
    })
}

#[derive(Clone, Debug)]
pub struct OrderRank {
    /// Number of non-terminal directly indecomposable factors of the generated subalgebra.
    pub rank: usize,
    /// Isomorphism type of the generated subalgebra.
    pub structure: FiniteMV,
    pub generated: Subalgebra,
}

fn rank_of(generated: Subalgebra) -> OrderRank {
    let structure = generated.structure();
    OrderRank {
        rank: structure.components(),
        structure,
        generated,
    }
}

/// Order-rank of an element of a finite algebra.
pub fn order_rank(a: &FiniteMV, x: &Element) -> Result<OrderRank> {
    Ok(rank_of(generated_subalgebra(a, std::slice::from_ref(x))?))
}

/// Order-rank of an element of a product of rational algebras, computed inside the finite
/// envelope `∏ Ł_{den(x_i)}`, which every subalgebra containing `x` contains.
pub fn order_rank_rational(a: &RationalProduct, x: &Element) -> Result<OrderRank> {
    let envelope = a
        .finite_envelope(x)
        .map_err(|_| Error::ElementMismatch(format!("{x} not in {a:?}")))?;
    order_rank(&envelope, x)
}
