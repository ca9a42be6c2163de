use std::fmt;

use super::{Element, FiniteMV, Ideal};
use crate::error::{Error, Result};

/// A homomorphism between finite algebras, stored dually.
///
/// `component_map[j]` names the source component read by target component `j`;
/// the source order must divide the target order so that `Ł_m ↪ Ł_n` exists.
/// Distinct maps give distinct carrier functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hom {
    source: FiniteMV,
    target: FiniteMV,
    component_map: Vec<usize>,
}

impl Hom {
    pub fn new(source: FiniteMV, target: FiniteMV, component_map: Vec<usize>) -> Result<Self> {
        if component_map.len() != target.components() {
            return Err(Error::InvalidHom(format!(
                "component map has {} entries, target has {} components",
                component_map.len(),
                target.components()
            )));
        }
        for (j, &i) in component_map.iter().enumerate() {
            let Some(&m) = source.orders().get(i) else {
                return Err(Error::InvalidHom(format!(
                    "target component {j} reads missing source component {i}"
                )));
            };
            let n = target.orders()[j];
            if !n.is_multiple_of(m) {
                return Err(Error::InvalidHom(format!(
                    "source order {m} does not divide target order {n} (component {j})"
                )));
            }
        }
        Ok(Hom {
            source,
            target,
            component_map,
        })
    }

    pub fn identity(a: &FiniteMV) -> Hom {
        Hom {
            source: a.clone(),
            target: a.clone(),
            component_map: (0..a.components()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteMV {
        &self.source
    }

    pub fn target(&self) -> &FiniteMV {
        &self.target
    }

    pub fn component_map(&self) -> &[usize] {
        &self.component_map
    }

    /// Image of an element of the source; the caller guarantees membership.
    pub fn apply(&self, a: &Element) -> Element {
        Element::new(self.component_map.iter().map(|&i| a.coords()[i]).collect())
    }

    pub fn try_apply(&self, a: &Element) -> Result<Element> {
        self.source.check(a)?;
        Ok(self.apply(a))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Hom) -> Result<Hom> {
        if self.target != next.source {
            return Err(Error::InvalidHom(format!(
                "cannot compose: {} vs {}",
                self.target, next.source
            )));
        }
        Ok(Hom {
            source: self.source.clone(),
            target: next.target.clone(),
            component_map: next.component_map.iter().map(|&j| self.component_map[j]).collect(),
        })
    }

    /// `{a : h(a) = 0}`, which vanishes exactly on the components read by the map.
    pub fn kernel(&self) -> Ideal {
        Ideal::vanishing_on(&self.source, self.component_map.iter().copied())
            .expect("component map indexes the source")
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.source.components()];
        for &i in &self.component_map {
            hit[i] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.source.components()];
        for (j, &i) in self.component_map.iter().enumerate() {
            if seen[i] || self.source.orders()[i] != self.target.orders()[j] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The carrier function as indices into `source.elements()` / `target.elements()`.
    pub fn carrier_table(&self) -> Vec<usize> {
        self.source
            .elements()
            .map(|a| self.target.index_of(&self.apply(&a)).expect("image lies in target"))
            .collect()
    }
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hom({:?} -> {:?}, {:?})",
            self.source, self.target, self.component_map
        )
    }
}

/// Every homomorphism `a → b`, in lexicographic order of component maps.
pub fn enumerate_homs(a: &FiniteMV, b: &FiniteMV) -> Vec<Hom> {
    let choices: Vec<Vec<usize>> = b
        .orders()
        .iter()
        .map(|&n| {
            a.orders()
                .iter()
                .enumerate()
                .filter(|&(_, &m)| n % m == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        out.push(Hom {
            source: a.clone(),
            target: b.clone(),
            component_map: pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect(),
        });
        let mut j = choices.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            pick[j] += 1;
            if pick[j] < choices[j].len() {
                break;
            }
            pick[j] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_set_examples() {
        let l2 = FiniteMV::chain(2);
        assert!(enumerate_homs(&l2, &FiniteMV::chain(3)).is_empty());
        assert_eq!(enumerate_homs(&l2, &FiniteMV::chain(6)).len(), 1);
        for a in super::super::algebras_up_to_size(20) {
            assert_eq!(enumerate_homs(&a, &FiniteMV::terminal()).len(), 1);
        }
        // the terminal algebra maps nowhere but to itself
        assert!(enumerate_homs(&FiniteMV::terminal(), &FiniteMV::chain(1)).is_empty());
    }

    #[test]
    fn rejects_bad_maps() {
        let a = FiniteMV::new(vec![2, 3]).unwrap();
        assert!(Hom::new(a.clone(), FiniteMV::chain(4), vec![1]).is_err());
        assert!(Hom::new(a.clone(), FiniteMV::chain(4), vec![2]).is_err());
        assert!(Hom::new(a.clone(), FiniteMV::chain(4), vec![]).is_err());
        assert!(Hom::new(a, FiniteMV::chain(4), vec![0]).is_ok());
    }

    #[test]
    fn composition_matches_functions() {
        let a = FiniteMV::new(vec![1, 2]).unwrap();
        let b = FiniteMV::new(vec![2, 4]).unwrap();
        let c = FiniteMV::new(vec![4, 4, 2]).unwrap();
        for f in enumerate_homs(&a, &b) {
            for g in enumerate_homs(&b, &c) {
                let gf = f.then(&g).unwrap();
                for x in a.elements() {
                    assert_eq!(gf.apply(&x), g.apply(&f.apply(&x)));
                }
            }
        }
    }

    #[test]
    fn kernel_and_iso() {
        let a = FiniteMV::new(vec![2, 3]).unwrap();
        let swap = Hom::new(a.clone(), FiniteMV::new(vec![3, 2]).unwrap(), vec![1, 0]).unwrap();
        assert!(swap.is_iso());
        assert!(swap.kernel().is_zero());
        let proj = Hom::new(a.clone(), FiniteMV::chain(2), vec![0]).unwrap();
        assert!(proj.is_surjective() && !proj.is_injective());
        let k = proj.kernel();
        for x in a.elements() {
            assert_eq!(k.contains(&x), proj.apply(&x).is_zero());
        }
    }
}
