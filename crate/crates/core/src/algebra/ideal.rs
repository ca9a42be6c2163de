use std::collections::{BTreeSet, HashSet};

use super::{Element, FiniteMV, Hom};
use crate::error::{Error, Result};

/// An ideal of a finite product of chains.
///
/// Every such ideal is "zero on a fixed set of components"; we store that vanishing set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    ambient: FiniteMV,
    vanishing: BTreeSet<usize>,
}

impl Ideal {
    pub fn vanishing_on(ambient: &FiniteMV, comps: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vanishing: BTreeSet<usize> = comps.into_iter().collect();
        if let Some(&i) = vanishing.iter().find(|&&i| i >= ambient.components()) {
            return Err(Error::NotAnIdeal(format!(
                "component {i} out of range for {ambient}"
            )));
        }
        Ok(Ideal {
            ambient: ambient.clone(),
            vanishing,
        })
    }

    /// `{0}`.
    pub fn zero(ambient: &FiniteMV) -> Self {
        Ideal {
            ambient: ambient.clone(),
            vanishing: (0..ambient.components()).collect(),
        }
    }

    pub fn whole(ambient: &FiniteMV) -> Self {
        Ideal {
            ambient: ambient.clone(),
            vanishing: BTreeSet::new(),
        }
    }

    /// `⟨a⟩ = {c : c ≤ n·a for some n}`, zero exactly where `a` is.
    pub fn principal(ambient: &FiniteMV, a: &Element) -> Result<Self> {
        ambient.check(a)?;
        Ok(Ideal {
            ambient: ambient.clone(),
            vanishing: a
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, x)| x.is_zero())
                .map(|(i, _)| i)
                .collect(),
        })
    }

    /// Recognizes an explicit subset of the carrier as an ideal.
    pub fn from_elements(ambient: &FiniteMV, members: &[Element]) -> Result<Self> {
        for a in members {
            ambient.check(a)?;
        }
        let set: HashSet<&Element> = members.iter().collect();
        if !set.contains(&ambient.zero()) {
            return Err(Error::NotAnIdeal("does not contain 0".into()));
        }
        for a in members {
            for b in members {
                if !set.contains(&a.oplus(b)) {
                    return Err(Error::NotAnIdeal(format!("not closed under ⊕ at {a}, {b}")));
                }
            }
        }
        let candidate = Ideal {
            ambient: ambient.clone(),
            vanishing: (0..ambient.components())
                .filter(|&i| members.iter().all(|a| a.coords()[i].is_zero()))
                .collect(),
        };
        for x in ambient.elements() {
            if candidate.contains(&x) && !set.contains(&x) {
                return Err(Error::NotAnIdeal(format!("not downward closed below {x}")));
            }
        }
        Ok(candidate)
    }

    pub fn ambient(&self) -> &FiniteMV {
        &self.ambient
    }

    pub fn vanishing(&self) -> &BTreeSet<usize> {
        &self.vanishing
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.ambient.contains(a) && self.vanishing.iter().all(|&i| a.coords()[i].is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.vanishing.len() == self.ambient.components()
    }

    pub fn is_proper(&self) -> bool {
        !self.vanishing.is_empty()
    }

    /// Prime and maximal coincide on this class: both vanish on exactly one component.
    pub fn is_maximal(&self) -> bool {
        self.vanishing.len() == 1
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if self.ambient != other.ambient {
            return Err(Error::NotAnIdeal("ideals of different algebras".into()));
        }
        Ok(Ideal {
            ambient: self.ambient.clone(),
            vanishing: self.vanishing.union(&other.vanishing).copied().collect(),
        })
    }

    pub fn members(&self) -> impl Iterator<Item = Element> + '_ {
        self.ambient.elements().filter(|a| self.contains(a))
    }
}

/// `A → A/I`; the quotient keeps exactly the components on which `I` vanishes.
pub fn quotient_by_ideal(a: &FiniteMV, ideal: &Ideal) -> Result<(FiniteMV, Hom)> {
    if ideal.ambient() != a {
        return Err(Error::NotAnIdeal(format!(
            "ideal of {} used with {a}",
            ideal.ambient()
        )));
    }
    let kept: Vec<usize> = ideal.vanishing.iter().copied().collect();
    let q = FiniteMV::new(kept.iter().map(|&i| a.orders()[i]).collect())?;
    let hom = Hom::new(a.clone(), q.clone(), kept)?;
    Ok((q, hom))
}

/// `A → A[x⁻¹]`, realized as `A → A/⟨¬x⟩` for Boolean `x`.
pub fn localize(a: &FiniteMV, x: &Element) -> Result<(FiniteMV, Hom)> {
    if !a.is_boolean(x)? {
        return Err(Error::NotBoolean(x.to_string()));
    }
    quotient_by_ideal(a, &Ideal::principal(a, &x.neg())?)
}

/// The product decomposition `A ≅ A[(¬x)⁻¹] × A[x⁻¹]` induced by a Boolean `x`.
#[derive(Clone, Debug)]
pub struct ProductSplit {
    pub x: Element,
    /// Inverts `¬x`.
    pub q0: Hom,
    /// Inverts `x`.
    pub q1: Hom,
}

impl ProductSplit {
    /// `(c0 ∧ ¬x) ∨ (c1 ∧ x)`: agrees with `c0` under `q0` and with `c1` under `q1`.
    pub fn combine(&self, c0: &Element, c1: &Element) -> Result<Element> {
        let a = self.q0.source();
        a.check(c0)?;
        a.check(c1)?;
        Ok(c0.meet(&self.x.neg()).join(&c1.meet(&self.x)))
    }

    pub fn pair(&self, c: &Element) -> (Element, Element) {
        (self.q0.apply(c), self.q1.apply(c))
    }

    /// Inverse of [`ProductSplit::pair`]: rebuilds `c` from its two quotient images.
    pub fn unpair(&self, y0: &Element, y1: &Element) -> Result<Element> {
        self.q0.target().check(y0)?;
        self.q1.target().check(y1)?;
        let a = self.q0.source();
        let mut coords = a.zero().coords().to_vec();
        for (j, &i) in self.q0.component_map().iter().enumerate() {
            coords[i] = y0.coords()[j];
        }
        for (j, &i) in self.q1.component_map().iter().enumerate() {
            coords[i] = y1.coords()[j];
        }
        Ok(Element::new(coords))
    }
}

pub fn product_split(a: &FiniteMV, x: &Element) -> Result<ProductSplit> {
    let (_, q0) = localize(a, &x.neg()).map_err(|e| match e {
        Error::NotBoolean(_) => Error::NotBoolean(x.to_string()),
        e => e,
    })?;
    let (_, q1) = localize(a, x)?;
    Ok(ProductSplit {
        x: x.clone(),
        q0,
        q1,
    })
}
