//! Boolean skeletons, spectra, and direct decompositions of finite algebras.
//!
//! For `A = ∏ Ł_{m_i}` the prime ideals are `𝔭_i = {a : a_i = 0}`, each quotient
//! `A/𝔭_i ≅ Ł_{m_i}` is a simple chain, so `Spec A = Max A` is the discrete space on the
//! component indices. Clopen subsets of the spectrum are therefore arbitrary index sets.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{quotient_by_ideal, Element, FiniteMV, Hom, Ideal, RationalAlgebra};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::topology::FinSpace;

/// `P A`: the Boolean elements of `A`, a powerset algebra on one atom per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanSkeleton {
    ambient: FiniteMV,
}

impl BooleanSkeleton {
    pub fn ambient(&self) -> &FiniteMV {
        &self.ambient
    }

    pub fn atom_count(&self) -> usize {
        self.ambient.components()
    }

    pub fn size(&self) -> u128 {
        1u128 << self.atom_count()
    }

    pub fn atoms(&self) -> Vec<Element> {
        (0..self.atom_count()).map(|i| self.ambient.atom(i)).collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.ambient.boolean_elements()
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.ambient.contains(a) && a.is_zero_one()
    }

    /// The skeleton as an MV-algebra in its own right: `Ł_1^k`.
    pub fn as_algebra(&self) -> FiniteMV {
        FiniteMV::new(vec![1; self.atom_count()]).expect("positive orders")
    }
}

pub fn boolean_skeleton(a: &FiniteMV) -> BooleanSkeleton {
    BooleanSkeleton { ambient: a.clone() }
}

/// The prime (equivalently maximal) spectrum of a finite algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    ambient: FiniteMV,
}

pub fn spec(a: &FiniteMV) -> Spectrum {
    Spectrum { ambient: a.clone() }
}

impl Spectrum {
    pub fn ambient(&self) -> &FiniteMV {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.ambient.components()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> BTreeSet<usize> {
        (0..self.len()).collect()
    }

    /// `𝔭_i = {a : a_i = 0}`.
    pub fn prime(&self, point: usize) -> Result<Ideal> {
        Ideal::vanishing_on(&self.ambient, [point])
    }

    /// `A → A/𝔭_i`.
    pub fn quotient(&self, point: usize) -> Result<(FiniteMV, Hom)> {
        quotient_by_ideal(&self.ambient, &self.prime(point)?)
    }

    /// `V(S)`: the primes containing every element of `S`.
    pub fn vanishing_locus(&self, s: &[Element]) -> Result<BTreeSet<usize>> {
        for a in s {
            self.ambient.check(a)?;
        }
        Ok((0..self.len())
            .filter(|&i| s.iter().all(|a| a.coords()[i].is_zero()))
            .collect())
    }

    /// `Su(a)`, the complement of `V(a)`.
    pub fn support(&self, a: &Element) -> Result<BTreeSet<usize>> {
        let v = self.vanishing_locus(std::slice::from_ref(a))?;
        Ok(self.points().difference(&v).copied().collect())
    }

    /// The hull-kernel topology, which is discrete on this class.
    pub fn topology(&self) -> FinSpace {
        FinSpace::discrete(self.len())
    }

    fn check_subset(&self, x: &BTreeSet<usize>) -> Result<()> {
        match x.iter().find(|&&i| i >= self.len()) {
            Some(i) => Err(Error::Input(format!("no spectrum point {i} in {}", self.ambient))),
            None => Ok(()),
        }
    }
}

/// `b ↦ V(b)` on Boolean elements.
pub fn phi(a: &FiniteMV, b: &Element) -> Result<BTreeSet<usize>> {
    if !a.is_boolean(b)? {
        return Err(Error::NotBoolean(b.to_string()));
    }
    spec(a).vanishing_locus(std::slice::from_ref(b))
}

/// Inverse of [`phi`]: the Boolean element that is `0` on `x0` and `1` elsewhere.
pub fn chi(a: &FiniteMV, x0: &BTreeSet<usize>) -> Result<Element> {
    spec(a).check_subset(x0)?;
    Ok(a.indicator((0..a.components()).filter(|i| !x0.contains(i))))
}

/// Largest component count for which [`chinese_boolean`] confirms uniqueness by exhaustion.
pub const EXHAUSTIVE_UNIQUENESS_LIMIT: usize = 16;

/// The unique Boolean `b` with `b/𝔭 = 0` on `x0` and `b/𝔭 = 1` on `x1`.
pub fn chinese_boolean(a: &FiniteMV, x0: &BTreeSet<usize>, x1: &BTreeSet<usize>) -> Result<Element> {
    let sp = spec(a);
    sp.check_subset(x0)?;
    sp.check_subset(x1)?;
    if let Some(i) = x0.intersection(x1).next() {
        return Err(Error::NotPartition(format!("point {i} lies in both sets")));
    }
    if x0.len() + x1.len() != sp.len() {
        return Err(Error::NotPartition("the two sets do not cover the spectrum".into()));
    }
    let b = a.indicator(x1.iter().copied());
    if a.components() <= EXHAUSTIVE_UNIQUENESS_LIMIT {
        let matching = a
            .boolean_elements()
            .filter(|c| {
                (0..a.components()).all(|i| {
                    let v = c.coords()[i];
                    if x0.contains(&i) {
                        v.is_zero()
                    } else {
                        v.is_one()
                    }
                })
            })
            .count();
        assert_eq!(matching, 1, "Boolean element separating a partition is unique");
    }
    Ok(b)
}

/// A direct decomposition into indecomposable (chain) factors.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Chain factors in ascending order.
    pub factors: Vec<FiniteMV>,
    /// Isomorphism `A → ∏ factors`.
    pub witness: Hom,
}

/// Splits `A` along the atoms of its Boolean skeleton.
pub fn decompose(a: &FiniteMV) -> Decomposition {
    let sk = boolean_skeleton(a);
    let mut pieces: Vec<(FiniteMV, usize)> = sk
        .atoms()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let (factor, q) = crate::algebra::localize(a, e).expect("atoms are Boolean");
            debug_assert_eq!(q.component_map(), &[i]);
            (factor, q.component_map()[0])
        })
        .collect();
    pieces.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
    let factors: Vec<FiniteMV> = pieces.iter().map(|p| p.0.clone()).collect();
    let witness = Hom::new(
        a.clone(),
        FiniteMV::product_of(&factors),
        pieces.iter().map(|p| p.1).collect(),
    )
    .expect("permutation of components");
    debug_assert!(witness.is_iso());
    Decomposition { factors, witness }
}

/// All `2^k` ideals, one per vanishing set.
pub fn ideals(a: &FiniteMV) -> Vec<Ideal> {
    let k = a.components();
    (0u64..1 << k)
        .map(|mask| {
            Ideal::vanishing_on(a, (0..k).filter(|i| mask >> i & 1 == 1)).expect("in range")
        })
        .collect()
}

/// `Rad A = ⋂ Max A`.
pub fn radical(a: &FiniteMV) -> Ideal {
    let sp = spec(a);
    (0..sp.len()).fold(Ideal::whole(a), |acc, i| {
        acc.intersection(&sp.prime(i).expect("valid point")).expect("same ambient")
    })
}

pub fn is_semisimple(a: &FiniteMV) -> bool {
    radical(a).is_zero()
}

/// Exactly two ideals, i.e. exactly one component.
pub fn is_simple(a: &FiniteMV) -> bool {
    a.components() == 1
}

/// The unique embedding of a simple algebra into `[0,1]`, as its image.
pub fn holder_embed(a: &FiniteMV) -> Result<RationalAlgebra> {
    if !is_simple(a) {
        return Err(Error::NotSimple(a.to_string()));
    }
    RationalAlgebra::chain(a.orders()[0])
}

/// `a ↦ â`, the function sending each prime `𝔭` to the real number of `a/𝔭`.
pub fn gelfand_transform(a: &FiniteMV, x: &Element) -> Result<BTreeMap<usize, Fraction>> {
    a.check(x)?;
    let sp = spec(a);
    (0..sp.len())
        .map(|i| {
            let (q, h) = sp.quotient(i)?;
            holder_embed(&q)?;
            Ok((i, h.apply(x).coords()[0]))
        })
        .collect()
}

/// Boolean iff every prime quotient sends it to `0` or `1`.
pub fn is_boolean_via_primes(a: &FiniteMV, x: &Element) -> Result<bool> {
    a.check(x)?;
    let sp = spec(a);
    for i in 0..sp.len() {
        let (_, h) = sp.quotient(i)?;
        let y = h.apply(x);
        if !(y.is_zero() || y.is_one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebras_up_to_size;

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn a23() -> FiniteMV {
        FiniteMV::new(vec![2, 3]).unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn skeleton_examples() {
        let l6 = FiniteMV::chain(6);
        let p: Vec<_> = boolean_skeleton(&l6).elements().collect();
        assert_eq!(p, vec![l6.zero(), l6.one()]);
        // brute force over the carrier agrees
        let brute: Vec<_> = l6.elements().filter(|x| x.oplus(x) == *x).collect();
        assert_eq!(brute, p);
        assert_eq!(boolean_skeleton(&a23()).elements().count(), 4);
        let t = boolean_skeleton(&FiniteMV::terminal());
        assert_eq!(t.size(), 1);
        assert!(t.as_algebra().is_terminal());
    }

    #[test]
    fn spectrum_examples() {
        let a = a23();
        let sp = spec(&a);
        assert_eq!(sp.len(), 2);
        let b = Element::new(vec![fr("1"), fr("0")]);
        assert_eq!(sp.vanishing_locus(std::slice::from_ref(&b)).unwrap(), set(&[1]));
        assert_eq!(sp.vanishing_locus(&[a.zero()]).unwrap(), set(&[0, 1]));
        assert_eq!(sp.support(&b).unwrap(), set(&[0]));
        assert!(sp.vanishing_locus(&[Element::new(vec![fr("1/3"), fr("0")])]).is_err());
        assert_eq!(sp.topology().opens().len(), 4);
        // quotients by primes are the chains
        assert_eq!(sp.quotient(1).unwrap().0, FiniteMV::chain(3));
    }

    #[test]
    fn phi_chi_examples() {
        let a = a23();
        let b = Element::new(vec![fr("1"), fr("0")]);
        assert_eq!(phi(&a, &b).unwrap(), set(&[1]));
        assert_eq!(chi(&a, &set(&[1])).unwrap(), b);
        assert_eq!(chi(&a, &set(&[])).unwrap(), a.one());
        assert_eq!(chi(&a, &set(&[0, 1])).unwrap(), a.zero());
        assert!(phi(&a, &Element::new(vec![fr("1/2"), fr("0")])).is_err());
        assert!(chi(&a, &set(&[2])).is_err());
    }

    #[test]
    fn chinese_examples() {
        let a = a23();
        assert_eq!(
            chinese_boolean(&a, &set(&[0]), &set(&[1])).unwrap(),
            Element::new(vec![fr("0"), fr("1")])
        );
        assert_eq!(chinese_boolean(&a, &set(&[0, 1]), &set(&[])).unwrap(), a.zero());
        assert_eq!(chinese_boolean(&a, &set(&[]), &set(&[0, 1])).unwrap(), a.one());
        assert!(matches!(
            chinese_boolean(&a, &set(&[0]), &set(&[0, 1])),
            Err(Error::NotPartition(_))
        ));
        assert!(matches!(
            chinese_boolean(&a, &set(&[0]), &set(&[])),
            Err(Error::NotPartition(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&FiniteMV::chain(6));
        assert_eq!(d.factors, vec![FiniteMV::chain(6)]);
        let d = decompose(&a23());
        assert_eq!(d.factors, vec![FiniteMV::chain(2), FiniteMV::chain(3)]);
        assert!(decompose(&FiniteMV::terminal()).factors.is_empty());
        let b = FiniteMV::new(vec![4, 1, 2]).unwrap();
        let d = decompose(&b);
        assert!(d.witness.is_iso());
        assert_eq!(FiniteMV::product_of(&d.factors), b.canonical());
        let images: std::collections::HashSet<_> = b.elements().map(|x| d.witness.apply(&x)).collect();
        assert_eq!(images.len() as u128, b.size());
    }

    #[test]
    fn radical_and_simplicity() {
        assert!(radical(&a23()).is_zero());
        assert!(is_simple(&FiniteMV::chain(6)));
        assert!(!is_simple(&a23()));
        assert!(!is_simple(&FiniteMV::terminal()));
        for a in algebras_up_to_size(60) {
            assert!(is_semisimple(&a));
            assert_eq!(is_simple(&a), ideals(&a).len() == 2);
            let members: Vec<_> = radical(&a).members().collect();
            assert_eq!(members, vec![a.zero()]);
        }
    }

    #[test]
    fn holder_and_gelfand() {
        let h = holder_embed(&FiniteMV::chain(3)).unwrap();
        assert_eq!(
            h.elements().unwrap(),
            vec![fr("0"), fr("1/3"), fr("2/3"), fr("1")]
        );
        assert!(holder_embed(&a23()).is_err());
        let t = gelfand_transform(&a23(), &Element::new(vec![fr("1/2"), fr("1/3")])).unwrap();
        assert_eq!(t, BTreeMap::from([(0, fr("1/2")), (1, fr("1/3"))]));
        let a = a23();
        for b in a.boolean_elements() {
            assert!(gelfand_transform(&a, &b)
                .unwrap()
                .values()
                .all(|v| v.is_zero() || v.is_one()));
        }
    }

    #[test]
    fn boolean_via_primes_examples() {
        let a = a23();
        assert!(is_boolean_via_primes(&a, &Element::new(vec![fr("1"), fr("0")])).unwrap());
        assert!(!is_boolean_via_primes(&a, &Element::new(vec![fr("1/2"), fr("1")])).unwrap());
        let t = FiniteMV::terminal();
        assert!(is_boolean_via_primes(&t, &t.zero()).unwrap());
    }

    #[test]
    fn gelfand_image_has_the_same_booleans() {
        for a in algebras_up_to_size(40) {
            let booleans_in_image = a
                .elements()
                .filter(|x| {
                    gelfand_transform(&a, x)
                        .unwrap()
                        .values()
                        .all(|v| v.is_zero() || v.is_one())
                })
                .count() as u128;
            assert_eq!(booleans_in_image, boolean_skeleton(&a).size());
        }
    }
}
