//! Coproducts, subterminality and separability.
//!
//! The coproduct of `∏_i Ł_{m_i}` and `∏_j Ł_{n_j}` is `∏_{(i,j)} Ł_{lcm(m_i, n_j)}`, with
//! components in lexicographic order of `(i, j)`. The formula is checked against the
//! universal property by the acceptance suite rather than taken on trust.

use crate::algebra::{
    localize, product_split, Element, FiniteMV, Hom, Ideal, ProductSplit, RationalAlgebra,
    RationalProduct,
};
use crate::error::{Error, Result};
use crate::fraction::lcm;
use crate::pierce::{decompose, holder_embed};

#[derive(Clone, Debug)]
pub struct CoproductResult {
    pub algebra: FiniteMV,
    pub in0: Hom,
    pub in1: Hom,
    /// `∇ : A + A → A`, present when both summands are the same algebra.
    pub codiagonal: Option<Hom>,
}

impl CoproductResult {
    /// Index of component `(i, j)`.
    pub fn component(&self, i: usize, j: usize) -> usize {
        i * self.in1.source().components() + j
    }

    /// The unique `[f, g] : A + B → C` with `[f, g] ∘ in0 = f` and `[f, g] ∘ in1 = g`.
    pub fn copair(&self, f: &Hom, g: &Hom) -> Result<Hom> {
        if f.source() != self.in0.source() || g.source() != self.in1.source() || f.target() != g.target() {
            return Err(Error::InvalidHom("copair: maps do not match the coproduct".into()));
        }
        let map = f
            .component_map()
            .iter()
            .zip(g.component_map())
            .map(|(&i, &j)| self.component(i, j))
            .collect();
        Hom::new(self.algebra.clone(), f.target().clone(), map)
    }
}

pub fn coproduct_finite(a: &FiniteMV, b: &FiniteMV) -> CoproductResult {
    let mut orders = Vec::with_capacity(a.components() * b.components());
    let mut map0 = Vec::with_capacity(orders.capacity());
    let mut map1 = Vec::with_capacity(orders.capacity());
    for (i, &m) in a.orders().iter().enumerate() {
        for (j, &n) in b.orders().iter().enumerate() {
            orders.push(lcm(m, n));
            map0.push(i);
            map1.push(j);
        }
    }
    let sum = FiniteMV::new(orders).expect("lcm of positive orders");
    let in0 = Hom::new(a.clone(), sum.clone(), map0).expect("m_i divides lcm");
    let in1 = Hom::new(b.clone(), sum.clone(), map1).expect("n_j divides lcm");
    let codiagonal = (a == b).then(|| {
        let k = a.components();
        Hom::new(sum.clone(), a.clone(), (0..k).map(|i| i * k + i).collect())
            .expect("diagonal components have order m_i")
    });
    CoproductResult {
        algebra: sum,
        in0,
        in1,
        codiagonal,
    }
}

/// Coproduct of two subalgebras of `[0,1] ∩ Q`: the supernatural join.
pub fn coproduct_rational(a: &RationalAlgebra, b: &RationalAlgebra) -> RationalAlgebra {
    a.join(b)
}

/// Whether `0 → A` is epic, tested as `in0 = in1` on `A + A`; the terminal algebra is excluded.
pub fn is_subterminal_epic(a: &FiniteMV) -> bool {
    if a.is_terminal() {
        return false;
    }
    let c = coproduct_finite(a, a);
    c.in0 == c.in1
}

/// Every subalgebra of `[0,1] ∩ Q` is subterminal: `A + A = A` with both injections the identity.
pub fn is_subterminal_epic_rational(a: &RationalAlgebra) -> bool {
    match a.as_finite() {
        Some(f) => is_subterminal_epic(&f),
        None => coproduct_rational(a, a) == *a,
    }
}

pub fn rational_membership(a: &RationalAlgebra, f: crate::fraction::Fraction) -> bool {
    a.contains(f)
}

/// Largest `A + A` (in components) for which the witness search runs.
pub const WITNESS_SEARCH_LIMIT: usize = 24;

/// Outcome of searching for a Boolean complement of the codiagonal kernel.
#[derive(Clone, Debug)]
pub struct SeparabilityCertificate {
    pub coproduct: CoproductResult,
    pub kernel: Ideal,
    /// `e` with `∇ e = 1` and `ker ∇ = ⟨¬e⟩`.
    pub witness: Option<Element>,
    /// `A + A ≅ (A+A)[(¬e)⁻¹] × (A+A)[e⁻¹]`, the second factor carrying `∇`.
    pub split: Option<ProductSplit>,
    /// Comparison `(A+A)[e⁻¹] → A` induced by `∇`; an isomorphism when a witness exists.
    pub localized_codiagonal: Option<Hom>,
    pub refutation: Option<String>,
}

pub fn separability_witness(a: &FiniteMV) -> Result<SeparabilityCertificate> {
    let coproduct = coproduct_finite(a, a);
    let sum = &coproduct.algebra;
    if sum.components() > WITNESS_SEARCH_LIMIT {
        return Err(Error::Input(format!(
            "A + A has {} components; the witness search is limited to {WITNESS_SEARCH_LIMIT}",
            sum.components()
        )));
    }
    let nabla = coproduct.codiagonal.clone().expect("codiagonal of A + A");
    let kernel = nabla.kernel();
    // Boolean elements are visited in increasing bitmask order, so the first hit is the least
    let witness = sum.boolean_elements().find(|e| {
        nabla.apply(e).is_one()
            && Ideal::principal(sum, &e.neg()).expect("e in A + A") == kernel
    });
    let (split, localized_codiagonal, refutation) = match &witness {
        Some(e) => {
            let split = product_split(sum, e)?;
            let (_, q) = localize(sum, e)?;
            // ∇ kills ¬e, so it factors through q; read the factor off the component maps
            let factor_map: Vec<usize> = nabla
                .component_map()
                .iter()
                .map(|c| {
                    q.component_map()
                        .iter()
                        .position(|k| k == c)
                        .expect("∇ reads only components kept by q")
                })
                .collect();
            let factor = Hom::new(q.target().clone(), a.clone(), factor_map)?;
            debug_assert_eq!(q.then(&factor)?, nabla);
            (Some(split), Some(factor), None)
        }
        None => (
            None,
            None,
            Some("no Boolean element of A + A generates the kernel of the codiagonal".to_string()),
        ),
    };
    Ok(SeparabilityCertificate {
        coproduct,
        kernel,
        witness,
        split,
        localized_codiagonal,
        refutation,
    })
}

/// Inputs accepted by [`is_separable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representable {
    Finite(FiniteMV),
    Rational(RationalProduct),
}

#[derive(Clone, Debug)]
pub struct SeparabilityVerdict {
    pub separable: bool,
    /// Rational factors, one per indecomposable component.
    pub factors: Vec<RationalAlgebra>,
    /// `|P A|`.
    pub boolean_elements: u128,
    /// Agreement with [`separability_witness`], when it was run.
    pub witness_agrees: Option<bool>,
}

/// On the representable class every algebra is separable; the verdict carries the factors.
pub fn is_separable(a: &Representable) -> SeparabilityVerdict {
    match a {
        Representable::Finite(f) => {
            let d = decompose(f);
            let factors: Vec<RationalAlgebra> = d
                .factors
                .iter()
                .map(|c| holder_embed(c).expect("decomposition factors are simple"))
                .collect();
            let witness_agrees = separability_witness(f).ok().map(|cert| {
                cert.localized_codiagonal.as_ref().is_some_and(|h| {
                    h.is_iso() && {
                        let via_witness: Vec<RationalAlgebra> = decompose(h.source())
                            .factors
                            .iter()
                            .map(|c| holder_embed(c).expect("simple"))
                            .collect();
                        via_witness == factors
                    }
                })
            });
            SeparabilityVerdict {
                separable: true,
                boolean_elements: 1u128 << factors.len(),
                factors,
                witness_agrees,
            }
        }
        Representable::Rational(p) => {
            let witness_agrees = p.as_finite().map(|f| is_separable(&Representable::Finite(f)).witness_agrees == Some(true));
            SeparabilityVerdict {
                separable: true,
                factors: p.factors().to_vec(),
                boolean_elements: p.boolean_count(),
                witness_agrees,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_homs;
    use crate::fraction::Fraction;

    fn fm(orders: &[u64]) -> FiniteMV {
        FiniteMV::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn coproduct_examples() {
        let c = coproduct_finite(&FiniteMV::chain(2), &FiniteMV::chain(3));
        assert_eq!(c.algebra, FiniteMV::chain(6));
        let c = coproduct_finite(&FiniteMV::chain(2), &FiniteMV::chain(2));
        assert_eq!(c.algebra, FiniteMV::chain(2));
        assert_eq!(c.in0.component_map(), c.in1.component_map());
        let c = coproduct_finite(&fm(&[2, 3]), &fm(&[2, 3]));
        assert_eq!(c.algebra.orders(), &[2, 6, 6, 3]);
        let nabla = c.codiagonal.as_ref().unwrap();
        assert_eq!(c.in0.then(nabla).unwrap(), Hom::identity(&fm(&[2, 3])));
        assert_eq!(c.in1.then(nabla).unwrap(), Hom::identity(&fm(&[2, 3])));
        // terminal absorbs
        assert!(coproduct_finite(&fm(&[2, 3]), &FiniteMV::terminal()).algebra.is_terminal());
        assert_eq!(coproduct_finite(&FiniteMV::chain(1), &fm(&[4, 5])).algebra, fm(&[4, 5]));
    }

    #[test]
    fn copair_factors_through_injections() {
        let a = fm(&[2, 3]);
        let b = fm(&[2]);
        let c = coproduct_finite(&a, &b);
        let t = fm(&[6, 2, 6]);
        for f in enumerate_homs(&a, &t) {
            for g in enumerate_homs(&b, &t) {
                let h = c.copair(&f, &g).unwrap();
                assert_eq!(c.in0.then(&h).unwrap(), f);
                assert_eq!(c.in1.then(&h).unwrap(), g);
            }
        }
    }

    #[test]
    fn rational_coproducts() {
        let c2 = RationalAlgebra::Chain(2);
        let c3 = RationalAlgebra::Chain(3);
        assert_eq!(coproduct_rational(&c2, &c3), RationalAlgebra::Chain(6));
        for a in [RationalAlgebra::dyadic(), RationalAlgebra::full(), c3.clone()] {
            assert_eq!(coproduct_rational(&a, &a), a);
        }
        // the dyadic join agrees with finite truncations Ł_{2^k} + Ł_3 = Ł_{3·2^k}
        let j = coproduct_rational(&RationalAlgebra::dyadic(), &c3);
        for k in 0..6 {
            let trunc = coproduct_finite(&FiniteMV::chain(1 << k), &FiniteMV::chain(3));
            assert_eq!(trunc.algebra, FiniteMV::chain(3 << k));
            assert!(j.admits_denominator(3 << k));
        }
        assert!(!j.admits_denominator(9));
    }

    #[test]
    fn subterminal_examples() {
        assert!(is_subterminal_epic(&FiniteMV::chain(6)));
        assert!(!is_subterminal_epic(&fm(&[2, 3])));
        assert!(!is_subterminal_epic(&fm(&[2, 2])));
        assert!(!is_subterminal_epic(&FiniteMV::terminal()));
        assert!(is_subterminal_epic_rational(&RationalAlgebra::dyadic()));
        assert!(is_subterminal_epic_rational(&RationalAlgebra::Chain(4)));
    }

    #[test]
    fn witness_examples() {
        let cert = separability_witness(&FiniteMV::chain(2)).unwrap();
        assert_eq!(cert.coproduct.algebra, FiniteMV::chain(2));
        assert_eq!(cert.witness, Some(FiniteMV::chain(2).one()));
        assert!(cert.split.unwrap().q0.target().is_terminal());

        let a = fm(&[2, 3]);
        let cert = separability_witness(&a).unwrap();
        let sum = &cert.coproduct.algebra;
        let e = cert.witness.clone().unwrap();
        assert_eq!(e, sum.indicator([0, 3]));
        // ker ∇ = ⟨¬e⟩, checked element by element
        let nabla = cert.coproduct.codiagonal.as_ref().unwrap();
        let ne = e.neg();
        for c in sum.elements() {
            assert_eq!(nabla.apply(&c).is_zero(), c.leq(&ne));
        }
        assert!(cert.localized_codiagonal.unwrap().is_iso());

        let cert = separability_witness(&FiniteMV::terminal()).unwrap();
        assert_eq!(cert.witness, Some(Element::new(vec![])));
    }

    #[test]
    fn separable_examples() {
        let v = is_separable(&Representable::Finite(fm(&[2, 3])));
        assert!(v.separable);
        assert_eq!(v.factors, vec![RationalAlgebra::Chain(2), RationalAlgebra::Chain(3)]);
        assert_eq!(v.witness_agrees, Some(true));
        let v = is_separable(&Representable::Finite(FiniteMV::chain(6)));
        assert_eq!(v.factors.len(), 1);
        let p = RationalProduct::new(vec![RationalAlgebra::dyadic(), RationalAlgebra::Chain(3)]);
        let v = is_separable(&Representable::Rational(p));
        assert!(v.separable);
        assert_eq!(v.boolean_elements, 4);
        let v = is_separable(&Representable::Finite(FiniteMV::terminal()));
        assert!(v.separable && v.factors.is_empty());
    }

    #[test]
    fn membership_examples() {
        let f = |s: &str| s.parse::<Fraction>().unwrap();
        assert!(rational_membership(&RationalAlgebra::Chain(6), f("1/6")));
        assert!(!rational_membership(&RationalAlgebra::Chain(6), f("1/4")));
        assert!(rational_membership(&RationalAlgebra::dyadic(), f("3/8")));
    }
}
