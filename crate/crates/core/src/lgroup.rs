//! Unital simplicial groups `(ℤ^r, u)` and their unit intervals.
//!
//! `Γ(ℤ^r, u)` is the box `{x : 0 ≤ x ≤ u}` under `x ⊕ y = (x + y) ∧ u` and `¬x = u − x`;
//! reading coordinate `i` as `x_i / u_i` identifies it with `Ł_{u_1} × … × Ł_{u_r}`.

use crate::algebra::{Element, FiniteMV};
use crate::error::{Error, Result};
use crate::fraction::Fraction;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialGroup {
    unit: Vec<u64>,
}

impl SimplicialGroup {
    pub fn new(unit: Vec<u64>) -> Result<Self> {
        if let Some(i) = unit.iter().position(|&u| u == 0) {
            return Err(Error::InvalidAlgebra(format!(
                "unit coordinate {i} is not strictly positive"
            )));
        }
        Ok(SimplicialGroup { unit })
    }

    pub fn rank(&self) -> usize {
        self.unit.len()
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    /// Lattice points of the unit interval, in lexicographic order.
    pub fn unit_interval(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &u in &self.unit {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=u).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// `(x + y) ∧ u`.
    pub fn truncated_sum(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.unit)
            .map(|((a, b), u)| (a + b).min(*u))
            .collect()
    }

    /// `u − x`.
    pub fn complement(&self, x: &[u64]) -> Vec<u64> {
        x.iter().zip(&self.unit).map(|(a, u)| u - a).collect()
    }

    /// The element of `Γ(G, u)` represented by a lattice point of the unit interval.
    pub fn to_element(&self, x: &[u64]) -> Result<Element> {
        if x.len() != self.rank() || x.iter().zip(&self.unit).any(|(a, u)| a > u) {
            return Err(Error::ElementMismatch(format!("{x:?} is not in the unit interval")));
        }
        Ok(Element::new(
            x.iter()
                .zip(&self.unit)
                .map(|(&a, &u)| Fraction::new(a, u).expect("0 <= a <= u"))
                .collect(),
        ))
    }
}

/// `Γ`: the unit interval as a finite product of chains.
pub fn gamma(g: &SimplicialGroup) -> FiniteMV {
    FiniteMV::new(g.unit.clone()).expect("units are positive")
}

/// `Ξ` restricted to finite algebras: rank = number of components, unit = chain orders.
pub fn xi(a: &FiniteMV) -> SimplicialGroup {
    SimplicialGroup {
        unit: a.orders().to_vec(),
    }
}

/// Cartesian product of unital simplicial groups.
pub fn product_unital(g: &SimplicialGroup, h: &SimplicialGroup) -> SimplicialGroup {
    let mut unit = g.unit.clone();
    unit.extend_from_slice(&h.unit);
    SimplicialGroup { unit }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_examples() {
        let g = SimplicialGroup::new(vec![2, 3]).unwrap();
        assert_eq!(gamma(&g), FiniteMV::new(vec![2, 3]).unwrap());
        assert_eq!(gamma(&SimplicialGroup::new(vec![1]).unwrap()), FiniteMV::chain(1));
        assert!(gamma(&SimplicialGroup::new(vec![]).unwrap()).is_terminal());
        assert!(SimplicialGroup::new(vec![2, 0]).is_err());
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&FiniteMV::new(vec![2, 3]).unwrap()).unit(), &[2, 3]);
        assert_eq!(xi(&FiniteMV::chain(6)).rank(), 1);
        assert_eq!(xi(&FiniteMV::terminal()).rank(), 0);
    }

    #[test]
    fn products() {
        let g = SimplicialGroup::new(vec![2]).unwrap();
        let h = SimplicialGroup::new(vec![3]).unwrap();
        assert_eq!(product_unital(&g, &h).unit(), &[2, 3]);
        let zero = SimplicialGroup::new(vec![]).unwrap();
        assert_eq!(product_unital(&g, &zero), g);
        assert_eq!(gamma(&product_unital(&g, &h)), gamma(&g).product(&gamma(&h)).0);
    }

    /// The group operations on the unit interval match the MV operations on `Γ`.
    #[test]
    fn unit_interval_operations() {
        let g = SimplicialGroup::new(vec![2, 3]).unwrap();
        let a = gamma(&g);
        let box_points = g.unit_interval();
        assert_eq!(box_points.len() as u128, a.size());
        for x in &box_points {
            let ex = g.to_element(x).unwrap();
            assert_eq!(g.to_element(&g.complement(x)).unwrap(), ex.neg());
            for y in &box_points {
                let ey = g.to_element(y).unwrap();
                assert_eq!(g.to_element(&g.truncated_sum(x, y)).unwrap(), ex.oplus(&ey));
            }
        }
    }
}
