//! Finite MV-algebras as finite products of finite chains.
//!
//! `FiniteMV::new(vec![m1, .., mk])` is the product `Ł_{m1} × … × Ł_{mk}`, where
//! `Ł_m = {0, 1/m, …, 1}`. The empty product is the terminal algebra, in which `0 = 1`.
//! Component order is kept as given (coproducts rely on it); [`FiniteMV::canonical`]
//! sorts it, and two algebras are isomorphic iff their canonical forms agree.

mod hom;
mod ideal;
mod rational;

pub use hom::{enumerate_homs, Hom};
pub use ideal::{localize, product_split, quotient_by_ideal, Ideal, ProductSplit};
pub use rational::{Exponent, RationalAlgebra, RationalProduct};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fraction::Fraction;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMV {
    orders: Vec<u64>,
}

/// A tuple of coordinates, one per component of its ambient algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coords: Vec<Fraction>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Oplus,
    Neg,
    Odot,
    Join,
    Meet,
}

impl Op {
    pub const ALL: [Op; 5] = [Op::Oplus, Op::Neg, Op::Odot, Op::Join, Op::Meet];

    pub fn arity(self) -> usize {
        match self {
            Op::Neg => 1,
            _ => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Oplus => "+",
            Op::Neg => "!",
            Op::Odot => "*",
            Op::Join => "v",
            Op::Meet => "^",
        }
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "+" | "⊕" | "oplus" => Op::Oplus,
            "!" | "¬" | "neg" => Op::Neg,
            "*" | "⊙" | "odot" => Op::Odot,
            "v" | "∨" | "join" => Op::Join,
            "^" | "∧" | "meet" => Op::Meet,
            _ => return Err(Error::Input(format!("unknown operation `{s}`"))),
        })
    }
}

impl Element {
    pub fn new(coords: Vec<Fraction>) -> Self {
        Element { coords }
    }

    /// The constant tuple `(f, …, f)` of length `len`.
    pub fn constant(f: Fraction, len: usize) -> Self {
        Element {
            coords: vec![f; len],
        }
    }

    pub fn coords(&self) -> &[Fraction] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    fn zip_with(&self, other: &Element, f: impl Fn(Fraction, Fraction) -> Fraction) -> Element {
        debug_assert_eq!(self.len(), other.len());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&x, &y)| f(x, y))
                .collect(),
        }
    }

    pub fn oplus(&self, other: &Element) -> Element {
        self.zip_with(other, Fraction::oplus)
    }

    pub fn neg(&self) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn odot(&self, other: &Element) -> Element {
        self.zip_with(other, Fraction::odot)
    }

    pub fn join(&self, other: &Element) -> Element {
        self.zip_with(other, Ord::max)
    }

    pub fn meet(&self, other: &Element) -> Element {
        self.zip_with(other, Ord::min)
    }

    /// Pointwise order of the product.
    pub fn leq(&self, other: &Element) -> bool {
        self.coords.iter().zip(&other.coords).all(|(x, y)| x <= y)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords.iter().all(|x| x.is_one())
    }

    /// Every coordinate lies in `{0, 1}`.
    pub fn is_zero_one(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero() || x.is_one())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FiniteMV {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(i) = orders.iter().position(|&m| m == 0) {
            return Err(Error::InvalidAlgebra(format!("component {i} has order 0")));
        }
        Ok(FiniteMV { orders })
    }

    pub fn terminal() -> Self {
        FiniteMV { orders: Vec::new() }
    }

    /// `Ł_n`; panics if `n == 0`.
    pub fn chain(n: u64) -> Self {
        assert!(n >= 1, "chain order must be positive");
        FiniteMV { orders: vec![n] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of components (factors).
    pub fn components(&self) -> usize {
        self.orders.len()
    }

    pub fn is_terminal(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn canonical(&self) -> FiniteMV {
        let mut orders = self.orders.clone();
        orders.sort_unstable();
        FiniteMV { orders }
    }

    pub fn is_isomorphic(&self, other: &FiniteMV) -> bool {
        self.canonical() == other.canonical()
    }

    /// Carrier size, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        self.orders
            .iter()
            .fold(1u128, |acc, &m| acc.saturating_mul(m as u128 + 1))
    }

    pub fn zero(&self) -> Element {
        Element::constant(Fraction::ZERO, self.components())
    }

    pub fn one(&self) -> Element {
        Element::constant(Fraction::ONE, self.components())
    }

    pub fn contains(&self, a: &Element) -> bool {
        a.len() == self.components()
            && a.coords
                .iter()
                .zip(&self.orders)
                .all(|(x, &m)| m % x.den() == 0)
    }

    pub fn check(&self, a: &Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ElementMismatch(format!("{a} not in {self}")))
        }
    }

    pub fn element(&self, coords: Vec<Fraction>) -> Result<Element> {
        let a = Element::new(coords);
        self.check(&a)?;
        Ok(a)
    }

    /// Element with coordinate `i` equal to `steps[i] / m_i`.
    pub fn from_steps(&self, steps: &[u64]) -> Result<Element> {
        if steps.len() != self.components() {
            return Err(Error::ElementMismatch(format!(
                "{} coordinates for {} components",
                steps.len(),
                self.components()
            )));
        }
        let coords = steps
            .iter()
            .zip(&self.orders)
            .map(|(&k, &m)| {
                if k > m {
                    Err(Error::ElementMismatch(format!("step {k} exceeds order {m}")))
                } else {
                    Ok(Fraction::of_step(k, m))
                }
            })
            .collect::<Result<_>>()?;
        Ok(Element { coords })
    }

    /// Numerators of `a` over each component order; `a` must belong to `self`.
    pub fn steps(&self, a: &Element) -> Vec<u64> {
        a.coords
            .iter()
            .zip(&self.orders)
            .map(|(x, &m)| x.step_in(m).expect("element of the algebra"))
            .collect()
    }

    /// Lexicographic index of `a` among [`FiniteMV::elements`].
    pub fn index_of(&self, a: &Element) -> Option<usize> {
        if !self.contains(a) {
            return None;
        }
        let mut idx = 0usize;
        for (x, &m) in a.coords.iter().zip(&self.orders) {
            idx = idx * (m as usize + 1) + x.step_in(m)? as usize;
        }
        Some(idx)
    }

    /// All elements in lexicographic order of their step vectors.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let mut steps = vec![0u64; self.components()];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let e = Element {
                coords: steps
                    .iter()
                    .zip(&self.orders)
                    .map(|(&k, &m)| Fraction::of_step(k, m))
                    .collect(),
            };
            done = true;
            for i in (0..steps.len()).rev() {
                if steps[i] < self.orders[i] {
                    steps[i] += 1;
                    done = false;
                    break;
                }
                steps[i] = 0;
            }
            Some(e)
        })
    }

    /// Evaluates `op` on `args`, coordinatewise.
    pub fn apply(&self, op: Op, args: &[&Element]) -> Result<Element> {
        if args.len() != op.arity() {
            return Err(Error::ArityMismatch {
                op: op.symbol(),
                expected: op.arity(),
                got: args.len(),
            });
        }
        for a in args {
            self.check(a)?;
        }
        Ok(match op {
            Op::Oplus => args[0].oplus(args[1]),
            Op::Neg => args[0].neg(),
            Op::Odot => args[0].odot(args[1]),
            Op::Join => args[0].join(args[1]),
            Op::Meet => args[0].meet(args[1]),
        })
    }

    /// `a ⊕ a = a`.
    pub fn is_boolean(&self, a: &Element) -> Result<bool> {
        self.check(a)?;
        Ok(a.oplus(a) == *a)
    }

    /// Boolean element with a single `1` at component `i`.
    pub fn atom(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coords[i] = Fraction::ONE;
        e
    }

    /// The Boolean element that is `1` exactly on `ones`.
    pub fn indicator(&self, ones: impl IntoIterator<Item = usize>) -> Element {
        let mut e = self.zero();
        for i in ones {
            e.coords[i] = Fraction::ONE;
        }
        e
    }

    /// All `2^k` Boolean elements, ordered by the bitmask whose bit `i` is coordinate `i`.
    pub fn boolean_elements(&self) -> impl Iterator<Item = Element> + '_ {
        let k = self.components();
        assert!(k < 64, "too many components to enumerate Boolean elements");
        (0u64..1 << k).map(move |mask| self.indicator((0..k).filter(|i| mask >> i & 1 == 1)))
    }

    /// Product with its two projections; components of `self` come first.
    pub fn product(&self, other: &FiniteMV) -> (FiniteMV, Hom, Hom) {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        let prod = FiniteMV { orders };
        let k = self.components();
        let p0 = Hom::new(prod.clone(), self.clone(), (0..k).collect()).expect("projection");
        let p1 = Hom::new(prod.clone(), other.clone(), (k..k + other.components()).collect())
            .expect("projection");
        (prod, p0, p1)
    }

    /// Product of a list of algebras, in order.
    pub fn product_of(factors: &[FiniteMV]) -> FiniteMV {
        FiniteMV {
            orders: factors.iter().flat_map(|f| f.orders.iter().copied()).collect(),
        }
    }
}

impl fmt::Debug for FiniteMV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.orders)
    }
}

impl fmt::Display for FiniteMV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        for (i, m) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, " × ")?;
            }
            write!(f, "Ł{m}")?;
        }
        Ok(())
    }
}

/// All algebras in canonical form with at most `max_components` components, each of order at most `max_order`.
pub fn algebras_bounded(max_components: usize, max_order: u64) -> Vec<FiniteMV> {
    fn go(start: u64, max_order: u64, left: usize, cur: &mut Vec<u64>, out: &mut Vec<FiniteMV>) {
        out.push(FiniteMV { orders: cur.clone() });
        if left == 0 {
            return;
        }
        for m in start..=max_order {
            cur.push(m);
            go(m, max_order, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max_order, max_components, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All algebras in canonical form whose carrier has at most `max_size` elements.
pub fn algebras_up_to_size(max_size: u128) -> Vec<FiniteMV> {
    fn go(start: u64, budget: u128, cur: &mut Vec<u64>, out: &mut Vec<FiniteMV>) {
        out.push(FiniteMV { orders: cur.clone() });
        let mut m = start;
        while (m as u128 + 1) <= budget {
            cur.push(m);
            go(m, budget / (m as u128 + 1), cur, out);
            cur.pop();
            m += 1;
        }
    }
    let mut out = Vec::new();
    if max_size >= 1 {
        go(1, max_size, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}
