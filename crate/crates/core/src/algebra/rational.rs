//! Subalgebras of `[0,1] ∩ Q`, indexed by supernatural numbers.
//!
//! A subalgebra is determined by the denominators it admits. `p/q` (lowest terms) is a member
//! iff every prime power dividing `q` is bounded by the algebra's exponent for that prime.

use std::collections::BTreeMap;
use std::fmt;

use super::{Element, FiniteMV};
use crate::error::{Error, Result};
use crate::fraction::{lcm, Fraction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(u32),
    Infinite,
}

impl Exponent {
    pub fn admits(self, e: u32) -> bool {
        match self {
            Exponent::Finite(k) => e <= k,
            Exponent::Infinite => true,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(k) => write!(f, "{k}"),
            Exponent::Infinite => write!(f, "∞"),
        }
    }
}

/// Kept normalized: a specification with finitely many finite exponents is always a `Chain`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum RationalAlgebra {
    Chain(u64),
    Supernatural {
        primes: BTreeMap<u64, Exponent>,
        all_infinite: bool,
    },
}

pub(crate) fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl RationalAlgebra {
    pub fn chain(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("chain order must be positive".into()));
        }
        Ok(RationalAlgebra::Chain(n))
    }

    pub fn supernatural(primes: BTreeMap<u64, Exponent>, all_infinite: bool) -> Result<Self> {
        if let Some(&p) = primes.keys().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidAlgebra(format!("{p} is not prime")));
        }
        // every exponent is ∞ already, so listed primes carry no information
        if all_infinite {
            return Ok(RationalAlgebra::full());
        }
        let primes: BTreeMap<u64, Exponent> = primes
            .into_iter()
            .filter(|&(_, e)| e != Exponent::Finite(0))
            .collect();
        if primes.values().all(|&e| e != Exponent::Infinite) {
            let mut n = 1u64;
            for (&p, &e) in &primes {
                let Exponent::Finite(k) = e else { unreachable!() };
                n = p
                    .checked_pow(k)
                    .and_then(|pk| n.checked_mul(pk))
                    .ok_or_else(|| Error::InvalidAlgebra("chain order overflows u64".into()))?;
            }
            return Ok(RationalAlgebra::Chain(n));
        }
        Ok(RationalAlgebra::Supernatural {
            primes,
            all_infinite: false,
        })
    }

    /// `[0,1] ∩ Q`.
    pub fn full() -> Self {
        RationalAlgebra::Supernatural {
            primes: BTreeMap::new(),
            all_infinite: true,
        }
    }

    /// Dyadic rationals `{k/2^n}`.
    pub fn dyadic() -> Self {
        RationalAlgebra::Supernatural {
            primes: BTreeMap::from([(2, Exponent::Infinite)]),
            all_infinite: false,
        }
    }

    pub fn exponent_of(&self, p: u64) -> Exponent {
        match self {
            RationalAlgebra::Chain(n) => {
                Exponent::Finite(factorize(*n).get(&p).copied().unwrap_or(0))
            }
            RationalAlgebra::Supernatural { all_infinite: true, .. } => Exponent::Infinite,
            RationalAlgebra::Supernatural { primes, .. } => {
                primes.get(&p).copied().unwrap_or(Exponent::Finite(0))
            }
        }
    }

    /// Whether `1/q` (hence every `p/q`) belongs to the algebra.
    pub fn admits_denominator(&self, q: u64) -> bool {
        match self {
            RationalAlgebra::Chain(n) => q != 0 && n % q == 0,
            _ => factorize(q).into_iter().all(|(p, e)| self.exponent_of(p).admits(e)),
        }
    }

    pub fn contains(&self, f: Fraction) -> bool {
        self.admits_denominator(f.den())
    }

    /// Supernatural join: pointwise maximum of exponents. This is the coproduct.
    pub fn join(&self, other: &RationalAlgebra) -> RationalAlgebra {
        match (self, other) {
            (RationalAlgebra::Chain(a), RationalAlgebra::Chain(b)) => RationalAlgebra::Chain(lcm(*a, *b)),
            _ => {
                let all = self.is_full() || other.is_full();
                let mut primes: BTreeMap<u64, Exponent> = BTreeMap::new();
                for p in self.support().into_iter().chain(other.support()) {
                    primes.insert(p, self.exponent_of(p).max(other.exponent_of(p)));
                }
                RationalAlgebra::supernatural(primes, all).expect("primes from valid algebras")
            }
        }
    }

    fn support(&self) -> Vec<u64> {
        match self {
            RationalAlgebra::Chain(n) => factorize(*n).into_keys().collect(),
            RationalAlgebra::Supernatural { primes, .. } => primes.keys().copied().collect(),
        }
    }

    pub fn is_full(&self) -> bool {
        matches!(self, RationalAlgebra::Supernatural { all_infinite: true, .. })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, RationalAlgebra::Chain(_))
    }

    pub fn as_finite(&self) -> Option<FiniteMV> {
        match self {
            RationalAlgebra::Chain(n) => Some(FiniteMV::chain(*n)),
            _ => None,
        }
    }

    /// Members, listed in increasing order; only for chains.
    pub fn elements(&self) -> Option<Vec<Fraction>> {
        match self {
            RationalAlgebra::Chain(n) => Some((0..=*n).map(|k| Fraction::of_step(k, *n)).collect()),
            _ => None,
        }
    }
}

impl fmt::Debug for RationalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalAlgebra::Chain(n) => write!(f, "Ł{n}"),
            RationalAlgebra::Supernatural { all_infinite: true, .. } => write!(f, "[0,1]∩Q"),
            RationalAlgebra::Supernatural { primes, .. } => {
                write!(f, "Ł{{")?;
                for (i, (p, e)) in primes.iter().enumerate() {
                    if i > 0 {
                        write!(f, "·")?;
                    }
                    write!(f, "{p}^{e}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// A finite product of subalgebras of `[0,1] ∩ Q`; the empty product is terminal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalProduct {
    factors: Vec<RationalAlgebra>,
}

impl RationalProduct {
    pub fn new(factors: Vec<RationalAlgebra>) -> Self {
        RationalProduct { factors }
    }

    pub fn from_finite(a: &FiniteMV) -> Self {
        RationalProduct {
            factors: a.orders().iter().map(|&m| RationalAlgebra::Chain(m)).collect(),
        }
    }

    pub fn factors(&self) -> &[RationalAlgebra] {
        &self.factors
    }

    pub fn components(&self) -> usize {
        self.factors.len()
    }

    pub fn contains(&self, a: &Element) -> bool {
        a.len() == self.factors.len()
            && a.coords().iter().zip(&self.factors).all(|(&x, f)| f.contains(x))
    }

    pub fn check(&self, a: &Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ElementMismatch(format!("{a} not in {self:?}")))
        }
    }

    /// `Some` when every factor is a finite chain.
    pub fn as_finite(&self) -> Option<FiniteMV> {
        let orders = self
            .factors
            .iter()
            .map(|f| match f {
                RationalAlgebra::Chain(n) => Some(*n),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(FiniteMV::new(orders).expect("chain orders are positive"))
    }

    /// Number of Boolean elements: each factor is simple, so it contributes exactly `{0, 1}`.
    pub fn boolean_count(&self) -> u128 {
        1u128 << self.factors.len()
    }

    /// The finite subalgebra `∏ Ł_{den(a_i)}` containing `a`.
    pub fn finite_envelope(&self, a: &Element) -> Result<FiniteMV> {
        self.check(a)?;
        FiniteMV::new(a.coords().iter().map(|x| x.den()).collect())
    }
}
