//! Exact rationals in the unit interval.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// A rational number `num/den` in `[0, 1]`, always kept in lowest terms.
///
/// Ordering and equality are by value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// Builds `num/den`, reducing to lowest terms. Fails unless `0 <= num <= den` and `den > 0`.
    pub fn new(num: u64, den: u64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::MalformedFraction(format!("{num}/{den}: zero denominator")));
        }
        if num > den {
            return Err(Error::MalformedFraction(format!("{num}/{den}: not in [0,1]")));
        }
        let g = gcd(num, den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    /// `k/m` for a chain coordinate; callers guarantee `k <= m`, `m >= 1`.
    pub(crate) fn of_step(k: u64, m: u64) -> Self {
        debug_assert!(m >= 1 && k <= m);
        let g = gcd(k, m);
        Fraction {
            num: k / g,
            den: m / g,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }

    /// Numerator of `self` written over denominator `m`; `None` unless `den | m`.
    pub fn step_in(self, m: u64) -> Option<u64> {
        if m == 0 || !m.is_multiple_of(self.den) {
            None
        } else {
            Some(self.num * (m / self.den))
        }
    }

    /// Truncated sum `min(x + y, 1)`.
    pub fn oplus(self, other: Self) -> Self {
        let d = lcm(self.den, other.den);
        let n = self.num * (d / self.den) + other.num * (d / other.den);
        if n >= d {
            Fraction::ONE
        } else {
            Fraction::of_step(n, d)
        }
    }

    /// `1 - x`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        Fraction {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// `max(x + y - 1, 0)`.
    pub fn odot(self, other: Self) -> Self {
        self.neg().oplus(other.neg()).neg()
    }

    /// Truncated difference `max(x - y, 0)`.
    pub fn monus(self, other: Self) -> Self {
        self.odot(other.neg())
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `"p/q"` in lowest terms, or the integers `"0"` and `"1"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::MalformedFraction(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        if n.is_empty() || d.is_empty() || !n.bytes().chain(d.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: u64 = n.parse().map_err(|_| bad())?;
        let d: u64 = d.parse().map_err(|_| bad())?;
        let f = Fraction::new(n, d)?;
        if f.num != n || f.den != d {
            return Err(Error::MalformedFraction(format!("{s}: not in lowest terms")));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_and_orders() {
        assert_eq!(Fraction::new(2, 4).unwrap(), fr("1/2"));
        assert!(fr("1/3") < fr("1/2"));
        assert_eq!(fr("0"), Fraction::ZERO);
        assert_eq!(fr("1/1"), Fraction::ONE);
    }

    #[test]
    fn operations() {
        assert_eq!(fr("1/2").oplus(fr("1/3")), fr("5/6"));
        assert_eq!(fr("2/3").oplus(fr("2/3")), Fraction::ONE);
        assert_eq!(fr("1/2").odot(fr("1/2")), Fraction::ZERO);
        assert_eq!(fr("2/3").odot(fr("2/3")), fr("1/3"));
        assert_eq!(fr("1/3").neg(), fr("2/3"));
        assert_eq!(fr("1/2").monus(fr("1/3")), fr("1/6"));
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1/", "/2", "3/2", "1/0", "2/4", "-1/2", "a/b", "1/2/3"] {
            assert!(s.parse::<Fraction>().is_err(), "{s}");
        }
    }

    #[test]
    fn step_in() {
        assert_eq!(fr("1/2").step_in(6), Some(3));
        assert_eq!(fr("1/4").step_in(6), None);
        assert_eq!(Fraction::ONE.step_in(5), Some(5));
    }
}
