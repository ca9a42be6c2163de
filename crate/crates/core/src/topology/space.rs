use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported point count; subsets are `u64` bitmasks.
pub const MAX_POINTS: usize = 63;

/// A finite topological space on `{0, …, n-1}`, stored as its full set of opens.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSpace {
    points: usize,
    opens: BTreeSet<u64>,
}

pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

pub fn mask_points(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

impl FinSpace {
    /// Validates that `opens` contains `∅` and the whole space and is closed under
    /// binary unions and intersections.
    pub fn from_masks(points: usize, opens: impl IntoIterator<Item = u64>) -> Result<Self> {
        if points > MAX_POINTS {
            return Err(Error::InvalidTopology(format!(
                "{points} points exceeds the limit of {MAX_POINTS}"
            )));
        }
        let full = full_mask(points);
        let opens: BTreeSet<u64> = opens.into_iter().collect();
        if let Some(s) = opens.iter().find(|&&s| s & !full != 0) {
            return Err(Error::InvalidTopology(format!("open set {s:#b} has points out of range")));
        }
        if !opens.contains(&0) {
            return Err(Error::InvalidTopology("missing the empty set".into()));
        }
        if !opens.contains(&full) {
            return Err(Error::InvalidTopology("missing the whole space".into()));
        }
        for &u in &opens {
            for &v in &opens {
                if !opens.contains(&(u | v)) {
                    return Err(Error::InvalidTopology(format!(
                        "union of {:?} and {:?} is not open",
                        mask_points(u).collect::<Vec<_>>(),
                        mask_points(v).collect::<Vec<_>>()
                    )));
                }
                if !opens.contains(&(u & v)) {
                    return Err(Error::InvalidTopology(format!(
                        "intersection of {:?} and {:?} is not open",
                        mask_points(u).collect::<Vec<_>>(),
                        mask_points(v).collect::<Vec<_>>()
                    )));
                }
            }
        }
        Ok(FinSpace { points, opens })
    }

    /// Opens given as lists of point indices.
    pub fn new(points: usize, opens: &[Vec<usize>]) -> Result<Self> {
        let masks = opens
            .iter()
            .map(|s| {
                s.iter().try_fold(0u64, |m, &p| {
                    if p >= points || p >= MAX_POINTS {
                        Err(Error::InvalidTopology(format!("point {p} out of range")))
                    } else {
                        Ok(m | 1 << p)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        FinSpace::from_masks(points, masks)
    }

    /// The coarsest topology in which every set of `subbasis` is open.
    ///
    /// On a finite set this is the set of unions of the minimal neighbourhoods
    /// `U_x = ⋂ {S ∈ subbasis : x ∈ S}`.
    pub fn generated_by(points: usize, subbasis: &[u64]) -> Result<Self> {
        if points > MAX_POINTS {
            return Err(Error::InvalidTopology(format!("{points} points exceeds the limit")));
        }
        let full = full_mask(points);
        let minimal: Vec<u64> = (0..points)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|&&s| s >> x & 1 == 1)
                    .fold(full, |acc, &s| acc & s & full)
            })
            .collect();
        Ok(FinSpace::from_minimal_neighbourhoods(points, &minimal))
    }

    /// `minimal[x]` must be the least open containing `x`.
    fn from_minimal_neighbourhoods(points: usize, minimal: &[u64]) -> Self {
        let mut opens = BTreeSet::from([0u64]);
        let mut frontier = vec![0u64];
        while let Some(s) = frontier.pop() {
            for &u in minimal {
                let t = s | u;
                if opens.insert(t) {
                    frontier.push(t);
                }
            }
        }
        opens.insert(full_mask(points));
        FinSpace { points, opens }
    }

    pub fn discrete(n: usize) -> Self {
        let minimal: Vec<u64> = (0..n).map(|x| 1u64 << x).collect();
        FinSpace::from_minimal_neighbourhoods(n, &minimal)
    }

    pub fn indiscrete(n: usize) -> Self {
        FinSpace {
            points: n,
            opens: BTreeSet::from([0, full_mask(n)]),
        }
    }

    /// `{a, b}` with opens `∅, {a}, {a, b}`.
    pub fn sierpinski() -> Self {
        FinSpace {
            points: 2,
            opens: BTreeSet::from([0b00, 0b01, 0b11]),
        }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn full(&self) -> u64 {
        full_mask(self.points)
    }

    pub fn opens(&self) -> &BTreeSet<u64> {
        &self.opens
    }

    pub fn is_open(&self, s: u64) -> bool {
        self.opens.contains(&s)
    }

    pub fn is_closed(&self, s: u64) -> bool {
        self.opens.contains(&(self.full() & !s))
    }

    pub fn clopens(&self) -> Vec<u64> {
        self.opens.iter().copied().filter(|&s| self.is_closed(s)).collect()
    }

    /// Least open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> u64 {
        self.opens
            .iter()
            .filter(|&&s| s >> x & 1 == 1)
            .fold(self.full(), |acc, &s| acc & s)
    }

    pub fn closure(&self, s: u64) -> u64 {
        let outside = self.full() & !s;
        let interior_of_outside = self
            .opens
            .iter()
            .filter(|&&u| u & !outside == 0)
            .fold(0, |acc, &u| acc | u);
        self.full() & !interior_of_outside
    }

    /// Subspace topology on the points of `s`, re-indexed in increasing order.
    pub fn subspace(&self, s: u64) -> FinSpace {
        let pts: Vec<usize> = mask_points(s & self.full()).collect();
        let opens = self.opens.iter().map(|&u| {
            pts.iter()
                .enumerate()
                .filter(|(_, &p)| u >> p & 1 == 1)
                .fold(0u64, |m, (i, _)| m | 1 << i)
        });
        FinSpace {
            points: pts.len(),
            opens: opens.collect(),
        }
    }

    /// Opens as sorted point lists, for serialization.
    pub fn open_lists(&self) -> Vec<Vec<usize>> {
        self.opens.iter().map(|&s| mask_points(s).collect()).collect()
    }
}

impl fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinSpace({}, {:?})", self.points, self.open_lists())
    }
}

/// A continuous map between finite spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousMap {
    source: FinSpace,
    target: FinSpace,
    map: Vec<usize>,
}

pub fn preimage(map: &[usize], s: u64) -> u64 {
    map.iter()
        .enumerate()
        .filter(|(_, &y)| s >> y & 1 == 1)
        .fold(0, |m, (x, _)| m | 1 << x)
}

pub fn image(map: &[usize], s: u64) -> u64 {
    mask_points(s).fold(0, |m, x| m | 1 << map[x])
}

impl ContinuousMap {
    pub fn new(source: FinSpace, target: FinSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.points() || map.iter().any(|&y| y >= target.points()) {
            return Err(Error::Input("map does not send source points to target points".into()));
        }
        for &v in target.opens() {
            if !source.is_open(preimage(&map, v)) {
                return Err(Error::NotContinuous(format!(
                    "preimage of {:?} is not open",
                    mask_points(v).collect::<Vec<_>>()
                )));
            }
        }
        Ok(ContinuousMap { source, target, map })
    }

    pub fn identity(x: &FinSpace) -> Self {
        ContinuousMap {
            source: x.clone(),
            target: x.clone(),
            map: (0..x.points()).collect(),
        }
    }

    pub fn source(&self) -> &FinSpace {
        &self.source
    }

    pub fn target(&self) -> &FinSpace {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn then(&self, next: &ContinuousMap) -> Result<ContinuousMap> {
        if self.target != next.source {
            return Err(Error::Input("maps are not composable".into()));
        }
        Ok(ContinuousMap {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&y| next.map[y]).collect(),
        })
    }
}

/// Whether `map` is a bijection carrying the opens of `x` exactly onto the opens of `y`.
pub fn is_homeomorphism(x: &FinSpace, y: &FinSpace, map: &[usize]) -> bool {
    if x.points() != y.points() || map.len() != x.points() {
        return false;
    }
    let mut seen = vec![false; y.points()];
    for &p in map {
        if p >= y.points() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    let images: BTreeSet<u64> = x.opens().iter().map(|&s| image(map, s)).collect();
    images == *y.opens()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FinSpace::new(2, &[vec![], vec![0], vec![0, 1]]).is_ok());
        assert!(FinSpace::new(2, &[vec![0], vec![0, 1]]).is_err());
        assert!(FinSpace::new(2, &[vec![], vec![0]]).is_err());
        assert!(FinSpace::new(3, &[vec![], vec![0], vec![1], vec![0, 1, 2]]).is_err());
        assert!(FinSpace::new(3, &[vec![], vec![0, 1], vec![1, 2], vec![0, 1, 2]]).is_err());
        assert!(FinSpace::new(2, &[vec![], vec![5], vec![0, 1]]).is_err());
        assert!(FinSpace::new(0, &[vec![]]).is_ok());
    }

    #[test]
    fn generated_topologies() {
        assert_eq!(FinSpace::discrete(3).opens().len(), 8);
        let s = FinSpace::generated_by(2, &[0b01]).unwrap();
        assert_eq!(s, FinSpace::sierpinski());
        assert_eq!(FinSpace::generated_by(3, &[]).unwrap(), FinSpace::indiscrete(3));
    }

    #[test]
    fn closure_and_neighbourhoods() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.minimal_open(1), 0b11);
        assert_eq!(s.minimal_open(0), 0b01);
        assert_eq!(s.closure(0b10), 0b10);
        assert_eq!(s.closure(0b01), 0b11);
        assert_eq!(s.clopens(), vec![0, 0b11]);
    }

    #[test]
    fn continuity() {
        let s = FinSpace::sierpinski();
        let d = FinSpace::discrete(2);
        assert!(ContinuousMap::new(d.clone(), s.clone(), vec![1, 0]).is_ok());
        assert!(matches!(
            ContinuousMap::new(s.clone(), d.clone(), vec![0, 1]),
            Err(Error::NotContinuous(_))
        ));
        assert!(ContinuousMap::new(s.clone(), s.clone(), vec![0, 0]).is_ok());
        assert!(is_homeomorphism(&s, &s, &[0, 1]));
        assert!(!is_homeomorphism(&s, &s, &[1, 0]));
    }
}
