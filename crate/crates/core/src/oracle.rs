//! Brute-force reference implementations used to cross-check the structural algorithms.
//!
//! Nothing here goes through the component-map machinery: algebras are handled as
//! integer step vectors with their own `⊕`/`¬` tables, spaces as raw families of masks.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::FiniteMV;
use crate::fraction::Fraction;
use crate::topology::{full_mask, FinSpace};

/// `⊕` and `¬` of a finite algebra as tables over mixed-radix element indices.
#[derive(Clone, Debug)]
pub struct OpTable {
    pub size: usize,
    pub oplus: Vec<u32>,
    pub neg: Vec<u32>,
}

impl OpTable {
    pub fn new(a: &FiniteMV) -> Self {
        let radices: Vec<u64> = a.orders().iter().map(|m| m + 1).collect();
        let size = radices.iter().product::<u64>() as usize;
        let decode = |mut i: usize| -> Vec<u64> {
            let mut v = vec![0u64; radices.len()];
            for (k, r) in radices.iter().enumerate().rev() {
                v[k] = i as u64 % r;
                i /= *r as usize;
            }
            v
        };
        let encode = |v: &[u64]| -> u32 {
            v.iter().zip(&radices).fold(0u64, |acc, (x, r)| acc * r + x) as u32
        };
        let steps: Vec<Vec<u64>> = (0..size).map(decode).collect();
        let orders = a.orders();
        let neg = steps
            .iter()
            .map(|s| encode(&s.iter().zip(orders).map(|(k, m)| m - k).collect::<Vec<_>>()))
            .collect();
        let mut oplus = vec![0u32; size * size];
        for (i, s) in steps.iter().enumerate() {
            for (j, t) in steps.iter().enumerate() {
                let sum: Vec<u64> = s
                    .iter()
                    .zip(t)
                    .zip(orders)
                    .map(|((x, y), m)| (x + y).min(*m))
                    .collect();
                oplus[i * size + j] = encode(&sum);
            }
        }
        OpTable { size, oplus, neg }
    }

    pub fn oplus(&self, i: usize, j: usize) -> usize {
        self.oplus[i * self.size + j] as usize
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i] as usize
    }

    /// Smallest subset containing `seed` and `0` closed under `⊕` and `¬`.
    pub fn closure(&self, seed: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = seed.into_iter().collect();
        set.insert(0);
        loop {
            let mut added = Vec::new();
            for &x in &set {
                let n = self.neg(x);
                if !set.contains(&n) {
                    added.push(n);
                }
                for &y in &set {
                    let s = self.oplus(x, y);
                    if !set.contains(&s) {
                        added.push(s);
                    }
                }
            }
            if added.is_empty() {
                return set;
            }
            set.extend(added);
        }
    }
}

/// Every function `A → B` preserving `0`, `¬` and `⊕`, as carrier tables over element indices.
///
/// Exhaustive backtracking over all carrier functions; a partial assignment is abandoned
/// as soon as some `⊕`/`¬` equation among assigned elements fails.
pub fn homs_by_search(a: &FiniteMV, b: &FiniteMV) -> Vec<Vec<usize>> {
    let ta = OpTable::new(a);
    let tb = OpTable::new(b);
    let n = ta.size;
    // sums[x] = pairs (u, v), u <= v, with u ⊕ v = x
    let mut sums: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in u..n {
            sums[ta.oplus(u, v)].push((u, v));
        }
    }
    let mut negs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        negs[ta.neg(u)].push(u);
    }

    fn consistent(
        x: usize,
        f: &[Option<usize>],
        ta: &OpTable,
        tb: &OpTable,
        sums: &[Vec<(usize, usize)>],
        negs: &[Vec<usize>],
    ) -> bool {
        let y = f[x].expect("x assigned");
        if let Some(fy) = f[ta.neg(x)] {
            if fy != tb.neg(y) {
                return false;
            }
        }
        for &u in &negs[x] {
            if let Some(fu) = f[u] {
                if tb.neg(fu) != y {
                    return false;
                }
            }
        }
        for (z, fz) in f.iter().enumerate() {
            let Some(fz) = *fz else { continue };
            if let Some(fs) = f[ta.oplus(x, z)] {
                if fs != tb.oplus(y, fz) {
                    return false;
                }
            }
        }
        sums[x].iter().all(|&(u, v)| match (f[u], f[v]) {
            (Some(fu), Some(fv)) => tb.oplus(fu, fv) == y,
            _ => true,
        })
    }

    fn go(
        x: usize,
        f: &mut Vec<Option<usize>>,
        ta: &OpTable,
        tb: &OpTable,
        sums: &[Vec<(usize, usize)>],
        negs: &[Vec<usize>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if x == f.len() {
            out.push(f.iter().map(|v| v.expect("complete")).collect());
            return;
        }
        for y in 0..tb.size {
            f[x] = Some(y);
            if consistent(x, f, ta, tb, sums, negs) {
                go(x + 1, f, ta, tb, sums, negs, out);
            }
        }
        f[x] = None;
    }

    let mut out = Vec::new();
    let mut f = vec![None; n];
    // 0 ↦ 0
    f[0] = Some(0);
    if consistent(0, &f, &ta, &tb, &sums, &negs) {
        go(1, &mut f, &ta, &tb, &sums, &negs, &mut out);
    }
    out.sort();
    out
}

/// Every subalgebra of `A`, as sorted index sets.
pub fn all_subalgebras(a: &FiniteMV) -> Vec<BTreeSet<usize>> {
    let t = OpTable::new(a);
    let start = t.closure([]);
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while let Some(s) = frontier.pop() {
        for x in 0..t.size {
            if s.contains(&x) {
                continue;
            }
            let bigger = t.closure(s.iter().copied().chain([x]));
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// The subalgebra of `[0,1]` generated by `gens`, by naive fixed-point iteration.
///
/// Returns `None` once more than `cap` elements have been produced.
pub fn closure_in_unit_interval(gens: &[Fraction], cap: usize) -> Option<BTreeSet<Fraction>> {
    let frac = |num: u128, den: u128| -> Fraction {
        let g = {
            let (mut a, mut b) = (num, den);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        Fraction::new((num / g) as u64, (den / g) as u64).expect("0 <= num <= den")
    };
    let mut set: BTreeSet<Fraction> = gens.iter().copied().collect();
    set.insert(frac(0, 1));
    loop {
        let mut added = Vec::new();
        for x in &set {
            let (p, q) = (x.num() as u128, x.den() as u128);
            added.push(frac(q - p, q));
            for y in &set {
                let (r, s) = (y.num() as u128, y.den() as u128);
                added.push(frac((p * s + r * q).min(q * s), q * s));
            }
        }
        let before = set.len();
        set.extend(added);
        if set.len() > cap {
            return None;
        }
        if set.len() == before {
            return Some(set);
        }
    }
}

/// `S ⊆ X` is connected: no split into two non-empty relatively open halves.
pub fn is_connected(x: &FinSpace, s: u64) -> bool {
    if s == 0 {
        return true;
    }
    let relative: HashSet<u64> = x.opens().iter().map(|&o| o & s).collect();
    // enumerate proper non-empty submasks u of s
    let mut u = (s - 1) & s;
    while u != 0 {
        if relative.contains(&u) && relative.contains(&(s & !u)) {
            return false;
        }
        u = (u - 1) & s;
    }
    true
}

/// Components as maximal connected subsets, each class listed once, ordered by least point.
pub fn components_by_connectivity(x: &FinSpace) -> Vec<u64> {
    let full = x.full();
    let connected: Vec<u64> = (1..=full).filter(|&s| s & !full == 0 && is_connected(x, s)).collect();
    let maximal: Vec<u64> = connected
        .iter()
        .copied()
        .filter(|&s| !connected.iter().any(|&t| t != s && s & !t == 0))
        .collect();
    let mut out = maximal;
    out.sort_by_key(|m| m.trailing_zeros());
    out
}

/// All topologies on `n ≤ 4` points, by testing every family of subsets for closure.
pub fn topologies_by_families(n: usize) -> Vec<FinSpace> {
    assert!(n <= 4, "family enumeration is limited to 4 points");
    let full = full_mask(n);
    // non-trivial subsets: everything except ∅ and the full set
    let middle: Vec<u64> = (1..full).collect();
    let mut out = Vec::new();
    for pick in 0u64..1 << middle.len() {
        let mut fam: Vec<u64> = vec![0, full];
        fam.extend(middle.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &s)| s));
        let set: HashSet<u64> = fam.iter().copied().collect();
        let closed = fam
            .iter()
            .all(|&u| fam.iter().all(|&v| set.contains(&(u | v)) && set.contains(&(u & v))));
        if closed {
            out.push(FinSpace::from_masks(n, fam).expect("closed family"));
        }
    }
    out.sort_by(|a, b| a.opens().cmp(b.opens()));
    out
}

/// All topologies on `n ≤ 5` points, as up-set topologies of preorders.
pub fn topologies_by_preorders(n: usize) -> Vec<FinSpace> {
    assert!(n <= 5, "preorder enumeration is limited to 5 points");
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for pick in 0u64..1 << pairs.len() {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if pick >> k & 1 == 1 {
                le[i][j] = true;
            }
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| !le[i][j] || (0..n).all(|k| !le[j][k] || le[i][k]))
        });
        if !transitive {
            continue;
        }
        let opens = (0..=full_mask(n)).filter(|&u| {
            (0..n).all(|i| u >> i & 1 == 0 || (0..n).all(|j| !le[i][j] || u >> j & 1 == 1))
        });
        out.push(FinSpace::from_masks(n, opens).expect("up-sets form a topology"));
    }
    out.sort_by(|a, b| a.opens().cmp(b.opens()));
    out
}

/// One representative per homeomorphism class, chosen as the least relabelled open family.
pub fn up_to_homeomorphism(spaces: &[FinSpace]) -> Vec<FinSpace> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for x in spaces {
        let key = canonical_opens(x);
        if seen.insert(key) {
            out.push(x.clone());
        }
    }
    out
}

fn canonical_opens(x: &FinSpace) -> Vec<u64> {
    let n = x.points();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        let mut relabelled: Vec<u64> = x
            .opens()
            .iter()
            .map(|&u| (0..n).filter(|&i| u >> i & 1 == 1).fold(0u64, |m, i| m | 1 << perm[i]))
            .collect();
        relabelled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
        if !next_permutation(&mut perm) {
            return best.expect("at least one permutation");
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_homs;

    #[test]
    fn topology_counts() {
        // number of topologies on n labelled points
        let known = [1, 1, 4, 29, 355, 6942];
        for (n, &k) in known.iter().enumerate().take(5) {
            let fams = topologies_by_families(n);
            assert_eq!(fams.len(), k, "families on {n} points");
            assert_eq!(topologies_by_preorders(n), fams, "{n} points");
        }
        assert_eq!(topologies_by_preorders(5).len(), known[5]);
    }

    #[test]
    fn homeomorphism_classes() {
        // number of topologies on n unlabelled points
        for (n, k) in [(1, 1), (2, 3), (3, 9), (4, 33)] {
            assert_eq!(up_to_homeomorphism(&topologies_by_families(n)).len(), k, "{n} points");
        }
    }

    #[test]
    fn hom_search_small_cases() {
        let l2 = FiniteMV::chain(2);
        let l4 = FiniteMV::chain(4);
        assert_eq!(homs_by_search(&l2, &l4), vec![vec![0, 2, 4]]);
        assert!(homs_by_search(&l4, &l2).is_empty());
        let b2 = FiniteMV::new(vec![1, 1]).unwrap();
        assert_eq!(homs_by_search(&b2, &b2).len(), enumerate_homs(&b2, &b2).len());
        assert_eq!(homs_by_search(&FiniteMV::terminal(), &l2).len(), 0);
        assert_eq!(homs_by_search(&l2, &FiniteMV::terminal()).len(), 1);
    }

    #[test]
    fn unit_interval_closure() {
        let f = |s: &str| s.parse::<Fraction>().unwrap();
        let s = closure_in_unit_interval(&[f("2/5")], 100).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.contains(&f("1/5")));
        assert!(closure_in_unit_interval(&[f("1/7"), f("1/11")], 50).is_none());
    }

    #[test]
    fn subalgebra_enumeration() {
        // Ł_6 has the subalgebras Ł_1, Ł_2, Ł_3, Ł_6
        assert_eq!(all_subalgebras(&FiniteMV::chain(6)).len(), 4);
        assert_eq!(all_subalgebras(&FiniteMV::chain(1)).len(), 1);
    }

    #[test]
    fn connectivity() {
        let s = FinSpace::sierpinski();
        assert_eq!(components_by_connectivity(&s), vec![0b11]);
        assert_eq!(components_by_connectivity(&FinSpace::discrete(3)), vec![1, 2, 4]);
        assert!(components_by_connectivity(&FinSpace::discrete(0)).is_empty());
    }
}
