//! Components, quasi-components and the space of components.

use std::collections::BTreeMap;

use super::space::{is_homeomorphism, mask_points, preimage, ContinuousMap, FinSpace};
use crate::error::{Error, Result};

/// A partition of the points of a space into classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    /// Classes as bitmasks, ordered by least element.
    pub classes: Vec<u64>,
    /// Index of the class of each point.
    pub class_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a key per point; points with equal keys share a class.
    fn from_keys<K: Ord>(keys: Vec<K>) -> Partition {
        let mut index: BTreeMap<&K, usize> = BTreeMap::new();
        let mut classes = Vec::new();
        let mut class_of = Vec::with_capacity(keys.len());
        for (x, k) in keys.iter().enumerate() {
            let c = *index.entry(k).or_insert_with(|| {
                classes.push(0u64);
                classes.len() - 1
            });
            classes[c] |= 1 << x;
            class_of.push(c);
        }
        Partition { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|&c| mask_points(c).collect()).collect()
    }
}

/// Connected components of the specialization comparability graph:
/// points `x`, `y` are adjacent iff `x ∈ cl{y}` or `y ∈ cl{x}`.
pub fn components(x: &FinSpace) -> Partition {
    let n = x.points();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut v = v;
        while parent[v] != r {
            let next = parent[v];
            parent[v] = r;
            v = next;
        }
        r
    }
    for p in 0..n {
        // y ∈ U_p iff p ∈ cl{y}
        for q in mask_points(x.minimal_open(p)) {
            let (a, b) = (find(&mut parent, p), find(&mut parent, q));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|p| find(&mut parent, p)).collect();
    Partition::from_keys(roots)
}

/// `Ĉ_x = ⋂ {S clopen : x ∈ S}`.
pub fn quasi_components(x: &FinSpace) -> Partition {
    let clopens = x.clopens();
    let keys: Vec<u64> = (0..x.points())
        .map(|p| {
            clopens
                .iter()
                .filter(|&&s| s >> p & 1 == 1)
                .fold(x.full(), |acc, &s| acc & s)
        })
        .collect();
    Partition::from_keys(keys)
}

/// `q : X → π0 X` with the quotient topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi0Result {
    pub quotient: FinSpace,
    pub class_of: Vec<usize>,
    pub classes: Partition,
}

/// Quotient topology on a partition: `T` is open iff its preimage is open.
pub fn quotient_space(x: &FinSpace, p: &Partition) -> FinSpace {
    // saturated opens are exactly the preimages of quotient opens
    let opens = x.opens().iter().filter_map(|&s| {
        let classes_hit = mask_points(s).fold(0u64, |m, pt| m | 1 << p.class_of[pt]);
        (preimage(&p.class_of, classes_hit) == s).then_some(classes_hit)
    });
    FinSpace::from_masks(p.len(), opens).expect("quotient of a topology is a topology")
}

pub fn pi0(x: &FinSpace) -> Pi0Result {
    let classes = components(x);
    Pi0Result {
        quotient: quotient_space(x, &classes),
        class_of: classes.class_of.clone(),
        classes,
    }
}

/// `π0 f`, sending the class of `x` to the class of `f x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi0Map {
    pub source: Pi0Result,
    pub target: Pi0Result,
    pub map: Vec<usize>,
}

pub fn pi0_map(f: &ContinuousMap) -> Result<Pi0Map> {
    let source = pi0(f.source());
    let target = pi0(f.target());
    let mut map: Vec<Option<usize>> = vec![None; source.classes.len()];
    for (p, &c) in source.class_of.iter().enumerate() {
        let image = target.class_of[f.map()[p]];
        match map[c] {
            Some(prev) if prev != image => {
                return Err(Error::Input(format!(
                    "map does not respect components at point {p}"
                )))
            }
            _ => map[c] = Some(image),
        }
    }
    Ok(Pi0Map {
        map: map.into_iter().map(|c| c.expect("classes are non-empty")).collect(),
        source,
        target,
    })
}

/// `E = ⟨f | f ∈ C(X, 2)⟩` and its factorization through `π0 X`.
#[derive(Clone, Debug)]
pub struct EMap {
    /// The clopens of `X`, indexing the coordinates of `E`.
    pub clopens: Vec<u64>,
    /// `E x`: membership of `x` in each clopen.
    pub vectors: Vec<Vec<bool>>,
    /// Distinct values of `E`, in first-occurrence order; the points of `π0′ X`.
    pub image: Vec<Vec<bool>>,
    /// `π0′ X` with the subspace topology from `2^{C(X,2)}`.
    pub image_space: FinSpace,
    /// `c : π0 X → π0′ X`.
    pub comparison: Vec<usize>,
    pub bijective: bool,
    pub homeomorphism: bool,
}

pub fn e_map(x: &FinSpace) -> EMap {
    let clopens = x.clopens();
    let vectors: Vec<Vec<bool>> = (0..x.points())
        .map(|p| clopens.iter().map(|&s| s >> p & 1 == 1).collect())
        .collect();
    let mut image: Vec<Vec<bool>> = Vec::new();
    let mut image_of = Vec::with_capacity(x.points());
    for v in &vectors {
        let idx = match image.iter().position(|w| w == v) {
            Some(i) => i,
            None => {
                image.push(v.clone());
                image.len() - 1
            }
        };
        image_of.push(idx);
    }
    // subbasis of the product of discrete two-point spaces, restricted to the image
    let subbasis: Vec<u64> = (0..clopens.len())
        .flat_map(|f| {
            let ones = image
                .iter()
                .enumerate()
                .filter(|(_, v)| v[f])
                .fold(0u64, |m, (i, _)| m | 1 << i);
            let zeros = image
                .iter()
                .enumerate()
                .filter(|(_, v)| !v[f])
                .fold(0u64, |m, (i, _)| m | 1 << i);
            [ones, zeros]
        })
        .collect();
    let image_space = FinSpace::generated_by(image.len(), &subbasis).expect("small space");

    let p = pi0(x);
    let mut comparison = vec![usize::MAX; p.classes.len()];
    let mut well_defined = true;
    for (pt, &c) in p.class_of.iter().enumerate() {
        if comparison[c] == usize::MAX {
            comparison[c] = image_of[pt];
        } else if comparison[c] != image_of[pt] {
            well_defined = false;
        }
    }
    let bijective = well_defined && {
        let mut sorted = comparison.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == comparison.len() && comparison.len() == image.len()
    };
    let homeomorphism = bijective && is_homeomorphism(&p.quotient, &image_space, &comparison);
    EMap {
        clopens,
        vectors,
        image,
        image_space,
        comparison,
        bijective,
        homeomorphism,
    }
}

/// `X × Y`, with point `(x, y)` numbered `x·|Y| + y`.
pub fn product_space(x: &FinSpace, y: &FinSpace) -> Result<FinSpace> {
    let ny = y.points();
    let n = x.points() * ny;
    let rect = |u: u64, v: u64| -> u64 {
        let mut m = 0u64;
        for a in mask_points(u) {
            for b in mask_points(v) {
                m |= 1 << (a * ny + b);
            }
        }
        m
    };
    let subbasis: Vec<u64> = x
        .opens()
        .iter()
        .map(|&u| rect(u, y.full()))
        .chain(y.opens().iter().map(|&v| rect(x.full(), v)))
        .collect();
    FinSpace::generated_by(n, &subbasis)
}

/// `γ : π0 (X × Y) → π0 X × π0 Y`.
#[derive(Clone, Debug)]
pub struct GammaComparison {
    pub product_pi0: Pi0Result,
    pub pi0_product: FinSpace,
    pub map: Vec<usize>,
    pub bijective: bool,
    pub homeomorphism: bool,
}

pub fn gamma_compare(x: &FinSpace, y: &FinSpace) -> Result<GammaComparison> {
    let xy = product_space(x, y)?;
    let lhs = pi0(&xy);
    let px = pi0(x);
    let py = pi0(y);
    let rhs = product_space(&px.quotient, &py.quotient)?;
    let ny = y.points();
    let cy = py.classes.len();
    let mut map = vec![usize::MAX; lhs.classes.len()];
    let mut well_defined = true;
    for (pt, &c) in lhs.class_of.iter().enumerate() {
        let target = px.class_of[pt / ny] * cy + py.class_of[pt % ny];
        if map[c] == usize::MAX {
            map[c] = target;
        } else if map[c] != target {
            well_defined = false;
        }
    }
    let bijective = well_defined && {
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == map.len() && map.len() == rhs.points()
    };
    let homeomorphism = bijective && is_homeomorphism(&lhs.quotient, &rhs, &map);
    Ok(GammaComparison {
        product_pi0: lhs,
        pi0_product: rhs,
        map,
        bijective,
        homeomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_examples() {
        let d = FinSpace::discrete(3);
        assert_eq!(components(&d).class_lists(), vec![vec![0], vec![1], vec![2]]);
        let s = FinSpace::sierpinski();
        assert_eq!(components(&s).class_lists(), vec![vec![0, 1]]);
        assert_eq!(quasi_components(&s), components(&s));
        // two Sierpiński spaces side by side
        let two = FinSpace::new(
            4,
            &[
                vec![],
                vec![0],
                vec![2],
                vec![0, 2],
                vec![0, 1],
                vec![0, 1, 2],
                vec![2, 3],
                vec![0, 2, 3],
                vec![0, 1, 2, 3],
            ],
        )
        .unwrap();
        assert_eq!(components(&two).class_lists(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(quasi_components(&two), components(&two));
    }

    #[test]
    fn pi0_examples() {
        let p = pi0(&FinSpace::sierpinski());
        assert_eq!(p.quotient, FinSpace::discrete(1));
        for n in 0..5 {
            assert_eq!(pi0(&FinSpace::discrete(n)).quotient, FinSpace::discrete(n));
        }
        let id = ContinuousMap::identity(&FinSpace::sierpinski());
        let m = pi0_map(&id).unwrap();
        assert_eq!(m.map, vec![0]);
        assert_eq!(pi0(&FinSpace::indiscrete(3)).quotient.points(), 1);
    }

    #[test]
    fn e_map_examples() {
        let e = e_map(&FinSpace::discrete(2));
        assert_eq!(e.image.len(), 2);
        assert!(e.homeomorphism);
        let e = e_map(&FinSpace::sierpinski());
        assert_eq!(e.image.len(), 1);
        assert!(e.homeomorphism);
    }

    #[test]
    fn product_examples() {
        let s = FinSpace::sierpinski();
        let g = gamma_compare(&s, &s).unwrap();
        assert_eq!(g.product_pi0.quotient.points(), 1);
        assert_eq!(g.pi0_product.points(), 1);
        assert!(g.homeomorphism);
        let g = gamma_compare(&FinSpace::discrete(2), &FinSpace::discrete(3)).unwrap();
        assert_eq!(g.map.len(), 6);
        assert!(g.bijective && g.homeomorphism);
        assert_eq!(
            product_space(&FinSpace::discrete(2), &FinSpace::discrete(2)).unwrap(),
            FinSpace::discrete(4)
        );
        assert_eq!(
            product_space(&FinSpace::discrete(2), &FinSpace::discrete(0)).unwrap().points(),
            0
        );
    }
}
