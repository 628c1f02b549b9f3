//! Inverse-closed subsets of G* as unions of units: involution singletons
//! and inverse pairs {x, x⁻¹}, ordered by least element.

use rand::Rng;

use crate::group::{bits, AutomorphismSet, Group};
use crate::spectra::ConnectionSet;

#[derive(Debug, Clone)]
pub struct Units {
    masks: Vec<u64>,
    weights: Vec<usize>,
    /// ways[i][s]: subsets of units i.. with total size s.
    ways: Vec<Vec<u64>>,
    unit_of: Vec<usize>,
}

impl Units {
    pub fn of(g: &Group) -> Self {
        let n = g.order();
        let mut masks = Vec::new();
        let mut unit_of = vec![usize::MAX; n];
        for x in 1..n {
            let y = g.inv(x);
            if x <= y {
                unit_of[x] = masks.len();
                unit_of[y] = masks.len();
                masks.push(1u64 << x | 1u64 << y);
            }
        }
        let weights: Vec<usize> = masks.iter().map(|m| m.count_ones() as usize).collect();
        let u = masks.len();
        let mut ways = vec![vec![0u64; n]; u + 1];
        ways[u][0] = 1;
        for i in (0..u).rev() {
            for s in 0..n {
                let mut w = ways[i + 1][s];
                if s >= weights[i] {
                    w += ways[i + 1][s - weights[i]];
                }
                ways[i][s] = w;
            }
        }
        Units { masks, weights, ways, unit_of }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn involutions(&self) -> usize {
        self.weights.iter().filter(|&&w| w == 1).count()
    }

    pub fn pairs(&self) -> usize {
        self.weights.iter().filter(|&&w| w == 2).count()
    }

    /// Number of inverse-closed subsets of G* of this size.
    pub fn count(&self, size: usize) -> u64 {
        self.ways[0].get(size).copied().unwrap_or(0)
    }

    pub fn to_elements(&self, unit_mask: u64) -> u64 {
        bits(unit_mask).fold(0, |m, i| m | self.masks[i])
    }

    pub fn from_elements(&self, element_mask: u64) -> u64 {
        bits(element_mask).fold(0, |m, x| m | 1 << self.unit_of[x])
    }

    /// Unit masks of the given size in lexicographic order of the incidence
    /// vector (unit 0 first, excluded before included).
    pub fn enumerate(&self, size: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.count(size) as usize);
        if self.count(size) > 0 {
            self.walk(0, size, 0, &mut out);
        }
        out
    }

    fn walk(&self, i: usize, rest: usize, acc: u64, out: &mut Vec<u64>) {
        if i == self.len() {
            out.push(acc);
            return;
        }
        if self.ways[i + 1][rest] > 0 {
            self.walk(i + 1, rest, acc, out);
        }
        if rest >= self.weights[i] && self.ways[i + 1][rest - self.weights[i]] > 0 {
            self.walk(i + 1, rest - self.weights[i], acc | 1 << i, out);
        }
    }

    /// A uniformly random unit mask of the given size (which must occur).
    pub fn sample<R: Rng>(&self, size: usize, rng: &mut R) -> u64 {
        let mut rest = size;
        let mut acc = 0;
        for i in 0..self.len() {
            let total = self.ways[i][rest];
            let skip = self.ways[i + 1][rest];
            if rng.random_range(0..total) >= skip {
                acc |= 1 << i;
                rest -= self.weights[i];
            }
        }
        acc
    }

    /// Permutation of units induced by an automorphism.
    fn permutation(&self, map: &[u8]) -> Vec<usize> {
        self.masks.iter().map(|&m| self.unit_of[map[m.trailing_zeros() as usize] as usize]).collect()
    }
}

/// Position of a unit mask in enumeration order is increasing in this key.
pub fn order_key(unit_mask: u64) -> u64 {
    unit_mask.reverse_bits()
}

/// Orbit representatives of Aut(G) acting on unit masks: the member of
/// each orbit that comes first in enumeration order.
pub struct OrbitReducer {
    tables: Vec<Vec<[u64; 256]>>,
}

impl OrbitReducer {
    pub fn new(units: &Units, auts: &AutomorphismSet) -> Self {
        let nbytes = units.len().div_ceil(8);
        let tables = auts
            .maps()
            .iter()
            .skip(1)
            .map(|map| {
                let perm = units.permutation(map);
                (0..nbytes)
                    .map(|b| {
                        let mut t = [0u64; 256];
                        for (v, slot) in t.iter_mut().enumerate() {
                            *slot = bits(v as u64)
                                .filter(|&k| b * 8 + k < perm.len())
                                .fold(0, |m, k| m | 1 << perm[b * 8 + k]);
                        }
                        t
                    })
                    .collect()
            })
            .collect();
        OrbitReducer { tables }
    }

    fn apply(table: &[[u64; 256]], mask: u64) -> u64 {
        table.iter().enumerate().fold(0, |m, (b, t)| m | t[(mask >> (8 * b)) as usize & 0xff])
    }

    pub fn is_rep(&self, mask: u64) -> bool {
        let k = order_key(mask);
        self.tables.iter().all(|t| order_key(Self::apply(t, mask)) >= k)
    }

    pub fn rep(&self, mask: u64) -> u64 {
        self.tables.iter().map(|t| Self::apply(t, mask)).fold(mask, |best, m| {
            if order_key(m) < order_key(best) {
                m
            } else {
                best
            }
        })
    }
}

/// Every inverse-closed subset of G* of the given size, optionally only
/// those generating G, in the enumeration order above.
pub fn enumerate_connection_sets(
    g: &Group,
    size: usize,
    generating_only: bool,
) -> impl Iterator<Item = ConnectionSet> + '_ {
    let units = Units::of(g);
    let masks = units.enumerate(size);
    masks.into_iter().filter_map(move |u| {
        let m = units.to_elements(u);
        (!generating_only || g.generates(m)).then(|| ConnectionSet::from_mask(g, m).expect("units are inverse-closed"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{automorphism_group, group_semidirect_cyclic};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn f20_counts() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let u = Units::of(&g);
        assert_eq!((u.involutions(), u.pairs()), (5, 7));
        assert_eq!((0..20).map(|s| u.count(s)).sum::<u64>(), 4096);
        assert_eq!(enumerate_connection_sets(&g, 19, true).count(), 1);
        let c7 = group_semidirect_cyclic(7, 1, 1).unwrap();
        assert_eq!(enumerate_connection_sets(&c7, 3, false).count(), 0);
    }

    #[test]
    fn enumeration_is_ordered_and_complete() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let u = Units::of(&g);
        for size in 0..20 {
            let all = u.enumerate(size);
            assert_eq!(all.len() as u64, u.count(size));
            assert!(all.windows(2).all(|w| order_key(w[0]) < order_key(w[1])));
            assert!(all.iter().all(|&m| u.to_elements(m).count_ones() as usize == size));
        }
    }

    #[test]
    fn orbit_reps_cover_every_orbit_once() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let u = Units::of(&g);
        let auts = automorphism_group(&g);
        let red = OrbitReducer::new(&u, &auts);
        for size in [4, 8, 10] {
            let all = u.enumerate(size);
            let reps: HashSet<u64> = all.iter().copied().filter(|&m| red.is_rep(m)).collect();
            let via_rep: HashSet<u64> = all.iter().map(|&m| red.rep(m)).collect();
            assert_eq!(reps, via_rep);
            // reps of distinct orbits are never automorphic images
            for &r in &reps {
                let s = u.to_elements(r);
                for map in auts.maps().iter().skip(1) {
                    let img = bits(s).fold(0u64, |m, x| m | 1 << map[x]);
                    assert!(img == s || !reps.contains(&u.from_elements(img)));
                }
            }
        }
    }

    #[test]
    fn sampling_hits_only_valid_sets() {
        let g = group_semidirect_cyclic(7, 6, 3).unwrap();
        let u = Units::of(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let m = u.sample(21, &mut rng);
            assert_eq!(u.to_elements(m).count_ones(), 21);
        }
    }
}
