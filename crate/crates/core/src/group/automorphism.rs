use super::{bits, Group};

/// All automorphisms of a group, each stored as the permutation
/// `x ↦ α(x)` of element indices. Sorted lexicographically, so the
/// identity map comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismSet {
    maps: Vec<Vec<u8>>,
}

impl AutomorphismSet {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[Vec<u8>] {
        &self.maps
    }

    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.maps[k][x] as usize
    }

    /// Image of an element bitmask under the `k`-th automorphism.
    pub fn apply_mask(&self, k: usize, mask: u64) -> u64 {
        let map = &self.maps[k];
        bits(mask).fold(0u64, |acc, x| acc | 1 << map[x])
    }

    /// Index of the map equal to `map`, if present.
    pub fn position(&self, map: &[u8]) -> Option<usize> {
        self.maps.binary_search_by(|m| m.as_slice().cmp(map)).ok()
    }
}

/// A smallest generating tuple, found by scanning tuples of size ≤ 3 in
/// lexicographic order; larger groups fall back to greedy extension.
pub(crate) fn generating_tuple(g: &Group) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    let full = g.full_mask();
    for x in 1..n {
        if g.generated_mask(1 << x) == full {
            return vec![x];
        }
    }
    for x in 1..n {
        for y in x + 1..n {
            if g.generated_mask(1 << x | 1 << y) == full {
                return vec![x, y];
            }
        }
    }
    for x in 1..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if g.generated_mask(1 << x | 1 << y | 1 << z) == full {
                    return vec![x, y, z];
                }
            }
        }
    }
    let mut tuple = Vec::new();
    let mut mask = 1u64;
    for x in 1..n {
        if mask & (1 << x) == 0 {
            tuple.push(x);
            mask = g.generated_mask(tuple.iter().fold(0, |m, &t| m | 1 << t));
        }
    }
    tuple
}

/// Brute force: every assignment of the generating tuple to elements with
/// the same order and class size is extended along the Cayley graph and
/// kept when it is a well-defined bijection.
pub fn automorphism_group(g: &Group) -> AutomorphismSet {
    let n = g.order();
    let gens = generating_tuple(g);
    let classes = g.conjugacy_classes();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..n)
                .filter(|&y| {
                    g.element_order(y) == g.element_order(x)
                        && classes.size(classes.class_of(y)) == classes.size(classes.class_of(x))
                })
                .collect()
        })
        .collect();

    let mut maps = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cand)| cand[c]).collect();
        if let Some(map) = extend(g, &gens, &images) {
            maps.push(map);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == gens.len() {
                maps.sort();
                return AutomorphismSet { maps };
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn extend(g: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<u8>> {
    let n = g.order();
    let mut map = vec![u8::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(map[x] as usize, t) as u8;
            if map[y] == u8::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    let mut hit = 0u64;
    for &v in &map {
        hit |= 1 << v;
    }
    (hit == g.full_mask()).then_some(map)
}
