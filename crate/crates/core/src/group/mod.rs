//! Finite groups of order at most [`MAX_ORDER`], stored as explicit
//! multiplication tables.
//!
//! Elements are referred to by index. The identity is always index 0 and the
//! enumeration order is fixed by the constructor, so element indices are
//! stable across runs and can be written to files.

mod automorphism;
mod classes;
mod recipe;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use automorphism::{automorphism_group, AutomorphismSet};
pub use classes::ConjugacyPartition;
pub use recipe::{parse_recipe, Recipe};

/// Largest group order supported anywhere in the crate.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group closure exceeds {MAX_ORDER} elements")]
    ClosureTooLarge,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("twist {r} is not an automorphism of order dividing {n} of C_{m}")]
    BadTwist { m: u32, n: u32, r: i64 },
    #[error("inconsistent extension: a^{s} is not central in the metacyclic group ({m},{n},{r})")]
    BadExtension { m: u32, n: u32, r: i64, s: i64 },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("group spec parse error: {0}")]
    Parse(String),
    #[error("unknown group id `{0}`")]
    UnknownId(String),
}

/// A named generator and the element it denotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub element: usize,
}

#[derive(Clone)]
pub struct Group {
    name: String,
    order: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    orders: Vec<u32>,
    generators: Vec<Generator>,
    labels: Option<Vec<String>>,
    classes: ConjugacyPartition,
    fingerprint: u64,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl Group {
    /// Builds a group from a row-major multiplication table, checking the
    /// identity, inverse, Latin-square and associativity laws.
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        mul: Vec<u8>,
        generators: Vec<Generator>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GroupError::ClosureTooLarge);
        }
        if mul.len() != order * order {
            return Err(GroupError::InvalidTable(format!("expected {} entries, got {}", order * order, mul.len())));
        }
        if mul.iter().any(|&v| v as usize >= order) {
            return Err(GroupError::InvalidTable("entry out of range".into()));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(GroupError::InvalidTable(format!("0 is not an identity at {x}")));
            }
        }
        for x in 0..order {
            let mut row = 0u64;
            let mut col = 0u64;
            for y in 0..order {
                row |= 1 << mul[x * order + y];
                col |= 1 << mul[y * order + x];
            }
            let full = full_mask(order);
            if row != full || col != full {
                return Err(GroupError::InvalidTable(format!("row/column {x} is not a permutation")));
            }
        }
        for x in 0..order {
            for y in 0..order {
                let xy = mul[x * order + y] as usize;
                for z in 0..order {
                    let yz = mul[y * order + z] as usize;
                    if mul[xy * order + z] != mul[x * order + yz] {
                        return Err(GroupError::InvalidTable(format!("associativity fails on ({x},{y},{z})")));
                    }
                }
            }
        }
        let mut inv = vec![0u8; order];
        for x in 0..order {
            let y = (0..order).find(|&y| mul[x * order + y] == 0).expect("latin square");
            inv[x] = y as u8;
        }
        for g in &generators {
            if g.element >= order {
                return Err(GroupError::InvalidTable(format!("generator {} out of range", g.name)));
            }
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(GroupError::InvalidTable("label count differs from order".into()));
            }
        }

        let mut group = Group {
            name: name.into(),
            order,
            mul,
            inv,
            orders: Vec::new(),
            generators,
            labels,
            classes: ConjugacyPartition::trivial(),
            fingerprint: 0,
        };
        group.orders = (0..order).map(|x| group.compute_order(x)).collect();
        group.classes = ConjugacyPartition::compute(&group);
        group.fingerprint = fnv1a(&group.mul);
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let n = self.element_order(x) as i64;
        let k = k.rem_euclid(n);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Raw row-major multiplication table.
    pub fn table(&self) -> &[u8] {
        &self.mul
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Human-readable element labels (matrix renderings for SL(2,3)).
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Hash of the multiplication table; used as the group key in caches.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Least t >= 1 with x^t = 1.
    pub fn element_order(&self, x: usize) -> u32 {
        self.orders[x]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut acc = x;
        let mut t = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            t += 1;
        }
        t
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u32, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyPartition {
        &self.classes
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.classes.class_of(x)
    }

    /// g^{-1} x g
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    /// Closure of `set` together with the identity, as a bitmask.
    pub fn generated_mask(&self, set: u64) -> u64 {
        let gens: Vec<usize> = bits(set).collect();
        let mut seen = 1u64;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if seen & (1 << y) == 0 {
                    seen |= 1 << y;
                    queue.push(y);
                }
            }
        }
        seen
    }

    /// Subgroup generated by `set` (identity included), sorted.
    pub fn subgroup_generated(&self, set: &[usize]) -> Vec<usize> {
        let mask = set.iter().fold(0u64, |m, &x| m | (1 << x));
        bits(self.generated_mask(mask)).collect()
    }

    pub fn generates(&self, set_mask: u64) -> bool {
        self.generated_mask(set_mask) == full_mask(self.order)
    }

    /// The subgroup generated by all commutators, sorted.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut mask = 0u64;
        for x in 0..self.order {
            for y in 0..self.order {
                mask |= 1 << self.commutator(x, y);
            }
        }
        bits(self.generated_mask(mask)).collect()
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.order)
    }

    /// Looks up an element by its label, if the group carries labels.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        let norm: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels.as_ref()?.iter().position(|l| *l == norm)
    }

    /// Shortest word in the named generators, e.g. `a^2*b`. Found by BFS with
    /// right multiplication in generator order, so the result is deterministic.
    pub fn word(&self, x: usize) -> String {
        self.words()[x].clone()
    }

    pub fn words(&self) -> Vec<String> {
        let mut letters: Vec<Option<Vec<usize>>> = vec![None; self.order];
        letters[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g.element);
                if letters[y].is_none() {
                    let mut w = letters[x].clone().unwrap();
                    w.push(gi);
                    letters[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        letters
            .into_iter()
            .enumerate()
            .map(|(x, w)| match w {
                Some(w) if w.is_empty() => "1".to_string(),
                Some(w) => render_word(&w, &self.generators),
                None => x.to_string(),
            })
            .collect()
    }

    /// Evaluates a word like `a^2*b^-1` in the named generators.
    pub fn eval_word(&self, word: &str) -> Result<usize, GroupError> {
        let word = word.trim();
        if word == "1" || word == "e" {
            return Ok(0);
        }
        let mut acc = 0usize;
        for factor in word.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((n, p)) => {
                    let p: i64 =
                        p.trim().parse().map_err(|_| GroupError::Parse(format!("bad exponent in `{factor}`")))?;
                    (n.trim(), p)
                }
                None => (factor, 1),
            };
            let g = self
                .generators
                .iter()
                .find(|g| g.name == name)
                .ok_or_else(|| GroupError::Parse(format!("unknown generator `{name}`")))?;
            acc = self.mul(acc, self.pow(g.element, power));
        }
        Ok(acc)
    }
}

fn render_word(letters: &[usize], gens: &[Generator]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        let name = &gens[letters[i]].name;
        if j - i == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of a mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

fn fnv1a(data: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in data {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn generator_names(count: usize) -> Vec<String> {
    (0..count).map(|i| if i < 26 { ((b'a' + i as u8) as char).to_string() } else { format!("g{i}") }).collect()
}

/// Closure of permutations of `0..degree` under composition. Permutations
/// compose left to right: `x*y` applies `x` first.
pub fn group_from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Group, GroupError> {
    for (i, p) in generators.iter().enumerate() {
        if p.len() != degree {
            return Err(GroupError::InvalidPermutation(format!(
                "generator {i} has length {} but degree is {degree}",
                p.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &v in p {
            if v >= degree || seen[v] {
                return Err(GroupError::InvalidPermutation(format!("generator {i} is not a bijection")));
            }
            seen[v] = true;
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in generators {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if !index.contains_key(&y) {
                if elements.len() == MAX_ORDER {
                    return Err(GroupError::ClosureTooLarge);
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut mul = vec![0u8; n * n];
    for (xi, x) in elements.iter().enumerate() {
        for (yi, y) in elements.iter().enumerate() {
            let xy: Vec<usize> = x.iter().map(|&i| y[i]).collect();
            mul[xi * n + yi] = index[&xy] as u8;
        }
    }
    let gens = generator_names(generators.len())
        .into_iter()
        .zip(generators)
        .map(|(name, g)| Generator { name, element: index[g] })
        .collect();
    Group::from_table(format!("perm{degree}"), n, mul, gens, None)
}

/// ⟨a,b | a^m = b^n = 1, b^{-1} a b = a^r⟩ with a^i b^j at index i + m*j.
pub fn group_semidirect_cyclic(m: u32, n: u32, r: i64) -> Result<Group, GroupError> {
    group_metacyclic(m, n, r, 0).map(|g| g.with_name(format!("C{m}:C{n}({r})")))
}

/// ⟨a,b | a^m = 1, b^n = a^s, b^{-1} a b = a^r⟩ with a^i b^j at index
/// i + m*j. With s = 0 this is the split extension; s ≠ 0 covers the
/// quaternion and dicyclic groups.
pub fn group_metacyclic(m: u32, n: u32, r: i64, s: i64) -> Result<Group, GroupError> {
    if m == 0 || n == 0 {
        return Err(GroupError::BadTwist { m, n, r });
    }
    let order = m as usize * n as usize;
    if order > MAX_ORDER {
        return Err(GroupError::ClosureTooLarge);
    }
    let mm = m as i64;
    let rr = r.rem_euclid(mm);
    let ss = s.rem_euclid(mm);
    if num_integer::gcd(rr, mm) != 1 && mm > 1 {
        return Err(GroupError::BadTwist { m, n, r });
    }
    let mut rn = 1 % mm;
    for _ in 0..n {
        rn = rn * rr % mm;
    }
    if rn != 1 % mm {
        return Err(GroupError::BadTwist { m, n, r });
    }
    if (ss * (rr - 1)).rem_euclid(mm) != 0 {
        return Err(GroupError::BadExtension { m, n, r, s });
    }
    // b^j a^k = a^{k r'^j} b^j with r' = r^{-1} mod m
    let r_inv = (0..mm).find(|&x| x * rr % mm == 1 % mm).unwrap_or(0);
    let mut twist = vec![1 % mm; n as usize];
    for j in 1..n as usize {
        twist[j] = twist[j - 1] * r_inv % mm;
    }
    let mut mul = vec![0u8; order * order];
    for j in 0..n as usize {
        for i in 0..m as usize {
            let x = i + m as usize * j;
            for l in 0..n as usize {
                for k in 0..m as usize {
                    let y = k + m as usize * l;
                    let mut exp_a = i as i64 + k as i64 * twist[j];
                    let mut exp_b = j + l;
                    if exp_b >= n as usize {
                        exp_b -= n as usize;
                        exp_a += ss;
                    }
                    let z = exp_a.rem_euclid(mm) as usize + m as usize * exp_b;
                    mul[x * order + y] = z as u8;
                }
            }
        }
    }
    let mut gens = Vec::new();
    if m > 1 {
        gens.push(Generator { name: "a".into(), element: 1 });
    }
    if n > 1 {
        gens.push(Generator { name: "b".into(), element: m as usize });
    }
    Group::from_table(format!("meta({m},{n},{r},{s})"), order, mul, gens, None)
}

/// Componentwise product; (a, b) sits at index a + |A|*b.
pub fn group_direct_product(a: &Group, b: &Group) -> Result<Group, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > MAX_ORDER {
        return Err(GroupError::ClosureTooLarge);
    }
    let mut mul = vec![0u8; n * n];
    for x in 0..n {
        let (xa, xb) = (x % na, x / na);
        for y in 0..n {
            let (ya, yb) = (y % na, y / na);
            mul[x * n + y] = (a.mul(xa, ya) + na * b.mul(xb, yb)) as u8;
        }
    }
    let elements: Vec<usize> = a
        .generators()
        .iter()
        .map(|g| g.element)
        .chain(b.generators().iter().map(|g| g.element * na))
        .filter(|&x| x != 0)
        .collect();
    let gens = generator_names(elements.len())
        .into_iter()
        .zip(elements)
        .map(|(name, element)| Generator { name, element })
        .collect();
    let labels = match (a.labels(), b.labels()) {
        (Some(la), Some(lb)) => Some((0..n).map(|x| format!("({},{})", la[x % na], lb[x / na])).collect()),
        _ => None,
    };
    Group::from_table(format!("{} x {}", a.name(), b.name()), n, mul, gens, labels)
}

/// SL(2,3): the 24 determinant-one 2x2 matrices over F_3. The identity is
/// index 0; the rest follow in lexicographic order of their row-major entries.
pub fn group_sl23() -> Group {
    let mut mats: Vec<[u8; 4]> = Vec::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                for d in 0..3u8 {
                    if (a * d + 3 * 3 - (b * c) % 3) % 3 == 1 && [a, b, c, d] != [1, 0, 0, 1] {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    mats.insert(0, [1, 0, 0, 1]);
    let n = mats.len();
    let index: HashMap<[u8; 4], usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut mul = vec![0u8; n * n];
    for (i, x) in mats.iter().enumerate() {
        for (j, y) in mats.iter().enumerate() {
            mul[i * n + j] = index[&mat_mul3(x, y)] as u8;
        }
    }
    let labels: Vec<String> = mats.iter().map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])).collect();
    let gens = vec![
        Generator { name: "a".into(), element: index[&[1, 1, 0, 1]] },
        Generator { name: "b".into(), element: index[&[0, 1, 2, 0]] },
    ];
    Group::from_table("SL(2,3)", n, mul, gens, Some(labels)).expect("SL(2,3) table is valid")
}

fn mat_mul3(x: &[u8; 4], y: &[u8; 4]) -> [u8; 4] {
    [
        (x[0] * y[0] + x[1] * y[2]) % 3,
        (x[0] * y[1] + x[1] * y[3]) % 3,
        (x[2] * y[0] + x[3] * y[2]) % 3,
        (x[2] * y[1] + x[3] * y[3]) % 3,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f20() -> Group {
        group_semidirect_cyclic(5, 4, 3).unwrap()
    }

    fn sorted_class_sizes(g: &Group) -> Vec<usize> {
        let mut s: Vec<usize> = g.conjugacy_classes().classes().iter().map(|c| c.len()).collect();
        s.sort();
        s
    }

    #[test]
    fn permutation_closure_builds_f20() {
        // a = (0 1 2 3 4), b = i -> 3i mod 5 = (1 3 4 2)
        let a = vec![1, 2, 3, 4, 0];
        let b = vec![0, 3, 1, 4, 2];
        let g = group_from_permutations(5, &[a, b]).unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(sorted_class_sizes(&g), vec![1, 4, 5, 5, 5]);
        let (ga, gb) = (g.generators()[0].element, g.generators()[1].element);
        assert_eq!(g.conjugate(ga, gb), g.pow(ga, 3));
    }

    #[test]
    fn trivial_and_order_two() {
        let g = group_from_permutations(3, &[]).unwrap();
        assert_eq!(g.order(), 1);
        let g = group_from_permutations(2, &[vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn invalid_permutation_rejected() {
        assert!(matches!(group_from_permutations(3, &[vec![0, 0, 1]]), Err(GroupError::InvalidPermutation(_))));
        assert!(matches!(group_from_permutations(3, &[vec![0, 1]]), Err(GroupError::InvalidPermutation(_))));
    }

    #[test]
    fn closure_cap() {
        // S_5 has 120 elements
        let r = group_from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]]);
        assert_eq!(r.unwrap_err(), GroupError::ClosureTooLarge);
    }

    #[test]
    fn semidirect_examples() {
        let g = f20();
        assert_eq!(g.order(), 20);
        assert_eq!(g.exponent(), 20);
        assert_eq!(sorted_class_sizes(&g), vec![1, 4, 5, 5, 5]);
        assert_eq!(g.element_order(5), 4);

        let h = group_semidirect_cyclic(7, 6, 3).unwrap();
        assert_eq!(h.order(), 42);
        assert_eq!(sorted_class_sizes(&h), vec![1, 6, 7, 7, 7, 7, 7]);

        let c = group_semidirect_cyclic(9, 1, 1).unwrap();
        assert_eq!(c.order(), 9);
        assert!(c.is_abelian());
        assert_eq!(c.exponent(), 9);
    }

    #[test]
    fn bad_twist() {
        assert!(group_semidirect_cyclic(5, 4, 2).is_ok());
        assert!(matches!(group_semidirect_cyclic(5, 3, 2), Err(GroupError::BadTwist { .. })));
        assert!(matches!(group_semidirect_cyclic(6, 2, 2), Err(GroupError::BadTwist { .. })));
    }

    #[test]
    fn quaternion_from_metacyclic() {
        let q8 = group_metacyclic(4, 2, 3, 2).unwrap();
        assert_eq!(q8.order(), 8);
        let involutions = (1..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(matches!(group_metacyclic(4, 2, 3, 1), Err(GroupError::BadExtension { .. })));
    }

    #[test]
    fn direct_products() {
        let c3 = group_semidirect_cyclic(3, 1, 1).unwrap();
        let s3 = group_semidirect_cyclic(3, 2, 2).unwrap();
        let g = group_direct_product(&c3, &s3).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.conjugacy_classes().len(), 9);

        let c1 = group_semidirect_cyclic(1, 1, 1).unwrap();
        let copy = group_direct_product(&c1, &s3).unwrap();
        assert_eq!(copy.table(), s3.table());

        let c2 = group_semidirect_cyclic(2, 1, 1).unwrap();
        let v4 = group_direct_product(&c2, &c2).unwrap();
        assert_eq!((1..4).filter(|&x| v4.element_order(x) == 2).count(), 3);

        let big = group_semidirect_cyclic(9, 1, 1).unwrap();
        assert_eq!(group_direct_product(&big, &big).unwrap_err(), GroupError::ClosureTooLarge);
    }

    #[test]
    fn sl23_structure() {
        let g = group_sl23();
        assert_eq!(g.order(), 24);
        assert_eq!(g.labels().unwrap()[0], "[[1,0],[0,1]]");
        assert_eq!(g.derived_subgroup().len(), 8);
        let u = g.element_by_label("[[1,1],[0,1]]").unwrap();
        assert_eq!(g.element_order(u), 3);
        // the derived subgroup is quaternion: a single involution
        let d = g.derived_subgroup();
        assert_eq!(d.iter().filter(|&&x| g.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn sl23_entries_brute_force() {
        // every determinant-one matrix appears exactly once
        let g = group_sl23();
        let mut count = 0;
        for a in 0..3i32 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        if (a * d - b * c).rem_euclid(3) == 1 {
                            count += 1;
                            assert!(g.element_by_label(&format!("[[{a},{b}],[{c},{d}]]")).is_some());
                        }
                    }
                }
            }
        }
        assert_eq!(count, 24);
    }

    #[test]
    fn element_orders_in_f42() {
        let h = group_semidirect_cyclic(7, 6, 3).unwrap();
        let (a, b) = (1, 7);
        assert_eq!(h.element_order(0), 1);
        assert_eq!(h.element_order(a), 7);
        assert_eq!(h.element_order(b), 6);
        // ab by repeated multiplication
        let ab = h.mul(a, b);
        let mut acc = ab;
        let mut t = 1;
        while acc != 0 {
            acc = h.mul(acc, ab);
            t += 1;
        }
        assert_eq!(h.element_order(ab), t);
        assert_eq!(t, 6);
    }

    #[test]
    fn derived_subgroups() {
        let g = f20();
        let d = g.derived_subgroup();
        assert_eq!(d, vec![0, 1, 2, 3, 4]);
        assert_eq!(g.order() / d.len(), 4);

        let c6 = group_semidirect_cyclic(6, 1, 1).unwrap();
        assert_eq!(c6.derived_subgroup(), vec![0]);

        let d8 = group_semidirect_cyclic(4, 2, 3).unwrap();
        let d = d8.derived_subgroup();
        assert_eq!(d, vec![0, 2]);
    }

    #[test]
    fn subgroup_generation() {
        let g = f20();
        let all: Vec<usize> = (1..20).collect();
        assert_eq!(g.subgroup_generated(&all).len(), 20);
        assert_eq!(g.subgroup_generated(&[]), vec![0]);
        let s: Vec<usize> = (1..20).filter(|&x| matches!(g.element_order(x), 2 | 5)).collect();
        assert_eq!(g.subgroup_generated(&s).len(), 10);
    }

    #[test]
    fn words_round_trip() {
        let g = f20();
        let words = g.words();
        for (x, w) in words.iter().enumerate() {
            assert_eq!(g.eval_word(w).unwrap(), x, "word {w}");
        }
        assert_eq!(g.eval_word("a^2*b").unwrap(), 2 + 5);
        assert_eq!(g.eval_word("b^-1").unwrap(), 15);
        assert!(g.eval_word("z").is_err());
    }

    #[test]
    fn invalid_table_rejected() {
        // not associative: a Latin square with identity 0 of order 5 that is not a group
        let t: Vec<u8> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(Group::from_table("bad", 5, t, vec![], None), Err(GroupError::InvalidTable(_))));
    }
}
