//! Canonical labelling by individualization–refinement.
//!
//! Colour refinement ranks each vertex by (its colour, number of neighbours
//! in every colour class) until the partition is stable. When it is not
//! discrete we branch on each vertex of the first largest non-singleton
//! cell, in index order. Every leaf yields a relabelled adjacency matrix;
//! the canonical form is the least one. Leaves that tie with the first or
//! the best leaf give graph automorphisms, which prune sibling branches in
//! the same orbit and allow jumping back up the tree.

use std::fmt;

use crate::graph::Graph;
use crate::group::bits;

/// Relabelled adjacency rows. Column j of a row is stored at bit 63 − j so
/// comparing rows as integers compares the bit strings lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Lowercase hex of the n² row-major bit string, zero-padded to a
    /// whole number of nibbles.
    pub fn hex(&self) -> String {
        let mut bitstring = Vec::with_capacity(self.n * self.n + 3);
        for &r in &self.rows {
            for j in 0..self.n {
                bitstring.push((r >> (63 - j)) & 1 == 1);
            }
        }
        while bitstring.len() % 4 != 0 {
            bitstring.push(false);
        }
        bitstring
            .chunks(4)
            .map(|c| {
                let v = c.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
                char::from_digit(v as u32, 16).unwrap()
            })
            .collect()
    }

    pub fn to_graph(&self) -> Graph {
        let rows =
            self.rows.iter().map(|&r| (0..self.n).fold(0u64, |acc, j| acc | ((r >> (63 - j)) & 1) << j)).collect();
        Graph::from_rows(rows).expect("canonical forms are simple graphs")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hex())
    }
}

/// Refines `colors` in place to the coarsest equitable refinement; colours
/// are re-ranked to 0..k in signature order.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    let mut k = colors.iter().max().map_or(0, |&m| m as usize + 1);
    let mut sig: Vec<(Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        let mut cells = vec![0u64; k];
        for (v, &c) in colors.iter().enumerate() {
            cells[c as usize] |= 1 << v;
        }
        sig.clear();
        for v in 0..n {
            let row = g.neighbors(v);
            let mut s = Vec::with_capacity(k + 1);
            s.push(colors[v]);
            s.extend(cells.iter().map(|&c| (row & c).count_ones()));
            sig.push((s, v));
        }
        sig.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && sig[i].0 != sig[i - 1].0 {
                rank += 1;
            }
            colors[sig[i].1] = rank;
        }
        let new_k = rank as usize + 1;
        if new_k == k || n == 0 {
            return;
        }
        k = new_k;
    }
}

/// Puts `v` into its own cell just ahead of the rest of its old cell.
fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let c = colors[v];
    let raw: Vec<u32> = colors.iter().enumerate().map(|(u, &cu)| 2 * cu + (cu == c && u != v) as u32).collect();
    let mut sorted = raw.clone();
    sorted.sort_unstable();
    sorted.dedup();
    raw.iter().map(|x| sorted.binary_search(x).unwrap() as u32).collect()
}

fn certificate(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut rows = vec![0u64; n];
    for v in 0..n {
        rows[perm[v]] = bits(g.neighbors(v)).fold(0u64, |acc, u| acc | 1 << (63 - perm[u]));
    }
    rows
}

struct Leaf {
    perm: Vec<usize>,
    cert: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
    nodes: usize,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

impl Search<'_> {
    /// Explores the subtree; `Some(d)` asks the caller to resume at depth d.
    fn visit(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        self.nodes += 1;
        let n = colors.len();
        let k = colors.iter().max().map_or(0, |&m| m as usize + 1);
        if k == n {
            return self.leaf(colors.iter().map(|&c| c as usize).collect(), path);
        }
        let mut sizes = vec![0usize; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..k).max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a))).unwrap() as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let depth = path.len();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &cell {
            if !tried.is_empty() && self.equivalent_to_tried(w, &tried, path) {
                continue;
            }
            tried.push(w);
            let mut child = individualize(&colors, w);
            refine(self.g, &mut child);
            path.push(w);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Whether w lies in the orbit of a tried vertex under the stored
    /// automorphisms that fix the current path pointwise.
    fn equivalent_to_tried(&self, w: usize, tried: &[usize], path: &[usize]) -> bool {
        let n = self.g.n();
        let mut uf: Vec<usize> = (0..n).collect();
        let mut any = false;
        for a in &self.autos {
            if path.iter().all(|&p| a[p] == p) {
                any = true;
                for v in 0..n {
                    let (x, y) = (find(&mut uf, v), find(&mut uf, a[v]));
                    if x != y {
                        uf[x] = y;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut uf, w);
        tried.iter().any(|&t| find(&mut uf, t) == rw)
    }

    fn leaf(&mut self, perm: Vec<usize>, path: &[usize]) -> Option<usize> {
        let cert = certificate(self.g, &perm);
        let Some(first) = &self.first else {
            let leaf = Leaf { perm, cert, path: path.to_vec() };
            self.best = Some(Leaf { perm: leaf.perm.clone(), cert: leaf.cert.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let inv = invert(&first.perm);
            self.autos.push(perm.iter().map(|&p| inv[p]).collect());
            return Some(common_prefix(path, &first.path));
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf { perm, cert, path: path.to_vec() });
                None
            }
            std::cmp::Ordering::Equal => {
                let inv = invert(&best.perm);
                self.autos.push(perm.iter().map(|&p| inv[p]).collect());
                Some(common_prefix(path, &best.path))
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

/// Canonical form together with the labelling that produces it
/// (vertex v ↦ `perm[v]`) and the number of search nodes visited.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>, usize) {
    let n = g.n();
    if n == 0 {
        return (CanonicalForm { n, rows: Vec::new() }, Vec::new(), 0);
    }
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    let mut search = Search { g, first: None, best: None, autos: Vec::new(), nodes: 0 };
    search.visit(colors, &mut Vec::new());
    let best = search.best.expect("search reaches a leaf");
    (CanonicalForm { n, rows: best.cert }, best.perm, search.nodes)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cycle_relabellings_agree() {
        let c5 = Graph::cycle(5);
        let other = c5.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&c5), canonical_form(&other));
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_ne!(canonical_form(&c6), canonical_form(&two_triangles));
    }

    #[test]
    fn labelling_reproduces_the_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = Graph::random(14, 0.3, &mut rng);
            let (form, perm, _) = canonical_labeling(&g);
            assert_eq!(form.to_graph(), g.relabel(&perm));
        }
    }

    #[test]
    fn random_relabellings() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = Graph::random(20, 0.5, &mut rng);
        let base = canonical_form(&g);
        let mut perm: Vec<usize> = (0..20).collect();
        for _ in 0..50 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm)), base);
        }
    }

    #[test]
    fn hex_rendering() {
        let k2 = Graph::complete(2);
        // 0110
        assert_eq!(canonical_form(&k2).hex(), "6");
        assert_eq!(canonical_form(&Graph::empty(3)).hex(), "000");
        assert_eq!(canonical_form(&Graph::empty(0)).hex(), "");
    }

    #[test]
    fn vertex_transitive_graphs_are_cheap() {
        let k = Graph::complete(40);
        let (_, _, nodes) = canonical_labeling(&k);
        assert!(nodes < 2000, "{nodes} nodes");
    }
}
