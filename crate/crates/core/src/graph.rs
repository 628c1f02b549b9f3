//! Simple undirected graphs on at most 64 vertices, one `u64` row per vertex.

use rand::Rng;

use crate::group::bits;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "graphs are limited to 64 vertices");
        Graph { n, rows: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.rows[v] = full(n) & !(1 << v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adjacency rows must be symmetric with an empty diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Option<Self> {
        let n = rows.len();
        if n > 64 {
            return None;
        }
        for (u, &r) in rows.iter().enumerate() {
            if r & !full(n) != 0 || r >> u & 1 == 1 {
                return None;
            }
            if bits(r).any(|v| rows[v] >> u & 1 == 0) {
                return None;
            }
        }
        Some(Graph { n, rows })
    }

    /// Erdős–Rényi G(n, p).
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Vertex v becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            rows[perm[u]] = bits(self.rows[u]).fold(0, |acc, v| acc | 1 << perm[v]);
        }
        Graph { n: self.n, rows }
    }

    pub fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier = 1u64 << s;
            seen |= frontier;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !seen;
                seen |= frontier;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_count() == 1
    }

    pub fn adjacency_i64(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect()).collect()
    }
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basic_shapes() {
        let k = Graph::complete(5);
        assert_eq!(k.edge_count(), 10);
        assert_eq!(k.degree_sequence(), vec![4; 5]);
        let c = Graph::cycle(6);
        assert!(c.is_connected());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(two_triangles.component_count(), 2);
        assert_eq!(Graph::empty(4).component_count(), 4);
    }

    #[test]
    fn relabel_preserves_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = Graph::random(12, 0.4, &mut rng);
        let perm: Vec<usize> = (0..12).map(|i| (i * 5) % 12).collect();
        let h = g.relabel(&perm);
        assert_eq!(g.degree_sequence(), h.degree_sequence());
        for u in 0..12 {
            for v in 0..12 {
                assert_eq!(g.has_edge(u, v), h.has_edge(perm[u], perm[v]));
            }
        }
        assert!(Graph::from_rows(h.rows().to_vec()).is_some());
        assert!(Graph::from_rows(vec![0b10, 0]).is_none());
    }
}
