use super::ConnectionSet;
use crate::graph::Graph;
use crate::group::{bits, Group};

/// Cay(G, S): x ~ y iff x⁻¹y ∈ S.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub set: ConnectionSet,
    pub graph: Graph,
}

pub fn build_cayley(g: &Group, s: &ConnectionSet) -> CayleyGraph {
    CayleyGraph { set: s.clone(), graph: cayley_graph(g, s.mask()) }
}

/// The neighbours of x are x·s for s ∈ S.
pub fn cayley_graph(g: &Group, mask: u64) -> Graph {
    let n = g.order();
    let rows = (0..n).map(|x| bits(mask).fold(0u64, |acc, s| acc | 1 << g.mul(x, s))).collect();
    Graph::from_rows(rows).expect("inverse-closed identity-free sets give simple graphs")
}

/// Closed walks at the identity of each length 1..=len, i.e. the number of
/// t-tuples from S with product 1, in wrapping 64-bit arithmetic. Since the
/// graph is vertex-transitive these are tr(A^t)/|G|, so equal spectra give
/// equal vectors.
pub fn closed_walk_counts(g: &Group, mask: u64, len: usize) -> Vec<u64> {
    let n = g.order();
    let members: Vec<usize> = bits(mask).collect();
    let mut cur = vec![0u64; n];
    cur[0] = 1;
    let mut next = vec![0u64; n];
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        next.iter_mut().for_each(|v| *v = 0);
        for x in 0..n {
            let c = cur[x];
            if c == 0 {
                continue;
            }
            let row = &g.table()[x * n..(x + 1) * n];
            for &s in &members {
                let y = row[s] as usize;
                next[y] = next[y].wrapping_add(c);
            }
        }
        std::mem::swap(&mut cur, &mut next);
        out.push(cur[0]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_semidirect_cyclic;
    use crate::spectra::charpoly::char_poly_multimodular;

    #[test]
    fn basic_cayley_graphs() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let full = build_cayley(&g, &ConnectionSet::full(&g));
        assert_eq!(full.graph, Graph::complete(20));

        let c7 = group_semidirect_cyclic(7, 1, 1).unwrap();
        let s = ConnectionSet::new(&c7, &[1, 6]).unwrap();
        assert_eq!(char_poly_multimodular(&build_cayley(&c7, &s).graph), char_poly_multimodular(&Graph::cycle(7)));

        let s = ConnectionSet::closed_under_inverse(&g, &[5, 1]).unwrap();
        let cg = build_cayley(&g, &s);
        assert!(cg.graph.is_connected());
        assert_eq!(cg.graph.degree_sequence(), vec![4; 20]);
        for x in 0..20 {
            for y in 0..20 {
                assert_eq!(cg.graph.has_edge(x, y), s.contains(g.mul(g.inv(x), y)));
            }
        }
    }

    #[test]
    fn connectivity_matches_generation() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        for mask in [0b10u64 | 1 << 4, 1 << 10, 1 << 5 | 1 << 15, (1 << 5 | 1 << 15) | 0b10 | 1 << 4] {
            let s = ConnectionSet::from_mask(&g, mask).unwrap();
            assert_eq!(build_cayley(&g, &s).graph.is_connected(), s.generates(&g));
        }
    }

    #[test]
    fn walks_count_trace_powers() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let s = ConnectionSet::closed_under_inverse(&g, &[5, 1, 10]).unwrap();
        let w = closed_walk_counts(&g, s.mask(), 3);
        assert_eq!(w[0], 0);
        assert_eq!(w[1], s.len() as u64);
        let a = build_cayley(&g, &s).graph;
        let tr3: usize = (0..20)
            .map(|x| {
                (0..20)
                    .filter(|&y| a.has_edge(x, y))
                    .map(|y| (a.neighbors(y) & a.neighbors(x)).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum();
        assert_eq!(w[2] as usize * 20, tr3);
    }
}
