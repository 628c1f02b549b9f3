use super::IsoError;
use crate::graph::Graph;

/// Largest vertex count the exhaustive check accepts.
pub const BRUTE_FORCE_MAX: usize = 8;

/// Tries every vertex bijection (Heap's algorithm).
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> Result<bool, IsoError> {
    let n = a.n();
    if n > BRUTE_FORCE_MAX || b.n() > BRUTE_FORCE_MAX {
        return Err(IsoError::TooLarge(n.max(b.n())));
    }
    if n != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    if a.relabel(&perm) == *b {
        return Ok(true);
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if a.relabel(&perm) == *b {
                return Ok(true);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(brute_force_isomorphic(&Graph::empty(4), &Graph::empty(4)).unwrap());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(!brute_force_isomorphic(&Graph::complete(3), &path).unwrap());
        let path2 = Graph::from_edges(3, &[(0, 2), (2, 1)]);
        assert!(brute_force_isomorphic(&path, &path2).unwrap());
        assert!(matches!(brute_force_isomorphic(&Graph::empty(9), &Graph::empty(9)), Err(IsoError::TooLarge(9))));
    }
}
