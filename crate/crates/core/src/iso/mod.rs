//! Graph isomorphism for graphs on at most 64 vertices.

mod brute;
mod canon;

use std::collections::HashMap;
use std::sync::Mutex;

pub use brute::{brute_force_isomorphic, BRUTE_FORCE_MAX};
pub use canon::{canonical_form, canonical_labeling, CanonicalForm};

use crate::graph::Graph;
use crate::spectra::char_poly_multimodular;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsoError {
    #[error("brute force limited to {BRUTE_FORCE_MAX} vertices (got {0})")]
    TooLarge(usize),
}

/// Degree sequence, then characteristic polynomial, then canonical forms.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    if char_poly_multimodular(a) != char_poly_multimodular(b) {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Canonical forms keyed by (group fingerprint, connection-set mask).
/// Concurrent callers may both compute a form; the first insert is kept.
#[derive(Debug, Default)]
pub struct CanonCache {
    map: Mutex<HashMap<(u64, u64), CanonicalForm>>,
}

impl CanonCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_compute(&self, key: (u64, u64), graph: impl FnOnce() -> Graph) -> CanonicalForm {
        if let Some(f) = self.map.lock().unwrap().get(&key) {
            return f.clone();
        }
        let form = canonical_form(&graph());
        self.map.lock().unwrap().entry(key).or_insert(form).clone()
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::char_poly_exact;

    #[test]
    fn cospectral_mates_are_separated() {
        // C4 ∪ K1 and the star K_{1,4} share x⁵ − 4x³.
        let c4k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(char_poly_exact(&c4k1), char_poly_exact(&star));
        assert!(!brute_force_isomorphic(&c4k1, &star).unwrap());
        assert!(!are_isomorphic(&c4k1, &star));
        assert!(are_isomorphic(&star, &star.relabel(&[4, 3, 2, 1, 0])));
    }

    #[test]
    fn cache_returns_first_value() {
        let cache = CanonCache::new();
        let a = cache.get_or_compute((1, 2), || Graph::cycle(5));
        let b = cache.get_or_compute((1, 2), || panic!("cached"));
        assert_eq!(a, b);
        assert_eq!(cache.len(), 1);
    }
}
