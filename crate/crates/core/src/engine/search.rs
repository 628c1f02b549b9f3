//! Shared search core: enumerate (or sample) one size of connection sets,
//! reduce to Aut(G)-orbit representatives, bucket by closed-walk counts
//! and canonicalise only where a bucket could hold a violation.

use std::collections::{BTreeSet, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{order_key, OrbitReducer, Units};
use crate::group::{automorphism_group, AutomorphismSet, Group};
use crate::iso::{CanonCache, CanonicalForm};
use crate::spectra::{cayley_graph, closed_walk_counts};

/// Default cap on enumerated sets per size before switching to sampling.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCoverage {
    pub size: usize,
    /// Inverse-closed subsets of G* of this size.
    pub total: u64,
    /// Sets enumerated or sampled.
    pub examined: u64,
    /// Aut(G)-orbit representatives kept after filtering.
    pub representatives: usize,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Closed-walk buckets formed.
    pub buckets: usize,
    /// Buckets that needed canonical forms.
    pub buckets_examined: usize,
    pub canonical_forms: usize,
}

impl SearchStats {
    pub(crate) fn absorb(&mut self, other: &SearchStats) {
        self.buckets += other.buckets;
        self.buckets_examined += other.buckets_examined;
        self.canonical_forms += other.canonical_forms;
    }
}

pub(crate) struct Ctx<'a> {
    pub g: &'a Group,
    pub auts: AutomorphismSet,
    pub units: Units,
    reducer: OrbitReducer,
    cache: CanonCache,
}

impl<'a> Ctx<'a> {
    pub fn new(g: &'a Group) -> Self {
        let auts = automorphism_group(g);
        let units = Units::of(g);
        let reducer = OrbitReducer::new(&units, &auts);
        Ctx { g, auts, units, reducer, cache: CanonCache::new() }
    }

    /// Orbit representatives of one size as element masks, in
    /// enumeration order.
    pub fn representatives(
        &self,
        size: usize,
        generating_only: bool,
        budget: u64,
        seed: u64,
    ) -> (Vec<u64>, SizeCoverage) {
        let total = self.units.count(size);
        let exhaustive = total <= budget;
        let unit_reps: Vec<u64> = if exhaustive {
            self.units.enumerate(size).into_par_iter().filter(|&m| self.reducer.is_rep(m)).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (size as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let draws: Vec<u64> = (0..budget).map(|_| self.units.sample(size, &mut rng)).collect();
            let reps: BTreeSet<(u64, u64)> = draws
                .into_par_iter()
                .map(|m| self.reducer.rep(m))
                .map(|r| (order_key(r), r))
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            reps.into_iter().map(|(_, r)| r).collect()
        };
        let reps: Vec<u64> = unit_reps
            .into_par_iter()
            .map(|u| self.units.to_elements(u))
            .filter(|&m| !generating_only || self.g.generates(m))
            .collect();
        let coverage = SizeCoverage {
            size,
            total,
            examined: if exhaustive { total } else { budget },
            representatives: reps.len(),
            exhaustive,
        };
        (reps, coverage)
    }

    /// Groups of indices into `reps` with equal closed-walk counts of every
    /// length up to |G| (equivalently, cospectral graphs), ordered by first
    /// member.
    pub fn walk_buckets(&self, reps: &[u64]) -> Vec<Vec<usize>> {
        let n = self.g.order();
        let walks: Vec<Vec<u64>> = reps.par_iter().map(|&m| closed_walk_counts(self.g, m, n)).collect();
        let mut index: HashMap<&[u64], usize> = HashMap::new();
        let mut buckets: Vec<Vec<usize>> = Vec::new();
        for (i, w) in walks.iter().enumerate() {
            let b = *index.entry(w.as_slice()).or_insert_with(|| {
                buckets.push(Vec::new());
                buckets.len() - 1
            });
            buckets[b].push(i);
        }
        buckets
    }

    pub fn canonical(&self, mask: u64) -> CanonicalForm {
        self.cache.get_or_compute((self.g.fingerprint(), mask), || cayley_graph(self.g, mask))
    }

    /// Canonical forms for the given indices, then the isomorphism classes
    /// within them (each sorted, ordered by first member).
    pub fn iso_classes(&self, reps: &[u64], idx: &[usize]) -> Vec<(CanonicalForm, Vec<usize>)> {
        let forms: Vec<CanonicalForm> = idx.par_iter().map(|&i| self.canonical(reps[i])).collect();
        let mut classes: Vec<(CanonicalForm, Vec<usize>)> = Vec::new();
        let mut index: HashMap<&CanonicalForm, usize> = HashMap::new();
        for (f, &i) in forms.iter().zip(idx) {
            match index.get(f) {
                Some(&c) => classes[c].1.push(i),
                None => {
                    index.insert(f, classes.len());
                    classes.push((f.clone(), vec![i]));
                }
            }
        }
        classes
    }

    /// Earliest pair (S, T) of isomorphic representatives with different
    /// labels, where `label` is None for "every pair counts".
    pub fn first_conflict(
        &self,
        reps: &[u64],
        labels: Option<&[usize]>,
    ) -> (Option<(usize, usize, CanonicalForm)>, SearchStats) {
        let buckets = self.walk_buckets(reps);
        let mut stats = SearchStats { buckets: buckets.len(), ..Default::default() };
        let differs = |a: usize, b: usize| a != b && labels.is_none_or(|l| l[a] != l[b]);
        let mut best: Option<(usize, usize, CanonicalForm)> = None;
        for bucket in &buckets {
            if bucket.len() < 2 || !bucket.iter().any(|&i| differs(bucket[0], i)) {
                continue;
            }
            if best.as_ref().is_some_and(|b| b.0 < bucket[0]) {
                continue;
            }
            stats.buckets_examined += 1;
            stats.canonical_forms += bucket.len();
            for (form, class) in self.iso_classes(reps, bucket) {
                let s = class[0];
                if let Some(&t) = class.iter().find(|&&t| differs(s, t)) {
                    if best.as_ref().is_none_or(|b| (s, t) < (b.0, b.1)) {
                        best = Some((s, t, form));
                    }
                }
            }
        }
        (best, stats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_semidirect_cyclic;

    #[test]
    fn every_walk_bucket_is_cospectral() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let ctx = Ctx::new(&g);
        let (reps, cov) = ctx.representatives(8, false, DEFAULT_BUDGET, 0);
        assert!(cov.exhaustive);
        for bucket in ctx.walk_buckets(&reps) {
            let cp = crate::spectra::char_poly_multimodular(&cayley_graph(&g, reps[bucket[0]]));
            for &i in &bucket[1..] {
                assert_eq!(crate::spectra::char_poly_multimodular(&cayley_graph(&g, reps[i])), cp);
            }
        }
    }

    #[test]
    fn sampling_kicks_in_over_budget() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let ctx = Ctx::new(&g);
        let (reps, cov) = ctx.representatives(10, false, 50, 7);
        assert!(!cov.exhaustive);
        assert_eq!(cov.examined, 50);
        assert!(reps
            .windows(2)
            .all(|w| order_key(ctx.units.from_elements(w[0])) < order_key(ctx.units.from_elements(w[1]))));
    }
}
