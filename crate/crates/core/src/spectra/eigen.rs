use nalgebra::DMatrix;

use super::charpoly::{distinct_root_count, CharPoly};
use super::SpectraError;
use crate::graph::Graph;

/// Absolute tolerance for merging float eigenvalues into one cluster.
pub const CLUSTER_TOL: f64 = 1e-8;
/// Clusters closer than this are ambiguous.
pub const AMBIGUITY_GAP: f64 = 10.0 * CLUSTER_TOL;

/// All eigenvalues of the adjacency matrix, descending.
pub fn eigenvalues_raw(graph: &Graph) -> Vec<f64> {
    let n = graph.n();
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| graph.has_edge(i, j) as u8 as f64);
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Eigenvalues with multiplicities, descending. Values within
/// [`CLUSTER_TOL`] of their neighbour are merged; if two resulting clusters
/// are closer than [`AMBIGUITY_GAP`] the result is rejected.
pub fn eigenvalues_float(graph: &Graph) -> Result<Vec<(f64, usize)>, SpectraError> {
    cluster(&eigenvalues_raw(graph))
}

pub fn cluster(sorted_desc: &[f64]) -> Result<Vec<(f64, usize)>, SpectraError> {
    let mut groups: Vec<Vec<f64>> = Vec::new();
    for &v in sorted_desc {
        match groups.last_mut() {
            Some(g) if g.last().unwrap() - v <= CLUSTER_TOL => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    for w in groups.windows(2) {
        let gap = w[0].last().unwrap() - w[1][0];
        if gap < AMBIGUITY_GAP {
            return Err(SpectraError::ClusterAmbiguity(*w[0].last().unwrap(), w[1][0]));
        }
    }
    Ok(groups.into_iter().map(|g| (g.iter().sum::<f64>() / g.len() as f64, g.len())).collect())
}

/// Clusters with the number of distinct eigenvalues fixed exactly by the
/// square-free part of the characteristic polynomial; the sorted values
/// are split at the largest gaps.
pub fn cluster_exact(sorted_desc: &[f64], cp: &CharPoly) -> Vec<(f64, usize)> {
    let k = distinct_root_count(cp);
    if sorted_desc.is_empty() {
        return Vec::new();
    }
    let mut gaps: Vec<(f64, usize)> = sorted_desc.windows(2).enumerate().map(|(i, w)| (w[0] - w[1], i)).collect();
    gaps.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut cuts: Vec<usize> = gaps.iter().take(k.saturating_sub(1)).map(|g| g.1 + 1).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(k);
    let mut start = 0;
    for end in cuts.into_iter().chain(std::iter::once(sorted_desc.len())) {
        let g = &sorted_desc[start..end];
        out.push((g.iter().sum::<f64>() / g.len() as f64, g.len()));
        start = end;
    }
    out
}

/// Float clusters, falling back to the exact split on ambiguity.
pub fn eigenvalues_clustered(graph: &Graph, cp: &CharPoly) -> Vec<(f64, usize)> {
    let raw = eigenvalues_raw(graph);
    cluster(&raw).unwrap_or_else(|_| cluster_exact(&raw, cp))
}
