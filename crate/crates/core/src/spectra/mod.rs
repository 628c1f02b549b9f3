//! Cayley graphs, their exact and floating-point spectra, and the identities
//! linking spectra to character sums.

pub mod babai;
mod cayley;
pub mod charpoly;
mod connection_set;
pub mod eigen;
pub mod structure;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use babai::{babai_cross_check, babai_power_sum_check, BabaiCheck, BabaiSummary};
pub use cayley::{build_cayley, cayley_graph, closed_walk_counts, CayleyGraph};
pub use charpoly::{char_poly_exact, char_poly_multimodular, CharPoly};
pub use connection_set::{parse_connection_set, render_connection_set, ConnectionSet};
pub use eigen::{eigenvalues_clustered, eigenvalues_float, eigenvalues_raw};
pub use structure::{classify_f20_spectrum, classify_f42_spectrum, classify_structure, StructureTag};

use crate::chars::CharacterTable;
use crate::group::Group;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("connection set is not inverse-closed (element {0})")]
    NotInverseClosed(usize),
    #[error("bad element: {0}")]
    BadElement(String),
    #[error("eigenvalue clusters {0} and {1} are too close to separate")]
    ClusterAmbiguity(f64, f64),
    #[error("spectrum structure violated: {0}")]
    StructureViolation(String),
    #[error("spectrum disagrees with character sums: {0}")]
    BabaiMismatch(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

/// Eigenvalue clusters of Cay(G, S), with the exact fallback.
pub fn spectrum_clusters(g: &Group, s: &ConnectionSet) -> Vec<(f64, usize)> {
    let graph = cayley_graph(g, s.mask());
    match eigen::cluster(&eigenvalues_raw(&graph)) {
        Ok(c) => c,
        Err(_) => eigenvalues_clustered(&graph, &char_poly_multimodular(&graph)),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub group: String,
    pub set: Vec<usize>,
    pub words: Vec<String>,
    pub connected: bool,
    /// det(xI − A), highest degree first, as decimal strings.
    pub char_poly: Vec<String>,
    /// (eigenvalue, multiplicity), descending.
    pub eigenvalues: Vec<(f64, usize)>,
    /// Σ_{s∈S} χ(s) for each linear character, exact.
    pub babai_m1: Vec<String>,
    pub structure_tag: Option<StructureTag>,
}

pub fn spectrum_report(g: &Group, table: &CharacterTable, s: &ConnectionSet) -> Result<SpectrumReport, SpectraError> {
    let graph = cayley_graph(g, s.mask());
    let cp = char_poly_multimodular(&graph);
    let raw = eigenvalues_raw(&graph);
    let clusters = eigen::cluster(&raw).unwrap_or_else(|_| eigen::cluster_exact(&raw, &cp));
    let summary = babai_cross_check(g, table, s, &raw)?;
    let structure_tag = classify_structure(g, s, &clusters).transpose()?;
    let words = g.words();
    Ok(SpectrumReport {
        group: g.name().to_string(),
        set: s.members(),
        words: s.members().iter().map(|&x| words[x].clone()).collect(),
        connected: graph.is_connected(),
        char_poly: charpoly::render(&cp),
        eigenvalues: clusters,
        babai_m1: summary.linear.iter().map(|(_, v)| v.to_string()).collect(),
        structure_tag,
    })
}
