//! Decision procedures over connection sets: character-sum sets, the
//! whole-group BI check, CI witness search and non-BI witnesses.

mod bi;
mod ci;
mod enumerate;
mod msets;
mod nonbi;
mod profile;
mod search;

pub use bi::{bi_check_group, bi_sizes, BIViolation, BiConfig, BiMode, BiReport, BiReportJson, ViolationReport};
pub use ci::{ci_check_pair, find_non_ci_witness, replay_ci_witness, CIWitness, CiSearch};
pub use enumerate::{enumerate_connection_sets, order_key, OrbitReducer, Units};
pub use msets::{
    char_sum_multiset, char_sum_set, complement_set, m_profiles_equal, m_profiles_equal_multiset, render_exact,
    CharSumSet, MProfile, RenderedSet,
};
pub use nonbi::{construct_non_bi_witness, pattern_witness, NonBiOutcome, NonBiReport, NonBiWitness, WitnessMethod};
pub use profile::{
    f42_matrix, f42_transfer_matrix, recover_order_profile_f20, recover_order_profile_f42, solve, Assignment,
};
pub use search::{SearchStats, SizeCoverage, DEFAULT_BUDGET};

use thiserror::Error;

use crate::spectra::SpectraError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("no irreducible character of degree {0}")]
    NoSuchDegree(u32),
    #[error("inconsistent profile: {0}")]
    Inconsistent(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}
