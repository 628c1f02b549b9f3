use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::msets::{CharSumSet, MProfile, ProfileInterner, RenderedSet};
use super::search::{Ctx, SearchStats, SizeCoverage, DEFAULT_BUDGET};
use super::EngineError;
use crate::chars::CharacterTable;
use crate::group::Group;
use crate::iso::{are_isomorphic, CanonicalForm};
use crate::spectra::{cayley_graph, ConnectionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BiMode {
    /// Generating sets of sizes ⌈|G|/2⌉−1 … |G|−1; the rest follow by
    /// complementation.
    Reduced,
    /// Generating sets of every size 1 … |G|−1.
    Full,
}

impl fmt::Display for BiMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BiMode::Reduced => "reduced",
            BiMode::Full => "full",
        })
    }
}

impl FromStr for BiMode {
    type Err = EngineError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "reduced" => Ok(BiMode::Reduced),
            "full" => Ok(BiMode::Full),
            other => Err(EngineError::NotApplicable(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BiConfig {
    pub mode: BiMode,
    /// Sets enumerated per size before falling back to sampling.
    pub budget: u64,
    pub seed: u64,
}

impl Default for BiConfig {
    fn default() -> Self {
        BiConfig { mode: BiMode::Reduced, budget: DEFAULT_BUDGET, seed: 0x5eed }
    }
}

/// Two connection sets with isomorphic Cayley graphs whose M-profiles
/// differ, first at degree `nu`.
#[derive(Debug, Clone)]
pub struct BIViolation {
    pub s: ConnectionSet,
    pub t: ConnectionSet,
    pub nu: u32,
    pub m_s: CharSumSet,
    pub m_t: CharSumSet,
    pub canonical_form: CanonicalForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub s_words: Vec<String>,
    pub t_words: Vec<String>,
    pub nu: u32,
    pub m_s: RenderedSet,
    pub m_t: RenderedSet,
    pub canonical_form: String,
}

impl BIViolation {
    /// Builds and verifies a violation from two sets: the graphs must be
    /// isomorphic and the profiles must differ.
    pub fn from_pair(g: &Group, table: &CharacterTable, s: ConnectionSet, t: ConnectionSet) -> Option<Self> {
        let (ps, pt) = (MProfile::of(table, &s), MProfile::of(table, &t));
        let nu = ps.first_difference(&pt)?;
        let (gs, gt) = (cayley_graph(g, s.mask()), cayley_graph(g, t.mask()));
        if !are_isomorphic(&gs, &gt) {
            return None;
        }
        let canonical_form = crate::iso::canonical_form(&gs);
        Some(BIViolation { nu, m_s: ps.sets[&nu].clone(), m_t: pt.sets[&nu].clone(), s, t, canonical_form })
    }

    pub fn report(&self, g: &Group) -> ViolationReport {
        ViolationReport {
            s: self.s.members(),
            t: self.t.members(),
            s_words: self.s.members().iter().map(|&x| g.word(x)).collect(),
            t_words: self.t.members().iter().map(|&x| g.word(x)).collect(),
            nu: self.nu,
            m_s: (&self.m_s).into(),
            m_t: (&self.m_t).into(),
            canonical_form: self.canonical_form.hex(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BiReport {
    pub group: String,
    pub mode: BiMode,
    pub sizes: Vec<SizeCoverage>,
    pub stats: SearchStats,
    pub violation: Option<BIViolation>,
}

impl BiReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    /// A violation is conclusive; a pass only when every size was
    /// enumerated exhaustively.
    pub fn complete(&self) -> bool {
        self.violation.is_some() || self.sizes.iter().all(|c| c.exhaustive)
    }

    pub fn to_json(&self, g: &Group) -> BiReportJson {
        BiReportJson {
            group: self.group.clone(),
            mode: self.mode,
            sizes: self.sizes.clone(),
            buckets: self.stats.buckets,
            buckets_examined: self.stats.buckets_examined,
            canonical_forms: self.stats.canonical_forms,
            verdict: if self.passed() { "pass".into() } else { "violation".into() },
            complete: self.complete(),
            violation: self.violation.as_ref().map(|v| v.report(g)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiReportJson {
    pub group: String,
    pub mode: BiMode,
    pub sizes: Vec<SizeCoverage>,
    pub buckets: usize,
    pub buckets_examined: usize,
    pub canonical_forms: usize,
    pub verdict: String,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violation: Option<ViolationReport>,
}

/// Scans sizes in increasing order for an isomorphic pair with different
/// M-profiles; stops at the first size that has one.
pub(crate) fn scan_for_violation(
    ctx: &Ctx,
    table: &CharacterTable,
    sizes: impl IntoIterator<Item = usize>,
    generating_only: bool,
    budget: u64,
    seed: u64,
) -> (Vec<SizeCoverage>, SearchStats, Option<BIViolation>) {
    let g = ctx.g;
    let mut interner = ProfileInterner::new(table);
    let mut coverage = Vec::new();
    let mut stats = SearchStats::default();
    for size in sizes {
        let (reps, cov) = ctx.representatives(size, generating_only, budget, seed);
        coverage.push(cov);
        let ids: Vec<usize> = reps
            .iter()
            .map(|&m| {
                let mut p = vec![0u8; table.num_classes()];
                crate::group::bits(m).for_each(|x| p[g.class_of(x)] += 1);
                interner.id(&p)
            })
            .collect();
        let (found, st) = ctx.first_conflict(&reps, Some(&ids));
        stats.absorb(&st);
        if let Some((a, b, form)) = found {
            let (ps, pt) = (interner.get(ids[a]), interner.get(ids[b]));
            let nu = ps.first_difference(pt).expect("labels differ");
            let violation = BIViolation {
                s: ConnectionSet::from_mask(g, reps[a]).expect("valid"),
                t: ConnectionSet::from_mask(g, reps[b]).expect("valid"),
                nu,
                m_s: ps.sets[&nu].clone(),
                m_t: pt.sets[&nu].clone(),
                canonical_form: form,
            };
            return (coverage, stats, Some(violation));
        }
    }
    (coverage, stats, None)
}

pub fn bi_sizes(order: usize, mode: BiMode) -> std::ops::RangeInclusive<usize> {
    let top = order.saturating_sub(1);
    match mode {
        BiMode::Reduced => (order.div_ceil(2).saturating_sub(1)).max(1)..=top,
        BiMode::Full => 1..=top,
    }
}

/// Whole-group BI check over generating connection sets.
pub fn bi_check_group(g: &Group, table: &CharacterTable, cfg: &BiConfig) -> BiReport {
    let ctx = Ctx::new(g);
    let (sizes, stats, violation) =
        scan_for_violation(&ctx, table, bi_sizes(g.order(), cfg.mode), true, cfg.budget, cfg.seed ^ g.fingerprint());
    BiReport { group: g.name().to_string(), mode: cfg.mode, sizes, stats, violation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::character_table;
    use crate::group::{group_semidirect_cyclic, group_sl23};

    #[test]
    fn size_ranges() {
        assert_eq!(bi_sizes(20, BiMode::Reduced), 9..=19);
        assert_eq!(bi_sizes(21, BiMode::Reduced), 10..=20);
        assert_eq!(bi_sizes(6, BiMode::Full), 1..=5);
    }

    #[test]
    fn cyclic_and_s3_pass() {
        for g in [group_semidirect_cyclic(6, 1, 1).unwrap(), group_semidirect_cyclic(3, 2, 2).unwrap()] {
            let t = character_table(&g).unwrap();
            let r = bi_check_group(&g, &t, &BiConfig { mode: BiMode::Full, ..Default::default() });
            assert!(r.passed() && r.complete());
        }
    }

    #[test]
    fn sl23_fails() {
        let g = group_sl23();
        let t = character_table(&g).unwrap();
        let r = bi_check_group(&g, &t, &BiConfig::default());
        let v = r.violation.expect("SL(2,3) is not BI");
        assert_ne!(v.m_s, v.m_t);
        assert!(are_isomorphic(&cayley_graph(&g, v.s.mask()), &cayley_graph(&g, v.t.mask())));
        assert!(BIViolation::from_pair(&g, &t, v.s.clone(), v.t.clone()).is_some());
    }
}
