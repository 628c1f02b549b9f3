use serde::{Deserialize, Serialize};

use super::search::{Ctx, SearchStats, SizeCoverage};
use super::EngineError;
use crate::group::{AutomorphismSet, Group};
use crate::iso::are_isomorphic;
use crate::spectra::{cayley_graph, ConnectionSet};

/// Whether some α in `auts` maps S onto T setwise.
pub fn ci_check_pair(auts: &AutomorphismSet, s: &ConnectionSet, t: &ConnectionSet) -> bool {
    s.len() == t.len() && (0..auts.len()).any(|k| auts.apply_mask(k, s.mask()) == t.mask())
}

/// Connection sets with isomorphic Cayley graphs that no automorphism of
/// the group relates; `checked` automorphisms were all tried.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CIWitness {
    pub group: String,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub s_words: Vec<String>,
    pub t_words: Vec<String>,
    pub checked: usize,
    pub canonical_form: String,
}

impl CIWitness {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self, EngineError> {
        serde_json::from_str(text).map_err(|e| EngineError::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CiSearch {
    pub group: String,
    pub sizes: Vec<SizeCoverage>,
    pub stats: SearchStats,
    pub automorphisms: usize,
    pub witness: Option<CIWitness>,
}

impl CiSearch {
    /// A witness is conclusive; otherwise only an exhaustive scan is.
    pub fn complete(&self) -> bool {
        self.witness.is_some() || self.sizes.iter().all(|c| c.exhaustive)
    }
}

/// Scans all inverse-closed sets by increasing size for two Aut(G)-orbit
/// representatives with isomorphic Cayley graphs.
pub fn find_non_ci_witness(g: &Group, budget: u64) -> CiSearch {
    let ctx = Ctx::new(g);
    let mut sizes = Vec::new();
    let mut stats = SearchStats::default();
    let mut witness = None;
    for size in 1..g.order() {
        let (reps, cov) = ctx.representatives(size, false, budget, g.fingerprint());
        sizes.push(cov);
        let (found, st) = ctx.first_conflict(&reps, None);
        stats.absorb(&st);
        if let Some((a, b, form)) = found {
            let s = ConnectionSet::from_mask(g, reps[a]).expect("valid");
            let t = ConnectionSet::from_mask(g, reps[b]).expect("valid");
            assert!(!ci_check_pair(&ctx.auts, &s, &t), "orbit representatives are never related");
            witness = Some(CIWitness {
                group: g.name().to_string(),
                s_words: s.members().iter().map(|&x| g.word(x)).collect(),
                t_words: t.members().iter().map(|&x| g.word(x)).collect(),
                s: s.members(),
                t: t.members(),
                checked: ctx.auts.len(),
                canonical_form: form.hex(),
            });
            break;
        }
    }
    CiSearch { group: g.name().to_string(), sizes, stats, automorphisms: ctx.auts.len(), witness }
}

/// Re-derives a witness verdict from scratch: true when the graphs are
/// isomorphic and a full automorphism scan finds no α with α(S) = T.
pub fn replay_ci_witness(g: &Group, auts: &AutomorphismSet, w: &CIWitness) -> Result<bool, EngineError> {
    let s = ConnectionSet::new(g, &w.s)?;
    let t = ConnectionSet::new(g, &w.t)?;
    let iso = are_isomorphic(&cayley_graph(g, s.mask()), &cayley_graph(g, t.mask()));
    Ok(iso && !ci_check_pair(auts, &s, &t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{automorphism_group, group_semidirect_cyclic};

    #[test]
    fn cyclic_five_has_no_witness() {
        let g = group_semidirect_cyclic(5, 1, 1).unwrap();
        let r = find_non_ci_witness(&g, 1 << 20);
        assert!(r.witness.is_none() && r.complete());
    }

    #[test]
    fn automorphic_images_are_related() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let auts = automorphism_group(&g);
        let s = ConnectionSet::closed_under_inverse(&g, &[1, 5]).unwrap();
        for map in auts.maps() {
            assert!(ci_check_pair(&auts, &s, &s.image(&g, map)));
        }
        let t = ConnectionSet::closed_under_inverse(&g, &[1]).unwrap();
        assert!(!ci_check_pair(&auts, &s, &t));
    }

    #[test]
    fn dihedral_eight_witness_replays() {
        let g = group_semidirect_cyclic(4, 2, 3).unwrap();
        let auts = automorphism_group(&g);
        let r = find_non_ci_witness(&g, 1 << 20);
        let w = r.witness.expect("D8 is not CI");
        let back = CIWitness::from_json(&w.to_json()).unwrap();
        assert_eq!(back, w);
        assert!(replay_ci_witness(&g, &auts, &back).unwrap());
    }
}
