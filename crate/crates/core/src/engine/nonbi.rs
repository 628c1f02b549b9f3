use serde::{Deserialize, Serialize};

use super::bi::{scan_for_violation, BIViolation, ViolationReport};
use super::search::{Ctx, SizeCoverage};
use crate::chars::CharacterTable;
use crate::group::Group;
use crate::spectra::ConnectionSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessMethod {
    /// S = {h, h⁻¹}, T = {k, k⁻¹} with h ∉ G′, k ∈ G′ of equal order;
    /// `real` records whether every linear character is real on h.
    Pattern { h: usize, k: usize, real: bool },
    /// Found by scanning all inverse-closed sets by increasing size.
    Search,
}

#[derive(Debug, Clone)]
pub struct NonBiWitness {
    pub violation: BIViolation,
    pub method: WitnessMethod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonBiReport {
    pub group: String,
    pub method: WitnessMethod,
    #[serde(flatten)]
    pub violation: ViolationReport,
}

impl NonBiWitness {
    pub fn report(&self, g: &Group) -> NonBiReport {
        NonBiReport { group: g.name().to_string(), method: self.method.clone(), violation: self.violation.report(g) }
    }
}

#[derive(Debug, Clone)]
pub struct NonBiOutcome {
    pub witness: Option<NonBiWitness>,
    /// Sizes scanned by the fallback search (empty when the pattern hit).
    pub searched: Vec<SizeCoverage>,
}

impl NonBiOutcome {
    pub fn complete(&self) -> bool {
        self.witness.is_some() || self.searched.iter().all(|c| c.exhaustive)
    }
}

/// Two cyclic connection sets ⟨h⟩-style with h outside and k inside the
/// derived subgroup. Both graphs are disjoint unions of |G|/o cycles of
/// length o (matchings when o = 2), while every linear character is 1 on
/// k but not on h, so M_1 differs.
pub fn pattern_witness(g: &Group, table: &CharacterTable) -> Option<NonBiWitness> {
    let derived = g.derived_subgroup();
    let in_derived = |x: usize| derived.contains(&x);
    let linear = table.linear_characters();
    let real_on = |h: usize| linear.iter().all(|&i| table.value(i, h).is_real());
    let mut orders: Vec<u32> = g.element_orders().to_vec();
    orders.sort_unstable();
    orders.dedup();
    for o in orders.into_iter().filter(|&o| o > 1) {
        let Some(k) = (1..g.order()).find(|&x| in_derived(x) && g.element_order(x) == o) else { continue };
        let hs: Vec<usize> = (1..g.order()).filter(|&x| !in_derived(x) && g.element_order(x) == o).collect();
        let choice = hs.iter().find(|&&h| real_on(h)).map(|&h| (h, true)).or(hs.first().map(|&h| (h, false)));
        let Some((h, real)) = choice else { continue };
        let s = ConnectionSet::closed_under_inverse(g, &[h]).ok()?;
        let t = ConnectionSet::closed_under_inverse(g, &[k]).ok()?;
        if let Some(violation) = BIViolation::from_pair(g, table, s, t) {
            return Some(NonBiWitness { violation, method: WitnessMethod::Pattern { h, k, real } });
        }
    }
    None
}

/// The pattern first, then a search over all inverse-closed sets.
pub fn construct_non_bi_witness(g: &Group, table: &CharacterTable, budget: u64) -> NonBiOutcome {
    if let Some(w) = pattern_witness(g, table) {
        return NonBiOutcome { witness: Some(w), searched: Vec::new() };
    }
    let ctx = Ctx::new(g);
    let (searched, _, violation) = scan_for_violation(&ctx, table, 1..g.order(), false, budget, g.fingerprint());
    NonBiOutcome {
        witness: violation.map(|violation| NonBiWitness { violation, method: WitnessMethod::Search }),
        searched,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::character_table;
    use crate::cyclotomic::Cyclotomic;
    use crate::group::{group_semidirect_cyclic, GroupError};

    #[test]
    fn dihedral_eight() {
        let g = group_semidirect_cyclic(4, 2, 3).unwrap();
        let t = character_table(&g).unwrap();
        let w = pattern_witness(&g, &t).unwrap();
        assert_eq!(w.violation.nu, 1);
        let ints = |v: &[i64]| v.iter().map(|&x| Cyclotomic::from_int(1, x)).collect::<Vec<_>>();
        assert_eq!(w.violation.m_s.values, ints(&[1, -1]));
        assert_eq!(w.violation.m_t.values, ints(&[1]));
        let WitnessMethod::Pattern { h, k, real } = w.method else { panic!() };
        assert!(real && g.element_order(h) == 2 && k == g.pow(1, 2));
    }

    #[test]
    fn f20_has_none() -> Result<(), GroupError> {
        let g = group_semidirect_cyclic(5, 4, 3)?;
        let t = character_table(&g).unwrap();
        assert!(pattern_witness(&g, &t).is_none());
        let out = construct_non_bi_witness(&g, &t, 1 << 20);
        assert!(out.witness.is_none() && out.complete());
        Ok(())
    }
}
