//! The sets M_ν^S = { Σ_{s∈S} χ(s) : χ irreducible of degree ν }.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::EngineError;
use crate::chars::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::group::Group;
use crate::spectra::ConnectionSet;

/// Deduplicated character sums of one degree, in a canonical order
/// (descending real part, then exact coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSumSet {
    pub degree: u32,
    pub values: Vec<Cyclotomic>,
}

type ValueKey = (u32, Vec<BigRational>);

impl CharSumSet {
    fn from_values(degree: u32, mut values: Vec<Cyclotomic>, dedup: bool) -> Self {
        values.sort_by(|a, b| b.to_complex().re.total_cmp(&a.to_complex().re).then_with(|| a.key().cmp(&b.key())));
        if dedup {
            values.dedup();
        }
        CharSumSet { degree, values }
    }

    pub fn contains(&self, v: &Cyclotomic) -> bool {
        self.values.contains(v)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_real(&self) -> Option<f64> {
        self.values.iter().map(|v| v.to_complex().re).max_by(f64::total_cmp)
    }

    /// Values negated, as a new set.
    pub fn negated(&self) -> Self {
        Self::from_values(self.degree, self.values.iter().map(|v| -v).collect(), true)
    }

    pub fn rendered(&self) -> Vec<String> {
        self.values.iter().map(render_exact).collect()
    }

    fn key(&self) -> Vec<ValueKey> {
        self.values.iter().map(Cyclotomic::key).collect()
    }
}

/// Integers and fractions as such; anything irrational in the exact
/// power-basis notation.
pub fn render_exact(v: &Cyclotomic) -> String {
    match v.to_rational() {
        Some(q) if q.is_integer() => q.numer().to_string(),
        Some(q) => q.to_string(),
        None => v.to_string(),
    }
}

fn degree_rows(table: &CharacterTable, nu: u32) -> Result<Vec<usize>, EngineError> {
    let rows: Vec<usize> = (0..table.num_classes()).filter(|&i| table.degrees()[i] == nu).collect();
    if rows.is_empty() {
        return Err(EngineError::NoSuchDegree(nu));
    }
    Ok(rows)
}

fn sums_from_profile(
    table: &CharacterTable,
    profile: &[usize],
    nu: u32,
    dedup: bool,
) -> Result<CharSumSet, EngineError> {
    let values = degree_rows(table, nu)?.into_iter().map(|i| table.class_sum(i, profile)).collect();
    Ok(CharSumSet::from_values(nu, values, dedup))
}

pub fn char_sum_set(table: &CharacterTable, s: &ConnectionSet, nu: u32) -> Result<CharSumSet, EngineError> {
    sums_from_profile(table, s.class_profile(), nu, true)
}

/// Same sums without deduplication; only for sensitivity comparisons.
pub fn char_sum_multiset(table: &CharacterTable, s: &ConnectionSet, nu: u32) -> Result<CharSumSet, EngineError> {
    sums_from_profile(table, s.class_profile(), nu, false)
}

/// M_ν for every degree of the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MProfile {
    pub sets: BTreeMap<u32, CharSumSet>,
}

impl MProfile {
    pub fn from_class_profile(table: &CharacterTable, profile: &[usize], multiset: bool) -> Self {
        let sets = table
            .distinct_degrees()
            .into_iter()
            .map(|nu| (nu, sums_from_profile(table, profile, nu, !multiset).expect("degree present")))
            .collect();
        MProfile { sets }
    }

    pub fn of(table: &CharacterTable, s: &ConnectionSet) -> Self {
        Self::from_class_profile(table, s.class_profile(), false)
    }

    pub(crate) fn key(&self) -> Vec<(u32, Vec<ValueKey>)> {
        self.sets.iter().map(|(&nu, s)| (nu, s.key())).collect()
    }

    /// Smallest degree whose sets differ.
    pub fn first_difference(&self, other: &MProfile) -> Option<u32> {
        self.sets.iter().find(|(nu, s)| other.sets.get(nu) != Some(s)).map(|(&nu, _)| nu)
    }

    pub fn rendered(&self) -> BTreeMap<u32, Vec<String>> {
        self.sets.iter().map(|(&nu, s)| (nu, s.rendered())).collect()
    }
}

/// Exact equality of M_ν^S and M_ν^T for every degree ν.
pub fn m_profiles_equal(table: &CharacterTable, s: &ConnectionSet, t: &ConnectionSet) -> bool {
    MProfile::of(table, s) == MProfile::of(table, t)
}

pub fn m_profiles_equal_multiset(table: &CharacterTable, s: &ConnectionSet, t: &ConnectionSet) -> bool {
    MProfile::from_class_profile(table, s.class_profile(), true)
        == MProfile::from_class_profile(table, t.class_profile(), true)
}

/// G* ∖ S.
pub fn complement_set(g: &Group, s: &ConnectionSet) -> ConnectionSet {
    s.complement(g)
}

/// Interns M-profiles: class profiles are memoised, and equal M-profiles
/// share one id.
pub(crate) struct ProfileInterner<'a> {
    table: &'a CharacterTable,
    by_class: std::collections::HashMap<Vec<u8>, usize>,
    by_value: BTreeMap<Vec<(u32, Vec<ValueKey>)>, usize>,
    profiles: Vec<MProfile>,
}

impl<'a> ProfileInterner<'a> {
    pub fn new(table: &'a CharacterTable) -> Self {
        ProfileInterner { table, by_class: Default::default(), by_value: BTreeMap::new(), profiles: Vec::new() }
    }

    pub fn id(&mut self, class_profile: &[u8]) -> usize {
        if let Some(&id) = self.by_class.get(class_profile) {
            return id;
        }
        let counts: Vec<usize> = class_profile.iter().map(|&c| c as usize).collect();
        let p = MProfile::from_class_profile(self.table, &counts, false);
        let next = self.profiles.len();
        let id = *self.by_value.entry(p.key()).or_insert(next);
        if id == next {
            self.profiles.push(p);
        }
        self.by_class.insert(class_profile.to_vec(), id);
        id
    }

    pub fn get(&self, id: usize) -> &MProfile {
        &self.profiles[id]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedSet {
    pub degree: u32,
    pub values: Vec<String>,
}

impl From<&CharSumSet> for RenderedSet {
    fn from(s: &CharSumSet) -> Self {
        RenderedSet { degree: s.degree, values: s.rendered() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::character_table;
    use crate::group::{automorphism_group, group_semidirect_cyclic, group_sl23};

    fn ints(v: &[i64]) -> Vec<Cyclotomic> {
        v.iter().map(|&x| Cyclotomic::from_int(1, x)).collect()
    }

    #[test]
    fn f20_sets() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let t = character_table(&g).unwrap();
        let s = ConnectionSet::closed_under_inverse(&g, &[5, 1]).unwrap();
        assert_eq!(char_sum_set(&t, &s, 1).unwrap().values, ints(&[4, 2, 0]));
        assert_eq!(char_sum_set(&t, &s, 4).unwrap().values, ints(&[-2]));
        assert!(matches!(char_sum_set(&t, &s, 3), Err(EngineError::NoSuchDegree(3))));
        // Σχ over G* is −1 for nontrivial χ, −ν for degree ν > 1
        let full = ConnectionSet::full(&g);
        assert_eq!(char_sum_set(&t, &full, 1).unwrap().values, ints(&[19, -1]));
        assert_eq!(char_sum_set(&t, &full, 4).unwrap().values, ints(&[-4]));
        assert_eq!(char_sum_multiset(&t, &full, 1).unwrap().values, ints(&[19, -1, -1, -1]));
        let empty = ConnectionSet::from_mask(&g, 0).unwrap();
        for nu in [1, 4] {
            assert_eq!(char_sum_set(&t, &empty, nu).unwrap().values, ints(&[0]));
        }
    }

    #[test]
    fn automorphic_images_agree() {
        let g = group_sl23();
        let t = character_table(&g).unwrap();
        let auts = automorphism_group(&g);
        let s = ConnectionSet::closed_under_inverse(&g, &[1, 2, 7]).unwrap();
        for map in auts.maps() {
            assert!(m_profiles_equal(&t, &s, &s.image(&g, map)));
        }
    }

    #[test]
    fn interner_shares_ids() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let t = character_table(&g).unwrap();
        let mut i = ProfileInterner::new(&t);
        let a = i.id(&[0, 2, 0, 0, 2]);
        assert_eq!(i.id(&[0, 2, 0, 0, 2]), a);
        let b = i.id(&[0, 0, 0, 0, 0]);
        assert_ne!(a, b);
        assert_eq!(i.get(b).sets[&1].values, ints(&[0]));
    }
}
