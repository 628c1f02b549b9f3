use cayley_bi::catalog::build_group;
use cayley_bi::chars::{character_table, CharacterTable};
use cayley_bi::cyclotomic::Cyclotomic;
use cayley_bi::engine::{char_sum_multiset, char_sum_set, complement_set, m_profiles_equal, Units};
use cayley_bi::group::{automorphism_group, AutomorphismSet, Group};
use cayley_bi::iso::are_isomorphic;
use cayley_bi::spectra::{cayley_graph, ConnectionSet};
use proptest::prelude::*;
use std::sync::OnceLock;

struct Fixture {
    g: Group,
    table: CharacterTable,
    auts: AutomorphismSet,
    units: Units,
}

const LABELS: [&str; 4] = ["[8,3]", "[12,1]", "[20,3]", "[24,3]"];

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        LABELS
            .iter()
            .map(|l| {
                let g = build_group(l).unwrap();
                Fixture { table: character_table(&g).unwrap(), auts: automorphism_group(&g), units: Units::of(&g), g }
            })
            .collect()
    })
}

fn set(f: &Fixture, bits: u64) -> ConnectionSet {
    let m = f.units.to_elements(bits & ((1u64 << f.units.len()) - 1));
    ConnectionSet::from_mask(&f.g, m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Automorphic images give isomorphic graphs with equal M-profiles.
    #[test]
    fn automorphic_pairs_agree(which in 0..LABELS.len(), bits in any::<u64>(), k in any::<usize>()) {
        let f = &fixtures()[which];
        let s = set(f, bits);
        let t = ConnectionSet::from_mask(&f.g, f.auts.apply_mask(k % f.auts.len(), s.mask())).unwrap();
        prop_assert!(are_isomorphic(&cayley_graph(&f.g, s.mask()), &cayley_graph(&f.g, t.mask())));
        prop_assert!(m_profiles_equal(&f.table, &s, &t));
    }

    /// Σ over G*∖S is |G|−1−Σ_S for the principal character and −χ(1)−Σ_S otherwise.
    #[test]
    fn complement_sums(which in 0..LABELS.len(), bits in any::<u64>()) {
        let f = &fixtures()[which];
        let s = set(f, bits);
        let c = complement_set(&f.g, &s);
        prop_assert_eq!(c.len() + s.len() + 1, f.g.order());
        let e = f.table.conductor();
        for i in 0..f.table.rows().len() {
            let base = if i == 0 { f.g.order() as i64 - 1 } else { -(f.table.degrees()[i] as i64) };
            let lhs = &f.table.class_sum(i, c.class_profile()) + &f.table.class_sum(i, s.class_profile());
            prop_assert_eq!(lhs, Cyclotomic::from_int(e, base));
        }
    }

    /// M_ν is the deduplicated multiset of sums over degree-ν characters.
    #[test]
    fn set_semantics(which in 0..LABELS.len(), bits in any::<u64>()) {
        let f = &fixtures()[which];
        let s = set(f, bits);
        for nu in f.table.distinct_degrees() {
            let set = char_sum_set(&f.table, &s, nu).unwrap();
            let multi = char_sum_multiset(&f.table, &s, nu).unwrap();
            let count = f.table.degrees().iter().filter(|&&d| d == nu).count();
            prop_assert_eq!(multi.len(), count);
            prop_assert!(set.len() <= multi.len());
            for v in &multi.values {
                prop_assert!(set.contains(v));
            }
            for (a, b) in set.values.iter().zip(set.values.iter().skip(1)) {
                prop_assert!(a != b);
            }
        }
    }
}

#[test]
fn missing_degree_is_an_error() {
    let f = &fixtures()[0];
    assert!(char_sum_set(&f.table, &set(f, 1), 3).is_err());
}
