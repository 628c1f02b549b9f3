use cayley_bi::graph::Graph;
use cayley_bi::iso::{are_isomorphic, brute_force_isomorphic, canonical_form, canonical_labeling};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn forms_agree_with_brute_force(a in graph(7), b in graph(7)) {
        let brute = brute_force_isomorphic(&a, &b).unwrap();
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), brute);
        prop_assert_eq!(are_isomorphic(&a, &b), brute);
    }

    #[test]
    fn relabelling_keeps_the_form(g in graph(8), seed in any::<u64>()) {
        let h = g.relabel(&permutation(g.n(), seed));
        prop_assert!(brute_force_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn labelling_maps_onto_the_form(g in graph(12)) {
        let (form, perm, _) = canonical_labeling(&g);
        prop_assert_eq!(form.to_graph(), g.relabel(&perm));
    }
}

#[test]
fn larger_regular_graphs() {
    // Petersen graph against a relabelling and against the 5-prism, both
    // cubic on 10 vertices.
    let mut petersen = Graph::empty(10);
    for i in 0..5 {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    let mut prism = Graph::empty(10);
    for i in 0..5 {
        prism.add_edge(i, (i + 1) % 5);
        prism.add_edge(i, i + 5);
        prism.add_edge(5 + i, 5 + (i + 1) % 5);
    }
    let shuffled = petersen.relabel(&permutation(10, 77));
    assert!(are_isomorphic(&petersen, &shuffled));
    assert!(!are_isomorphic(&petersen, &prism));
}
