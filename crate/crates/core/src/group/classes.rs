use super::{bits, Group};

/// Conjugacy classes sorted by (size, least element). The identity class
/// is therefore always class 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjugacyPartition {
    pub(super) fn trivial() -> Self {
        ConjugacyPartition { classes: vec![vec![0]], class_of: vec![0], inverse_class: vec![0] }
    }

    pub(super) fn compute(g: &Group) -> Self {
        let n = g.order();
        let mut seen = 0u64;
        let mut classes = Vec::new();
        for x in 0..n {
            if seen & (1 << x) != 0 {
                continue;
            }
            let mut orbit = 0u64;
            for h in 0..n {
                orbit |= 1 << g.conjugate(x, h);
            }
            seen |= orbit;
            classes.push(bits(orbit).collect::<Vec<_>>());
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        let mut class_of = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        let inverse_class = classes.iter().map(|c| class_of[g.inv(c[0])]).collect();
        ConjugacyPartition { classes, class_of, inverse_class }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    /// Representative of class `i`: its least element.
    pub fn rep(&self, i: usize) -> usize {
        self.classes[i][0]
    }

    pub fn reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Index of the class containing the inverses of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{group_semidirect_cyclic, group_sl23};

    #[test]
    fn classes_are_conjugation_orbits() {
        for g in [group_semidirect_cyclic(5, 4, 3).unwrap(), group_sl23()] {
            let p = g.conjugacy_classes();
            assert_eq!(p.sizes().iter().sum::<usize>(), g.order());
            assert_eq!(p.class(0), &[0]);
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let same = p.class_of(x) == p.class_of(y);
                    let conj = (0..g.order()).any(|h| g.conjugate(x, h) == y);
                    assert_eq!(same, conj);
                }
            }
            for i in 0..p.len() {
                assert_eq!(g.order() % p.size(i), 0);
                let o = g.element_order(p.rep(i));
                assert!(p.class(i).iter().all(|&x| g.element_order(x) == o));
                assert_eq!(p.inverse_class(p.inverse_class(i)), i);
            }
        }
    }

    #[test]
    fn f20_and_f42_sizes_in_sorted_order() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        assert_eq!(g.conjugacy_classes().sizes(), vec![1, 4, 5, 5, 5]);
        let h = group_semidirect_cyclic(7, 6, 3).unwrap();
        assert_eq!(h.conjugacy_classes().sizes(), vec![1, 6, 7, 7, 7, 7, 7]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = group_semidirect_cyclic(6, 1, 1).unwrap();
        assert_eq!(g.conjugacy_classes().len(), 6);
    }
}
