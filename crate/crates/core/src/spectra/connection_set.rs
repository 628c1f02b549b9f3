use std::collections::BTreeMap;

use super::SpectraError;
use crate::group::{bits, Group};

/// An inverse-closed subset of G∖{1}, with its order partition and
/// per-class intersection counts precomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectionSet {
    mask: u64,
    order_partition: BTreeMap<u32, Vec<usize>>,
    class_profile: Vec<usize>,
}

impl ConnectionSet {
    pub fn from_mask(g: &Group, mask: u64) -> Result<Self, SpectraError> {
        if mask & !g.full_mask() != 0 {
            return Err(SpectraError::BadElement(format!("mask {mask:#x} exceeds the group")));
        }
        if mask & 1 != 0 {
            return Err(SpectraError::ContainsIdentity);
        }
        if let Some(x) = bits(mask).find(|&x| mask >> g.inv(x) & 1 == 0) {
            return Err(SpectraError::NotInverseClosed(x));
        }
        let mut order_partition: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        let mut class_profile = vec![0; g.conjugacy_classes().len()];
        for x in bits(mask) {
            order_partition.entry(g.element_order(x)).or_default().push(x);
            class_profile[g.class_of(x)] += 1;
        }
        Ok(ConnectionSet { mask, order_partition, class_profile })
    }

    pub fn new(g: &Group, members: &[usize]) -> Result<Self, SpectraError> {
        let mut mask = 0u64;
        for &x in members {
            if x >= g.order() {
                return Err(SpectraError::BadElement(x.to_string()));
            }
            mask |= 1 << x;
        }
        Self::from_mask(g, mask)
    }

    /// Adds the inverse of every member first.
    pub fn closed_under_inverse(g: &Group, members: &[usize]) -> Result<Self, SpectraError> {
        let mut all = members.to_vec();
        all.extend(members.iter().filter(|&&x| x < g.order()).map(|&x| g.inv(x)));
        Self::new(g, &all)
    }

    /// Everything in G∖{1}.
    pub fn full(g: &Group) -> Self {
        Self::from_mask(g, g.full_mask() & !1).expect("G* is inverse-closed")
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn members(&self) -> Vec<usize> {
        bits(self.mask).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask >> x & 1 == 1
    }

    pub fn order_partition(&self) -> &BTreeMap<u32, Vec<usize>> {
        &self.order_partition
    }

    /// |S_k|: members of element order exactly k.
    pub fn order_count(&self, k: u32) -> usize {
        self.order_partition.get(&k).map_or(0, Vec::len)
    }

    pub fn class_profile(&self) -> &[usize] {
        &self.class_profile
    }

    /// G* ∖ S.
    pub fn complement(&self, g: &Group) -> Self {
        Self::from_mask(g, g.full_mask() & !1 & !self.mask).expect("complement is inverse-closed")
    }

    pub fn generates(&self, g: &Group) -> bool {
        g.generates(self.mask)
    }

    /// α(S) for an element permutation α.
    pub fn image(&self, g: &Group, map: &[u8]) -> Self {
        let mask = bits(self.mask).fold(0u64, |m, x| m | 1 << map[x]);
        Self::from_mask(g, mask).expect("automorphic image stays inverse-closed")
    }
}

/// Parses a connection-set file: `#` comments; each line holds element
/// indices or generator words (`a`, `a^2*b`) separated by whitespace or
/// commas, or a single matrix literal such as `[[1,1],[0,1]]` for groups
/// with labelled elements.
pub fn parse_connection_set(g: &Group, text: &str, close_inverse: bool) -> Result<ConnectionSet, SpectraError> {
    let mut members = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') || line.starts_with('(') {
            let x = g
                .element_by_label(line)
                .ok_or_else(|| SpectraError::BadElement(format!("no element labelled `{line}`")))?;
            members.push(x);
            continue;
        }
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let x = if tok.bytes().all(|b| b.is_ascii_digit()) {
                let x: usize = tok.parse().map_err(|_| SpectraError::BadElement(tok.into()))?;
                if x >= g.order() {
                    return Err(SpectraError::BadElement(format!("index {x} out of range")));
                }
                x
            } else {
                g.eval_word(tok).map_err(|e| SpectraError::BadElement(e.to_string()))?
            };
            members.push(x);
        }
    }
    if close_inverse {
        ConnectionSet::closed_under_inverse(g, &members)
    } else {
        ConnectionSet::new(g, &members)
    }
}

/// One line per member: `index  # word` (or the element label when present).
pub fn render_connection_set(g: &Group, s: &ConnectionSet) -> String {
    let words = g.words();
    let mut out = String::new();
    for x in s.members() {
        match g.labels() {
            Some(l) => out.push_str(&format!("{}\n", l[x])),
            None => out.push_str(&format!("{x}  # {}\n", words[x])),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_semidirect_cyclic, group_sl23};

    #[test]
    fn validation() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        assert!(matches!(ConnectionSet::new(&g, &[0]), Err(SpectraError::ContainsIdentity)));
        assert!(matches!(ConnectionSet::new(&g, &[1]), Err(SpectraError::NotInverseClosed(1))));
        let s = ConnectionSet::closed_under_inverse(&g, &[1, 5]).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.generates(&g));
        assert_eq!(s.order_count(4), 2);
        assert_eq!(s.order_count(5), 2);
        assert_eq!(s.class_profile().iter().sum::<usize>(), 4);
        let full = ConnectionSet::full(&g);
        assert_eq!(full.complement(&g).len(), 0);
        assert_eq!(s.complement(&g).complement(&g), s);
    }

    #[test]
    fn paired_classes_have_equal_counts() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let s = ConnectionSet::closed_under_inverse(&g, &[5, 7, 12]).unwrap();
        let p = g.conjugacy_classes();
        for k in 0..p.len() {
            assert_eq!(s.class_profile()[k], s.class_profile()[p.inverse_class(k)]);
        }
    }

    #[test]
    fn file_parsing() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let s = parse_connection_set(&g, "# S\nb, b^3\na a^4\n", false).unwrap();
        assert_eq!(s.members(), vec![1, 4, 5, 15]);
        assert!(parse_connection_set(&g, "b", false).is_err());
        assert_eq!(parse_connection_set(&g, "b", true).unwrap().len(), 2);
        assert!(parse_connection_set(&g, "99", true).is_err());
        let back = parse_connection_set(&g, &render_connection_set(&g, &s), false).unwrap();
        assert_eq!(back, s);

        let sl = group_sl23();
        let s = parse_connection_set(&sl, "[[1,1],[0,1]]\n[[1,2],[0,1]]\n", false).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(parse_connection_set(&sl, &render_connection_set(&sl, &s), false).unwrap(), s);
    }
}
