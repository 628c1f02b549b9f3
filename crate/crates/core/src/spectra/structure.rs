//! Spectrum shapes of Cayley graphs on the Frobenius groups of order 20
//! and 42, classified from the order profile of S and checked against the
//! actual eigenvalue multiplicities.

use serde::{Deserialize, Serialize};

use super::{ConnectionSet, SpectraError};
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    F20,
    F42,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTag {
    pub family: Family,
    /// 1 or 2 for F20; 1–5 for F42.
    pub case: u8,
    /// |S| followed by μ_2, μ_3 (and μ_5 for F42).
    pub mu: Vec<i64>,
    /// Spectral multiplicity of each distinct value in `mu` (after |S|).
    pub multiplicities: Vec<usize>,
    /// Multiplicities of the remaining clusters.
    pub rest: Vec<usize>,
}

/// Recognises F20 by classes of sizes {1,4,5,5,5} with element orders
/// {1,5,2,4,4}.
pub fn is_f20(g: &Group) -> bool {
    signature(g) == vec![(1, 1), (4, 5), (5, 2), (5, 4), (5, 4)]
}

/// Recognises F42 by classes of sizes {1,6,7^5} with orders {1,7,2,3,3,6,6}.
pub fn is_f42(g: &Group) -> bool {
    signature(g) == vec![(1, 1), (6, 7), (7, 2), (7, 3), (7, 3), (7, 6), (7, 6)]
}

fn signature(g: &Group) -> Vec<(usize, u32)> {
    let p = g.conjugacy_classes();
    let mut sig: Vec<(usize, u32)> = (0..p.len()).map(|k| (p.size(k), g.element_order(p.rep(k)))).collect();
    sig.sort();
    sig
}

/// (|S_2|, |S_4|, |S_5|).
pub fn f20_profile(s: &ConnectionSet) -> (i64, i64, i64) {
    (s.order_count(2) as i64, s.order_count(4) as i64, s.order_count(5) as i64)
}

/// (|S_2|, |S_3|, |S_6|, |S_7|).
pub fn f42_profile(s: &ConnectionSet) -> (i64, i64, i64, i64) {
    (s.order_count(2) as i64, s.order_count(3) as i64, s.order_count(6) as i64, s.order_count(7) as i64)
}

/// (μ_2, μ_3) = (|S_2|−|S_4|+|S_5|, |S_5|−|S_2|).
pub fn f20_mu(s: &ConnectionSet) -> (i64, i64) {
    let (s2, s4, s5) = f20_profile(s);
    (s2 - s4 + s5, s5 - s2)
}

/// (μ_2, μ_3, μ_5) from the F42 order profile.
pub fn f42_mu(s: &ConnectionSet) -> (i64, i64, i64) {
    let (s2, s3, s6, s7) = f42_profile(s);
    debug_assert!(s3 % 2 == 0 && s6 % 2 == 0);
    (-s2 + s3 - s6 + s7, s2 - s3 / 2 - s6 / 2 + s7, -s2 - s3 / 2 + s6 / 2 + s7)
}

fn multiplicity_of(clusters: &[(f64, usize)], v: i64) -> Option<usize> {
    clusters.iter().find(|c| (c.0 - v as f64).abs() < 1e-6).map(|c| c.1)
}

fn violation(msg: String) -> SpectraError {
    SpectraError::StructureViolation(msg)
}

/// Checks the top cluster is |S| with multiplicity 1 and returns the
/// multiplicities of the listed values and of everything else.
fn split_clusters(
    clusters: &[(f64, usize)],
    size: i64,
    values: &[i64],
) -> Result<(Vec<usize>, Vec<usize>), SpectraError> {
    let top = clusters.first().ok_or_else(|| violation("empty spectrum".into()))?;
    if (top.0 - size as f64).abs() > 1e-6 || top.1 != 1 {
        return Err(violation(format!("|S| = {size} is not the unique largest eigenvalue (top {:?})", top)));
    }
    let mut mults = Vec::new();
    for &v in values {
        mults
            .push(multiplicity_of(clusters, v).ok_or_else(|| violation(format!("μ = {v} missing from the spectrum")))?);
    }
    let rest =
        clusters[1..].iter().filter(|c| values.iter().all(|&v| (c.0 - v as f64).abs() >= 1e-6)).map(|c| c.1).collect();
    Ok((mults, rest))
}

/// Type 1: μ_2 ≠ μ_3 with multiplicities ≡ 1, 2 (mod 4). Type 2: μ_2 = μ_3 = θ
/// with multiplicity ≡ 3 (mod 4). All other clusters are multiples of 4.
pub fn classify_f20_with(
    g: &Group,
    s: &ConnectionSet,
    clusters: &[(f64, usize)],
) -> Result<StructureTag, SpectraError> {
    if !is_f20(g) {
        return Err(SpectraError::NotApplicable("group is not the Frobenius group of order 20".into()));
    }
    if !s.generates(g) {
        return Err(SpectraError::NotApplicable("connection set does not generate".into()));
    }
    let size = s.len() as i64;
    let (mu2, mu3) = f20_mu(s);
    let (case, values, residues): (u8, Vec<i64>, Vec<usize>) =
        if mu2 != mu3 { (1, vec![mu2, mu3], vec![1, 2]) } else { (2, vec![mu2], vec![3]) };
    let (mults, rest) = split_clusters(clusters, size, &values)?;
    for ((&v, &m), &r) in values.iter().zip(&mults).zip(&residues) {
        if m % 4 != r {
            return Err(violation(format!("F20 type {case}: multiplicity of {v} is {m}, expected ≡ {r} (mod 4)")));
        }
    }
    if let Some(m) = rest.iter().find(|&&m| m % 4 != 0) {
        return Err(violation(format!("F20: leftover cluster of multiplicity {m} not divisible by 4")));
    }
    Ok(StructureTag { family: Family::F20, case, mu: vec![size, mu2, mu3], multiplicities: mults, rest })
}

/// The five admissible shapes, according to which of μ_2, μ_3, μ_5
/// coincide; residues are mod 6 and the remaining clusters are multiples
/// of 6.
pub fn classify_f42_with(
    g: &Group,
    s: &ConnectionSet,
    clusters: &[(f64, usize)],
) -> Result<StructureTag, SpectraError> {
    if !is_f42(g) {
        return Err(SpectraError::NotApplicable("group is not the Frobenius group of order 42".into()));
    }
    if !s.generates(g) {
        return Err(SpectraError::NotApplicable("connection set does not generate".into()));
    }
    let size = s.len() as i64;
    let (m2, m3, m5) = f42_mu(s);
    let (case, values, residues): (u8, Vec<i64>, Vec<usize>) = if m2 != m3 && m3 != m5 && m2 != m5 {
        (1, vec![m2, m3, m5], vec![1, 2, 2])
    } else if m2 != m3 && m3 == m5 {
        (2, vec![m2, m3], vec![1, 4])
    } else if m2 == m3 && m3 != m5 {
        (3, vec![m2, m5], vec![3, 2])
    } else if m2 == m5 && m2 != m3 {
        (4, vec![m2, m3], vec![3, 2])
    } else {
        (5, vec![m2], vec![5])
    };
    let (mults, rest) = split_clusters(clusters, size, &values)?;
    for ((&v, &m), &r) in values.iter().zip(&mults).zip(&residues) {
        if m % 6 != r {
            return Err(violation(format!("F42 type {case}: multiplicity of {v} is {m}, expected ≡ {r} (mod 6)")));
        }
    }
    if let Some(m) = rest.iter().find(|&&m| m % 6 != 0) {
        return Err(violation(format!("F42: leftover cluster of multiplicity {m} not divisible by 6")));
    }
    Ok(StructureTag { family: Family::F42, case, mu: vec![size, m2, m3, m5], multiplicities: mults, rest })
}

pub fn classify_f20_spectrum(g: &Group, s: &ConnectionSet) -> Result<StructureTag, SpectraError> {
    classify_f20_with(g, s, &super::spectrum_clusters(g, s))
}

pub fn classify_f42_spectrum(g: &Group, s: &ConnectionSet) -> Result<StructureTag, SpectraError> {
    classify_f42_with(g, s, &super::spectrum_clusters(g, s))
}

/// Whichever classifier applies to the group, if any.
pub fn classify_structure(
    g: &Group,
    s: &ConnectionSet,
    clusters: &[(f64, usize)],
) -> Option<Result<StructureTag, SpectraError>> {
    if !s.generates(g) {
        return None;
    }
    if is_f20(g) {
        Some(classify_f20_with(g, s, clusters))
    } else if is_f42(g) {
        Some(classify_f42_with(g, s, clusters))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_semidirect_cyclic;

    #[test]
    fn f20_examples() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let full = ConnectionSet::full(&g);
        let tag = classify_f20_spectrum(&g, &full).unwrap();
        assert_eq!(tag.case, 2);
        assert_eq!(tag.mu, vec![19, -1, -1]);
        assert_eq!(tag.multiplicities, vec![19]);
        assert_eq!(f20_profile(&full), (5, 10, 4));

        // S = {b, b³, a, a⁴}
        let s = ConnectionSet::closed_under_inverse(&g, &[5, 1]).unwrap();
        assert_eq!(f20_profile(&s), (0, 2, 2));
        let tag = classify_f20_spectrum(&g, &s).unwrap();
        assert_eq!(tag.case, 1);
        assert_eq!(tag.mu, vec![4, 0, 2]);
    }

    #[test]
    fn f42_complete_graph() {
        let g = group_semidirect_cyclic(7, 6, 3).unwrap();
        let full = ConnectionSet::full(&g);
        assert_eq!(f42_profile(&full), (7, 14, 14, 6));
        let tag = classify_f42_spectrum(&g, &full).unwrap();
        assert_eq!(tag.case, 5);
        assert_eq!(tag.multiplicities, vec![41]);
    }

    #[test]
    fn wrong_group_or_set_rejected() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let s = ConnectionSet::closed_under_inverse(&g, &[1]).unwrap();
        assert!(matches!(classify_f20_spectrum(&g, &s), Err(SpectraError::NotApplicable(_))));
        assert!(matches!(classify_f42_spectrum(&g, &ConnectionSet::full(&g)), Err(SpectraError::NotApplicable(_))));
    }

    #[test]
    fn forged_spectrum_is_a_violation() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let s = ConnectionSet::closed_under_inverse(&g, &[5, 1]).unwrap();
        let fake = vec![(4.0, 1), (2.0, 3), (0.0, 2), (-1.0, 14)];
        assert!(matches!(classify_f20_with(&g, &s, &fake), Err(SpectraError::StructureViolation(_))));
    }
}
