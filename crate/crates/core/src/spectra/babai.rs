//! Cross-checks between adjacency spectra and character sums: every
//! irreducible χ of degree d contributes d eigenvalues, each d times, whose
//! t-th power sum is Σ χ(s_1⋯s_t) over t-tuples from S.

use super::{ConnectionSet, SpectraError};
use crate::chars::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::group::{bits, Group};

/// Tolerance on float power-sum comparisons.
pub const POWER_SUM_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct BabaiCheck {
    pub character: usize,
    pub t: u32,
    /// Power sum recovered from the float spectrum.
    pub spectral: f64,
    /// Σ over t-tuples of χ(s_1⋯s_t), exact.
    pub character_sum: Cyclotomic,
}

impl BabaiCheck {
    pub fn agrees(&self) -> bool {
        let c = self.character_sum.to_complex();
        c.im.abs() < POWER_SUM_TOL && (c.re - self.spectral).abs() < POWER_SUM_TOL
    }
}

/// Counts of s_1⋯s_t per conjugacy class over all t-tuples of S.
pub fn product_class_counts(g: &Group, s: &ConnectionSet, t: u32) -> Vec<usize> {
    let n = g.order();
    let mut dist = vec![0usize; n];
    dist[0] = 1;
    for _ in 0..t {
        let mut next = vec![0usize; n];
        for x in 0..n {
            if dist[x] != 0 {
                for y in bits(s.mask()) {
                    next[g.mul(x, y)] += dist[x];
                }
            }
        }
        dist = next;
    }
    let mut counts = vec![0usize; g.conjugacy_classes().len()];
    for (x, &c) in dist.iter().enumerate() {
        counts[g.class_of(x)] += c;
    }
    counts
}

/// Σ over t-tuples of S of χ_i(s_1⋯s_t).
pub fn character_power_sum(g: &Group, table: &CharacterTable, s: &ConnectionSet, i: usize, t: u32) -> Cyclotomic {
    table.class_sum(i, &product_class_counts(g, s, t))
}

/// Exponents k with χ(C) = ζ_e^k per class, for a linear character.
pub fn linear_exponents(table: &CharacterTable, i: usize) -> Option<Vec<u32>> {
    let e = table.conductor();
    let roots: Vec<Cyclotomic> = (0..e as i64).map(|k| Cyclotomic::root(e, k)).collect();
    table.row(i).iter().map(|v| roots.iter().position(|r| r == v).map(|k| k as u32)).collect()
}

/// Exact check that x ↦ χ(x) is an eigenvector with eigenvalue Σ_{s∈S} χ(s),
/// for linear χ given by its class exponents: for every x the multiset of
/// exponents of χ(xs) must equal that of χ(x)·χ(s).
pub fn linear_eigenvector_exact(g: &Group, exps: &[u32], e: u32, s: &ConnectionSet) -> bool {
    let members = s.members();
    let mut lhs = vec![0u32; e as usize];
    let mut rhs = vec![0u32; e as usize];
    for x in 0..g.order() {
        lhs.iter_mut().for_each(|c| *c = 0);
        rhs.iter_mut().for_each(|c| *c = 0);
        let kx = exps[g.class_of(x)];
        for &y in &members {
            lhs[exps[g.class_of(g.mul(x, y))] as usize] += 1;
            rhs[((kx + exps[g.class_of(y)]) % e) as usize] += 1;
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Outcome of the whole-spectrum comparison.
#[derive(Debug, Clone)]
pub struct BabaiSummary {
    /// (character, exact eigenvalue) for each linear character.
    pub linear: Vec<(usize, Cyclotomic)>,
    /// Float eigenvalues left after removing the linear ones.
    pub residual: Vec<f64>,
    /// Residual power sums for t = 1, 2 and the character prediction.
    pub residual_checks: Vec<(u32, f64, f64)>,
}

/// Matches every linear character's exact eigenvalue to a distinct float
/// eigenvalue, then compares the residual t = 1, 2 power sums with
/// Σ_{χ nonlinear} χ(1)·Σ χ(s_1⋯s_t).
pub fn babai_cross_check(
    g: &Group,
    table: &CharacterTable,
    s: &ConnectionSet,
    eigen_desc: &[f64],
) -> Result<BabaiSummary, SpectraError> {
    let e = table.conductor();
    let mut used = vec![false; eigen_desc.len()];
    let mut linear = Vec::new();
    for i in table.linear_characters() {
        let exps = linear_exponents(table, i)
            .ok_or_else(|| SpectraError::BabaiMismatch(format!("linear character {i} has a non-root value")))?;
        if !linear_eigenvector_exact(g, &exps, e, s) {
            return Err(SpectraError::BabaiMismatch(format!("χ_{i} is not an eigenvector")));
        }
        let lambda = table.class_sum(i, s.class_profile());
        if !lambda.is_real() {
            return Err(SpectraError::BabaiMismatch(format!("Σχ_{i}(s) is not real")));
        }
        let f = lambda.to_complex().re;
        let slot = (0..eigen_desc.len())
            .filter(|&k| !used[k] && (eigen_desc[k] - f).abs() < POWER_SUM_TOL)
            .min_by(|&a, &b| (eigen_desc[a] - f).abs().total_cmp(&(eigen_desc[b] - f).abs()))
            .ok_or_else(|| SpectraError::BabaiMismatch(format!("eigenvalue {f} of χ_{i} missing from the spectrum")))?;
        used[slot] = true;
        linear.push((i, lambda));
    }
    let residual: Vec<f64> = eigen_desc.iter().zip(&used).filter(|(_, &u)| !u).map(|(&v, _)| v).collect();
    let mut residual_checks = Vec::new();
    for t in 1..=2u32 {
        let counts = product_class_counts(g, s, t);
        let mut predicted = 0.0;
        for i in (0..table.rows().len()).filter(|&i| table.degrees()[i] > 1) {
            let v = table.class_sum(i, &counts).to_complex();
            if v.im.abs() > POWER_SUM_TOL {
                return Err(SpectraError::BabaiMismatch(format!("power sum of χ_{i} is not real")));
            }
            predicted += table.degrees()[i] as f64 * v.re;
        }
        let observed: f64 = residual.iter().map(|v| v.powi(t as i32)).sum();
        if (observed - predicted).abs() > POWER_SUM_TOL {
            return Err(SpectraError::BabaiMismatch(format!(
                "residual power sum t={t}: spectrum {observed}, characters {predicted}"
            )));
        }
        residual_checks.push((t, observed, predicted));
    }
    Ok(BabaiSummary { linear, residual, residual_checks })
}

/// Per-character check for t ∈ {1, 2}. Linear characters read their
/// eigenvalue off the matched spectrum; a nonlinear character is checked
/// through the residual mass, which needs it to be the only nonlinear one.
pub fn babai_power_sum_check(
    g: &Group,
    s: &ConnectionSet,
    table: &CharacterTable,
    i: usize,
    t: u32,
    eigen_desc: &[f64],
) -> Result<BabaiCheck, SpectraError> {
    if !(1..=2).contains(&t) {
        return Err(SpectraError::NotApplicable(format!("power sums only for t = 1, 2 (got {t})")));
    }
    let summary = babai_cross_check(g, table, s, eigen_desc)?;
    let character_sum = character_power_sum(g, table, s, i, t);
    let spectral = if table.degrees()[i] == 1 {
        let lambda = &summary.linear.iter().find(|(j, _)| *j == i).expect("linear rows are matched").1;
        lambda.to_complex().re.powi(t as i32)
    } else {
        let nonlinear = table.degrees().iter().filter(|&&d| d > 1).count();
        if nonlinear != 1 {
            return Err(SpectraError::NotApplicable(
                "per-character nonlinear check needs a unique nonlinear character".into(),
            ));
        }
        summary.residual.iter().map(|v| v.powi(t as i32)).sum::<f64>() / table.degrees()[i] as f64
    };
    Ok(BabaiCheck { character: i, t, spectral, character_sum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::character_table;
    use crate::group::group_semidirect_cyclic;
    use crate::spectra::{build_cayley, eigenvalues_raw};

    #[test]
    fn f20_checks() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let t = character_table(&g).unwrap();
        let s = ConnectionSet::closed_under_inverse(&g, &[1, 5]).unwrap();
        let ev = eigenvalues_raw(&build_cayley(&g, &s).graph);
        let principal = babai_power_sum_check(&g, &s, &t, 0, 1, &ev).unwrap();
        assert!(principal.agrees());
        assert_eq!(principal.character_sum, Cyclotomic::from_int(1, 4));
        let psi = babai_power_sum_check(&g, &s, &t, 4, 1, &ev).unwrap();
        assert!(psi.agrees());
        // Σψ(s) = −|S_5|
        assert_eq!(psi.character_sum, Cyclotomic::from_int(1, -2));
        for i in 0..5 {
            for tt in 1..=2 {
                assert!(babai_power_sum_check(&g, &s, &t, i, tt, &ev).unwrap().agrees());
            }
        }
    }

    #[test]
    fn corrupted_spectrum_is_caught() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let t = character_table(&g).unwrap();
        let s = ConnectionSet::closed_under_inverse(&g, &[1, 5]).unwrap();
        let mut ev = eigenvalues_raw(&build_cayley(&g, &s).graph);
        ev[0] += 0.5;
        assert!(babai_cross_check(&g, &t, &s, &ev).is_err());
    }
}
