//! Irreducible character tables by the Burnside–Dixon method: the class
//! matrices are simultaneously diagonalized over a prime field containing
//! the e-th roots of unity, and the resulting values are lifted to Q(ζ_e).

mod io;
pub mod modp;

use std::cmp::Ordering;

use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::group::Group;
use modp::{is_prime_small, mod_inv, mod_pow, nullspace, primitive_root, rref};

pub use io::{ClassInfo, TableDump};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("no prime p ≡ 1 (mod {exponent}) found below the search bound")]
    NoSuitablePrime { exponent: u32 },
    #[error("Dixon diagonalization failed: {0}")]
    Diagonalization(String),
    #[error("character table check failed: {0}")]
    Invalid(String),
    #[error("character table parse error: {0}")]
    Parse(String),
}

/// Exact character table. Rows are characters, columns conjugacy classes
/// in the group's class order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    order: usize,
    conductor: u32,
    class_sizes: Vec<usize>,
    class_reps: Vec<usize>,
    class_orders: Vec<u32>,
    inverse_class: Vec<usize>,
    class_of: Vec<usize>,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u32>,
}

/// a[i][j][k] = #{(x, y) : x ∈ C_i, y ∈ C_j, xy = rep(C_k)}.
pub fn class_structure_constants(g: &Group) -> Vec<Vec<Vec<u64>>> {
    let p = g.conjugacy_classes();
    let h = p.len();
    let mut a = vec![vec![vec![0u64; h]; h]; h];
    for k in 0..h {
        let z = p.rep(k);
        for x in 0..g.order() {
            let y = g.mul(g.inv(x), z);
            a[g.class_of(x)][g.class_of(y)][k] += 1;
        }
    }
    a
}

const PRIME_SEARCH_LIMIT: u64 = 1 << 24;

/// Smallest prime p ≡ 1 (mod e) with p > 2√n.
pub fn dixon_prime(n: usize, e: u32) -> Result<u64, CharError> {
    let e64 = e as u64;
    let mut p = e64 + 1;
    while p < PRIME_SEARCH_LIMIT {
        if (p * p) as f64 > 4.0 * n as f64 && is_prime_small(p) {
            return Ok(p);
        }
        p += e64;
    }
    Err(CharError::NoSuitablePrime { exponent: e })
}

pub fn character_table(g: &Group) -> Result<CharacterTable, CharError> {
    let n = g.order();
    let e = g.exponent();
    let part = g.conjugacy_classes();
    let h = part.len();
    let sizes = part.sizes();
    let p = dixon_prime(n, e)?;
    let a = class_structure_constants(g);

    // class matrices (A_j)[i][k] = a[i][j][k]
    let class_matrix =
        |j: usize| -> Vec<Vec<u64>> { (0..h).map(|i| (0..h).map(|k| a[i][j][k] % p).collect()).collect() };

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..h)
        .map(|i| {
            let mut v = vec![0u64; h];
            v[i] = 1;
            v
        })
        .collect()];
    for j in 1..h {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(j);
        let mut next = Vec::new();
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            next.extend(split_space(&m, &w, p)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(CharError::Diagonalization("class matrices do not separate characters".into()));
    }

    let z = mod_pow(primitive_root(p), (p - 1) / e as u64, p);
    let z_inv = mod_inv(z, p);
    let e_inv = mod_inv(e as u64 % p, p);
    let n_p = n as u64 % p;

    let mut rows = Vec::with_capacity(h);
    let mut degrees = Vec::with_capacity(h);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(CharError::Diagonalization("central character vanishes at the identity".into()));
        }
        let scale = mod_inv(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| x * scale % p).collect();
        // Σ ω_i ω_{i*} / |C_i| = n / χ(1)²
        let mut s = 0u64;
        for i in 0..h {
            let t = omega[i] * omega[part.inverse_class(i)] % p;
            s = (s + t * mod_inv(sizes[i] as u64 % p, p)) % p;
        }
        if s == 0 {
            return Err(CharError::Diagonalization("degenerate degree equation".into()));
        }
        let d2 = n_p * mod_inv(s, p) % p;
        let d = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| CharError::Diagonalization("no degree solves d² ≡ n/Σ".into()))?;
        let chi_p: Vec<u64> = (0..h).map(|i| omega[i] * d % p * mod_inv(sizes[i] as u64 % p, p) % p).collect();

        let mut row = Vec::with_capacity(h);
        for i in 0..h {
            let x = part.rep(i);
            let mut powers_class = Vec::with_capacity(e as usize);
            let mut acc = 0usize;
            for _ in 0..e {
                powers_class.push(g.class_of(acc));
                acc = g.mul(acc, x);
            }
            let mut m = vec![0i64; e as usize];
            for (k, mk) in m.iter_mut().enumerate() {
                let step = mod_pow(z_inv, k as u64, p);
                let mut zl = 1u64;
                let mut sum = 0u64;
                for &c in &powers_class {
                    sum = (sum + chi_p[c] * zl) % p;
                    zl = zl * step % p;
                }
                let val = sum * e_inv % p;
                if val > d {
                    return Err(CharError::Diagonalization(format!(
                        "eigenvalue multiplicity {val} exceeds degree {d}"
                    )));
                }
                *mk = val as i64;
            }
            row.push(Cyclotomic::from_exponent_coeffs(e, &m));
        }
        rows.push(row);
        degrees.push(d as u32);
    }

    let mut table = CharacterTable {
        order: n,
        conductor: e,
        class_sizes: sizes,
        class_reps: part.reps(),
        class_orders: part.reps().iter().map(|&x| g.element_order(x)).collect(),
        inverse_class: (0..h).map(|i| part.inverse_class(i)).collect(),
        class_of: (0..n).map(|x| g.class_of(x)).collect(),
        rows,
        degrees,
    };
    table.sort_rows();
    Ok(table)
}

/// Splits the A-invariant subspace spanned by `basis` (RREF rows) into
/// eigenspaces of A.
fn split_space(a: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>, CharError> {
    let h = a.len();
    let dim = basis.len();
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).unwrap()).collect();
    // A b_r = Σ_s R[r][s] b_s, read off at the pivot coordinates
    let image =
        |v: &[u64]| -> Vec<u64> { (0..h).map(|i| (0..h).fold(0u64, |acc, k| (acc + a[i][k] * v[k]) % p)).collect() };
    let r: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            let ab = image(b);
            pivots.iter().map(|&c| ab[c]).collect()
        })
        .collect();
    let mut parts = Vec::new();
    let mut found = 0;
    for x in 0..p {
        // (R^T - x I) c = 0
        let m: Vec<Vec<u64>> = (0..dim)
            .map(|s| {
                (0..dim)
                    .map(|t| {
                        let v = r[t][s];
                        if s == t {
                            (v + p - x) % p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let ns = nullspace(m, p);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        let vectors: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                let mut w = vec![0u64; h];
                for (cr, b) in c.iter().zip(basis) {
                    for (wi, bi) in w.iter_mut().zip(b) {
                        *wi = (*wi + cr * bi) % p;
                    }
                }
                w
            })
            .collect();
        parts.push(rref(vectors, p).0);
        if found == dim {
            return Ok(parts);
        }
    }
    Err(CharError::Diagonalization("class matrix is not diagonalizable mod p".into()))
}

fn float_cmp(a: f64, b: f64) -> Ordering {
    if (a - b).abs() < 1e-9 {
        Ordering::Equal
    } else {
        a.partial_cmp(&b).unwrap_or(Ordering::Equal)
    }
}

impl CharacterTable {
    /// Degree ascending, then real parts descending, then imaginary parts
    /// descending (lexicographic over the columns).
    fn sort_rows(&mut self) {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        let floats: Vec<Vec<(f64, f64)>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        let c = v.to_complex();
                        (c.re, c.im)
                    })
                    .collect()
            })
            .collect();
        idx.sort_by(|&x, &y| {
            self.degrees[x]
                .cmp(&self.degrees[y])
                .then_with(|| {
                    floats[x]
                        .iter()
                        .zip(&floats[y])
                        .map(|(a, b)| float_cmp(b.0, a.0))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
                .then_with(|| {
                    floats[x]
                        .iter()
                        .zip(&floats[y])
                        .map(|(a, b)| float_cmp(b.1, a.1))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
        });
        self.rows = idx.iter().map(|&i| self.rows[i].clone()).collect();
        self.degrees = idx.iter().map(|&i| self.degrees[i]).collect();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    /// Element order of each class representative.
    pub fn class_orders(&self) -> &[u32] {
        &self.class_orders
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Distinct degrees in increasing order.
    pub fn distinct_degrees(&self) -> Vec<u32> {
        let mut d = self.degrees.clone();
        d.dedup();
        d
    }

    /// χ_i(x) for an element index x.
    pub fn value(&self, i: usize, x: usize) -> &Cyclotomic {
        &self.rows[i][self.class_of[x]]
    }

    /// Indices of the degree-one rows.
    pub fn linear_characters(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.degrees[i] == 1).collect()
    }

    /// Checks every exact identity a character table must satisfy:
    /// Σ n_i² = |G|, both orthogonality relations, χ(x⁻¹) = conj χ(x),
    /// a principal first row, and the column sums over G∖{1}.
    pub fn validate(&self) -> Result<(), CharError> {
        let h = self.rows.len();
        let n = self.order as i64;
        let e = self.conductor;
        let bad = |m: String| Err(CharError::Invalid(m));
        if h != self.class_sizes.len() {
            return bad(format!("{h} rows for {} classes", self.class_sizes.len()));
        }
        if self.degrees.iter().map(|&d| (d * d) as i64).sum::<i64>() != n {
            return bad("sum of squared degrees differs from the group order".into());
        }
        if !self.rows[0].iter().all(Cyclotomic::is_one) {
            return bad("first row is not the principal character".into());
        }
        let conj: Vec<Vec<Cyclotomic>> = self.rows.iter().map(|r| r.iter().map(Cyclotomic::conj).collect()).collect();
        for i in 0..h {
            if self.rows[i][0] != Cyclotomic::from_int(e, self.degrees[i] as i64) {
                return bad(format!("row {i} degree mismatch"));
            }
            for k in 0..h {
                if self.rows[i][self.inverse_class[k]] != conj[i][k] {
                    return bad(format!("χ_{i}(x⁻¹) ≠ conj χ_{i}(x) on class {k}"));
                }
            }
            for j in i..h {
                let mut s = Cyclotomic::zero(e);
                for k in 0..h {
                    s = &s + &(&self.rows[i][k] * &conj[j][k]).scale_int(self.class_sizes[k] as i64);
                }
                let expect = if i == j { n } else { 0 };
                if s != Cyclotomic::from_int(e, expect) {
                    return bad(format!("row orthogonality fails for ({i},{j})"));
                }
            }
            let mut col_sum = Cyclotomic::zero(e);
            for k in 0..h {
                col_sum = &col_sum + &self.rows[i][k].scale_int(self.class_sizes[k] as i64);
            }
            col_sum = &col_sum - &self.rows[i][0];
            let expect = if i == 0 { n - 1 } else { -(self.degrees[i] as i64) };
            if col_sum != Cyclotomic::from_int(e, expect) {
                return bad(format!("column sum over G* fails for row {i}"));
            }
        }
        for k in 0..h {
            for l in k..h {
                let mut s = Cyclotomic::zero(e);
                for i in 0..h {
                    s = &s + &(&self.rows[i][k] * &conj[i][l]);
                }
                let ok = if k == l {
                    s == Cyclotomic::from_rational(
                        e,
                        num_rational::BigRational::new(n.into(), (self.class_sizes[k] as i64).into()),
                    )
                } else {
                    s.is_zero()
                };
                if !ok {
                    return bad(format!("column orthogonality fails for ({k},{l})"));
                }
            }
        }
        Ok(())
    }

    /// Σ_{s∈S} χ_i(s) from per-class counts |S ∩ C_k|.
    pub fn class_sum(&self, i: usize, profile: &[usize]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.conductor);
        for (k, &c) in profile.iter().enumerate() {
            if c != 0 && !self.rows[i][k].is_zero() {
                acc = &acc + &self.rows[i][k].scale_int(c as i64);
            }
        }
        acc
    }

    /// Finds a row/column bijection onto `other` preserving class sizes,
    /// representative orders and degrees with exactly equal entries.
    /// Returns (row map, column map) from self to other.
    pub fn match_up_to_bijection(&self, other: &CharacterTable) -> Option<(Vec<usize>, Vec<usize>)> {
        let h = self.rows.len();
        if other.rows.len() != h {
            return None;
        }
        let mut cols = vec![usize::MAX; h];
        let mut used = vec![false; h];
        self.match_columns(other, 0, &mut cols, &mut used)
    }

    fn match_columns(
        &self,
        other: &CharacterTable,
        k: usize,
        cols: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let h = self.rows.len();
        if k == h {
            return self.match_rows(other, cols).map(|r| (r, cols.clone()));
        }
        for l in 0..h {
            if used[l] || self.class_sizes[k] != other.class_sizes[l] || self.class_orders[k] != other.class_orders[l] {
                continue;
            }
            used[l] = true;
            cols[k] = l;
            if let Some(found) = self.match_columns(other, k + 1, cols, used) {
                return Some(found);
            }
            used[l] = false;
        }
        cols[k] = usize::MAX;
        None
    }

    fn match_rows(&self, other: &CharacterTable, cols: &[usize]) -> Option<Vec<usize>> {
        let h = self.rows.len();
        let mut taken = vec![false; h];
        let mut rows = Vec::with_capacity(h);
        for i in 0..h {
            let j = (0..h).find(|&j| {
                !taken[j]
                    && self.degrees[i] == other.degrees[j]
                    && (0..h).all(|k| self.rows[i][k] == other.rows[j][cols[k]])
            })?;
            taken[j] = true;
            rows.push(j);
        }
        Some(rows)
    }
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.class_sizes == other.class_sizes && self.degrees == other.degrees && self.rows == other.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_direct_product, group_metacyclic, group_semidirect_cyclic, group_sl23};

    fn int(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(1, v)
    }

    #[test]
    fn structure_constants_identities() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let a = class_structure_constants(&g);
        let sizes = g.conjugacy_classes().sizes();
        let h = sizes.len();
        for i in 0..h {
            for j in 0..h {
                assert_eq!(a[0][j][i], (i == j) as u64);
                let total: u64 = (0..h).map(|k| a[i][j][k] * sizes[k] as u64).sum();
                assert_eq!(total, (sizes[i] * sizes[j]) as u64);
            }
        }
        let triv = group_semidirect_cyclic(1, 1, 1).unwrap();
        assert_eq!(class_structure_constants(&triv), vec![vec![vec![1]]]);
    }

    #[test]
    fn dixon_primes() {
        assert_eq!(dixon_prime(20, 20).unwrap(), 41);
        assert_eq!(dixon_prime(42, 42).unwrap(), 43);
        assert_eq!(dixon_prime(24, 12).unwrap(), 13);
        assert_eq!(dixon_prime(1, 1).unwrap(), 3);
    }

    #[test]
    fn c2_table() {
        let g = group_semidirect_cyclic(2, 1, 1).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.rows(), &[vec![int(1), int(1)], vec![int(1), int(-1)]]);
        t.validate().unwrap();
    }

    #[test]
    fn f20_table_has_psi_row() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let t = character_table(&g).unwrap();
        t.validate().unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 4]);
        assert_eq!(t.linear_characters().len(), g.order() / g.derived_subgroup().len());
        // columns are sorted (1, 4, 5, 5, 5): identity, order 5, then the rest
        let psi = t.row(4);
        assert_eq!(psi[0], int(4));
        assert_eq!(psi[1], int(-1));
        assert!(psi[2..].iter().all(Cyclotomic::is_zero));
    }

    #[test]
    fn f42_has_sixth_roots() {
        let g = group_semidirect_cyclic(7, 6, 3).unwrap();
        let t = character_table(&g).unwrap();
        t.validate().unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 1, 1, 6]);
        let z6 = Cyclotomic::root(6, 1);
        assert!(t.rows().iter().any(|r| r.contains(&z6)));
    }

    #[test]
    fn sl23_degrees() {
        let t = character_table(&group_sl23()).unwrap();
        t.validate().unwrap();
        let mut d = t.degrees().to_vec();
        d.sort();
        assert_eq!(d, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn assorted_groups_validate() {
        let c2 = group_semidirect_cyclic(2, 1, 1).unwrap();
        let q8 = group_metacyclic(4, 2, 3, 2).unwrap();
        let groups = vec![
            group_semidirect_cyclic(1, 1, 1).unwrap(),
            group_semidirect_cyclic(9, 1, 1).unwrap(),
            group_semidirect_cyclic(3, 2, 2).unwrap(),
            group_semidirect_cyclic(9, 3, 4).unwrap(),
            group_direct_product(&c2, &q8).unwrap(),
        ];
        for g in groups {
            let t = character_table(&g).unwrap();
            t.validate().unwrap();
            if g.is_abelian() {
                assert_eq!(t.linear_characters().len(), g.order());
            }
        }
    }

    #[test]
    fn bijection_matching_finds_identity() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let t = character_table(&g).unwrap();
        let (r, c) = t.match_up_to_bijection(&t).unwrap();
        assert_eq!(r, (0..5).collect::<Vec<_>>());
        assert_eq!(c, (0..5).collect::<Vec<_>>());
    }
}
