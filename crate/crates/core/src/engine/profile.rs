//! Recovering order profiles of connection sets on F20 and F42 from the
//! linear-character sums, by exact rational solves.

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::EngineError;

type Q = Rational64;

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Gauss–Jordan over Q; None when singular.
pub fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        let inv = a[c][c].recip();
        a[c].iter_mut().for_each(|v| *v *= inv);
        b[c] *= inv;
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for k in 0..n {
                    let sub = f * a[c][k];
                    a[r][k] -= sub;
                }
                let sub = f * b[c];
                b[r] -= sub;
            }
        }
    }
    Some(b)
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    (0..a.len()).map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let cols: Option<Vec<Vec<Q>>> = (0..n)
        .map(|j| solve(a.to_vec(), (0..n).map(|i| if i == j { Q::one() } else { Q::zero() }).collect()))
        .collect();
    let cols = cols?;
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect())
}

fn as_count(v: Q, what: &str) -> Result<i64, EngineError> {
    if v.is_integer() && v >= Q::zero() {
        Ok(v.to_integer())
    } else {
        Err(EngineError::Inconsistent(format!("{what} = {v} is not a non-negative integer")))
    }
}

/// (|S|, μ_2, μ_3) ↦ (|S_2|, |S_4|, |S_5|) via
/// |S| = Σ, μ_2 = |S_2| − |S_4| + |S_5|, μ_3 = |S_5| − |S_2|.
pub fn recover_order_profile_f20(size: i64, mu2: i64, mu3: i64) -> Result<(i64, i64, i64), EngineError> {
    if size <= 0 {
        return Err(EngineError::Inconsistent("a generating set is non-empty".into()));
    }
    let i = |v: i64| Q::from_integer(v);
    let a = vec![vec![i(1), i(1), i(1)], vec![i(1), i(-1), i(1)], vec![i(-1), i(0), i(1)]];
    let x = solve(a, vec![i(size), i(mu2), i(mu3)]).expect("invertible");
    Ok((as_count(x[0], "|S_2|")?, as_count(x[1], "|S_4|")?, as_count(x[2], "|S_5|")?))
}

/// The F42 system: rows give |S|, μ_2, μ_3, μ_5 in terms of
/// (|S_2|, |S_3|, |S_6|, |S_7|).
pub fn f42_matrix() -> Vec<Vec<Q>> {
    vec![
        vec![q(1, 1), q(1, 1), q(1, 1), q(1, 1)],
        vec![q(-1, 1), q(1, 1), q(-1, 1), q(1, 1)],
        vec![q(1, 1), q(-1, 2), q(-1, 2), q(1, 1)],
        vec![q(-1, 1), q(-1, 2), q(1, 2), q(1, 1)],
    ]
}

/// Which μ-values of the second set play the roles of μ_3 and μ_5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assignment {
    Direct,
    /// μ_3 and μ_5 interchanged.
    Swapped,
}

fn swap_rows(mut m: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    m.swap(2, 3);
    m
}

/// A⁻¹PA where P interchanges the μ_3 and μ_5 rows: the profile of S in
/// terms of the profile of T when T's μ_3, μ_5 are S's μ_5, μ_3.
pub fn f42_transfer_matrix() -> Vec<Vec<Q>> {
    let a = f42_matrix();
    mat_mul(&inverse(&a).expect("invertible"), &swap_rows(a))
}

/// (|S|, μ_2, μ_3, μ_5) ↦ (|S_2|, |S_3|, |S_6|, |S_7|). Under `Swapped`
/// the system with the μ_3/μ_5 rows interchanged is solved; its other
/// coordinates need not be counts, but the |S_7| coordinate is the same
/// as in the direct solve and must be one.
pub fn recover_order_profile_f42(mu: [i64; 4], assignment: Assignment) -> Result<[Q; 4], EngineError> {
    if mu[0] <= 0 {
        return Err(EngineError::Inconsistent("a generating set is non-empty".into()));
    }
    let a = match assignment {
        Assignment::Direct => f42_matrix(),
        Assignment::Swapped => swap_rows(f42_matrix()),
    };
    let x = solve(a, mu.iter().map(|&v| Q::from_integer(v)).collect()).expect("invertible");
    as_count(x[3], "|S_7|")?;
    if assignment == Assignment::Direct {
        for (v, name) in x.iter().zip(["|S_2|", "|S_3|", "|S_6|"]) {
            as_count(*v, name)?;
        }
    }
    Ok([x[0], x[1], x[2], x[3]])
}
