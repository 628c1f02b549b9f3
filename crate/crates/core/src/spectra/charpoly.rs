//! Exact characteristic polynomials of 0/1 symmetric matrices.
//!
//! Two independent routes: fraction-free Bareiss determinants of xI − A at
//! n + 1 integer points followed by Newton interpolation, and a Hessenberg
//! reduction modulo several 62-bit primes combined by CRT under the bound
//! |c_k| ≤ C(n,k)·Δ^k. The second is much faster and is what bulk searches
//! use; tests hold the two against each other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::Graph;

/// Coefficients of det(xI − A), highest degree first (so `[0]` is 1).
pub type CharPoly = Vec<BigInt>;

/// Determinant by Bareiss fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// det(xI − A) at x = 0..n by Bareiss, then exact Newton interpolation.
pub fn char_poly_exact(graph: &Graph) -> CharPoly {
    let n = graph.n();
    let a = graph.adjacency_i64();
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|x| {
            let m =
                (0..n).map(|i| (0..n).map(|j| BigInt::from(if i == j { x } else { 0 } - a[i][j])).collect()).collect();
            bareiss_det(m)
        })
        .collect();
    interpolate(&values)
}

/// Monic integer polynomial of degree n through (k, values[k]), k = 0..n.
fn interpolate(values: &[BigInt]) -> CharPoly {
    let n = values.len() - 1;
    // divided differences at nodes 0..n are integer multiples of 1/k!
    let mut dd: Vec<num_rational::BigRational> =
        values.iter().map(|v| num_rational::BigRational::from_integer(v.clone())).collect();
    for level in 1..=n {
        for i in (level..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / num_rational::BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner over the Newton basis, ascending coefficients
    let mut poly: Vec<num_rational::BigRational> = vec![dd[n].clone()];
    for k in (0..n).rev() {
        // poly = poly * (x - k) + dd[k]
        let mut next = vec![num_rational::BigRational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * num_rational::BigRational::from_integer(BigInt::from(k));
        }
        next[0] += &dd[k];
        poly = next;
    }
    poly.iter()
        .rev()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes just below 2^62.
fn crt_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime_u64(c) {
            out.push(c);
        }
        c -= 2;
    }
    out
}

thread_local! {
    static PRIMES: Vec<u64> = crt_primes(16);
}

/// Characteristic polynomial mod p via Hessenberg reduction, ascending.
fn char_poly_mod(a: &[Vec<i64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect()).collect();
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = pow_mod(h[j + 1][j], p - 2, p);
        for k in j + 2..n {
            if h[k][j] == 0 {
                continue;
            }
            let u = mul_mod(h[k][j], inv, p);
            for c in 0..n {
                let t = mul_mod(u, h[j + 1][c], p);
                h[k][c] = sub(h[k][c], t);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[k], p);
                row[j + 1] = (row[j + 1] + t) % p;
            }
        }
    }
    // p_m = (x − h[m−1][m−1]) p_{m−1} − Σ_i (Π sub-diagonal) h[m−i−1][m−1] p_{m−i−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (i, &c) in prev.iter().enumerate() {
            cur[i + 1] = (cur[i + 1] + c) % p;
            cur[i] = sub(cur[i], mul_mod(c, h[m - 1][m - 1], p));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            if t == 0 {
                break;
            }
            let f = mul_mod(t, h[m - i - 1][m - 1], p);
            if f == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                cur[k] = sub(cur[k], mul_mod(f, c, p));
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// Bits needed for max_k 2·C(n,k)·Δ^k.
fn coefficient_bits(n: usize, max_degree: usize) -> u64 {
    let mut best = BigInt::one();
    let mut binom = BigInt::one();
    let mut power = BigInt::one();
    for k in 0..=n {
        let v = &binom * &power;
        if v > best {
            best = v;
        }
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
        power *= BigInt::from(max_degree.max(1));
    }
    best.bits() + 2
}

/// Exact characteristic polynomial by multimodular Hessenberg + CRT.
pub fn char_poly_multimodular(graph: &Graph) -> CharPoly {
    let n = graph.n();
    let a = graph.adjacency_i64();
    let delta = (0..n).map(|v| graph.degree(v)).max().unwrap_or(0);
    let need = coefficient_bits(n, delta);
    let primes: Vec<u64> = PRIMES.with(|ps| ps.clone());
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for &p in &primes {
        let res = char_poly_mod(&a, p);
        let pb = BigInt::from(p);
        if modulus.is_one() {
            acc = res.iter().map(|&r| BigInt::from(r)).collect();
        } else {
            // x ≡ acc (mod M), x ≡ r (mod p): x = acc + M·((r − acc)·M⁻¹ mod p)
            let m_inv = BigInt::from(pow_mod((&modulus % &pb).try_into().unwrap(), p - 2, p));
            for (c, &r) in acc.iter_mut().zip(&res) {
                let diff = (BigInt::from(r) - &*c).mod_floor(&pb);
                let t = (diff * &m_inv).mod_floor(&pb);
                *c += &modulus * t;
            }
        }
        modulus *= pb;
        if modulus.bits() > need {
            break;
        }
    }
    assert!(modulus.bits() > need, "not enough CRT primes for n = {n}");
    let half = &modulus >> 1;
    acc.iter().rev().map(|c| if c > &half { c - &modulus } else { c.clone() }).collect()
}

/// Ascending-degree copy for polynomial arithmetic helpers.
pub fn ascending(cp: &CharPoly) -> Vec<BigInt> {
    cp.iter().rev().cloned().collect()
}

/// Multiplicity of the integer root r.
pub fn root_multiplicity(cp: &CharPoly, r: i64) -> usize {
    let mut poly: Vec<BigInt> = cp.clone();
    let rb = BigInt::from(r);
    let mut count = 0;
    while poly.len() > 1 {
        // synthetic division by (x − r), descending coefficients
        let mut q = Vec::with_capacity(poly.len() - 1);
        let mut carry = BigInt::zero();
        for c in &poly[..poly.len() - 1] {
            carry = &carry * &rb + c;
            q.push(carry.clone());
        }
        let rem = &carry * &rb + &poly[poly.len() - 1];
        if !rem.is_zero() {
            break;
        }
        count += 1;
        poly = q;
    }
    count
}

/// Number of distinct complex roots: deg(p / gcd(p, p')).
pub fn distinct_root_count(cp: &CharPoly) -> usize {
    use num_rational::BigRational as Q;
    let p: Vec<Q> = ascending(cp).into_iter().map(Q::from_integer).collect();
    let dp: Vec<Q> = p.iter().enumerate().skip(1).map(|(i, c)| c * Q::from_integer(BigInt::from(i))).collect();
    let g = poly_gcd(p.clone(), dp);
    (p.len() - 1) - (g.len() - 1)
}

fn trim(mut v: Vec<num_rational::BigRational>) -> Vec<num_rational::BigRational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_gcd(a: Vec<num_rational::BigRational>, b: Vec<num_rational::BigRational>) -> Vec<num_rational::BigRational> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !(b.len() == 1 && b[0].is_zero()) {
        // a mod b
        let mut r = a.clone();
        let lead = b.last().unwrap().clone();
        while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
            let shift = r.len() - b.len();
            let f = r.last().unwrap() / &lead;
            for (i, c) in b.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            r.pop();
            r = trim(r);
            if r.is_empty() {
                r.push(num_rational::BigRational::zero());
            }
        }
        a = b;
        b = trim(r);
    }
    let lead = a.last().unwrap().clone();
    a.iter().map(|c| c / &lead).collect()
}

/// Renders coefficients as decimal strings for reports.
pub fn render(cp: &CharPoly) -> Vec<String> {
    cp.iter().map(ToString::to_string).collect()
}

pub fn is_monic(cp: &CharPoly) -> bool {
    cp.first().is_some_and(|c| c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> CharPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn complete_graph_k4() {
        let k4 = Graph::complete(4);
        assert_eq!(char_poly_exact(&k4), ints(&[1, 0, -6, -8, -3]));
        assert_eq!(char_poly_multimodular(&k4), ints(&[1, 0, -6, -8, -3]));
        assert_eq!(root_multiplicity(&char_poly_exact(&k4), -1), 3);
        assert_eq!(root_multiplicity(&char_poly_exact(&k4), 3), 1);
        assert_eq!(distinct_root_count(&char_poly_exact(&k4)), 2);
    }

    #[test]
    fn five_cycle() {
        // expand (x − 2)(x² + x − 1)²
        let c5 = Graph::cycle(5);
        assert_eq!(char_poly_exact(&c5), ints(&[1, 0, -5, 0, 5, -2]));
        assert_eq!(distinct_root_count(&char_poly_exact(&c5)), 3);
    }

    #[test]
    fn bareiss_small() {
        let m = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        assert_eq!(bareiss_det(m), BigInt::from(6));
        let singular = vec![vec![0, 0], vec![1, 1]]
            .into_iter()
            .map(|r: Vec<i64>| r.into_iter().map(BigInt::from).collect())
            .collect();
        assert_eq!(bareiss_det(singular), BigInt::zero());
    }

    #[test]
    fn multimodular_matches_bareiss() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1usize, 2, 7, 15, 24, 42] {
            for p in [0.2, 0.5, 0.9] {
                let g = Graph::random(n, p, &mut rng);
                assert_eq!(char_poly_multimodular(&g), char_poly_exact(&g), "n={n} p={p}");
            }
        }
        let k = Graph::complete(42);
        assert_eq!(char_poly_multimodular(&k), char_poly_exact(&k));
    }

    #[test]
    fn relabel_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = Graph::random(20, 0.4, &mut rng);
        let perm: Vec<usize> = (0..20).map(|i| (i * 7 + 3) % 20).collect();
        assert_eq!(char_poly_multimodular(&g), char_poly_multimodular(&g.relabel(&perm)));
    }

    #[test]
    fn miller_rabin() {
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3215031751));
        assert!(is_prime_u64(2) && !is_prime_u64(1));
    }
}
