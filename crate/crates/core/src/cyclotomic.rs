//! Exact arithmetic in Q(ζ_e), stored in the power basis 1, ζ, …, ζ^{φ(e)−1}
//! modulo the e-th cyclotomic polynomial.
//!
//! Values with different conductors are compared and combined by embedding
//! both into the lcm conductor; the result is never shrunk back.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;
use std::str::FromStr;

use nalgebra::Complex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("cannot parse cyclotomic `{0}`")]
    Parse(String),
}

/// Reduction data for one conductor: `powers[k]` is ζ^k in the power basis.
struct Field {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

thread_local! {
    static FIELDS: RefCell<HashMap<u32, Rc<Field>>> = RefCell::new(HashMap::new());
    static CYCLOTOMIC_POLYS: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Φ_e as ascending integer coefficients.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    cyclotomic_poly_rc(e).as_ref().clone()
}

fn cyclotomic_poly_rc(e: u32) -> Rc<Vec<i64>> {
    assert!(e >= 1, "conductor must be positive");
    if let Some(p) = CYCLOTOMIC_POLYS.with(|c| c.borrow().get(&e).cloned()) {
        return p;
    }
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        num = div_exact(&num, &cyclotomic_poly_rc(d));
    }
    let rc = Rc::new(num);
    CYCLOTOMIC_POLYS.with(|c| c.borrow_mut().insert(e, rc.clone()));
    rc
}

/// Exact division by a monic polynomial.
fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn field(e: u32) -> Rc<Field> {
    if let Some(f) = FIELDS.with(|c| c.borrow().get(&e).cloned()) {
        return f;
    }
    let poly = cyclotomic_poly_rc(e);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(e as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..e {
        powers.push(cur.clone());
        // multiply by x, then replace x^phi by -Σ poly_i x^i
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..phi {
            cur[i] -= top * poly[i];
        }
    }
    let f = Rc::new(Field { phi, powers });
    FIELDS.with(|c| c.borrow_mut().insert(e, f.clone()));
    f
}

/// Euler's totient via the degree of Φ_e.
pub fn euler_phi(e: u32) -> usize {
    field(e).phi
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(e: u32) -> Self {
        Cyclotomic { conductor: e, coeffs: vec![BigRational::zero(); euler_phi(e)] }
    }

    pub fn one(e: u32) -> Self {
        Self::from_int(e, 1)
    }

    pub fn from_int(e: u32, v: i64) -> Self {
        Self::from_rational(e, BigRational::from_integer(v.into()))
    }

    pub fn from_rational(e: u32, v: BigRational) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = v;
        z
    }

    /// ζ_e^k.
    pub fn root(e: u32, k: i64) -> Self {
        let f = field(e);
        let k = k.rem_euclid(e as i64) as usize;
        Cyclotomic { conductor: e, coeffs: f.powers[k].iter().map(|&c| int_q(c)).collect() }
    }

    /// Σ_k m_k ζ_e^k for integer coefficients indexed by exponent.
    pub fn from_exponent_coeffs(e: u32, m: &[i64]) -> Self {
        let f = field(e);
        let mut acc = vec![0i64; f.phi];
        for (k, &c) in m.iter().enumerate() {
            if c != 0 {
                for (a, &p) in acc.iter_mut().zip(&f.powers[k % e as usize]) {
                    *a += c * p;
                }
            }
        }
        Cyclotomic { conductor: e, coeffs: acc.into_iter().map(int_q).collect() }
    }

    /// Builds a value from explicit power-basis coordinates.
    pub fn from_coeffs(e: u32, coeffs: Vec<BigRational>) -> Result<Self, CycError> {
        if coeffs.len() != euler_phi(e) {
            return Err(CycError::Parse(format!(
                "conductor {e} needs {} coefficients, got {}",
                euler_phi(e),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { conductor: e, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if this lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Re-expresses the value in Q(ζ_e2). Panics unless the conductor divides `e2`.
    pub fn embed(&self, e2: u32) -> Self {
        if e2 == self.conductor {
            return self.clone();
        }
        assert!(e2.is_multiple_of(self.conductor), "cannot embed conductor {} into {e2}", self.conductor);
        let step = (e2 / self.conductor) as usize;
        let f = field(e2);
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&f.powers[(j * step) % e2 as usize]) {
                if p != 0 {
                    *o += c * int_q(p);
                }
            }
        }
        Cyclotomic { conductor: e2, coeffs: out }
    }

    fn align(&self, other: &Self) -> (Self, Self) {
        let e = self.conductor.lcm(&other.conductor);
        (self.embed(e), other.embed(e))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycError> {
        if self.conductor != other.conductor {
            return Err(CycError::ConductorMismatch(self.conductor, other.conductor));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { conductor: self.conductor, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycError> {
        if self.conductor != other.conductor {
            return Err(CycError::ConductorMismatch(self.conductor, other.conductor));
        }
        let f = field(self.conductor);
        let e = self.conductor as usize;
        let mut out = vec![BigRational::zero(); f.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, &p) in out.iter_mut().zip(&f.powers[(i + j) % e]) {
                    if p != 0 {
                        *o += &ab * int_q(p);
                    }
                }
            }
        }
        Ok(Cyclotomic { conductor: self.conductor, coeffs: out })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&int_q(k))
    }

    /// Complex conjugation, the field automorphism ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The Galois automorphism ζ ↦ ζ^k for k coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let f = field(self.conductor);
        let e = self.conductor as i64;
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = (j as i64 * k).rem_euclid(e) as usize;
            for (o, &p) in out.iter_mut().zip(&f.powers[idx]) {
                if p != 0 {
                    *o += c * int_q(p);
                }
            }
        }
        Cyclotomic { conductor: self.conductor, coeffs: out }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Evaluation at ζ_e = exp(2πi/e).
    pub fn to_complex(&self) -> Complex<f64> {
        let e = self.conductor as f64;
        self.coeffs.iter().enumerate().fold(Complex::new(0.0, 0.0), |acc, (j, c)| {
            let v = q_to_f64(c);
            let t = std::f64::consts::TAU * j as f64 / e;
            acc + Complex::new(v * t.cos(), v * t.sin())
        })
    }

    /// Hashable exact identity of the value at its current conductor.
    pub fn key(&self) -> (u32, Vec<BigRational>) {
        (self.conductor, self.coeffs.clone())
    }
}

fn int_q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) fn q_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.align(other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.align(rhs);
        a.checked_add(&b).expect("aligned")
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.align(rhs);
        a.checked_mul(&b).expect("aligned")
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

/// Renders as `(a0, a1/b1, …)@e`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")@{}", self.conductor)
    }
}

impl FromStr for Cyclotomic {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Self, CycError> {
        let bad = || CycError::Parse(s.to_string());
        let (body, e) = s.trim().rsplit_once('@').ok_or_else(bad)?;
        let e: u32 = e.trim().parse().map_err(|_| bad())?;
        if e == 0 {
            return Err(bad());
        }
        let body = body.trim().strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let coeffs =
            body.split(',').map(|t| parse_rational(t.trim()).ok_or_else(bad)).collect::<Result<Vec<_>, _>>()?;
        Cyclotomic::from_coeffs(e, coeffs)
    }
}

pub(crate) fn parse_rational(t: &str) -> Option<BigRational> {
    match t.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(t.parse().ok()?)),
    }
}

/// Compact human form: `-1`, `1/2`, `i`, `-z5^2` for ±ζ_d^j in lowest
/// terms, and a float rendering for any other irrational value.
pub fn render_short(x: &Cyclotomic) -> String {
    match x.to_rational() {
        Some(q) if q.is_integer() => q.numer().to_string(),
        Some(q) => q.to_string(),
        None => {
            if let Some(r) = render_root(x) {
                return r;
            }
            let z = x.to_complex();
            if z.im.abs() < 1e-12 {
                format!("{:.6}", z.re)
            } else {
                format!("{:.6}{}{:.6}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
            }
        }
    }
}

fn render_root(x: &Cyclotomic) -> Option<String> {
    let e = x.conductor() as i64;
    let neg = -x.clone();
    // Prefer ζ^k over −ζ^j.
    let (k, sign) = (1..e)
        .find(|&k| Cyclotomic::root(e as u32, k) == *x)
        .map(|k| (k, ""))
        .or_else(|| (1..e).find(|&k| Cyclotomic::root(e as u32, k) == neg).map(|k| (k, "-")))?;
    let g = num_integer::gcd(k, e);
    let body = match (e / g, k / g) {
        (4, 1) => "i".to_string(),
        (4, 3) => return Some(if sign.is_empty() { "-i" } else { "i" }.to_string()),
        (d, 1) => format!("z{d}"),
        (d, j) => format!("z{d}^{j}"),
    };
    Some(format!("{sign}{body}"))
}

impl Cyclotomic {
    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_one())
    }

    pub fn is_negative_rational(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_negative())
    }
}
