use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
///
/// Computed as (x^m - 1) divided by every Φ_d with d | m, d < m. Cached per order.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    assert!(m >= 1, "cyclotomic order must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &div);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(m, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (t, &dt) in den.iter().enumerate() {
            rem[i + t] -= c * dt;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler's totient.
pub fn totient(m: u32) -> usize {
    (1..=m).filter(|&j| j.gcd(&m) == 1).count()
}

/// Exact element of Q(ζ_m), stored in the power basis 1, ζ, …, ζ^{φ(m)-1}.
///
/// The coefficient vector is always reduced modulo Φ_m and has length exactly φ(m),
/// so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Cyclotomic {
        Cyclotomic { order, coeffs: vec![Rational::zero(); totient(order)] }
    }

    pub fn one(order: u32) -> Cyclotomic {
        Cyclotomic::from_rational(Rational::one(), order)
    }

    pub fn from_rational(q: Rational, order: u32) -> Cyclotomic {
        let mut c = Cyclotomic::zero(order);
        c.coeffs[0] = q;
        c
    }

    pub fn from_int(n: i64, order: u32) -> Cyclotomic {
        Cyclotomic::from_rational(Rational::integer(n), order)
    }

    /// ζ_m^j for any integer j.
    pub fn zeta_pow(order: u32, j: i64) -> Cyclotomic {
        let e = j.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Cyclotomic::from_poly(order, poly)
    }

    pub fn zeta(order: u32) -> Cyclotomic {
        Cyclotomic::zeta_pow(order, 1)
    }

    /// Builds the element from an arbitrary polynomial in ζ, reducing modulo Φ_m.
    pub fn from_poly(order: u32, mut poly: Vec<Rational>) -> Cyclotomic {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        if poly.len() > deg {
            for i in (deg..poly.len()).rev() {
                let c = std::mem::take(&mut poly[i]);
                if c.is_zero() {
                    continue;
                }
                for (t, &pt) in phi.iter().enumerate().take(deg) {
                    if pt != 0 {
                        poly[i - deg + t] -= &c * Rational::integer(pt);
                    }
                }
            }
        }
        poly.resize(deg, Rational::zero());
        Cyclotomic { order, coeffs: poly }
    }

    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Cyclotomic> {
        if coeffs.len() != totient(order) {
            return Err(Error::Invalid(format!(
                "Q(ζ_{order}) element needs {} coefficients, got {}",
                totient(order),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { order, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Cyclotomic) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { order: self.order, coeffs })
    }

    pub fn try_sub(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cyclotomic { order: self.order, coeffs })
    }

    /// Exact product; both operands must already live in the same field.
    pub fn try_mul(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Cyclotomic::from_poly(self.order, prod))
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_m.
    pub fn inv(&self) -> Option<Cyclotomic> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Cyclotomic::from_rational(q.inv()?, self.order));
        }
        let phi: Vec<Rational> =
            cyclotomic_polynomial(self.order).iter().map(|&c| Rational::integer(c)).collect();
        // Invariant: s * self ≡ r (mod Φ_m).
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() != 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd is nonconstant: impossible for irreducible Φ_m and nonzero input
                return None;
            }
        }
        let c = r1[0].inv()?;
        let s: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Some(Cyclotomic::from_poly(self.order, s))
    }

    /// Image under ζ_order ↦ ζ_m^{m/order}.
    pub fn embed(&self, m: u32) -> Result<Cyclotomic> {
        if m == 0 || m % self.order != 0 {
            return Err(Error::NotDivisible { order: self.order, target: m });
        }
        let step = (m / self.order) as usize;
        let mut poly = vec![Rational::zero(); step * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Cyclotomic::from_poly(m, poly))
    }

    /// Galois automorphism ζ ↦ ζ^j (j coprime to the order).
    pub fn galois(&self, j: i64) -> Cyclotomic {
        let m = self.order as i64;
        debug_assert_eq!(j.rem_euclid(m).gcd(&m), 1);
        let mut acc = vec![Rational::zero(); self.order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as i64 * j).rem_euclid(m) as usize;
            acc[e] += c;
        }
        Cyclotomic::from_poly(self.order, acc)
    }

    /// Complex conjugate (ζ ↦ ζ^{-1}).
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// Floating-point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.order as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let ang = 2.0 * std::f64::consts::PI * i as f64 / m;
            let v = c.to_f64();
            (re + v * ang.cos(), im + v * ang.sin())
        })
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last().expect("division by zero polynomial").inv().unwrap();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut q = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead;
        for (t, bt) in b.iter().enumerate() {
            rem[shift + t] -= &c * bt;
        }
        q[shift] = c;
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (trim(q), rem)
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*z{}", self.order),
                _ => format!("{c}*z{}^{i}", self.order),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on an order mismatch; use the `try_` methods where the
// orders are not known to agree.
impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_sub(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Exact product of two elements of the same cyclotomic field.
pub fn cyclotomic_mul(x: &Cyclotomic, y: &Cyclotomic) -> Result<Cyclotomic> {
    x.try_mul(y)
}

/// Embeds `x` into Q(ζ_m); `x.order()` must divide `m`.
pub fn embed(x: &Cyclotomic, m: u32) -> Result<Cyclotomic> {
    x.embed(m)
}
