//! The dictionary between quiver parameters θ and Calogero–Moser parameters
//! (a, k₀, …, k_{l−1}), smoothness predicates, parameter transport to the fixed-point
//! components, and the cyclic Calogero–Moser surfaces.

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{bar, translate_theta, ThetaVector};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::partitions::ResidueVector;

/// Parameters (a, k₀, …, k_{l−1}) with Σ k_j = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamSet {
    pub l: usize,
    pub a: Rational,
    pub k: Vec<Rational>,
}

impl ParamSet {
    pub fn new(a: Rational, k: Vec<Rational>) -> Result<ParamSet> {
        if k.is_empty() {
            return Err(Error::Invalid("k needs at least one entry".into()));
        }
        let s: Rational = k.iter().sum();
        if !s.is_zero() {
            return Err(Error::KSumNonzero(s.to_string()));
        }
        Ok(ParamSet { l: k.len(), a, k })
    }

    /// The l = 1 parameter set, where only a matters.
    pub fn rank_one(a: Rational) -> ParamSet {
        ParamSet { l: 1, a, k: vec![Rational::zero()] }
    }

    /// k_j with j read modulo l.
    pub fn k_at(&self, j: i64) -> &Rational {
        &self.k[j.rem_euclid(self.l as i64) as usize]
    }

    pub fn add(&self, other: &ParamSet) -> Result<ParamSet> {
        crate::partitions::check_modulus(self.l, other.l)?;
        Ok(ParamSet {
            l: self.l,
            a: &self.a + &other.a,
            k: self.k.iter().zip(&other.k).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> ParamSet {
        ParamSet { l: self.l, a: &self.a * c, k: self.k.iter().map(|x| x * c).collect() }
    }

    /// The k-values sorted, for comparisons up to permutation.
    pub fn sorted_k(&self) -> Vec<Rational> {
        let mut v = self.k.clone();
        v.sort();
        v
    }
}

/// θ_i = k_{−i} − k_{1−i} for i ≠ 0 and θ₀ = −a + k₀ − k₁; Σ(θ) = −a.
pub fn theta_from_ak(p: &ParamSet) -> ThetaVector {
    let l = p.l as i64;
    let entries = (0..l)
        .map(|i| {
            let base = p.k_at(-i) - p.k_at(1 - i);
            if i == 0 {
                base - &p.a
            } else {
                base
            }
        })
        .collect();
    ThetaVector::new(entries)
}

/// Inverse of [`theta_from_ak`] under the normalization Σ k = 0.
pub fn ak_from_theta(theta: &ThetaVector) -> ParamSet {
    let l = theta.modulus;
    let a = -theta.sum();
    // k_{j+1} = k_j − θ_{−j}, starting from k₁ = 0
    let mut k = vec![Rational::zero(); l];
    let mut cur = Rational::zero();
    for j in 1..l as i64 {
        cur -= theta.at(-j);
        k[((j + 1) as usize) % l] = cur.clone();
    }
    let shift = k.iter().sum::<Rational>() / Rational::from(l);
    for x in &mut k {
        *x -= &shift;
    }
    ParamSet { l, a, k }
}

/// The generator s_j acting on (a, k): s_r (r ≠ 0) swaps k_{l−r} and k_{l−r+1};
/// s₀(a, k₀, k₁, …) = (a, k₁ + a, k₀ − a, …).
pub fn weyl_on_ak(j: usize, p: &ParamSet) -> ParamSet {
    let l = p.l;
    if l == 1 {
        return p.clone();
    }
    let j = j % l;
    let mut out = p.clone();
    if j == 0 {
        out.k[0] = &p.k[1] + &p.a;
        out.k[1] = &p.k[0] - &p.a;
    } else {
        out.k.swap(l - j, (l - j + 1) % l);
    }
    out
}

/// Σ(θ)·∏_{1≤i≤j≤l−1} ∏_{|t|≤n−1} (θ_i + ⋯ + θ_j + tΣ(θ)) ≠ 0.
pub fn smooth_quiver(theta: &ThetaVector, n: usize) -> bool {
    let s = theta.sum();
    if s.is_zero() {
        return false;
    }
    let l = theta.modulus;
    let n = n as i64;
    for i in 1..l {
        let mut partial = Rational::zero();
        for j in i..l {
            partial += &theta.entries[j];
            for t in -(n - 1)..n {
                if (&partial + &s * Rational::integer(t)).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// a·∏_{i≠j} ∏_{0≤r≤n−1} (k_i − k_j − r·a) ≠ 0.
pub fn smooth_gl1n(p: &ParamSet, n: usize) -> bool {
    smooth_gl1n_with(p, n, true)
}

/// As [`smooth_gl1n`]; with `include_a = false` the leading factor a is dropped, which is
/// the relevant criterion for n = 1 where the space does not depend on a.
pub fn smooth_gl1n_with(p: &ParamSet, n: usize, include_a: bool) -> bool {
    if include_a && p.a.is_zero() {
        return false;
    }
    for i in 0..p.l {
        for j in 0..p.l {
            if i == j {
                continue;
            }
            let diff = &p.k[i] - &p.k[j];
            for r in 0..n as i64 {
                if (&diff - &p.a * Rational::integer(r)).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The cyclic surface ∏(e − l·k_i) = xy is smooth iff the k_i are pairwise distinct.
pub fn smooth_cyclic(k: &[Rational]) -> bool {
    let mut v = k.to_vec();
    v.sort();
    v.windows(2).all(|w| w[0] != w[1])
}

/// k₀k₁k₂(k₀−k₁)(k₀−k₂)(k₁−k₂) ≠ 0, with k₀ + k₁ + k₂ = 0 required.
pub fn smooth_g4(k0: &Rational, k1: &Rational, k2: &Rational) -> Result<bool> {
    let s = k0 + k1 + k2;
    if !s.is_zero() {
        return Err(Error::KSumNonzero(s.to_string()));
    }
    let prod = k0 * k1 * k2 * (k0 - k1) * (k0 - k2) * (k1 - k2);
    Ok(!prod.is_zero())
}

fn check_transport_input(p: &ParamSet, k_factor: usize, d: &ResidueVector) -> Result<usize> {
    if k_factor == 0 {
        return Err(Error::Invalid("k must be positive".into()));
    }
    let m = k_factor * p.l;
    if d.modulus != m {
        return Err(Error::ModulusMismatch { left: d.modulus, right: m });
    }
    Ok(m)
}

fn checked(out: ParamSet) -> Result<ParamSet> {
    let s: Rational = out.k.iter().sum();
    if !s.is_zero() {
        return Err(Error::TransportSum(s.to_string()));
    }
    Ok(out)
}

/// The parameters (a′, k′) of G(kl,1,r) on the component indexed by d, closed form:
/// a′ = ka and, for 1 ≤ j ≤ m with k′₀ = k′_m,
/// k′_j = k_{j mod l} + a(⌊(j−1)/l⌋ − (k−1)/2 + k(d_{1−j} − d_{−j})).
pub fn transport(p: &ParamSet, k_factor: usize, d: &ResidueVector) -> Result<ParamSet> {
    let m = check_transport_input(p, k_factor, d)?;
    let kf = k_factor as i64;
    let half = Rational::new(kf - 1, 2);
    let mut k = vec![Rational::zero(); m];
    for j in 1..=m as i64 {
        let shift = Rational::integer((j - 1) / p.l as i64) - &half
            + Rational::integer(kf * (d.at(1 - j) - d.at(-j)));
        k[(j as usize) % m] = p.k_at(j) + &p.a * shift;
    }
    checked(ParamSet { l: m, a: &p.a * Rational::integer(kf), k })
}

/// The same parameters computed through θ: translate θ[k] by α = d − d₀δ, so that
/// θ′ = θ[k] + kΣ(θ)·d̄, then convert back.
pub fn transport_via_theta(p: &ParamSet, k_factor: usize, d: &ResidueVector) -> Result<ParamSet> {
    check_transport_input(p, k_factor, d)?;
    let theta_k = theta_from_ak(p).repeat(k_factor);
    let alpha = d.add_delta(-d.entries[0]);
    debug_assert_eq!(bar(&alpha), bar(d));
    let theta_prime = translate_theta(&alpha, &theta_k)?;
    checked(ak_from_theta(&theta_prime))
}

/// The surface ∏_i (e − root_i) = xy with C^×-weight `weight` on x.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCMSurface {
    pub l: usize,
    pub roots: Vec<Rational>,
    pub weight: i64,
}

impl CyclicCMSurface {
    pub fn from_roots(roots: Vec<Rational>, weight: i64) -> CyclicCMSurface {
        CyclicCMSurface { l: roots.len(), roots, weight }
    }

    pub fn sorted_roots(&self) -> Vec<Rational> {
        let mut v = self.roots.clone();
        v.sort();
        v
    }

    /// Coefficients of ∏(e − root_i), constant term first.
    pub fn polynomial(&self) -> Vec<Rational> {
        let mut coeffs = vec![Rational::one()];
        for r in &self.roots {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        coeffs
    }

    /// Smooth iff the roots are pairwise distinct.
    pub fn is_smooth(&self) -> bool {
        smooth_cyclic(&self.roots)
    }
}

/// The cyclic Calogero–Moser surface ∏(e − l·k_i) = xy, weight 1.
pub fn cyclic_cm_polynomial(k: &[Rational]) -> Result<CyclicCMSurface> {
    let s: Rational = k.iter().sum();
    if !s.is_zero() {
        return Err(Error::KSumNonzero(s.to_string()));
    }
    let l = Rational::from(k.len());
    Ok(CyclicCMSurface::from_roots(k.iter().map(|x| x * &l).collect(), 1))
}

/// Fixed-point surface of G4 for the element of order 4: e(e−12k₀)(e−12k₁)(e−12k₂) = xy.
pub fn g4_surface_order4(k0: &Rational, k1: &Rational, k2: &Rational) -> CyclicCMSurface {
    let t = Rational::integer(12);
    CyclicCMSurface::from_roots(vec![Rational::zero(), &t * k0, &t * k1, &t * k2], 2)
}

/// Fixed-point surface of G4 for the element of order 6: ∏(e+6k_i)(e−12k_i) = xy.
pub fn g4_surface_order6(k0: &Rational, k1: &Rational, k2: &Rational) -> CyclicCMSurface {
    let six = Rational::integer(-6);
    let twelve = Rational::integer(12);
    let ks = [k0, k1, k2];
    let mut roots: Vec<Rational> = ks.iter().map(|k| &six * *k).collect();
    roots.extend(ks.iter().map(|k| &twelve * *k));
    CyclicCMSurface::from_roots(roots, 3)
}
