//! Irreducible components of the μ_m-fixed locus (m = kl): the index set E(k,l,n),
//! its bijection with tuples of k-cores, and the per-component catalog.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affine_weyl::is_plus;
use crate::error::{Error, Result};
use crate::parameters::{smooth_gl1n, transport, ParamSet};
use crate::partitions::{
    beta_flat_k_gamma_inverse, core, core_multi, is_l_core, enumerate_core_tuples, enumerate_multipartitions,
    flip, from_core_and_quotient, quotient, residue_to_core, residues, Multipartition, Partition, ResidueVector,
};

/// How C^×-fixed points are labelled by multipartitions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Labels attached to characters through the baby Verma construction.
    #[default]
    Gordon,
    /// Labels coming from the quiver description; the flip λ ↦ λ^♭ of the Gordon labels.
    Quiver,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Convention> {
        match s {
            "gordon" => Ok(Convention::Gordon),
            "quiver" => Ok(Convention::Quiver),
            _ => Err(Error::Parse(format!("unknown convention {s:?} (expected gordon or quiver)"))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Gordon => "gordon",
            Convention::Quiver => "quiver",
        })
    }
}

/// Residue-class sums of d modulo l, if they are all equal.
fn common_class_sum(d: &ResidueVector, l: usize) -> Option<i64> {
    if l == 0 || d.modulus % l != 0 {
        return None;
    }
    let sums = d.class_sums(l).entries;
    sums.iter().all(|&s| s == sums[0]).then_some(sums[0])
}

/// Whether d ∈ E(k,l,n).
pub fn in_e(d: &ResidueVector, k: usize, l: usize, n: usize) -> bool {
    d.modulus == k * l && common_class_sum(d, l) == Some(n as i64) && is_plus(d)
}

/// δ: E(k,l,n) → (C_k)^l[≡n, ≤n], d ↦ l-quotient of the m-core of d.
pub fn delta_map(d: &ResidueVector, l: usize) -> Result<Multipartition> {
    let n = common_class_sum(d, l).filter(|&n| n >= 0);
    let (nu, r) = residue_to_core(d);
    match n {
        Some(_) if r >= 0 => {
            debug_assert!(core(&nu, l).0.is_empty());
            Ok(quotient(&nu, l))
        }
        _ => Err(Error::NotInE(d.to_string(), d.modulus / l.max(1), l, n.unwrap_or(0) as usize)),
    }
}

/// δ⁻¹: γ ↦ Res_m(ν) + rδ_m with ν the m-core of l-quotient γ and r = (n − |γ|)/k.
pub fn delta_inverse(gamma: &Multipartition, k: usize, l: usize, n: usize) -> Result<ResidueVector> {
    let bad = || Error::NotACoreTuple(gamma.to_string(), k, l, n);
    if gamma.width() != l || k == 0 {
        return Err(bad());
    }
    let size = gamma.size();
    if size > n || (n - size) % k != 0 {
        return Err(bad());
    }
    if gamma.components().iter().any(|g| !is_l_core(g, k)) {
        return Err(bad());
    }
    let nu = from_core_and_quotient(&Partition::empty(), gamma, l)?;
    let r = ((n - size) / k) as i64;
    Ok(residues(&nu, k * l).add_delta(r))
}

/// E(k,l,n), computed as the image of δ⁻¹ and listed in the order of
/// [`enumerate_core_tuples`].
pub fn enumerate_e(k: usize, l: usize, n: usize) -> Vec<ResidueVector> {
    enumerate_core_tuples(k, l, n)
        .iter()
        .map(|g| delta_inverse(g, k, l, n).expect("core tuples lie in the domain of δ⁻¹"))
        .collect()
}

/// The multipartitions λ ∈ P^l[n] whose fixed points lie on the component of γ.
pub fn labels(gamma: &Multipartition, k: usize, n: usize, convention: Convention) -> Vec<Multipartition> {
    let target = match convention {
        Convention::Gordon => gamma.clone(),
        Convention::Quiver => flip(gamma),
    };
    enumerate_multipartitions(gamma.width(), n)
        .into_iter()
        .filter(|lam| core_multi(lam, k) == target)
        .collect()
}

/// The label of the fixed point i_γ(z_μ).
pub fn label_injection(mu: &Multipartition, k: usize, gamma: &Multipartition, convention: Convention) -> Result<Multipartition> {
    let lam = beta_flat_k_gamma_inverse(mu, k, gamma)?;
    Ok(match convention {
        Convention::Gordon => lam,
        Convention::Quiver => flip(&lam),
    })
}

/// One pair (μ, λ) of the label injection P^m[r] → P^l[n].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelPair {
    pub mu: Multipartition,
    pub lambda: Multipartition,
}

/// One irreducible component of the μ_m-fixed locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDescriptor {
    pub l: usize,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub gamma: Multipartition,
    pub r: usize,
    pub d: ResidueVector,
    pub c_prime: ParamSet,
    pub convention: Convention,
    pub labels: Vec<Multipartition>,
    pub label_injection: Vec<LabelPair>,
}

impl ComponentDescriptor {
    /// Builds the descriptor of the component indexed by γ.
    pub fn build(p: &ParamSet, n: usize, k: usize, gamma: &Multipartition, convention: Convention) -> Result<ComponentDescriptor> {
        let l = p.l;
        let d = delta_inverse(gamma, k, l, n)?;
        let r = (n - gamma.size()) / k;
        let m = k * l;
        let c_prime = transport(p, k, &d)?;
        let label_injection = enumerate_multipartitions(m, r)
            .into_iter()
            .map(|mu| {
                let lambda = label_injection(&mu, k, gamma, convention)?;
                Ok(LabelPair { mu, lambda })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ComponentDescriptor {
            l,
            n,
            k,
            m,
            gamma: gamma.clone(),
            r,
            d,
            c_prime,
            convention,
            labels: labels(gamma, k, n, convention),
            label_injection,
        })
    }
}

/// All components of the μ_{kl}-fixed locus for smooth parameters p.
pub fn component_catalog(p: &ParamSet, n: usize, k: usize, convention: Convention) -> Result<Vec<ComponentDescriptor>> {
    if !smooth_gl1n(p, n) {
        return Err(Error::NotSmooth(n));
    }
    enumerate_core_tuples(k, p.l, n)
        .par_iter()
        .map(|g| ComponentDescriptor::build(p, n, k, g, convention))
        .collect()
}

/// A containment predicted by cores that the label sets contradict, or vice versa.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestingViolation {
    pub gamma1: Multipartition,
    pub gamma2: Multipartition,
    pub labels_contained: bool,
    pub core_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestingReport {
    pub k1: usize,
    pub k2: usize,
    pub l: usize,
    pub n: usize,
    pub pairs_checked: usize,
    pub pass: bool,
    pub violations: Vec<NestingViolation>,
}

/// Checks labels(γ₂) ⊆ labels(γ₁) ⟺ Core_{k₁}(γ₂) = γ₁ over all pairs.
pub fn nesting_check(k1: usize, k2: usize, l: usize, n: usize) -> Result<NestingReport> {
    if k1 == 0 || k2 % k1 != 0 {
        return Err(Error::Divisibility { k1, k2 });
    }
    let label_sets = |k: usize| -> Vec<(Multipartition, BTreeSet<Multipartition>)> {
        enumerate_core_tuples(k, l, n)
            .into_iter()
            .map(|g| {
                let set = labels(&g, k, n, Convention::Gordon).into_iter().collect();
                (g, set)
            })
            .collect()
    };
    let outer = label_sets(k1);
    let inner = label_sets(k2);
    let mut violations = Vec::new();
    for (g2, s2) in &inner {
        let c = core_multi(g2, k1);
        for (g1, s1) in &outer {
            let labels_contained = s2.is_subset(s1);
            let core_matches = &c == g1;
            if labels_contained != core_matches {
                violations.push(NestingViolation {
                    gamma1: g1.clone(),
                    gamma2: g2.clone(),
                    labels_contained,
                    core_matches,
                });
            }
        }
    }
    Ok(NestingReport {
        k1,
        k2,
        l,
        n,
        pairs_checked: outer.len() * inner.len(),
        pass: violations.is_empty(),
        violations,
    })
}
