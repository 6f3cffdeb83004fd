//! The two actions of the affine Weyl group of type Ã_{l−1}: a nonlinear one on
//! dimension vectors and a linear one on parameters θ, plus translations and orbits.
//!
//! At l = 2 the two neighbours j−1 and j+1 of a node coincide. Both actions then add
//! the neighbour contribution twice, matching the Cartan entry −2 of Ã₁; this is the
//! reading under which the pairing identity and Σ(θ)-invariance hold.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::Result;
use crate::partitions::{check_modulus, residue_to_core, ResidueVector};

/// Element of the affine root lattice, identified with an integer vector on Z/lZ.
pub type RootLatticeElement = ResidueVector;

/// A rational vector indexed by Z/lZ.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaVector {
    pub modulus: usize,
    pub entries: Vec<Rational>,
}

impl ThetaVector {
    pub fn new(entries: Vec<Rational>) -> ThetaVector {
        assert!(!entries.is_empty(), "θ needs a positive modulus");
        ThetaVector { modulus: entries.len(), entries }
    }

    pub fn zero(l: usize) -> ThetaVector {
        ThetaVector::new(vec![Rational::zero(); l])
    }

    pub fn from_ints(v: &[i64]) -> ThetaVector {
        ThetaVector::new(v.iter().map(|&x| Rational::integer(x)).collect())
    }

    pub fn at(&self, i: i64) -> &Rational {
        &self.entries[i.rem_euclid(self.modulus as i64) as usize]
    }

    /// Σ(θ).
    pub fn sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    pub fn add(&self, other: &ThetaVector) -> Result<ThetaVector> {
        check_modulus(self.modulus, other.modulus)?;
        Ok(ThetaVector::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect()))
    }

    pub fn scale(&self, c: &Rational) -> ThetaVector {
        ThetaVector::new(self.entries.iter().map(|x| x * c).collect())
    }

    /// θ[k]: k concatenated copies, so entry j is θ_{j mod l}.
    pub fn repeat(&self, k: usize) -> ThetaVector {
        ThetaVector::new((0..k * self.modulus).map(|j| self.entries[j % self.modulus].clone()).collect())
    }
}

impl fmt::Debug for ThetaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "θ({})", s.join(","))
    }
}

fn neighbours(j: usize, l: usize) -> [usize; 2] {
    [(j + 1) % l, (j + l - 1) % l]
}

/// s_j on dimension vectors: only entry j changes, to δ_{j0} + d_{j+1} + d_{j−1} − d_j.
pub fn reflect_dim(j: usize, d: &ResidueVector) -> ResidueVector {
    let l = d.modulus;
    if l == 1 {
        return d.clone();
    }
    let j = j % l;
    let mut out = d.clone();
    let [a, b] = neighbours(j, l);
    out.entries[j] = i64::from(j == 0) + d.entries[a] + d.entries[b] - d.entries[j];
    out
}

/// s_j on parameters: θ_j ↦ −θ_j and each neighbour slot gains θ_j.
pub fn reflect_theta(j: usize, theta: &ThetaVector) -> ThetaVector {
    let l = theta.modulus;
    if l == 1 {
        return theta.clone();
    }
    let j = j % l;
    let tj = theta.entries[j].clone();
    let mut out = theta.clone();
    for i in neighbours(j, l) {
        out.entries[i] += &tj;
    }
    out.entries[j] = -tj;
    out
}

/// d · θ = Σ d_i θ_i.
pub fn pairing(d: &ResidueVector, theta: &ThetaVector) -> Result<Rational> {
    check_modulus(d.modulus, theta.modulus)?;
    Ok(d.entries
        .iter()
        .zip(&theta.entries)
        .map(|(&di, t)| Rational::integer(di) * t)
        .sum())
}

/// The linear map α_r ↦ ᾱ_r with (ᾱ_r)_i = 2δ_{ir} − δ_{i,r+1} − δ_{i,r−1}; kernel Zδ.
pub fn bar(alpha: &RootLatticeElement) -> ThetaVector {
    let l = alpha.modulus;
    let mut out = vec![0i64; l];
    if l > 1 {
        for (r, &c) in alpha.entries.iter().enumerate() {
            out[r] += 2 * c;
            for i in neighbours(r, l) {
                out[i] -= c;
            }
        }
    }
    ThetaVector::from_ints(&out)
}

/// t_α(θ) = θ + Σ(θ)·ᾱ.
pub fn translate_theta(alpha: &RootLatticeElement, theta: &ThetaVector) -> Result<ThetaVector> {
    theta.add(&bar(alpha).scale(&theta.sum()))
}

/// The unique n with d ~ nδ, and the translation witness α = d − d₀δ.
pub fn orbit_normalize(d: &ResidueVector) -> (i64, RootLatticeElement) {
    let (_, r) = residue_to_core(d);
    (r, d.add_delta(-d.entries[0]))
}

/// Whether d lies in the orbit of nδ for some n ≥ 0, i.e. d is the residue of a partition.
pub fn is_plus(d: &ResidueVector) -> bool {
    orbit_normalize(d).0 >= 0
}
