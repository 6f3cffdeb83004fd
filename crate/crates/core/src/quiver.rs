//! Representations of the doubled cyclic quiver on Z/lZ: moment map, membership in
//! the deformed fiber, the block immersion from Z/klZ, scalings and a randomized
//! simplicity test.
//!
//! X_i maps vertex i+1 to vertex i (a d_i × d_{i+1} matrix) and Y_i maps vertex i to
//! vertex i+1 (a d_{i+1} × d_i matrix).

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::affine_weyl::ThetaVector;
use crate::arith::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// A representation with entries in the field T.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuiverRep<T: Field> {
    pub l: usize,
    pub d: Vec<usize>,
    #[serde(rename = "X")]
    pub x: Vec<Matrix<T>>,
    #[serde(rename = "Y")]
    pub y: Vec<Matrix<T>>,
    /// Scalar zero of the field (a cyclotomic zero carries its order).
    #[serde(skip)]
    pub zero: T,
}

impl<T: Field> QuiverRep<T> {
    pub fn new(d: Vec<usize>, x: Vec<Matrix<T>>, y: Vec<Matrix<T>>, zero: T) -> Result<QuiverRep<T>> {
        let l = d.len();
        if l == 0 || x.len() != l || y.len() != l {
            return Err(Error::Shape(format!("need {l} X and {l} Y matrices for d of length {l}")));
        }
        // empty matrices lose their shape in JSON; restore it from d
        let fix = |m: Matrix<T>, rows: usize, cols: usize| -> Result<Matrix<T>> {
            if m.shape() == (rows, cols) {
                Ok(m)
            } else if m.rows() * m.cols() == 0 && rows * cols == 0 {
                Ok(Matrix::zeros(rows, cols, &zero))
            } else {
                Err(Error::Shape(format!("expected {rows}×{cols}, got {:?}", m.shape())))
            }
        };
        let x = x
            .into_iter()
            .enumerate()
            .map(|(i, m)| fix(m, d[i], d[(i + 1) % l]))
            .collect::<Result<Vec<_>>>()?;
        let y = y
            .into_iter()
            .enumerate()
            .map(|(i, m)| fix(m, d[(i + 1) % l], d[i]))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuiverRep { l, d, x, y, zero })
    }

    pub fn zero_rep(d: Vec<usize>, zero: T) -> QuiverRep<T> {
        let l = d.len();
        let x = (0..l).map(|i| Matrix::zeros(d[i], d[(i + 1) % l], &zero)).collect();
        let y = (0..l).map(|i| Matrix::zeros(d[(i + 1) % l], d[i], &zero)).collect();
        QuiverRep { l, d, x, y, zero }
    }

    pub fn total_dim(&self) -> usize {
        self.d.iter().sum()
    }

    /// μ(X,Y)_i = X_i Y_i − Y_{i−1} X_{i−1}.
    pub fn moment_map(&self) -> Vec<Matrix<T>> {
        let l = self.l;
        (0..l)
            .map(|i| {
                let prev = (i + l - 1) % l;
                let a = self.x[i].mul_with(&self.y[i], &self.zero).expect("shapes follow d");
                let b = self.y[prev].mul_with(&self.x[prev], &self.zero).expect("shapes follow d");
                a.sub(&b).expect("both are d_i × d_i")
            })
            .collect()
    }

    /// ξ·(X, Y) = (ξ⁻¹X, ξY).
    pub fn scale(&self, xi: &T) -> Result<QuiverRep<T>> {
        let inv = xi.recip().ok_or(Error::ZeroScale)?;
        Ok(QuiverRep {
            l: self.l,
            d: self.d.clone(),
            x: self.x.iter().map(|m| m.scale(&inv)).collect(),
            y: self.y.iter().map(|m| m.scale(xi)).collect(),
            zero: self.zero.clone(),
        })
    }

    /// Base change g ∈ ∏ GL(d_i): X_i ↦ g_i X_i g_{i+1}⁻¹, Y_i ↦ g_{i+1} Y_i g_i⁻¹.
    pub fn conjugate(&self, g: &[Matrix<T>]) -> Result<QuiverRep<T>> {
        let l = self.l;
        if g.len() != l || g.iter().zip(&self.d).any(|(m, &di)| m.shape() != (di, di)) {
            return Err(Error::Shape("g must have one d_i × d_i block per vertex".into()));
        }
        let inv = g
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::Invalid("g is not invertible".into())))
            .collect::<Result<Vec<_>>>()?;
        let z = &self.zero;
        let mut x = Vec::with_capacity(l);
        let mut y = Vec::with_capacity(l);
        for i in 0..l {
            let j = (i + 1) % l;
            x.push(g[i].mul_with(&self.x[i], z)?.mul_with(&inv[j], z)?);
            y.push(g[j].mul_with(&self.y[i], z)?.mul_with(&inv[i], z)?);
        }
        Ok(QuiverRep { l, d: self.d.clone(), x, y, zero: self.zero.clone() })
    }

    pub fn map_entries<U: Field>(&self, f: impl Fn(&T) -> U + Copy, zero: U) -> QuiverRep<U> {
        let conv = |m: &Matrix<T>| {
            let rows = m.to_rows().iter().map(|r| r.iter().map(f).collect()).collect();
            Matrix::from_rows(rows, m.cols()).expect("same shape")
        };
        let fix = |m: &Matrix<T>| {
            if m.rows() * m.cols() == 0 {
                Matrix::zeros(m.rows(), m.cols(), &zero)
            } else {
                conv(m)
            }
        };
        QuiverRep {
            l: self.l,
            d: self.d.clone(),
            x: self.x.iter().map(fix).collect(),
            y: self.y.iter().map(fix).collect(),
            zero,
        }
    }
}

/// JSON input form; shapes of empty matrices are restored from d.
#[derive(Deserialize)]
struct RawRep {
    d: Vec<usize>,
    #[serde(rename = "X")]
    x: Vec<Matrix<Rational>>,
    #[serde(rename = "Y")]
    y: Vec<Matrix<Rational>>,
}

impl QuiverRep<Rational> {
    pub fn from_json(s: &str) -> Result<QuiverRep<Rational>> {
        let raw: RawRep = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        QuiverRep::new(raw.d, raw.x, raw.y, Rational::zero())
    }

    pub fn to_cyclotomic(&self, order: u32) -> QuiverRep<Cyclotomic> {
        self.map_entries(move |q| Cyclotomic::from_rational(q.clone(), order), Cyclotomic::zero(order))
    }
}

/// Whether (X, Y) lies in μ⁻¹(I_θ + O_θ): μ_i = θ_i·Id off vertex 0, and μ₀ − θ₀·Id has
/// rank ≤ 1 and trace −Σ θ_i d_i.
pub fn in_deformed_fiber(rep: &QuiverRep<Rational>, theta: &ThetaVector) -> bool {
    if theta.modulus != rep.l {
        return false;
    }
    let mu = rep.moment_map();
    for i in 1..rep.l {
        if mu[i] != Matrix::scalar(rep.d[i], &theta.entries[i]) {
            return false;
        }
    }
    let r = mu[0].sub(&Matrix::scalar(rep.d[0], &theta.entries[0])).expect("square");
    let want: Rational = -rep
        .d
        .iter()
        .zip(&theta.entries)
        .map(|(&di, t)| Rational::from(di) * t)
        .sum::<Rational>();
    r.rank_bareiss() <= 1 && r.trace(&Rational::zero()) == want
}

fn block_offsets(d: &[usize], l: usize) -> (Vec<usize>, Vec<usize>) {
    let mut offset = vec![0; d.len()];
    let mut dims = vec![0; l];
    for (j, &dj) in d.iter().enumerate() {
        offset[j] = dims[j % l];
        dims[j % l] += dj;
    }
    (offset, dims)
}

/// Block-diagonal sum over j ≡ i mod l of square matrices indexed by Z/mZ.
pub fn block_diagonal_by_residue<T: Field>(mats: &[Matrix<T>], d: &[usize], l: usize, zero: &T) -> Vec<Matrix<T>> {
    let (offset, dims) = block_offsets(d, l);
    let mut out: Vec<Matrix<T>> = dims.iter().map(|&n| Matrix::zeros(n, n, zero)).collect();
    for (j, m) in mats.iter().enumerate() {
        for a in 0..m.rows() {
            for b in 0..m.cols() {
                out[j % l].set(offset[j] + a, offset[j] + b, m.get(a, b).clone());
            }
        }
    }
    out
}

/// i_k^{(d)}: X′_i = ⊕_{j≡i} X_j and Y′_i = ⊕_{j≡i} Y_j, with the blocks of vertex i
/// ordered j = i, i+l, …, i+(k−1)l.
pub fn block_immersion<T: Field>(rep: &QuiverRep<T>, l: usize) -> Result<QuiverRep<T>> {
    let m = rep.l;
    if l == 0 || m % l != 0 {
        return Err(Error::Divisibility { k1: l, k2: m });
    }
    let (offset, dims) = block_offsets(&rep.d, l);
    let z = &rep.zero;
    let mut x: Vec<Matrix<T>> = (0..l).map(|i| Matrix::zeros(dims[i], dims[(i + 1) % l], z)).collect();
    let mut y: Vec<Matrix<T>> = (0..l).map(|i| Matrix::zeros(dims[(i + 1) % l], dims[i], z)).collect();
    for j in 0..m {
        let next = (j + 1) % m;
        let (xj, yj) = (&rep.x[j], &rep.y[j]);
        for a in 0..xj.rows() {
            for b in 0..xj.cols() {
                x[j % l].set(offset[j] + a, offset[next] + b, xj.get(a, b).clone());
            }
        }
        for a in 0..yj.rows() {
            for b in 0..yj.cols() {
                y[j % l].set(offset[next] + a, offset[j] + b, yj.get(a, b).clone());
            }
        }
    }
    Ok(QuiverRep { l, d: dims, x, y, zero: rep.zero.clone() })
}

/// ξ·rep; fails for ξ = 0.
pub fn scale_action<T: Field>(xi: &T, rep: &QuiverRep<T>) -> Result<QuiverRep<T>> {
    rep.scale(xi)
}

/// The element g₀ acting on vertex i by ζ^i, ζ a primitive m-th root of unity.
pub fn g0(d: &[usize]) -> Vec<Matrix<Cyclotomic>> {
    let m = d.len() as u32;
    d.iter()
        .enumerate()
        .map(|(i, &di)| Matrix::scalar(di, &Cyclotomic::zeta_pow(m, i as i64)))
        .collect()
}

/// A point of the deformed fiber at dimension δ_m with all X_j = 1: the products
/// p_j = X_jY_j satisfy p_j − p_{j−1} = θ_j for j ≠ 0, starting from p₀ = `start`.
pub fn fiber_point_at_delta(theta: &ThetaVector, start: &Rational) -> QuiverRep<Rational> {
    let m = theta.modulus;
    let mut p = vec![start.clone(); m];
    for j in 1..m {
        p[j] = &p[j - 1] + &theta.entries[j];
    }
    let one = |q: Rational| Matrix::from_rows(vec![vec![q]], 1).expect("1×1");
    QuiverRep {
        l: m,
        d: vec![1; m],
        x: (0..m).map(|_| one(Rational::one())).collect(),
        y: p.into_iter().map(one).collect(),
        zero: Rational::zero(),
    }
}

/// Outcome of the simplicity test.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Simplicity {
    Simple,
    /// A proper nonzero subrepresentation, as a basis (rows) at each vertex.
    NotSimple { witness: Vec<Vec<Vec<Rational>>> },
    Unknown,
}

type Graded = Vec<Vec<Vec<Rational>>>;

/// Closure of a set of vectors under the arrows; `transpose` spins in the dual.
fn spin(rep: &QuiverRep<Rational>, start: Graded, transpose: bool) -> Graded {
    let l = rep.l;
    let mut basis: Vec<Matrix<Rational>> = rep.d.iter().map(|&n| Matrix::zeros(0, n, &Rational::zero())).collect();
    let mut queue: Vec<(usize, Vec<Rational>)> = start
        .into_iter()
        .enumerate()
        .flat_map(|(i, vs)| vs.into_iter().map(move |v| (i, v)))
        .collect();
    // arrows as (source, target, matrix acting on column vectors)
    let mut arrows: Vec<(usize, usize, Matrix<Rational>)> = Vec::new();
    for i in 0..l {
        let j = (i + 1) % l;
        if transpose {
            arrows.push((i, j, rep.x[i].transpose()));
            arrows.push((j, i, rep.y[i].transpose()));
        } else {
            arrows.push((j, i, rep.x[i].clone()));
            arrows.push((i, j, rep.y[i].clone()));
        }
    }
    while let Some((i, v)) = queue.pop() {
        let mut rows = basis[i].to_rows();
        rows.push(v.clone());
        let candidate = Matrix::from_rows(rows, rep.d[i]).expect("row length d_i");
        if candidate.rank() == basis[i].rows() {
            continue;
        }
        basis[i] = candidate;
        let col = Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect(), 1).expect("column");
        for (s, t, a) in &arrows {
            if *s == i && rep.d[*t] > 0 {
                let w = a.mul(&col).expect("shapes follow d");
                if !w.is_zero() {
                    queue.push((*t, (0..w.rows()).map(|r| w.get(r, 0).clone()).collect()));
                }
            }
        }
    }
    basis.into_iter().map(|m| m.to_rows()).collect()
}

fn graded_dim(g: &Graded) -> usize {
    g.iter().map(Vec::len).sum()
}

/// Annihilator at each vertex of a graded subspace of the dual.
fn annihilator(rep: &QuiverRep<Rational>, g: &Graded) -> Graded {
    g.iter()
        .zip(&rep.d)
        .map(|(rows, &n)| {
            if rows.is_empty() {
                return Matrix::identity(n, &Rational::one()).to_rows();
            }
            let (r, pivots) = Matrix::from_rows(rows.clone(), n).expect("rows of length d_i").rref();
            (0..n)
                .filter(|c| !pivots.contains(c))
                .map(|free| {
                    let mut v = vec![Rational::zero(); n];
                    v[free] = Rational::one();
                    for (k, &p) in pivots.iter().enumerate() {
                        v[p] = -r.get(k, free).clone();
                    }
                    v
                })
                .collect()
        })
        .collect()
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..n).map(|_| Rational::integer(rng.gen_range(-3..=3))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Dimension of the subalgebra of End(⊕V_i) generated by the vertex idempotents and arrows.
fn algebra_dimension(rep: &QuiverRep<Rational>) -> usize {
    let n = rep.total_dim();
    let l = rep.l;
    let mut offs = vec![0; l];
    for i in 1..l {
        offs[i] = offs[i - 1] + rep.d[i - 1];
    }
    let zero = Rational::zero();
    let embed = |m: &Matrix<Rational>, row_v: usize, col_v: usize| {
        let mut big = Matrix::zeros(n, n, &zero);
        for a in 0..m.rows() {
            for b in 0..m.cols() {
                big.set(offs[row_v] + a, offs[col_v] + b, m.get(a, b).clone());
            }
        }
        big
    };
    let mut gens = Vec::new();
    for i in 0..l {
        let j = (i + 1) % l;
        gens.push(embed(&rep.x[i], i, j));
        gens.push(embed(&rep.y[i], j, i));
    }
    let idempotents: Vec<Matrix<Rational>> = (0..l)
        .map(|i| embed(&Matrix::identity(rep.d[i], &Rational::one()), i, i))
        .collect();
    // span tracked through an echelon basis of flattened matrices
    let mut span: Vec<Vec<Rational>> = Vec::new();
    let mut seen: HashSet<Vec<Rational>> = HashSet::new();
    let mut queue = idempotents;
    let flatten = |m: &Matrix<Rational>| m.to_rows().concat();
    while let Some(a) = queue.pop() {
        let f = flatten(&a);
        if !seen.insert(f.clone()) {
            continue;
        }
        let mut rows = span.clone();
        rows.push(f);
        let m = Matrix::from_rows(rows, n * n).expect("flattened length n²");
        if m.rank() == span.len() {
            continue;
        }
        span = m.rref().0.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        if span.len() == n * n {
            break;
        }
        for g in &gens {
            queue.push(g.mul(&a).expect("n × n"));
        }
    }
    span.len()
}

/// Randomized irreducibility test: spins random homogeneous vectors (and dual vectors)
/// looking for a proper subrepresentation, then certifies simplicity when the arrows
/// generate all of End(V). Otherwise reports Unknown.
pub fn norton_simplicity(rep: &QuiverRep<Rational>, seed: u64, budget: usize) -> Simplicity {
    let total = rep.total_dim();
    if total == 0 {
        return Simplicity::NotSimple { witness: rep.d.iter().map(|_| Vec::new()).collect() };
    }
    if total == 1 {
        return Simplicity::Simple;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices: Vec<usize> = (0..rep.l).filter(|&i| rep.d[i] > 0).collect();
    for _ in 0..budget {
        let i = vertices[rng.gen_range(0..vertices.len())];
        let mut start: Graded = vec![Vec::new(); rep.l];
        start[i].push(random_vector(&mut rng, rep.d[i]));
        let sub = spin(rep, start.clone(), false);
        if graded_dim(&sub) < total {
            return Simplicity::NotSimple { witness: sub };
        }
        let dual = spin(rep, start, true);
        if graded_dim(&dual) < total {
            return Simplicity::NotSimple { witness: annihilator(rep, &dual) };
        }
    }
    if algebra_dimension(rep) == total * total {
        Simplicity::Simple
    } else {
        Simplicity::Unknown
    }
}

/// Whether each witness subspace is stable under every arrow.
pub fn is_subrepresentation(rep: &QuiverRep<Rational>, witness: &Graded) -> bool {
    let l = rep.l;
    let span_contains = |i: usize, v: &[Rational]| {
        let base = Matrix::from_rows(witness[i].clone(), rep.d[i]).expect("rows of length d_i");
        let mut rows = witness[i].clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows, rep.d[i]).expect("rows of length d_i").rank() == base.rank()
    };
    for i in 0..l {
        let j = (i + 1) % l;
        for (src, dst, a) in [(j, i, &rep.x[i]), (i, j, &rep.y[i])] {
            for v in &witness[src] {
                let col = Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect(), 1).expect("column");
                let w = a.mul(&col).expect("shapes follow d");
                let w: Vec<Rational> = (0..w.rows()).map(|r| w.get(r, 0).clone()).collect();
                if !span_contains(dst, &w) {
                    return false;
                }
            }
        }
    }
    true
}
