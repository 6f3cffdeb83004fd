//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use cmfixed::arith::{Cyclotomic, Rational};
use cmfixed::linalg::Matrix;
use cmfixed::partitions::{partitions_of, residues, Multipartition, Partition, ResidueVector};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn mp(s: &str) -> Multipartition {
    Multipartition::parse(s).unwrap()
}

fn contained(mu: &Partition, lambda: &Partition) -> bool {
    mu.len() <= lambda.len() && (0..mu.len()).all(|i| mu.part(i) <= lambda.part(i))
}

fn skew_residues(lambda: &Partition, mu: &Partition, l: usize) -> BTreeSet<usize> {
    lambda
        .boxes()
        .filter(|&(r, c)| c >= mu.part(r))
        .map(|(r, c)| (c as i64 - r as i64).rem_euclid(l as i64) as usize)
        .collect()
}

/// Partitions μ ⊂ λ obtained by removing l boxes of l distinct residues.
pub fn removals(lambda: &Partition, l: usize) -> Vec<Partition> {
    if lambda.size() < l {
        return Vec::new();
    }
    partitions_of(lambda.size() - l)
        .into_iter()
        .filter(|mu| contained(mu, lambda) && skew_residues(lambda, mu, l).len() == l)
        .collect()
}

/// Every terminal partition reachable by repeated removals, with the removal count.
pub fn cores_by_removal(lambda: &Partition, l: usize) -> BTreeSet<(Partition, usize)> {
    let mut out = BTreeSet::new();
    let mut memo = HashMap::new();
    fn go(
        lam: &Partition,
        l: usize,
        depth: usize,
        out: &mut BTreeSet<(Partition, usize)>,
        memo: &mut HashMap<Partition, ()>,
    ) {
        if memo.insert(lam.clone(), ()).is_some() {
            return;
        }
        let next = removals(lam, l);
        if next.is_empty() {
            out.insert((lam.clone(), depth));
        }
        for mu in next {
            go(&mu, l, depth + 1, out, memo);
        }
    }
    go(lambda, l, 0, &mut out, &mut memo);
    out
}

/// E(k,l,n) as the set of Res_m(λ), λ ⊢ nl, whose class sums mod l all equal n.
pub fn e_by_residues(k: usize, l: usize, n: usize) -> BTreeSet<ResidueVector> {
    let m = k * l;
    partitions_of(n * l)
        .iter()
        .map(|lam| residues(lam, m))
        .filter(|d| d.class_sums(l).entries.iter().all(|&s| s == n as i64))
        .collect()
}

/// An element of G(l,1,n): e_j ↦ ζ^{colour_j} e_{perm_j}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub perm: Vec<usize>,
    pub colour: Vec<usize>,
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn group(l: usize, n: usize) -> Vec<Elem> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        let total = l.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colour = (0..n)
                .map(|_| {
                    let x = c % l;
                    c /= l;
                    x
                })
                .collect();
            out.push(Elem { perm: perm.clone(), colour });
        }
    }
    out
}

/// Product a·b (apply b first).
pub fn mul(a: &Elem, b: &Elem, l: usize) -> Elem {
    let n = a.perm.len();
    Elem {
        perm: (0..n).map(|j| a.perm[b.perm[j]]).collect(),
        colour: (0..n).map(|j| (b.colour[j] + a.colour[b.perm[j]]) % l).collect(),
    }
}

/// Class type: for each cycle, its length goes into component (colour sum mod l).
pub fn class_of(g: &Elem, l: usize) -> Multipartition {
    let n = g.perm.len();
    let mut seen = vec![false; n];
    let mut comps = vec![Vec::new(); l];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let (mut j, mut len, mut col) = (s, 0, 0);
        while !seen[j] {
            seen[j] = true;
            len += 1;
            col += g.colour[j];
            j = g.perm[j];
        }
        comps[col % l].push(len);
    }
    Multipartition::new(comps.into_iter().map(Partition::from_unsorted).collect()).unwrap()
}

pub fn monomial_matrix(g: &Elem, l: usize) -> Matrix<Cyclotomic> {
    let n = g.perm.len();
    let zero = Cyclotomic::zero(l as u32);
    let mut m = Matrix::zeros(n, n, &zero);
    for j in 0..n {
        m.set(g.perm[j], j, Cyclotomic::zeta_pow(l as u32, g.colour[j] as i64));
    }
    m
}

/// Class sizes by brute force.
pub fn class_sizes(l: usize, n: usize) -> BTreeMap<Multipartition, usize> {
    let mut out = BTreeMap::new();
    for g in group(l, n) {
        *out.entry(class_of(&g, l)).or_insert(0) += 1;
    }
    out
}

fn sign(perm: &[usize]) -> i64 {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut s = 1;
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let (mut j, mut len) = (i, 0);
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// χ_λ(g) for λ whose components are all one-row or one-column, computed as the
/// character induced from the Young-type subgroup ∏ G(l,1,|λ^i|) of the linear
/// character ⊠ (colour ↦ ζ^{i·colour}) ⊗ (trivial or sign).
pub fn induced_linear_character(lambda: &Multipartition, g: &Elem, l: usize) -> Cyclotomic {
    let n = g.perm.len();
    let mut block = Vec::new();
    let mut sign_block = Vec::new();
    for (i, part) in lambda.components().iter().enumerate() {
        let is_sign = part.len() > 1;
        assert!(part.len() <= 1 || part.part(0) == 1, "only linear components");
        for _ in 0..part.size() {
            block.push(i);
        }
        sign_block.push(is_sign);
    }
    let elems = group(l, n);
    let mut total = Cyclotomic::zero(l as u32);
    let mut h_size = 1usize;
    for part in lambda.components() {
        h_size *= l.pow(part.size() as u32) * (1..=part.size()).product::<usize>();
    }
    for x in &elems {
        // x g x⁻¹
        let xinv = inverse(x, l);
        let c = mul(&mul(x, g, l), &xinv, l);
        if (0..n).any(|j| block[c.perm[j]] != block[j]) {
            continue;
        }
        let mut val = Cyclotomic::one(l as u32);
        for (i, &is_sign) in sign_block.iter().enumerate() {
            let idx: Vec<usize> = (0..n).filter(|&j| block[j] == i).collect();
            let col: usize = idx.iter().map(|&j| c.colour[j]).sum();
            val = &val * &Cyclotomic::zeta_pow(l as u32, (i * col) as i64);
            if is_sign {
                let local: Vec<usize> = idx.iter().map(|&j| idx.iter().position(|&t| t == c.perm[j]).unwrap()).collect();
                val = val.scale(&Rational::integer(sign(&local)));
            }
        }
        total = &total + &val;
    }
    total.scale(&Rational::new(1, h_size as i64))
}

pub fn inverse(a: &Elem, l: usize) -> Elem {
    let n = a.perm.len();
    let mut perm = vec![0; n];
    let mut colour = vec![0; n];
    for j in 0..n {
        perm[a.perm[j]] = j;
        colour[a.perm[j]] = (l - a.colour[j]) % l;
    }
    Elem { perm, colour }
}

type Poly = HashMap<Vec<u32>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// χ^λ(μ) for S_n by the Frobenius formula: the coefficient of x^{λ+ρ} in a_ρ·p_μ.
pub fn frobenius_character(lambda: &Partition, mu: &Partition) -> i64 {
    let n = lambda.size();
    let vars = n.max(1);
    let mut vandermonde = Poly::new();
    for perm in permutations(vars) {
        let e: Vec<u32> = (0..vars).map(|i| (vars - 1 - perm[i]) as u32).collect();
        *vandermonde.entry(e).or_insert(0) += sign(&perm);
    }
    let mut acc = vandermonde;
    for &a in mu.parts() {
        let mut power_sum = Poly::new();
        for i in 0..vars {
            let mut e = vec![0u32; vars];
            e[i] = a as u32;
            power_sum.insert(e, 1);
        }
        acc = poly_mul(&acc, &power_sum);
    }
    let target: Vec<u32> = (0..vars).map(|i| (lambda.part(i) + vars - 1 - i) as u32).collect();
    acc.get(&target).copied().unwrap_or(0)
}

use rand::Rng;

/// A small random rational, so that coincidences (and hence singular parameters) occur.
pub fn rand_q(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

pub fn rand_params(rng: &mut impl Rng, l: usize) -> cmfixed::parameters::ParamSet {
    let mut k: Vec<Rational> = (0..l).map(|_| rand_q(rng)).collect();
    let s: Rational = k.iter().sum();
    k[0] = &k[0] - &s;
    cmfixed::parameters::ParamSet::new(rand_q(rng), k).unwrap()
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
