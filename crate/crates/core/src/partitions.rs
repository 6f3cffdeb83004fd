//! Partitions, multipartitions, residues, cores and quotients.
//!
//! Abacus convention: a partition λ is read off a set of N beta-numbers
//! `λ_j + N - j` (j = 1..N) with N a multiple of l, so the charge is 0. Runner i of the
//! l-abacus holds the beta-numbers congruent to i mod l. The l-core pushes every bead
//! to the lowest free level of its runner; component i of the l-quotient is the
//! partition read off runner i. Adding a box of residue i moves a bead from runner
//! i-1 to runner i, so both maps are independent of the chosen multiple N.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition has no parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates and canonicalizes (trailing zeros are dropped).
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("parts {parts:?} contain an interior zero")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part i (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Boxes as (row, column), both 0-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Sum of contents (column − row) over all boxes.
    pub fn content_sum(&self) -> i64 {
        self.boxes().map(|(r, c)| c as i64 - r as i64).sum()
    }

    /// The `count` beta-numbers `λ_j + count - j`, decreasing. `count` must be ≥ len.
    pub fn beta_numbers(&self, count: usize) -> Vec<usize> {
        assert!(count >= self.len(), "too few beads for the partition");
        (0..count).map(|j| self.part(j) + count - 1 - j).collect()
    }

    /// Inverse of [`Partition::beta_numbers`] for any set of distinct non-negative integers.
    pub fn from_beta_numbers(beta: &[usize]) -> Partition {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let n = b.len();
        Partition::from_unsorted((0..n).map(|j| b[j] - (n - 1 - j)).collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An l-tuple of partitions (l ≥ 1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Multipartition> {
        if components.is_empty() {
            return Err(Error::Invalid("a multipartition needs at least one component".into()));
        }
        Ok(Multipartition(components))
    }

    pub fn empty(l: usize) -> Multipartition {
        Multipartition(vec![Partition::empty(); l.max(1)])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    /// Number of components l.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Partition::size).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }

    /// Parses `"4,2,1|∅|1"`-style text: components separated by `|`, parts by `,`;
    /// an empty component may be written as nothing, `0`, `-` or `∅`.
    pub fn parse(s: &str) -> Result<Multipartition> {
        let comps = s
            .split('|')
            .map(parse_partition)
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps)
    }
}

/// Parses `"4,2,1"`; an empty string, `0`, `-` or `∅` is the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() || s == "-" || s == "∅" || s == "0" {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {t:?} in partition {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An integer vector indexed by Z/lZ. Used both for residue counts and for quiver
/// dimension vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueVector {
    pub modulus: usize,
    pub entries: Vec<i64>,
}

impl ResidueVector {
    pub fn new(entries: Vec<i64>) -> ResidueVector {
        assert!(!entries.is_empty(), "residue vectors need a positive modulus");
        ResidueVector { modulus: entries.len(), entries }
    }

    pub fn zero(l: usize) -> ResidueVector {
        ResidueVector::new(vec![0; l])
    }

    /// The constant vector δ_l scaled by n.
    pub fn delta(l: usize, n: i64) -> ResidueVector {
        ResidueVector::new(vec![n; l])
    }

    /// Entry at an arbitrary integer index, read modulo l.
    pub fn at(&self, i: i64) -> i64 {
        self.entries[i.rem_euclid(self.modulus as i64) as usize]
    }

    /// |d| = sum of entries.
    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn add_delta(&self, r: i64) -> ResidueVector {
        ResidueVector::new(self.entries.iter().map(|e| e + r).collect())
    }

    pub fn sub(&self, other: &ResidueVector) -> Result<ResidueVector> {
        check_modulus(self.modulus, other.modulus)?;
        Ok(ResidueVector::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect()))
    }

    pub fn add(&self, other: &ResidueVector) -> Result<ResidueVector> {
        check_modulus(self.modulus, other.modulus)?;
        Ok(ResidueVector::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect()))
    }

    /// Sums entries over residue classes modulo `l` (l must divide the modulus).
    pub fn class_sums(&self, l: usize) -> ResidueVector {
        assert_eq!(self.modulus % l, 0, "{l} does not divide {}", self.modulus);
        let mut out = vec![0; l];
        for (j, e) in self.entries.iter().enumerate() {
            out[j % l] += e;
        }
        ResidueVector::new(out)
    }

    pub fn parse(s: &str) -> Result<ResidueVector> {
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        Ok(ResidueVector::new(entries))
    }
}

pub(crate) fn check_modulus(a: usize, b: usize) -> Result<()> {
    if a != b {
        Err(Error::ModulusMismatch { left: a, right: b })
    } else {
        Ok(())
    }
}

impl fmt::Display for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Res_l(λ): entry i counts boxes whose content (column − row) is ≡ i mod l.
pub fn residues(lambda: &Partition, l: usize) -> ResidueVector {
    assert!(l >= 1);
    let mut out = vec![0i64; l];
    for (r, c) in lambda.boxes() {
        out[(c as i64 - r as i64).rem_euclid(l as i64) as usize] += 1;
    }
    ResidueVector::new(out)
}

/// Res_∞(λ) as sorted (content, count) pairs.
pub fn residues_infinite(lambda: &Partition) -> Vec<(i64, usize)> {
    let mut m = std::collections::BTreeMap::new();
    for (r, c) in lambda.boxes() {
        *m.entry(c as i64 - r as i64).or_insert(0usize) += 1;
    }
    m.into_iter().collect()
}

/// Beads on an l-abacus: `runners[i]` holds the levels (decreasing) of beads on runner i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abacus {
    pub l: usize,
    pub runners: Vec<Vec<usize>>,
}

impl Abacus {
    /// Abacus of λ with the smallest multiple of l beads that is ≥ len(λ) + `extra`.
    pub fn of(lambda: &Partition, l: usize, extra: usize) -> Abacus {
        let count = (lambda.len() + extra).div_ceil(l) * l;
        let mut runners = vec![Vec::new(); l];
        for b in lambda.beta_numbers(count) {
            runners[b % l].push(b / l);
        }
        Abacus { l, runners }
    }

    pub fn to_partition(&self) -> Partition {
        let beta: Vec<usize> = self
            .runners
            .iter()
            .enumerate()
            .flat_map(|(i, levels)| levels.iter().map(move |&v| v * self.l + i))
            .collect();
        Partition::from_beta_numbers(&beta)
    }

    /// All beads pushed to the lowest levels of their runners.
    pub fn pushed(&self) -> Abacus {
        let runners = self.runners.iter().map(|r| (0..r.len()).rev().collect()).collect();
        Abacus { l: self.l, runners }
    }
}

/// The l-core of λ together with the number r of l-rim-hook removals, |λ| = |core| + r·l.
pub fn core(lambda: &Partition, l: usize) -> (Partition, usize) {
    assert!(l >= 1);
    let c = Abacus::of(lambda, l, 0).pushed().to_partition();
    let r = (lambda.size() - c.size()) / l;
    (c, r)
}

pub fn is_l_core(lambda: &Partition, l: usize) -> bool {
    core(lambda, l).1 == 0
}

/// The l-quotient: component i is the partition read off runner i.
pub fn quotient(lambda: &Partition, l: usize) -> Multipartition {
    assert!(l >= 1);
    let ab = Abacus::of(lambda, l, 0);
    let comps = ab
        .runners
        .iter()
        .map(|levels| {
            let c = levels.len();
            Partition::from_unsorted(levels.iter().enumerate().map(|(j, &v)| v - (c - 1 - j)).collect())
        })
        .collect();
    Multipartition(comps)
}

/// The unique λ with l-core ν and l-quotient μ.
pub fn from_core_and_quotient(nu: &Partition, mu: &Multipartition, l: usize) -> Result<Partition> {
    if mu.width() != l {
        return Err(Error::Invalid(format!("quotient has {} components, expected {l}", mu.width())));
    }
    if !is_l_core(nu, l) {
        return Err(Error::NotACore(nu.to_string(), l));
    }
    let longest = mu.components().iter().map(Partition::len).max().unwrap_or(0);
    let ab = Abacus::of(nu, l, l * longest);
    let runners = ab
        .runners
        .iter()
        .zip(mu.components())
        .map(|(levels, part)| {
            let c = levels.len();
            debug_assert!(part.len() <= c);
            (0..c).map(|j| part.part(j) + (c - 1 - j)).collect()
        })
        .collect();
    Ok(Abacus { l, runners }.to_partition())
}

/// Decomposes any integer vector d as Res_l(ν) + r·δ_l with ν an l-core.
pub fn residue_to_core(d: &ResidueVector) -> (Partition, i64) {
    let l = d.modulus;
    // Runner i of a charge-0 abacus carries (d_i - d_{i+1}) beads more than average.
    let excess: Vec<i64> = (0..l as i64).map(|i| d.at(i) - d.at(i + 1)).collect();
    let shift = excess.iter().map(|&x| -x).max().unwrap_or(0).max(0);
    let runners = excess
        .iter()
        .map(|&x| (0..(shift + x) as usize).rev().collect())
        .collect();
    let nu = Abacus { l, runners }.to_partition();
    let r = d.entries[0] - residues(&nu, l).entries[0];
    debug_assert_eq!(residues(&nu, l).add_delta(r), *d);
    (nu, r)
}

/// λ^♭: components in reverse order.
pub fn flip(lambda: &Multipartition) -> Multipartition {
    Multipartition(lambda.0.iter().rev().cloned().collect())
}

/// Componentwise k-core of a multipartition.
pub fn core_multi(lambda: &Multipartition, k: usize) -> Multipartition {
    Multipartition(lambda.0.iter().map(|p| core(p, k).0).collect())
}

fn check_cores(lambda: &Multipartition, k: usize, gamma: &Multipartition) -> Result<()> {
    if lambda.width() != gamma.width() {
        return Err(Error::Invalid(format!(
            "λ has {} components but γ has {}",
            lambda.width(),
            gamma.width()
        )));
    }
    for (i, (p, g)) in lambda.0.iter().zip(&gamma.0).enumerate() {
        let c = core(p, k).0;
        if &c != g {
            return Err(Error::CoreMismatch {
                component: i,
                k,
                found: c.to_string(),
                expected: g.to_string(),
            });
        }
    }
    Ok(())
}

/// Slot of the t-th k-quotient component of λ^i inside the m-multipartition.
fn slot(i: usize, t: usize, k: usize, l: usize, flat: bool) -> usize {
    if flat {
        i + (k - 1 - t) * l
    } else {
        i + t * l
    }
}

fn interleave(lambda: &Multipartition, k: usize, gamma: &Multipartition, flat: bool) -> Result<Multipartition> {
    check_cores(lambda, k, gamma)?;
    let l = lambda.width();
    let mut out = vec![Partition::empty(); k * l];
    for (i, p) in lambda.0.iter().enumerate() {
        for (t, q) in quotient(p, k).0.into_iter().enumerate() {
            out[slot(i, t, k, l, flat)] = q;
        }
    }
    Ok(Multipartition(out))
}

fn deinterleave(mu: &Multipartition, k: usize, gamma: &Multipartition, flat: bool) -> Result<Multipartition> {
    let l = gamma.width();
    if mu.width() != k * l {
        return Err(Error::Invalid(format!("expected a {}-multipartition, got {}", k * l, mu.width())));
    }
    let comps = (0..l)
        .map(|i| {
            let q = Multipartition((0..k).map(|t| mu.0[slot(i, t, k, l, flat)].clone()).collect());
            from_core_and_quotient(&gamma.0[i], &q, k)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Multipartition(comps))
}

/// β_{k,γ}: places the t-th k-quotient component of λ^i at slot i + t·l.
pub fn beta_k_gamma(lambda: &Multipartition, k: usize, gamma: &Multipartition) -> Result<Multipartition> {
    interleave(lambda, k, gamma, false)
}

/// Inverse of [`beta_k_gamma`].
pub fn beta_k_gamma_inverse(mu: &Multipartition, k: usize, gamma: &Multipartition) -> Result<Multipartition> {
    deinterleave(mu, k, gamma, false)
}

/// β^♭_{k,γ}: places the t-th k-quotient component of λ^i at slot i + (k−1−t)·l.
pub fn beta_flat_k_gamma(lambda: &Multipartition, k: usize, gamma: &Multipartition) -> Result<Multipartition> {
    interleave(lambda, k, gamma, true)
}

/// Inverse of [`beta_flat_k_gamma`].
pub fn beta_flat_k_gamma_inverse(mu: &Multipartition, k: usize, gamma: &Multipartition) -> Result<Multipartition> {
    deinterleave(mu, k, gamma, true)
}

/// All partitions of n in reverse-lexicographic order, starting from (n).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// P^l[n] ordered component by component: larger component 0 first, then reverse-lex.
pub fn enumerate_multipartitions(l: usize, n: usize) -> Vec<Multipartition> {
    assert!(l >= 1);
    fn go(l: usize, rest: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if cur.len() + 1 == l {
            for p in partitions_of(rest) {
                cur.push(p);
                out.push(Multipartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for p in partitions_of(size) {
                cur.push(p);
                go(l, rest - size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(l, n, &mut Vec::new(), &mut out);
    out
}

/// All k-cores of size at most n, by increasing size.
pub fn cores_up_to(k: usize, n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).filter(|p| is_l_core(p, k)).collect()
}

/// (C_k)^l[≡n, ≤n]: l-tuples of k-cores γ with |γ| ≤ n and |γ| ≡ n mod k.
///
/// Ordered by decreasing total size, then as in [`enumerate_multipartitions`].
pub fn enumerate_core_tuples(k: usize, l: usize, n: usize) -> Vec<Multipartition> {
    assert!(k >= 1 && l >= 1);
    let mut out = Vec::new();
    let mut total = n as i64;
    while total >= 0 {
        out.extend(
            enumerate_multipartitions(l, total as usize)
                .into_iter()
                .filter(|g| g.0.iter().all(|p| is_l_core(p, k))),
        );
        total -= k as i64;
    }
    out
}
