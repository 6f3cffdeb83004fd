//! Character theory of G(l,1,n) = μ_l ≀ S_n: conjugacy classes, the character table,
//! central idempotents, the codimension filtration of the centre and the maps i_γ^*.
//!
//! Characters are labelled by l-multipartitions; component i carries the linear
//! character t ↦ ζ^i of μ_l, with ζ = exp(2πi/l).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::fixed_points::delta_inverse;
use crate::partitions::{
    beta_flat_k_gamma, core_multi, enumerate_multipartitions, flip, Multipartition, Partition,
};

/// A conjugacy class of G(l,1,n): component j lists the cycle lengths whose cycle
/// product is ζ^j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassType {
    pub l: usize,
    pub n: usize,
    #[serde(rename = "type")]
    pub mu: Multipartition,
}

impl ClassType {
    pub fn new(mu: Multipartition) -> ClassType {
        ClassType { l: mu.width(), n: mu.size(), mu }
    }

    /// The class of inverses: μ^j ↦ μ^{−j}.
    pub fn inverse(&self) -> ClassType {
        let l = self.l;
        let comps = (0..l).map(|j| self.mu.component((l - j) % l).clone()).collect();
        ClassType::new(Multipartition::new(comps).expect("l ≥ 1"))
    }

    /// Cycles as (length, colour), longest first.
    fn cycles(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .mu
            .components()
            .iter()
            .enumerate()
            .flat_map(|(j, p)| p.parts().iter().map(move |&a| (a, j)))
            .collect();
        out.sort_unstable_by(|x, y| y.cmp(x));
        out
    }

    /// Order of the centralizer: ∏ (a·l)^{m_{j,a}} m_{j,a}!.
    pub fn centralizer_order(&self) -> BigInt {
        let mut out = BigInt::one();
        for p in self.mu.components() {
            let mut counts: HashMap<usize, u32> = HashMap::new();
            for &a in p.parts() {
                *counts.entry(a).or_default() += 1;
            }
            for (a, m) in counts {
                out *= BigInt::from(a * self.l).pow(m);
                out *= factorial(m as usize);
            }
        }
        out
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// |G(l,1,n)| = l^n n!.
pub fn group_order(l: usize, n: usize) -> BigInt {
    BigInt::from(l).pow(n as u32) * factorial(n)
}

/// cod(w) = dim V − dim V^w = n − (number of cycles with trivial product).
pub fn codim(c: &ClassType) -> usize {
    c.n - c.mu.component(0).len()
}

/// A class with its size and codimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub class: ClassType,
    #[serde(with = "bigint_string")]
    pub size: BigInt,
    pub codim: usize,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// All classes of G(l,1,n), in the order of [`enumerate_multipartitions`].
pub fn enumerate_classes(l: usize, n: usize) -> Vec<ClassInfo> {
    let order = group_order(l, n);
    enumerate_multipartitions(l, n)
        .into_iter()
        .map(|mu| {
            let class = ClassType::new(mu);
            let size = &order / class.centralizer_order();
            let codim = codim(&class);
            ClassInfo { class, size, codim }
        })
        .collect()
}

/// Element of Z[μ_l] as integer coefficients on 1, ζ, …, ζ^{l−1}.
type GroupRingValue = Vec<i128>;

fn rim_hooks(p: &Partition, a: usize) -> Vec<(Partition, bool)> {
    let beta = p.beta_numbers(p.len());
    let set: std::collections::HashSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for &b in &beta {
        if b < a || set.contains(&(b - a)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - a && x < b).count();
        let moved: Vec<usize> = beta.iter().map(|&x| if x == b { b - a } else { x }).collect();
        out.push((Partition::from_beta_numbers(&moved), height % 2 == 1));
    }
    out
}

/// Murnaghan–Nakayama evaluation sharing a memo across characters on a fixed class.
struct MnEvaluator {
    l: usize,
    cycles: Vec<(usize, usize)>,
    memo: HashMap<(Vec<Partition>, usize), GroupRingValue>,
}

impl MnEvaluator {
    fn new(class: &ClassType) -> MnEvaluator {
        MnEvaluator { l: class.l, cycles: class.cycles(), memo: HashMap::new() }
    }

    fn eval(&mut self, lambda: &[Partition], depth: usize) -> GroupRingValue {
        if depth == self.cycles.len() {
            let mut v = vec![0; self.l];
            if lambda.iter().all(Partition::is_empty) {
                v[0] = 1;
            }
            return v;
        }
        let key = (lambda.to_vec(), depth);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (a, colour) = self.cycles[depth];
        let mut total = vec![0i128; self.l];
        for i in 0..lambda.len() {
            for (smaller, odd) in rim_hooks(&lambda[i], a) {
                let mut next = lambda.to_vec();
                next[i] = smaller;
                let sub = self.eval(&next, depth + 1);
                let shift = (i * colour) % self.l;
                let sign = if odd { -1 } else { 1 };
                for (e, c) in sub.iter().enumerate() {
                    total[(e + shift) % self.l] += sign * c;
                }
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

fn to_cyclotomic(v: &GroupRingValue, l: usize) -> Cyclotomic {
    let coeffs = v.iter().map(|&c| Rational::from_bigint(BigInt::from(c))).collect();
    Cyclotomic::from_poly(l as u32, coeffs)
}

fn check_shape(lambda: &Multipartition, c: &ClassType) -> Result<()> {
    if lambda.width() != c.l || lambda.size() != c.n {
        return Err(Error::Shape(format!(
            "character {lambda} does not match class of G({},1,{})",
            c.l, c.n
        )));
    }
    Ok(())
}

/// χ_λ(c), exact in Q(ζ_l).
pub fn character_value(lambda: &Multipartition, c: &ClassType) -> Result<Cyclotomic> {
    check_shape(lambda, c)?;
    let v = MnEvaluator::new(c).eval(lambda.components(), 0);
    Ok(to_cyclotomic(&v, c.l))
}

/// χ_λ(1) = multinomial(n; |λ^i|) · ∏ f^{λ^i}, as an integer.
pub fn character_degree(lambda: &Multipartition) -> BigInt {
    let n = lambda.size();
    let mut out = factorial(n);
    for p in lambda.components() {
        out /= factorial(p.size());
        out *= standard_tableaux(p);
    }
    out
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn standard_tableaux(p: &Partition) -> BigInt {
    let conj = p.conjugate();
    let hooks = p
        .boxes()
        .map(|(r, c)| BigInt::from(p.part(r) - c + conj.part(c) - r - 1))
        .fold(BigInt::one(), |acc, h| acc * h);
    factorial(p.size()) / hooks
}

/// The full character table: `values[x][y]` is χ_{characters[x]} on `classes[y]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTable {
    pub l: usize,
    pub n: usize,
    pub classes: Vec<ClassInfo>,
    pub characters: Vec<Multipartition>,
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn new(l: usize, n: usize) -> CharacterTable {
        let classes = enumerate_classes(l, n);
        let characters = enumerate_multipartitions(l, n);
        let mut values = vec![Vec::with_capacity(classes.len()); characters.len()];
        for info in &classes {
            let mut ev = MnEvaluator::new(&info.class);
            for (x, lam) in characters.iter().enumerate() {
                values[x].push(to_cyclotomic(&ev.eval(lam.components(), 0), l));
            }
        }
        CharacterTable { l, n, classes, characters, values }
    }

    pub fn order(&self) -> BigInt {
        group_order(self.l, self.n)
    }

    pub fn field_order(&self) -> u32 {
        self.l as u32
    }

    pub fn character_index(&self, lambda: &Multipartition) -> Option<usize> {
        self.characters.iter().position(|c| c == lambda)
    }

    pub fn class_index(&self, c: &ClassType) -> Option<usize> {
        self.classes.iter().position(|i| &i.class == c)
    }

    /// Index of the class of inverses of class `y`.
    pub fn inverse_class(&self, y: usize) -> usize {
        self.class_index(&self.classes[y].class.inverse()).expect("classes are closed under inversion")
    }

    /// χ(1) as read from the identity column.
    pub fn degree(&self, x: usize) -> Rational {
        let id = self.identity_class();
        self.values[x][id].to_rational().expect("degrees are rational")
    }

    pub fn identity_class(&self) -> usize {
        self.classes.iter().position(|i| i.codim == 0 && i.class.mu.component(0).parts().iter().all(|&a| a == 1))
            .expect("identity class exists")
    }

    /// Central character ω_x(z) = Σ_C z_C |C| χ(c)/χ(1).
    pub fn central_character(&self, x: usize, z: &CentralElement) -> Cyclotomic {
        let deg = self.degree(x).inv().expect("degrees are nonzero");
        let mut acc = Cyclotomic::zero(self.field_order());
        for (y, info) in self.classes.iter().enumerate() {
            if z.coeffs[y].is_zero() {
                continue;
            }
            let scale = Rational::from_bigint(info.size.clone()) * &deg;
            acc = &acc + &(&z.coeffs[y] * &self.values[x][y]).scale(&scale);
        }
        acc
    }

    /// Coordinates of z in the basis of central idempotents.
    pub fn to_idempotent_basis(&self, z: &CentralElement) -> Vec<Cyclotomic> {
        (0..self.characters.len()).map(|x| self.central_character(x, z)).collect()
    }

    /// Σ_x f_x e_x in the class-sum basis; e_x has coefficient (χ(1)/|W|) χ(c⁻¹) on z_C.
    pub fn from_idempotent_basis(&self, f: &[Cyclotomic]) -> CentralElement {
        let order = Rational::from_bigint(self.order());
        let mut coeffs = vec![Cyclotomic::zero(self.field_order()); self.classes.len()];
        for (x, fx) in f.iter().enumerate() {
            if fx.is_zero() {
                continue;
            }
            let w = self.degree(x) / &order;
            for (y, slot) in coeffs.iter_mut().enumerate() {
                let v = &self.values[x][self.inverse_class(y)];
                *slot = &*slot + &(fx * v).scale(&w);
            }
        }
        CentralElement { l: self.l, n: self.n, coeffs }
    }

    pub fn central_idempotent(&self, x: usize) -> CentralElement {
        let mut f = vec![Cyclotomic::zero(self.field_order()); self.characters.len()];
        f[x] = Cyclotomic::one(self.field_order());
        self.from_idempotent_basis(&f)
    }

    /// The class sum z_C.
    pub fn class_sum(&self, y: usize) -> CentralElement {
        let mut coeffs = vec![Cyclotomic::zero(self.field_order()); self.classes.len()];
        coeffs[y] = Cyclotomic::one(self.field_order());
        CentralElement { l: self.l, n: self.n, coeffs }
    }

    pub fn identity(&self) -> CentralElement {
        self.class_sum(self.identity_class())
    }

    /// Product in Z(CW), computed pointwise in the idempotent basis.
    pub fn multiply(&self, a: &CentralElement, b: &CentralElement) -> CentralElement {
        let fa = self.to_idempotent_basis(a);
        let fb = self.to_idempotent_basis(b);
        let f: Vec<Cyclotomic> = fa.iter().zip(&fb).map(|(x, y)| x * y).collect();
        self.from_idempotent_basis(&f)
    }

    /// Max codimension over the support of z; 0 for z = 0.
    pub fn filtration_degree(&self, z: &CentralElement) -> usize {
        filtration_degree(&self.classes, z)
    }
}

/// An element of the centre Z(C G(l,1,n)) in the class-sum basis, with coefficients
/// aligned with [`enumerate_classes`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralElement {
    pub l: usize,
    pub n: usize,
    pub coeffs: Vec<Cyclotomic>,
}

impl CentralElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    pub fn add(&self, other: &CentralElement) -> CentralElement {
        CentralElement {
            l: self.l,
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&y| !self.coeffs[y].is_zero()).collect()
    }
}

/// Max codimension over the support of z.
pub fn filtration_degree(classes: &[ClassInfo], z: &CentralElement) -> usize {
    z.support().into_iter().map(|y| classes[y].codim).max().unwrap_or(0)
}

/// The primitive central idempotent of χ_λ.
pub fn central_idempotent(lambda: &Multipartition) -> CentralElement {
    let table = CharacterTable::new(lambda.width(), lambda.size());
    let x = table.character_index(lambda).expect("λ labels a character");
    table.central_idempotent(x)
}

/// Relabelling applied to characters on both sides of i_γ^*.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelTwist {
    #[default]
    None,
    Flip,
}

impl LabelTwist {
    fn apply(self, lambda: &Multipartition) -> Multipartition {
        match self {
            LabelTwist::None => lambda.clone(),
            LabelTwist::Flip => flip(lambda),
        }
    }
}

impl std::str::FromStr for LabelTwist {
    type Err = Error;
    fn from_str(s: &str) -> Result<LabelTwist> {
        match s {
            "none" => Ok(LabelTwist::None),
            "flip" => Ok(LabelTwist::Flip),
            _ => Err(Error::Parse(format!("unknown twist {s:?} (expected none or flip)"))),
        }
    }
}

/// i_γ^*: Z(CG(l,1,n)) → Z(CG(kl,1,r)) between two fixed character tables.
pub struct RestrictionMap<'a> {
    pub source: &'a CharacterTable,
    pub target: &'a CharacterTable,
    pub k: usize,
    pub gamma: Multipartition,
    /// `images[x]` is the target character index of source character x, if any.
    pub images: Vec<Option<usize>>,
}

impl<'a> RestrictionMap<'a> {
    pub fn new(
        source: &'a CharacterTable,
        target: &'a CharacterTable,
        k: usize,
        gamma: &Multipartition,
        twist: LabelTwist,
    ) -> Result<RestrictionMap<'a>> {
        let (l, n) = (source.l, source.n);
        delta_inverse(gamma, k, l, n)?;
        let r = (n - gamma.size()) / k;
        if target.l != k * l || target.n != r {
            return Err(Error::Shape(format!(
                "target table is G({},1,{}), expected G({},1,{r})",
                target.l,
                target.n,
                k * l
            )));
        }
        let images = source
            .characters
            .iter()
            .map(|lam| {
                let lam = twist.apply(lam);
                if core_multi(&lam, k) != *gamma {
                    return Ok(None);
                }
                let mu = twist.apply(&beta_flat_k_gamma(&lam, k, gamma)?);
                Ok(target.character_index(&mu))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RestrictionMap { source, target, k, gamma: gamma.clone(), images })
    }

    pub fn apply(&self, z: &CentralElement) -> Result<CentralElement> {
        let m = self.target.field_order();
        let f = self.source.to_idempotent_basis(z);
        let mut g = vec![Cyclotomic::zero(m); self.target.characters.len()];
        for (x, image) in self.images.iter().enumerate() {
            if let Some(t) = image {
                g[*t] = f[x].embed(m)?;
            }
        }
        Ok(self.target.from_idempotent_basis(&g))
    }
}

/// i_γ^*(z) for z ∈ Z(CG(l,1,n)), built from fresh character tables.
pub fn i_gamma_star(z: &CentralElement, gamma: &Multipartition, k: usize) -> Result<CentralElement> {
    let source = CharacterTable::new(z.l, z.n);
    let r = z.n.checked_sub(gamma.size()).map(|s| s / k.max(1)).unwrap_or(0);
    let target = CharacterTable::new(k * z.l, r);
    RestrictionMap::new(&source, &target, k, gamma, LabelTwist::None)?.apply(z)
}

/// A class sum z_C whose image leaves the filtration step of C.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationViolation {
    pub class: ClassType,
    pub codim: usize,
    pub image_degree: usize,
    pub offending_class: ClassType,
}

/// One certificate line: the filtration degree of i_γ^*(z_C) next to cod(C).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationCertificate {
    pub class: ClassType,
    pub codim: usize,
    pub image_degree: usize,
    pub image_is_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    pub l: usize,
    pub n: usize,
    pub k: usize,
    pub gamma: Multipartition,
    pub r: usize,
    pub twist: LabelTwist,
    pub pass: bool,
    pub certificates: Vec<FiltrationCertificate>,
    pub violations: Vec<FiltrationViolation>,
}

/// Checks i_γ^*(F_i) ⊂ F_i on every class sum of G(l,1,n).
pub fn verify_filtration(l: usize, n: usize, k: usize, gamma: &Multipartition, twist: LabelTwist) -> Result<FiltrationReport> {
    let source = CharacterTable::new(l, n);
    delta_inverse(gamma, k, l, n)?;
    let r = (n - gamma.size()) / k;
    let target = CharacterTable::new(k * l, r);
    verify_filtration_with(&source, &target, k, gamma, twist)
}

/// As [`verify_filtration`], reusing precomputed tables.
pub fn verify_filtration_with(
    source: &CharacterTable,
    target: &CharacterTable,
    k: usize,
    gamma: &Multipartition,
    twist: LabelTwist,
) -> Result<FiltrationReport> {
    let map = RestrictionMap::new(source, target, k, gamma, twist)?;
    let mut certificates = Vec::new();
    let mut violations = Vec::new();
    for (y, info) in source.classes.iter().enumerate() {
        let image = map.apply(&source.class_sum(y))?;
        let image_degree = target.filtration_degree(&image);
        if image_degree > info.codim {
            let offending = image
                .support()
                .into_iter()
                .find(|&t| target.classes[t].codim > info.codim)
                .expect("degree is attained on the support");
            violations.push(FiltrationViolation {
                class: info.class.clone(),
                codim: info.codim,
                image_degree,
                offending_class: target.classes[offending].class.clone(),
            });
        }
        certificates.push(FiltrationCertificate {
            class: info.class.clone(),
            codim: info.codim,
            image_degree,
            image_is_zero: image.is_zero(),
        });
    }
    Ok(FiltrationReport {
        l: source.l,
        n: source.n,
        k,
        gamma: gamma.clone(),
        r: target.n,
        twist,
        pass: violations.is_empty(),
        certificates,
        violations,
    })
}

/// Integer value of a rational character value, if it is one.
pub fn as_integer(c: &Cyclotomic) -> Option<i64> {
    c.to_rational().filter(Rational::is_integer).and_then(|q| q.numer().to_i64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        Multipartition::parse(s).unwrap()
    }

    #[test]
    fn class_sizes_small() {
        let sizes: Vec<BigInt> = enumerate_classes(1, 3).into_iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![BigInt::from(2), BigInt::from(3), BigInt::from(1)]);
        let c = enumerate_classes(2, 1);
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|i| i.size == BigInt::one()));
        let c = enumerate_classes(2, 2);
        assert_eq!(c.len(), 5);
        assert_eq!(c.iter().map(|i| i.size.clone()).sum::<BigInt>(), BigInt::from(8));
    }

    #[test]
    fn codim_examples() {
        assert_eq!(codim(&ClassType::new(mp("1,1,1|"))), 0);
        assert_eq!(codim(&ClassType::new(mp("2,1,1|"))), 1);
        assert_eq!(codim(&ClassType::new(mp("|1"))), 1);
    }

    #[test]
    fn linear_characters_of_mu_l() {
        for l in 1..5usize {
            for i in 0..l {
                let mut comps = vec![Partition::empty(); l];
                comps[i] = Partition::new(vec![1]).unwrap();
                let lam = Multipartition::new(comps).unwrap();
                for c in 0..l {
                    let mut cc = vec![Partition::empty(); l];
                    cc[c] = Partition::new(vec![1]).unwrap();
                    let class = ClassType::new(Multipartition::new(cc).unwrap());
                    let v = character_value(&lam, &class).unwrap();
                    assert_eq!(v, Cyclotomic::zeta_pow(l as u32, (i * c) as i64));
                }
            }
        }
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(1, 3);
        // characters (3), (2,1), (1,1,1) on classes (3), (2,1), (1,1,1)
        let ints: Vec<Vec<i64>> = t.values.iter().map(|r| r.iter().map(|v| as_integer(v).unwrap()).collect()).collect();
        assert_eq!(ints, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
    }

    #[test]
    fn degrees_match_formula() {
        let t = CharacterTable::new(2, 3);
        for (x, lam) in t.characters.iter().enumerate() {
            assert_eq!(t.degree(x), Rational::from_bigint(character_degree(lam)));
        }
    }

    #[test]
    fn inverse_class() {
        let c = ClassType::new(mp("1|2|"));
        assert_eq!(c.inverse(), ClassType::new(mp("1||2")));
    }

    #[test]
    fn idempotents_sum_to_one() {
        for (l, n) in [(1, 3), (2, 2)] {
            let t = CharacterTable::new(l, n);
            let mut acc = CentralElement { l, n, coeffs: vec![Cyclotomic::zero(l as u32); t.classes.len()] };
            for x in 0..t.characters.len() {
                let e = t.central_idempotent(x);
                assert_eq!(t.multiply(&e, &e), e);
                acc = acc.add(&e);
            }
            assert_eq!(acc, t.identity());
        }
    }

    #[test]
    fn filtration_degree_examples() {
        let t = CharacterTable::new(2, 2);
        assert_eq!(t.filtration_degree(&t.identity()), 0);
        let refl = t.class_index(&ClassType::new(mp("2|"))).unwrap();
        assert_eq!(t.filtration_degree(&t.class_sum(refl)), 1);
        for x in 0..t.characters.len() {
            assert_eq!(t.filtration_degree(&t.central_idempotent(x)), 2);
        }
    }

    #[test]
    fn i_gamma_star_identity_and_kernel() {
        let t = CharacterTable::new(1, 2);
        let id = t.identity();
        let img = i_gamma_star(&id, &mp(""), 2).unwrap();
        assert_eq!(img, CharacterTable::new(2, 1).identity());
        let t = CharacterTable::new(1, 3);
        let gamma = mp("1");
        for (x, lam) in t.characters.iter().enumerate() {
            let img = i_gamma_star(&t.central_idempotent(x), &gamma, 2).unwrap();
            assert_eq!(img.is_zero(), core_multi(lam, 2) != gamma);
        }
    }

    #[test]
    fn filtration_small_cases() {
        assert!(verify_filtration(1, 2, 2, &mp(""), LabelTwist::None).unwrap().pass);
        assert!(verify_filtration(2, 2, 2, &mp("|"), LabelTwist::None).unwrap().pass);
    }
}
