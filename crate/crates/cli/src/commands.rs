use std::io::Read;

use serde::Serialize;

use cmfixed::affine_weyl::{is_plus, ThetaVector};
use cmfixed::arith::Rational;
use cmfixed::fixed_points::{self, component_catalog, delta_inverse, delta_map, Convention};
use cmfixed::parameters::{
    cyclic_cm_polynomial, g4_surface_order4, g4_surface_order6, smooth_cyclic, smooth_g4, smooth_gl1n, smooth_gl1n_with,
    smooth_quiver, theta_from_ak, transport_via_theta, CyclicCMSurface, ParamSet,
};
use cmfixed::partitions::{self, parse_partition, Multipartition, Partition, ResidueVector};
use cmfixed::quiver::{block_diagonal_by_residue, block_immersion, in_deformed_fiber, norton_simplicity, QuiverRep, Simplicity};
use cmfixed::wreath::{verify_filtration_with, CharacterTable, FiltrationReport, LabelTwist};
use cmfixed::{Error, Result};

use crate::output::{joined, Report};

fn rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|t| t.trim().parse::<Rational>()).collect()
}

fn params(l: usize, a: &str, kparams: Option<&str>) -> Result<ParamSet> {
    let a = a.parse::<Rational>()?;
    let k = match kparams {
        Some(s) => rationals(s)?,
        None => vec![Rational::zero(); l],
    };
    if k.len() != l {
        return Err(Error::Invalid(format!("--kparams has {} entries, expected l = {l}", k.len())));
    }
    ParamSet::new(a, k)
}

fn positive(name: &str, v: usize) -> Result<usize> {
    if v == 0 {
        return Err(Error::Invalid(format!("--{name} must be at least 1")));
    }
    Ok(v)
}

#[derive(Serialize)]
struct CoreOut {
    core: Partition,
    removals: usize,
}

pub fn cores(partition: &str, l: usize) -> Result<Report> {
    let lam = parse_partition(partition)?;
    let (core, removals) = partitions::core(&lam, positive("l", l)?);
    let row = vec![core.to_string(), removals.to_string()];
    Ok(Report::new(&CoreOut { core, removals }, &["core", "removals"], vec![row]))
}

#[derive(Serialize)]
struct QuotientOut {
    core: Partition,
    removals: usize,
    quotient: Multipartition,
}

pub fn quotient(partition: &str, l: usize) -> Result<Report> {
    let lam = parse_partition(partition)?;
    let (core, removals) = partitions::core(&lam, positive("l", l)?);
    let quotient = partitions::quotient(&lam, l);
    let row = vec![core.to_string(), removals.to_string(), quotient.to_string()];
    Ok(Report::new(&QuotientOut { core, removals, quotient }, &["core", "removals", "quotient"], vec![row]))
}

pub fn residues(partition: &str, l: usize) -> Result<Report> {
    let lam = parse_partition(partition)?;
    let r = partitions::residues(&lam, positive("l", l)?);
    let header = (0..l).map(|i| i.to_string()).collect();
    let row = r.entries.iter().map(i64::to_string).collect();
    Ok(Report::new(&r, &[], vec![row]).with_header(header))
}

#[derive(Serialize)]
struct EEntry {
    d: ResidueVector,
    gamma: Multipartition,
    r: usize,
}

pub fn enumerate_e(k: usize, l: usize, n: usize) -> Result<Report> {
    positive("k", k)?;
    positive("l", l)?;
    let entries: Vec<EEntry> = fixed_points::enumerate_e(k, l, n)
        .into_iter()
        .map(|d| {
            let gamma = delta_map(&d, l)?;
            let r = (n - gamma.size()) / k;
            Ok(EEntry { d, gamma, r })
        })
        .collect::<Result<_>>()?;
    let rows = entries
        .iter()
        .map(|e| vec![joined(&e.d.entries), e.gamma.to_string(), e.r.to_string()])
        .collect();
    Ok(Report::new(&entries, &["d", "gamma", "r"], rows))
}

pub fn components(l: usize, n: usize, k: usize, a: &str, kparams: Option<&str>, conv: Convention) -> Result<Report> {
    positive("k", k)?;
    let p = params(positive("l", l)?, a, kparams)?;
    let cat = component_catalog(&p, n, k, conv)?;
    let m = k * l;
    let mut header = vec!["gamma".to_string(), "r".into(), "d".into(), "a_prime".into()];
    header.extend((0..m).map(|j| format!("k_prime_{j}")));
    header.push("labels".into());
    let rows = cat
        .iter()
        .map(|c| {
            let mut row = vec![c.gamma.to_string(), c.r.to_string(), joined(&c.d.entries), c.c_prime.a.to_string()];
            row.extend(c.c_prime.k.iter().map(Rational::to_string));
            row.push(c.labels.iter().map(Multipartition::to_string).collect::<Vec<_>>().join(" "));
            row
        })
        .collect();
    Ok(Report::new(&cat, &[], rows).with_header(header))
}

#[derive(Serialize)]
struct TransportOut {
    l: usize,
    a: Rational,
    k: Vec<Rational>,
    n: usize,
    r: usize,
    gamma: Multipartition,
    routes_agree: bool,
}

pub fn transport(l: usize, k: usize, d: &str, a: &str, kparams: Option<&str>) -> Result<Report> {
    positive("k", k)?;
    let p = params(positive("l", l)?, a, kparams)?;
    let d = ResidueVector::parse(d)?;
    let m = k * l;
    if d.modulus != m {
        return Err(Error::Invalid(format!("--d has {} entries, expected k·l = {m}", d.modulus)));
    }
    let sums = d.class_sums(l).entries;
    let n = sums[0];
    if sums.iter().any(|&s| s != n) || n < 0 || !is_plus(&d) {
        return Err(Error::Invalid(format!("d = {d} is not in E({k},{l},n) for any n ≥ 0")));
    }
    let n = n as usize;
    let gamma = delta_map(&d, l)?;
    let closed = cmfixed::parameters::transport(&p, k, &d)?;
    let theta_route = transport_via_theta(&p, k, &d)?;
    let routes_agree = closed == theta_route;
    let row = {
        let mut r = vec![closed.a.to_string()];
        r.extend(closed.k.iter().map(Rational::to_string));
        r
    };
    let mut header = vec!["a_prime".to_string()];
    header.extend((0..m).map(|j| format!("k_prime_{j}")));
    let out = TransportOut {
        l: m,
        a: closed.a,
        k: closed.k,
        n,
        r: (n - gamma.size()) / k,
        gamma,
        routes_agree,
    };
    Ok(Report::new(&out, &[], vec![row]).with_header(header).passing(routes_agree))
}

pub fn chartable(l: usize, n: usize) -> Result<Report> {
    let t = CharacterTable::new(positive("l", l)?, n);
    let mut header = vec!["character".to_string()];
    header.extend(t.classes.iter().map(|c| c.class.mu.to_string()));
    let rows = t
        .characters
        .iter()
        .zip(&t.values)
        .map(|(lam, vals)| {
            let mut row = vec![lam.to_string()];
            row.extend(vals.iter().map(ToString::to_string));
            row
        })
        .collect();
    Ok(Report::new(&t, &[], rows).with_header(header))
}

pub fn verify_filtration(l: usize, n: usize, k: usize, gamma: Option<&str>, conv: Convention) -> Result<Report> {
    positive("k", k)?;
    positive("l", l)?;
    let twist = match conv {
        Convention::Gordon => LabelTwist::None,
        Convention::Quiver => LabelTwist::Flip,
    };
    let gammas = match gamma {
        Some(g) => {
            let g = Multipartition::parse(g)?;
            delta_inverse(&g, k, l, n)?;
            vec![g]
        }
        None => partitions::enumerate_core_tuples(k, l, n),
    };
    let source = CharacterTable::new(l, n);
    let mut targets = std::collections::BTreeMap::new();
    let mut reports: Vec<FiltrationReport> = Vec::new();
    for g in &gammas {
        let r = (n - g.size()) / k;
        let target = targets.entry(r).or_insert_with(|| CharacterTable::new(k * l, r));
        reports.push(verify_filtration_with(&source, target, k, g, twist)?);
    }
    let pass = reports.iter().all(|r| r.pass);
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.gamma.to_string(),
                r.r.to_string(),
                format!("{:?}", r.twist).to_lowercase(),
                r.pass.to_string(),
                r.certificates.len().to_string(),
                r.violations.len().to_string(),
            ]
        })
        .collect();
    Ok(Report::new(&reports, &["gamma", "r", "twist", "pass", "classes", "violations"], rows).passing(pass))
}

#[derive(Serialize)]
struct SmoothOut {
    l: usize,
    n: usize,
    a: Rational,
    k: Vec<Rational>,
    theta: Vec<Rational>,
    gl1n: bool,
    drop_a: bool,
    quiver: bool,
    cyclic: bool,
    agree: bool,
}

pub fn smooth(l: usize, n: usize, a: &str, kparams: Option<&str>, drop_a: bool) -> Result<Report> {
    let p = params(positive("l", l)?, a, kparams)?;
    let theta = theta_from_ak(&p);
    let quiver = smooth_quiver(&theta, n);
    let agree = quiver == smooth_gl1n(&p, n);
    let out = SmoothOut {
        l,
        n,
        gl1n: smooth_gl1n_with(&p, n, !drop_a),
        drop_a,
        quiver,
        cyclic: smooth_cyclic(&p.k),
        agree,
        a: p.a,
        k: p.k,
        theta: theta.entries,
    };
    let row = vec![out.gl1n.to_string(), out.quiver.to_string(), out.cyclic.to_string(), agree.to_string()];
    Ok(Report::new(&out, &["gl1n", "quiver", "cyclic", "agree"], vec![row]).passing(agree))
}

#[derive(Serialize)]
struct SurfaceMatch {
    surface: CyclicCMSurface,
    cyclic_k: Vec<Rational>,
    matches: bool,
}

#[derive(Serialize)]
struct G4Out {
    k: Vec<Rational>,
    smooth: bool,
    order4: SurfaceMatch,
    order6: SurfaceMatch,
}

pub fn g4(ks: &str) -> Result<Report> {
    let k = rationals(ks)?;
    let [k0, k1, k2] = <[Rational; 3]>::try_from(k.clone())
        .map_err(|_| Error::Invalid("--g4 takes exactly three values k0,k1,k2".into()))?;
    let smooth = smooth_g4(&k0, &k1, &k2)?;
    let matched = |surface: CyclicCMSurface, cyclic_k: Vec<Rational>| -> Result<SurfaceMatch> {
        let matches = cyclic_cm_polynomial(&cyclic_k)?.sorted_roots() == surface.sorted_roots();
        Ok(SurfaceMatch { surface, cyclic_k, matches })
    };
    let three = Rational::integer(3);
    let two = Rational::integer(2);
    let order4 = matched(
        g4_surface_order4(&k0, &k1, &k2),
        vec![Rational::zero(), &three * &k0, &three * &k1, &three * &k2],
    )?;
    let order6 = matched(
        g4_surface_order6(&k0, &k1, &k2),
        vec![&two * &k0, &two * &k1, &two * &k2, -k0.clone(), -k1.clone(), -k2.clone()],
    )?;
    let pass = order4.matches && order6.matches;
    let row = vec![smooth.to_string(), order4.matches.to_string(), order6.matches.to_string()];
    let out = G4Out { k, smooth, order4, order6 };
    Ok(Report::new(&out, &["smooth", "order4_matches", "order6_matches"], vec![row]).passing(pass))
}

#[derive(Serialize)]
struct ImmersionOut {
    l: usize,
    d: Vec<usize>,
    block_identity: bool,
    in_fiber: Option<bool>,
}

#[derive(Serialize)]
struct QuiverOut {
    l: usize,
    d: Vec<usize>,
    moment_map: Vec<cmfixed::linalg::Matrix<Rational>>,
    trace_total: Rational,
    in_fiber: Option<bool>,
    simplicity: Simplicity,
    immersion: Option<ImmersionOut>,
}

pub fn quiver_check(path: &str, theta: Option<&str>, immerse: Option<usize>, budget: usize, seed: u64) -> Result<Report> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Invalid(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("reading {path}: {e}")))?
    };
    let rep = QuiverRep::from_json(&text)?;
    let theta = theta.map(rationals).transpose()?.map(ThetaVector::new);
    if let Some(t) = &theta {
        if t.modulus != rep.l {
            return Err(Error::Invalid(format!("--theta has {} entries, the quiver has {} vertices", t.modulus, rep.l)));
        }
    }
    let mu = rep.moment_map();
    let zero = Rational::zero();
    let trace_total: Rational = mu.iter().map(|m| m.trace(&zero)).sum();
    let in_fiber = theta.as_ref().map(|t| in_deformed_fiber(&rep, t));
    let immersion = immerse
        .map(|l| -> Result<ImmersionOut> {
            let big = block_immersion(&rep, l)?;
            let block_identity = big.moment_map() == block_diagonal_by_residue(&mu, &rep.d, l, &zero);
            // θ descends to Z/lZ only when it is l-periodic
            let in_fiber = theta.as_ref().and_then(|t| {
                let small = ThetaVector::new(t.entries[..l].to_vec());
                (small.repeat(rep.l / l) == *t).then(|| in_deformed_fiber(&big, &small))
            });
            Ok(ImmersionOut { l, d: big.d.clone(), block_identity, in_fiber })
        })
        .transpose()?;
    let simplicity = norton_simplicity(&rep, seed, budget);
    let pass = trace_total.is_zero()
        && in_fiber != Some(false)
        && immersion.as_ref().map_or(true, |i| i.block_identity && i.in_fiber != Some(false));
    let opt = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
    let kind = match &simplicity {
        Simplicity::Simple => "simple",
        Simplicity::NotSimple { .. } => "not_simple",
        Simplicity::Unknown => "unknown",
    };
    let row = vec![
        trace_total.to_string(),
        opt(in_fiber),
        kind.to_string(),
        opt(immersion.as_ref().map(|i| i.block_identity)),
        opt(immersion.as_ref().and_then(|i| i.in_fiber)),
    ];
    let out = QuiverOut { l: rep.l, d: rep.d.clone(), moment_map: mu, trace_total, in_fiber, simplicity, immersion };
    Ok(Report::new(&out, &["trace_total", "in_fiber", "simplicity", "block_identity", "immersion_in_fiber"], vec![row]).passing(pass))
}
