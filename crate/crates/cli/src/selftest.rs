//! A fast invariant suite over small cases, seeded for reproducibility.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use cmfixed::affine_weyl::{pairing, reflect_dim, reflect_theta, ThetaVector};
use cmfixed::arith::{Cyclotomic, Rational};
use cmfixed::fixed_points::{component_catalog, delta_inverse, delta_map, enumerate_e, Convention};
use cmfixed::linalg::Matrix;
use cmfixed::parameters::{
    ak_from_theta, cyclic_cm_polynomial, g4_surface_order4, g4_surface_order6, smooth_gl1n, smooth_quiver,
    theta_from_ak, transport, transport_via_theta, ParamSet,
};
use cmfixed::partitions::{core, enumerate_core_tuples, enumerate_multipartitions, residues, Partition, ResidueVector};
use cmfixed::quiver::{block_diagonal_by_residue, block_immersion, g0, scale_action, QuiverRep};
use cmfixed::wreath::{verify_filtration_with, CharacterTable, LabelTwist};

use crate::output::Report;

const GRID: [(usize, usize, usize); 8] = [(1, 2, 2), (1, 3, 2), (1, 4, 2), (1, 4, 3), (2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3)];

#[derive(Serialize)]
struct CheckOut {
    check: &'static str,
    pass: bool,
    detail: String,
}

fn rand_q(r: &mut ChaCha8Rng) -> Rational {
    Rational::new(r.gen_range(-6..=6), r.gen_range(1..=3))
}

fn rand_params(r: &mut ChaCha8Rng, l: usize) -> ParamSet {
    let mut k: Vec<Rational> = (0..l).map(|_| rand_q(r)).collect();
    let s: Rational = k.iter().sum();
    k[0] = &k[0] - &s;
    ParamSet::new(rand_q(r), k).expect("k sums to zero")
}

type Outcome = Result<(), String>;

fn fail(msg: String) -> Outcome {
    Err(msg)
}

fn worked_examples(r: &mut ChaCha8Rng) -> Outcome {
    let lam = Partition::new(vec![4, 2, 1]).expect("partition");
    if residues(&lam, 3).entries != [3, 2, 2] {
        return fail("Res_3((4,2,1)) != (3,2,2)".into());
    }
    if core(&lam, 3) != (Partition::new(vec![1]).expect("partition"), 2) {
        return fail("3-core of (4,2,1) != (1)".into());
    }
    for _ in 0..20 {
        let (a, b) = (rand_q(r), rand_q(r));
        let p = ParamSet::new(a.clone(), vec![-&b, b.clone()]).map_err(|e| e.to_string())?;
        let out = transport(&p, 2, &ResidueVector::zero(4)).map_err(|e| e.to_string())?;
        let h = &a / Rational::integer(2);
        if out.k != [-&b + &h, &b - &h, -&b - &h, &b + &h] || out.a != &a * Rational::integer(2) {
            return fail(format!("transport example at a={a}, b={b}"));
        }
    }
    Ok(())
}

fn delta_bijection(_: &mut ChaCha8Rng) -> Outcome {
    for (l, n, k) in GRID {
        let e = enumerate_e(k, l, n);
        let tuples = enumerate_core_tuples(k, l, n);
        let images: BTreeSet<_> = e.iter().map(|d| delta_map(d, l)).collect::<Result<_, _>>().map_err(|x| x.to_string())?;
        if images != tuples.iter().cloned().collect() || e.len() != tuples.len() {
            return fail(format!("δ is not a bijection at (l,n,k)=({l},{n},{k})"));
        }
        for g in &tuples {
            let d = delta_inverse(g, k, l, n).map_err(|x| x.to_string())?;
            if &delta_map(&d, l).map_err(|x| x.to_string())? != g {
                return fail(format!("δ∘δ⁻¹ moves {g}"));
            }
        }
    }
    Ok(())
}

fn counting_law(r: &mut ChaCha8Rng) -> Outcome {
    for (l, n, k) in GRID {
        let p = loop {
            let p = rand_params(r, l);
            if smooth_gl1n(&p, n) {
                break p;
            }
        };
        let cat = component_catalog(&p, n, k, Convention::Gordon).map_err(|e| e.to_string())?;
        let total: usize = cat.iter().map(|c| enumerate_multipartitions(c.m, c.r).len()).sum();
        if total != enumerate_multipartitions(l, n).len() {
            return fail(format!("Σ|P^m[r]| != |P^l[n]| at ({l},{n},{k})"));
        }
    }
    Ok(())
}

fn weyl_actions(r: &mut ChaCha8Rng) -> Outcome {
    for l in 2..=5 {
        for _ in 0..200 {
            let d = ResidueVector::new((0..l).map(|_| r.gen_range(-5..=8)).collect());
            let t = ThetaVector::new((0..l).map(|_| rand_q(r)).collect());
            let j = r.gen_range(0..l);
            let lhs = pairing(&reflect_dim(j, &d), &reflect_theta(j, &t)).map_err(|e| e.to_string())?;
            let mut rhs = pairing(&d, &t).map_err(|e| e.to_string())?;
            if j == 0 {
                rhs -= &t.entries[0];
            }
            if lhs != rhs || reflect_dim(j, &reflect_dim(j, &d)) != d || reflect_theta(j, &reflect_theta(j, &t)) != t {
                return fail(format!("reflection identities fail at l={l}, j={j}"));
            }
        }
    }
    Ok(())
}

fn dictionary(r: &mut ChaCha8Rng) -> Outcome {
    for l in 1..=6 {
        for _ in 0..100 {
            let p = rand_params(r, l);
            if ak_from_theta(&theta_from_ak(&p)) != p {
                return fail(format!("dictionary round trip at {p:?}"));
            }
        }
    }
    for (l, n) in [(2, 2), (2, 3), (3, 2)] {
        for _ in 0..300 {
            let p = rand_params(r, l);
            if smooth_quiver(&theta_from_ak(&p), n) != smooth_gl1n(&p, n) {
                return fail(format!("smoothness criteria disagree at {p:?}, n={n}"));
            }
        }
    }
    Ok(())
}

fn transport_routes(r: &mut ChaCha8Rng) -> Outcome {
    for (l, n, k) in GRID {
        for d in enumerate_e(k, l, n) {
            let p = rand_params(r, l);
            let a = transport(&p, k, &d).map_err(|e| e.to_string())?;
            let b = transport_via_theta(&p, k, &d).map_err(|e| e.to_string())?;
            if a != b {
                return fail(format!("transport routes differ at d={d}"));
            }
        }
    }
    Ok(())
}

fn filtration(_: &mut ChaCha8Rng) -> Outcome {
    for (l, n, k) in [(1, 2, 2), (1, 3, 2), (1, 4, 2), (2, 2, 2), (2, 3, 2), (3, 2, 2)] {
        let source = CharacterTable::new(l, n);
        for g in enumerate_core_tuples(k, l, n) {
            let target = CharacterTable::new(k * l, (n - g.size()) / k);
            let rep = verify_filtration_with(&source, &target, k, &g, LabelTwist::None).map_err(|e| e.to_string())?;
            if !rep.pass {
                return fail(format!("filtration violated at ({l},{n},{k}), γ={g}"));
            }
        }
    }
    Ok(())
}

fn character_tables(_: &mut ChaCha8Rng) -> Outcome {
    for (l, n) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let t = CharacterTable::new(l, n);
        let order = Rational::from_bigint(t.order());
        for x in 0..t.characters.len() {
            for z in 0..t.characters.len() {
                let mut acc = Cyclotomic::zero(l as u32);
                for (y, info) in t.classes.iter().enumerate() {
                    let v = &t.values[x][y] * &t.values[z][y].conj();
                    acc = &acc + &v.scale(&Rational::from_bigint(info.size.clone()));
                }
                let want = if x == z { order.clone() } else { Rational::zero() };
                if acc != Cyclotomic::from_rational(want, l as u32) {
                    return fail(format!("row orthogonality fails at ({l},{n})"));
                }
            }
        }
    }
    Ok(())
}

fn quiver_identities(r: &mut ChaCha8Rng) -> Outcome {
    let zero = Rational::zero();
    for _ in 0..200 {
        let m = r.gen_range(1..=6usize);
        let ls: Vec<usize> = (1..=m).filter(|l| m % l == 0).collect();
        let l = ls[r.gen_range(0..ls.len())];
        let d: Vec<usize> = (0..m).map(|_| r.gen_range(0..=3)).collect();
        let mut mat = |a: usize, b: usize| {
            let rows = (0..a).map(|_| (0..b).map(|_| Rational::integer(r.gen_range(-3..=3))).collect()).collect();
            Matrix::from_rows(rows, b).expect("rectangular")
        };
        let x = (0..m).map(|i| mat(d[i], d[(i + 1) % m])).collect();
        let y = (0..m).map(|i| mat(d[(i + 1) % m], d[i])).collect();
        let rep = QuiverRep::new(d.clone(), x, y, zero.clone()).map_err(|e| e.to_string())?;
        let mu = rep.moment_map();
        let big = block_immersion(&rep, l).map_err(|e| e.to_string())?;
        if big.moment_map() != block_diagonal_by_residue(&mu, &d, l, &zero) {
            return fail(format!("block identity fails at d={d:?}, l={l}"));
        }
        let cyc = rep.to_cyclotomic(m as u32);
        let scaled = scale_action(&Cyclotomic::zeta(m as u32), &cyc).map_err(|e| e.to_string())?;
        if cyc.conjugate(&g0(&d)).map_err(|e| e.to_string())? != scaled {
            return fail(format!("g₀ is not the ζ-scaling at d={d:?}"));
        }
    }
    Ok(())
}

fn g4_surfaces(r: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..100 {
        let (k0, k1) = (rand_q(r), rand_q(r));
        let k2 = -(&k0 + &k1);
        let three = Rational::integer(3);
        let c4 = cyclic_cm_polynomial(&[Rational::zero(), &three * &k0, &three * &k1, &three * &k2]).map_err(|e| e.to_string())?;
        let two = Rational::integer(2);
        let c6 = cyclic_cm_polynomial(&[&two * &k0, &two * &k1, &two * &k2, -k0.clone(), -k1.clone(), -k2.clone()])
            .map_err(|e| e.to_string())?;
        if g4_surface_order4(&k0, &k1, &k2).sorted_roots() != c4.sorted_roots()
            || g4_surface_order6(&k0, &k1, &k2).sorted_roots() != c6.sorted_roots()
        {
            return fail(format!("G4 surfaces differ at ({k0},{k1},{k2})"));
        }
    }
    Ok(())
}

pub fn run(seed: u64) -> Report {
    let checks: [(&'static str, fn(&mut ChaCha8Rng) -> Outcome); 10] = [
        ("worked_examples", worked_examples),
        ("delta_bijection", delta_bijection),
        ("counting_law", counting_law),
        ("weyl_actions", weyl_actions),
        ("dictionary", dictionary),
        ("transport_routes", transport_routes),
        ("filtration", filtration),
        ("character_tables", character_tables),
        ("quiver_identities", quiver_identities),
        ("g4_surfaces", g4_surfaces),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let results: Vec<CheckOut> = checks
        .iter()
        .map(|(check, f)| {
            let outcome = f(&mut rng);
            CheckOut { check, pass: outcome.is_ok(), detail: outcome.err().unwrap_or_default() }
        })
        .collect();
    let pass = results.iter().all(|c| c.pass);
    let rows = results.iter().map(|c| vec![c.check.to_string(), c.pass.to_string(), c.detail.clone()]).collect();
    Report::new(&results, &["check", "pass", "detail"], rows).passing(pass)
}
