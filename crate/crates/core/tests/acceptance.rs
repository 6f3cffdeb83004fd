//! One PASS/FAIL line per acceptance criterion. Equalities are exact; each criterion
//! also has a wall-clock bound.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cmfixed::affine_weyl::*;
use cmfixed::arith::{Cyclotomic, Rational};
use cmfixed::fixed_points::*;
use cmfixed::linalg::Matrix;
use cmfixed::parameters::*;
use cmfixed::partitions::*;
use cmfixed::quiver::*;
use cmfixed::wreath::*;
use common::{class_of, group, induced_linear_character, p, rand_params, rand_q, rng};
use rand::Rng;

const GRID: [(usize, usize, usize); 8] = [(1, 2, 2), (1, 3, 2), (1, 4, 2), (1, 4, 3), (2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3)];

type Check = fn() -> Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn criterion_1() -> Result<(), String> {
    ensure!(residues(&p(&[4, 2, 1]), 3).entries == vec![3, 2, 2], "Res_3((4,2,1))");
    ensure!(core(&p(&[4, 2, 1]), 3) == (p(&[1]), 2), "3-core of (4,2,1)");
    let mut r = rng(1);
    for _ in 0..20 {
        let (a, b) = (rand_q(&mut r), rand_q(&mut r));
        let params = ParamSet::new(a.clone(), vec![-&b, b.clone()]).map_err(|e| e.to_string())?;
        let out = transport(&params, 2, &ResidueVector::zero(4)).map_err(|e| e.to_string())?;
        let h = &a / q(2, 1);
        let want = vec![-&b + &h, &b - &h, -&b - &h, &b + &h];
        ensure!(out.k == want && out.a == &a * q(2, 1), "l=2 transport at a={a} b={b}: {:?}", out);
    }
    for k in 1..=6usize {
        let a = rand_q(&mut r);
        let out = transport(&ParamSet::rank_one(a.clone()), k, &ResidueVector::zero(k)).map_err(|e| e.to_string())?;
        for i in 1..=k {
            let want = &a * (Rational::from(i) - q(k as i64 + 1, 2));
            ensure!(out.k[i % k] == want, "l=1 transport k={k} i={i}");
        }
    }
    Ok(())
}

fn criterion_2() -> Result<(), String> {
    for (l, n, k) in GRID {
        let e = enumerate_e(k, l, n);
        let tuples = enumerate_core_tuples(k, l, n);
        ensure!(e.len() == tuples.len(), "|E| != |cores| at {l},{n},{k}");
        let oracle = common::e_by_residues(k, l, n);
        ensure!(e.iter().cloned().collect::<BTreeSet<_>>() == oracle, "E differs from residue oracle at {l},{n},{k}");
        for d in &e {
            let g = delta_map(d, l).map_err(|x| x.to_string())?;
            ensure!(&delta_inverse(&g, k, l, n).map_err(|x| x.to_string())? == d, "δ⁻¹δ(d) != d for {d}");
        }
        for g in &tuples {
            let d = delta_inverse(g, k, l, n).map_err(|x| x.to_string())?;
            ensure!(&delta_map(&d, l).map_err(|x| x.to_string())? == g, "δδ⁻¹(γ) != γ for {g}");
        }
    }
    Ok(())
}

fn criterion_3() -> Result<(), String> {
    for (l, n, k) in GRID {
        let mut r = rng((l * 100 + n * 10 + k) as u64);
        let params = loop {
            let x = rand_params(&mut r, l);
            if smooth_gl1n(&x, n) {
                break x;
            }
        };
        let cat = component_catalog(&params, n, k, Convention::Gordon).map_err(|e| e.to_string())?;
        let total: usize = cat.iter().map(|c| enumerate_multipartitions(k * l, c.r).len()).sum();
        ensure!(total == enumerate_multipartitions(l, n).len(), "counting law fails at {l},{n},{k}");
        if k > n {
            ensure!(cat.iter().all(|c| c.r == 0 && c.labels.len() == 1), "non-point component with k > n at {l},{n},{k}");
        }
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    let mut r = rng(4);
    for l in 2..=5usize {
        for _ in 0..1000 {
            let d = ResidueVector::new((0..l).map(|_| r.gen_range(-5..=8)).collect());
            let t = ThetaVector::new((0..l).map(|_| rand_q(&mut r)).collect());
            let j = r.gen_range(0..l);
            let lhs = pairing(&reflect_dim(j, &d), &reflect_theta(j, &t)).map_err(|e| e.to_string())?;
            let mut rhs = pairing(&d, &t).map_err(|e| e.to_string())?;
            if j == 0 {
                rhs -= &t.entries[0];
            }
            ensure!(lhs == rhs, "pairing identity at l={l} j={j}");
            for i in 0..l {
                ensure!(reflect_dim(i, &reflect_dim(i, &d)) == d, "s_i² on d");
                ensure!(reflect_theta(i, &reflect_theta(i, &t)) == t, "s_i² on θ");
                let i1 = (i + 1) % l;
                if l >= 3 {
                    let a = reflect_dim(i, &reflect_dim(i1, &reflect_dim(i, &d)));
                    let b = reflect_dim(i1, &reflect_dim(i, &reflect_dim(i1, &d)));
                    ensure!(a == b, "braid relation on d at l={l}");
                    let a = reflect_theta(i, &reflect_theta(i1, &reflect_theta(i, &t)));
                    let b = reflect_theta(i1, &reflect_theta(i, &reflect_theta(i1, &t)));
                    ensure!(a == b, "braid relation on θ at l={l}");
                }
                for jj in 0..l {
                    let dist = (i + l - jj) % l;
                    if dist.min(l - dist) >= 2 {
                        ensure!(reflect_dim(i, &reflect_dim(jj, &d)) == reflect_dim(jj, &reflect_dim(i, &d)), "commuting relation on d");
                        ensure!(reflect_theta(i, &reflect_theta(jj, &t)) == reflect_theta(jj, &reflect_theta(i, &t)), "commuting relation on θ");
                    }
                }
            }
        }
    }
    for (l, n) in [(2, 2), (2, 3), (3, 2)] {
        for _ in 0..1000 {
            let x = rand_params(&mut r, l);
            ensure!(smooth_quiver(&theta_from_ak(&x), n) == smooth_gl1n(&x, n), "smoothness mismatch at {x:?}");
        }
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    let mut r = rng(5);
    for (l, n, k) in GRID {
        for d in enumerate_e(k, l, n) {
            let x = rand_params(&mut r, l);
            let y = rand_params(&mut r, l);
            let a = transport(&x, k, &d).map_err(|e| e.to_string())?;
            let b = transport_via_theta(&x, k, &d).map_err(|e| e.to_string())?;
            ensure!(a == b && a.sorted_k() == b.sorted_k(), "routes differ at {l},{n},{k} d={d}");
            let sum = transport(&x.add(&y).map_err(|e| e.to_string())?, k, &d).map_err(|e| e.to_string())?;
            let parts = a.add(&transport(&y, k, &d).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure!(sum == parts, "additivity fails at d={d}");
            let c = rand_q(&mut r);
            ensure!(transport(&x.scale(&c), k, &d).map_err(|e| e.to_string())? == a.scale(&c), "homogeneity fails at d={d}");
        }
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    for (l, n, k) in [(1, 2, 2), (1, 3, 2), (1, 4, 2), (2, 2, 2), (2, 3, 2), (3, 2, 2)] {
        let source = CharacterTable::new(l, n);
        let mut targets = HashMap::new();
        for gamma in enumerate_core_tuples(k, l, n) {
            let r = (n - gamma.size()) / k;
            let target = targets.entry(r).or_insert_with(|| CharacterTable::new(k * l, r));
            let rep = verify_filtration_with(&source, target, k, &gamma, LabelTwist::None).map_err(|e| e.to_string())?;
            ensure!(rep.pass, "filtration fails at {l},{n},{k} γ={gamma}: {:?}", rep.violations);
        }
    }
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    for (l, n) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let t = CharacterTable::new(l, n);
        let order = Rational::from_bigint(t.order());
        let h = t.characters.len();
        let zero = Cyclotomic::zero(l as u32);
        for x in 0..h {
            for z in 0..h {
                let mut acc = zero.clone();
                for (y, info) in t.classes.iter().enumerate() {
                    let term = &t.values[x][y] * &t.values[z][y].conj();
                    acc = &acc + &term.scale(&Rational::from_bigint(info.size.clone()));
                }
                let want = if x == z { order.clone() } else { Rational::zero() };
                ensure!(acc == Cyclotomic::from_rational(want, l as u32), "row orthogonality at ({l},{n})");
            }
        }
        for y in 0..h {
            for w in 0..h {
                let mut acc = zero.clone();
                for x in 0..h {
                    acc = &acc + &(&t.values[x][y] * &t.values[x][w].conj());
                }
                let want = if y == w { &order / Rational::from_bigint(t.classes[y].size.clone()) } else { Rational::zero() };
                ensure!(acc == Cyclotomic::from_rational(want, l as u32), "column orthogonality at ({l},{n})");
            }
        }
        let sq: Rational = (0..h).map(|x| &t.degree(x) * &t.degree(x)).sum();
        ensure!(sq == order, "Σχ(1)² != |W| at ({l},{n})");
    }
    let t = CharacterTable::new(2, 2);
    let reps: HashMap<Multipartition, common::Elem> = group(2, 2).into_iter().map(|g| (class_of(&g, 2), g)).collect();
    for (x, lam) in t.characters.iter().enumerate() {
        for (y, info) in t.classes.iter().enumerate() {
            let want = induced_linear_character(lam, &reps[&info.class.mu], 2);
            ensure!(t.values[x][y] == want, "(2,2) table entry χ_{lam}({:?})", info.class);
        }
    }
    Ok(())
}

fn criterion_8() -> Result<(), String> {
    let mut r = rng(8);
    let zero = Rational::zero();
    let rand_matrix = |r: &mut rand_chacha::ChaCha8Rng, a: usize, b: usize| {
        let rows: Vec<Vec<Rational>> = (0..a).map(|_| (0..b).map(|_| Rational::integer(r.gen_range(-3..=3))).collect()).collect();
        Matrix::from_rows(rows, b).expect("rectangular")
    };
    let mut count = 0;
    while count < 1200 {
        let m = r.gen_range(1..=6usize);
        let divisors: Vec<usize> = (1..=m).filter(|l| m % l == 0).collect();
        let l = divisors[r.gen_range(0..divisors.len())];
        let d: Vec<usize> = (0..m).map(|_| r.gen_range(0..=3)).collect();
        let x = (0..m).map(|i| rand_matrix(&mut r, d[i], d[(i + 1) % m])).collect();
        let y = (0..m).map(|i| rand_matrix(&mut r, d[(i + 1) % m], d[i])).collect();
        let rep = QuiverRep::new(d.clone(), x, y, zero.clone()).map_err(|e| e.to_string())?;
        let mu = rep.moment_map();
        let tr: Rational = mu.iter().map(|a| a.trace(&zero)).sum();
        ensure!(tr.is_zero(), "trace telescoping fails at d={d:?}");
        let big = block_immersion(&rep, l).map_err(|e| e.to_string())?;
        ensure!(big.moment_map() == block_diagonal_by_residue(&mu, &d, l, &zero), "block identity fails at d={d:?} l={l}");
        let cyc = rep.to_cyclotomic(m as u32);
        let scaled = scale_action(&Cyclotomic::zeta(m as u32), &cyc).map_err(|e| e.to_string())?;
        ensure!(cyc.conjugate(&g0(&d)).map_err(|e| e.to_string())? == scaled, "g₀ identity fails at d={d:?}");
        count += 1;
    }
    Ok(())
}

fn criterion_9() -> Result<(), String> {
    let mut r = rng(9);
    for _ in 0..100 {
        let (k0, k1) = (rand_q(&mut r), rand_q(&mut r));
        let k2 = -(&k0 + &k1);
        let c4 = cyclic_cm_polynomial(&[Rational::zero(), &k0 * q(3, 1), &k1 * q(3, 1), &k2 * q(3, 1)]).map_err(|e| e.to_string())?;
        ensure!(g4_surface_order4(&k0, &k1, &k2).sorted_roots() == c4.sorted_roots(), "order-4 surface mismatch");
        let two = q(2, 1);
        let c6 = cyclic_cm_polynomial(&[&k0 * &two, &k1 * &two, &k2 * &two, -k0.clone(), -k1.clone(), -k2.clone()]).map_err(|e| e.to_string())?;
        ensure!(g4_surface_order6(&k0, &k1, &k2).sorted_roots() == c6.sorted_roots(), "order-6 surface mismatch");
        let direct = !k0.is_zero() && !k1.is_zero() && !k2.is_zero() && k0 != k1 && k0 != k2 && k1 != k2;
        ensure!(smooth_g4(&k0, &k1, &k2).map_err(|e| e.to_string())? == direct, "G4 smoothness mismatch");
    }
    Ok(())
}

fn main() {
    let checks: [(Check, Duration); 9] = [
        (criterion_1, Duration::from_secs(1)),
        (criterion_2, Duration::from_secs(10)),
        (criterion_3, Duration::from_secs(10)),
        (criterion_4, Duration::from_secs(30)),
        (criterion_5, Duration::from_secs(10)),
        (criterion_6, Duration::from_secs(300)),
        (criterion_7, Duration::from_secs(60)),
        (criterion_8, Duration::from_secs(30)),
        (criterion_9, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (check, bound)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= *bound {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, bound {bound:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
