mod common;

use cmfixed::affine_weyl::*;
use cmfixed::arith::Rational;
use cmfixed::partitions::{cores_up_to, partitions_of, residues, ResidueVector};
use common::{rand_q, rng};
use proptest::prelude::*;
use rand::Rng;

fn rv(v: &[i64]) -> ResidueVector {
    ResidueVector::new(v.to_vec())
}

fn rand_theta(r: &mut impl Rng, l: usize) -> ThetaVector {
    ThetaVector::new((0..l).map(|_| rand_q(r)).collect())
}

fn rand_dim(r: &mut impl Rng, l: usize) -> ResidueVector {
    ResidueVector::new((0..l).map(|_| r.gen_range(-5..=8)).collect())
}

#[test]
fn reflect_dim_on_delta() {
    for l in 2..=5 {
        let delta = ResidueVector::delta(l, 1);
        for j in 1..l {
            assert_eq!(reflect_dim(j, &delta), delta);
        }
        let s0 = reflect_dim(0, &delta);
        assert_eq!(s0.entries[0], 2);
        assert!(s0.entries[1..].iter().all(|&x| x == 1));
    }
    assert_eq!(reflect_dim(0, &rv(&[3])), rv(&[3]));
}

#[test]
fn reflect_theta_fixes_zero_entry() {
    let t = ThetaVector::from_ints(&[1, 0, 4]);
    assert_eq!(reflect_theta(1, &t), t);
}

#[test]
fn pairing_examples() {
    let t = ThetaVector::from_ints(&[2, -1, 5]);
    assert_eq!(pairing(&ResidueVector::delta(3, 1), &t).unwrap(), t.sum());
    assert!(pairing(&ResidueVector::zero(3), &t).unwrap().is_zero());
    assert!(pairing(&ResidueVector::zero(2), &t).is_err());
}

#[test]
fn pairing_identity_random() {
    let mut r = rng(11);
    for l in 2..=5 {
        for _ in 0..1000 {
            let d = rand_dim(&mut r, l);
            let t = rand_theta(&mut r, l);
            let j = r.gen_range(0..l);
            let lhs = pairing(&reflect_dim(j, &d), &reflect_theta(j, &t)).unwrap();
            let mut rhs = pairing(&d, &t).unwrap();
            if j == 0 {
                rhs -= &t.entries[0];
            }
            assert_eq!(lhs, rhs, "l={l} j={j} d={d} θ={t:?}");
        }
    }
}

#[test]
fn coxeter_relations_random() {
    let mut r = rng(12);
    for l in 2..=6 {
        for _ in 0..100 {
            let d = rand_dim(&mut r, l);
            let t = rand_theta(&mut r, l);
            for i in 0..l {
                assert_eq!(reflect_dim(i, &reflect_dim(i, &d)), d);
                assert_eq!(reflect_theta(i, &reflect_theta(i, &t)), t);
                assert_eq!(reflect_theta(i, &t).sum(), t.sum());
                for j in 0..l {
                    let dist = (i + l - j) % l;
                    let dist = dist.min(l - dist);
                    if dist >= 2 {
                        assert_eq!(reflect_dim(i, &reflect_dim(j, &d)), reflect_dim(j, &reflect_dim(i, &d)));
                        assert_eq!(reflect_theta(i, &reflect_theta(j, &t)), reflect_theta(j, &reflect_theta(i, &t)));
                    } else if dist == 1 && l >= 3 {
                        let bd = |x: &ResidueVector| reflect_dim(i, &reflect_dim(j, &reflect_dim(i, x)));
                        let bd2 = |x: &ResidueVector| reflect_dim(j, &reflect_dim(i, &reflect_dim(j, x)));
                        assert_eq!(bd(&d), bd2(&d));
                        let bt = reflect_theta(i, &reflect_theta(j, &reflect_theta(i, &t)));
                        let bt2 = reflect_theta(j, &reflect_theta(i, &reflect_theta(j, &t)));
                        assert_eq!(bt, bt2);
                    }
                }
            }
        }
    }
}

#[test]
fn bar_examples() {
    for l in 1..=5 {
        assert!(bar(&ResidueVector::delta(l, 3)).entries.iter().all(Rational::is_zero));
    }
    let mut a = ResidueVector::zero(5);
    a.entries[2] = 1;
    assert_eq!(bar(&a), ThetaVector::from_ints(&[0, -1, 2, -1, 0]));
    assert_eq!(bar(&rv(&[0, 1])), ThetaVector::from_ints(&[-2, 2]));
}

#[test]
fn translations() {
    let mut r = rng(13);
    for l in 2..=5 {
        for _ in 0..200 {
            let t = rand_theta(&mut r, l);
            let a = rand_dim(&mut r, l);
            let b = rand_dim(&mut r, l);
            assert_eq!(translate_theta(&ResidueVector::zero(l), &t).unwrap(), t);
            let ta = translate_theta(&a, &t).unwrap();
            assert_eq!(ta.sum(), t.sum());
            let tab = translate_theta(&a, &translate_theta(&b, &t).unwrap()).unwrap();
            assert_eq!(tab, translate_theta(&a.add(&b).unwrap(), &t).unwrap());
        }
    }
}

#[test]
fn translation_is_s0_s1_at_l2() {
    let mut r = rng(14);
    for _ in 0..200 {
        let t = rand_theta(&mut r, 2);
        let word = reflect_theta(0, &reflect_theta(1, &t));
        assert_eq!(word, translate_theta(&rv(&[0, 1]), &t).unwrap());
    }
}

#[test]
fn orbit_examples() {
    assert_eq!(orbit_normalize(&ResidueVector::delta(4, 3)), (3, ResidueVector::zero(4)));
    assert_eq!(orbit_normalize(&rv(&[3, 2, 2])).0, 2);
    for l in 1..=4 {
        for nu in cores_up_to(l, 10) {
            assert_eq!(orbit_normalize(&residues(&nu, l)).0, 0);
        }
    }
    assert!(!is_plus(&ResidueVector::delta(3, -1)));
    assert!(!is_plus(&rv(&[2, -1, 3])));
}

#[test]
fn plus_vectors_are_residues() {
    for l in 1..=3 {
        let res: std::collections::BTreeSet<_> = (0..=9).flat_map(partitions_of).map(|p| residues(&p, l)).collect();
        // entries ≤ 3 keep |d| ≤ 9, inside the enumerated range
        let bound = 3i64;
        let mut d = vec![0i64; l];
        loop {
            let v = ResidueVector::new(d.clone());
            assert_eq!(is_plus(&v), res.contains(&v), "{v}");
            let mut i = 0;
            while i < l {
                d[i] += 1;
                if d[i] <= bound {
                    break;
                }
                d[i] = -1;
                i += 1;
            }
            if i == l {
                break;
            }
        }
    }
}

proptest! {
    #[test]
    fn orbit_invariant_under_reflections(entries in prop::collection::vec(-6i64..=8, 2..=6), j in 0usize..6) {
        let d = ResidueVector::new(entries);
        let n = orbit_normalize(&d).0;
        prop_assert_eq!(orbit_normalize(&reflect_dim(j, &d)).0, n);
    }

    #[test]
    fn residues_are_plus(parts in prop::collection::vec(1usize..=6, 0..=6), l in 1usize..=5) {
        let p = cmfixed::partitions::Partition::from_unsorted(parts);
        prop_assert!(is_plus(&residues(&p, l)));
    }
}
