use minorrel_core::multilinear::{
    bi_tensor, bi_weight_of, check_u_invariant, project_fd, successor_lift, symmetrize, weight_of, BiTensor,
    ExtIndex, ExtTensor, Side,
};
use minorrel_core::partitions::{successors, BiShape, BiWeight, Partition, Tableau, WeightVector};
use num_bigint::BigInt;
use proptest::prelude::*;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn ext(v: &[u8]) -> ExtIndex {
    ExtIndex::new(v.to_vec()).unwrap()
}

/// `Σ ± (e_P ∧ e_I) ⊗ (e_P ∧ e_J)` over splits of `{t-u+1..t+u}`: the
/// factor of one side of `f_{u,v}`.
fn split_tensor(t: u8, u: u8) -> ExtTensor {
    let x: Vec<u8> = (t - u + 1..=t + u).collect();
    let base: Vec<u8> = (1..=t - u).collect();
    let mut out = ExtTensor::new();
    for mask in 0u32..(1 << x.len()) {
        if mask.count_ones() != u as u32 {
            continue;
        }
        let pick = |inside: bool| -> Vec<u8> {
            (0..x.len()).filter(|k| (mask & (1 << k) != 0) == inside).map(|k| x[k]).collect()
        };
        let (i, j) = (pick(true), pick(false));
        let mut order: Vec<u8> = i.iter().chain(&j).copied().collect();
        let sign = minorrel_core::multilinear::sort_sign(&mut order).unwrap();
        let a = ExtIndex::new(base.iter().chain(&i).copied().collect()).unwrap();
        let b = ExtIndex::new(base.iter().chain(&j).copied().collect()).unwrap();
        out.add_term(vec![a, b], BigInt::from(sign));
    }
    out
}

#[test]
fn lifts_are_highest_weight_vectors() {
    for t in 1..=3u32 {
        for size in 0..=8 - t {
            for lambda in Partition::all(size, size as usize, size) {
                let lam = Tableau::row_filling(&lambda);
                for gamma in successors(&lambda, t) {
                    let v = successor_lift(&lam, &lambda, &gamma, t).unwrap();
                    assert!(!v.is_zero(), "{lambda} -> {gamma}");
                    assert!(check_u_invariant(&v, Side::Row), "{lambda} -> {gamma}");
                    assert_eq!(weight_of(&v).unwrap().trimmed(), WeightVector::row_highest(&gamma));
                }
            }
        }
    }
}

#[test]
fn wedged_lifts_survive() {
    for t in 1..=4u32 {
        for d in 0..8 / t {
            for lambda in Partition::admissible(t, d) {
                let tab = &Tableau::strip_fillings(&lambda, t, 1).unwrap()[0];
                for gamma in successors(&lambda, t) {
                    let x = project_fd(&successor_lift(tab, &lambda, &gamma, t).unwrap(), t).unwrap();
                    assert!(!x.is_zero(), "{lambda} -> {gamma}, t={t}");
                    assert!(check_u_invariant(&x, Side::Row), "{lambda} -> {gamma}, t={t}");
                    assert_eq!(weight_of(&x).unwrap().trimmed(), WeightVector::row_highest(&gamma));
                }
            }
        }
    }
}

#[test]
fn quadratic_factors_pair_to_an_invariant() {
    for t in 1..=4u8 {
        for u in 0..=t {
            for v in 0..=t {
                let (r, c) = (split_tensor(t, u), split_tensor(t, v));
                assert!(check_u_invariant(&r, Side::Row), "t={t}, u={u}");
                let b = bi_tensor(&r, &c).unwrap();
                assert!(check_u_invariant(&b, Side::Row) && check_u_invariant(&b, Side::Col));
                let shape = BiShape::new(p(&[(t + u) as u32, (t - u) as u32]), p(&[(t + v) as u32, (t - v) as u32]));
                assert_eq!(bi_weight_of(&b).unwrap().trimmed(), BiWeight::highest(&shape).trimmed());
            }
        }
    }
}

#[test]
fn swapping_two_indices_flips_the_sign() {
    for a in 1..=6u8 {
        for b in 1..=6u8 {
            match (ExtIndex::from_unsorted(&[a, b]), ExtIndex::from_unsorted(&[b, a])) {
                (Some((x, s)), Some((y, r))) => {
                    assert_eq!(x, y);
                    assert_eq!(s, -r);
                }
                (None, None) => assert_eq!(a, b),
                _ => panic!("{a},{b}"),
            }
        }
    }
    assert_eq!(ExtIndex::from_unsorted(&[2, 1]).unwrap(), (ext(&[1, 2]), -1));
}

fn bitensor() -> impl Strategy<Value = (BiTensor, Vec<usize>)> {
    let sub = || prop::sample::subsequence((1u8..=5).collect::<Vec<_>>(), 2);
    let factor = (sub(), sub()).prop_map(|(r, c)| (ExtIndex::new(r).unwrap(), ExtIndex::new(c).unwrap()));
    (1usize..4).prop_flat_map(move |d| {
        let term = (prop::collection::vec(factor.clone(), d), -3i64..=3);
        let perm = Just((0..d).collect::<Vec<_>>()).prop_shuffle();
        (prop::collection::vec(term, 1..6), perm)
    })
    .prop_map(|(terms, perm)| {
        let t: BiTensor = terms.into_iter().map(|(k, c)| (k, BigInt::from(c))).collect();
        (t, perm)
    })
}

proptest! {
    #[test]
    fn symmetrize_ignores_factor_order((b, perm) in bitensor()) {
        let permuted: BiTensor = b
            .iter()
            .map(|(k, c)| (perm.iter().map(|&i| k[i].clone()).collect::<Vec<_>>(), c.clone()))
            .collect();
        prop_assert_eq!(symmetrize(&b), symmetrize(&permuted));
    }
}
