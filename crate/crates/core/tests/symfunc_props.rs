use minorrel_core::partitions::{BiShape, Partition};
use minorrel_core::symfunc::{
    character, dim_schur, dim_schur_big, quadratic_kernel_shapes, to_schur_label, SchurExpansion, SymFunc,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn schur_power_sum_round_trip() {
    let mut sf = SymFunc::new();
    for n in 0..=12u32 {
        for lambda in Partition::all(n, n as usize, n) {
            let f = sf.schur_to_power_sums(&lambda);
            let back = sf.power_sums_to_schur(&f, n);
            assert_eq!(back, vec![(lambda.clone(), BigRational::one())], "{lambda}");
        }
    }
}

#[test]
fn plethysm_dimensions() {
    let mut sf = SymFunc::new();
    for t in 1..=8u32 {
        for d in 1..=8 / t {
            for mu in Partition::all(d, d as usize, d) {
                let e = sf.plethysm_exterior(&mu, t).unwrap();
                for n in 1..=6u32 {
                    let outer = binomial(n as u128, t as u128) as u32;
                    assert_eq!(e.dim(n), dim_schur(&mu, outer), "L_{mu}(∧^{t}), n={n}");
                }
            }
        }
    }
}

#[test]
fn cauchy_formula() {
    for m in 1..=4u32 {
        for n in 1..=4u32 {
            for d in 0..=5u32 {
                let total: u128 = Partition::all(d, d as usize, d)
                    .iter()
                    .map(|l| dim_schur(l, m) * dim_schur(l, n))
                    .sum();
                let mn = (m * n) as u128;
                assert_eq!(total, binomial(mn + d as u128 - 1, d as u128), "{m}x{n}, d={d}");
            }
        }
    }
}

#[test]
fn symmetric_powers_of_the_exterior_square() {
    let mut sf = SymFunc::new();
    for d in 0..=6u32 {
        let got = sf.sym_power_exterior(d, 2).unwrap();
        let even: Vec<(Partition, u64)> = Partition::all(2 * d, d as usize, 2 * d)
            .into_iter()
            .filter(|l| l.parts().iter().all(|x| x % 2 == 0))
            .map(|l| (l, 1))
            .collect();
        assert_eq!(got, SchurExpansion::from_terms(even), "d={d}");
    }
}

#[test]
fn tensor_power_is_sum_of_plethysms() {
    let mut sf = SymFunc::new();
    for t in 1..=3u32 {
        for d in 1..=12 / t {
            let tensor = sf.tensor_power_exterior(t, d).unwrap();
            for lambda in Partition::admissible(t, d) {
                let mut via: u64 = 0;
                for mu in Partition::all(d, d as usize, d) {
                    let specht = character(&to_schur_label(&mu), &Partition::column(d)) as u64;
                    via += specht * sf.mult_in_plethysm(&lambda, &mu, t).unwrap();
                }
                assert_eq!(via, tensor.mult(&lambda), "{lambda}, t={t}");
            }
        }
    }
}

#[test]
fn degree_two_kernel() {
    let mut sf = SymFunc::new();
    for t in 1..=4u32 {
        let shapes = Partition::admissible(t, 2);
        let mut found = Vec::new();
        for g in &shapes {
            for l in &shapes {
                let b = BiShape::new(g.clone(), l.clone());
                if sf.mult_in_j(&b, t).unwrap() > 0 {
                    found.push(b);
                }
            }
        }
        found.sort_by(|a, b| b.cmp(a));
        assert_eq!(found, quadratic_kernel_shapes(t), "t={t}");
    }
}

#[test]
fn frozen_multiplicities() {
    let mut sf = SymFunc::new();
    let cases = [
        ("(4,2)|(4,2)", 2, 1),
        ("(4,4)|(4,4)", 2, 1),
        ("(3,3)|(4,1,1)", 1, 1),
        ("(4,2)|(3,2,1)", 1, 1),
        ("(6,2)|(7,1)", 1, 1),
        ("(4,2)|(6)", 1, 1),
        ("(5,3)|(6,2)", 1, 1),
        ("(2,2)|(2,2)", 1, 0),
        ("(2,2)|(4)", 1, 1),
        ("(3,1)|(4)", 0, 0),
    ];
    for (s, in_s, in_j) in cases {
        let b: BiShape = s.parse().unwrap();
        assert_eq!(sf.mult_in_s(&b, 2).unwrap(), in_s, "{s}");
        assert_eq!(sf.mult_in_j(&b, 2).unwrap(), in_j, "{s}");
    }
    assert_eq!(dim_schur(&p(&[2, 2]), 4), 20);
    assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
}

proptest! {
    #[test]
    fn big_and_small_dimensions_agree(parts in prop::collection::vec(0u32..6, 0..5), n in 0u32..9) {
        let mut v = parts;
        v.sort_unstable_by(|a, b| b.cmp(a));
        let l = Partition::new(v).unwrap();
        prop_assert_eq!(dim_schur_big(&l, n), BigUint::from(dim_schur(&l, n)));
        prop_assert_eq!(dim_schur(&l, n) == 0, l.first() > n);
    }
}
