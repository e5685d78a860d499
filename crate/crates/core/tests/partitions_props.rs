use minorrel_core::partitions::{
    classify_tshape, predecessors, successors, tensor_multiplicity, trivial_extension, BiShape, MultiplicityCache,
    Partition,
};
use minorrel_core::symfunc::SymFunc;
use proptest::prelude::*;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn admissible_up_to(size: u32) -> Vec<(u32, u32, Partition)> {
    let mut out = Vec::new();
    for t in 1..=size {
        for d in 1..=size / t {
            for l in Partition::admissible(t, d) {
                out.push((t, d, l));
            }
        }
    }
    out
}

#[test]
fn predecessor_successor_duality() {
    for (t, _, lambda) in admissible_up_to(12) {
        for alpha in predecessors(&lambda, t).unwrap() {
            assert!(successors(&alpha, t).contains(&lambda), "{alpha} -> {lambda}, t={t}");
        }
        for gamma in successors(&lambda, t) {
            if gamma.size() <= 12 {
                assert!(predecessors(&gamma, t).unwrap().contains(&lambda), "{lambda} -> {gamma}, t={t}");
            }
        }
    }
}

#[test]
fn recursion_matches_characters() {
    let mut sf = SymFunc::new();
    for t in 1..=12u32 {
        for d in 0..=12 / t {
            let oracle = sf.tensor_power_exterior(t, d).unwrap();
            for lambda in Partition::admissible(t, d) {
                assert_eq!(tensor_multiplicity(&lambda, t).unwrap(), oracle.mult(&lambda) as u128, "{lambda}, t={t}");
            }
        }
    }
}

fn is_fat_hook(l: &Partition) -> bool {
    let mut distinct = l.parts().to_vec();
    distinct.dedup();
    distinct.len() == 2
}

#[test]
fn single_predecessor_shapes() {
    for (t, d, lambda) in admissible_up_to(12) {
        if d < 2 {
            continue;
        }
        let one = predecessors(&lambda, t).unwrap().len() == 1;
        let rectangle = lambda.parts().iter().all(|&x| x == lambda.first());
        let expect = rectangle || (is_fat_hook(&lambda) && lambda.rows() == d as usize);
        assert_eq!(one, expect, "{lambda}, t={t}, d={d}");
    }
}

#[test]
fn symmetric_and_alternating_predecessors_balance() {
    let mut sf = SymFunc::new();
    let (sym2, alt2) = (p(&[1, 1]), p(&[2]));
    for t in 1..=4u32 {
        for lambda in Partition::admissible(t, 3) {
            let (mut a, mut b) = (0i64, 0i64);
            for alpha in predecessors(&lambda, t).unwrap() {
                a += sf.mult_in_plethysm(&alpha, &sym2, t).unwrap() as i64;
                b += sf.mult_in_plethysm(&alpha, &alt2, t).unwrap() as i64;
            }
            assert!((a - b).abs() <= 1, "{lambda}, t={t}: {a} vs {b}");
        }
    }
}

#[test]
fn tshapes_have_one_symmetric_predecessor() {
    for t in 1..=5u32 {
        let mut cache = MultiplicityCache::new(t);
        for b in classify_tshape(t, 3).unwrap() {
            let (pr, pc) = (predecessors(&b.row, t).unwrap(), predecessors(&b.col, t).unwrap());
            assert_eq!(pr.len(), 1, "{b}");
            assert_eq!(pr, pc, "{b}");
            assert_eq!(cache.get(&pr[0]).unwrap(), 1, "{b}");
        }
    }
}

#[test]
fn trivial_extension_preserves_plethysm_multiplicity() {
    let mut sf = SymFunc::with_cap(16);
    for t in 1..=4u32 {
        for d in 1..=8 / t {
            for mu in Partition::all(d, d as usize, d) {
                for lambda in Partition::admissible(t, d) {
                    let ext = trivial_extension(&lambda, d, 1).unwrap();
                    assert_eq!(
                        sf.mult_in_plethysm(&lambda, &mu, t).unwrap(),
                        sf.mult_in_plethysm(&ext, &mu, t + 1).unwrap(),
                        "{lambda} in L_{mu}, t={t}"
                    );
                }
            }
        }
    }
}

#[test]
fn middle_shapes_occur_in_the_mixed_component() {
    let mut sf = SymFunc::new();
    let mixed = p(&[2, 1]);
    for t in 1..=4u32 {
        for lambda in Partition::admissible(t, 3) {
            if predecessors(&lambda, t).unwrap().len() >= 2 {
                assert!(sf.mult_in_plethysm(&lambda, &mixed, t).unwrap() >= 1, "{lambda}, t={t}");
            }
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..8, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(l in partition()) {
        prop_assert_eq!(l.transpose().transpose(), l.clone());
        prop_assert_eq!(l.transpose().size(), l.size());
    }

    #[test]
    fn display_round_trips(l in partition(), r in partition()) {
        let s = l.to_string();
        prop_assert_eq!(s.parse::<Partition>().unwrap(), l.clone());
        let b = BiShape::new(l, r);
        prop_assert_eq!(b.to_string().parse::<BiShape>().unwrap(), b.clone());
        prop_assert_eq!(b.mirror().mirror(), b);
    }

    #[test]
    fn extension_by_zero_columns_is_identity(l in partition(), extra in 0u32..3) {
        let d = l.rows() as u32 + extra;
        prop_assert_eq!(trivial_extension(&l, d, 0).unwrap(), l.clone());
        let e = trivial_extension(&l, d, 2).unwrap();
        prop_assert_eq!(e.size(), l.size() + 2 * d);
    }

    #[test]
    fn successors_are_admissible_one_degree_up(t in 1u32..4, d in 0u32..4, pick in 0usize..50) {
        let shapes = Partition::admissible(t, d);
        let alpha = &shapes[pick % shapes.len()];
        for g in successors(alpha, t) {
            prop_assert!(g.is_admissible(t, d + 1));
        }
    }
}
