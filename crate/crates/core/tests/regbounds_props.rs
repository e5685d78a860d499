use minorrel_core::regbounds::{degree_bound, duality_check, hilbert_at, regularity, RegCase};
use proptest::prelude::*;

#[test]
fn regularity_of_the_submaximal_case() {
    for m in 3..=8u32 {
        let r = regularity(m - 1, m, m + 1).unwrap();
        assert_eq!(r.reg, Some(m as u64), "m={m}");
    }
}

#[test]
fn duality_for_small_squares() {
    for n in 2..=6 {
        for t in 1..n {
            assert!(duality_check(t, n, 4).unwrap(), "t={t}, n={n}");
        }
    }
}

proptest! {
    #[test]
    fn degree_bound_does_not_depend_on_n(t in 1u32..6, extra in 0u32..5, a in 0u32..20, b in 0u32..20) {
        let m = t + extra;
        let (n1, n2) = (m + t + a, m + t + b);
        prop_assert_eq!(degree_bound(t, m, n1).unwrap(), degree_bound(t, m, n2).unwrap());
    }

    #[test]
    fn regularity_is_symmetric_in_the_format(t in 1u32..5, m in 1u32..9, n in 1u32..9) {
        prop_assume!(t <= m.min(n));
        let (a, b) = (regularity(t, m, n).unwrap(), regularity(t, n, m).unwrap());
        prop_assert_eq!(a, b);
        let excluded = t == 1 || m.max(n) <= t + 1 || t == m.min(n);
        prop_assert_eq!(a.case == RegCase::Excluded, excluded);
        prop_assert_eq!(a.reg.is_none(), excluded);
    }

    #[test]
    fn hilbert_function_is_symmetric_in_the_format(m in 1u32..5, n in 1u32..5, d in 0u32..4) {
        prop_assert_eq!(hilbert_at(2, m, n, d).unwrap(), hilbert_at(2, n, m, d).unwrap());
    }
}
