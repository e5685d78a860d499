use minorrel_core::multilinear::ExtIndex;
use minorrel_core::partitions::{BiShape, Partition};
use minorrel_core::relations::{
    determinantal_relation, even_cubic, mirror, odd_cubic, quadratic_relation, validate_initial_segment,
    InitialSegment, MinorPolynomial, MinorSymbol,
};
use minorrel_core::symfunc::quadratic_kernel_shapes;
use minorrel_core::verify::is_relation;
use num_bigint::BigInt;
use proptest::prelude::*;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn quadratic_monomial_counts() {
    for t in 1..=5u32 {
        for u in 0..=t {
            for v in 0..=t {
                let Ok(f) = quadratic_relation(t, u, v) else { continue };
                // Splits of the two index ranges, halved once for the swap of factors.
                let want = binomial(2 * u as u64, u as u64) * binomial(2 * v as u64, v as u64) / 2;
                assert_eq!(f.len() as u64, want, "t={t}, u={u}, v={v}");
            }
        }
    }
}

#[test]
fn cubic_monomial_counts() {
    for t in 2..=5u32 {
        for u in 1..=t / 2 {
            let g = even_cubic(t, u).unwrap();
            let parts = factorial(3 * u as u64) / factorial(u as u64).pow(3);
            assert_eq!(g.len() as u64, parts / 6 * parts, "g_{u}, t={t}");
        }
        for u in 2..=t.div_ceil(2) {
            let h = odd_cubic(t, u).unwrap();
            let u = u as u64;
            let parts = factorial(3 * u - 2) / (factorial(u - 1).pow(2) * factorial(u));
            // The first product is symmetric under exchanging A with C and L with N.
            assert_eq!(h.len() as u64, parts * parts / 2 + parts * parts, "h_{u}, t={t}");
        }
    }
}

#[test]
fn quadratics_exist_exactly_for_kernel_shapes() {
    for t in 1..=5u32 {
        let mut built = Vec::new();
        for u in 0..=t {
            for v in 0..=t {
                if quadratic_relation(t, u, v).is_ok() {
                    let tau = |a: u32| Partition::new(vec![t + a, t - a]).unwrap();
                    built.push(BiShape::new(tau(u), tau(v)));
                }
            }
        }
        built.sort_by(|a, b| b.cmp(a));
        assert_eq!(built, quadratic_kernel_shapes(t), "t={t}");
    }
}

#[test]
fn mirrors_swap_the_quadratic_indices() {
    for t in 1..=4u32 {
        for u in 0..=t {
            for v in 0..=t {
                if let Ok(f) = quadratic_relation(t, u, v) {
                    let g = quadratic_relation(t, v, u).unwrap();
                    assert!(mirror(&f).same_up_to_scalar(&g), "t={t}, u={u}, v={v}");
                }
            }
        }
    }
}

/// All initial segments of length `len` of 2-subsets of `{1..top}`.
fn segments(len: usize, top: u8) -> Vec<Vec<ExtIndex>> {
    let all: Vec<ExtIndex> = (1..=top)
        .flat_map(|a| (a + 1..=top).map(move |b| ExtIndex::new(vec![a, b]).unwrap()))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(all: &[ExtIndex], len: usize, cur: &mut Vec<ExtIndex>, out: &mut Vec<Vec<ExtIndex>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in all {
            if cur.contains(x) {
                continue;
            }
            cur.push(x.clone());
            if validate_initial_segment(cur) {
                go(all, len, cur, out);
            }
            cur.pop();
        }
    }
    go(&all, len, &mut cur, &mut out);
    out
}

#[test]
fn determinantal_relations_vanish() {
    let mut checked = 0;
    for d in 1..=4 {
        let segs: Vec<InitialSegment> = segments(d, 5).into_iter().map(|s| InitialSegment::new(s).unwrap()).collect();
        for r in &segs {
            for c in &segs {
                if r.shape() == c.shape() {
                    assert!(determinantal_relation(2, r, c).is_err());
                    continue;
                }
                let p = determinantal_relation(2, r, c).unwrap();
                let (m, n) = (p.max_row_index() as u32, p.max_col_index() as u32);
                assert!(is_relation(&p, m, n).unwrap(), "{p}");
                checked += 1;
            }
        }
    }
    // (3,3) against (4,1,1), and the two 4-element shapes with three orderings.
    assert_eq!(checked, 6);
}

fn polynomial() -> impl Strategy<Value = MinorPolynomial> {
    let sub = || prop::sample::subsequence((1u8..=5).collect::<Vec<_>>(), 2);
    let sym = (sub(), sub()).prop_map(|(r, c)| MinorSymbol::new(ExtIndex::new(r).unwrap(), ExtIndex::new(c).unwrap()).unwrap());
    let term = (prop::collection::vec(sym, 2), -4i64..=4);
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let mut p = MinorPolynomial::new();
        for (m, c) in terms {
            p.add_term(m, BigInt::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn mirror_is_an_involution(p in polynomial()) {
        prop_assert_eq!(mirror(&mirror(&p)), p.normalized());
    }

    #[test]
    fn normalizing_is_idempotent(p in polynomial(), k in 1i64..5) {
        let n = p.normalized();
        prop_assert_eq!(n.normalized(), n.clone());
        prop_assert_eq!(p.scaled(&BigInt::from(-k)).normalized(), n);
    }

    #[test]
    fn invariance_commutes_with_mirror(p in polynomial()) {
        prop_assert_eq!(p.is_u_invariant(), mirror(&p).is_u_invariant());
    }
}
