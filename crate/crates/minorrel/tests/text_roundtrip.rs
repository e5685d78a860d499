use minorrel::text::parse_polynomial;
use minorrel_core::relations::{even_cubic, mirror, odd_cubic, quadratic_relation, MinorPolynomial, MinorSymbol};
use num_bigint::BigInt;
use proptest::prelude::*;

fn symbol() -> impl Strategy<Value = MinorSymbol> {
    (1usize..=3).prop_flat_map(|k| {
        (
            proptest::sample::subsequence((1u8..=6).collect::<Vec<_>>(), k),
            proptest::sample::subsequence((1u8..=6).collect::<Vec<_>>(), k),
        )
            .prop_map(|(r, c)| MinorSymbol::from_lists(&r, &c).unwrap().unwrap().0)
    })
}

fn polynomial() -> impl Strategy<Value = MinorPolynomial> {
    proptest::collection::vec((proptest::collection::vec(symbol(), 1..4), -50i64..50), 0..6).prop_map(|terms| {
        let mut p = MinorPolynomial::new();
        for (mono, c) in terms {
            p.add_term(mono, BigInt::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn display_then_parse(p in polynomial()) {
        let s = p.to_string();
        let q = parse_polynomial(&s).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(q.to_string(), s);
    }

    #[test]
    fn reversed_lists_flip_signs(r in proptest::sample::subsequence((1u8..=6).collect::<Vec<_>>(), 2),
                                 c in proptest::sample::subsequence((1u8..=6).collect::<Vec<_>>(), 2)) {
        let fwd = parse_polynomial(&format!("[{},{}|{},{}]", r[0], r[1], c[0], c[1])).unwrap();
        let rev = parse_polynomial(&format!("[{},{}|{},{}]", r[1], r[0], c[0], c[1])).unwrap();
        prop_assert_eq!(rev, fwd.scaled(&BigInt::from(-1)));
    }
}

#[test]
fn constructed_relations_round_trip() {
    let mut polys = Vec::new();
    for t in 1..=3 {
        for u in 0..=t {
            for v in 0..=t {
                if u != v && (u + v) % 2 == 0 {
                    polys.push(quadratic_relation(t, u, v).unwrap());
                }
            }
        }
        for u in 1..=t / 2 {
            polys.push(even_cubic(t, u).unwrap());
        }
        for u in 2..=t.div_ceil(2) {
            polys.push(odd_cubic(t, u).unwrap());
        }
    }
    assert!(polys.len() > 8);
    for p in polys {
        for q in [mirror(&p), p] {
            assert_eq!(parse_polynomial(&q.to_string()).unwrap(), q);
        }
    }
}
