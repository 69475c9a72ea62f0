use lcplab_core::numerics::{format_rational, parse_rational, IndexSet};
use lcplab_core::{Rational, RationalMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..1_000_000).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec(-6i64..=6, n * n)
        .prop_map(move |v| RationalMatrix::from_i64_rows(&v.chunks(n).map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap())
}

proptest! {
    #[test]
    fn rational_text_round_trips(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
        prop_assert_eq!(a.mul(&b).determinant(), a.determinant() * b.determinant());
    }

    #[test]
    fn inverse_solves(a in matrix(3)) {
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a.mul(&inv), RationalMatrix::identity(3));
        } else {
            prop_assert_eq!(a.determinant(), Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn index_sets_parse_their_own_text(bits in 1u32..256) {
        let set = IndexSet::new((0..8).filter(|i| bits >> i & 1 == 1).collect(), 8).unwrap();
        let text = set.one_based().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(IndexSet::parse(&text, 8).unwrap(), set);
    }
}
