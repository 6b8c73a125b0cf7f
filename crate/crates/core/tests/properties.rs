use num_bigint::BigInt;
use proptest::prelude::*;

use pebbling::board::{initial_board, Board};
use pebbling::recurrence::CountTable;
use pebbling::series::IntSeries;

fn series() -> impl Strategy<Value = IntSeries> {
    (-3i64..4, prop::collection::vec(-50i64..50, 0..12), 8i64..20)
        .prop_map(|(v, c, n)| IntSeries::from_i64s(v, &c, n))
}

fn unit_series() -> impl Strategy<Value = IntSeries> {
    (
        -2i64..3,
        prop::bool::ANY,
        prop::collection::vec(-20i64..20, 0..10),
        10i64..20,
    )
        .prop_map(|(v, neg, mut c, n)| {
            c.insert(0, if neg { -1 } else { 1 });
            IntSeries::from_i64s(v, &c, n)
        })
}

proptest! {
    #[test]
    fn addition_commutes(a in series(), b in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_commutes(a in series(), b in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in series(), b in series(), c in series()) {
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert!(left.agrees_with(&right));
    }

    #[test]
    fn distributes(a in series(), b in series(), c in series()) {
        let left = &a * &(&b + &c);
        let right = &(&a * &b) + &(&a * &c);
        prop_assert!(left.agrees_with(&right));
    }

    #[test]
    fn subtraction_is_inverse(a in series(), b in series()) {
        let back = &(&a + &b) - &b;
        prop_assert!(back.agrees_with(&a));
    }

    #[test]
    fn inverse_round_trips(a in unit_series()) {
        let inv = a.invert().unwrap();
        let product = &a * &inv;
        prop_assert_eq!(product.valuation(), 0);
        prop_assert!(product.agrees_with(&IntSeries::one()));
        prop_assert_eq!(inv.invert().unwrap().coeff(a.valuation()), Some(a.coeff(a.valuation()).unwrap()));
    }

    #[test]
    fn scaling_matches_constant_product(a in series(), k in -9i64..9) {
        let scaled = a.scale(&BigInt::from(k));
        let product = &a * &IntSeries::poly_i64(0, &[k]);
        prop_assert!(scaled.agrees_with(&product));
    }

    #[test]
    fn board_text_round_trips(m in 0usize..4, moves in prop::collection::vec(0usize..8, 0..10)) {
        let mut board = initial_board(m);
        for pick in moves {
            let legal = board.legal_moves();
            if legal.is_empty() { break; }
            board = board.apply_move(legal[pick % legal.len()]).unwrap();
        }
        prop_assert_eq!(Board::from_text(&board.to_text()).unwrap(), board);
    }

    #[test]
    fn table_is_deterministic_and_prefix_stable(k in 10usize..120) {
        let small = CountTable::build(k);
        let big = CountTable::build(k + 17);
        for (kk, m, g) in small.entries() {
            prop_assert_eq!(big.g(kk, m).unwrap(), g.clone());
        }
        prop_assert_eq!(small, CountTable::build(k));
    }
}
