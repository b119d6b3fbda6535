mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn lambda_sum_in_character_ring(x in graded_char(2), y in graded_char(2)) {
        char_lambda_sum(&x, &y)?;
    }

    #[test]
    fn twisted_sym_in_character_ring(x in effective_char(), m in 0i32..4) {
        char_twist(&x, m)?;
    }

    #[test]
    fn lambda_sum_in_free_ring(x in k3_poly(), y in k3_poly()) {
        k3_lambda_sum(&x, &y)?;
    }

    #[test]
    fn twisted_sym_in_free_ring(x in k3_poly(), m in 0u32..4) {
        k3_twist(&x, m)?;
    }

    #[test]
    fn decompose_inverts_construction(t in prop::collection::vec((0i32..4, 1usize..10, -3i64..=3), 0..8)) {
        decompose_round_trip(&t)?;
    }

    #[test]
    fn mark_character_is_a_ring_map(a in burn_element(), b in burn_element()) {
        burn_char_hom(&a, &b)?;
    }

    #[test]
    fn json_is_reproducible(i in 0usize..1000) {
        deterministic_json(i)?;
    }
}
