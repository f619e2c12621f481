//! Reference vectors for the calibrated GF(16) and GF(64) fields.
//!
//! Each Reed-Solomon pair is a (15, 5) codeword and a received word carrying
//! 7 symbol errors (beyond half distance); the BCH pair is a (63, 18, 21)
//! codeword with 13 bit errors. The key-equation engine outputs they must
//! reproduce are pinned alongside. These vectors fix the calibration of the
//! default primitive polynomials (0x19 for GF(16) with generator-root offset
//! m0 = 1, 0x43 for GF(64)); see the acceptance suite.
//!
//! Symbol vectors are alpha-exponent encoded: `None` is the zero symbol,
//! `Some(k)` is alpha^k; index i is the coefficient of x^i.

use crate::gf::{Felt, FieldCtx};

pub fn word(ctx: &FieldCtx, exps: &[Option<i64>]) -> Vec<Felt> {
    exps.iter()
        .map(|e| match e {
            None => ctx.zero(),
            Some(k) => ctx.alpha_pow(*k),
        })
        .collect()
}

/// RS(15,5) pair A: transmitted codeword.
pub const RS15_5_CW_A: [Option<i64>; 15] = [
    None,
    Some(12),
    Some(10),
    Some(11),
    Some(7),
    Some(5),
    Some(11),
    Some(11),
    Some(6),
    Some(8),
    Some(14),
    Some(11),
    Some(6),
    Some(2),
    Some(1),
];

/// RS(15,5) pair A: received word, 7 symbol errors at positions
/// {1, 3, 6, 8, 9, 11, 13}.
pub const RS15_5_RX_A: [Option<i64>; 15] = [
    None,
    Some(6),
    Some(10),
    Some(5),
    Some(7),
    Some(5),
    Some(5),
    Some(11),
    Some(1),
    Some(2),
    Some(14),
    Some(12),
    Some(6),
    Some(7),
    Some(1),
];

/// The second codeword within distance 7 of RX_A (differs at
/// {0, 3, 6, 7, 10, 11, 12}).
pub const RS15_5_ALT_A: [Option<i64>; 15] = [
    Some(2),
    Some(6),
    Some(10),
    Some(8),
    Some(7),
    Some(5),
    Some(6),
    Some(12),
    Some(1),
    Some(2),
    Some(3),
    Some(9),
    Some(9),
    Some(7),
    Some(1),
];

/// Berlekamp-Massey output on RX_A syndromes (exact).
pub const RS15_5_BM_LAMBDA_A: [Option<i64>; 6] =
    [Some(0), Some(7), Some(13), Some(1), Some(13), Some(4)];
pub const RS15_5_BM_B_A: [Option<i64>; 6] = [None, Some(6), Some(5), Some(10), Some(3), Some(11)];

/// RS(15,5) pair B: transmitted codeword.
pub const RS15_5_CW_B: [Option<i64>; 15] = [
    Some(2),
    Some(3),
    Some(5),
    Some(9),
    Some(12),
    Some(5),
    Some(4),
    Some(1),
    Some(9),
    Some(14),
    Some(9),
    Some(8),
    Some(9),
    Some(11),
    Some(10),
];

/// RS(15,5) pair B: received word, 7 symbol errors; the unique codeword
/// within distance 7.
pub const RS15_5_RX_B: [Option<i64>; 15] = [
    Some(2),
    Some(8),
    Some(5),
    Some(9),
    Some(0),
    Some(5),
    Some(4),
    Some(12),
    Some(2),
    Some(14),
    Some(9),
    Some(8),
    Some(13),
    Some(0),
    Some(11),
];

/// Berlekamp-Massey Lambda on RX_B syndromes (exact); the matching B equals
/// [a^11, a^5, a, a^2] scaled by alpha^RS15_5_BM_B_B_SCALE_LOG.
pub const RS15_5_BM_LAMBDA_B: [Option<i64>; 8] = [
    Some(0),
    Some(9),
    Some(5),
    Some(6),
    None,
    Some(9),
    Some(1),
    Some(4),
];
pub const RS15_5_BM_B_B_REF: [Option<i64>; 4] = [Some(11), Some(5), Some(1), Some(2)];
pub const RS15_5_BM_B_B_SCALE_LOG: i64 = 3;

/// BCH(63,18,21) transmitted codeword.
pub const BCH63_CW: [u8; 63] = [
    1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0,
    1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0,
];

/// BCH(63,18,21) received word: 13 bit errors at
/// {4, 7, 16, 17, 19, 20, 33, 45, 46, 47, 50, 53, 60}.
pub const BCH63_RX: [u8; 63] = [
    1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0,
    1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0,
];

/// The second codeword within distance 13 of BCH63_RX (12 bit flips at
/// {10, 12, 19, 24, 28, 31, 33, 36, 48, 49, 52, 59}).
pub const BCH63_ALT: [u8; 63] = [
    1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1,
    1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0,
];

/// Berlekamp engine Lambda on BCH63_RX syndromes (exact); the matching B
/// equals BCH63_B_REF scaled by alpha^BCH63_B_SCALE_LOG.
pub const BCH63_LAMBDA: [Option<i64>; 11] = [
    Some(0),
    Some(29),
    Some(16),
    Some(5),
    Some(2),
    Some(47),
    Some(6),
    Some(49),
    Some(27),
    Some(19),
    Some(34),
];
pub const BCH63_B_REF: [Option<i64>; 10] = [
    Some(2),
    Some(31),
    Some(23),
    Some(50),
    Some(51),
    Some(42),
    Some(53),
    Some(53),
    Some(32),
    Some(15),
];
pub const BCH63_B_SCALE_LOG: i64 = 14;
