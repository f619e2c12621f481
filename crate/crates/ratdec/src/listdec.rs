//! End-to-end list decoding: orchestration of the key-equation engine,
//! rational interpolation, factorization, candidate validation, and list
//! assembly, plus brute-force oracles for small codes.

use crate::bch::{berlekamp, bit_flip_candidate, felt_word_to_bits, BchCode};
use crate::factor::{
    assemble_bch, assemble_rs, series_extract, series_len_bch, series_len_rs,
    series_to_rational_bch, series_to_rational_rs,
};
use crate::gf::Felt;
use crate::interp::{koetter_interpolate, make_points_bch, make_points_rs};
use crate::planner::{bch_degq, rs_degq, CodeFamily, Plan, PlanMode};
use crate::poly::Poly;
use crate::rs::{
    berlekamp_massey, candidate_from_locator, classical_decode, one_step_ahead_decode, Candidate,
    DecodeOutcome, RsCode,
};

/// List decoding of a Reed-Solomon code to distance plan.t.
///
/// Requests within the classical radius route to classical decoding; 2t = d
/// routes to the one-step-ahead engine; beyond that the rational pipeline
/// runs with the plan's (m, P_y).
pub fn rs_list_decode(code: &RsCode, r: &[Felt], plan: &Plan) -> DecodeOutcome {
    assert_eq!(plan.family, CodeFamily::Rs, "plan family mismatch");
    assert_eq!(plan.n as usize, code.n, "plan length mismatch");
    assert_eq!(plan.d as usize, code.d(), "plan distance mismatch");
    let (m, p_y) = match plan.mode {
        PlanMode::Classical => return classical_decode(code, r),
        PlanMode::OneStepAhead => return one_step_ahead_decode(code, r),
        PlanMode::Rational { m, p_y, .. } => (m as usize, p_y as usize),
    };
    let t = plan.t as usize;
    let f = code.field();
    let s = match code.syndromes(r) {
        Ok(s) => s,
        Err(_) => return DecodeOutcome::failure(),
    };
    if s.is_zero() {
        return DecodeOutcome::from_candidates(vec![Candidate {
            word: r.to_vec(),
            distance: 0,
            locator: Poly::one(f),
            pair: None,
        }]);
    }
    let state = berlekamp_massey(f, s.coeffs(), code.n - code.k);
    if state.l_lambda > t {
        return DecodeOutcome::failure();
    }
    if state.l_xb() > t {
        // only Lambda itself can reach a codeword within t
        return match candidate_from_locator(code, r, &s, &state.lambda, t, None) {
            Some(c) => DecodeOutcome::from_candidates(vec![c]),
            None => DecodeOutcome::failure(),
        };
    }
    let points = make_points_rs(&state, code);
    let w = state.l_lambda as i64 - state.l_xb() as i64;
    let q = koetter_interpolate(f, &points, m, p_y, 1, w);
    debug_assert!(
        q.weighted_degree().unwrap()
            <= rs_degq(t as i64, state.l_lambda as i64, m as i64, p_y as i64)
    );
    let l_s = series_len_rs(t as i64, &state);
    debug_assert!(l_s >= 1);
    let mut cands = Vec::new();
    for series in series_extract(f, &q, l_s as usize) {
        let Some((lambda, b)) = series_to_rational_rs(f, &series, t as i64, &state) else {
            continue;
        };
        let locator = assemble_rs(f, &lambda, &b, &state);
        if let Some(c) = candidate_from_locator(code, r, &s, &locator, t, Some((lambda, b))) {
            cands.push(c);
        }
    }
    DecodeOutcome::from_candidates(cands)
}

/// List decoding of a narrow-sense binary BCH code to distance plan.t.
pub fn bch_list_decode(code: &BchCode, r: &[u8], plan: &Plan) -> DecodeOutcome {
    assert_eq!(plan.family, CodeFamily::Bch, "plan family mismatch");
    assert_eq!(plan.n as usize, code.n, "plan length mismatch");
    assert_eq!(plan.d as usize, code.d, "plan distance mismatch");
    let (m, p_y) = match plan.mode {
        PlanMode::Classical => return crate::bch::classical_bch_decode(code, r),
        PlanMode::OneStepAhead => return crate::bch::one_step_ahead_bch_decode(code, r),
        PlanMode::Rational { m, p_y, .. } => (m as usize, p_y as usize),
    };
    let t = plan.t as usize;
    let f = code.field();
    let s = match code.syndromes(r) {
        Ok(s) => s,
        Err(_) => return DecodeOutcome::failure(),
    };
    if s.is_zero() {
        return DecodeOutcome::from_candidates(vec![Candidate {
            word: r
                .iter()
                .map(|&b| if b != 0 { f.one() } else { f.zero() })
                .collect(),
            distance: 0,
            locator: Poly::one(f),
            pair: None,
        }]);
    }
    let state = berlekamp(f, s.coeffs(), code.d);
    if state.l_lambda > t {
        return DecodeOutcome::failure();
    }
    let l_x2b = state.l_b + 2;
    if l_x2b > t {
        return match bit_flip_candidate(code, r, &state.lambda, t, None) {
            Some(c) => DecodeOutcome::from_candidates(vec![c]),
            None => DecodeOutcome::failure(),
        };
    }
    let points = make_points_bch(&state, code);
    let w = state.l_lambda as i64 - l_x2b as i64;
    let q = koetter_interpolate(f, &points, m, p_y, 2, w);
    debug_assert!(
        q.weighted_degree().unwrap()
            <= bch_degq(t as i64, state.l_lambda as i64, m as i64, p_y as i64)
    );
    let l_s = series_len_bch(t as i64, &state);
    debug_assert!(l_s >= 1);
    let mut cands = Vec::new();
    for series in series_extract(f, &q, l_s as usize) {
        let Some((lambda, b)) = series_to_rational_bch(f, &series, t as i64, &state) else {
            continue;
        };
        let locator = assemble_bch(f, &lambda, &b, &state);
        if let Some(c) = bit_flip_candidate(code, r, &locator, t, Some((lambda, b))) {
            cands.push(c);
        }
    }
    DecodeOutcome::from_candidates(cands)
}

/// Brute-force ground truth: every codeword within Hamming distance t of r,
/// by exhaustive enumeration. Guarded to q^k <= 2^21.
pub fn oracle_rs_list_decode(code: &RsCode, r: &[Felt], t: usize) -> Vec<Vec<Felt>> {
    let q = code.field().q() as u64;
    let size = q.checked_pow(code.k as u32).expect("oracle code too large");
    assert!(size <= 1 << 21, "oracle code too large: q^k = {size}");
    let f = code.field();
    let mut data = vec![f.zero(); code.k];
    let mut out = Vec::new();
    for idx in 0..size {
        let mut v = idx;
        for slot in data.iter_mut() {
            *slot = f.elt((v % q) as u32);
            v /= q;
        }
        let cw = code.encode(&data).unwrap();
        let dist = cw.iter().zip(r).filter(|(a, b)| a != b).count();
        if dist <= t {
            out.push(cw);
        }
    }
    out.sort();
    out
}

/// BCH analogue, guarded to 2^k <= 2^20.
pub fn oracle_bch_list_decode(code: &BchCode, r: &[u8], t: usize) -> Vec<Vec<u8>> {
    assert!(code.k <= 20, "oracle code too large: 2^{}", code.k);
    let mut out = Vec::new();
    for idx in 0u64..(1 << code.k) {
        let data: Vec<u8> = (0..code.k).map(|i| ((idx >> i) & 1) as u8).collect();
        let cw = code.encode(&data).unwrap();
        let dist = cw.iter().zip(r).filter(|(a, b)| a != b).count();
        if dist <= t {
            out.push(cw);
        }
    }
    out.sort();
    out
}

/// Sorted candidate words as bit vectors (for comparing BCH outcomes with the
/// oracle).
pub fn outcome_bits(outcome: &DecodeOutcome) -> Vec<Vec<u8>> {
    let mut v: Vec<Vec<u8>> = outcome
        .candidates
        .iter()
        .map(|c| felt_word_to_bits(&c.word))
        .collect();
    v.sort();
    v
}
