//! Narrow-sense binary BCH codes: generator construction from cyclotomic
//! cosets, systematic encoding, syndromes, the re-formulated Berlekamp engine
//! (even iterations skipped), and one-step-ahead decoding of up to (d+1)/2
//! errors.

use crate::gf::{Felt, FieldCtx};
use crate::poly::Poly;
use crate::rs::{valid_root_positions, BmState, Candidate, DecodeOutcome};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BchError {
    #[error("code length must be 2^w - 1 = {expected}, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("designed distance must be odd and 3 <= d <= n, got {0}")]
    BadDistance(usize),
    #[error("expected word of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// A primitive narrow-sense binary BCH code of length n = 2^w - 1 and odd
/// designed distance d; the generator is the LCM of the minimal polynomials
/// of alpha, ..., alpha^{d-1}.
#[derive(Debug, Clone)]
pub struct BchCode {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    field: FieldCtx,
    /// Generator polynomial over GF(2), bit per coefficient.
    generator: Vec<u8>,
}

fn cyclotomic_coset(c: usize, n: usize) -> Vec<usize> {
    let mut out = vec![c];
    let mut x = (2 * c) % n;
    while x != c {
        out.push(x);
        x = (2 * x) % n;
    }
    out
}

fn gf2_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai != 0 {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] ^= bj;
            }
        }
    }
    out
}

impl BchCode {
    pub fn new(field: FieldCtx, n: usize, d: usize) -> Result<BchCode, BchError> {
        let expected = (field.q() - 1) as usize;
        if n != expected {
            return Err(BchError::BadLength { expected, got: n });
        }
        if d.is_multiple_of(2) || d < 3 || d > n {
            return Err(BchError::BadDistance(d));
        }
        let mut covered = vec![false; n];
        let mut generator = vec![1u8];
        for c in 1..d {
            if covered[c] {
                continue;
            }
            let coset = cyclotomic_coset(c, n);
            // minimal polynomial of alpha^c: prod over the coset of (x - alpha^j)
            let mut mp = Poly::one(&field);
            for &j in &coset {
                covered[j] = true;
                mp = mp.mul(
                    &field,
                    &Poly::from_coeffs(vec![field.alpha_pow(j as i64), field.one()]),
                );
            }
            let bits: Vec<u8> = mp
                .coeffs()
                .iter()
                .map(|&x| {
                    debug_assert!(x.value() <= 1, "minimal polynomial not over GF(2)");
                    x.value() as u8
                })
                .collect();
            generator = gf2_mul(&generator, &bits);
        }
        let k = n - (generator.len() - 1);
        Ok(BchCode {
            n,
            k,
            d,
            field,
            generator,
        })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn generator_bits(&self) -> &[u8] {
        &self.generator
    }

    /// Classical error-correction radius floor((d-1)/2).
    pub fn t_classical(&self) -> usize {
        (self.d - 1) / 2
    }

    /// Systematic encoding to an n-bit multiple of the generator.
    pub fn encode(&self, data: &[u8]) -> Result<Vec<u8>, BchError> {
        if data.len() != self.k {
            return Err(BchError::WrongLength {
                expected: self.k,
                got: data.len(),
            });
        }
        let dg = self.generator.len() - 1;
        let mut word = vec![0u8; self.n];
        word[dg..].copy_from_slice(data);
        // remainder of x^{dg} D(x) mod g(x)
        let mut rem = word.clone();
        for i in (dg..self.n).rev() {
            if rem[i] != 0 {
                for (j, &g) in self.generator.iter().enumerate() {
                    rem[i - dg + j] ^= g;
                }
            }
        }
        word[..dg].copy_from_slice(&rem[..dg]);
        Ok(word)
    }

    /// S_j = R(alpha^{j+1}) for j = 0..d-2; S_{2i+1} = S_i^2 by conjugacy.
    pub fn syndromes(&self, r: &[u8]) -> Result<Poly, BchError> {
        if r.len() != self.n {
            return Err(BchError::WrongLength {
                expected: self.n,
                got: r.len(),
            });
        }
        let f = &self.field;
        let rp = Poly::from_coeffs(
            r.iter()
                .map(|&b| if b != 0 { f.one() } else { f.zero() })
                .collect(),
        );
        let s: Vec<Felt> = (0..(self.d - 1) as i64)
            .map(|j| rp.eval(f, f.alpha_pow(j + 1)))
            .collect();
        Ok(Poly::from_coeffs(s))
    }

    pub fn is_codeword(&self, w: &[u8]) -> bool {
        matches!(self.syndromes(w), Ok(s) if s.is_zero())
    }
}

/// Berlekamp engine over S_0..S_{d-2} with the even-iteration skip, returning
/// the state after each of the (d-1)/2 two-step iterations.
///
/// The Laurent initialization B^{(-1)} = x^{-1} is carried as P = x B, so all
/// stored objects are polynomials; `l_b` in intermediate states may lag the
/// paper's running index but the terminal state satisfies L_Lambda + L_B = d-2.
pub fn berlekamp_trace(ctx: &FieldCtx, s: &[Felt], d: usize) -> Vec<BmState> {
    assert!(d % 2 == 1 && d >= 3);
    let mut lambda = Poly::one(ctx);
    let mut p = Poly::one(ctx); // P = x * B^{(r-1)}, so B^{(-1)} = x^{-1} -> P = 1
    let mut l_lambda = 0i64;
    let mut l_b = -1i64;
    let mut out = Vec::new();
    let snapshot = |lambda: &Poly, p: &Poly, ll: i64, lb: i64| BmState {
        lambda: lambda.clone(),
        // expose B = P / x when it is a polynomial (always true after the
        // first iteration; the initial Laurent state reports B = P)
        b: if p.coeff(0, ctx).is_zero() && !p.is_zero() {
            Poly::from_coeffs(p.coeffs()[1..].to_vec())
        } else {
            p.clone()
        },
        l_lambda: ll.max(0) as usize,
        l_b: lb.max(0) as usize,
    };
    for r in (0..=(d as i64 - 3)).step_by(2) {
        let mut delta = ctx.zero();
        for i in 0..=l_lambda.min(r) {
            let li = lambda.coeff(i as usize, ctx);
            let si = s
                .get((r - i) as usize)
                .copied()
                .unwrap_or_else(|| ctx.zero());
            delta += ctx.mul(li, si);
        }
        let xp = p.shift(ctx, 1); // x^2 B^{(r-1)}
        let next = lambda.add(&xp.scale(ctx, delta));
        if !delta.is_zero() && 2 * l_lambda <= r {
            p = lambda.scale(ctx, ctx.inv(delta)).shift(ctx, 1);
            let (nl, nb) = (l_b + 2, l_lambda);
            l_lambda = nl;
            l_b = nb;
        } else {
            p = xp.shift(ctx, 1);
            l_b += 2;
        }
        lambda = next;
        out.push(snapshot(&lambda, &p, l_lambda, l_b));
    }
    out
}

/// Berlekamp engine; terminal state with L_Lambda + L_B = d - 2.
pub fn berlekamp(ctx: &FieldCtx, s: &[Felt], d: usize) -> BmState {
    berlekamp_trace(ctx, s, d).pop().expect("d >= 3")
}

pub(crate) fn bit_flip_candidate(
    code: &BchCode,
    r: &[u8],
    locator: &Poly,
    t: usize,
    pair: Option<(Poly, Poly)>,
) -> Option<Candidate> {
    let deg = locator.degree()?;
    let positions = valid_root_positions(code.n, code.field(), locator);
    if positions.len() != deg {
        return None;
    }
    let mut word = r.to_vec();
    for &i in &positions {
        word[i] ^= 1;
    }
    if !code.is_codeword(&word) {
        return None;
    }
    if positions.len() > t {
        return None;
    }
    let f = code.field();
    Some(Candidate {
        word: word
            .iter()
            .map(|&b| if b != 0 { f.one() } else { f.zero() })
            .collect(),
        distance: positions.len(),
        locator: locator.clone(),
        pair,
    })
}

/// Candidate words back to bit form.
pub fn felt_word_to_bits(w: &[Felt]) -> Vec<u8> {
    w.iter().map(|x| if x.is_zero() { 0 } else { 1 }).collect()
}

/// Unique decoding of up to floor((d-1)/2) bit errors.
pub fn classical_bch_decode(code: &BchCode, r: &[u8]) -> DecodeOutcome {
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
    if state.l_lambda > code.t_classical() {
        return DecodeOutcome::failure();
    }
    match bit_flip_candidate(code, r, &state.lambda, code.t_classical(), None) {
        Some(c) => DecodeOutcome::from_candidates(vec![c]),
        None => DecodeOutcome::failure(),
    }
}

/// One-step-ahead Berlekamp decoding: corrects up to (d+1)/2 bit errors in
/// the list sense by enumerating the one virtual extra discrepancy.
pub fn one_step_ahead_bch_decode(code: &BchCode, r: &[u8]) -> DecodeOutcome {
    let f = code.field();
    let t1 = code.d.div_ceil(2);
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
    if state.l_lambda > t1 {
        return DecodeOutcome::failure();
    }
    let mut cands = Vec::new();
    if state.l_lambda < t1 {
        // the unique codeword within the classical radius, when Lambda is valid
        if let Some(c) = bit_flip_candidate(code, r, &state.lambda, t1, None) {
            cands.push(c);
        }
    }
    // Weight-t1 locators Lambda - Delta x^2 B exist exactly when the virtual
    // next iteration can reach length t1, i.e. L_Lambda or L_{x^2B} equals t1
    // (their sum is d = 2 t1 - 1). Each such locator has degree t1, so its
    // root set is a full group of t1 indices sharing one finite Delta.
    if state.l_lambda + 1 >= t1 {
        let mut groups: std::collections::BTreeMap<Felt, Vec<usize>> = Default::default();
        for i in 0..code.n {
            let x = f.alpha_pow(-(i as i64));
            let bv = state.b.eval(f, x);
            if bv.is_zero() {
                // Lambda and B coprime: no valid locator vanishes here
                continue;
            }
            let x2 = f.alpha_pow(-2 * (i as i64));
            let delta = f.div(state.lambda.eval(f, x), f.mul(x2, bv));
            groups.entry(delta).or_default().push(i);
        }
        for (delta, idxs) in groups {
            if idxs.len() != t1 {
                continue;
            }
            // Lambda* = Lambda - Delta x^2 B
            let locator = state.lambda.add(&state.b.shift(f, 2).scale(f, delta));
            if let Some(c) = bit_flip_candidate(code, r, &locator, t1, None) {
                cands.push(c);
            }
        }
    }
    DecodeOutcome::from_candidates(cands)
}
