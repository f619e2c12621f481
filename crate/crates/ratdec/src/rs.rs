//! Reed-Solomon codes: systematic encoding, syndromes, the re-formulated
//! Berlekamp-Massey engine, Chien/Forney error correction, and one-step-ahead
//! decoding of up to d/2 errors.

use crate::gf::{Felt, FieldCtx};
use crate::poly::Poly;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("need 1 <= k < n < q, got n={n}, k={k}, q={q}")]
    BadParams { n: usize, k: usize, q: u32 },
    #[error("expected word of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// An (n, k) Reed-Solomon code over GF(q) with generator roots
/// alpha^{m0}, ..., alpha^{m0+n-k-1}.
#[derive(Debug, Clone)]
pub struct RsCode {
    pub n: usize,
    pub k: usize,
    pub m0: i64,
    field: FieldCtx,
    generator: Poly,
}

impl RsCode {
    pub fn new(field: FieldCtx, n: usize, k: usize, m0: i64) -> Result<RsCode, CodeError> {
        if !(1 <= k && k < n && (n as u32) < field.q()) {
            return Err(CodeError::BadParams { n, k, q: field.q() });
        }
        let mut generator = Poly::one(&field);
        for i in 0..(n - k) as i64 {
            // (x - alpha^{m0+i})
            let root = Poly::from_coeffs(vec![field.alpha_pow(m0 + i), field.one()]);
            generator = generator.mul(&field, &root);
        }
        Ok(RsCode {
            n,
            k,
            m0,
            field,
            generator,
        })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// Minimum distance d = n - k + 1.
    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    /// Classical error-correction radius floor((n-k)/2).
    pub fn t_classical(&self) -> usize {
        (self.n - self.k) / 2
    }

    /// Systematic encoding: C(x) = x^{n-k} D(x) - (x^{n-k} D(x) mod G(x)).
    pub fn encode(&self, data: &[Felt]) -> Result<Vec<Felt>, CodeError> {
        if data.len() != self.k {
            return Err(CodeError::WrongLength {
                expected: self.k,
                got: data.len(),
            });
        }
        let f = &self.field;
        let msg = Poly::from_coeffs(data.to_vec()).shift(f, self.n - self.k);
        let (_, rem) = msg.div_rem(f, &self.generator);
        let cw = msg.add(&rem);
        let mut out = vec![f.zero(); self.n];
        for (i, &c) in cw.coeffs().iter().enumerate() {
            out[i] = c;
        }
        Ok(out)
    }

    /// S_i = R(alpha^{i+m0}) for i = 0..n-k-1, as a polynomial in x.
    pub fn syndromes(&self, r: &[Felt]) -> Result<Poly, CodeError> {
        if r.len() != self.n {
            return Err(CodeError::WrongLength {
                expected: self.n,
                got: r.len(),
            });
        }
        let f = &self.field;
        let rp = Poly::from_coeffs(r.to_vec());
        let s: Vec<Felt> = (0..(self.n - self.k) as i64)
            .map(|i| rp.eval(f, f.alpha_pow(i + self.m0)))
            .collect();
        Ok(Poly::from_coeffs(s))
    }

    pub fn is_codeword(&self, w: &[Felt]) -> bool {
        matches!(self.syndromes(w), Ok(s) if s.is_zero())
    }
}

/// Output of the key-equation engines: the error locator Lambda, the
/// correction polynomial B, and their LFSR lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmState {
    pub lambda: Poly,
    pub b: Poly,
    pub l_lambda: usize,
    pub l_b: usize,
}

impl BmState {
    /// LFSR length of xB(x).
    pub fn l_xb(&self) -> usize {
        self.l_b + 1
    }
}

/// Berlekamp-Massey over the first `iterations` entries of `s` (entries past
/// the end of `s` read as zero), returning the state after every iteration;
/// index r holds the state entering iteration r.
pub fn berlekamp_massey_trace(ctx: &FieldCtx, s: &[Felt], iterations: usize) -> Vec<BmState> {
    let mut lambda = Poly::one(ctx);
    let mut b = Poly::one(ctx);
    let mut l_lambda = 0usize;
    let mut l_b = 0usize;
    let mut out = Vec::with_capacity(iterations + 1);
    out.push(BmState {
        lambda: lambda.clone(),
        b: b.clone(),
        l_lambda,
        l_b,
    });
    for r in 0..iterations {
        let mut delta = ctx.zero();
        for i in 0..=l_lambda.min(r) {
            let li = lambda.coeff(i, ctx);
            let si = s.get(r - i).copied().unwrap_or_else(|| ctx.zero());
            delta += ctx.mul(li, si);
        }
        let xb = b.shift(ctx, 1);
        let next = lambda.add(&xb.scale(ctx, delta));
        if !delta.is_zero() && 2 * l_lambda <= r {
            b = lambda.scale(ctx, ctx.inv(delta));
            let (nl, nb) = (l_b + 1, l_lambda);
            l_lambda = nl;
            l_b = nb;
        } else {
            b = xb;
            l_b += 1;
        }
        lambda = next;
        out.push(BmState {
            lambda: lambda.clone(),
            b: b.clone(),
            l_lambda,
            l_b,
        });
    }
    out
}

/// Berlekamp-Massey LFSR synthesis over a syndrome sequence.
pub fn berlekamp_massey(ctx: &FieldCtx, s: &[Felt], iterations: usize) -> BmState {
    berlekamp_massey_trace(ctx, s, iterations).pop().unwrap()
}

/// One corrected word candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub word: Vec<Felt>,
    pub distance: usize,
    /// The candidate error locator that produced this word.
    pub locator: Poly,
    /// (lambda, b) pair from factorization, when the rational pipeline ran.
    pub pair: Option<(Poly, Poly)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeStatus {
    Unique,
    List,
    Failure,
}

#[derive(Debug, Clone)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    pub candidates: Vec<Candidate>,
}

impl DecodeOutcome {
    pub fn failure() -> DecodeOutcome {
        DecodeOutcome {
            status: DecodeStatus::Failure,
            candidates: Vec::new(),
        }
    }

    pub fn from_candidates(mut candidates: Vec<Candidate>) -> DecodeOutcome {
        candidates.sort_by(|a, b| a.word.cmp(&b.word));
        candidates.dedup_by(|a, b| a.word == b.word);
        let status = match candidates.len() {
            0 => DecodeStatus::Failure,
            1 => DecodeStatus::Unique,
            _ => DecodeStatus::List,
        };
        DecodeOutcome { status, candidates }
    }

    pub fn words(&self) -> Vec<Vec<Felt>> {
        self.candidates.iter().map(|c| c.word.clone()).collect()
    }
}

/// Error magnitudes via Forney's formula for a locator with simple valid
/// roots: Y = X^{1-m0} Omega(X^{-1}) / Lambda'(X^{-1}).
///
/// Returns the corrected word, or None when a magnitude is undefined (the
/// locator has a repeated root).
pub(crate) fn forney_correct(
    code: &RsCode,
    r: &[Felt],
    locator: &Poly,
    syndromes: &Poly,
    root_positions: &[usize],
) -> Option<Vec<Felt>> {
    let f = code.field();
    let omega = locator.mul(f, syndromes).mod_xk(code.n - code.k);
    let dlam = locator.derivative(f);
    let mut word = r.to_vec();
    for &i in root_positions {
        let rho = f.alpha_pow(-(i as i64)); // X^{-1}
        let den = dlam.eval(f, rho);
        if den.is_zero() {
            return None;
        }
        let num = omega.eval(f, rho);
        let xpow = f.alpha_pow((i as i64) * (1 - code.m0));
        let y = f.mul(xpow, f.div(num, den));
        word[i] += y;
    }
    Some(word)
}

fn hamming(a: &[Felt], b: &[Felt]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Positions i < n with locator(alpha^{-i}) = 0.
pub fn valid_root_positions(code_n: usize, ctx: &FieldCtx, locator: &Poly) -> Vec<usize> {
    (0..code_n)
        .filter(|&i| locator.eval(ctx, ctx.alpha_pow(-(i as i64))).is_zero())
        .collect()
}

/// Build a verified candidate from a locator: all roots valid and distinct
/// (count equals degree), Forney magnitudes defined, corrected word is a
/// codeword within `t` of `r`.
pub(crate) fn candidate_from_locator(
    code: &RsCode,
    r: &[Felt],
    s: &Poly,
    locator: &Poly,
    t: usize,
    pair: Option<(Poly, Poly)>,
) -> Option<Candidate> {
    let deg = locator.degree()?;
    let positions = valid_root_positions(code.n, code.field(), locator);
    if positions.len() != deg {
        return None;
    }
    let word = forney_correct(code, r, locator, s, &positions)?;
    if !code.is_codeword(&word) {
        return None;
    }
    let distance = hamming(&word, r);
    if distance > t {
        return None;
    }
    Some(Candidate {
        word,
        distance,
        locator: locator.clone(),
        pair,
    })
}

/// Unique decoding of up to floor((n-k)/2) errors.
pub fn classical_decode(code: &RsCode, r: &[Felt]) -> DecodeOutcome {
    let s = match code.syndromes(r) {
        Ok(s) => s,
        Err(_) => return DecodeOutcome::failure(),
    };
    if s.is_zero() {
        return DecodeOutcome::from_candidates(vec![Candidate {
            word: r.to_vec(),
            distance: 0,
            locator: Poly::one(code.field()),
            pair: None,
        }]);
    }
    let state = berlekamp_massey(code.field(), s.coeffs(), code.n - code.k);
    if state.l_lambda > code.t_classical() {
        return DecodeOutcome::failure();
    }
    match candidate_from_locator(code, r, &s, &state.lambda, code.t_classical(), None) {
        Some(c) => DecodeOutcome::from_candidates(vec![c]),
        None => DecodeOutcome::failure(),
    }
}

/// One-step-ahead decoding: corrects up to t0 = (n-k+1)/2 errors in the list
/// sense by enumerating the value of the one virtual extra discrepancy.
///
/// Requires n - k odd (so t0 is an integer).
pub fn one_step_ahead_decode(code: &RsCode, r: &[Felt]) -> DecodeOutcome {
    assert!(
        (code.n - code.k) % 2 == 1,
        "one-step-ahead decoding needs n-k odd"
    );
    let t0 = (code.n - code.k).div_ceil(2);
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
    if state.l_lambda > t0 {
        return DecodeOutcome::failure();
    }
    if state.l_lambda < t0 {
        // identical to the normal Berlekamp-Massey decoder
        return match candidate_from_locator(code, r, &s, &state.lambda, t0, None) {
            Some(c) => DecodeOutcome::from_candidates(vec![c]),
            None => DecodeOutcome::failure(),
        };
    }
    // L_Lambda == t0: group indices by the discrepancy that would place a
    // root at alpha^{-i}; each full group of size t0 yields one candidate.
    let mut groups: std::collections::BTreeMap<Felt, Vec<usize>> = Default::default();
    for i in 0..code.n {
        let x = f.alpha_pow(-(i as i64));
        let bv = state.b.eval(f, x);
        if bv.is_zero() {
            // Lambda and B coprime: no finite-discrepancy locator vanishes here
            continue;
        }
        let delta = f.div(state.lambda.eval(f, x), f.mul(x, bv));
        groups.entry(delta).or_default().push(i);
    }
    let mut cands = Vec::new();
    for (delta, idxs) in groups {
        if idxs.len() != t0 {
            continue;
        }
        let locator = state.lambda.add(&state.b.shift(f, 1).scale(f, delta));
        if let Some(c) = candidate_from_locator(code, r, &s, &locator, t0, None) {
            cands.push(c);
        }
    }
    DecodeOutcome::from_candidates(cands)
}
