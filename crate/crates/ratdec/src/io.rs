//! Text and JSON surfaces: power-of-alpha element tokens, word files, code
//! specifications, and serializable decode outcomes / plans.
//!
//! Element tokens follow the display style of the worked examples: `0` is the
//! zero element, `1` is alpha^0, `a` is alpha, `a^k` is alpha^k; a `0x`
//! prefix gives the raw bit representation. Reed-Solomon words are
//! whitespace-separated tokens; BCH words are contiguous 0/1 strings.

use crate::bch::{felt_word_to_bits, BchCode};
use crate::gf::{Felt, FieldCtx};
use crate::planner::{CodeFamily, Plan, PlanMode};
use crate::poly::Poly;
use crate::rs::{DecodeOutcome, DecodeStatus, RsCode};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed element token {0:?}")]
    BadToken(String),
    #[error("element {0:#x} out of range for the field")]
    OutOfRange(u32),
    #[error("malformed bit string (want 0/1 characters)")]
    BadBits,
    #[error("bad code spec: {0}")]
    BadSpec(String),
}

/// Render an element in power notation.
pub fn format_elt(ctx: &FieldCtx, x: Felt) -> String {
    if x.is_zero() {
        "0".into()
    } else {
        match ctx.log(x) {
            0 => "1".into(),
            1 => "a".into(),
            k => format!("a^{k}"),
        }
    }
}

/// Render an element as a raw hex token.
pub fn format_elt_hex(x: Felt) -> String {
    format!("{:#x}", x.value())
}

/// Parse an element token (power notation or hex).
pub fn parse_elt(ctx: &FieldCtx, tok: &str) -> Result<Felt, ParseError> {
    let bad = || ParseError::BadToken(tok.to_string());
    if let Some(hex) = tok.strip_prefix("0x").or_else(|| tok.strip_prefix("0X")) {
        let v = u32::from_str_radix(hex, 16).map_err(|_| bad())?;
        if v >= ctx.q() {
            return Err(ParseError::OutOfRange(v));
        }
        return Ok(ctx.elt(v));
    }
    match tok {
        "0" => Ok(ctx.zero()),
        "1" => Ok(ctx.one()),
        "a" => Ok(ctx.alpha()),
        _ => {
            let k = tok.strip_prefix("a^").ok_or_else(bad)?;
            let k: i64 = k.parse().map_err(|_| bad())?;
            Ok(ctx.alpha_pow(k))
        }
    }
}

/// One word as whitespace-separated element tokens.
pub fn format_word(ctx: &FieldCtx, w: &[Felt]) -> String {
    w.iter()
        .map(|&x| format_elt(ctx, x))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_word(ctx: &FieldCtx, line: &str) -> Result<Vec<Felt>, ParseError> {
    line.split_whitespace().map(|t| parse_elt(ctx, t)).collect()
}

/// One BCH word as a contiguous 0/1 string.
pub fn format_bits(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b != 0 { '1' } else { '0' })
        .collect()
}

pub fn parse_bits(line: &str) -> Result<Vec<u8>, ParseError> {
    line.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(ParseError::BadBits),
        })
        .collect()
}

/// Polynomial in the display style of the worked examples:
/// `1 + a^7 x + a^13 x^2`; the zero polynomial prints as `0`.
pub fn format_poly(ctx: &FieldCtx, p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, &c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = format_elt(ctx, c);
        let term = match i {
            0 => coeff,
            _ => {
                let xs = if i == 1 { "x".into() } else { format!("x^{i}") };
                if c == ctx.one() {
                    xs
                } else {
                    format!("{coeff} {xs}")
                }
            }
        };
        terms.push(term);
    }
    terms.join(" + ")
}

/// Field description inside code-spec JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldSpec {
    pub w: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prim_poly: Option<String>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx, ParseError> {
        match &self.prim_poly {
            None => FieldCtx::new(self.w).map_err(|e| ParseError::BadSpec(e.to_string())),
            Some(s) => {
                let hex = s
                    .strip_prefix("0x")
                    .or_else(|| s.strip_prefix("0X"))
                    .unwrap_or(s);
                let prim = u32::from_str_radix(hex, 16)
                    .map_err(|_| ParseError::BadSpec(format!("bad prim_poly {s:?}")))?;
                FieldCtx::with_prim_poly(self.w, prim)
                    .map_err(|e| ParseError::BadSpec(e.to_string()))
            }
        }
    }
}

/// JSON code specification: family, length, dimension (RS) or designed
/// distance (BCH), generator root offset m0 (RS), and the field.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeSpec {
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m0: Option<i64>,
    pub field: FieldSpec,
}

/// A constructed code of either family.
pub enum AnyCode {
    Rs(RsCode),
    Bch(BchCode),
}

impl CodeSpec {
    pub fn build(&self) -> Result<AnyCode, ParseError> {
        let field = self.field.build()?;
        match self.family.as_str() {
            "rs" => {
                let k = self
                    .k
                    .ok_or_else(|| ParseError::BadSpec("rs code needs k".into()))?;
                let m0 = self.m0.unwrap_or(1);
                RsCode::new(field, self.n, k, m0)
                    .map(AnyCode::Rs)
                    .map_err(|e| ParseError::BadSpec(e.to_string()))
            }
            "bch" => {
                let d = self
                    .d
                    .ok_or_else(|| ParseError::BadSpec("bch code needs d".into()))?;
                BchCode::new(field, self.n, d)
                    .map(AnyCode::Bch)
                    .map_err(|e| ParseError::BadSpec(e.to_string()))
            }
            other => Err(ParseError::BadSpec(format!("unknown family {other:?}"))),
        }
    }
}

/// Serializable decode outcome with words, locators, and factorization pairs
/// in power-of-alpha text form.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OutcomeDto {
    pub status: String,
    pub t: i64,
    pub candidates: Vec<CandidateDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CandidateDto {
    pub word: String,
    pub distance: usize,
    pub locator: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
}

fn status_str(s: DecodeStatus) -> &'static str {
    match s {
        DecodeStatus::Unique => "unique",
        DecodeStatus::List => "list",
        DecodeStatus::Failure => "failure",
    }
}

pub fn outcome_to_dto(
    ctx: &FieldCtx,
    family: CodeFamily,
    t: i64,
    outcome: &DecodeOutcome,
) -> OutcomeDto {
    OutcomeDto {
        status: status_str(outcome.status).into(),
        t,
        candidates: outcome
            .candidates
            .iter()
            .map(|c| CandidateDto {
                word: match family {
                    CodeFamily::Rs => format_word(ctx, &c.word),
                    CodeFamily::Bch => format_bits(&felt_word_to_bits(&c.word)),
                },
                distance: c.distance,
                locator: format_poly(ctx, &c.locator),
                lambda: c.pair.as_ref().map(|(l, _)| format_poly(ctx, l)),
                b: c.pair.as_ref().map(|(_, b)| format_poly(ctx, b)),
            })
            .collect(),
    }
}

/// Serializable plan record.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PlanDto {
    pub family: String,
    pub n: i64,
    pub d: i64,
    pub t: i64,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_lower: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_y: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_free: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_cstr: Option<i64>,
}

pub fn plan_to_dto(plan: &Plan) -> PlanDto {
    let family = match plan.family {
        CodeFamily::Rs => "rs",
        CodeFamily::Bch => "bch",
    };
    match plan.mode {
        PlanMode::Classical => PlanDto {
            family: family.into(),
            n: plan.n,
            d: plan.d,
            t: plan.t,
            mode: "classical".into(),
            m: None,
            m_lower: None,
            p_y: None,
            n_free: None,
            n_cstr: None,
        },
        PlanMode::OneStepAhead => PlanDto {
            family: family.into(),
            n: plan.n,
            d: plan.d,
            t: plan.t,
            mode: "one-step-ahead".into(),
            m: None,
            m_lower: None,
            p_y: None,
            n_free: None,
            n_cstr: None,
        },
        PlanMode::Rational {
            m,
            m_lower,
            p_y,
            n_free,
            n_cstr,
        } => PlanDto {
            family: family.into(),
            n: plan.n,
            d: plan.d,
            t: plan.t,
            mode: "rational".into(),
            m: Some(m),
            m_lower: Some(m_lower),
            p_y: Some(p_y),
            n_free: Some(n_free),
            n_cstr: Some(n_cstr),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> FieldCtx {
        FieldCtx::new(4).unwrap()
    }

    #[test]
    fn element_tokens_roundtrip() {
        let f = f16();
        for x in f.elements() {
            let s = format_elt(&f, x);
            assert_eq!(parse_elt(&f, &s).unwrap(), x);
        }
        assert_eq!(parse_elt(&f, "a^7").unwrap(), f.alpha_pow(7));
        assert_eq!(parse_elt(&f, "0x9").unwrap(), f.elt(9));
        for x in f.elements() {
            assert_eq!(parse_elt(&f, &format_elt_hex(x)).unwrap(), x);
        }
        assert!(parse_elt(&f, "b^2").is_err());
        assert!(parse_elt(&f, "0x1f").is_err());
    }

    #[test]
    fn word_and_bits_roundtrip() {
        let f = f16();
        let w: Vec<Felt> = (0..15).map(|i| f.alpha_pow(i)).collect();
        assert_eq!(parse_word(&f, &format_word(&f, &w)).unwrap(), w);
        let bits = vec![1u8, 0, 1, 1, 0];
        assert_eq!(parse_bits(&format_bits(&bits)).unwrap(), bits);
        assert!(parse_bits("01x1").is_err());
    }

    #[test]
    fn poly_display_matches_example_style() {
        let f = f16();
        let lam = Poly::from_alpha_exps(
            &f,
            &[Some(0), Some(7), Some(13), Some(1), Some(13), Some(4)],
        );
        assert_eq!(
            format_poly(&f, &lam),
            "1 + a^7 x + a^13 x^2 + a x^3 + a^13 x^4 + a^4 x^5"
        );
        assert_eq!(format_poly(&f, &Poly::zero()), "0");
    }

    #[test]
    fn code_spec_parses() {
        let spec: CodeSpec = serde_json::from_str(
            r#"{"family":"rs","n":15,"k":5,"m0":1,"field":{"w":4,"prim_poly":"0x19"}}"#,
        )
        .unwrap();
        let AnyCode::Rs(code) = spec.build().unwrap() else {
            panic!()
        };
        assert_eq!((code.n, code.k, code.m0), (15, 5, 1));
        let spec: CodeSpec =
            serde_json::from_str(r#"{"family":"bch","n":63,"d":21,"field":{"w":6}}"#).unwrap();
        let AnyCode::Bch(code) = spec.build().unwrap() else {
            panic!()
        };
        assert_eq!((code.n, code.k, code.d), (63, 18, 21));
    }
}
