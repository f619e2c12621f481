//! Rational factorization: extract every candidate power series b(x)/lambda(x)
//! from the interpolation polynomial by root-shift-transform recursion, then
//! recover the (lambda, b) pair from each series with Berlekamp-Massey.

use crate::gf::{Felt, FieldCtx};
use crate::interp::WBivarPoly;
use crate::poly::Poly;
use crate::rs::{berlekamp_massey, BmState};

/// Remove the largest common power of x, returning the stripped exponent
/// (harmless: interpolation points all have nonzero x).
fn strip_x(classes: &mut [Poly]) -> usize {
    let a = classes
        .iter()
        .filter_map(|c| c.coeffs().iter().position(|v| !v.is_zero()))
        .min()
        .unwrap_or(0);
    if a > 0 {
        for c in classes.iter_mut() {
            if !c.is_zero() {
                *c = Poly::from_coeffs(c.coeffs()[a..].to_vec());
            }
        }
    }
    a
}

/// One edge of the factorization recursion tree: at `depth`, branch on the
/// root `s`, dividing out x^stripped after the y <- xy transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorEdge {
    pub depth: usize,
    pub root: Felt,
    pub stripped: usize,
}

/// Depth-L_s recursion: at each node find all roots s of Q(0, y) by
/// exhaustive field scan, shift y by s, substitute y <- xy, strip x factors,
/// and recurse; each depth-L_s leaf emits its root path as one series.
///
/// A node whose Q(0, y) is a nonzero constant has no roots and dies; output
/// series are deduplicated.
pub fn series_extract(ctx: &FieldCtx, q: &WBivarPoly, l_s: usize) -> Vec<Vec<Felt>> {
    series_extract_trace(ctx, q, l_s).0
}

/// As [`series_extract`], also returning the recursion-tree edges for debug
/// dumps.
pub fn series_extract_trace(
    ctx: &FieldCtx,
    q: &WBivarPoly,
    l_s: usize,
) -> (Vec<Vec<Felt>>, Vec<FactorEdge>) {
    assert!(!q.is_zero() && l_s >= 1);
    let mut classes = q.classes().to_vec();
    strip_x(&mut classes);
    let mut out: Vec<Vec<Felt>> = Vec::new();
    let mut edges = Vec::new();
    let mut path = Vec::with_capacity(l_s);
    recurse(ctx, &classes, l_s, &mut path, &mut out, &mut edges);
    out.sort();
    out.dedup();
    // leaf count is bounded by the total y-degree
    debug_assert!(out.len() <= q.y_cap().max(1));
    (out, edges)
}

fn recurse(
    ctx: &FieldCtx,
    classes: &[Poly],
    remaining: usize,
    path: &mut Vec<Felt>,
    out: &mut Vec<Vec<Felt>>,
    edges: &mut Vec<FactorEdge>,
) {
    if remaining == 0 {
        out.push(path.clone());
        return;
    }
    // Q(0, y): the constant-in-x coefficient of each y-class
    let ry = Poly::from_coeffs(classes.iter().map(|c| c.coeff(0, ctx)).collect());
    debug_assert!(!ry.is_zero(), "x factors were stripped");
    if ry.degree() == Some(0) {
        return; // constant in y: no roots, dead branch
    }
    for s in ctx.elements() {
        if !ry.eval(ctx, s).is_zero() {
            continue;
        }
        // shift y -> y + s: g_j = sum_{beta >= j, C(beta,j) odd} s^{beta-j} f_beta
        let ncls = classes.len();
        let mut shifted: Vec<Poly> = Vec::with_capacity(ncls);
        #[allow(clippy::needless_range_loop)]
        for j in 0..ncls {
            let mut acc = classes[j].clone();
            for beta in j + 1..ncls {
                if binom_odd(beta, j) && !s.is_zero() {
                    acc = acc.add(&classes[beta].scale(ctx, ctx.pow(s, (beta - j) as i64)));
                }
            }
            shifted.push(acc);
        }
        // y -> x y, then strip the x power
        let mut next: Vec<Poly> = shifted
            .iter()
            .enumerate()
            .map(|(j, c)| c.shift(ctx, j))
            .collect();
        let stripped = strip_x(&mut next);
        edges.push(FactorEdge {
            depth: path.len(),
            root: s,
            stripped,
        });
        path.push(s);
        recurse(ctx, &next, remaining - 1, path, out, edges);
        path.pop();
    }
}

#[inline]
fn binom_odd(n: usize, k: usize) -> bool {
    n & k == k
}

/// Series length for the RS pipeline:
/// L_s = (t - L_xB + 1) + 2(t - L_Lambda) = 3t + 1 - 2 t0 - L_Lambda.
pub fn series_len_rs(t: i64, state: &BmState) -> i64 {
    (t - state.l_xb() as i64 + 1) + 2 * (t - state.l_lambda as i64)
}

/// Series length for the BCH pipeline, with the degree bounds halved:
/// L_s = floor((t - L_{x^2 B})/2) + 1 + (t - L_Lambda).
pub fn series_len_bch(t: i64, state: &BmState) -> i64 {
    let l_x2b = state.l_b as i64 + 2;
    (t - l_x2b).div_euclid(2) + 1 + (t - state.l_lambda as i64)
}

fn recover(
    ctx: &FieldCtx,
    s: &[Felt],
    start: usize,
    iters: usize,
    max_num_deg: i64,
    max_den_len: i64,
) -> Option<(Poly, Poly)> {
    debug_assert_eq!(start + iters, s.len());
    let window = &s[start..];
    let bm = berlekamp_massey(ctx, window, iters);
    if bm.l_lambda as i64 > max_den_len {
        return None;
    }
    let lambda = bm.lambda;
    debug_assert_eq!(lambda.coeff(0, ctx), ctx.one());
    // the full series must satisfy s * lambda = b with deg(b) < start
    let prod = Poly::from_coeffs(s.to_vec()).mul(ctx, &lambda);
    for p in start..s.len() {
        if !prod.coeff(p, ctx).is_zero() {
            return None;
        }
    }
    let b = prod.mod_xk(start);
    debug_assert!(b.deg_i() <= max_num_deg || b.is_zero());
    let _ = max_num_deg;
    Some((lambda, b))
}

/// Recover (lambda, b) from a series via Berlekamp-Massey on the subsequence
/// starting at s_{t-L_xB+1}, iterating 2(t - L_Lambda) times; rejects series
/// violating the degree bounds deg(lambda) <= t - L_Lambda,
/// deg(b) <= t - L_xB.
pub fn series_to_rational_rs(
    ctx: &FieldCtx,
    s: &[Felt],
    t: i64,
    state: &BmState,
) -> Option<(Poly, Poly)> {
    let start = (t - state.l_xb() as i64 + 1).max(0) as usize;
    let iters = (2 * (t - state.l_lambda as i64)).max(0) as usize;
    recover(
        ctx,
        s,
        start,
        iters,
        t - state.l_xb() as i64,
        t - state.l_lambda as i64,
    )
}

/// BCH analogue with halved degree bounds: subsequence starts at
/// floor((t - L_{x^2B})/2) + 1 and runs t - L_Lambda iterations;
/// 2 deg(lambda) <= t - L_Lambda and 2 deg(b) <= t - L_{x^2B}.
pub fn series_to_rational_bch(
    ctx: &FieldCtx,
    s: &[Felt],
    t: i64,
    state: &BmState,
) -> Option<(Poly, Poly)> {
    let l_x2b = state.l_b as i64 + 2;
    let start = ((t - l_x2b).div_euclid(2) + 1).max(0) as usize;
    let iters = (t - state.l_lambda as i64).max(0) as usize;
    recover(
        ctx,
        s,
        start,
        iters,
        (t - l_x2b).div_euclid(2),
        (t - state.l_lambda as i64) / 2,
    )
}

/// Candidate locator Lambda'(x) = lambda(x) Lambda(x) + b(x) x B(x).
pub fn assemble_rs(ctx: &FieldCtx, lambda: &Poly, b: &Poly, state: &BmState) -> Poly {
    lambda
        .mul(ctx, &state.lambda)
        .add(&b.mul(ctx, &state.b.shift(ctx, 1)))
}

/// Candidate locator Lambda'(x) = lambda(x^2) Lambda(x) + b(x^2) x^2 B(x).
pub fn assemble_bch(ctx: &FieldCtx, lambda: &Poly, b: &Poly, state: &BmState) -> Poly {
    lambda
        .even_substitute(ctx)
        .mul(ctx, &state.lambda)
        .add(&b.even_substitute(ctx).mul(ctx, &state.b.shift(ctx, 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::interp::WBivarPoly;
    use rand::prelude::*;
    use rand_chacha::ChaCha12Rng;

    fn f16() -> FieldCtx {
        FieldCtx::new(4).unwrap()
    }

    /// Long-division oracle for the power series of b/lambda mod x^len.
    fn series_oracle(ctx: &FieldCtx, b: &Poly, lambda: &Poly, len: usize) -> Vec<Felt> {
        assert_eq!(lambda.coeff(0, ctx), ctx.one());
        let mut s = Vec::with_capacity(len);
        let mut rem: Vec<Felt> = (0..len).map(|i| b.coeff(i, ctx)).collect();
        for i in 0..len {
            let c = rem[i];
            s.push(c);
            if !c.is_zero() {
                for j in 0..len - i {
                    rem[i + j] += ctx.mul(c, lambda.coeff(j, ctx));
                }
            }
        }
        s
    }

    #[test]
    fn recursion_trace_records_edges() {
        let f = f16();
        let lambda = Poly::from_alpha_exps(&f, &[Some(0), Some(1)]);
        let b = Poly::from_alpha_exps(&f, &[Some(8)]);
        let q = WBivarPoly::new(vec![b, lambda], 1, 0);
        let (series, edges) = series_extract_trace(&f, &q, 4);
        assert_eq!(series.len(), 1);
        assert_eq!(edges.len(), 4);
        for (d, e) in edges.iter().enumerate() {
            assert_eq!(e.depth, d);
            assert_eq!(e.root, series[0][d]);
        }
    }

    #[test]
    fn series_of_linear_factor_is_rational_expansion() {
        let f = f16();
        let mut rng = ChaCha12Rng::seed_from_u64(20);
        for _ in 0..100 {
            // random coprime-ish (lambda, b) with lambda0 = 1
            let lambda = Poly::from_coeffs(vec![
                f.one(),
                f.elt(rng.gen_range(0..16)),
                f.elt(rng.gen_range(0..16)),
            ]);
            let b = Poly::from_coeffs(vec![
                f.elt(rng.gen_range(1..16)),
                f.elt(rng.gen_range(0..16)),
            ]);
            // Q = y*lambda - b
            let q = WBivarPoly::new(vec![b.clone(), lambda.clone()], 1, 0);
            let l_s = 6;
            let series = series_extract(&f, &q, l_s);
            assert_eq!(series.len(), 1);
            assert_eq!(series[0], series_oracle(&f, &b, &lambda, l_s));
        }
    }

    #[test]
    fn polynomial_case_two_branches() {
        let f = f16();
        // Q = (y - p1)(y - p2), p1 != p2 polynomials
        let p1 = Poly::from_alpha_exps(&f, &[Some(3), Some(1)]);
        let p2 = Poly::from_alpha_exps(&f, &[Some(9), None, Some(2)]);
        let c0 = p1.mul(&f, &p2);
        let c1 = p1.add(&p2);
        let q = WBivarPoly::new(vec![c0, c1, Poly::one(&f)], 1, 0);
        let l_s = 5;
        let mut series = series_extract(&f, &q, l_s);
        series.sort();
        let mut want = vec![
            series_oracle(&f, &p1, &Poly::one(&f), l_s),
            series_oracle(&f, &p2, &Poly::one(&f), l_s),
        ];
        want.sort();
        assert_eq!(series, want);
    }

    #[test]
    fn series_lengths() {
        let f = f16();
        // Example 1 state shape: t=7, L_Lambda=5, L_B=5
        let st = BmState {
            lambda: Poly::one(&f),
            b: Poly::one(&f),
            l_lambda: 5,
            l_b: 5,
        };
        assert_eq!(series_len_rs(7, &st), 6);
        // boundary t = t0 with L_Lambda = t0 (d even, say d=12, t0=6, L_B=5)
        let st2 = BmState {
            lambda: Poly::one(&f),
            b: Poly::one(&f),
            l_lambda: 6,
            l_b: 5,
        };
        assert_eq!(series_len_rs(6, &st2), 1);
        // Example 6 shape: t=13, L_Lambda=10, L_{x^2B}=11
        let st3 = BmState {
            lambda: Poly::one(&f),
            b: Poly::one(&f),
            l_lambda: 10,
            l_b: 9,
        };
        assert_eq!(series_len_bch(13, &st3), 5);
    }

    #[test]
    fn recover_roundtrip_random_pairs() {
        let f = f16();
        let mut rng = ChaCha12Rng::seed_from_u64(21);
        // state shape t=7, L_Lambda=5, L_xB=6: deg lambda <= 2, deg b <= 1
        let st = BmState {
            lambda: Poly::one(&f),
            b: Poly::one(&f),
            l_lambda: 5,
            l_b: 5,
        };
        let t = 7;
        let l_s = series_len_rs(t, &st) as usize;
        let mut tried = 0;
        for _ in 0..1000 {
            let lambda = Poly::from_coeffs(vec![
                f.one(),
                f.elt(rng.gen_range(0..16)),
                f.elt(rng.gen_range(0..16)),
            ]);
            let b = Poly::from_coeffs(vec![
                f.elt(rng.gen_range(0..16)),
                f.elt(rng.gen_range(0..16)),
            ]);
            if !(lambda.gcd(&f, &b).degree() == Some(0)) {
                continue;
            }
            tried += 1;
            let s = series_oracle(&f, &b, &lambda, l_s);
            let (gl, gb) = series_to_rational_rs(&f, &s, t, &st).expect("valid pair rejected");
            assert_eq!(gl, lambda);
            assert_eq!(gb, b);
        }
        assert!(tried > 500);
    }

    #[test]
    fn constant_series_recovers_constant_pair() {
        let f = f16();
        let st = BmState {
            lambda: Poly::one(&f),
            b: Poly::one(&f),
            l_lambda: 5,
            l_b: 5,
        };
        let c = f.alpha_pow(8);
        let s = vec![c, f.zero(), f.zero(), f.zero(), f.zero(), f.zero()];
        let (gl, gb) = series_to_rational_rs(&f, &s, 7, &st).unwrap();
        assert_eq!(gl, Poly::one(&f));
        assert_eq!(gb, Poly::from_coeffs(vec![c]));
    }

    #[test]
    fn assemble_identity_pair_returns_lambda() {
        let f = f16();
        let st = BmState {
            lambda: Poly::from_alpha_exps(
                &f,
                &[Some(0), Some(7), Some(13), Some(1), Some(13), Some(4)],
            ),
            b: Poly::from_alpha_exps(&f, &[None, Some(6), Some(5), Some(10), Some(3), Some(11)]),
            l_lambda: 5,
            l_b: 5,
        };
        let got = assemble_rs(&f, &Poly::one(&f), &Poly::zero(), &st);
        assert_eq!(got, st.lambda);
        let got = assemble_bch(&f, &Poly::one(&f), &Poly::zero(), &st);
        assert_eq!(got, st.lambda);
    }
}
