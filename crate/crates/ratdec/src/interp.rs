//! Weighted-degree bivariate polynomials and Koetter-style iterative rational
//! interpolation with multiplicities.
//!
//! Supports negative y-weights (higher y-classes then admit higher x-degrees),
//! x-weight 2 for the BCH pipeline, and points at infinity, which constrain
//! the companion polynomial Q(x, 1/y) y^{P_y} instead of Q itself.

use crate::bch::BchCode;
use crate::gf::{Felt, FieldCtx};
use crate::poly::Poly;
use crate::rs::{BmState, RsCode};

/// One interpolation point; `y = None` marks a point at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterpPoint {
    pub x: Felt,
    pub y: Option<Felt>,
}

/// A bivariate polynomial sum_i f_i(x) y^i with (wx, wy)-weighted-degree
/// metadata; the y-degree is capped by the number of classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WBivarPoly {
    classes: Vec<Poly>,
    wx: i64,
    wy: i64,
}

impl WBivarPoly {
    pub fn new(classes: Vec<Poly>, wx: i64, wy: i64) -> WBivarPoly {
        assert!(!classes.is_empty() && wx > 0);
        WBivarPoly { classes, wx, wy }
    }

    pub fn classes(&self) -> &[Poly] {
        &self.classes
    }

    pub fn weights(&self) -> (i64, i64) {
        (self.wx, self.wy)
    }

    /// Maximum y-degree the polynomial may carry.
    pub fn y_cap(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.classes.iter().all(|c| c.is_zero())
    }

    /// max over monomials x^a y^i of a*wx + i*wy; `None` for the zero
    /// polynomial.
    pub fn weighted_degree(&self) -> Option<i64> {
        self.classes
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.degree().map(|d| d as i64 * self.wx + i as i64 * self.wy))
            .max()
    }

    /// Companion polynomial Q(x, 1/y) y^{y_cap}: the y-classes reversed.
    pub fn companion(&self) -> WBivarPoly {
        assert!(!self.is_zero());
        let mut classes = self.classes.clone();
        classes.reverse();
        WBivarPoly {
            classes,
            wx: self.wx,
            wy: self.wy,
        }
    }

    pub fn eval(&self, ctx: &FieldCtx, x0: Felt, y0: Felt) -> Felt {
        let mut acc = ctx.zero();
        for c in self.classes.iter().rev() {
            acc = ctx.mul(acc, y0) + c.eval(ctx, x0);
        }
        acc
    }

    /// Debug dump, one line per nonzero y-class: `y^i: c0 + c1 x + ...`.
    pub fn dump(&self, ctx: &FieldCtx) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for (i, c) in self.classes.iter().enumerate() {
            if !c.is_zero() {
                let _ = writeln!(out, "y^{i}: {}", crate::io::format_poly(ctx, c));
            }
        }
        out
    }
}

/// One Hasse-derivative functional D_{a,b} Q(x0, y0) = 0 (applied to the
/// companion polynomial for points at infinity).
#[derive(Debug, Clone, Copy)]
pub struct HasseConstraint {
    pub point: InterpPoint,
    pub a: usize,
    pub b: usize,
}

/// C(n, k) mod 2 by Lucas' theorem.
#[inline]
fn binom_odd(n: usize, k: usize) -> bool {
    n & k == k
}

fn hasse_x(ctx: &FieldCtx, row: &[Felt], a: usize, xpows: &[Felt]) -> Felt {
    let mut acc = ctx.zero();
    for (al, &c) in row.iter().enumerate().skip(a) {
        if !c.is_zero() && binom_odd(al, a) {
            acc += ctx.mul(c, xpows[al - a]);
        }
    }
    acc
}

fn apply_rows(ctx: &FieldCtx, rows: &[Vec<Felt>], cst: &HasseConstraint, xpows: &[Felt]) -> Felt {
    match cst.point.y {
        None => {
            // companion: only the reversed class y_cap - b participates at y = 0
            let beta = rows.len() - 1 - cst.b;
            hasse_x(ctx, &rows[beta], cst.a, xpows)
        }
        Some(y0) => {
            let mut acc = ctx.zero();
            for (beta, row) in rows.iter().enumerate().skip(cst.b) {
                if !binom_odd(beta, cst.b) {
                    continue;
                }
                let inner = hasse_x(ctx, row, cst.a, xpows);
                if inner.is_zero() {
                    continue;
                }
                let e = (beta - cst.b) as i64;
                if e == 0 {
                    acc += inner;
                } else if !y0.is_zero() {
                    acc += ctx.mul(inner, ctx.pow(y0, e));
                }
            }
            acc
        }
    }
}

impl HasseConstraint {
    /// Evaluate the functional on Q.
    pub fn apply(&self, ctx: &FieldCtx, q: &WBivarPoly) -> Felt {
        let rows: Vec<Vec<Felt>> = q.classes.iter().map(|c| c.coeffs().to_vec()).collect();
        let max_deg = rows.iter().map(|r| r.len()).max().unwrap_or(1);
        let xpows = power_table(ctx, self.point.x, max_deg + 1);
        apply_rows(ctx, &rows, self, &xpows)
    }
}

/// The m(m+1)/2 functionals that make Q pass through `point` with
/// multiplicity m, in (b, a)-lexicographic order (the order the iterative
/// interpolation relies on).
pub fn hasse_constraints(point: InterpPoint, m: usize, _p_y_cap: usize) -> Vec<HasseConstraint> {
    let mut out = Vec::with_capacity(m * (m + 1) / 2);
    for b in 0..m {
        for a in 0..m - b {
            out.push(HasseConstraint { point, a, b });
        }
    }
    out
}

fn power_table(ctx: &FieldCtx, x0: Felt, len: usize) -> Vec<Felt> {
    let mut t = Vec::with_capacity(len);
    t.push(ctx.one());
    for _ in 1..len {
        t.push(ctx.mul(*t.last().unwrap(), x0));
    }
    t
}

/// Interpolation points for the RS pipeline: x_i = alpha^{-i},
/// y_i = Lambda(alpha^{-i}) / (alpha^{-i} B(alpha^{-i})), infinity where B
/// vanishes (coprimality rules out 0/0).
pub fn make_points_rs(state: &BmState, code: &RsCode) -> Vec<InterpPoint> {
    let f = code.field();
    (0..code.n)
        .map(|i| {
            let x = f.alpha_pow(-(i as i64));
            let bv = state.b.eval(f, x);
            if bv.is_zero() {
                // coprimality of Lambda and B rules out 0/0
                debug_assert!(!state.lambda.eval(f, x).is_zero());
                InterpPoint { x, y: None }
            } else {
                let y = f.div(state.lambda.eval(f, x), f.mul(x, bv));
                InterpPoint { x, y: Some(y) }
            }
        })
        .collect()
}

/// Interpolation points for the BCH pipeline: x_i = alpha^{-2i},
/// y_i = Lambda(alpha^{-i}) / (alpha^{-2i} B(alpha^{-i})).
pub fn make_points_bch(state: &BmState, code: &BchCode) -> Vec<InterpPoint> {
    let f = code.field();
    (0..code.n)
        .map(|i| {
            let xi = f.alpha_pow(-(i as i64));
            let x = f.alpha_pow(-2 * (i as i64));
            let bv = state.b.eval(f, xi);
            if bv.is_zero() {
                InterpPoint { x, y: None }
            } else {
                let y = f.div(state.lambda.eval(f, xi), f.mul(x, bv));
                InterpPoint { x, y: Some(y) }
            }
        })
        .collect()
}

/// Iterative rational interpolation: the minimal (wx, wy)-weighted-degree
/// polynomial with y-degree <= p_y_cap satisfying every multiplicity-m
/// constraint at every point.
///
/// One candidate per leading-y class is maintained; each processed functional
/// either is already satisfied by all candidates or costs exactly one
/// leading-monomial promotion, so the returned minimum stays within the
/// planned degree bound whenever N_free > N_cstr. Ties among minimal
/// candidates break toward the lowest leading y-degree.
pub fn koetter_interpolate(
    ctx: &FieldCtx,
    points: &[InterpPoint],
    m: usize,
    p_y_cap: usize,
    wx: i64,
    wy: i64,
) -> WBivarPoly {
    assert!(m >= 1 && wx > 0);
    debug_assert!(
        {
            let mut xs: Vec<Felt> = points.iter().map(|p| p.x).collect();
            xs.sort();
            xs.dedup();
            xs.len() == points.len()
        },
        "interpolation points must have distinct x values"
    );

    let ncls = p_y_cap + 1;
    let mut cands: Vec<Vec<Vec<Felt>>> = (0..ncls)
        .map(|j| {
            let mut rows = vec![Vec::new(); ncls];
            rows[j] = vec![ctx.one()];
            rows
        })
        .collect();
    // leading monomial (weighted degree, y-class) per candidate; the y-class
    // of candidate j's lead stays j throughout.
    let mut leads: Vec<(i64, usize)> = (0..ncls).map(|j| (j as i64 * wy, j)).collect();

    let mut deltas = vec![ctx.zero(); ncls];
    for point in points {
        let mut xpows = power_table(ctx, point.x, 64);
        for cst in hasse_constraints(*point, m, p_y_cap) {
            let need = cands
                .iter()
                .flat_map(|rows| rows.iter().map(|r| r.len()))
                .max()
                .unwrap_or(0)
                + 1;
            while xpows.len() < need {
                xpows.push(ctx.mul(*xpows.last().unwrap(), point.x));
            }
            let mut jstar: Option<usize> = None;
            for (j, rows) in cands.iter().enumerate() {
                deltas[j] = apply_rows(ctx, rows, &cst, &xpows);
                if !deltas[j].is_zero() && jstar.is_none_or(|s| leads[j] < leads[s]) {
                    jstar = Some(j);
                }
            }
            let Some(jstar) = jstar else { continue };
            let dstar_inv = ctx.inv(deltas[jstar]);
            let pivot = std::mem::take(&mut cands[jstar]);
            for (j, rows) in cands.iter_mut().enumerate() {
                if j == jstar || deltas[j].is_zero() {
                    continue;
                }
                let c = ctx.mul(deltas[j], dstar_inv);
                for (row, prow) in rows.iter_mut().zip(&pivot) {
                    if row.len() < prow.len() {
                        row.resize(prow.len(), ctx.zero());
                    }
                    for (dst, &src) in row.iter_mut().zip(prow) {
                        *dst += ctx.mul(c, src);
                    }
                }
            }
            // pivot <- (x - x0) * pivot
            let mut pivot = pivot;
            for row in pivot.iter_mut() {
                if row.is_empty() {
                    continue;
                }
                row.push(ctx.zero());
                for a in (1..row.len()).rev() {
                    row[a] = row[a - 1] + ctx.mul(point.x, row[a]);
                }
                row[0] = ctx.mul(point.x, row[0]);
            }
            cands[jstar] = pivot;
            leads[jstar].0 += wx;
        }
    }

    let best = (0..ncls).min_by_key(|&j| leads[j]).unwrap();
    let q = WBivarPoly {
        classes: cands[best]
            .iter()
            .map(|r| Poly::from_coeffs(r.clone()))
            .collect(),
        wx,
        wy,
    };
    assert!(!q.is_zero(), "interpolation produced the zero polynomial");
    debug_assert_eq!(q.weighted_degree(), Some(leads[best].0));
    debug_assert!(points.iter().all(|p| {
        hasse_constraints(*p, m, p_y_cap)
            .iter()
            .all(|c| c.apply(ctx, &q).is_zero())
    }));
    q
}
