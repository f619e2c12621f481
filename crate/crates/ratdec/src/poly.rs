//! Dense univariate polynomials over a [`FieldCtx`].
//!
//! The zero polynomial is the empty coefficient vector and has degree "minus
//! infinity" (`degree() == None`); nonzero polynomials keep a nonzero leading
//! coefficient. Index i holds the coefficient of x^i.

use crate::gf::{Felt, FieldCtx};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    c: Vec<Felt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly { c: vec![ctx.one()] }
    }

    /// x^k
    pub fn monomial(ctx: &FieldCtx, coeff: Felt, k: usize) -> Poly {
        if coeff.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![ctx.zero(); k + 1];
        c[k] = coeff;
        Poly { c }
    }

    pub fn from_coeffs(coeffs: Vec<Felt>) -> Poly {
        let mut p = Poly { c: coeffs };
        p.trim();
        p
    }

    /// Coefficients as exponents of alpha: `None` is the zero coefficient,
    /// `Some(k)` is alpha^k. Handy for transcribing worked examples.
    pub fn from_alpha_exps(ctx: &FieldCtx, exps: &[Option<i64>]) -> Poly {
        Poly::from_coeffs(
            exps.iter()
                .map(|e| match e {
                    None => ctx.zero(),
                    Some(k) => ctx.alpha_pow(*k),
                })
                .collect(),
        )
    }

    fn trim(&mut self) {
        while matches!(self.c.last(), Some(x) if x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree as an integer with deg(0) = -1; callers that need the real
    /// minus-infinity sentinel use [`Poly::degree`].
    pub fn deg_i(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.c
    }

    pub fn coeff(&self, i: usize, ctx: &FieldCtx) -> Felt {
        self.c.get(i).copied().unwrap_or_else(|| ctx.zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, ctx: &FieldCtx, x0: Felt) -> Felt {
        let mut acc = ctx.zero();
        for &c in self.c.iter().rev() {
            acc = ctx.mul(acc, x0) + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.c.len() >= other.c.len() {
            (&self.c, &other.c)
        } else {
            (&other.c, &self.c)
        };
        let mut out = long.clone();
        for (i, &s) in short.iter().enumerate() {
            out[i] += s;
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, ctx: &FieldCtx, s: Felt) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|&c| ctx.mul(c, s)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ctx.zero(); self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] += ctx.mul(a, b);
            }
        }
        Poly::from_coeffs(out)
    }

    /// Multiply by x^k.
    pub fn shift(&self, ctx: &FieldCtx, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![ctx.zero(); k];
        c.extend_from_slice(&self.c);
        Poly { c }
    }

    /// Truncate to coefficients of x^0 .. x^{k-1}.
    pub fn mod_xk(&self, k: usize) -> Poly {
        Poly::from_coeffs(self.c.iter().take(k).copied().collect())
    }

    /// p(x^2): coefficient i moves to position 2i.
    pub fn even_substitute(&self, ctx: &FieldCtx) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ctx.zero(); 2 * self.c.len() - 1];
        for (i, &c) in self.c.iter().enumerate() {
            out[2 * i] = c;
        }
        Poly { c: out }
    }

    /// Formal derivative; in characteristic 2 the even-power terms vanish.
    pub fn derivative(&self, ctx: &FieldCtx) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut out = vec![ctx.zero(); self.c.len() - 1];
        for (i, &c) in self.c.iter().enumerate().skip(1) {
            if i % 2 == 1 {
                out[i - 1] = c;
            }
        }
        Poly::from_coeffs(out)
    }

    /// All x0 in `domain` with p(x0) = 0, each listed once (sequential
    /// Chien-style evaluation). The zero polynomial is an error.
    pub fn distinct_roots_in(&self, ctx: &FieldCtx, domain: &[Felt]) -> Vec<Felt> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut out = Vec::new();
        for &x0 in domain {
            if self.eval(ctx, x0).is_zero() && !out.contains(&x0) {
                out.push(x0);
            }
        }
        out
    }

    /// Quotient and remainder of self / divisor.
    pub fn div_rem(&self, ctx: &FieldCtx, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.c.len() - 1;
        if self.c.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = ctx.inv(*divisor.c.last().unwrap());
        let mut rem = self.c.clone();
        let mut quot = vec![ctx.zero(); self.c.len() - dd];
        for i in (dd..self.c.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let q = ctx.mul(c, lead_inv);
            quot[i - dd] = q;
            for (j, &dc) in divisor.c.iter().enumerate() {
                rem[i - dd + j] += ctx.mul(q, dc);
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd via Euclid's algorithm.
    pub fn gcd(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(ctx, &b);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.c.last() {
            a = a.scale(ctx, ctx.inv(lead));
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use proptest::prelude::*;

    fn f16() -> FieldCtx {
        FieldCtx::new(4).unwrap()
    }

    #[test]
    fn eval_characteristic_2() {
        let f = f16();
        let p = Poly::from_alpha_exps(&f, &[Some(0), Some(0)]); // 1 + x
        assert_eq!(p.eval(&f, f.one()), f.zero());
    }

    #[test]
    fn eval_matches_term_by_term_oracle() {
        let f = f16();
        // naive power-sum oracle over every (poly of degree <= 3, point) pair
        for bits in 0..(16u32 * 16 * 16) {
            let coeffs = vec![
                f.elt(bits & 15),
                f.elt((bits >> 4) & 15),
                f.elt((bits >> 8) & 15),
            ];
            let p = Poly::from_coeffs(coeffs.clone());
            for x0 in f.elements() {
                let mut want = f.zero();
                for (i, &c) in coeffs.iter().enumerate() {
                    want += f.mul(c, f.pow(x0, i as i64));
                }
                assert_eq!(p.eval(&f, x0), want);
            }
        }
    }

    #[test]
    fn ring_identities() {
        let f = f16();
        let p = Poly::from_alpha_exps(&f, &[Some(3), None, Some(7), Some(1)]);
        assert_eq!(p.mul(&f, &Poly::one(&f)), p);
        assert_eq!(p.add(&p), Poly::zero());
        assert_eq!(p.shift(&f, 1).degree(), Some(4));
    }

    #[test]
    fn even_substitute_doubles_degree() {
        let f = f16();
        let p = Poly::from_alpha_exps(&f, &[Some(0), Some(1)]); // 1 + a x
        let q = p.even_substitute(&f);
        assert_eq!(q, Poly::from_alpha_exps(&f, &[Some(0), None, Some(1)]));
        for d in 1..6 {
            let p = Poly::monomial(&f, f.alpha(), d).add(&Poly::one(&f));
            assert_eq!(p.even_substitute(&f).degree(), Some(2 * d));
        }
    }

    #[test]
    fn even_substitute_example6_candidate() {
        let f = FieldCtx::new(6).unwrap();
        let lam = Poly::from_alpha_exps(&f, &[Some(0), Some(15)]); // 1 + a^15 x
        assert_eq!(
            lam.even_substitute(&f),
            Poly::from_alpha_exps(&f, &[Some(0), None, Some(15)])
        );
    }

    #[test]
    fn true_locator_roots_rs15_5_pair_a() {
        // Lambda* = (1-ax)(1-a^3x)(1-a^6x)(1-a^8x)(1-a^9x)(1-a^11x)(1-a^13x)
        //         = 1 + a^9 x + a^11 x^3 + a^5 x^4 + a^12 x^6 + a^6 x^7
        let f = f16();
        let lam = Poly::from_alpha_exps(
            &f,
            &[
                Some(0),
                Some(9),
                None,
                Some(11),
                Some(5),
                None,
                Some(12),
                Some(6),
            ],
        );
        let mut product = Poly::one(&f);
        for e in [1i64, 3, 6, 8, 9, 11, 13] {
            product = product.mul(&f, &Poly::from_coeffs(vec![f.one(), f.alpha_pow(e)]));
        }
        assert_eq!(lam, product);
        assert_eq!(lam.eval(&f, f.alpha_pow(-1)), f.zero());
        let domain: Vec<_> = (0..15).map(|i| f.alpha_pow(-i)).collect();
        let roots = lam.distinct_roots_in(&f, &domain);
        let want: Vec<_> = [1i64, 3, 6, 8, 9, 11, 13]
            .iter()
            .map(|&e| f.alpha_pow(-e))
            .collect();
        assert_eq!(roots.len(), 7);
        for r in want {
            assert!(roots.contains(&r));
        }
    }

    #[test]
    fn distinct_roots_constant_is_empty() {
        let f = f16();
        let domain: Vec<_> = (0..15).map(|i| f.alpha_pow(-i)).collect();
        assert!(Poly::one(&f).distinct_roots_in(&f, &domain).is_empty());
    }

    #[test]
    #[should_panic(expected = "zero polynomial")]
    fn roots_of_zero_polynomial_panic() {
        let f = f16();
        Poly::zero().distinct_roots_in(&f, &[f.one()]);
    }

    #[test]
    fn div_rem_reassembles() {
        let f = f16();
        let a = Poly::from_alpha_exps(&f, &[Some(2), Some(5), None, Some(1), Some(9)]);
        let b = Poly::from_alpha_exps(&f, &[Some(7), Some(3), Some(0)]);
        let (q, r) = a.div_rem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&r), a);
        assert!(r.deg_i() < b.deg_i());
    }

    proptest! {
        #[test]
        fn ring_laws_random(av in prop::collection::vec(0u32..16, 0..8),
                            bv in prop::collection::vec(0u32..16, 0..8),
                            cv in prop::collection::vec(0u32..16, 0..8)) {
            let f = f16();
            let mk = |v: &Vec<u32>| Poly::from_coeffs(v.iter().map(|&x| f.elt(x)).collect());
            let (a, b, c) = (mk(&av), mk(&bv), mk(&cv));
            prop_assert_eq!(a.mul(&f, &b), b.mul(&f, &a));
            prop_assert_eq!(a.mul(&f, &b.mul(&f, &c)), a.mul(&f, &b).mul(&f, &c));
            prop_assert_eq!(a.mul(&f, &b.add(&c)), a.mul(&f, &b).add(&a.mul(&f, &c)));
            // evaluation is a ring homomorphism
            for k in 0..4 {
                let x0 = f.alpha_pow(k);
                prop_assert_eq!(a.mul(&f, &b).eval(&f, x0), f.mul(a.eval(&f, x0), b.eval(&f, x0)));
                prop_assert_eq!(a.add(&b).eval(&f, x0), a.eval(&f, x0) + b.eval(&f, x0));
            }
        }

        #[test]
        fn roots_subset_of_domain_and_bounded_by_degree(
            av in prop::collection::vec(0u32..16, 1..8)) {
            let f = f16();
            let p = Poly::from_coeffs(av.iter().map(|&x| f.elt(x)).collect());
            prop_assume!(!p.is_zero());
            let domain: Vec<_> = (0..15).map(|i| f.alpha_pow(-i)).collect();
            let roots = p.distinct_roots_in(&f, &domain);
            prop_assert!(roots.len() <= p.degree().unwrap());
            for r in &roots {
                prop_assert!(domain.contains(r));
            }
        }
    }
}
