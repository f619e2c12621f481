//! Arithmetic in binary extension fields GF(2^w), 2 <= w <= 16, built on
//! log/antilog tables over a configurable primitive polynomial.
//!
//! Elements are bit-encoded GF(2) coefficient vectors. Every element carries
//! the tag of the field it belongs to (the primitive polynomial bits), so
//! mixing elements of different field contexts is caught at runtime.

use thiserror::Error;

/// Errors raised while constructing a field context.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported extension degree w={0} (need 2 <= w <= 16)")]
    UnsupportedWidth(u32),
    #[error("polynomial {0:#x} has degree != w")]
    WrongDegree(u64),
    #[error("polynomial {0:#x} is not primitive over GF(2)")]
    NotPrimitive(u64),
}

/// Default primitive polynomials by extension degree (bit-encoded, degree w).
///
/// The w=4 and w=6 entries are pinned by the calibration fixtures of the
/// example suite; the rest are the usual textbook choices.
pub fn default_prim_poly(w: u32) -> Option<u32> {
    Some(match w {
        2 => 0x7,
        3 => 0xB,
        4 => 0x19, // x^4 + x^3 + 1
        5 => 0x25,
        6 => 0x43, // x^6 + x + 1
        7 => 0x83,
        8 => 0x11D,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805, // x^11 + x^2 + 1
        12 => 0x1053,
        13 => 0x201B,
        14 => 0x4443,
        15 => 0x8003,
        16 => 0x1100B,
        _ => return None,
    })
}

/// A field element: a value in `[0, q)` owned by one [`FieldCtx`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Felt {
    v: u16,
    tag: u32,
}

impl Felt {
    /// Raw bit representation (GF(2) coefficient vector).
    pub fn value(self) -> u16 {
        self.v
    }

    pub fn is_zero(self) -> bool {
        self.v == 0
    }

    fn check_same(self, other: Felt) {
        assert_eq!(
            self.tag, other.tag,
            "mismatched field contexts ({:#x} vs {:#x})",
            self.tag, other.tag
        );
    }
}

/// Addition is coefficient-wise XOR; in characteristic 2 it is also subtraction.
impl core::ops::Add for Felt {
    type Output = Felt;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Felt) -> Felt {
        self.check_same(rhs);
        Felt {
            v: self.v ^ rhs.v,
            tag: self.tag,
        }
    }
}

impl core::ops::AddAssign for Felt {
    fn add_assign(&mut self, rhs: Felt) {
        *self = *self + rhs;
    }
}

impl core::ops::Sub for Felt {
    type Output = Felt;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Felt) -> Felt {
        self + rhs
    }
}

/// GF(2^w) with log/antilog tables over a primitive polynomial.
///
/// Immutable after construction; all operations are pure, so a context can be
/// shared freely across threads.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    w: u32,
    q: u32,
    prim: u32,
    exp: Vec<u16>, // exp[i] = alpha^i, i in [0, q-1); period q-1
    log: Vec<u16>, // log[x] for x != 0; log[0] unused
}

impl FieldCtx {
    /// Build GF(2^w) with the default primitive polynomial for `w`.
    pub fn new(w: u32) -> Result<FieldCtx, FieldError> {
        let prim = default_prim_poly(w).ok_or(FieldError::UnsupportedWidth(w))?;
        FieldCtx::with_prim_poly(w, prim)
    }

    /// Build GF(2^w) over an explicit primitive polynomial.
    ///
    /// Primitivity is checked constructively: x must generate all q-1 nonzero
    /// elements before cycling back to 1.
    pub fn with_prim_poly(w: u32, prim: u32) -> Result<FieldCtx, FieldError> {
        if !(2..=16).contains(&w) {
            return Err(FieldError::UnsupportedWidth(w));
        }
        let q: u32 = 1 << w;
        if prim < q || prim >= 2 * q {
            return Err(FieldError::WrongDegree(prim as u64));
        }
        let mut exp = vec![0u16; (q - 1) as usize];
        let mut log = vec![0u16; q as usize];
        let mut x: u32 = 1;
        for i in 0..(q - 1) {
            if x == 1 && i != 0 {
                // x has multiplicative order < q-1
                return Err(FieldError::NotPrimitive(prim as u64));
            }
            exp[i as usize] = x as u16;
            log[x as usize] = i as u16;
            x <<= 1;
            if x & q != 0 {
                x ^= prim;
            }
        }
        if x != 1 {
            return Err(FieldError::NotPrimitive(prim as u64));
        }
        Ok(FieldCtx {
            w,
            q,
            prim,
            exp,
            log,
        })
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    /// Field order q = 2^w.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn prim_poly(&self) -> u32 {
        self.prim
    }

    fn tag(&self) -> u32 {
        self.prim
    }

    /// True when `x` belongs to this context.
    pub fn owns(&self, x: Felt) -> bool {
        x.tag == self.tag()
    }

    fn check(&self, x: Felt) {
        assert!(
            self.owns(x),
            "element of field {:#x} used with field {:#x}",
            x.tag,
            self.tag()
        );
    }

    pub fn zero(&self) -> Felt {
        Felt {
            v: 0,
            tag: self.tag(),
        }
    }

    pub fn one(&self) -> Felt {
        Felt {
            v: 1,
            tag: self.tag(),
        }
    }

    /// The primitive element alpha.
    pub fn alpha(&self) -> Felt {
        Felt {
            v: self.exp[1],
            tag: self.tag(),
        }
    }

    /// Element from its bit representation.
    pub fn elt(&self, v: u32) -> Felt {
        assert!(v < self.q, "value {v} out of range for GF(2^{})", self.w);
        Felt {
            v: v as u16,
            tag: self.tag(),
        }
    }

    /// alpha^e for a signed exponent, reduced mod q-1.
    pub fn alpha_pow(&self, e: i64) -> Felt {
        let m = (self.q - 1) as i64;
        let r = e.rem_euclid(m) as usize;
        Felt {
            v: self.exp[r],
            tag: self.tag(),
        }
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, x: Felt) -> u32 {
        self.check(x);
        assert!(x.v != 0, "log of zero");
        self.log[x.v as usize] as u32
    }

    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        self.check(a);
        a + b
    }

    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        self.check(a);
        self.check(b);
        if a.v == 0 || b.v == 0 {
            return self.zero();
        }
        let m = self.q - 1;
        let mut s = self.log[a.v as usize] as u32 + self.log[b.v as usize] as u32;
        if s >= m {
            s -= m;
        }
        Felt {
            v: self.exp[s as usize],
            tag: self.tag(),
        }
    }

    /// Multiplicative inverse; inversion of zero is an error.
    pub fn inv(&self, a: Felt) -> Felt {
        self.check(a);
        assert!(a.v != 0, "inversion of zero");
        let m = self.q - 1;
        let l = self.log[a.v as usize] as u32;
        let e = if l == 0 { 0 } else { m - l };
        Felt {
            v: self.exp[e as usize],
            tag: self.tag(),
        }
    }

    pub fn div(&self, a: Felt, b: Felt) -> Felt {
        self.mul(a, self.inv(b))
    }

    /// a^e for a signed exponent; 0 to a negative power is an error.
    pub fn pow(&self, a: Felt, e: i64) -> Felt {
        self.check(a);
        if a.v == 0 {
            assert!(e >= 0, "zero to a negative power");
            return if e == 0 { self.one() } else { self.zero() };
        }
        let m = (self.q - 1) as i64;
        let l = self.log[a.v as usize] as i64;
        let r = (l * (e.rem_euclid(m))).rem_euclid(m) as usize;
        Felt {
            v: self.exp[r],
            tag: self.tag(),
        }
    }

    /// Iterator over all q field elements.
    pub fn elements(&self) -> impl Iterator<Item = Felt> + '_ {
        (0..self.q).map(move |v| Felt {
            v: v as u16,
            tag: self.tag(),
        })
    }
}
