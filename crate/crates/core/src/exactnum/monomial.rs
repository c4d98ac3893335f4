use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Div, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::arith::squarefree_split;
use crate::error::{Error, Result};

/// An exact real-or-complex number `r · π^(a/2) · √m · ζ₈^c`.
///
/// Canonical form: `m` squarefree, `c ∈ {0,1,2,3}` (since `ζ₈⁴ = −1` is
/// absorbed into the sign of `r`), and zero is stored as `0·π⁰·√1·ζ₈⁰`.
/// The π exponent is kept doubled (`pi2 = 2a`) so that `Γ(3/2) = √π/2` fits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialReal {
    r: Rat,
    pi2: i32,
    m: u64,
    c: u8,
}

impl MonomialReal {
    /// Builds and canonicalizes `r · π^(pi2/2) · √m · ζ₈^c`; `m` may be any
    /// positive integer.
    pub fn new(r: Rat, pi2: i32, m: u64, c: i64) -> Self {
        assert!(m > 0, "radicand must be positive");
        if r.is_zero() {
            return Self::zero();
        }
        let (s, m) = squarefree_split(m as u128);
        let mut r = r * Rat::from_integer(BigInt::from(s));
        let c = c.rem_euclid(8);
        if c >= 4 {
            r = -r;
        }
        MonomialReal {
            r,
            pi2,
            m: m as u64,
            c: (c % 4) as u8,
        }
    }

    pub fn zero() -> Self {
        MonomialReal {
            r: Rat::zero(),
            pi2: 0,
            m: 1,
            c: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::new(r, 0, 1, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::int(n))
    }

    /// `π^(pi2/2)`.
    pub fn pi_pow(pi2: i32) -> Self {
        Self::new(Rat::one(), pi2, 1, 0)
    }

    /// `ζ₈^c` with `ζ₈ = e^{iπ/4}`.
    pub fn zeta8(c: i64) -> Self {
        Self::new(Rat::one(), 0, 1, c)
    }

    /// Positive square root of a non-negative rational: `√(p/q) = √(pq)/q`.
    pub fn sqrt_rat(x: &Rat) -> Self {
        assert!(!x.is_negative(), "square root of a negative rational");
        if x.is_zero() {
            return Self::zero();
        }
        let pq = x.numer() * x.denom();
        let pq: u64 = pq.try_into().expect("radicand exceeds 64 bits");
        Self::new(Rat::new(BigInt::one(), x.denom().clone()), 0, pq, 0)
    }

    pub fn r(&self) -> &Rat {
        &self.r
    }

    /// Exponent of π as a half-integer, doubled.
    pub fn pi_exponent_doubled(&self) -> i32 {
        self.pi2
    }

    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn zeta8_exponent(&self) -> u8 {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// True when the value is a real number (`ζ₈` part is `±1`).
    pub fn is_real(&self) -> bool {
        self.c == 0 || self.is_zero()
    }

    /// The modulus data `(r², a, m)`, i.e. the monomial without its phase, squared rational part.
    pub fn modulus_data(&self) -> (Rat, i32, u64) {
        (&self.r * &self.r, self.pi2, self.m)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("inverse of zero".to_string()));
        }
        // 1/√m = √m/m, ζ₈^{-c}.
        let r = self.r.recip() / Rat::from_integer(BigInt::from(self.m));
        Ok(Self::new(r, -self.pi2, self.m, -(self.c as i64)))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Sum of two monomials with the same transcendental part.
    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        if (self.pi2, self.m, self.c) != (o.pi2, o.m, o.c) {
            return Err(Error::IncompatibleMonomials);
        }
        Ok(Self::new(&self.r + &o.r, self.pi2, self.m, self.c as i64))
    }

    pub fn to_rat(&self) -> Result<Rat> {
        if self.is_zero() || (self.pi2 == 0 && self.m == 1 && self.c == 0) {
            Ok(self.r.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// `Some(r)` when the value is `r·√m` for real `r` and no π (used for shadow
    /// coefficients, which may carry a square root).
    pub fn as_real_surd(&self) -> Option<(Rat, u64)> {
        if self.is_zero() {
            return Some((Rat::zero(), 1));
        }
        (self.pi2 == 0 && self.c == 0).then(|| (self.r.clone(), self.m))
    }
}

impl Mul for &MonomialReal {
    type Output = MonomialReal;
    fn mul(self, o: &MonomialReal) -> MonomialReal {
        if self.is_zero() || o.is_zero() {
            return MonomialReal::zero();
        }
        // m1·m2 = (m1/g)(m2/g)·g² with (m1/g)(m2/g) squarefree.
        let g = self.m.gcd(&o.m);
        let m = (self.m / g) * (o.m / g);
        let r = &self.r * &o.r * Rat::from_integer(BigInt::from(g));
        MonomialReal::new(r, self.pi2 + o.pi2, m, self.c as i64 + o.c as i64)
    }
}

impl Mul for MonomialReal {
    type Output = MonomialReal;
    fn mul(self, o: MonomialReal) -> MonomialReal {
        &self * &o
    }
}

impl Div for &MonomialReal {
    type Output = MonomialReal;
    /// Panics on division by zero.
    fn div(self, o: &MonomialReal) -> MonomialReal {
        self * &o.inv().expect("division by zero monomial")
    }
}

impl Div for MonomialReal {
    type Output = MonomialReal;
    fn div(self, o: MonomialReal) -> MonomialReal {
        &self / &o
    }
}

impl Neg for &MonomialReal {
    type Output = MonomialReal;
    fn neg(self) -> MonomialReal {
        MonomialReal::new(-&self.r, self.pi2, self.m, self.c as i64)
    }
}

impl fmt::Display for MonomialReal {
    /// ASCII rendering, e.g. `-24*sqrt(2)`, `(3/2)*pi^(-1)`, `2*pi*zeta8^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: alloc::vec::Vec<String> = alloc::vec::Vec::new();
        match self.pi2 {
            0 => {}
            2 => parts.push("pi".to_string()),
            p if p % 2 == 0 && p > 0 => parts.push(format!("pi^{}", p / 2)),
            p if p % 2 == 0 => parts.push(format!("pi^({})", p / 2)),
            p => parts.push(format!("pi^({}/2)", p)),
        }
        if self.m != 1 {
            parts.push(format!("sqrt({})", self.m));
        }
        if self.c != 0 {
            parts.push(format!("zeta8^{}", self.c));
        }
        let r = &self.r;
        if parts.is_empty() {
            return write!(f, "{}", r);
        }
        let tail = parts.join("*");
        if r.is_one() {
            f.write_str(&tail)
        } else if (-r).is_one() {
            write!(f, "-{}", tail)
        } else if r.denom().is_one() {
            write!(f, "{}*{}", r, tail)
        } else if r.is_negative() {
            write!(f, "-({})*{}", -r, tail)
        } else {
            write!(f, "({})*{}", r, tail)
        }
    }
}
