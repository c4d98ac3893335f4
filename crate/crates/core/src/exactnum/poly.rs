use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q, lowest degree first.
///
/// Invariant: no trailing zero coefficients (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `1 - c·t^k`
    pub fn one_minus(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[0] = Rat::one();
        v[k] = &v[k] - c;
        Self::new(v)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| super::int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// `p(c·u)` as a polynomial in `u`.
    pub fn rescale_var(&self, c: &Rat) -> Self {
        let mut pow = Rat::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::new(out)
    }

    /// Truncation to degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
                quot[k] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Renders with variable name `var`, e.g. `1 - 3t + t^2`.
    pub fn render(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coef = if i > 0 && a.is_one() {
                String::new()
            } else if i > 0 && !a.denom().is_one() {
                alloc::format!("({})", a)
            } else {
                alloc::format!("{}", a)
            };
            s.push_str(&coef);
            match i {
                0 => {}
                1 => s.push_str(var),
                _ => {
                    let _ = write!(s, "{}^{}", var, i);
                }
            }
        }
        s
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

/// Reduced quotient of polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    /// Builds `num/den` in lowest terms; panics if `den` is zero.
    pub fn new(num: RatPoly, den: RatPoly) -> Self {
        assert!(!den.is_zero(), "RatFunc with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: RatPoly::one(),
            };
        }
        let g = RatPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let l = den.leading().unwrap().recip();
        RatFunc {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn poly(p: RatPoly) -> Self {
        Self::new(p, RatPoly::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::poly(RatPoly::constant(c))
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn eval(&self, t: &Rat) -> Result<Rat> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(t) / d)
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn mul_poly(&self, p: &RatPoly) -> RatFunc {
        RatFunc::new(&self.num * p, self.den.clone())
    }

    /// `F(c·u)` as a rational function of `u`.
    pub fn rescale_var(&self, c: &Rat) -> RatFunc {
        RatFunc::new(self.num.rescale_var(c), self.den.rescale_var(c))
    }

    /// First `n` Taylor coefficients at 0; requires `den(0) != 0`.
    pub fn taylor(&self, n: usize) -> Result<Vec<Rat>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        let inv = d0.recip();
        let mut out: Vec<Rat> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.coeffs.len().saturating_sub(1)) {
                acc -= self.den.coeff(j) * &out[k - j];
            }
            out.push(acc * &inv);
        }
        Ok(out)
    }

    /// Numerator and denominator scaled so that `den(0) = 1` (when `den(0) != 0`),
    /// the natural presentation of a generating function.
    pub fn normalized_at_zero(&self) -> (RatPoly, RatPoly) {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return (self.num.clone(), self.den.clone());
        }
        let s = d0.recip();
        (self.num.scale(&s), self.den.scale(&s))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.normalized_at_zero();
        if d == RatPoly::one() {
            write!(f, "{}", n)
        } else {
            write!(f, "({})/({})", n, d)
        }
    }
}
