//! Exact arithmetic substrate.
//!
//! [`Rat`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; its `Display` is the canonical `p/q` (or `p`)
//! rendering used by every output format.

mod monomial;
mod poly;

pub use monomial::MonomialReal;
pub use poly::{RatFunc, RatPoly};

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical `p/q` text; `p` when `q = 1`.
pub fn render(x: &Rat) -> String {
    x.to_string()
}

/// Parses `p`, `-p`, `p/q`. Whitespace around the value is ignored.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rat) -> Rat {
    x - x.floor()
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// `x mod 1 == 0`.
pub fn is_zero_mod_one(x: &Rat) -> bool {
    frac(x).is_zero()
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        assert_eq!(render(&rat(6, -4)), "-3/2");
        assert_eq!(render(&rat(4, 2)), "2");
        assert_eq!(render(&int(0)), "0");
        assert_eq!(parse_rat(" -3/2 "), Some(rat(-3, 2)));
        assert_eq!(parse_rat("7"), Some(int(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(frac(&rat(-1, 4)), rat(3, 4));
    }
}
