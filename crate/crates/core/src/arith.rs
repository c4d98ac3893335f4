//! Small integer helpers: factorization by trial division, valuations,
//! squarefree parts and divisor lists. Inputs here are always modest
//! (discriminants, determinants, exponents), so nothing fancier is needed.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::Rat;

/// Prime factorization `n = Π p^k`, primes ascending. `factorize(1)` is empty.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    let mut push = |p: u128, n: &mut u128| {
        let mut k = 0;
        while *n % p == 0 {
            *n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u128;
    while p * p <= n {
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u128) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p as u64).collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factorize(n as u128);
    f.len() == 1 && f[0].1 == 1
}

/// Writes `n = s²·m` with `m` squarefree; returns `(s, m)`.
pub fn squarefree_split(n: u128) -> (u128, u128) {
    let mut s = 1u128;
    let mut m = 1u128;
    for (p, k) in factorize(n) {
        s *= p.pow(k / 2);
        if k % 2 == 1 {
            m *= p;
        }
    }
    (s, m)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && factorize(n as u128).iter().all(|&(_, k)| k == 1)
}

/// Largest `r` with `r² <= n`.
pub fn isqrt(n: u128) -> u128 {
    num_integer::Roots::sqrt(&n)
}

pub fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// True iff `x` is the square of a rational number.
pub fn is_rat_square(x: &Rat) -> bool {
    is_square_int(x.numer()) && is_square_int(x.denom())
}

/// `v_p(n)` for nonzero `n`.
pub fn valuation(p: u64, n: &BigInt) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// `v_p(x)` for a nonzero rational.
pub fn valuation_rat(p: u64, x: &Rat) -> i64 {
    valuation(p, x.numer()) as i64 - valuation(p, x.denom()) as i64
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// `base^exp` as an exact rational; negative exponents allowed.
pub fn rat_pow(base: i64, exp: i64) -> Rat {
    let b = Rat::from_integer(BigInt::from(base));
    if exp >= 0 {
        num_traits::pow::pow(b, exp as usize)
    } else {
        num_traits::pow::pow(b.recip(), (-exp) as usize)
    }
}

pub fn big(n: impl Into<BigInt>) -> BigInt {
    n.into()
}

/// Converts a rational that must be an integer.
pub fn rat_to_i128(x: &Rat) -> Option<i128> {
    if x.denom().is_one() {
        x.numer().to_i128()
    } else {
        None
    }
}

/// Primes dividing numerator or denominator of a nonzero rational.
pub fn rat_prime_divisors(x: &Rat) -> Vec<u64> {
    let mut out = Vec::new();
    if !x.is_zero() {
        let n = x.numer().abs().to_u128().expect("numerator fits in u128");
        let d = x.denom().to_u128().expect("denominator fits in u128");
        out.extend(prime_divisors(n));
        out.extend(prime_divisors(d));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `a mod m` in `[0, m)`.
pub fn modp(a: i128, m: i128) -> i128 {
    let r = a % m;
    if r < 0 {
        r + m
    } else {
        r
    }
}

/// Inverse of `a` modulo `m` (must be coprime).
pub fn mod_inverse(a: i128, m: i128) -> i128 {
    let g = num_integer::Integer::extended_gcd(&modp(a, m), &m);
    assert!(g.gcd == 1, "not invertible");
    modp(g.x, m)
}

/// Reduces the rational `x` modulo the prime `p` (denominator must be prime to `p`).
pub fn rat_mod_p(x: &Rat, p: u64) -> i128 {
    let p = p as i128;
    let n = modp((x.numer() % BigInt::from(p)).to_i128().unwrap(), p);
    let d = modp((x.denom() % BigInt::from(p)).to_i128().unwrap(), p);
    modp(n * mod_inverse(d, p), p)
}
