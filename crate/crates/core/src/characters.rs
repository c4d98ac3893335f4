//! Real quadratic characters `χ_D(n) = (D/n)` and the special values of their
//! L-functions.
//!
//! Values at `s ≤ 0` are rational generalized Bernoulli numbers. Values at
//! `s ≥ 1` of matching parity come from the functional equation of the
//! primitive character `χ_{D0}`, whose Gauss sum is `√D0` or `i√|D0|`; the
//! result is `rational · π^s · √f`. Passing from `D0` to `D` multiplies by the
//! Euler factors `1 − χ_{D0}(p) p^{−s}` for the primes dividing `D` but not `D0`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{prime_divisors, rat_pow, squarefree_split};
use crate::error::{Error, Result};
use crate::exactnum::{MonomialReal, Rat};

/// The Kronecker symbol `(a/n)` for arbitrary integers.
pub fn kronecker(a: i128, n: i128) -> i8 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result: i8 = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        n >>= twos;
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi symbol (a/n), n odd positive.
    let mut a = a.rem_euclid(n);
    while a != 0 {
        let t = a.trailing_zeros();
        a >>= t;
        if t % 2 == 1 && matches!(n % 8, 3 | 5) {
            result = -result;
        }
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        core::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

pub fn is_discriminant(d: i128) -> bool {
    d != 0 && matches!(d.rem_euclid(4), 0 | 1)
}

/// The fundamental discriminant `D0` with `χ_D` induced by `χ_{D0}`
/// (`D0 = 1` for principal `χ_D`).
pub fn fundamental_discriminant(d: i128) -> i128 {
    assert!(is_discriminant(d), "{} is not a discriminant", d);
    let (_, m) = squarefree_split(d.unsigned_abs());
    let core = d.signum() * m as i128;
    if core.rem_euclid(4) == 1 {
        core
    } else {
        4 * core
    }
}

/// Invariants of `χ_D`: the fundamental discriminant, conductor and parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterData {
    pub d: i128,
    pub d0: i128,
    pub conductor: u128,
    /// 1 when `χ_D(−1) = −1`.
    pub parity: u8,
}

impl CharacterData {
    pub fn new(d: i128) -> Self {
        let d0 = fundamental_discriminant(d);
        CharacterData {
            d,
            d0,
            conductor: d0.unsigned_abs(),
            parity: u8::from(d0 < 0),
        }
    }

    pub fn is_principal(&self) -> bool {
        self.d0 == 1
    }
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = −1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
    b.push(Rat::one());
    for m in 1..=n {
        // Σ_{k<m} C(m+1,k) B_k + (m+1) B_m = 0
        let mut acc = Rat::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += Rat::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / Rat::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `B_{n,χ_D} = Σ_k C(n,k) B_k F^{k−1} Σ_{a=1}^{F} χ_D(a) a^{n−k}` with `F = |D|`.
pub fn gen_bernoulli(n: usize, d: i128) -> Rat {
    assert!(n >= 1);
    let f = d.unsigned_abs();
    let b = bernoulli_numbers(n);
    // Power sums S_j = Σ χ(a) a^j, j = 0..=n.
    let mut sums = vec![BigInt::zero(); n + 1];
    for a in 1..=f {
        let chi = kronecker(d, a as i128);
        if chi == 0 {
            continue;
        }
        let mut pw = BigInt::one();
        let ab = BigInt::from(a);
        for s in sums.iter_mut() {
            if chi > 0 {
                *s += &pw;
            } else {
                *s -= &pw;
            }
            pw *= &ab;
        }
    }
    let fr = Rat::from_integer(BigInt::from(f));
    let mut total = Rat::zero();
    let mut binom = BigInt::one();
    for k in 0..=n {
        let fpow = if k == 0 {
            fr.recip()
        } else {
            num_traits::pow::pow(fr.clone(), k - 1)
        };
        total += Rat::from_integer(binom.clone() * &sums[n - k]) * &b[k] * fpow;
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    total
}

/// `Π_{p | D, p ∤ D0} (1 − χ_{D0}(p) p^{−s})`.
fn euler_correction(ch: &CharacterData, s: i64) -> Rat {
    let mut out = Rat::one();
    for p in prime_divisors(ch.d.unsigned_abs()) {
        if ch.d0 % p as i128 != 0 {
            let chi = kronecker(ch.d0, p as i128);
            out *= Rat::one() - Rat::from_integer(BigInt::from(chi)) * rat_pow(p as i64, -s);
        }
    }
    out
}

/// `L(s, χ_D)` as an exact monomial.
pub fn l_value(s: i64, d: i128) -> Result<MonomialReal> {
    let ch = CharacterData::new(d);
    if s <= 0 {
        let n = (1 - s) as usize;
        let v = -gen_bernoulli(n, ch.d0) / Rat::from_integer(BigInt::from(n));
        return Ok(MonomialReal::from_rat(v * euler_correction(&ch, s)));
    }
    if ch.is_principal() && s == 1 {
        return Err(Error::PoleOfL { s, d });
    }
    if (s - ch.parity as i64).rem_euclid(2) != 0 {
        return Err(Error::UnsupportedParity { s, d });
    }
    // L(s,χ) = (−1)^{1+(s−δ)/2} √f (2π/f)^s B_{s,χ} / (2·s!)
    let f = ch.conductor;
    let su = s as usize;
    let mut r = gen_bernoulli(su, ch.d0);
    if ((s - ch.parity as i64) / 2) % 2 == 0 {
        r = -r;
    }
    let fact: BigInt = (1..=su).map(BigInt::from).product();
    r = r * rat_pow(2, s - 1) / Rat::from_integer(fact) / Rat::from_integer(BigInt::from(f).pow(su as u32));
    let m = MonomialReal::new(r * euler_correction(&ch, s), 2 * s as i32, f as u64, 0);
    Ok(m)
}

/// `σ_{k1}(n, χ_D) = Σ_{d | n} χ_D(n/d) d^{k1}`.
pub fn twisted_sigma(k1: u32, n: u64, d: i128) -> Rat {
    assert!(n > 0);
    let mut acc = BigInt::zero();
    for dd in crate::arith::divisors(n) {
        let chi = kronecker(d, (n / dd) as i128);
        if chi != 0 {
            let t = BigInt::from(dd).pow(k1);
            if chi > 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
    }
    Rat::from_integer(acc)
}

/// `Σ_{d|n} χ_D(d)` — the weight-one divisor count, kept separate for clarity
/// at call sites using the `d ↦ χ(d)` orientation.
pub fn sigma0_chi(n: u64, d: i128) -> i64 {
    crate::arith::divisors(n)
        .into_iter()
        .map(|x| kronecker(d, x as i128) as i64)
        .sum()
}
