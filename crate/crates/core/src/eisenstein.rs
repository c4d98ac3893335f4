//! Holomorphic coefficients `c(n, γ)` of `E_k` for the dual Weil representation.
//!
//! `c(n, γ) = [√i^{b⁻−b⁺}/√|det|] · L̃(n, γ, k + e/2) · (−2πi)^k n^{k−1}/Γ(k)`,
//! where `L̃` is a quadratic L-value times finitely many regularized local
//! factors at the bad primes. Every factor is an exact [`MonomialReal`]; the
//! product is asserted to be rational.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{prime_divisors, rat_pow, rat_prime_divisors};
use crate::characters::{l_value, twisted_sigma, CharacterData};
use crate::error::{Error, Result};
use crate::exactnum::{frac, MonomialReal, Rat};
use crate::lattice::{DiscriminantForm, GramLattice};
use crate::localzeta::{euler_factor, regularized_limit};
use crate::series::{exponents_upto, VVQSeries, Weight};

/// `(−2πi)^k n^{k−1}/Γ(k)` with the principal branch of `(−i)^k = ζ₈^{−2k}`.
pub fn archimedean_factor(k: &Weight, n: &Rat) -> MonomialReal {
    assert!(n.is_positive(), "archimedean factor needs n > 0");
    let twice = k.twice();
    // (2π)^k = 2^{⌊k⌋} · (√2 if k ∉ Z) · π^k
    let two_pow = rat_pow(2, twice.div_euclid(2));
    let mut m = MonomialReal::new(two_pow, twice as i32, if twice % 2 == 1 { 2 } else { 1 }, -twice);
    // n^{k−1}
    let k1 = twice - 2;
    m = m * MonomialReal::from_rat(rat_pow_rat(n, k1.div_euclid(2)));
    if k1.rem_euclid(2) == 1 {
        m = m * MonomialReal::sqrt_rat(n);
    }
    m / gamma_value(twice)
}

fn rat_pow_rat(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `Γ(twice/2)` for `twice ≥ 1`.
fn gamma_value(twice: i64) -> MonomialReal {
    if twice % 2 == 0 {
        let f: BigInt = (1..twice / 2).map(BigInt::from).product();
        MonomialReal::from_rat(Rat::from_integer(f))
    } else {
        // Γ(j + 1/2) = (2j)! √π / (4^j j!)
        let j = (twice - 1) / 2;
        let num: BigInt = (1..=2 * j).map(BigInt::from).product();
        let den: BigInt = BigInt::from(4).pow(j as u32) * (1..=j).map(BigInt::from).product::<BigInt>();
        MonomialReal::new(Rat::new(num, den), 1, 1, 0)
    }
}

/// Bad primes and the assembled discriminant for one coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscData {
    pub bad: Vec<u64>,
    /// `D'` (even `e`) or `𝒟'` (odd `e`).
    pub primitive: i128,
    /// `D' · Π_bad p²` resp. `𝒟' · Π_bad p²`.
    pub assembled: i128,
}

/// `d_γ`: the least `d > 0` with `d·γ ∈ Λ`.
pub fn coset_denominator(gamma: &[Rat]) -> u64 {
    gamma
        .iter()
        .fold(BigInt::one(), |acc, g| acc.lcm(g.denom()))
        .to_u64()
        .expect("coset denominator fits in u64")
}

/// `{2} ∪ {p | |Λ'/Λ|} ∪ {p | num(n)·den(n)}`, sorted.
pub fn bad_primes(l: &GramLattice, n: &Rat) -> Vec<u64> {
    let mut bad = alloc::vec![2u64];
    bad.extend(prime_divisors(l.disc_order() as u128));
    bad.extend(rat_prime_divisors(n));
    bad.sort_unstable();
    bad.dedup();
    bad
}

pub fn disc_data(l: &GramLattice, k: &Weight, n: &Rat, gamma: &[Rat]) -> Result<DiscData> {
    let bad = bad_primes(l, n);
    let det = l.disc_order() as i128;
    let twice = k.twice();
    let primitive = if l.dim() % 2 == 0 {
        if twice % 2 != 0 {
            return Err(Error::UnsupportedWeight(alloc::format!("{} for even rank", k)));
        }
        if (twice / 2) % 2 == 0 { det } else { -det }
    } else {
        if twice % 2 != 1 {
            return Err(Error::UnsupportedWeight(alloc::format!("{} for odd rank", k)));
        }
        let d = coset_denominator(gamma) as i128;
        let v = Rat::from_integer(BigInt::from(2 * d * d)) * n;
        let v = v.to_integer().to_i128().filter(|_| v.is_integer()).ok_or_else(|| Error::TooLarge(alloc::format!("2n·d² = {}", v)))?;
        // sign (−1)^{k − 1/2}
        if ((twice - 1) / 2) % 2 == 0 { v * det } else { -v * det }
    };
    let square: i128 = bad.iter().map(|&p| (p as i128) * (p as i128)).product();
    let assembled = primitive.checked_mul(square).ok_or_else(|| Error::TooLarge(alloc::format!("discriminant {}·{}", primitive, square)))?;
    Ok(DiscData { bad, primitive, assembled })
}

fn check_args(l: &GramLattice, k: &Weight, n: &Rat, gamma: &[Rat]) -> Result<()> {
    k.check_parity(l.signature())?;
    if k.twice() < 2 {
        return Err(Error::UnsupportedWeight(alloc::format!("{} (use the one-dimensional closed forms)", k)));
    }
    if gamma.len() != l.dim() {
        return Err(Error::InvalidArgument(alloc::format!("coset of length {} for rank {}", gamma.len(), l.dim())));
    }
    if !n.is_positive() || !frac(&(n + l.q(gamma))).is_zero() {
        return Err(Error::InvalidExponent { n: alloc::format!("{}", n) });
    }
    Ok(())
}

/// `√i^{b⁻−b⁺}/√|det|`.
fn lattice_phase(l: &GramLattice) -> MonomialReal {
    let (plus, minus) = l.signature();
    MonomialReal::zeta8(minus as i64 - plus as i64)
        * MonomialReal::sqrt_rat(&Rat::new(BigInt::one(), BigInt::from(l.disc_order())))
}

/// `c(n, γ)` for `n > 0`, any admissible weight `k ≥ 1`.
pub fn coefficient(l: &GramLattice, k: &Weight, n: &Rat, gamma: &[Rat]) -> Result<Rat> {
    check_args(l, k, n, gamma)?;
    let data = disc_data(l, k, n, gamma)?;
    let e = l.dim() as i64;
    let twice = k.twice();
    // α = e/2 − k and b = k + e/2 − 1 are integers in both parities.
    let alpha = (e - twice) / 2;
    let b = (twice + e) / 2 - 1;
    let mut local = Rat::one();
    for &p in &data.bad {
        let f = euler_factor(l, gamma, n, p)?;
        local *= regularized_limit(&f, alpha, b)?;
        if e % 2 == 1 {
            local /= Rat::one() - rat_pow(p as i64, 1 - twice);
        }
    }
    let lvals = if e % 2 == 0 {
        debug_assert_eq!(CharacterData::new(data.assembled).parity as i64, (twice / 2) % 2);
        l_value(twice / 2, data.assembled)?.inv()?
    } else {
        l_value((twice - 1) / 2, data.assembled)? * l_value(twice - 1, 1)?.inv()?
    };
    let c = lattice_phase(l) * lvals * MonomialReal::from_rat(local) * archimedean_factor(k, n);
    c.to_rat()
}

/// The same coefficient at `γ = 0`, integral `n > 0`, even rank, through a
/// twisted divisor sum: `D = (−1)^k · 4|det|`, local factors only at `p | 2 det`.
pub fn coefficient_bk(l: &GramLattice, k: &Weight, n: u64) -> Result<Rat> {
    let zero = alloc::vec![Rat::zero(); l.dim()];
    check_args(l, k, &Rat::from_integer(BigInt::from(n)), &zero)?;
    if l.dim() % 2 != 0 {
        return Err(Error::UnsupportedWeight(alloc::format!("{} for odd rank", k)));
    }
    let e = l.dim() as i64;
    let kk = k.twice() / 2;
    let det = l.disc_order() as i128;
    let d = if kk % 2 == 0 { 4 * det } else { -4 * det };
    let nr = Rat::from_integer(BigInt::from(n));
    let mut local = Rat::one();
    for p in prime_divisors(d.unsigned_abs()) {
        let f = euler_factor(l, &zero, &nr, p)?;
        local *= regularized_limit(&f, e / 2 - kk, kk + e / 2 - 1)?;
    }
    let c = lattice_phase(l)
        * archimedean_factor(k, &Rat::one())
        * l_value(kk, d)?.inv()?
        * MonomialReal::from_rat(local * twisted_sigma((kk - 1) as u32, n, d));
    c.to_rat()
}

/// Cosets (one per `±γ` pair) and positive exponents up to `prec`, in the
/// order `assemble_series` expects their values.
pub fn series_jobs(df: &DiscriminantForm, prec: &Rat) -> Vec<(usize, Rat)> {
    let mut jobs = Vec::new();
    for i in 0..df.len() {
        if df.neg(i) < i {
            continue;
        }
        for n in exponents_upto(df.q(i), prec) {
            if n.is_positive() {
                jobs.push((i, n));
            }
        }
    }
    jobs
}

/// Builds `E_k` from per-job values (`c(n, −γ)` is copied from `c(n, γ)`).
pub fn assemble_series(k: &Weight, df: &DiscriminantForm, prec: &Rat, jobs: &[(usize, Rat)], values: Vec<Result<Rat>>) -> Result<VVQSeries> {
    let mut s = VVQSeries::new(k.clone(), df, prec.clone());
    for i in 0..df.len() {
        if df.q(i).is_integer() {
            s.insert(i, Rat::zero(), if i == 0 { Rat::one() } else { Rat::zero() })?;
        }
    }
    for ((i, n), c) in jobs.iter().zip(values) {
        let c = c?;
        s.insert(df.neg(*i), n.clone(), c.clone())?;
        s.insert(*i, n.clone(), c)?;
    }
    Ok(s)
}

/// `E_k = e_0 + Σ_{0 < n ≤ prec} c(n, γ) q^n e_γ`.
pub fn series(l: &GramLattice, k: &Weight, prec: &Rat) -> Result<VVQSeries> {
    k.check_parity(l.signature())?;
    let df = DiscriminantForm::new(l)?;
    let jobs = series_jobs(&df, prec);
    let values = jobs.iter().map(|(i, n)| coefficient(l, k, n, df.element(*i))).collect();
    assemble_series(k, &df, prec, &jobs, values)
}
