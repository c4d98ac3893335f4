//! Non-holomorphic completion data at `s = 0`: the constant added to `E_1`,
//! the constants `A(γ)` of weight 2, the weight-3/2 shadow coefficients, and
//! the closed forms for the rank-one lattices `±2m`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{divisors, is_rat_square, is_square_int, is_squarefree, prime_divisors};
use crate::characters::{kronecker, l_value, CharacterData};
use crate::eisenstein::{bad_primes, coset_denominator};
use crate::error::{Error, Result};
use crate::exactnum::{MonomialReal, Rat, RatFunc, RatPoly};
use crate::lattice::{DiscriminantForm, GramLattice};
use crate::localzeta::{euler_factor, regularized_limit, regularized_limit_with};
use crate::oracles::hurwitz;
use crate::series::{exponents_upto, VVQSeries, Weight};

/// One entry `γ ↦ value` of a constant correction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionEntry {
    pub coset: usize,
    pub gamma: Vec<Rat>,
    pub value: Rat,
}

/// Values at the cosets with `q(γ) ∈ Z`. For weight 1 the value is the
/// constant added to `E_1` to obtain `E*_1(τ, 0)`; for weight 2 it is
/// `A(γ)·π` with `E*_2(τ, 0) = E_2(τ) − y^{−1} Σ A(γ) e_γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionVector {
    pub weight: u8,
    pub entries: Vec<CorrectionEntry>,
}

impl CorrectionVector {
    /// The value at coset `coset`, zero if `q(γ) ∉ Z`.
    pub fn at(&self, coset: usize) -> Rat {
        self.entries.iter().find(|e| e.coset == coset).map(|e| e.value.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.value.is_zero())
    }
}

fn integral_cosets(df: &DiscriminantForm) -> Vec<usize> {
    (0..df.len()).filter(|&i| df.q(i).is_zero()).collect()
}

fn inv_sqrt_det(l: &GramLattice) -> MonomialReal {
    MonomialReal::sqrt_rat(&Rat::new(BigInt::one(), BigInt::from(l.disc_order())))
}

fn sign(exponent_times_four: i64) -> i64 {
    debug_assert_eq!(exponent_times_four.rem_euclid(4), 0);
    if (exponent_times_four / 4) % 2 == 0 { 1 } else { -1 }
}

/// `Π_bad lim (1 − p^{α−2s}) L_p(n, γ, b + 2s) / norm(p)`.
fn local_product(l: &GramLattice, gamma: &[Rat], n: &Rat, alpha: i64, b: i64, norm: impl Fn(u64) -> Rat) -> Result<Rat> {
    let mut out = Rat::one();
    for p in bad_primes(l, n) {
        let f = euler_factor(l, gamma, n, p)?;
        out *= regularized_limit(&f, alpha, b)? / norm(p);
    }
    Ok(out)
}

fn one_plus_inverse(p: u64) -> Rat {
    Rat::new(BigInt::from(p + 1), BigInt::from(p))
}

/// Weight 1: `−π(−1)^{(2+b⁻−b⁺)/4}/√|det| · L(0,χ_D)/L(1,χ_D) · Π_bad lim(…)`
/// with `D = −4|det| Π_bad p²`.
///
/// `L(2s, χ_D)/L(1+2s, χ_D)` is split into the primitive ratio and the Euler
/// factors `(1 − χ₀(p)u)/(1 − χ₀(p)p^{−1}u)`, `u = p^{−2s}`, which go inside
/// each local limit: when `χ₀(p) = 1` the first one vanishes at `s = 0` and
/// cancels a double pole of `L_p` (e.g. `p = 2` for `det = 7`).
pub fn weight1_correction(l: &GramLattice) -> Result<CorrectionVector> {
    let (plus, minus) = l.signature();
    Weight::from_twice(2)?.check_parity((plus, minus))?;
    let df = DiscriminantForm::new(l)?;
    let zero = Rat::zero();
    let squares: i128 = bad_primes(l, &zero).iter().map(|&p| (p * p) as i128).product();
    let d = -4 * l.disc_order() as i128 * squares;
    let d0 = CharacterData::new(d).d0;
    let lratio = l_value(0, d0)? * l_value(1, d0)?.inv()?;
    let front = MonomialReal::new(Rat::from_integer(BigInt::from(-sign(2 + minus as i64 - plus as i64))), 2, 1, 0)
        * inv_sqrt_det(l)
        * lratio;
    let e = l.dim() as i64;
    let mut entries = Vec::new();
    let removed = |p: u64| {
        let chi = Rat::from_integer(BigInt::from(kronecker(d0, p as i128)));
        let num = RatPoly::one_minus(chi.clone(), 1);
        let den = RatPoly::one_minus(chi / Rat::from_integer(BigInt::from(p)), 1);
        RatFunc::new(num, den)
    };
    for i in integral_cosets(&df) {
        let mut local = Rat::one();
        for p in bad_primes(l, &zero) {
            let f = euler_factor(l, df.element(i), &zero, p)?;
            local *= regularized_limit_with(&f, e / 2 - 1, e / 2, &removed(p))?;
        }
        let value = (front.clone() * MonomialReal::from_rat(local)).to_rat()?;
        entries.push(CorrectionEntry { coset: i, gamma: df.element(i).to_vec(), value });
    }
    Ok(CorrectionVector { weight: 1, entries })
}

/// Weight 2: `A(γ)·π = 3/√|det| · Π_bad lim(…)/(1 + p^{−1})`, identically
/// zero unless `|det|` is a perfect square.
pub fn weight2_correction(l: &GramLattice) -> Result<CorrectionVector> {
    Weight::from_twice(4)?.check_parity(l.signature())?;
    let df = DiscriminantForm::new(l)?;
    let det = BigInt::from(l.disc_order());
    let square = is_square_int(&det);
    let zero = Rat::zero();
    let e = l.dim() as i64;
    let mut entries = Vec::new();
    for i in integral_cosets(&df) {
        let value = if square {
            let local = local_product(l, df.element(i), &zero, e / 2 - 2, 1 + e / 2, one_plus_inverse)?;
            (MonomialReal::from_int(3) * inv_sqrt_det(l) * MonomialReal::from_rat(local)).to_rat()?
        } else {
            Rat::zero()
        };
        entries.push(CorrectionEntry { coset: i, gamma: df.element(i).to_vec(), value });
    }
    Ok(CorrectionVector { weight: 2, entries })
}

/// Shadow coefficients `a(n, γ)` for `n ≤ 0`, keyed by the exponent `−n` of
/// the shadow `ϑ = Σ a(n, γ) q^{−n} e_γ` (a form for `ρ`). Values may carry a
/// square root, so they are kept as monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowSeries {
    pub gram: Vec<Vec<i64>>,
    pub cosets: Vec<Vec<Rat>>,
    pub prec: Rat,
    coeffs: BTreeMap<(Rat, usize), MonomialReal>,
}

impl ShadowSeries {
    /// `a(−x, γ)`, zero off the support.
    pub fn get(&self, coset: usize, x: &Rat) -> MonomialReal {
        self.coeffs.get(&(x.clone(), coset)).cloned().unwrap_or_else(MonomialReal::zero)
    }

    /// `(coset, −n, a(n, γ))` ordered by `−n`, then coset.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat, &MonomialReal)> {
        self.coeffs.iter().map(|((x, i), a)| (*i, x, a))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(MonomialReal::is_zero)
    }
}

/// `a(n, γ) = 48(−1)^{(3+b⁺−b⁻)/4} √2/√|det| · Π_bad lim(…)/(1 + p^{−1})` for
/// `n < 0` with `−2n|det|` a rational square, half of it at `n = 0`; zero
/// elsewhere. Only exponents `0 ≤ −n ≤ prec` are produced.
pub fn weight32_shadow(l: &GramLattice, prec: &Rat) -> Result<ShadowSeries> {
    let (plus, minus) = l.signature();
    Weight::from_twice(3)?.check_parity((plus, minus))?;
    let df = DiscriminantForm::new(l)?;
    let e = l.dim() as i64;
    let det = Rat::from_integer(BigInt::from(l.disc_order()));
    let front = MonomialReal::new(Rat::from_integer(BigInt::from(48 * sign(3 + plus as i64 - minus as i64))), 0, 2, 0)
        * inv_sqrt_det(l);
    let mut coeffs = BTreeMap::new();
    for i in 0..df.len() {
        if df.neg(i) < i {
            continue;
        }
        for x in exponents_upto(&-df.q(i), prec) {
            let n = -&x;
            let on_support = n.is_zero() || is_rat_square(&(&x * &det * Rat::from_integer(BigInt::from(2))));
            if !on_support {
                continue;
            }
            let mut local = local_product(l, df.element(i), &n, (e - 3) / 2, (e + 1) / 2, one_plus_inverse)?;
            if n.is_zero() {
                local /= Rat::from_integer(BigInt::from(2));
            }
            let a = front.clone() * MonomialReal::from_rat(local);
            coeffs.insert((x.clone(), df.neg(i)), a.clone());
            coeffs.insert((x, i), a);
        }
    }
    Ok(ShadowSeries { gram: l.gram().to_vec(), cosets: df.elements().to_vec(), prec: prec.clone(), coeffs })
}

/// Closed forms for the rank-one lattices attached to a squarefree `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegral {
    /// `E_{1/2}` for `q(x) = −mx²` (Gram `[[−2m]]`).
    pub e12: VVQSeries,
    /// `−24√m·σ₀(m)/σ₁(m)`: the shadow of `E_{3/2}` for `[[2m]]` is this
    /// multiple of `e12`.
    pub shadow_factor: MonomialReal,
    /// `E_{3/2}` for Gram `[[2m]]` via `−(12/σ₁(m)) Σ_{a|m} a·H(4mn/a²)`.
    pub e32_closed: VVQSeries,
}

/// `ε(γ) = #{odd p | d_γ} + [4 | d_γ]`.
pub fn epsilon(gamma: &[Rat]) -> u32 {
    let d = coset_denominator(gamma);
    let odd = prime_divisors(d as u128).iter().filter(|&&p| p != 2).count() as u32;
    odd + u32::from(d % 4 == 0)
}

/// The rank-one weight-1/2 data. `E_{1/2}` is supported on `mn = □`, where
/// `c(n, γ) = 2·(1/2)^{ε(γ)}`.
pub fn halfint_onedim(m: u64, prec: &Rat) -> Result<HalfIntegral> {
    if m == 0 || !is_squarefree(m) {
        return Err(Error::NotSquarefree(m));
    }
    let mi = m as i64;
    let neg = GramLattice::new(vec![vec![-2 * mi]])?;
    let pos = GramLattice::new(vec![vec![2 * mi]])?;
    let dneg = DiscriminantForm::new(&neg)?;
    let dpos = DiscriminantForm::new(&pos)?;
    let mr = Rat::from_integer(BigInt::from(m));
    let ds = divisors(m);
    let sigma0 = ds.len() as i64;
    let sigma1: u64 = ds.iter().sum();
    let sigma1r = Rat::from_integer(BigInt::from(sigma1));

    let mut e12 = VVQSeries::new(Weight::from_twice(1)?, &dneg, prec.clone());
    for i in 0..dneg.len() {
        let gamma = dneg.element(i);
        let c = Rat::new(BigInt::from(2), BigInt::from(2u64.pow(epsilon(gamma))));
        for n in exponents_upto(dneg.q(i), prec) {
            let value = if n.is_zero() {
                Rat::one()
            } else if is_rat_square(&(&mr * &n)) {
                c.clone()
            } else {
                Rat::zero()
            };
            e12.insert(i, n, value)?;
        }
    }

    let shadow_factor = MonomialReal::new(Rat::new(BigInt::from(-24 * sigma0), BigInt::from(sigma1)), 0, m, 0);

    let mut e32_closed = VVQSeries::new(Weight::from_twice(3)?, &dpos, prec.clone());
    for i in 0..dpos.len() {
        for n in exponents_upto(dpos.q(i), prec) {
            let mut acc = Rat::zero();
            for &a in &ds {
                let arg = Rat::from_integer(BigInt::from(4 * m)) * &n / Rat::from_integer(BigInt::from(a * a));
                acc += Rat::from_integer(BigInt::from(a)) * hurwitz(&arg);
            }
            let value = -Rat::from_integer(BigInt::from(12)) * acc / &sigma1r;
            e32_closed.insert(i, n, value)?;
        }
    }
    debug_assert!(e32_closed.get(0, &Rat::zero()).is_one());
    Ok(HalfIntegral { e12, shadow_factor, e32_closed })
}
