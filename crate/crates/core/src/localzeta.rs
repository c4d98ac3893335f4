//! Local zero counts `N(p^ν) = #{v ∈ Λ/p^νΛ : q(v − γ) + n ≡ 0 mod p^ν}` and
//! their generating functions `L_p(n, γ, s) = Σ N(p^ν) p^{−νs}`.
//!
//! Counts are produced by lifting: a zero `v₀` mod `p` where the gradient
//! `G(v₀ − γ)` is nonzero mod `p` has exactly `p^{(e−1)(ν−1)}` lifts to a zero mod
//! `p^ν`; a singular zero lifts only if `p² | f(v₀)`, and then the lifts are
//! `p^e` times the zeros mod `p^{ν−2}` of the same kind of polynomial with data
//! `((γ − v₀)/p, n/p²)`. At odd primes the count mod `p` comes from a
//! diagonalization over `F_p`; only the singular zeros (an affine space of
//! dimension equal to the corank) are listed. [`count_solutions`]
//! is the plain enumeration and serves as the reference for all of this.
//!
//! The generating function is recovered from the counts by finding a linear
//! recurrence (Berlekamp–Massey over Q), confirmed on held-out terms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{modp, rat_pow, valuation, valuation_rat};
use crate::characters::kronecker;
use crate::error::{Error, Result};
use crate::exactnum::{frac, Rat, RatFunc, RatPoly};
use crate::lattice::{canonical, GramLattice};

const ENUMERATION_GUARD: u128 = 1 << 30;
const MAX_ORDER: usize = 6;
const HELD_OUT: usize = 3;
const MAX_TERMS: usize = 400;

fn to_i128(x: &Rat) -> i128 {
    assert!(x.denom().is_one());
    x.numer().to_i128().expect("value fits in i128")
}

/// Integer data of `f(v) = q(v) − vᵀh + c` where `h = Gγ`, `c = q(γ) + n`.
struct Poly<'a> {
    gram: &'a [Vec<i64>],
    h: Vec<i128>,
    c: i128,
}

impl<'a> Poly<'a> {
    fn new(l: &'a GramLattice, gamma: &[Rat], n: &Rat) -> Result<Self> {
        let e = l.dim();
        if gamma.len() != e {
            return Err(Error::InvalidArgument(format!("γ has {} coordinates, lattice has dimension {}", gamma.len(), e)));
        }
        let mut h = Vec::with_capacity(e);
        for i in 0..e {
            let mut unit = vec![Rat::zero(); e];
            unit[i] = Rat::one();
            let x = l.bilinear(&unit, gamma);
            if !x.denom().is_one() {
                return Err(Error::InvalidArgument("γ is not in the dual lattice".into()));
            }
            h.push(to_i128(&x));
        }
        let c = l.q(gamma) + n;
        if !c.denom().is_one() {
            return Err(Error::InvalidExponent { n: format!("{}", n) });
        }
        Ok(Poly { gram: l.gram(), h, c: to_i128(&c) })
    }

    fn eval(&self, v: &[i128]) -> i128 {
        let e = v.len();
        let mut acc = self.c;
        for i in 0..e {
            if v[i] == 0 {
                continue;
            }
            acc += (self.gram[i][i] as i128 / 2) * v[i] * v[i] - self.h[i] * v[i];
            for j in i + 1..e {
                acc += self.gram[i][j] as i128 * v[i] * v[j];
            }
        }
        acc
    }

    /// Is `G v − h ≡ 0 (mod p)`?
    fn singular(&self, v: &[i128], p: i128) -> bool {
        (0..v.len()).all(|i| {
            let g: i128 = (0..v.len()).map(|j| self.gram[i][j] as i128 * v[j]).sum::<i128>() - self.h[i];
            g % p == 0
        })
    }
}

/// Advances an odometer over `{0, …, m−1}^e`; false after the last vector.
fn next_vector(v: &mut [i128], m: i128) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < m {
            return true;
        }
        *x = 0;
    }
    false
}

/// Number of `v ∈ (Z/p^ν)^e` with `q(v − γ) + n ≡ 0 (mod p^ν)`, by enumeration.
pub fn count_solutions(l: &GramLattice, gamma: &[Rat], n: &Rat, p: u64, nu: u32) -> Result<BigInt> {
    let f = Poly::new(l, gamma, n)?;
    if nu == 0 {
        return Ok(BigInt::one());
    }
    let e = l.dim() as u32;
    let size = (p as u128).checked_pow(nu * e).filter(|&s| s <= ENUMERATION_GUARD);
    if size.is_none() {
        return Err(Error::TooLarge(format!("{}^({}·{}) points to enumerate", p, nu, e)));
    }
    let m = (p as i128).pow(nu);
    let mut v = vec![0i128; e as usize];
    let mut count = 0u64;
    loop {
        if f.eval(&v) % m == 0 {
            count += 1;
        }
        if !next_vector(&mut v, m) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

/// Zeros mod `p` split by smoothness, plus the singular zeros that lift.
struct StateInfo {
    smooth: u64,
    singular_zeros: u64,
    children: Vec<usize>,
}

/// `#{u ∈ F_p^d : Q(u) = a}` for a nondegenerate form of dimension `d ≥ 0`
/// over `F_p` (`p` odd) whose Gram determinant with respect to `Q(u) = Σ a_i u_i²`
/// is `Δ = Π a_i`.
fn quadric_count(p: u64, d: u32, delta: i128, a: i128) -> u64 {
    let pi = p as i128;
    let pu = |k: u32| pi.pow(k);
    if d == 0 {
        return u64::from(a % pi == 0);
    }
    let v = if d % 2 == 1 {
        if a == 0 {
            pu(d - 1)
        } else {
            let sign = if (d - 1) / 2 % 2 == 0 { 1 } else { -1 };
            pu(d - 1) + pu((d - 1) / 2) * kronecker(modp(sign * a * delta, pi), pi) as i128
        }
    } else {
        let sign = if (d / 2) % 2 == 0 { 1 } else { -1 };
        let eta = kronecker(modp(sign * delta, pi), pi) as i128;
        if a == 0 {
            pu(d - 1) + (pi - 1) * pu(d / 2 - 1) * eta
        } else {
            pu(d - 1) - pu(d / 2 - 1) * eta
        }
    };
    v as u64
}

/// `A ∈ GL_e(F_p)` (columns) and `β` with `AᵀGA ≡ diag(β) (mod p)`, `p` odd.
fn diagonalize_mod_p(gram: &[Vec<i64>], p: i128) -> (Vec<Vec<i128>>, Vec<i128>) {
    let e = gram.len();
    let mut b: Vec<Vec<i128>> = gram.iter().map(|r| r.iter().map(|&x| modp(x as i128, p)).collect()).collect();
    let mut a: Vec<Vec<i128>> = (0..e).map(|i| (0..e).map(|j| i128::from(i == j)).collect()).collect();
    // column op c_j += f·c_k on A together with the congruence on B
    let add = |a: &mut Vec<Vec<i128>>, b: &mut Vec<Vec<i128>>, j: usize, k: usize, f: i128| {
        for row in a.iter_mut() {
            row[j] = modp(row[j] + f * row[k], p);
        }
        for row in b.iter_mut() {
            row[j] = modp(row[j] + f * row[k], p);
        }
        let rk = b[k].clone();
        for (x, y) in b[j].iter_mut().zip(rk) {
            *x = modp(*x + f * y, p);
        }
    };
    for i in 0..e {
        if b[i][i] == 0 {
            if let Some(j) = (i + 1..e).find(|&j| b[j][j] != 0) {
                add(&mut a, &mut b, i, j, 1);
                if b[i][i] == 0 {
                    // b_ii + 2b_ij + b_jj = 0 with b_jj ≠ 0: use c_i − c_j instead
                    add(&mut a, &mut b, i, j, p - 2);
                }
            } else if let Some(j) = (i + 1..e).find(|&j| b[i][j] != 0) {
                add(&mut a, &mut b, i, j, 1);
            }
        }
        if b[i][i] == 0 {
            continue;
        }
        let inv = crate::arith::mod_inverse(b[i][i], p);
        for k in i + 1..e {
            if b[k][i] != 0 {
                let f = modp(-b[k][i] * inv, p);
                add(&mut a, &mut b, k, i, f);
            }
        }
    }
    let beta = (0..e).map(|i| b[i][i]).collect();
    (a, beta)
}

/// Memoized counter for one lattice and one prime.
pub struct LocalCounter<'a> {
    lattice: &'a GramLattice,
    p: u64,
    /// Diagonalization of `G mod p` for odd `p`.
    frame: Option<(Vec<Vec<i128>>, Vec<i128>)>,
    ids: BTreeMap<(Vec<Rat>, Rat), usize>,
    states: Vec<StateInfo>,
    counts: BTreeMap<(usize, u32), BigInt>,
}

impl<'a> LocalCounter<'a> {
    pub fn new(lattice: &'a GramLattice, p: u64) -> Self {
        let frame = (p != 2).then(|| diagonalize_mod_p(lattice.gram(), p as i128));
        LocalCounter {
            lattice,
            p,
            frame,
            ids: BTreeMap::new(),
            states: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    /// Zeros of `f` mod `p` for odd `p`: with `v = Ay`, `f = Σ a_i y_i² − Σ b_i y_i + c`
    /// where `a_i = β_i/2`. Returns `(smooth, singular, singular zeros with p² | f)`.
    fn odd_prime_zeros(&self, f: &Poly) -> Result<(u64, u64, Vec<Vec<i128>>)> {
        let (a, beta) = self.frame.as_ref().expect("odd prime");
        let p = self.p as i128;
        let e = beta.len();
        let half = crate::arith::mod_inverse(2, p);
        let coef: Vec<i128> = beta.iter().map(|&x| modp(x * half, p)).collect();
        let lin: Vec<i128> = (0..e).map(|i| modp((0..e).map(|r| a[r][i] * f.h[r]).sum::<i128>(), p)).collect();
        let kernel: Vec<usize> = (0..e).filter(|&i| coef[i] == 0).collect();
        if kernel.iter().any(|&i| lin[i] != 0) {
            // linear in a kernel direction: every zero is smooth
            return Ok(((p as u64).pow(e as u32 - 1), 0, Vec::new()));
        }
        // complete squares: y_i = z_i + b_i/(2a_i)
        let mut centre = vec![0i128; e];
        let mut c = modp(f.c, p);
        let mut delta = 1i128;
        for i in 0..e {
            if coef[i] != 0 {
                let inv = crate::arith::mod_inverse(modp(2 * coef[i], p), p);
                centre[i] = modp(lin[i] * inv, p);
                c = modp(c - coef[i] * centre[i] % p * centre[i], p);
                delta = delta * coef[i] % p;
            }
        }
        let r = kernel.len() as u32;
        let d = e as u32 - r;
        let total = (p as u64).pow(r) * quadric_count(self.p, d, delta, modp(-c, p));
        if c != 0 {
            return Ok((total, 0, Vec::new()));
        }
        if (p as u128).pow(r) > ENUMERATION_GUARD {
            return Err(Error::TooLarge(format!("{}^{} singular points", p, r)));
        }
        let sing = (p as u64).pow(r);
        let mut lifting = Vec::new();
        let mut ky = vec![0i128; kernel.len()];
        loop {
            let mut y = centre.clone();
            for (slot, &i) in kernel.iter().enumerate() {
                y[i] = ky[slot];
            }
            let v: Vec<i128> = (0..e).map(|row| modp((0..e).map(|j| a[row][j] * y[j]).sum::<i128>(), p)).collect();
            debug_assert!(f.singular(&v, p) && f.eval(&v) % p == 0);
            if f.eval(&v) % (p * p) == 0 {
                lifting.push(v);
            }
            if !next_vector(&mut ky, p) {
                break;
            }
        }
        Ok((total - sing, sing, lifting))
    }

    fn state(&mut self, gamma: &[Rat], n: &Rat) -> Result<usize> {
        let key = (canonical(gamma), n.clone());
        if let Some(&id) = self.ids.get(&key) {
            return Ok(id);
        }
        let f = Poly::new(self.lattice, &key.0, n)?;
        let p = self.p as i128;
        let e = self.lattice.dim();
        let (smooth, singular_zeros, children_data) = if self.frame.is_some() {
            self.odd_prime_zeros(&f)?
        } else {
            let mut children_data: Vec<Vec<i128>> = Vec::new();
            let mut v = vec![0i128; e];
            let (mut smooth, mut sing) = (0u64, 0u64);
            loop {
                let fv = f.eval(&v);
                if fv % p == 0 {
                    if f.singular(&v, p) {
                        sing += 1;
                        if fv % (p * p) == 0 {
                            children_data.push(v.clone());
                        }
                    } else {
                        smooth += 1;
                    }
                }
                if !next_vector(&mut v, p) {
                    break;
                }
            }
            (smooth, sing, children_data)
        };
        let id = self.states.len();
        self.ids.insert(key.clone(), id);
        self.states.push(StateInfo {
            smooth,
            singular_zeros,
            children: Vec::new(),
        });
        let pr = Rat::from_integer(BigInt::from(self.p));
        let n_child = n / (&pr * &pr);
        let mut children = Vec::with_capacity(children_data.len());
        for v0 in children_data {
            let g: Vec<Rat> = key.0.iter().zip(&v0).map(|(x, v)| (x - Rat::from_integer(BigInt::from(*v))) / &pr).collect();
            children.push(self.state(&g, &n_child)?);
        }
        self.states[id].children = children;
        Ok(id)
    }

    fn count_state(&mut self, id: usize, nu: u32) -> BigInt {
        match nu {
            0 => return BigInt::one(),
            1 => return BigInt::from(self.states[id].smooth + self.states[id].singular_zeros),
            _ => {}
        }
        if let Some(c) = self.counts.get(&(id, nu)) {
            return c.clone();
        }
        let e = self.lattice.dim() as u32;
        let p = BigInt::from(self.p);
        let mut total = BigInt::from(self.states[id].smooth) * p.pow((e - 1) * (nu - 1));
        let children = self.states[id].children.clone();
        let pe = p.pow(e);
        for c in children {
            total += &pe * self.count_state(c, nu - 2);
        }
        self.counts.insert((id, nu), total.clone());
        total
    }

    /// `N(p^ν)` for `ν = 0..=nu_max`.
    pub fn counts(&mut self, gamma: &[Rat], n: &Rat, nu_max: u32) -> Result<Vec<BigInt>> {
        let id = self.state(gamma, n)?;
        Ok((0..=nu_max).map(|nu| self.count_state(id, nu)).collect())
    }
}

/// `N(p^ν)` for `ν = 0..=nu_max` via the lifting recursion.
pub fn lifted_counts(l: &GramLattice, gamma: &[Rat], n: &Rat, p: u64, nu_max: u32) -> Result<Vec<BigInt>> {
    LocalCounter::new(l, p).counts(gamma, n, nu_max)
}

/// `Σ N(p^ν) t^ν` as a rational function in `t = p^{−s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalEulerFactor {
    pub p: u64,
    pub f: RatFunc,
    pub order: usize,
    pub preperiod: usize,
    pub counts: Vec<BigInt>,
}

/// Shortest linear recurrence of `s` over Q: returns `C = 1 + c₁x + … + c_L x^L`
/// with `Σ c_i s_{k−i} = 0` for all `L ≤ k < len`.
pub fn berlekamp_massey(s: &[Rat]) -> Vec<Rat> {
    let mut c = vec![Rat::one()];
    let mut b = vec![Rat::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = Rat::one();
    for k in 0..s.len() {
        let mut d = s[k].clone();
        for i in 1..=l {
            d += &c[i] * &s[k - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &bd;
        let old = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, Rat::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &coef * bi;
        }
        if 2 * l <= k {
            l = k + 1 - l;
            b = old;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, Rat::zero());
    c
}

fn satisfies(c: &[Rat], s: &[Rat]) -> bool {
    let l = c.len() - 1;
    (l..s.len()).all(|k| {
        let mut acc = Rat::zero();
        for (i, ci) in c.iter().enumerate() {
            acc += ci * &s[k - i];
        }
        acc.is_zero()
    })
}

/// True when `den` divides a product of factors `1 − p^j t` and `1 − p^j t²`.
fn denominator_is_admissible(den: &RatPoly, p: u64, e: usize) -> bool {
    let mut d = den.monic();
    let span = 2 * e as i64 + 4;
    let mut candidates = Vec::new();
    for j in -span..=span {
        let pj = rat_pow(p as i64, j);
        candidates.push(RatPoly::one_minus(pj.clone(), 1));
        candidates.push(RatPoly::one_minus(-pj.clone(), 1));
        candidates.push(RatPoly::one_minus(pj, 2));
    }
    'outer: while d.degree().unwrap_or(0) > 0 {
        for cand in &candidates {
            let (q, r) = d.div_rem(cand);
            if r.is_zero() {
                d = q;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Finds the generating function of `counts` if a verified recurrence exists.
fn fit_generating_function(counts: &[BigInt], p: u64, e: usize) -> Option<(RatFunc, usize, usize)> {
    let s: Vec<Rat> = counts.iter().cloned().map(Rat::from_integer).collect();
    let v = s.len();
    for pre in 0..v.saturating_sub(HELD_OUT + 6) {
        let tail = &s[pre..];
        let fit = &tail[..tail.len() - HELD_OUT];
        let c = berlekamp_massey(fit);
        let l = c.len() - 1;
        if l > MAX_ORDER || 2 * l > fit.len() || !satisfies(&c, tail) {
            continue;
        }
        // F = (C·N mod t^{pre+L}) / C
        let cpoly = RatPoly::new(c);
        let npoly = RatPoly::new(s.clone());
        let num = (&cpoly * &npoly).truncate(pre + l);
        let f = RatFunc::new(num, cpoly);
        if f.taylor(v).ok()? != s || !denominator_is_admissible(f.den(), p, e) {
            continue;
        }
        return Some((f, l, pre));
    }
    None
}

fn initial_depth(l: &GramLattice, gamma: &[Rat], n: &Rat, p: u64) -> u32 {
    let mut x = BigInt::from(4) * BigInt::from(l.disc_order());
    if !n.is_zero() {
        x *= n.numer().abs() * n.denom();
    }
    let d = gamma.iter().fold(BigInt::one(), |acc, g| num_integer::Integer::lcm(&acc, g.denom()));
    x *= &d * &d;
    2 * valuation(p, &x) + 14
}

/// The Euler factor `L_p(n, γ, s)` as a reduced rational function of `t = p^{−s}`.
pub fn euler_factor(l: &GramLattice, gamma: &[Rat], n: &Rat, p: u64) -> Result<LocalEulerFactor> {
    let mut counter = LocalCounter::new(l, p);
    let mut depth = initial_depth(l, gamma, n, p) as usize;
    loop {
        let counts = counter.counts(gamma, n, depth as u32)?;
        if let Some((f, order, preperiod)) = fit_generating_function(&counts, p, l.dim()) {
            return Ok(LocalEulerFactor { p, f, order, preperiod, counts });
        }
        if depth >= MAX_TERMS {
            return Err(Error::NoRecurrenceFound { p, terms: depth + 1 });
        }
        depth = (2 * depth).min(MAX_TERMS);
    }
}

/// `L_p(n, γ, w) = F(p^{−w})`.
pub fn evaluate_euler(f: &LocalEulerFactor, w: i64) -> Result<Rat> {
    f.f.eval(&rat_pow(f.p as i64, -w))
}

/// `lim_{s→0} (1 − p^{α−2s}) L_p(b + 2s)`: with `u = p^{−2s}` this is the value
/// at `u = 1` of the reduced rational function `(1 − p^α u)·F(p^{−b} u)`.
pub fn regularized_limit(f: &LocalEulerFactor, alpha: i64, b: i64) -> Result<Rat> {
    regularized_limit_with(f, alpha, b, &RatFunc::constant(Rat::one()))
}

/// As [`regularized_limit`], with a further factor `extra(u)` taken inside the
/// limit (e.g. Euler factors of an imprimitive L-function that vanish at
/// `u = 1` and cancel a remaining pole).
pub fn regularized_limit_with(f: &LocalEulerFactor, alpha: i64, b: i64, extra: &RatFunc) -> Result<Rat> {
    let p = f.p as i64;
    let g = f.f.rescale_var(&rat_pow(p, -b)).mul_poly(&RatPoly::one_minus(rat_pow(p, alpha), 1)).mul(extra);
    g.eval(&Rat::one()).map_err(|_| Error::PolePersists { p: f.p })
}

/// Closed form of `L_p(n, γ, s)` at a prime `p ∤ 2·det`, with `p ∤ n` when
/// `n ≠ 0`. `None` at the remaining primes.
///
/// With `t = p^{−s}` and `k` any weight allowed by the signature:
/// even `e`: `(1 − χ_{D'}(p) p^{e/2−1} t)/(1 − p^{e−1} t)` for `n ≠ 0` and
/// `(1 − χ p^{e/2−1} t)/((1 − p^{e−1} t)(1 − χ p^{e/2} t))` for `n = 0`, where
/// `D' = (−1)^k |det|`; odd `e`: `(1 + χ_{𝒟'}(p) p^{(e−1)/2} t)/(1 − p^{e−1} t)`
/// with `𝒟' = 2n d_γ² (−1)^{k−1/2} |det|`, and
/// `(1 − p^{e−1} t²)/((1 − p^{e−1} t)(1 − p^e t²))` for `n = 0`.
pub fn generic_euler_factor(l: &GramLattice, gamma: &[Rat], n: &Rat, p: u64) -> Option<RatFunc> {
    let det = l.disc_order() as i128;
    if p == 2 || det % p as i128 == 0 || (!n.is_zero() && valuation_rat(p, n) != 0) {
        return None;
    }
    let e = l.dim() as i64;
    let (bp, bm) = l.signature();
    let diff = bm as i64 - bp as i64;
    let pp = p as i64;
    let pw = |k: i64| rat_pow(pp, k);
    let poly = |c: &[Rat]| RatPoly::new(c.to_vec());
    let one = Rat::one();
    let zero = Rat::zero();
    if e % 2 == 0 {
        let sign = if diff.rem_euclid(4) == 0 { 1 } else { -1 };
        let chi = Rat::from_integer(BigInt::from(kronecker(4 * sign * det, p as i128)));
        let num = poly(&[one.clone(), -&chi * pw(e / 2 - 1)]);
        let mut den = poly(&[one.clone(), -pw(e - 1)]);
        if n.is_zero() {
            den = &den * &poly(&[one, -&chi * pw(e / 2)]);
        }
        Some(RatFunc::new(num, den))
    } else if n.is_zero() {
        let num = poly(&[one.clone(), zero.clone(), -pw(e - 1)]);
        let den = &poly(&[one.clone(), -pw(e - 1)]) * &poly(&[one, zero, -pw(e)]);
        Some(RatFunc::new(num, den))
    } else {
        let d = gamma.iter().fold(BigInt::one(), |acc, g| num_integer::Integer::lcm(&acc, g.denom()));
        let sign = if (diff - 1).rem_euclid(4) == 0 { 1 } else { -1 };
        let x = n * Rat::from_integer(BigInt::from(2 * sign * det) * &d * &d);
        let x = x.numer().to_i128().expect("discriminant fits in i128");
        let chi = Rat::from_integer(BigInt::from(kronecker(4 * x, p as i128)));
        let num = poly(&[one.clone(), chi * pw((e - 1) / 2)]);
        let den = poly(&[one, -pw(e - 1)]);
        Some(RatFunc::new(num, den))
    }
}

/// True when `n + q(γ) ∈ Z`.
pub fn exponent_is_valid(l: &GramLattice, gamma: &[Rat], n: &Rat) -> bool {
    frac(&(l.q(gamma) + n)).is_zero()
}
