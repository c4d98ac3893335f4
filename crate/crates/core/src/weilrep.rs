//! Exact matrices of the Weil representation `ρ` and its dual `ρ*` on
//! `C[Λ'/Λ]`, for words in `S`, `T` and their inverses.
//!
//! Entries live in `Q(ζ_M)` with `M = lcm(8, N, 4s)`, where `N` is the level
//! and `s` the squarefree part of `d = |Λ'/Λ|`; `√d` is embedded through
//! quadratic Gauss sums, so every entry has a unique reduced representation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exactnum::{Rat, RatPoly};
use crate::lattice::DiscriminantForm;

/// `Φ_M` by dividing `x^M − 1` by `Φ_d` for the proper divisors `d | M`.
pub fn cyclotomic_polynomial(m: u64) -> RatPoly {
    let mut xm = vec![Rat::zero(); m as usize + 1];
    xm[0] = -Rat::one();
    xm[m as usize] = Rat::one();
    let mut p = RatPoly::new(xm);
    for d in crate::arith::divisors(m) {
        if d < m {
            p = p.div_rem(&cyclotomic_polynomial(d)).0;
        }
    }
    p
}

/// The cyclotomic field `Q(ζ_M)` together with a fixed square root of `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycField {
    m: u64,
    d: u64,
    /// `x^j mod Φ_M` for `0 ≤ j < M`.
    powers: Vec<Vec<Rat>>,
    sqrt_d: CycNum,
}

/// An element of `Q(ζ_M)` in the power basis of `ζ_M`, reduced modulo `Φ_M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycNum {
    c: Vec<Rat>,
}

impl CycField {
    /// Requires `8 | m` and `4s | m` for the squarefree part `s` of `d`.
    pub fn new(m: u64, d: u64) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.degree().expect("nonzero cyclotomic polynomial");
        let powers = (0..m as usize)
            .map(|j| {
                let mut c = vec![Rat::zero(); j + 1];
                c[j] = Rat::one();
                let r = RatPoly::new(c).div_rem(&phi).1;
                (0..deg).map(|i| r.coeff(i)).collect()
            })
            .collect();
        let mut f = CycField { m, d, powers, sqrt_d: CycNum { c: Vec::new() } };
        f.sqrt_d = f.square_root(d);
        debug_assert_eq!(f.mul(&f.sqrt_d, &f.sqrt_d), f.rational(&Rat::from_integer(BigInt::from(d))));
        f
    }

    /// `√n` for `n ≥ 1`, from `√2 = ζ₈ + ζ₈⁻¹` and the quadratic Gauss sums
    /// `Σ_a (a/p) ζ_p^a = √p` resp. `i√p`.
    fn square_root(&self, n: u64) -> CycNum {
        let (outer, core) = crate::arith::squarefree_split(n as u128);
        let mut out = self.rational(&Rat::from_integer(BigInt::from(outer)));
        let step = |k: u64| self.m / k;
        for p in crate::arith::prime_divisors(core) {
            assert_eq!(self.m % (4 * p), 0, "√{} needs 4·{} | M = {}", n, p, self.m);
            let root = if p == 2 {
                self.add(&self.zeta(step(8) as i64), &self.zeta(-(step(8) as i64)))
            } else {
                let mut g = self.zero();
                for a in 1..p {
                    let chi = crate::characters::kronecker(a as i128, p as i128);
                    let z = self.zeta((a * step(p)) as i64);
                    g = self.add(&g, &self.scale(&z, &Rat::from_integer(BigInt::from(chi))));
                }
                if p % 4 == 1 { g } else { self.mul(&g, &self.zeta(-((step(4)) as i64))) }
            };
            out = self.mul(&out, &root);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    fn dim(&self) -> usize {
        self.powers[0].len()
    }

    pub fn zero(&self) -> CycNum {
        CycNum { c: vec![Rat::zero(); self.dim()] }
    }

    pub fn one(&self) -> CycNum {
        self.zeta(0)
    }

    pub fn rational(&self, r: &Rat) -> CycNum {
        let mut out = self.zero();
        out.c[0] = r.clone();
        out
    }

    /// `ζ_M^k`.
    pub fn zeta(&self, k: i64) -> CycNum {
        let j = k.rem_euclid(self.m as i64) as usize;
        CycNum { c: self.powers[j].clone() }
    }

    /// `e(x) = exp(2πix)` for `x ∈ (1/M)Z`.
    pub fn e(&self, x: &Rat) -> CycNum {
        let k = x * Rat::from_integer(BigInt::from(self.m));
        assert!(k.is_integer(), "e({}) is not an M-th root of unity for M = {}", x, self.m);
        self.zeta(k.to_integer().mod_floor(&BigInt::from(self.m)).to_i64().unwrap())
    }

    /// `r·√d`.
    pub fn sqrt_d(&self, r: Rat) -> CycNum {
        self.scale(&self.sqrt_d, &r)
    }

    pub fn scale(&self, x: &CycNum, r: &Rat) -> CycNum {
        CycNum { c: x.c.iter().map(|c| c * r).collect() }
    }

    pub fn add(&self, x: &CycNum, y: &CycNum) -> CycNum {
        CycNum { c: x.c.iter().zip(&y.c).map(|(u, v)| u + v).collect() }
    }

    pub fn mul(&self, x: &CycNum, y: &CycNum) -> CycNum {
        let mut acc = vec![Rat::zero(); self.dim()];
        for (i, u) in x.c.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (j, v) in y.c.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let c = u * v;
                let row = &self.powers[(i + j) % self.m as usize];
                for (t, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        acc[t] += &c * r;
                    }
                }
            }
        }
        CycNum { c: acc }
    }

    /// Complex conjugation `ζ_M ↦ ζ_M^{−1}`.
    pub fn conj(&self, x: &CycNum) -> CycNum {
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, c) in x.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.powers[(self.m as usize - i) % self.m as usize];
            for (t, r) in row.iter().enumerate() {
                out[t] += c * r;
            }
        }
        CycNum { c: out }
    }
}

impl CycNum {
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| alloc::format!("({})*z^{}", c, i))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    SInv,
    T,
    TInv,
}

impl Generator {
    /// The image under `M ↦ M̃ = [[a, −b], [−c, d]]`.
    pub fn tilde(self) -> Self {
        match self {
            Generator::S => Generator::SInv,
            Generator::SInv => Generator::S,
            Generator::T => Generator::TInv,
            Generator::TInv => Generator::T,
        }
    }
}

/// A matrix indexed by the canonical cosets of a discriminant form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    field: CycField,
    n: usize,
    entries: Vec<CycNum>,
    pub dual: bool,
}

impl RepMatrix {
    pub fn identity(field: &CycField, n: usize, dual: bool) -> Self {
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = field.one();
        }
        RepMatrix { field: field.clone(), n, entries, dual }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    /// Coefficient of `e_row` in the image of `e_col`.
    pub fn entry(&self, row: usize, col: usize) -> &CycNum {
        &self.entries[row * self.n + col]
    }

    pub fn mul(&self, o: &RepMatrix) -> RepMatrix {
        let n = self.n;
        let mut entries = vec![self.field.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] = self.field.add(&entries[i * n + j], &self.field.mul(a, b));
                    }
                }
            }
        }
        RepMatrix { field: self.field.clone(), n, entries, dual: self.dual }
    }

    pub fn pow(&self, k: u32) -> RepMatrix {
        (0..k).fold(RepMatrix::identity(&self.field, self.n, self.dual), |acc, _| acc.mul(self))
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> RepMatrix {
        RepMatrix {
            field: self.field.clone(),
            n: self.n,
            entries: self.entries.iter().map(|x| self.field.conj(x)).collect(),
            dual: !self.dual,
        }
    }

    pub fn conj_transpose(&self) -> RepMatrix {
        let c = self.conj();
        let n = self.n;
        let entries = (0..n * n).map(|t| c.entries[(t % n) * n + t / n].clone()).collect();
        RepMatrix { entries, ..c }
    }

    pub fn is_identity(&self) -> bool {
        *self == RepMatrix::identity(&self.field, self.n, self.dual)
    }

    pub fn is_unitary(&self) -> bool {
        self.conj_transpose().mul(self).entries == RepMatrix::identity(&self.field, self.n, self.dual).entries
    }

    /// Same entries, ignoring which representation the matrix is tagged with.
    pub fn same_entries(&self, o: &RepMatrix) -> bool {
        self.entries == o.entries
    }
}

/// The coefficient field for a discriminant form.
pub fn field_for(df: &DiscriminantForm) -> CycField {
    let d = df.len() as u64;
    let core = crate::arith::squarefree_split(d as u128).1 as u64;
    CycField::new(df.level().lcm(&8).lcm(&(4 * core)), d)
}

/// `ρ(T) e_γ = e(q(γ)) e_γ`, `ρ(S) e_γ = √i^{b⁻−b⁺}/√d Σ_β e(−⟨γ,β⟩) e_β`,
/// and their inverses; `dual` conjugates every entry.
pub fn rho_generator(df: &DiscriminantForm, gen: Generator, dual: bool) -> RepMatrix {
    let field = field_for(df);
    let n = df.len();
    let (plus, minus) = df.lattice().signature();
    let mut entries = vec![field.zero(); n * n];
    match gen {
        Generator::T | Generator::TInv => {
            let s = if gen == Generator::T { Rat::one() } else { -Rat::one() };
            for i in 0..n {
                entries[i * n + i] = field.e(&(df.q(i) * &s));
            }
        }
        Generator::S | Generator::SInv => {
            // √i = ζ_8 = ζ_M^{M/8}; S⁻¹ uses the conjugate phase and pairing
            let s: i64 = if gen == Generator::S { 1 } else { -1 };
            let phase = field.zeta(s * (minus as i64 - plus as i64) * (field.order() / 8) as i64);
            let front = field.mul(&phase, &field.sqrt_d(Rat::new(BigInt::one(), BigInt::from(n))));
            for g in 0..n {
                for b in 0..n {
                    let x = -df.pairing(g, b) * Rat::from_integer(BigInt::from(s));
                    entries[b * n + g] = field.mul(&front, &field.e(&x));
                }
            }
        }
    }
    let m = RepMatrix { field, n, entries, dual: false };
    if dual { m.conj() } else { m }
}

/// `ρ(w₁ w₂ ⋯)` (or `ρ*`) as the product of generator matrices, left to right.
pub fn rho_word(df: &DiscriminantForm, word: &[Generator], dual: bool) -> RepMatrix {
    assert!(!word.is_empty(), "empty word");
    let gens: Vec<RepMatrix> = [Generator::S, Generator::SInv, Generator::T, Generator::TInv]
        .iter()
        .map(|&g| rho_generator(df, g, dual))
        .collect();
    let pick = |g: Generator| &gens[g as usize];
    let mut acc = pick(word[0]).clone();
    for &g in &word[1..] {
        acc = acc.mul(pick(g));
    }
    acc
}

/// `ρ(Z) e_γ = i^{b⁻−b⁺} e_{−γ}` for `Z = S²`, built directly.
pub fn rho_z_expected(df: &DiscriminantForm, dual: bool) -> RepMatrix {
    let field = field_for(df);
    let n = df.len();
    let (plus, minus) = df.lattice().signature();
    let mut entries = vec![field.zero(); n * n];
    let phase = field.zeta(2 * (minus as i64 - plus as i64) * (field.order() / 8) as i64);
    for g in 0..n {
        entries[df.neg(g) * n + g] = phase.clone();
    }
    let m = RepMatrix { field, n, entries, dual: false };
    if dual { m.conj() } else { m }
}
