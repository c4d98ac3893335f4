//! Independent ground truth: lattice-point enumeration, Hurwitz class numbers
//! from reduced forms, and classical divisor sums. Nothing here touches the
//! local-factor machinery.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::lattice::{DiscriminantForm, GramLattice};
use crate::series::{exponents_upto, VVQSeries, Weight};

/// Enumeration stops with `TooLarge` past this many lattice points.
pub const MAX_POINTS: u64 = 10_000_000;

/// `−G = L·diag(d)·Lᵀ` over Q with `L` unit lower triangular; fails unless
/// every pivot is positive.
fn ldl_of_negated(l: &GramLattice) -> Result<(Vec<Vec<Rat>>, Vec<Rat>)> {
    let e = l.dim();
    let p: Vec<Vec<Rat>> = l.gram().iter().map(|r| r.iter().map(|&x| Rat::from_integer(BigInt::from(-x))).collect()).collect();
    let mut low = vec![vec![Rat::zero(); e]; e];
    let mut d = vec![Rat::zero(); e];
    for i in 0..e {
        let mut di = p[i][i].clone();
        for k in 0..i {
            di -= &low[i][k] * &low[i][k] * &d[k];
        }
        if !di.is_positive() {
            return Err(Error::NotDefinite);
        }
        low[i][i] = Rat::one();
        for j in i + 1..e {
            let mut s = p[j][i].clone();
            for k in 0..i {
                s -= &low[j][k] * &low[i][k] * &d[k];
            }
            low[j][i] = s / &di;
        }
        d[i] = di;
    }
    Ok((low, d))
}

struct Enumerator<'a> {
    low: &'a [Vec<Rat>],
    d: &'a [Rat],
    residues: Vec<i64>,
    modulus: i64,
    neg_gram: Vec<Vec<i128>>,
    w: Vec<i64>,
    counts: Vec<u64>,
    visited: u64,
}

impl Enumerator<'_> {
    /// Fixes `w_i` for `i = level, level−1, …, 0` with `Σ d_k (w_k + Σ_{j>k} L_jk w_j)² ≤ budget`.
    fn run(&mut self, level: usize, budget: Rat) -> Result<()> {
        let mut centre = Rat::zero();
        for j in level + 1..self.w.len() {
            centre -= &self.low[j][level] * Rat::from_integer(BigInt::from(self.w[j]));
        }
        let m = self.modulus;
        let r = self.residues[level];
        // nearest w ≡ r (mod m) to the centre, then walk outwards
        let k = (centre.clone() - Rat::from_integer(BigInt::from(r))) / Rat::from_integer(BigInt::from(m));
        let start = r + m * k.round().to_integer().to_i64().expect("coordinate fits in i64");
        for dir in [1i64, -1] {
            let mut w = if dir == 1 { start } else { start - m };
            loop {
                let off = Rat::from_integer(BigInt::from(w)) - &centre;
                let used = &self.d[level] * &off * &off;
                if used > budget {
                    break;
                }
                self.w[level] = w;
                if level == 0 {
                    self.leaf()?;
                } else {
                    self.run(level - 1, &budget - used)?;
                }
                w += dir * m;
            }
        }
        Ok(())
    }

    fn leaf(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > MAX_POINTS {
            return Err(Error::TooLarge(alloc::format!("more than {} lattice points", MAX_POINTS)));
        }
        let mut norm: i128 = 0;
        for (i, row) in self.neg_gram.iter().enumerate() {
            for (j, &g) in row.iter().enumerate() {
                norm += g * self.w[i] as i128 * self.w[j] as i128;
            }
        }
        self.counts[norm as usize] += 1;
        Ok(())
    }
}

/// `Σ_γ Σ_n #{v ∈ γ + Λ : −q(v) = n} q^n e_γ` for a negative definite lattice.
pub fn theta_coeffs(l: &GramLattice, prec: &Rat) -> Result<VVQSeries> {
    let (low, d) = ldl_of_negated(l)?;
    let df = DiscriminantForm::new(l)?;
    let e = l.dim();
    let neg_gram: Vec<Vec<i128>> = l.gram().iter().map(|r| r.iter().map(|&x| -(x as i128)).collect()).collect();
    let mut series = VVQSeries::new(Weight::from_twice(e as i64)?, &df, prec.clone());
    for (ci, gamma) in df.elements().iter().enumerate() {
        let m = crate::eisenstein::coset_denominator(gamma) as i64;
        let residues: Vec<i64> = gamma.iter().map(|g| (g * Rat::from_integer(BigInt::from(m))).to_integer().to_i64().unwrap()).collect();
        // w = m·v has wᵀ(−G)w = 2m²·(−q(v)) ≤ 2m²·prec
        let scale = Rat::from_integer(BigInt::from(2 * m * m));
        let budget = prec * &scale;
        let cap = budget.floor().to_integer().to_usize().ok_or_else(|| Error::TooLarge("theta precision".into()))?;
        let mut en = Enumerator {
            low: &low,
            d: &d,
            residues,
            modulus: m,
            neg_gram: neg_gram.clone(),
            w: vec![0; e],
            counts: vec![0; cap + 1],
            visited: 0,
        };
        // the LDL form is scaled by m² in w-coordinates
        en.run(e - 1, budget)?;
        let counts = en.counts;
        for n in exponents_upto(df.q(ci), prec) {
            let idx = (&n * &scale).to_integer().to_usize().unwrap();
            series.insert(ci, n, Rat::from_integer(BigInt::from(counts[idx])))?;
        }
    }
    Ok(series)
}

/// Hurwitz class number `H(n)`: reduced forms of discriminant `−n`, weighted
/// `1/2` for multiples of `x² + y²` and `1/3` for multiples of `x² + xy + y²`.
/// `H(0) = −1/12`; zero off the integers and for `n ≡ 1, 2 (mod 4)`.
pub fn hurwitz(n: &Rat) -> Rat {
    if !n.is_integer() || n.is_negative() {
        return Rat::zero();
    }
    let n = n.to_integer().to_u64().expect("hurwitz argument fits in u64");
    if n == 0 {
        return Rat::new(BigInt::from(-1), BigInt::from(12));
    }
    if n % 4 == 1 || n % 4 == 2 {
        return Rat::zero();
    }
    let mut six_h: u64 = 0;
    // b² + n = 4ac with |b| ≤ a ≤ c forces 3a² ≤ n
    let mut a: u64 = 1;
    while 3 * a * a <= n {
        let mut b: i64 = -(a as i64) + 1;
        while b <= a as i64 {
            let bb = (b * b) as u64;
            if (bb + n) % (4 * a) == 0 {
                let c = (bb + n) / (4 * a);
                if c >= a && !(c == a && b < 0) {
                    six_h += if b == 0 && a == c {
                        3
                    } else if b as u64 == a && a == c {
                        2
                    } else {
                        6
                    };
                }
            }
            b += 1;
        }
        a += 1;
    }
    Rat::new(BigInt::from(six_h), BigInt::from(6))
}

/// `(σ₀(n), σ₁(n), σ₁ over odd divisors)`.
pub fn divisor_sums(n: u64) -> (u64, u64, u64) {
    let ds = divisors(n);
    let s1 = ds.iter().sum();
    let odd = ds.iter().filter(|d| *d % 2 == 1).sum();
    (ds.len() as u64, s1, odd)
}

/// `4(d₁(n) − d₃(n))`, divisors counted by residue mod 4.
pub fn r2_divisor_formula(n: u64) -> i64 {
    divisors(n)
        .into_iter()
        .map(|d| match d % 4 {
            1 => 4,
            3 => -4,
            _ => 0,
        })
        .sum()
}

/// Jacobi: `r₄(n) = 8σ₁(n)` for odd `n` and `24σ₁^{odd}(n)` for even `n`.
pub fn r4_jacobi(n: u64) -> u64 {
    let (_, s1, odd) = divisor_sums(n);
    if n % 2 == 1 {
        8 * s1
    } else {
        24 * odd
    }
}

/// The Gram matrix `diag(2, 2, −2)` of `x² + y² − z²`.
pub fn example16_lattice() -> GramLattice {
    GramLattice::new(vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, -2]]).expect("valid Gram matrix")
}

/// The unary theta basis `(ϑ₁, ϑ₂)` of weight 1/2 for `x² + y² − z²`:
/// `Σ q^{k²}` on `(0,0,0)` and `(1/2,0,1/2)` resp. `(0,1/2,1/2)`, and
/// `Σ q^{(k+1/2)²}` on `(0,1/2,0)`, `(1/2,1/2,1/2)` resp. `(1/2,0,0)`, `(1/2,1/2,1/2)`.
pub fn example16_basis(prec: &Rat) -> Result<(VVQSeries, VVQSeries)> {
    let df = DiscriminantForm::new(&example16_lattice())?;
    let half = || Rat::new(BigInt::one(), BigInt::from(2));
    let z = Rat::zero;
    let whole = theta_unary(false, prec);
    let shifted = theta_unary(true, prec);
    let build = |integral: [Vec<Rat>; 2], quarter: [Vec<Rat>; 2]| -> Result<VVQSeries> {
        let mut s = VVQSeries::new_weil(Weight::from_twice(1)?, &df, prec.clone());
        for (cosets, coeffs) in [(integral, &whole), (quarter, &shifted)] {
            for g in cosets {
                let i = df.index_of(&g).expect("coset of the discriminant form");
                for (n, c) in coeffs.iter() {
                    s.insert(i, n.clone(), Rat::from_integer(BigInt::from(*c)))?;
                }
            }
        }
        Ok(s)
    };
    let t1 = build([vec![z(), z(), z()], vec![half(), z(), half()]], [vec![z(), half(), z()], vec![half(), half(), half()]])?;
    let t2 = build([vec![z(), z(), z()], vec![z(), half(), half()]], [vec![half(), z(), z()], vec![half(), half(), half()]])?;
    Ok((t1, t2))
}

/// `Σ_{k ∈ Z} q^{k²}` or `Σ_{k ∈ Z} q^{(k+1/2)²}` up to `prec`.
fn theta_unary(shift: bool, prec: &Rat) -> BTreeMap<Rat, u64> {
    let mut out = BTreeMap::new();
    for k in 0i64.. {
        let x = if shift {
            Rat::new(BigInt::from((2 * k + 1) * (2 * k + 1)), BigInt::from(4))
        } else {
            Rat::from_integer(BigInt::from(k * k))
        };
        if &x > prec {
            break;
        }
        out.insert(x, if k == 0 && !shift { 1 } else { 2 });
    }
    out
}
