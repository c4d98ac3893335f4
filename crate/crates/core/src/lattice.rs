//! Even lattices given by Gram matrices and their discriminant forms.
//!
//! Coordinates are always with respect to the basis the Gram matrix is written
//! in. The dual lattice is `{x ∈ Q^e : Gx ∈ Z^e}`; a coset of `Λ'/Λ` is
//! represented by the unique vector with every coordinate in `[0, 1)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{frac, Rat};

pub const MAX_DIM: usize = 8;
pub const MAX_DET: u64 = 1_000_000;

pub type IntMatrix = Vec<Vec<i128>>;

/// An even, nondegenerate integral lattice `(Z^e, G)` with `q(x) = xᵀGx/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
    det: i128,
    sig: (usize, usize),
}

impl GramLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let e = gram.len();
        if e == 0 {
            return Err(Error::InvalidGram("empty matrix".into()));
        }
        if e > MAX_DIM {
            return Err(Error::TooLarge(format!("dimension {} exceeds {}", e, MAX_DIM)));
        }
        for (i, row) in gram.iter().enumerate() {
            if row.len() != e {
                return Err(Error::InvalidGram(format!("row {} has length {}, expected {}", i, row.len(), e)));
            }
            for (j, &x) in row.iter().enumerate() {
                if gram[j][i] != x {
                    return Err(Error::InvalidGram(format!("not symmetric at ({}, {})", i, j)));
                }
            }
        }
        for (i, row) in gram.iter().enumerate() {
            if row[i] % 2 != 0 {
                return Err(Error::NotEven(row[i]));
            }
        }
        let big: IntMatrix = gram.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let det = determinant(&big);
        if det == 0 {
            return Err(Error::InvalidGram("determinant is zero".into()));
        }
        let sig = signature_of(&gram);
        Ok(GramLattice { gram, det, sig })
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn det(&self) -> i128 {
        self.det
    }

    /// `|Λ'/Λ| = |det G|`.
    pub fn disc_order(&self) -> u64 {
        self.det.unsigned_abs() as u64
    }

    /// `(b⁺, b⁻)`.
    pub fn signature(&self) -> (usize, usize) {
        self.sig
    }

    pub fn negated(&self) -> GramLattice {
        let g = self.gram.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        GramLattice::new(g).expect("negation preserves validity")
    }

    /// `xᵀGy` for rational vectors.
    pub fn bilinear(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for (j, yj) in y.iter().enumerate() {
                let g = self.gram[i][j];
                if g != 0 {
                    row += yj * Rat::from_integer(BigInt::from(g));
                }
            }
            acc += xi * row;
        }
        acc
    }

    /// `q(x) = xᵀGx/2`.
    pub fn q(&self, x: &[Rat]) -> Rat {
        self.bilinear(x, x) / Rat::from_integer(BigInt::from(2))
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1i128;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d: i128 = (&a[n - 1][n - 1]).try_into().expect("determinant fits in i128");
    sign * d
}

/// Signature of a symmetric matrix by rational congruence diagonalization.
pub fn signature_of(gram: &[Vec<i64>]) -> (usize, usize) {
    let n = gram.len();
    let mut a: Vec<Vec<Rat>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect())
        .collect();
    let (mut plus, mut minus) = (0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k ← e_k + e_j: the new diagonal entry is 2a_kj ≠ 0.
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                continue; // degenerate direction
            }
        }
        let piv = a[k][k].clone();
        if piv.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &piv;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
            for r in 0..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
    }
    (plus, minus)
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

/// Smith normal form: returns `(U, D, V)` with `U·M·V = D`, `U`, `V`
/// unimodular and `D = diag(d_1, …)` with `d_1 | d_2 | …`, `d_i > 0`.
pub fn smith_normal_form(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    let n = m.len();
    if determinant(m) == 0 {
        return Err(Error::SingularMatrix);
    }
    let mut a = m.clone();
    let mut u = identity(n);
    let mut v = identity(n);
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let (pi, pj) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs())
                .expect("nonsingular");
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut().chain(v.iter_mut()) {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let f = Integer::div_floor(&a[i][t], &p);
                if f != 0 {
                    for c in 0..n {
                        a[i][c] -= f * a[t][c];
                        u[i][c] -= f * u[t][c];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let f = Integer::div_floor(&a[t][j], &p);
                if f != 0 {
                    for r in 0..n {
                        a[r][j] -= f * a[r][t];
                        v[r][j] -= f * v[r][t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            if let Some(i) = (t + 1..n).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0)) {
                for c in 0..n {
                    a[t][c] += a[i][c];
                    u[t][c] += u[i][c];
                }
                continue;
            }
            break;
        }
        if a[t][t] < 0 {
            for c in 0..n {
                a[t][c] = -a[t][c];
                u[t][c] = -u[t][c];
            }
        }
    }
    Ok((u, a, v))
}

fn rat_int(x: i128) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

/// Reduces every coordinate into `[0, 1)`.
pub fn canonical(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(frac).collect()
}

fn lcm_of_denoms<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> u64 {
    let mut l = BigInt::one();
    for x in xs {
        l = l.lcm(x.denom());
    }
    (&l).try_into().expect("denominator fits in u64")
}

/// The finite quadratic module `Λ'/Λ`.
#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    lattice: GramLattice,
    orders: Vec<u64>,
    generators: Vec<Vec<Rat>>,
    elements: Vec<Vec<Rat>>,
    index: BTreeMap<Vec<Rat>, usize>,
    qvals: Vec<Rat>,
    denoms: Vec<u64>,
    negation: Vec<usize>,
    level: u64,
}

impl DiscriminantForm {
    pub fn new(lattice: &GramLattice) -> Result<Self> {
        let order = lattice.disc_order();
        if order > MAX_DET {
            return Err(Error::TooLarge(format!("|det| = {} exceeds {}", order, MAX_DET)));
        }
        let e = lattice.dim();
        let g: IntMatrix = lattice.gram().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let (_, d, v) = smith_normal_form(&g)?;
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        for i in 0..e {
            let di = d[i][i];
            if di > 1 {
                orders.push(di as u64);
                let col: Vec<Rat> = (0..e).map(|r| Rat::new(BigInt::from(v[r][i]), BigInt::from(di))).collect();
                generators.push(canonical(&col));
            }
        }
        let mut elements: Vec<Vec<Rat>> = vec![vec![Rat::zero(); e]];
        for (gen, &ord) in generators.iter().zip(&orders) {
            let mut next = Vec::with_capacity(elements.len() * ord as usize);
            for x in &elements {
                for a in 0..ord {
                    let y: Vec<Rat> = x.iter().zip(gen).map(|(xi, gi)| xi + gi * rat_int(a as i128)).collect();
                    next.push(canonical(&y));
                }
            }
            elements = next;
        }
        elements.sort();
        elements.dedup();
        debug_assert_eq!(elements.len() as u64, order);
        let index: BTreeMap<Vec<Rat>, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let qvals = elements.iter().map(|x| frac(&lattice.q(x))).collect();
        let denoms = elements.iter().map(|x| lcm_of_denoms(x.iter())).collect();
        let negation = elements
            .iter()
            .map(|x| {
                let neg: Vec<Rat> = x.iter().map(|c| -c).collect();
                index[&canonical(&neg)]
            })
            .collect();
        let mut vals = Vec::new();
        for (i, gi) in generators.iter().enumerate() {
            vals.push(lattice.q(gi));
            for gj in &generators[i + 1..] {
                vals.push(lattice.bilinear(gi, gj));
            }
        }
        let level = lcm_of_denoms(vals.iter());
        Ok(DiscriminantForm {
            lattice: lattice.clone(),
            orders,
            generators,
            elements,
            index,
            qvals,
            denoms,
            negation,
            level,
        })
    }

    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    /// Elementary divisors greater than one.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Canonical representatives in lexicographic order; index 0 is `γ = 0`.
    pub fn elements(&self) -> &[Vec<Rat>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &[Rat] {
        &self.elements[i]
    }

    /// Index of the coset of an arbitrary dual-lattice vector.
    pub fn index_of(&self, v: &[Rat]) -> Option<usize> {
        self.index.get(&canonical(v)).copied()
    }

    /// `q(γ)` reduced into `[0, 1)`.
    pub fn q(&self, i: usize) -> &Rat {
        &self.qvals[i]
    }

    /// `⟨γ_i, γ_j⟩` reduced into `[0, 1)`.
    pub fn pairing(&self, i: usize, j: usize) -> Rat {
        frac(&self.lattice.bilinear(&self.elements[i], &self.elements[j]))
    }

    pub fn denom(&self, i: usize) -> u64 {
        self.denoms[i]
    }

    /// Index of `−γ_i`.
    pub fn neg(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Cosets with `q(γ) ∈ Z`.
    pub fn isotropic(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.qvals[i].is_zero()).collect()
    }
}
