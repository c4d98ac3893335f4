//! Weights and vector-valued q-series `Σ_γ Σ_n c(n, γ) q^n e_γ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{frac, parse_rat, Rat};
use crate::lattice::DiscriminantForm;

/// A weight `k` with `2k ∈ Z`, restricted to `{1/2, 1, 3/2, 2} ∪ [5/2, ∞)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Rat);

impl Weight {
    pub fn new(k: Rat) -> Result<Self> {
        let twice = &k * Rat::from_integer(BigInt::from(2));
        if !twice.is_integer() || !k.is_positive() {
            return Err(Error::UnsupportedWeight(format!("{}", k)));
        }
        Ok(Weight(k))
    }

    pub fn from_twice(twice: i64) -> Result<Self> {
        Self::new(Rat::new(BigInt::from(twice), BigInt::from(2)))
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_rat(s)
            .ok_or_else(|| Error::UnsupportedWeight(String::from(s)))
            .and_then(Self::new)
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    /// `2k`.
    pub fn twice(&self) -> i64 {
        (&self.0 * Rat::from_integer(BigInt::from(2))).to_integer().try_into().expect("small weight")
    }

    pub fn is_integral(&self) -> bool {
        self.0.is_integer()
    }

    /// Checks `2k + b⁺ − b⁻ ≡ 0 (mod 4)`.
    pub fn check_parity(&self, sig: (usize, usize)) -> Result<()> {
        let (plus, minus) = sig;
        if (self.twice() + plus as i64 - minus as i64).rem_euclid(4) == 0 {
            Ok(())
        } else {
            Err(Error::InadmissibleWeight {
                weight: format!("{}", self.0),
                plus,
                minus,
            })
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Coefficients `c(n, γ)` keyed by `(n, coset index)`; iteration order is by
/// exponent, then by canonical coset representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VVQSeries {
    weight: Weight,
    gram: Vec<Vec<i64>>,
    cosets: Vec<Vec<Rat>>,
    qvals: Vec<Rat>,
    prec: Rat,
    weil: bool,
    coeffs: BTreeMap<(Rat, usize), Rat>,
}

impl VVQSeries {
    /// A form for the dual Weil representation `ρ*`: exponents `n ∈ Z − q(γ)`.
    pub fn new(weight: Weight, df: &DiscriminantForm, prec: Rat) -> Self {
        VVQSeries {
            weight,
            gram: df.lattice().gram().to_vec(),
            cosets: df.elements().to_vec(),
            qvals: (0..df.len()).map(|i| df.q(i).clone()).collect(),
            prec,
            weil: false,
            coeffs: BTreeMap::new(),
        }
    }

    /// A form for `ρ` itself (unary theta series, shadows): `n ∈ Z + q(γ)`.
    pub fn new_weil(weight: Weight, df: &DiscriminantForm, prec: Rat) -> Self {
        let mut s = Self::new(weight, df, prec);
        s.weil = true;
        s.qvals = s.qvals.iter().map(|q| frac(&-q)).collect();
        s
    }

    /// True for forms of `ρ`, false for `ρ*`.
    pub fn is_weil(&self) -> bool {
        self.weil
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn prec(&self) -> &Rat {
        &self.prec
    }

    pub fn cosets(&self) -> &[Vec<Rat>] {
        &self.cosets
    }

    /// Admissible exponents `0 ≤ n ≤ prec` of one component, ascending.
    pub fn exponents(&self, coset: usize) -> Vec<Rat> {
        exponents_upto(&self.qvals[coset], &self.prec)
    }

    /// Stores `c(n, γ)`; fails unless `n` lies on the component's exponent grid.
    pub fn insert(&mut self, coset: usize, n: Rat, c: Rat) -> Result<()> {
        if !frac(&(&n + &self.qvals[coset])).is_zero() {
            return Err(Error::InvalidExponent { n: format!("{}", n) });
        }
        self.coeffs.insert((n, coset), c);
        Ok(())
    }

    /// `c(n, γ)`, zero when absent.
    pub fn get(&self, coset: usize, n: &Rat) -> Rat {
        self.coeffs.get(&(n.clone(), coset)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn contains(&self, coset: usize, n: &Rat) -> bool {
        self.coeffs.contains_key(&(n.clone(), coset))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat, &Rat)> {
        self.coeffs.iter().map(|((n, i), c)| (*i, n, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored `(n, c)` pairs of one component, ascending in `n`.
    pub fn component(&self, coset: usize) -> Vec<(Rat, Rat)> {
        self.iter().filter(|(i, _, _)| *i == coset).map(|(_, n, c)| (n.clone(), c.clone())).collect()
    }

    /// The component as text, e.g. `1 - 24q - 72q^2` or `-4q^{3/4}`.
    pub fn render_component(&self, coset: usize) -> String {
        render_terms(self.component(coset).iter().map(|(n, c)| (n, c)))
    }

    /// Exact equality of the stored coefficients on all common keys within
    /// `prec`; missing entries count as zero.
    pub fn agrees_with(&self, other: &VVQSeries, prec: &Rat) -> bool {
        let keys = self.coeffs.keys().chain(other.coeffs.keys()).filter(|(n, _)| n <= prec);
        for (n, i) in keys {
            if self.get(*i, n) != other.get(*i, n) {
                return false;
            }
        }
        true
    }
}

/// `{n ∈ Z − q : 0 ≤ n ≤ prec}` ascending.
pub fn exponents_upto(q: &Rat, prec: &Rat) -> Vec<Rat> {
    let mut n = frac(&-q);
    let mut out = Vec::new();
    while &n <= prec {
        out.push(n.clone());
        n += Rat::one();
    }
    out
}

fn render_exponent(n: &Rat) -> String {
    if n.is_one() {
        String::from("q")
    } else if n.is_integer() {
        format!("q^{}", n)
    } else {
        format!("q^{{{}}}", n)
    }
}

/// Renders `Σ c q^n` with sign-separated terms; zero terms are skipped.
pub fn render_terms<'a>(terms: impl Iterator<Item = (&'a Rat, &'a Rat)>) -> String {
    let mut out = String::new();
    for (n, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if n.is_zero() {
            out.push_str(&format!("{}", a));
            continue;
        }
        if !a.is_one() {
            if a.is_integer() {
                out.push_str(&format!("{}", a));
            } else {
                out.push_str(&format!("({})", a));
            }
        }
        out.push_str(&render_exponent(n));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
