//! `weilzeta verify <suite>`: exact comparisons of engine output against the
//! oracles. A suite stops at, and reports, its first mismatch.

use weilzeta_core::corrections::{weight1_correction, weight2_correction, weight32_shadow};
use weilzeta_core::exactnum::{int, render};
use weilzeta_core::oracles::{
    divisor_sums, example16_basis, example16_lattice, hurwitz, r2_divisor_formula, r4_jacobi, theta_coeffs,
};
use weilzeta_core::{GramLattice, MonomialReal, Rat, VVQSeries, Weight};

use crate::error::CliError;
use crate::io::gamma_label;
use crate::parallel::eisenstein_series;

pub type Suite = fn() -> Result<usize, CliError>;

pub const SUITES: &[(&str, Suite)] = &[
    ("unimodular", unimodular),
    ("zagier", zagier),
    ("cubic", cubic),
    ("hexagonal", hexagonal),
    ("squares2", squares2),
    ("jacobi4", jacobi4),
    ("shadow16", shadow16),
];

pub fn find(name: &str) -> Option<Suite> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Counts comparisons; the first unequal pair aborts with its label.
#[derive(Default)]
pub struct Tally(pub usize);

impl Tally {
    pub fn eq<T: PartialEq + std::fmt::Display>(&mut self, what: impl FnOnce() -> String, got: &T, want: &T) -> Result<(), CliError> {
        self.0 += 1;
        if got == want {
            Ok(())
        } else {
            Err(CliError::mismatch(format!("{}: got {got}, expected {want}", what())))
        }
    }

    /// Every coefficient with exponent `≤ prec` on either side.
    pub fn series(&mut self, label: &str, got: &VVQSeries, want: &VVQSeries, prec: &Rat) -> Result<(), CliError> {
        for (i, gamma) in got.cosets().iter().enumerate() {
            for n in got.exponents(i).into_iter().filter(|n| n <= prec) {
                self.eq(|| format!("{label} at e_{} q^{}", gamma_label(gamma), render(&n)), &got.get(i, &n), &want.get(i, &n))?;
            }
        }
        Ok(())
    }
}

fn lattice(g: &[&[i64]]) -> GramLattice {
    GramLattice::new(g.iter().map(|r| r.to_vec()).collect()).expect("built-in Gram matrix")
}

fn weight(s: &str) -> Weight {
    Weight::parse(s).expect("built-in weight")
}

/// Hyperbolic plane, weight 2: `c(n, 0) = −24σ₁(n)` and `A(0)·π = 3`.
fn unimodular() -> Result<usize, CliError> {
    let mut t = Tally::default();
    let l = lattice(&[&[0, 1], &[1, 0]]);
    let s = eisenstein_series(&l, &weight("2"), &int(50))?;
    for n in 1..=50u64 {
        let want = int(-24 * divisor_sums(n).1 as i64);
        t.eq(|| format!("c({n}, 0)"), &s.get(0, &int(n as i64)), &want)?;
    }
    t.eq(|| "A(0)*pi".into(), &weight2_correction(&l)?.at(0), &int(3))?;
    Ok(t.0)
}

/// `[[2]]`, weight 3/2: `c(n, γ) = −12 H(4n)`, constant term included.
fn zagier() -> Result<usize, CliError> {
    let mut t = Tally::default();
    let s = eisenstein_series(&lattice(&[&[2]]), &weight("3/2"), &int(25))?;
    for (i, n, c) in s.iter() {
        let want = int(-12) * hurwitz(&(n * int(4)));
        t.eq(|| format!("c({}, e_{})", render(n), gamma_label(&s.cosets()[i])), c, &want)?;
    }
    Ok(t.0)
}

/// `−2I₃`, weight 3/2: the theta series of Z³, with zero shadow.
fn cubic() -> Result<usize, CliError> {
    let mut t = Tally::default();
    let l = lattice(&[&[-2, 0, 0], &[0, -2, 0], &[0, 0, -2]]);
    let prec = int(25);
    let s = eisenstein_series(&l, &weight("3/2"), &prec)?;
    t.series("E_3/2 - theta", &s, &theta_coeffs(&l, &prec)?, &prec)?;
    let shadow = weight32_shadow(&l, &prec)?;
    for (i, x, a) in shadow.iter() {
        t.eq(|| format!("shadow a(-{}, e_{})", render(x), gamma_label(&shadow.cosets[i])), a, &MonomialReal::zero())?;
    }
    Ok(t.0)
}

/// `E_1 + correction = 2ϑ` for a negative definite binary lattice.
fn weight_one_theta(t: &mut Tally, l: &GramLattice, prec: &Rat) -> Result<(), CliError> {
    let correction = weight1_correction(l)?;
    t.eq(|| "weight 1 correction at e_0".into(), &correction.at(0), &int(1))?;
    let mut s = eisenstein_series(l, &weight("1"), prec)?;
    for e in &correction.entries {
        let c = s.get(e.coset, &int(0)) + &e.value;
        s.insert(e.coset, int(0), c)?;
    }
    let theta = theta_coeffs(l, prec)?;
    let mut twice = theta.clone();
    for (i, n, c) in theta.iter() {
        twice.insert(i, n.clone(), c * int(2))?;
    }
    t.series("E_1 + correction - 2 theta", &s, &twice, prec)
}

fn hexagonal() -> Result<usize, CliError> {
    let mut t = Tally::default();
    weight_one_theta(&mut t, &lattice(&[&[-2, -1], &[-1, -2]]), &int(50))?;
    Ok(t.0)
}

fn squares2() -> Result<usize, CliError> {
    let mut t = Tally::default();
    let l = lattice(&[&[-2, 0], &[0, -2]]);
    weight_one_theta(&mut t, &l, &int(50))?;
    let theta = theta_coeffs(&l, &int(200))?;
    for n in 1..=200 {
        t.eq(|| format!("r2({n})"), &theta.get(0, &int(n)), &int(r2_divisor_formula(n as u64)))?;
    }
    Ok(t.0)
}

/// `−2I₄`, weight 2: theta series, no correction, Jacobi's formula.
fn jacobi4() -> Result<usize, CliError> {
    let mut t = Tally::default();
    let l = lattice(&[&[-2, 0, 0, 0], &[0, -2, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, -2]]);
    let prec = int(25);
    let s = eisenstein_series(&l, &weight("2"), &prec)?;
    t.series("E_2 - theta", &s, &theta_coeffs(&l, &prec)?, &prec)?;
    t.eq(|| "weight 2 correction vanishes".into(), &weight2_correction(&l)?.is_zero(), &true)?;
    for (n, r4) in r4_by_convolution(100)?.into_iter().enumerate().skip(1) {
        t.eq(|| format!("r4({n})"), &r4, &r4_jacobi(n as u64))?;
    }
    Ok(t.0)
}

/// `r₄(n)`, `0 ≤ n ≤ max`, as the self-convolution of `r₂` from `−2I₂` theta.
pub fn r4_by_convolution(max: i64) -> Result<Vec<u64>, CliError> {
    let theta = theta_coeffs(&lattice(&[&[-2, 0], &[0, -2]]), &int(max))?;
    let r2: Vec<u64> = (0..=max).map(|n| theta.get(0, &int(n)).to_integer().try_into().unwrap()).collect();
    Ok((0..=max as usize).map(|n| (0..=n).map(|a| r2[a] * r2[n - a]).sum()).collect())
}

/// `diag(2, 2, −2)`: the weight 3/2 shadow is `−8(ϑ₁ + ϑ₂)`.
fn shadow16() -> Result<usize, CliError> {
    let mut t = Tally::default();
    let prec = int(25);
    let shadow = weight32_shadow(&example16_lattice(), &prec)?;
    let (t1, t2) = example16_basis(&prec)?;
    for (i, gamma) in t1.cosets().iter().enumerate() {
        for x in t1.exponents(i) {
            let want = MonomialReal::from_rat(int(-8) * (t1.get(i, &x) + t2.get(i, &x)));
            t.eq(|| format!("a(-{}, e_{})", render(&x), gamma_label(gamma)), &shadow.get(i, &x), &want)?;
        }
    }
    Ok(t.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        assert!(find("zagier").is_some());
        assert!(find("jacobi4").is_some());
        assert!(find("unknown-name").is_none());
        assert_eq!(names().len(), SUITES.len());
    }

    #[test]
    fn tally_reports_the_first_mismatch() {
        let mut t = Tally::default();
        assert!(t.eq(|| "a".into(), &int(1), &int(1)).is_ok());
        let err = t.eq(|| "b".into(), &int(1), &int(2)).unwrap_err();
        assert_eq!(err.code, 1);
        assert_eq!(err.message, "b: got 1, expected 2");
        assert_eq!(t.0, 2);
    }

    #[test]
    fn convolution_matches_jacobi() {
        let r4 = r4_by_convolution(30).unwrap();
        assert_eq!(r4[0], 1);
        assert!((1..=30).all(|n| r4[n] == r4_jacobi(n as u64)));
    }
}
