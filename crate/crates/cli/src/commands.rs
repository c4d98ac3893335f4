//! One function per subcommand; each returns the bytes to print.

use std::fmt::Write;

use serde::Serialize;
use weilzeta_core::corrections::{weight1_correction, weight2_correction, weight32_shadow};
use weilzeta_core::exactnum::render;
use weilzeta_core::localzeta::euler_factor;
use weilzeta_core::oracles::{hurwitz, theta_coeffs};
use weilzeta_core::{DiscriminantForm, Error, GramLattice, Rat, VVQSeries, Weight};

use crate::error::CliError;
use crate::io::{gamma_label, render_gamma, to_json, CorrectionsJson, SeriesJson};
use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn group_name(orders: &[u64]) -> String {
    if orders.is_empty() {
        return "trivial".to_string();
    }
    orders.iter().map(|o| format!("Z/{o}")).collect::<Vec<_>>().join(" x ")
}

#[derive(Serialize)]
struct CosetJson {
    gamma: Vec<String>,
    q: String,
    d: u64,
}

#[derive(Serialize)]
struct DiscformJson {
    signature: [usize; 2],
    order: u64,
    elementary_divisors: Vec<u64>,
    level: u64,
    cosets: Vec<CosetJson>,
}

pub fn discform(l: &GramLattice, format: Format) -> Result<String, CliError> {
    let df = DiscriminantForm::new(l)?;
    let (plus, minus) = l.signature();
    match format {
        Format::Json => {
            let cosets = (0..df.len())
                .map(|i| CosetJson { gamma: render_gamma(df.element(i)), q: render(df.q(i)), d: df.denom(i) })
                .collect();
            Ok(to_json(&DiscformJson {
                signature: [plus, minus],
                order: l.disc_order(),
                elementary_divisors: df.orders().to_vec(),
                level: df.level(),
                cosets,
            }))
        }
        Format::Text => {
            let mut out = format!("signature ({plus},{minus}), group {}, level {}\n", group_name(df.orders()), df.level());
            writeln!(out, "order {}, elementary divisors {:?}", l.disc_order(), df.orders()).unwrap();
            for i in 0..df.len() {
                writeln!(out, "{}  q = {}  d = {}", gamma_label(df.element(i)), render(df.q(i)), df.denom(i)).unwrap();
            }
            Ok(out)
        }
    }
}

fn render_series(s: &VVQSeries, format: Format) -> String {
    match format {
        Format::Json => to_json(&SeriesJson::from_series(s)),
        Format::Text => {
            let mut out = String::new();
            for (i, gamma) in s.cosets().iter().enumerate() {
                writeln!(out, "e_{}: {}", gamma_label(gamma), s.render_component(i)).unwrap();
            }
            out
        }
    }
}

pub fn eisenstein(l: &GramLattice, k: &Weight, prec: &Rat, format: Format) -> Result<String, CliError> {
    check_prec(prec)?;
    Ok(render_series(&parallel::eisenstein_series(l, k, prec)?, format))
}

pub fn theta(l: &GramLattice, prec: &Rat, format: Format) -> Result<String, CliError> {
    check_prec(prec)?;
    Ok(render_series(&theta_coeffs(l, prec)?, format))
}

fn check_prec(prec: &Rat) -> Result<(), CliError> {
    if *prec > Rat::from_integer(0.into()) {
        Ok(())
    } else {
        Err(CliError::usage(format!("prec must be positive, got {prec}")))
    }
}

/// Weight 1 and 2 constants, or the weight 3/2 shadow up to `prec`.
pub fn corrections(l: &GramLattice, k: &Weight, prec: &Rat, format: Format) -> Result<String, CliError> {
    let json = match k.twice() {
        2 => CorrectionsJson::from_vector(&weight1_correction(l)?),
        4 => CorrectionsJson::from_vector(&weight2_correction(l)?),
        3 => CorrectionsJson::from_shadow(&weight32_shadow(l, prec)?),
        _ => return Err(Error::UnsupportedWeight(format!("{k} (corrections exist for 1, 3/2 and 2)")).into()),
    };
    if format == Format::Json {
        return Ok(to_json(&json));
    }
    let mut out = String::new();
    for e in json.weight1.iter().flatten() {
        writeln!(out, "e_({}): add {}", e.gamma.join(","), e.add).unwrap();
    }
    for e in json.weight2.iter().flatten() {
        writeln!(out, "e_({}): A*pi = {}", e.gamma.join(","), e.a_times_pi).unwrap();
    }
    for e in json.shadow.iter().flatten() {
        writeln!(out, "e_({}): a({}) = {}", e.gamma.join(","), e.n, e.a).unwrap();
    }
    Ok(out)
}

/// `L_p(n, γ, s)` as numerator/denominator in `t = p^{−s}`, with the first counts.
pub fn localfactor(l: &GramLattice, gamma: &[Rat], n: &Rat, p: u64) -> Result<String, CliError> {
    if gamma.len() != l.dim() {
        return Err(CliError::usage(format!("gamma has {} coordinates, lattice has rank {}", gamma.len(), l.dim())));
    }
    let f = euler_factor(l, gamma, n, p)?;
    let counts: Vec<String> = f.counts.iter().map(|c| c.to_string()).collect();
    let (num, den) = f.f.normalized_at_zero();
    Ok(format!(
        "p = {p}, gamma = {}, n = {}\nnumerator: {}\ndenominator: {}\nN(p^nu), nu = 0..: {}\n",
        gamma_label(gamma),
        render(n),
        num.render("t"),
        den.render("t"),
        counts.join(", ")
    ))
}

pub fn hurwitz_values(ns: &[Rat]) -> String {
    ns.iter().map(|n| format!("H({}) = {}\n", render(n), render(&hurwitz(n)))).collect()
}
