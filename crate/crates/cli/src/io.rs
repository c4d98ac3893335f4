//! Gram input and the JSON shapes of series and corrections. Every rational
//! (coefficients, exponents, coset coordinates, weights) is a `"p/q"` string.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use weilzeta_core::corrections::{CorrectionVector, ShadowSeries};
use weilzeta_core::exactnum::{parse_rat, render};
use weilzeta_core::{DiscriminantForm, GramLattice, Rat, VVQSeries, Weight};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramFile {
    pub gram: Vec<Vec<i64>>,
}

pub fn parse_gram(text: &str) -> Result<GramLattice, CliError> {
    let file: GramFile = serde_json::from_str(text).map_err(|e| CliError::usage(format!("malformed Gram JSON: {e}")))?;
    Ok(GramLattice::new(file.gram)?)
}

pub fn read_gram(path: &Path) -> Result<GramLattice, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_gram(&text)
}

pub fn parse_rational(what: &str, s: &str) -> Result<Rat, CliError> {
    parse_rat(s).ok_or_else(|| CliError::usage(format!("{what}: expected a rational \"p/q\", got {s:?}")))
}

pub fn render_gamma(gamma: &[Rat]) -> Vec<String> {
    gamma.iter().map(render).collect()
}

/// `(1/2,0)`: the coset label used in text output.
pub fn gamma_label(gamma: &[Rat]) -> String {
    format!("({})", render_gamma(gamma).join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub gamma: Vec<String>,
    pub n: String,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub weight: String,
    pub gram: Vec<Vec<i64>>,
    pub prec: String,
    pub coeffs: Vec<CoeffJson>,
}

impl SeriesJson {
    pub fn from_series(s: &VVQSeries) -> Self {
        let coeffs = s
            .iter()
            .map(|(i, n, c)| CoeffJson { gamma: render_gamma(&s.cosets()[i]), n: render(n), c: render(c) })
            .collect();
        SeriesJson { weight: s.weight().to_string(), gram: s.gram().to_vec(), prec: render(s.prec()), coeffs }
    }

    /// Rebuilds the series (for the dual representation) from its JSON form.
    pub fn to_series(&self) -> Result<VVQSeries, CliError> {
        let l = GramLattice::new(self.gram.clone())?;
        let df = DiscriminantForm::new(&l)?;
        let weight = Weight::parse(&self.weight)?;
        let prec = parse_rational("prec", &self.prec)?;
        let mut s = VVQSeries::new(weight, &df, prec);
        for entry in &self.coeffs {
            let gamma = entry.gamma.iter().map(|g| parse_rational("gamma", g)).collect::<Result<Vec<_>, _>>()?;
            let coset = df.index_of(&gamma).ok_or_else(|| CliError::usage(format!("{} is not a coset", gamma_label(&gamma))))?;
            s.insert(coset, parse_rational("n", &entry.n)?, parse_rational("c", &entry.c)?)?;
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight1Json {
    pub gamma: Vec<String>,
    pub add: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight2Json {
    pub gamma: Vec<String>,
    #[serde(rename = "A_times_pi")]
    pub a_times_pi: String,
}

/// A shadow coefficient `a(n, γ)` (`n ≤ 0`). `a` is `"p/q"` when rational and
/// otherwise a surd such as `"-16*sqrt(2)"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowJson {
    pub gamma: Vec<String>,
    pub n: String,
    pub a: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight1: Option<Vec<Weight1Json>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight2: Option<Vec<Weight2Json>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shadow: Option<Vec<ShadowJson>>,
}

impl CorrectionsJson {
    pub fn from_vector(v: &CorrectionVector) -> Self {
        let mut out = CorrectionsJson::default();
        match v.weight {
            1 => {
                out.weight1 = Some(
                    v.entries.iter().map(|e| Weight1Json { gamma: render_gamma(&e.gamma), add: render(&e.value) }).collect(),
                )
            }
            _ => {
                out.weight2 = Some(
                    v.entries
                        .iter()
                        .map(|e| Weight2Json { gamma: render_gamma(&e.gamma), a_times_pi: render(&e.value) })
                        .collect(),
                )
            }
        }
        out
    }

    pub fn from_shadow(s: &ShadowSeries) -> Self {
        let entries = s
            .iter()
            .map(|(i, x, a)| ShadowJson { gamma: render_gamma(&s.cosets[i]), n: render(&-x), a: a.to_string() })
            .collect();
        CorrectionsJson { shadow: Some(entries), ..Default::default() }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use weilzeta_core::eisenstein;
    use weilzeta_core::exactnum::int;

    #[test]
    fn gram_errors() {
        assert_eq!(parse_gram("{\"gram\": [[1]]}").unwrap_err().code, 3);
        assert_eq!(parse_gram("{\"gram\": [[2, 1], [0, 2]]}").unwrap_err().code, 3);
        assert_eq!(parse_gram("{\"gram\": [[2]").unwrap_err().code, 2);
        assert_eq!(parse_gram("{\"matrix\": [[2]]}").unwrap_err().code, 2);
        assert_eq!(parse_gram("{\"gram\": [[2]]}").unwrap().det(), 2);
    }

    #[test]
    fn series_round_trip() {
        let l = parse_gram("{\"gram\": [[2]]}").unwrap();
        let s = eisenstein::series(&l, &Weight::parse("3/2").unwrap(), &int(3)).unwrap();
        let json = SeriesJson::from_series(&s);
        assert_eq!(json.weight, "3/2");
        assert!(json.coeffs.contains(&CoeffJson { gamma: vec!["1/2".into()], n: "3/4".into(), c: "-4".into() }));
        let text = to_json(&json);
        let back: SeriesJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_series().unwrap(), s);
    }
}
