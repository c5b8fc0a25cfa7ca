//! Report trees for each command, rendered as JSON or aligned text.
//!
//! Indices are 1-based and rationals are `"p/q"` strings.

use std::fmt::Write as _;

use bottsym_core::cohomology::{betti, invariant_basis, is_cohomologically_symplectic, Monomial};
use bottsym_core::criteria::{find_pairing, flux_rank, is_orientable, is_symplectic, Pairing};
use bottsym_core::geometry::{
    build_symplectic_form, flux_group, kahler_structure, nondegenerate, verify_invariance,
    FormSource, TwoForm,
};
use bottsym_core::{BottMatrix, Rational};
use serde_json::{json, Value};
use thiserror::Error;

use crate::census::{CensusReport, CrossValidation};
use crate::document::to_inline;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("matrix is not symplectic: {0}")]
    NotSymplectic(String),
    #[error(transparent)]
    Core(#[from] bottsym_core::Error),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub value: Value,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.value).expect("report values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render(&self.value, 0, &mut out);
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| is_scalar(x) || inline(x).is_some()) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            Some(format!("[{}]", parts?.join(", ")))
        }
        Value::Array(_) | Value::Object(_) => None,
        other => Some(other.to_string()),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, x) in map {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k:<width$}  {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(item, indent + 2, out);
                    }
                }
            }
        }
        scalar => {
            let _ = writeln!(out, "{pad}{}", inline(scalar).unwrap_or_default());
        }
    }
}

fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn pairs_json(p: &Pairing) -> Value {
    json!(p
        .pairs()
        .iter()
        .map(|&(j, k)| [j + 1, k + 1])
        .collect::<Vec<_>>())
}

fn monomial_json(m: Monomial) -> Value {
    json!(m.indices().map(|j| j + 1).collect::<Vec<_>>())
}

/// Index groups of equal columns that occur an odd number of times.
pub fn unpaired_columns(a: &BottMatrix) -> Vec<Vec<usize>> {
    let cols = a.column_words();
    let mut groups: Vec<(u64, Vec<usize>)> = Vec::new();
    for (j, &c) in cols.iter().enumerate() {
        match groups.iter_mut().find(|(w, _)| *w == c) {
            Some((_, g)) => g.push(j + 1),
            None => groups.push((c, vec![j + 1])),
        }
    }
    groups
        .into_iter()
        .filter(|(_, g)| g.len() % 2 == 1)
        .map(|(_, g)| g)
        .collect()
}

fn require_pairing(a: &BottMatrix) -> Result<Pairing, ReportError> {
    find_pairing(a).ok_or_else(|| {
        let groups: Vec<String> = unpaired_columns(a)
            .iter()
            .map(|g| {
                let ix: Vec<String> = g.iter().map(usize::to_string).collect();
                format!("{{{}}}", ix.join(","))
            })
            .collect();
        let why = if a.size() % 2 == 1 {
            format!("odd size {}", a.size())
        } else {
            format!(
                "equal-column classes of odd size {} leave columns unpaired",
                groups.join(" ")
            )
        };
        ReportError::NotSymplectic(why)
    })
}

pub fn check(a: &BottMatrix) -> ReportDocument {
    let symplectic = is_symplectic(a);
    ReportDocument {
        value: json!({
            "n": a.size(),
            "orientable": is_orientable(a),
            "symplectic": symplectic,
            "cohomologically_symplectic": is_cohomologically_symplectic(a),
            "kahler": symplectic,
            "flux_rank": flux_rank(a),
            "pairing": find_pairing(a).map(|p| pairs_json(&p)),
        }),
    }
}

/// `1 + 2t + t^2`, skipping zero coefficients.
pub fn poincare_string(coefficients: &[u64]) -> String {
    let terms: Vec<String> = coefficients
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| {
            let coeff = if c == 1 && k > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match k {
                0 => coeff,
                1 => format!("{coeff}t"),
                _ => format!("{coeff}t^{k}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn betti_report(a: &BottMatrix, with_basis: bool) -> ReportDocument {
    let b = betti(a);
    let basis = with_basis.then(|| {
        (0..=a.size())
            .map(|k| {
                invariant_basis(a, k)
                    .into_iter()
                    .map(monomial_json)
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });
    ReportDocument {
        value: json!({
            "n": a.size(),
            "betti": b.as_slice(),
            "poincare": poincare_string(b.as_slice()),
            "basis": basis,
        }),
    }
}

fn form_json(w: &TwoForm) -> Value {
    json!(w
        .coefficients()
        .map(|(j, k, c)| json!({ "j": j + 1, "k": k + 1, "c": q(c) }))
        .collect::<Vec<_>>())
}

pub fn omega(a: &BottMatrix) -> Result<ReportDocument, ReportError> {
    let pairing = require_pairing(a)?;
    let w = build_symplectic_form(a, FormSource::Pairing(&pairing))?;
    Ok(ReportDocument {
        value: json!({
            "n": a.size(),
            "pairing": pairs_json(&pairing),
            "omega": form_json(&w),
            "invariant": verify_invariance(a, &w),
            "nondegenerate": nondegenerate(&w),
        }),
    })
}

pub fn kahler(a: &BottMatrix) -> Result<ReportDocument, ReportError> {
    let pairing = require_pairing(a)?;
    let k = kahler_structure(a, &pairing)?;
    let coordinates: Vec<Value> = pairing
        .pairs()
        .iter()
        .enumerate()
        .map(|(idx, &(re, im))| {
            json!({
                "z": idx + 1,
                "real": re + 1,
                "imaginary": im + 1,
                "formula": format!("z{} = u{} + i*u{}", idx + 1, re + 1, im + 1),
            })
        })
        .collect();
    let generators: Vec<Value> = (0..a.size())
        .map(|i| {
            json!({
                "generator": i + 1,
                "cases": k.cases(i).iter().map(|c| c.name()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(ReportDocument {
        value: json!({
            "n": a.size(),
            "pairing": pairs_json(&pairing),
            "coordinates": coordinates,
            "generators": generators,
        }),
    })
}

pub fn flux(a: &BottMatrix) -> Result<ReportDocument, ReportError> {
    let pairing = require_pairing(a)?;
    let w = build_symplectic_form(a, FormSource::Pairing(&pairing))?;
    let data = flux_group(a, &w)?;
    let generators: Vec<Value> = data
        .generators
        .iter()
        .map(|g| {
            json!({
                "darboux_index": g.darboux_index + 1,
                "partner": g.partner + 1,
                "sign": g.sign,
                "direction": g.direction.iter().map(q).collect::<Vec<_>>(),
                "class": g.class.iter().map(q).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(ReportDocument {
        value: json!({
            "n": a.size(),
            "rank": data.rank,
            "span_rank": data.span_rank(),
            "zero_columns": data.darboux.coordinates().iter().map(|j| j + 1).collect::<Vec<_>>(),
            "darboux": data
                .darboux
                .change()
                .iter()
                .map(|row| row.iter().map(q).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "omega": form_json(&w),
            "generators": generators,
            "scale_ambiguous": data.scale_ambiguous,
        }),
    })
}

pub fn census(report: &CensusReport) -> ReportDocument {
    let c = &report.counts;
    ReportDocument {
        value: json!({
            "n": report.n,
            "total": c.total,
            "orientable": c.orientable,
            "symplectic": c.symplectic,
            "cohomologically_symplectic": c.cohomologically_symplectic,
            "mismatches": c.mismatches.iter().map(to_inline).collect::<Vec<_>>(),
        }),
    }
}

pub fn verify(report: &CrossValidation) -> ReportDocument {
    ReportDocument {
        value: json!({
            "n": report.n,
            "checked": report.checked,
            "symplectic": report.symplectic,
            "status": "pass",
        }),
    }
}

pub fn list(n: usize, nonzero_only: bool, matrices: &[BottMatrix]) -> ReportDocument {
    ReportDocument {
        value: json!({
            "n": n,
            "nonzero_only": nonzero_only,
            "count": matrices.len(),
            "matrices": matrices.iter().map(to_inline).collect::<Vec<_>>(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::MatrixDocument;

    fn m(s: &str) -> BottMatrix {
        MatrixDocument::parse_inline(s).unwrap().matrix
    }

    #[test]
    fn check_fields() {
        let v = check(&m("01;00")).value;
        assert_eq!(v["orientable"], json!(false));
        assert_eq!(v["symplectic"], json!(false));
        assert_eq!(v["flux_rank"], json!(1));
        assert_eq!(v["pairing"], Value::Null);
        let v = check(&m("0000;0000;0000;0000")).value;
        assert_eq!(v["pairing"], json!([[1, 2], [3, 4]]));
    }

    #[test]
    fn poincare_strings() {
        assert_eq!(poincare_string(&[1, 2, 1]), "1 + 2t + t^2");
        assert_eq!(poincare_string(&[1, 1, 0]), "1 + t");
        assert_eq!(
            poincare_string(&[1, 2, 2, 2, 1]),
            "1 + 2t + 2t^2 + 2t^3 + t^4"
        );
    }

    #[test]
    fn omega_and_kahler_for_example() {
        let a = m("0110;0000;0000;0000");
        let v = omega(&a).unwrap().value;
        assert_eq!(
            v["omega"],
            json!([{"j": 1, "k": 4, "c": "1"}, {"j": 2, "k": 3, "c": "1"}])
        );
        let v = kahler(&a).unwrap().value;
        assert_eq!(v["coordinates"][0]["formula"], json!("z1 = u1 + i*u4"));
        assert_eq!(v["coordinates"][1]["formula"], json!("z2 = u2 + i*u3"));
        assert_eq!(
            v["generators"][0]["cases"],
            json!(["shift-by-1/2", "negation"])
        );
    }

    #[test]
    fn non_symplectic_message_names_unpaired_columns() {
        let err = omega(&m("0110;0011;0000;0000")).unwrap_err();
        assert_eq!(
            unpaired_columns(&m("0110;0011;0000;0000")),
            vec![vec![1], vec![2], vec![3], vec![4]]
        );
        assert!(err.to_string().contains("{1} {2} {3} {4}"), "{err}");
    }

    #[test]
    fn text_rendering_is_aligned() {
        let text = check(&m("01;00")).to_text();
        assert!(text.contains("n                           2\n"), "{text}");
        assert!(
            text.contains("pairing                     null\n"),
            "{text}"
        );
    }
}
