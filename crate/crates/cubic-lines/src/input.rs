//! Reading cubics and lines from the command line and from files.
//!
//! A cubic is given either as text in the polynomial grammar (`x0^3 + w*x1^2*x2`)
//! or as a JSON term list:
//!
//! ```json
//! [{"coeff": "1", "exponents": [3, 0, 0, 0, 0]}, {"coeff": 2, "exponents": [0, 1, 2, 0, 0]}]
//! ```
//!
//! The `--cubic` value is read as a file when such a file exists and parsed
//! inline otherwise.

use std::path::Path;

use cubic_lines_core::grassmann::{span_from_pluecker, LineSpan, PlueckerCoords};
use cubic_lines_core::poly::Term;
use cubic_lines_core::threefold::CubicThreefold;
use cubic_lines_core::{Field, FieldElement, MPoly, Monomial, MonomialOrder, PolyRing};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonCoeff {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct JsonTerm {
    coeff: JsonCoeff,
    exponents: Vec<u16>,
}

fn parse_element(text: &str, field: Field) -> Result<FieldElement, CliError> {
    let x: FieldElement = text.trim().parse().map_err(|e| CliError::Parse(format!("`{}`: {}", text.trim(), e)))?;
    check_field(&x, field)?;
    Ok(x)
}

fn check_field(x: &FieldElement, field: Field) -> Result<(), CliError> {
    if field.contains(x) {
        Ok(())
    } else {
        Err(CliError::Parse(format!("{} is not in {}", x, field.name())))
    }
}

fn cubic_from_json(text: &str) -> Result<CubicThreefold, CliError> {
    let terms: Vec<JsonTerm> =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("JSON term list: {}", e)))?;
    let ring = PolyRing::projective4(MonomialOrder::GrevLex);
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        if t.exponents.len() != 5 {
            return Err(CliError::Parse(format!("a term needs 5 exponents, got {}", t.exponents.len())));
        }
        let c = match t.coeff {
            JsonCoeff::Int(n) => FieldElement::from_int(n),
            JsonCoeff::Text(s) => parse_element(&s, Field::Eisenstein)?,
        };
        out.push((Monomial::from_exponents(&t.exponents)?, c));
    }
    Ok(CubicThreefold::new(MPoly::from_terms(&ring, out))?)
}

/// Parses cubic text or a JSON term list.
pub fn parse_cubic(text: &str, field: Field) -> Result<CubicThreefold, CliError> {
    let trimmed = text.trim();
    let x = if trimmed.starts_with('[') {
        cubic_from_json(trimmed)?
    } else {
        CubicThreefold::parse(trimmed)?
    };
    for (_, c) in x.poly().terms() {
        check_field(c, field)?;
    }
    Ok(x)
}

/// Reads `source` as a file if it exists, else parses it inline.
pub fn load_cubic(source: &str, field: Field) -> Result<CubicThreefold, CliError> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", source, e)))?;
        parse_cubic(&text, field)
    } else {
        parse_cubic(source, field)
    }
}

/// `"a0,a1,a2,a3,a4;b0,b1,b2,b3,b4"`.
pub fn parse_line_span(text: &str, field: Field) -> Result<LineSpan, CliError> {
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 2 {
        return Err(CliError::Parse("a line span needs two rows separated by `;`".into()));
    }
    let mut vecs = Vec::new();
    for row in rows {
        let v = row.split(',').map(|s| parse_element(s, field)).collect::<Result<Vec<_>, _>>()?;
        if v.len() != 5 {
            return Err(CliError::Parse(format!("a spanning vector needs 5 entries, got {}", v.len())));
        }
        vecs.push(v);
    }
    Ok(LineSpan::from_vecs(&vecs[0], &vecs[1])?)
}

/// Ten coordinates in the order p01,p02,p03,p04,p12,p13,p14,p23,p24,p34.
pub fn parse_line_pluecker(text: &str, field: Field) -> Result<LineSpan, CliError> {
    let coords = text.split(',').map(|s| parse_element(s, field)).collect::<Result<Vec<_>, _>>()?;
    if coords.len() != 10 {
        return Err(CliError::Parse(format!("Plücker coordinates need 10 entries, got {}", coords.len())));
    }
    Ok(span_from_pluecker(&PlueckerCoords::from_slice(&coords)?)?)
}
