//! Resolution of targets, algebra files and flag values.

use std::collections::BTreeMap;
use std::path::Path;

use liebialg::catalog;
use liebialg::exact::{parse_rational, Rational};
use liebialg::grassmann::{binomial, MultiVector};
use liebialg::liealg::{parse_params, Bracket, LieAlgebra, LieError};
use serde_json::Value;

use crate::error::CliError;

/// Where an algebra came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// A catalog entry.
    Catalog(String),
    /// A JSON file.
    File(String),
}

/// A resolved algebra together with its source.
#[derive(Clone, Debug)]
pub struct Target {
    /// The algebra.
    pub algebra: LieAlgebra,
    /// Its origin.
    pub source: Source,
}

impl Target {
    /// Catalog name, when the target is a catalog entry.
    pub fn catalog_name(&self) -> Option<&str> {
        match &self.source {
            Source::Catalog(name) => Some(name),
            Source::File(_) => None,
        }
    }
}

/// Parses the `--params` flag.
pub fn params_flag(raw: Option<&str>) -> Result<BTreeMap<String, Rational>, CliError> {
    raw.map_or_else(
        || Ok(BTreeMap::new()),
        |s| {
            parse_params(s).map_err(|e| CliError::BadFlag {
                flag: "--params",
                message: e.to_string(),
            })
        },
    )
}

/// Parses comma-separated rationals, as used by `--point` and `--alphas`.
pub fn rational_list(flag: &'static str, raw: &str) -> Result<Vec<Rational>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            parse_rational(s).map_err(|e| CliError::BadFlag {
                flag,
                message: format!("{s:?}: {e}"),
            })
        })
        .collect()
}

/// Parses `--point` as bivector coordinates in the lexicographic basis
/// `e12, e13, ..., e(n-1)n`.
pub fn bivector_flag(n: usize, raw: &str) -> Result<MultiVector, CliError> {
    let coords = rational_list("--point", raw)?;
    let want = binomial(n, 2);
    if coords.len() != want {
        return Err(CliError::BadFlag {
            flag: "--point",
            message: format!("expected {want} coordinates, got {}", coords.len()),
        });
    }
    Ok(MultiVector::from_coords(n, 2, &coords))
}

/// Resolves a catalog name or a path to an algebra file.
pub fn resolve(target: &str, params: &BTreeMap<String, Rational>) -> Result<Target, CliError> {
    if catalog::names().contains(&target) {
        let algebra = catalog::algebra(target, params)?;
        return Ok(Target {
            algebra,
            source: Source::Catalog(target.to_string()),
        });
    }
    let path = Path::new(target);
    if path.is_file() {
        return Ok(Target {
            algebra: parse_algebra_file(path)?,
            source: Source::File(target.to_string()),
        });
    }
    Err(CliError::UnknownTarget(target.to_string()))
}

/// Reads and validates an algebra file.
///
/// The format is `{"name": .., "dim": n, "basis": [..], "brackets": [{"i": .., "j": ..,
/// "coeffs": [..]}]}` with 1-based indices, `n` coefficients per bracket and
/// coefficients given as integers or rational strings such as `"-1/2"`.
pub fn parse_algebra_file(path: &Path) -> Result<LieAlgebra, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_algebra_str(&text)
}

/// Validates an algebra given as JSON text; see [`parse_algebra_file`].
pub fn parse_algebra_str(text: &str) -> Result<LieAlgebra, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::ParseError {
        position: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    let name = match obj.get("name") {
        None => "custom".to_string(),
        Some(v) => v.as_str().ok_or_else(|| schema("$.name", "expected a string"))?.to_string(),
    };
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .filter(|&d| d > 0)
        .ok_or_else(|| schema("$.dim", "expected a positive integer"))? as usize;
    let labels = match obj.get("basis") {
        None => None,
        Some(v) => {
            let arr = v.as_array().ok_or_else(|| schema("$.basis", "expected an array"))?;
            if arr.len() != dim {
                return Err(schema("$.basis", &format!("expected {dim} labels, got {}", arr.len())));
            }
            let labels = arr
                .iter()
                .enumerate()
                .map(|(k, l)| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| schema(&format!("$.basis[{k}]"), "expected a string"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Some(labels)
        }
    };
    let raw = obj
        .get("brackets")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("$.brackets", "expected an array"))?;
    let mut brackets = Vec::with_capacity(raw.len());
    for (k, b) in raw.iter().enumerate() {
        brackets.push(bracket(&format!("$.brackets[{k}]"), b, dim)?);
    }
    LieAlgebra::build(&name, dim, &brackets, labels, BTreeMap::new()).map_err(|e| match e {
        LieError::JacobiViolation { i, j, k, l } => CliError::JacobiViolation { i, j, k, l },
        other => schema("$.brackets", &other.to_string()),
    })
}

fn schema(position: &str, message: &str) -> CliError {
    CliError::ParseError {
        position: position.to_string(),
        message: message.to_string(),
    }
}

fn bracket(path: &str, v: &Value, dim: usize) -> Result<Bracket, CliError> {
    let index = |key: &str| -> Result<usize, CliError> {
        let i = v
            .get(key)
            .and_then(Value::as_u64)
            .ok_or_else(|| schema(&format!("{path}.{key}"), "expected a positive integer"))?
            as usize;
        if i == 0 || i > dim {
            return Err(schema(&format!("{path}.{key}"), &format!("index {i} outside 1..={dim}")));
        }
        Ok(i)
    };
    let (i, j) = (index("i")?, index("j")?);
    let cpath = format!("{path}.coeffs");
    let raw = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| schema(&cpath, "expected an array"))?;
    if raw.len() != dim {
        return Err(schema(&cpath, &format!("expected {dim} coefficients, got {}", raw.len())));
    }
    let coeffs = raw
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let text = match c {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() => n.to_string(),
                _ => return Err(schema(&format!("{cpath}[{k}]"), "expected an integer or rational string")),
            };
            parse_rational(&text).map_err(|e| schema(&format!("{cpath}[{k}]"), &e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Bracket { i, j, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = r#"{"name": "sl2", "dim": 3, "brackets": [
        {"i": 1, "j": 2, "coeffs": [0, 1, 0]},
        {"i": 1, "j": 3, "coeffs": [0, 0, -1]},
        {"i": 2, "j": 3, "coeffs": ["1", 0, "0/5"]}]}"#;

    #[test]
    fn parses_sl2_and_matches_catalog() {
        let g = parse_algebra_str(SL2).unwrap();
        let cat = catalog::algebra("sl2", &BTreeMap::new()).unwrap();
        assert_eq!(g.to_json().brackets, cat.to_json().brackets);
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        match parse_algebra_str("{\"dim\": 3,\n oops}") {
            Err(CliError::ParseError { position, .. }) => assert_eq!(position, "line 2 column 2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_coefficient_count_is_a_parse_error() {
        let text = r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": [1]}]}"#;
        match parse_algebra_str(text) {
            Err(CliError::ParseError { position, .. }) => assert_eq!(position, "$.brackets[0].coeffs"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn point_flag_checks_length() {
        assert!(bivector_flag(3, "1,0,0").is_ok());
        assert!(matches!(bivector_flag(3, "1,0"), Err(CliError::BadFlag { .. })));
    }
}
