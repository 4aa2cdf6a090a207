//! JSON encoding of rings, elements, scopes, and reports.
//!
//! The wire format is stable and deterministic: ring descriptors are tagged
//! objects like `{"kind":"zmod","n":6}`, elements pair a ring with a value
//! as in `{"ring":{"kind":"zmod","n":6},"value":4}`, rationals travel as
//! strings (`"1/2"`), and residues and prime-field entries as numbers.
//! Matrices are row-major arrays of rows. Parsing is liberal where harmless
//! (negative or oversized integers are reduced into canonical range,
//! rational strings may be plain integers); output is always canonical, so
//! identical inputs serialize to identical bytes.

use crate::error::Error;
use crate::linalg::Matrix;
use crate::oracle::{OracleReport, Scope, SearchOutcome};
use crate::ring::{RingDescriptor, RingElement, Value};
use crate::scalar::{parse_rational, rational_to_string, FieldKind, Scalar};
use serde::ser::{Serialize, Serializer};
use serde_json::{json, Value as Json};

pub fn ring_to_json(ring: RingDescriptor) -> Json {
    match ring {
        RingDescriptor::ZMod { n } => json!({"kind": "zmod", "n": n}),
        RingDescriptor::Field(FieldKind::Rational) => json!({"kind": "q"}),
        RingDescriptor::Field(FieldKind::Prime(p)) => json!({"kind": "fp", "p": p}),
        RingDescriptor::MatrixRing {
            base: FieldKind::Rational,
            dim,
        } => json!({"kind": "matq", "dim": dim}),
        RingDescriptor::MatrixRing {
            base: FieldKind::Prime(p),
            dim,
        } => json!({"kind": "matfp", "p": p, "dim": dim}),
    }
}

fn field_str(v: &Json, key: &str) -> Result<String, Error> {
    v.get(key)
        .and_then(Json::as_str)
        .map(str::to_string)
        .ok_or_else(|| Error::parse(format!("missing or non-string field \"{key}\"")))
}

fn field_u64(v: &Json, key: &str) -> Result<u64, Error> {
    v.get(key)
        .and_then(Json::as_u64)
        .ok_or_else(|| Error::parse(format!("missing or non-integer field \"{key}\"")))
}

/// Parses a ring descriptor from its JSON object form.
pub fn parse_ring(v: &Json) -> Result<RingDescriptor, Error> {
    if !v.is_object() {
        return Err(Error::parse("ring descriptor must be a JSON object"));
    }
    match field_str(v, "kind")?.as_str() {
        "zmod" => RingDescriptor::zmod(field_u64(v, "n")?),
        "q" => Ok(RingDescriptor::rationals()),
        "fp" => RingDescriptor::prime_field(field_u64(v, "p")?),
        "matq" => RingDescriptor::matrix_ring(FieldKind::Rational, dim_of(v)?),
        "matfp" => {
            let base = FieldKind::prime(field_u64(v, "p")?)?;
            RingDescriptor::matrix_ring(base, dim_of(v)?)
        }
        other => Err(Error::parse(format!("unknown ring kind \"{other}\""))),
    }
}

fn dim_of(v: &Json) -> Result<usize, Error> {
    let dim = field_u64(v, "dim")?;
    usize::try_from(dim).map_err(|_| Error::InvalidDimension)
}

/// Parses a ring descriptor from either compact text (`zmod:6`, `q`,
/// `fp:5`, `matq:2`, `matfp:5:3`) or the JSON object form.
pub fn parse_ring_str(s: &str) -> Result<RingDescriptor, Error> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Json =
            serde_json::from_str(s).map_err(|e| Error::parse(format!("invalid JSON: {e}")))?;
        return parse_ring(&v);
    }
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| -> Result<u64, Error> {
        p.parse()
            .map_err(|_| Error::parse(format!("expected a number, got \"{p}\"")))
    };
    match parts.as_slice() {
        ["zmod", n] => RingDescriptor::zmod(num(n)?),
        ["q"] => Ok(RingDescriptor::rationals()),
        ["fp", p] => RingDescriptor::prime_field(num(p)?),
        ["matq", d] => RingDescriptor::matrix_ring(FieldKind::Rational, num(d)? as usize),
        ["matfp", p, d] => {
            RingDescriptor::matrix_ring(FieldKind::prime(num(p)?)?, num(d)? as usize)
        }
        _ => Err(Error::parse(format!("unrecognized ring \"{s}\""))),
    }
}

fn scalar_to_json(s: &Scalar) -> Json {
    match s {
        Scalar::Rational(r) => Json::String(rational_to_string(r)),
        Scalar::Prime { value, .. } => json!(value),
    }
}

fn matrix_to_json(m: &Matrix) -> Json {
    let rows: Vec<Json> = (0..m.rows())
        .map(|i| Json::Array((0..m.cols()).map(|j| scalar_to_json(m.get(i, j))).collect()))
        .collect();
    Json::Array(rows)
}

/// The bare value part of an element (no ring tag).
pub fn value_to_json(x: &RingElement) -> Json {
    match x.value() {
        Value::Residue(r) => json!(r),
        Value::Scalar(s) => scalar_to_json(s),
        Value::Matrix(m) => matrix_to_json(m),
    }
}

/// The full `{"ring":…,"value":…}` encoding of an element.
pub fn element_to_json(x: &RingElement) -> Json {
    json!({"ring": ring_to_json(x.ring()), "value": value_to_json(x)})
}

fn integer_from_json(v: &Json) -> Result<i128, Error> {
    let n = v
        .as_number()
        .ok_or_else(|| Error::parse(format!("expected an integer, got {v}")))?;
    if let Some(i) = n.as_i64() {
        Ok(i128::from(i))
    } else if let Some(u) = n.as_u64() {
        Ok(i128::from(u))
    } else {
        Err(Error::parse(format!("expected an integer, got {n}")))
    }
}

fn residue_from_json(n: u64, v: &Json) -> Result<u64, Error> {
    let i = integer_from_json(v)?;
    Ok(i.rem_euclid(i128::from(n)) as u64)
}

fn scalar_from_json(field: FieldKind, v: &Json) -> Result<Scalar, Error> {
    match field {
        FieldKind::Rational => match v {
            Json::String(s) => Ok(Scalar::Rational(parse_rational(s)?)),
            _ => {
                let i = integer_from_json(v).map_err(|_| {
                    Error::parse(format!("expected \"p/q\" string or integer, got {v}"))
                })?;
                Ok(Scalar::Rational(num_rational::BigRational::from_integer(
                    i.into(),
                )))
            }
        },
        FieldKind::Prime(p) => {
            let i = integer_from_json(v)?;
            Ok(Scalar::Prime {
                p,
                value: i.rem_euclid(i128::from(p)) as u64,
            })
        }
    }
}

fn matrix_from_json(base: FieldKind, dim: usize, v: &Json) -> Result<Matrix, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::parse("matrix value must be an array of rows"))?;
    if rows.len() != dim {
        return Err(Error::parse(format!(
            "expected {dim} rows, got {}",
            rows.len()
        )));
    }
    // Grown while parsing rather than reserved up front: a hostile `dim`
    // with short rows must fail on the length checks before any large
    // allocation happens.
    let mut entries = Vec::new();
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| Error::parse("matrix row must be an array"))?;
        if cells.len() != dim {
            return Err(Error::parse(format!(
                "expected {dim} entries per row, got {}",
                cells.len()
            )));
        }
        for cell in cells {
            entries.push(scalar_from_json(base, cell)?);
        }
    }
    Ok(Matrix::new(dim, dim, base, entries))
}

/// Parses an element of a known ring from its bare value form, or from the
/// full `{"ring":…,"value":…}` form (whose ring must match).
pub fn parse_element_with(ring: RingDescriptor, v: &Json) -> Result<RingElement, Error> {
    if let Some(obj) = v.as_object() {
        if obj.contains_key("ring") || obj.contains_key("value") {
            let declared = parse_ring(
                obj.get("ring")
                    .ok_or_else(|| Error::parse("element object is missing \"ring\""))?,
            )?;
            if declared != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: declared.to_string(),
                });
            }
            let value = obj
                .get("value")
                .ok_or_else(|| Error::parse("element object is missing \"value\""))?;
            return parse_bare(ring, value);
        }
        return Err(Error::parse(
            "element object must carry \"ring\" and \"value\"",
        ));
    }
    parse_bare(ring, v)
}

/// Parses a self-describing `{"ring":…,"value":…}` element.
pub fn parse_element(v: &Json) -> Result<RingElement, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse("element must be a JSON object"))?;
    let ring = parse_ring(
        obj.get("ring")
            .ok_or_else(|| Error::parse("element object is missing \"ring\""))?,
    )?;
    parse_bare(
        ring,
        obj.get("value")
            .ok_or_else(|| Error::parse("element object is missing \"value\""))?,
    )
}

fn parse_bare(ring: RingDescriptor, v: &Json) -> Result<RingElement, Error> {
    let value = match ring {
        RingDescriptor::ZMod { n } => Value::Residue(residue_from_json(n, v)?),
        RingDescriptor::Field(f) => Value::Scalar(scalar_from_json(f, v)?),
        RingDescriptor::MatrixRing { base, dim } => Value::Matrix(matrix_from_json(base, dim, v)?),
    };
    RingElement::new(ring, value)
}

/// Parses a sweep scope: `exhaustive` or `sample:<count>:<seed>`.
pub fn parse_scope(s: &str) -> Result<Scope, Error> {
    let s = s.trim();
    if s == "exhaustive" {
        return Ok(Scope::Exhaustive);
    }
    if let Some(rest) = s.strip_prefix("sample:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if let [count, seed] = parts.as_slice() {
            let count = count
                .parse()
                .map_err(|_| Error::parse(format!("invalid sample count \"{count}\"")))?;
            let seed = seed
                .parse()
                .map_err(|_| Error::parse(format!("invalid sample seed \"{seed}\"")))?;
            return Ok(Scope::Sample { count, seed });
        }
    }
    Err(Error::parse(format!(
        "scope must be \"exhaustive\" or \"sample:<count>:<seed>\", got \"{s}\""
    )))
}

pub fn scope_to_string(scope: Scope) -> String {
    match scope {
        Scope::Exhaustive => "exhaustive".to_string(),
        Scope::Sample { count, seed } => format!("sample:{count}:{seed}"),
    }
}

impl Serialize for RingDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ring_to_json(*self).serialize(serializer)
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        element_to_json(self).serialize(serializer)
    }
}

impl Serialize for OracleReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let witnesses: Vec<Json> = self.witnesses.iter().map(element_to_json).collect();
        json!({
            "query": self.query,
            "witnesses": witnesses,
            "unique": self.unique,
            "enumerated_count": self.enumerated_count,
        })
        .serialize(serializer)
    }
}

impl Serialize for SearchOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let counterexample = match &self.counterexample {
            Some(tuple) => Json::Array(tuple.iter().map(element_to_json).collect()),
            None => Json::Null,
        };
        json!({
            "law": self.law,
            "ring": ring_to_json(self.ring),
            "counterexample": counterexample,
            "tuples_checked": self.tuples_checked,
        })
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn golden_encodings_match_locked_forms() {
        let z6 = RingDescriptor::zmod(6).unwrap();
        let x = z6.from_integer(4);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"ring":{"kind":"zmod","n":6},"value":4}"#
        );
        let m = RingDescriptor::matrix_ring(FieldKind::Rational, 2).unwrap();
        let half = parse_element_with(m, &json!([["1", "0"], ["1/2", "1"]])).unwrap();
        assert_eq!(
            serde_json::to_string(&half).unwrap(),
            r#"{"ring":{"kind":"matq","dim":2},"value":[["1","0"],["1/2","1"]]}"#
        );
        let f53 = RingDescriptor::matrix_ring(FieldKind::prime(5).unwrap(), 3).unwrap();
        assert_eq!(
            serde_json::to_string(&f53).unwrap(),
            r#"{"kind":"matfp","p":5,"dim":3}"#
        );
    }

    #[test]
    fn parse_accepts_liberal_inputs() {
        let z6 = RingDescriptor::zmod(6).unwrap();
        assert_eq!(
            parse_element_with(z6, &json!(-1)).unwrap(),
            z6.from_integer(5)
        );
        let q = RingDescriptor::rationals();
        assert_eq!(parse_element_with(q, &json!(3)).unwrap(), q.from_integer(3));
        assert_eq!(
            parse_element_with(q, &json!("6/4")).unwrap(),
            parse_element_with(q, &json!("3/2")).unwrap()
        );
        let mf = RingDescriptor::matrix_ring(FieldKind::prime(5).unwrap(), 2).unwrap();
        let x = parse_element_with(mf, &json!([[7, -1], [0, 1]])).unwrap();
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"ring":{"kind":"matfp","p":5,"dim":2},"value":[[2,4],[0,1]]}"#
        );
    }

    #[test]
    fn parse_ring_str_compact_and_json() {
        assert_eq!(
            parse_ring_str("zmod:6").unwrap(),
            RingDescriptor::zmod(6).unwrap()
        );
        assert_eq!(parse_ring_str("q").unwrap(), RingDescriptor::rationals());
        assert_eq!(
            parse_ring_str("fp:7").unwrap(),
            RingDescriptor::prime_field(7).unwrap()
        );
        assert_eq!(
            parse_ring_str("matfp:5:3").unwrap(),
            RingDescriptor::matrix_ring(FieldKind::prime(5).unwrap(), 3).unwrap()
        );
        assert_eq!(
            parse_ring_str(r#"{"kind":"matq","dim":2}"#).unwrap(),
            RingDescriptor::matrix_ring(FieldKind::Rational, 2).unwrap()
        );
        assert!(parse_ring_str("zmod:0").is_err());
        assert!(parse_ring_str("ring-of-power").is_err());
    }

    #[test]
    fn full_element_form_requires_matching_ring() {
        let z6 = RingDescriptor::zmod(6).unwrap();
        let v = json!({"ring": {"kind": "zmod", "n": 4}, "value": 1});
        assert!(matches!(
            parse_element_with(z6, &v),
            Err(Error::RingMismatch { .. })
        ));
        let ok = json!({"ring": {"kind": "zmod", "n": 6}, "value": 7});
        assert_eq!(parse_element_with(z6, &ok).unwrap(), z6.from_integer(1));
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let z6 = RingDescriptor::zmod(6).unwrap();
        assert!(parse_element_with(z6, &json!("four")).is_err());
        assert!(parse_element_with(z6, &json!(1.5)).is_err());
        let m = RingDescriptor::matrix_ring(FieldKind::Rational, 2).unwrap();
        assert!(parse_element_with(m, &json!([["1", "0"]])).is_err());
        assert!(parse_element_with(m, &json!([["1", "0"], ["1/0", "1"]])).is_err());
        assert!(parse_ring(&json!({"kind": "zmod"})).is_err());
        assert!(parse_ring(&json!({"kind": "fp", "p": 6})).is_err());
        assert!(parse_ring(&json!([1, 2])).is_err());
    }

    #[test]
    fn scope_round_trip() {
        assert_eq!(parse_scope("exhaustive").unwrap(), Scope::Exhaustive);
        assert_eq!(
            parse_scope("sample:100000:42").unwrap(),
            Scope::Sample {
                count: 100000,
                seed: 42
            }
        );
        assert_eq!(
            scope_to_string(Scope::Sample { count: 5, seed: 9 }),
            "sample:5:9"
        );
        assert!(parse_scope("sample:ten:42").is_err());
        assert!(parse_scope("all").is_err());
        assert!(parse_scope("sample:1").is_err());
    }

    fn any_supported_ring() -> impl Strategy<Value = RingDescriptor> {
        prop_oneof![
            (1u64..30).prop_map(|n| RingDescriptor::zmod(n).unwrap()),
            Just(RingDescriptor::rationals()),
            Just(RingDescriptor::prime_field(5).unwrap()),
            Just(RingDescriptor::matrix_ring(FieldKind::Rational, 2).unwrap()),
            Just(RingDescriptor::matrix_ring(FieldKind::prime(3).unwrap(), 2).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn element_round_trips(ring in any_supported_ring(), seed in any::<i64>()) {
            // A haphazard but deterministic element of the ring.
            let x = match ring {
                RingDescriptor::MatrixRing { base, dim } => RingElement::from_matrix(
                    Matrix::from_fn(dim, dim, base, |i, j| {
                        base.from_integer(seed.wrapping_add((3 * i + j) as i64) % 97)
                    }),
                ),
                _ => ring.from_integer(seed),
            };
            let encoded = element_to_json(&x);
            prop_assert_eq!(parse_element(&encoded).unwrap(), x.clone());
            prop_assert_eq!(parse_element_with(ring, &value_to_json(&x)).unwrap(), x);
        }
    }
}
