//! JSON and CSV forms of expansions, sequences and reports.
//!
//! A Schur expansion is a flat JSON object: `"degree"` first, then one key
//! per partition in the `[4,2,2]` text form, in decreasing lexicographic
//! order, each mapped to its integer coefficient. Integers are written
//! exactly, however large.

use plethyrs_core::flip::HCSequence;
use plethyrs_core::{BigInt, Partition, SchurExpansion};
use serde::Serializer;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("missing or invalid field {0:?}")]
    Field(String),
}

pub fn bigint_value(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer text is a JSON number"))
}

pub fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let values: Vec<Value> = v.iter().map(bigint_value).collect();
    s.collect_seq(values)
}

pub fn schur_to_json(f: &SchurExpansion) -> Value {
    let mut map = Map::new();
    map.insert("degree".into(), Value::from(f.degree()));
    for (lam, c) in f.iter_desc() {
        map.insert(lam.to_string(), bigint_value(c));
    }
    Value::Object(map)
}

pub fn schur_from_json(text: &str) -> Result<SchurExpansion, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let map = value.as_object().ok_or_else(|| FormatError::Field("<root>".into()))?;
    let degree = map
        .get("degree")
        .and_then(Value::as_u64)
        .and_then(|d| u32::try_from(d).ok())
        .ok_or_else(|| FormatError::Field("degree".into()))?;
    let mut terms = Vec::new();
    for (key, v) in map.iter().filter(|(k, _)| *k != "degree") {
        let lam: Partition = key.parse().map_err(|_| FormatError::Field(key.clone()))?;
        let c: BigInt = match v {
            Value::Number(n) => n.to_string().parse().map_err(|_| FormatError::Field(key.clone()))?,
            _ => return Err(FormatError::Field(key.clone())),
        };
        terms.push((lam, c));
    }
    SchurExpansion::from_terms(degree, terms).map_err(|e| FormatError::Field(e.to_string()))
}

/// `partition,coefficient` rows in decreasing lexicographic order.
pub fn schur_to_csv(f: &SchurExpansion) -> String {
    let mut out = String::from("partition,coefficient\n");
    for (lam, c) in f.iter_desc() {
        out.push_str(&format!("\"{lam}\",{c}\n"));
    }
    out
}

pub fn hcseq_to_json(seq: &HCSequence) -> Value {
    let mut map = Map::new();
    map.insert("degree".into(), Value::from(seq.degree()));
    map.insert("gamma".into(), Value::from(seq.gamma()));
    map.insert("entries".into(), Value::Array(seq.entries().iter().map(bigint_value).collect()));
    Value::Object(map)
}

/// Header `n,gamma,b0,b1,...` sized for `len` entries.
pub fn hcseq_csv_header(len: usize) -> String {
    let mut out = String::from("n,gamma");
    for i in 0..len {
        out.push_str(&format!(",b{i}"));
    }
    out
}

/// One `n,gamma,b0,b1,...` row.
pub fn hcseq_csv_row(seq: &HCSequence) -> String {
    let mut out = format!("{},{}", seq.degree(), seq.gamma());
    for e in seq.entries() {
        out.push_str(&format!(",{e}"));
    }
    out
}

/// Entries as `(e0, e1, ...)`.
pub fn hcseq_tuple(seq: &HCSequence) -> String {
    let items: Vec<String> = seq.entries().iter().map(ToString::to_string).collect();
    format!("({})", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn schur_json_layout() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let f = SchurExpansion::from_terms(4, [(p(&[2, 2]), BigInt::from(1)), (p(&[4]), big)])
            .unwrap();
        let text = schur_to_json(&f).to_string();
        assert_eq!(text, r#"{"degree":4,"[4]":123456789012345678901234567890,"[2,2]":1}"#);
        assert_eq!(schur_from_json(&text).unwrap(), f);
        assert!(schur_from_json("{\"[4]\":1}").is_err());
    }

    #[test]
    fn sequence_forms() {
        let seq = HCSequence::new(12, 0, [1, 2, 3, 3, 2, 1].map(BigInt::from).to_vec());
        assert_eq!(hcseq_to_json(&seq).to_string(), r#"{"degree":12,"gamma":0,"entries":[1,2,3,3,2,1]}"#);
        assert_eq!(hcseq_csv_row(&seq), "12,0,1,2,3,3,2,1");
        assert_eq!(hcseq_csv_header(2), "n,gamma,b0,b1");
        assert_eq!(hcseq_tuple(&seq), "(1, 2, 3, 3, 2, 1)");
    }
}
