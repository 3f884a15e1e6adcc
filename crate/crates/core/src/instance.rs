//! Instance documents: one JSON object per instance, tagged by `kind`.
//!
//! ```json
//! {"kind":"graded_algebra","p":2,"dim":2,"mul":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
//!  "semigroup":{"n":2,"table":[[0,1],[1,0]],"zero":null},"deg":[0,1],"meta":{"name":"..."}}
//! ```
//!
//! Canonical output has sorted keys, no whitespace, structure constants in
//! `(i, j, k)` order and domains as canonical row-reduced bases, so equal
//! instances serialize to equal bytes and hash identically.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebras::Algebra;
use crate::error::{Error, Result};
use crate::fflinalg::Field;
use crate::gradings::GradedAlgebra;
use crate::groups::GroupTable;
use crate::partial::PartialAction;
use crate::semigroups::SemigroupTable;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub notes: Option<String>,
}

impl Meta {
    pub fn named(name: impl Into<String>) -> Self {
        Meta {
            name: name.into(),
            ..Meta::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Semigroup(SemigroupTable),
    Group(GroupTable),
    Algebra(Algebra),
    /// `e` is the idempotent the corner criterion should use, if given.
    GradedAlgebra { graded: GradedAlgebra, e: Option<usize> },
    PartialAction(PartialAction),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDocument {
    pub payload: Payload,
    pub meta: Meta,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SemigroupBlock {
    n: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    zero: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupBlock {
    n: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Raw {
    Semigroup {
        semigroup: SemigroupBlock,
        #[serde(default)]
        meta: Meta,
    },
    Group {
        group: GroupBlock,
        #[serde(default)]
        meta: Meta,
    },
    Algebra {
        p: u32,
        dim: usize,
        mul: Vec<[u64; 4]>,
        #[serde(default)]
        meta: Meta,
    },
    GradedAlgebra {
        p: u32,
        dim: usize,
        mul: Vec<[u64; 4]>,
        semigroup: SemigroupBlock,
        deg: Vec<usize>,
        #[serde(default)]
        e: Option<usize>,
        #[serde(default)]
        meta: Meta,
    },
    PartialAction {
        p: u32,
        dim: usize,
        mul: Vec<[u64; 4]>,
        group: GroupBlock,
        domains: Vec<Vec<Vec<u32>>>,
        maps: Vec<Vec<Vec<u32>>>,
        #[serde(default)]
        units: Vec<Vec<u32>>,
        #[serde(default)]
        meta: Meta,
    },
}

fn semigroup_from(block: SemigroupBlock) -> Result<SemigroupTable> {
    if block.table.len() != block.n {
        return Err(Error::Shape(format!(
            "semigroup table has {} rows, expected n = {}",
            block.table.len(),
            block.n
        )));
    }
    SemigroupTable::new(block.table, block.zero)
}

fn group_from(block: GroupBlock) -> Result<GroupTable> {
    if block.table.len() != block.n {
        return Err(Error::Shape(format!(
            "group table has {} rows, expected n = {}",
            block.table.len(),
            block.n
        )));
    }
    GroupTable::new(block.table)
}

fn algebra_from(p: u32, dim: usize, mul: &[[u64; 4]]) -> Result<Algebra> {
    let field = Field::new(p)?;
    let mut constants = Vec::with_capacity(mul.len());
    for (row, &[i, j, k, c]) in mul.iter().enumerate() {
        if c >= p as u64 {
            return Err(Error::Shape(format!("mul entry {row}: coefficient {c} is not a residue mod {p}")));
        }
        let idx = |x: u64| usize::try_from(x).unwrap_or(usize::MAX);
        constants.push((idx(i), idx(j), idx(k), c as u32));
    }
    Algebra::new(field, dim, &constants)
}

impl InstanceDocument {
    pub fn new(payload: Payload, meta: Meta) -> Self {
        InstanceDocument { payload, meta }
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Semigroup(_) => "semigroup",
            Payload::Group(_) => "group",
            Payload::Algebra(_) => "algebra",
            Payload::GradedAlgebra { .. } => "graded_algebra",
            Payload::PartialAction(_) => "partial_action",
        }
    }

    pub fn name(&self) -> &str {
        &self.meta.name
    }

    fn from_value(value: Value) -> Result<Self> {
        let raw: Raw = serde_json::from_value(value)?;
        Ok(match raw {
            Raw::Semigroup { semigroup, meta } => Self::new(Payload::Semigroup(semigroup_from(semigroup)?), meta),
            Raw::Group { group, meta } => Self::new(Payload::Group(group_from(group)?), meta),
            Raw::Algebra { p, dim, mul, meta } => Self::new(Payload::Algebra(algebra_from(p, dim, &mul)?), meta),
            Raw::GradedAlgebra {
                p,
                dim,
                mul,
                semigroup,
                deg,
                e,
                meta,
            } => {
                let graded = GradedAlgebra::new(algebra_from(p, dim, &mul)?, semigroup_from(semigroup)?, deg)?;
                if let Some(e) = e {
                    if e >= graded.semigroup().len() {
                        return Err(Error::Shape(format!("e = {e} is not a semigroup element")));
                    }
                }
                Self::new(Payload::GradedAlgebra { graded, e }, meta)
            }
            Raw::PartialAction {
                p,
                dim,
                mul,
                group,
                domains,
                maps,
                units,
                meta,
            } => {
                let pa = PartialAction::new(group_from(group)?, algebra_from(p, dim, &mul)?, domains, maps, units)?;
                Self::new(Payload::PartialAction(pa), meta)
            }
        })
    }

    /// The canonical JSON value (keys sorted by `serde_json`'s map).
    pub fn to_value(&self) -> Value {
        let algebra_fields = |alg: &Algebra| {
            let mul: Vec<[u64; 4]> = alg
                .constants()
                .into_iter()
                .map(|(i, j, k, c)| [i as u64, j as u64, k as u64, c as u64])
                .collect();
            (alg.field().p(), alg.dim(), mul)
        };
        let semigroup_block = |s: &SemigroupTable| json!({"n": s.len(), "table": s.table(), "zero": s.zero()});
        let group_block = |g: &GroupTable| json!({"n": g.len(), "table": g.as_semigroup().table()});
        let mut v = match &self.payload {
            Payload::Semigroup(s) => json!({"semigroup": semigroup_block(s)}),
            Payload::Group(g) => json!({"group": group_block(g)}),
            Payload::Algebra(a) => {
                let (p, dim, mul) = algebra_fields(a);
                json!({"p": p, "dim": dim, "mul": mul})
            }
            Payload::GradedAlgebra { graded, e } => {
                let (p, dim, mul) = algebra_fields(graded.algebra());
                let mut v = json!({
                    "p": p, "dim": dim, "mul": mul,
                    "semigroup": semigroup_block(graded.semigroup()),
                    "deg": graded.deg(),
                });
                if let Some(e) = e {
                    v["e"] = json!(e);
                }
                v
            }
            Payload::PartialAction(pa) => {
                let (p, dim, mul) = algebra_fields(pa.algebra());
                let n = pa.group().len();
                let domains: Vec<&[Vec<u32>]> = pa.domains().iter().map(|d| d.basis()).collect();
                let maps: Vec<&[Vec<u32>]> = (0..n).map(|g| pa.map_rows(g)).collect();
                json!({
                    "p": p, "dim": dim, "mul": mul,
                    "group": group_block(pa.group()),
                    "domains": domains,
                    "maps": maps,
                    "units": pa.units(),
                })
            }
        };
        v["kind"] = json!(self.kind());
        v["meta"] = serde_json::to_value(&self.meta).expect("meta serializes");
        v
    }

    /// Canonical single-line JSON.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(&self.to_value()).expect("values serialize")
    }

    /// SHA-256 of the canonical JSON, hex encoded.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_canonical_json().as_bytes()))
    }
}

/// Parses and validates one instance document.
pub fn parse_instance(text: &str) -> Result<InstanceDocument> {
    let value: Value = serde_json::from_str(text)?;
    InstanceDocument::from_value(value)
}

/// Parses a stream of documents: whitespace-separated JSON values (for
/// example one per line), where a top-level array contributes its elements.
pub fn parse_instances(text: &str) -> Result<Vec<InstanceDocument>> {
    let mut out = Vec::new();
    for value in serde_json::Deserializer::from_str(text).into_iter::<Value>() {
        match value? {
            Value::Array(items) => {
                for item in items {
                    out.push(InstanceDocument::from_value(item)?);
                }
            }
            other => out.push(InstanceDocument::from_value(other)?),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C2: &str = r#"{"kind":"graded_algebra","p":2,"dim":2,
        "mul":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
        "semigroup":{"n":2,"table":[[0,1],[1,0]],"zero":null},"deg":[0,1],
        "meta":{"name":"c2"}}"#;

    #[test]
    fn round_trip_is_canonical() {
        let doc = parse_instance(C2).unwrap();
        let text = doc.to_canonical_json();
        assert!(text.starts_with(r#"{"deg":[0,1],"dim":2,"kind":"graded_algebra","meta":{"name":"c2""#));
        let again = parse_instance(&text).unwrap();
        assert_eq!(again, doc);
        assert_eq!(again.to_canonical_json(), text);
        assert_eq!(doc.hash().len(), 64);
    }

    #[test]
    fn errors_carry_locations() {
        let ragged = r#"{"kind":"semigroup","semigroup":{"n":2,"table":[[0,1],[1]]}}"#;
        match parse_instance(ragged).unwrap_err() {
            Error::Shape(msg) => assert!(msg.contains("row 1"), "{msg}"),
            other => panic!("{other:?}"),
        }
        // x*y = y for x = 0, else 0: (1*0)*1 = 0*1 = 1 but 1*(0*1) = 1*1 = 0
        let nonassoc = r#"{"kind":"semigroup","semigroup":{"n":2,"table":[[0,1],[0,0]]}}"#;
        assert!(matches!(parse_instance(nonassoc).unwrap_err(), Error::NonAssociativeTable(..)));
        let syntax = r#"{"kind":"group","#;
        match parse_instance(syntax).unwrap_err() {
            Error::Json(e) => assert_eq!(e.line(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn streams_and_arrays() {
        let two = format!("{C2}\n{C2}");
        assert_eq!(parse_instances(&two).unwrap().len(), 2);
        let arr = format!("[{C2},{C2}]");
        assert_eq!(parse_instances(&arr).unwrap().len(), 2);
    }
}
