//! Structured command results and their JSON, CSV and text renderings.
//!
//! JSON integers up to `2⁵³ − 1` are written as numbers; larger values are
//! written as decimal strings so that no consumer loses precision. Both forms
//! are accepted when parsing.

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

/// Largest integer a double represents exactly.
pub const MAX_SAFE_JSON_INT: u64 = (1 << 53) - 1;

/// An unbounded integer with the JSON encoding described above.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(pub BigUint);

impl From<BigUint> for Int {
    fn from(v: BigUint) -> Self {
        Int(v)
    }
}

impl From<&BigUint> for Int {
    fn from(v: &BigUint) -> Self {
        Int(v.clone())
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        Int(v.into())
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Self {
        Int(v.into())
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(&self.0) {
            Ok(v) if v <= MAX_SAFE_JSON_INT => serializer.serialize_u64(v),
            _ => serializer.serialize_str(&self.0.to_str_radix(10)),
        }
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = Int;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a nonnegative integer or a decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
        u64::try_from(v)
            .map(|v| Int(v.into()))
            .map_err(|_| E::custom(format!("negative integer {v}")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
        BigUint::parse_bytes(v.as_bytes(), 10)
            .filter(|_| !v.is_empty() && v.bytes().all(|b| b.is_ascii_digit()))
            .map(Int)
            .ok_or_else(|| E::custom(format!("invalid decimal integer {v:?}")))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(IntVisitor)
    }
}

pub fn ints(parts: &[BigUint]) -> Vec<Int> {
    parts.iter().map(Int::from).collect()
}

fn join_plus(parts: &[Int]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        write!(out, "{p}").unwrap();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Verify,
    Generate,
    Enumerate,
    Count,
    Table,
    Series,
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Recurrence,
    Enumerate,
    Genfun,
    Auto,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Recurrence => "recurrence",
            CountMethod::Enumerate => "enumerate",
            CountMethod::Genfun => "genfun",
            CountMethod::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: Int,
    pub upper: Int,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub parts: Vec<Int>,
    pub m: Int,
    pub n: u64,
    pub weak: bool,
    pub m_partition: bool,
    pub bounds: Option<BoundsReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerateReport {
    pub m: Int,
    pub algorithm: u8,
    pub parts: Vec<Int>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub m: Int,
    pub parts: Vec<Vec<Int>>,
    pub count: Int,
    pub limit: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub m: Int,
    pub count: Int,
    pub method: CountMethod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: u64,
    pub a_m: Int,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub j: u64,
    pub b: Int,
    pub coeff: Int,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub rows: Vec<SeriesRow>,
    pub matches: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub groups: Vec<GroupResult>,
    pub passed: bool,
}

/// The result of one CLI command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OutputRecord {
    Verify(VerifyReport),
    Generate(GenerateReport),
    Enumerate(EnumerateReport),
    Count(CountReport),
    Table(TableReport),
    Series(SeriesReport),
    Selftest(SelftestReport),
}

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl OutputRecord {
    pub fn kind(&self) -> Kind {
        match self {
            OutputRecord::Verify(_) => Kind::Verify,
            OutputRecord::Generate(_) => Kind::Generate,
            OutputRecord::Enumerate(_) => Kind::Enumerate,
            OutputRecord::Count(_) => Kind::Count,
            OutputRecord::Table(_) => Kind::Table,
            OutputRecord::Series(_) => Kind::Series,
            OutputRecord::Selftest(_) => Kind::Selftest,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Every partition the record carries.
    pub fn partitions(&self) -> Vec<Partition> {
        let to_partition =
            |parts: &[Int]| Partition::new(parts.iter().map(|p| p.0.clone()).collect()).ok();
        match self {
            OutputRecord::Verify(r) => to_partition(&r.parts).into_iter().collect(),
            OutputRecord::Generate(r) => to_partition(&r.parts).into_iter().collect(),
            OutputRecord::Enumerate(r) => r.parts.iter().filter_map(|p| to_partition(p)).collect(),
            _ => Vec::new(),
        }
    }

    /// CSV rendering; only tabular records have one.
    pub fn to_csv(&self) -> Option<String> {
        let mut out = String::new();
        match self {
            OutputRecord::Table(t) => {
                out.push_str("m,a_m\n");
                for row in &t.rows {
                    writeln!(out, "{},{}", row.m, row.a_m).unwrap();
                }
            }
            OutputRecord::Series(s) => {
                out.push_str("j,b,coeff,match\n");
                for (row, ok) in s.rows.iter().zip(&s.matches) {
                    writeln!(out, "{},{},{},{}", row.j, row.b, row.coeff, ok).unwrap();
                }
            }
            _ => return None,
        }
        Some(out)
    }

    /// Human-readable rendering, partitions written as `1+2+4`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            OutputRecord::Verify(r) => {
                writeln!(out, "parts: {}", join_plus(&r.parts)).unwrap();
                writeln!(out, "m: {}", r.m).unwrap();
                writeln!(out, "n: {}", r.n).unwrap();
                writeln!(out, "weak: {}", r.weak).unwrap();
                writeln!(out, "m_partition: {}", r.m_partition).unwrap();
                match &r.bounds {
                    Some(b) => writeln!(out, "largest part bounds: {}..={}", b.lower, b.upper),
                    None => writeln!(out, "largest part bounds: none (m < 2)"),
                }
                .unwrap();
            }
            OutputRecord::Generate(r) => {
                writeln!(out, "{}", join_plus(&r.parts)).unwrap();
                writeln!(out, "algorithm: {}", r.algorithm).unwrap();
                writeln!(out, "verified: {}", r.verified).unwrap();
            }
            OutputRecord::Enumerate(r) => {
                for p in &r.parts {
                    writeln!(out, "{}", join_plus(p)).unwrap();
                }
                writeln!(out, "count {}", r.count).unwrap();
            }
            OutputRecord::Count(r) => {
                writeln!(out, "{}", r.count).unwrap();
                writeln!(out, "method: {}", r.method).unwrap();
            }
            OutputRecord::Table(_) | OutputRecord::Series(_) => {
                out = self.to_csv().expect("tabular record");
            }
            OutputRecord::Selftest(r) => {
                for g in &r.groups {
                    let status = if g.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{status} {}: {}", g.name, g.detail).unwrap();
                }
                writeln!(
                    out,
                    "{}",
                    if r.passed {
                        "all groups passed"
                    } else {
                        "selftest failed"
                    }
                )
                .unwrap();
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Text => Some(self.to_text()),
            Format::Csv => self.to_csv(),
            Format::Json => Some(self.to_json() + "\n"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ints_switch_to_strings_past_the_safe_range() {
        let safe = Int::from(MAX_SAFE_JSON_INT);
        let unsafe_ = Int::from(MAX_SAFE_JSON_INT + 1);
        assert_eq!(serde_json::to_string(&safe).unwrap(), "9007199254740991");
        assert_eq!(
            serde_json::to_string(&unsafe_).unwrap(),
            "\"9007199254740992\""
        );
        let back: Int = serde_json::from_str("\"9007199254740992\"").unwrap();
        assert_eq!(back, unsafe_);
        let back: Int = serde_json::from_str("12").unwrap();
        assert_eq!(back, Int::from(12u64));
        assert!(serde_json::from_str::<Int>("-1").is_err());
        assert!(serde_json::from_str::<Int>("\"12a\"").is_err());
        assert!(serde_json::from_str::<Int>("\"\"").is_err());
    }

    #[test]
    fn json_keys() {
        let r = OutputRecord::Count(CountReport {
            m: 64u64.into(),
            count: 908u64.into(),
            method: CountMethod::Recurrence,
        });
        assert_eq!(
            r.to_json(),
            r#"{"kind":"count","m":64,"count":908,"method":"recurrence"}"#
        );
        assert_eq!(r.kind(), Kind::Count);
        assert_eq!(r.to_text(), "908\nmethod: recurrence\n");
        assert_eq!(r.to_csv(), None);
    }

    #[test]
    fn table_csv_layout() {
        let r = OutputRecord::Table(TableReport {
            rows: vec![TableRow {
                m: 1,
                a_m: 1u64.into(),
            }],
        });
        assert_eq!(r.to_csv().unwrap(), "m,a_m\n1,1\n");
        assert_eq!(r.render(Format::Text).unwrap(), "m,a_m\n1,1\n");
    }
}
