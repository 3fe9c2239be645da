use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `true`, `false`, or `"undecided"` in JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cyclicity {
    Yes,
    No,
    Undecided,
}

impl Serialize for Cyclicity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cyclicity::Yes => s.serialize_bool(true),
            Cyclicity::No => s.serialize_bool(false),
            Cyclicity::Undecided => s.serialize_str("undecided"),
        }
    }
}

impl<'de> Deserialize<'de> for Cyclicity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Bool(bool),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Bool(true) => Ok(Cyclicity::Yes),
            Raw::Bool(false) => Ok(Cyclicity::No),
            Raw::Text(t) if t == "undecided" => Ok(Cyclicity::Undecided),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad cyclic value {t:?}"))),
        }
    }
}

impl std::fmt::Display for Cyclicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Cyclicity::Yes => "yes",
            Cyclicity::No => "no",
            Cyclicity::Undecided => "undecided",
        })
    }
}

/// Wall-clock measurements; the only non-deterministic part of a record.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
    pub distance_ms: f64,
    pub aut_ms: f64,
    pub cyclic_ms: f64,
}

/// One analyzed code, written as a JSON line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub source: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub weight_spectrum: Option<Vec<usize>>,
    pub aut_order: Option<String>,
    pub aut_classification: String,
    pub aut_search_nodes: Option<u64>,
    pub cyclic: Cyclicity,
    /// One-line images of a regular cycle in the automorphism group.
    pub cyclic_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beyond_theorem: Option<bool>,
    /// Field name to error tag and message, for fields that could not be computed.
    pub errors: BTreeMap<String, String>,
    pub timing: Timing,
}

impl CodeRecord {
    pub fn parameters(&self) -> String {
        match self.d {
            Some(d) => format!("[{},{},{}]", self.n, self.k, d),
            None => format!("[{},{},-]", self.n, self.k),
        }
    }

    /// The record as one JSON line without timing, for reproducibility checks.
    pub fn to_json_line_without_timing(&self) -> String {
        let mut v = serde_json::to_value(self).expect("record serializes");
        v.as_object_mut().expect("object").remove("timing");
        v.to_string()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Aligned text table of records.
pub fn summary_table(records: &[CodeRecord]) -> String {
    let header = ["source", "params", "aut_order", "class", "cyclic"];
    let rows: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            [
                r.source.clone(),
                r.parameters(),
                r.aut_order.clone().unwrap_or_else(|| "undecided".into()),
                r.aut_classification.clone(),
                r.cyclic.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: &[&str], out: &mut String| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&header, &mut out);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&cells, &mut out);
    }
    out
}
