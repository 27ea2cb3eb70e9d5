//! CSV and JSON tables built from gonality results or order reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gonality::GonalityResult;
use crate::scramble::OrderReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Record {
    Gonality(GonalityResult),
    Order(OrderReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    Gonality,
    Order,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl Record {
    pub fn kind(&self) -> RecordKind {
        match self {
            Record::Gonality(_) => RecordKind::Gonality,
            Record::Order(_) => RecordKind::Order,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalityRow {
    pub dims: String,
    pub k: i64,
    pub value: Option<i64>,
    pub exhaustive: bool,
    pub witness_digest: Option<String>,
    pub time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRow {
    pub dims: String,
    pub eggs: usize,
    pub hitting_number: u64,
    pub min_egg_cut: Option<u64>,
    pub order: u64,
    pub witness_digest: String,
    pub time_ms: Option<u64>,
}

const GONALITY_COLUMNS: [&str; 6] = ["dims", "k", "value", "exhaustive", "witness_digest", "time_ms"];
const ORDER_COLUMNS: [&str; 7] =
    ["dims", "eggs", "hitting_number", "min_egg_cut", "order", "witness_digest", "time_ms"];

fn short_digest(bytes: &[u8]) -> String {
    hex::encode(&Sha256::digest(bytes)[..8])
}

fn dims_label(dims: &Option<Vec<usize>>) -> String {
    match dims {
        Some(d) => d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("x"),
        None => String::new(),
    }
}

impl From<&GonalityResult> for GonalityRow {
    fn from(r: &GonalityResult) -> Self {
        GonalityRow {
            dims: dims_label(&r.dims),
            k: r.k,
            value: r.value,
            exhaustive: r.exhaustive,
            witness_digest: r
                .witness
                .as_ref()
                .map(|w| short_digest(&serde_json::to_vec(&w.chips).expect("chips encode"))),
            time_ms: r.wall_time_ms,
        }
    }
}

impl From<&OrderReport> for OrderRow {
    fn from(r: &OrderReport) -> Self {
        let witness = (r.max_avoidance, r.cut_witness);
        OrderRow {
            dims: dims_label(&r.dims),
            eggs: r.egg_count,
            hitting_number: r.hitting_number,
            min_egg_cut: r.min_egg_cut,
            order: r.order,
            witness_digest: short_digest(&serde_json::to_vec(&witness).expect("witness encodes")),
            time_ms: r.wall_time_ms,
        }
    }
}

fn cell<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or(String::new(), T::to_string)
}

/// Renders records of one kind as a table with a fixed column order.
/// An empty list yields just the header (CSV) or `[]` (JSON).
pub fn emit_table(kind: RecordKind, records: &[Record], format: TableFormat) -> Result<String> {
    if let Some(r) = records.iter().find(|r| r.kind() != kind) {
        return Err(Error::InvalidArguments(format!(
            "cannot mix {:?} records into a {kind:?} table",
            r.kind()
        )));
    }
    match format {
        TableFormat::Json => {
            let rows: Vec<serde_json::Value> = records
                .iter()
                .map(|r| match r {
                    Record::Gonality(g) => serde_json::to_value(GonalityRow::from(g)),
                    Record::Order(o) => serde_json::to_value(OrderRow::from(o)),
                })
                .collect::<std::result::Result<_, _>>()?;
            // serde_json maps keep keys sorted
            Ok(serde_json::to_string_pretty(&rows)? + "\n")
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match kind {
                RecordKind::Gonality => w.write_record(GONALITY_COLUMNS)?,
                RecordKind::Order => w.write_record(ORDER_COLUMNS)?,
            }
            for r in records {
                match r {
                    Record::Gonality(g) => {
                        let row = GonalityRow::from(g);
                        w.write_record([
                            row.dims,
                            row.k.to_string(),
                            cell(&row.value),
                            row.exhaustive.to_string(),
                            cell(&row.witness_digest),
                            cell(&row.time_ms),
                        ])?;
                    }
                    Record::Order(o) => {
                        let row = OrderRow::from(o);
                        w.write_record([
                            row.dims,
                            row.eggs.to_string(),
                            row.hitting_number.to_string(),
                            cell(&row.min_egg_cut),
                            row.order.to_string(),
                            row.witness_digest,
                            cell(&row.time_ms),
                        ])?;
                    }
                }
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}
