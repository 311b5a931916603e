//! Per-element records and summaries, rendered as a table or JSON lines.

use std::io::{self, Write};

use serde::Serialize;

use crate::checker::{Status, ValidityVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Jsonl,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "jsonl" => Ok(Format::Jsonl),
            other => Err(format!("unknown format '{other}' (expected table|jsonl)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessRecord {
    pub point: [f64; 3],
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub id: String,
    pub status: Status,
    pub witness: Option<WitnessRecord>,
    pub lower_bound: Option<f64>,
    pub subdivisions: u64,
    pub depth: u32,
}

impl Record {
    pub fn new(id: &str, v: &ValidityVerdict) -> Self {
        Self {
            id: id.to_string(),
            status: v.status,
            witness: v.witness.map(|w| WitnessRecord {
                point: w.point.to_array(),
                value: w.value,
            }),
            lower_bound: v.lower_bound,
            subdivisions: v.subdivisions,
            depth: v.depth,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub elements: usize,
    pub valid: usize,
    pub invalid: usize,
    pub undetermined: usize,
    pub wall_time_s: f64,
    pub elements_per_second: f64,
}

impl Summary {
    pub fn tally(records: &[Record], wall_time_s: f64) -> Self {
        let count = |s| records.iter().filter(|r| r.status == s).count();
        Self {
            elements: records.len(),
            valid: count(Status::Valid),
            invalid: count(Status::Invalid),
            undetermined: count(Status::Undetermined),
            wall_time_s,
            elements_per_second: rate(records.len(), wall_time_s),
        }
    }
}

pub(crate) fn rate(count: usize, secs: f64) -> f64 {
    if count == 0 || secs <= 0.0 {
        0.0
    } else {
        count as f64 / secs
    }
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

pub fn write_check_report<W: Write>(
    w: &mut W,
    format: Format,
    records: &[Record],
    summary: &Summary,
) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
            serde_json::to_writer(&mut *w, &SummaryLine { summary })?;
            writeln!(w)?;
        }
        Format::Table => {
            let id_width = records.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
            writeln!(
                w,
                "{:<id_width$}  {:<12}  {:>14}  {:>12}",
                "id", "status", "value", "subdivisions"
            )?;
            for r in records {
                let value = match (&r.witness, r.lower_bound) {
                    (Some(wt), _) => format!("{:.6e}", wt.value),
                    (None, Some(lb)) => format!("{lb:.6e}"),
                    _ => "-".to_string(),
                };
                writeln!(
                    w,
                    "{:<id_width$}  {:<12}  {:>14}  {:>12}",
                    r.id,
                    r.status.as_str(),
                    value,
                    r.subdivisions
                )?;
            }
            writeln!(
                w,
                "{} elements: {} valid, {} invalid, {} undetermined in {:.6} s ({:.0} elements/s)",
                summary.elements,
                summary.valid,
                summary.invalid,
                summary.undetermined,
                summary.wall_time_s,
                summary.elements_per_second
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::{check_hex, CheckConfig};
    use crate::counterexamples::invalid_positive_at_27_nodes;
    use crate::geometry::HexNodes;

    fn records() -> Vec<Record> {
        let cfg = CheckConfig::default();
        vec![
            Record::new("cube", &check_hex(&HexNodes::unit_cube(), &cfg)),
            Record::new("bad", &check_hex(&invalid_positive_at_27_nodes(), &cfg)),
        ]
    }

    #[test]
    fn summary_counts_match_records() {
        let r = records();
        let s = Summary::tally(&r, 0.5);
        assert_eq!((s.elements, s.valid, s.invalid, s.undetermined), (2, 1, 1, 0));
        assert_eq!(s.elements_per_second, 4.0);
        assert_eq!(Summary::tally(&[], 0.0).elements_per_second, 0.0);
    }

    #[test]
    fn jsonl_lines_parse() {
        let r = records();
        let mut buf = Vec::new();
        write_check_report(&mut buf, Format::Jsonl, &r, &Summary::tally(&r, 1.0)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0]["id"], "cube");
        assert_eq!(lines[0]["status"], "valid");
        assert_eq!(lines[0]["lower_bound"], 1.0);
        assert_eq!(lines[1]["status"], "invalid");
        assert!(lines[1]["witness"]["value"].as_f64().unwrap() <= 0.0);
        assert_eq!(lines[2]["summary"]["invalid"], 1);
    }

    #[test]
    fn table_has_one_row_per_record() {
        let r = records();
        let mut buf = Vec::new();
        write_check_report(&mut buf, Format::Table, &r, &Summary::tally(&r, 1.0)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains("cube") && text.contains("invalid"));
    }
}
