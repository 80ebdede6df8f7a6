//! Record encodings for the command line: JSON lines (default), CSV with a
//! leading `kind` column, and an aligned table for people.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::boxes::PythagoreanBox;
use crate::error::{Error, Result, Violation};
use crate::shared_side::{SharedLeg, TrianglePair};
use crate::triples::{Decomposition, Triple, TripleParams};
use crate::two_square::TwoTwoSolution;
use crate::verifier::SearchReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Jsonl,
    Csv,
    Table,
}

/// A box, plus the integral diagonal of its `x × y` face when one is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxRecord {
    #[serde(flatten)]
    pub shape: PythagoreanBox,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum OutputRecord {
    Triple(Triple),
    Params(Decomposition),
    TwoTwo(TwoTwoSolution),
    Box(BoxRecord),
    Pair(TrianglePair),
    Report(SearchReport),
}

impl OutputRecord {
    pub fn kind(&self) -> &'static str {
        match self {
            OutputRecord::Triple(_) => "triple",
            OutputRecord::Params(_) => "params",
            OutputRecord::TwoTwo(_) => "two_two",
            OutputRecord::Box(_) => "box",
            OutputRecord::Pair(_) => "pair",
            OutputRecord::Report(_) => "report",
        }
    }

    fn columns(&self) -> Result<&'static [&'static str]> {
        Ok(match self {
            OutputRecord::Triple(_) => &["a", "b", "c"],
            OutputRecord::Params(_) => &["delta", "m", "n", "leg_swap"],
            OutputRecord::TwoTwo(_) => &["x", "y", "z"],
            OutputRecord::Box(_) => &["x", "y", "z", "t", "d"],
            OutputRecord::Pair(_) => &[
                "t1_a", "t1_b", "t1_c", "t2_a", "t2_b", "t2_c", "p1_delta", "p1_m", "p1_n",
                "p2_delta", "p2_m", "p2_n", "shared", "mode",
            ],
            OutputRecord::Report(_) => {
                return Err(
                    Violation::Unsupported("reports are emitted as JSON only".into()).into(),
                )
            }
        })
    }

    fn cells(&self) -> Vec<String> {
        let s = |v: u64| v.to_string();
        match self {
            OutputRecord::Triple(t) => vec![s(t.a()), s(t.b()), s(t.c())],
            OutputRecord::Params(d) => vec![
                s(d.params.delta()),
                s(d.params.m()),
                s(d.params.n()),
                d.leg_swap.to_string(),
            ],
            OutputRecord::TwoTwo(v) => vec![s(v.x()), s(v.y()), s(v.z())],
            OutputRecord::Box(b) => {
                let e = &b.shape;
                vec![
                    s(e.x()),
                    s(e.y()),
                    s(e.z()),
                    s(e.t()),
                    b.d.map(s).unwrap_or_default(),
                ]
            }
            OutputRecord::Pair(p) => {
                let mut v = Vec::with_capacity(14);
                for t in [p.t1(), p.t2()] {
                    v.extend([s(t.a()), s(t.b()), s(t.c())]);
                }
                for q in [p.p1(), p.p2()] {
                    v.extend([s(q.delta()), s(q.m()), s(q.n())]);
                }
                v.push(s(p.shared()));
                v.push(mode_name(p.mode()).to_owned());
                v
            }
            OutputRecord::Report(_) => Vec::new(),
        }
    }
}

fn mode_name(mode: SharedLeg) -> &'static str {
    match mode {
        SharedLeg::EvenLeg => "even_leg",
        SharedLeg::OddLeg => "odd_leg",
    }
}

pub fn write_records<W: Write>(
    records: &[OutputRecord],
    format: Format,
    out: &mut W,
) -> Result<()> {
    match format {
        Format::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut *out, r).map_err(|e| Error::Io(e.to_string()))?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Option<&str> = None;
            for r in records {
                match header {
                    None => {
                        w.write_field("kind").map_err(csv_err)?;
                        w.write_record(r.columns()?).map_err(csv_err)?;
                        header = Some(r.kind());
                    }
                    Some(kind) if kind != r.kind() => {
                        return Err(
                            Violation::Unsupported("mixed record kinds in csv".into()).into()
                        )
                    }
                    Some(_) => {}
                }
                w.write_field(r.kind()).map_err(csv_err)?;
                w.write_record(r.cells()).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Table => {
            let Some(first) = records.first() else {
                return Ok(());
            };
            let mut rows = vec![first
                .columns()?
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()];
            rows.extend(records.iter().map(OutputRecord::cells));
            let mut widths = vec![0; rows[0].len()];
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            for row in rows {
                let line: Vec<_> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                writeln!(out, "{}", line.join("  "))?;
            }
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn parse_jsonl(text: &str) -> Result<Vec<OutputRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

pub fn parse_csv(text: &str) -> Result<Vec<OutputRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| Error::Parse(e.to_string()))?;
        let kind = row.get(0).unwrap_or_default();
        let cells: Vec<&str> = row.iter().skip(1).collect();
        out.push(record_from_cells(kind, &cells)?);
    }
    Ok(out)
}

fn record_from_cells(kind: &str, cells: &[&str]) -> Result<OutputRecord> {
    let num = |i: usize| -> Result<u64> {
        let c = cells
            .get(i)
            .ok_or_else(|| Error::Parse(format!("missing column {i}")))?;
        c.parse()
            .map_err(|_| Error::Parse(format!("not an integer: {c:?}")))
    };
    let triple = |i: usize| Triple::new(num(i)?, num(i + 1)?, num(i + 2)?);
    let params = |i: usize| TripleParams::new(num(i)?, num(i + 1)?, num(i + 2)?);
    Ok(match kind {
        "triple" => OutputRecord::Triple(triple(0)?),
        "params" => OutputRecord::Params(Decomposition {
            params: params(0)?,
            leg_swap: cells
                .get(3)
                .and_then(|c| c.parse().ok())
                .ok_or_else(|| Error::Parse("leg_swap".into()))?,
        }),
        "two_two" => OutputRecord::TwoTwo(TwoTwoSolution::new(num(0)?, num(1)?, num(2)?)?),
        "box" => OutputRecord::Box(BoxRecord {
            shape: PythagoreanBox::new(num(0)?, num(1)?, num(2)?, num(3)?)?,
            d: match cells.get(4) {
                Some(c) if !c.is_empty() => Some(num(4)?),
                _ => None,
            },
        }),
        "pair" => {
            let mode = match cells.get(13) {
                Some(&"even_leg") => "even_leg",
                Some(&"odd_leg") => "odd_leg",
                other => return Err(Error::Parse(format!("bad mode {other:?}"))),
            };
            let value = serde_json::json!({
                "t1": triple(0)?,
                "t2": triple(3)?,
                "p1": params(6)?,
                "p2": params(9)?,
                "shared": num(12)?,
                "mode": mode,
            });
            OutputRecord::Pair(
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?,
            )
        }
        other => return Err(Error::Parse(format!("unknown record kind {other:?}"))),
    })
}
