//! Text, CSV and JSON renderings of command results.

use std::fmt::Write as _;

use lampart_core::lambda::Record;
use lampart_core::VerificationReport;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::compare::SequenceComparison;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// Big integers go out as bare JSON numbers.
fn int(v: &BigInt) -> Box<RawValue> {
    RawValue::from_string(v.to_string()).expect("integers are valid JSON")
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct JsonRecord {
    n: usize,
    genfun: Box<RawValue>,
    direct: Box<RawValue>,
    equal: bool,
}

#[derive(Serialize)]
struct JsonReport {
    variant: &'static str,
    order: usize,
    records: Vec<JsonRecord>,
    all_equal: bool,
}

impl From<&VerificationReport> for JsonReport {
    fn from(r: &VerificationReport) -> Self {
        Self {
            variant: r.variant.name(),
            order: r.order,
            records: r
                .records
                .iter()
                .map(|rec: &Record| JsonRecord {
                    n: rec.n,
                    genfun: int(&rec.genfun),
                    direct: int(&rec.direct),
                    equal: rec.equal,
                })
                .collect(),
            all_equal: r.all_equal(),
        }
    }
}

pub fn coefficients(target: &str, expression: &str, coeffs: &[BigInt], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n} {c}").unwrap();
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n},{c}").unwrap();
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Coeff {
                n: usize,
                value: Box<RawValue>,
            }
            #[derive(Serialize)]
            struct Expansion<'a> {
                target: &'a str,
                expression: &'a str,
                order: usize,
                coefficients: Vec<Coeff>,
            }
            out = to_json(&Expansion {
                target,
                expression,
                order: coeffs.len() - 1,
                coefficients: coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| Coeff { n, value: int(c) })
                    .collect(),
            });
        }
    }
    out
}

pub fn verification(reports: &[VerificationReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in reports {
                write!(
                    out,
                    "{}: {} vs direct count, n = 0..={}: {}/{} equal",
                    r.variant,
                    r.variant.recipe(),
                    r.order,
                    r.matches(),
                    r.records.len()
                )
                .unwrap();
                if let Some(bad) = r.first_mismatch() {
                    write!(
                        out,
                        ", first mismatch at n = {} (genfun {}, direct {})",
                        bad.n, bad.genfun, bad.direct
                    )
                    .unwrap();
                }
                out.push('\n');
            }
            let ok = reports.iter().all(VerificationReport::all_equal);
            writeln!(out, "result: {}", if ok { "all equal" } else { "MISMATCH" }).unwrap();
        }
        Format::Csv => {
            out.push_str("variant,n,genfun,direct,equal\n");
            for r in reports {
                for rec in &r.records {
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.variant, rec.n, rec.genfun, rec.direct, rec.equal
                    )
                    .unwrap();
                }
            }
        }
        Format::Json => {
            let json: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
            out = if json.len() == 1 {
                to_json(&json[0])
            } else {
                to_json(&json)
            };
        }
    }
    out
}

/// One row of the witness table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub variant: &'static str,
    pub label: String,
    pub value: BigInt,
    pub oeis: Option<&'static str>,
    pub partitions: Vec<String>,
    pub note: Option<String>,
}

pub fn table(n: usize, rows: &[TableRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let label_w = rows.iter().map(|r| r.label.len()).max().unwrap_or(0).max(6);
            let value_w = rows
                .iter()
                .map(|r| r.value.to_string().len())
                .max()
                .unwrap_or(0)
                .max(5);
            writeln!(out, "n = {n}").unwrap();
            writeln!(
                out,
                "{:<label_w$}  {:<value_w$}  {:<7}  partitions",
                "family", "value", "OEIS"
            )
            .unwrap();
            let mut notes = Vec::new();
            for r in rows {
                let mut parts = if r.partitions.is_empty() {
                    "-".to_string()
                } else {
                    r.partitions.join(", ")
                };
                if let Some(note) = &r.note {
                    notes.push(note.as_str());
                    parts.push_str(&" *".repeat(notes.len()));
                }
                writeln!(
                    out,
                    "{:<label_w$}  {:<value_w$}  {:<7}  {parts}",
                    r.label,
                    r.value.to_string(),
                    r.oeis.unwrap_or("-")
                )
                .unwrap();
            }
            for (i, note) in notes.iter().enumerate() {
                writeln!(out, "{} {note}", "*".repeat(i + 1)).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("variant,label,value,oeis,partitions\n");
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.variant,
                    r.label,
                    r.value,
                    r.oeis.unwrap_or(""),
                    r.partitions.join(";")
                )
                .unwrap();
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                variant: &'a str,
                label: &'a str,
                value: Box<RawValue>,
                oeis: Option<&'a str>,
                partitions: &'a [String],
                note: Option<&'a str>,
            }
            #[derive(Serialize)]
            struct Table<'a> {
                n: usize,
                rows: Vec<Row<'a>>,
            }
            out = to_json(&Table {
                n,
                rows: rows
                    .iter()
                    .map(|r| Row {
                        variant: r.variant,
                        label: &r.label,
                        value: int(&r.value),
                        oeis: r.oeis,
                        partitions: &r.partitions,
                        note: r.note.as_deref(),
                    })
                    .collect(),
            });
        }
    }
    out
}

fn opt(v: &Option<BigInt>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), BigInt::to_string)
}

pub fn comparisons(comparisons: &[SequenceComparison], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for cmp in comparisons {
                writeln!(out, "{}", cmp.name).unwrap();
                for h in &cmp.hypotheses {
                    writeln!(out, "  {}: {}", h.label, h.alignment.describe()).unwrap();
                    writeln!(out, "    source: {}", h.source).unwrap();
                    writeln!(
                        out,
                        "    verdict: {} ({}/{} terms agree)",
                        h.verdict,
                        h.matched(),
                        h.terms.len()
                    )
                    .unwrap();
                    writeln!(out, "    term  n     reference  computed  match").unwrap();
                    for t in &h.terms {
                        writeln!(
                            out,
                            "    {:<4}  {:<4}  {:<9}  {:<8}  {}",
                            t.position,
                            t.n.map_or_else(|| "-".to_string(), |n| n.to_string()),
                            t.reference.to_string(),
                            opt(&t.computed),
                            if t.matched { "yes" } else { "no" }
                        )
                        .unwrap();
                    }
                }
            }
        }
        Format::Csv => {
            out.push_str("sequence,hypothesis,position,n,reference,computed,match\n");
            for cmp in comparisons {
                for h in &cmp.hypotheses {
                    for t in &h.terms {
                        writeln!(
                            out,
                            "\"{}\",{},{},{},{},{},{}",
                            cmp.name,
                            h.label,
                            t.position,
                            t.n.map_or_else(String::new, |n| n.to_string()),
                            t.reference,
                            t.computed
                                .as_ref()
                                .map_or_else(String::new, BigInt::to_string),
                            t.matched
                        )
                        .unwrap();
                    }
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Term {
                position: usize,
                n: Option<usize>,
                reference: Box<RawValue>,
                computed: Option<Box<RawValue>>,
                #[serde(rename = "match")]
                matched: bool,
            }
            #[derive(Serialize)]
            struct Hyp<'a> {
                label: &'a str,
                alignment: String,
                source: &'a str,
                verdict: &'static str,
                first_divergence: Option<usize>,
                matched: usize,
                terms: Vec<Term>,
            }
            #[derive(Serialize)]
            struct Cmp<'a> {
                name: &'a str,
                hypotheses: Vec<Hyp<'a>>,
            }
            let json: Vec<Cmp> = comparisons
                .iter()
                .map(|c| Cmp {
                    name: &c.name,
                    hypotheses: c
                        .hypotheses
                        .iter()
                        .map(|h| Hyp {
                            label: &h.label,
                            alignment: h.alignment.describe(),
                            source: &h.source,
                            verdict: h.verdict.kind(),
                            first_divergence: h.verdict.first_divergence(),
                            matched: h.matched(),
                            terms: h
                                .terms
                                .iter()
                                .map(|t| Term {
                                    position: t.position,
                                    n: t.n,
                                    reference: int(&t.reference),
                                    computed: t.computed.as_ref().map(int),
                                    matched: t.matched,
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect();
            out = to_json(&json);
        }
    }
    out
}
