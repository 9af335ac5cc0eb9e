//! Deterministic report serialization.
//!
//! Reports render either as aligned plain text or as JSON with keys in
//! sorted order and every float printed with 12 significant digits, so a
//! given input and flag set always produces byte-identical output.

use eqspec::localspec::CrossedMultiplicityTable;
use eqspec::matrix::Mat;
use eqspec::partition::{Partition, QuotientMatrix};
use eqspec::Spectrum;

/// Fixed-width float form used in JSON payloads: 12 significant digits,
/// exponent notation.
pub fn fmt_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // collapse -0
    format!("{x:.11e}")
}

/// Aligned float form for the plain-text tables; same 12 significant
/// digits as the JSON payloads.
fn fmt_cell(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:>20.11e}")
}

enum Json {
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    /// Key/value pairs; emitted sorted by key.
    Object(Vec<(String, Json)>),
}

impl Json {
    fn write(&self, out: &mut String) {
        match self {
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Float(x) => out.push_str(&fmt_float(*x)),
            Json::Str(s) => {
                out.push('"');
                for c in s.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Object(pairs) => {
                let mut sorted: Vec<&(String, Json)> = pairs.iter().collect();
                sorted.sort_by(|a, b| a.0.cmp(&b.0));
                out.push('{');
                for (i, (key, value)) in sorted.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    Json::Str(key.clone()).write(out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

/// One result payload per command.
pub enum Payload {
    /// Distinct eigenvalues with integer multiplicities.
    Spectrum(Spectrum),
    /// Local spectrum (float multiplicities) plus the partition and
    /// quotient it came from.
    LocalSpectrum {
        vertex: usize,
        entries: Vec<(f64, f64)>,
        partition: Partition,
        quotient: QuotientMatrix,
    },
    /// Quotient matrix with its partition and eigenvalues.
    Quotient { partition: Partition, quotient: QuotientMatrix, spectrum: Spectrum },
    /// Crossed multiplicity table from one vertex.
    Crossed { vertex: usize, table: CrossedMultiplicityTable },
    /// Check verdict, with an optional witness line.
    Verdict { check: String, verdict: bool, witness: Option<String> },
}

pub struct Report {
    pub command: String,
    pub graph_hash: String,
    pub tolerance: f64,
    pub payload: Payload,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut pairs = vec![
            ("command".to_string(), Json::Str(self.command.clone())),
            ("graph_hash".to_string(), Json::Str(self.graph_hash.clone())),
            ("tolerance".to_string(), Json::Float(self.tolerance)),
        ];
        match &self.payload {
            Payload::Spectrum(spectrum) => {
                pairs.push(("spectrum".to_string(), spectrum_json(spectrum)));
            }
            Payload::LocalSpectrum { vertex, entries, partition, quotient } => {
                pairs.push(("vertex".to_string(), Json::Int(*vertex as i64)));
                let items = entries
                    .iter()
                    .map(|&(value, mult)| {
                        Json::Object(vec![
                            ("value".to_string(), Json::Float(value)),
                            ("multiplicity".to_string(), Json::Float(mult)),
                        ])
                    })
                    .collect();
                pairs.push(("local_spectrum".to_string(), Json::Array(items)));
                pairs.push(("quotient".to_string(), quotient_json(partition, quotient)));
            }
            Payload::Quotient { partition, quotient, spectrum } => {
                pairs.push(("quotient".to_string(), quotient_json(partition, quotient)));
                pairs.push(("spectrum".to_string(), spectrum_json(spectrum)));
            }
            Payload::Crossed { vertex, table } => {
                pairs.push(("vertex".to_string(), Json::Int(*vertex as i64)));
                let eigenvalues =
                    Json::Array(table.eigenvalues().iter().map(|&v| Json::Float(v)).collect());
                let cells =
                    Json::Array(table.cell_sizes().iter().map(|&s| Json::Int(s as i64)).collect());
                let rows = (0..table.eigenvalues().len())
                    .map(|i| {
                        Json::Array(
                            (0..table.cell_sizes().len())
                                .map(|j| Json::Float(table.entry(i, j)))
                                .collect(),
                        )
                    })
                    .collect();
                pairs.push((
                    "crossed".to_string(),
                    Json::Object(vec![
                        ("eigenvalues".to_string(), eigenvalues),
                        ("cells".to_string(), cells),
                        ("table".to_string(), Json::Array(rows)),
                    ]),
                ));
            }
            Payload::Verdict { check, verdict, witness } => {
                pairs.push(("check".to_string(), Json::Str(check.clone())));
                pairs.push(("verdict".to_string(), Json::Bool(*verdict)));
                if let Some(w) = witness {
                    pairs.push(("witness".to_string(), Json::Str(w.clone())));
                }
            }
        }
        let mut out = String::new();
        Json::Object(pairs).write(&mut out);
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {} (tol {:e})\n", self.command, self.tolerance));
        out.push_str(&format!("# graph {}\n", self.graph_hash));
        match &self.payload {
            Payload::Spectrum(spectrum) => {
                out.push_str("eigenvalue      multiplicity\n");
                for &(value, mult) in spectrum.entries() {
                    out.push_str(&format!("{} {mult}\n", fmt_cell(value)));
                }
            }
            Payload::LocalSpectrum { vertex, entries, partition, quotient } => {
                out.push_str(&format!("local spectrum of vertex {vertex}\n"));
                out.push_str("eigenvalue      multiplicity\n");
                for &(value, mult) in entries {
                    out.push_str(&format!("{}{}\n", fmt_cell(value), fmt_cell(mult)));
                }
                out.push_str(&partition_text(partition));
                out.push_str(&matrix_text(quotient.matrix()));
            }
            Payload::Quotient { partition, quotient, spectrum } => {
                out.push_str(&partition_text(partition));
                out.push_str(&matrix_text(quotient.matrix()));
                out.push_str("quotient eigenvalue  multiplicity\n");
                for &(value, mult) in spectrum.entries() {
                    out.push_str(&format!("{} {mult}\n", fmt_cell(value)));
                }
            }
            Payload::Crossed { vertex, table } => {
                out.push_str(&format!("crossed multiplicities from vertex {vertex}\n"));
                out.push_str(&format!(
                    "cell sizes: {}\n",
                    table.cell_sizes().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                ));
                for (i, &theta) in table.eigenvalues().iter().enumerate() {
                    out.push_str(&fmt_cell(theta));
                    out.push_str(" |");
                    for j in 0..table.cell_sizes().len() {
                        out.push_str(&fmt_cell(table.entry(i, j)));
                    }
                    out.push('\n');
                }
                out.push_str(&format!("{:>20} |", "sum"));
                for sum in table.column_sums() {
                    out.push_str(&fmt_cell(sum));
                }
                out.push('\n');
            }
            Payload::Verdict { check, verdict, witness } => {
                out.push_str(&format!("{check}: {verdict}\n"));
                if let Some(w) = witness {
                    out.push_str(&format!("witness: {w}\n"));
                }
            }
        }
        out
    }
}

fn spectrum_json(spectrum: &Spectrum) -> Json {
    Json::Array(
        spectrum
            .entries()
            .iter()
            .map(|&(value, mult)| {
                Json::Object(vec![
                    ("value".to_string(), Json::Float(value)),
                    ("multiplicity".to_string(), Json::Int(mult as i64)),
                ])
            })
            .collect(),
    )
}

fn quotient_json(partition: &Partition, quotient: &QuotientMatrix) -> Json {
    let cells = Json::Array(
        partition
            .cells()
            .iter()
            .map(|cell| Json::Array(cell.iter().map(|&v| Json::Int(v as i64)).collect()))
            .collect(),
    );
    let matrix = Json::Array(
        (0..quotient.num_cells())
            .map(|i| Json::Array(quotient.matrix().row(i).iter().map(|&x| Json::Int(x)).collect()))
            .collect(),
    );
    Json::Object(vec![("cells".to_string(), cells), ("matrix".to_string(), matrix)])
}

fn partition_text(partition: &Partition) -> String {
    let mut out = String::from("cells:\n");
    for cell in partition.cells() {
        out.push_str("  ");
        out.push_str(&cell.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn matrix_text(m: &Mat<i64>) -> String {
    let mut out = String::from("quotient matrix:\n");
    for i in 0..m.rows() {
        out.push_str("  ");
        out.push_str(&m.row(i).iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}
