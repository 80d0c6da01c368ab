use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Precision {
    pub arithmetic: String,
    pub number_format: String,
    pub bernoulli_max: usize,
}

/// Everything a command prints, in a form that serializes to JSON and
/// flattens to CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub precision: Precision,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub notes: Map<String, Value>,
    pub results: Vec<Map<String, Value>>,
}

impl OutputRecord {
    pub fn new(command: &str, bernoulli_max: usize) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: Map::new(),
            precision: Precision {
                arithmetic: "binary64".into(),
                number_format: "shortest-round-trip".into(),
                bernoulli_max,
            },
            notes: Map::new(),
            results: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("records are plain data");
        s.push('\n');
        s
    }

    /// Header row plus one line per result, LF-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let Some(first) = self.results.first() else {
            return out;
        };
        let header: Vec<&str> = first.keys().map(String::as_str).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.results {
            let cells: Vec<String> = header
                .iter()
                .map(|k| csv_cell(row.get(*k).unwrap_or(&Value::Null)))
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Space-aligned table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.notes {
            out.push_str(&format!("# {k}: {}\n", plain(v)));
        }
        let Some(first) = self.results.first() else {
            return out;
        };
        let header: Vec<&String> = first.keys().collect();
        let rows: Vec<Vec<String>> = self
            .results
            .iter()
            .map(|r| {
                header
                    .iter()
                    .map(|k| plain(r.get(*k).unwrap_or(&Value::Null)))
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = header
            .iter()
            .enumerate()
            .map(|(i, h)| {
                rows.iter()
                    .map(|r| r[i].len())
                    .chain([h.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out.push_str(&line(header.iter().map(|h| h.as_str()).collect()));
        for r in &rows {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        out
    }
}

/// Shortest decimal that round-trips, switching to exponent form for very
/// small or large magnitudes.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 || (1e-5..1e16).contains(&v.abs()) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => match (n.as_u64(), n.as_i64(), n.as_f64()) {
            (Some(u), _, _) => u.to_string(),
            (_, Some(i), _) => i.to_string(),
            (_, _, Some(f)) => fmt_num(f),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

fn csv_cell(v: &Value) -> String {
    let s = plain(v);
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}
